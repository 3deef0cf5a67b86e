//! Coefficient rings for truncated series.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// An exact commutative ring with unit.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn from_int(n: i64) -> Self;
    /// Multiplicative inverse, when one exists in the ring.
    fn try_inverse(&self) -> Option<Self>;

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

/// Machine integers; overflow panics rather than wrapping.
impl Ring for i64 {
    fn zero() -> Self {
        0
    }

    fn one() -> Self {
        1
    }

    fn is_zero(&self) -> bool {
        *self == 0
    }

    fn plus(&self, other: &Self) -> Self {
        self.checked_add(*other).expect("integer coefficient overflow")
    }

    fn negated(&self) -> Self {
        self.checked_neg().expect("integer coefficient overflow")
    }

    fn times(&self, other: &Self) -> Self {
        self.checked_mul(*other).expect("integer coefficient overflow")
    }

    fn from_int(n: i64) -> Self {
        n
    }

    fn try_inverse(&self) -> Option<Self> {
        matches!(*self, 1 | -1).then_some(*self)
    }
}

impl Ring for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn plus(&self, other: &Self) -> Self {
        self + other
    }

    fn negated(&self) -> Self {
        -self
    }

    fn times(&self, other: &Self) -> Self {
        self * other
    }

    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn try_inverse(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
}

/// `x^e` by repeated squaring.
pub fn power<R: Ring>(x: &R, mut e: u64) -> R {
    let mut base = x.clone();
    let mut acc = R::one();
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.times(&base);
        }
        base = base.times(&base);
        e >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_ring() {
        assert_eq!(3i64.plus(&4).times(&-2), -14);
        assert_eq!((-1i64).try_inverse(), Some(-1));
        assert_eq!(2i64.try_inverse(), None);
        assert_eq!(power(&3i64, 4), 81);
    }

    #[test]
    fn rational_ring() {
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(half.try_inverse(), Some(BigRational::from_int(2)));
        assert_eq!(<BigRational as Ring>::zero().try_inverse(), None);
        assert!(Ring::is_zero(&half.minus(&half)));
    }
}
