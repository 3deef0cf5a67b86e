//! Power series in `q` truncated at a fixed inclusive order.

use std::ops::{Add, Mul, Neg, Sub};

use super::ring::Ring;
use crate::error::{Error, Result};

/// `sum_{n <= order} c_n q^n`; coefficients past the order are never formed.
#[derive(Clone, Debug, PartialEq)]
pub struct Series<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> Series<R> {
    pub fn zero(order: usize) -> Self {
        Series { coeffs: vec![R::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Series::constant(R::one(), order)
    }

    pub fn constant(c: R, order: usize) -> Self {
        Series::monomial(c, 0, order)
    }

    /// `c q^e`, which is zero when `e` exceeds the order.
    pub fn monomial(c: R, e: usize, order: usize) -> Self {
        let mut s = Series::zero(order);
        if e <= order {
            s.coeffs[e] = c;
        }
        s
    }

    /// Series with the given leading coefficients, zero-filled or cut to the order.
    pub fn from_coeffs(mut coeffs: Vec<R>, order: usize) -> Self {
        coeffs.resize(order + 1, R::zero());
        Series { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Coefficient of `q^n`; zero past the order.
    pub fn coeff(&self, n: usize) -> R {
        self.coeffs.get(n).cloned().unwrap_or_else(R::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(R::is_zero)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot raise the truncation order");
        Series { coeffs: self.coeffs[..=order].to_vec() }
    }

    pub fn scale(&self, c: &R) -> Self {
        Series { coeffs: self.coeffs.iter().map(|x| x.times(c)).collect() }
    }

    /// Multiplication by `q^e`.
    pub fn shift(&self, e: usize) -> Self {
        let order = self.order();
        let mut out = Series::zero(order);
        for (i, c) in self.coeffs.iter().enumerate().take((order + 1).saturating_sub(e)) {
            out.coeffs[i + e] = c.clone();
        }
        out
    }

    /// Multiplication by `1 - c q^e`.
    pub fn mul_one_minus(&self, c: &R, e: usize) -> Self {
        let mut out = self.clone();
        for i in (e..=self.order()).rev() {
            let t = self.coeffs[i - e].times(c);
            out.coeffs[i] = out.coeffs[i].minus(&t);
        }
        out
    }

    /// Division by `1 - c q^e` through the recurrence `g_n = f_n + c g_{n-e}`,
    /// or by scalar inversion of `1 - c` when `e = 0`.
    pub fn div_one_minus(&self, c: &R, e: usize) -> Result<Self> {
        if e == 0 {
            let den = R::one().minus(c);
            let inv = den.try_inverse().ok_or_else(|| Error::NotInvertible(format!("1 - ({c:?})")))?;
            return Ok(self.scale(&inv));
        }
        let mut out = self.clone();
        for i in e..=self.order() {
            let t = out.coeffs[i - e].times(c);
            out.coeffs[i] = out.coeffs[i].plus(&t);
        }
        Ok(out)
    }

    /// Multiplicative inverse; the constant term must be a unit.
    pub fn inverse(&self) -> Result<Self> {
        let inv0 = self.coeffs[0]
            .try_inverse()
            .ok_or_else(|| Error::NotInvertible(format!("constant term {:?}", self.coeffs[0])))?;
        let order = self.order();
        let mut out = Series::zero(order);
        out.coeffs[0] = inv0.clone();
        for n in 1..=order {
            let mut acc = R::zero();
            for i in 1..=n {
                if !self.coeffs[i].is_zero() {
                    acc = acc.plus(&self.coeffs[i].times(&out.coeffs[n - i]));
                }
            }
            out.coeffs[n] = acc.negated().times(&inv0);
        }
        Ok(out)
    }

    pub fn map<S: Ring>(&self, f: impl FnMut(&R) -> S) -> Series<S> {
        Series { coeffs: self.coeffs.iter().map(f).collect() }
    }

    fn check_order(&self, other: &Self) {
        assert_eq!(self.order(), other.order(), "series truncated at different orders");
    }
}

impl<R: Ring> Add for &Series<R> {
    type Output = Series<R>;

    fn add(self, other: &Series<R>) -> Series<R> {
        self.check_order(other);
        Series { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.plus(b)).collect() }
    }
}

impl<R: Ring> Sub for &Series<R> {
    type Output = Series<R>;

    fn sub(self, other: &Series<R>) -> Series<R> {
        self.check_order(other);
        Series { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.minus(b)).collect() }
    }
}

impl<R: Ring> Neg for &Series<R> {
    type Output = Series<R>;

    fn neg(self) -> Series<R> {
        Series { coeffs: self.coeffs.iter().map(R::negated).collect() }
    }
}

impl<R: Ring> Mul for &Series<R> {
    type Output = Series<R>;

    fn mul(self, other: &Series<R>) -> Series<R> {
        self.check_order(other);
        let order = self.order();
        let mut out = Series::<R>::zero(order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] = out.coeffs[i + j].plus(&a.times(b));
                }
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<R: Ring> $tr for Series<R> {
            type Output = Series<R>;

            fn $m(self, other: Series<R>) -> Series<R> {
                (&self).$m(&other)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// `(c q^shift; q^base)_len = prod_{i < len} (1 - c q^(shift + base i))`, with
/// `len = None` for the infinite product.
pub fn pochhammer<R: Ring>(c: &R, shift: usize, base: usize, len: Option<usize>, order: usize) -> Result<Series<R>> {
    let mut out = Series::one(order);
    for e in factor_exponents(shift, base, len, order)? {
        out = out.mul_one_minus(c, e);
    }
    Ok(out)
}

/// `1 / (c q^shift; q^base)_len`.
pub fn inverse_pochhammer<R: Ring>(
    c: &R,
    shift: usize,
    base: usize,
    len: Option<usize>,
    order: usize,
) -> Result<Series<R>> {
    let mut out = Series::one(order);
    for e in factor_exponents(shift, base, len, order)? {
        out = out.div_one_minus(c, e)?;
    }
    Ok(out)
}

/// Exponents of the factors that differ from 1 below the order.
fn factor_exponents(shift: usize, base: usize, len: Option<usize>, order: usize) -> Result<Vec<usize>> {
    match len {
        Some(n) => Ok((0..n).map(|i| shift + base * i).filter(|&e| e <= order).collect()),
        None if base == 0 => Err(Error::NonTerminating(format!("factor exponent {shift} never grows"))),
        None => Ok((0..).map(|i| shift + base * i).take_while(|&e| e <= order).collect()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(c: &[i64], order: usize) -> Series<i64> {
        Series::from_coeffs(c.to_vec(), order)
    }

    #[test]
    fn geometric_series() {
        let n = 10;
        let geo = Series::from_coeffs(vec![1; n + 1], n);
        assert_eq!(&s(&[1, -1], n) * &geo, Series::one(n));
        assert_eq!(s(&[1, -1], n).inverse().unwrap(), geo);
        assert_eq!(Series::one(n).div_one_minus(&1, 1).unwrap(), geo);
        assert!(s(&[2, 1], n).inverse().is_err());
    }

    #[test]
    fn euler_pentagonal() {
        let p = pochhammer(&1i64, 1, 1, None, 15).unwrap();
        let mut expected = vec![0i64; 16];
        for j in -3i64..=3 {
            let e = (j * (3 * j - 1) / 2) as usize;
            if e <= 15 {
                expected[e] = if j % 2 == 0 { 1 } else { -1 };
            }
        }
        assert_eq!(p.coeffs(), expected.as_slice());
        assert_eq!(pochhammer(&5i64, 3, 1, Some(0), 5).unwrap(), Series::one(5));
        assert_eq!(pochhammer(&-1i64, 0, 1, Some(3), 5).unwrap().coeff(0), 2);
        assert!(pochhammer(&1i64, 1, 0, None, 5).is_err());
    }

    #[test]
    fn shifts_and_truncation() {
        let a = s(&[1, 2, 3], 4);
        assert_eq!(a.shift(3), s(&[0, 0, 0, 1, 2], 4));
        assert_eq!(a.truncate(1), s(&[1, 2], 1));
        assert_eq!(a.mul_one_minus(&1, 1).div_one_minus(&1, 1).unwrap(), a);
        assert_eq!(a.valuation(), Some(0));
        assert_eq!(Series::<i64>::zero(3).valuation(), None);
    }
}
