//! The cyclotomic integers `Z[zeta_k] = Z[x] / Phi_k(x)`.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use super::ring::Ring;

/// `Phi_k` as coefficients from the constant term up, obtained by exact
/// division of `x^k - 1` by `Phi_d` for every proper divisor `d` of `k`.
pub fn cyclotomic_polynomial(k: u32) -> Vec<i64> {
    assert!(k >= 1, "cyclotomic polynomials are indexed from 1");
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<i64>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&k) {
        return p.clone();
    }
    let mut num = vec![0i64; k as usize + 1];
    num[0] = -1;
    num[k as usize] = 1;
    for d in (1..k).filter(|d| k % d == 0) {
        num = exact_div(&num, &cyclotomic_polynomial(d));
    }
    cache.lock().unwrap().insert(k, num.clone());
    num
}

/// Quotient of monic-divisor polynomial division; panics on a nonzero remainder.
fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    assert_eq!(den[dd], 1, "divisor must be monic");
    let mut quot = vec![0i64; rem.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        for (j, &d) in den.iter().enumerate() {
            rem[i + j] -= c * d;
        }
    }
    assert!(rem.iter().all(|&r| r == 0), "inexact cyclotomic division");
    quot
}

/// Element of `Z[zeta_k]` as a reduced polynomial in `zeta_k` of degree below
/// `phi(k)`. Order 0 marks a plain integer, compatible with every order.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    order: u32,
    coeffs: Vec<i64>,
}

impl Cyclotomic {
    pub fn integer(n: i64) -> Self {
        Cyclotomic::reduced(0, vec![n])
    }

    /// `zeta_k^e` for any integer `e`.
    pub fn zeta_pow(k: u32, e: i64) -> Self {
        let r = e.rem_euclid(i64::from(k)) as usize;
        let mut coeffs = vec![0; r + 1];
        coeffs[r] = 1;
        Cyclotomic::reduced(k, coeffs)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Coefficients of `1, zeta, zeta^2, ...` in reduced form.
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Integer value when the element lies in `Z`.
    pub fn as_integer(&self) -> Option<i64> {
        match self.coeffs.len() {
            0 => Some(0),
            1 => Some(self.coeffs[0]),
            _ => None,
        }
    }

    fn reduced(order: u32, mut coeffs: Vec<i64>) -> Self {
        if order > 0 {
            let phi = cyclotomic_polynomial(order);
            let deg = phi.len() - 1;
            for i in (deg..coeffs.len()).rev() {
                let c = coeffs[i];
                if c != 0 {
                    for (j, &p) in phi.iter().enumerate() {
                        coeffs[i - deg + j] -= c * p;
                    }
                }
            }
            coeffs.truncate(deg);
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Cyclotomic { order, coeffs }
    }

    fn common_order(&self, other: &Self) -> u32 {
        match (self.order, other.order) {
            (0, k) | (k, 0) => k,
            (a, b) if a == b => a,
            (a, b) => panic!("mixing Z[zeta_{a}] and Z[zeta_{b}]"),
        }
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && (self.order == other.order || self.coeffs.len() <= 1)
    }
}

impl Ring for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic { order: 0, coeffs: Vec::new() }
    }

    fn one() -> Self {
        Cyclotomic::integer(1)
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn plus(&self, other: &Self) -> Self {
        let order = self.common_order(other);
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                a.plus(&other.coeffs.get(i).copied().unwrap_or(0))
            })
            .collect();
        Cyclotomic::reduced(order, coeffs)
    }

    fn negated(&self) -> Self {
        Cyclotomic { order: self.order, coeffs: self.coeffs.iter().map(|c| c.negated()).collect() }
    }

    fn times(&self, other: &Self) -> Self {
        let order = self.common_order(other);
        if self.is_zero() || other.is_zero() {
            return Cyclotomic::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].plus(&a.times(b));
            }
        }
        Cyclotomic::reduced(order, coeffs)
    }

    fn from_int(n: i64) -> Self {
        Cyclotomic::integer(n)
    }

    fn try_inverse(&self) -> Option<Self> {
        if let Some(n) = self.as_integer() {
            return n.try_inverse().map(Cyclotomic::integer);
        }
        // Units that are signed roots of unity.
        let k = i64::from(self.order);
        (0..k).flat_map(|e| [1, -1].map(|s| (e, s))).find_map(|(e, s)| {
            let cand = Cyclotomic::zeta_pow(self.order, e).times(&Cyclotomic::integer(s));
            self.times(&cand).is_one().then_some(cand)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn zeta_is_a_root() {
        for k in 1..=12u32 {
            let phi = cyclotomic_polynomial(k);
            let value = phi
                .iter()
                .enumerate()
                .fold(Cyclotomic::zero(), |acc, (e, &c)| acc.plus(&Cyclotomic::zeta_pow(k, e as i64).times(&Cyclotomic::integer(c))));
            assert!(value.is_zero(), "Phi_{k}(zeta_{k}) != 0");
            assert!(Cyclotomic::zeta_pow(k, i64::from(k)).is_one());
        }
    }

    #[test]
    fn root_sums_vanish_for_primes() {
        for k in [2u32, 3, 5, 7] {
            let s = (0..i64::from(k)).fold(Cyclotomic::zero(), |acc, e| acc.plus(&Cyclotomic::zeta_pow(k, e)));
            assert!(s.is_zero());
        }
        assert_eq!(Cyclotomic::zeta_pow(2, 1), Cyclotomic::integer(-1));
        assert_eq!(Cyclotomic::zeta_pow(1, 5), Cyclotomic::one());
    }

    #[test]
    fn units() {
        let z = Cyclotomic::zeta_pow(3, 1);
        assert_eq!(z.try_inverse().unwrap(), Cyclotomic::zeta_pow(3, 2));
        assert!(Cyclotomic::integer(2).try_inverse().is_none());
        let one_minus = Cyclotomic::one().minus(&z);
        assert!(one_minus.try_inverse().is_none());
    }
}
