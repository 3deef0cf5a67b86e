//! Sparse multivariate Laurent polynomials.

use std::collections::BTreeMap;

use super::ring::Ring;

/// A finite sum of monomials `c * x_1^e_1 ... x_r^e_r` with integer, possibly
/// negative, exponents. Exponent vectors are stored without trailing zeros, so
/// polynomials in different numbers of variables compare as expected.
#[derive(Clone, Debug, PartialEq)]
pub struct Laurent<C> {
    terms: BTreeMap<Vec<i32>, C>,
}

fn trim(mut e: Vec<i32>) -> Vec<i32> {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

impl<C: Ring> Laurent<C> {
    pub fn constant(c: C) -> Self {
        Laurent::monomial(c, Vec::new())
    }

    pub fn monomial(c: C, exponents: Vec<i32>) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(trim(exponents), c);
        }
        Laurent { terms }
    }

    /// The variable `x_i`, counted from 0.
    pub fn var(i: usize) -> Self {
        Laurent::var_pow(i, 1)
    }

    /// `x_i^e`, counted from 0.
    pub fn var_pow(i: usize, e: i32) -> Self {
        let mut ex = vec![0; i + 1];
        ex[i] = e;
        Laurent::monomial(C::one(), ex)
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&[i32], &C)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of the monomial with the given exponents.
    pub fn coeff(&self, exponents: &[i32]) -> C {
        self.terms.get(&trim(exponents.to_vec())).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, exponents: Vec<i32>, c: &C) {
        if c.is_zero() {
            return;
        }
        let key = trim(exponents);
        match self.terms.get_mut(&key) {
            Some(old) => {
                let sum = old.plus(c);
                if sum.is_zero() {
                    self.terms.remove(&key);
                } else {
                    *old = sum;
                }
            }
            None => {
                self.terms.insert(key, c.clone());
            }
        }
    }

    /// Applies `f` to every exponent vector and `g` to every coefficient,
    /// collecting like terms.
    pub fn map_terms<D: Ring>(&self, mut f: impl FnMut(&[i32]) -> Vec<i32>, mut g: impl FnMut(&C) -> D) -> Laurent<D> {
        let mut out = Laurent::<D>::zero();
        for (e, c) in &self.terms {
            out.add_term(f(e), &g(c));
        }
        out
    }

    /// Sets every variable to 1.
    pub fn eval_ones(&self) -> C {
        self.terms.values().fold(C::zero(), |acc, c| acc.plus(c))
    }
}

impl<C: Ring> Ring for Laurent<C> {
    fn zero() -> Self {
        Laurent { terms: BTreeMap::new() }
    }

    fn one() -> Self {
        Laurent::constant(C::one())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        out
    }

    fn negated(&self) -> Self {
        Laurent { terms: self.terms.iter().map(|(e, c)| (e.clone(), c.negated())).collect() }
    }

    fn times(&self, other: &Self) -> Self {
        let mut out = Laurent::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let len = e1.len().max(e2.len());
                let e: Vec<i32> = (0..len)
                    .map(|i| e1.get(i).copied().unwrap_or(0) + e2.get(i).copied().unwrap_or(0))
                    .collect();
                out.add_term(e, &c1.times(c2));
            }
        }
        out
    }

    fn from_int(n: i64) -> Self {
        Laurent::constant(C::from_int(n))
    }

    fn try_inverse(&self) -> Option<Self> {
        let mut it = self.terms.iter();
        let (e, c) = it.next()?;
        if it.next().is_some() {
            return None;
        }
        let inv = c.try_inverse()?;
        Some(Laurent::monomial(inv, e.iter().map(|x| -x).collect()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type L = Laurent<i64>;

    #[test]
    fn arithmetic() {
        let z = L::var(0);
        let zi = L::var_pow(0, -1);
        let one = L::one();
        let p = one.minus(&z).times(&one.minus(&zi));
        assert_eq!(p.coeff(&[0]), 2);
        assert_eq!(p.coeff(&[1]), -1);
        assert_eq!(p.coeff(&[-1]), -1);
        assert_eq!(p.num_terms(), 3);
        assert_eq!(p.eval_ones(), 0);
        assert_eq!(z.times(&zi), one);
        assert_eq!(L::var(1).coeff(&[0, 1]), 1);
        assert_eq!(L::monomial(1, vec![2, 0, 0]), L::var_pow(0, 2));
    }

    #[test]
    fn inverses() {
        let m = L::monomial(-1, vec![1, -2]);
        assert_eq!(m.try_inverse().unwrap().times(&m), L::one());
        assert!(L::one().plus(&L::var(0)).try_inverse().is_none());
        assert!(L::from_int(2).try_inverse().is_none());
    }
}
