//! Exact check of Andrews' k-fold Watson–Whipple transformation and its
//! index-permuted form, for rational parameters and terminating sums.
//!
//! Every summand is a product of factors `1 - c q^e` (possibly inverted) with
//! rational `c` and integer `e`. Factors with `e < 0` are rewritten as
//! `-c q^e (1 - q^(-e) / c)`, so each summand becomes a rational multiple of a
//! power of `q` times a power series, and both sides are compared as
//! truncated Laurent series in `q`.

use num_rational::BigRational;
use serde::Serialize;

use super::ring::{power, Ring};
use super::series::Series;
use crate::error::{precondition, Error, Result};

type Q = BigRational;

/// Parameters `a, b_1..b_k, c_1..c_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct AndrewsParams {
    pub a: Q,
    pub b: Vec<Q>,
    pub c: Vec<Q>,
}

impl AndrewsParams {
    pub fn new(a: Q, b: Vec<Q>, c: Vec<Q>) -> Result<Self> {
        if b.is_empty() || b.len() != c.len() {
            return Err(precondition("andrews", "need k >= 1 values of each of b and c"));
        }
        let p = AndrewsParams { a, b, c };
        if p.a.is_zero() {
            return Err(Error::Pole("a = 0".into()));
        }
        if let Some(i) = p.b.iter().position(Ring::is_zero) {
            return Err(Error::Pole(format!("b_{} = 0", i + 1)));
        }
        if let Some(i) = p.c.iter().position(Ring::is_zero) {
            return Err(Error::Pole(format!("c_{} = 0", i + 1)));
        }
        Ok(p)
    }

    pub fn k(&self) -> usize {
        self.b.len()
    }

    /// The parameters `b'_i = b_{perm[i]}`, `c'_i = c_{perm[i]}`, indices from 0.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        AndrewsParams {
            a: self.a.clone(),
            b: perm.iter().map(|&j| self.b[j].clone()).collect(),
            c: perm.iter().map(|&j| self.c[j].clone()).collect(),
        }
    }

    /// The same parameters with `b_1` and `c_1` exchanged.
    pub fn swapped_first_pair(&self) -> Self {
        let mut p = self.clone();
        std::mem::swap(&mut p.b[0], &mut p.c[0]);
        p
    }
}

/// A truncated Laurent series `q^low * (c_0 + c_1 q + ...)`.
#[derive(Clone, Debug, PartialEq)]
pub struct QLaurent {
    pub low: i64,
    pub coeffs: Vec<Q>,
}

impl QLaurent {
    /// Coefficient of `q^e`, if within the known range.
    pub fn coeff(&self, e: i64) -> Option<Q> {
        if e < self.low {
            return Some(Q::zero());
        }
        self.coeffs.get((e - self.low) as usize).cloned()
    }

    /// Exponent below which coefficients are known.
    pub fn precision(&self) -> i64 {
        self.low + self.coeffs.len() as i64
    }

    fn add(&self, other: &QLaurent) -> QLaurent {
        let low = self.low.min(other.low);
        let prec = self.precision().min(other.precision());
        let coeffs = (low..prec).map(|e| self.coeff(e).unwrap().plus(&other.coeff(e).unwrap())).collect();
        QLaurent { low, coeffs }
    }

    fn zero(prec: i64) -> QLaurent {
        QLaurent { low: prec, coeffs: Vec::new() }
    }

    /// Agreement of all coefficients below `prec`.
    pub fn agrees_below(&self, other: &QLaurent, prec: i64) -> bool {
        let low = self.low.min(other.low);
        (low..prec).all(|e| match (self.coeff(e), other.coeff(e)) {
            (Some(x), Some(y)) => x == y,
            _ => false,
        })
    }
}

/// A product of factors `(1 - c q^e)^(+-1)` times `scalar * q^shift`.
struct Term {
    scalar: Q,
    shift: i64,
    num: Vec<(Q, i64)>,
    den: Vec<(Q, i64)>,
}

impl Term {
    fn new() -> Self {
        Term { scalar: Q::one(), shift: 0, num: Vec::new(), den: Vec::new() }
    }

    /// Multiplies by `(c q^e0; q)_n`.
    fn poch(&mut self, c: &Q, e0: i64, n: usize) {
        self.num.extend((0..n).map(|i| (c.clone(), e0 + i as i64)));
    }

    /// Divides by `(c q^e0; q)_n`.
    fn inv_poch(&mut self, c: &Q, e0: i64, n: usize) {
        self.den.extend((0..n).map(|i| (c.clone(), e0 + i as i64)));
    }

    fn monomial(&mut self, c: &Q, e: i64) {
        self.scalar = self.scalar.times(c);
        self.shift += e;
    }

    /// Expands the term with `len` known coefficients after the leading
    /// power of `q`; `None` when a numerator factor vanishes identically.
    /// Denominators are examined first so that poles are always reported.
    fn expand(&self, len: usize) -> Result<Option<QLaurent>> {
        let order = len - 1;
        let mut scalar = self.scalar.clone();
        let mut shift = self.shift;
        let mut s = Series::one(order);
        for (c, e) in &self.den {
            match e.signum() {
                1 => s = s.div_one_minus(c, *e as usize)?,
                0 => {
                    let d = Q::one().minus(c);
                    let inv = d.try_inverse().ok_or_else(|| Error::Pole(format!("1 - ({c})")))?;
                    scalar = scalar.times(&inv);
                }
                _ if c.is_zero() => {}
                _ => {
                    scalar = scalar.times(&c.negated().try_inverse().unwrap());
                    shift -= e;
                    s = s.div_one_minus(&c.try_inverse().unwrap(), (-e) as usize)?;
                }
            }
        }
        for (c, e) in &self.num {
            match e.signum() {
                1 => s = s.mul_one_minus(c, *e as usize),
                0 if c.is_one() => return Ok(None),
                0 => scalar = scalar.times(&Q::one().minus(c)),
                _ if c.is_zero() => {}
                _ => {
                    scalar = scalar.times(&c.negated());
                    shift += e;
                    s = s.mul_one_minus(&c.try_inverse().unwrap(), (-e) as usize);
                }
            }
        }
        let coeffs = s.scale(&scalar).coeffs().to_vec();
        Ok(Some(QLaurent { low: shift, coeffs }))
    }
}

fn sum_terms(terms: Vec<Term>, len: usize, prec: i64) -> Result<QLaurent> {
    let mut acc = QLaurent::zero(prec);
    for t in terms {
        if let Some(x) = t.expand(len)? {
            acc = acc.add(&x);
        }
    }
    Ok(acc)
}

/// Number of coefficients kept per summand so that every summand, whose
/// leading exponent is at least `-N(N+1)/2 - 1`, is known below `prec`.
fn working_len(n_param: usize, prec: i64) -> usize {
    let n = n_param as i64;
    (prec + n * (n + 1) / 2 + 2).max(1) as usize
}

/// The terminating well-poised left side, known below `q^prec`.
pub fn andrews_lhs(p: &AndrewsParams, n_param: usize, prec: i64) -> Result<QLaurent> {
    let k = p.k();
    let big_n = n_param as i64;
    let one = Q::one();
    let prod_bc = p.b.iter().chain(&p.c).fold(one.clone(), |acc, x| acc.times(x));
    let arg = power(&p.a, k as u64).times(&prod_bc.try_inverse().unwrap());
    let mut terms = Vec::new();
    for n in 0..=n_param {
        let mut t = Term::new();
        t.poch(&p.a, 0, n);
        t.num.push((p.a.clone(), 2 * n as i64));
        t.den.push((p.a.clone(), 0));
        for x in p.b.iter().chain(&p.c) {
            t.poch(x, 0, n);
            t.inv_poch(&p.a.times(&x.try_inverse().unwrap()), 1, n);
        }
        t.poch(&one, -big_n, n);
        t.inv_poch(&one, 1, n);
        t.inv_poch(&p.a, big_n + 1, n);
        t.monomial(&power(&arg, n as u64), (k as i64 + big_n) * n as i64);
        terms.push(t);
    }
    sum_terms(terms, working_len(n_param, prec), prec)
}

/// Tuples `(n_1, ..., n_{k-1})` with total at most `n`.
fn bounded_tuples(len: usize, n: usize) -> Vec<Vec<usize>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 0..=n {
        for mut rest in bounded_tuples(len - 1, n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// The right side of the transformation, known below `q^prec`.
pub fn andrews_rhs(p: &AndrewsParams, n_param: usize, prec: i64) -> Result<QLaurent> {
    let k = p.k();
    let big_n = n_param as i64;
    let one = Q::one();
    let inv = |x: &Q| x.try_inverse().unwrap();
    let (bk, ck) = (&p.b[k - 1], &p.c[k - 1]);
    let mut terms = Vec::new();
    for ns in bounded_tuples(k - 1, n_param) {
        let partial: Vec<usize> = ns.iter().scan(0, |acc, &x| {
            *acc += x;
            Some(*acc)
        }).collect();
        let mut t = Term::new();
        t.poch(&p.a, 1, n_param);
        t.poch(&p.a.times(&inv(&bk.times(ck))), 1, n_param);
        t.inv_poch(&p.a.times(&inv(bk)), 1, n_param);
        t.inv_poch(&p.a.times(&inv(ck)), 1, n_param);
        for i in 0..k - 1 {
            let (bi, ci) = (&p.b[i], &p.c[i]);
            t.poch(&p.a.times(&inv(&bi.times(ci))), 1, ns[i]);
            t.inv_poch(&one, 1, ns[i]);
            t.poch(&p.b[i + 1], 0, partial[i]);
            t.poch(&p.c[i + 1], 0, partial[i]);
            t.inv_poch(&p.a.times(&inv(bi)), 1, partial[i]);
            t.inv_poch(&p.a.times(&inv(ci)), 1, partial[i]);
        }
        let last = partial.last().copied().unwrap_or(0);
        t.poch(&one, -big_n, last);
        t.inv_poch(&bk.times(ck).times(&inv(&p.a)), -big_n, last);
        let inner: usize = partial.iter().take(k.saturating_sub(2)).sum();
        t.monomial(&power(&p.a, inner as u64), inner as i64 + last as i64);
        for i in 0..k.saturating_sub(2) {
            let bc = p.b[i + 1].times(&p.c[i + 1]);
            t.monomial(&power(&inv(&bc), partial[i] as u64), 0);
        }
        terms.push(t);
    }
    sum_terms(terms, working_len(n_param, prec), prec)
}

/// The permutation `i -> k - i` for `i < k`, `k -> k`, as 0-based indices.
pub fn corollary_permutation(k: usize) -> Vec<usize> {
    (0..k).map(|i| if i + 1 < k { k - 2 - i } else { k - 1 }).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AndrewsReport {
    pub k: usize,
    pub n_param: usize,
    pub precision: i64,
    /// Left side equals the right side.
    pub theorem: bool,
    /// Left side equals the right side with permuted parameter indices.
    pub corollary: bool,
    /// Left side is unchanged by permuting the pairs and by swapping `b_1, c_1`.
    pub symmetric: bool,
}

impl AndrewsReport {
    pub fn passed(&self) -> bool {
        self.theorem && self.corollary && self.symmetric
    }
}

/// Expands both sides below `q^prec` and compares them exactly.
pub fn check_andrews(p: &AndrewsParams, n_param: usize, prec: i64) -> Result<AndrewsReport> {
    let perm = corollary_permutation(p.k());
    let lhs = andrews_lhs(p, n_param, prec)?;
    let rhs = andrews_rhs(p, n_param, prec)?;
    let cor = andrews_rhs(&p.permuted(&perm), n_param, prec)?;
    let lhs_perm = andrews_lhs(&p.permuted(&perm), n_param, prec)?;
    let lhs_swap = andrews_lhs(&p.swapped_first_pair(), n_param, prec)?;
    Ok(AndrewsReport {
        k: p.k(),
        n_param,
        precision: prec,
        theorem: lhs.agrees_below(&rhs, prec),
        corollary: lhs.agrees_below(&cor, prec),
        symmetric: lhs.agrees_below(&lhs_perm, prec) && lhs.agrees_below(&lhs_swap, prec),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64, d: i64) -> Q {
        Q::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn single_fold_cases() {
        let p = AndrewsParams::new(q(2, 3), vec![q(5, 7)], vec![q(-3, 2)]).unwrap();
        for n in 0..=3 {
            let r = check_andrews(&p, n, 8).unwrap();
            assert!(r.passed(), "{r:?}");
        }
        let lhs = andrews_lhs(&p, 0, 5).unwrap();
        assert_eq!(lhs.coeff(0), Some(Q::one()));
        assert!((1..5).all(|e| lhs.coeff(e) == Some(Q::zero())));
    }

    #[test]
    fn two_fold_case() {
        let p = AndrewsParams::new(q(1, 2), vec![q(3, 1), q(-2, 5)], vec![q(4, 3), q(7, 2)]).unwrap();
        let r = check_andrews(&p, 2, 6).unwrap();
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn poles_are_rejected() {
        let p = AndrewsParams::new(Q::one(), vec![q(1, 2)], vec![q(1, 3)]).unwrap();
        assert!(matches!(check_andrews(&p, 1, 4), Err(Error::Pole(_))));
        assert!(matches!(AndrewsParams::new(q(1, 2), vec![Q::zero()], vec![q(1, 3)]), Err(Error::Pole(_))));
    }

    #[test]
    fn permutation() {
        assert_eq!(corollary_permutation(1), vec![0]);
        assert_eq!(corollary_permutation(3), vec![1, 0, 2]);
        assert_eq!(corollary_permutation(4), vec![2, 1, 0, 3]);
    }
}
