//! Rank generating functions and the series identities relating them.

use rayon::prelude::*;

use super::cyclotomic::Cyclotomic;
use super::laurent::Laurent;
use super::ring::Ring;
use super::series::{inverse_pochhammer, pochhammer, Series};
use crate::error::{precondition, Result};

pub type Poly = Laurent<i64>;
pub type PolySeries = Series<Poly>;
pub type CycloSeries = Series<Laurent<Cyclotomic>>;

fn const_series(s: &Series<i64>) -> PolySeries {
    s.map(|&c| Poly::from_int(c))
}

fn sign(n: usize) -> i64 {
    if n % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `(1 - x)(1 - 1/x)` for the variable with index `i`.
fn symmetric_numerator(i: usize) -> Poly {
    let one = Poly::one();
    one.minus(&Poly::var(i)).times(&one.minus(&Poly::var_pow(i, -1)))
}

/// `s / ((1 - x q^e)(1 - q^e / x))` for the variable with index `i`, `e >= 1`.
fn div_symmetric(s: &PolySeries, i: usize, e: usize) -> PolySeries {
    s.div_one_minus(&Poly::var(i), e)
        .and_then(|t| t.div_one_minus(&Poly::var_pow(i, -1), e))
        .expect("factors with positive q-degree are invertible")
}

/// `1 / (x q^shift, q^shift / x; q^base)_len` for the variable with index `i`.
fn inv_symmetric_pochhammer(i: usize, shift: usize, base: usize, len: usize, order: usize) -> PolySeries {
    let mut out = PolySeries::one(order);
    for j in 0..len {
        let e = shift + base * j;
        if e > order {
            break;
        }
        out = div_symmetric(&out, i, e);
    }
    out
}

/// `sum_n pbar(n) q^n = (-q; q)_inf / (q; q)_inf`.
pub fn overpartition_factor(order: usize) -> Series<i64> {
    let num = pochhammer(&-1, 1, 1, None, order).expect("terminating product");
    let den = inverse_pochhammer(&1, 1, 1, None, order).expect("terminating product");
    &num * &den
}

/// Shared shape of the single- and multi-variable rank series:
/// `(-q)_inf/(q)_inf (1 + 2 sum_n (-1)^n q^(n^2 + a n) prod_i (1-x_i)(1-1/x_i) / ((1 - x_i q^(b n))(1 - q^(b n)/x_i)))`.
fn rank_series_shape(vars: usize, a: usize, b: usize, order: usize) -> PolySeries {
    let numerator = (0..vars).fold(Poly::one(), |acc, i| acc.times(&symmetric_numerator(i)));
    let mut sum = PolySeries::one(order);
    for n in 1.. {
        let e = n * n + a * n;
        if e > order {
            break;
        }
        let c = numerator.times(&Poly::from_int(2 * sign(n)));
        let term = (0..vars).fold(PolySeries::monomial(c, e, order), |acc, i| div_symmetric(&acc, i, b * n));
        sum = &sum + &term;
    }
    &const_series(&overpartition_factor(order)) * &sum
}

/// The rank series in one variable `z`:
/// `(-q)_inf/(q)_inf (1 + 2 sum (-1)^n q^(n^2+kn) (1-z)(1-1/z) / ((1-zq^(kn))(1-q^(kn)/z)))`.
pub fn build_rk(k: usize, order: usize) -> PolySeries {
    assert!(k >= 1, "k must be positive");
    rank_series_shape(1, k, k, order)
}

/// The multivariable rank series in `x_1, ..., x_k` (indices `0..k`).
pub fn rk_multi_lhs(k: usize, order: usize) -> PolySeries {
    assert!(k >= 1, "k must be positive");
    rank_series_shape(k, k, 1, order)
}

/// The second multivariable rank series: exponents `n^2 + 2kn`, base `q^2`.
pub fn r2k_multi_lhs(k: usize, order: usize) -> PolySeries {
    assert!(k >= 1, "k must be positive");
    rank_series_shape(k, 2 * k, 2, order)
}

/// All tuples `(n_1, ..., n_k)` whose summand has minimal degree at most
/// `order`, with `degree(partial sums N_1..N_j, j)` bounding every extension.
fn tuples(k: usize, order: usize, degree: &(dyn Fn(&[usize], usize) -> usize + Sync)) -> Vec<Vec<usize>> {
    fn go(
        k: usize,
        order: usize,
        degree: &(dyn Fn(&[usize], usize) -> usize + Sync),
        partial: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if partial.len() == k {
            out.push(partial.clone());
            return;
        }
        let prev = partial.last().copied().unwrap_or(0);
        for n in 0.. {
            partial.push(prev + n);
            let fits = degree(partial, k) <= order;
            if fits {
                go(k, order, degree, partial, out);
            }
            partial.pop();
            if !fits {
                break;
            }
        }
    }
    let mut out = Vec::new();
    go(k, order, degree, &mut Vec::new(), &mut out);
    out
}

/// Sums per-tuple terms in parallel, reducing in tuple order.
fn sum_terms(order: usize, tuples: &[Vec<usize>], term: impl Fn(&[usize]) -> PolySeries + Sync) -> PolySeries {
    let terms: Vec<PolySeries> = tuples.par_iter().map(|t| term(t)).collect();
    terms.iter().fold(PolySeries::zero(order), |acc, t| &acc + t)
}

/// Nested-sum form of [`rk_multi_lhs`]:
/// `sum (-1;q)_{N_k} q^((N_k^2 - N_k)/2) prod_i (1-x)(1-1/x) q^(N_i) / (x q^(N_{i-1}), q^(N_{i-1})/x; q)_(n_i + 1)`
/// with `x = x_{k-i+1}`; a factor with `N_{i-1} = 0` reduces to
/// `1 / (xq, q/x; q)_(n_i)`.
pub fn rhs_firsthype(k: usize, order: usize) -> PolySeries {
    assert!(k >= 1, "k must be positive");
    let degree = |partial: &[usize], k: usize| {
        let j = partial.len();
        let last = partial[j - 1];
        let rest = (k - j) * last;
        partial.iter().sum::<usize>() + rest + last_total_triangle(last)
    };
    let ts = tuples(k, order, &degree);
    sum_terms(order, &ts, |big_n| {
        let nk = big_n[k - 1];
        let e = big_n.iter().sum::<usize>() + last_total_triangle(nk);
        let mut term = &pochhammer(&Poly::from_int(-1), 0, 1, Some(nk), order).unwrap()
            * &PolySeries::monomial(Poly::one(), e, order);
        for i in 1..=k {
            let var = k - i;
            let prev = if i == 1 { 0 } else { big_n[i - 2] };
            let n_i = big_n[i - 1] - prev;
            let factor = if prev == 0 {
                inv_symmetric_pochhammer(var, 1, 1, n_i, order)
            } else {
                let num = PolySeries::constant(symmetric_numerator(var), order);
                &num * &inv_symmetric_pochhammer(var, prev, 1, n_i + 1, order)
            };
            term = &term * &factor;
        }
        term
    })
}

/// `(N^2 - N) / 2`.
fn last_total_triangle(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Nested-sum form of [`r2k_multi_lhs`]:
/// `sum (-1;q)_{2N_k} q^(2(N_1+...+N_k) - N_k) prod_i (1-x)(1-1/x) / (x q^(2N_{i-1}), q^(2N_{i-1})/x; q^2)_(n_i + 1)`,
/// reducing to `1 / (xq^2, q^2/x; q^2)_(n_i)` when `N_{i-1} = 0`.
pub fn rhs_secondhype(k: usize, order: usize) -> PolySeries {
    assert!(k >= 1, "k must be positive");
    let degree = |partial: &[usize], k: usize| {
        let j = partial.len();
        let last = partial[j - 1];
        2 * partial.iter().sum::<usize>() + 2 * (k - j) * last - last
    };
    let ts = tuples(k, order, &degree);
    sum_terms(order, &ts, |big_n| {
        let nk = big_n[k - 1];
        let e = 2 * big_n.iter().sum::<usize>() - nk;
        let mut term = &pochhammer(&Poly::from_int(-1), 0, 1, Some(2 * nk), order).unwrap()
            * &PolySeries::monomial(Poly::one(), e, order);
        for i in 1..=k {
            let var = k - i;
            let prev = if i == 1 { 0 } else { big_n[i - 2] };
            let n_i = big_n[i - 1] - prev;
            let factor = if prev == 0 {
                inv_symmetric_pochhammer(var, 2, 2, n_i, order)
            } else {
                let num = PolySeries::constant(symmetric_numerator(var), order);
                &num * &inv_symmetric_pochhammer(var, 2 * prev, 2, n_i + 1, order)
            };
            term = &term * &factor;
        }
        term
    })
}

/// `sum_n (-1;q)_n q^((n^2+n)/2) / (zq, q/z; q)_n`.
pub fn f1_lemma(order: usize) -> PolySeries {
    let mut sum = PolySeries::zero(order);
    for n in 0.. {
        let e = (n * n + n) / 2;
        if e > order {
            break;
        }
        let term = &(&pochhammer(&Poly::from_int(-1), 0, 1, Some(n), order).unwrap()
            * &PolySeries::monomial(Poly::one(), e, order))
            * &inv_symmetric_pochhammer(0, 1, 1, n, order);
        sum = &sum + &term;
    }
    sum
}

/// The two readings of the second lemma series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum F2Variant {
    /// `sum (-1;q)_{2n} q^n / (zq^2, q^2/z; q^2)_n`.
    BaseQ,
    /// `sum (-1;q^2)_{2n} q^n / (zq^2, q^2/z; q^2)_n`.
    BaseQ2,
}

pub fn f2_lemma(variant: F2Variant, order: usize) -> PolySeries {
    let mut sum = PolySeries::zero(order);
    for n in 0..=order {
        let poch = match variant {
            F2Variant::BaseQ => pochhammer(&Poly::from_int(-1), 0, 1, Some(2 * n), order),
            F2Variant::BaseQ2 => pochhammer(&Poly::from_int(-1), 0, 2, Some(2 * n), order),
        }
        .unwrap();
        let term = &(&poch * &PolySeries::monomial(Poly::one(), n, order)) * &inv_symmetric_pochhammer(0, 2, 2, n, order);
        sum = &sum + &term;
    }
    sum
}

/// Products generating single columns with a bracket bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BracketLemma {
    /// `q^((t^2+t)/2) / (zq^s; q)_(t-s+1)`.
    InitRun,
    /// `(-1;q)_t / (zq^s; q)_(t-s+1)`.
    OverRun,
    /// `(-q;q^2)_t / (zq^(2s); q^2)_(t-s+1)`.
    Frob2A,
    /// `(-1;q^2)_t q^t / (zq^(2s); q^2)_(t-s+1)`.
    Frob2B,
}

impl BracketLemma {
    pub const ALL: [BracketLemma; 4] = [BracketLemma::InitRun, BracketLemma::OverRun, BracketLemma::Frob2A, BracketLemma::Frob2B];

    pub fn name(self) -> &'static str {
        match self {
            BracketLemma::InitRun => "initrun",
            BracketLemma::OverRun => "overrun",
            BracketLemma::Frob2A => "frob2a",
            BracketLemma::Frob2B => "frob2b",
        }
    }
}

pub fn lemma_product(which: BracketLemma, s: usize, t: usize, order: usize) -> Result<PolySeries> {
    if s < 1 || s > t {
        return Err(precondition("lemma_product", format!("need 1 <= s <= t, got s={s}, t={t}")));
    }
    let z = Poly::var(0);
    let m1 = Poly::from_int(-1);
    let len = Some(t - s + 1);
    let (num, den) = match which {
        BracketLemma::InitRun => (
            PolySeries::monomial(Poly::one(), (t * t + t) / 2, order),
            inverse_pochhammer(&z, s, 1, len, order)?,
        ),
        BracketLemma::OverRun => (pochhammer(&m1, 0, 1, Some(t), order)?, inverse_pochhammer(&z, s, 1, len, order)?),
        BracketLemma::Frob2A => (pochhammer(&m1, 1, 2, Some(t), order)?, inverse_pochhammer(&z, 2 * s, 2, len, order)?),
        BracketLemma::Frob2B => (
            pochhammer(&m1, 0, 2, Some(t), order)?.shift(t),
            inverse_pochhammer(&z, 2 * s, 2, len, order)?,
        ),
    };
    Ok(&num * &den)
}

/// `2 (-q)_inf/(q)_inf sum_{n>=1} (-1)^(n+1) q^(n^2 + k|m|n) (1 - q^(kn)) / (1 + q^(kn))`.
pub fn mk_slice(k: usize, m: i64, order: usize) -> Result<Series<i64>> {
    if k == 0 || m == 0 {
        return Err(precondition("mk_slice", "need k >= 1 and m != 0"));
    }
    let km = k * m.unsigned_abs() as usize;
    let mut sum = Series::<i64>::zero(order);
    for n in 1.. {
        let e = n * n + km * n;
        if e > order {
            break;
        }
        let term = Series::monomial(-sign(n), e, order).mul_one_minus(&1, k * n).div_one_minus(&-1, k * n)?;
        sum = &sum + &term;
    }
    Ok((&overpartition_factor(order) * &sum).scale(&2))
}

/// Coefficient series of `z^m` in a one-variable series.
pub fn z_coeff(s: &PolySeries, m: i64) -> Series<i64> {
    s.map(|p| p.coeff(&[m as i32]))
}

/// Substitutes `x_i = zeta_k^(i-1) w` (indices from 0), where `w = z^(1/k)`
/// is stored as the single variable of the result.
pub fn substitute_roots(s: &PolySeries, k: u32) -> CycloSeries {
    s.map(|p| {
        let mut out = Laurent::<Cyclotomic>::zero();
        for (e, &c) in p.terms() {
            let twist: i64 = e.iter().enumerate().map(|(i, &x)| i as i64 * i64::from(x)).sum();
            let coeff = Cyclotomic::zeta_pow(k, twist).times(&Cyclotomic::integer(c));
            out.add_term(vec![e.iter().sum()], &coeff);
        }
        out
    })
}

/// Rewrites a one-variable series in `z` over `w = z^(1/k)`, so `z^m`
/// becomes `w^(km)`, with integer coefficients in `Z[zeta_k]`.
pub fn embed_roots(s: &PolySeries, k: u32) -> CycloSeries {
    s.map(|p| p.map_terms(|e| e.iter().map(|&x| x * k as i32).collect(), |&c| Cyclotomic::integer(c)))
}
