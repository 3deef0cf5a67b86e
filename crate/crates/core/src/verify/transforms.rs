//! Series identities checked by exact expansion.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::ranks::series_equal;
use super::{Failure, Outcome, SuiteReport};
use crate::qseries::{
    build_rk, check_andrews, f1_lemma, f2_lemma, mk_slice, overpartition_factor, r2k_multi_lhs, rhs_firsthype,
    rhs_secondhype, rk_multi_lhs, z_coeff, AndrewsParams, F2Variant, PolySeries, Series,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Hype {
    First,
    Second,
}

/// Left side against the nested-sum right side, the one-variable case
/// against the lemma series, and the specialization at `x_i = 1`.
pub fn hypergeometric(h: Hype, k: Option<usize>, order: usize) -> SuiteReport {
    let name = match h {
        Hype::First => "firsthype",
        Hype::Second => "secondhype",
    };
    let ks: Vec<usize> = match k {
        Some(k) => vec![k],
        None => (1..=3).collect(),
    };
    let mut params = vec![("N", order as i64)];
    if let Some(k) = k {
        params.push(("k", k as i64));
    }
    let mut r = SuiteReport::new(name, &params);
    for k in ks {
        let (lhs, rhs) = match h {
            Hype::First => (rk_multi_lhs(k, order), rhs_firsthype(k, order)),
            Hype::Second => (r2k_multi_lhs(k, order), rhs_secondhype(k, order)),
        };
        r.add(format!("k={k} left equals right"), series_equal(&lhs, &rhs));
        let ones = overpartition_factor(order);
        r.add(format!("k={k} all variables one"), series_equal(&lhs.map(|p| p.eval_ones()), &ones));
        if k == 1 {
            let (lemma, single) = match h {
                Hype::First => (f1_lemma(order), build_rk(1, order)),
                Hype::Second => (f2_lemma(F2Variant::BaseQ, order), build_rk(2, order)),
            };
            r.add("k=1 right side equals lemma series", series_equal(&rhs, &lemma));
            r.add("k=1 left side equals single-variable series", series_equal(&lhs, &single));
        }
    }
    r
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Three fixed rational parameter sets `(a, b, c)` for two-fold checks.
fn parameter_sets() -> Vec<(&'static str, BigRational, [BigRational; 2], [BigRational; 2])> {
    vec![
        ("A", q(2, 3), [q(5, 7), q(3, 1)], [q(-3, 2), q(4, 5)]),
        ("B", q(1, 2), [q(3, 1), q(-2, 5)], [q(4, 3), q(7, 2)]),
        ("C", q(-5, 4), [q(2, 9), q(6, 1)], [q(-1, 3), q(11, 2)]),
    ]
}

const ANDREWS_PRECISION: i64 = 12;

/// The transformation, its permuted form and the symmetry of its left side,
/// for `k` in `1..=2` and every terminating parameter up to `max_n`.
pub fn andrews(k: Option<usize>, max_n: usize) -> SuiteReport {
    let ks: Vec<usize> = match k {
        Some(k) => vec![k],
        None => vec![1, 2],
    };
    let mut params = vec![("N", max_n as i64), ("precision", ANDREWS_PRECISION)];
    if let Some(k) = k {
        params.push(("k", k as i64));
    }
    let mut r = SuiteReport::new("andrews", &params);
    for k in ks {
        for (label, a, b, c) in parameter_sets() {
            let name = format!("k={k} set {label}");
            if !(1..=2).contains(&k) {
                r.add(name, Err(Failure::new(format!("k={k} has no parameter set"))));
                continue;
            }
            let outcome = (|| -> Outcome {
                let p = AndrewsParams::new(a, b[..k].to_vec(), c[..k].to_vec())?;
                for n in 0..=max_n {
                    let rep = check_andrews(&p, n, ANDREWS_PRECISION)?;
                    let fail = |what: &str| Failure::new(format!("N={n}: {what} fails")).with(format!("{p:?}"));
                    if !rep.theorem {
                        return Err(fail("transformation"));
                    }
                    if !rep.corollary {
                        return Err(fail("permuted transformation"));
                    }
                    if !rep.symmetric {
                        return Err(fail("left side symmetry"));
                    }
                }
                Ok(Some(format!("N <= {max_n}")))
            })();
            r.add(name, outcome);
        }
    }
    r.add(
        "pole at a = 1 rejected",
        match AndrewsParams::new(q(1, 1), vec![q(2, 1)], vec![q(3, 1)]).and_then(|p| check_andrews(&p, 1, 6)) {
            Err(crate::Error::Pole(_)) => Ok(None),
            other => Err(Failure::new(format!("expected a pole, got {other:?}"))),
        },
    );
    r
}

fn sum_over_m(s: &PolySeries, order: usize) -> Series<i64> {
    s.map(|p| p.eval_ones()).truncate(order)
}

/// Coefficient slices of the single-variable series against their closed
/// form, and the sum of all slices.
pub fn slice(order: usize) -> SuiteReport {
    let mut r = SuiteReport::new("slice", &[("N", order as i64)]);
    for k in 1..=3usize {
        let rk = build_rk(k, order);
        let exploratory = k == 3;
        let mut failures = Vec::new();
        for m in [-2i64, -1, 1, 2] {
            let outcome = mk_slice(k, m, order)
                .map_err(Failure::from)
                .and_then(|closed| series_equal(&closed, &z_coeff(&rk, m)));
            match (exploratory, outcome) {
                (false, o) => r.add(format!("k={k} m={m} closed form"), o),
                (true, Err(f)) => failures.push(format!("m={m}: {}", f.detail)),
                (true, Ok(_)) => {}
            }
        }
        if exploratory {
            let detail = if failures.is_empty() {
                format!("closed form agrees for m = +-1, +-2 to q^{order}")
            } else {
                format!("closed form differs: {}", failures.join("; "))
            };
            r.info(format!("k={k} closed form"), detail);
        }
        r.add(format!("k={k} slices sum to pbar"), series_equal(&sum_over_m(&rk, order), &overpartition_factor(order)));
    }
    r
}
