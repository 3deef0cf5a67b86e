//! Signed rank counts of buffered representations against the multivariate
//! and root-of-unity series, and the structural properties of conjugation
//! and the jigsaw map.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use super::ranks::series_equal;
use super::{ensure, Failure, Outcome, SuiteReport};
use crate::buffered::{conjugate, enumerate_reps, full_conjugate, full_rank, jigsaw, rank_vector, BufferedRep, RepKind};
use crate::error::Result;
use crate::frobenius::enumerate_symbols;
use crate::qseries::{
    build_rk, embed_roots, r2k_multi_lhs, rhs_firsthype, rhs_secondhype, rk_multi_lhs, substitute_roots, Cyclotomic,
    Laurent, Poly, PolySeries, Ring,
};

fn kind_name(kind: RepKind) -> &'static str {
    match kind {
        RepKind::B2 => "b2",
        _ => "b1",
    }
}

fn hat_sign(v: &BufferedRep) -> i64 {
    if v.hat_count() % 2 == 0 {
        1
    } else {
        -1
    }
}

fn reps_by_weight(kind: RepKind, k: usize, order: usize) -> Result<Vec<Vec<BufferedRep>>> {
    (0..=order).into_par_iter().map(|n| enumerate_reps(n as u64, k, kind)).collect()
}

/// `sum (-1)^h prod x_i^(rho^i)` over one weight.
fn signed_polynomial(reps: &[BufferedRep], k: usize) -> Result<Poly> {
    let mut out = Poly::zero();
    for v in reps {
        let r = rank_vector(v)?;
        let e: Vec<i32> = (1..=k).map(|i| r.component(i) as i32).collect();
        out.add_term(e, &hat_sign(v));
    }
    Ok(out)
}

/// `sum (-1)^h prod zeta_k^((i-1) rho^i) w^(full rank)` over one weight.
fn signed_cyclotomic(reps: &[BufferedRep], k: usize) -> Result<Laurent<Cyclotomic>> {
    let mut out = Laurent::<Cyclotomic>::zero();
    for v in reps {
        let r = rank_vector(v)?;
        let twist: i64 = (1..=k).map(|i| (i as i64 - 1) * r.component(i)).sum();
        let c = Cyclotomic::zeta_pow(k as u32, twist).times(&Cyclotomic::integer(hat_sign(v)));
        out.add_term(vec![r.full() as i32], &c);
    }
    Ok(out)
}

fn first_rep_with(reps: &[BufferedRep], pred: impl Fn(&BufferedRep) -> bool) -> Option<String> {
    reps.iter().find(|v| pred(v)).map(|v| v.to_string())
}

/// Signed enumeration against the multivariate right side, and the
/// root-of-unity specialization against the single-variable series.
pub fn buffered(kind: RepKind, k: Option<usize>, order: usize) -> SuiteReport {
    let ks: Vec<usize> = match k {
        Some(k) => vec![k],
        None => (1..=3).collect(),
    };
    let mut params = vec![("N", order as i64)];
    if let Some(k) = k {
        params.push(("k", k as i64));
    }
    let mut r = SuiteReport::new(&format!("buffered-{}", kind_name(kind)), &params);
    for k in ks {
        let reps = match reps_by_weight(kind, k, order) {
            Ok(x) => x,
            Err(e) => {
                r.add(format!("k={k} enumeration"), Err(e.into()));
                continue;
            }
        };
        let (rhs, lhs, single_k) = match kind {
            RepKind::B2 => (rhs_secondhype(k, order), r2k_multi_lhs(k, order), 2 * k),
            _ => (rhs_firsthype(k, order), rk_multi_lhs(k, order), k),
        };
        r.add(format!("k={k} multivariate"), multivariate(&reps, &rhs, k));
        let single = build_rk(single_k, order);
        r.add(format!("k={k} root-of-unity buckets"), cyclotomic_buckets(&reps, &single, k));
        r.add(
            format!("k={k} substituted left side"),
            series_equal(&substitute_roots(&lhs, k as u32), &embed_roots(&single, k as u32)),
        );
    }
    r
}

fn multivariate(reps: &[Vec<BufferedRep>], rhs: &PolySeries, k: usize) -> Outcome {
    for (n, layer) in reps.iter().enumerate() {
        let got = signed_polynomial(layer, k)?;
        let want = rhs.coeff(n);
        if got != want {
            let diff = got.minus(&want);
            let (e, _) = diff.terms().next().expect("nonzero difference");
            let e = e.to_vec();
            let witness = first_rep_with(layer, |v| {
                rank_vector(v).is_ok_and(|r| {
                    let mut x: Vec<i32> = (1..=k).map(|i| r.component(i) as i32).collect();
                    while x.last() == Some(&0) {
                        x.pop();
                    }
                    x == e
                })
            });
            let f = Failure::new(format!(
                "n={n}, exponents {e:?}: enumerated {}, series {}",
                got.coeff(&e),
                want.coeff(&e)
            ));
            return Err(match witness {
                Some(w) => f.with(w),
                None => f,
            });
        }
    }
    Ok(Some(format!("n <= {}", reps.len() - 1)))
}

fn cyclotomic_buckets(reps: &[Vec<BufferedRep>], single: &PolySeries, k: usize) -> Outcome {
    let mut vanishing = 0usize;
    for (n, layer) in reps.iter().enumerate() {
        let got = signed_cyclotomic(layer, k)?;
        let want = single.coeff(n);
        let mut ms: BTreeSet<i64> = got.terms().map(|(e, _)| e.first().copied().unwrap_or(0) as i64).collect();
        ms.extend(want.terms().map(|(e, _)| k as i64 * e.first().copied().unwrap_or(0) as i64));
        for m in ms {
            let bucket = got.coeff(&[m as i32]);
            let witness = || first_rep_with(layer, |v| full_rank(v).is_ok_and(|x| x == m));
            if m % k as i64 != 0 {
                if !bucket.is_zero() {
                    let f = Failure::new(format!("n={n}, m={m}: bucket {bucket:?} does not vanish"));
                    return Err(match witness() {
                        Some(w) => f.with(w),
                        None => f,
                    });
                }
                vanishing += 1;
                continue;
            }
            let expected = Cyclotomic::integer(want.coeff(&[(m / k as i64) as i32]));
            if bucket != expected {
                let f = Failure::new(format!("n={n}, m={m}: bucket {bucket:?}, series {expected:?}"));
                return Err(match witness() {
                    Some(w) => f.with(w),
                    None => f,
                });
            }
        }
    }
    Ok(Some(format!("n <= {}, {vanishing} nonempty buckets off multiples of {k} vanish", reps.len() - 1)))
}

/// Exhaustive structural checks over all representations of weight at most
/// `order` with at most `k_max` columns.
pub fn structure(kind: RepKind, k_max: usize, order: usize) -> SuiteReport {
    let mut r = SuiteReport::new(&format!("structure-{}", kind_name(kind)), &[("k", k_max as i64), ("N", order as i64)]);
    let reps = match reps_by_weight(kind, k_max, order) {
        Ok(x) => x,
        Err(e) => {
            r.add("enumeration", Err(e.into()));
            return r;
        }
    };
    let all: Vec<&BufferedRep> = reps.iter().flatten().collect();
    r.add("enumerated-reps-valid", for_all(&all, |v| ensure(v.is_valid(), || Failure::new("invalid").with(v))));
    r.add("conjugation-involution-and-negation", for_all(&all, |v| conjugation_props(v, k_max)));
    r.add("conjugations-commute", for_all(&all, |v| commutation(v, k_max)));
    r.add("full-conjugation-negates-full-rank", for_all(&all, full_conjugation_props));
    r.add("jigsaw-valid-and-weight-preserving", for_all(&all, |v| jigsaw_props(v, kind)));
    r.add("jigsaw-surjective", jigsaw_surjective(&reps, kind));
    fibers(&mut r, &all, k_max);
    r
}

fn for_all(items: &[&BufferedRep], check: impl Fn(&BufferedRep) -> std::result::Result<(), Failure> + Sync) -> Outcome {
    let results: Vec<std::result::Result<(), Failure>> = items.par_iter().map(|v| check(v)).collect();
    results.into_iter().collect::<std::result::Result<Vec<()>, _>>()?;
    Ok(Some(format!("{} representations", items.len())))
}

fn conjugation_props(v: &BufferedRep, k_max: usize) -> std::result::Result<(), Failure> {
    let rv = rank_vector(v).map_err(|e| Failure::from(e).with(v))?;
    for i in 1..=k_max + 1 {
        let c = conjugate(v, i).map_err(|e| Failure::from(e).with(v))?;
        let at = |msg: &str| Failure::new(format!("index {i}: {msg}")).with(v);
        ensure(c.is_valid(), || at("image is invalid"))?;
        ensure(c.weight() == v.weight(), || at("weight changed"))?;
        ensure(conjugate(&c, i).ok().as_ref() == Some(v), || at("not an involution"))?;
        if i > v.num_columns() {
            ensure(c == *v, || at("out-of-range conjugation is not the identity"))?;
        }
        let rc = rank_vector(&c).map_err(|e| Failure::from(e).with(&c))?;
        for j in 1..=k_max {
            let want = if j == i { -rv.component(j) } else { rv.component(j) };
            ensure(rc.component(j) == want, || at(&format!("rank component {j} is {}, expected {want}", rc.component(j))))?;
        }
    }
    Ok(())
}

fn commutation(v: &BufferedRep, k_max: usize) -> std::result::Result<(), Failure> {
    for i in 1..=k_max {
        for j in i + 1..=k_max {
            let ij = conjugate(v, i).and_then(|x| conjugate(&x, j));
            let ji = conjugate(v, j).and_then(|x| conjugate(&x, i));
            match (ij, ji) {
                (Ok(a), Ok(b)) if a == b => {}
                (Ok(_), Ok(_)) => return Err(Failure::new(format!("indices {i} and {j} do not commute")).with(v)),
                (Err(e), _) | (_, Err(e)) => return Err(Failure::from(e).with(v)),
            }
        }
    }
    Ok(())
}

fn full_conjugation_props(v: &BufferedRep) -> std::result::Result<(), Failure> {
    let c = full_conjugate(v).map_err(|e| Failure::from(e).with(v))?;
    let (a, b) = (full_rank(v)?, full_rank(&c)?);
    ensure(b == -a, || Failure::new(format!("full rank {a} became {b}")).with(v))?;
    ensure(full_conjugate(&c).ok().as_ref() == Some(v), || Failure::new("not an involution").with(v))?;
    let (j1, j2) = (jigsaw(v)?, jigsaw(&c)?);
    ensure(j1.weight() == j2.weight(), || Failure::new("symbol weight changed under full conjugation").with(v))
}

fn jigsaw_props(v: &BufferedRep, kind: RepKind) -> std::result::Result<(), Failure> {
    let s = jigsaw(v).map_err(|e| Failure::from(e).with(v))?;
    ensure(s.kind == kind.symbol_kind(), || Failure::new("wrong symbol kind").with(v))?;
    ensure(s.is_valid(), || Failure::new(format!("image {s} is invalid")).with(v))?;
    ensure(s.weight() == v.weight(), || Failure::new("weight changed").with(v))
}

fn jigsaw_surjective(reps: &[Vec<BufferedRep>], kind: RepKind) -> Outcome {
    for (n, layer) in reps.iter().enumerate() {
        let images: BTreeSet<String> = layer.iter().filter_map(|v| jigsaw(v).ok()).map(|s| s.to_string()).collect();
        for s in enumerate_symbols(n as u64, kind.symbol_kind()) {
            ensure(images.contains(&s.to_string()), || Failure::new(format!("n={n}: no preimage")).with(&s))?;
        }
    }
    Ok(Some(format!("n <= {}", reps.len() - 1)))
}

/// Whether `jigsaw(phi(v))` depends only on `jigsaw(v)`, for the full
/// conjugation and each single-column conjugation. Reported, never failed.
fn fibers(r: &mut SuiteReport, all: &[&BufferedRep], k_max: usize) {
    let mut maps: Vec<(String, Box<dyn Fn(&BufferedRep) -> Result<BufferedRep> + Sync>)> =
        vec![("full".to_string(), Box::new(full_conjugate))];
    for i in 1..=k_max {
        maps.push((format!("column {i}"), Box::new(move |v| conjugate(v, i))));
    }
    for (name, phi) in maps {
        let mut image_of: BTreeMap<String, (String, String)> = BTreeMap::new();
        let mut conflict = None;
        for v in all {
            let (Ok(s), Ok(t)) = (jigsaw(v), phi(v).and_then(|c| jigsaw(&c))) else { continue };
            let (s, t) = (s.to_string(), t.to_string());
            match image_of.get(&s) {
                Some((t0, v0)) if *t0 != t => {
                    conflict = Some(format!("{v0} and {v} share the symbol {s} but map to {t0} and {t}"));
                    break;
                }
                Some(_) => {}
                None => {
                    image_of.insert(s, (t, v.to_string()));
                }
            }
        }
        let detail = match conflict {
            None => format!("well defined on {} fibers", image_of.len()),
            Some(c) => format!("not well defined: {c}"),
        };
        r.info(format!("fiber-{name}"), detail);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        for kind in [RepKind::B1, RepKind::B2] {
            let r = buffered(kind, None, 4);
            assert!(r.passed, "{r:#?}");
            let r = structure(kind, 2, 4);
            assert!(r.passed, "{r:#?}");
        }
    }
}
