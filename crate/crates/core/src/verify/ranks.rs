//! Rank generating functions against enumeration, bracket lemmas and the
//! Frobenius bijections.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use super::{compare_counts, ensure, Failure, Histogram, Outcome, SuiteReport};
use crate::buffered::{rank, BufferedRep, Column, RepKind};
use crate::enumerate::{enumerate, overpartitions, ConstraintSpec, Parity};
use crate::error::Result;
use crate::frobenius::{
    enumerate_symbols, f1_to_overpartition, f2_to_overpartition, js2_inverse, js2_map, js_inverse, js_map,
    overpartition_to_f1, overpartition_to_f2, FrobeniusKind, FrobeniusSymbol,
};
use crate::partition::{Overpartition, Partition};
use crate::qseries::{build_rk, f1_lemma, f2_lemma, lemma_product, overpartition_factor, BracketLemma, F2Variant, PolySeries};
use crate::stats;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankKind {
    Dyson,
    M2,
    F1,
    F2,
}

/// Rank of a symbol read as a one-column representation without hats.
pub fn symbol_rank(s: &FrobeniusSymbol) -> Result<i64> {
    let kind = match s.kind {
        FrobeniusKind::First => RepKind::B1,
        FrobeniusKind::Second => RepKind::B2,
    };
    let columns = if s.width() == 0 { Vec::new() } else { vec![Column::new(s.top.clone(), s.bottom.clone())] };
    rank(&BufferedRep::new(kind, columns), 1)
}

/// Rank histogram of the objects of one weight with a witness per rank.
fn histogram<T: ToString>(items: &[T], rank_of: impl Fn(&T) -> Result<i64>) -> Result<(Histogram, BTreeMap<i64, String>)> {
    let mut counts = Histogram::new();
    let mut witness = BTreeMap::new();
    for x in items {
        let m = rank_of(x)?;
        *counts.entry(m).or_insert(0) += 1;
        witness.entry(m).or_insert_with(|| x.to_string());
    }
    Ok((counts, witness))
}

fn compare_series<T: ToString + Sync>(
    order: usize,
    objects: &[Vec<T>],
    series: &PolySeries,
    rank_of: impl Fn(&T) -> Result<i64> + Sync,
) -> Outcome {
    let results: Vec<std::result::Result<(), Failure>> = (0..=order)
        .into_par_iter()
        .map(|n| {
            let (counts, witness) = histogram(&objects[n], &rank_of)?;
            compare_counts(n, &counts, &series.coeff(n), &witness)
        })
        .collect();
    results.into_iter().collect::<std::result::Result<Vec<()>, _>>()?;
    Ok(Some(format!("n <= {order}")))
}

fn count_outcome(order: usize, counts: &[usize]) -> Outcome {
    let pbar = overpartition_factor(order);
    for (n, &c) in counts.iter().enumerate() {
        ensure(c as i64 == pbar.coeff(n), || Failure::new(format!("n={n}: {c} objects, pbar(n) = {}", pbar.coeff(n))))?;
    }
    ensure(order < 4 || counts[4] == 14, || Failure::new(format!("weight 4 has {} objects", counts[4])))?;
    Ok(Some(format!("n <= {order}")))
}

/// Rank counts of overpartitions or symbols of each weight against the
/// matching generating function.
pub fn rank_series(kind: RankKind, order: usize) -> SuiteReport {
    let name = match kind {
        RankKind::Dyson => "dyson",
        RankKind::M2 => "m2",
        RankKind::F1 => "f1",
        RankKind::F2 => "f2",
    };
    let mut r = SuiteReport::new(name, &[("N", order as i64)]);
    match kind {
        RankKind::Dyson | RankKind::M2 => {
            let objects: Vec<Vec<Overpartition>> =
                (0..=order).into_par_iter().map(|n| overpartitions(n as u64).collect()).collect();
            r.add("counts-are-pbar", count_outcome(order, &objects.iter().map(Vec::len).collect::<Vec<_>>()));
            let (k, stat): (usize, fn(&Overpartition) -> Result<i64>) = match kind {
                RankKind::Dyson => (1, stats::dyson_rank_over),
                _ => (2, stats::m2_rank_over),
            };
            let series = build_rk(k, order);
            r.add("rank-counts-match-series", compare_series(order, &objects, &series, nonempty_rank(stat)));
        }
        RankKind::F1 | RankKind::F2 => {
            let fk = if kind == RankKind::F1 { FrobeniusKind::First } else { FrobeniusKind::Second };
            let symbols: Vec<Vec<FrobeniusSymbol>> =
                (0..=order).into_par_iter().map(|n| enumerate_symbols(n as u64, fk)).collect();
            r.add("counts-are-pbar", count_outcome(order, &symbols.iter().map(Vec::len).collect::<Vec<_>>()));
            if kind == RankKind::F1 {
                let lemma = f1_lemma(order);
                r.add("symbol-ranks-match-lemma", compare_series(order, &symbols, &lemma, symbol_rank));
                r.add("lemma-equals-rank-series", series_equal(&lemma, &build_rk(1, order)));
                let image = compare_series(order, &symbols, &lemma, |s| {
                    nonempty_rank(stats::dyson_rank_over)(&f1_to_overpartition(s)?)
                });
                r.info("image-dyson-ranks", agreement(&image));
            } else {
                let mut matching = Vec::new();
                for variant in [F2Variant::BaseQ, F2Variant::BaseQ2] {
                    let lemma = f2_lemma(variant, order);
                    let outcome = compare_series(order, &symbols, &lemma, symbol_rank);
                    if outcome.is_ok() {
                        matching.push(variant);
                    }
                    r.info(format!("lemma-variant-{variant:?}"), agreement(&outcome));
                }
                r.add(
                    "exactly-one-lemma-variant-matches",
                    match matching.as_slice() {
                        [v] => Ok(Some(format!("{v:?}"))),
                        other => Err(Failure::new(format!("matching variants: {other:?}"))),
                    },
                );
                let lemma = f2_lemma(F2Variant::BaseQ, order);
                r.add("lemma-equals-rank-series", series_equal(&lemma, &build_rk(2, order)));
                let image = compare_series(order, &symbols, &lemma, |s| {
                    nonempty_rank(stats::m2_rank_over)(&f2_to_overpartition(s)?)
                });
                r.info("image-m2-ranks", agreement(&image));
            }
        }
    }
    r
}

fn agreement(outcome: &Outcome) -> String {
    match outcome {
        Ok(_) => "agrees with the symbol rank counts".to_string(),
        Err(f) => match &f.counterexample {
            Some(x) => format!("differs: {} ({x})", f.detail),
            None => format!("differs: {}", f.detail),
        },
    }
}

/// The empty overpartition carries rank 0 in generating functions.
fn nonempty_rank(stat: fn(&Overpartition) -> Result<i64>) -> impl Fn(&Overpartition) -> Result<i64> + Sync {
    move |p| if p.is_empty() { Ok(0) } else { stat(p) }
}

pub(crate) fn series_equal<R: crate::qseries::Ring>(a: &crate::qseries::Series<R>, b: &crate::qseries::Series<R>) -> Outcome {
    match (0..=a.order()).find(|&n| a.coeff(n) != b.coeff(n)) {
        None => Ok(Some(format!("to q^{}", a.order()))),
        Some(n) => Err(Failure::new(format!("first difference at q^{n}"))),
    }
}

/// Round trips of both Lovejoy bijections for weights up to `order`, and of
/// the Joichi–Stanton maps for total weight up to `js_weight`.
pub fn bijections(order: usize, js_weight: usize) -> SuiteReport {
    let mut r = SuiteReport::new("bijections", &[("N", order as i64), ("js_weight", js_weight as i64)]);
    for (name, kind) in [("f1", FrobeniusKind::First), ("f2", FrobeniusKind::Second)] {
        let per_weight: Vec<std::result::Result<usize, Failure>> = (0..=order)
            .into_par_iter()
            .map(|n| {
                let symbols = enumerate_symbols(n as u64, kind);
                let (fwd, inv): (fn(&FrobeniusSymbol) -> Result<Overpartition>, fn(&Overpartition) -> Result<FrobeniusSymbol>) =
                    match kind {
                        FrobeniusKind::First => (f1_to_overpartition, overpartition_to_f1),
                        FrobeniusKind::Second => (f2_to_overpartition, overpartition_to_f2),
                    };
                let mut images = BTreeSet::new();
                for s in &symbols {
                    let p = fwd(s).map_err(|e| Failure::from(e).with(s))?;
                    ensure(p.weight() == n as u64, || Failure::new("weight changed").with(s))?;
                    ensure(inv(&p).ok().as_ref() == Some(s), || Failure::new("inverse(forward(s)) != s").with(s))?;
                    images.insert(p.to_string());
                }
                for p in overpartitions(n as u64) {
                    let s = inv(&p).map_err(|e| Failure::from(e).with(&p))?;
                    ensure(fwd(&s).ok().as_ref() == Some(&p), || Failure::new("forward(inverse(p)) != p").with(&p))?;
                }
                ensure(images.len() == symbols.len(), || Failure::new(format!("n={n}: forward map not injective")))?;
                Ok(symbols.len())
            })
            .collect();
        let counts: std::result::Result<Vec<usize>, Failure> = per_weight.into_iter().collect();
        match counts {
            Ok(c) => {
                r.add(format!("{name}-counts-are-pbar"), count_outcome(order, &c));
                r.add(format!("{name}-round-trips"), Ok(Some(format!("n <= {order}"))));
            }
            Err(f) => r.add(format!("{name}-round-trips"), Err(f)),
        }
    }
    r.add("js-round-trips", js_round_trips(js_weight));
    r.add("js2-round-trips", js2_round_trips(js_weight));
    r
}

/// Pairs `(base with t parts, distinct marks below t)` of total weight at
/// most `w` map and invert consistently, and every overpartition into `t`
/// nonnegative parts is an image.
fn js_round_trips(w: usize) -> Outcome {
    let mut pairs = 0usize;
    for t in 1..=w.max(1) {
        for bw in 0..=w {
            let bases: Vec<Partition> =
                enumerate(bw as u64, &ConstraintSpec::partitions().parts(t).nonnegative()).map(|p| p.underlying()).collect();
            for mw in 0..=w - bw {
                let marks = distinct_below(mw as u64, t as u32, Parity::Any);
                for base in &bases {
                    for m in &marks {
                        let img = js_map(base, m).map_err(|e| Failure::from(e).with(format!("{base} {m}")))?;
                        ensure(js_inverse(&img).ok() == Some((base.clone(), m.clone())), || {
                            Failure::new("inverse(map(base, marks)) differs").with(format!("{base} {m}"))
                        })?;
                        pairs += 1;
                    }
                }
            }
            for p in enumerate(bw as u64, &ConstraintSpec::overpartitions().parts(t).nonnegative()) {
                let (base, marks) = js_inverse(&p).map_err(|e| Failure::from(e).with(&p))?;
                ensure(js_map(&base, &marks).ok().as_ref() == Some(&p), || Failure::new("map(inverse(p)) != p").with(&p))?;
            }
        }
    }
    Ok(Some(format!("{pairs} pairs of total weight <= {w}")))
}

/// The same for the parity variant: even bases, distinct odd marks `2s + 1`
/// with `s < t`, images with no repeated odd part.
fn js2_round_trips(w: usize) -> Outcome {
    let mut pairs = 0usize;
    for t in 1..=w.max(1) {
        for bw in 0..=w {
            let bases: Vec<Partition> =
                enumerate(bw as u64, &ConstraintSpec::partitions().parts(t).nonnegative().parity(Parity::AllEven))
                    .map(|p| p.underlying())
                    .collect();
            for mw in 0..=w - bw {
                let marks = distinct_below(mw as u64, 2 * t as u32, Parity::AllOdd);
                for base in &bases {
                    for m in &marks {
                        let img = js2_map(base, m).map_err(|e| Failure::from(e).with(format!("{base} {m}")))?;
                        ensure(js2_inverse(&img).ok() == Some((base.clone(), m.clone())), || {
                            Failure::new("inverse(map(base, marks)) differs").with(format!("{base} {m}"))
                        })?;
                        pairs += 1;
                    }
                }
            }
            let spec = ConstraintSpec::partitions().parts(t).nonnegative().parity(Parity::OddDistinct);
            for p in enumerate(bw as u64, &spec) {
                let p = p.underlying();
                let (base, marks) = js2_inverse(&p).map_err(|e| Failure::from(e).with(&p))?;
                ensure(js2_map(&base, &marks).ok().as_ref() == Some(&p), || Failure::new("map(inverse(p)) != p").with(&p))?;
            }
        }
    }
    Ok(Some(format!("{pairs} pairs of total weight <= {w}")))
}

/// Distinct nonnegative parts below `bound` of weight `w` with the parity
/// restriction, including the lone part 0 when allowed.
fn distinct_below(w: u64, bound: u32, parity: Parity) -> Vec<Partition> {
    let max_parts = bound as usize;
    (0..=max_parts)
        .flat_map(|len| {
            let spec = ConstraintSpec::partitions().parts(len).nonnegative().distinct().parity(parity);
            enumerate(w, &spec).map(|p| p.underlying()).filter(|p| p.largest() < bound || p.is_empty()).collect::<Vec<_>>()
        })
        .collect()
}

/// Objects counted by a bracket lemma, with their rank.
fn lemma_objects(which: BracketLemma, s: usize, t: usize, n: u64) -> Result<Vec<(Overpartition, i64)>> {
    use crate::enumerate::BracketKind;
    let (spec, bracket, rank): (ConstraintSpec, BracketKind, fn(&Overpartition) -> Result<i64>) = match which {
        BracketLemma::InitRun => (ConstraintSpec::partitions().parts(t).distinct(), BracketKind::Bracket, |p| {
            stats::dyson_rank(&p.underlying())
        }),
        BracketLemma::OverRun => (ConstraintSpec::overpartitions().parts(t).nonnegative(), BracketKind::OverBracketJs, |p| {
            Ok(stats::cl_rank(p)? + 1)
        }),
        BracketLemma::Frob2A => (
            ConstraintSpec::partitions().parts(t).nonnegative().parity(Parity::OddDistinct),
            BracketKind::SecondBracketJs,
            |p| stats::second_rank(&p.underlying()),
        ),
        BracketLemma::Frob2B => (
            ConstraintSpec::overpartitions().parts(t).parity(Parity::AllOdd),
            BracketKind::SecondOverBracketJs,
            stats::second_over_rank,
        ),
    };
    enumerate(n, &spec)
        .filter(|p| bracket.eval(p).unwrap_or(0) >= s)
        .map(|p| rank(&p).map(|m| (p, m)))
        .collect()
}

/// Coefficients of a lemma product against the constrained enumeration, for
/// the given `(s, t)` or every `1 <= s <= t <= 3`.
pub fn bracket_lemma(which: BracketLemma, s: Option<usize>, t: Option<usize>, order: usize) -> SuiteReport {
    let cases: Vec<(usize, usize)> = match (s, t) {
        (Some(s), Some(t)) => vec![(s, t)],
        (Some(s), None) => (s.max(1)..=3.max(s)).map(|t| (s, t)).collect(),
        (None, Some(t)) => (1..=t).map(|s| (s, t)).collect(),
        (None, None) => (1..=3).flat_map(|t| (1..=t).map(move |s| (s, t))).collect(),
    };
    let mut params = vec![("N", order as i64)];
    if let Some(s) = s {
        params.push(("s", s as i64));
    }
    if let Some(t) = t {
        params.push(("t", t as i64));
    }
    let mut r = SuiteReport::new(which.name(), &params);
    for (s, t) in cases {
        let outcome = (|| -> Outcome {
            let series = lemma_product(which, s, t, order)?;
            for n in 0..=order {
                let objs = lemma_objects(which, s, t, n as u64)?;
                let items: Vec<String> = objs.iter().map(|(p, _)| p.to_string()).collect();
                let mut counts = Histogram::new();
                let mut witness = BTreeMap::new();
                for ((_, m), text) in objs.iter().zip(items) {
                    *counts.entry(*m).or_insert(0) += 1;
                    witness.entry(*m).or_insert(text);
                }
                compare_counts(n, &counts, &series.coeff(n), &witness)?;
            }
            Ok(Some(format!("n <= {order}")))
        })();
        r.add(format!("s={s},t={t}"), outcome);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        for kind in [RankKind::Dyson, RankKind::M2, RankKind::F1, RankKind::F2] {
            let r = rank_series(kind, 6);
            assert!(r.passed, "{r:#?}");
        }
        let r = bijections(5, 6);
        assert!(r.passed, "{r:#?}");
        for l in BracketLemma::ALL {
            let r = bracket_lemma(l, None, None, 7);
            assert!(r.passed, "{r:#?}");
        }
    }

    #[test]
    fn marks_below_bound() {
        let m = distinct_below(3, 3, Parity::Any);
        let text: Vec<String> = m.iter().map(|p| p.to_string()).collect();
        assert_eq!(text, vec!["[2,1]", "[2,1,0]"]);
        assert_eq!(distinct_below(0, 2, Parity::Any).len(), 2);
    }
}
