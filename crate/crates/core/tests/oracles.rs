//! Library results against brute-force computations written independently
//! of the library's enumerators and series kernel.

use std::collections::{BTreeMap, BTreeSet};

use bufrob_core::buffered::{enumerate_reps, enumerate_reps_reference, rank_vector, BufferedRep, Column, RepKind};
use bufrob_core::enumerate::overpartitions;
use bufrob_core::frobenius::{enumerate_symbols, FrobeniusKind};
use bufrob_core::qseries::{build_rk, mk_slice, rhs_firsthype, z_coeff, Poly, Ring};
use bufrob_core::verify::{battery, to_json};
use bufrob_core::Overpartition;

/// Partitions of `n` as nonincreasing vectors, by plain recursion.
fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for v in (1..=n.min(max)).rev() {
            prefix.push(v);
            go(n - v, v, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Every overpartition of `n` as `(value, overlined)` lists.
fn naive_overpartitions(n: u32) -> Vec<Vec<(u32, bool)>> {
    let mut out = Vec::new();
    for p in partitions(n) {
        let distinct: Vec<u32> = p.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
        for mask in 0u32..(1 << distinct.len()) {
            let over: BTreeSet<u32> =
                distinct.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect();
            let mut seen = BTreeSet::new();
            out.push(p.iter().map(|&v| (v, over.contains(&v) && seen.insert(v))).collect());
        }
    }
    out
}

/// Coefficients of `prod (1 + q^n) / (1 - q^n)` by schoolbook arithmetic.
fn pbar(order: usize) -> Vec<i64> {
    let mut c = vec![0i64; order + 1];
    c[0] = 1;
    for n in 1..=order {
        for i in (n..=order).rev() {
            c[i] += c[i - n];
        }
        for i in n..=order {
            c[i] += c[i - n];
        }
    }
    c
}

#[test]
fn overpartition_counts() {
    let expected = pbar(15);
    assert_eq!(&expected[..5], &[1, 2, 4, 8, 14]);
    for n in 0..=15u32 {
        let naive = naive_overpartitions(n).len() as i64;
        assert_eq!(naive, expected[n as usize], "n={n}");
        assert_eq!(overpartitions(n as u64).count() as i64, naive, "n={n}");
    }
}

fn dyson(p: &[(u32, bool)]) -> i64 {
    p.first().map_or(0, |&(l, _)| l as i64 - p.len() as i64)
}

fn m2(p: &[(u32, bool)]) -> i64 {
    let Some(&(l, first_over)) = p.first() else { return 0 };
    let plain_odd = p.iter().filter(|&&(v, o)| !o && v % 2 == 1).count() as i64;
    let chi = i64::from(l % 2 == 1 && !first_over);
    (l as i64 + 1) / 2 - p.len() as i64 + plain_odd - chi
}

fn rank_counts(order: usize, rank: fn(&[(u32, bool)]) -> i64) -> Vec<BTreeMap<i64, i64>> {
    (0..=order as u32)
        .map(|n| {
            let mut h = BTreeMap::new();
            for p in naive_overpartitions(n) {
                *h.entry(rank(&p)).or_insert(0) += 1;
            }
            h
        })
        .collect()
}

fn series_counts(k: usize, order: usize) -> Vec<BTreeMap<i64, i64>> {
    let s = build_rk(k, order);
    (0..=order)
        .map(|n| s.coeff(n).terms().map(|(e, &c)| (e.first().copied().unwrap_or(0) as i64, c)).collect())
        .collect()
}

#[test]
fn rank_series_against_brute_force() {
    assert_eq!(rank_counts(10, dyson), series_counts(1, 10));
    assert_eq!(rank_counts(10, m2), series_counts(2, 10));
}

#[test]
fn slices_against_brute_force() {
    let counts = rank_counts(10, dyson);
    for m in [-2i64, -1, 1, 2] {
        let slice = mk_slice(1, m, 10).unwrap();
        for (n, h) in counts.iter().enumerate() {
            assert_eq!(slice.coeff(n), h.get(&m).copied().unwrap_or(0), "n={n} m={m}");
        }
    }
    let r2 = build_rk(2, 10);
    for m in [1i64, 2] {
        assert_eq!(mk_slice(2, m, 10).unwrap(), z_coeff(&r2, m));
    }
}

fn texts(reps: &[BufferedRep]) -> Vec<String> {
    let mut v: Vec<String> = reps.iter().map(|r| r.to_string()).collect();
    v.sort();
    v
}

#[test]
fn production_enumerator_matches_reference() {
    for kind in [RepKind::B1, RepKind::B2] {
        for n in 0..=6 {
            let fast = enumerate_reps(n, 3, kind).unwrap();
            let slow = enumerate_reps_reference(n, 3, kind);
            assert_eq!(texts(&fast), texts(&slow), "{kind:?} n={n}");
            let unique: BTreeSet<String> = texts(&fast).into_iter().collect();
            assert_eq!(unique.len(), fast.len(), "{kind:?} n={n} has duplicates");
        }
    }
}

#[test]
fn single_column_reps_are_symbols() {
    for (kind, fk) in [(RepKind::B1, FrobeniusKind::First), (RepKind::B2, FrobeniusKind::Second)] {
        for n in 0..=8u64 {
            let reps = enumerate_reps(n, 1, kind).unwrap();
            let symbols = enumerate_symbols(n, fk);
            assert_eq!(reps.len(), symbols.len());
            assert!(reps.iter().all(|v| v.hat_count() == 0));
            let cols: BTreeSet<(String, String)> = reps
                .iter()
                .map(|v| v.columns.first().map(|c| (c.top.to_string(), c.bottom.to_string())).unwrap_or_default())
                .collect();
            let syms: BTreeSet<(String, String)> =
                symbols.iter().map(|s| if s.width() == 0 { Default::default() } else { (s.top.to_string(), s.bottom.to_string()) }).collect();
            assert_eq!(cols, syms);
        }
    }
}

#[test]
fn weighted_count_at_weight_three() {
    let mut poly = Poly::zero();
    for v in enumerate_reps(3, 2, RepKind::B1).unwrap() {
        let r = rank_vector(&v).unwrap();
        let sign = if v.hat_count() % 2 == 0 { 1 } else { -1 };
        poly.add_term(vec![r.component(1) as i32, r.component(2) as i32], &sign);
    }
    assert_eq!(poly, rhs_firsthype(2, 3).coeff(3));
}

#[test]
fn hat_states_weigh_two_minus_x_minus_inverse() {
    let over = |s: &str| s.parse::<Overpartition>().unwrap();
    let mut weights = BTreeMap::new();
    for (top, bottom) in [(false, false), (true, false), (false, true), (true, true)] {
        let first = Column::new(over("[2,1]"), over("[1,0]")).with_hats(top, bottom);
        let v = BufferedRep::new(RepKind::B1, vec![first, Column::new(over("[1]"), over("[0]"))]);
        let sign = if v.hat_count() % 2 == 0 { 1 } else { -1 };
        *weights.entry(v.chi(1)).or_insert(0) += sign;
    }
    assert_eq!(weights, BTreeMap::from([(-1, -1), (0, 2), (1, -1)]));
}

#[test]
fn battery_is_deterministic() {
    let a = battery();
    assert!(a.iter().all(|r| r.passed), "{}", bufrob_core::verify::to_table(&a, false));
    assert_eq!(to_json(&a), to_json(&battery()));
}
