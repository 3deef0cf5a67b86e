//! Lovejoy's bijections between overpartitions and Frobenius symbols.

use serde::Serialize;

use super::{FrobeniusKind, FrobeniusSymbol};
use crate::error::{precondition, Error, Result};
use crate::partition::{Overpartition, Part, Partition};

/// State after one column of the first-kind map has been consumed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct F1Step {
    pub alpha: Vec<u32>,
    pub beta: Vec<Part>,
    pub lambda1: Vec<u32>,
    pub lambda2: Vec<u32>,
}

/// Maps a first-kind symbol to an overpartition of the same weight.
pub fn f1_to_overpartition(s: &FrobeniusSymbol) -> Result<Overpartition> {
    f1_to_overpartition_traced(s).map(|(p, _)| p)
}

/// As [`f1_to_overpartition`], also returning the state before the first
/// column and after each column.
///
/// Columns are consumed right to left. For a column `(a, b)` the running
/// plain partition is padded with zeros to `b` parts and every part grows by
/// one; `a` then joins the plain partition when `b` is overlined and the pool
/// of overlined parts otherwise.
pub fn f1_to_overpartition_traced(s: &FrobeniusSymbol) -> Result<(Overpartition, Vec<F1Step>)> {
    s.require_valid(FrobeniusKind::First, "f1_to_overpartition")?;
    let top: Vec<u32> = s.top.values().collect();
    let bottom = s.bottom.parts().to_vec();
    let mut lambda1: Vec<u32> = Vec::new();
    let mut lambda2: Vec<u32> = Vec::new();
    let snapshot = |k: usize, l1: &[u32], l2: &[u32]| F1Step {
        alpha: top[..k].to_vec(),
        beta: bottom[..k].to_vec(),
        lambda1: l1.to_vec(),
        lambda2: l2.to_vec(),
    };
    let mut steps = vec![snapshot(top.len(), &lambda1, &lambda2)];
    for i in (0..top.len()).rev() {
        let b = bottom[i];
        if lambda1.len() > b.value as usize {
            return Err(precondition(
                "f1_to_overpartition",
                format!("running partition has {} parts but the column asks for {}", lambda1.len(), b.value),
            ));
        }
        lambda1.resize(b.value as usize, 0);
        lambda1.iter_mut().for_each(|x| *x += 1);
        if b.overlined {
            lambda1.push(top[i]);
            lambda1.sort_unstable_by(|x, y| y.cmp(x));
        } else {
            lambda2.push(top[i]);
            lambda2.sort_unstable_by(|x, y| y.cmp(x));
        }
        steps.push(snapshot(i, &lambda1, &lambda2));
    }
    let parts = lambda1
        .iter()
        .map(|&v| Part::plain(v))
        .chain(lambda2.iter().map(|&v| Part::over(v)))
        .collect();
    Ok((Overpartition::from_unsorted(parts)?, steps))
}

/// The unique first-kind symbol mapping to `p`.
///
/// Undoes the columns from the left: for each column either `b` was plain,
/// in which case `a` is the largest overlined part, or `b` was overlined and
/// `a` is one of the plain parts. The number of remaining plain parts is `b`.
/// A depth-first search over these choices, pruned by the row constraints,
/// finds the preimage.
pub fn overpartition_to_f1(p: &Overpartition) -> Result<FrobeniusSymbol> {
    if !p.is_positive() {
        return Err(Error::Invalid(format!("{p} has zero parts")));
    }
    let plain: Vec<u32> = p.parts().iter().filter(|q| !q.overlined).map(|q| q.value).collect();
    let over: Vec<u32> = p.parts().iter().filter(|q| q.overlined).map(|q| q.value).collect();
    let mut columns = Vec::new();
    if undo_f1(&plain, &over, None, &mut columns) {
        let top = Overpartition::new(columns.iter().map(|c: &(u32, Part)| Part::plain(c.0)).collect())?;
        let bottom = Overpartition::new(columns.iter().map(|c| c.1).collect())?;
        Ok(FrobeniusSymbol::new(FrobeniusKind::First, top, bottom))
    } else {
        Err(Error::Invalid(format!("{p} has no first-kind preimage")))
    }
}

fn undo_f1(plain: &[u32], over: &[u32], prev: Option<(u32, Part)>, columns: &mut Vec<(u32, Part)>) -> bool {
    if plain.is_empty() && over.is_empty() {
        return true;
    }
    let below_prev_a = |a: u32| prev.is_none_or(|(pa, _)| a < pa);
    let fits_prev_b = |b: u32, overlined: bool| {
        prev.is_none_or(|(_, pb)| b < pb.value || (b == pb.value && !overlined))
    };
    let lowered = |rest: &[u32]| -> Vec<u32> { rest.iter().filter(|&&x| x > 1).map(|&x| x - 1).collect() };

    if let Some(&a) = over.first() {
        let b = plain.len() as u32;
        if below_prev_a(a) && fits_prev_b(b, false) {
            let col = (a, Part::plain(b));
            columns.push(col);
            if undo_f1(&lowered(plain), &over[1..], Some(col), columns) {
                return true;
            }
            columns.pop();
        }
    }
    let mut candidates: Vec<u32> = plain.to_vec();
    candidates.dedup();
    for a in candidates {
        if !below_prev_a(a) {
            continue;
        }
        let idx = plain.iter().position(|&x| x == a).expect("candidate present");
        let mut rest = plain.to_vec();
        rest.remove(idx);
        let b = rest.len() as u32;
        if !fits_prev_b(b, true) {
            continue;
        }
        let col = (a, Part::over(b));
        columns.push(col);
        if undo_f1(&lowered(&rest), over, Some(col), columns) {
            return true;
        }
        columns.pop();
    }
    false
}

/// State of the second-kind map after each of its four steps.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct F2Step {
    pub alpha: Vec<Part>,
    pub beta: Vec<i64>,
    pub lambda: Vec<Part>,
}

/// Maps a second-kind symbol to an overpartition of the same weight.
pub fn f2_to_overpartition(s: &FrobeniusSymbol) -> Result<Overpartition> {
    f2_to_overpartition_traced(s).map(|(p, _)| p)
}

/// As [`f2_to_overpartition`], also returning the state after each step.
///
/// 1. Start from the rows.
/// 2. For each odd `n` below the largest top part with no overlined `n` in
///    the top row, insert an overlined `n` there and append `-n` to the
///    bottom row.
/// 3. Reorder the bottom row: odd entries increasing, then even entries
///    decreasing.
/// 4. Add the rows columnwise. A column keeps the overline of its top entry
///    when the bottom entry is even and toggles it when odd.
pub fn f2_to_overpartition_traced(s: &FrobeniusSymbol) -> Result<(Overpartition, Vec<F2Step>)> {
    s.require_valid(FrobeniusKind::Second, "f2_to_overpartition")?;
    let mut alpha: Vec<Part> = s.top.parts().to_vec();
    let mut beta: Vec<i64> = s.bottom.values().map(i64::from).collect();
    let mut steps = vec![F2Step { alpha: alpha.clone(), beta: beta.clone(), lambda: Vec::new() }];

    let a1 = s.top.largest();
    for n in (1..a1).step_by(2) {
        if !alpha.contains(&Part::over(n)) {
            alpha.push(Part::over(n));
            beta.push(-(n as i64));
        }
    }
    alpha.sort_unstable();
    steps.push(F2Step { alpha: alpha.clone(), beta: beta.clone(), lambda: Vec::new() });

    let mut odd: Vec<i64> = beta.iter().copied().filter(|b| b.rem_euclid(2) == 1).collect();
    let mut even: Vec<i64> = beta.iter().copied().filter(|b| b.rem_euclid(2) == 0).collect();
    odd.sort_unstable();
    even.sort_unstable_by(|x, y| y.cmp(x));
    beta = odd.into_iter().chain(even).collect();
    steps.push(F2Step { alpha: alpha.clone(), beta: beta.clone(), lambda: Vec::new() });

    let mut parts = Vec::with_capacity(alpha.len());
    for (a, &b) in alpha.iter().zip(&beta) {
        let value = a.value as i64 + b;
        if value <= 0 {
            return Err(Error::Invalid(format!("column ({a}, {b}) sums to the nonpositive part {value}")));
        }
        let overlined = if b.rem_euclid(2) == 0 { a.overlined } else { !a.overlined };
        parts.push(Part { value: value as u32, overlined });
    }
    let lambda = Overpartition::from_unsorted(parts)?;
    steps.push(F2Step { alpha: Vec::new(), beta: Vec::new(), lambda: lambda.parts().to_vec() });
    Ok((lambda, steps))
}

/// State of the dissection procedure inverting the second-kind map.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct F2InverseStep {
    pub over_even: Vec<u32>,
    pub even: Vec<u32>,
    pub over_odd: Vec<u32>,
    pub odd: Vec<u32>,
    pub a: u32,
    pub alpha: Vec<Part>,
    pub beta: Vec<i64>,
}

/// The unique second-kind symbol mapping to `p`.
pub fn overpartition_to_f2(p: &Overpartition) -> Result<FrobeniusSymbol> {
    overpartition_to_f2_traced(p).map(|(s, _)| s)
}

/// As [`overpartition_to_f2`], also returning the state after each step.
///
/// The parts are split into overlined even, plain even, overlined odd and
/// plain odd parts, and a counter `a` starts at 1. Odd parts are consumed
/// smallest first: a plain odd part no larger than the smallest overlined
/// odd part pairs with a plain `a`; otherwise the smallest overlined odd part
/// pairs with an overlined `a` and `a` grows by 2. Even parts are then
/// consumed largest first: a plain even part at least as large as the
/// largest overlined even part pairs with an overlined `a`, which grows by 2
/// afterwards; otherwise the largest overlined even part pairs with a plain
/// `a`. Each pairing appends `part - a` to the bottom row. Finally every
/// negative bottom entry `-n` is removed together with the top entry
/// overlined `n`.
pub fn overpartition_to_f2_traced(p: &Overpartition) -> Result<(FrobeniusSymbol, Vec<F2InverseStep>)> {
    if !p.is_positive() {
        return Err(Error::Invalid(format!("{p} has zero parts")));
    }
    let pick = |over: bool, odd: bool| -> Vec<u32> {
        p.parts()
            .iter()
            .filter(|q| q.overlined == over && (q.value % 2 == 1) == odd)
            .map(|q| q.value)
            .collect()
    };
    let (mut over_even, mut even, mut over_odd, mut odd) = (pick(true, false), pick(false, false), pick(true, true), pick(false, true));
    let mut a: u32 = 1;
    let mut alpha: Vec<Part> = Vec::new();
    let mut beta: Vec<i64> = Vec::new();
    let snapshot = |oe: &[u32], e: &[u32], oo: &[u32], o: &[u32], a: u32, alpha: &[Part], beta: &[i64]| {
        let mut al = alpha.to_vec();
        al.sort_unstable();
        F2InverseStep {
            over_even: oe.to_vec(),
            even: e.to_vec(),
            over_odd: oo.to_vec(),
            odd: o.to_vec(),
            a,
            alpha: al,
            beta: beta.to_vec(),
        }
    };
    let mut steps = vec![snapshot(&over_even, &even, &over_odd, &odd, a, &alpha, &beta)];

    // Part lists are nonincreasing, so the smallest part is the last one.
    while !odd.is_empty() || !over_odd.is_empty() {
        let plain_first = match (odd.last(), over_odd.last()) {
            (Some(&o), Some(&oo)) => o <= oo,
            (Some(_), None) => true,
            _ => false,
        };
        if plain_first {
            let v = odd.pop().expect("nonempty");
            alpha.push(Part::plain(a));
            beta.push(v as i64 - a as i64);
        } else {
            let v = over_odd.pop().expect("nonempty");
            alpha.push(Part::over(a));
            beta.push(v as i64 - a as i64);
            a += 2;
        }
        steps.push(snapshot(&over_even, &even, &over_odd, &odd, a, &alpha, &beta));
    }
    while !even.is_empty() || !over_even.is_empty() {
        let plain_first = match (even.first(), over_even.first()) {
            (Some(&e), Some(&oe)) => e >= oe,
            (Some(_), None) => true,
            _ => false,
        };
        if plain_first {
            let v = even.remove(0);
            alpha.push(Part::over(a));
            beta.push(v as i64 - a as i64);
            a += 2;
        } else {
            let v = over_even.remove(0);
            alpha.push(Part::plain(a));
            beta.push(v as i64 - a as i64);
        }
        steps.push(snapshot(&over_even, &even, &over_odd, &odd, a, &alpha, &beta));
    }
    let negatives: Vec<i64> = beta.iter().copied().filter(|&b| b < 0).collect();
    for b in negatives {
        let bi = beta.iter().position(|&x| x == b).expect("entry present");
        beta.remove(bi);
        let target = Part::over((-b) as u32);
        let ai = alpha
            .iter()
            .position(|&x| x == target)
            .ok_or_else(|| Error::Invalid(format!("{p}: no top entry {target} to cancel {b}")))?;
        alpha.remove(ai);
    }
    steps.push(snapshot(&over_even, &even, &over_odd, &odd, a, &alpha, &beta));

    let top = Overpartition::from_unsorted(alpha)?;
    let bottom_values = beta
        .iter()
        .map(|&b| u32::try_from(b).map_err(|_| Error::Invalid(format!("{p}: negative bottom entry {b}"))))
        .collect::<Result<Vec<u32>>>()?;
    let bottom = Partition::from_unsorted(bottom_values).to_overpartition();
    Ok((FrobeniusSymbol::new(FrobeniusKind::Second, top, bottom), steps))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn op(s: &str) -> Overpartition {
        s.parse().unwrap()
    }

    fn sym(s: &str) -> FrobeniusSymbol {
        s.parse().unwrap()
    }

    #[test]
    fn first_kind_example() {
        let s = sym("F1:[3,2,1;4~,4,3~]");
        let (p, steps) = f1_to_overpartition_traced(&s).unwrap();
        assert_eq!(p, op("[3,3,3,3,3,2~]"));
        assert_eq!(steps.len(), 4);
        assert_eq!(steps[1].lambda1, vec![1, 1, 1, 1]);
        assert_eq!(steps[2].lambda2, vec![2]);
        assert_eq!(overpartition_to_f1(&p).unwrap(), s);
        assert_eq!(f1_to_overpartition(&sym("F1:[1;0]")).unwrap(), op("[1~]"));
        assert_eq!(f1_to_overpartition(&sym("F1:[1;0~]")).unwrap(), op("[1]"));
        assert_eq!(overpartition_to_f1(&Overpartition::empty()).unwrap(), FrobeniusSymbol::empty(FrobeniusKind::First));
    }

    #[test]
    fn second_kind_example() {
        let s = sym("F2:[5,1~;6,5]");
        let (p, steps) = f2_to_overpartition_traced(&s).unwrap();
        assert_eq!(p, op("[8,7~,2~]"));
        assert_eq!(steps[1].beta, vec![6, 5, -3]);
        assert_eq!(steps[2].beta, vec![-3, 5, 6]);
        let (back, inv) = overpartition_to_f2_traced(&p).unwrap();
        assert_eq!(back, s);
        let a: Vec<u32> = inv.iter().map(|r| r.a).collect();
        assert_eq!(a, vec![1, 3, 5, 5, 5]);
        assert_eq!(inv[3].beta, vec![6, 5, -3]);
        assert_eq!(f2_to_overpartition(&sym("F2:[1~;0]")).unwrap(), op("[1~]"));
        let w5 = f2_to_overpartition(&sym("F2:[3;2]")).unwrap();
        assert_eq!(w5.weight(), 5);
        assert_eq!(overpartition_to_f2(&w5).unwrap(), sym("F2:[3;2]"));
    }
}
