//! Enumeration of buffered representations of a fixed weight.

use std::collections::HashMap;

use super::{BufferedRep, Column, RepKind};
use crate::enumerate::{enumerate, BracketKind, ConstraintSpec, Parity};
use crate::error::{precondition, Result};
use crate::partition::Overpartition;

const HAT_STATES: [(bool, bool); 4] = [(false, false), (true, false), (false, true), (true, true)];

/// Which entry of which column an entry list is for.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct Slot {
    first: bool,
    top: bool,
}

fn entry_spec(kind: RepKind, slot: Slot, t: usize) -> ConstraintSpec {
    match (kind, slot.first, slot.top) {
        (RepKind::B1, true, true) => ConstraintSpec::partitions().parts(t).distinct(),
        (RepKind::B1, true, false) => ConstraintSpec::overpartitions().parts(t).nonnegative(),
        (RepKind::B1, false, true) => ConstraintSpec::partitions().parts(t),
        (RepKind::B1, false, false) => ConstraintSpec::partitions().parts(t).nonnegative(),
        (_, true, true) => ConstraintSpec::overpartitions().parts(t).parity(Parity::AllOdd),
        (_, true, false) => ConstraintSpec::partitions().parts(t).nonnegative().parity(Parity::OddDistinct),
        (_, false, true) => ConstraintSpec::partitions().parts(t).parity(Parity::AllEven),
        (_, false, false) => ConstraintSpec::partitions().parts(t).nonnegative().parity(Parity::AllEven),
    }
}

/// Largest admissible length of the column after `c`.
fn next_bound(kind: RepKind, first: bool, c: &Column) -> usize {
    if first {
        let (bt, bb) = match kind {
            RepKind::B1 => (BracketKind::Bracket, BracketKind::OverBracketJs),
            _ => (BracketKind::SecondOverBracketJs, BracketKind::SecondBracketJs),
        };
        bt.eval(&c.top).unwrap_or(0).min(bb.eval(&c.bottom).unwrap_or(0))
    } else {
        c.top.largest_multiplicity().min(c.bottom.largest_multiplicity())
    }
}

struct Builder {
    kind: RepKind,
    k_max: usize,
    cache: HashMap<(Slot, usize, u64), Vec<Overpartition>>,
    out: Vec<BufferedRep>,
}

impl Builder {
    fn entries(&mut self, slot: Slot, t: usize, w: u64) -> Vec<Overpartition> {
        let kind = self.kind;
        self.cache
            .entry((slot, t, w))
            .or_insert_with(|| enumerate(w, &entry_spec(kind, slot, t)).collect())
            .clone()
    }

    fn extend(&mut self, remaining: u64, bound: usize, cols: &mut Vec<Column>) {
        if remaining == 0 {
            self.emit(cols);
        }
        if cols.len() == self.k_max {
            return;
        }
        let first = cols.is_empty();
        for t in 1..=bound {
            for wt in 0..=remaining {
                let tops = self.entries(Slot { first, top: true }, t, wt);
                if tops.is_empty() {
                    continue;
                }
                for wb in 0..=remaining - wt {
                    let bottoms = self.entries(Slot { first, top: false }, t, wb);
                    for top in &tops {
                        for bottom in &bottoms {
                            let c = Column::new(top.clone(), bottom.clone());
                            let next = next_bound(self.kind, first, &c);
                            cols.push(c);
                            self.extend(remaining - wt - wb, next, cols);
                            cols.pop();
                        }
                    }
                }
            }
        }
    }

    fn emit(&mut self, cols: &[Column]) {
        let hatted = cols.len().saturating_sub(1);
        let combos = 4usize.pow(hatted as u32);
        for code in 0..combos {
            let mut columns = cols.to_vec();
            for (j, c) in columns.iter_mut().take(hatted).enumerate() {
                let state = HAT_STATES[(code / 4usize.pow((hatted - 1 - j) as u32)) % 4];
                c.top_hat = state.0;
                c.bottom_hat = state.1;
            }
            self.out.push(BufferedRep::new(self.kind, columns));
        }
    }
}

/// Every valid first- or second-kind representation of weight `n` with at
/// most `k_max` columns, over all hat assignments, each exactly once.
pub fn enumerate_reps(n: u64, k_max: usize, kind: RepKind) -> Result<Vec<BufferedRep>> {
    if kind == RepKind::Generic {
        return Err(precondition("enumerate_reps", "only B1 and B2 representations are enumerated"));
    }
    let mut b = Builder { kind, k_max, cache: HashMap::new(), out: Vec::new() };
    b.extend(n, n as usize, &mut Vec::new());
    Ok(b.out)
}

/// Slow reference enumerator: all generically shaped representations with
/// arbitrary entries, filtered by the validity check.
pub fn enumerate_reps_reference(n: u64, k_max: usize, kind: RepKind) -> Vec<BufferedRep> {
    let mut out = Vec::new();
    let mut cols = Vec::new();
    reference_extend(n, k_max, kind, n as usize, &mut cols, &mut out);
    out
}

fn reference_extend(
    remaining: u64,
    k_max: usize,
    kind: RepKind,
    bound: usize,
    cols: &mut Vec<Column>,
    out: &mut Vec<BufferedRep>,
) {
    if remaining == 0 {
        let hatted = cols.len().saturating_sub(1);
        let mut assign = vec![0usize; hatted];
        loop {
            let mut columns = cols.clone();
            for (c, &s) in columns.iter_mut().zip(&assign) {
                (c.top_hat, c.bottom_hat) = HAT_STATES[s];
            }
            let rep = BufferedRep::new(kind, columns);
            if rep.is_valid() {
                out.push(rep);
            }
            let Some(pos) = assign.iter().rposition(|&s| s < 3) else { break };
            assign[pos] += 1;
            assign[pos + 1..].iter_mut().for_each(|s| *s = 0);
        }
    }
    if cols.len() == k_max {
        return;
    }
    let first = cols.is_empty();
    for t in 1..=bound {
        for wt in 0..=remaining {
            let spec = if first {
                ConstraintSpec::overpartitions().parts(t).nonnegative()
            } else {
                ConstraintSpec::partitions().parts(t).nonnegative()
            };
            let tops: Vec<Overpartition> = enumerate(wt, &spec).collect();
            for wb in 0..=remaining - wt {
                let bottoms: Vec<Overpartition> = enumerate(wb, &spec).collect();
                for top in &tops {
                    for bottom in &bottoms {
                        cols.push(Column::new(top.clone(), bottom.clone()));
                        reference_extend(remaining - wt - wb, k_max, kind, t, cols, out);
                        cols.pop();
                    }
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_zero_is_the_empty_rep() {
        assert_eq!(enumerate_reps(0, 3, RepKind::B1).unwrap(), vec![BufferedRep::empty(RepKind::B1)]);
        assert_eq!(enumerate_reps(0, 3, RepKind::B2).unwrap(), vec![BufferedRep::empty(RepKind::B2)]);
    }

    #[test]
    fn single_column_counts() {
        let counts: Vec<usize> = (0..=5).map(|n| enumerate_reps(n, 1, RepKind::B1).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 8, 14, 24]);
    }

    #[test]
    fn production_matches_reference() {
        for kind in [RepKind::B1, RepKind::B2] {
            for n in 0..=4 {
                let mut a: Vec<String> = enumerate_reps(n, 3, kind).unwrap().iter().map(|r| r.to_string()).collect();
                let mut b: Vec<String> = enumerate_reps_reference(n, 3, kind).iter().map(|r| r.to_string()).collect();
                a.sort();
                b.sort();
                assert_eq!(a, b, "{kind:?} n={n}");
            }
        }
    }
}
