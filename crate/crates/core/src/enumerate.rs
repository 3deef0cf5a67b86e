//! Constrained enumeration of partitions and overpartitions of a fixed weight.

use crate::partition::{Overpartition, Part};
use crate::stats;

/// Parity restrictions on the part values.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Parity {
    #[default]
    Any,
    AllOdd,
    AllEven,
    OddDistinct,
    EvenDistinct,
}

/// Bracket statistics usable as a lower bound in a [`ConstraintSpec`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BracketKind {
    Bracket,
    OverBracket,
    OverBracketJs,
    SecondBracket,
    SecondBracketJs,
    SecondOverBracket,
    SecondOverBracketJs,
}

impl BracketKind {
    /// Evaluates the bracket; `None` when it is undefined on `p`.
    pub fn eval(self, p: &Overpartition) -> Option<usize> {
        let plain = || p.as_partition();
        match self {
            BracketKind::Bracket => stats::bracket(&plain()?).ok(),
            BracketKind::OverBracket => stats::over_bracket(p).ok(),
            BracketKind::OverBracketJs => stats::over_bracket_js(p).ok(),
            BracketKind::SecondBracket => stats::second_bracket(&plain()?).ok(),
            BracketKind::SecondBracketJs => stats::second_bracket_js(&plain()?).ok(),
            BracketKind::SecondOverBracket => stats::second_over_bracket(p).ok(),
            BracketKind::SecondOverBracketJs => stats::second_over_bracket_js(p).ok(),
        }
    }
}

/// Restrictions on the enumerated objects.
///
/// Zero parts are only produced when `num_parts` is fixed and `allow_zero`
/// is set; the objects are then padded to exactly that many parts.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConstraintSpec {
    pub num_parts: Option<usize>,
    pub allow_zero: bool,
    pub distinct: bool,
    pub parity: Parity,
    pub overlines: bool,
    pub min_largest_multiplicity: usize,
    pub min_bracket: Option<(BracketKind, usize)>,
}

impl ConstraintSpec {
    pub fn partitions() -> Self {
        ConstraintSpec::default()
    }

    pub fn overpartitions() -> Self {
        ConstraintSpec { overlines: true, ..Default::default() }
    }

    pub fn parts(mut self, t: usize) -> Self {
        self.num_parts = Some(t);
        self
    }

    pub fn nonnegative(mut self) -> Self {
        self.allow_zero = true;
        self
    }

    pub fn distinct(mut self) -> Self {
        self.distinct = true;
        self
    }

    pub fn parity(mut self, parity: Parity) -> Self {
        self.parity = parity;
        self
    }

    pub fn min_largest_multiplicity(mut self, m: usize) -> Self {
        self.min_largest_multiplicity = m;
        self
    }

    pub fn min_bracket(mut self, kind: BracketKind, at_least: usize) -> Self {
        self.min_bracket = Some((kind, at_least));
        self
    }

    /// Whether `p` satisfies every constraint, checked directly.
    pub fn accepts(&self, p: &Overpartition) -> bool {
        let values: Vec<u32> = p.values().collect();
        if let Some(t) = self.num_parts {
            if values.len() != t {
                return false;
            }
        }
        let zeros_ok = self.allow_zero && self.num_parts.is_some();
        if !zeros_ok && values.contains(&0) {
            return false;
        }
        if !self.overlines && p.num_overlined() > 0 {
            return false;
        }
        let repeated = |pred: fn(u32) -> bool| values.windows(2).any(|w| w[0] == w[1] && pred(w[0]));
        if self.distinct && repeated(|_| true) {
            return false;
        }
        let parity_ok = match self.parity {
            Parity::Any => true,
            Parity::AllOdd => values.iter().all(|v| v % 2 == 1),
            Parity::AllEven => values.iter().all(|v| v % 2 == 0),
            Parity::OddDistinct => !repeated(|v| v % 2 == 1),
            Parity::EvenDistinct => !repeated(|v| v % 2 == 0),
        };
        if !parity_ok || p.largest_multiplicity() < self.min_largest_multiplicity {
            return false;
        }
        match self.min_bracket {
            Some((kind, at_least)) if at_least > 0 => kind.eval(p).is_some_and(|b| b >= at_least),
            _ => true,
        }
    }

    fn value_allowed(&self, v: u32) -> bool {
        match self.parity {
            Parity::AllOdd => v % 2 == 1,
            Parity::AllEven => v % 2 == 0,
            _ => true,
        }
    }

    fn may_repeat(&self, v: u32) -> bool {
        !self.distinct
            && match self.parity {
                Parity::OddDistinct => v % 2 == 0,
                Parity::EvenDistinct => v % 2 == 1,
                _ => true,
            }
    }
}

/// All objects of weight `n` satisfying `spec`, each exactly once.
///
/// Objects come in reverse lexicographic order of their values (largest
/// parts first); the overline choices of one value list come plain first,
/// then by the set of overlined values read from the largest value down.
pub fn enumerate(n: u64, spec: &ConstraintSpec) -> impl Iterator<Item = Overpartition> {
    let mut values = Vec::new();
    let mut out = Vec::new();
    let zeros_ok = spec.allow_zero && spec.num_parts.is_some();
    let slots = spec.num_parts;
    fill(n, n as i64, slots, zeros_ok, spec, &mut values, &mut out);
    out.into_iter()
}

fn fill(
    remaining: u64,
    max: i64,
    slots: Option<usize>,
    zeros_ok: bool,
    spec: &ConstraintSpec,
    values: &mut Vec<u32>,
    out: &mut Vec<Overpartition>,
) {
    match slots {
        Some(0) => {
            if remaining == 0 {
                emit(values, spec, out);
            }
            return;
        }
        None if remaining == 0 => {
            emit(values, spec, out);
            return;
        }
        _ => {}
    }
    if let Some(s) = slots {
        if remaining as i64 > s as i64 * max.max(0) {
            return;
        }
    }
    let low = if zeros_ok { 0 } else { 1 };
    let top = max.min(remaining as i64);
    for v in (low..=top).rev() {
        let v = v as u32;
        if !spec.value_allowed(v) {
            continue;
        }
        let next_max = if spec.may_repeat(v) { v as i64 } else { v as i64 - 1 };
        values.push(v);
        fill(remaining - v as u64, next_max, slots.map(|s| s - 1), zeros_ok, spec, values, out);
        values.pop();
    }
}

fn emit(values: &[u32], spec: &ConstraintSpec, out: &mut Vec<Overpartition>) {
    let mut distinct: Vec<u32> = values.to_vec();
    distinct.dedup();
    let choices: u64 = if spec.overlines { 1 << distinct.len() } else { 1 };
    for mask in 0..choices {
        let mut parts = Vec::with_capacity(values.len());
        let mut prev = None;
        for &v in values {
            let idx = distinct.iter().position(|&d| d == v).expect("value present");
            let bit = (mask >> (distinct.len() - 1 - idx)) & 1 == 1;
            parts.push(Part { value: v, overlined: bit && prev != Some(v) });
            prev = Some(v);
        }
        let p = Overpartition::new(parts).expect("canonical by construction");
        if spec.accepts(&p) {
            out.push(p);
        }
    }
}

/// All overpartitions of `n` into positive parts.
pub fn overpartitions(n: u64) -> impl Iterator<Item = Overpartition> {
    enumerate(n, &ConstraintSpec::overpartitions())
}

/// All partitions of `n` into positive parts.
pub fn partitions(n: u64) -> impl Iterator<Item = crate::partition::Partition> {
    enumerate(n, &ConstraintSpec::partitions()).map(|p| p.underlying())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(overpartitions(4).count(), 14);
        assert_eq!(overpartitions(0).collect::<Vec<_>>(), vec![Overpartition::empty()]);
        let distinct: Vec<String> =
            enumerate(5, &ConstraintSpec::partitions().distinct()).map(|p| p.to_string()).collect();
        assert_eq!(distinct, vec!["[5]", "[4,1]", "[3,2]"]);
        let pbar: Vec<usize> = (0..=8).map(|n| overpartitions(n).count()).collect();
        assert_eq!(pbar, vec![1, 2, 4, 8, 14, 24, 40, 64, 100]);
    }

    #[test]
    fn padded_objects() {
        let spec = ConstraintSpec::overpartitions().parts(2).nonnegative();
        let got: Vec<String> = enumerate(1, &spec).map(|p| p.to_string()).collect();
        assert_eq!(got, vec!["[1,0]", "[1,0~]", "[1~,0]", "[1~,0~]"]);
    }

    #[test]
    fn contradictory_constraints_are_empty() {
        let spec = ConstraintSpec::partitions().parts(2).parity(Parity::AllOdd);
        assert_eq!(enumerate(3, &spec).count(), 0);
    }
}
