//! Generalized Frobenius symbols of the first and second kind and the
//! bijections between them and overpartitions.
//!
//! A first-kind symbol has a top row of distinct positive parts and a bottom
//! row that is an overpartition into nonnegative parts. A second-kind symbol
//! has a top row that is an overpartition into odd parts and a bottom row of
//! nonnegative parts with no repeated odd part. Both rows have equal length.
//!
//! Text form: `kind:F1 [3,2,1 ; 4~,4,3~]`. The parser also accepts the short
//! form `F1:[3,2,1;4~,4,3~]`.

mod joichi_stanton;
mod lovejoy;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

pub use joichi_stanton::{
    js2_inverse, js2_map, js_inverse, js_inverse_step, js_map, js_map_step, js_map_traced, JsStep,
};
pub use lovejoy::{
    f1_to_overpartition, f1_to_overpartition_traced, f2_to_overpartition, f2_to_overpartition_traced,
    overpartition_to_f1, overpartition_to_f2, overpartition_to_f2_traced, F1Step, F2InverseStep, F2Step,
};

use crate::enumerate::{enumerate, ConstraintSpec, Parity};
use crate::error::{Error, Result};
use crate::partition::{parse_part_list, write_parts, Overpartition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FrobeniusKind {
    First,
    Second,
}

impl FrobeniusKind {
    pub fn tag(self) -> &'static str {
        match self {
            FrobeniusKind::First => "F1",
            FrobeniusKind::Second => "F2",
        }
    }
}

/// A two-rowed array of equal-length rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FrobeniusSymbol {
    pub kind: FrobeniusKind,
    pub top: Overpartition,
    pub bottom: Overpartition,
}

/// A violated row constraint.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SymbolViolation {
    RowLengthMismatch,
    TopNotDistinct,
    TopOverlined,
    TopNotPositive,
    TopNotOdd,
    BottomOverlined,
    BottomOddRepeated,
}

impl fmt::Display for SymbolViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SymbolViolation::RowLengthMismatch => "rows have different lengths",
            SymbolViolation::TopNotDistinct => "top row parts are not distinct",
            SymbolViolation::TopOverlined => "top row has overlined parts",
            SymbolViolation::TopNotPositive => "top row has a zero part",
            SymbolViolation::TopNotOdd => "top row has an even part",
            SymbolViolation::BottomOverlined => "bottom row has overlined parts",
            SymbolViolation::BottomOddRepeated => "bottom row repeats an odd part",
        })
    }
}

impl FrobeniusSymbol {
    pub fn new(kind: FrobeniusKind, top: Overpartition, bottom: Overpartition) -> Self {
        FrobeniusSymbol { kind, top, bottom }
    }

    pub fn empty(kind: FrobeniusKind) -> Self {
        FrobeniusSymbol::new(kind, Overpartition::empty(), Overpartition::empty())
    }

    pub fn width(&self) -> usize {
        self.top.len()
    }

    pub fn weight(&self) -> u64 {
        self.top.weight() + self.bottom.weight()
    }

    /// Every violated row constraint, in a fixed order.
    pub fn violations(&self) -> Vec<SymbolViolation> {
        let mut v = Vec::new();
        if self.top.len() != self.bottom.len() {
            v.push(SymbolViolation::RowLengthMismatch);
        }
        if !self.top.is_positive() {
            v.push(SymbolViolation::TopNotPositive);
        }
        match self.kind {
            FrobeniusKind::First => {
                if self.top.num_overlined() > 0 {
                    v.push(SymbolViolation::TopOverlined);
                }
                if !self.top.underlying().is_distinct() {
                    v.push(SymbolViolation::TopNotDistinct);
                }
            }
            FrobeniusKind::Second => {
                if self.top.values().any(|x| x % 2 == 0) {
                    v.push(SymbolViolation::TopNotOdd);
                }
                if self.bottom.num_overlined() > 0 {
                    v.push(SymbolViolation::BottomOverlined);
                }
                let b = self.bottom.underlying();
                if b.parts().windows(2).any(|w| w[0] == w[1] && w[0] % 2 == 1) {
                    v.push(SymbolViolation::BottomOddRepeated);
                }
            }
        }
        v
    }

    pub fn is_valid(&self) -> bool {
        self.violations().is_empty()
    }

    pub(crate) fn require_valid(&self, kind: FrobeniusKind, op: &'static str) -> Result<()> {
        if self.kind != kind {
            return Err(crate::error::precondition(op, format!("expected a {} symbol", kind.tag())));
        }
        let v = self.violations();
        if v.is_empty() {
            Ok(())
        } else {
            let msg: Vec<String> = v.iter().map(|x| x.to_string()).collect();
            Err(Error::Invalid(format!("{self}: {}", msg.join("; "))))
        }
    }
}

impl fmt::Display for FrobeniusSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "kind:{} [", self.kind.tag())?;
        write_parts(f, self.top.parts())?;
        f.write_str(" ; ")?;
        write_parts(f, self.bottom.parts())?;
        f.write_str("]")
    }
}

impl FromStr for FrobeniusSymbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t.strip_prefix("kind:").unwrap_or(t).trim_start();
        let (kind, rest) = if let Some(r) = t.strip_prefix("F1") {
            (FrobeniusKind::First, r)
        } else if let Some(r) = t.strip_prefix("F2") {
            (FrobeniusKind::Second, r)
        } else {
            return Err(Error::Parse(format!("`{s}` lacks an F1/F2 kind tag")));
        };
        let rest = rest.trim_start();
        let rest = rest.strip_prefix(':').unwrap_or(rest).trim();
        let body = rest
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("`{s}` rows must be enclosed in brackets")))?;
        let (top, bottom) = body
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("`{s}` rows must be separated by `;`")))?;
        let row = |r: &str| {
            Overpartition::new(parse_part_list(r)?).map_err(|e| Error::Parse(format!("`{s}`: {e}")))
        };
        Ok(FrobeniusSymbol::new(kind, row(top)?, row(bottom)?))
    }
}

fn row_key(p: &Overpartition) -> Vec<(u32, bool)> {
    p.parts().iter().map(|q| (q.value, q.overlined)).collect()
}

/// All valid symbols of weight `n`, ordered by width, then top row, then
/// bottom row.
pub fn enumerate_symbols(n: u64, kind: FrobeniusKind) -> Vec<FrobeniusSymbol> {
    let mut out = Vec::new();
    for t in 0..=(n as usize) {
        for w in 0..=n {
            let (top_spec, bottom_spec) = match kind {
                FrobeniusKind::First => (
                    ConstraintSpec::partitions().parts(t).distinct(),
                    ConstraintSpec::overpartitions().parts(t).nonnegative(),
                ),
                FrobeniusKind::Second => (
                    ConstraintSpec::overpartitions().parts(t).parity(Parity::AllOdd),
                    ConstraintSpec::partitions().parts(t).nonnegative().parity(Parity::OddDistinct),
                ),
            };
            let tops: Vec<Overpartition> = enumerate(w, &top_spec).collect();
            if tops.is_empty() {
                continue;
            }
            let bottoms: Vec<Overpartition> = enumerate(n - w, &bottom_spec).collect();
            for top in &tops {
                for bottom in &bottoms {
                    out.push(FrobeniusSymbol::new(kind, top.clone(), bottom.clone()));
                }
            }
        }
    }
    out.sort_by_key(|s| (s.width(), row_key(&s.top), row_key(&s.bottom)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(s: &str) -> FrobeniusSymbol {
        s.parse().unwrap()
    }

    #[test]
    fn validation() {
        assert!(sym("F1:[3,2,1;4~,4,3~]").is_valid());
        assert_eq!(sym("F1:[3,3;0,0]").violations(), vec![SymbolViolation::TopNotDistinct]);
        assert!(sym("F2:[5,1~;6,5]").is_valid());
        assert_eq!(sym("F2:[3;1,0]").violations(), vec![SymbolViolation::RowLengthMismatch]);
        assert_eq!(sym("F2:[2;3~]").violations().len(), 2);
    }

    #[test]
    fn text_forms() {
        let s = sym("F1:[3,2,1;4~,4,3~]");
        assert_eq!(s.to_string(), "kind:F1 [3,2,1 ; 4~,4,3~]");
        assert_eq!(sym(&s.to_string()), s);
        assert_eq!(sym("kind:F2 [ ; ]"), FrobeniusSymbol::empty(FrobeniusKind::Second));
        assert!("F3:[1;0]".parse::<FrobeniusSymbol>().is_err());
        assert!("F1:[1,0]".parse::<FrobeniusSymbol>().is_err());
    }

    #[test]
    fn symbol_counts() {
        assert_eq!(enumerate_symbols(0, FrobeniusKind::First), vec![FrobeniusSymbol::empty(FrobeniusKind::First)]);
        assert_eq!(enumerate_symbols(1, FrobeniusKind::First).len(), 2);
        assert_eq!(enumerate_symbols(4, FrobeniusKind::First).len(), 14);
        assert_eq!(enumerate_symbols(4, FrobeniusKind::Second).len(), 14);
    }
}
