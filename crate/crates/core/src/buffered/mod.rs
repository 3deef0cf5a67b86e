//! Buffered Frobenius representations.
//!
//! A representation is a list of columns, each holding a top and a bottom
//! entry with the same number of parts, and two hat flags. Column lengths
//! are nonincreasing, only the first column may carry overlines and the last
//! column carries no hats. Representations of the first kind (`B1`) and
//! second kind (`B2`) add constraints linking consecutive columns through
//! brackets and multiplicities of largest parts.
//!
//! Text form: `B1: ^[3,2,1]|[2,2,1]|[3] ; [4~,4,3~]|^[1,0,0]|[0]`, with the
//! top row before `;`, columns separated by `|` and `^` marking a hatted
//! entry. Without a kind tag the representation is generic.

mod conjugate;
mod enumerate;
mod rank;
mod tableau;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

pub use conjugate::{conjugate, conjugate_b1, conjugate_b2, full_conjugate};
pub use enumerate::{enumerate_reps, enumerate_reps_reference};
pub use rank::{full_rank, rank, rank_b1, rank_b2, rank_vector, RankVector};
pub use tableau::{render_overpartition, render_rep};

use crate::enumerate::BracketKind;
use crate::error::{Error, Result};
use crate::frobenius::{FrobeniusKind, FrobeniusSymbol};
use crate::partition::{Overpartition, Part};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum RepKind {
    Generic,
    B1,
    B2,
}

impl RepKind {
    pub fn tag(self) -> Option<&'static str> {
        match self {
            RepKind::Generic => None,
            RepKind::B1 => Some("B1"),
            RepKind::B2 => Some("B2"),
        }
    }

    /// The symbol kind produced by the jigsaw map.
    pub fn symbol_kind(self) -> FrobeniusKind {
        match self {
            RepKind::B2 => FrobeniusKind::Second,
            _ => FrobeniusKind::First,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Column {
    pub top: Overpartition,
    pub bottom: Overpartition,
    pub top_hat: bool,
    pub bottom_hat: bool,
}

impl Column {
    pub fn new(top: Overpartition, bottom: Overpartition) -> Self {
        Column { top, bottom, top_hat: false, bottom_hat: false }
    }

    pub fn with_hats(mut self, top_hat: bool, bottom_hat: bool) -> Self {
        self.top_hat = top_hat;
        self.bottom_hat = bottom_hat;
        self
    }

    pub fn len(&self) -> usize {
        self.top.len()
    }

    pub fn is_empty(&self) -> bool {
        self.top.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BufferedRep {
    pub kind: RepKind,
    pub columns: Vec<Column>,
}

/// A violated constraint of a representation. Columns are numbered from 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "clause")]
pub enum RepViolation {
    RowLengthMismatch { column: usize },
    ColumnLengthIncreases { column: usize },
    LastColumnHat,
    OverlineOutsideFirstColumn { column: usize },
    EmptyTop { column: usize },
    TopZeroPart { column: usize },
    FirstTopNotDistinct,
    FirstTopOverlined,
    FirstBottomOverlined,
    TopParity { column: usize },
    BottomParity { column: usize },
    FirstBottomOddRepeated,
    FirstTopBracket { bracket: usize, next_len: usize },
    FirstBottomBracket { bracket: usize, next_len: usize },
    TopMultiplicity { column: usize, multiplicity: usize, next_len: usize },
    BottomMultiplicity { column: usize, multiplicity: usize, next_len: usize },
}

impl fmt::Display for RepViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use RepViolation::*;
        match self {
            RowLengthMismatch { column } => write!(f, "column {column}: entries have different lengths"),
            ColumnLengthIncreases { column } => write!(f, "column {column}: longer than the previous column"),
            LastColumnHat => write!(f, "last column carries a hat"),
            OverlineOutsideFirstColumn { column } => write!(f, "column {column}: overlined part outside the first column"),
            EmptyTop { column } => write!(f, "column {column}: empty top entry"),
            TopZeroPart { column } => write!(f, "column {column}: zero part in the top entry"),
            FirstTopNotDistinct => write!(f, "first top entry has repeated parts"),
            FirstTopOverlined => write!(f, "first top entry has overlined parts"),
            FirstBottomOverlined => write!(f, "first bottom entry has overlined parts"),
            TopParity { column } => write!(f, "column {column}: top entry has parts of the wrong parity"),
            BottomParity { column } => write!(f, "column {column}: bottom entry has parts of the wrong parity"),
            FirstBottomOddRepeated => write!(f, "first bottom entry repeats an odd part"),
            FirstTopBracket { bracket, next_len } => {
                write!(f, "first top entry has bracket {bracket} below the next column length {next_len}")
            }
            FirstBottomBracket { bracket, next_len } => {
                write!(f, "first bottom entry has bracket {bracket} below the next column length {next_len}")
            }
            TopMultiplicity { column, multiplicity, next_len } => write!(
                f,
                "column {column}: largest top part occurs {multiplicity} times, fewer than the next column length {next_len}"
            ),
            BottomMultiplicity { column, multiplicity, next_len } => write!(
                f,
                "column {column}: largest bottom part occurs {multiplicity} times, fewer than the next column length {next_len}"
            ),
        }
    }
}

impl BufferedRep {
    pub fn new(kind: RepKind, columns: Vec<Column>) -> Self {
        BufferedRep { kind, columns }
    }

    pub fn empty(kind: RepKind) -> Self {
        BufferedRep::new(kind, Vec::new())
    }

    pub fn num_columns(&self) -> usize {
        self.columns.len()
    }

    pub fn weight(&self) -> u64 {
        self.columns.iter().map(|c| c.top.weight() + c.bottom.weight()).sum()
    }

    /// Total number of hatted entries.
    pub fn hat_count(&self) -> usize {
        self.columns.iter().map(|c| usize::from(c.top_hat) + usize::from(c.bottom_hat)).sum()
    }

    /// +1 when only the top entry of column `i` (from 1) is hatted, −1 when only
    /// the bottom one is, 0 otherwise.
    pub fn chi(&self, i: usize) -> i64 {
        match i.checked_sub(1).and_then(|j| self.columns.get(j)) {
            Some(c) => i64::from(c.top_hat) - i64::from(c.bottom_hat),
            None => 0,
        }
    }

    /// Every violated constraint, in a fixed order.
    pub fn violations(&self) -> Vec<RepViolation> {
        let mut v = Vec::new();
        let cols = &self.columns;
        for (j, c) in cols.iter().enumerate() {
            let column = j + 1;
            if c.top.len() != c.bottom.len() {
                v.push(RepViolation::RowLengthMismatch { column });
            }
            if j > 0 && c.top.len() > cols[j - 1].top.len() {
                v.push(RepViolation::ColumnLengthIncreases { column });
            }
            if j > 0 && (c.top.num_overlined() > 0 || c.bottom.num_overlined() > 0) {
                v.push(RepViolation::OverlineOutsideFirstColumn { column });
            }
        }
        if cols.last().is_some_and(|c| c.top_hat || c.bottom_hat) {
            v.push(RepViolation::LastColumnHat);
        }
        match self.kind {
            RepKind::Generic => {}
            RepKind::B1 => self.b1_violations(&mut v),
            RepKind::B2 => self.b2_violations(&mut v),
        }
        v
    }

    fn next_len(&self, j: usize) -> usize {
        self.columns.get(j + 1).map_or(0, |c| c.top.len())
    }

    fn common_violations(&self, v: &mut Vec<RepViolation>) {
        for (j, c) in self.columns.iter().enumerate() {
            let column = j + 1;
            if c.top.is_empty() {
                v.push(RepViolation::EmptyTop { column });
            }
            if !c.top.is_positive() {
                v.push(RepViolation::TopZeroPart { column });
            }
            if j > 0 {
                let next = self.next_len(j);
                let mt = c.top.largest_multiplicity();
                if mt < next {
                    v.push(RepViolation::TopMultiplicity { column, multiplicity: mt, next_len: next });
                }
                let mb = c.bottom.largest_multiplicity();
                if mb < next {
                    v.push(RepViolation::BottomMultiplicity { column, multiplicity: mb, next_len: next });
                }
            }
        }
    }

    fn first_brackets(&self, v: &mut Vec<RepViolation>, top: BracketKind, bottom: BracketKind) {
        let Some(c) = self.columns.first() else { return };
        let next_len = self.next_len(0);
        if next_len == 0 {
            return;
        }
        let bt = top.eval(&c.top).unwrap_or(0);
        if bt < next_len {
            v.push(RepViolation::FirstTopBracket { bracket: bt, next_len });
        }
        let bb = bottom.eval(&c.bottom).unwrap_or(0);
        if bb < next_len {
            v.push(RepViolation::FirstBottomBracket { bracket: bb, next_len });
        }
    }

    fn b1_violations(&self, v: &mut Vec<RepViolation>) {
        self.common_violations(v);
        if let Some(c) = self.columns.first() {
            if c.top.num_overlined() > 0 {
                v.push(RepViolation::FirstTopOverlined);
            }
            if !c.top.underlying().is_distinct() {
                v.push(RepViolation::FirstTopNotDistinct);
            }
        }
        self.first_brackets(v, BracketKind::Bracket, BracketKind::OverBracketJs);
    }

    fn b2_violations(&self, v: &mut Vec<RepViolation>) {
        self.common_violations(v);
        for (j, c) in self.columns.iter().enumerate() {
            let column = j + 1;
            let top_ok = if j == 0 { c.top.values().all(|x| x % 2 == 1) } else { c.top.values().all(|x| x % 2 == 0) };
            if !top_ok {
                v.push(RepViolation::TopParity { column });
            }
            if j == 0 {
                let b = c.bottom.underlying();
                if b.parts().windows(2).any(|w| w[0] == w[1] && w[0] % 2 == 1) {
                    v.push(RepViolation::FirstBottomOddRepeated);
                }
                if c.bottom.num_overlined() > 0 {
                    v.push(RepViolation::FirstBottomOverlined);
                }
            } else if c.bottom.values().any(|x| x % 2 == 1) {
                v.push(RepViolation::BottomParity { column });
            }
        }
        self.first_brackets(v, BracketKind::SecondOverBracketJs, BracketKind::SecondBracketJs);
    }

    pub fn is_valid(&self) -> bool {
        self.violations().is_empty()
    }

    pub(crate) fn require_valid(&self, op: &'static str) -> Result<()> {
        let v = self.violations();
        if v.is_empty() {
            Ok(())
        } else {
            let msg: Vec<String> = v.iter().map(|x| x.to_string()).collect();
            Err(Error::Invalid(format!("{op}: {self}: {}", msg.join("; "))))
        }
    }
}

/// Collapses a representation to a symbol by adding the columns positionwise.
///
/// Every entry is padded with zeros to the length of the first column; the
/// overlines of the result are those of the first column.
pub fn jigsaw(v: &BufferedRep) -> Result<FrobeniusSymbol> {
    let kind = v.kind.symbol_kind();
    let Some(first) = v.columns.first() else {
        return Ok(FrobeniusSymbol::empty(kind));
    };
    let t = first.top.len();
    let collapse = |row: &dyn Fn(&Column) -> &Overpartition| -> Result<Overpartition> {
        let mut parts: Vec<Part> = row(first).parts().to_vec();
        parts.resize(t, Part::plain(0));
        for c in &v.columns[1..] {
            let entry = row(c);
            if entry.len() > t {
                return Err(Error::Invalid(format!("column entry {entry} is longer than the first column")));
            }
            for (p, x) in parts.iter_mut().zip(entry.values()) {
                p.value += x;
            }
        }
        Overpartition::new(parts)
    };
    let top = collapse(&|c| &c.top)?;
    let bottom = collapse(&|c| &c.bottom)?;
    Ok(FrobeniusSymbol::new(kind, top, bottom))
}

fn write_row(f: &mut fmt::Formatter<'_>, cols: &[Column], top: bool) -> fmt::Result {
    for (j, c) in cols.iter().enumerate() {
        if j > 0 {
            f.write_str("|")?;
        }
        let (entry, hat) = if top { (&c.top, c.top_hat) } else { (&c.bottom, c.bottom_hat) };
        if hat {
            f.write_str("^")?;
        }
        write!(f, "{entry}")?;
    }
    Ok(())
}

impl fmt::Display for BufferedRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(tag) = self.kind.tag() {
            write!(f, "{tag}: ")?;
        }
        write_row(f, &self.columns, true)?;
        if self.columns.is_empty() {
            f.write_str(";")
        } else {
            f.write_str(" ; ")?;
            write_row(f, &self.columns, false)
        }
    }
}

fn parse_row(row: &str) -> Result<Vec<(Overpartition, bool)>> {
    let row = row.trim();
    if row.is_empty() {
        return Ok(Vec::new());
    }
    row.split('|')
        .map(|entry| {
            let e = entry.trim();
            match e.strip_prefix('^') {
                Some(rest) => Ok((rest.parse()?, true)),
                None => Ok((e.parse()?, false)),
            }
        })
        .collect()
}

impl FromStr for BufferedRep {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let (kind, body) = if let Some(r) = t.strip_prefix("B1:") {
            (RepKind::B1, r)
        } else if let Some(r) = t.strip_prefix("B2:") {
            (RepKind::B2, r)
        } else {
            (RepKind::Generic, t)
        };
        let (top, bottom) = body
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("`{s}` rows must be separated by `;`")))?;
        let top = parse_row(top)?;
        let bottom = parse_row(bottom)?;
        if top.len() != bottom.len() {
            return Err(Error::Parse(format!("`{s}` rows have different numbers of columns")));
        }
        let columns = top
            .into_iter()
            .zip(bottom)
            .map(|((t, th), (b, bh))| Column::new(t, b).with_hats(th, bh))
            .collect();
        Ok(BufferedRep::new(kind, columns))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) const B1_EXAMPLE: &str = "B1: ^[3,2,1]|[2,2,1]|[3] ; [4~,4,3~]|^[1,0,0]|[0]";
    pub(crate) const B2_EXAMPLE: &str = "B2: ^[3,1~]|[2,2]|[4] ; [6,5]|[2,0]|[2]";

    fn rep(s: &str) -> BufferedRep {
        s.parse().unwrap()
    }

    #[test]
    fn text_round_trip() {
        let r = rep(B1_EXAMPLE);
        assert_eq!(r.to_string(), B1_EXAMPLE);
        assert_eq!(rep("B1:^[3,2,1]|[2,2,1]|[3];[4~,4,3~]|^[1,0,0]|[0]"), r);
        assert_eq!(rep("B2: ;"), BufferedRep::empty(RepKind::B2));
        assert_eq!(BufferedRep::empty(RepKind::B1).to_string(), "B1: ;");
        assert!("B1: [1] ; ".parse::<BufferedRep>().is_err());
        assert!("B1: [1]".parse::<BufferedRep>().is_err());
    }

    #[test]
    fn validity_examples() {
        assert_eq!(rep(B1_EXAMPLE).violations(), vec![]);
        assert_eq!(rep(B2_EXAMPLE).violations(), vec![]);
        let hat_last = rep("B1: [3,2,1]|^[3] ; [4~,4,3~]|[0]");
        assert_eq!(hat_last.violations(), vec![RepViolation::LastColumnHat]);
        assert!(BufferedRep::empty(RepKind::B1).is_valid());
    }

    #[test]
    fn hats() {
        let r = rep(B1_EXAMPLE);
        assert_eq!(r.hat_count(), 2);
        assert_eq!((r.chi(1), r.chi(2), r.chi(3), r.chi(4)), (1, -1, 0, 0));
        let both = rep("B1: ^[2,1]|[1] ; ^[0,0]|[0]");
        assert_eq!((both.hat_count(), both.chi(1)), (2, 0));
    }

    #[test]
    fn jigsaw_examples() {
        let g = rep("^[3,3,2,1]|[1,0,0] ; [3~,2~,2,2]|[4,1,1]");
        let s = jigsaw(&g).unwrap();
        assert_eq!(s, "F1:[4,3,2,1;7~,3~,3,2]".parse().unwrap());
        assert!(s.is_valid());
        let one = rep("B1: [3,2,1] ; [4~,4,3~]");
        assert_eq!(jigsaw(&one).unwrap(), "F1:[3,2,1;4~,4,3~]".parse().unwrap());
        assert_eq!(jigsaw(&BufferedRep::empty(RepKind::B2)).unwrap(), FrobeniusSymbol::empty(FrobeniusKind::Second));
    }
}
