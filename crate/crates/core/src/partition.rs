//! Partitions and overpartitions, possibly padded with zero parts.
//!
//! Both types keep their parts in canonical order: values nonincreasing and,
//! for overpartitions, the overlined copy of a value listed before its plain
//! copies. The text form is a bracketed comma list with `~` marking an
//! overline, e.g. `[4~,4,2,1]`; a suffix `@n` pads with plain zeros up to
//! `n` parts, so `[3,3]@5` reads as `[3,3,0,0,0]`. The printer always lists
//! every part, which makes `parse(print(x)) == x` and
//! `print(parse(print(x))) == print(x)`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A single part of an overpartition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Part {
    pub value: u32,
    pub overlined: bool,
}

impl Part {
    pub const fn plain(value: u32) -> Self {
        Part { value, overlined: false }
    }

    pub const fn over(value: u32) -> Self {
        Part { value, overlined: true }
    }
}

impl Ord for Part {
    /// Canonical order: larger values first, overlined before plain.
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .value
            .cmp(&self.value)
            .then(other.overlined.cmp(&self.overlined))
    }
}

impl PartialOrd for Part {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.overlined {
            write!(f, "{}~", self.value)
        } else {
            write!(f, "{}", self.value)
        }
    }
}

/// Serializes through the text form.
macro_rules! serialize_as_text {
    ($t:ty) => {
        impl Serialize for $t {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.collect_str(self)
            }
        }
    };
}

serialize_as_text!(Part);
serialize_as_text!(Partition);
serialize_as_text!(Overpartition);

/// A nonincreasing list of nonnegative parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from parts already in nonincreasing order.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid(format!("parts {parts:?} are not nonincreasing")));
        }
        Ok(Partition { parts })
    }

    /// Builds a partition by sorting arbitrary parts.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// The staircase `(t, t-1, ..., 1)`.
    pub fn staircase(t: usize) -> Self {
        Partition { parts: (1..=t as u32).rev().collect() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.parts
    }

    /// Number of parts, zeros included.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Largest part, 0 for the empty partition.
    pub fn largest(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// `(weight, largest part, number of parts)`.
    pub fn basic_stats(&self) -> (u64, u32, usize) {
        (self.weight(), self.largest(), self.len())
    }

    /// Number of parts equal to the largest part.
    pub fn largest_multiplicity(&self) -> usize {
        let l = self.largest();
        self.parts.iter().take_while(|&&p| p == l).count()
    }

    pub fn is_distinct(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    pub fn is_positive(&self) -> bool {
        self.parts.iter().all(|&p| p > 0)
    }

    /// Drops the zero parts.
    pub fn trimmed(&self) -> Self {
        Partition { parts: self.parts.iter().copied().filter(|&p| p > 0).collect() }
    }

    /// Pads with zeros up to `len` parts.
    pub fn padded(&self, len: usize) -> Result<Self> {
        if self.len() > len {
            return Err(Error::Invalid(format!("{self} has more than {len} parts")));
        }
        let mut parts = self.parts.clone();
        parts.resize(len, 0);
        Ok(Partition { parts })
    }

    /// Adds `c` to every part.
    pub fn shifted_up(&self, c: u32) -> Self {
        Partition { parts: self.parts.iter().map(|&p| p + c).collect() }
    }

    /// Subtracts `c` from every part.
    pub fn shifted_down(&self, c: u32) -> Result<Self> {
        let parts = self
            .parts
            .iter()
            .map(|&p| p.checked_sub(c))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::Invalid(format!("cannot subtract {c} from every part of {self}")))?;
        Ok(Partition { parts })
    }

    pub fn to_overpartition(&self) -> Overpartition {
        Overpartition { parts: self.parts.iter().map(|&v| Part::plain(v)).collect() }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_overpartition().fmt(f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let o: Overpartition = s.parse()?;
        o.as_partition()
            .ok_or_else(|| Error::Parse(format!("`{s}` has overlined parts but a partition was expected")))
    }
}

/// A partition in which the first occurrence of each value may be overlined.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Overpartition {
    parts: Vec<Part>,
}

impl Overpartition {
    /// Builds an overpartition from parts already in canonical order.
    pub fn new(parts: Vec<Part>) -> Result<Self> {
        for w in parts.windows(2) {
            match w[0].value.cmp(&w[1].value) {
                Ordering::Greater => {}
                Ordering::Less => {
                    return Err(Error::Invalid(format!("values {} and {} are out of order", w[0], w[1])));
                }
                Ordering::Equal if w[1].overlined => {
                    return Err(Error::Invalid(format!(
                        "value {} is overlined on a repeated or later copy",
                        w[1].value
                    )));
                }
                Ordering::Equal => {}
            }
        }
        Ok(Overpartition { parts })
    }

    /// Builds an overpartition by sorting arbitrary parts into canonical order.
    pub fn from_unsorted(mut parts: Vec<Part>) -> Result<Self> {
        parts.sort_unstable();
        Overpartition::new(parts)
    }

    pub fn empty() -> Self {
        Overpartition::default()
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    pub fn values(&self) -> impl DoubleEndedIterator<Item = u32> + ExactSizeIterator + '_ {
        self.parts.iter().map(|p| p.value)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.values().map(|v| v as u64).sum()
    }

    /// Largest part, 0 for the empty overpartition.
    pub fn largest(&self) -> u32 {
        self.parts.first().map_or(0, |p| p.value)
    }

    /// `(weight, largest part, number of parts)`.
    pub fn basic_stats(&self) -> (u64, u32, usize) {
        (self.weight(), self.largest(), self.len())
    }

    pub fn num_overlined(&self) -> usize {
        self.parts.iter().filter(|p| p.overlined).count()
    }

    /// Number of parts whose value equals the largest part.
    pub fn largest_multiplicity(&self) -> usize {
        let l = self.largest();
        self.values().take_while(|&v| v == l).count()
    }

    pub fn is_positive(&self) -> bool {
        self.values().all(|v| v > 0)
    }

    /// The partition obtained by forgetting overlines.
    pub fn underlying(&self) -> Partition {
        Partition { parts: self.values().collect() }
    }

    /// The underlying partition when no part is overlined.
    pub fn as_partition(&self) -> Option<Partition> {
        (self.num_overlined() == 0).then(|| self.underlying())
    }

    /// Pads with plain zeros up to `len` parts.
    pub fn padded(&self, len: usize) -> Result<Self> {
        if self.len() > len {
            return Err(Error::Invalid(format!("{self} has more than {len} parts")));
        }
        let mut parts = self.parts.clone();
        parts.resize(len, Part::plain(0));
        Ok(Overpartition { parts })
    }

    /// Adds `c` to every part, keeping the overlines.
    pub fn shifted_up(&self, c: u32) -> Self {
        Overpartition {
            parts: self.parts.iter().map(|p| Part { value: p.value + c, ..*p }).collect(),
        }
    }

    /// Subtracts `c` from every part, keeping the overlines.
    pub fn shifted_down(&self, c: u32) -> Result<Self> {
        let parts = self
            .parts
            .iter()
            .map(|p| p.value.checked_sub(c).map(|value| Part { value, ..*p }))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::Invalid(format!("cannot subtract {c} from every part of {self}")))?;
        Ok(Overpartition { parts })
    }

    /// Transposes the dotted Young tableau.
    ///
    /// An overlined value `v` dots the last cell of the last row of length `v`.
    /// That cell lands at the end of row `v` of the transpose, whose length is
    /// the number of parts `>= v`, so that length becomes overlined.
    pub fn conjugate(&self) -> Result<Self> {
        if !self.is_positive() {
            return Err(Error::Invalid(format!("{self} has zero parts and no tableau")));
        }
        let count_at_least = |v: u32| self.values().take_while(|&x| x >= v).count() as u32;
        let over: Vec<u32> = self
            .parts
            .iter()
            .filter(|p| p.overlined)
            .map(|p| count_at_least(p.value))
            .collect();
        let mut parts: Vec<Part> = (1..=self.largest()).map(|c| Part::plain(count_at_least(c))).collect();
        for v in over {
            let first = parts.iter_mut().find(|p| p.value == v).expect("row length occurs");
            first.overlined = true;
        }
        Overpartition::new(parts)
    }
}

impl From<Partition> for Overpartition {
    fn from(p: Partition) -> Self {
        p.to_overpartition()
    }
}

impl fmt::Display for Overpartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        write_parts(f, &self.parts)?;
        f.write_str("]")
    }
}

pub(crate) fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[Part]) -> fmt::Result {
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

impl FromStr for Overpartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix('[')
            .ok_or_else(|| Error::Parse(format!("`{s}` does not start with `[`")))?;
        let close = inner
            .find(']')
            .ok_or_else(|| Error::Parse(format!("`{s}` has no closing `]`")))?;
        let mut parts = parse_part_list(&inner[..close])?;
        let rest = inner[close + 1..].trim();
        if !rest.is_empty() {
            let len = rest
                .strip_prefix('@')
                .and_then(|n| n.trim().parse::<usize>().ok())
                .ok_or_else(|| Error::Parse(format!("unexpected trailing text `{rest}`")))?;
            if len < parts.len() {
                return Err(Error::Parse(format!("padding @{len} is shorter than the {} listed parts", parts.len())));
            }
            parts.resize(len, Part::plain(0));
        }
        Overpartition::new(parts).map_err(|e| Error::Parse(format!("`{s}`: {e}")))
    }
}

/// Parses a comma separated list of part tokens such as `4~,4,2,1`.
pub(crate) fn parse_part_list(s: &str) -> Result<Vec<Part>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_part).collect()
}

fn parse_part(token: &str) -> Result<Part> {
    let t = token.trim();
    let (digits, overlined) = match t.strip_suffix('~') {
        Some(d) => (d.trim_end(), true),
        None => (t, false),
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("bad part token `{t}`")));
    }
    let value = digits
        .parse::<u32>()
        .map_err(|_| Error::Parse(format!("part `{t}` is too large")))?;
    Ok(Part { value, overlined })
}
