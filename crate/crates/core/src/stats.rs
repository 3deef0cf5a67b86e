//! Ranks and brackets of partitions and overpartitions.
//!
//! Every statistic here is undefined on the empty object and reports
//! [`Error::Empty`] there. The `*_js` brackets are the run lengths that the
//! Joichi–Stanton style maps preserve; they are the ones that make the
//! bracket generating functions and the buffered representations work.

use std::fmt;

use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::partition::{Overpartition, Part, Partition};

/// Names of the scalar statistics.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Statistic {
    Dyson,
    DysonOver,
    M2,
    Cl,
    Bracket,
    OverBracket,
    OverBracketJs,
    SecondRank,
    SecondBracket,
    SecondBracketJs,
    SecondOverRank,
    SecondOverBracket,
    SecondOverBracketJs,
}

impl Statistic {
    pub const ALL: [Statistic; 13] = [
        Statistic::Dyson,
        Statistic::DysonOver,
        Statistic::M2,
        Statistic::Cl,
        Statistic::Bracket,
        Statistic::OverBracket,
        Statistic::OverBracketJs,
        Statistic::SecondRank,
        Statistic::SecondBracket,
        Statistic::SecondBracketJs,
        Statistic::SecondOverRank,
        Statistic::SecondOverBracket,
        Statistic::SecondOverBracketJs,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Statistic::Dyson => "dyson",
            Statistic::DysonOver => "dyson-over",
            Statistic::M2 => "m2",
            Statistic::Cl => "cl",
            Statistic::Bracket => "bracket",
            Statistic::OverBracket => "over-bracket",
            Statistic::OverBracketJs => "over-bracket-js",
            Statistic::SecondRank => "second-rank",
            Statistic::SecondBracket => "second-bracket",
            Statistic::SecondBracketJs => "second-bracket-js",
            Statistic::SecondOverRank => "second-over-rank",
            Statistic::SecondOverBracket => "second-over-bracket",
            Statistic::SecondOverBracketJs => "second-over-bracket-js",
        }
    }

    /// Evaluates the statistic. Statistics defined on plain partitions reject
    /// overlined input.
    pub fn eval(self, p: &Overpartition) -> Result<StatValue> {
        let plain = || {
            p.as_partition()
                .ok_or_else(|| domain(self.name(), format!("{p} has overlined parts")))
        };
        let value = match self {
            Statistic::Dyson => dyson_rank(&plain()?)?,
            Statistic::DysonOver => dyson_rank_over(p)?,
            Statistic::M2 => m2_rank_over(p)?,
            Statistic::Cl => cl_rank(p)?,
            Statistic::Bracket => bracket(&plain()?)? as i64,
            Statistic::OverBracket => over_bracket(p)? as i64,
            Statistic::OverBracketJs => over_bracket_js(p)? as i64,
            Statistic::SecondRank => second_rank(&plain()?)?,
            Statistic::SecondBracket => second_bracket(&plain()?)? as i64,
            Statistic::SecondBracketJs => second_bracket_js(&plain()?)? as i64,
            Statistic::SecondOverRank => second_over_rank(p)?,
            Statistic::SecondOverBracket => second_over_bracket(p)? as i64,
            Statistic::SecondOverBracketJs => second_over_bracket_js(p)? as i64,
        };
        Ok(StatValue { name: self, value })
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A named statistic value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StatValue {
    pub name: Statistic,
    pub value: i64,
}

fn nonempty_partition(p: &Partition, stat: &'static str) -> Result<()> {
    if p.is_empty() {
        Err(Error::Empty(stat))
    } else {
        Ok(())
    }
}

fn nonempty_over(p: &Overpartition, stat: &'static str) -> Result<()> {
    if p.is_empty() {
        Err(Error::Empty(stat))
    } else {
        Ok(())
    }
}

/// Length of the longest initial run in which every consecutive pair
/// satisfies `step`.
fn initial_run<T>(items: &[T], step: impl Fn(&T, &T) -> bool) -> usize {
    1 + items.windows(2).take_while(|w| step(&w[0], &w[1])).count()
}

/// Largest part minus number of parts.
pub fn dyson_rank(p: &Partition) -> Result<i64> {
    nonempty_partition(p, "dyson rank")?;
    Ok(p.largest() as i64 - p.len() as i64)
}

/// Largest part minus number of parts, for overpartitions.
pub fn dyson_rank_over(p: &Overpartition) -> Result<i64> {
    nonempty_over(p, "overpartition dyson rank")?;
    Ok(p.largest() as i64 - p.len() as i64)
}

/// `ceil(l/2) - #parts + #(plain odd parts) - chi`, where `chi` is 1 when the
/// largest part is odd and plain.
pub fn m2_rank_over(p: &Overpartition) -> Result<i64> {
    nonempty_over(p, "M2 rank")?;
    let l = p.largest() as i64;
    let plain_odd = p.parts().iter().filter(|q| !q.overlined && q.value % 2 == 1).count() as i64;
    let first = p.parts()[0];
    let chi = i64::from(first.value % 2 == 1 && !first.overlined);
    Ok((l + 1) / 2 - p.len() as i64 + plain_odd - chi)
}

/// `l - 1 - #(overlined parts smaller than l)`.
pub fn cl_rank(p: &Overpartition) -> Result<i64> {
    nonempty_over(p, "CL rank")?;
    let l = p.largest();
    let smaller_over = p.parts().iter().filter(|q| q.overlined && q.value < l).count() as i64;
    Ok(l as i64 - 1 - smaller_over)
}

/// Longest initial run of parts decreasing by exactly 1.
pub fn bracket(p: &Partition) -> Result<usize> {
    nonempty_partition(p, "bracket")?;
    Ok(initial_run(p.parts(), |a, b| *a == b + 1))
}

/// Longest initial run whose consecutive entries are equal, or drop by 1
/// with at least one of the two overlined.
pub fn over_bracket(p: &Overpartition) -> Result<usize> {
    nonempty_over(p, "overpartition bracket")?;
    Ok(initial_run(p.parts(), |a, b| {
        a.value == b.value || (a.value == b.value + 1 && (a.overlined || b.overlined))
    }))
}

/// Longest initial run in which each drop equals 1 when the lower part is
/// overlined and 0 otherwise. This is the number of parts of the base that
/// equal its largest part when the overpartition is written as a
/// Joichi–Stanton image.
pub fn over_bracket_js(p: &Overpartition) -> Result<usize> {
    nonempty_over(p, "overpartition bracket")?;
    Ok(initial_run(p.parts(), |a: &Part, b: &Part| a.value - b.value == u32::from(b.overlined)))
}

fn check_odd_distinct(p: &Partition, stat: &'static str) -> Result<()> {
    let repeated = p.parts().windows(2).find(|w| w[0] == w[1] && w[0] % 2 == 1);
    match repeated {
        Some(w) => Err(domain(stat, format!("odd part {} repeats", w[0]))),
        None => Ok(()),
    }
}

/// `floor(l/2) - #(odd parts smaller than l)` on partitions whose odd parts
/// are distinct.
pub fn second_rank(p: &Partition) -> Result<i64> {
    nonempty_partition(p, "second rank")?;
    check_odd_distinct(p, "second rank")?;
    let l = p.largest();
    let smaller_odd = p.parts().iter().filter(|&&v| v % 2 == 1 && v < l).count() as i64;
    Ok((l / 2) as i64 - smaller_odd)
}

/// Longest initial run with consecutive differences 0 or 1.
pub fn second_bracket(p: &Partition) -> Result<usize> {
    nonempty_partition(p, "second bracket")?;
    Ok(initial_run(p.parts(), |a, b| a - b < 2))
}

/// Longest initial run in which each drop equals the number of odd entries
/// in the pair. This is the multiplicity of the largest part of the even
/// base under the second Joichi–Stanton map.
pub fn second_bracket_js(p: &Partition) -> Result<usize> {
    nonempty_partition(p, "second bracket")?;
    Ok(initial_run(p.parts(), |a, b| a - b == a % 2 + b % 2))
}

fn check_all_odd(p: &Overpartition, stat: &'static str) -> Result<()> {
    match p.values().find(|v| v % 2 == 0) {
        Some(v) => Err(domain(stat, format!("even part {v}"))),
        None => Ok(()),
    }
}

/// `(l-1)/2 - #(overlined parts smaller than l)` on overpartitions into odd
/// parts.
pub fn second_over_rank(p: &Overpartition) -> Result<i64> {
    nonempty_over(p, "second overpartition rank")?;
    check_all_odd(p, "second overpartition rank")?;
    let l = p.largest();
    let smaller_over = p.parts().iter().filter(|q| q.overlined && q.value < l).count() as i64;
    Ok(((l - 1) / 2) as i64 - smaller_over)
}

/// Longest initial run whose consecutive entries are equal, or drop by 2
/// with at least one of the two overlined.
pub fn second_over_bracket(p: &Overpartition) -> Result<usize> {
    nonempty_over(p, "second overpartition bracket")?;
    check_all_odd(p, "second overpartition bracket")?;
    Ok(initial_run(p.parts(), |a, b| {
        a.value == b.value || (a.value == b.value + 2 && (a.overlined || b.overlined))
    }))
}

/// Longest initial run in which each drop equals 2 when the lower part is
/// overlined and 0 otherwise.
pub fn second_over_bracket_js(p: &Overpartition) -> Result<usize> {
    nonempty_over(p, "second overpartition bracket")?;
    check_all_odd(p, "second overpartition bracket")?;
    Ok(initial_run(p.parts(), |a: &Part, b: &Part| a.value - b.value == 2 * u32::from(b.overlined)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn op(s: &str) -> Overpartition {
        s.parse().unwrap()
    }

    fn pt(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn ranks_of_partitions_of_four() {
        let expected = [("[4]", 3), ("[3,1]", 1), ("[2,2]", 0), ("[2,1,1]", -1), ("[1,1,1,1]", -3)];
        for (s, r) in expected {
            assert_eq!(dyson_rank(&pt(s)).unwrap(), r, "{s}");
        }
    }

    #[test]
    fn overpartition_ranks() {
        assert_eq!(dyson_rank_over(&op("[4~,4,2,1]")).unwrap(), 0);
        assert_eq!(dyson_rank_over(&op("[7]")).unwrap(), 6);
        assert_eq!(dyson_rank_over(&op("[3,3,3,3,3,2~]")).unwrap(), -3);
        assert_eq!(m2_rank_over(&op("[2~,1,1]")).unwrap(), 0);
        assert_eq!(m2_rank_over(&op("[2]")).unwrap(), 0);
        assert_eq!(m2_rank_over(&op("[8,7~,2~]")).unwrap(), 1);
        assert_eq!(cl_rank(&op("[5~,3~,3,1~]")).unwrap(), 2);
        assert_eq!(cl_rank(&op("[6~]")).unwrap(), 5);
        assert_eq!(cl_rank(&op("[1~,1,0~]")).unwrap(), -1);
    }

    #[test]
    fn brackets() {
        assert_eq!(bracket(&pt("[7,6,5,3,2]")).unwrap(), 3);
        assert_eq!(bracket(&pt("[9]")).unwrap(), 1);
        assert_eq!(bracket(&pt("[5,4,3,2,1]")).unwrap(), 5);
        assert_eq!(over_bracket(&op("[7,7,6~,5,4]")).unwrap(), 4);
        assert_eq!(over_bracket(&op("[2,2,2,2]")).unwrap(), 4);
        assert_eq!(over_bracket(&op("[3,2,1]")).unwrap(), 1);
        assert_eq!(second_bracket(&pt("[7,7,6,5,3,3,1]")).unwrap(), 4);
        assert_eq!(second_bracket(&pt("[4]")).unwrap(), 1);
        assert_eq!(second_bracket(&pt("[4,4,4]")).unwrap(), 3);
        assert_eq!(second_over_bracket(&op("[5,3~,3,1]")).unwrap(), 3);
        assert_eq!(second_over_bracket(&op("[3,3,3]")).unwrap(), 3);
        assert_eq!(second_over_bracket(&op("[5,3,1]")).unwrap(), 1);
    }

    #[test]
    fn second_ranks() {
        assert_eq!(second_rank(&pt("[6,5]")).unwrap(), 2);
        assert_eq!(second_rank(&pt("[8]")).unwrap(), 4);
        assert_eq!(second_rank(&pt("[5,4,3]")).unwrap(), 1);
        assert!(second_rank(&pt("[3,3]")).is_err());
        assert_eq!(second_over_rank(&op("[3,1~]")).unwrap(), 0);
        assert_eq!(second_over_rank(&op("[9]")).unwrap(), 4);
        assert_eq!(second_over_rank(&op("[5,3~,3,1]")).unwrap(), 1);
        assert!(second_over_rank(&op("[4,1]")).is_err());
        assert!(second_over_bracket(&op("[4,1]")).is_err());
    }

    #[test]
    fn js_brackets() {
        assert_eq!(over_bracket_js(&op("[6~,4~,3,2~]")).unwrap(), 1);
        assert_eq!(over_bracket_js(&op("[2,1~,0]")).unwrap(), 2);
        assert_eq!(over_bracket_js(&op("[1~,0]")).unwrap(), 1);
        assert_eq!(second_bracket_js(&pt("[3,1]")).unwrap(), 2);
        assert_eq!(second_bracket(&pt("[3,1]")).unwrap(), 1);
        assert_eq!(second_bracket_js(&pt("[4,3,2]")).unwrap(), 3);
        assert_eq!(second_bracket_js(&pt("[4,4,2]")).unwrap(), 2);
        assert_eq!(second_over_bracket_js(&op("[3~,1]")).unwrap(), 1);
        assert_eq!(second_over_bracket_js(&op("[3,1~]")).unwrap(), 2);
    }

    #[test]
    fn empty_inputs_are_rejected() {
        let e = Overpartition::empty();
        for s in Statistic::ALL {
            assert!(s.eval(&e).is_err(), "{s}");
        }
    }
}
