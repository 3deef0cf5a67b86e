//! Per-column ranks of buffered representations.

use serde::Serialize;

use super::{BufferedRep, RepKind};
use crate::error::{precondition, Error, Result};
use crate::stats;

/// Rank components `rho^1, ..., rho^k`; components past the last column are 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RankVector {
    pub components: Vec<i64>,
}

impl RankVector {
    pub fn component(&self, i: usize) -> i64 {
        i.checked_sub(1).and_then(|j| self.components.get(j)).copied().unwrap_or(0)
    }

    pub fn full(&self) -> i64 {
        self.components.iter().sum()
    }
}

/// `rho^i` of a first-kind representation, columns numbered from 1.
///
/// The first column contributes `r(top) - (r_CL(bottom) + 1) + chi_1`, later
/// ones `(l(top) - 1) - l(bottom) + chi_i`.
pub fn rank_b1(v: &BufferedRep, i: usize) -> Result<i64> {
    if v.kind != RepKind::B1 {
        return Err(precondition("rank_b1", "expected a B1 representation"));
    }
    column_rank(v, i)
}

/// `rho^i` of a second-kind representation, columns numbered from 1.
///
/// The first column contributes `r2bar(top) - r2(bottom) + chi_1`, later ones
/// `(l(top)/2 - 1) - l(bottom)/2 + chi_i`.
pub fn rank_b2(v: &BufferedRep, i: usize) -> Result<i64> {
    if v.kind != RepKind::B2 {
        return Err(precondition("rank_b2", "expected a B2 representation"));
    }
    column_rank(v, i)
}

/// `rho^i` for either kind.
pub fn rank(v: &BufferedRep, i: usize) -> Result<i64> {
    match v.kind {
        RepKind::B1 | RepKind::B2 => column_rank(v, i),
        RepKind::Generic => Err(precondition("rank", "generic representations carry no rank")),
    }
}

fn column_rank(v: &BufferedRep, i: usize) -> Result<i64> {
    let Some(c) = i.checked_sub(1).and_then(|j| v.columns.get(j)) else {
        return Ok(0);
    };
    let chi = v.chi(i);
    let base = match (v.kind, i) {
        (RepKind::B1, 1) => {
            let top = c.top.as_partition().ok_or_else(|| Error::Invalid("first top entry is overlined".into()))?;
            stats::dyson_rank(&top)? - stats::cl_rank(&c.bottom)? - 1
        }
        (RepKind::B1, _) => c.top.largest() as i64 - 1 - c.bottom.largest() as i64,
        (RepKind::B2, 1) => {
            let bottom = c.bottom.as_partition().ok_or_else(|| Error::Invalid("first bottom entry is overlined".into()))?;
            stats::second_over_rank(&c.top)? - stats::second_rank(&bottom)?
        }
        (RepKind::B2, _) => {
            let (lt, lb) = (c.top.largest(), c.bottom.largest());
            if lt % 2 == 1 || lb % 2 == 1 {
                return Err(Error::Invalid(format!("column {i} has an odd largest part")));
            }
            (lt / 2) as i64 - 1 - (lb / 2) as i64
        }
        (RepKind::Generic, _) => unreachable!("checked by callers"),
    };
    Ok(base + chi)
}

/// All rank components of a representation.
pub fn rank_vector(v: &BufferedRep) -> Result<RankVector> {
    let components = (1..=v.num_columns()).map(|i| rank(v, i)).collect::<Result<_>>()?;
    Ok(RankVector { components })
}

/// Sum of the rank components.
pub fn full_rank(v: &BufferedRep) -> Result<i64> {
    rank_vector(v).map(|r| r.full())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::buffered::tests::{B1_EXAMPLE, B2_EXAMPLE};

    #[test]
    fn example_ranks() {
        let b1: BufferedRep = B1_EXAMPLE.parse().unwrap();
        assert_eq!(rank_vector(&b1).unwrap().components, vec![-2, -1, 2]);
        assert_eq!(full_rank(&b1).unwrap(), -1);
        assert_eq!(rank_b1(&b1, 4).unwrap(), 0);
        let b2: BufferedRep = B2_EXAMPLE.parse().unwrap();
        assert_eq!(rank_vector(&b2).unwrap().components, vec![-1, -1, 0]);
        assert!(rank_b1(&b2, 1).is_err());
        assert_eq!(full_rank(&BufferedRep::empty(RepKind::B1)).unwrap(), 0);
    }
}
