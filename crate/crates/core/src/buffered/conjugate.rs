//! Column conjugations: involutions negating one rank component.

use super::{BufferedRep, Column, RepKind};
use crate::error::{precondition, Result};
use crate::frobenius::{js2_inverse, js2_map, js_inverse, js_inverse_step, js_map, js_map_step};
use crate::partition::{Overpartition, Partition};

/// Conjugation at column `i` (from 1) of a first-kind representation.
///
/// Column 1: remove the staircase from the top entry, split the bottom entry
/// with the Joichi–Stanton inverse into a base and marks, and rebuild the top
/// as base plus staircase and the bottom as the Joichi–Stanton image of the
/// de-staircased top with those marks. Later columns trade top and bottom
/// while shifting every part by one. Hats are exchanged; indices past the
/// last column leave the representation unchanged.
pub fn conjugate_b1(v: &BufferedRep, i: usize) -> Result<BufferedRep> {
    if v.kind != RepKind::B1 {
        return Err(precondition("conjugate_b1", "expected a B1 representation"));
    }
    v.require_valid("conjugate_b1")?;
    let Some(j) = i.checked_sub(1).filter(|&j| j < v.columns.len()) else {
        return Ok(v.clone());
    };
    let c = &v.columns[j];
    let (top, bottom) = if j == 0 {
        let t = c.top.len();
        let staircase = Partition::staircase(t);
        let top = c.top.underlying();
        let lowered = Partition::new(top.parts().iter().zip(staircase.parts()).map(|(a, s)| a - s).collect())?;
        let (base, marks) = js_inverse(&c.bottom)?;
        let new_top = Partition::new(base.parts().iter().zip(staircase.parts()).map(|(a, s)| a + s).collect())?;
        (new_top.to_overpartition(), js_map(&lowered, &marks)?)
    } else {
        (c.bottom.shifted_up(1), c.top.shifted_down(1)?)
    };
    Ok(replace(v, j, top, bottom))
}

/// Conjugation at column `i` (from 1) of a second-kind representation.
///
/// Column 1: lower the odd top entry to even parts and split it with the
/// scaled Joichi–Stanton inverse into an even base and even marks; split the
/// bottom entry with the parity inverse into an even base and odd marks; then
/// swap the bases. Later columns trade top and bottom while shifting every
/// part by two. Hats are exchanged.
pub fn conjugate_b2(v: &BufferedRep, i: usize) -> Result<BufferedRep> {
    if v.kind != RepKind::B2 {
        return Err(precondition("conjugate_b2", "expected a B2 representation"));
    }
    v.require_valid("conjugate_b2")?;
    let Some(j) = i.checked_sub(1).filter(|&j| j < v.columns.len()) else {
        return Ok(v.clone());
    };
    let c = &v.columns[j];
    let (top, bottom) = if j == 0 {
        let (alpha, beta) = js_inverse_step(&c.top.shifted_down(1)?, 2)?;
        let bottom = c.bottom.underlying();
        let (gamma, delta) = js2_inverse(&bottom)?;
        let new_top = js_map_step(&gamma, &beta, 2)?.shifted_up(1);
        (new_top, js2_map(&alpha, &delta)?.to_overpartition())
    } else {
        (c.bottom.shifted_up(2), c.top.shifted_down(2)?)
    };
    Ok(replace(v, j, top, bottom))
}

fn replace(v: &BufferedRep, j: usize, top: Overpartition, bottom: Overpartition) -> BufferedRep {
    let mut out = v.clone();
    let c = &v.columns[j];
    out.columns[j] = Column { top, bottom, top_hat: c.bottom_hat, bottom_hat: c.top_hat };
    out
}

/// Conjugation at column `i` for either kind.
pub fn conjugate(v: &BufferedRep, i: usize) -> Result<BufferedRep> {
    match v.kind {
        RepKind::B1 => conjugate_b1(v, i),
        RepKind::B2 => conjugate_b2(v, i),
        RepKind::Generic => Err(precondition("conjugate", "generic representations have no conjugation")),
    }
}

/// Composition of the conjugations at every column.
pub fn full_conjugate(v: &BufferedRep) -> Result<BufferedRep> {
    (1..=v.num_columns()).try_fold(v.clone(), |acc, i| conjugate(&acc, i))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::buffered::rank::full_rank;
    use crate::buffered::tests::{B1_EXAMPLE, B2_EXAMPLE};

    fn rep(s: &str) -> BufferedRep {
        s.parse().unwrap()
    }

    #[test]
    fn first_kind_conjugations() {
        let v = rep(B1_EXAMPLE);
        assert_eq!(conjugate_b1(&v, 1).unwrap(), rep("B1: [6,5,4]|[2,2,1]|[3] ; ^[1~,1,0~]|^[1,0,0]|[0]"));
        assert_eq!(conjugate_b1(&v, 2).unwrap(), rep("B1: ^[3,2,1]|^[2,1,1]|[3] ; [4~,4,3~]|[1,1,0]|[0]"));
        assert_eq!(conjugate_b1(&v, 3).unwrap(), rep("B1: ^[3,2,1]|[2,2,1]|[1] ; [4~,4,3~]|^[1,0,0]|[2]"));
        assert_eq!(conjugate_b1(&v, 4).unwrap(), v);
        let full = full_conjugate(&v).unwrap();
        assert_eq!(full_rank(&full).unwrap(), 1);
        assert_eq!(full_conjugate(&full).unwrap(), v);
    }

    #[test]
    fn second_kind_conjugations() {
        let v = rep(B2_EXAMPLE);
        assert_eq!(conjugate_b2(&v, 1).unwrap(), rep("B2: [7,5~]|[2,2]|[4] ; ^[2,1]|[2,0]|[2]"));
        assert_eq!(conjugate_b2(&v, 2).unwrap(), rep("B2: ^[3,1~]|[4,2]|[4] ; [6,5]|[0,0]|[2]"));
        assert_eq!(conjugate_b2(&v, 3).unwrap(), v);
        assert_eq!(full_conjugate(&BufferedRep::empty(RepKind::B2)).unwrap(), BufferedRep::empty(RepKind::B2));
    }
}
