//! The Joichi–Stanton map and its parity variant, with inverses.

use serde::Serialize;

use crate::error::{precondition, Error, Result};
use crate::partition::{Overpartition, Part, Partition};
use crate::stats;

/// State of [`js_map`] after each mark has been consumed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JsStep {
    pub lambda: Vec<Part>,
    pub marks: Vec<u32>,
    pub over_bracket: usize,
    pub cl_rank: i64,
}

/// Joichi–Stanton map: for each mark `m`, largest first, add 1 to the first
/// `m` parts of `base` and overline part `m + 1`.
pub fn js_map(base: &Partition, marks: &Partition) -> Result<Overpartition> {
    js_map_step(base, marks, 1)
}

/// Scaled Joichi–Stanton map: every mark is a multiple `step * m`, and it adds
/// `step` to the first `m` parts before overlining part `m + 1`.
pub fn js_map_step(base: &Partition, marks: &Partition, step: u32) -> Result<Overpartition> {
    js_run(base, marks, step, |_| {})
}

/// As [`js_map`], also returning the state before the first mark and after
/// each mark.
pub fn js_map_traced(base: &Partition, marks: &Partition) -> Result<(Overpartition, Vec<JsStep>)> {
    let mut steps = Vec::new();
    let out = js_run(base, marks, 1, |s| steps.push(s))?;
    Ok((out, steps))
}

fn js_run(base: &Partition, marks: &Partition, step: u32, mut record: impl FnMut(JsStep)) -> Result<Overpartition> {
    let n = base.len();
    if !marks.is_distinct() {
        return Err(precondition("js_map", format!("marks {marks} are not distinct")));
    }
    let mut lambda: Vec<Part> = base.parts().iter().map(|&v| Part::plain(v)).collect();
    let mut snapshot = |lambda: &[Part], rest: &[u32]| {
        let o = Overpartition::new(lambda.to_vec()).ok();
        record(JsStep {
            lambda: lambda.to_vec(),
            marks: rest.to_vec(),
            over_bracket: o.as_ref().and_then(|o| stats::over_bracket(o).ok()).unwrap_or(0),
            cl_rank: o.as_ref().and_then(|o| stats::cl_rank(o).ok()).unwrap_or(0),
        })
    };
    snapshot(&lambda, marks.parts());
    for (k, &mark) in marks.parts().iter().enumerate() {
        if mark % step != 0 {
            return Err(precondition("js_map", format!("mark {mark} is not a multiple of {step}")));
        }
        let m = (mark / step) as usize;
        if m >= n {
            return Err(precondition("js_map", format!("mark {mark} is too large for {n} parts")));
        }
        lambda[..m].iter_mut().for_each(|p| p.value += step);
        lambda[m].overlined = true;
        snapshot(&lambda, &marks.parts()[k + 1..]);
    }
    Overpartition::new(lambda)
}

/// Inverse of [`js_map`]: repeatedly take the first overlined part, at index
/// `j`, drop its overline and subtract 1 from the `j - 1` parts before it,
/// recording the mark `j - 1`.
pub fn js_inverse(p: &Overpartition) -> Result<(Partition, Partition)> {
    js_inverse_step(p, 1)
}

/// Inverse of [`js_map_step`].
pub fn js_inverse_step(p: &Overpartition, step: u32) -> Result<(Partition, Partition)> {
    let mut values: Vec<u32> = p.values().collect();
    let mut marks = Vec::new();
    for (j, part) in p.parts().iter().enumerate() {
        if !part.overlined {
            continue;
        }
        for v in &mut values[..j] {
            *v = v
                .checked_sub(step)
                .ok_or_else(|| Error::Invalid(format!("{p} is not a Joichi–Stanton image")))?;
        }
        marks.push(step * j as u32);
    }
    let base = Partition::new(values).map_err(|_| Error::Invalid(format!("{p} is not a Joichi–Stanton image")))?;
    Ok((base, Partition::from_unsorted(marks)))
}

/// Parity variant: `base` has even parts, marks are distinct odd numbers
/// `2s + 1`; each mark, largest first, adds 2 to the first `s` parts and 1
/// to part `s + 1`.
pub fn js2_map(base: &Partition, marks: &Partition) -> Result<Partition> {
    let n = base.len();
    if base.parts().iter().any(|v| v % 2 == 1) {
        return Err(precondition("js2_map", format!("base {base} has an odd part")));
    }
    if !marks.is_distinct() || marks.parts().iter().any(|v| v % 2 == 0) {
        return Err(precondition("js2_map", format!("marks {marks} are not distinct odd parts")));
    }
    let mut values = base.parts().to_vec();
    for &mark in marks.parts() {
        let s = (mark / 2) as usize;
        if s >= n {
            return Err(precondition("js2_map", format!("mark {mark} is too large for {n} parts")));
        }
        values[..s].iter_mut().for_each(|v| *v += 2);
        values[s] += 1;
    }
    Partition::new(values)
}

/// Inverse of [`js2_map`]: repeatedly take the first odd part, at index `j`,
/// subtract 1 from it and 2 from the parts before it, recording `2j - 1`.
pub fn js2_inverse(p: &Partition) -> Result<(Partition, Partition)> {
    if p.parts().windows(2).any(|w| w[0] == w[1] && w[0] % 2 == 1) {
        return Err(precondition("js2_inverse", format!("{p} repeats an odd part")));
    }
    let mut values = p.parts().to_vec();
    let mut marks = Vec::new();
    for j in 0..values.len() {
        if values[j] % 2 == 0 {
            continue;
        }
        values[j] -= 1;
        for v in &mut values[..j] {
            *v = v
                .checked_sub(2)
                .ok_or_else(|| Error::Invalid(format!("{p} is not an image of the parity map")))?;
        }
        marks.push(2 * j as u32 + 1);
    }
    let base = Partition::new(values).map_err(|_| Error::Invalid(format!("{p} is not an image of the parity map")))?;
    Ok((base, Partition::from_unsorted(marks)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn op(s: &str) -> Overpartition {
        s.parse().unwrap()
    }

    #[test]
    fn js_example() {
        let (out, steps) = js_map_traced(&pt("[4,3,2,2]"), &pt("[3,1,0]")).unwrap();
        assert_eq!(out, op("[6~,4~,3,2~]"));
        assert_eq!(steps.len(), 4);
        assert!(steps.iter().all(|s| s.over_bracket == 1 && s.cl_rank == 3));
        assert_eq!(js_inverse(&out).unwrap(), (pt("[4,3,2,2]"), pt("[3,1,0]")));
        assert_eq!(js_map(&pt("[3,1]"), &Partition::empty()).unwrap(), op("[3,1]"));
        assert_eq!(js_inverse(&op("[1~,1,0~]")).unwrap(), (pt("[0,0,0]"), pt("[2,0]")));
        assert!(js_map(&pt("[1,1]"), &pt("[2]")).is_err());
    }

    #[test]
    fn js2_example() {
        assert_eq!(js2_map(&pt("[4,4]"), &pt("[3]")).unwrap(), pt("[6,5]"));
        assert_eq!(js2_inverse(&pt("[6,5]")).unwrap(), (pt("[4,4]"), pt("[3]")));
        assert_eq!(js2_inverse(&pt("[4,2]")).unwrap(), (pt("[4,2]"), Partition::empty()));
        assert!(js2_map(&pt("[2]"), &pt("[3]")).is_err());
    }

    #[test]
    fn scaled_variant() {
        let out = js_map_step(&pt("[4,4]"), &pt("[2]"), 2).unwrap();
        assert_eq!(out, op("[6,4~]"));
        assert_eq!(js_inverse_step(&op("[2,0~]"), 2).unwrap(), (pt("[0,0]"), pt("[2]")));
    }
}
