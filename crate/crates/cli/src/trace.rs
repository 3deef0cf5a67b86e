//! Per-step state tables for the traced maps.

use bufrob_core::frobenius::{f1_to_overpartition_traced, f2_to_overpartition_traced, js_map_traced, overpartition_to_f2_traced};
use bufrob_core::{Overpartition, Part};

use super::{partition_pair, usage, MapOp, Outcome};

fn list<T: ToString>(items: &[T]) -> String {
    let parts: Vec<String> = items.iter().map(T::to_string).collect();
    format!("[{}]", parts.join(","))
}

/// Left-aligned columns separated by two spaces.
fn table(header: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: Vec<String>| -> String {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, &w)| format!("{c:<w$}")).collect();
        format!("{}\n", padded.join("  ").trim_end())
    };
    let mut out = line(header.iter().map(|h| h.to_string()).collect());
    for row in rows {
        out.push_str(&line(row));
    }
    out
}

pub(crate) fn traced(op: MapOp, input: &str) -> Outcome {
    let (result, body) = match op {
        MapOp::F1Fwd => {
            let (p, steps) = f1_to_overpartition_traced(&input.parse()?)?;
            let rows = steps
                .iter()
                .enumerate()
                .map(|(i, s)| vec![i.to_string(), list(&s.alpha), list(&s.beta), list(&s.lambda1), list(&s.lambda2)])
                .collect();
            (p.to_string(), table(&["iteration", "alpha", "beta", "lambda1", "lambda2"], rows))
        }
        MapOp::F2Fwd => {
            let (p, steps) = f2_to_overpartition_traced(&input.parse()?)?;
            let rows = steps
                .iter()
                .enumerate()
                .map(|(i, s)| vec![(i + 1).to_string(), list(&s.alpha), list(&s.beta), list(&s.lambda)])
                .collect();
            (p.to_string(), table(&["step", "alpha", "beta", "lambda"], rows))
        }
        MapOp::F2Inv => {
            let (sym, steps) = overpartition_to_f2_traced(&input.parse::<Overpartition>()?)?;
            let over = |v: &[u32]| list(&v.iter().map(|&x| Part::over(x)).collect::<Vec<_>>());
            let rows = steps
                .iter()
                .enumerate()
                .map(|(i, s)| {
                    vec![
                        i.to_string(),
                        over(&s.over_even),
                        list(&s.even),
                        over(&s.over_odd),
                        list(&s.odd),
                        s.a.to_string(),
                        list(&s.alpha),
                        list(&s.beta),
                    ]
                })
                .collect();
            (sym.to_string(), table(&["iteration", "over_even", "even", "over_odd", "odd", "a", "alpha", "beta"], rows))
        }
        MapOp::Js => {
            let (base, marks) = partition_pair(input)?;
            let (p, steps) = js_map_traced(&base, &marks)?;
            let rows = steps
                .iter()
                .enumerate()
                .map(|(i, s)| {
                    vec![i.to_string(), list(&s.lambda), list(&s.marks), s.over_bracket.to_string(), s.cl_rank.to_string()]
                })
                .collect();
            (p.to_string(), table(&["iteration", "lambda", "mu", "over_bracket", "cl_rank"], rows))
        }
        _ => return Err(usage("--trace is available for f1-fwd, f2-fwd, f2-inv and js")),
    };
    Ok(format!("{body}result: {result}\n"))
}
