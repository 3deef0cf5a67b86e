//! ASCII rendering of dotted and buffered Young tableaux.

use super::BufferedRep;
use crate::partition::Overpartition;

/// Row indices carrying a dot: the last row of each overlined size.
fn dotted_rows(p: &Overpartition) -> Vec<bool> {
    let parts = p.parts();
    let mut dots = vec![false; parts.len()];
    for (i, part) in parts.iter().enumerate() {
        if part.overlined {
            let last = parts.iter().rposition(|q| q.value == part.value).unwrap_or(i);
            dots[last] = true;
        }
    }
    dots
}

fn trim_lines(rows: Vec<String>) -> String {
    rows.iter().map(|r| format!("{}\n", r.trim_end())).collect()
}

/// One row of `#` cells per part, the dotted cell drawn as `*`.
pub fn render_overpartition(p: &Overpartition) -> String {
    let dots = dotted_rows(p);
    let rows = p
        .values()
        .zip(dots)
        .filter(|&(v, _)| v > 0)
        .map(|(v, dot)| {
            let mut row = "#".repeat(v as usize);
            if dot {
                row.replace_range(row.len() - 1.., "*");
            }
            row
        })
        .collect();
    trim_lines(rows)
}

/// Top tableau, a blank line, then the bottom tableau. Column `j` is drawn
/// with the `j`-th letter; a hatted entry is followed by a `.` buffer column
/// spanning every row.
pub fn render_rep(v: &BufferedRep) -> String {
    if v.columns.is_empty() {
        return String::new();
    }
    let top = render_row(v, true);
    let bottom = render_row(v, false);
    format!("{top}\n{bottom}")
}

fn render_row(v: &BufferedRep, top: bool) -> String {
    let height = v.columns.first().map_or(0, |c| c.len());
    let mut rows = vec![String::new(); height];
    for (j, c) in v.columns.iter().enumerate() {
        let (entry, hat) = if top { (&c.top, c.top_hat) } else { (&c.bottom, c.bottom_hat) };
        let letter = char::from(b'a' + (j % 26) as u8);
        let width = entry.largest() as usize;
        let dots = dotted_rows(entry);
        for (r, row) in rows.iter_mut().enumerate() {
            let cells = entry.parts().get(r).map_or(0, |p| p.value as usize);
            let mut block: String = std::iter::repeat_n(letter, cells).collect();
            if cells > 0 && dots.get(r) == Some(&true) {
                block.replace_range(block.len() - 1.., "*");
            }
            row.push_str(&format!("{block:<width$}"));
            if hat {
                row.push('.');
            }
        }
    }
    trim_lines(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::buffered::tests::B1_EXAMPLE;

    #[test]
    fn dotted_tableau() {
        let p: Overpartition = "[4~,4,2,1]".parse().unwrap();
        assert_eq!(render_overpartition(&p), "####\n###*\n##\n#\n");
        assert_eq!(render_overpartition(&Overpartition::default()), "");
    }

    #[test]
    fn buffered_tableau() {
        let v: BufferedRep = B1_EXAMPLE.parse().unwrap();
        let out = render_rep(&v);
        assert_eq!(out, "aaa.bbccc\naa .bb\na  .b\n\naaaab.\naaa* .\naa*  .\n");
        let buffers = out.lines().next().unwrap().matches('.').count()
            + out.lines().nth(4).unwrap().matches('.').count();
        assert_eq!(buffers, v.hat_count());
    }
}
