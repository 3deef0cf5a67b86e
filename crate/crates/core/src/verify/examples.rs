//! Worked examples with known values.

use super::{Failure, Outcome, SuiteReport};
use crate::buffered::{full_conjugate, full_rank, rank_vector, BufferedRep};
use crate::enumerate::overpartitions;
use crate::error::Result;
use crate::frobenius::{
    f1_to_overpartition, f2_to_overpartition, js_inverse, js_map, overpartition_to_f1, overpartition_to_f2,
    FrobeniusSymbol,
};
use crate::partition::{Overpartition, Partition};
use crate::stats;

fn expect<T: PartialEq + std::fmt::Debug>(input: &str, got: Result<T>, want: T) -> Outcome {
    match got {
        Ok(g) if g == want => Ok(Some(format!("{input} -> {g:?}"))),
        Ok(g) => Err(Failure::new(format!("got {g:?}, expected {want:?}")).with(input)),
        Err(e) => Err(Failure::from(e).with(input)),
    }
}

fn over(s: &str) -> Overpartition {
    s.parse().expect("literal overpartition")
}

fn plain(s: &str) -> Partition {
    s.parse().expect("literal partition")
}

fn symbol(s: &str) -> FrobeniusSymbol {
    s.parse().expect("literal symbol")
}

fn text<T: ToString>(r: Result<T>) -> Result<String> {
    r.map(|x| x.to_string())
}

pub fn examples() -> SuiteReport {
    let mut r = SuiteReport::new("examples", &[]);
    for (p, want) in [("[4]", 3), ("[3,1]", 1), ("[2,2]", 0), ("[2,1,1]", -1), ("[1,1,1,1]", -3)] {
        r.add(format!("dyson rank {p}"), expect(p, stats::dyson_rank(&plain(p)), want));
    }
    r.add("overpartitions of 4", expect("4", Ok(overpartitions(4).count()), 14));
    r.add("overpartition dyson rank", expect("[4~,4,2,1]", stats::dyson_rank_over(&over("[4~,4,2,1]")), 0));
    r.add("M2 rank", expect("[2~,1,1]", stats::m2_rank_over(&over("[2~,1,1]")), 0));
    r.add("bracket", expect("[7,6,5,3,2]", stats::bracket(&plain("[7,6,5,3,2]")), 3));
    r.add("overpartition bracket", expect("[7,7,6~,5,4]", stats::over_bracket(&over("[7,7,6~,5,4]")), 4));
    r.add("second bracket", expect("[7,7,6,5,3,3,1]", stats::second_bracket(&plain("[7,7,6,5,3,3,1]")), 4));
    r.add(
        "second overpartition bracket",
        expect("[5,3~,3,1]", stats::second_over_bracket(&over("[5,3~,3,1]")), 3),
    );
    r.add("second rank", expect("[6,5]", stats::second_rank(&plain("[6,5]")), 2));
    r.add("second overpartition rank", expect("[3,1~]", stats::second_over_rank(&over("[3,1~]")), 0));
    r.add("CL rank", expect("[5~,3~,3,1~]", stats::cl_rank(&over("[5~,3~,3,1~]")), 2));
    r.add("conjugate", expect("[4~,4,2,1]", text(over("[4~,4,2,1]").conjugate()), "[4,3,2~,2]".to_string()));

    let f1 = "F1:[3,2,1;4~,4,3~]";
    r.add("first map forward", expect(f1, text(f1_to_overpartition(&symbol(f1))), "[3,3,3,3,3,2~]".to_string()));
    r.add("first map inverse", expect("[3,3,3,3,3,2~]", text(overpartition_to_f1(&over("[3,3,3,3,3,2~]"))), symbol(f1).to_string()));
    let f2 = "F2:[5,1~;6,5]";
    r.add("second map forward", expect(f2, text(f2_to_overpartition(&symbol(f2))), "[8,7~,2~]".to_string()));
    r.add("second map inverse", expect("[8,7~,2~]", text(overpartition_to_f2(&over("[8,7~,2~]"))), symbol(f2).to_string()));
    r.add(
        "joichi-stanton map",
        expect("[4,3,2,2] [3,1,0]", text(js_map(&plain("[4,3,2,2]"), &plain("[3,1,0]"))), "[6~,4~,3,2~]".to_string()),
    );
    r.add(
        "joichi-stanton inverse",
        expect(
            "[6~,4~,3,2~]",
            js_inverse(&over("[6~,4~,3,2~]")).map(|(a, b)| (a.to_string(), b.to_string())),
            ("[4,3,2,2]".to_string(), "[3,1,0]".to_string()),
        ),
    );

    let b1: BufferedRep = "B1: ^[3,2,1]|[2,2,1]|[3] ; [4~,4,3~]|^[1,0,0]|[0]".parse().expect("literal rep");
    r.add("buffered ranks", expect("B1 example", rank_vector(&b1).map(|v| v.components), vec![-2, -1, 2]));
    r.add("buffered full rank", expect("B1 example", full_rank(&b1), -1));
    r.add("full conjugation flips the full rank", expect("B1 example", full_conjugate(&b1).and_then(|c| full_rank(&c)), 1));
    r
}

#[cfg(test)]
mod tests {
    #[test]
    fn examples_pass() {
        let r = super::examples();
        assert!(r.passed, "{r:#?}");
    }
}
