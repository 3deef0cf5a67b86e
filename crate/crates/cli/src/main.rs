//! `bufrob`: series expansion, enumeration, bijections, verification and
//! tableau rendering from the command line.

mod trace;

use std::io::{self, BufRead, Write};
use std::process::ExitCode;

use bufrob_core::buffered::{
    conjugate, enumerate_reps, full_conjugate, jigsaw, render_overpartition, render_rep, BufferedRep, RepKind,
};
use bufrob_core::enumerate::overpartitions;
use bufrob_core::frobenius::{
    enumerate_symbols, f1_to_overpartition, f2_to_overpartition, js2_inverse, js2_map, js_inverse, js_map,
    overpartition_to_f1, overpartition_to_f2, FrobeniusKind, FrobeniusSymbol,
};
use bufrob_core::qseries::{
    build_rk, dump, f1_lemma, f2_lemma, mk_slice, r2k_multi_lhs, rhs_firsthype, rhs_secondhype, rk_multi_lhs,
    substitute_roots, F2Variant, VarStyle,
};
use bufrob_core::verify::{run_suite, to_json, to_table, SuiteParams};
use bufrob_core::{Error, Overpartition, Partition};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "bufrob", version, about = "Buffered Frobenius representations and overpartition rank series")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the coefficients of a series, one line per power of q.
    Expand {
        #[arg(long, value_enum)]
        series: SeriesName,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long = "N", short = 'N')]
        n: usize,
        /// Power of z for the slice series.
        #[arg(long, allow_hyphen_values = true)]
        m: Option<i64>,
        /// Set x_i = zeta_k^(i-1) z^(1/k) in a multivariate series.
        #[arg(long)]
        subst_roots: bool,
    },
    /// Apply a bijection, conjugation or the jigsaw map.
    Map {
        #[arg(long, value_enum)]
        op: MapOp,
        /// Column for `conj`, from 1.
        #[arg(long)]
        index: Option<usize>,
        /// Print the intermediate states.
        #[arg(long)]
        trace: bool,
        /// Object text; read line by line from standard input when absent.
        input: Option<String>,
    },
    /// List every object of a weight.
    Enumerate {
        #[arg(long, value_enum)]
        kind: EnumKind,
        #[arg(long)]
        n: u64,
        /// Maximum number of columns for buffered representations.
        #[arg(long, default_value_t = 1)]
        kmax: usize,
        /// Print only the number of objects.
        #[arg(long)]
        count: bool,
    },
    /// Run verification suites; the exit status is 1 when a check fails.
    Verify {
        /// Suite name, or `battery` for all of them.
        #[arg(long, default_value = "battery")]
        suite: String,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long = "N", short = 'N')]
        n: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// Include wall times in the table.
        #[arg(long)]
        times: bool,
    },
    /// Draw the Young tableau of an overpartition or buffered representation.
    Tableau {
        /// Object text; read line by line from standard input when absent.
        input: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesName {
    #[value(name = "Rk", alias = "rk")]
    Rk,
    #[value(name = "Rk-multi", alias = "rk-multi")]
    RkMulti,
    #[value(name = "R2k-multi", alias = "r2k-multi")]
    R2kMulti,
    #[value(name = "Rk-multi-rhs", alias = "rk-multi-rhs")]
    RkMultiRhs,
    #[value(name = "R2k-multi-rhs", alias = "r2k-multi-rhs")]
    R2kMultiRhs,
    F1,
    F2,
    /// The lemma read with `(-1; q^2)_{2n}`.
    F2Q2,
    MkSlice,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MapOp {
    F1Fwd,
    F1Inv,
    F2Fwd,
    F2Inv,
    Js,
    JsInv,
    Js2,
    Js2Inv,
    Conj,
    FullConj,
    Jigsaw,
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumKind {
    Overpartition,
    F1,
    F2,
    B1,
    B2,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

/// A failure with its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: 3, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Expand { series, k, n, m, subst_roots } => expand(series, k, n, m, subst_roots),
        Command::Map { op, index, trace, input } => per_input(input, |s| map(op, index, trace, s)),
        Command::Enumerate { kind, n, kmax, count } => enumerate(kind, n, kmax, count),
        Command::Verify { suite, k, n, s, t, format, times } => {
            return verify(&suite, SuiteParams { k, n, s, t }, format, times);
        }
        Command::Tableau { input } => per_input(input, tableau),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("bufrob: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

/// Runs `f` on the argument, or on every nonblank line of standard input.
fn per_input(input: Option<String>, f: impl Fn(&str) -> Outcome) -> Outcome {
    match input {
        Some(s) => f(&s),
        None => {
            let mut out = String::new();
            for line in io::stdin().lock().lines() {
                let line = line.map_err(|e| Failure { code: 3, message: e.to_string() })?;
                if !line.trim().is_empty() {
                    out.push_str(&f(&line)?);
                }
            }
            Ok(out)
        }
    }
}

fn expand(series: SeriesName, k: usize, n: usize, m: Option<i64>, subst_roots: bool) -> Outcome {
    if k == 0 {
        return Err(usage("--k must be positive"));
    }
    let multi = matches!(
        series,
        SeriesName::RkMulti | SeriesName::R2kMulti | SeriesName::RkMultiRhs | SeriesName::R2kMultiRhs
    );
    if subst_roots && !multi {
        return Err(usage("--subst-roots applies to multivariate series only"));
    }
    if m.is_some() && !matches!(series, SeriesName::MkSlice) {
        return Err(usage("--m applies to mk-slice only"));
    }
    let s = match series {
        SeriesName::Rk => build_rk(k, n),
        SeriesName::RkMulti => rk_multi_lhs(k, n),
        SeriesName::R2kMulti => r2k_multi_lhs(k, n),
        SeriesName::RkMultiRhs => rhs_firsthype(k, n),
        SeriesName::R2kMultiRhs => rhs_secondhype(k, n),
        SeriesName::F1 => f1_lemma(n),
        SeriesName::F2 => f2_lemma(F2Variant::BaseQ, n),
        SeriesName::F2Q2 => f2_lemma(F2Variant::BaseQ2, n),
        SeriesName::MkSlice => {
            let m = m.filter(|&m| m != 0).ok_or_else(|| usage("mk-slice needs a nonzero --m"))?;
            return Ok(dump(&mk_slice(k, m, n)?, &VarStyle::z(1)));
        }
    };
    Ok(if subst_roots {
        dump(&substitute_roots(&s, k as u32), &VarStyle::z(k as i32))
    } else if multi {
        dump(&s, &VarStyle::xs(k))
    } else {
        dump(&s, &VarStyle::z(1))
    })
}

/// Splits `"[4,3,2,2] [3,1,0]"` (or with `;` between) into two partitions.
fn partition_pair(s: &str) -> Result<(Partition, Partition), Error> {
    let s = s.trim();
    let cut = s.find(']').map(|i| i + 1).ok_or_else(|| Error::Parse(format!("`{s}` is not a pair of partitions")))?;
    let (a, b) = s.split_at(cut);
    let b = b.trim_start().trim_start_matches(';');
    Ok((a.parse()?, b.parse()?))
}

fn pair_text(a: &Partition, b: &Partition) -> String {
    format!("{a} {b}\n")
}

fn rep(s: &str) -> Result<BufferedRep, Error> {
    let v: BufferedRep = s.parse()?;
    if v.kind == RepKind::Generic {
        return Err(Error::Invalid(format!("`{s}` needs a B1: or B2: tag")));
    }
    Ok(v)
}

fn map(op: MapOp, index: Option<usize>, traced: bool, input: &str) -> Outcome {
    if index.is_some() && op != MapOp::Conj {
        return Err(usage("--index applies to conj only"));
    }
    if traced {
        return trace::traced(op, input);
    }
    let out = match op {
        MapOp::F1Fwd => format!("{}\n", f1_to_overpartition(&input.parse::<FrobeniusSymbol>()?)?),
        MapOp::F1Inv => format!("{}\n", overpartition_to_f1(&input.parse::<Overpartition>()?)?),
        MapOp::F2Fwd => format!("{}\n", f2_to_overpartition(&input.parse::<FrobeniusSymbol>()?)?),
        MapOp::F2Inv => format!("{}\n", overpartition_to_f2(&input.parse::<Overpartition>()?)?),
        MapOp::Js => {
            let (base, marks) = partition_pair(input)?;
            format!("{}\n", js_map(&base, &marks)?)
        }
        MapOp::JsInv => {
            let (base, marks) = js_inverse(&input.parse::<Overpartition>()?)?;
            pair_text(&base, &marks)
        }
        MapOp::Js2 => {
            let (base, marks) = partition_pair(input)?;
            format!("{}\n", js2_map(&base, &marks)?)
        }
        MapOp::Js2Inv => {
            let (base, marks) = js2_inverse(&input.parse::<Partition>()?)?;
            pair_text(&base, &marks)
        }
        MapOp::Conj => {
            let i = index.ok_or_else(|| usage("conj needs --index"))?;
            format!("{}\n", conjugate(&rep(input)?, i)?)
        }
        MapOp::FullConj => format!("{}\n", full_conjugate(&rep(input)?)?),
        MapOp::Jigsaw => format!("{}\n", jigsaw(&rep(input)?)?),
    };
    Ok(out)
}

fn enumerate(kind: EnumKind, n: u64, kmax: usize, count: bool) -> Outcome {
    let items: Vec<String> = match kind {
        EnumKind::Overpartition => overpartitions(n).map(|p| p.to_string()).collect(),
        EnumKind::F1 => enumerate_symbols(n, FrobeniusKind::First).iter().map(|s| s.to_string()).collect(),
        EnumKind::F2 => enumerate_symbols(n, FrobeniusKind::Second).iter().map(|s| s.to_string()).collect(),
        EnumKind::B1 => enumerate_reps(n, kmax, RepKind::B1)?.iter().map(|v| v.to_string()).collect(),
        EnumKind::B2 => enumerate_reps(n, kmax, RepKind::B2)?.iter().map(|v| v.to_string()).collect(),
    };
    Ok(if count { format!("{}\n", items.len()) } else { items.iter().map(|s| format!("{s}\n")).collect() })
}

fn verify(suite: &str, params: SuiteParams, format: Format, times: bool) -> ExitCode {
    let reports = match run_suite(suite, params) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("bufrob: {e}");
            return ExitCode::from(2);
        }
    };
    let out = match format {
        Format::Json => format!("{}\n", to_json(&reports)),
        Format::Table => to_table(&reports, times),
    };
    let mut stdout = io::stdout().lock();
    if stdout.write_all(out.as_bytes()).is_err() {
        return ExitCode::from(3);
    }
    if reports.iter().all(|r| r.passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn tableau(input: &str) -> Outcome {
    let s = input.trim();
    if s.is_empty() {
        return Ok(String::new());
    }
    if s.contains('|') || s.contains(';') || s.starts_with('B') {
        return Ok(render_rep(&s.parse()?));
    }
    Ok(render_overpartition(&s.parse()?))
}
