//! Exact truncated power series in `q` over pluggable coefficient rings.

pub mod andrews;
pub mod builders;
mod cyclotomic;
mod laurent;
mod ring;
mod series;

use num_rational::BigRational;

pub use andrews::{check_andrews, AndrewsParams, AndrewsReport};
pub use builders::*;
pub use cyclotomic::{cyclotomic_polynomial, Cyclotomic};
pub use laurent::Laurent;
pub use ring::{power, Ring};
pub use series::{inverse_pochhammer, pochhammer, Series};

/// How Laurent variables are printed: by name, with exponents divided by
/// `denom` (so `w^p` over `w = z^(1/k)` prints as `z^{p/k}`).
#[derive(Clone, Debug)]
pub struct VarStyle {
    pub names: Vec<String>,
    pub denom: i32,
}

impl VarStyle {
    /// The single variable `z`, with exponents in `(1/denom) Z`.
    pub fn z(denom: i32) -> Self {
        VarStyle { names: vec!["z".into()], denom }
    }

    /// Variables `x1, ..., xk`.
    pub fn xs(k: usize) -> Self {
        VarStyle { names: (1..=k).map(|i| format!("x{i}")).collect(), denom: 1 }
    }

    fn name(&self, i: usize) -> String {
        self.names.get(i).cloned().unwrap_or_else(|| format!("x{}", i + 1))
    }

    fn power(&self, i: usize, e: i32) -> String {
        let name = self.name(i);
        let g = gcd(e.unsigned_abs(), self.denom.unsigned_abs()) as i32;
        let (p, d) = (e / g, self.denom / g);
        match (p, d) {
            (1, 1) => name,
            (p, 1) => format!("{name}^{p}"),
            (p, d) => format!("{name}^{{{p}/{d}}}"),
        }
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a.max(1)
    } else {
        gcd(b, a % b)
    }
}

/// Text form of a coefficient.
pub trait Dump {
    fn dump(&self, vars: &VarStyle) -> String;

    /// Whether the text form needs parentheses when multiplied.
    fn is_compound(&self) -> bool {
        false
    }
}

impl Dump for i64 {
    fn dump(&self, _: &VarStyle) -> String {
        self.to_string()
    }
}

impl Dump for BigRational {
    fn dump(&self, _: &VarStyle) -> String {
        self.to_string()
    }
}

fn join_terms(terms: Vec<String>) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, t) in terms.into_iter().enumerate() {
        match (i, t.strip_prefix('-')) {
            (0, _) => out.push_str(&t),
            (_, Some(rest)) => {
                out.push_str(" - ");
                out.push_str(rest);
            }
            (_, None) => {
                out.push_str(" + ");
                out.push_str(&t);
            }
        }
    }
    out
}

fn scaled_term(coeff: String, compound: bool, mono: String) -> String {
    match (coeff.as_str(), mono.is_empty()) {
        (_, true) => coeff,
        ("1", false) => mono,
        ("-1", false) => format!("-{mono}"),
        (_, false) if compound => format!("({coeff})*{mono}"),
        (_, false) => format!("{coeff}*{mono}"),
    }
}

impl Dump for Cyclotomic {
    fn dump(&self, _: &VarStyle) -> String {
        let zeta = format!("zeta_{}", self.order());
        let terms = self
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(e, &c)| {
                let mono = match e {
                    0 => String::new(),
                    1 => zeta.clone(),
                    e => format!("{zeta}^{e}"),
                };
                scaled_term(c.to_string(), false, mono)
            })
            .collect();
        join_terms(terms)
    }

    fn is_compound(&self) -> bool {
        self.coeffs().iter().filter(|&&c| c != 0).count() > 1
    }
}

impl<C: Ring + Dump> Dump for Laurent<C> {
    fn dump(&self, vars: &VarStyle) -> String {
        let terms = self
            .terms()
            .map(|(e, c)| {
                let mono: Vec<String> =
                    e.iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, &x)| vars.power(i, x)).collect();
                scaled_term(c.dump(vars), c.is_compound(), mono.join("*"))
            })
            .collect();
        join_terms(terms)
    }

    fn is_compound(&self) -> bool {
        self.num_terms() > 1
    }
}

/// One line `q^n : <coefficient>` per exponent up to the order.
pub fn dump<R: Ring + Dump>(s: &Series<R>, vars: &VarStyle) -> String {
    s.coeffs().iter().enumerate().map(|(n, c)| format!("q^{n} : {}\n", c.dump(vars))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dump_format() {
        let s = build_rk(1, 2);
        assert_eq!(dump(&s, &VarStyle::z(1)), "q^0 : 1\nq^1 : 2\nq^2 : 2*z^-1 + 2*z\n");
        let w = Laurent::monomial(Cyclotomic::one().minus(&Cyclotomic::zeta_pow(3, 1)), vec![2]);
        assert_eq!(w.dump(&VarStyle::z(3)), "(1 - zeta_3)*z^{2/3}");
        assert_eq!(Laurent::<i64>::monomial(-3, vec![3]).dump(&VarStyle::z(3)), "-3*z");
        assert_eq!(Laurent::<i64>::zero().dump(&VarStyle::xs(2)), "0");
        let m = Laurent::<i64>::monomial(2, vec![1, -1]);
        assert_eq!(m.dump(&VarStyle::xs(2)), "2*x1*x2^-1");
    }
}
