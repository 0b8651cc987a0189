//! Human-readable rendering with exact scalar literals.

use std::fmt::Write;

use twistalg_core::report::AxiomReport;
use twistalg_core::{Matrix, Scalar};

/// `c*name` with complex coefficients parenthesized.
fn coefficient(c: &Scalar) -> String {
    if c.is_real() {
        c.to_string()
    } else {
        format!("({c})")
    }
}

pub fn vector(names: &[String], v: &[Scalar]) -> String {
    let terms: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, c)| !is_zero(c))
        .map(|(k, c)| format!("{}*{}", coefficient(c), names[k]))
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn is_zero(c: &Scalar) -> bool {
    *c == Scalar::from_int(0)
}

/// An antisymmetric tensor as `Σ_{i<j} c e_i∧e_j`; anything else as
/// `Σ c e_i⊗e_j`.
pub fn two_tensor(names: &[String], m: &Matrix) -> String {
    let n = m.rows();
    let wedge = m.is_antisymmetric();
    let mut terms = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let c = &m[(i, j)];
            if is_zero(c) || (wedge && i >= j) {
                continue;
            }
            let op = if wedge { "∧" } else { "⊗" };
            terms.push(format!("{}*{}{op}{}", coefficient(c), names[i], names[j]));
        }
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

pub fn matrix(m: &Matrix) -> String {
    format!("{m:?}")
}

pub fn rows(m: &Matrix) -> Vec<Vec<String>> {
    m.row_vectors()
        .into_iter()
        .map(|r| r.iter().map(|x| x.to_string()).collect())
        .collect()
}

pub fn axiom_report(report: &AxiomReport) -> String {
    let mut out = String::new();
    for c in &report.checks {
        writeln!(out, "{c}").expect("writing to a String");
    }
    out
}
