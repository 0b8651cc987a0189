//! Existence verdicts for twist star products: the closed-surface catalog
//! and the algebraic consistency chain for a candidate r-matrix.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bialg::{cyb, etingof_schiffmann, Bivector};
use crate::deform::{check_associativity, moyal_twist, Poly};
use crate::error::{Error, Result};
use crate::liealg::LieAlgebra;
use crate::linalg::Matrix;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Existence {
    Yes,
    No,
    Undetermined,
}

impl fmt::Display for Existence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Yes => "yes",
            Self::No => "no",
            Self::Undetermined => "undetermined",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainStep {
    pub step: String,
    pub result: String,
    pub citation: String,
}

/// The executable evidence behind a "yes".
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoyalWitness {
    /// `F = exp(−cħ(∂1⊗∂2 − ∂2⊗∂1))`.
    pub coefficient: Scalar,
    pub order: usize,
    pub triples_checked: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub exists_twist_star: Existence,
    pub chain: Vec<ChainStep>,
    pub flags: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<MoyalWitness>,
}

impl Verdict {
    fn push(&mut self, step: &str, result: impl Into<String>, citation: &str) {
        self.chain.push(ChainStep {
            step: step.into(),
            result: result.into(),
            citation: citation.into(),
        });
    }

    pub fn has_inconsistency_flag(&self) -> bool {
        self.flags.iter().any(|f| f == INCONSISTENT_FLAG)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.chain {
            writeln!(f, "{}: {} [{}]", s.step, s.result, s.citation)?;
        }
        if let Some(w) = &self.witness {
            writeln!(
                f,
                "witness: Moyal twist c = {}, associative mod h^{} on {} triples",
                w.coefficient,
                w.order + 1,
                w.triples_checked
            )?;
        }
        writeln!(f, "exists twist star product: {}", self.exists_twist_star)?;
        for flag in &self.flags {
            writeln!(f, "flag: {flag}")?;
        }
        if self.has_inconsistency_flag() {
            write!(f, "contradiction flag raised")
        } else {
            write!(f, "no contradiction flag")
        }
    }
}

pub const INCONSISTENT_FLAG: &str =
    "inconsistent configuration: non-degenerate r-matrix on semisimple subalgebra (impossible)";

const CITE_EULER: &str = "χ(T(g)) = 2 − 2g";
const CITE_COMPACT: &str = "Theorem: a compact homogeneous space of a twist star product has χ(M) ≥ 0";
const CITE_SPHERE: &str = "Theorem: no twist star product on S²";
const CITE_PRETZEL: &str = "Theorem: no twist star product on T(g) for g > 1";
const CITE_TORUS: &str = "Weyl–Moyal star product on T² from F = exp(−iħ ∂₁∧∂₂)";
const CITE_ONISHCHIK: &str = "transitive effective actions on S² are by semisimple groups (Onishchik)";
const CITE_ANTISYM: &str = "definition: a triangular structure is r ∈ g∧g";
const CITE_CYBE: &str = "classical Yang–Baxter equation CYB(r) = 0";
const CITE_ES: &str = "Etingof–Schiffmann subalgebra h_r = {(f⊗1)r | f ∈ g*}";
const CITE_RESTRICT: &str = "r is non-degenerate on h_r";
const CITE_KILLING: &str = "Killing form κ(x,y) = tr(ad x ad y)";
const CITE_SEMISIMPLE: &str = "Proposition: no non-degenerate triangular structures on semisimple Lie algebras";
const CITE_HOMOGENEOUS: &str = "Corollary: a compact manifold with a twist star product is a homogeneous space of H_r";

/// `χ = 2 − 2g` for the closed orientable surface of genus `g`.
pub fn euler_characteristic_surface(genus: u64) -> i128 {
    2 - 2 * genus as i128
}

const WITNESS_ORDER: usize = 3;

/// Builds the Moyal twist at `c = i` and checks associativity on all
/// triples of monomials of degree 1 and 2.
fn moyal_witness() -> Result<MoyalWitness> {
    let c = Scalar::i();
    let t = moyal_twist(&c, WITNESS_ORDER)?;
    let monomials: Vec<Poly> = [(1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]
        .into_iter()
        .map(|e| Poly::monomial(e, Scalar::from_int(1)))
        .collect();
    let mut count = 0;
    for f in &monomials {
        for g in &monomials {
            for h in &monomials {
                let report = check_associativity(&t, f, g, h);
                if !report.passed {
                    return Err(Error::Inconsistent(format!(
                        "Moyal witness not associative at order {:?} on ({f}, {g}, {h})",
                        report.lowest_failing_order
                    )));
                }
                count += 1;
            }
        }
    }
    Ok(MoyalWitness {
        coefficient: c,
        order: WITNESS_ORDER,
        triples_checked: count,
    })
}

/// Genus 0 and genus ≥ 2 are obstructed; genus 1 carries a checked witness.
pub fn surface_verdict(genus: u64) -> Result<Verdict> {
    let chi = euler_characteristic_surface(genus);
    let mut v = Verdict {
        exists_twist_star: Existence::Undetermined,
        chain: Vec::new(),
        flags: Vec::new(),
        witness: None,
    };
    v.push("euler characteristic", format!("χ = {chi} (genus {genus})"), CITE_EULER);
    match genus {
        0 => {
            v.push(
                "transitive actions",
                "only semisimple groups act transitively and effectively",
                CITE_ONISHCHIK,
            );
            v.push(
                "Etingof–Schiffmann obstruction",
                "H_r would be semisimple, contradicting non-degeneracy of r on h_r",
                CITE_SEMISIMPLE,
            );
            v.push("conclusion", "no twist star product", CITE_SPHERE);
            v.exists_twist_star = Existence::No;
        }
        1 => {
            let w = moyal_witness()?;
            v.push(
                "Moyal witness",
                format!(
                    "associative mod ħ^{} on {} monomial triples",
                    w.order + 1,
                    w.triples_checked
                ),
                CITE_TORUS,
            );
            v.push("conclusion", "twist star product exists", CITE_TORUS);
            v.witness = Some(w);
            v.exists_twist_star = Existence::Yes;
        }
        _ => {
            v.push(
                "homogeneity",
                "a twist star product would make the surface a compact homogeneous space",
                CITE_HOMOGENEOUS,
            );
            v.push("non-negativity", format!("χ = {chi} < 0 violates χ ≥ 0"), CITE_COMPACT);
            v.push("conclusion", "no twist star product", CITE_PRETZEL);
            v.exists_twist_star = Existence::No;
        }
    }
    Ok(v)
}

/// Runs antisymmetry, CYBE, `h_r`, restriction, Killing form and
/// semisimplicity. A semisimple `h_r` would contradict the theory and is
/// flagged; otherwise the algebra alone leaves existence undetermined.
pub fn algebra_verdict(alg: &LieAlgebra, r: &Matrix) -> Result<Verdict> {
    let n = alg.dim();
    if r.rows() != n || r.cols() != n {
        return Err(Error::DimensionMismatch {
            context: "r-matrix",
            expected: n,
            found: r.rows().max(r.cols()),
        });
    }
    let mut v = Verdict {
        exists_twist_star: Existence::Undetermined,
        chain: Vec::new(),
        flags: Vec::new(),
        witness: None,
    };
    let bivector = match Bivector::new(r.clone()) {
        Ok(b) => {
            v.push("antisymmetry", "pass", CITE_ANTISYM);
            b
        }
        Err(Error::NotAntisymmetric { i, j }) => {
            v.push("antisymmetry", format!("FAIL at ({i}, {j})"), CITE_ANTISYM);
            v.flags.push("rejected: candidate is not antisymmetric".into());
            return Ok(v);
        }
        Err(e) => return Err(e),
    };
    let t = cyb(alg, r)?;
    let support = t.support();
    if let Some(&(i, m, l)) = support.first() {
        v.push(
            "CYBE",
            format!("FAIL ({} nonzero components, first at ({i}, {m}, {l}))", support.len()),
            CITE_CYBE,
        );
        v.flags.push("rejected: CYB(r) ≠ 0".into());
        return Ok(v);
    }
    v.push("CYBE", "pass", CITE_CYBE);
    let es = match etingof_schiffmann(alg, &bivector) {
        Ok(es) => es,
        Err(Error::Inconsistent(msg)) => {
            v.push("h_r extraction", format!("FAIL: {msg}"), CITE_ES);
            v.flags.push(format!("inconsistent configuration: {msg}"));
            return Ok(v);
        }
        Err(e) => return Err(e),
    };
    let k = es.subspace.dim();
    v.push("h_r extraction", format!("dim h_r = {k}"), CITE_ES);
    if k == 0 {
        v.push("restriction", "r = 0, h_r = {0} is trivially consistent", CITE_RESTRICT);
        return Ok(v);
    }
    let h = alg.restrict(&es.subspace)?;
    v.push(
        "restriction",
        format!("r non-degenerate on h_r (rank {})", es.restricted_r.rank()),
        CITE_RESTRICT,
    );
    let kappa = h.killing_form();
    v.push(
        "Killing form",
        format!("rank {} of {k}", kappa.matrix.rank()),
        CITE_KILLING,
    );
    if h.is_semisimple() {
        v.push("semisimplicity of h_r", "semisimple", CITE_SEMISIMPLE);
        v.flags.push(INCONSISTENT_FLAG.into());
        v.exists_twist_star = Existence::No;
    } else {
        v.push(
            "semisimplicity of h_r",
            format!("not semisimple (radical dim {})", h.killing_radical().dim()),
            CITE_SEMISIMPLE,
        );
    }
    Ok(v)
}
