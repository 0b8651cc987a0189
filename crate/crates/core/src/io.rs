//! JSON documents for every input and output type. Scalars are always
//! exact literals such as `"3"`, `"-1/2"` or `"1/2+3/4*i"`; indices are
//! 0-based.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::bialg::Cobracket;
use crate::decomp::MatrixLieAlgebra;
use crate::error::{Error, Result};
use crate::hopf::{HopfAlgebra, ModuleAlgebra, TwistElement};
use crate::liealg::{constants_from_brackets, LieAlgebra};
use crate::linalg::{Matrix, Tensor3};
use crate::scalar::Scalar;

type Nested2 = Vec<Vec<Scalar>>;
type Nested3 = Vec<Vec<Vec<Scalar>>>;

/// Parses any document, reporting line and column on failure.
pub fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("documents always serialize")
}

fn matrix_from_rows(context: &'static str, rows: Nested2, cols: usize) -> Result<Matrix> {
    for r in &rows {
        if r.len() != cols {
            return Err(Error::DimensionMismatch {
                context,
                expected: cols,
                found: r.len(),
            });
        }
    }
    Ok(Matrix::from_rows(cols, rows))
}

fn rows_of(m: &Matrix) -> Nested2 {
    m.row_vectors()
}

fn tensor_from_nested(context: &'static str, t: Nested3, dims: [usize; 3]) -> Result<Tensor3> {
    let mismatch = |expected, found| Error::DimensionMismatch {
        context,
        expected,
        found,
    };
    if t.len() != dims[0] {
        return Err(mismatch(dims[0], t.len()));
    }
    let mut flat = Vec::with_capacity(dims.iter().product());
    for plane in t {
        if plane.len() != dims[1] {
            return Err(mismatch(dims[1], plane.len()));
        }
        for row in plane {
            if row.len() != dims[2] {
                return Err(mismatch(dims[2], row.len()));
            }
            flat.extend(row);
        }
    }
    Ok(Tensor3::from_flat(dims, flat))
}

fn nested_of(t: &Tensor3) -> Nested3 {
    let [a, b, c] = t.dims();
    (0..a)
        .map(|i| (0..b).map(|j| (0..c).map(|k| t[(i, j, k)].clone()).collect()).collect())
        .collect()
}

fn check_len(context: &'static str, v: &[Scalar], n: usize) -> Result<()> {
    if v.len() != n {
        return Err(Error::DimensionMismatch {
            context,
            expected: n,
            found: v.len(),
        });
    }
    Ok(())
}

/// `[e_left, e_right] = Σ result[k] e_k`; keys are indices or basis names.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketDoc {
    pub left: usize,
    pub right: usize,
    pub result: BTreeMap<String, Scalar>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LieDoc {
    pub dim: usize,
    #[serde(default)]
    pub basis: Vec<String>,
    #[serde(default)]
    pub brackets: Vec<BracketDoc>,
}

impl LieDoc {
    fn constants(&self) -> Result<Tensor3> {
        let n = self.dim;
        let mut brackets = Vec::with_capacity(self.brackets.len());
        for b in &self.brackets {
            let mut v = vec![Scalar::zero(); n];
            for (key, value) in &b.result {
                let k = match key.parse::<usize>() {
                    Ok(k) => k,
                    Err(_) => self.basis.iter().position(|name| name == key).ok_or_else(|| {
                        Error::Document(format!("bracket [{}, {}]: unknown basis key {key:?}", b.left, b.right))
                    })?,
                };
                if k >= n {
                    return Err(Error::IndexOutOfRange { index: k, dim: n });
                }
                v[k] = value.clone();
            }
            brackets.push((b.left, b.right, v));
        }
        constants_from_brackets(n, &brackets)
    }

    /// Requires the Jacobi identity.
    pub fn to_algebra(&self) -> Result<LieAlgebra> {
        LieAlgebra::new(self.basis.clone(), self.constants()?)
    }

    /// Checks antisymmetry only, for inspecting the Jacobi identity.
    pub fn to_algebra_unchecked(&self) -> Result<LieAlgebra> {
        LieAlgebra::from_constants_unchecked(self.basis.clone(), self.constants()?)
    }

    pub fn from_algebra(alg: &LieAlgebra) -> Self {
        let n = alg.dim();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let result: BTreeMap<String, Scalar> = (0..n)
                    .filter(|&k| !alg.c(i, j, k).is_zero())
                    .map(|k| (k.to_string(), alg.c(i, j, k).clone()))
                    .collect();
                if !result.is_empty() {
                    brackets.push(BracketDoc { left: i, right: j, result });
                }
            }
        }
        Self {
            dim: n,
            basis: alg.names().to_vec(),
            brackets,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntryDoc {
    pub i: usize,
    pub j: usize,
    pub value: Scalar,
}

/// Stores `r^{ij}` for `i < j`; the antisymmetric completion is implied.
/// With `"general": true` every listed entry is taken literally, so
/// non-antisymmetric candidates can be expressed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RMatrixDoc {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub general: bool,
    #[serde(default)]
    pub entries: Vec<EntryDoc>,
}

impl RMatrixDoc {
    pub fn to_matrix(&self) -> Result<Matrix> {
        let n = self.dim;
        let mut r = Matrix::zeros(n, n);
        let mut seen = vec![false; n * n];
        for e in &self.entries {
            for idx in [e.i, e.j] {
                if idx >= n {
                    return Err(Error::IndexOutOfRange { index: idx, dim: n });
                }
            }
            if !self.general && e.i >= e.j {
                return Err(Error::Document(format!(
                    "entry ({}, {}): only i < j may be listed unless \"general\" is set",
                    e.i, e.j
                )));
            }
            if std::mem::replace(&mut seen[e.i * n + e.j], true) {
                return Err(Error::Document(format!("entry ({}, {}) listed twice", e.i, e.j)));
            }
            r[(e.i, e.j)] = e.value.clone();
            if !self.general {
                r[(e.j, e.i)] = -&e.value;
            }
        }
        Ok(r)
    }

    pub fn from_matrix(r: &Matrix) -> Self {
        let n = r.rows();
        let general = !r.is_antisymmetric();
        let entries = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| (general || i < j) && !r[(i, j)].is_zero())
            .map(|(i, j)| EntryDoc {
                i,
                j,
                value: r[(i, j)].clone(),
            })
            .collect();
        Self { dim: n, general, entries }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixAlgebraDoc {
    pub ambient: usize,
    pub matrices: Nested3,
}

impl MatrixAlgebraDoc {
    pub fn to_algebra(&self) -> Result<MatrixLieAlgebra> {
        let m = self.ambient;
        let basis = self
            .matrices
            .iter()
            .map(|rows| {
                check_rows(rows.len(), m)?;
                matrix_from_rows("matrix row", rows.clone(), m)
            })
            .collect::<Result<Vec<_>>>()?;
        MatrixLieAlgebra::new(m, basis)
    }

    pub fn from_algebra(alg: &MatrixLieAlgebra) -> Self {
        Self {
            ambient: alg.ambient(),
            matrices: alg.basis().iter().map(rows_of).collect(),
        }
    }
}

fn check_rows(found: usize, expected: usize) -> Result<()> {
    if found != expected {
        return Err(Error::DimensionMismatch {
            context: "matrix rows",
            expected,
            found,
        });
    }
    Ok(())
}

/// `mult[a][b][c]`: coefficient of `e_c` in `e_a e_b`.
/// `coprod[a][b][c]`: coefficient of `e_b⊗e_c` in `Δ(e_a)`.
/// `antipode[a]`: the coordinates of `S(e_a)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfDoc {
    pub dim: usize,
    pub mult: Nested3,
    pub unit: Vec<Scalar>,
    pub coprod: Nested3,
    pub counit: Vec<Scalar>,
    pub antipode: Nested2,
}

impl HopfDoc {
    /// Shapes are validated; axioms are left to the checker.
    pub fn to_hopf(&self) -> Result<HopfAlgebra> {
        let d = self.dim;
        check_len("unit", &self.unit, d)?;
        check_len("counit", &self.counit, d)?;
        check_rows(self.antipode.len(), d)?;
        let images = matrix_from_rows("antipode row", self.antipode.clone(), d)?;
        HopfAlgebra::new(
            tensor_from_nested("product tensor", self.mult.clone(), [d, d, d])?,
            self.unit.clone(),
            tensor_from_nested("coproduct tensor", self.coprod.clone(), [d, d, d])?,
            self.counit.clone(),
            images.transpose(),
        )
    }

    pub fn from_hopf(h: &HopfAlgebra) -> Self {
        Self {
            dim: h.dim(),
            mult: nested_of(h.mult()),
            unit: h.unit().to_vec(),
            coprod: nested_of(h.coprod()),
            counit: h.counit().to_vec(),
            antipode: rows_of(&h.antipode().transpose()),
        }
    }
}

/// `F = Σ F[a·d + b] e_a⊗e_b`; the inverse is computed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwistDoc {
    #[serde(rename = "F")]
    pub f: Vec<Scalar>,
}

impl TwistDoc {
    pub fn to_twist(&self, h: &HopfAlgebra) -> Result<TwistElement> {
        check_len("twist", &self.f, h.dim() * h.dim())?;
        TwistElement::new(h, self.f.clone())
    }

    pub fn from_twist(t: &TwistElement) -> Self {
        Self { f: t.f().to_vec() }
    }
}

/// `action[x][a][b]`: coefficient of `e_b` in `e_x ▷ e_a`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleAlgebraDoc {
    pub dim: usize,
    pub mult: Nested3,
    pub unit: Vec<Scalar>,
    pub action: Nested3,
}

impl ModuleAlgebraDoc {
    pub fn to_module(&self, hopf_dim: usize) -> Result<ModuleAlgebra> {
        let e = self.dim;
        check_len("module algebra unit", &self.unit, e)?;
        ModuleAlgebra::new(
            tensor_from_nested("module algebra product", self.mult.clone(), [e, e, e])?,
            self.unit.clone(),
            tensor_from_nested("action tensor", self.action.clone(), [hopf_dim, e, e])?,
        )
    }

    pub fn from_module(m: &ModuleAlgebra) -> Self {
        Self {
            dim: m.dim(),
            mult: nested_of(m.mult()),
            unit: m.unit().to_vec(),
            action: nested_of(m.action()),
        }
    }
}

/// `components[i][a][b]`: coefficient of `e_a⊗e_b` in `γ(e_i)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CobracketDoc {
    pub dim: usize,
    pub components: Nested3,
}

impl CobracketDoc {
    pub fn to_cobracket(&self) -> Result<Cobracket> {
        let n = self.dim;
        check_rows(self.components.len(), n)?;
        let parts = self
            .components
            .iter()
            .map(|rows| {
                check_rows(rows.len(), n)?;
                matrix_from_rows("cobracket row", rows.clone(), n)
            })
            .collect::<Result<Vec<_>>>()?;
        Cobracket::new(parts)
    }

    pub fn from_cobracket(c: &Cobracket) -> Self {
        Self {
            dim: c.dim(),
            components: c.components().iter().map(rows_of).collect(),
        }
    }
}

/// A linear map by its matrix; column `j` is the image of `e_j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinearMapDoc {
    pub matrix: Nested2,
}

impl LinearMapDoc {
    pub fn to_matrix(&self) -> Result<Matrix> {
        let cols = self.matrix.first().map_or(0, Vec::len);
        matrix_from_rows("linear map row", self.matrix.clone(), cols)
    }

    pub fn from_matrix(m: &Matrix) -> Self {
        Self { matrix: rows_of(m) }
    }
}
