//! Lie algebras given by structure constants `[e_i, e_j] = Σ_k C_ij^k e_k`.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{is_zero_vector, unit_vector, zero_vector, Matrix, Subspace, Tensor3, Vector};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    names: Vec<String>,
    constants: Tensor3,
}

/// One failing component of the Jacobi identity:
/// `[e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]` has coefficient
/// `value` on `e_l`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JacobiViolation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub l: usize,
    pub value: Scalar,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JacobiReport {
    pub passed: bool,
    pub violations: Vec<JacobiViolation>,
}

impl JacobiReport {
    /// Distinct failing triples in discovery order.
    pub fn failing_triples(&self) -> Vec<(usize, usize, usize)> {
        let mut out: Vec<(usize, usize, usize)> = Vec::new();
        for v in &self.violations {
            if !out.contains(&(v.i, v.j, v.k)) {
                out.push((v.i, v.j, v.k));
            }
        }
        out
    }
}

/// Symmetric bilinear form by its Gram matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BilinearForm {
    pub matrix: Matrix,
}

impl BilinearForm {
    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let my = self.matrix.mul_vec(y);
        x.iter().zip(&my).map(|(a, b)| a * b).sum()
    }

    pub fn is_nondegenerate(&self) -> bool {
        !self.matrix.determinant().is_zero()
    }
}

fn default_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("e{}", i + 1)).collect()
}

impl LieAlgebra {
    /// Validates shape, antisymmetry and the Jacobi identity.
    pub fn new(names: Vec<String>, constants: Tensor3) -> Result<Self> {
        let alg = Self::from_constants_unchecked(names, constants)?;
        let report = alg.check_jacobi();
        if let Some(&(i, j, k)) = report.failing_triples().first() {
            return Err(Error::JacobiFailure { i, j, k });
        }
        Ok(alg)
    }

    /// Validates shape and antisymmetry only; use [`LieAlgebra::check_jacobi`]
    /// to inspect the Jacobi identity.
    pub fn from_constants_unchecked(names: Vec<String>, constants: Tensor3) -> Result<Self> {
        let [a, b, c] = constants.dims();
        if a != b || b != c {
            return Err(Error::DimensionMismatch {
                context: "structure constants",
                expected: a,
                found: if a != b { b } else { c },
            });
        }
        let names = if names.is_empty() { default_names(a) } else { names };
        if names.len() != a {
            return Err(Error::DimensionMismatch {
                context: "basis names",
                expected: a,
                found: names.len(),
            });
        }
        for i in 0..a {
            for j in i..a {
                for k in 0..a {
                    if constants[(i, j, k)] != -&constants[(j, i, k)] {
                        return Err(Error::NotAntisymmetric { i, j });
                    }
                }
            }
        }
        Ok(Self { names, constants })
    }

    /// Build from the nonzero brackets `[e_i, e_j] = v` with `i != j`; the
    /// antisymmetric partner is filled in.
    pub fn from_brackets(names: Vec<String>, dim: usize, brackets: &[(usize, usize, Vector)]) -> Result<Self> {
        Self::new(names, constants_from_brackets(dim, brackets)?)
    }

    pub fn abelian(n: usize) -> Self {
        Self::from_constants_unchecked(Vec::new(), Tensor3::zeros([n, n, n])).expect("zero constants are valid")
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn constants(&self) -> &Tensor3 {
        &self.constants
    }

    /// `C_ij^k`.
    pub fn c(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.constants[(i, j, k)]
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        unit_vector(self.dim(), i)
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let n = self.dim();
        assert!(x.len() == n && y.len() == n, "bracket: dimension mismatch");
        let mut out = zero_vector(n);
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() || i == j {
                    continue;
                }
                let xy = &x[i] * &y[j];
                for (k, o) in out.iter_mut().enumerate() {
                    let c = &self.constants[(i, j, k)];
                    if !c.is_zero() {
                        *o += &xy * c;
                    }
                }
            }
        }
        out
    }

    pub fn check_jacobi(&self) -> JacobiReport {
        let n = self.dim();
        let mut violations = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    for l in 0..n {
                        let mut total = Scalar::zero();
                        for m in 0..n {
                            total += self.c(j, k, m) * self.c(i, m, l);
                            total += self.c(i, j, m) * self.c(k, m, l);
                            total += self.c(k, i, m) * self.c(j, m, l);
                        }
                        if !total.is_zero() {
                            violations.push(JacobiViolation { i, j, k, l, value: total });
                        }
                    }
                }
            }
        }
        JacobiReport {
            passed: violations.is_empty(),
            violations,
        }
    }

    /// Matrix of `ad(x): y ↦ [x, y]`; column `j` is `[x, e_j]`.
    pub fn adjoint(&self, x: &[Scalar]) -> Result<Matrix> {
        let n = self.dim();
        if x.len() != n {
            return Err(Error::DimensionMismatch {
                context: "adjoint",
                expected: n,
                found: x.len(),
            });
        }
        Ok(Matrix::from_fn(n, n, |k, j| {
            (0..n)
                .filter(|&i| !x[i].is_zero())
                .map(|i| &x[i] * self.c(i, j, k))
                .sum()
        }))
    }

    /// `ad(e_i)` for every basis vector.
    pub fn adjoint_basis(&self) -> Vec<Matrix> {
        (0..self.dim())
            .map(|i| self.adjoint(&self.basis_vector(i)).expect("basis vector has the right length"))
            .collect()
    }

    /// Leibniz extension of `ad(x)` to `g^{⊗power}`, `power ∈ {2, 3}`.
    pub fn ad_power(&self, x: &[Scalar], power: usize) -> Result<Matrix> {
        let ad = self.adjoint(x)?;
        tensor_power_action(&ad, power)
    }

    pub fn killing_form(&self) -> BilinearForm {
        let ads = self.adjoint_basis();
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let t = (&ads[i] * &ads[j]).trace();
                m[(j, i)] = t.clone();
                m[(i, j)] = t;
            }
        }
        BilinearForm { matrix: m }
    }

    pub fn killing_radical(&self) -> Subspace {
        let kappa = self.killing_form();
        let radical = Subspace::span(self.dim(), kappa.matrix.kernel_basis());
        debug_assert!(self.is_ideal(&radical), "Killing radical must be an ideal");
        radical
    }

    /// Killing criterion: non-degenerate Killing form.
    pub fn is_semisimple(&self) -> bool {
        self.killing_form().is_nondegenerate()
    }

    pub fn derived_algebra(&self) -> Subspace {
        let n = self.dim();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                brackets.push(self.bracket(&self.basis_vector(i), &self.basis_vector(j)));
            }
        }
        Subspace::span(n, brackets)
    }

    /// Joint kernel of all `ad(e_i)`.
    pub fn center(&self) -> Subspace {
        let n = self.dim();
        joint_kernel(n, &self.adjoint_basis())
    }

    pub fn is_abelian(&self) -> bool {
        self.constants.is_zero()
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        let b = s.basis();
        (0..b.len()).all(|p| (p + 1..b.len()).all(|q| s.contains(&self.bracket(&b[p], &b[q]))))
    }

    /// Whether all brackets inside `s` vanish.
    pub fn is_zero_bracket_on(&self, s: &Subspace) -> bool {
        let b = s.basis();
        (0..b.len()).all(|p| (p + 1..b.len()).all(|q| is_zero_vector(&self.bracket(&b[p], &b[q]))))
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        (0..self.dim()).all(|i| {
            let e = self.basis_vector(i);
            s.basis().iter().all(|v| s.contains(&self.bracket(&e, v)))
        })
    }

    /// Smallest bracket-closed subspace containing `seed`.
    pub fn subalgebra_closure(&self, seed: &[Vector]) -> Subspace {
        let n = self.dim();
        let mut current = Subspace::span(n, seed.to_vec());
        loop {
            let b = current.basis().to_vec();
            let mut extra = Vec::new();
            for p in 0..b.len() {
                for q in p + 1..b.len() {
                    let v = self.bracket(&b[p], &b[q]);
                    if !current.contains(&v) {
                        extra.push(v);
                    }
                }
            }
            if extra.is_empty() {
                return current;
            }
            current = current.sum(&Subspace::span(n, extra));
        }
    }

    /// Structure constants of the bracket restricted to `s`, in the stored
    /// basis of `s`.
    pub fn restrict(&self, s: &Subspace) -> Result<LieAlgebra> {
        if s.ambient() != self.dim() {
            return Err(Error::DimensionMismatch {
                context: "restrict",
                expected: self.dim(),
                found: s.ambient(),
            });
        }
        let b = s.basis();
        let d = b.len();
        let mut c = Tensor3::zeros([d, d, d]);
        for p in 0..d {
            for q in p + 1..d {
                let coords = s
                    .coordinates(&self.bracket(&b[p], &b[q]))
                    .ok_or(Error::NotClosed { left: p, right: q })?;
                for (k, x) in coords.into_iter().enumerate() {
                    c[(q, p, k)] = -&x;
                    c[(p, q, k)] = x;
                }
            }
        }
        let names = (0..d).map(|p| format!("b{}", p + 1)).collect();
        LieAlgebra::new(names, c)
    }

    /// Check that the matrix `phi` (columns are images of basis vectors)
    /// is a Lie homomorphism from `self` to `target`.
    pub fn check_homomorphism(&self, target: &LieAlgebra, phi: &Matrix) -> Result<()> {
        if phi.cols() != self.dim() || phi.rows() != target.dim() {
            return Err(Error::DimensionMismatch {
                context: "homomorphism matrix",
                expected: target.dim() * self.dim(),
                found: phi.rows() * phi.cols(),
            });
        }
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = phi.mul_vec(&self.bracket(&self.basis_vector(i), &self.basis_vector(j)));
                let rhs = target.bracket(&phi.column(i), &phi.column(j));
                if lhs != rhs {
                    return Err(Error::NotHomomorphism { left: i, right: j });
                }
            }
        }
        Ok(())
    }
}

/// Structure constants from brackets `[e_i, e_j] = v`; a pair may be given
/// in either order, and repeats must agree.
pub fn constants_from_brackets(dim: usize, brackets: &[(usize, usize, Vector)]) -> Result<Tensor3> {
    let mut c = Tensor3::zeros([dim, dim, dim]);
    let mut seen = vec![false; dim * dim];
    for (i, j, v) in brackets {
        let (i, j) = (*i, *j);
        for idx in [i, j] {
            if idx >= dim {
                return Err(Error::IndexOutOfRange { index: idx, dim });
            }
        }
        if v.len() != dim {
            return Err(Error::DimensionMismatch {
                context: "bracket result",
                expected: dim,
                found: v.len(),
            });
        }
        if i == j {
            if !is_zero_vector(v) {
                return Err(Error::NotAntisymmetric { i, j });
            }
            continue;
        }
        if seen[i * dim + j] || seen[j * dim + i] {
            // A pair given twice must agree with antisymmetry.
            for (k, x) in v.iter().enumerate() {
                if &c[(i, j, k)] != x {
                    return Err(Error::NotAntisymmetric { i, j });
                }
            }
            continue;
        }
        seen[i * dim + j] = true;
        for (k, x) in v.iter().enumerate() {
            c[(i, j, k)] = x.clone();
            c[(j, i, k)] = -x;
        }
    }
    Ok(c)
}

/// `A⊗1 + 1⊗A` (power 2) or `A⊗1⊗1 + 1⊗A⊗1 + 1⊗1⊗A` (power 3).
pub fn tensor_power_action(a: &Matrix, power: usize) -> Result<Matrix> {
    let n = a.rows();
    let id = Matrix::identity(n);
    match power {
        2 => Ok(&a.kron(&id) + &id.kron(a)),
        3 => {
            let id2 = Matrix::identity(n * n);
            let first = a.kron(&id2);
            let middle = id.kron(&a.kron(&id));
            let last = id2.kron(a);
            Ok(&(&first + &middle) + &last)
        }
        other => Err(Error::UnsupportedDegree(other, "2 or 3")),
    }
}

/// Vectors annihilated by every matrix in `maps`.
pub fn joint_kernel(n: usize, maps: &[Matrix]) -> Subspace {
    if maps.is_empty() {
        return Subspace::whole(n);
    }
    let mut rows = Vec::new();
    for m in maps {
        rows.extend(m.row_vectors());
    }
    Subspace::span(n, Matrix::from_rows(n, rows).kernel_basis())
}
