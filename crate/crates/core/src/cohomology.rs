//! Chevalley–Eilenberg cochains for the trivial, adjoint and `g⊗g` modules.
//!
//! `C^n(g, V) = Hom(Λⁿg, V)`. The basis of `Λⁿg` is the list of strictly
//! increasing index tuples in lexicographic order; a cochain of degree `n` is
//! a `dim V × C(dim g, n)` matrix whose column `t` is the value on the `t`-th
//! wedge. Flattened, the coordinate of `(wedge t, component v)` is
//! `t * dim V + v`. Degrees are capped at 3.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::liealg::{joint_kernel, tensor_power_action, LieAlgebra};
use crate::linalg::{Matrix, Subspace};
use crate::scalar::Scalar;

pub const MAX_DEGREE: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModuleKind {
    Trivial,
    Adjoint,
    Adjoint2,
}

impl std::str::FromStr for ModuleKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "trivial" => Ok(Self::Trivial),
            "adjoint" => Ok(Self::Adjoint),
            "adjoint2" => Ok(Self::Adjoint2),
            other => Err(format!("unknown module kind {other:?} (trivial|adjoint|adjoint2)")),
        }
    }
}

/// A representation `x ↦ ρ_x` given on basis vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GModule {
    pub kind: ModuleKind,
    pub dim: usize,
    pub action: Vec<Matrix>,
}

impl GModule {
    pub fn new(alg: &LieAlgebra, kind: ModuleKind) -> Self {
        let n = alg.dim();
        let (dim, action) = match kind {
            ModuleKind::Trivial => (1, vec![Matrix::zeros(1, 1); n]),
            ModuleKind::Adjoint => (n, alg.adjoint_basis()),
            ModuleKind::Adjoint2 => (
                n * n,
                alg.adjoint_basis()
                    .iter()
                    .map(|a| tensor_power_action(a, 2).expect("power 2 is supported"))
                    .collect(),
            ),
        };
        Self { kind, dim, action }
    }

    /// Basis pairs `(i, j)` where `ρ_[e_i,e_j] != [ρ_i, ρ_j]`.
    pub fn representation_defects(&self, alg: &LieAlgebra) -> Vec<(usize, usize)> {
        let n = alg.dim();
        let mut bad = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let br = alg.bracket(&alg.basis_vector(i), &alg.basis_vector(j));
                let mut lhs = Matrix::zeros(self.dim, self.dim);
                for (k, c) in br.iter().enumerate() {
                    if !c.is_zero() {
                        lhs = &lhs + &self.action[k].scale(c);
                    }
                }
                if lhs != self.action[i].commutator(&self.action[j]) {
                    bad.push((i, j));
                }
            }
        }
        bad
    }
}

/// A cochain: values on the wedge basis of `Λⁿg`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cochain {
    pub degree: usize,
    pub values: Matrix,
}

impl Cochain {
    pub fn flatten(&self) -> Vec<Scalar> {
        self.values.transpose().into_data()
    }

    pub fn from_flat(degree: usize, module_dim: usize, flat: Vec<Scalar>) -> Self {
        let wedges = flat.len() / module_dim.max(1);
        let t = Matrix::new(wedges, module_dim, flat);
        Self {
            degree,
            values: t.transpose(),
        }
    }
}

/// Strictly increasing `k`-subsets of `0..n` in lexicographic order.
pub fn wedge_basis(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            rec(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

fn wedge_position(basis: &[Vec<usize>], idx: &[usize]) -> usize {
    basis.binary_search_by(|w| w.as_slice().cmp(idx)).expect("sorted wedge present")
}

/// Sort `idx` in place; returns the permutation sign, or `None` on a repeat.
fn sort_with_sign(idx: &mut [usize]) -> Option<i32> {
    let mut sign = 1;
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(sign)
    }
}

fn check_degree(n: usize) -> Result<()> {
    if n > MAX_DEGREE {
        Err(Error::UnsupportedDegree(n, "0..=3"))
    } else {
        Ok(())
    }
}

/// Matrix of `δ_n : C^n(g,V) → C^{n+1}(g,V)`:
///
/// ```text
/// (δc)(x_1∧…∧x_{n+1}) = Σ_k (-1)^{k+1} x_k.c(…x̂_k…)
///                     + Σ_{k<j} (-1)^{k+j} c([x_k,x_j]∧…x̂_k…x̂_j…)
/// ```
pub fn ce_differential(alg: &LieAlgebra, module: &GModule, n: usize) -> Result<Matrix> {
    check_degree(n)?;
    let g = alg.dim();
    let v = module.dim;
    let src = wedge_basis(g, n);
    let dst = wedge_basis(g, n + 1);
    let mut d = Matrix::zeros(dst.len() * v, src.len() * v);
    for (t, wedge) in dst.iter().enumerate() {
        // module-action terms
        for k in 0..wedge.len() {
            let sign = if k % 2 == 0 { Scalar::one() } else { -Scalar::one() };
            let rest: Vec<usize> = wedge.iter().enumerate().filter(|&(p, _)| p != k).map(|(_, &x)| x).collect();
            let col = wedge_position(&src, &rest);
            let rho = &module.action[wedge[k]];
            for w in 0..v {
                for u in 0..v {
                    let a = &rho[(w, u)];
                    if !a.is_zero() {
                        d[(t * v + w, col * v + u)] += &sign * a;
                    }
                }
            }
        }
        // bracket-insertion terms
        for k in 0..wedge.len() {
            for j in k + 1..wedge.len() {
                let base = if (k + j) % 2 == 0 { 1 } else { -1 };
                let rest: Vec<usize> = wedge
                    .iter()
                    .enumerate()
                    .filter(|&(p, _)| p != k && p != j)
                    .map(|(_, &x)| x)
                    .collect();
                for m in 0..g {
                    let c = alg.c(wedge[k], wedge[j], m);
                    if c.is_zero() {
                        continue;
                    }
                    let mut idx = Vec::with_capacity(n);
                    idx.push(m);
                    idx.extend_from_slice(&rest);
                    let Some(perm) = sort_with_sign(&mut idx) else {
                        continue;
                    };
                    let col = wedge_position(&src, &idx);
                    let coeff = c * &Scalar::from_int((base * perm) as i64);
                    for w in 0..v {
                        d[(t * v + w, col * v + w)] += &coeff;
                    }
                }
            }
        }
    }
    Ok(d)
}

/// `dim H^n = dim ker δ_n − rank δ_{n−1}`.
pub fn cohomology_dim(alg: &LieAlgebra, module: &GModule, n: usize) -> Result<usize> {
    check_degree(n)?;
    let dn = ce_differential(alg, module, n)?;
    let cocycles = dn.cols() - dn.rank();
    let coboundaries = if n == 0 {
        0
    } else {
        ce_differential(alg, module, n - 1)?.rank()
    };
    Ok(cocycles - coboundaries)
}

/// `V^g`, the joint kernel of all `ρ_x`.
pub fn invariants(module: &GModule) -> Subspace {
    joint_kernel(module.dim, &module.action)
}

/// Apply `δ_n` to a cochain.
pub fn apply_differential(alg: &LieAlgebra, module: &GModule, c: &Cochain) -> Result<Cochain> {
    let d = ce_differential(alg, module, c.degree)?;
    let out = d.mul_vec(&c.flatten());
    Ok(Cochain::from_flat(c.degree + 1, module.dim, out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn wedge_basis_sizes() {
        assert_eq!(wedge_basis(4, 2).len(), 6);
        assert_eq!(wedge_basis(3, 0), vec![Vec::<usize>::new()]);
        assert!(wedge_basis(2, 3).is_empty());
    }

    #[test]
    fn trivial_degree_zero_is_zero_map() {
        for alg in catalog::abstract_algebras().into_iter().map(|(_, a)| a) {
            let m = GModule::new(&alg, ModuleKind::Trivial);
            assert!(ce_differential(&alg, &m, 0).unwrap().is_zero());
        }
    }

    #[test]
    fn adjoint_degree_zero_columns_are_adjoints() {
        let alg = catalog::sl2();
        let m = GModule::new(&alg, ModuleKind::Adjoint);
        let d = ce_differential(&alg, &m, 0).unwrap();
        // δc(e_t) = [e_t, c]: the block for wedge t is ad(e_t).
        for (t, ad) in alg.adjoint_basis().iter().enumerate() {
            for w in 0..3 {
                for u in 0..3 {
                    assert_eq!(d[(t * 3 + w, u)], ad[(w, u)]);
                }
            }
        }
    }

    #[test]
    fn two_dim_trivial_degree_one() {
        // δc(X∧Y) = -c([X,Y]) = -c(X)
        let alg = catalog::two_dim();
        let m = GModule::new(&alg, ModuleKind::Trivial);
        let d = ce_differential(&alg, &m, 1).unwrap();
        assert_eq!(d, Matrix::from_ints(&[&[-1, 0]]));
    }

    #[test]
    fn cohomology_examples() {
        for (_, alg) in catalog::abstract_algebras() {
            let m = GModule::new(&alg, ModuleKind::Trivial);
            assert_eq!(cohomology_dim(&alg, &m, 0).unwrap(), 1);
        }
        let two = catalog::two_dim();
        assert_eq!(cohomology_dim(&two, &GModule::new(&two, ModuleKind::Trivial), 1).unwrap(), 1);
        let sl2 = catalog::sl2();
        let triv = GModule::new(&sl2, ModuleKind::Trivial);
        assert_eq!(cohomology_dim(&sl2, &triv, 1).unwrap(), 0);
        assert_eq!(cohomology_dim(&sl2, &triv, 2).unwrap(), 0);
        assert_eq!(cohomology_dim(&sl2, &triv, 3).unwrap(), 1);
    }

    #[test]
    fn degree_cap() {
        let alg = catalog::sl2();
        let m = GModule::new(&alg, ModuleKind::Trivial);
        assert!(matches!(ce_differential(&alg, &m, 4), Err(Error::UnsupportedDegree(4, _))));
        assert!(cohomology_dim(&alg, &m, 4).is_err());
    }

    #[test]
    fn invariants_examples() {
        let heis = catalog::heisenberg();
        let inv = invariants(&GModule::new(&heis, ModuleKind::Adjoint));
        assert_eq!(inv, Subspace::span(3, vec![heis.basis_vector(2)]));
        for (_, alg) in catalog::abstract_algebras() {
            assert_eq!(invariants(&GModule::new(&alg, ModuleKind::Adjoint)), alg.center());
        }
        let ab = LieAlgebra::abelian(3);
        assert_eq!(invariants(&GModule::new(&ab, ModuleKind::Adjoint2)).dim(), 9);
    }

    #[test]
    fn modules_are_representations() {
        for (_, alg) in catalog::abstract_algebras() {
            for kind in [ModuleKind::Trivial, ModuleKind::Adjoint, ModuleKind::Adjoint2] {
                assert!(GModule::new(&alg, kind).representation_defects(&alg).is_empty());
            }
        }
    }

    #[test]
    fn differential_squares_to_zero() {
        for (name, alg) in catalog::abstract_algebras() {
            for kind in [ModuleKind::Trivial, ModuleKind::Adjoint, ModuleKind::Adjoint2] {
                let m = GModule::new(&alg, kind);
                for n in 0..MAX_DEGREE {
                    let d0 = ce_differential(&alg, &m, n).unwrap();
                    let d1 = ce_differential(&alg, &m, n + 1).unwrap();
                    assert!((&d1 * &d0).is_zero(), "{name} {kind:?} degree {n}");
                }
            }
        }
    }

    #[test]
    fn first_cohomology_matches_abelianization_and_center() {
        for (name, alg) in catalog::abstract_algebras() {
            let triv = GModule::new(&alg, ModuleKind::Trivial);
            assert_eq!(
                cohomology_dim(&alg, &triv, 1).unwrap(),
                alg.dim() - alg.derived_algebra().dim(),
                "{name}"
            );
            let adj = GModule::new(&alg, ModuleKind::Adjoint);
            assert_eq!(cohomology_dim(&alg, &adj, 0).unwrap(), alg.center().dim(), "{name}");
        }
    }

    #[test]
    fn apply_differential_on_coboundary_is_cocycle() {
        let alg = catalog::heisenberg();
        let m = GModule::new(&alg, ModuleKind::Adjoint);
        let c = Cochain {
            degree: 1,
            values: Matrix::from_ints(&[&[1, 0, 2], &[0, 3, 0], &[1, 1, 1]]),
        };
        let dc = apply_differential(&alg, &m, &c).unwrap();
        assert_eq!(dc.degree, 2);
        let ddc = apply_differential(&alg, &m, &dc).unwrap();
        assert!(ddc.values.is_zero());
    }
}
