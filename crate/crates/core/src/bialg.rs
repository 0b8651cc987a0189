//! Lie bialgebra structures, the classical Yang–Baxter map and the
//! Etingof–Schiffmann subalgebra of an r-matrix.
//!
//! An element `r = Σ r^{ab} e_a⊗e_b` of `g⊗g` is stored as the matrix
//! `r^{ab}`. For antisymmetric `r` this is the same element as
//! `½ Σ r^{ab} e_a∧e_b` with `x∧y = x⊗y − y⊗x`, so `X∧Y` has
//! `r^{01} = 1, r^{10} = −1`.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::liealg::{tensor_power_action, LieAlgebra};
use crate::linalg::{braid, Matrix, Subspace, Tensor3};
use crate::report::CheckReport;
use crate::scalar::Scalar;

/// Antisymmetric element of `g∧g`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bivector(Matrix);

impl Bivector {
    pub fn new(r: Matrix) -> Result<Self> {
        if !r.is_square() {
            return Err(Error::DimensionMismatch {
                context: "bivector",
                expected: r.rows(),
                found: r.cols(),
            });
        }
        if let Some((i, j)) = r.antisymmetry_violation() {
            return Err(Error::NotAntisymmetric { i, j });
        }
        Ok(Self(r))
    }

    pub fn zero(n: usize) -> Self {
        Self(Matrix::zeros(n, n))
    }

    /// `e_i∧e_j` scaled by `c`.
    pub fn wedge(n: usize, i: usize, j: usize, c: Scalar) -> Self {
        let mut m = Matrix::zeros(n, n);
        m[(i, j)] += &c;
        m[(j, i)] -= &c;
        Self(m)
    }

    /// `x∧y = x⊗y − y⊗x` for arbitrary vectors.
    pub fn wedge_vectors(x: &[Scalar], y: &[Scalar]) -> Self {
        let n = x.len();
        Self(Matrix::from_fn(n, n, |a, b| &x[a] * &y[b] - &x[b] * &y[a]))
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix {
        self.0
    }
}

impl std::ops::Add for &Bivector {
    type Output = Bivector;
    fn add(self, rhs: &Bivector) -> Bivector {
        Bivector(&self.0 + &rhs.0)
    }
}

/// `γ: g → g∧g`, one antisymmetric coefficient matrix per basis vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cobracket(Vec<Matrix>);

impl Cobracket {
    pub fn new(components: Vec<Matrix>) -> Result<Self> {
        let n = components.len();
        for m in &components {
            if m.rows() != n || m.cols() != n {
                return Err(Error::DimensionMismatch {
                    context: "cobracket component",
                    expected: n,
                    found: m.rows(),
                });
            }
            if let Some((i, j)) = m.antisymmetry_violation() {
                return Err(Error::NotAntisymmetric { i, j });
            }
        }
        Ok(Self(components))
    }

    pub fn zero(n: usize) -> Self {
        Self(vec![Matrix::zeros(n, n); n])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn components(&self) -> &[Matrix] {
        &self.0
    }

    /// `γ(x)` for an arbitrary vector.
    pub fn apply(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let mut out = Matrix::zeros(n, n);
        for (c, m) in x.iter().zip(&self.0) {
            if !c.is_zero() {
                out = &out + &m.scale(c);
            }
        }
        out
    }
}

/// `ad_x^{(2)}` applied to a two-tensor stored as a matrix: `A t + t Aᵀ`.
fn ad2_on_matrix(ad: &Matrix, t: &Matrix) -> Matrix {
    &(ad * t) + &(t * &ad.transpose())
}

/// `γ(e_i) = ad_{e_i}^{(2)} r`.
pub fn cobracket_from_r(alg: &LieAlgebra, r: &Bivector) -> Result<Cobracket> {
    check_dim(alg, r.dim(), "r-matrix")?;
    let parts = alg.adjoint_basis().iter().map(|ad| ad2_on_matrix(ad, r.matrix())).collect();
    Cobracket::new(parts)
}

fn check_dim(alg: &LieAlgebra, n: usize, context: &'static str) -> Result<()> {
    if alg.dim() != n {
        return Err(Error::DimensionMismatch {
            context,
            expected: alg.dim(),
            found: n,
        });
    }
    Ok(())
}

/// `γ([x,y]) = ad_x^{(2)} γ(y) − ad_y^{(2)} γ(x)` on basis pairs.
pub fn check_cocycle(alg: &LieAlgebra, gamma: &Cobracket) -> Result<CheckReport> {
    check_dim(alg, gamma.dim(), "cobracket")?;
    let n = alg.dim();
    let ads = alg.adjoint_basis();
    let mut report = CheckReport::new("cocycle");
    for i in 0..n {
        for j in i + 1..n {
            let lhs = gamma.apply(&alg.bracket(&alg.basis_vector(i), &alg.basis_vector(j)));
            let rhs = &ad2_on_matrix(&ads[i], &gamma.components()[j]) - &ad2_on_matrix(&ads[j], &gamma.components()[i]);
            if lhs != rhs {
                report.fail(vec![i, j]);
            }
        }
    }
    Ok(report)
}

/// `Alt(x⊗y⊗z) = x⊗y⊗z + y⊗z⊗x + z⊗x⊗y`.
pub fn alt(t: &Tensor3) -> Tensor3 {
    Tensor3::from_fn(t.dims(), |p, q, s| &(&t[(p, q, s)] + &t[(s, p, q)]) + &t[(q, s, p)])
}

/// `(γ⊗1)γ(e_i)`.
pub fn gamma_squared(gamma: &Cobracket, i: usize) -> Tensor3 {
    let n = gamma.dim();
    let gi = &gamma.components()[i];
    let mut out = Tensor3::zeros([n, n, n]);
    for a in 0..n {
        for b in 0..n {
            let c = &gi[(a, b)];
            if c.is_zero() {
                continue;
            }
            let ga = &gamma.components()[a];
            for p in 0..n {
                for q in 0..n {
                    let x = &ga[(p, q)];
                    if !x.is_zero() {
                        out[(p, q, b)] += c * x;
                    }
                }
            }
        }
    }
    out
}

/// `Alt((γ⊗1)γ(e_i))`.
pub fn cojacobi_tensor(gamma: &Cobracket, i: usize) -> Tensor3 {
    alt(&gamma_squared(gamma, i))
}

/// coJacobi identity for every basis vector; witnesses are `[i]`.
pub fn check_cojacobi(gamma: &Cobracket) -> CheckReport {
    let mut report = CheckReport::new("coJacobi");
    for i in 0..gamma.dim() {
        if !cojacobi_tensor(gamma, i).is_zero() {
            report.fail(vec![i]);
        }
    }
    report
}

/// Bracket on `g*` with `[e^a, e^b] = Σ_i γ(e_i)^{ab} e^i`, without the
/// Jacobi check.
pub fn dual_bracket_unchecked(alg: &LieAlgebra, gamma: &Cobracket) -> Result<LieAlgebra> {
    check_dim(alg, gamma.dim(), "cobracket")?;
    let n = gamma.dim();
    let c = Tensor3::from_fn([n, n, n], |a, b, i| gamma.components()[i][(a, b)].clone());
    let names = alg.names().iter().map(|s| format!("{s}*")).collect();
    LieAlgebra::from_constants_unchecked(names, c)
}

/// The dual Lie algebra `g*`; fails with the first Jacobi violation when `γ`
/// does not satisfy coJacobi.
pub fn dual_bracket(alg: &LieAlgebra, gamma: &Cobracket) -> Result<LieAlgebra> {
    let dual = dual_bracket_unchecked(alg, gamma)?;
    let report = dual.check_jacobi();
    if let Some(&(i, j, k)) = report.failing_triples().first() {
        return Err(Error::JacobiFailure { i, j, k });
    }
    Ok(dual)
}

/// `CYB(r) = [r12,r13] + [r12,r23] + [r13,r23]` for any `r ∈ g⊗g`, as the
/// coefficient tensor of `e_i⊗e_m⊗e_l`.
pub fn cyb(alg: &LieAlgebra, r: &Matrix) -> Result<Tensor3> {
    check_dim(alg, r.rows(), "r-matrix")?;
    check_dim(alg, r.cols(), "r-matrix")?;
    let n = alg.dim();
    let mut out = Tensor3::zeros([n, n, n]);
    let support: Vec<(usize, usize, &Scalar)> = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .map(|(a, b)| (a, b, &r[(a, b)]))
        .filter(|(_, _, x)| !x.is_zero())
        .collect();
    for &(a, b, rab) in &support {
        for &(c, d, rcd) in &support {
            let w = rab * rcd;
            for m in 0..n {
                // [r12, r13]: [e_a, e_c] ⊗ e_b ⊗ e_d
                let x = alg.c(a, c, m);
                if !x.is_zero() {
                    out[(m, b, d)] += &w * x;
                }
                // [r12, r23]: e_a ⊗ [e_b, e_c] ⊗ e_d
                let x = alg.c(b, c, m);
                if !x.is_zero() {
                    out[(a, m, d)] += &w * x;
                }
                // [r13, r23]: e_a ⊗ e_c ⊗ [e_b, e_d]
                let x = alg.c(b, d, m);
                if !x.is_zero() {
                    out[(a, c, m)] += &w * x;
                }
            }
        }
    }
    Ok(out)
}

/// `ad_x^{(3)}` applied to a triple tensor.
pub fn ad3_apply(alg: &LieAlgebra, x: &[Scalar], t: &Tensor3) -> Result<Tensor3> {
    let ad3 = tensor_power_action(&alg.adjoint(x)?, 3)?;
    Ok(Tensor3::from_flat(t.dims(), ad3.mul_vec(t.data())))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RMatrixClass {
    Triangular,
    Quasitriangular,
    Coboundary,
    None,
}

impl std::fmt::Display for RMatrixClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Self::Triangular => "triangular",
            Self::Quasitriangular => "quasitriangular",
            Self::Coboundary => "coboundary",
            Self::None => "none",
        })
    }
}

/// The sub-checks behind [`classify_r`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub class: RMatrixClass,
    pub antisymmetric: bool,
    pub cyb_zero: bool,
    /// `r + σ(r)` is annihilated by every `ad^{(2)}_{e_i}`.
    pub symmetric_part_invariant: bool,
    /// `ad^{(3)}_{e_i} CYB(r) = 0` for every basis vector.
    pub cyb_invariant: bool,
    pub cyb: Tensor3,
}

/// Most specific class first: triangular, then quasitriangular, then
/// coboundary.
pub fn classify_r(alg: &LieAlgebra, r: &Matrix) -> Result<Classification> {
    let t = cyb(alg, r)?;
    let antisymmetric = r.is_antisymmetric();
    let cyb_zero = t.is_zero();
    let sym = r + &braid(r);
    let ads = alg.adjoint_basis();
    let symmetric_part_invariant = ads.iter().all(|ad| ad2_on_matrix(ad, &sym).is_zero());
    let mut cyb_invariant = true;
    for i in 0..alg.dim() {
        if !ad3_apply(alg, &alg.basis_vector(i), &t)?.is_zero() {
            cyb_invariant = false;
            break;
        }
    }
    let class = if antisymmetric && cyb_zero {
        RMatrixClass::Triangular
    } else if cyb_zero && symmetric_part_invariant {
        RMatrixClass::Quasitriangular
    } else if antisymmetric && cyb_invariant {
        RMatrixClass::Coboundary
    } else {
        RMatrixClass::None
    };
    Ok(Classification {
        class,
        antisymmetric,
        cyb_zero,
        symmetric_part_invariant,
        cyb_invariant,
        cyb: t,
    })
}

/// `h_r` together with `r` rewritten in the basis of `h_r`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EtingofSchiffmann {
    pub subspace: Subspace,
    /// `r = Σ restricted^{pq} b_p⊗b_q` for the stored basis `b` of `h_r`.
    pub restricted_r: Matrix,
}

/// `h_r = {(f⊗1)r : f ∈ g*}`, the row space of `r^{ab}`.
pub fn etingof_schiffmann(alg: &LieAlgebra, r: &Bivector) -> Result<EtingofSchiffmann> {
    let t = cyb(alg, r.matrix())?;
    if let Some(&(i, m, l)) = t.support().first() {
        return Err(Error::NotAnRMatrix { i, m, l });
    }
    let n = alg.dim();
    let h = Subspace::span(n, r.matrix().row_vectors());
    let closure = alg.subalgebra_closure(h.basis());
    if closure != h {
        return Err(Error::Inconsistent(format!(
            "row space of r (dim {}) is not a subalgebra (closure has dim {})",
            h.dim(),
            closure.dim()
        )));
    }
    // The stored basis is in reduced echelon form, so r restricted to the
    // pivot rows and columns gives its coordinates.
    let pivots: Vec<usize> = h
        .basis()
        .iter()
        .map(|v| v.iter().position(|x| !x.is_zero()).expect("basis vectors are nonzero"))
        .collect();
    let k = pivots.len();
    let restricted = Matrix::from_fn(k, k, |p, q| r.matrix()[(pivots[p], pivots[q])].clone());
    let b = h.basis_matrix();
    if &(&b.transpose() * &restricted) * &b != *r.matrix() {
        return Err(Error::Inconsistent("r does not lie in h_r ⊗ h_r".into()));
    }
    if restricted.rank() != k {
        return Err(Error::Inconsistent("r is degenerate on h_r".into()));
    }
    Ok(EtingofSchiffmann {
        subspace: h,
        restricted_r: restricted,
    })
}

/// `(φ⊗φ) r = φ r φᵀ` for a Lie homomorphism `φ: g → h` (columns are images).
pub fn pushforward_r(source: &LieAlgebra, target: &LieAlgebra, phi: &Matrix, r: &Bivector) -> Result<Bivector> {
    source.check_homomorphism(target, phi)?;
    check_dim(source, r.dim(), "r-matrix")?;
    Bivector::new(&(phi * r.matrix()) * &phi.transpose())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use num_traits::One;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    fn xy() -> Bivector {
        Bivector::wedge(2, 0, 1, s(1))
    }

    #[test]
    fn two_dim_cobracket() {
        let alg = catalog::two_dim();
        let g = cobracket_from_r(&alg, &xy()).unwrap();
        assert!(g.components()[0].is_zero());
        // γ(Y) = -X∧Y
        assert_eq!(g.components()[1], Bivector::wedge(2, 0, 1, s(-1)).into_matrix());
        assert!(check_cocycle(&alg, &g).unwrap().passed);
        assert!(check_cojacobi(&g).passed);
    }

    #[test]
    fn cobracket_matches_ad_power() {
        for (_, alg) in catalog::abstract_algebras() {
            let n = alg.dim();
            let r = Bivector::new(Matrix::from_fn(n, n, |a, b| s(a as i64 - b as i64))).unwrap();
            let g = cobracket_from_r(&alg, &r).unwrap();
            for i in 0..n {
                let ad2 = alg.ad_power(&alg.basis_vector(i), 2).unwrap();
                let flat = ad2.mul_vec(r.matrix().data());
                assert_eq!(g.components()[i].data(), flat.as_slice());
            }
        }
    }

    #[test]
    fn zero_and_abelian_cobrackets() {
        let alg = catalog::sl2();
        assert_eq!(cobracket_from_r(&alg, &Bivector::zero(3)).unwrap(), Cobracket::zero(3));
        let ab = LieAlgebra::abelian(3);
        let r = Bivector::wedge(3, 0, 2, s(5));
        assert_eq!(cobracket_from_r(&ab, &r).unwrap(), Cobracket::zero(3));
    }

    #[test]
    fn every_two_dim_cobracket_is_a_cocycle() {
        // g∧g is spanned by X∧Y, and with γ(X) = a X∧Y, γ(Y) = b X∧Y both
        // sides on (X, Y) equal a X∧Y.
        let alg = catalog::two_dim();
        for (a, b) in [(1, 0), (0, 1), (2, -3)] {
            let g = Cobracket::new(vec![xy().into_matrix().scale(&s(a)), xy().into_matrix().scale(&s(b))]).unwrap();
            assert!(check_cocycle(&alg, &g).unwrap().passed);
        }
    }

    #[test]
    fn cocycle_failure() {
        // γ(h) = e∧f, γ(e) = γ(f) = 0 on sl2: on (h, e) the left side is
        // 2γ(e) = 0 while the right side is -ad_e(e∧f) = h∧e.
        let alg = catalog::sl2();
        let mut parts = vec![Matrix::zeros(3, 3); 3];
        parts[0] = Bivector::wedge(3, 1, 2, s(1)).into_matrix();
        let rep = check_cocycle(&alg, &Cobracket::new(parts).unwrap()).unwrap();
        assert!(!rep.passed);
        assert!(rep.witnesses.contains(&vec![0, 1]));
    }

    #[test]
    fn cojacobi_failure_from_perturbation() {
        // Perturb the zero cobracket on sl2 so that the transposed bracket is
        // [e1,e2] = e3, [e1,e3] = e1, which fails Jacobi.
        let alg = catalog::sl2();
        let mut parts = vec![Matrix::zeros(3, 3); 3];
        parts[2] = Bivector::wedge(3, 0, 1, s(1)).into_matrix();
        parts[0] = Bivector::wedge(3, 0, 2, s(1)).into_matrix();
        let g = Cobracket::new(parts).unwrap();
        let rep = check_cojacobi(&g);
        assert!(!rep.passed, "perturbation should break coJacobi");
        assert!(!rep.witnesses.is_empty());
        assert!(matches!(dual_bracket(&alg, &g), Err(Error::JacobiFailure { .. })));
        assert!(!dual_bracket_unchecked(&alg, &g).unwrap().check_jacobi().passed);
    }

    #[test]
    fn dual_of_two_dim() {
        let alg = catalog::two_dim();
        let g = cobracket_from_r(&alg, &xy()).unwrap();
        let dual = dual_bracket(&alg, &g).unwrap();
        // [X*, Y*] = -Y*
        assert_eq!(dual.bracket(&[s(1), s(0)], &[s(0), s(1)]), vec![s(0), s(-1)]);
        let zero = dual_bracket(&alg, &Cobracket::zero(2)).unwrap();
        assert!(zero.is_abelian());
    }

    #[test]
    fn cyb_examples() {
        let two = catalog::two_dim();
        assert!(cyb(&two, xy().matrix()).unwrap().is_zero());
        assert!(cyb(&two, &Matrix::zeros(2, 2)).unwrap().is_zero());
        let heis = catalog::heisenberg();
        assert!(cyb(&heis, Bivector::wedge(3, 0, 2, s(1)).matrix()).unwrap().is_zero());
        let sl2 = catalog::sl2();
        assert!(!cyb(&sl2, Bivector::wedge(3, 1, 2, s(1)).matrix()).unwrap().is_zero());
    }

    #[test]
    fn classify_examples() {
        let two = catalog::two_dim();
        assert_eq!(classify_r(&two, xy().matrix()).unwrap().class, RMatrixClass::Triangular);

        let ab = LieAlgebra::abelian(2);
        let mut sym = Matrix::zeros(2, 2);
        sym[(0, 0)] = Scalar::one();
        assert_eq!(classify_r(&ab, &sym).unwrap().class, RMatrixClass::Quasitriangular);

        // X⊗Y on [X,Y] = X: not antisymmetric.
        let mut x_y = Matrix::zeros(2, 2);
        x_y[(0, 1)] = Scalar::one();
        let c = classify_r(&two, &x_y).unwrap();
        assert!(!c.antisymmetric);
        assert_ne!(c.class, RMatrixClass::Triangular);
        // CYB(X⊗Y) = [X,X]⊗Y⊗Y + X⊗[Y,X]⊗Y + X⊗X⊗[Y,Y] = -X⊗X⊗Y
        let mut expected = Tensor3::zeros([2, 2, 2]);
        expected[(0, 0, 1)] = s(-1);
        assert_eq!(c.cyb, expected);
        assert!(!c.cyb_zero);
        // r + σ(r) = X⊗Y + Y⊗X; ad_Y^{(2)} of it is -2 X⊗X ≠ 0
        assert!(!c.symmetric_part_invariant);
        assert_eq!(c.class, RMatrixClass::None);

        // standard r = e∧f on sl2: CYB nonzero but invariant.
        let sl2 = catalog::sl2();
        let c = classify_r(&sl2, Bivector::wedge(3, 1, 2, s(1)).matrix()).unwrap();
        assert_eq!(c.class, RMatrixClass::Coboundary);
    }

    #[test]
    fn etingof_schiffmann_examples() {
        let two = catalog::two_dim();
        let es = etingof_schiffmann(&two, &xy()).unwrap();
        assert_eq!(es.subspace, Subspace::whole(2));
        assert_eq!(es.restricted_r.rank(), 2);

        let zero = etingof_schiffmann(&two, &Bivector::zero(2)).unwrap();
        assert!(zero.subspace.is_zero());

        let heis = catalog::heisenberg();
        let es = etingof_schiffmann(&heis, &Bivector::wedge(3, 0, 2, s(1))).unwrap();
        assert_eq!(es.subspace, Subspace::span(3, vec![heis.basis_vector(0), heis.basis_vector(2)]));
        assert!(heis.restrict(&es.subspace).unwrap().is_abelian());

        let sl2 = catalog::sl2();
        assert!(matches!(
            etingof_schiffmann(&sl2, &Bivector::wedge(3, 1, 2, s(1))),
            Err(Error::NotAnRMatrix { .. })
        ));
    }

    #[test]
    fn pushforward_examples() {
        let two = catalog::two_dim();
        let r = xy();
        let id = Matrix::identity(2);
        assert_eq!(pushforward_r(&two, &two, &id, &r).unwrap(), r);
        let zero = Matrix::zeros(2, 2);
        assert_eq!(pushforward_r(&two, &two, &zero, &r).unwrap(), Bivector::zero(2));
        let phi = Matrix::from_ints(&[&[2, 0], &[0, 1]]);
        let pushed = pushforward_r(&two, &two, &phi, &r).unwrap();
        assert_eq!(pushed, Bivector::wedge(2, 0, 1, s(2)));
        assert_eq!(classify_r(&two, pushed.matrix()).unwrap().class, RMatrixClass::Triangular);
        // swapping X and Y is not a homomorphism
        let swap = Matrix::from_ints(&[&[0, 1], &[1, 0]]);
        assert!(matches!(
            pushforward_r(&two, &two, &swap, &r),
            Err(Error::NotHomomorphism { left: 0, right: 1 })
        ));
    }

    #[test]
    fn invariant_shift_leaves_cobracket_unchanged() {
        // On sl2 the only invariant in g∧g is 0, so use a direct sum where the
        // abelian part gives invariant bivectors: g = 2D ⊕ k², α = e3∧e4.
        let alg = catalog::two_dim_plus_abelian2();
        let r = Bivector::wedge(4, 0, 1, s(1));
        let alpha = Bivector::wedge(4, 2, 3, s(7));
        for ad in alg.adjoint_basis() {
            assert!(ad2_on_matrix(&ad, alpha.matrix()).is_zero());
        }
        assert_eq!(
            cobracket_from_r(&alg, &r).unwrap(),
            cobracket_from_r(&alg, &(&r + &alpha)).unwrap()
        );
    }
}
