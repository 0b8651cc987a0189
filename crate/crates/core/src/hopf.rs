//! Finite-dimensional Hopf algebras as structure tensors, Drinfel'd twists,
//! twisted Hopf structures and twisted module algebras.
//!
//! Conventions: `mult[(a, b, c)]` is the coefficient of `e_c` in `e_a e_b`;
//! `coprod[(a, b, c)]` is the coefficient of `e_b⊗e_c` in `Δ(e_a)`; column `a`
//! of `antipode` is `S(e_a)`. Elements of `H^{⊗k}` are flat vectors with
//! `e_a⊗e_b` at `a*d + b` and `e_a⊗e_b⊗e_c` at `(a*d + b)*d + c`.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{unit_vector, vec_add, vec_scale, vec_sub, zero_vector, Matrix, Tensor3, Vector};
use crate::report::{AxiomReport, CheckReport};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HopfAlgebra {
    dim: usize,
    mult: Tensor3,
    unit: Vector,
    coprod: Tensor3,
    counit: Vector,
    antipode: Matrix,
}

fn digits(mut index: usize, d: usize, k: usize) -> Vec<usize> {
    let mut out = vec![0; k];
    for slot in (0..k).rev() {
        out[slot] = index % d;
        index /= d;
    }
    out
}

/// `v_1 ⊗ ... ⊗ v_k` as a flat vector.
pub fn kron_vectors(parts: &[&[Scalar]]) -> Vector {
    let mut out = vec![Scalar::one()];
    for p in parts {
        let mut next = Vec::with_capacity(out.len() * p.len());
        for x in &out {
            for y in p.iter() {
                next.push(if x.is_zero() || y.is_zero() { Scalar::zero() } else { x * y });
            }
        }
        out = next;
    }
    out
}

fn nonzero(v: &[Scalar]) -> impl Iterator<Item = (usize, &Scalar)> {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero())
}

impl HopfAlgebra {
    /// Checks tensor shapes only; see [`check_hopf_axioms`] for the axioms.
    pub fn new(mult: Tensor3, unit: Vector, coprod: Tensor3, counit: Vector, antipode: Matrix) -> Result<Self> {
        let d = unit.len();
        let shape = |context: &'static str, ok: bool, found: usize| {
            if ok {
                Ok(())
            } else {
                Err(Error::DimensionMismatch {
                    context,
                    expected: d,
                    found,
                })
            }
        };
        shape("multiplication tensor", mult.dims() == [d, d, d], mult.dims()[0])?;
        shape("coproduct tensor", coprod.dims() == [d, d, d], coprod.dims()[0])?;
        shape("counit", counit.len() == d, counit.len())?;
        shape("antipode", antipode.rows() == d && antipode.cols() == d, antipode.rows())?;
        Ok(Self {
            dim: d,
            mult,
            unit,
            coprod,
            counit,
            antipode,
        })
    }

    /// Like [`HopfAlgebra::new`], then rejects data failing any axiom.
    pub fn new_checked(mult: Tensor3, unit: Vector, coprod: Tensor3, counit: Vector, antipode: Matrix) -> Result<Self> {
        let h = Self::new(mult, unit, coprod, counit, antipode)?;
        let report = check_hopf_axioms(&h);
        if let Some(c) = report.failing().next() {
            return Err(Error::Inconsistent(format!("Hopf axioms fail: {c}")));
        }
        Ok(h)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mult(&self) -> &Tensor3 {
        &self.mult
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn coprod(&self) -> &Tensor3 {
        &self.coprod
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    pub fn basis(&self, a: usize) -> Vector {
        unit_vector(self.dim, a)
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let d = self.dim;
        let mut out = zero_vector(d);
        for (a, xa) in nonzero(x) {
            for (b, yb) in nonzero(y) {
                let w = xa * yb;
                for (c, o) in out.iter_mut().enumerate() {
                    let m = &self.mult[(a, b, c)];
                    if !m.is_zero() {
                        *o += &w * m;
                    }
                }
            }
        }
        out
    }

    /// Product in the algebra `H^{⊗k}`.
    pub fn mul_tensor(&self, k: usize, x: &[Scalar], y: &[Scalar]) -> Vector {
        let d = self.dim;
        let mut out = zero_vector(d.pow(k as u32));
        for (ix, xv) in nonzero(x) {
            let dx = digits(ix, d, k);
            for (iy, yv) in nonzero(y) {
                let dy = digits(iy, d, k);
                let factors: Vec<Vector> = (0..k).map(|s| self.mul(&self.basis(dx[s]), &self.basis(dy[s]))).collect();
                let refs: Vec<&[Scalar]> = factors.iter().map(|f| f.as_slice()).collect();
                let w = xv * yv;
                for (i, c) in nonzero(&kron_vectors(&refs)) {
                    out[i] += &w * c;
                }
            }
        }
        out
    }

    pub fn one_tensor(&self, k: usize) -> Vector {
        let parts: Vec<&[Scalar]> = (0..k).map(|_| self.unit.as_slice()).collect();
        kron_vectors(&parts)
    }

    pub fn coproduct(&self, x: &[Scalar]) -> Vector {
        let d = self.dim;
        let mut out = zero_vector(d * d);
        for (a, xa) in nonzero(x) {
            for b in 0..d {
                for c in 0..d {
                    let v = &self.coprod[(a, b, c)];
                    if !v.is_zero() {
                        out[b * d + c] += xa * v;
                    }
                }
            }
        }
        out
    }

    pub fn apply_counit(&self, x: &[Scalar]) -> Scalar {
        nonzero(x).map(|(a, xa)| xa * &self.counit[a]).sum()
    }

    pub fn apply_antipode(&self, x: &[Scalar]) -> Vector {
        self.antipode.mul_vec(x)
    }

    /// Apply one linear map per tensor slot of an element of `H^{⊗k}`;
    /// `maps[s]` sends a basis index to a vector of `H^{⊗m_s}`.
    fn map_slots(&self, k: usize, x: &[Scalar], maps: &[&dyn Fn(usize) -> Vector]) -> Vector {
        let d = self.dim;
        let mut out: Option<Vector> = None;
        for (ix, xv) in nonzero(x) {
            let dx = digits(ix, d, k);
            let images: Vec<Vector> = (0..k).map(|s| maps[s](dx[s])).collect();
            let refs: Vec<&[Scalar]> = images.iter().map(|f| f.as_slice()).collect();
            let term = vec_scale(&kron_vectors(&refs), xv);
            out = Some(match out {
                None => term,
                Some(acc) => vec_add(&acc, &term),
            });
        }
        out.unwrap_or_else(|| {
            let size: usize = (0..k).map(|s| maps[s](0).len()).product();
            zero_vector(size)
        })
    }

    /// `m(φ⊗ψ)` on an element of `H⊗H`, with `φ`, `ψ` linear maps on `H`.
    fn multiply_out(&self, x: &[Scalar], phi: &dyn Fn(&[Scalar]) -> Vector, psi: &dyn Fn(&[Scalar]) -> Vector) -> Vector {
        let d = self.dim;
        let mut out = zero_vector(d);
        for (ix, xv) in nonzero(x) {
            let p = self.mul(&phi(&self.basis(ix / d)), &psi(&self.basis(ix % d)));
            out = vec_add(&out, &vec_scale(&p, xv));
        }
        out
    }

    /// Left multiplication by `x` on `H^{⊗k}` as a matrix.
    fn left_mult_matrix(&self, k: usize, x: &[Scalar]) -> Matrix {
        let n = self.dim.pow(k as u32);
        let cols: Vec<Vector> = (0..n).map(|j| self.mul_tensor(k, x, &unit_vector(n, j))).collect();
        Matrix::from_columns(n, &cols)
    }

    /// Two-sided inverse in `H^{⊗k}`, `None` when singular.
    pub fn inverse_tensor(&self, k: usize, x: &[Scalar]) -> Option<Vector> {
        let one = self.one_tensor(k);
        let y = self.left_mult_matrix(k, x).solve(&one)?;
        (self.mul_tensor(k, &y, x) == one).then_some(y)
    }
}

fn compare(report: &mut CheckReport, lhs: &[Scalar], rhs: &[Scalar], witness: Vec<usize>) {
    report.record(lhs == rhs, || witness);
}

/// The eight axiom families, each checked on basis elements.
pub fn check_hopf_axioms(h: &HopfAlgebra) -> AxiomReport {
    let d = h.dim();
    let one = h.unit().to_vec();
    let mut assoc = CheckReport::new("associativity");
    let mut unit = CheckReport::new("unit");
    let mut coassoc = CheckReport::new("coassociativity");
    let mut counit = CheckReport::new("counit");
    let mut delta_alg = CheckReport::new("coproduct is an algebra map");
    let mut eps_alg = CheckReport::new("counit is an algebra map");
    let mut s_left = CheckReport::new("antipode m(S⊗1)Δ = ηε");
    let mut s_right = CheckReport::new("antipode m(1⊗S)Δ = ηε");

    let id = |a: usize| h.basis(a);
    let delta = |a: usize| h.coproduct(&h.basis(a));
    let eps = |a: usize| vec![h.counit()[a].clone()];

    for a in 0..d {
        let ea = h.basis(a);
        compare(&mut unit, &h.mul(&one, &ea), &ea, vec![a]);
        compare(&mut unit, &h.mul(&ea, &one), &ea, vec![a]);

        let da = h.coproduct(&ea);
        let left = h.map_slots(2, &da, &[&delta, &id]);
        let right = h.map_slots(2, &da, &[&id, &delta]);
        compare(&mut coassoc, &left, &right, vec![a]);

        compare(&mut counit, &h.map_slots(2, &da, &[&eps, &id]), &ea, vec![a]);
        compare(&mut counit, &h.map_slots(2, &da, &[&id, &eps]), &ea, vec![a]);

        let target = vec_scale(&one, &h.counit()[a]);
        let sl = h.multiply_out(&da, &|x| h.apply_antipode(x), &|x| x.to_vec());
        let sr = h.multiply_out(&da, &|x| x.to_vec(), &|x| h.apply_antipode(x));
        compare(&mut s_left, &sl, &target, vec![a]);
        compare(&mut s_right, &sr, &target, vec![a]);

        for b in 0..d {
            let eb = h.basis(b);
            let ab = h.mul(&ea, &eb);
            for c in 0..d {
                let ec = h.basis(c);
                compare(&mut assoc, &h.mul(&ab, &ec), &h.mul(&ea, &h.mul(&eb, &ec)), vec![a, b, c]);
            }
            let lhs = h.coproduct(&ab);
            let rhs = h.mul_tensor(2, &da, &h.coproduct(&eb));
            compare(&mut delta_alg, &lhs, &rhs, vec![a, b]);
            let e = h.apply_counit(&ab);
            eps_alg.record(e == &h.counit()[a] * &h.counit()[b], || vec![a, b]);
        }
    }
    // Unit witnesses are empty tuples.
    compare(&mut delta_alg, &h.coproduct(&one), &h.one_tensor(2), Vec::new());
    eps_alg.record(h.apply_counit(&one).is_one(), Vec::new);

    AxiomReport {
        checks: vec![assoc, unit, coassoc, counit, delta_alg, eps_alg, s_left, s_right],
    }
}

/// `S(ab) = S(b)S(a)`, `(S⊗S)Δ = σΔS`, `εS = ε` and `S(1) = 1`.
pub fn antipode_properties(h: &HopfAlgebra) -> AxiomReport {
    let d = h.dim();
    let mut anti = CheckReport::new("S(ab) = S(b)S(a)");
    let mut co = CheckReport::new("(S⊗S)Δ = σΔS");
    let mut eps = CheckReport::new("εS = ε");
    let mut unit = CheckReport::new("S(1) = 1");
    let s = |a: usize| h.apply_antipode(&h.basis(a));
    for a in 0..d {
        let ea = h.basis(a);
        for b in 0..d {
            let eb = h.basis(b);
            let lhs = h.apply_antipode(&h.mul(&ea, &eb));
            let rhs = h.mul(&h.apply_antipode(&eb), &h.apply_antipode(&ea));
            compare(&mut anti, &lhs, &rhs, vec![a, b]);
        }
        let lhs = h.map_slots(2, &h.coproduct(&ea), &[&s, &s]);
        let rhs = crate::linalg::braid_vec(&h.coproduct(&h.apply_antipode(&ea)), d);
        compare(&mut co, &lhs, &rhs, vec![a]);
        eps.record(h.apply_counit(&h.apply_antipode(&ea)) == h.counit()[a], || vec![a]);
    }
    compare(&mut unit, &h.apply_antipode(h.unit()), h.unit(), Vec::new());
    AxiomReport {
        checks: vec![anti, co, eps, unit],
    }
}

/// All linear maps `S` satisfying both antipode identities: a particular
/// solution (if any) and the dimension of the solution space's direction.
pub fn antipode_solutions(h: &HopfAlgebra) -> (Option<Matrix>, usize) {
    let d = h.dim();
    // Unknown s[(c, a)] = coefficient of e_c in S(e_a), flattened c*d + a.
    let n = d * d;
    let mut rows: Vec<Vector> = Vec::new();
    let mut rhs: Vector = Vec::new();
    for a in 0..d {
        let target = vec_scale(h.unit(), &h.counit()[a]);
        for side in 0..2 {
            // e_out coefficient of Σ Δ[a][b][c] (S(e_b) e_c) or (e_b S(e_c)).
            let mut eqs = vec![zero_vector(n); d];
            for b in 0..d {
                for c in 0..d {
                    let w = &h.coprod()[(a, b, c)];
                    if w.is_zero() {
                        continue;
                    }
                    // The slot carrying S, and the fixed slot.
                    let (s_slot, fixed) = if side == 0 { (b, c) } else { (c, b) };
                    for x in 0..d {
                        let prod = if side == 0 {
                            h.mul(&h.basis(x), &h.basis(fixed))
                        } else {
                            h.mul(&h.basis(fixed), &h.basis(x))
                        };
                        for (o, p) in nonzero(&prod) {
                            eqs[o][x * d + s_slot] += w * p;
                        }
                    }
                }
            }
            for (o, row) in eqs.into_iter().enumerate() {
                rows.push(row);
                rhs.push(target[o].clone());
            }
        }
    }
    let m = Matrix::from_rows(n, rows);
    let kernel = m.kernel_basis().len();
    let particular = m.solve(&rhs).map(|s| Matrix::new(d, d, s));
    (particular, kernel)
}

/// An invertible element of `H⊗H` together with its inverse.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistElement {
    f: Vector,
    finv: Vector,
}

impl TwistElement {
    pub fn new(h: &HopfAlgebra, f: Vector) -> Result<Self> {
        let d = h.dim();
        if f.len() != d * d {
            return Err(Error::DimensionMismatch {
                context: "twist element",
                expected: d * d,
                found: f.len(),
            });
        }
        let finv = h
            .inverse_tensor(2, &f)
            .ok_or_else(|| Error::NotInvertible("F has no inverse in H⊗H".into()))?;
        Ok(Self { f, finv })
    }

    pub fn trivial(h: &HopfAlgebra) -> Self {
        let one = h.one_tensor(2);
        Self {
            f: one.clone(),
            finv: one,
        }
    }

    pub fn f(&self) -> &[Scalar] {
        &self.f
    }

    pub fn finv(&self) -> &[Scalar] {
        &self.finv
    }

    pub fn inverse(&self) -> Self {
        Self {
            f: self.finv.clone(),
            finv: self.f.clone(),
        }
    }
}

fn tensor_witness(lhs: &[Scalar], rhs: &[Scalar], d: usize, k: usize, report: &mut CheckReport) {
    for (i, (l, r)) in lhs.iter().zip(rhs).enumerate() {
        if l != r {
            report.fail(digits(i, d, k));
        }
    }
}

/// `(Δ⊗1)x` and `(1⊗Δ)x` for `x ∈ H⊗H`.
fn delta_left(h: &HopfAlgebra, x: &[Scalar]) -> Vector {
    h.map_slots(2, x, &[&|a| h.coproduct(&h.basis(a)), &|a| h.basis(a)])
}

fn delta_right(h: &HopfAlgebra, x: &[Scalar]) -> Vector {
    h.map_slots(2, x, &[&|a| h.basis(a), &|a| h.coproduct(&h.basis(a))])
}

/// 2-cocycle condition `F₁₂(Δ⊗1)F = F₂₃(1⊗Δ)F` and normalization
/// `(ε⊗1)F = (1⊗ε)F = 1`.
pub fn is_twist(h: &HopfAlgebra, t: &TwistElement) -> AxiomReport {
    twist_conditions(h, t.f())
}

/// The conditions of [`is_twist`] for any element of `H⊗H`, invertible or not.
pub fn twist_conditions(h: &HopfAlgebra, f: &[Scalar]) -> AxiomReport {
    let d = h.dim();
    let f12 = kron_vectors(&[f, h.unit()]);
    let f23 = kron_vectors(&[h.unit(), f]);
    let lhs = h.mul_tensor(3, &f12, &delta_left(h, f));
    let rhs = h.mul_tensor(3, &f23, &delta_right(h, f));
    let mut cocycle = CheckReport::new("2-cocycle");
    tensor_witness(&lhs, &rhs, d, 3, &mut cocycle);

    let mut norm = CheckReport::new("normalization");
    let (left, right) = normalization_sides(h, f);
    compare(&mut norm, &left, h.unit(), vec![0]);
    compare(&mut norm, &right, h.unit(), vec![1]);
    AxiomReport {
        checks: vec![cocycle, norm],
    }
}

/// `(ε⊗1)F` and `(1⊗ε)F`.
pub fn normalization_sides(h: &HopfAlgebra, f: &[Scalar]) -> (Vector, Vector) {
    let eps = |a: usize| vec![h.counit()[a].clone()];
    let id = |a: usize| h.basis(a);
    (h.map_slots(2, f, &[&eps, &id]), h.map_slots(2, f, &[&id, &eps]))
}

/// `((Δ⊗1)F⁻¹)F₁₂⁻¹ = ((1⊗Δ)F⁻¹)F₂₃⁻¹`.
pub fn check_inverse_cocycle(h: &HopfAlgebra, t: &TwistElement) -> CheckReport {
    let d = h.dim();
    let g = t.finv();
    let lhs = h.mul_tensor(3, &delta_left(h, g), &kron_vectors(&[g, h.unit()]));
    let rhs = h.mul_tensor(3, &delta_right(h, g), &kron_vectors(&[h.unit(), g]));
    let mut report = CheckReport::new("inverse 2-cocycle");
    tensor_witness(&lhs, &rhs, d, 3, &mut report);
    report
}

/// `U = m((1⊗S)F)` and `U⁻¹ = m((S⊗1)F⁻¹)`.
pub fn twist_u(h: &HopfAlgebra, t: &TwistElement) -> (Vector, Vector) {
    let id = |x: &[Scalar]| x.to_vec();
    let s = |x: &[Scalar]| h.apply_antipode(x);
    let u = h.multiply_out(t.f(), &id, &s);
    let uinv = h.multiply_out(t.finv(), &s, &id);
    (u, uinv)
}

fn require_twist(h: &HopfAlgebra, t: &TwistElement) -> Result<()> {
    let report = is_twist(h, t);
    let failure = report.failing().next().map(|c| c.to_string());
    match failure {
        Some(c) => Err(Error::NotATwist(c)),
        None => Ok(()),
    }
}

/// `Δ^F = FΔF⁻¹` and `S^F = U S U⁻¹`; product, unit and counit unchanged.
pub fn deform_hopf(h: &HopfAlgebra, t: &TwistElement) -> Result<HopfAlgebra> {
    require_twist(h, t)?;
    let d = h.dim();
    let (u, uinv) = twist_u(h, t);
    if h.mul(&u, &uinv) != h.unit() || h.mul(&uinv, &u) != h.unit() {
        return Err(Error::Inconsistent("U = m((1⊗S)F) is not inverted by m((S⊗1)F⁻¹)".into()));
    }
    let mut coprod = Tensor3::zeros([d, d, d]);
    let mut cols = Vec::with_capacity(d);
    for a in 0..d {
        let ea = h.basis(a);
        let conj = h.mul_tensor(2, &h.mul_tensor(2, t.f(), &h.coproduct(&ea)), t.finv());
        for (i, x) in conj.into_iter().enumerate() {
            coprod[(a, i / d, i % d)] = x;
        }
        cols.push(h.mul(&h.mul(&u, &h.apply_antipode(&ea)), &uinv));
    }
    HopfAlgebra::new(
        h.mult().clone(),
        h.unit().to_vec(),
        coprod,
        h.counit().to_vec(),
        Matrix::from_columns(d, &cols),
    )
}

/// Deform by `F`, then deform the result by `F⁻¹`.
pub fn twist_back(h: &HopfAlgebra, t: &TwistElement) -> Result<HopfAlgebra> {
    let deformed = deform_hopf(h, t)?;
    deform_hopf(&deformed, &t.inverse())
}

/// An algebra `A` with a left action `▷: H⊗A → A`.
/// `action[(x, a, b)]` is the coefficient of `e_b` in `e_x ▷ e_a`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleAlgebra {
    dim: usize,
    mult: Tensor3,
    unit: Vector,
    action: Tensor3,
}

impl ModuleAlgebra {
    /// Shape checks only; see [`check_module_algebra`].
    pub fn new(mult: Tensor3, unit: Vector, action: Tensor3) -> Result<Self> {
        let e = unit.len();
        if mult.dims() != [e, e, e] {
            return Err(Error::DimensionMismatch {
                context: "module algebra product",
                expected: e,
                found: mult.dims()[0],
            });
        }
        let [_, a, b] = action.dims();
        if a != e || b != e {
            return Err(Error::DimensionMismatch {
                context: "action tensor",
                expected: e,
                found: if a != e { a } else { b },
            });
        }
        Ok(Self {
            dim: e,
            mult,
            unit,
            action,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mult(&self) -> &Tensor3 {
        &self.mult
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn action(&self) -> &Tensor3 {
        &self.action
    }

    pub fn basis(&self, a: usize) -> Vector {
        unit_vector(self.dim, a)
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = zero_vector(self.dim);
        for (a, xa) in nonzero(x) {
            for (b, yb) in nonzero(y) {
                let w = xa * yb;
                for (c, o) in out.iter_mut().enumerate() {
                    let m = &self.mult[(a, b, c)];
                    if !m.is_zero() {
                        *o += &w * m;
                    }
                }
            }
        }
        out
    }

    /// `ξ ▷ a` for `ξ ∈ H`, `a ∈ A`.
    pub fn act(&self, xi: &[Scalar], a: &[Scalar]) -> Vector {
        let mut out = zero_vector(self.dim);
        for (x, xv) in nonzero(xi) {
            for (i, av) in nonzero(a) {
                let w = xv * av;
                for (b, o) in out.iter_mut().enumerate() {
                    let c = &self.action[(x, i, b)];
                    if !c.is_zero() {
                        *o += &w * c;
                    }
                }
            }
        }
        out
    }

    /// `m(x ▷ (a⊗b))` for `x ∈ H⊗H`.
    pub fn act_and_multiply(&self, hdim: usize, x: &[Scalar], a: &[Scalar], b: &[Scalar]) -> Vector {
        let mut out = zero_vector(self.dim);
        for (i, xv) in nonzero(x) {
            let p = self.mul(&self.act(&unit_vector(hdim, i / hdim), a), &self.act(&unit_vector(hdim, i % hdim), b));
            out = vec_add(&out, &vec_scale(&p, xv));
        }
        out
    }

    /// `a b − b a` on every basis pair, nonzero entries only.
    pub fn commutators(&self) -> Vec<(usize, usize, Vector)> {
        let mut out = Vec::new();
        for a in 0..self.dim {
            for b in a + 1..self.dim {
                let (x, y) = (self.basis(a), self.basis(b));
                let c = vec_sub(&self.mul(&x, &y), &self.mul(&y, &x));
                if c.iter().any(|v| !v.is_zero()) {
                    out.push((a, b, c));
                }
            }
        }
        out
    }
}

/// Associativity and unit of `A`, the module axioms and compatibility with
/// the product and unit.
pub fn check_module_algebra(h: &HopfAlgebra, m: &ModuleAlgebra) -> Result<AxiomReport> {
    if m.action().dims()[0] != h.dim() {
        return Err(Error::DimensionMismatch {
            context: "action tensor",
            expected: h.dim(),
            found: m.action().dims()[0],
        });
    }
    let (d, e) = (h.dim(), m.dim());
    let mut assoc = CheckReport::new("algebra associativity");
    let mut unit = CheckReport::new("algebra unit");
    let mut module = CheckReport::new("(ξζ)▷a = ξ▷(ζ▷a)");
    let mut unit_act = CheckReport::new("1▷a = a");
    let mut prod = CheckReport::new("ξ▷(ab) = (ξ₁▷a)(ξ₂▷b)");
    let mut unit_compat = CheckReport::new("ξ▷1 = ε(ξ)1");
    let one = m.unit().to_vec();
    for a in 0..e {
        let ea = m.basis(a);
        compare(&mut unit, &m.mul(&one, &ea), &ea, vec![a]);
        compare(&mut unit, &m.mul(&ea, &one), &ea, vec![a]);
        compare(&mut unit_act, &m.act(h.unit(), &ea), &ea, vec![a]);
        for b in 0..e {
            let eb = m.basis(b);
            let ab = m.mul(&ea, &eb);
            for c in 0..e {
                let ec = m.basis(c);
                compare(&mut assoc, &m.mul(&ab, &ec), &m.mul(&ea, &m.mul(&eb, &ec)), vec![a, b, c]);
            }
        }
    }
    for x in 0..d {
        let ex = h.basis(x);
        let dx = h.coproduct(&ex);
        compare(&mut unit_compat, &m.act(&ex, &one), &vec_scale(&one, &h.counit()[x]), vec![x]);
        for a in 0..e {
            let ea = m.basis(a);
            for y in 0..d {
                let ey = h.basis(y);
                compare(&mut module, &m.act(&h.mul(&ex, &ey), &ea), &m.act(&ex, &m.act(&ey, &ea)), vec![x, y, a]);
            }
            for b in 0..e {
                let eb = m.basis(b);
                let lhs = m.act(&ex, &m.mul(&ea, &eb));
                let rhs = m.act_and_multiply(d, &dx, &ea, &eb);
                compare(&mut prod, &lhs, &rhs, vec![x, a, b]);
            }
        }
    }
    Ok(AxiomReport {
        checks: vec![assoc, unit, module, unit_act, prod, unit_compat],
    })
}

/// `a ⋆ b = m(F⁻¹ ▷ (a⊗b))` with the same unit and action.
pub fn twist_module_algebra(h: &HopfAlgebra, t: &TwistElement, m: &ModuleAlgebra) -> Result<ModuleAlgebra> {
    require_twist(h, t)?;
    let report = check_module_algebra(h, m)?;
    if let Some(c) = report.failing().next() {
        return Err(Error::ModuleAxiomsFail(c.to_string()));
    }
    let e = m.dim();
    let mut mult = Tensor3::zeros([e, e, e]);
    for a in 0..e {
        for b in 0..e {
            let p = m.act_and_multiply(h.dim(), t.finv(), &m.basis(a), &m.basis(b));
            for (c, x) in p.into_iter().enumerate() {
                mult[(a, b, c)] = x;
            }
        }
    }
    ModuleAlgebra::new(mult, m.unit().to_vec(), m.action().clone())
}

/// Convolution algebra on `H*` in the dual basis, with unit `ε`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualAlgebra {
    pub mult: Tensor3,
    pub unit: Vector,
    pub associative: bool,
    pub unital: bool,
}

pub fn dual_algebra_of_coalgebra(h: &HopfAlgebra) -> DualAlgebra {
    let d = h.dim();
    // (φ^a φ^b)(e_c) = coefficient of e_a⊗e_b in Δ(e_c)
    let mult = Tensor3::from_fn([d, d, d], |a, b, c| h.coprod()[(c, a, b)].clone());
    let unit = h.counit().to_vec();
    let alg = ModuleAlgebra::new(mult.clone(), unit.clone(), Tensor3::zeros([0, d, d])).expect("shapes agree");
    let mut associative = true;
    let mut unital = true;
    for a in 0..d {
        let ea = alg.basis(a);
        unital &= alg.mul(&unit, &ea) == ea && alg.mul(&ea, &unit) == ea;
        for b in 0..d {
            let ab = alg.mul(&ea, &alg.basis(b));
            for c in 0..d {
                let ec = alg.basis(c);
                associative &= alg.mul(&ab, &ec) == alg.mul(&ea, &alg.mul(&alg.basis(b), &ec));
            }
        }
    }
    DualAlgebra {
        mult,
        unit,
        associative,
        unital,
    }
}

/// Group algebra `k[G]` of a finite group given by its multiplication table
/// (`table[a][b]` is the index of `g_a g_b`; index 0 must be the identity).
pub fn group_algebra(table: &[Vec<usize>]) -> Result<HopfAlgebra> {
    let n = table.len();
    if table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
        return Err(Error::Document("group table is not square or has out-of-range entries".into()));
    }
    let mut mult = Tensor3::zeros([n, n, n]);
    let mut coprod = Tensor3::zeros([n, n, n]);
    let mut antipode = Matrix::zeros(n, n);
    for a in 0..n {
        for b in 0..n {
            mult[(a, b, table[a][b])] = Scalar::one();
        }
        coprod[(a, a, a)] = Scalar::one();
        let inv = (0..n)
            .find(|&b| table[a][b] == 0)
            .ok_or_else(|| Error::Document(format!("element {a} has no inverse")))?;
        antipode[(inv, a)] = Scalar::one();
    }
    HopfAlgebra::new_checked(mult, unit_vector(n, 0), coprod, vec![Scalar::one(); n], antipode)
}

/// Functions on a finite group, `δ_x δ_y = [x = y] δ_x`, with
/// `g ▷ δ_y = δ_{y g⁻¹}`; a module algebra over `k[G]`.
pub fn function_algebra(table: &[Vec<usize>]) -> Result<ModuleAlgebra> {
    let n = table.len();
    let mut mult = Tensor3::zeros([n, n, n]);
    let mut action = Tensor3::zeros([n, n, n]);
    for y in 0..n {
        mult[(y, y, y)] = Scalar::one();
        for g in 0..n {
            // x with x g = y
            let x = (0..n)
                .find(|&x| table[x][g] == y)
                .ok_or_else(|| Error::Document("group table is not a Latin square".into()))?;
            action[(g, y, x)] = Scalar::one();
        }
    }
    ModuleAlgebra::new(mult, vec![Scalar::one(); n], action)
}

/// `H` acting on itself by left multiplication.
pub fn left_regular(h: &HopfAlgebra) -> ModuleAlgebra {
    ModuleAlgebra::new(h.mult().clone(), h.unit().to_vec(), h.mult().clone()).expect("shapes agree")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn z2_passes_all_axioms() {
        let h = catalog::z2();
        let r = check_hopf_axioms(&h);
        assert!(r.passed(), "{r}");
        assert_eq!(r.checks.len(), 8);
    }

    #[test]
    fn broken_antipode_detected() {
        let h = catalog::z3_identity_antipode();
        let r = check_hopf_axioms(&h);
        assert!(!r.passed());
        let failing: Vec<&str> = r.failing().map(|c| c.name.as_str()).collect();
        assert_eq!(failing, vec!["antipode m(S⊗1)Δ = ηε", "antipode m(1⊗S)Δ = ηε"]);
        // g·g ≠ ε(g)1 for g and g²
        assert_eq!(r.checks[6].witnesses, vec![vec![1], vec![2]]);
    }

    #[test]
    fn trivial_hopf_algebra() {
        let h = catalog::trivial_hopf();
        assert!(check_hopf_axioms(&h).passed());
        assert!(antipode_properties(&h).passed());
        let dual = dual_algebra_of_coalgebra(&h);
        assert_eq!(dual.mult.data(), &[Scalar::one()]);
        assert!(dual.associative && dual.unital);
    }

    #[test]
    fn z3_antipode_is_inverse() {
        let h = catalog::z3();
        // S(g) = g²
        assert_eq!(h.apply_antipode(&h.basis(1)), h.basis(2));
        assert!(antipode_properties(&h).passed());
    }

    #[test]
    fn antipode_fixes_unit_everywhere() {
        for (_, h) in catalog::hopf_algebras() {
            assert_eq!(h.apply_antipode(h.unit()), h.unit());
        }
    }

    #[test]
    fn antipode_is_unique() {
        for (name, h) in catalog::hopf_algebras() {
            let (s, kernel) = antipode_solutions(&h);
            assert_eq!(kernel, 0, "{name}");
            assert_eq!(s.as_ref(), Some(h.antipode()), "{name}");
        }
    }

    #[test]
    fn dual_of_z2_is_pointwise() {
        let dual = dual_algebra_of_coalgebra(&catalog::z2());
        // φ^a φ^b = [a = b] φ^a
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    let expected = if a == b && b == c { Scalar::one() } else { Scalar::zero() };
                    assert_eq!(dual.mult[(a, b, c)], expected);
                }
            }
        }
        assert!(dual_algebra_of_coalgebra(&catalog::klein()).associative);
    }

    #[test]
    fn twist_examples() {
        let z2 = catalog::z2();
        assert!(is_twist(&z2, &TwistElement::trivial(&z2)).passed());
        let klein = catalog::klein();
        let f = catalog::klein_twist(&klein);
        assert!(is_twist(&klein, &f).passed());
        // F² = 1⊗1
        assert_eq!(f.f(), f.finv());

        // 1⊗1 + g⊗g on Z2 is a zero divisor, and (ε⊗1)F = 1 + g.
        let mut bad = z2.one_tensor(2);
        bad[3] = Scalar::one();
        assert!(matches!(TwistElement::new(&z2, bad.clone()), Err(Error::NotInvertible(_))));
        assert_eq!(normalization_sides(&z2, &bad).0, vec![Scalar::one(), Scalar::one()]);
        assert!(!twist_conditions(&z2, &bad).get("normalization").unwrap().passed);
    }

    #[test]
    fn normalization_failure_on_z2() {
        // 1⊗1 + ½ g⊗g is invertible and breaks normalization.
        let z2 = catalog::z2();
        let mut f = z2.one_tensor(2);
        f[3] = Scalar::frac(1, 2);
        let t = TwistElement::new(&z2, f).unwrap();
        let r = is_twist(&z2, &t);
        assert!(!r.get("normalization").unwrap().passed);
        assert!(matches!(deform_hopf(&z2, &t), Err(Error::NotATwist(_))));
    }

    #[test]
    fn trivial_twist_changes_nothing() {
        for (_, h) in catalog::hopf_algebras() {
            let t = TwistElement::trivial(&h);
            assert_eq!(deform_hopf(&h, &t).unwrap(), h);
            assert_eq!(twist_back(&h, &t).unwrap(), h);
        }
    }

    #[test]
    fn klein_twist_deforms_validly() {
        for h in [catalog::klein(), catalog::d4()] {
            let t = catalog::klein_twist(&h);
            assert!(is_twist(&h, &t).passed());
            assert!(check_inverse_cocycle(&h, &t).passed);
            let (u, uinv) = twist_u(&h, &t);
            assert_eq!(h.mul(&u, &uinv), h.unit());
            assert_eq!(h.mul(&uinv, &u), h.unit());
            let hf = deform_hopf(&h, &t).unwrap();
            let r = check_hopf_axioms(&hf);
            assert!(r.passed(), "{r}");
            assert_eq!(twist_back(&h, &t).unwrap(), h);
        }
    }

    #[test]
    fn deformation_on_klein_is_trivial_but_on_d4_is_not() {
        let k = catalog::klein();
        assert_eq!(deform_hopf(&k, &catalog::klein_twist(&k)).unwrap(), k);
        let d4 = catalog::d4();
        let hf = deform_hopf(&d4, &catalog::klein_twist(&d4)).unwrap();
        assert_ne!(hf.coprod(), d4.coprod());
        assert_eq!(hf.mult(), d4.mult());
    }

    #[test]
    fn trivial_twist_keeps_cocommutativity() {
        let h = catalog::d4();
        let hf = deform_hopf(&h, &TwistElement::trivial(&h)).unwrap();
        for a in 0..8 {
            let x = hf.coproduct(&hf.basis(a));
            assert_eq!(crate::linalg::braid_vec(&x, 8), x);
        }
    }

    #[test]
    fn twisted_function_algebra() {
        for (h, table) in [(catalog::klein(), catalog::klein_table()), (catalog::d4(), catalog::d4_table())] {
            let a = function_algebra(&table).unwrap();
            assert!(check_module_algebra(&h, &a).unwrap().passed());
            assert!(a.commutators().is_empty());

            let t = TwistElement::trivial(&h);
            assert_eq!(twist_module_algebra(&h, &t, &a).unwrap(), a);

            let f = catalog::klein_twist(&h);
            let twisted = twist_module_algebra(&h, &f, &a).unwrap();
            let hf = deform_hopf(&h, &f).unwrap();
            let r = check_module_algebra(&hf, &twisted).unwrap();
            assert!(r.passed(), "{r}");
            assert_eq!(twisted.unit(), a.unit());
            assert!(!twisted.commutators().is_empty());
        }
    }

    #[test]
    fn left_regular_action_is_not_a_module_algebra() {
        let h = catalog::z2();
        let r = check_module_algebra(&h, &left_regular(&h)).unwrap();
        assert!(!r.get("ξ▷(ab) = (ξ₁▷a)(ξ₂▷b)").unwrap().passed);
        let t = TwistElement::trivial(&h);
        assert!(matches!(twist_module_algebra(&h, &t, &left_regular(&h)), Err(Error::ModuleAxiomsFail(_))));
    }
}
