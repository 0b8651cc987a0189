//! Cartan and Iwasawa decompositions of Lie algebras of matrices, with the
//! Cartan involution fixed to `Θ(X) = −Xᵀ`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::liealg::LieAlgebra;
use crate::linalg::{is_zero_vector, linear_combination, Matrix, Subspace, Tensor3, Vector};
use crate::scalar::Scalar;

/// Span of square matrices closed under the commutator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixLieAlgebra {
    ambient: usize,
    basis: Vec<Matrix>,
}

impl MatrixLieAlgebra {
    /// Checks shapes, linear independence and commutator closure.
    pub fn new(ambient: usize, basis: Vec<Matrix>) -> Result<Self> {
        for b in &basis {
            if b.rows() != ambient || b.cols() != ambient {
                return Err(Error::DimensionMismatch {
                    context: "basis matrix",
                    expected: ambient,
                    found: if b.rows() != ambient { b.rows() } else { b.cols() },
                });
            }
        }
        let mut rows: Vec<Vector> = Vec::new();
        for (index, b) in basis.iter().enumerate() {
            rows.push(b.data().to_vec());
            if Matrix::from_rows(ambient * ambient, rows.clone()).rank() < rows.len() {
                return Err(Error::LinearlyDependent { index });
            }
        }
        let alg = Self { ambient, basis };
        matrix_to_abstract(&alg)?;
        Ok(alg)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    /// Coordinates of `x` in the basis, `None` outside the span.
    pub fn coordinates(&self, x: &Matrix) -> Option<Vector> {
        let cols: Vec<Vector> = self.basis.iter().map(|b| b.data().to_vec()).collect();
        let m = Matrix::from_columns(self.ambient * self.ambient, &cols);
        m.solve(x.data())
    }

    /// `Σ c_i B_i`.
    pub fn element(&self, coords: &[Scalar]) -> Matrix {
        let mut out = Matrix::zeros(self.ambient, self.ambient);
        for (c, b) in coords.iter().zip(&self.basis) {
            if !c.is_zero() {
                out = &out + &b.scale(c);
            }
        }
        out
    }

    /// Matrices for the stored basis of a subspace given in coordinates.
    pub fn matrices(&self, s: &Subspace) -> Vec<Matrix> {
        s.basis().iter().map(|v| self.element(v)).collect()
    }
}

/// Structure constants from `[B_i, B_j] = Σ_k C_ij^k B_k`.
pub fn matrix_to_abstract(m: &MatrixLieAlgebra) -> Result<LieAlgebra> {
    let d = m.dim();
    let mut c = Tensor3::zeros([d, d, d]);
    for i in 0..d {
        for j in i + 1..d {
            let coords = m
                .coordinates(&m.basis[i].commutator(&m.basis[j]))
                .ok_or(Error::NotClosed { left: i, right: j })?;
            for (k, x) in coords.into_iter().enumerate() {
                c[(j, i, k)] = -&x;
                c[(i, j, k)] = x;
            }
        }
    }
    let names = (0..d).map(|i| format!("B{}", i + 1)).collect();
    LieAlgebra::new(names, c)
}

/// `g = k ⊕ p`, the `±1` eigenspaces of `Θ`, in basis coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanDecomposition {
    /// Matrix of `Θ` on coordinates.
    pub theta: Matrix,
    pub k: Subspace,
    pub p: Subspace,
}

pub fn cartan_involution(m: &MatrixLieAlgebra) -> Result<Matrix> {
    let cols = m
        .basis
        .iter()
        .enumerate()
        .map(|(index, b)| {
            m.coordinates(&-&b.transpose())
                .ok_or(Error::InvolutionNotPreserved { index })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_columns(m.dim(), &cols))
}

pub fn cartan_decomposition(m: &MatrixLieAlgebra) -> Result<CartanDecomposition> {
    let theta = cartan_involution(m)?;
    let d = m.dim();
    let id = Matrix::identity(d);
    let k = Subspace::span(d, (&theta - &id).kernel_basis());
    let p = Subspace::span(d, (&theta + &id).kernel_basis());
    let alg = matrix_to_abstract(m)?;
    let checks = [(&k, &k, &k, "[k,k] ⊆ k"), (&k, &p, &p, "[k,p] ⊆ p"), (&p, &p, &k, "[p,p] ⊆ k")];
    for (a, b, target, what) in checks {
        if !brackets_within(&alg, a, b, target) {
            return Err(Error::DecompositionFailed(format!("{what} fails")));
        }
    }
    if k.dim() + p.dim() != d {
        return Err(Error::DecompositionFailed(format!(
            "dim k + dim p = {} + {} != {d}",
            k.dim(),
            p.dim()
        )));
    }
    Ok(CartanDecomposition { theta, k, p })
}

/// `[a, b] ⊆ target`.
pub fn brackets_within(alg: &LieAlgebra, a: &Subspace, b: &Subspace, target: &Subspace) -> bool {
    a.basis()
        .iter()
        .all(|x| b.basis().iter().all(|y| target.contains(&alg.bracket(x, y))))
}

/// Elements of `p` commuting with every element of `a`.
pub fn centralizer_in(alg: &LieAlgebra, a: &Subspace, p: &Subspace) -> Subspace {
    let n = alg.dim();
    if p.is_zero() {
        return Subspace::zero(n);
    }
    // Unknowns: coordinates c of y = Σ c_t p_t; equations [a_s, y] = 0.
    let mut rows = Vec::new();
    for x in a.basis() {
        let images: Vec<Vector> = p.basis().iter().map(|y| alg.bracket(x, y)).collect();
        for comp in 0..n {
            rows.push(images.iter().map(|v| v[comp].clone()).collect());
        }
    }
    if rows.is_empty() {
        return p.clone();
    }
    let kernel = Matrix::from_rows(p.dim(), rows).kernel_basis();
    Subspace::span(n, kernel.iter().map(|c| linear_combination(n, c, p.basis())).collect())
}

/// Greedy maximal abelian subspace of `p`: adjoin the first basis vector of
/// the centralizer not yet in `a` until the centralizer equals `a`.
/// The result depends on the basis order of `p`; all maximal abelian
/// subspaces are conjugate, so dimensions and root data do not.
pub fn maximal_abelian_in_p(alg: &LieAlgebra, p: &Subspace) -> Subspace {
    let mut a = Subspace::zero(alg.dim());
    loop {
        let cent = centralizer_in(alg, &a, p);
        match cent.basis().iter().find(|v| !a.contains(v)) {
            None => return a,
            Some(v) => a = a.sum(&Subspace::span(alg.dim(), vec![v.clone()])),
        }
    }
}

/// Coefficients `c_0..c_n` (constant term first, monic) of `det(t − A)`,
/// by the Faddeev–LeVerrier recursion.
pub fn characteristic_polynomial(a: &Matrix) -> Vec<Scalar> {
    let n = a.rows();
    let mut coeffs = vec![Scalar::zero(); n + 1];
    coeffs[n] = Scalar::one();
    let id = Matrix::identity(n);
    let mut m = Matrix::zeros(n, n);
    for k in 1..=n {
        m = &(a * &m) + &id.scale(&coeffs[n - k + 1]);
        let t = (a * &m).trace();
        coeffs[n - k] = -(t / Scalar::from_int(k as i64));
    }
    coeffs
}

fn rational_coeffs(poly: &[Scalar]) -> Option<Vec<BigInt>> {
    if poly.iter().any(|c| !c.is_real()) {
        return None;
    }
    let lcm = poly.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.re().denom()));
    Some(
        poly.iter()
            .map(|c| (c.re() * BigRational::from_integer(lcm.clone())).to_integer())
            .collect(),
    )
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs().to_u64().expect("coefficient fits in 64 bits");
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(BigInt::from(d));
            if d * d != n {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    out
}

fn eval_poly(poly: &[BigInt], x: &BigRational) -> BigRational {
    poly.iter()
        .rev()
        .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
}

/// Distinct rational roots of a polynomial with rational coefficients, with
/// multiplicities. `None` when a coefficient is not real.
pub fn rational_roots(poly: &[Scalar]) -> Option<Vec<(BigRational, usize)>> {
    let mut p = rational_coeffs(poly)?;
    let mut roots = Vec::new();
    let zero_mult = p.iter().take_while(|c| c.is_zero()).count();
    if zero_mult > 0 {
        roots.push((BigRational::zero(), zero_mult));
        p.drain(..zero_mult);
    }
    if p.len() <= 1 {
        return Some(roots);
    }
    let lead = p.last().expect("nonempty").clone();
    let mut candidates = Vec::new();
    for num in divisors(&p[0]) {
        for den in divisors(&lead) {
            let q = BigRational::new(num.clone(), den);
            candidates.push(-q.clone());
            candidates.push(q);
        }
    }
    candidates.sort();
    candidates.dedup();
    for x in candidates {
        let mut mult = 0;
        while p.len() > 1 && eval_poly(&p, &x).is_zero() {
            p = synthetic_division(&p, &x);
            mult += 1;
        }
        if mult > 0 {
            roots.push((x, mult));
        }
    }
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    Some(roots)
}

/// Divide by `(t − x)` and rescale to integer coefficients.
fn synthetic_division(p: &[BigInt], x: &BigRational) -> Vec<BigInt> {
    let n = p.len() - 1;
    let mut q = vec![BigRational::zero(); n];
    let mut carry = BigRational::zero();
    for k in (1..=n).rev() {
        carry = carry * x + BigRational::from_integer(p[k].clone());
        q[k - 1] = carry.clone();
    }
    let lcm = q.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let out: Vec<BigInt> = q.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let g = out.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() {
        out
    } else {
        out.into_iter().map(|c| c / &g).collect()
    }
}

/// A restricted root: values on the stored basis of `a`, and the dimension of
/// its root space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictedRoot {
    pub functional: Vec<Scalar>,
    pub multiplicity: usize,
    pub positive: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IwasawaResult {
    pub k: Subspace,
    pub p: Subspace,
    pub a: Subspace,
    pub n: Subspace,
    pub k_basis: Vec<Matrix>,
    pub p_basis: Vec<Matrix>,
    pub a_basis: Vec<Matrix>,
    pub n_basis: Vec<Matrix>,
    pub restricted_roots: Vec<RestrictedRoot>,
}

impl IwasawaResult {
    pub fn dims(&self) -> (usize, usize, usize) {
        (self.k.dim(), self.a.dim(), self.n.dim())
    }
}

/// Lexicographic positivity: first nonzero value is positive.
fn is_positive(functional: &[Scalar]) -> bool {
    functional.iter().find(|x| !x.is_zero()).and_then(|x| x.real_sign()) == Some(1)
}

/// Joint eigenspaces of commuting diagonalizable maps with rational
/// eigenvalues, each tagged with its tuple of eigenvalues.
pub fn joint_eigenspaces(n: usize, maps: &[Matrix]) -> Result<Vec<(Vec<Scalar>, Subspace)>> {
    let mut parts = vec![(Vec::new(), Subspace::whole(n))];
    for (idx, a) in maps.iter().enumerate() {
        let poly = characteristic_polynomial(a);
        let roots = rational_roots(&poly)
            .ok_or_else(|| Error::IrrationalRoots(format!("characteristic polynomial of ad(a{}) is not real", idx + 1)))?;
        let total: usize = roots.iter().map(|(_, m)| m).sum();
        if total != n {
            return Err(Error::IrrationalRoots(format!(
                "only {total} of {n} eigenvalues of ad(a{}) are rational",
                idx + 1
            )));
        }
        let eigenspaces: Vec<(Scalar, Subspace)> = roots
            .into_iter()
            .map(|(x, _)| {
                let lambda = Scalar::from(x);
                let shifted = a - &Matrix::identity(n).scale(&lambda);
                (lambda, Subspace::span(n, shifted.kernel_basis()))
            })
            .collect();
        let covered: usize = eigenspaces.iter().map(|(_, s)| s.dim()).sum();
        if covered != n {
            return Err(Error::DecompositionFailed(format!(
                "ad(a{}) is not diagonalizable (eigenspaces cover {covered} of {n})",
                idx + 1
            )));
        }
        let mut next = Vec::new();
        for (tag, space) in &parts {
            for (lambda, e) in &eigenspaces {
                let inter = space.intersection(e);
                if !inter.is_zero() {
                    let mut t = tag.clone();
                    t.push(lambda.clone());
                    next.push((t, inter));
                }
            }
        }
        parts = next;
    }
    Ok(parts)
}

/// Whether the lower central series of `s` reaches zero.
pub fn is_nilpotent(alg: &LieAlgebra, s: &Subspace) -> bool {
    let mut current = s.clone();
    for _ in 0..=alg.dim() {
        if current.is_zero() {
            return true;
        }
        let mut brackets = Vec::new();
        for x in s.basis() {
            for y in current.basis() {
                let b = alg.bracket(x, y);
                if !is_zero_vector(&b) {
                    brackets.push(b);
                }
            }
        }
        let next = Subspace::span(alg.dim(), brackets);
        if next == current {
            return false;
        }
        current = next;
    }
    current.is_zero()
}

pub fn iwasawa(m: &MatrixLieAlgebra) -> Result<IwasawaResult> {
    let alg = matrix_to_abstract(m)?;
    let cartan = cartan_decomposition(m)?;
    let d = alg.dim();
    let a = maximal_abelian_in_p(&alg, &cartan.p);
    let ads = a
        .basis()
        .iter()
        .map(|h| alg.adjoint(h))
        .collect::<Result<Vec<_>>>()?;
    let spaces = if a.is_zero() {
        vec![(Vec::new(), Subspace::whole(d))]
    } else {
        joint_eigenspaces(d, &ads)?
    };
    let mut n = Subspace::zero(d);
    let mut roots = Vec::new();
    for (functional, space) in spaces {
        if functional.iter().all(|x| x.is_zero()) {
            continue;
        }
        let positive = is_positive(&functional);
        if positive {
            n = n.sum(&space);
        }
        roots.push(RestrictedRoot {
            functional,
            multiplicity: space.dim(),
            positive,
        });
    }
    let fail = |what: &str| {
        Error::DecompositionFailed(format!(
            "{what} (dims k={}, a={}, n={}, g={d})",
            cartan.k.dim(),
            a.dim(),
            n.dim()
        ))
    };
    if cartan.k.dim() + a.dim() + n.dim() != d || cartan.k.sum(&a).sum(&n).dim() != d {
        return Err(fail("k + a + n is not a direct sum equal to g"));
    }
    if !alg.is_zero_bracket_on(&a) || !cartan.p.contains_subspace(&a) {
        return Err(fail("a is not an abelian subspace of p"));
    }
    if !brackets_within(&alg, &a, &n, &n) {
        return Err(fail("[a, n] is not contained in n"));
    }
    if !is_nilpotent(&alg, &n) {
        return Err(fail("n is not nilpotent"));
    }
    if !alg.is_subalgebra(&a.sum(&n)) {
        return Err(fail("a + n is not a subalgebra"));
    }
    Ok(IwasawaResult {
        k_basis: m.matrices(&cartan.k),
        p_basis: m.matrices(&cartan.p),
        a_basis: m.matrices(&a),
        n_basis: m.matrices(&n),
        k: cartan.k,
        p: cartan.p,
        a,
        n,
        restricted_roots: roots,
    })
}

/// `B_Θ(x, y) = −κ(x, Θ y)` and its leading principal minors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanForm {
    pub matrix: Matrix,
    pub minors: Vec<Scalar>,
    pub positive_definite: bool,
}

pub fn cartan_form(m: &MatrixLieAlgebra) -> Result<CartanForm> {
    let alg = matrix_to_abstract(m)?;
    let theta = cartan_involution(m)?;
    let matrix = -&(&alg.killing_form().matrix * &theta);
    let minors = matrix.leading_principal_minors();
    let positive_definite = matrix.is_symmetric() && minors.iter().all(|x| x.real_sign() == Some(1));
    Ok(CartanForm {
        matrix,
        minors,
        positive_definite,
    })
}
