//! Small named examples used by tests, the acceptance suite and the CLI.

use crate::bialg::Bivector;
use crate::decomp::MatrixLieAlgebra;
use crate::hopf::{group_algebra, HopfAlgebra, TwistElement};
use crate::liealg::LieAlgebra;
use crate::linalg::{Matrix, Vector};
use crate::scalar::Scalar;

fn ints(v: &[i64]) -> Vector {
    v.iter().map(|&x| Scalar::from_int(x)).collect()
}

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

/// `[X, Y] = X`.
pub fn two_dim() -> LieAlgebra {
    LieAlgebra::from_brackets(names(&["X", "Y"]), 2, &[(0, 1, ints(&[1, 0]))]).expect("valid")
}

/// `[x, y] = z`, `z` central.
pub fn heisenberg() -> LieAlgebra {
    LieAlgebra::from_brackets(names(&["x", "y", "z"]), 3, &[(0, 1, ints(&[0, 0, 1]))]).expect("valid")
}

/// Basis `(h, e, f)` with `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
pub fn sl2() -> LieAlgebra {
    LieAlgebra::from_brackets(
        names(&["h", "e", "f"]),
        3,
        &[(0, 1, ints(&[0, 2, 0])), (0, 2, ints(&[0, 0, -2])), (1, 2, ints(&[1, 0, 0]))],
    )
    .expect("valid")
}

/// `[e1,e2] = e3`, `[e2,e3] = e1`, `[e3,e1] = e2`.
pub fn so3() -> LieAlgebra {
    LieAlgebra::from_brackets(
        names(&["e1", "e2", "e3"]),
        3,
        &[(0, 1, ints(&[0, 0, 1])), (1, 2, ints(&[1, 0, 0])), (2, 0, ints(&[0, 1, 0]))],
    )
    .expect("valid")
}

pub fn abelian3() -> LieAlgebra {
    LieAlgebra::abelian(3)
}

/// The 2D algebra plus a two-dimensional abelian summand.
pub fn two_dim_plus_abelian2() -> LieAlgebra {
    LieAlgebra::from_brackets(names(&["X", "Y", "u", "v"]), 4, &[(0, 1, ints(&[1, 0, 0, 0]))]).expect("valid")
}

/// The algebras the acceptance criteria quantify over.
pub fn abstract_algebras() -> Vec<(&'static str, LieAlgebra)> {
    vec![
        ("two_dim", two_dim()),
        ("heisenberg", heisenberg()),
        ("sl2", sl2()),
        ("so3", so3()),
        ("abelian3", abelian3()),
    ]
}

/// Nonzero triangular r-matrices, each with the algebra it lives on.
pub fn triangular_catalog() -> Vec<(String, LieAlgebra, Bivector)> {
    let s = Scalar::from_int;
    let i = Scalar::i();
    let mut out = Vec::new();
    for c in [1, -1, 3] {
        out.push((format!("two_dim {c}*X^Y"), two_dim(), Bivector::wedge(2, 0, 1, s(c))));
    }
    out.push(("two_dim 1/2*X^Y".into(), two_dim(), Bivector::wedge(2, 0, 1, Scalar::frac(1, 2))));
    out.push(("two_dim i*X^Y".into(), two_dim(), Bivector::wedge(2, 0, 1, i.clone())));
    out.push(("heisenberg x^z".into(), heisenberg(), Bivector::wedge(3, 0, 2, s(1))));
    out.push(("heisenberg y^z".into(), heisenberg(), Bivector::wedge(3, 1, 2, s(2))));
    out.push(("sl2 h^e".into(), sl2(), Bivector::wedge(3, 0, 1, s(1))));
    out.push(("sl2 h^f".into(), sl2(), Bivector::wedge(3, 0, 2, s(-4))));
    // In so3 ⊗ ℚ(i), E = e1 - i e2 and H = i e3 satisfy [E, H] = E.
    let e = vec![s(1), -&i, s(0)];
    let h = vec![s(0), s(0), i.clone()];
    out.push(("so3 (e1-i*e2)^(i*e3)".into(), so3(), Bivector::wedge_vectors(&e, &h)));
    out.push(("abelian3 e1^e2".into(), abelian3(), Bivector::wedge(3, 0, 1, s(1))));
    out.push((
        "abelian3 e1^e2+3*e2^e3".into(),
        abelian3(),
        &Bivector::wedge(3, 0, 1, s(1)) + &Bivector::wedge(3, 1, 2, s(3)),
    ));
    out.push((
        "two_dim+abelian2 X^Y+u^v".into(),
        two_dim_plus_abelian2(),
        &Bivector::wedge(4, 0, 1, s(1)) + &Bivector::wedge(4, 2, 3, s(1)),
    ));
    out.push((
        "two_dim+abelian2 X^u".into(),
        two_dim_plus_abelian2(),
        Bivector::wedge(4, 0, 2, s(1)),
    ));
    out
}

/// Matrix unit `E(i, j)` of size `m`.
fn unit(m: usize, i: usize, j: usize) -> Matrix {
    let mut e = Matrix::zeros(m, m);
    e[(i, j)] = Scalar::from_int(1);
    e
}

/// The three standard rotation generators, `[L1, L2] = L3` and cyclic.
pub fn so3_matrices() -> MatrixLieAlgebra {
    let basis = vec![
        &unit(3, 2, 1) - &unit(3, 1, 2),
        &unit(3, 0, 2) - &unit(3, 2, 0),
        &unit(3, 1, 0) - &unit(3, 0, 1),
    ];
    MatrixLieAlgebra::new(3, basis).expect("valid")
}

/// Real `sl(2)` with basis `h = diag(1,-1)`, `e = E12`, `f = E21`.
pub fn sl2_real() -> MatrixLieAlgebra {
    let basis = vec![&unit(2, 0, 0) - &unit(2, 1, 1), unit(2, 0, 1), unit(2, 1, 0)];
    MatrixLieAlgebra::new(2, basis).expect("valid")
}

/// Lorentz algebra on `k⁴` with the time coordinate first: rotations
/// `J1, J2, J3` in the spatial block, then boosts `K_i = E(0,i) + E(i,0)`.
pub fn so13() -> MatrixLieAlgebra {
    let basis = vec![
        &unit(4, 3, 2) - &unit(4, 2, 3),
        &unit(4, 1, 3) - &unit(4, 3, 1),
        &unit(4, 2, 1) - &unit(4, 1, 2),
        &unit(4, 0, 1) + &unit(4, 1, 0),
        &unit(4, 0, 2) + &unit(4, 2, 0),
        &unit(4, 0, 3) + &unit(4, 3, 0),
    ];
    MatrixLieAlgebra::new(4, basis).expect("valid")
}

pub fn cyclic_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
}

/// `Z/2 × Z/2` with `0 = 1`, `1 = a`, `2 = b`, `3 = ab`.
pub fn klein_table() -> Vec<Vec<usize>> {
    (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect()
}

/// Dihedral group of order 8; index `k + 4j` is `r^k s^j`, and
/// `s r s⁻¹ = r⁻¹`.
pub fn d4_table() -> Vec<Vec<usize>> {
    let idx = |k: i64, j: i64| (k.rem_euclid(4) + 4 * j.rem_euclid(2)) as usize;
    (0..8)
        .map(|x| {
            let (a, b) = ((x % 4) as i64, (x / 4) as i64);
            (0..8)
                .map(|y| {
                    let (c, d) = ((y % 4) as i64, (y / 4) as i64);
                    let sign = if b == 0 { 1 } else { -1 };
                    idx(a + sign * c, b + d)
                })
                .collect()
        })
        .collect()
}

pub fn z2() -> HopfAlgebra {
    group_algebra(&cyclic_table(2)).expect("valid")
}

pub fn z3() -> HopfAlgebra {
    group_algebra(&cyclic_table(3)).expect("valid")
}

pub fn klein() -> HopfAlgebra {
    group_algebra(&klein_table()).expect("valid")
}

pub fn d4() -> HopfAlgebra {
    group_algebra(&d4_table()).expect("valid")
}

/// The ground field as a Hopf algebra.
pub fn trivial_hopf() -> HopfAlgebra {
    group_algebra(&cyclic_table(1)).expect("valid")
}

/// `k[Z/3]` with the antipode replaced by the identity; fails the antipode
/// axiom.
pub fn z3_identity_antipode() -> HopfAlgebra {
    let h = z3();
    HopfAlgebra::new(
        h.mult().clone(),
        h.unit().to_vec(),
        h.coprod().clone(),
        h.counit().to_vec(),
        Matrix::identity(3),
    )
    .expect("shapes agree")
}

/// Hopf algebras satisfying every axiom.
pub fn hopf_algebras() -> Vec<(&'static str, HopfAlgebra)> {
    vec![
        ("trivial", trivial_hopf()),
        ("z2", z2()),
        ("z3", z3()),
        ("klein", klein()),
        ("d4", d4()),
    ]
}

/// `F = ½(1⊗1 + 1⊗a + b⊗1 − b⊗a)` for commuting involutions `a`, `b` given
/// by their basis indices.
pub fn klein_twist_on(h: &HopfAlgebra, a: usize, b: usize) -> TwistElement {
    let d = h.dim();
    let mut f: Vector = vec![Scalar::from_int(0); d * d];
    let half = Scalar::frac(1, 2);
    for (x, y, sign) in [(0, 0, 1), (0, a, 1), (b, 0, 1), (b, a, -1)] {
        f[x * d + y] += &half * &Scalar::from_int(sign);
    }
    TwistElement::new(h, f).expect("F is its own inverse")
}

/// The Klein-four twist on [`klein`] (`a = 1`, `b = 2`) or on [`d4`]
/// (`a = r²`, `b = s`).
pub fn klein_twist(h: &HopfAlgebra) -> TwistElement {
    match h.dim() {
        4 => klein_twist_on(h, 1, 2),
        8 => klein_twist_on(h, 2, 4),
        d => panic!("no Klein-four twist catalogued for dimension {d}"),
    }
}
