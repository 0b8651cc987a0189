//! Dense exact linear algebra over [`Scalar`].
//!
//! Matrices are row-major. Elimination is fraction-free (Bareiss) on the
//! forward pass; kernels and solutions are read off the reduced row echelon
//! form obtained by normalising the Bareiss echelon.
//!
//! Tensors in `V⊗V` are stored as `n×n` matrices `t[a][b]` (coefficient of
//! `e_a⊗e_b`) or, when they are fed to a linear map, as flat vectors with
//! index `a*n + b`. Triple tensors use `a*n² + b*n + c`.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;

pub type Vector = Vec<Scalar>;

pub fn zero_vector(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

pub fn unit_vector(n: usize, k: usize) -> Vector {
    let mut v = zero_vector(n);
    v[k] = Scalar::one();
    v
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vector {
    assert_eq!(a.len(), b.len(), "vector length mismatch");
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    assert_eq!(a.len(), b.len(), "vector length mismatch");
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(a: &[Scalar], c: &Scalar) -> Vector {
    a.iter().map(|x| x * c).collect()
}

/// `Σ c_k v_k`; all vectors must have length `n`.
pub fn linear_combination(n: usize, coeffs: &[Scalar], vectors: &[Vector]) -> Vector {
    let mut out = zero_vector(n);
    for (c, v) in coeffs.iter().zip(vectors) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(v) {
            *o += c * x;
        }
    }
    out
}

/// Flip the two tensor legs of a flattened element of `V⊗V`.
pub fn braid_vec(v: &[Scalar], n: usize) -> Vector {
    assert_eq!(v.len(), n * n, "braid expects a square tensor");
    let mut out = zero_vector(n * n);
    for a in 0..n {
        for b in 0..n {
            out[b * n + a] = v[a * n + b].clone();
        }
    }
    out
}

/// `σ(x⊗y) = y⊗x` on a tensor stored as a matrix of coefficients.
pub fn braid(t: &Matrix) -> Matrix {
    assert_eq!(t.rows, t.cols, "braid expects a square tensor");
    t.transpose()
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Scalar>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length");
        Self { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::new(rows, cols, zero_vector(rows * cols))
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Scalar::one() } else { Scalar::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self::new(rows, cols, data)
    }

    /// Build from row vectors. An empty list gives a `0×cols` matrix.
    pub fn from_rows(cols: usize, rows: Vec<Vector>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r);
        }
        Self::new(n, cols, data)
    }

    pub fn from_columns(rows: usize, columns: &[Vector]) -> Self {
        Self::from_fn(rows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[Scalar] {
        &self.data
    }

    pub fn into_data(self) -> Vec<Scalar> {
        self.data
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix::new(self.rows, self.cols, self.data.iter().map(|x| x * c).collect())
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.data)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    /// First `(i, j)` with `m_ij != -m_ji`, if any.
    pub fn antisymmetry_violation(&self) -> Option<(usize, usize)> {
        for i in 0..self.rows {
            for j in i..self.cols {
                if self[(i, j)] != -&self[(j, i)] {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.is_square() && self.antisymmetry_violation().is_none()
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).map(|i| &self[(i, i)]).sum()
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.cols, "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect()
    }

    /// `AB - BA`.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        &(self * other) - &(other * self)
    }

    /// Kronecker product `A⊗B` acting on `a*dim(B) + b`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        Matrix::from_fn(self.rows * other.rows, self.cols * other.cols, |i, j| {
            let a = &self[(i / other.rows, j / other.cols)];
            if a.is_zero() {
                return Scalar::zero();
            }
            a * &other[(i % other.rows, j % other.cols)]
        })
    }

    /// Fraction-free forward elimination.
    pub fn echelon(&self) -> Echelon {
        bareiss(self)
    }

    pub fn rank(&self) -> usize {
        bareiss(self).pivots.len()
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let ech = bareiss(self);
        let mut m = ech.form;
        let pivots = ech.pivots;
        for (r, &c) in pivots.iter().enumerate() {
            let inv = m[(r, c)].inv().expect("pivot is nonzero");
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..r {
                let f = m[(i, c)].clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = &m[(i, j)] - &(&f * &m[(r, j)]);
                    m[(i, j)] = v;
                }
            }
        }
        (m, pivots)
    }

    /// Exact basis of the null space, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vector> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = zero_vector(self.cols);
                v[f] = Scalar::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -&r[(row, f)];
                }
                v
            })
            .collect()
    }

    /// A solution of `M x = b`, or `None` when `b` is outside the column space.
    /// Free variables are set to zero.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vector> {
        assert_eq!(b.len(), self.rows, "solve: right-hand side length");
        let aug = Matrix::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                b[i].clone()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = zero_vector(self.cols);
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r[(row, self.cols)].clone();
        }
        Some(x)
    }

    pub fn determinant(&self) -> Scalar {
        assert!(self.is_square(), "determinant of non-square matrix");
        if self.rows == 0 {
            return Scalar::one();
        }
        let ech = bareiss(self);
        if ech.pivots.len() < self.rows {
            return Scalar::zero();
        }
        let d = ech.form[(self.rows - 1, self.cols - 1)].clone();
        if ech.swaps % 2 == 1 {
            -d
        } else {
            d
        }
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = Matrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| r[(i, n + j)].clone()))
    }

    /// Determinants of the upper-left `k×k` blocks, `k = 1..=n`.
    pub fn leading_principal_minors(&self) -> Vec<Scalar> {
        assert!(self.is_square(), "minors of non-square matrix");
        (1..=self.rows)
            .map(|k| Matrix::from_fn(k, k, |i, j| self[(i, j)].clone()).determinant())
            .collect()
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sum shape mismatch");
        Matrix::new(self.rows, self.cols, vec_add(&self.data, &rhs.data))
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix difference shape mismatch");
        Matrix::new(self.rows, self.cols, vec_sub(&self.data, &rhs.data))
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix::new(self.rows, self.cols, self.data.iter().map(|x| -x).collect())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{:?}", self.row(i))?;
        }
        f.write_str("]")
    }
}

/// Output of the fraction-free forward pass.
#[derive(Debug, Clone)]
pub struct Echelon {
    pub form: Matrix,
    pub pivots: Vec<usize>,
    pub swaps: usize,
}

fn bareiss(m: &Matrix) -> Echelon {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut prev = Scalar::one();
    let mut pivots = Vec::new();
    let mut swaps = 0;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                a.data.swap(p * cols + j, r * cols + j);
            }
            swaps += 1;
        }
        let pivot = a[(r, c)].clone();
        for i in r + 1..rows {
            let lead = a[(i, c)].clone();
            for j in c + 1..cols {
                let v = &(&(&pivot * &a[(i, j)]) - &(&lead * &a[(r, j)])) / &prev;
                a[(i, j)] = v;
            }
            a[(i, c)] = Scalar::zero();
        }
        // Rows above the active block keep their scale; rows below were
        // multiplied through, so later pivots divide by this one.
        prev = pivot;
        pivots.push(c);
        r += 1;
    }
    Echelon { form: a, pivots, swaps }
}

/// Dense `a×b×c` array, `t[(i, j, k)]` at `i*b*c + j*c + k`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Tensor3 {
    dims: [usize; 3],
    data: Vec<Scalar>,
}

impl Tensor3 {
    pub fn zeros(dims: [usize; 3]) -> Self {
        Self {
            dims,
            data: zero_vector(dims[0] * dims[1] * dims[2]),
        }
    }

    pub fn from_flat(dims: [usize; 3], data: Vec<Scalar>) -> Self {
        assert_eq!(data.len(), dims[0] * dims[1] * dims[2], "tensor data length");
        Self { dims, data }
    }

    pub fn from_fn(dims: [usize; 3], mut f: impl FnMut(usize, usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(dims[0] * dims[1] * dims[2]);
        for i in 0..dims[0] {
            for j in 0..dims[1] {
                for k in 0..dims[2] {
                    data.push(f(i, j, k));
                }
            }
        }
        Self { dims, data }
    }

    pub fn dims(&self) -> [usize; 3] {
        self.dims
    }

    pub fn data(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.data)
    }

    /// Indices of nonzero entries.
    pub fn support(&self) -> Vec<(usize, usize, usize)> {
        let [_, b, c] = self.dims;
        self.data
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(idx, _)| (idx / (b * c), (idx / c) % b, idx % c))
            .collect()
    }

    /// The slice `t[(i, ·, ·)]` as a matrix.
    pub fn slice(&self, i: usize) -> Matrix {
        let [_, b, c] = self.dims;
        Matrix::new(b, c, self.data[i * b * c..(i + 1) * b * c].to_vec())
    }
}

impl Index<(usize, usize, usize)> for Tensor3 {
    type Output = Scalar;
    fn index(&self, (i, j, k): (usize, usize, usize)) -> &Scalar {
        &self.data[(i * self.dims[1] + j) * self.dims[2] + k]
    }
}

impl IndexMut<(usize, usize, usize)> for Tensor3 {
    fn index_mut(&mut self, (i, j, k): (usize, usize, usize)) -> &mut Scalar {
        &mut self.data[(i * self.dims[1] + j) * self.dims[2] + k]
    }
}

impl fmt::Debug for Tensor3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tensor3{:?}{:?}", self.dims, self.support())
    }
}

/// A linear subspace of `k^n`, stored as the nonzero rows of a reduced row
/// echelon form. Two subspaces are equal iff their stored bases are equal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn whole(ambient: usize) -> Self {
        Self::span(ambient, (0..ambient).map(|k| unit_vector(ambient, k)).collect())
    }

    pub fn span(ambient: usize, vectors: Vec<Vector>) -> Self {
        if vectors.is_empty() {
            return Self::zero(ambient);
        }
        let (r, pivots) = Matrix::from_rows(ambient, vectors).rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Self {
            ambient,
            basis,
            pivots,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Coordinates of `v` in the stored basis, `None` if `v` is not in the span.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        assert_eq!(v.len(), self.ambient, "coordinates: ambient mismatch");
        let coords: Vector = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let back = linear_combination(self.ambient, &coords, &self.basis);
        (back.as_slice() == v).then_some(coords)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Subspace::span(self.ambient, all)
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        let (du, dw) = (self.dim(), other.dim());
        if du == 0 || dw == 0 {
            return Subspace::zero(self.ambient);
        }
        // Σ a_u u - Σ b_w w = 0
        let m = Matrix::from_fn(self.ambient, du + dw, |i, j| {
            if j < du {
                self.basis[j][i].clone()
            } else {
                -&other.basis[j - du][i]
            }
        });
        let vectors = m
            .kernel_basis()
            .into_iter()
            .map(|c| linear_combination(self.ambient, &c[..du], &self.basis))
            .collect();
        Subspace::span(self.ambient, vectors)
    }

    /// Basis vectors as the rows of a `dim × ambient` matrix.
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_rows(self.ambient, self.basis.clone())
    }
}
