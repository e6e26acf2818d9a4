//! Dense exact linear algebra: matrices, canonical subspaces, quotients and
//! the bilinear tensors that carry structure constants.
//!
//! Matrices act on column vectors, so an `r × c` matrix is a map `k^c → k^r`
//! whose `j`-th column is the image of the `j`-th basis vector.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

/// A coordinate vector.
pub type Vector = Vec<Scalar>;

pub fn zero_vector(field: Field, n: usize) -> Vector {
    vec![field.zero(); n]
}

pub fn basis_vector(field: Field, n: usize, i: usize) -> Vector {
    let mut v = zero_vector(field, n);
    v[i] = field.one();
    v
}

pub fn is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// `acc += c · v`
pub fn add_scaled(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    assert_eq!(acc.len(), v.len(), "add_scaled: length mismatch");
    if c.is_zero() {
        return;
    }
    let one = c.is_one();
    for (a, x) in acc.iter_mut().zip(v) {
        if x.is_zero() {
            continue;
        }
        if one {
            *a += x;
        } else {
            *a += &(c * x);
        }
    }
}

pub fn scaled(c: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

pub fn add(a: &[Scalar], b: &[Scalar]) -> Vector {
    assert_eq!(a.len(), b.len(), "add: length mismatch");
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    assert_eq!(a.len(), b.len(), "sub: length mismatch");
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Formats a vector as `[a, b, c]` with canonical scalars.
pub fn fmt_vector(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a `rows × columns.len()` matrix from its columns.
    pub fn from_columns(field: Field, rows: usize, columns: &[Vector]) -> Matrix {
        let mut m = Matrix::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "from_columns: column {j} has wrong length");
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn from_rows(field: Field, cols: usize, rows: &[Vector]) -> Matrix {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "from_rows: row {i} has wrong length");
            data.extend(row.iter().cloned());
        }
        Matrix { field, rows: rows.len(), cols, data }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: Scalar) {
        self.data[r * self.cols + c] = x;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        is_zero(&self.data)
    }

    /// `M v`.
    pub fn apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.cols, "apply: {}×{} matrix on vector of length {}", self.rows, self.cols, v.len());
        let mut out = zero_vector(self.field, self.rows);
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, o) in out.iter_mut().enumerate() {
                let m = self.get(r, c);
                if !m.is_zero() {
                    *o += &(m * x);
                }
            }
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "mul: {}×{} times {}×{}", self.rows, self.cols, other.rows, other.cols);
        let columns: Vec<Vector> = (0..other.cols).map(|c| self.apply(&other.column(c))).collect();
        Matrix::from_columns(self.field, self.rows, &columns)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "sub: shape mismatch");
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data: sub(&self.data, &other.data) }
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(field: Field, cols: usize, blocks: &[Matrix]) -> Result<Matrix> {
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            if b.cols != cols {
                return Err(Error::Dimension(format!("vstack: block has {} columns, expected {cols}", b.cols)));
            }
            data.extend(b.data.iter().cloned());
            rows += b.rows;
        }
        Ok(Matrix { field, rows, cols, data })
    }

    /// Reduced row-echelon form and the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("pivot is nonzero");
            for j in c..m.cols {
                let x = m.get(r, j) * &inv;
                m.set(r, j, x);
            }
            let pivot_row: Vector = m.row(r).to_vec();
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    if pivot_row[j].is_zero() {
                        continue;
                    }
                    let x = m.get(i, j) - &(&factor * &pivot_row[j]);
                    m.set(i, j, x);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, self.field.one());
        }
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, red.get(i, n + j).clone());
            }
        }
        Some(inv)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            writeln!(f, "{}", fmt_vector(self.row(r)))?;
        }
        Ok(())
    }
}

/// A linear subspace of `k^n` in canonical form: the basis rows are the
/// nonzero rows of the reduced row-echelon form of any spanning set, so two
/// subspaces are equal iff their representations are identical.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn span<'a, I>(field: Field, ambient: usize, vectors: I) -> Subspace
    where
        I: IntoIterator<Item = &'a Vector>,
    {
        let rows: Vec<Vector> = vectors.into_iter().filter(|v| !is_zero(v)).cloned().collect();
        Subspace::from_rows(field, ambient, rows)
    }

    fn from_rows(field: Field, ambient: usize, rows: Vec<Vector>) -> Subspace {
        let m = Matrix::from_rows(field, ambient, &rows);
        let (red, pivots) = m.rref();
        let kept: Vec<Vector> = (0..pivots.len()).map(|i| red.row(i).to_vec()).collect();
        Subspace { field, ambient, basis: Matrix::from_rows(field, ambient, &kept), pivots }
    }

    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace { field, ambient, basis: Matrix::zeros(field, 0, ambient), pivots: Vec::new() }
    }

    pub fn full(field: Field, ambient: usize) -> Subspace {
        Subspace { field, ambient, basis: Matrix::identity(field, ambient), pivots: (0..ambient).collect() }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Basis matrix, one reduced-echelon row per basis vector.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        self.basis.row(i).to_vec()
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        (0..self.dim()).map(|i| self.basis_vector(i)).collect()
    }

    /// The `ambient × dim` matrix whose columns are the basis vectors.
    pub fn inclusion(&self) -> Matrix {
        self.basis.transpose()
    }

    /// Coordinates with respect to the basis, or `None` if `v` is not in the
    /// subspace. In echelon form the coordinates are the pivot entries.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        assert_eq!(v.len(), self.ambient, "coordinates: vector length {} in ambient {}", v.len(), self.ambient);
        let coords: Vector = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rebuilt = zero_vector(self.field, self.ambient);
        for (i, c) in coords.iter().enumerate() {
            add_scaled(&mut rebuilt, c, self.basis.row(i));
        }
        if rebuilt.as_slice() == v {
            Some(coords)
        } else {
            None
        }
    }

    /// Vector with the given coordinates.
    pub fn element(&self, coords: &[Scalar]) -> Vector {
        assert_eq!(coords.len(), self.dim(), "element: wrong coordinate count");
        let mut v = zero_vector(self.field, self.ambient);
        for (i, c) in coords.iter().enumerate() {
            add_scaled(&mut v, c, self.basis.row(i));
        }
        v
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && (0..self.dim()).all(|i| other.contains(self.basis.row(i)))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "sum: ambient mismatch");
        let mut rows = self.basis_vectors();
        rows.extend(other.basis_vectors());
        Subspace::from_rows(self.field, self.ambient, rows)
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "intersection: ambient mismatch");
        let (p, q) = (self.dim(), other.dim());
        if p == 0 || q == 0 {
            return Subspace::zero(self.field, self.ambient);
        }
        // x = Σ a_i v_i = Σ b_j w_j  ⇔  (a, b) in the kernel of [V | -W].
        let mut cols = self.basis_vectors();
        cols.extend(other.basis_vectors().into_iter().map(|w| w.iter().map(|x| -x).collect()));
        let m = Matrix::from_columns(self.field, self.ambient, &cols);
        let ker = kernel(&m);
        let vecs: Vec<Vector> = ker
            .basis_vectors()
            .into_iter()
            .map(|ab| {
                let mut x = zero_vector(self.field, self.ambient);
                for (i, a) in ab[..p].iter().enumerate() {
                    add_scaled(&mut x, a, self.basis.row(i));
                }
                x
            })
            .collect();
        Subspace::span(self.field, self.ambient, &vecs)
    }

    /// Standard basis vectors at the non-pivot columns; together with the
    /// basis they span the ambient space.
    pub fn complement(&self) -> Vec<Vector> {
        (0..self.ambient)
            .filter(|j| !self.pivots.contains(j))
            .map(|j| basis_vector(self.field, self.ambient, j))
            .collect()
    }

    /// Image of the subspace under a linear map.
    pub fn map(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient, "map: matrix does not act on the ambient space");
        let imgs: Vec<Vector> = self.basis_vectors().iter().map(|v| m.apply(v)).collect();
        Subspace::span(self.field, m.rows(), &imgs)
    }
}

/// Result of [`solve`]: one particular solution when the system is
/// consistent, and the kernel of the matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub particular: Option<Vector>,
    pub kernel: Subspace,
}

pub fn solve(m: &Matrix, b: &[Scalar]) -> Result<Solution> {
    if m.rows() != b.len() {
        return Err(Error::Dimension(format!("solve: matrix has {} rows, right-hand side has {} entries", m.rows(), b.len())));
    }
    let field = m.field();
    let n = m.cols();
    let mut aug = Matrix::zeros(field, m.rows(), n + 1);
    for r in 0..m.rows() {
        for c in 0..n {
            aug.set(r, c, m.get(r, c).clone());
        }
        aug.set(r, n, b[r].clone());
    }
    let (red, pivots) = aug.rref();
    let kernel = kernel_from_rref(field, n, &red, pivots.iter().copied().filter(|&p| p < n).collect());
    if pivots.last() == Some(&n) {
        return Ok(Solution { particular: None, kernel });
    }
    let mut x = zero_vector(field, n);
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = red.get(i, n).clone();
    }
    Ok(Solution { particular: Some(x), kernel })
}

fn kernel_from_rref(field: Field, n: usize, red: &Matrix, pivots: Vec<usize>) -> Subspace {
    let vecs: Vec<Vector> = (0..n)
        .filter(|f| !pivots.contains(f))
        .map(|f| {
            let mut x = zero_vector(field, n);
            x[f] = field.one();
            for (i, &p) in pivots.iter().enumerate() {
                x[p] = -red.get(i, f);
            }
            x
        })
        .collect();
    Subspace::span(field, n, &vecs)
}

pub fn kernel(m: &Matrix) -> Subspace {
    let (red, pivots) = m.rref();
    kernel_from_rref(m.field(), m.cols(), &red, pivots)
}

pub fn image(m: &Matrix) -> Subspace {
    Subspace::span(m.field(), m.rows(), &m.columns())
}

/// Image (in the codomain) and kernel (in the domain) of a matrix.
pub fn image_kernel(m: &Matrix) -> (Subspace, Subspace) {
    (image(m), kernel(m))
}

/// A quotient `V / W` with an explicit projection and section.
///
/// The projection is defined on the whole ambient space; restricted to `V`
/// it is surjective with kernel `W`. The section sends quotient coordinates
/// to representatives in `V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientSpace {
    pub space: Subspace,
    pub sub: Subspace,
    pub projection: Matrix,
    pub section: Matrix,
}

impl QuotientSpace {
    pub fn dim(&self) -> usize {
        self.section.cols()
    }

    pub fn project(&self, v: &[Scalar]) -> Vector {
        self.projection.apply(v)
    }

    pub fn lift(&self, coords: &[Scalar]) -> Vector {
        self.section.apply(coords)
    }
}

pub fn quotient(space: &Subspace, sub: &Subspace) -> Result<QuotientSpace> {
    if !sub.is_subspace_of(space) {
        return Err(Error::NotContained("quotient: W is not a subspace of V".into()));
    }
    let field = space.field();
    let n = space.ambient();
    let mut current = sub.clone();
    let mut reps = Vec::new();
    for v in space.basis_vectors() {
        if !current.contains(&v) {
            current = current.sum(&Subspace::span(field, n, [&v]));
            reps.push(v);
        }
    }
    let q = reps.len();
    let mut cols = sub.basis_vectors();
    cols.extend(reps.iter().cloned());
    cols.extend(space.complement());
    let change = Matrix::from_columns(field, n, &cols);
    let inv = change.inverse().ok_or_else(|| Error::Invariant("quotient: basis completion is singular".into()))?;
    let offset = sub.dim();
    let mut projection = Matrix::zeros(field, q, n);
    for i in 0..q {
        for j in 0..n {
            projection.set(i, j, inv.get(offset + i, j).clone());
        }
    }
    let section = Matrix::from_columns(field, n, &reps);
    Ok(QuotientSpace { space: space.clone(), sub: sub.clone(), projection, section })
}

/// A bilinear map `k^rows × k^cols → k^out` given on basis pairs:
/// `get(i, j)` is the image of `(e_i, e_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor3 {
    field: Field,
    rows: usize,
    cols: usize,
    out: usize,
    data: Vec<Vector>,
}

impl Tensor3 {
    pub fn zeros(field: Field, rows: usize, cols: usize, out: usize) -> Tensor3 {
        Tensor3 { field, rows, cols, out, data: vec![zero_vector(field, out); rows * cols] }
    }

    pub fn from_fn<F>(field: Field, rows: usize, cols: usize, out: usize, mut f: F) -> Tensor3
    where
        F: FnMut(usize, usize) -> Vector,
    {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let v = f(i, j);
                assert_eq!(v.len(), out, "Tensor3::from_fn: entry ({i}, {j}) has length {}", v.len());
                data.push(v);
            }
        }
        Tensor3 { field, rows, cols, out, data }
    }

    /// Checks shapes of nested data, as read from a file.
    pub fn from_nested(field: Field, rows: usize, cols: usize, out: usize, nested: Vec<Vec<Vector>>) -> Result<Tensor3> {
        if nested.len() != rows {
            return Err(Error::Dimension(format!("expected {rows} rows, found {}", nested.len())));
        }
        let mut data = Vec::with_capacity(rows * cols);
        for (i, row) in nested.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Dimension(format!("row {i}: expected {cols} entries, found {}", row.len())));
            }
            for (j, v) in row.into_iter().enumerate() {
                if v.len() != out {
                    return Err(Error::Dimension(format!("entry [{i}][{j}]: expected {out} coefficients, found {}", v.len())));
                }
                data.push(v);
            }
        }
        Ok(Tensor3 { field, rows, cols, out, data })
    }

    pub fn to_nested(&self) -> Vec<Vec<Vector>> {
        (0..self.rows).map(|i| (0..self.cols).map(|j| self.get(i, j).clone()).collect()).collect()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn shape(&self) -> (usize, usize, usize) {
        (self.rows, self.cols, self.out)
    }

    pub fn get(&self, i: usize, j: usize) -> &Vector {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Vector) {
        assert_eq!(v.len(), self.out);
        self.data[i * self.cols + j] = v;
    }

    /// `Σ x_i y_j T(e_i, e_j)`.
    pub fn apply(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        assert_eq!(x.len(), self.rows, "Tensor3::apply: left argument has wrong length");
        assert_eq!(y.len(), self.cols, "Tensor3::apply: right argument has wrong length");
        let mut out = zero_vector(self.field, self.out);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                add_scaled(&mut out, &(xi * yj), self.get(i, j));
            }
        }
        out
    }

    /// `y ↦ T(x, y)` as a matrix.
    pub fn left_matrix(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.cols).map(|j| self.apply(x, &basis_vector(self.field, self.cols, j))).collect();
        Matrix::from_columns(self.field, self.out, &cols)
    }

    /// `x ↦ T(x, y)` as a matrix.
    pub fn right_matrix(&self, y: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.rows).map(|i| self.apply(&basis_vector(self.field, self.rows, i), y)).collect();
        Matrix::from_columns(self.field, self.out, &cols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rational
    }

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| q().int(x)).collect()
    }

    fn mat(rows: &[&[i64]]) -> Matrix {
        let cols = rows[0].len();
        Matrix::from_rows(q(), cols, &rows.iter().map(|r| v(r)).collect::<Vec<_>>())
    }

    #[test]
    fn solve_identity() {
        let s = solve(&Matrix::identity(q(), 2), &v(&[1, 2])).unwrap();
        assert_eq!(s.particular, Some(v(&[1, 2])));
        assert_eq!(s.kernel.dim(), 0);
    }

    #[test]
    fn solve_zero_map() {
        let s = solve(&Matrix::zeros(q(), 2, 2), &v(&[0, 0])).unwrap();
        assert_eq!(s.particular, Some(v(&[0, 0])));
        assert_eq!(s.kernel.dim(), 2);
    }

    #[test]
    fn solve_rank_one() {
        // x + y = 1 and 2x + 2y = 2: row reduction leaves x + y = 1, y free.
        let m = mat(&[&[1, 1], &[2, 2]]);
        let s = solve(&m, &v(&[1, 2])).unwrap();
        let x = s.particular.unwrap();
        assert_eq!(m.apply(&x), v(&[1, 2]));
        assert_eq!(x, v(&[1, 0]));
        assert_eq!(s.kernel.dim(), 1);
        assert!(s.kernel.contains(&v(&[1, -1])));
    }

    #[test]
    fn solve_inconsistent_and_mismatch() {
        let m = mat(&[&[1, 1], &[2, 2]]);
        assert!(solve(&m, &v(&[1, 3])).unwrap().particular.is_none());
        assert!(matches!(solve(&m, &v(&[1])), Err(Error::Dimension(_))));
    }

    #[test]
    fn image_kernel_examples() {
        let (im, ker) = image_kernel(&Matrix::identity(q(), 3));
        assert_eq!((im.dim(), ker.dim()), (3, 0));
        let (im, ker) = image_kernel(&Matrix::zeros(q(), 3, 3));
        assert_eq!((im.dim(), ker.dim()), (0, 3));
        // [[1,1],[1,1]]: the 2×2 minor vanishes, a 1×1 minor does not.
        let (im, ker) = image_kernel(&mat(&[&[1, 1], &[1, 1]]));
        assert_eq!((im.dim(), ker.dim()), (1, 1));
    }

    #[test]
    fn quotient_examples() {
        let full = Subspace::full(q(), 2);
        let zero = Subspace::zero(q(), 2);
        let qs = quotient(&full, &zero).unwrap();
        assert_eq!(qs.dim(), 2);
        assert_eq!(qs.projection, Matrix::identity(q(), 2));
        assert_eq!(quotient(&full, &full).unwrap().dim(), 0);

        let k3 = Subspace::full(q(), 3);
        let w = Subspace::span(q(), 3, [&v(&[1, 1, 0])]);
        let qs = quotient(&k3, &w).unwrap();
        assert_eq!(qs.dim(), 2);
        assert!(is_zero(&qs.project(&v(&[1, 1, 0]))));
        assert_eq!(qs.projection.mul(&qs.section), Matrix::identity(q(), 2));

        assert!(quotient(&w, &k3).is_err());
    }

    #[test]
    fn subspace_canonical() {
        let a = Subspace::span(q(), 3, [&v(&[1, 2, 3]), &v(&[2, 4, 7])]);
        let b = Subspace::span(q(), 3, [&v(&[0, 0, 1]), &v(&[3, 6, 0])]);
        assert_eq!(a, b);
        assert_eq!(a.coordinates(&v(&[1, 2, 5])), Some(v(&[1, 5])));
        assert_eq!(a.coordinates(&v(&[0, 1, 0])), None);
    }

    #[test]
    fn inverse_roundtrip() {
        let m = mat(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(q(), 2));
        assert!(mat(&[&[1, 1], &[1, 1]]).inverse().is_none());
    }

    #[test]
    fn intersection_example() {
        let a = Subspace::span(q(), 3, [&v(&[1, 0, 0]), &v(&[0, 1, 0])]);
        let b = Subspace::span(q(), 3, [&v(&[0, 1, 0]), &v(&[0, 0, 1])]);
        assert_eq!(a.intersection(&b), Subspace::span(q(), 3, [&v(&[0, 1, 0])]));
    }
}
