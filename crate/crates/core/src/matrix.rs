//! Dense exact matrices, reduced row echelon form, and canonical subspaces.
//!
//! Everything downstream canonicalizes through RREF with pivots chosen in
//! ascending column order, so kernels, quotients and homology groups get a
//! reproducible coordinateization. Vectors are rows throughout the crate; a
//! linear map sends x to x·M.

use crate::error::Error;
use crate::field::{FieldSpec, Scalar};

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub field: FieldSpec,
    data: Vec<Scalar>,
}

pub type Vector = Vec<Scalar>;

impl Matrix {
    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            field,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: FieldSpec, cols: usize, rows: Vec<Vector>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row length mismatch");
            data.extend(r);
        }
        Matrix {
            rows: n,
            cols,
            field,
            data,
        }
    }

    pub fn from_fn(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix {
            rows,
            cols,
            field,
            data,
        }
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vec(&self, r: usize) -> Vector {
        self.row(r).to_vec()
    }

    pub fn set_row(&mut self, r: usize, v: &[Scalar]) {
        assert_eq!(v.len(), self.cols);
        self.data[r * self.cols..(r + 1) * self.cols].clone_from_slice(v);
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| {
            self.get(j, i).clone()
        })
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| {
            self.field.add(self.get(i, j), other.get(i, j))
        })
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| {
            self.field.sub(self.get(i, j), other.get(i, j))
        })
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| {
            self.field.mul(self.get(i, j), c)
        })
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let f = self.field;
        let mut out = Matrix::zero(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if f.is_zero(b) {
                        continue;
                    }
                    let cur = out.get(i, j);
                    out.set(i, j, f.add(cur, &f.mul(a, b)));
                }
            }
        }
        out
    }

    /// Stack other below self.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            field: self.field,
            data,
        }
    }

    /// Reduced row echelon form together with the pivot columns in ascending
    /// order. Pivot entries are 1 and pivot columns are cleared above and
    /// below; zero rows are dropped.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let f = self.field;
        let mut rows: Vec<Vector> = (0..self.rows).map(|i| self.row_vec(i)).collect();
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..self.cols {
            let Some(pr) = (r..rows.len()).find(|&i| !f.is_zero(&rows[i][c])) else {
                continue;
            };
            rows.swap(r, pr);
            let inv = f.inv(&rows[r][c]);
            for j in c..self.cols {
                rows[r][j] = f.mul(&rows[r][j], &inv);
            }
            for i in 0..rows.len() {
                if i != r && !f.is_zero(&rows[i][c]) {
                    let coef = f.neg(&rows[i][c]);
                    for j in c..self.cols {
                        let t = f.add_mul(&rows[i][j], &coef, &rows[r][j]);
                        rows[i][j] = t;
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        rows.truncate(r);
        (Matrix::from_rows(f, self.cols, rows), pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Right null space {v : self · v = 0} with canonical RREF basis.
    pub fn kernel_basis(&self) -> Subspace {
        let f = self.field;
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for c in 0..self.cols {
            if is_pivot[c] {
                continue;
            }
            let mut v = vec![f.zero(); self.cols];
            v[c] = f.one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = f.neg(r.get(i, c));
            }
            basis.push(v);
        }
        Subspace::from_rows(f, self.cols, basis)
    }

    /// Kernel of the row-convention map x ↦ x·self, i.e. the left null space.
    pub fn row_kernel(&self) -> Subspace {
        self.transpose().kernel_basis()
    }

    /// Row space as a canonical subspace.
    pub fn row_space(&self) -> Subspace {
        let rows = (0..self.rows).map(|i| self.row_vec(i)).collect();
        Subspace::from_rows(self.field, self.cols, rows)
    }

    /// Solve x·self = b for a single row vector b. Returns a particular
    /// solution with free coordinates set to zero.
    pub fn solve_row(&self, b: &[Scalar]) -> Option<Vector> {
        let sols = self.solve_rows(&Matrix::from_rows(self.field, b.len(), vec![b.to_vec()]))?;
        Some(sols.row_vec(0))
    }

    /// Solve X·self = B row by row; None if any row is inconsistent.
    pub fn solve_rows(&self, b: &Matrix) -> Option<Matrix> {
        assert_eq!(b.cols, self.cols, "rhs width mismatch");
        let f = self.field;
        // x·M = b  ⇔  Mᵀ·xᵀ = bᵀ: reduce [Mᵀ | Bᵀ] once.
        let mt = self.transpose();
        let bt = b.transpose();
        let aug = Matrix::from_fn(f, mt.rows, mt.cols + bt.cols, |i, j| {
            if j < mt.cols {
                mt.get(i, j).clone()
            } else {
                bt.get(i, j - mt.cols).clone()
            }
        });
        let (r, pivots) = aug.rref();
        // any pivot in the augmented block means some rhs column is inconsistent
        if pivots.iter().any(|&p| p >= mt.cols) {
            return None;
        }
        let mut out = Matrix::zero(f, b.rows, self.rows);
        for (i, &p) in pivots.iter().enumerate() {
            for k in 0..b.rows {
                out.set(k, p, r.get(i, mt.cols + k).clone());
            }
        }
        Some(out)
    }

    pub fn render_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| self.field.render(x)).collect())
            .collect()
    }
}

/// Kronecker product in row convention: (x ⊗ y)·kron(A, B) = (x·A) ⊗ (y·B).
pub fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    let f = a.field;
    let mut out = Matrix::zero(f, a.rows * b.rows, a.cols * b.cols);
    for i in 0..a.rows {
        for k in 0..a.cols {
            let c = a.get(i, k);
            if f.is_zero(c) {
                continue;
            }
            for j in 0..b.rows {
                for l in 0..b.cols {
                    out.set(i * b.rows + j, k * b.cols + l, f.mul(c, b.get(j, l)));
                }
            }
        }
    }
    out
}

pub fn row_times_matrix(v: &[Scalar], m: &Matrix) -> Vector {
    assert_eq!(v.len(), m.rows, "row/matrix shape mismatch");
    let f = m.field;
    let mut out = vec![f.zero(); m.cols];
    for (k, a) in v.iter().enumerate() {
        if f.is_zero(a) {
            continue;
        }
        for j in 0..m.cols {
            let b = m.get(k, j);
            if f.is_zero(b) {
                continue;
            }
            out[j] = f.add(&out[j], &f.mul(a, b));
        }
    }
    out
}

pub fn add_rows(f: FieldSpec, a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| f.add(x, y)).collect()
}

pub fn sub_rows(f: FieldSpec, a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| f.sub(x, y)).collect()
}

pub fn scale_row(f: FieldSpec, c: &Scalar, a: &[Scalar]) -> Vector {
    a.iter().map(|x| f.mul(c, x)).collect()
}

pub fn is_zero_row(f: FieldSpec, a: &[Scalar]) -> bool {
    a.iter().all(|x| f.is_zero(x))
}

/// A linear subspace with its unique RREF basis.
#[derive(Debug, Clone, PartialEq)]
pub struct Subspace {
    pub ambient: usize,
    pub basis: Matrix,
    pub pivots: Vec<usize>,
}

impl Subspace {
    pub fn from_rows(field: FieldSpec, ambient: usize, rows: Vec<Vector>) -> Self {
        let (basis, pivots) = Matrix::from_rows(field, ambient, rows).rref();
        Subspace {
            ambient,
            basis,
            pivots,
        }
    }

    pub fn zero(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zero(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn field(&self) -> FieldSpec {
        self.basis.field
    }

    /// Columns not used as pivots, in ascending order: the canonical
    /// complement coordinates.
    pub fn complement_cols(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }

    /// Coordinates of v in the RREF basis, if v lies in the subspace.
    pub fn coords_of(&self, v: &[Scalar]) -> Option<Vector> {
        assert_eq!(v.len(), self.ambient);
        let f = self.field();
        let coords: Vector = self.pivots.iter().map(|&p| v[p].clone()).collect();
        // verify the combination reproduces v
        let mut rest = v.to_vec();
        for (i, c) in coords.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            let nc = f.neg(c);
            for j in 0..self.ambient {
                let t = f.add_mul(&rest[j], &nc, self.basis.get(i, j));
                rest[j] = t;
            }
        }
        if is_zero_row(f, &rest) {
            Some(coords)
        } else {
            None
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coords_of(v).is_some()
    }

    /// Coordinates of v in the canonical complement (the non-pivot columns of
    /// the RREF): subtract the pivot-matching combination of basis rows, then
    /// read off the non-pivot entries.
    pub fn quotient_coords(&self, v: &[Scalar]) -> Result<Vector, Error> {
        if v.len() != self.ambient {
            return Err(Error::Validation(format!(
                "vector length {} does not match ambient dimension {}",
                v.len(),
                self.ambient
            )));
        }
        let f = self.field();
        let mut rest = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            let c = rest[p].clone();
            if f.is_zero(&c) {
                continue;
            }
            let nc = f.neg(&c);
            for j in 0..self.ambient {
                let t = f.add_mul(&rest[j], &nc, self.basis.get(i, j));
                rest[j] = t;
            }
        }
        Ok(self
            .complement_cols()
            .into_iter()
            .map(|c| rest[c].clone())
            .collect())
    }

    /// The quotient projection as a matrix: ambient × (ambient − dim); row i
    /// is quotient_coords of the i-th standard basis vector.
    pub fn quotient_matrix(&self) -> Matrix {
        let f = self.field();
        let comp = self.complement_cols();
        let mut col_of = vec![usize::MAX; self.ambient];
        for (j, &c) in comp.iter().enumerate() {
            col_of[c] = j;
        }
        let mut pivot_row = vec![usize::MAX; self.ambient];
        for (i, &p) in self.pivots.iter().enumerate() {
            pivot_row[p] = i;
        }
        let mut out = Matrix::zero(f, self.ambient, comp.len());
        for e in 0..self.ambient {
            if pivot_row[e] == usize::MAX {
                out.set(e, col_of[e], f.one());
            } else {
                let i = pivot_row[e];
                for (j, &c) in comp.iter().enumerate() {
                    let val = f.neg(self.basis.get(i, c));
                    if !f.is_zero(&val) {
                        out.set(e, j, val);
                    }
                }
            }
        }
        out
    }

    /// Intersection of two subspaces of the same ambient space.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        // rows of self whose quotient by `other`'s complement… use the kernel
        // of the stacked system instead: v = x·A = y·B.
        let f = self.field();
        if self.dim() == 0 || other.dim() == 0 {
            return Subspace::zero(f, self.ambient);
        }
        let stacked = self.basis.vstack(&other.basis);
        // left kernel rows (x | −y) with x·A = y·B
        let ker = stacked.row_kernel();
        let mut rows = Vec::new();
        for i in 0..ker.dim() {
            let z = ker.basis.row(i);
            let x = &z[..self.dim()];
            rows.push(row_times_matrix(x, &self.basis));
        }
        Subspace::from_rows(f, self.ambient, rows)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        (0..self.dim()).all(|i| other.contains(self.basis.row(i)))
    }
}

/// Incremental RREF: rows are inserted one at a time and the reduced basis is
/// maintained throughout. Rows are handled sparsely, which matters for the
/// very sparse relation systems produced by tensor products.
#[derive(Debug, Clone)]
pub struct RrefBuilder {
    field: FieldSpec,
    ambient: usize,
    /// reduced rows as sorted (col, value) lists, in insertion order
    rows: Vec<Vec<(usize, Scalar)>>,
    /// pivot column → index into rows
    pivot_row: Vec<usize>,
}

const NO_ROW: usize = usize::MAX;

impl RrefBuilder {
    pub fn new(field: FieldSpec, ambient: usize) -> Self {
        RrefBuilder {
            field,
            ambient,
            rows: Vec::new(),
            pivot_row: vec![NO_ROW; ambient],
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn insert_dense(&mut self, v: &[Scalar]) -> bool {
        let f = self.field;
        let sparse: Vec<(usize, Scalar)> = v
            .iter()
            .enumerate()
            .filter(|(_, x)| !f.is_zero(x))
            .map(|(c, x)| (c, x.clone()))
            .collect();
        self.insert_sparse(sparse)
    }

    /// Insert a sparse row (sorted by column, no explicit zeros); returns true
    /// if the rank grew.
    pub fn insert_sparse(&mut self, row: Vec<(usize, Scalar)>) -> bool {
        let f = self.field;
        let mut row = self.reduce_only(row);
        let Some(&(lead, ref lv)) = row.first() else {
            return false;
        };
        // normalize and adopt as a new pivot row
        let inv = f.inv(lv);
        for (_, x) in row.iter_mut() {
            *x = f.mul(x, &inv);
        }
        // clear the new pivot column from existing rows
        let new_idx = self.rows.len();
        for i in 0..self.rows.len() {
            if let Some(pos) = self.rows[i].iter().position(|(c, _)| *c == lead) {
                let coef = f.neg(&self.rows[i][pos].1);
                let combined = sparse_add_mul(f, &self.rows[i], &coef, &row);
                self.rows[i] = combined;
            }
        }
        self.pivot_row[lead] = new_idx;
        self.rows.push(row);
        true
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let f = self.field;
        let sparse: Vec<(usize, Scalar)> = v
            .iter()
            .enumerate()
            .filter(|(_, x)| !f.is_zero(x))
            .map(|(c, x)| (c, x.clone()))
            .collect();
        self.reduce_only(sparse).is_empty()
    }

    /// Eliminate every pivot column present in the row's support. Existing
    /// rows are in RREF, so each elimination introduces only non-pivot
    /// columns and the pass terminates.
    fn reduce_only(&self, mut row: Vec<(usize, Scalar)>) -> Vec<(usize, Scalar)> {
        let f = self.field;
        loop {
            let Some((c, v)) = row
                .iter()
                .find(|(c, _)| self.pivot_row[*c] != NO_ROW)
                .cloned()
            else {
                return row;
            };
            let coef = f.neg(&v);
            row = sparse_add_mul(f, &row, &coef, &self.rows[self.pivot_row[c]]);
        }
    }

    pub fn into_subspace(self) -> Subspace {
        let f = self.field;
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        let lead = |r: &Vec<(usize, Scalar)>| r.first().map(|(c, _)| *c).unwrap_or(usize::MAX);
        order.sort_by_key(|&i| lead(&self.rows[i]));
        let mut basis = Matrix::zero(f, self.rows.len(), self.ambient);
        let mut pivots = Vec::with_capacity(self.rows.len());
        for (out_i, &i) in order.iter().enumerate() {
            pivots.push(lead(&self.rows[i]));
            for (c, x) in &self.rows[i] {
                basis.set(out_i, *c, x.clone());
            }
        }
        Subspace {
            ambient: self.ambient,
            basis,
            pivots,
        }
    }
}

/// a + coef·b on sorted sparse rows.
fn sparse_add_mul(
    f: FieldSpec,
    a: &[(usize, Scalar)],
    coef: &Scalar,
    b: &[(usize, Scalar)],
) -> Vec<(usize, Scalar)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map(|(c, _)| *c).unwrap_or(usize::MAX);
        let cb = b.get(j).map(|(c, _)| *c).unwrap_or(usize::MAX);
        if ca < cb {
            out.push(a[i].clone());
            i += 1;
        } else if cb < ca {
            let v = f.mul(coef, &b[j].1);
            if !f.is_zero(&v) {
                out.push((cb, v));
            }
            j += 1;
        } else {
            let v = f.add_mul(&a[i].1, coef, &b[j].1);
            if !f.is_zero(&v) {
                out.push((ca, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Free-function form of the quotient projection with an explicit ambient
/// dimension check.
pub fn quotient_coords(ambient: usize, sub: &Subspace, v: &[Scalar]) -> Result<Vector, Error> {
    if sub.ambient != ambient {
        return Err(Error::Validation(format!(
            "subspace ambient {} does not match {}",
            sub.ambient, ambient
        )));
    }
    sub.quotient_coords(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn m(rows: Vec<Vec<i64>>) -> Matrix {
        let f = q();
        let cols = rows[0].len();
        Matrix::from_rows(
            f,
            cols,
            rows.into_iter()
                .map(|r| r.into_iter().map(|x| f.from_i64(x)).collect())
                .collect(),
        )
    }

    fn v(xs: Vec<i64>) -> Vector {
        xs.into_iter().map(|x| q().from_i64(x)).collect()
    }

    #[test]
    fn kernel_of_rank_one_symmetric() {
        let k = m(vec![vec![1, 1], vec![1, 1]]).kernel_basis();
        assert_eq!(k.dim(), 1);
        assert_eq!(k.basis.row_vec(0), v(vec![1, -1]));
    }

    #[test]
    fn kernel_of_identity_is_zero() {
        let k = Matrix::identity(q(), 3).kernel_basis();
        assert_eq!(k.dim(), 0);
    }

    #[test]
    fn kernel_mod_two() {
        let f = FieldSpec::prime(2).unwrap();
        let mat = Matrix::from_rows(f, 2, vec![vec![f.one(), f.one()]]);
        let k = mat.kernel_basis();
        assert_eq!(k.dim(), 1);
        assert_eq!(k.basis.row_vec(0), vec![f.one(), f.one()]);
    }

    #[test]
    fn quotient_projection_example() {
        let sub = Subspace::from_rows(q(), 2, vec![v(vec![1, 0])]);
        assert_eq!(sub.quotient_coords(&v(vec![3, 5])).unwrap(), v(vec![5]));

        let full = Subspace::full(q(), 2);
        assert!(full.quotient_coords(&v(vec![4, 7])).unwrap().is_empty());

        let diag = Subspace::from_rows(q(), 2, vec![v(vec![1, 1])]);
        assert_eq!(diag.quotient_coords(&v(vec![1, 0])).unwrap(), v(vec![-1]));
    }

    #[test]
    fn quotient_dimension_mismatch_is_error() {
        let sub = Subspace::from_rows(q(), 2, vec![v(vec![1, 1])]);
        assert!(quotient_coords(3, &sub, &v(vec![1, 0, 0])).is_err());
        assert!(sub.quotient_coords(&v(vec![1, 0, 0])).is_err());
    }

    #[test]
    fn solve_rows_round_trip() {
        let a = m(vec![vec![1, 2, 0], vec![0, 1, 1]]);
        let x = m(vec![vec![3, -1], vec![2, 5]]);
        let b = x.mul(&a);
        let sol = a.solve_rows(&b).unwrap();
        assert_eq!(sol.mul(&a), b);
        assert!(a
            .solve_row(&v(vec![1, 0, 1]).into_iter().take(3).collect::<Vec<_>>())
            .is_none());
    }

    #[test]
    fn builder_matches_batch_rref() {
        let rows = vec![
            v(vec![0, 2, 4, 0]),
            v(vec![1, 1, 0, 3]),
            v(vec![1, 3, 4, 3]),
            v(vec![0, 0, 0, 5]),
        ];
        let batch = Subspace::from_rows(q(), 4, rows.clone());
        let mut b = RrefBuilder::new(q(), 4);
        for r in &rows {
            b.insert_dense(r);
        }
        let inc = b.into_subspace();
        assert_eq!(batch, inc);
        assert_eq!(inc.dim(), 3);
    }

    #[test]
    fn intersection() {
        let a = Subspace::from_rows(q(), 3, vec![v(vec![1, 0, 0]), v(vec![0, 1, 0])]);
        let b = Subspace::from_rows(q(), 3, vec![v(vec![0, 1, 1]), v(vec![1, 0, 1])]);
        let i = a.intersect(&b);
        assert_eq!(i.dim(), 1);
        assert_eq!(i.basis.row_vec(0), v(vec![1, -1, 0]));
    }
}
