//! Dense exact linear algebra: matrices, reduced row echelon forms and
//! canonical subspaces.

use std::fmt;

use crate::scalar::Field;

/// Dense matrix stored as a list of rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<F> {
    rows: Vec<Vec<F>>,
    cols: usize,
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.nrows(), self.cols)?;
        for r in &self.rows {
            let cells: Vec<String> = r.iter().map(|c| c.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows: vec![vec![F::zero(); cols]; rows],
            cols,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.rows[i][i] = F::one();
        }
        m
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows(rows: Vec<Vec<F>>, cols: usize) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        Matrix { rows, cols }
    }

    pub fn from_columns(columns: &[Vec<F>], nrows: usize) -> Self {
        let mut m = Self::zeros(nrows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), nrows, "column length mismatch");
            for (i, x) in c.iter().enumerate() {
                m.rows[i][j] = x.clone();
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &F {
        &self.rows[r][c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F) {
        self.rows[r][c] = v;
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.rows[r]
    }

    pub fn rows(&self) -> &[Vec<F>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<F>> {
        self.rows
    }

    pub fn column(&self, c: usize) -> Vec<F> {
        self.rows.iter().map(|r| r[c].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<F>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(F::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.nrows());
        for (i, r) in self.rows.iter().enumerate() {
            for (j, x) in r.iter().enumerate() {
                if !x.is_zero() {
                    t.rows[j][i] = x.clone();
                }
            }
        }
        t
    }

    pub fn mul(&self, o: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, o.nrows(), "dimension mismatch in product");
        let mut out = Self::zeros(self.nrows(), o.cols);
        for (i, r) in self.rows.iter().enumerate() {
            let acc = &mut out.rows[i];
            for (k, a) in r.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, b) in o.rows[k].iter().enumerate() {
                    if !b.is_zero() {
                        acc[j].add_assign(&a.mul(b));
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(
            self.cols,
            v.len(),
            "dimension mismatch in matrix-vector product"
        );
        self.rows
            .iter()
            .map(|r| {
                let mut acc = F::zero();
                for (a, b) in r.iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc.add_assign(&a.mul(b));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, o: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.nrows(), self.cols), (o.nrows(), o.cols));
        Matrix {
            rows: self
                .rows
                .iter()
                .zip(&o.rows)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x.add(y)).collect())
                .collect(),
            cols: self.cols,
        }
    }

    pub fn sub(&self, o: &Matrix<F>) -> Matrix<F> {
        self.add(&o.scale(&F::one().neg()))
    }

    pub fn scale(&self, c: &F) -> Matrix<F> {
        Matrix {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|x| x.mul(c)).collect())
                .collect(),
            cols: self.cols,
        }
    }

    /// `self += c * o`.
    pub fn axpy(&mut self, c: &F, o: &Matrix<F>) {
        if c.is_zero() {
            return;
        }
        for (a, b) in self.rows.iter_mut().zip(&o.rows) {
            for (x, y) in a.iter_mut().zip(b) {
                if !y.is_zero() {
                    x.add_assign(&c.mul(y));
                }
            }
        }
    }

    /// Row-major flattening, used as coordinates on spaces of maps.
    pub fn flatten(&self) -> Vec<F> {
        self.rows.iter().flatten().cloned().collect()
    }

    pub fn unflatten(v: &[F], rows: usize, cols: usize) -> Self {
        assert_eq!(v.len(), rows * cols);
        Matrix {
            rows: v
                .chunks(cols.max(1))
                .take(rows)
                .map(|c| c.to_vec())
                .collect(),
            cols,
        }
        .fix_empty(rows)
    }

    fn fix_empty(mut self, rows: usize) -> Self {
        if self.cols == 0 {
            self.rows = vec![Vec::new(); rows];
        }
        self
    }

    /// Block matrix with `self` on top of `o`.
    pub fn vstack(&self, o: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, o.cols);
        let mut rows = self.rows.clone();
        rows.extend(o.rows.iter().cloned());
        Matrix {
            rows,
            cols: self.cols,
        }
    }

    /// Block matrix with `self` left of `o`.
    pub fn hstack(&self, o: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.nrows(), o.nrows());
        Matrix {
            rows: self
                .rows
                .iter()
                .zip(&o.rows)
                .map(|(a, b)| a.iter().chain(b).cloned().collect())
                .collect(),
            cols: self.cols + o.cols,
        }
    }

    pub fn block_diag(blocks: &[Matrix<F>]) -> Matrix<F> {
        let r: usize = blocks.iter().map(Matrix::nrows).sum();
        let c: usize = blocks.iter().map(Matrix::ncols).sum();
        let mut m = Self::zeros(r, c);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.nrows() {
                for j in 0..b.ncols() {
                    m.rows[r0 + i][c0 + j] = b.rows[i][j].clone();
                }
            }
            r0 += b.nrows();
            c0 += b.ncols();
        }
        m
    }

    /// Columns `start..start+len`.
    pub fn column_block(&self, start: usize, len: usize) -> Matrix<F> {
        Matrix {
            rows: self
                .rows
                .iter()
                .map(|r| r[start..start + len].to_vec())
                .collect(),
            cols: len,
        }
    }

    /// Rows `start..start+len`.
    pub fn row_block(&self, start: usize, len: usize) -> Matrix<F> {
        Matrix {
            rows: self.rows[start..start + len].to_vec(),
            cols: self.cols,
        }
    }

    /// Reduced row echelon form; returns the form and its pivot columns.
    pub fn rref(&self) -> (Matrix<F>, Vec<usize>) {
        let mut rows = self.rows.clone();
        let pivots = rref_in_place(&mut rows, self.cols);
        (
            Matrix {
                rows,
                cols: self.cols,
            },
            pivots,
        )
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Kernel of `v -> self * v`.
    pub fn nullspace(&self) -> Subspace<F> {
        let mut rows = self.rows.clone();
        let pivots = rref_in_place(&mut rows, self.cols);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![F::zero(); self.cols];
            v[f] = F::one();
            for (r, &p) in pivots.iter().enumerate() {
                if !rows[r][f].is_zero() {
                    v[p] = rows[r][f].neg();
                }
            }
            basis.push(v);
        }
        Subspace::from_vectors(self.cols, basis)
    }

    /// Image of `v -> self * v`.
    pub fn column_space(&self) -> Subspace<F> {
        Subspace::from_vectors(self.nrows(), self.columns())
    }

    pub fn row_space(&self) -> Subspace<F> {
        Subspace::from_vectors(self.cols, self.rows.clone())
    }

    /// Some solution of `self * x = b`, if one exists.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        LinearSolver::new(self).solve(b)
    }

    pub fn determinant(&self) -> F {
        assert_eq!(self.nrows(), self.cols, "determinant of non-square matrix");
        let n = self.cols;
        let mut rows = self.rows.clone();
        let mut det = F::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !rows[r][c].is_zero()) else {
                return F::zero();
            };
            if p != c {
                rows.swap(p, c);
                det = det.neg();
            }
            let piv = rows[c][c].clone();
            det.mul_assign(&piv);
            let inv = piv.inv();
            for r in c + 1..n {
                if rows[r][c].is_zero() {
                    continue;
                }
                let f = rows[r][c].mul(&inv);
                let (top, bottom) = rows.split_at_mut(r);
                let prow = &top[c];
                for j in c..n {
                    bottom[0][j].sub_mul_assign(&f, &prow[j]);
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Matrix<F>> {
        let n = self.cols;
        if self.nrows() != n {
            return None;
        }
        let aug = self.hstack(&Self::identity(n));
        let (r, piv) = aug.rref();
        if piv.len() < n || piv[n - 1] != n - 1 {
            return None;
        }
        Some(r.column_block(n, n))
    }
}

/// Gauss-Jordan elimination in place; returns pivot columns. Zero rows end
/// up at the bottom.
pub(crate) fn rref_in_place<F: Field>(rows: &mut [Vec<F>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    let nrows = rows.len();
    for c in 0..cols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(p, r);
        let inv = rows[r][c].inv();
        if !inv.is_one() {
            for x in rows[r][c..].iter_mut() {
                if !x.is_zero() {
                    x.mul_assign(&inv);
                }
            }
        }
        let nz: Vec<usize> = (c..cols).filter(|&j| !rows[r][j].is_zero()).collect();
        let pivot_row = std::mem::take(&mut rows[r]);
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for &j in &nz {
                row[j].sub_mul_assign(&f, &pivot_row[j]);
            }
        }
        rows[r] = pivot_row;
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Precomputed elimination for repeated solves against one matrix.
pub struct LinearSolver<F> {
    /// Row operations taking the matrix to its RREF.
    transform: Matrix<F>,
    pivots: Vec<usize>,
    ncols: usize,
}

impl<F: Field> LinearSolver<F> {
    pub fn new(m: &Matrix<F>) -> Self {
        let n = m.nrows();
        let aug = m.hstack(&Matrix::identity(n));
        let mut rows = aug.rows;
        let all = rref_in_place(&mut rows, m.ncols() + n);
        let pivots: Vec<usize> = all.into_iter().filter(|&p| p < m.ncols()).collect();
        let transform = Matrix {
            rows: rows.into_iter().map(|r| r[m.ncols()..].to_vec()).collect(),
            cols: n,
        };
        LinearSolver {
            transform,
            pivots,
            ncols: m.ncols(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        let y = self.transform.mul_vec(b);
        if y[self.pivots.len()..].iter().any(|x| !x.is_zero()) {
            return None;
        }
        let mut x = vec![F::zero(); self.ncols];
        for (r, &p) in self.pivots.iter().enumerate() {
            x[p] = y[r].clone();
        }
        Some(x)
    }
}

/// Subspace of `F^n` in canonical reduced row echelon form.
///
/// Two subspaces are equal iff their canonical bases are equal, so the
/// derived `PartialEq` is subspace equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace<F> {
    ambient: usize,
    basis: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> fmt::Debug for Subspace<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}) ", self.dim(), self.ambient)?;
        let rows: Vec<Vec<String>> = self
            .basis
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect())
            .collect();
        write!(f, "{rows:?}")
    }
}

impl<F: Field> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::<F>::identity(ambient).rows,
            pivots: (0..ambient).collect(),
        }
    }

    pub fn from_vectors<I: IntoIterator<Item = Vec<F>>>(ambient: usize, vectors: I) -> Self {
        let mut rows: Vec<Vec<F>> = vectors
            .into_iter()
            .inspect(|v| assert_eq!(v.len(), ambient, "vector length mismatch"))
            .filter(|v| v.iter().any(|x| !x.is_zero()))
            .collect();
        let pivots = rref_in_place(&mut rows, ambient);
        rows.truncate(pivots.len());
        Subspace {
            ambient,
            basis: rows,
            pivots,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis vectors as the columns of an `ambient x dim` matrix, i.e. the
    /// inclusion map in these coordinates.
    pub fn inclusion(&self) -> Matrix<F> {
        Matrix::from_columns(&self.basis, self.ambient)
    }

    /// `v` minus its component along the pivot columns of this basis.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut v = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, y) in v.iter_mut().zip(row) {
                x.sub_mul_assign(&f, y);
            }
        }
        v
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).iter().all(F::is_zero)
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        self.contains(v)
            .then(|| self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Coordinates without the membership check.
    pub fn coordinates_unchecked(&self, v: &[F]) -> Vec<F> {
        self.pivots.iter().map(|&p| v[p].clone()).collect()
    }

    pub fn combine(&self, coords: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.ambient];
        for (c, row) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (x, y) in out.iter_mut().zip(row) {
                if !y.is_zero() {
                    x.add_assign(&c.mul(y));
                }
            }
        }
        out
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: Vec<F>) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let mut v = self.reduce(&v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv();
        for x in v.iter_mut() {
            if !x.is_zero() {
                x.mul_assign(&inv);
            }
        }
        for row in self.basis.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, y) in row.iter_mut().zip(&v) {
                x.sub_mul_assign(&f, y);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.basis.insert(at, v);
        true
    }

    pub fn sum(&self, o: &Subspace<F>) -> Subspace<F> {
        let mut s = self.clone();
        for v in &o.basis {
            s.insert(v.clone());
        }
        s
    }

    pub fn is_subspace_of(&self, o: &Subspace<F>) -> bool {
        self.basis.iter().all(|v| o.contains(v))
    }

    pub fn intersection(&self, o: &Subspace<F>) -> Subspace<F> {
        if self.is_zero() || o.is_zero() {
            return Subspace::zero(self.ambient);
        }
        // a in self, b in o with a = b: kernel of [A^T | -B^T]
        let a = self.inclusion();
        let b = o.inclusion().scale(&F::one().neg());
        let ker = a.hstack(&b).nullspace();
        let vecs = ker
            .basis
            .iter()
            .map(|k| a.mul_vec(&k[..self.dim()]))
            .collect::<Vec<_>>();
        Subspace::from_vectors(self.ambient, vecs)
    }

    /// Canonical complement of `sub` inside `self`: the reduction of `self`
    /// modulo `sub`, in echelon form. Its vectors vanish on the pivots of
    /// `sub`.
    pub fn complement_of(&self, sub: &Subspace<F>) -> Subspace<F> {
        Subspace::from_vectors(self.ambient, self.basis.iter().map(|v| sub.reduce(v)))
    }

    /// Image of the subspace under a linear map.
    pub fn image_under(&self, m: &Matrix<F>) -> Subspace<F> {
        Subspace::from_vectors(m.nrows(), self.basis.iter().map(|v| m.mul_vec(v)))
    }
}

/// Quotient `ambient / sub`, presented through the canonical complement
/// coordinates: the non-pivot columns of `sub`.
#[derive(Clone, Debug)]
pub struct Quotient<F: Field> {
    sub: Subspace<F>,
    free: Vec<usize>,
}

impl<F: Field> Quotient<F> {
    pub fn new(sub: Subspace<F>) -> Self {
        let mut is_pivot = vec![false; sub.ambient];
        for &p in &sub.pivots {
            is_pivot[p] = true;
        }
        let free = (0..sub.ambient).filter(|&c| !is_pivot[c]).collect();
        Quotient { sub, free }
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn subspace(&self) -> &Subspace<F> {
        &self.sub
    }

    /// Coordinates of the coset `v + sub`.
    pub fn project(&self, v: &[F]) -> Vec<F> {
        let r = self.sub.reduce(v);
        self.free.iter().map(|&c| r[c].clone()).collect()
    }

    /// Matrix of the projection `ambient -> quotient`.
    pub fn projection(&self) -> Matrix<F> {
        let n = self.sub.ambient;
        let cols: Vec<Vec<F>> = (0..n)
            .map(|j| {
                let mut e = vec![F::zero(); n];
                e[j] = F::one();
                self.project(&e)
            })
            .collect();
        Matrix::from_columns(&cols, self.dim())
    }

    /// Representative in the ambient space of quotient basis vector `i`.
    pub fn lift(&self, i: usize) -> Vec<F> {
        let mut e = vec![F::zero(); self.sub.ambient];
        e[self.free[i]] = F::one();
        e
    }
}

/// `numerator / denominator` with representatives taken as the canonical
/// complement of the denominator inside the numerator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetSpace<F: Field> {
    numerator: Subspace<F>,
    denominator: Subspace<F>,
    representatives: Subspace<F>,
}

impl<F: Field> CosetSpace<F> {
    /// Panics if `denominator` is not contained in `numerator`.
    pub fn new(numerator: Subspace<F>, denominator: Subspace<F>) -> Self {
        assert!(
            denominator.is_subspace_of(&numerator),
            "denominator must lie in the numerator"
        );
        let representatives = numerator.complement_of(&denominator);
        debug_assert_eq!(representatives.dim() + denominator.dim(), numerator.dim());
        CosetSpace {
            numerator,
            denominator,
            representatives,
        }
    }

    pub fn dim(&self) -> usize {
        self.representatives.dim()
    }

    pub fn numerator(&self) -> &Subspace<F> {
        &self.numerator
    }

    pub fn denominator(&self) -> &Subspace<F> {
        &self.denominator
    }

    pub fn representatives(&self) -> &[Vec<F>] {
        self.representatives.basis()
    }

    pub fn representative(&self, i: usize) -> &[F] {
        &self.representatives.basis()[i]
    }

    /// Coordinates of the class of `v`, or `None` if `v` is outside the numerator.
    pub fn coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        if !self.numerator.contains(v) {
            return None;
        }
        Some(self.coordinates_unchecked(v))
    }

    /// Coordinates of the class of `v`, assuming `v` lies in the numerator.
    pub fn coordinates_unchecked(&self, v: &[F]) -> Vec<F> {
        self.representatives
            .coordinates_unchecked(&self.denominator.reduce(v))
    }

    /// Canonical representative of the class with the given coordinates.
    pub fn combine(&self, coords: &[F]) -> Vec<F> {
        self.representatives.combine(coords)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    fn mat(rows: &[&[i64]]) -> Matrix<Rational> {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| q(x)).collect())
                .collect(),
            cols,
        )
    }

    #[test]
    fn rref_and_nullspace() {
        let m = mat(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let ker = m.nullspace();
        assert_eq!(ker.dim(), 1);
        let v = &ker.basis()[0];
        assert!(m.mul_vec(v).iter().all(Field::is_zero));
    }

    #[test]
    fn determinant_and_inverse() {
        let m = mat(&[&[2, 1], &[7, 4]]);
        assert_eq!(m.determinant(), q(1));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
        assert!(mat(&[&[1, 2], &[2, 4]]).inverse().is_none());
        assert_eq!(mat(&[&[0, 1], &[1, 0]]).determinant(), q(-1));
    }

    #[test]
    fn solver_detects_inconsistency() {
        let m = mat(&[&[1, 1], &[2, 2]]);
        let s = LinearSolver::new(&m);
        assert!(s.solve(&[q(1), q(3)]).is_none());
        let x = s.solve(&[q(1), q(2)]).unwrap();
        assert_eq!(m.mul_vec(&x), vec![q(1), q(2)]);
    }

    #[test]
    fn subspace_operations() {
        let a = Subspace::from_vectors(3, vec![vec![q(1), q(0), q(0)], vec![q(0), q(1), q(0)]]);
        let b = Subspace::from_vectors(3, vec![vec![q(0), q(1), q(1)], vec![q(1), q(1), q(0)]]);
        let i = a.intersection(&b);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&[q(1), q(1), q(0)]));
        assert_eq!(a.sum(&b).dim(), 3);
        let c = a.complement_of(&i);
        assert_eq!(c.dim(), 1);
        let quo = Quotient::new(i.clone());
        assert_eq!(quo.dim(), 2);
        assert!(quo.project(&[q(2), q(2), q(0)]).iter().all(Field::is_zero));
    }

    fn small_vecs() -> impl Strategy<Value = Vec<Vec<i64>>> {
        prop::collection::vec(prop::collection::vec(-3i64..4, 4), 0..6)
    }

    proptest! {
        #[test]
        fn canonical_form_ignores_generating_set(vs in small_vecs(), perm_seed in 0usize..24) {
            let rows: Vec<Vec<Rational>> = vs.iter().map(|v| v.iter().map(|&x| q(x)).collect()).collect();
            let a = Subspace::from_vectors(4, rows.clone());
            let mut shuffled = rows.clone();
            if !shuffled.is_empty() {
                let k = perm_seed % shuffled.len();
                shuffled.rotate_left(k);
                let extra: Vec<Rational> = shuffled.iter().fold(vec![q(0); 4], |acc, r| {
                    acc.iter().zip(r).map(|(x, y)| x.add(y)).collect()
                });
                shuffled.push(extra);
            }
            let b = Subspace::from_vectors(4, shuffled);
            prop_assert_eq!(&a, &b);
            let mut c = Subspace::zero(4);
            for r in rows {
                c.insert(r);
            }
            prop_assert_eq!(a, c);
        }

        #[test]
        fn rank_nullity(vs in small_vecs()) {
            prop_assume!(!vs.is_empty());
            let m = Matrix::from_rows(vs.iter().map(|v| v.iter().map(|&x| q(x)).collect()).collect(), 4);
            prop_assert_eq!(m.rank() + m.nullspace().dim(), 4);
            prop_assert_eq!(m.column_space().dim(), m.row_space().dim());
        }
    }

    #[test]
    fn coset_coordinates() {
        let num = Subspace::from_vectors(3, vec![vec![q(1), q(0), q(0)], vec![q(0), q(1), q(1)]]);
        let den = Subspace::from_vectors(3, vec![vec![q(1), q(1), q(1)]]);
        let c = CosetSpace::new(num, den);
        assert_eq!(c.dim(), 1);
        let r = c.representative(0).to_vec();
        assert_eq!(c.coordinates(&r), Some(vec![q(1)]));
        assert_eq!(c.coordinates(&[q(1), q(1), q(1)]), Some(vec![q(0)]));
        let v = vec![q(3), q(1), q(1)];
        let back = c.combine(&c.coordinates(&v).unwrap());
        let diff: Vec<_> = v.iter().zip(&back).map(|(a, b)| a.sub(b)).collect();
        assert!(c.denominator().contains(&diff));
        assert_eq!(c.coordinates(&[q(0), q(0), q(1)]), None);
    }
}
