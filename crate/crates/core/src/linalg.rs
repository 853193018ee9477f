//! Dense exact linear algebra over a [`Field`].

use alloc::vec;
use alloc::vec::Vec;

use crate::field::Field;

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn filled(rows: usize, cols: usize, value: E) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    pub fn zeros<F: Field<Elem = E>>(field: &F, rows: usize, cols: usize) -> Self {
        Self::filled(rows, cols, field.zero())
    }

    pub fn identity<F: Field<Elem = E>>(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<E>>, cols: usize) -> Self {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix");
            data.extend(row);
        }
        Matrix {
            rows: r,
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [E] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self[(i, j)].clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn mul<F: Field<Elem = E>>(&self, field: &F, rhs: &Matrix<E>) -> Matrix<E> {
        assert_eq!(self.cols, rhs.rows);
        let mut out = Matrix::zeros(field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if field.is_zero(a) {
                    continue;
                }
                let src = rhs.row(k);
                let dst = out.row_mut(i);
                for (d, b) in dst.iter_mut().zip(src) {
                    *d = field.mul_add(d, a, b);
                }
            }
        }
        out
    }

    pub fn mul_vec<F: Field<Elem = E>>(&self, field: &F, v: &[E]) -> Vec<E> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(field.zero(), |acc, (a, b)| field.mul_add(&acc, a, b))
            })
            .collect()
    }

    /// Row vector times matrix.
    pub fn vec_mul<F: Field<Elem = E>>(&self, field: &F, v: &[E]) -> Vec<E> {
        assert_eq!(self.rows, v.len());
        let mut out = vec![field.zero(); self.cols];
        for (k, a) in v.iter().enumerate() {
            if field.is_zero(a) {
                continue;
            }
            for (d, b) in out.iter_mut().zip(self.row(k)) {
                *d = field.mul_add(d, a, b);
            }
        }
        out
    }

    pub fn add<F: Field<Elem = E>>(&self, field: &F, rhs: &Matrix<E>) -> Matrix<E> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| field.add(a, b))
                .collect(),
        }
    }

    pub fn scale<F: Field<Elem = E>>(&self, field: &F, c: &E) -> Matrix<E> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| field.mul(a, c)).collect(),
        }
    }

    pub fn is_zero<F: Field<Elem = E>>(&self, field: &F) -> bool {
        self.data.iter().all(|a| field.is_zero(a))
    }
}

impl<E> core::ops::Index<(usize, usize)> for Matrix<E> {
    type Output = E;
    fn index(&self, (i, j): (usize, usize)) -> &E {
        &self.data[i * self.cols + j]
    }
}

impl<E> core::ops::IndexMut<(usize, usize)> for Matrix<E> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut E {
        &mut self.data[i * self.cols + j]
    }
}

/// `dst -= c * src` on row slices.
fn axpy<F: Field>(field: &F, dst: &mut [F::Elem], c: &F::Elem, src: &[F::Elem]) {
    let neg = field.neg(c);
    for (d, s) in dst.iter_mut().zip(src) {
        if !field.is_zero(s) {
            *d = field.mul_add(d, &neg, s);
        }
    }
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref<F: Field>(field: &F, m: &mut Matrix<F::Elem>) -> Vec<usize> {
    let (rows, cols) = (m.rows, m.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !field.is_zero(&m[(i, c)])) else {
            continue;
        };
        if pr != r {
            for j in c..cols {
                m.data.swap(pr * cols + j, r * cols + j);
            }
        }
        let inv = field.inv(&m[(r, c)]).expect("pivot is nonzero");
        for j in c..cols {
            m[(r, j)] = field.mul(&m[(r, j)], &inv);
        }
        let pivot_row: Vec<F::Elem> = m.row(r)[c..].to_vec();
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = m[(i, c)].clone();
            if field.is_zero(&f) {
                continue;
            }
            axpy(field, &mut m.row_mut(i)[c..], &f, &pivot_row);
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(field: &F, m: &Matrix<F::Elem>) -> usize {
    let mut m = m.clone();
    rref(field, &mut m).len()
}

/// Basis of `{v : M v = 0}`, one vector per free column, with that free
/// coordinate 1 and the other free coordinates 0.
pub fn nullspace<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    let mut r = m.clone();
    let pivots = rref(field, &mut r);
    let mut is_pivot = vec![None; m.cols];
    for (row, &c) in pivots.iter().enumerate() {
        is_pivot[c] = Some(row);
    }
    let mut basis = Vec::new();
    for free in (0..m.cols).filter(|&c| is_pivot[c].is_none()) {
        let mut v = vec![field.zero(); m.cols];
        v[free] = field.one();
        for (row, &c) in pivots.iter().enumerate() {
            v[c] = field.neg(&r[(row, free)]);
        }
        basis.push(v);
    }
    basis
}

/// Solve `A x = b`. Among all solutions, returns the one whose free
/// (non-pivot) coordinates are zero.
pub fn solve<F: Field>(field: &F, a: &Matrix<F::Elem>, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
    assert_eq!(a.rows, b.len());
    let mut aug = Matrix::zeros(field, a.rows, a.cols + 1);
    for i in 0..a.rows {
        aug.row_mut(i)[..a.cols].clone_from_slice(a.row(i));
        aug[(i, a.cols)] = b[i].clone();
    }
    let pivots = rref(field, &mut aug);
    if pivots.last() == Some(&a.cols) {
        return None;
    }
    let mut x = vec![field.zero(); a.cols];
    for (row, &c) in pivots.iter().enumerate() {
        x[c] = aug[(row, a.cols)].clone();
    }
    Some(x)
}

/// Inverse of a square matrix; `None` if singular.
pub fn inverse<F: Field>(field: &F, a: &Matrix<F::Elem>) -> Option<Matrix<F::Elem>> {
    let n = a.rows;
    assert_eq!(n, a.cols);
    let mut aug = Matrix::zeros(field, n, 2 * n);
    for i in 0..n {
        aug.row_mut(i)[..n].clone_from_slice(a.row(i));
        aug[(i, n + i)] = field.one();
    }
    let pivots = rref(field, &mut aug);
    if pivots.len() < n || (n > 0 && pivots[n - 1] >= n) {
        return None;
    }
    let rows = (0..n).map(|i| aug.row(i)[n..].to_vec()).collect();
    Some(Matrix::from_rows(rows, n))
}

/// Incrementally maintained echelon basis of a subspace of `F^dim`.
///
/// Rows are kept fully reduced against each other's pivots, so membership
/// tests and coordinate extraction are a single sweep.
#[derive(Clone, Debug)]
pub struct EchelonBasis<E> {
    dim: usize,
    rows: Vec<Vec<E>>,
    pivots: Vec<usize>,
}

impl<E: Clone + PartialEq> EchelonBasis<E> {
    pub fn new(dim: usize) -> Self {
        EchelonBasis {
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<E>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduce `v` against the basis; the result is zero iff `v` is in the span.
    pub fn reduce<F: Field<Elem = E>>(&self, field: &F, v: &mut [E]) {
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            if !field.is_zero(&v[c]) {
                let f = v[c].clone();
                axpy(field, v, &f, row);
            }
        }
    }

    pub fn contains<F: Field<Elem = E>>(&self, field: &F, v: &[E]) -> bool {
        let mut w = v.to_vec();
        self.reduce(field, &mut w);
        w.iter().all(|x| field.is_zero(x))
    }

    /// Insert `v`; returns whether the rank grew.
    pub fn insert<F: Field<Elem = E>>(&mut self, field: &F, v: Vec<E>) -> bool {
        assert_eq!(v.len(), self.dim);
        let mut w = v;
        self.reduce(field, &mut w);
        let Some(c) = w.iter().position(|x| !field.is_zero(x)) else {
            return false;
        };
        let inv = field.inv(&w[c]).expect("nonzero");
        for x in w.iter_mut() {
            *x = field.mul(x, &inv);
        }
        for row in self.rows.iter_mut() {
            if !field.is_zero(&row[c]) {
                let f = row[c].clone();
                axpy(field, row, &f, &w);
            }
        }
        self.rows.push(w);
        self.pivots.push(c);
        true
    }

    /// Coordinates of a member `v` with respect to `rows()`; `None` if `v`
    /// is not in the span.
    pub fn coordinates<F: Field<Elem = E>>(&self, field: &F, v: &[E]) -> Option<Vec<E>> {
        let coords: Vec<E> = self.pivots.iter().map(|&c| v[c].clone()).collect();
        let mut w = v.to_vec();
        self.reduce(field, &mut w);
        w.iter().all(|x| field.is_zero(x)).then_some(coords)
    }

    /// Rows sorted by pivot column, giving the canonical reduced echelon form.
    pub fn canonical_rows(&self) -> Vec<Vec<E>> {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| self.pivots[i]);
        order.into_iter().map(|i| self.rows[i].clone()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::gf::FiniteField;

    #[test]
    fn nullspace_and_rank_over_f5() {
        let k = FiniteField::prime(5).unwrap();
        let e = |v: i64| k.from_i64(v);
        let m = Matrix::from_rows(
            vec![vec![e(1), e(2), e(3)], vec![e(2), e(4), e(2)]],
            3,
        );
        assert_eq!(rank(&k, &m), 2);
        let ns = nullspace(&k, &m);
        assert_eq!(ns.len(), 1);
        assert!(m.mul_vec(&k, &ns[0]).iter().all(|x| k.is_zero(x)));
    }

    #[test]
    fn solve_prefers_zero_free_coordinates() {
        let q = Rationals;
        let e = |v: i64| q.from_i64(v);
        // x + y = 2 has solution (2, 0) with y free.
        let a = Matrix::from_rows(vec![vec![e(1), e(1)]], 2);
        assert_eq!(solve(&q, &a, &[e(2)]).unwrap(), vec![e(2), e(0)]);
        let a = Matrix::from_rows(vec![vec![e(1), e(1)], vec![e(2), e(2)]], 2);
        assert!(solve(&q, &a, &[e(1), e(3)]).is_none());
    }

    #[test]
    fn echelon_basis_membership() {
        let k = FiniteField::prime(3).unwrap();
        let e = |v: i64| k.from_i64(v);
        let mut b = EchelonBasis::new(3);
        assert!(b.insert(&k, vec![e(1), e(1), e(0)]));
        assert!(b.insert(&k, vec![e(0), e(1), e(1)]));
        assert!(!b.insert(&k, vec![e(1), e(2), e(1)]));
        assert!(b.contains(&k, &[e(1), e(0), e(2)]));
        assert!(!b.contains(&k, &[e(0), e(0), e(1)]));
        let c = b.coordinates(&k, &[e(1), e(2), e(1)]).unwrap();
        let rebuilt: Vec<_> = (0..3)
            .map(|j| k.add(&k.mul(&c[0], &b.rows()[0][j]), &k.mul(&c[1], &b.rows()[1][j])))
            .collect();
        assert_eq!(rebuilt, vec![e(1), e(2), e(1)]);
    }
}
