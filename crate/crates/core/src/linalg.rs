//! Dense integer matrices, Smith normal form, and sparse row echelon bases
//! over an arbitrary exact field.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::scalar::{EuclideanInt, Field};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone + Zero> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<T>>, cols: usize) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix row");
            data.extend(r);
        }
        Matrix {
            rows: n,
            cols,
            data,
        }
    }
}

impl<T: Clone + Zero + One> Matrix<T> {
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }
}

impl<T> Matrix<T> {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }
}

impl<T: Clone> Matrix<T> {
    pub fn to_rows(&self) -> Vec<Vec<T>> {
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

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }
}

impl<T> Matrix<T>
where
    T: Clone + Zero + std::ops::Mul<Output = T> + std::ops::Add<Output = T>,
{
    pub fn mul(&self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let mut out: Matrix<T> = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = out[(i, j)].clone() + a.clone() * rhs[(k, j)].clone();
                    out[(i, j)] = v;
                }
            }
        }
        out
    }
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[i * self.cols..(i + 1) * self.cols])?;
        }
        write!(f, "]")
    }
}

/// Result of a Smith normal form computation: `u * m * v` is the diagonal
/// matrix with entries `diagonal` (padded with zeros), and `u`, `v` are
/// unimodular.
#[derive(Clone, Debug)]
pub struct SmithForm<T> {
    pub diagonal: Vec<T>,
    pub u: Matrix<T>,
    pub v: Matrix<T>,
}

impl<T: EuclideanInt> SmithForm<T> {
    /// Nonzero invariant factors different from one.
    pub fn torsion(&self) -> Vec<T> {
        self.diagonal
            .iter()
            .filter(|d| !d.is_zero() && !d.is_one())
            .cloned()
            .collect()
    }

    /// Free rank of the cokernel of the matrix viewed as a relation matrix
    /// (rows are relators, columns generators).
    pub fn cokernel_free_rank(&self) -> usize {
        let nonzero = self.diagonal.iter().filter(|d| !d.is_zero()).count();
        self.v.rows() - nonzero
    }
}

fn add_row_multiple<T: EuclideanInt>(m: &mut Matrix<T>, target: usize, src: usize, q: &T) {
    for j in 0..m.cols {
        let v = m[(target, j)].clone() + q.clone() * m[(src, j)].clone();
        m[(target, j)] = v;
    }
}

fn add_col_multiple<T: EuclideanInt>(m: &mut Matrix<T>, target: usize, src: usize, q: &T) {
    for i in 0..m.rows {
        let v = m[(i, target)].clone() + q.clone() * m[(i, src)].clone();
        m[(i, target)] = v;
    }
}

/// Smith normal form over the integers with unimodular transforms.
pub fn smith_normal_form<T: EuclideanInt>(m: &Matrix<T>) -> SmithForm<T> {
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.clone();
    let mut u = Matrix::<T>::identity(rows);
    let mut v = Matrix::<T>::identity(cols);

    for t in 0..rows.min(cols) {
        // smallest nonzero entry of the trailing block becomes the pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                let x = &a[(i, j)];
                if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < a[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap_rows(t, pi);
        u.swap_rows(t, pi);
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            for i in t + 1..rows {
                if !a[(i, t)].is_zero() {
                    let q = -(a[(i, t)].clone() / a[(t, t)].clone());
                    add_row_multiple(&mut a, i, t, &q);
                    add_row_multiple(&mut u, i, t, &q);
                }
            }
            for j in t + 1..cols {
                if !a[(t, j)].is_zero() {
                    let q = -(a[(t, j)].clone() / a[(t, t)].clone());
                    add_col_multiple(&mut a, j, t, &q);
                    add_col_multiple(&mut v, j, t, &q);
                }
            }

            // a remainder left in the pivot row or column is smaller than the pivot
            let col_rem = (t + 1..rows)
                .filter(|&i| !a[(i, t)].is_zero())
                .min_by(|&x, &y| a[(x, t)].abs().cmp(&a[(y, t)].abs()));
            if let Some(i) = col_rem {
                a.swap_rows(t, i);
                u.swap_rows(t, i);
                continue;
            }
            let row_rem = (t + 1..cols)
                .filter(|&j| !a[(t, j)].is_zero())
                .min_by(|&x, &y| a[(t, x)].abs().cmp(&a[(t, y)].abs()));
            if let Some(j) = row_rem {
                a.swap_cols(t, j);
                v.swap_cols(t, j);
                continue;
            }

            let pivot = a[(t, t)].clone();
            let bad_row = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !(a[(i, j)].clone() % pivot.clone()).is_zero()));
            match bad_row {
                Some(i) => {
                    let one = T::one();
                    add_row_multiple(&mut a, t, i, &one);
                    add_row_multiple(&mut u, t, i, &one);
                }
                None => break,
            }
        }

        if a[(t, t)].is_negative() {
            for j in 0..cols {
                a[(t, j)] = -a[(t, j)].clone();
            }
            for j in 0..rows {
                u[(t, j)] = -u[(t, j)].clone();
            }
        }
    }

    let diagonal = (0..rows.min(cols)).map(|i| a[(i, i)].clone()).collect();
    SmithForm { diagonal, u, v }
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn determinant<T: EuclideanInt>(m: &Matrix<T>) -> T {
    assert_eq!(m.rows, m.cols, "determinant of a non-square matrix");
    let n = m.rows;
    if n == 0 {
        return T::one();
    }
    let mut a = m.clone();
    let mut sign = T::one();
    let mut prev = T::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                Some(i) => {
                    a.swap_rows(k, i);
                    sign = -sign;
                }
                None => return T::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[(i, j)].clone() * a[(k, k)].clone() - a[(i, k)].clone() * a[(k, j)].clone();
                a[(i, j)] = num / prev.clone();
            }
        }
        prev = a[(k, k)].clone();
    }
    sign * a[(n - 1, n - 1)].clone()
}

/// A sparse vector: strictly increasing column indices with nonzero values.
pub type SparseRow<F> = Vec<(usize, F)>;

fn axpy<F: Field>(row: &SparseRow<F>, scale: &F, pivot: &SparseRow<F>) -> SparseRow<F> {
    // row - scale * pivot
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let ci = row.get(i).map(|e| e.0);
        let cj = pivot.get(j).map(|e| e.0);
        match (ci, cj) {
            (Some(a), Some(b)) if a == b => {
                let v = row[i].1.clone() - scale.clone() * pivot[j].1.clone();
                if !v.is_zero() {
                    out.push((a, v));
                }
                i += 1;
                j += 1;
            }
            (Some(a), Some(b)) if a < b => {
                out.push(row[i].clone());
                i += 1;
            }
            (Some(_), None) => {
                out.push(row[i].clone());
                i += 1;
            }
            (_, Some(b)) => {
                out.push((b, -(scale.clone() * pivot[j].1.clone())));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

/// Incrementally built echelon basis of a row space over `F`.
#[derive(Clone, Debug)]
pub struct RowSpace<F> {
    width: usize,
    pivots: BTreeMap<usize, SparseRow<F>>,
}

impl<F: Field> RowSpace<F> {
    pub fn new(width: usize) -> Self {
        RowSpace {
            width,
            pivots: BTreeMap::new(),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn sparse(dense: &[F]) -> SparseRow<F> {
        dense
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (i, v.clone()))
            .collect()
    }

    /// Eliminates leading terms against the stored pivots. The result is zero
    /// exactly when `row` lies in the span.
    pub fn reduce(&self, row: SparseRow<F>) -> SparseRow<F> {
        let mut row = row;
        while let Some((lead, coeff)) = row.first().cloned() {
            match self.pivots.get(&lead) {
                Some(p) => row = axpy(&row, &coeff, p),
                None => break,
            }
        }
        row
    }

    /// Adds a row; returns whether it enlarged the space.
    pub fn insert(&mut self, row: SparseRow<F>) -> bool {
        debug_assert!(row.iter().all(|(c, _)| *c < self.width));
        let reduced = self.reduce(row);
        match reduced.first().cloned() {
            None => false,
            Some((lead, coeff)) => {
                let inv = F::one() / coeff;
                let normalized = reduced
                    .into_iter()
                    .map(|(c, v)| (c, v * inv.clone()))
                    .collect();
                self.pivots.insert(lead, normalized);
                true
            }
        }
    }

    pub fn contains(&self, row: SparseRow<F>) -> bool {
        self.reduce(row).is_empty()
    }
}

/// Rank of an integer matrix over the prime field Z/p (p must be prime).
pub(crate) fn rank_mod_prime(rows: &[Vec<u32>], cols: usize, p: u32) -> usize {
    let p = p as u64;
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as u64 % p).collect())
        .collect();
    let mut rank = 0;
    for c in 0..cols {
        let Some(pr) = (rank..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(rank, pr);
        let inv = mod_inverse(m[rank][c], p);
        for x in m[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..m.len() {
            if i != rank && m[i][c] != 0 {
                let f = m[i][c];
                let pivot = m[rank].clone();
                for (x, y) in m[i].iter_mut().zip(pivot) {
                    *x = (*x + p * p - f * y) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (p as i64, a as i64);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    t.rem_euclid(p as i64) as u64
}
