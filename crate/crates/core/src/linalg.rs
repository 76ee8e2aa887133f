//! Dense exact linear algebra over ℚ(i).
//!
//! All routines use Gauss-Jordan elimination with the first nonzero entry of
//! each column as pivot, so echelon forms, kernel bases and particular
//! solutions are reproducible bit for bit.

use crate::scalar::GaussianRational;

pub type Vector = Vec<GaussianRational>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<GaussianRational>>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![vec![GaussianRational::zero(); cols]; rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 0..n {
            m.data[k][k] = GaussianRational::one();
        }
        m
    }

    /// Builds a matrix from row vectors. All rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vector>) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Matrix {
            rows: rows.len(),
            cols,
            data: rows,
        }
    }

    /// Builds a matrix whose columns are the given vectors of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vector]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (r, v) in col.iter().enumerate() {
                m.data[r][c] = v.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &GaussianRational {
        &self.data[r][c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: GaussianRational) {
        self.data[r][c] = v;
    }

    pub fn row(&self, r: usize) -> &[GaussianRational] {
        &self.data[r]
    }

    pub fn column(&self, c: usize) -> Vector {
        self.data.iter().map(|row| row[c].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().flatten().all(GaussianRational::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c][r] = self.data[r][c].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[r][k];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other.data[k][c];
                    if !b.is_zero() {
                        out.data[r][c] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[GaussianRational]) -> Vector {
        assert_eq!(self.cols, v.len(), "dimension mismatch in apply");
        self.data
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(GaussianRational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn rref(&self) -> Echelon {
        Echelon::reduce(self.cols, self.data.clone())
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of the null space, one vector per free column in increasing order.
    pub fn kernel(&self) -> Vec<Vector> {
        let ech = self.rref();
        let mut pivot_row = vec![None; self.cols];
        for (r, &p) in ech.pivots.iter().enumerate() {
            pivot_row[p] = Some(r);
        }
        (0..self.cols)
            .filter(|&f| pivot_row[f].is_none())
            .map(|f| {
                let mut v = vec![GaussianRational::zero(); self.cols];
                v[f] = GaussianRational::one();
                for (r, &p) in ech.pivots.iter().enumerate() {
                    v[p] = -&ech.rows[r][f];
                }
                v
            })
            .collect()
    }

    /// Particular solution of `self · x = b` with every free variable set to zero.
    pub fn solve(&self, b: &[GaussianRational]) -> Option<Vector> {
        assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
        let augmented: Vec<Vector> = self
            .data
            .iter()
            .zip(b)
            .map(|(row, rhs)| {
                let mut r = row.clone();
                r.push(rhs.clone());
                r
            })
            .collect();
        let ech = Echelon::reduce(self.cols + 1, augmented);
        if ech.pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![GaussianRational::zero(); self.cols];
        for (r, &p) in ech.pivots.iter().enumerate() {
            x[p] = ech.rows[r][self.cols].clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let augmented: Vec<Vector> = self
            .data
            .iter()
            .enumerate()
            .map(|(r, row)| {
                let mut out = row.clone();
                out.extend((0..n).map(|c| {
                    if c == r {
                        GaussianRational::one()
                    } else {
                        GaussianRational::zero()
                    }
                }));
                out
            })
            .collect();
        let ech = Echelon::reduce(2 * n, augmented);
        if ech.pivots.len() < n || ech.pivots[n - 1] != n - 1 {
            return None;
        }
        let rows = ech.rows.into_iter().map(|r| r[n..].to_vec()).collect();
        Some(Matrix::from_rows(n, rows))
    }
}

/// Reduced row echelon form: nonzero rows only, each with a leading one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    pub rows: Vec<Vector>,
    pub pivots: Vec<usize>,
}

impl Echelon {
    fn reduce(cols: usize, mut rows: Vec<Vector>) -> Echelon {
        let mut pivots = Vec::new();
        let mut next = 0;
        for col in 0..cols {
            if next == rows.len() {
                break;
            }
            let Some(found) = (next..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows.swap(next, found);
            let inv = rows[next][col].inv().expect("pivot is nonzero");
            if !inv.is_one() {
                for v in rows[next].iter_mut().skip(col) {
                    if !v.is_zero() {
                        *v = &*v * &inv;
                    }
                }
            }
            let pivot_row = rows[next].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r == next || row[col].is_zero() {
                    continue;
                }
                let factor = row[col].clone();
                for (v, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                    if !p.is_zero() {
                        *v -= &factor * p;
                    }
                }
            }
            pivots.push(col);
            next += 1;
        }
        rows.truncate(next);
        Echelon { rows, pivots }
    }
}

/// A subspace of ℚ(i)^n held as a reduced echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    echelon: Echelon,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            echelon: Echelon {
                rows: Vec::new(),
                pivots: Vec::new(),
            },
        }
    }

    pub fn span(ambient: usize, vectors: impl IntoIterator<Item = Vector>) -> Self {
        let rows: Vec<Vector> = vectors.into_iter().collect();
        assert!(rows.iter().all(|r| r.len() == ambient), "vector length mismatch");
        Subspace {
            ambient,
            echelon: Echelon::reduce(ambient, rows),
        }
    }

    /// Column space of a matrix.
    pub fn column_space(m: &Matrix) -> Self {
        Subspace {
            ambient: m.rows(),
            echelon: m.transpose().rref(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.echelon.pivots.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.echelon.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.echelon.pivots
    }

    /// Subtracts multiples of the basis so every pivot coordinate of the result is zero.
    /// This is a projection whose kernel is exactly the subspace.
    pub fn reduce(&self, v: &[GaussianRational]) -> Vector {
        let mut out = v.to_vec();
        for (row, &p) in self.echelon.rows.iter().zip(&self.echelon.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let factor = out[p].clone();
            for (x, b) in out.iter_mut().zip(row) {
                if !b.is_zero() {
                    *x -= &factor * b;
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[GaussianRational]) -> bool {
        self.reduce(v).iter().all(GaussianRational::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis().iter().all(|v| self.contains(v))
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is outside the span.
    pub fn coordinates(&self, v: &[GaussianRational]) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(self.echelon.pivots.iter().map(|&p| v[p].clone()).collect())
    }
}
