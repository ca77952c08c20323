use std::fmt;

use super::field::{Fp, PrimeField};
use crate::error::{Error, Result};

/// Dense row-major matrix over a prime field.
///
/// Zero-row and zero-column shapes are legal and behave as zero maps.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<Fp>,
}

/// Reduced row-echelon form together with rank and pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % field.p();
        }
        m
    }

    pub fn from_vec(field: PrimeField, rows: usize, cols: usize, data: Vec<Fp>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length");
        debug_assert!(data.iter().all(|&x| x < field.p()));
        Matrix { field, rows, cols, data }
    }

    /// Builds from signed integer rows, reducing mod p.
    pub fn from_rows(field: PrimeField, rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().map(|&v| field.from_i64(v)));
        }
        Matrix { field, rows: r, cols: c, data }
    }

    /// Matrix whose columns are the given vectors (each of length `rows`).
    pub fn from_columns(field: PrimeField, rows: usize, columns: &[Vec<Fp>]) -> Self {
        let cols = columns.len();
        let mut m = Self::zeros(field, rows, cols);
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (i, &v) in col.iter().enumerate() {
                m.data[i * cols + j] = v;
            }
        }
        m
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }
    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }
    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }
    #[inline]
    pub fn data(&self) -> &[Fp] {
        &self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Fp {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Fp) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Fp] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Fp> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Fp>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let f = self.field;
        let p = f.p() as u64;
        let mut out = vec![0u64; self.rows * other.cols];
        for i in 0..self.rows {
            let out_row = &mut out[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k] as u64;
                if a == 0 {
                    continue;
                }
                let brow = &other.data[k * other.cols..(k + 1) * other.cols];
                for (o, &b) in out_row.iter_mut().zip(brow) {
                    *o = (*o + a * b as u64) % p;
                }
            }
        }
        Matrix {
            field: f,
            rows: self.rows,
            cols: other.cols,
            data: out.into_iter().map(|x| x as Fp).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[Fp]) -> Vec<Fp> {
        assert_eq!(self.cols, v.len());
        let f = self.field;
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &b)| f.mul_add(acc, a, b))
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Matrix { field: f, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect();
        Matrix { field: f, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: Fp) -> Matrix {
        let f = self.field;
        let data = self.data.iter().map(|&a| f.mul(a, s)).collect();
        Matrix { field: f, rows: self.rows, cols: self.cols, data }
    }

    /// Horizontal concatenation; all blocks must share the row count.
    pub fn hstack(field: PrimeField, rows: usize, blocks: &[&Matrix]) -> Matrix {
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut m = Matrix::zeros(field, rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.rows, rows, "hstack row mismatch");
            m.set_block(0, off, b);
            off += b.cols;
        }
        m
    }

    /// Vertical concatenation; all blocks must share the column count.
    pub fn vstack(field: PrimeField, cols: usize, blocks: &[&Matrix]) -> Matrix {
        let rows: usize = blocks.iter().map(|b| b.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack column mismatch");
            data.extend_from_slice(&b.data);
        }
        Matrix { field, rows, cols, data }
    }

    /// Block-diagonal sum.
    pub fn block_diag(field: PrimeField, blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Matrix::zeros(field, rows, cols);
        let (mut r, mut c) = (0, 0);
        for b in blocks {
            m.set_block(r, c, b);
            r += b.rows;
            c += b.cols;
        }
        m
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Matrix) {
        assert!(r0 + b.rows <= self.rows && c0 + b.cols <= self.cols, "block out of range");
        for r in 0..b.rows {
            let dst = (r0 + r) * self.cols + c0;
            self.data[dst..dst + b.cols].copy_from_slice(b.row(r));
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        let mut m = Matrix::zeros(self.field, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.data[r * cols + c] = self.get(r0 + r, c0 + c);
            }
        }
        m
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &r in idx {
            data.extend_from_slice(self.row(r));
        }
        Matrix { field: self.field, rows: idx.len(), cols: self.cols, data }
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.rows, idx.len());
        for r in 0..self.rows {
            for (j, &c) in idx.iter().enumerate() {
                m.data[r * idx.len() + j] = self.get(r, c);
            }
        }
        m
    }

    /// Reduced row-echelon form with leftmost pivots.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        Rref { rank: pivots.len(), pivots, matrix: m }
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field;
        let p = f.p() as u64;
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut pr = 0;
        for c in 0..cols {
            if pr == rows {
                break;
            }
            let Some(sel) = (pr..rows).find(|&r| self.data[r * cols + c] != 0) else {
                continue;
            };
            if sel != pr {
                for k in 0..cols {
                    self.data.swap(sel * cols + k, pr * cols + k);
                }
            }
            let inv = f.inv(self.data[pr * cols + c]) as u64;
            for k in c..cols {
                let v = &mut self.data[pr * cols + k];
                *v = ((*v as u64 * inv) % p) as Fp;
            }
            let (before, rest) = self.data.split_at_mut(pr * cols);
            let (pivot_row, after) = rest.split_at_mut(cols);
            for other in before.chunks_mut(cols).chain(after.chunks_mut(cols)) {
                let factor = other[c];
                if factor == 0 {
                    continue;
                }
                let neg = p - factor as u64;
                for k in c..cols {
                    other[k] = ((other[k] as u64 + neg * pivot_row[k] as u64) % p) as Fp;
                }
            }
            pivots.push(c);
            pr += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Columns form a basis of the null space, one per free column, in free-column order.
    pub fn kernel_basis(&self) -> Matrix {
        let f = self.field;
        let Rref { matrix: r, pivots, .. } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut k = Matrix::zeros(f, self.cols, free.len());
        for (j, &fc) in free.iter().enumerate() {
            k.set(fc, j, 1 % f.p());
            for (row, &pc) in pivots.iter().enumerate() {
                k.set(pc, j, f.neg(r.get(row, fc)));
            }
        }
        k
    }

    /// A particular solution of `self * x = b` (free variables set to zero).
    pub fn solve(&self, b: &Matrix) -> Result<Matrix> {
        assert_eq!(self.rows, b.rows, "solve: row mismatch");
        let f = self.field;
        let aug = Matrix::hstack(f, self.rows, &[self, b]);
        let Rref { matrix: r, pivots, .. } = aug.rref();
        if pivots.iter().any(|&c| c >= self.cols) {
            return Err(Error::NoSolution);
        }
        let mut x = Matrix::zeros(f, self.cols, b.cols);
        for (row, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pc, j, r.get(row, self.cols + j));
            }
        }
        Ok(x)
    }

    pub fn solve_vec(&self, b: &[Fp]) -> Result<Vec<Fp>> {
        let bm = Matrix::from_columns(self.field, self.rows, &[b.to_vec()]);
        Ok(self.solve(&bm)?.column(0))
    }

    /// Columns of `self` at pivot positions: a basis of the column space.
    pub fn image_basis(&self) -> Matrix {
        let piv = self.rref().pivots;
        self.select_cols(&piv)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        self.solve(&Matrix::identity(self.field, self.rows)).ok().filter(|_| self.rank() == self.rows)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn pow(&self, mut e: u32) -> Matrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn trace(&self) -> Fp {
        let f = self.field;
        (0..self.rows.min(self.cols)).fold(0, |acc, i| f.add(acc, self.get(i, i)))
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(fm, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(fm, "; ")?;
            }
            let row: Vec<String> =
                self.row(r).iter().map(|&v| self.field.to_signed(v).to_string()).collect();
            write!(fm, "{}", row.join(" "))?;
        }
        write!(fm, "]")
    }
}

/// Row-reduces a set of vectors and keeps the subset that extends the span of `base`.
///
/// Returns indices into `candidates` that are linearly independent modulo span(`base`),
/// chosen greedily in order.
pub fn extend_basis(field: PrimeField, len: usize, base: &[Vec<Fp>], candidates: &[Vec<Fp>]) -> Vec<usize> {
    let mut echelon = Echelon::new(field, len);
    for b in base {
        echelon.insert(b.clone());
    }
    let mut chosen = Vec::new();
    for (i, c) in candidates.iter().enumerate() {
        if echelon.insert(c.clone()) {
            chosen.push(i);
        }
    }
    chosen
}

/// Incrementally maintained echelon basis of a subspace of F_p^len.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: PrimeField,
    len: usize,
    rows: Vec<(usize, Vec<Fp>)>,
}

impl Echelon {
    pub fn new(field: PrimeField, len: usize) -> Self {
        Echelon { field, len, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the current rows; returns the remainder.
    pub fn reduce(&self, mut v: Vec<Fp>) -> Vec<Fp> {
        let f = self.field;
        for (pc, row) in &self.rows {
            let c = v[*pc];
            if c != 0 {
                let neg = f.neg(c);
                for (x, &y) in v.iter_mut().zip(row) {
                    if y != 0 {
                        *x = f.mul_add(*x, neg, y);
                    }
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Fp]) -> bool {
        self.reduce(v.to_vec()).iter().all(|&x| x == 0)
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: Vec<Fp>) -> bool {
        assert_eq!(v.len(), self.len);
        let f = self.field;
        let mut r = self.reduce(v);
        let Some(pc) = r.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv(r[pc]);
        for x in r.iter_mut() {
            *x = f.mul(*x, inv);
        }
        for (_, row) in self.rows.iter_mut() {
            let c = row[pc];
            if c != 0 {
                let neg = f.neg(c);
                for (x, &y) in row.iter_mut().zip(&r) {
                    if y != 0 {
                        *x = f.mul_add(*x, neg, y);
                    }
                }
            }
        }
        self.rows.push((pc, r));
        true
    }

    pub fn basis(&self) -> Vec<Vec<Fp>> {
        self.rows.iter().map(|(_, r)| r.clone()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> PrimeField {
        PrimeField::new(5).unwrap()
    }

    #[test]
    fn rref_identity_and_zero() {
        let f = PrimeField::default();
        let i = Matrix::identity(f, 2);
        let r = i.rref();
        assert_eq!(r.matrix, i);
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivots, vec![0, 1]);

        let z = Matrix::zeros(f, 1, 1);
        let r = z.rref();
        assert_eq!(r.matrix, z);
        assert_eq!(r.rank, 0);
        assert!(r.pivots.is_empty());
    }

    #[test]
    fn rref_rank_one_over_f5() {
        // hand elimination: R2 <- R2 - 2 R1 gives [[1,2],[0,0]]
        let m = Matrix::from_rows(f5(), &[vec![1, 2], vec![2, 4]]);
        let r = m.rref();
        assert_eq!(r.matrix, Matrix::from_rows(f5(), &[vec![1, 2], vec![0, 0]]));
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivots, vec![0]);
    }

    #[test]
    fn kernel_examples() {
        let f = PrimeField::default();
        assert_eq!(Matrix::identity(f, 3).kernel_basis().cols(), 0);
        assert_eq!(Matrix::zeros(f, 3, 3).kernel_basis(), Matrix::identity(f, 3));

        // x + 2y = 0 over F_5: enumerate all 25 pairs, the solutions are the multiples of (3,1)
        let m = Matrix::from_rows(f5(), &[vec![1, 2]]);
        let k = m.kernel_basis();
        assert_eq!(k.cols(), 1);
        let sols: Vec<(u32, u32)> = (0..5u32)
            .flat_map(|x| (0..5u32).map(move |y| (x, y)))
            .filter(|&(x, y)| (x + 2 * y) % 5 == 0)
            .collect();
        assert_eq!(sols.len(), 5);
        let (kx, ky) = (k.get(0, 0), k.get(1, 0));
        assert!(sols.contains(&(kx, ky)) && (kx, ky) != (0, 0));
        // proportional to (3,1)
        assert_eq!((kx + 5 - (ky * 3) % 5) % 5, 0);
    }

    #[test]
    fn solve_examples() {
        let f = PrimeField::default();
        let b = Matrix::from_rows(f, &[vec![3], vec![7]]);
        assert_eq!(Matrix::identity(f, 2).solve(&b).unwrap(), b);
        assert!(matches!(Matrix::zeros(f, 2, 2).solve(&b), Err(Error::NoSolution)));
        let two = Matrix::from_rows(f5(), &[vec![2]]);
        let one = Matrix::from_rows(f5(), &[vec![1]]);
        assert_eq!(two.solve(&one).unwrap(), Matrix::from_rows(f5(), &[vec![3]]));
    }

    #[test]
    fn degenerate_shapes() {
        let f = PrimeField::default();
        let m = Matrix::zeros(f, 0, 3);
        assert_eq!(m.rank(), 0);
        assert_eq!(m.kernel_basis().cols(), 3);
        let n = Matrix::zeros(f, 3, 0);
        assert_eq!(n.kernel_basis().cols(), 0);
        assert_eq!(m.mul(&Matrix::zeros(f, 3, 2)), Matrix::zeros(f, 0, 2));
        assert_eq!(n.mul(&Matrix::zeros(f, 0, 4)), Matrix::zeros(f, 3, 4));
    }

    #[test]
    fn echelon_tracks_span() {
        let f = f5();
        let mut e = Echelon::new(f, 3);
        assert!(e.insert(vec![1, 2, 0]));
        assert!(!e.insert(vec![2, 4, 0]));
        assert!(e.insert(vec![0, 1, 1]));
        assert!(e.contains(&[1, 3, 1]));
        assert!(!e.contains(&[0, 0, 1]));
        assert_eq!(extend_basis(f, 3, &e.basis(), &[vec![1, 0, 0], vec![0, 0, 1]]), vec![0]);
    }
}
