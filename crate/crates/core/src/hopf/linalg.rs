//! Dense exact linear algebra over a prime field.
//!
//! Matrices are row-major `u64` entries reduced mod `p`. Row reduction is
//! full Gauss-Jordan to reduced row echelon form, so equal subspaces have
//! equal basis matrices.

/// Multiplicative inverse mod a prime, by the extended Euclid algorithm.
pub fn fp_inv(a: u64, p: u64) -> u64 {
    let (mut old_r, mut r) = (a as i128, p as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1, "element not invertible");
    old_s.rem_euclid(p as i128) as u64
}

/// A row-major matrix over `F_p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpMat {
    pub p: u64,
    pub rows: usize,
    pub cols: usize,
    data: Vec<u64>,
}

impl FpMat {
    pub fn zeros(p: u64, rows: usize, cols: usize) -> Self {
        FpMat { p, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(p: u64, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(p: u64, cols: usize, rows: &[Vec<u64>]) -> Self {
        let mut m = Self::zeros(p, rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols);
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v % self.p;
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// In-place reduction to reduced row echelon form; returns the pivot
    /// column of each nonzero row, in order.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(pivot_row) = (rank..self.rows).find(|&r| self.get(r, col) != 0) else {
                continue;
            };
            self.swap_rows(rank, pivot_row);
            let inv = fp_inv(self.get(rank, col), self.p);
            self.scale_row(rank, inv);
            for r in 0..self.rows {
                if r != rank && self.get(r, col) != 0 {
                    let factor = self.get(r, col);
                    self.sub_scaled_row(r, rank, factor);
                }
            }
            pivots.push(col);
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            let (va, vb) = (self.get(a, j), self.get(b, j));
            self.set(a, j, vb);
            self.set(b, j, va);
        }
    }

    fn scale_row(&mut self, r: usize, factor: u64) {
        for j in 0..self.cols {
            let v = self.get(r, j);
            self.set(r, j, v * factor % self.p);
        }
    }

    fn sub_scaled_row(&mut self, target: usize, source: usize, factor: u64) {
        for j in 0..self.cols {
            let v = self.get(target, j);
            let s = self.get(source, j) * factor % self.p;
            self.set(target, j, (v + self.p - s) % self.p);
        }
    }
}

/// Canonical basis of the span of `vectors` inside `F_p^dim`: the nonzero
/// rows of the reduced row echelon form.
pub fn row_space_basis(p: u64, dim: usize, vectors: &[Vec<u64>]) -> Vec<Vec<u64>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let mut m = FpMat::from_rows(p, dim, vectors);
    let pivots = m.rref();
    (0..pivots.len()).map(|i| m.row(i).to_vec()).collect()
}

/// Whether `v` lies in the span of the RREF `basis`.
pub fn in_row_space(p: u64, basis: &[Vec<u64>], v: &[u64]) -> bool {
    let mut rows: Vec<Vec<u64>> = basis.to_vec();
    rows.push(v.to_vec());
    let after = row_space_basis(p, v.len(), &rows);
    after.len() == basis.len()
}

/// Basis of the intersection of two row spaces, via the block trick:
/// reduce `[U | U; W | 0]`; rows with zero left half have right half in
/// the intersection.
#[allow(clippy::needless_range_loop)]
pub fn intersect_row_spaces(
    p: u64,
    dim: usize,
    u: &[Vec<u64>],
    w: &[Vec<u64>],
) -> Vec<Vec<u64>> {
    let rows = u.len() + w.len();
    if rows == 0 {
        return Vec::new();
    }
    let mut m = FpMat::zeros(p, rows, 2 * dim);
    for (i, row) in u.iter().enumerate() {
        for j in 0..dim {
            m.set(i, j, row[j]);
            m.set(i, dim + j, row[j]);
        }
    }
    for (i, row) in w.iter().enumerate() {
        for j in 0..dim {
            m.set(u.len() + i, j, row[j]);
        }
    }
    m.rref();
    let mut out = Vec::new();
    for r in 0..rows {
        let left_zero = (0..dim).all(|j| m.get(r, j) == 0);
        let right: Vec<u64> = (0..dim).map(|j| m.get(r, dim + j)).collect();
        if left_zero && right.iter().any(|&v| v != 0) {
            out.push(right);
        }
    }
    row_space_basis(p, dim, &out)
}

/// Inverse of a square matrix, if it is invertible.
pub fn invert(m: &FpMat) -> Option<FpMat> {
    assert_eq!(m.rows, m.cols);
    let n = m.rows;
    let mut aug = FpMat::zeros(m.p, n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            aug.set(i, j, m.get(i, j));
        }
        aug.set(i, n + i, 1);
    }
    let pivots = aug.rref();
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
        return None;
    }
    let mut inv = FpMat::zeros(m.p, n, n);
    for i in 0..n {
        for j in 0..n {
            inv.set(i, j, aug.get(i, n + j));
        }
    }
    Some(inv)
}

/// Matrix-vector product.
pub fn mat_vec(m: &FpMat, v: &[u64]) -> Vec<u64> {
    assert_eq!(m.cols, v.len());
    (0..m.rows)
        .map(|i| (0..m.cols).fold(0u64, |acc, j| (acc + m.get(i, j) * v[j]) % m.p))
        .collect()
}

/// Kronecker product of two coordinate vectors.
pub fn kron(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for &x in a {
        for &y in b {
            out.push(x * y % p);
        }
    }
    out
}

pub fn add_vec(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(&x, &y)| (x + y) % p).collect()
}

pub fn scale_vec(p: u64, a: &[u64], c: u64) -> Vec<u64> {
    a.iter().map(|&x| x * c % p).collect()
}

pub fn is_zero_vec(a: &[u64]) -> bool {
    a.iter().all(|&x| x == 0)
}

pub fn unit_vec(dim: usize, i: usize) -> Vec<u64> {
    let mut v = vec![0; dim];
    v[i] = 1;
    v
}

/// If the vector is a standard basis vector, its index.
pub fn unit_index(v: &[u64]) -> Option<usize> {
    let mut found = None;
    for (i, &x) in v.iter().enumerate() {
        match (x, found) {
            (0, _) => {}
            (1, None) => found = Some(i),
            _ => return None,
        }
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_over_small_primes() {
        for p in [2u64, 3, 5, 7, 11] {
            for a in 1..p {
                assert_eq!(a * fp_inv(a, p) % p, 1);
            }
        }
    }

    #[test]
    fn rref_canonical_form() {
        let mut m = FpMat::from_rows(5, 3, &[vec![2, 4, 1], vec![1, 2, 0]]);
        let pivots = m.rref();
        assert_eq!(pivots, vec![0, 2]);
        assert_eq!(m.row(0), &[1, 2, 0]);
        assert_eq!(m.row(1), &[0, 0, 1]);
    }

    #[test]
    fn rref_detects_dependent_rows() {
        // [2,4,1] = 2·[1,2,3] over F_5
        let mut m = FpMat::from_rows(5, 3, &[vec![2, 4, 1], vec![1, 2, 3]]);
        assert_eq!(m.rref(), vec![0]);
    }

    #[test]
    fn span_membership() {
        let basis = row_space_basis(3, 4, &[vec![1, 1, 0, 0], vec![0, 0, 1, 1]]);
        assert_eq!(basis.len(), 2);
        assert!(in_row_space(3, &basis, &[2, 2, 1, 1]));
        assert!(!in_row_space(3, &basis, &[1, 0, 0, 0]));
    }

    #[test]
    fn intersection_of_planes() {
        // span{e1,e2} ∩ span{e2,e3} = span{e2} in F_5^3
        let u = row_space_basis(5, 3, &[vec![1, 0, 0], vec![0, 1, 0]]);
        let w = row_space_basis(5, 3, &[vec![0, 1, 0], vec![0, 0, 1]]);
        let cap = intersect_row_spaces(5, 3, &u, &w);
        assert_eq!(cap, vec![vec![0, 1, 0]]);
    }

    #[test]
    fn kron_shape() {
        assert_eq!(kron(7, &[1, 2], &[3, 4]), vec![3, 4, 6, 8 % 7]);
    }

    #[test]
    fn unit_index_detection() {
        assert_eq!(unit_index(&[0, 1, 0]), Some(1));
        assert_eq!(unit_index(&[0, 2, 0]), None);
        assert_eq!(unit_index(&[1, 1, 0]), None);
        assert_eq!(unit_index(&[0, 0, 0]), None);
    }
}
