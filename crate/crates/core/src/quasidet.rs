//! Quasideterminants, left quasi-Plücker coordinates, noncommutative
//! Gaussian elimination and LDU factorization over a ring with partial
//! inverses.
//!
//! All algorithms work over any [`CoeffRing`]; in practice the ring is
//! either `Series<Element>` (the Yangian) or [`RatMat`] (exact rational
//! matrices standing in for a division ring). Division only ever happens
//! through `try_invert`, and a failed pivot aborts with a witness instead
//! of guessing.

use crate::error::{Error, Result};
use crate::rat::Rat;
use crate::series::CoeffRing;

/// Rectangular matrix over a noncommutative coefficient ring.
#[derive(Clone, Debug, PartialEq)]
pub struct NCMatrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: CoeffRing> NCMatrix<R> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        NCMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.cols + j] = v;
    }

    fn exemplar(&self) -> &R {
        &self.data[0]
    }

    pub fn identity_like(&self, n: usize) -> NCMatrix<R> {
        let one = self.exemplar().one_like();
        let zero = self.exemplar().zero_like();
        NCMatrix::from_fn(n, n, |i, j| if i == j { one.clone() } else { zero.clone() })
    }

    pub fn mul(&self, other: &NCMatrix<R>) -> NCMatrix<R> {
        assert_eq!(self.cols, other.rows);
        NCMatrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = self.exemplar().zero_like();
            for k in 0..self.cols {
                acc = acc.add(&self.get(i, k).mul(other.get(k, j)));
            }
            acc
        })
    }

    pub fn sub(&self, other: &NCMatrix<R>) -> NCMatrix<R> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        NCMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j).sub(other.get(i, j)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Keep the given rows and columns (0-based positions, order preserved).
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> NCMatrix<R> {
        NCMatrix::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    /// Delete one row and one column.
    pub fn delete(&self, row: usize, col: usize) -> NCMatrix<R> {
        let rows: Vec<usize> = (0..self.rows).filter(|&r| r != row).collect();
        let cols: Vec<usize> = (0..self.cols).filter(|&c| c != col).collect();
        self.submatrix(&rows, &cols)
    }

    /// Two-sided inverse by Gauss-Jordan elimination on `[A | I]`.
    ///
    /// Pivots must be invertible in the ring; rows are exchanged to find
    /// one when `allow_swaps` is set. A column with no invertible pivot
    /// aborts with `SingularPivot`.
    pub fn nc_inverse(&self, allow_swaps: bool) -> Result<NCMatrix<R>> {
        if self.rows != self.cols {
            return Err(Error::SizeMismatch { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = self.identity_like(n);
        for col in 0..n {
            let mut pivot_row = None;
            let candidates: Vec<usize> = if allow_swaps {
                (col..n).collect()
            } else {
                vec![col]
            };
            let mut pivot_inv = None;
            for r in candidates {
                if let Some(pi) = a.get(r, col).try_invert() {
                    pivot_row = Some(r);
                    pivot_inv = Some(pi);
                    break;
                }
            }
            let (r, pi) = match (pivot_row, pivot_inv) {
                (Some(r), Some(pi)) => (r, pi),
                _ => {
                    return Err(Error::SingularPivot {
                        col,
                        witness: format!("no invertible pivot in column {col}"),
                    })
                }
            };
            if r != col {
                for j in 0..n {
                    a.data.swap(col * n + j, r * n + j);
                    inv.data.swap(col * n + j, r * n + j);
                }
            }
            // normalize the pivot row from the left
            for j in 0..n {
                a.set(col, j, pi.mul(a.get(col, j)));
                inv.set(col, j, pi.mul(inv.get(col, j)));
            }
            for rr in 0..n {
                if rr == col || a.get(rr, col).is_zero() {
                    continue;
                }
                let f = a.get(rr, col).clone();
                for j in 0..n {
                    let x = a.get(rr, j).sub(&f.mul(a.get(col, j)));
                    a.set(rr, j, x);
                    let y = inv.get(rr, j).sub(&f.mul(inv.get(col, j)));
                    inv.set(rr, j, y);
                }
            }
        }
        Ok(inv)
    }
}

/// Quasideterminant `|A|_{ij}` (0-based positions):
/// `a_ij - (row i without j) (A^{ij})^-1 (column j without i)`.
pub fn quasidet<R: CoeffRing>(a: &NCMatrix<R>, i: usize, j: usize) -> Result<R> {
    if a.rows() != a.cols() {
        return Err(Error::SizeMismatch { rows: a.rows(), cols: a.cols() });
    }
    let n = a.rows();
    if n == 1 {
        return Ok(a.get(0, 0).clone());
    }
    let inner = a.delete(i, j).nc_inverse(true)?;
    let other_rows: Vec<usize> = (0..n).filter(|&r| r != i).collect();
    let other_cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
    let mut acc = a.get(i, j).clone();
    for (bi, &r) in other_rows.iter().enumerate() {
        for (bj, &c) in other_cols.iter().enumerate() {
            // rho_ij entry for column c times (A^{ij})^-1 times chi_ji entry for row r
            let term = a.get(i, other_cols[bj]).mul(inner.get(bj, bi)).mul(a.get(other_rows[bi], j));
            let _ = (r, c);
            acc = acc.sub(&term);
        }
    }
    Ok(acc)
}

/// Left quasi-Plücker coordinate `p^M_{ij}(A)` computed from the first
/// `|M|+1` rows of `A`:
/// `|A_{[m], i|M}|_{s,i}^-1 |A_{[m], j|M}|_{s,j}` for a pivot row `s`.
///
/// Column indices are 0-based here; `i` must not lie in `M`.
pub fn quasi_plucker_left<R: CoeffRing>(
    a: &NCMatrix<R>,
    i: usize,
    j: usize,
    m_cols: &[usize],
    s: usize,
) -> Result<R> {
    assert!(!m_cols.contains(&i), "i must avoid the fixed column set");
    let mrows: Vec<usize> = (0..=m_cols.len()).collect();
    let mut icols = vec![i];
    icols.extend_from_slice(m_cols);
    let mut jcols = vec![j];
    jcols.extend_from_slice(m_cols);
    let ai = a.submatrix(&mrows, &icols);
    let aj = a.submatrix(&mrows, &jcols);
    let qi = quasidet(&ai, s, 0)?;
    let qj = quasidet(&aj, s, 0)?;
    let qi_inv = qi.try_invert().ok_or_else(|| Error::SingularPivot {
        col: i,
        witness: "left quasideterminant not invertible".into(),
    })?;
    Ok(qi_inv.mul(&qj))
}

/// Composition of `n` with partial sums.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.iter().any(|&p| p == 0) {
            return Err(Error::Config("composition parts must be positive".into()));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Partial sums `d_1 < d_2 < ... < d_r = n`.
    pub fn partial_sums(&self) -> Vec<usize> {
        let mut acc = 0;
        self.parts
            .iter()
            .map(|p| {
                acc += p;
                acc
            })
            .collect()
    }

    /// Block index (0-based) containing the 0-based row `i`.
    pub fn block_of(&self, i: usize) -> usize {
        let mut acc = 0;
        for (b, p) in self.parts.iter().enumerate() {
            acc += p;
            if i < acc {
                return b;
            }
        }
        panic!("row {i} outside composition of {}", self.n());
    }
}

impl std::fmt::Display for Composition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Witness for one division performed during elimination.
#[derive(Clone, Debug)]
pub struct PivotWitness<R> {
    pub block: usize,
    pub pivot: R,
}

/// Block-reduce a square matrix using only row operations from the
/// block-lower-triangular group of the composition: each block of rows ends
/// up as `[0 | identity | coordinates]`.
///
/// Returns the reduced matrix together with the diagonal blocks that were
/// inverted along the way.
pub fn gaussian_eliminate_parabolic<R: CoeffRing>(
    a: &NCMatrix<R>,
    gamma: &Composition,
) -> Result<(NCMatrix<R>, Vec<NCMatrix<R>>)> {
    let n = gamma.n();
    if a.rows() != n || a.cols() != n {
        return Err(Error::SizeMismatch { rows: a.rows(), cols: a.cols() });
    }
    let mut m = a.clone();
    let mut inverted_blocks = Vec::new();
    let sums = gamma.partial_sums();
    let mut start = 0usize;
    for (bidx, &end) in sums.iter().enumerate() {
        // invert the current diagonal block (rows start..end, cols start..end)
        let rows: Vec<usize> = (start..end).collect();
        let cols: Vec<usize> = (start..end).collect();
        let block = m.submatrix(&rows, &cols);
        let binv = block.nc_inverse(false).map_err(|e| match e {
            Error::SingularPivot { col, .. } => Error::SingularPivot {
                col: start + col,
                witness: format!("diagonal block {bidx} not invertible"),
            },
            other => other,
        })?;
        inverted_blocks.push(block);
        // rows of this block become binv * rows
        let old_rows = m.submatrix(&rows, &(0..n).collect::<Vec<_>>());
        let new_rows = binv.mul(&old_rows);
        for (r, &row) in rows.iter().enumerate() {
            for c in 0..n {
                m.set(row, c, new_rows.get(r, c).clone());
            }
        }
        // clear the block's columns in all other rows (both below and above:
        // operations on earlier blocks use their already-reduced identity
        // columns, which stay inside the block-triangular group)
        for r in 0..n {
            if r >= start && r < end {
                continue;
            }
            let factors: Vec<R> = (start..end).map(|c| m.get(r, c).clone()).collect();
            if factors.iter().all(|f| f.is_zero()) {
                continue;
            }
            for c in 0..n {
                let mut x = m.get(r, c).clone();
                for (k, f) in factors.iter().enumerate() {
                    x = x.sub(&f.mul(m.get(start + k, c)));
                }
                m.set(r, c, x);
            }
        }
        start = end;
    }
    Ok((m, inverted_blocks))
}

/// Result of a strict LDU factorization: `L` lower unitriangular, `D`
/// diagonal, `U` upper unitriangular, with the pivot witnesses that were
/// inverted.
#[derive(Clone, Debug)]
pub struct LDUResult<R> {
    pub l: NCMatrix<R>,
    pub d: NCMatrix<R>,
    pub u: NCMatrix<R>,
    pub pivots: Vec<R>,
}

impl<R: CoeffRing> LDUResult<R> {
    pub fn reconstruct(&self) -> NCMatrix<R> {
        self.l.mul(&self.d).mul(&self.u)
    }
}

/// Strict LDU by forward elimination without row exchanges; the k-th pivot
/// is the (k,k) entry after clearing the first k-1 columns.
pub fn ldu<R: CoeffRing>(a: &NCMatrix<R>) -> Result<LDUResult<R>> {
    if a.rows() != a.cols() {
        return Err(Error::SizeMismatch { rows: a.rows(), cols: a.cols() });
    }
    let n = a.rows();
    let mut m = a.clone();
    let zero = a.exemplar().zero_like();
    let one = a.exemplar().one_like();
    let mut l = a.identity_like(n);
    let mut pivots = Vec::with_capacity(n);
    for col in 0..n {
        let pivot = m.get(col, col).clone();
        let pinv = pivot.try_invert().ok_or_else(|| Error::SingularPivot {
            col,
            witness: "principal pivot not invertible".into(),
        })?;
        pivots.push(pivot.clone());
        for r in col + 1..n {
            let f = m.get(r, col).mul(&pinv);
            if f.is_zero() {
                continue;
            }
            l.set(r, col, f.clone());
            for c in 0..n {
                let x = m.get(r, c).sub(&f.mul(m.get(col, c)));
                m.set(r, c, x);
            }
        }
    }
    // m is now D*U; strip the pivots off the rows
    let mut d = a.identity_like(n);
    let mut u = a.identity_like(n);
    for k in 0..n {
        d.set(k, k, pivots[k].clone());
        let pinv = pivots[k].try_invert().unwrap();
        for c in 0..n {
            let v = if c < k {
                zero.clone()
            } else if c == k {
                one.clone()
            } else {
                pinv.mul(m.get(k, c))
            };
            u.set(k, c, v);
        }
    }
    Ok(LDUResult { l, d, u, pivots })
}

/// `RatMat` as a coefficient ring: square rational matrices of a fixed size
/// standing in for division-ring scalars.
impl CoeffRing for crate::rat::RatMat {
    fn zero_like(&self) -> Self {
        crate::rat::RatMat::zero(self.rows(), self.cols())
    }
    fn one_like(&self) -> Self {
        crate::rat::RatMat::identity(self.rows())
    }
    fn add(&self, rhs: &Self) -> Self {
        crate::rat::RatMat::add(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        crate::rat::RatMat::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        crate::rat::RatMat::neg(self)
    }
    fn is_zero(&self) -> bool {
        crate::rat::RatMat::is_zero(self)
    }
    fn scale(&self, q: &Rat) -> Self {
        crate::rat::RatMat::scale(self, q)
    }
    fn try_invert(&self) -> Option<Self> {
        self.inverse().ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat_int, RatMat};

    fn scalar(x: i64) -> RatMat {
        RatMat::from_fn(1, 1, |_, _| rat_int(x))
    }

    fn mat(vals: &[&[i64]]) -> NCMatrix<RatMat> {
        NCMatrix::from_fn(vals.len(), vals[0].len(), |i, j| scalar(vals[i][j]))
    }

    #[test]
    fn one_by_one_quasidet_is_entry() {
        let a = mat(&[&[7]]);
        assert_eq!(quasidet(&a, 0, 0).unwrap(), scalar(7));
    }

    #[test]
    fn identity_inverts_to_itself() {
        let a = mat(&[&[1, 0], &[0, 1]]);
        assert_eq!(a.nc_inverse(true).unwrap(), a);
    }

    #[test]
    fn nc_inverse_agrees_with_rational_inverse() {
        let a = mat(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        let inv = a.nc_inverse(true).unwrap();
        assert!(a.mul(&inv).sub(&a.identity_like(3)).is_zero());
        assert!(inv.mul(&a).sub(&a.identity_like(3)).is_zero());
        // against the flat rational inverse
        let flat = RatMat::from_fn(3, 3, |i, j| a.get(i, j).clone()[(0, 0)].clone());
        let flat_inv = flat.inverse().unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(inv.get(i, j).clone()[(0, 0)], flat_inv[(i, j)]);
            }
        }
    }

    #[test]
    fn nc_inverse_uses_row_swaps() {
        let a = mat(&[&[0, 1], &[1, 0]]);
        let inv = a.nc_inverse(true).unwrap();
        assert!(a.mul(&inv).sub(&a.identity_like(2)).is_zero());
        assert!(a.nc_inverse(false).is_err());
    }

    #[test]
    fn two_by_two_quasidet_formula() {
        // |A|_11 = a11 - a12 a22^-1 a21
        let a = mat(&[&[5, 2], &[3, 4]]);
        let expect = scalar(5).sub(&scalar(2).mul(&scalar(4).try_invert().unwrap()).mul(&scalar(3)));
        assert_eq!(quasidet(&a, 0, 0).unwrap(), expect);
    }

    #[test]
    fn quasidet_inverse_relation() {
        // |A|_ij^-1 = (A^-1)_ji on a generic rational point
        let a = mat(&[&[3, 1, 2], &[1, 4, 1], &[2, 1, 5]]);
        let inv = a.nc_inverse(true).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let q = quasidet(&a, i, j).unwrap();
                if let Some(qinv) = q.try_invert() {
                    assert_eq!(&qinv, inv.get(j, i), "entry ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn ldu_reconstructs() {
        let a = mat(&[&[2, 1, 1], &[1, 3, 2], &[1, 1, 4]]);
        let f = ldu(&a).unwrap();
        assert!(f.reconstruct().sub(&a).is_zero());
        assert_eq!(f.pivots.len(), 3);
    }

    #[test]
    fn parabolic_reduction_shape() {
        let a = mat(&[&[2, 1, 1], &[1, 3, 2], &[1, 1, 4]]);
        let gamma = Composition::new(vec![2, 1]).unwrap();
        let (r, _) = gaussian_eliminate_parabolic(&a, &gamma).unwrap();
        // block 1: rows 0-1 are [I_2 | *], block 2: row 2 is [0 0 | 1]
        for i in 0..2 {
            for j in 0..2 {
                let expect = if i == j { scalar(1) } else { scalar(0) };
                assert_eq!(r.get(i, j), &expect, "identity block at ({i},{j})");
            }
        }
        assert_eq!(r.get(2, 0), &scalar(0));
        assert_eq!(r.get(2, 1), &scalar(0));
        assert_eq!(r.get(2, 2), &scalar(1));
    }

    #[test]
    fn parabolic_reduction_is_invariant() {
        let a = mat(&[&[2, 1, 1], &[1, 3, 2], &[1, 1, 4]]);
        let gamma = Composition::new(vec![2, 1]).unwrap();
        let (r1, _) = gaussian_eliminate_parabolic(&a, &gamma).unwrap();
        // left-multiply by a block-lower-triangular invertible matrix
        let g = mat(&[&[1, 2, 0], &[1, 1, 0], &[3, -1, 2]]);
        let (r2, _) = gaussian_eliminate_parabolic(&g.mul(&a), &gamma).unwrap();
        assert!(r1.sub(&r2).is_zero());
    }

    #[test]
    fn composition_partial_sums() {
        let g = Composition::new(vec![2, 1]).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.partial_sums(), vec![2, 3]);
        assert_eq!(g.block_of(0), 0);
        assert_eq!(g.block_of(2), 1);
        assert!(Composition::new(vec![]).is_err());
        assert!(Composition::new(vec![1, 0]).is_err());
    }
}
