//! Exact integer linear algebra.
//!
//! Everything here works over arbitrary-precision integers: row-style Hermite
//! normal form, Smith normal form, saturated integer kernels and sublattices of
//! `Z^d` kept in canonical (Hermite) form so that equal lattices compare equal.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::{Serialize, SerializeSeq, Serializer};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("rows have unequal lengths")]
    Ragged,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
}

/// Dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from explicit rows. The column count is taken from the
    /// first row; an empty row list gives a `0 x cols` matrix with `cols = 0`.
    pub fn from_rows<T, R>(rows: R) -> Result<Self, LatticeError>
    where
        T: Into<BigInt>,
        R: IntoIterator,
        R::Item: IntoIterator<Item = T>,
    {
        let rows: Vec<Vec<BigInt>> =
            rows.into_iter().map(|r| r.into_iter().map(Into::into).collect()).collect();
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_row_vecs(cols, rows)
    }

    /// Like [`IntMatrix::from_rows`] but with an explicit column count, so that
    /// an empty list of vectors in `Z^cols` is representable.
    pub fn from_row_vecs(cols: usize, rows: Vec<Vec<BigInt>>) -> Result<Self, LatticeError> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(LatticeError::Ragged);
            }
            data.extend(r);
        }
        Ok(IntMatrix { rows: n, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: impl Into<BigInt>) {
        self.data[i * self.cols + j] = v.into();
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &IntMatrix) -> Result<IntMatrix, LatticeError> {
        if self.cols != rhs.rows {
            return Err(LatticeError::DimensionMismatch { expected: self.cols, found: rhs.rows });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Submatrix made of the given columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> IntMatrix {
        let mut out = Self::zeros(self.rows, cols.len());
        for i in 0..self.rows {
            for (k, &j) in cols.iter().enumerate() {
                out.data[i * cols.len() + k] = self.get(i, j).clone();
            }
        }
        out
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt, LatticeError> {
        if !self.is_square() {
            return Err(LatticeError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                    Some(i) => {
                        a.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                    a.set(i, j, v);
                }
            }
            prev = a.get(k, k).clone();
        }
        Ok(sign * a.get(n - 1, n - 1))
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + i, r * self.cols + j);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for c in 0..self.cols {
            let v = &mut self.data[i * self.cols + c];
            *v = -std::mem::take(v);
        }
    }

    /// row[dst] += factor * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let s = &self.data[src * self.cols + c];
            if !s.is_zero() {
                let delta = s * factor;
                self.data[dst * self.cols + c] += delta;
            }
        }
    }

    /// col[dst] += factor * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let s = &self.data[r * self.cols + src];
            if !s.is_zero() {
                let delta = s * factor;
                self.data[r * self.cols + dst] += delta;
            }
        }
    }

    /// Replaces rows (i, j) by (x*ri + y*rj, z*ri + w*rj).
    fn combine_rows(&mut self, i: usize, j: usize, [x, y, z, w]: [&BigInt; 4]) {
        for c in 0..self.cols {
            let a = &self.data[i * self.cols + c];
            let b = &self.data[j * self.cols + c];
            if a.is_zero() && b.is_zero() {
                continue;
            }
            let ni = x * a + y * b;
            let nj = z * a + w * b;
            self.data[i * self.cols + c] = ni;
            self.data[j * self.cols + c] = nj;
        }
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (k, v) in self.row(i).iter().enumerate() {
                if k > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Serializes as a list of rows. Entries that fit in an `i64` are written as
/// JSON numbers, larger ones as decimal strings.
impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.rows))?;
        for i in 0..self.rows {
            let row: Vec<IntEntry<'_>> = self.row(i).iter().map(IntEntry).collect();
            seq.serialize_element(&row)?;
        }
        seq.end()
    }
}

/// Serialization wrapper for a single big integer.
pub struct IntEntry<'a>(pub &'a BigInt);

impl Serialize for IntEntry<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => serializer.serialize_i64(v),
            None => serializer.serialize_str(&self.0.to_string()),
        }
    }
}

fn extended_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    if e.gcd.is_negative() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

/// Row-style HNF in place. Row operations are mirrored onto `track` when given.
fn hnf_in_place(h: &mut IntMatrix, mut track: Option<&mut IntMatrix>) {
    let (rows, cols) = (h.rows, h.cols);
    let mut p = 0;
    for col in 0..cols {
        if p == rows {
            break;
        }
        for i in p + 1..rows {
            if h.get(i, col).is_zero() {
                continue;
            }
            if h.get(p, col).is_zero() {
                h.swap_rows(p, i);
                if let Some(u) = track.as_deref_mut() {
                    u.swap_rows(p, i);
                }
                continue;
            }
            let a = h.get(p, col).clone();
            let b = h.get(i, col).clone();
            if b.is_multiple_of(&a) {
                let q = -(&b / &a);
                h.add_row_multiple(i, p, &q);
                if let Some(u) = track.as_deref_mut() {
                    u.add_row_multiple(i, p, &q);
                }
            } else {
                let (g, x, y) = extended_gcd(&a, &b);
                let z = -(&b / &g);
                let w = &a / &g;
                h.combine_rows(p, i, [&x, &y, &z, &w]);
                if let Some(u) = track.as_deref_mut() {
                    u.combine_rows(p, i, [&x, &y, &z, &w]);
                }
            }
        }
        if h.get(p, col).is_zero() {
            continue;
        }
        if h.get(p, col).is_negative() {
            h.negate_row(p);
            if let Some(u) = track.as_deref_mut() {
                u.negate_row(p);
            }
        }
        let pivot = h.get(p, col).clone();
        for i in 0..p {
            let q = -h.get(i, col).div_floor(&pivot);
            if !q.is_zero() {
                h.add_row_multiple(i, p, &q);
                if let Some(u) = track.as_deref_mut() {
                    u.add_row_multiple(i, p, &q);
                }
            }
        }
        p += 1;
    }
}

/// Returns `(H, U)` with `U` unimodular and `U * m = H`, where `H` is the
/// row-style Hermite normal form of `m`: positive pivots, entries above each
/// pivot reduced into `[0, pivot)`, zero rows last.
pub fn hermite_normal_form(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let mut h = m.clone();
    let mut u = IntMatrix::identity(m.rows);
    hnf_in_place(&mut h, Some(&mut u));
    (h, u)
}

/// Smith normal form `left * m * right = diag(diagonal)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    /// `min(rows, cols)` entries, non-negative, each dividing the next.
    pub diagonal: Vec<BigInt>,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

fn smith_in_place(
    a: &mut IntMatrix,
    mut left: Option<&mut IntMatrix>,
    mut right: Option<&mut IntMatrix>,
) -> Vec<BigInt> {
    let (rows, cols) = (a.rows, a.cols);
    let k = rows.min(cols);
    for t in 0..k {
        loop {
            // smallest nonzero entry of the trailing block becomes the pivot
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let v = a.get(i, j);
                    if v.is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| v.abs() < a.get(bi, bj).abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return (0..k).map(|i| a.get(i, i).clone()).collect();
            };
            a.swap_rows(t, pi);
            if let Some(l) = left.as_deref_mut() {
                l.swap_rows(t, pi);
            }
            a.swap_cols(t, pj);
            if let Some(r) = right.as_deref_mut() {
                r.swap_cols(t, pj);
            }

            let pivot = a.get(t, t).clone();
            let mut clean = true;
            for i in t + 1..rows {
                let q = -(a.get(i, t) / &pivot);
                a.add_row_multiple(i, t, &q);
                if let Some(l) = left.as_deref_mut() {
                    l.add_row_multiple(i, t, &q);
                }
                clean &= a.get(i, t).is_zero();
            }
            for j in t + 1..cols {
                let q = -(a.get(t, j) / &pivot);
                a.add_col_multiple(j, t, &q);
                if let Some(r) = right.as_deref_mut() {
                    r.add_col_multiple(j, t, &q);
                }
                clean &= a.get(t, j).is_zero();
            }
            if !clean {
                continue;
            }
            let offender = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !a.get(i, j).is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    let one = BigInt::one();
                    a.add_row_multiple(t, i, &one);
                    if let Some(l) = left.as_deref_mut() {
                        l.add_row_multiple(t, i, &one);
                    }
                }
                None => break,
            }
        }
        if a.get(t, t).is_negative() {
            a.negate_row(t);
            if let Some(l) = left.as_deref_mut() {
                l.negate_row(t);
            }
        }
    }
    (0..k).map(|i| a.get(i, i).clone()).collect()
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let mut a = m.clone();
    let mut left = IntMatrix::identity(m.rows);
    let mut right = IntMatrix::identity(m.cols);
    let diagonal = smith_in_place(&mut a, Some(&mut left), Some(&mut right));
    SmithForm { diagonal, left, right }
}

/// Invariant factors only; skips the transform bookkeeping.
pub fn smith_diagonal(m: &IntMatrix) -> Vec<BigInt> {
    let mut a = m.clone();
    smith_in_place(&mut a, None, None)
}

/// A sublattice of `Z^d`, stored as the nonzero rows of its Hermite normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticeBasis {
    ambient_dim: usize,
    basis: IntMatrix,
}

impl LatticeBasis {
    /// Lattice spanned by the rows of `generators`.
    pub fn from_generators(generators: &IntMatrix) -> Self {
        let mut h = generators.clone();
        hnf_in_place(&mut h, None);
        let rank = (0..h.rows).take_while(|&i| h.row(i).iter().any(|v| !v.is_zero())).count();
        let basis = IntMatrix::from_row_vecs(h.cols, h.to_rows().into_iter().take(rank).collect())
            .expect("rows of one matrix have equal length");
        LatticeBasis { ambient_dim: generators.cols, basis }
    }

    pub fn from_vectors(ambient_dim: usize, vectors: Vec<Vec<BigInt>>) -> Result<Self, LatticeError> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient_dim) {
            return Err(LatticeError::DimensionMismatch { expected: ambient_dim, found: v.len() });
        }
        Ok(Self::from_generators(&IntMatrix::from_row_vecs(ambient_dim, vectors)?))
    }

    pub fn zero(ambient_dim: usize) -> Self {
        LatticeBasis { ambient_dim, basis: IntMatrix::zeros(0, ambient_dim) }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> usize {
        self.basis.rows
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        if v.len() != self.ambient_dim {
            return false;
        }
        let mut rows = self.basis.to_rows();
        rows.push(v.to_vec());
        let extended = Self::from_vectors(self.ambient_dim, rows).expect("dimensions checked");
        extended == *self
    }

    /// True when `Z^d / self` is torsion-free.
    pub fn is_primitive(&self) -> bool {
        is_basis_extendable(&self.basis)
    }
}

/// Saturated integer kernel `{ v : m * v = 0 }` of `m`.
pub fn kernel_basis(m: &IntMatrix) -> LatticeBasis {
    // U * m^T = H; rows of U against zero rows of H span the kernel, and being
    // rows of a unimodular matrix they span a primitive sublattice.
    let (h, u) = hermite_normal_form(&m.transpose());
    let rank = (0..h.rows).filter(|&i| h.row(i).iter().any(|v| !v.is_zero())).count();
    let kernel: Vec<Vec<BigInt>> = (rank..u.rows).map(|i| u.row(i).to_vec()).collect();
    LatticeBasis::from_vectors(m.cols, kernel).expect("kernel rows live in Z^cols")
}

pub fn lattice_equal(a: &LatticeBasis, b: &LatticeBasis) -> Result<bool, LatticeError> {
    if a.ambient_dim != b.ambient_dim {
        return Err(LatticeError::DimensionMismatch { expected: a.ambient_dim, found: b.ambient_dim });
    }
    Ok(a.basis == b.basis)
}

/// Whether the rows of `vectors` extend to a basis of `Z^d`.
pub fn is_basis_extendable(vectors: &IntMatrix) -> bool {
    if vectors.rows == 0 {
        return true;
    }
    if vectors.rows > vectors.cols {
        return false;
    }
    smith_diagonal(vectors).iter().all(One::is_one)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(rows.iter().map(|r| r.iter().copied())).unwrap()
    }

    fn diag(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn hnf_two_by_two() {
        let m = mat(&[&[2, 4], &[1, 3]]);
        let (h, u) = hermite_normal_form(&m);
        assert_eq!(h, mat(&[&[1, 1], &[0, 2]]));
        assert_eq!(u.mul(&m).unwrap(), h);
        assert!(u.determinant().unwrap().abs().is_one());
    }

    #[test]
    fn hnf_identity_and_zero() {
        let id = IntMatrix::identity(3);
        assert_eq!(hermite_normal_form(&id).0, id);
        let z = IntMatrix::zeros(2, 2);
        assert_eq!(hermite_normal_form(&z).0, z);
    }

    #[test]
    fn hnf_reduces_above_pivot_into_range() {
        let m = mat(&[&[1, -7, 3], &[0, 3, 5], &[0, 0, -4]]);
        let (h, _) = hermite_normal_form(&m);
        assert_eq!(h, mat(&[&[1, 2, 2], &[0, 3, 1], &[0, 0, 4]]));
    }

    #[test]
    fn smith_examples() {
        assert_eq!(smith_normal_form(&mat(&[&[2, 0], &[0, 3]])).diagonal, diag(&[1, 6]));
        assert_eq!(smith_normal_form(&IntMatrix::identity(4)).diagonal, diag(&[1, 1, 1, 1]));
        assert_eq!(smith_normal_form(&mat(&[&[2, 4], &[4, 8]])).diagonal, diag(&[2, 0]));
    }

    #[test]
    fn smith_transforms_reproduce_diagonal() {
        let m = mat(&[&[6, 4, 2], &[-3, 9, 12], &[0, 5, 5], &[1, 1, 1]]);
        let s = smith_normal_form(&m);
        let d = s.left.mul(&m).unwrap().mul(&s.right).unwrap();
        for i in 0..d.rows() {
            for j in 0..d.cols() {
                let expect = if i == j { s.diagonal[i].clone() } else { BigInt::zero() };
                assert_eq!(d.get(i, j), &expect);
            }
        }
    }

    #[test]
    fn kernel_of_row_and_identity() {
        let k = kernel_basis(&mat(&[&[1, 1]]));
        assert_eq!(k.basis(), &mat(&[&[1, -1]]));
        assert_eq!(kernel_basis(&IntMatrix::identity(3)).rank(), 0);
    }

    #[test]
    fn kernel_is_saturated() {
        // 2x + 4y = 0 has kernel spanned by (2, -1), not (4, -2)
        let k = kernel_basis(&mat(&[&[2, 4]]));
        assert_eq!(k.basis(), &mat(&[&[2, -1]]));
        assert!(k.is_primitive());
    }

    #[test]
    fn lattice_equality() {
        let a = LatticeBasis::from_generators(&mat(&[&[2, 0], &[0, 2]]));
        let b = LatticeBasis::from_generators(&mat(&[&[2, 2], &[2, -2]]));
        assert!(!lattice_equal(&a, &b).unwrap());
        let c = LatticeBasis::from_generators(&mat(&[&[1, 0], &[0, 1]]));
        let d = LatticeBasis::from_generators(&mat(&[&[1, 1], &[0, 1]]));
        assert!(lattice_equal(&c, &d).unwrap());
        assert!(lattice_equal(&a, &a).unwrap());
        let e = LatticeBasis::zero(3);
        assert!(matches!(lattice_equal(&a, &e), Err(LatticeError::DimensionMismatch { .. })));
    }

    #[test]
    fn extendability() {
        assert!(is_basis_extendable(&mat(&[&[1, 0, 0], &[0, 1, 0]])));
        assert!(!is_basis_extendable(&mat(&[&[2, 0]])));
        assert!(is_basis_extendable(&mat(&[&[1, 2], &[3, 7]])));
        assert!(!is_basis_extendable(&mat(&[&[1, 0], &[0, 1], &[1, 1]])));
        assert!(is_basis_extendable(&IntMatrix::zeros(0, 4)));
    }

    #[test]
    fn determinant_bareiss() {
        assert_eq!(mat(&[&[1, 2], &[3, 7]]).determinant().unwrap(), BigInt::from(1));
        assert_eq!(mat(&[&[0, 1, 2], &[1, 0, 3], &[4, -3, 8]]).determinant().unwrap(), BigInt::from(-2));
        assert!(mat(&[&[1, 2]]).determinant().is_err());
    }

    #[test]
    fn ragged_rows_rejected() {
        let r = IntMatrix::from_rows(vec![vec![1i64, 2], vec![3]]);
        assert_eq!(r.unwrap_err(), LatticeError::Ragged);
    }
}
