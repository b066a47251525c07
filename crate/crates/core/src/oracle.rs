//! Independent checks for the closed-form classifier.
//!
//! [`ring_iso_search`] looks for a linear change of variables carrying one
//! cohomology ideal onto another, degree by degree. [`witness_check`] verifies
//! at the level of exponents that a coordinate permutation with conjugations
//! intertwines two free 2-torus actions on `S^(2n+1) x S^(2m+1)`, which is how
//! homeomorphisms between the quotient manifolds are produced.
//!
//! Both are falsifiers: a search that finds nothing is only conclusive within
//! its entry bound.

use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::lattice::{IntMatrix, LatticeBasis};
use crate::polyring::{ideal_degree_lattice, substitute_linear, HomogPoly};
use crate::quasitoric::{subtorus_weights, CharPair, Presentation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("generator degrees differ: {left:?} vs {right:?}")]
    DegreeMismatch { left: (usize, usize), right: (usize, usize) },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("not a valid witness: {0}")]
    InvalidWitness(String),
    #[error("parameters out of range: {0}")]
    OutOfRange(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum IsoVerdict {
    /// Substituting `x_i -> g_i1 y1 + g_i2 y2` maps the first ideal onto the second.
    Found { matrix: IntMatrix },
    /// No unimodular matrix with entries bounded by `bound` works.
    NoneWithinBound { bound: u32 },
}

impl IsoVerdict {
    pub fn is_found(&self) -> bool {
        matches!(self, IsoVerdict::Found { .. })
    }
}

/// All 2x2 integer matrices with entries in `[-bound, bound]` and determinant
/// ±1, closest to the identity first (l1 distance, then entries).
pub fn unimodular_matrices(bound: u32) -> Vec<IntMatrix> {
    let b = i64::from(bound);
    let mut found: Vec<(i64, [i64; 4])> = Vec::new();
    for p in -b..=b {
        for q in -b..=b {
            for r in -b..=b {
                for s in -b..=b {
                    if (p * s - q * r).abs() == 1 {
                        let dist = (p - 1).abs() + q.abs() + r.abs() + (s - 1).abs();
                        found.push((dist, [p, q, r, s]));
                    }
                }
            }
        }
    }
    found.sort();
    found
        .into_iter()
        .map(|(_, [p, q, r, s])| IntMatrix::from_rows([[p, q], [r, s]]).expect("2x2"))
        .collect()
}

fn degree_pair(p: &Presentation) -> (usize, usize) {
    let (d1, d2) = (p.gen1.degree(), p.gen2.degree());
    (d1.min(d2), d1.max(d2))
}

fn ideal_pieces(gens: &[HomogPoly], lo: usize, hi: usize) -> Vec<LatticeBasis> {
    (lo..=hi).map(|d| ideal_degree_lattice(gens, d)).collect()
}

/// Whether substituting `g` into `p`'s generators yields `q`'s ideal in every
/// degree `lo..=hi`.
pub fn maps_ideal_onto(p: &Presentation, q: &Presentation, g: &IntMatrix, lo: usize, hi: usize) -> bool {
    let target = ideal_pieces(&q.generators(), lo, hi);
    maps_onto_pieces(p, g, lo, &target)
}

fn maps_onto_pieces(p: &Presentation, g: &IntMatrix, lo: usize, target: &[LatticeBasis]) -> bool {
    let images: Vec<HomogPoly> = p
        .generators()
        .iter()
        .map(|f| substitute_linear(f, g).expect("g is 2x2"))
        .collect();
    target
        .iter()
        .enumerate()
        .all(|(k, want)| ideal_degree_lattice(&images, lo + k) == *want)
}

/// Searches for a graded isomorphism `Z[x]/I_p -> Z[y]/I_q` induced by a
/// linear substitution with entries bounded by `bound`. Ideals are compared in
/// every degree up to the largest generator degree, which suffices because
/// both ideals are generated there. The first hit in the order of
/// [`unimodular_matrices`] is returned.
pub fn ring_iso_search(p: &Presentation, q: &Presentation, bound: u32) -> Result<IsoVerdict, OracleError> {
    let (lo, hi) = degree_pair(p);
    if (lo, hi) != degree_pair(q) {
        return Err(OracleError::DegreeMismatch { left: (lo, hi), right: degree_pair(q) });
    }
    let target = ideal_pieces(&q.generators(), lo, hi);
    for g in unimodular_matrices(bound) {
        if maps_onto_pieces(p, &g, lo, &target) {
            return Ok(IsoVerdict::Found { matrix: g });
        }
    }
    Ok(IsoVerdict::NoneWithinBound { bound })
}

/// Exponent-level certificate for a map `(w, z) -> (±x_π(1), ..., ±x_π(N))`.
///
/// Row `k` of `s` has a single non-zero entry `±1` in column `π(k)`: target
/// coordinate `k` is source coordinate `π(k)`, conjugated when the sign is
/// negative. The rows of `t` are the exponent vectors of the torus
/// reparametrization `θ(t1, t2) = (t^t[0], t^t[1])`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonomialWitness {
    s: IntMatrix,
    t: IntMatrix,
}

impl MonomialWitness {
    pub fn new(s: IntMatrix, t: IntMatrix) -> Result<Self, OracleError> {
        if !s.is_square() {
            return Err(OracleError::InvalidWitness("s must be square".into()));
        }
        let size = s.rows();
        let mut col_used = vec![false; size];
        for i in 0..size {
            let nz: Vec<usize> = (0..size).filter(|&j| !s.get(i, j).is_zero()).collect();
            if nz.len() != 1 || !s.get(i, nz[0]).abs().is_one() {
                return Err(OracleError::InvalidWitness(format!("row {i} of s is not a signed unit vector")));
            }
            if std::mem::replace(&mut col_used[nz[0]], true) {
                return Err(OracleError::InvalidWitness(format!("column {} of s is used twice", nz[0])));
            }
        }
        if t.rows() != 2 || t.cols() != 2 {
            return Err(OracleError::InvalidWitness("t must be 2x2".into()));
        }
        let det = t.determinant().expect("square");
        if !det.abs().is_one() {
            return Err(OracleError::InvalidWitness(format!("det t = {det}")));
        }
        Ok(MonomialWitness { s, t })
    }

    /// Builds `s` from a source index and conjugation flag per target coordinate.
    pub fn from_permutation(perm: &[(usize, bool)], t: IntMatrix) -> Result<Self, OracleError> {
        let mut s = IntMatrix::zeros(perm.len(), perm.len());
        for (k, &(src, conj)) in perm.iter().enumerate() {
            if src >= perm.len() {
                return Err(OracleError::InvalidWitness(format!("source index {src} out of range")));
            }
            s.set(k, src, if conj { -1 } else { 1 });
        }
        Self::new(s, t)
    }

    pub fn s(&self) -> &IntMatrix {
        &self.s
    }

    pub fn t(&self) -> &IntMatrix {
        &self.t
    }
}

/// Whether `s * u == u' * t`, i.e. the witness map is equivariant with respect
/// to the source weights `u` and the target weights `u'`.
pub fn witness_check(u: &IntMatrix, u_prime: &IntMatrix, w: &MonomialWitness) -> Result<bool, OracleError> {
    let size = w.s.rows();
    for (name, x) in [("u", u), ("u'", u_prime)] {
        if x.rows() != size || x.cols() != 2 {
            return Err(OracleError::DimensionMismatch(format!(
                "{name} is {}x{}, expected {size}x2",
                x.rows(),
                x.cols()
            )));
        }
    }
    let lhs = w.s.mul(u).expect("checked");
    let rhs = u_prime.mul(&w.t).expect("checked");
    Ok(lhs == rhs)
}

/// The equivariant maps available as built-in witnesses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum WitnessFamily {
    /// Over `Δⁿ × Δ¹` with `a * b = 2`: `b = (b, 0, ..., 0)` to `b = (b, ..., b)`.
    Spread { n: usize, a: i64, b: i64 },
    /// `n, m >= 2`: `r` ones on the `b` side to `n + 1 - r` ones, `s` twos fixed.
    FoldOnes { n: usize, m: usize, s: usize, r: usize },
    /// `n, m >= 2`: `s` twos on the `a` side to `m + 1 - s` twos, `r` ones fixed.
    FoldTwos { n: usize, m: usize, s: usize, r: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessTriple {
    pub source: CharPair,
    pub target: CharPair,
    pub u: IntMatrix,
    pub u_prime: IntMatrix,
    pub witness: MonomialWitness,
}

fn block(value: i64, count: usize, len: usize) -> Vec<i64> {
    let mut v = vec![value; count];
    v.resize(len, 0);
    v
}

fn mat2(rows: [[i64; 2]; 2]) -> IntMatrix {
    IntMatrix::from_rows(rows).expect("2x2")
}

fn check_fold_range(n: usize, m: usize, s: usize, r: usize) -> Result<(), OracleError> {
    if n < 2 || m < 2 {
        return Err(OracleError::OutOfRange(format!("need n, m >= 2, got n={n}, m={m}")));
    }
    if !(1..=m).contains(&s) || !(1..=n).contains(&r) {
        return Err(OracleError::OutOfRange(format!("need 1 <= s <= {m}, 1 <= r <= {n}, got s={s}, r={r}")));
    }
    Ok(())
}

/// Source data, target data, both weight matrices and the witness for one of
/// the built-in equivariant maps. Coordinates are ordered
/// `w1..w(n+1), z1..z(m+1)` and indexed from 0.
pub fn builtin_witness(family: WitnessFamily) -> Result<WitnessTriple, OracleError> {
    let (source, target, perm, t) = match family {
        WitnessFamily::Spread { n, a, b } => {
            if n < 2 {
                return Err(OracleError::OutOfRange(format!("need n >= 2, got {n}")));
            }
            if a.checked_mul(b) != Some(2) {
                return Err(OracleError::OutOfRange(format!("need a * b = 2, got a={a}, b={b}")));
            }
            let source = CharPair::new(n, 1, vec![a], block(b, 1, n)).expect("shape");
            let target = CharPair::new(n, 1, vec![a], vec![b; n]).expect("shape");
            // swap w1 and w(n+1), conjugate z2
            let mut perm: Vec<(usize, bool)> = (0..n + 3).map(|k| (k, false)).collect();
            perm[0] = (n, false);
            perm[n] = (0, false);
            perm[n + 2] = (n + 2, true);
            (source, target, perm, mat2([[1, b], [0, -1]]))
        }
        WitnessFamily::FoldOnes { n, m, s, r } => {
            check_fold_range(n, m, s, r)?;
            let source = CharPair::new(n, m, block(2, s, m), block(1, r, n)).expect("shape");
            let target = CharPair::new(n, m, block(2, s, m), block(1, n + 1 - r, n)).expect("shape");
            // cyclic shift of the w block by r, conjugate z(s+1)..z(m+1)
            let mut perm: Vec<(usize, bool)> = (0..=n).map(|k| ((k + r) % (n + 1), false)).collect();
            perm.extend((0..=m).map(|j| (n + 1 + j, j >= s)));
            (source, target, perm, mat2([[1, 1], [0, -1]]))
        }
        WitnessFamily::FoldTwos { n, m, s, r } => {
            check_fold_range(n, m, s, r)?;
            let source = CharPair::new(n, m, block(2, s, m), block(1, r, n)).expect("shape");
            let target = CharPair::new(n, m, block(2, m + 1 - s, m), block(1, r, n)).expect("shape");
            // conjugate w(r+1)..w(n+1), cyclic shift of the z block by s
            let mut perm: Vec<(usize, bool)> = (0..=n).map(|k| (k, k >= r)).collect();
            perm.extend((0..=m).map(|j| (n + 1 + (j + s) % (m + 1), false)));
            (source, target, perm, mat2([[-1, 0], [2, 1]]))
        }
    };
    let witness = MonomialWitness::from_permutation(&perm, t)?;
    Ok(WitnessTriple {
        u: subtorus_weights(&source),
        u_prime: subtorus_weights(&target),
        source,
        target,
        witness,
    })
}
