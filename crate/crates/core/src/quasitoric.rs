//! Characteristic data of quasitoric manifolds over `Δⁿ × Δᵐ`.
//!
//! A [`CharPair`] `(n, m, a, b)` with `a ∈ Zᵐ`, `b ∈ Zⁿ` fixes the
//! characteristic matrix
//!
//! ```text
//!          F1 .. Fn  G1 .. Gm  F(n+1)  G(m+1)
//!   rows   [      E(n+m)      |  -1     -b_i ]   i = 1..n
//!          [                  | -a_j     -1  ]   j = 1..m
//! ```
//!
//! which is non-singular exactly when every product `a_j * b_i` is 0 or 2.
//! The kernel computations use a second facet order,
//! `F1 .. Fn, F(n+1), G1 .. Gm, G(m+1)`, which is what
//! [`reordered_characteristic_matrix`] returns.

use std::cmp::Reverse;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lattice::{
    is_basis_extendable, kernel_basis, smith_diagonal, IntMatrix, LatticeBasis,
};
use crate::polyring::{ideal_degree_lattice, linear_product, HomogPoly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuasitoricError {
    #[error("malformed characteristic data: {0}")]
    Shape(String),
    #[error("singular characteristic data: a[{j}] * b[{i}] = {product}, expected 0 or 2")]
    Singular { i: usize, j: usize, product: i128 },
}

/// Characteristic data `(n, m, a, b)`; `a` has length `m`, `b` has length `n`.
///
/// Construction only checks shapes. Non-singularity is a separate question
/// answered by [`validate`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawCharPair")]
pub struct CharPair {
    pub n: usize,
    pub m: usize,
    pub a: Vec<i64>,
    pub b: Vec<i64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCharPair {
    n: usize,
    m: usize,
    a: Vec<i64>,
    b: Vec<i64>,
}

impl TryFrom<RawCharPair> for CharPair {
    type Error = QuasitoricError;

    fn try_from(raw: RawCharPair) -> Result<Self, Self::Error> {
        CharPair::new(raw.n, raw.m, raw.a, raw.b)
    }
}

impl CharPair {
    pub fn new(n: usize, m: usize, a: Vec<i64>, b: Vec<i64>) -> Result<Self, QuasitoricError> {
        if n == 0 || m == 0 {
            return Err(QuasitoricError::Shape(format!("dimensions must be positive, got n={n}, m={m}")));
        }
        if a.len() != m {
            return Err(QuasitoricError::Shape(format!("a has length {}, expected m={m}", a.len())));
        }
        if b.len() != n {
            return Err(QuasitoricError::Shape(format!("b has length {}, expected n={n}", b.len())));
        }
        Ok(CharPair { n, m, a, b })
    }

    /// Exchanges the two simplex factors.
    pub fn swapped(&self) -> CharPair {
        CharPair { n: self.m, m: self.n, a: self.b.clone(), b: self.a.clone() }
    }

    pub fn negated(&self) -> CharPair {
        CharPair {
            n: self.n,
            m: self.m,
            a: self.a.iter().map(|v| -v).collect(),
            b: self.b.iter().map(|v| -v).collect(),
        }
    }

    /// First offending pair `(i, j, a_j * b_i)`, if any.
    pub fn singular_entry(&self) -> Option<(usize, usize, i128)> {
        for (j, &aj) in self.a.iter().enumerate() {
            for (i, &bi) in self.b.iter().enumerate() {
                let p = aj as i128 * bi as i128;
                if p != 0 && p != 2 {
                    return Some((i, j, p));
                }
            }
        }
        None
    }

    pub fn ensure_valid(&self) -> Result<(), QuasitoricError> {
        match self.singular_entry() {
            Some((i, j, product)) => Err(QuasitoricError::Singular { i, j, product }),
            None => Ok(()),
        }
    }
}

impl fmt::Display for CharPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}, m={}, a={:?}, b={:?})", self.n, self.m, self.a, self.b)
    }
}

/// Closed-form non-singularity: every `a_j * b_i` is 0 or 2.
pub fn validate(cp: &CharPair) -> bool {
    cp.singular_entry().is_none()
}

/// The `(n+m) x (n+m+2)` characteristic matrix in facet order
/// `F1..Fn, G1..Gm, F(n+1), G(m+1)`.
pub fn characteristic_matrix(cp: &CharPair) -> IntMatrix {
    let (n, m) = (cp.n, cp.m);
    let mut mat = IntMatrix::zeros(n + m, n + m + 2);
    for k in 0..n + m {
        mat.set(k, k, 1);
    }
    for i in 0..n {
        mat.set(i, n + m, -1);
        mat.set(i, n + m + 1, -cp.b[i]);
    }
    for j in 0..m {
        mat.set(n + j, n + m, -cp.a[j]);
        mat.set(n + j, n + m + 1, -1);
    }
    mat
}

/// The characteristic matrix in facet order `F1..Fn, F(n+1), G1..Gm, G(m+1)`.
pub fn reordered_characteristic_matrix(cp: &CharPair) -> IntMatrix {
    let (n, m) = (cp.n, cp.m);
    let mut order: Vec<usize> = (0..n).collect();
    order.push(n + m);
    order.extend(n..n + m);
    order.push(n + m + 1);
    characteristic_matrix(cp).select_columns(&order)
}

/// Vertex-by-vertex non-singularity check. A vertex of `Δⁿ × Δᵐ` omits one
/// facet of each factor; the remaining `n+m` columns of the characteristic
/// matrix must form a basis of `Z^(n+m)`.
pub fn validate_bruteforce(cp: &CharPair) -> bool {
    let (n, m) = (cp.n, cp.m);
    let full = characteristic_matrix(cp);
    // column index of F_i (0-based i in 0..=n) and G_j (j in 0..=m)
    let f_col = |i: usize| if i < n { i } else { n + m };
    let g_col = |j: usize| if j < m { n + j } else { n + m + 1 };
    for skip_f in 0..=n {
        for skip_g in 0..=m {
            let cols: Vec<usize> = (0..=n)
                .filter(|&i| i != skip_f)
                .map(f_col)
                .chain((0..=m).filter(|&j| j != skip_g).map(g_col))
                .collect();
            // columns are the facet vectors, rows of the transpose likewise
            if !is_basis_extendable(&full.select_columns(&cols).transpose()) {
                return false;
            }
        }
    }
    true
}

/// Where the non-zero entries sit after normalization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Shape {
    /// `a = 0` and `b = 0`.
    Product,
    /// `b = 0`, `a ≠ 0`: a `CPᵐ`-bundle over `CPⁿ`.
    BottA,
    /// `a = 0`, `b ≠ 0`: a `CPⁿ`-bundle over `CPᵐ`. Only occurs when `n > m`.
    BottB,
    /// Both non-zero, the entries equal to 2 are in `a`.
    TwosInA,
    /// Both non-zero, the entries equal to 2 are in `b`. Only occurs when `n > m`.
    TwosInB,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct NormalForm {
    pub pair: CharPair,
    pub shape: Shape,
    pub swap_applied: bool,
}

impl NormalForm {
    /// Number of entries equal to 2 and to 1, for the non-Bott shapes.
    pub fn twos_and_ones(&self) -> (usize, usize) {
        let all = self.pair.a.iter().chain(&self.pair.b);
        let twos = all.clone().filter(|&&v| v == 2).count();
        let ones = all.filter(|&&v| v == 1).count();
        (twos, ones)
    }
}

fn sorted_desc(v: &[i64], sign: i64) -> Vec<i64> {
    let mut out: Vec<i64> = v.iter().map(|x| x * sign).collect();
    out.sort_by_key(|&x| Reverse(x));
    out
}

fn has_twos(v: &[i64]) -> bool {
    v.iter().any(|x| x.abs() == 2)
}

fn is_zero_vec(v: &[i64]) -> bool {
    v.iter().all(|&x| x == 0)
}

/// Canonical form up to facet relabeling within each factor, the global sign
/// change `(a, b) -> (-a, -b)`, and (when `n < m`, or to break ties when
/// `n = m`) exchanging the two factors.
///
/// Conventions: `n >= m`; for `n = m` the 2-valued entries, or the single
/// non-zero vector of a Bott pair, go into `a`; the global sign is the one
/// making `(sort(a), sort(b))` lexicographically largest; both vectors are
/// sorted in descending order.
pub fn normalize(cp: &CharPair) -> Result<NormalForm, QuasitoricError> {
    cp.ensure_valid()?;
    let mut pair = cp.clone();
    let mut swap_applied = false;
    if pair.n < pair.m {
        pair = pair.swapped();
        swap_applied = true;
    } else if pair.n == pair.m {
        let bott = is_zero_vec(&pair.a) || is_zero_vec(&pair.b);
        let move_b = if bott { is_zero_vec(&pair.a) && !is_zero_vec(&pair.b) } else { has_twos(&pair.b) };
        if move_b {
            pair = pair.swapped();
            swap_applied = true;
        }
    }
    let plus = (sorted_desc(&pair.a, 1), sorted_desc(&pair.b, 1));
    let minus = (sorted_desc(&pair.a, -1), sorted_desc(&pair.b, -1));
    let (a, b) = if minus > plus { minus } else { plus };
    let shape = match (is_zero_vec(&a), is_zero_vec(&b)) {
        (true, true) => Shape::Product,
        (false, true) => Shape::BottA,
        (true, false) => Shape::BottB,
        (false, false) if has_twos(&a) => Shape::TwosInA,
        (false, false) => Shape::TwosInB,
    };
    Ok(NormalForm { pair: CharPair { a, b, ..pair }, shape, swap_applied })
}

/// One of the vectors vanishes. For non-singular data with both vectors
/// non-zero some product `a_j * b_i` equals 2, which rules out a triangular
/// characteristic matrix.
pub fn is_generalized_bott(nf: &NormalForm) -> bool {
    matches!(nf.shape, Shape::Product | Shape::BottA | Shape::BottB)
}

/// `Z[x1, x2] / <gen1, gen2>` with `deg gen1 = n+1`, `deg gen2 = m+1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Presentation {
    pub n: usize,
    pub m: usize,
    pub gen1: HomogPoly,
    pub gen2: HomogPoly,
}

impl Presentation {
    pub fn generators(&self) -> [HomogPoly; 2] {
        [self.gen1.clone(), self.gen2.clone()]
    }
}

/// `gen1 = x1 * prod(x1 + b_i x2)`, `gen2 = x2 * prod(a_j x1 + x2)`.
pub fn cohomology_presentation(cp: &CharPair) -> Result<Presentation, QuasitoricError> {
    cp.ensure_valid()?;
    let f1: Vec<(i64, i64)> = cp.b.iter().map(|&bi| (1, bi)).collect();
    let f2: Vec<(i64, i64)> = cp.a.iter().map(|&aj| (aj, 1)).collect();
    Ok(Presentation {
        n: cp.n,
        m: cp.m,
        gen1: linear_product((1, 0), &f1),
        gen2: linear_product((0, 1), &f2),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedRanks {
    /// Rank of the degree-`d` piece for `d = 0..=n+m`.
    pub ranks: Vec<usize>,
    /// Invariant factors above 1 of each degree piece; empty when torsion-free.
    #[serde(serialize_with = "serialize_torsion")]
    pub torsion: Vec<Vec<BigInt>>,
}

fn serialize_torsion<S: serde::Serializer>(t: &[Vec<BigInt>], s: S) -> Result<S::Ok, S::Error> {
    let strings: Vec<Vec<String>> = t.iter().map(|d| d.iter().map(ToString::to_string).collect()).collect();
    strings.serialize(s)
}

impl GradedRanks {
    pub fn is_torsion_free(&self) -> bool {
        self.torsion.iter().all(Vec::is_empty)
    }

    pub fn total(&self) -> usize {
        self.ranks.iter().sum()
    }
}

pub fn graded_ranks(p: &Presentation) -> GradedRanks {
    let gens = p.generators();
    let mut ranks = Vec::new();
    let mut torsion = Vec::new();
    for d in 0..=p.n + p.m {
        let piece = ideal_degree_lattice(&gens, d);
        ranks.push(d + 1 - piece.rank());
        let factors = smith_diagonal(piece.basis());
        torsion.push(factors.into_iter().filter(|f| *f > BigInt::from(1)).collect());
    }
    GradedRanks { ranks, torsion }
}

/// `#{(i, j) : 0 <= i <= n, 0 <= j <= m, i + j = d}` for `d = 0..=n+m`.
pub fn h_vector(n: usize, m: usize) -> Vec<usize> {
    (0..=n + m).map(|d| (0..=n).filter(|&i| d >= i && d - i <= m).count()).collect()
}

/// Weights of the free 2-torus acting on `S^(2n+1) x S^(2m+1)`: row `k` is the
/// exponent pair `(e1, e2)` with which `t1^e1 t2^e2` scales coordinate `k`, in
/// coordinate order `w1..w(n+1), z1..z(m+1)`.
pub fn subtorus_weights(cp: &CharPair) -> IntMatrix {
    let mut rows: Vec<[i64; 2]> = cp.b.iter().map(|&bi| [1, bi]).collect();
    rows.push([1, 0]);
    rows.extend(cp.a.iter().map(|&aj| [aj, 1]));
    rows.push([0, 1]);
    IntMatrix::from_rows(rows).expect("rows of width 2")
}

/// Saturated kernel of [`reordered_characteristic_matrix`].
pub fn kernel_lattice(cp: &CharPair) -> Result<LatticeBasis, QuasitoricError> {
    cp.ensure_valid()?;
    Ok(kernel_basis(&reordered_characteristic_matrix(cp)))
}
