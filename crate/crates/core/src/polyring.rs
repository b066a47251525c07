//! Bivariate homogeneous polynomials and truncated univariate series.
//!
//! A [`HomogPoly`] of degree `d` stores the coefficient of `x1^(d-i) * x2^i` at
//! index `i`, so the index is the `x2`-exponent. This convention is used
//! throughout the crate.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::ser::{Serialize, SerializeStruct, Serializer};
use thiserror::Error;

use crate::lattice::{IntEntry, IntMatrix, LatticeBasis};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("degree {degree} needs {expected} coefficients, got {found}")]
    CoefficientCount { degree: usize, expected: usize, found: usize },
    #[error("substitution matrix must be 2x2, got {rows}x{cols}")]
    NotTwoByTwo { rows: usize, cols: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomogPoly {
    degree: usize,
    coeffs: Vec<BigInt>,
}

impl HomogPoly {
    pub fn new(degree: usize, coeffs: Vec<BigInt>) -> Result<Self, PolyError> {
        if coeffs.len() != degree + 1 {
            return Err(PolyError::CoefficientCount {
                degree,
                expected: degree + 1,
                found: coeffs.len(),
            });
        }
        Ok(HomogPoly { degree, coeffs })
    }

    pub fn from_i64(degree: usize, coeffs: &[i64]) -> Result<Self, PolyError> {
        Self::new(degree, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(degree: usize) -> Self {
        HomogPoly { degree, coeffs: vec![BigInt::zero(); degree + 1] }
    }

    pub fn one() -> Self {
        HomogPoly { degree: 0, coeffs: vec![BigInt::one()] }
    }

    /// `c1 * x1 + c2 * x2`
    pub fn linear(c1: impl Into<BigInt>, c2: impl Into<BigInt>) -> Self {
        HomogPoly { degree: 1, coeffs: vec![c1.into(), c2.into()] }
    }

    /// `x1^(degree - x2_exp) * x2^x2_exp`
    pub fn monomial(degree: usize, x2_exp: usize) -> Self {
        let mut p = Self::zero(degree);
        p.coeffs[x2_exp] = BigInt::one();
        p
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        HomogPoly { degree: self.degree, coeffs: self.coeffs.iter().map(|v| v * c).collect() }
    }

    /// Sum of two polynomials of the same degree.
    pub fn add(&self, other: &HomogPoly) -> Option<Self> {
        if self.degree != other.degree {
            return None;
        }
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Some(HomogPoly { degree: self.degree, coeffs })
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(), |acc, _| homog_mul(&acc, self))
    }

    /// Exchanges the roles of `x1` and `x2`.
    pub fn swap_variables(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        HomogPoly { degree: self.degree, coeffs }
    }
}

impl Serialize for HomogPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let coeffs: Vec<IntEntry<'_>> = self.coeffs.iter().map(IntEntry).collect();
        let mut st = serializer.serialize_struct("HomogPoly", 2)?;
        st.serialize_field("degree", &self.degree)?;
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

pub fn homog_mul(p: &HomogPoly, q: &HomogPoly) -> HomogPoly {
    let mut out = HomogPoly::zero(p.degree + q.degree);
    for (i, a) in p.coeffs.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in q.coeffs.iter().enumerate() {
            if !b.is_zero() {
                out.coeffs[i + j] += a * b;
            }
        }
    }
    out
}

/// Expands `(c*x1 + d*x2) * prod(c_i*x1 + d_i*x2)`.
pub fn linear_product(lead: (i64, i64), factors: &[(i64, i64)]) -> HomogPoly {
    factors.iter().fold(HomogPoly::linear(lead.0, lead.1), |acc, &(c, d)| {
        homog_mul(&acc, &HomogPoly::linear(c, d))
    })
}

/// `p(g11*y1 + g12*y2, g21*y1 + g22*y2)`.
///
/// Composition reads `substitute_linear(substitute_linear(p, h), g) ==
/// substitute_linear(p, h * g)`.
pub fn substitute_linear(p: &HomogPoly, g: &IntMatrix) -> Result<HomogPoly, PolyError> {
    if g.rows() != 2 || g.cols() != 2 {
        return Err(PolyError::NotTwoByTwo { rows: g.rows(), cols: g.cols() });
    }
    let l1 = HomogPoly::linear(g.get(0, 0).clone(), g.get(0, 1).clone());
    let l2 = HomogPoly::linear(g.get(1, 0).clone(), g.get(1, 1).clone());
    let d = p.degree;
    let mut pow1 = vec![HomogPoly::one()];
    let mut pow2 = vec![HomogPoly::one()];
    for k in 1..=d {
        pow1.push(homog_mul(&pow1[k - 1], &l1));
        pow2.push(homog_mul(&pow2[k - 1], &l2));
    }
    let mut out = HomogPoly::zero(d);
    for (i, c) in p.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let term = homog_mul(&pow1[d - i], &pow2[i]);
        for (k, v) in term.coeffs.iter().enumerate() {
            out.coeffs[k] += c * v;
        }
    }
    Ok(out)
}

/// Element of `Z[x] / x^(trunc+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncPoly {
    trunc: usize,
    coeffs: Vec<BigInt>,
}

impl TruncPoly {
    pub fn one(trunc: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); trunc + 1];
        coeffs[0] = BigInt::one();
        TruncPoly { trunc, coeffs }
    }

    /// `1 + c*x`
    pub fn unit_linear(trunc: usize, c: &BigInt) -> Self {
        let mut p = Self::one(trunc);
        if trunc >= 1 {
            p.coeffs[1] = c.clone();
        }
        p
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Product with terms of degree above the truncation dropped. Both factors
    /// must share the truncation.
    pub fn mul(&self, other: &TruncPoly) -> TruncPoly {
        debug_assert_eq!(self.trunc, other.trunc);
        let mut coeffs = vec![BigInt::zero(); self.trunc + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(self.trunc + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        TruncPoly { trunc: self.trunc, coeffs }
    }

    /// `prod(1 + c_i*x)`
    pub fn product_of_units(trunc: usize, cs: impl IntoIterator<Item = BigInt>) -> Self {
        cs.into_iter().fold(Self::one(trunc), |acc, c| acc.mul(&Self::unit_linear(trunc, &c)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum UnitSign {
    Plus,
    Minus,
}

impl UnitSign {
    pub fn value(self) -> i64 {
        match self {
            UnitSign::Plus => 1,
            UnitSign::Minus => -1,
        }
    }

    pub fn both() -> [UnitSign; 2] {
        [UnitSign::Plus, UnitSign::Minus]
    }
}

/// Whether `prod(1 + u_i x) = (1 + eps*w*x) * prod(1 + eps*(u'_i + w)*x)` in
/// `Z[x]/x^(ell+1)`. Vectors of different length never satisfy it.
pub fn trunc_product_identity(
    u: &[BigInt],
    u_prime: &[BigInt],
    eps: UnitSign,
    w: &BigInt,
    ell: usize,
) -> bool {
    if u.len() != u_prime.len() {
        return false;
    }
    let e = BigInt::from(eps.value());
    let lhs = TruncPoly::product_of_units(ell, u.iter().cloned());
    let rhs = TruncPoly::product_of_units(
        ell,
        std::iter::once(&e * w).chain(u_prime.iter().map(|v| &e * (v + w))),
    );
    lhs == rhs
}

/// Degree-`d` piece of the ideal generated by `gens`, as a sublattice of the
/// coefficient space `Z^(d+1)`.
pub fn ideal_degree_lattice(gens: &[HomogPoly], d: usize) -> LatticeBasis {
    let mut vectors = Vec::new();
    for g in gens.iter().filter(|g| g.degree <= d) {
        // multiplying by x1^alpha * x2^beta shifts the coefficient index by beta
        for beta in 0..=d - g.degree {
            let mut v = vec![BigInt::zero(); d + 1];
            for (i, c) in g.coeffs.iter().enumerate() {
                v[i + beta] = c.clone();
            }
            vectors.push(v);
        }
    }
    LatticeBasis::from_vectors(d + 1, vectors).expect("shift vectors have length d+1")
}
