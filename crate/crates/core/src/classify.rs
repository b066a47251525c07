//! Homeomorphism classification.
//!
//! Every non-singular [`CharPair`] is sent to a [`HomeoClass`] label. Labels
//! compare equal exactly when the manifolds are homeomorphic. Labels of
//! generalized Bott manifolds keep a twisting vector and compare through the
//! truncated-product relation [`tilde_equiv`]; all other labels compare
//! structurally.
//!
//! Over `Δⁿ × Δ¹` the non-Bott manifolds collapse onto a handful of classes:
//! `CP^(n+1) # CP^(n+1)`, `CP^(n+1) # conj(CP^(n+1))`, the Bott class with
//! twist 2, and one exceptional class. When both factors have dimension at
//! least 2, a non-Bott manifold is determined by the side carrying the
//! entries equal to 2 and by the counts `(s, r)` up to `s -> m+1-s`,
//! `r -> n+1-r`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::ser::{Serialize, Serializer};
use serde::Serialize as DeriveSerialize;

use crate::polyring::{trunc_product_identity, UnitSign};
use crate::quasitoric::{normalize, validate, CharPair, NormalForm, QuasitoricError, Shape};

/// Whether `u ~_ell u'`: there are `eps = ±1` and `w` with
/// `prod(1 + u_i x) = (1 + eps*w*x) * prod(1 + eps*(u'_i + w)*x)` modulo
/// `x^(ell+1)`.
///
/// Comparing linear coefficients forces `(k+1) w = eps*sum(u) - sum(u')`, so
/// each sign admits at most one candidate `w`. Vectors of different length
/// are never related.
pub fn tilde_equiv(u: &[i64], u_prime: &[i64], ell: usize) -> bool {
    if u.len() != u_prime.len() {
        return false;
    }
    if ell == 0 {
        return true;
    }
    let k1 = BigInt::from(u.len() + 1);
    let su: BigInt = u.iter().map(|&v| BigInt::from(v)).sum();
    let sp: BigInt = u_prime.iter().map(|&v| BigInt::from(v)).sum();
    let ub: Vec<BigInt> = u.iter().map(|&v| BigInt::from(v)).collect();
    let pb: Vec<BigInt> = u_prime.iter().map(|&v| BigInt::from(v)).collect();
    UnitSign::both().into_iter().any(|eps| {
        let num = BigInt::from(eps.value()) * &su - &sp;
        if &num % &k1 != BigInt::from(0) {
            return false;
        }
        let w = num / &k1;
        trunc_product_identity(&ub, &pb, eps, &w, ell)
    })
}

/// Which factor carries the entries equal to 2 in a non-Bott label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, DeriveSerialize)]
#[serde(rename_all = "lowercase")]
pub enum TwosSide {
    /// The `a` vector (the `Δᵐ` side).
    M,
    /// The `b` vector (the `Δⁿ` side).
    N,
}

/// Canonical homeomorphism-class label. Dimensions always satisfy `n >= m`.
#[derive(Clone, Debug)]
pub enum HomeoClass {
    /// `CPⁿ × CPᵐ`.
    Product { n: usize, m: usize },
    /// `CPᵐ`-bundle over `CPⁿ` with twist vector `a` (not related to zero).
    BottBaseN { n: usize, m: usize, a: Vec<i64> },
    /// `CPⁿ`-bundle over `CPᵐ` with twist vector `b`, only for `n > m`.
    BottBaseM { n: usize, m: usize, b: Vec<i64> },
    /// Non-Bott class with `1 <= s <= (m+1)/2` entries on the `a` side and
    /// `1 <= r <= (n+1)/2` on the `b` side.
    NonBott { n: usize, m: usize, s: usize, r: usize, twos: TwosSide },
    /// `CP^(n+1) # CP^(n+1)` over `Δⁿ × Δ¹`.
    ConnSumPlus { n: usize },
    /// `CP^(n+1) # conj(CP^(n+1))` over `Δⁿ × Δ¹`, the Bott class with twist 1.
    ConnSumMinus { n: usize },
    /// The class of `a = (2)`, `b = (1, 0, ..., 0)` over `Δⁿ × Δ¹`, `n` odd, `n >= 3`.
    SpecialM21 { n: usize },
}

impl PartialEq for HomeoClass {
    fn eq(&self, other: &Self) -> bool {
        use HomeoClass::*;
        match (self, other) {
            (Product { n, m }, Product { n: n2, m: m2 }) => (n, m) == (n2, m2),
            (BottBaseN { n, m, a }, BottBaseN { n: n2, m: m2, a: a2 }) => {
                (n, m) == (n2, m2) && tilde_equiv(a, a2, *n)
            }
            (BottBaseM { n, m, b }, BottBaseM { n: n2, m: m2, b: b2 }) => {
                (n, m) == (n2, m2) && tilde_equiv(b, b2, *m)
            }
            (
                NonBott { n, m, s, r, twos },
                NonBott { n: n2, m: m2, s: s2, r: r2, twos: t2 },
            ) => (n, m, s, r, twos) == (n2, m2, s2, r2, t2),
            (ConnSumPlus { n }, ConnSumPlus { n: n2 }) => n == n2,
            (ConnSumMinus { n }, ConnSumMinus { n: n2 }) => n == n2,
            (SpecialM21 { n }, SpecialM21 { n: n2 }) => n == n2,
            _ => false,
        }
    }
}

impl Eq for HomeoClass {}

impl HomeoClass {
    pub fn family(&self) -> &'static str {
        match self {
            HomeoClass::Product { .. } => "product",
            HomeoClass::BottBaseN { .. } => "bott-base-n",
            HomeoClass::BottBaseM { .. } => "bott-base-m",
            HomeoClass::NonBott { .. } => "non-bott",
            HomeoClass::ConnSumPlus { .. } => "conn-sum-plus",
            HomeoClass::ConnSumMinus { .. } => "conn-sum-minus",
            HomeoClass::SpecialM21 { .. } => "special-m21",
        }
    }

    fn family_rank(&self) -> u8 {
        match self {
            HomeoClass::Product { .. } => 0,
            HomeoClass::BottBaseN { .. } => 1,
            HomeoClass::BottBaseM { .. } => 2,
            HomeoClass::ConnSumMinus { .. } => 3,
            HomeoClass::ConnSumPlus { .. } => 4,
            HomeoClass::SpecialM21 { .. } => 5,
            HomeoClass::NonBott { .. } => 6,
        }
    }

    pub fn dims(&self) -> (usize, usize) {
        match *self {
            HomeoClass::Product { n, m }
            | HomeoClass::BottBaseN { n, m, .. }
            | HomeoClass::BottBaseM { n, m, .. }
            | HomeoClass::NonBott { n, m, .. } => (n, m),
            HomeoClass::ConnSumPlus { n }
            | HomeoClass::ConnSumMinus { n }
            | HomeoClass::SpecialM21 { n } => (n, 1),
        }
    }

    /// Classes whose members are (homeomorphic to) generalized Bott manifolds.
    pub fn is_bott_type(&self) -> bool {
        matches!(
            self,
            HomeoClass::Product { .. }
                | HomeoClass::BottBaseN { .. }
                | HomeoClass::BottBaseM { .. }
                | HomeoClass::ConnSumMinus { .. }
        )
    }

    /// The classes counted by [`count_nonbott`].
    pub fn is_nonbott_type(&self) -> bool {
        !self.is_bott_type()
    }

    /// Normalized characteristic data lying in this class.
    pub fn representative(&self) -> CharPair {
        let pad = |head: Vec<i64>, len: usize| {
            let mut v = head;
            v.resize(len, 0);
            v
        };
        let (n, m) = self.dims();
        let (a, b) = match self {
            HomeoClass::Product { .. } => (vec![0; m], vec![0; n]),
            HomeoClass::BottBaseN { a, .. } => (a.clone(), vec![0; n]),
            HomeoClass::BottBaseM { b, .. } => (vec![0; m], b.clone()),
            HomeoClass::NonBott { s, r, twos: TwosSide::M, .. } => {
                (pad(vec![2; *s], m), pad(vec![1; *r], n))
            }
            HomeoClass::NonBott { s, r, twos: TwosSide::N, .. } => {
                (pad(vec![1; *s], m), pad(vec![2; *r], n))
            }
            HomeoClass::ConnSumPlus { n: 1 } => (vec![2], vec![1]),
            HomeoClass::ConnSumPlus { .. } => (vec![1], pad(vec![2], n)),
            HomeoClass::ConnSumMinus { .. } => (vec![1], vec![0; n]),
            HomeoClass::SpecialM21 { .. } => (vec![2], pad(vec![1], n)),
        };
        CharPair { n, m, a, b }
    }

    fn sort_key(&self) -> (u8, RepKey) {
        (self.family_rank(), rep_key(&self.representative()))
    }
}

type RepKey = (i64, i64, CharPair);

/// Small representatives first: by l1 norm, then largest entry, then lexicographically.
fn rep_key(cp: &CharPair) -> RepKey {
    let all = || cp.a.iter().chain(&cp.b).map(|v| v.abs());
    (all().sum(), all().max().unwrap_or(0), cp.clone())
}

impl fmt::Display for HomeoClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomeoClass::Product { n, m } => write!(f, "product({n},{m})"),
            HomeoClass::BottBaseN { n, m, a } => write!(f, "bott-base-n({n},{m}; a={a:?})"),
            HomeoClass::BottBaseM { n, m, b } => write!(f, "bott-base-m({n},{m}; b={b:?})"),
            HomeoClass::NonBott { n, m, s, r, twos } => {
                write!(f, "non-bott({n},{m}; s={s}, r={r}, twos={twos:?})")
            }
            HomeoClass::ConnSumPlus { n } => write!(f, "conn-sum-plus({n})"),
            HomeoClass::ConnSumMinus { n } => write!(f, "conn-sum-minus({n})"),
            HomeoClass::SpecialM21 { n } => write!(f, "special-m21({n})"),
        }
    }
}

#[derive(DeriveSerialize)]
#[serde(untagged)]
enum ClassParams<'a> {
    Empty {},
    A { a: &'a [i64] },
    B { b: &'a [i64] },
    Counts { s: usize, r: usize, twos: TwosSide },
}

#[derive(DeriveSerialize)]
struct ClassJson<'a> {
    family: &'static str,
    n: usize,
    m: usize,
    params: ClassParams<'a>,
    representative: CharPair,
}

impl Serialize for HomeoClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let (n, m) = self.dims();
        let params = match self {
            HomeoClass::BottBaseN { a, .. } => ClassParams::A { a },
            HomeoClass::BottBaseM { b, .. } => ClassParams::B { b },
            HomeoClass::NonBott { s, r, twos, .. } => {
                ClassParams::Counts { s: *s, r: *r, twos: *twos }
            }
            _ => ClassParams::Empty {},
        };
        ClassJson { family: self.family(), n, m, params, representative: self.representative() }
            .serialize(serializer)
    }
}

fn fold(count: usize, dim: usize) -> usize {
    if count > dim.div_ceil(2) {
        dim + 1 - count
    } else {
        count
    }
}

fn bott_a_class(n: usize, m: usize, a: Vec<i64>) -> HomeoClass {
    if tilde_equiv(&a, &vec![0; m], n) {
        HomeoClass::Product { n, m }
    } else if m == 1 && tilde_equiv(&a, &[1], n) {
        HomeoClass::ConnSumMinus { n }
    } else {
        HomeoClass::BottBaseN { n, m, a }
    }
}

fn bott_b_class(n: usize, m: usize, b: Vec<i64>) -> HomeoClass {
    if tilde_equiv(&b, &vec![0; n], m) {
        HomeoClass::Product { n, m }
    } else {
        HomeoClass::BottBaseM { n, m, b }
    }
}

fn class_of_normal_form(nf: &NormalForm) -> HomeoClass {
    let CharPair { n, m, a, b } = nf.pair.clone();
    match nf.shape {
        Shape::Product => HomeoClass::Product { n, m },
        Shape::BottA => bott_a_class(n, m, a),
        Shape::BottB => bott_b_class(n, m, b),
        Shape::TwosInA | Shape::TwosInB if m == 1 => {
            let s = b.iter().filter(|&&v| v != 0).count();
            let odd = s % 2 == 1 && n % 2 == 1;
            match (n, a[0], odd) {
                (1, _, _) => HomeoClass::ConnSumPlus { n },
                (_, 1, true) => HomeoClass::ConnSumPlus { n },
                (_, 1, false) => HomeoClass::ConnSumMinus { n },
                (_, _, true) => HomeoClass::SpecialM21 { n },
                (_, _, false) => bott_a_class(n, 1, vec![2]),
            }
        }
        Shape::TwosInA | Shape::TwosInB => {
            let s = a.iter().filter(|&&v| v != 0).count();
            let r = b.iter().filter(|&&v| v != 0).count();
            let twos = if nf.shape == Shape::TwosInA { TwosSide::M } else { TwosSide::N };
            HomeoClass::NonBott { n, m, s: fold(s, m), r: fold(r, n), twos }
        }
    }
}

pub fn canonical_class(cp: &CharPair) -> Result<HomeoClass, QuasitoricError> {
    Ok(class_of_normal_form(&normalize(cp)?))
}

/// The rule that settled a homeomorphism question.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, DeriveSerialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    /// Identical normal forms.
    Reflexive,
    /// Different products of simplices have non-isomorphic cohomology.
    DistinctPolytopes,
    /// Two Bott manifolds over the same base, compared by `tilde_equiv`.
    BottTwistEquivalence,
    /// Non-trivial bundles over different base factors.
    BottSideMismatch,
    /// A Bott manifold and a non-Bott manifold.
    BottVsNonBott,
    /// Non-Bott labels with both factors of dimension at least 2.
    SRFold,
    /// The 2-valued entries sit on different factors.
    OrientationMismatch,
    /// Non-Bott data over `Δⁿ × Δ¹`.
    IntervalFactorClasses,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::Reflexive => "reflexive",
            Rule::DistinctPolytopes => "distinct-polytopes",
            Rule::BottTwistEquivalence => "bott-twist-equivalence",
            Rule::BottSideMismatch => "bott-side-mismatch",
            Rule::BottVsNonBott => "bott-vs-non-bott",
            Rule::SRFold => "s-r-fold",
            Rule::OrientationMismatch => "orientation-mismatch",
            Rule::IntervalFactorClasses => "interval-factor-classes",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, DeriveSerialize)]
pub struct Verdict {
    pub homeomorphic: bool,
    pub rule: Rule,
    pub detail: String,
}

fn base_side(c: &HomeoClass) -> Option<TwosSide> {
    match c {
        HomeoClass::BottBaseN { .. } | HomeoClass::ConnSumMinus { .. } => Some(TwosSide::N),
        HomeoClass::BottBaseM { .. } => Some(TwosSide::M),
        _ => None,
    }
}

pub fn homeomorphic(cp1: &CharPair, cp2: &CharPair) -> Result<Verdict, QuasitoricError> {
    let nf1 = normalize(cp1)?;
    let nf2 = normalize(cp2)?;
    if nf1.pair == nf2.pair {
        return Ok(Verdict {
            homeomorphic: true,
            rule: Rule::Reflexive,
            detail: format!("both normalize to {}", nf1.pair),
        });
    }
    let dims1 = (nf1.pair.n, nf1.pair.m);
    let dims2 = (nf2.pair.n, nf2.pair.m);
    if dims1 != dims2 {
        return Ok(Verdict {
            homeomorphic: false,
            rule: Rule::DistinctPolytopes,
            detail: format!("simplex dimensions {dims1:?} vs {dims2:?}"),
        });
    }
    let c1 = class_of_normal_form(&nf1);
    let c2 = class_of_normal_form(&nf2);
    let equal = c1 == c2;
    let detail = format!("{c1} vs {c2}");
    let rule = if dims1.1 == 1 && !(is_generalized_bott_shape(&nf1) && is_generalized_bott_shape(&nf2)) {
        Rule::IntervalFactorClasses
    } else if c1.is_bott_type() != c2.is_bott_type() {
        Rule::BottVsNonBott
    } else if c1.is_bott_type() {
        match (base_side(&c1), base_side(&c2)) {
            (Some(x), Some(y)) if x != y => Rule::BottSideMismatch,
            _ => Rule::BottTwistEquivalence,
        }
    } else {
        match (&c1, &c2) {
            (HomeoClass::NonBott { twos: t1, .. }, HomeoClass::NonBott { twos: t2, .. }) if t1 != t2 => {
                Rule::OrientationMismatch
            }
            _ => Rule::SRFold,
        }
    };
    Ok(Verdict { homeomorphic: equal, rule, detail })
}

fn is_generalized_bott_shape(nf: &NormalForm) -> bool {
    crate::quasitoric::is_generalized_bott(nf)
}

/// Non-increasing sequences of length `len` with entries in `[-bound, bound]`.
fn sorted_vectors(len: usize, bound: i64) -> Vec<Vec<i64>> {
    fn rec(len: usize, hi: i64, lo: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in (lo..=hi).rev() {
            cur.push(v);
            rec(len, v, lo, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(len, bound, -bound, &mut Vec::new(), &mut out);
    out
}

/// All classes of non-singular data over `Δⁿ × Δᵐ` with entries in
/// `[-bound, bound]`, one label per class, each with its smallest
/// representative, sorted by family and then representative.
///
/// The non-Bott part is complete for any `bound >= 2`. Bott twist vectors are
/// only explored within the bound. Arguments with `n < m` are swapped.
pub fn enumerate_classes(n: usize, m: usize, bound: u32) -> Vec<HomeoClass> {
    let (n, m) = if n >= m { (n, m) } else { (m, n) };
    if m == 0 {
        return Vec::new();
    }
    let bound = i64::from(bound);
    let avecs = sorted_vectors(m, bound);
    let bvecs = sorted_vectors(n, bound);
    let mut candidates: BTreeMap<(u8, RepKey), HomeoClass> = BTreeMap::new();
    for a in &avecs {
        for b in &bvecs {
            let cp = CharPair { n, m, a: a.clone(), b: b.clone() };
            if !validate(&cp) {
                continue;
            }
            let class = class_of_normal_form(&normalize(&cp).expect("validated"));
            candidates.entry(class.sort_key()).or_insert(class);
        }
    }
    let mut kept: Vec<HomeoClass> = Vec::new();
    for class in candidates.into_values() {
        if !kept.contains(&class) {
            kept.push(class);
        }
    }
    kept
}

/// Number of non-Bott homeomorphism classes over `Δⁿ × Δᵐ` (symmetric in
/// `n`, `m`). Over `Δ¹ × Δ¹` the single class is `CP² # CP²`.
pub fn count_nonbott(n: usize, m: usize) -> usize {
    let (n, m) = if n >= m { (n, m) } else { (m, n) };
    let half = |k: usize| k.div_ceil(2);
    match (n, m) {
        (0, _) | (_, 0) => 0,
        (1, 1) => 1,
        (n, 1) if n % 2 == 0 => 0,
        (_, 1) => 2,
        (n, m) if n == m => half(n) * half(n),
        (n, m) => 2 * half(n) * half(m),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cp(n: usize, m: usize, a: &[i64], b: &[i64]) -> CharPair {
        CharPair::new(n, m, a.to_vec(), b.to_vec()).unwrap()
    }

    #[test]
    fn tilde_examples() {
        assert!(tilde_equiv(&[1], &[3], 1));
        assert!(!tilde_equiv(&[1], &[2], 1));
        assert!(tilde_equiv(&[5], &[-5], 3));
        assert!(!tilde_equiv(&[4], &[2], 2));
        assert!(tilde_equiv(&[1, 2], &[0, 0], 1));
        assert!(!tilde_equiv(&[1], &[1, 0], 2));
    }

    #[test]
    fn classes_over_the_square() {
        assert_eq!(canonical_class(&cp(1, 1, &[2], &[1])).unwrap(), HomeoClass::ConnSumPlus { n: 1 });
        assert_eq!(canonical_class(&cp(1, 1, &[1], &[2])).unwrap(), HomeoClass::ConnSumPlus { n: 1 });
        assert_eq!(canonical_class(&cp(1, 1, &[3], &[0])).unwrap(), HomeoClass::ConnSumMinus { n: 1 });
        assert_eq!(canonical_class(&cp(1, 1, &[0], &[-4])).unwrap(), HomeoClass::Product { n: 1, m: 1 });
    }

    #[test]
    fn interval_factor_classes() {
        let c = canonical_class(&cp(3, 1, &[2], &[1, 1, 0])).unwrap();
        assert_eq!(c, HomeoClass::BottBaseN { n: 3, m: 1, a: vec![2] });
        let c = canonical_class(&cp(3, 1, &[2], &[1, 1, 1])).unwrap();
        assert_eq!(c, HomeoClass::SpecialM21 { n: 3 });
        let c = canonical_class(&cp(3, 1, &[1], &[2, 0, 0])).unwrap();
        assert_eq!(c, HomeoClass::ConnSumPlus { n: 3 });
        let c = canonical_class(&cp(4, 1, &[1], &[2, 0, 0, 0])).unwrap();
        assert_eq!(c, HomeoClass::ConnSumMinus { n: 4 });
        let c = canonical_class(&cp(4, 1, &[2], &[1, 0, 0, 0])).unwrap();
        assert_eq!(c, HomeoClass::BottBaseN { n: 4, m: 1, a: vec![-2] });
    }

    #[test]
    fn fold_and_orientation() {
        let c = canonical_class(&cp(2, 2, &[2, 2], &[1, 0])).unwrap();
        assert_eq!(c, HomeoClass::NonBott { n: 2, m: 2, s: 1, r: 1, twos: TwosSide::M });
        let c = canonical_class(&cp(3, 2, &[1, 0], &[2, 2, 0])).unwrap();
        assert_eq!(c, HomeoClass::NonBott { n: 3, m: 2, s: 1, r: 2, twos: TwosSide::N });
        let mirror = canonical_class(&cp(2, 2, &[1, 0], &[2, 2])).unwrap();
        assert_eq!(mirror, HomeoClass::NonBott { n: 2, m: 2, s: 1, r: 1, twos: TwosSide::M });
    }

    #[test]
    fn pairwise_decisions() {
        let v = homeomorphic(&cp(2, 2, &[2, 0], &[1, 0]), &cp(2, 2, &[2, 0], &[1, 0])).unwrap();
        assert!(v.homeomorphic);
        assert_eq!(v.rule, Rule::Reflexive);

        let v = homeomorphic(&cp(3, 1, &[1], &[2, 0, 0]), &cp(3, 1, &[2], &[1, 0, 0])).unwrap();
        assert!(!v.homeomorphic);
        assert_eq!(v.rule, Rule::IntervalFactorClasses);

        let v = homeomorphic(&cp(3, 3, &[2, 0, 0], &[1, 0, 0]), &cp(3, 3, &[2, 2, 2], &[1, 1, 1])).unwrap();
        assert!(v.homeomorphic);
        assert_eq!(v.rule, Rule::SRFold);

        let v = homeomorphic(&cp(3, 2, &[2, 0], &[1, 0, 0]), &cp(3, 2, &[1, 0], &[2, 0, 0])).unwrap();
        assert!(!v.homeomorphic);
        assert_eq!(v.rule, Rule::OrientationMismatch);

        let v = homeomorphic(&cp(2, 2, &[0, 0], &[0, 0]), &cp(3, 1, &[0], &[0, 0, 0])).unwrap();
        assert_eq!(v.rule, Rule::DistinctPolytopes);

        let v = homeomorphic(&cp(3, 2, &[3, 1], &[0, 0, 0]), &cp(3, 2, &[0, 0], &[1, 0, 0])).unwrap();
        assert!(!v.homeomorphic);
        assert_eq!(v.rule, Rule::BottSideMismatch);
    }

    #[test]
    fn counts() {
        let table = [((2, 2), 1), ((3, 3), 4), ((4, 4), 4), ((3, 2), 4), ((5, 2), 6), ((3, 1), 2), ((4, 1), 0), ((5, 1), 2), ((1, 1), 1)];
        for ((n, m), want) in table {
            assert_eq!(count_nonbott(n, m), want, "N({n},{m})");
            assert_eq!(count_nonbott(m, n), want);
        }
    }

    #[test]
    fn enumeration_small() {
        assert_eq!(enumerate_classes(1, 1, 0), vec![HomeoClass::Product { n: 1, m: 1 }]);
        let classes = enumerate_classes(1, 1, 2);
        assert_eq!(classes.len(), 3);
        let nonbott = enumerate_classes(2, 2, 2).into_iter().filter(HomeoClass::is_nonbott_type).count();
        assert_eq!(nonbott, 1);
    }

    #[test]
    fn representatives_classify_to_themselves() {
        for (n, m) in [(1, 1), (2, 1), (3, 1), (3, 2), (4, 4)] {
            for class in enumerate_classes(n, m, 2) {
                assert_eq!(canonical_class(&class.representative()).unwrap(), class);
            }
        }
    }
}
