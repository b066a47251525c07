mod common;

use proptest::prelude::*;
use qtoric::{canonical_class, count_nonbott, enumerate_classes, homeomorphic, tilde_equiv, CharPair, HomeoClass};
use rand::rngs::StdRng;
use rand::SeedableRng;

use common::{cp, random_valid_pair};

fn valid_pair(max_dim: usize) -> impl Strategy<Value = CharPair> {
    any::<u64>().prop_map(move |seed| random_valid_pair(&mut StdRng::seed_from_u64(seed), max_dim))
}

fn same_dims_pair(max_dim: usize) -> impl Strategy<Value = (CharPair, CharPair)> {
    (any::<u64>(), any::<u64>()).prop_map(move |(s1, s2)| {
        let c1 = random_valid_pair(&mut StdRng::seed_from_u64(s1), max_dim);
        let mut rng = StdRng::seed_from_u64(s2);
        let c2 = loop {
            let c = random_valid_pair(&mut rng, max_dim);
            if (c.n, c.m) == (c1.n, c1.m) {
                break c;
            }
        };
        (c1, c2)
    })
}

fn shuffled(c: &CharPair, ra: usize, rb: usize) -> CharPair {
    let mut a = c.a.clone();
    let mut b = c.b.clone();
    let (la, lb) = (a.len(), b.len());
    a.rotate_left(ra % la);
    b.rotate_left(rb % lb);
    b.reverse();
    cp(c.n, c.m, &a, &b)
}

/// Every vector of length `k` with entries in `[-bound, bound]`.
fn cube(k: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|v| (-bound..=bound).map(move |x| [v.clone(), vec![x]].concat()))
            .collect();
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn tilde_is_reflexive_symmetric_and_monotone(
        u in prop::collection::vec(-5i64..=5, 1..5),
        v in prop::collection::vec(-5i64..=5, 1..5),
        ell in 1usize..6,
    ) {
        prop_assert!(tilde_equiv(&u, &u, ell));
        prop_assert_eq!(tilde_equiv(&u, &v, ell), tilde_equiv(&v, &u, ell));
        if tilde_equiv(&u, &v, ell) {
            prop_assert!(tilde_equiv(&u, &v, ell - 1));
        }
    }

    #[test]
    fn class_ignores_relabelling(c in valid_pair(5), ra in 0usize..5, rb in 0usize..5) {
        let class = canonical_class(&c).unwrap();
        prop_assert_eq!(&canonical_class(&shuffled(&c, ra, rb)).unwrap(), &class);
        prop_assert_eq!(&canonical_class(&c.negated()).unwrap(), &class);
        prop_assert_eq!(&canonical_class(&c.swapped()).unwrap(), &class);
        let (n, m) = class.dims();
        prop_assert_eq!((n, m), (c.n.max(c.m), c.n.min(c.m)));
        let rep = class.representative();
        prop_assert_eq!(&canonical_class(&rep).unwrap(), &class);
    }

    #[test]
    fn verdict_agrees_with_class_equality((c1, c2) in same_dims_pair(4)) {
        let v = homeomorphic(&c1, &c2).unwrap();
        let equal = canonical_class(&c1).unwrap() == canonical_class(&c2).unwrap();
        prop_assert_eq!(v.homeomorphic, equal);
        let back = homeomorphic(&c2, &c1).unwrap();
        prop_assert_eq!(back.homeomorphic, v.homeomorphic);
        prop_assert_eq!(back.rule, v.rule);
        prop_assert!(homeomorphic(&c1, &c1).unwrap().homeomorphic);
    }
}

#[test]
fn tilde_is_transitive_on_small_vectors() {
    for k in 1..=3 {
        let vs = cube(k, 3);
        for ell in 1..=4 {
            let rel: Vec<Vec<bool>> = vs.iter().map(|u| vs.iter().map(|v| tilde_equiv(u, v, ell)).collect()).collect();
            for i in 0..vs.len() {
                for j in 0..vs.len() {
                    if !rel[i][j] {
                        continue;
                    }
                    for l in 0..vs.len() {
                        if rel[j][l] {
                            assert!(rel[i][l], "{:?} ~ {:?} ~ {:?} at ell={ell}", vs[i], vs[j], vs[l]);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn enumeration_is_distinct_and_self_consistent() {
    for (n, m) in [(1, 1), (2, 1), (3, 1), (2, 2), (3, 2), (3, 3), (4, 2)] {
        let classes = enumerate_classes(n, m, 2);
        assert_eq!(classes, enumerate_classes(m, n, 2));
        for (i, c) in classes.iter().enumerate() {
            assert_eq!(&canonical_class(&c.representative()).unwrap(), c);
            assert!(classes[i + 1..].iter().all(|d| d != c), "duplicate {c}");
        }
        if m >= 2 {
            let nonbott = classes.iter().filter(|c| matches!(c, HomeoClass::NonBott { .. })).count();
            assert_eq!(nonbott, count_nonbott(n, m), "n={n}, m={m}");
        }
    }
}
