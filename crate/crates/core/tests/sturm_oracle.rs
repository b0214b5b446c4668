//! Root isolation checked against polynomials built from known rational roots.

use std::cmp::Ordering;

use eulercert::rational::{frac, int};
use eulercert::rootcert::{certify_real_rooted, isolate_roots, nf_at, real_root_count, sturm_count, Region};
use eulercert::{Poly, Rational};
use proptest::prelude::*;

fn build(roots: &[(Rational, usize)], lead: i64) -> Poly {
    roots
        .iter()
        .fold(Poly::constant(int(lead)), |acc, (r, m)| &acc * &Poly::linear(int(1), -r).pow(*m))
}

fn distinct_roots() -> impl Strategy<Value = Vec<(Rational, usize)>> {
    prop::collection::vec(((-20i64..=20, 1i64..=4), 1usize..=2), 1..=6).prop_map(|raw| {
        let mut out: Vec<(Rational, usize)> = Vec::new();
        for ((n, d), m) in raw {
            let r = frac(n, d);
            if out.iter().all(|(s, _)| *s != r) && out.iter().map(|(_, k)| k).sum::<usize>() + m <= 8 {
                out.push((r, m));
            }
        }
        out
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn isolation_recovers_known_roots(roots in distinct_roots(), lead in prop::sample::select(vec![-3i64, -1, 1, 2, 7])) {
        let p = build(&roots, lead);
        let degree: usize = roots.iter().map(|(_, m)| m).sum();
        prop_assert_eq!(real_root_count(&p).unwrap(), degree);
        let list = isolate_roots(&p).unwrap();
        let mut sorted = roots.clone();
        sorted.sort_by(|a, b| b.0.cmp(&a.0));
        prop_assert_eq!(list.distinct(), sorted.len());
        for (iv, (r, m)) in list.roots().iter().zip(&sorted) {
            prop_assert_eq!(iv.cmp_rational(r), Ordering::Equal);
            prop_assert_eq!(iv.multiplicity(), *m);
        }
        let cert = certify_real_rooted(&p, Region::AllReals).unwrap();
        prop_assert!(cert.passed());
        prop_assert_eq!(cert.recheck_real_rooted(), Some(true));
    }

    #[test]
    fn sturm_count_matches_root_list(
        roots in distinct_roots(),
        a in (-100i64..=100, 1i64..=9),
        b in (-100i64..=100, 1i64..=9),
    ) {
        let p = build(&roots, 1);
        let (a, b) = (frac(a.0, a.1), frac(b.0, b.1));
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        prop_assume!(lo != hi && roots.iter().all(|(r, _)| *r != lo && *r != hi));
        let expected = roots.iter().filter(|(r, _)| &lo < r && r < &hi).count();
        prop_assert_eq!(sturm_count(&p, &lo, &hi).unwrap(), expected);
        let at_least: usize = roots.iter().filter(|(r, _)| r >= &lo).map(|(_, m)| m).sum();
        prop_assert_eq!(nf_at(&p, &lo).unwrap(), at_least);
    }

    #[test]
    fn irrational_pairs_are_counted(c in 2i64..=50, shift in -5i64..=5) {
        // (x - shift)^2 - c has two real roots unless c is a square
        let p = &Poly::linear(int(1), int(-shift)).pow(2) - &Poly::constant(int(c));
        prop_assert_eq!(real_root_count(&p).unwrap(), 2);
        let q = &p * &Poly::from_ints(&[1, 0, 1]);
        prop_assert_eq!(real_root_count(&q).unwrap(), 2);
        prop_assert!(!certify_real_rooted(&q, Region::AllReals).unwrap().passed());
    }
}
