//! Interleaving of root sequences, common interleavers and compatibility of
//! families with positive leading coefficients.

use num::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::{self, Rational};

use super::certificate::{Certificate, ChainLink, Checkpoint, Claim, Evidence, Verdict, WeightSample};
use super::roots::{compare_roots, isolate_roots, real_root_count, separating_point, IsolatingInterval, RootList};

pub const DEFAULT_SAMPLES: usize = 64;
pub const DEFAULT_SEED: u64 = 2012;

/// Weights are drawn from `{0, 1/16, ..., 1}`.
const WEIGHT_STEPS: i64 = 16;

fn real_rooted_roots(p: &Poly, index: usize) -> Result<RootList> {
    let roots = isolate_roots(p)?;
    let degree = p.degree().ok_or(Error::ZeroPolynomial)?;
    if roots.total_multiplicity() != degree {
        return Err(Error::NotRealRooted { index, real: roots.total_multiplicity(), degree });
    }
    Ok(roots)
}

/// Indices into a root list, each repeated by its multiplicity.
fn expanded(roots: &RootList) -> Vec<usize> {
    roots
        .roots()
        .iter()
        .enumerate()
        .flat_map(|(i, r)| std::iter::repeat_n(i, r.multiplicity()))
        .collect()
}

/// Does `f` (weakly or strictly) interleave `big`?
///
/// With roots `r_1 >= r_2 >= ...` of `f` and `s_1 >= s_2 >= ...` of `big`,
/// both counted with multiplicity, weak interleaving asks for
/// `s_1 >= r_1 >= s_2 >= r_2 >= ...` and strict for `>` throughout.
/// Both polynomials must be real-rooted and `deg f <= deg big <= deg f + 1`.
pub fn check_interleaving(f: &Poly, big: &Poly, strict: bool) -> Result<Certificate> {
    let mut small_roots = real_rooted_roots(f, 0)?;
    let mut big_roots = real_rooted_roots(big, 1)?;
    let (ds, db) = (f.deg(), big.deg());
    if db < ds || db > ds + 1 {
        return Err(Error::DegreeGap { small: ds, big: db });
    }

    let small_idx = expanded(&small_roots);
    let big_idx = expanded(&big_roots);
    // s1, r1, s2, r2, ... as (is_big, position in the expanded list)
    let mut seq: Vec<(bool, usize)> = Vec::with_capacity(small_idx.len() + big_idx.len());
    for j in 0..big_idx.len().max(small_idx.len()) {
        if j < big_idx.len() {
            seq.push((true, j));
        }
        if j < small_idx.len() {
            seq.push((false, j));
        }
    }

    let mut chain = Vec::new();
    let mut ok = true;
    for w in seq.windows(2) {
        let ((up_big, up_pos), (_, lo_pos)) = (w[0], w[1]);
        let (bi, si) = if up_big {
            (big_idx[up_pos], small_idx[lo_pos])
        } else {
            (big_idx[lo_pos], small_idx[up_pos])
        };
        let ord = compare_roots(&mut big_roots.roots_mut()[bi], &mut small_roots.roots_mut()[si]);
        let ord = if up_big { ord } else { ord.reverse() };
        let relation = match ord {
            Ordering::Greater => ">",
            Ordering::Equal => "=",
            Ordering::Less => "<",
        };
        ok &= ord == Ordering::Greater || (ord == Ordering::Equal && !strict);
        let name = |is_big: bool, pos: usize| format!("{}{}", if is_big { "s" } else { "r" }, pos + 1);
        chain.push(ChainLink {
            upper: name(up_big, up_pos),
            relation: relation.to_string(),
            lower: name(!up_big, lo_pos),
        });
    }

    let mut evidence = Evidence { chain, ..Evidence::default() };
    evidence.add_roots(0, &small_roots);
    evidence.add_roots(1, &big_roots);
    Ok(Certificate {
        claim: if strict { Claim::StrictlyInterleaves } else { Claim::Interleaves },
        polys: vec![f.clone(), big.clone()],
        evidence,
        verdict: Verdict::from_bool(ok),
        seed: None,
    })
}

/// Merge two decreasing root lists into the decreasing list of distinct roots.
fn merge_distinct(f: &mut RootList, g: &mut RootList) -> Vec<IsolatingInterval> {
    let (fr, gr) = (f.roots_mut(), g.roots_mut());
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::with_capacity(fr.len() + gr.len());
    while i < fr.len() || j < gr.len() {
        if j == gr.len() {
            out.push(fr[i].clone());
            i += 1;
        } else if i == fr.len() {
            out.push(gr[j].clone());
            j += 1;
        } else {
            match compare_roots(&mut fr[i], &mut gr[j]) {
                Ordering::Greater => {
                    out.push(fr[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(gr[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    out.push(fr[i].clone());
                    i += 1;
                    j += 1;
                }
            }
        }
    }
    out
}

/// Does some real-rooted polynomial interleave both `f` and `g`?
///
/// Equivalent to `|n_f(x) - n_g(x)| <= 1` for all real `x`, where `n_f(x)`
/// counts roots `>= x` with multiplicity. Both counts are constant on each
/// gap between consecutive distinct roots and at each root itself, so one
/// rational in every gap plus each rational root covers all of them. An
/// irrational root `t` has the same counts as any rational in `(t', t]` for
/// the next lower distinct root `t'`, i.e. as the gap point just below it.
pub fn common_interleaver_exists(f: &Poly, g: &Poly) -> Result<Certificate> {
    let mut fr = real_rooted_roots(f, 0)?;
    let mut gr = real_rooted_roots(g, 1)?;
    let mut merged = merge_distinct(&mut fr, &mut gr);

    let mut xs: Vec<Rational> = Vec::new();
    if merged.is_empty() {
        xs.push(Rational::zero());
    } else {
        xs.push(merged[0].hi() + Rational::one());
        for k in 0..merged.len() {
            if merged[k].is_exact() {
                xs.push(merged[k].lo().clone());
            }
            if k + 1 < merged.len() {
                let (upper, lower) = merged.split_at_mut(k + 1);
                xs.push(separating_point(&mut lower[0], &mut upper[k]));
            }
        }
        xs.push(merged[merged.len() - 1].lo() - Rational::one());
    }

    let checkpoints: Vec<Checkpoint> = xs
        .into_iter()
        .map(|x| Checkpoint { nf: fr.count_at_least(&x), ng: gr.count_at_least(&x), x })
        .collect();
    let ok = checkpoints.iter().all(|c| c.nf.abs_diff(c.ng) <= 1);

    let mut evidence = Evidence { checkpoints, ..Evidence::default() };
    evidence.add_roots(0, &fr);
    evidence.add_roots(1, &gr);
    Ok(Certificate {
        claim: Claim::CommonInterleaver,
        polys: vec![f.clone(), g.clone()],
        evidence,
        verdict: Verdict::from_bool(ok),
        seed: None,
    })
}

/// Are all nonnegative combinations of `polys` real-rooted?
///
/// Decided by the pairwise common-interleaver criterion (valid for
/// real-rooted polynomials with positive leading coefficients). Seeded
/// random combinations are checked directly as supporting evidence and
/// count towards the verdict.
pub fn check_compatibility(polys: &[Poly], samples: usize, seed: u64) -> Result<Certificate> {
    for (i, p) in polys.iter().enumerate() {
        match p.leading() {
            Some(c) if c.is_positive() => {}
            _ => return Err(Error::NonPositiveLeading(i)),
        }
        let degree = p.deg();
        let real = real_root_count(p)?;
        if real != degree {
            return Err(Error::NotRealRooted { index: i, real, degree });
        }
    }

    let mut pairs = Vec::new();
    for s in 0..polys.len() {
        for t in s + 1..polys.len() {
            pairs.push(common_interleaver_exists(&polys[s], &polys[t])?);
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sample_records = Vec::with_capacity(samples);
    for _ in 0..samples {
        let weights: Vec<i64> = loop {
            let w: Vec<i64> = polys.iter().map(|_| rng.gen_range(0..=WEIGHT_STEPS)).collect();
            if polys.is_empty() || w.iter().any(|&v| v != 0) {
                break w;
            }
        };
        let weights: Vec<Rational> = weights.iter().map(|&v| rational::frac(v, WEIGHT_STEPS)).collect();
        let combo = polys
            .iter()
            .zip(&weights)
            .fold(Poly::zero(), |acc, (p, w)| &acc + &p.scale(w));
        // positive leading coefficients cannot cancel, so combo is nonzero
        let degree = combo.deg();
        let real_roots = if combo.is_zero() { 0 } else { real_root_count(&combo)? };
        sample_records.push(WeightSample {
            weights: weights.iter().map(rational::to_string).collect(),
            degree,
            real_roots,
            pass: real_roots == degree,
        });
    }

    let ok = pairs.iter().all(Certificate::passed) && sample_records.iter().all(|s| s.pass);
    let evidence = Evidence { pairs, samples: sample_records, ..Evidence::default() };
    Ok(Certificate {
        claim: Claim::Compatible,
        polys: polys.to_vec(),
        evidence,
        verdict: Verdict::from_bool(ok),
        seed: Some(seed),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn from_roots(roots: &[i64]) -> Poly {
        roots
            .iter()
            .fold(Poly::one(), |acc, &r| &acc * &Poly::linear(int(1), int(-r)))
    }

    #[test]
    fn strict_and_weak_interleaving() {
        let f = from_roots(&[1, 3]);
        let big = from_roots(&[0, 2, 4]);
        assert!(check_interleaving(&f, &big, true).unwrap().passed());
        let shared = from_roots(&[1, 2, 4]);
        let cert = check_interleaving(&f, &shared, false).unwrap();
        assert!(cert.passed());
        assert!(!check_interleaving(&f, &shared, true).unwrap().passed());
        // wrong order: 5 > 4
        assert!(!check_interleaving(&from_roots(&[1, 5]), &big, false).unwrap().passed());
    }

    #[test]
    fn interleaving_with_equal_degree_and_multiplicity() {
        // s: 2, 0 ; r: 1, 0 -> 2 >= 1 >= 0 >= 0
        assert!(check_interleaving(&from_roots(&[0, 1]), &from_roots(&[0, 2]), false).unwrap().passed());
        // double root 1 inside s: 2, 1, 1 ; r: 1, 1 -> 2 >= 1 >= 1 >= 1 >= 1
        let cert = check_interleaving(&from_roots(&[1, 1]), &from_roots(&[1, 1, 2]), false).unwrap();
        assert!(cert.passed());
        assert_eq!(cert.evidence.chain.len(), 4);
    }

    #[test]
    fn interleaving_preconditions() {
        let no_real = Poly::from_ints(&[1, 0, 1]);
        assert!(matches!(
            check_interleaving(&no_real, &from_roots(&[0, 1, 2]), false),
            Err(Error::NotRealRooted { index: 0, real: 0, degree: 2 })
        ));
        assert!(matches!(
            check_interleaving(&from_roots(&[1]), &from_roots(&[0, 1, 2]), false),
            Err(Error::DegreeGap { small: 1, big: 3 })
        ));
    }

    #[test]
    fn compatible_pair_matches_discriminant_oracle() {
        let f = from_roots(&[2, 3]);
        let g = from_roots(&[0, 5]);
        let cert = check_compatibility(&[f.clone(), g.clone()], 32, 7).unwrap();
        assert!(cert.passed());
        // oracle: every combination on a grid has a nonnegative discriminant
        for a in 0..=4 {
            for b in 0..=4 {
                if a + b == 0 {
                    continue;
                }
                let p = &f.scale(&int(a)) + &g.scale(&int(b));
                let (c0, c1, c2) = (p.coeff(0), p.coeff(1), p.coeff(2));
                assert!(&c1 * &c1 - int(4) * c2 * c0 >= int(0));
            }
        }
    }

    #[test]
    fn incompatible_pair_matches_discriminant_oracle() {
        let f = from_roots(&[1, 2]);
        let g = from_roots(&[3, 4]);
        let sum = &f + &g;
        let disc = sum.coeff(1) * sum.coeff(1) - int(4) * sum.coeff(2) * sum.coeff(0);
        assert!(disc < int(0));
        let cert = common_interleaver_exists(&f, &g).unwrap();
        assert!(!cert.passed());
        assert!(cert.evidence.checkpoints.iter().any(|c| c.nf.abs_diff(c.ng) > 1));
        assert!(!check_compatibility(&[f, g], 0, 1).unwrap().passed());
    }

    #[test]
    fn irrational_roots_and_shared_roots() {
        // x^2 - 2 and x^2 - 3: roots +-sqrt2, +-sqrt3 alternate
        let f = Poly::from_ints(&[-2, 0, 1]);
        let g = Poly::from_ints(&[-3, 0, 1]);
        assert!(common_interleaver_exists(&f, &g).unwrap().passed());
        // shared root sqrt2
        let h = &f * &Poly::from_ints(&[-5, 1]);
        let k = &f * &Poly::from_ints(&[7, 1]);
        assert!(common_interleaver_exists(&h, &k).unwrap().passed());
        // (x^2-2)^2: n_f jumps by 2 at each root
        let sq = f.pow(2);
        assert!(!common_interleaver_exists(&sq, &g).unwrap().passed());
        assert!(common_interleaver_exists(&sq, &(&f * &g)).unwrap().passed());
    }

    #[test]
    fn compatibility_preconditions() {
        let neg = Poly::from_ints(&[1, -1]);
        assert_eq!(
            check_compatibility(&[from_roots(&[0]), neg], 4, 0).unwrap_err(),
            Error::NonPositiveLeading(1)
        );
        let no_real = Poly::from_ints(&[1, 0, 1]);
        assert!(matches!(
            check_compatibility(&[no_real], 4, 0),
            Err(Error::NotRealRooted { index: 0, .. })
        ));
    }

    #[test]
    fn sampling_is_seeded() {
        let polys = [from_roots(&[2, 3]), from_roots(&[0, 5]), from_roots(&[1, 4])];
        let a = check_compatibility(&polys, 16, 99).unwrap();
        let b = check_compatibility(&polys, 16, 99).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.seed, Some(99));
        assert_eq!(a.evidence.pairs.len(), 3);
    }
}
