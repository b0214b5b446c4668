use num::Zero;
use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::Rational;

use super::certificate::{Certificate, Claim, Evidence, Region, Verdict};
use super::roots::{isolate_roots, IsolatingInterval};

/// Decide whether the root lies in the region; when it does, tighten the
/// interval so the recorded evidence shows it.
fn settle_in_region(root: &mut IsolatingInterval, region: &Region) -> bool {
    match region {
        Region::AllReals => true,
        Region::NegativeAxis => {
            let zero = Rational::zero();
            let inside = root.cmp_rational(&zero) == Ordering::Less;
            if inside {
                root.shrink_into(None, Some(&zero));
            }
            inside
        }
        Region::OpenInterval { lo, hi } => {
            let inside = root.cmp_rational(lo) == Ordering::Greater && root.cmp_rational(hi) == Ordering::Less;
            if inside {
                root.shrink_into(Some(lo), Some(hi));
            }
            inside
        }
        Region::ClosedInterval { lo, hi } => {
            let inside = root.cmp_rational(lo) != Ordering::Less && root.cmp_rational(hi) != Ordering::Greater;
            if inside && !root.pin_if_equal(lo) && !root.pin_if_equal(hi) {
                root.shrink_into(Some(lo), Some(hi));
            }
            inside
        }
    }
}

/// Certify that every root of `p` is real and lies in `region`.
pub fn certify_real_rooted(p: &Poly, region: Region) -> Result<Certificate> {
    let degree = p.degree().ok_or(Error::ZeroPolynomial)?;
    if degree == 0 {
        return Err(Error::Domain("a constant polynomial has no roots to certify".into()));
    }
    let mut roots = isolate_roots(p)?;
    let mut inside = true;
    for r in roots.roots_mut() {
        inside &= settle_in_region(r, &region);
    }
    let ok = inside && roots.total_multiplicity() == degree;
    let mut evidence = Evidence { region: Some(region), ..Evidence::default() };
    evidence.add_roots(0, &roots);
    Ok(Certificate {
        claim: Claim::RealRootedInRegion,
        polys: vec![p.clone()],
        evidence,
        verdict: Verdict::from_bool(ok),
        seed: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derivpoly::{p_tilde, q_tilde};
    use crate::rational::{frac, int};

    fn closed_unit() -> Region {
        Region::ClosedInterval { lo: int(-1), hi: int(1) }
    }

    fn open_unit() -> Region {
        Region::OpenInterval { lo: int(-1), hi: int(1) }
    }

    #[test]
    fn certificates_recheck() {
        let p = Poly::from_ints(&[6, 11, 6, 1]); // roots -1, -2, -3
        let cert = certify_real_rooted(&p, Region::NegativeAxis).unwrap();
        assert!(cert.passed());
        assert_eq!(cert.recheck_real_rooted(), Some(true));
        let cert = certify_real_rooted(&Poly::from_ints(&[1, 0, 1]), Region::AllReals).unwrap();
        assert!(!cert.passed());
        assert_eq!(cert.recheck_real_rooted(), Some(false));
    }

    #[test]
    fn region_boundaries() {
        // x^2 - 1 has roots on the boundary of [-1, 1]
        let p = Poly::from_ints(&[-1, 0, 1]);
        assert!(certify_real_rooted(&p, closed_unit()).unwrap().passed());
        assert!(!certify_real_rooted(&p, open_unit()).unwrap().passed());
        let q = Poly::from_ints(&[-1, 0, 2]); // +-1/sqrt2
        let cert = certify_real_rooted(&q, open_unit()).unwrap();
        assert!(cert.passed());
        assert_eq!(cert.recheck_real_rooted(), Some(true));
        // 0 is not negative
        assert!(!certify_real_rooted(&Poly::from_ints(&[0, 1, 1]), Region::NegativeAxis).unwrap().passed());
        let narrow = Region::OpenInterval { lo: frac(-1, 2), hi: frac(1, 2) };
        assert!(!certify_real_rooted(&q, narrow).unwrap().passed());
    }

    #[test]
    fn derivative_polys_in_unit_interval() {
        for n in 1..=10 {
            let cp = certify_real_rooted(&p_tilde(n), closed_unit()).unwrap();
            assert!(cp.passed(), "P{n}");
            assert_eq!(cp.recheck_real_rooted(), Some(true));
            let cq = certify_real_rooted(&q_tilde(n), open_unit()).unwrap();
            assert!(cq.passed(), "Q{n}");
            assert_eq!(cq.recheck_real_rooted(), Some(true));
        }
    }

    #[test]
    fn tampered_evidence_is_rejected() {
        let p = Poly::from_ints(&[6, 11, 6, 1]);
        let mut cert = certify_real_rooted(&p, Region::NegativeAxis).unwrap();
        cert.evidence.roots[0].mult = 2;
        assert_eq!(cert.recheck_real_rooted(), Some(false));
        let mut cert = certify_real_rooted(&p, Region::NegativeAxis).unwrap();
        cert.evidence.roots.pop();
        assert_eq!(cert.recheck_real_rooted(), Some(false));
        let mut cert = certify_real_rooted(&p, Region::NegativeAxis).unwrap();
        cert.evidence.region = Some(Region::OpenInterval { lo: int(-2), hi: int(0) });
        assert_eq!(cert.recheck_real_rooted(), Some(false));
    }

    #[test]
    fn constant_is_rejected() {
        assert!(matches!(certify_real_rooted(&Poly::one(), Region::AllReals), Err(Error::Domain(_))));
        assert_eq!(certify_real_rooted(&Poly::zero(), Region::AllReals).unwrap_err(), Error::ZeroPolynomial);
    }
}
