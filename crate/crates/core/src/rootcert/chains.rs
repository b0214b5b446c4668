//! Positive-root interleaving chains of the transformed families, and the
//! batch suites over the derivative and Eulerian polynomials.

use num::{BigInt, One, Zero};
use rayon::prelude::*;
use std::cmp::Ordering;

use crate::derivpoly::{family_poly, p_tilde, q_tilde, Family};
use crate::error::Result;
use crate::eulerian::{eulerian_fast, CoxeterType};
use crate::poly::Poly;
use crate::rational::{self, int, Rational};
use crate::report::Report;

use super::certificate::{Certificate, Region};
use super::interleave::{check_compatibility, check_interleaving};
use super::realrooted::certify_real_rooted;
use super::roots::{compare_roots, isolate_roots, IsolatingInterval};

#[derive(Clone, Copy, Debug)]
enum Pt {
    /// `(list, index)`: the `index+1`-th largest positive root of a list
    Root(usize, usize),
    Zero,
}

fn two_mut<T>(v: &mut [Vec<T>], a: (usize, usize), b: (usize, usize)) -> (&mut T, &mut T) {
    assert_ne!(a.0, b.0);
    if a.0 < b.0 {
        let (x, y) = v.split_at_mut(b.0);
        (&mut x[a.0][a.1], &mut y[0][b.1])
    } else {
        let (x, y) = v.split_at_mut(a.0);
        (&mut y[0][a.1], &mut x[b.0][b.1])
    }
}

fn greater(lists: &mut [Vec<IsolatingInterval>], a: Pt, b: Pt) -> bool {
    match (a, b) {
        (Pt::Root(la, ia), Pt::Root(lb, ib)) => {
            let (x, y) = two_mut(lists, (la, ia), (lb, ib));
            compare_roots(x, y) == Ordering::Greater
        }
        (Pt::Root(l, i), Pt::Zero) => lists[l][i].cmp_rational(&Rational::zero()) == Ordering::Greater,
        _ => unreachable!("zero only closes a chain"),
    }
}

fn strictly_decreasing(lists: &mut [Vec<IsolatingInterval>], chain: &[Pt]) -> bool {
    chain.windows(2).all(|w| greater(lists, w[0], w[1]))
}

/// Degree, number of positive roots, simplicity and leading coefficient.
struct Shape<'a> {
    name: &'a str,
    poly: Poly,
    degree: usize,
    positive: usize,
    lead: BigInt,
    zero_root: bool,
}

fn check_shape(report: &mut Report, m: usize, s: &Shape<'_>) -> Result<Option<Vec<IsolatingInterval>>> {
    let roots = isolate_roots(&s.poly)?;
    let simple = roots.roots().iter().all(|r| r.multiplicity() == 1);
    let positive = roots.positive();
    let zero_mult = roots.multiplicity_at(&Rational::zero());
    let got = format!(
        "degree={} real={} simple={} positive={} zero_root={} lead={}",
        s.poly.deg(),
        roots.total_multiplicity(),
        simple,
        positive.len(),
        zero_mult == 1,
        s.poly.leading().map(rational::to_string).unwrap_or_default(),
    );
    let expected = format!(
        "degree={} real={} simple=true positive={} zero_root={} lead={}",
        s.degree,
        s.degree,
        s.positive,
        s.zero_root,
        rational::to_string(&Rational::from_integer(s.lead.clone())),
    );
    let pass = got == expected;
    report.record(&format!("shape_{}", s.name), m, expected, got, pass);
    Ok(pass.then_some(positive))
}

fn factorial(n: usize) -> BigInt {
    rational::factorial(n)
}

/// Even case for `m`: positive roots `s_i` of `a_(2m-1)`, `r_i` of `b_(2m)`
/// and `c_i` of `d_(2m)` satisfy
/// `1 = s_1 > r_1 > s_2 > r_2 > ... > s_m > r_m > 0` and
/// `r_1 > c_1 > s_2 > r_2 > c_2 > ... > r_m > c_m > 0`.
fn even_chains(m: usize, report: &mut Report) -> Result<()> {
    let n = 2 * m;
    let a = family_poly(Family::TransformedA, n - 1)?;
    let b = family_poly(Family::TransformedB, n)?;
    let d = family_poly(Family::TransformedD, n)?;
    let sa = check_shape(report, m, &Shape {
        name: "a_odd",
        poly: a,
        degree: n,
        positive: m,
        lead: factorial(n - 1),
        zero_root: false,
    })?;
    let sb = check_shape(report, m, &Shape {
        name: "b_even",
        poly: b,
        degree: n,
        positive: m,
        lead: factorial(n) << (2 * m),
        zero_root: false,
    })?;
    // d_2 = x^2 has its double root at zero
    let sd = if m >= 2 {
        check_shape(report, m, &Shape {
            name: "d_even",
            poly: d,
            degree: n,
            positive: m,
            lead: factorial(n) / 2,
            zero_root: false,
        })?
    } else {
        let pass = d == Poly::from_ints(&[0, 0, 1]);
        report.record("shape_d_even", m, "x^2".into(), d.to_string(), pass);
        None
    };

    let (Some(sa), Some(sb)) = (sa, sb) else {
        report.record("chain_s_r", m, "true".into(), "shape failed".into(), false);
        return Ok(());
    };
    report.compare("s1_equals_one", m, true, sa[0].cmp_rational(&Rational::one()) == Ordering::Equal);
    let mut lists = vec![sa, sb, sd.unwrap_or_default()];
    let mut chain = Vec::new();
    for j in 0..m {
        chain.push(Pt::Root(0, j));
        chain.push(Pt::Root(1, j));
    }
    chain.push(Pt::Zero);
    report.compare("chain_s_r", m, true, strictly_decreasing(&mut lists, &chain));

    if m >= 2 {
        if lists[2].len() != m {
            report.record("chain_r_c_s", m, "true".into(), "shape failed".into(), false);
            return Ok(());
        }
        let mut chain = Vec::new();
        for j in 0..m {
            chain.push(Pt::Root(1, j));
            chain.push(Pt::Root(2, j));
            if j + 1 < m {
                chain.push(Pt::Root(0, j + 1));
            }
        }
        chain.push(Pt::Zero);
        report.compare("chain_r_c_s", m, true, strictly_decreasing(&mut lists, &chain));
    }
    Ok(())
}

/// Odd case for `m`: zero is a simple root of `a_(2m)`, `b_(2m+1)` and
/// `d_(2m+1)`, and their positive roots satisfy
/// `1 = a_1 > b_1 > a_2 > b_2 > ... > a_m > b_m > 0` and
/// `b_1 > d_1 > a_2 > b_2 > d_2 > ... > b_m > d_m > 0`.
fn odd_chains(m: usize, report: &mut Report) -> Result<()> {
    let n = 2 * m + 1;
    let a = family_poly(Family::TransformedA, n - 1)?;
    let b = family_poly(Family::TransformedB, n)?;
    let d = family_poly(Family::TransformedD, n)?;
    let shapes = [
        Shape { name: "a_even", poly: a, degree: n, positive: m, lead: factorial(n - 1), zero_root: true },
        Shape { name: "b_odd", poly: b, degree: n, positive: m, lead: factorial(n) << n, zero_root: true },
        Shape { name: "d_odd", poly: d, degree: n, positive: m, lead: factorial(n) / 2, zero_root: true },
    ];
    let mut lists = Vec::new();
    for s in &shapes {
        lists.push(check_shape(report, m, s)?);
    }
    let Some(mut lists) = lists.into_iter().collect::<Option<Vec<_>>>() else {
        report.record("chain_a_b", m, "true".into(), "shape failed".into(), false);
        return Ok(());
    };
    report.compare("a1_equals_one", m, true, lists[0][0].cmp_rational(&Rational::one()) == Ordering::Equal);

    let mut chain = Vec::new();
    for j in 0..m {
        chain.push(Pt::Root(0, j));
        chain.push(Pt::Root(1, j));
    }
    chain.push(Pt::Zero);
    report.compare("chain_a_b", m, true, strictly_decreasing(&mut lists, &chain));

    let mut chain = Vec::new();
    for j in 0..m {
        chain.push(Pt::Root(1, j));
        chain.push(Pt::Root(2, j));
        if j + 1 < m {
            chain.push(Pt::Root(0, j + 1));
        }
    }
    chain.push(Pt::Zero);
    report.compare("chain_b_d_a", m, true, strictly_decreasing(&mut lists, &chain));
    Ok(())
}

/// Both parity cases for `1 <= m <= m_max`.
///
/// The `r > c > s` chain needs `d_(2m)` to have `m` positive roots, which
/// fails for `d_2 = x^2`; it is checked from `m = 2`.
pub fn verify_zero_chains(m_max: usize) -> Result<Report> {
    let parts: Vec<Result<Report>> = (1..=m_max)
        .into_par_iter()
        .map(|m| {
            let mut report = Report::new();
            even_chains(m, &mut report)?;
            odd_chains(m, &mut report)?;
            Ok(report)
        })
        .collect();
    let mut report = Report::new();
    for part in parts {
        report.extend(part?);
    }
    Ok(report)
}

fn unit_closed() -> Region {
    Region::ClosedInterval { lo: int(-1), hi: int(1) }
}

fn unit_open() -> Region {
    Region::OpenInterval { lo: int(-1), hi: int(1) }
}

/// One named certificate of a suite.
#[derive(Clone, Debug)]
pub struct SuiteItem {
    pub label: String,
    pub n: usize,
    pub certificate: Certificate,
}

fn collect_items(parts: Vec<Result<Vec<SuiteItem>>>) -> Result<Vec<SuiteItem>> {
    let mut out = Vec::new();
    for p in parts {
        out.extend(p?);
    }
    Ok(out)
}

/// For `2 <= n <= n_max`: `Q_n` strictly interleaves `P_n`, `P_(n-1)`
/// interleaves `P_n`, `Q_(n-1)` interleaves `Q_n`, the roots of `P_n` lie in
/// `[-1, 1]` and those of `Q_n` in `(-1, 1)`.
pub fn derivative_interleaving_suite(n_max: usize) -> Result<Vec<SuiteItem>> {
    let parts = (2..=n_max.max(1))
        .into_par_iter()
        .map(|n| {
            let (p, p1, q, q1) = (p_tilde(n), p_tilde(n - 1), q_tilde(n), q_tilde(n - 1));
            let item = |label: &str, certificate| SuiteItem { label: label.into(), n, certificate };
            Ok(vec![
                item("Q_n strictly interleaves P_n", check_interleaving(&q, &p, true)?),
                item("P_(n-1) interleaves P_n", check_interleaving(&p1, &p, false)?),
                item("Q_(n-1) interleaves Q_n", check_interleaving(&q1, &q, false)?),
                item("P_n roots in [-1,1]", certify_real_rooted(&p, unit_closed())?),
                item("Q_n roots in (-1,1)", certify_real_rooted(&q, unit_open())?),
            ])
        })
        .collect();
    collect_items(parts)
}

/// `D_n` has only real, negative roots, `2 <= n <= n_max`.
pub fn type_d_real_rooted_suite(n_max: usize) -> Result<Vec<SuiteItem>> {
    let parts = (2..=n_max.max(1))
        .into_par_iter()
        .map(|n| {
            let d = eulerian_fast(CoxeterType::D, n)?;
            Ok(vec![SuiteItem {
                label: "D_n real-rooted, roots negative".into(),
                n,
                certificate: certify_real_rooted(&d, Region::NegativeAxis)?,
            }])
        })
        .collect();
    collect_items(parts)
}

/// `{a_(n-1), b_n, d_n}` and `{A_(n-1), B_n, D_n}` are compatible,
/// `2 <= n <= n_max`.
pub fn compatibility_suite(n_max: usize, samples: usize, seed: u64) -> Result<Vec<SuiteItem>> {
    let parts = (2..=n_max.max(1))
        .into_par_iter()
        .map(|n| {
            let transformed = [
                family_poly(Family::TransformedA, n - 1)?,
                family_poly(Family::TransformedB, n)?,
                family_poly(Family::TransformedD, n)?,
            ];
            let eulerian = [
                eulerian_fast(CoxeterType::A, n - 1)?,
                eulerian_fast(CoxeterType::B, n)?,
                eulerian_fast(CoxeterType::D, n)?,
            ];
            Ok(vec![
                SuiteItem {
                    label: "{a_(n-1), b_n, d_n} compatible".into(),
                    n,
                    certificate: check_compatibility(&transformed, samples, seed)?,
                },
                SuiteItem {
                    label: "{A_(n-1), B_n, D_n} compatible".into(),
                    n,
                    certificate: check_compatibility(&eulerian, samples, seed)?,
                },
            ])
        })
        .collect();
    collect_items(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_chains_small() {
        let report = verify_zero_chains(5).unwrap();
        let failures: Vec<_> = report.failures().collect();
        assert!(failures.is_empty(), "{failures:?}");
        assert!(report.entries.iter().any(|e| e.check == "chain_r_c_s" && e.n == 2));
        assert!(!report.entries.iter().any(|e| e.check == "chain_r_c_s" && e.n == 1));
    }

    #[test]
    fn a3_positive_root_is_one() {
        // a_3 = 6x^4 - 8x^2 + 2 = 2(3x^2 - 1)(x^2 - 1)
        let a3 = family_poly(Family::TransformedA, 3).unwrap();
        assert_eq!(a3, Poly::from_ints(&[2, 0, -8, 0, 6]));
        let pos = isolate_roots(&a3).unwrap().positive();
        assert_eq!(pos[0].cmp_rational(&int(1)), Ordering::Equal);
    }

    #[test]
    fn suites_small() {
        for item in derivative_interleaving_suite(6).unwrap() {
            assert!(item.certificate.passed(), "{} n={}", item.label, item.n);
        }
        for item in type_d_real_rooted_suite(8).unwrap() {
            assert!(item.certificate.passed(), "{} n={}", item.label, item.n);
            assert_eq!(item.certificate.recheck_real_rooted(), Some(true));
        }
        for item in compatibility_suite(5, 8, 1).unwrap() {
            assert!(item.certificate.passed(), "{} n={}", item.label, item.n);
        }
    }
}
