//! Descent statistics on the Coxeter groups of types A, B and D and the
//! resulting Eulerian polynomials.
//!
//! Two independent routes are provided: [`eulerian_brute`] enumerates the
//! group, [`eulerian_fast`] goes through the derivative polynomials and the
//! Cayley-type substitution `x -> (x-1)/(x+1)` without touching the group.
//!
//! Conventions for small `n`: `A_0 = x`, `B_0 = 1`, `D_0 = D_1 = 1`.

use num::BigInt;
use rayon::prelude::*;
use std::fmt;
use std::str::FromStr;

use crate::derivpoly::{family_poly, Family};
use crate::error::{Error, Result};
use crate::poly::{MobiusMap, Poly};
use crate::rational::{self, Rational};
use crate::report::Report;

pub const DEFAULT_BRUTE_CAP: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoxeterType {
    A,
    B,
    D,
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CoxeterType::A => "A",
            CoxeterType::B => "B",
            CoxeterType::D => "D",
        };
        f.write_str(s)
    }
}

impl FromStr for CoxeterType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" => Ok(CoxeterType::A),
            "B" => Ok(CoxeterType::B),
            "D" => Ok(CoxeterType::D),
            _ => Err(Error::Domain(format!("unknown Coxeter type {s:?}"))),
        }
    }
}

/// A signed permutation in one-line notation `pi(1) .. pi(n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedPerm {
    window: Vec<i32>,
}

impl SignedPerm {
    pub fn new(window: Vec<i32>) -> Result<Self> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &v in &window {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(Error::InvalidElement(format!(
                    "{window:?} is not a signed permutation"
                )));
            }
            seen[a] = true;
        }
        Ok(SignedPerm { window })
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    pub fn len(&self) -> usize {
        self.window.len()
    }

    pub fn is_empty(&self) -> bool {
        self.window.is_empty()
    }

    pub fn negatives(&self) -> usize {
        self.window.iter().filter(|&&v| v < 0).count()
    }
}

fn group_order(t: CoxeterType, n: usize) -> BigInt {
    let f = rational::factorial(n);
    match t {
        CoxeterType::A => f,
        CoxeterType::B => f << n,
        CoxeterType::D => f << n.saturating_sub(1),
    }
}

fn check_budget(t: CoxeterType, n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::Capacity { n, cap });
    }
    if n == 0 || (t == CoxeterType::D && n < 2) {
        return Err(Error::Domain(format!("type {t} enumeration needs larger n, got {n}")));
    }
    Ok(())
}

/// Advance to the next permutation in lexicographic order.
fn next_permutation(p: &mut [u8]) -> bool {
    let Some(i) = p.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = p.iter().rposition(|&x| x > p[i]).expect("pivot has a successor");
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

/// Group elements in lexicographic order on (absolute permutation, sign mask);
/// bit `i` of the mask negates entry `i`.
pub struct GroupIter {
    t: CoxeterType,
    abs: Vec<u8>,
    mask: u32,
    done: bool,
}

impl Iterator for GroupIter {
    type Item = SignedPerm;

    fn next(&mut self) -> Option<SignedPerm> {
        let n = self.abs.len();
        loop {
            if self.done {
                return None;
            }
            let mask = self.mask;
            let window = apply_mask(&self.abs, mask);
            let last_mask = match self.t {
                CoxeterType::A => 0,
                _ => (1u32 << n) - 1,
            };
            if mask < last_mask {
                self.mask += 1;
            } else {
                self.mask = 0;
                self.done = !next_permutation(&mut self.abs);
            }
            if self.t == CoxeterType::D && mask.count_ones() % 2 == 1 {
                continue;
            }
            return Some(SignedPerm { window });
        }
    }
}

fn apply_mask(abs: &[u8], mask: u32) -> Vec<i32> {
    abs.iter()
        .enumerate()
        .map(|(i, &a)| if mask >> i & 1 == 1 { -(a as i32) } else { a as i32 })
        .collect()
}

pub fn enumerate_group(t: CoxeterType, n: usize, cap: usize) -> Result<GroupIter> {
    check_budget(t, n, cap)?;
    Ok(GroupIter {
        t,
        abs: (1..=n as u8).collect(),
        mask: 0,
        done: false,
    })
}

pub fn group_size(t: CoxeterType, n: usize) -> BigInt {
    group_order(t, n)
}

/// Descents of a one-line window under the boundary convention of `t`.
fn descents_of(t: CoxeterType, w: &[i32]) -> usize {
    let plain = w.windows(2).filter(|p| p[0] > p[1]).count();
    match t {
        CoxeterType::A => plain,
        // pi(0) = 0
        CoxeterType::B => plain + usize::from(w[0] < 0),
        // pi(0) = -pi(2)
        CoxeterType::D => plain + usize::from(-w[1] > w[0]),
    }
}

pub fn descent_count(t: CoxeterType, pi: &SignedPerm) -> Result<usize> {
    let w = pi.window();
    match t {
        CoxeterType::A if pi.negatives() > 0 => Err(Error::InvalidElement(format!(
            "{w:?} has negative entries; not in S_n"
        ))),
        CoxeterType::D if pi.negatives() % 2 == 1 => Err(Error::InvalidElement(format!(
            "{w:?} has an odd number of negative entries"
        ))),
        CoxeterType::D if w.len() < 2 => Err(Error::Domain(
            "type-D descents need n >= 2".to_string(),
        )),
        _ if w.is_empty() => Ok(0),
        _ => Ok(descents_of(t, w)),
    }
}

/// Descent distribution over all elements whose absolute first entry is `first`.
fn partial_distribution(t: CoxeterType, n: usize, first: u8) -> Vec<u64> {
    let mut counts = vec![0u64; n + 1];
    let mut rest: Vec<u8> = (1..=n as u8).filter(|&v| v != first).collect();
    let mut abs = vec![0u8; n];
    let mut w = vec![0i32; n];
    let masks: u32 = match t {
        CoxeterType::A => 1,
        _ => 1 << n,
    };
    loop {
        abs[0] = first;
        abs[1..].copy_from_slice(&rest);
        for mask in 0..masks {
            if t == CoxeterType::D && mask.count_ones() % 2 == 1 {
                continue;
            }
            for (i, (&a, slot)) in abs.iter().zip(w.iter_mut()).enumerate() {
                *slot = if mask >> i & 1 == 1 { -(a as i32) } else { a as i32 };
            }
            counts[descents_of(t, &w)] += 1;
        }
        if !next_permutation(&mut rest) {
            break;
        }
    }
    counts
}

/// Exact descent distribution by enumerating the whole group. Work is split
/// by the absolute value of the first entry.
pub fn eulerian_brute(t: CoxeterType, n: usize, cap: usize) -> Result<Poly> {
    if n > cap {
        return Err(Error::Capacity { n, cap });
    }
    match (t, n) {
        (CoxeterType::A, 0) => return Ok(Poly::x()),
        (CoxeterType::B, 0) | (CoxeterType::D, 0 | 1) => return Ok(Poly::one()),
        _ => {}
    }
    let counts = (1..=n as u8)
        .into_par_iter()
        .map(|first| partial_distribution(t, n, first))
        .reduce(
            || vec![0u64; n + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    let shift = usize::from(t == CoxeterType::A);
    let mut coeffs = vec![BigInt::from(0); shift];
    coeffs.extend(counts.into_iter().map(BigInt::from));
    Ok(Poly::from_bigints(coeffs))
}

/// Eulerian polynomials without enumeration: invert the substitution
/// `(x+1)^m p((x-1)/(x+1))` on `a_n` / `b_n`, then combine
/// `D_n = B_n - n 2^(n-1) A_(n-1)`.
pub fn eulerian_fast(t: CoxeterType, n: usize) -> Result<Poly> {
    let inverse = MobiusMap::cayley_inverse();
    match t {
        // a_0 = x is the recurrence seed, not the transform of A_0 = x
        CoxeterType::A if n == 0 => Ok(Poly::x()),
        CoxeterType::A => {
            let a = family_poly(Family::TransformedA, n)?;
            Ok(a.mobius_compose(&inverse, n + 1)?
                .scale(&Rational::new(1.into(), BigInt::from(1) << (n + 1))))
        }
        CoxeterType::B => {
            let b = family_poly(Family::TransformedB, n)?;
            Ok(b.mobius_compose(&inverse, n)?
                .scale(&Rational::new(1.into(), BigInt::from(1) << n)))
        }
        CoxeterType::D if n < 2 => Ok(Poly::one()),
        CoxeterType::D => {
            let b = eulerian_fast(CoxeterType::B, n)?;
            let a = eulerian_fast(CoxeterType::A, n - 1)?;
            Ok(&b - &a.scale(&stembridge_factor(n)))
        }
    }
}

/// `n 2^(n-1)`
fn stembridge_factor(n: usize) -> Rational {
    Rational::from_integer(BigInt::from(n) << (n - 1))
}

fn coeff_list(p: &Poly) -> String {
    let cells: Vec<String> = p.coeffs().iter().map(rational::to_cell).collect();
    format!("[{}]", cells.join(","))
}

/// Brute-force check of `D_n = B_n - n 2^(n-1) A_(n-1)` for `2 <= n <= n_max`.
pub fn verify_stembridge(n_max: usize, cap: usize) -> Result<Report> {
    if n_max >= 2 && n_max > cap {
        return Err(Error::Capacity { n: n_max, cap });
    }
    let mut report = Report::new();
    for n in 2..=n_max {
        let d = eulerian_brute(CoxeterType::D, n, cap)?;
        let b = eulerian_brute(CoxeterType::B, n, cap)?;
        let a = eulerian_brute(CoxeterType::A, n - 1, cap)?;
        let rhs = &b - &a.scale(&stembridge_factor(n));
        report.record(
            "stembridge",
            n,
            coeff_list(&rhs),
            coeff_list(&d),
            rhs == d,
        );
    }
    Ok(report)
}

/// Coefficient-exact comparison of the two routes for one type and index.
pub fn fast_matches_brute(t: CoxeterType, n: usize, cap: usize) -> Result<bool> {
    Ok(eulerian_fast(t, n)? == eulerian_brute(t, n, cap)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::Zero;
    use proptest::prelude::*;
    use CoxeterType::*;

    fn sp(w: &[i32]) -> SignedPerm {
        SignedPerm::new(w.to_vec()).unwrap()
    }

    #[test]
    fn group_sizes() {
        assert_eq!(enumerate_group(A, 3, 10).unwrap().count(), 6);
        assert_eq!(enumerate_group(B, 2, 10).unwrap().count(), 8);
        for n in 2..=6 {
            for t in [A, B, D] {
                let count = enumerate_group(t, n, 10).unwrap().count();
                assert_eq!(BigInt::from(count), group_size(t, n));
            }
        }
    }

    #[test]
    fn d2_elements_by_filtering_b2() {
        let from_b: Vec<_> = enumerate_group(B, 2, 10)
            .unwrap()
            .filter(|p| p.negatives() % 2 == 0)
            .collect();
        let d: Vec<_> = enumerate_group(D, 2, 10).unwrap().collect();
        assert_eq!(d, from_b);
        let expected = [sp(&[1, 2]), sp(&[-1, -2]), sp(&[2, 1]), sp(&[-2, -1])];
        assert_eq!(d, expected);
    }

    #[test]
    fn enumeration_order_and_errors() {
        let first: Vec<_> = enumerate_group(B, 2, 10).unwrap().take(4).collect();
        assert_eq!(first, [sp(&[1, 2]), sp(&[-1, 2]), sp(&[1, -2]), sp(&[-1, -2])]);
        assert_eq!(
            enumerate_group(A, 11, 10).err(),
            Some(Error::Capacity { n: 11, cap: 10 })
        );
        assert!(matches!(enumerate_group(D, 1, 10), Err(Error::Domain(_))));
    }

    #[test]
    fn descent_examples() {
        assert_eq!(descent_count(D, &sp(&[-1, -2])).unwrap(), 2);
        assert_eq!(descent_count(A, &sp(&[1, 2, 3, 4])).unwrap(), 0);
        assert_eq!(descent_count(B, &sp(&[-1, 2])).unwrap(), 1);
        assert!(matches!(
            descent_count(D, &sp(&[-1, 2])),
            Err(Error::InvalidElement(_))
        ));
        assert!(SignedPerm::new(vec![1, 1]).is_err());
        assert!(SignedPerm::new(vec![0, 1]).is_err());
    }

    /// Hand tally of the four elements of D_2: descents 0, 2, 1, 1.
    #[test]
    fn d2_hand_tally() {
        let des: Vec<usize> = [sp(&[1, 2]), sp(&[-1, -2]), sp(&[2, 1]), sp(&[-2, -1])]
            .iter()
            .map(|p| descent_count(D, p).unwrap())
            .collect();
        assert_eq!(des, [0, 2, 1, 1]);
    }

    #[test]
    fn brute_examples() {
        assert_eq!(eulerian_brute(D, 3, 10).unwrap(), Poly::from_ints(&[1, 11, 11, 1]));
        assert_eq!(eulerian_brute(D, 2, 10).unwrap(), Poly::from_ints(&[1, 2, 1]));
        assert_eq!(eulerian_brute(A, 3, 10).unwrap(), Poly::from_ints(&[0, 1, 4, 1]));
        assert_eq!(eulerian_brute(B, 2, 10).unwrap(), Poly::from_ints(&[1, 6, 1]));
        assert_eq!(eulerian_brute(A, 0, 10).unwrap(), Poly::x());
        assert_eq!(eulerian_brute(D, 1, 10).unwrap(), Poly::one());
        assert_eq!(eulerian_brute(B, 11, 10), Err(Error::Capacity { n: 11, cap: 10 }));
    }

    #[test]
    fn brute_agrees_with_iterator_route() {
        for t in [A, B, D] {
            for n in 2..=5 {
                let mut counts = vec![0i64; n + 2];
                for pi in enumerate_group(t, n, 10).unwrap() {
                    let k = descent_count(t, &pi).unwrap() + usize::from(t == A);
                    counts[k] += 1;
                }
                assert_eq!(eulerian_brute(t, n, 10).unwrap(), Poly::from_ints(&counts));
            }
        }
    }

    #[test]
    fn fast_examples() {
        assert_eq!(eulerian_fast(D, 2).unwrap(), Poly::from_ints(&[1, 2, 1]));
        assert_eq!(eulerian_fast(D, 3).unwrap(), Poly::from_ints(&[1, 11, 11, 1]));
        assert_eq!(eulerian_fast(A, 1).unwrap(), Poly::x());
        assert_eq!(eulerian_fast(A, 0).unwrap(), Poly::x());
        assert_eq!(eulerian_fast(B, 0).unwrap(), Poly::one());
        assert_eq!(eulerian_fast(D, 0).unwrap(), Poly::one());
    }

    #[test]
    fn fast_equals_brute_small() {
        for t in [A, B, D] {
            for n in 0..=6 {
                assert!(fast_matches_brute(t, n, 10).unwrap(), "{t} {n}");
            }
        }
    }

    #[test]
    fn stembridge_small() {
        let r = verify_stembridge(3, 10).unwrap();
        assert_eq!(r.len(), 2);
        assert!(r.all_passed());
        assert!(verify_stembridge(1, 10).unwrap().is_empty());
        assert!(matches!(verify_stembridge(12, 10), Err(Error::Capacity { .. })));
    }

    #[test]
    fn chow_sign_law() {
        for n in 3..=20 {
            let v = eulerian_fast(D, n).unwrap().eval(&rational::int(-1));
            let expected = if n % 2 == 1 {
                0
            } else if (n / 2) % 2 == 0 {
                1
            } else {
                -1
            };
            assert_eq!(rational::sgn(&v), expected, "n = {n}");
        }
    }

    proptest! {
        #[test]
        fn symmetry_and_column_sums(n in 2usize..=14) {
            for (t, shift) in [(A, 1usize), (B, 0), (D, 0)] {
                let p = eulerian_fast(t, n).unwrap();
                let c = p.coeffs();
                // A(n,k) = A(n, n+1-k); B, D palindromic of degree n
                for k in 0..=n {
                    let mirror = n + shift - k;
                    if mirror < c.len() {
                        prop_assert_eq!(&c[k], &c[mirror]);
                    } else {
                        prop_assert!(c[k].is_zero());
                    }
                }
                let sum: Rational = c.iter().sum();
                prop_assert_eq!(sum, Rational::from_integer(group_size(t, n)));
            }
        }
    }
}
