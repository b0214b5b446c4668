//! Derivative polynomials of `tanh` and `sech`, the transformed families
//! `a_n`, `b_n`, `d_n`, and the identities tying them to the Eulerian
//! polynomials and to tangent/secant numbers.
//!
//! `d^n/dt^n tanh t = P_n(tanh t)` and `d^n/dt^n sech t = sech t * Q_n(tanh t)`,
//! so `P_{n+1} = (1-x^2) P_n'` from `P_0 = x`, and
//! `Q_{n+1} = (1-x^2) Q_n' - x Q_n` from `Q_0 = 1`.

use num::{BigInt, One, Zero};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::eulerian::{eulerian_fast, CoxeterType};
use crate::poly::{MobiusMap, Poly};
use crate::rational::{self, int, Rational};
use crate::report::Report;
use crate::series::{series_coeffs, OrderKKind, OrderKTable, SeriesFn, SeriesTruncated};

pub const DEFAULT_SERIES_ORDER: usize = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    PTilde,
    QTilde,
    /// `a_n = (x+1)^(n+1) A_n((x-1)/(x+1))`
    TransformedA,
    /// `b_n = (x+1)^n B_n((x-1)/(x+1))`
    TransformedB,
    /// `d_n = ((x+1)/2)^n D_n((x-1)/(x+1))`, `n >= 2`
    TransformedD,
}

impl Family {
    /// Smallest index at which the family is defined.
    pub fn min_index(self) -> usize {
        match self {
            Family::TransformedD => 2,
            _ => 0,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::PTilde => "P",
            Family::QTilde => "Q",
            Family::TransformedA => "a",
            Family::TransformedB => "b",
            Family::TransformedD => "d",
        })
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "P" | "Ptilde" => Ok(Family::PTilde),
            "Q" | "Qtilde" => Ok(Family::QTilde),
            "a" => Ok(Family::TransformedA),
            "b" => Ok(Family::TransformedB),
            "d" => Ok(Family::TransformedD),
            _ => Err(Error::Domain(format!("unknown polynomial family {s:?}"))),
        }
    }
}

fn one_minus_x2() -> Poly {
    Poly::from_ints(&[1, 0, -1])
}

fn sign(n: usize) -> Rational {
    if n.is_multiple_of(2) {
        int(1)
    } else {
        int(-1)
    }
}

fn pow2(n: usize) -> Rational {
    Rational::from_integer(BigInt::one() << n)
}

/// `P_0 ..= P_n`
pub fn p_tilde_seq(n: usize) -> Vec<Poly> {
    let w = one_minus_x2();
    let mut out = vec![Poly::x()];
    for _ in 0..n {
        let next = &w * &out.last().unwrap().derivative();
        out.push(next);
    }
    out
}

/// `Q_0 ..= Q_n`
pub fn q_tilde_seq(n: usize) -> Vec<Poly> {
    let w = one_minus_x2();
    let mut out = vec![Poly::one()];
    for _ in 0..n {
        let q = out.last().unwrap();
        let next = &(&w * &q.derivative()) - &(&Poly::x() * q);
        out.push(next);
    }
    out
}

pub fn p_tilde(n: usize) -> Poly {
    p_tilde_seq(n).pop().unwrap()
}

pub fn q_tilde(n: usize) -> Poly {
    q_tilde_seq(n).pop().unwrap()
}

fn a_from_p(n: usize) -> Poly {
    p_tilde(n).scale(&sign(n))
}

fn b_from_q(n: usize) -> Poly {
    q_tilde(n).scale(&(sign(n) * pow2(n)))
}

/// `d_n = (b_n - n 2^(n-1) a_(n-1)) / 2^n`
pub fn d_via_stembridge(n: usize) -> Result<Poly> {
    check_d_index(n)?;
    let factor = Rational::from_integer(BigInt::from(n) << (n - 1));
    Ok((&b_from_q(n) - &a_from_p(n - 1).scale(&factor)).scale(&pow2(n).recip()))
}

/// `d_n = (-1)^n (n P_(n-1) + 2 Q_n) / 2`
pub fn d_via_derivative_polys(n: usize) -> Result<Poly> {
    check_d_index(n)?;
    let sum = &p_tilde(n - 1).scale(&int(n as i64)) + &q_tilde(n).scale(&int(2));
    Ok(sum.scale(&(sign(n) / int(2))))
}

fn check_d_index(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::Domain(format!("d_n is defined for n >= 2, got {n}")));
    }
    Ok(())
}

/// `a_(n+1) = (x^2-1) a_n'` from `a_0 = x`.
pub fn a_by_recurrence(n: usize) -> Poly {
    let w = Poly::from_ints(&[-1, 0, 1]);
    (0..n).fold(Poly::x(), |a, _| &w * &a.derivative())
}

/// `b_(n+1) = 2(x^2-1) b_n' + 2x b_n` from `b_0 = 1`.
pub fn b_by_recurrence(n: usize) -> Poly {
    let w = Poly::from_ints(&[-2, 0, 2]);
    let two_x = Poly::from_ints(&[0, 2]);
    (0..n).fold(Poly::one(), |b, _| &(&w * &b.derivative()) + &(&two_x * &b))
}

pub fn family_poly(f: Family, n: usize) -> Result<Poly> {
    Ok(match f {
        Family::PTilde => p_tilde(n),
        Family::QTilde => q_tilde(n),
        Family::TransformedA => a_from_p(n),
        Family::TransformedB => b_from_q(n),
        Family::TransformedD => {
            let d = d_via_stembridge(n)?;
            assert_eq!(d, d_via_derivative_polys(n)?, "the two d_{n} routes disagree");
            d
        }
    })
}

fn half_integer_sign(twice_exp: usize) -> Option<Rational> {
    twice_exp.is_multiple_of(2).then(|| sign(twice_exp / 2))
}

/// Rebuild `P_n` and `Q_n` coefficient-wise from order-k tangent/secant numbers:
///
/// `P_n = (-1)^((n-1)/2) T(n,1) + sum_{k=1}^{n+1} (-1)^((n+k-1)/2) T(n+1,k)/k x^k`,
/// `Q_n = sum_{k=0}^{n} (-1)^((n+k)/2) S(n,k) x^k`.
///
/// A term whose sign exponent is a half-integer must have a vanishing
/// coefficient; that is checked rather than assigned a sign.
pub fn cvijovic_check(n: usize, table: &OrderKTable) -> Result<Report> {
    if n == 0 {
        return Err(Error::Domain("expansion check needs n >= 1".into()));
    }
    if table.order() < n + 1 {
        return Err(Error::Domain(format!(
            "order-k table of order {} too small for n = {n}",
            table.order()
        )));
    }
    let mut report = Report::new();
    let mut vanish_ok = true;
    let mut term = |twice_exp: usize, value: BigInt| -> Rational {
        match half_integer_sign(twice_exp) {
            Some(s) => s * Rational::from_integer(value),
            None => {
                vanish_ok &= value.is_zero();
                Rational::zero()
            }
        }
    };

    let mut p = vec![term(n - 1, table.get(OrderKKind::T, n, 1))];
    for k in 1..=n + 1 {
        let t = term(n + k - 1, table.get(OrderKKind::T, n + 1, k));
        p.push(t / int(k as i64));
    }
    let q: Vec<Rational> = (0..=n)
        .map(|k| term(n + k, table.get(OrderKKind::S, n, k)))
        .collect();

    let p = Poly::new(p);
    let q = Poly::new(q);
    report.compare("cvijovic_P", n, p_tilde(n), p);
    report.compare("cvijovic_Q", n, q_tilde(n), q);
    report.record(
        "cvijovic_vanishing",
        n,
        "true".into(),
        vanish_ok.to_string(),
        vanish_ok,
    );
    Ok(report)
}

/// Identity suite tying the families together for `2 <= n <= n_max`:
/// both `d_n` routes, the direct `a`/`b` recurrences, and the substitution
/// round trip from the Eulerian polynomials.
pub fn transforms_check(n_max: usize) -> Result<Report> {
    let mut report = Report::new();
    let cayley = MobiusMap::cayley();
    for n in 0..=n_max {
        let a = family_poly(Family::TransformedA, n)?;
        let b = family_poly(Family::TransformedB, n)?;
        report.compare("a_recurrence", n, a_by_recurrence(n), a.clone());
        report.compare("b_recurrence", n, b_by_recurrence(n), b.clone());
        let big_b = eulerian_fast(CoxeterType::B, n)?;
        report.compare("b_from_B", n, big_b.mobius_compose(&cayley, n)?, b);
        if n >= 1 {
            let big_a = eulerian_fast(CoxeterType::A, n)?;
            report.compare("a_from_A", n, big_a.mobius_compose(&cayley, n + 1)?, a);
        }
        if n >= 2 {
            let via_b = d_via_stembridge(n)?;
            report.compare("d_two_routes", n, d_via_derivative_polys(n)?, via_b.clone());
            let big_d = eulerian_fast(CoxeterType::D, n)?;
            let from_d = big_d.mobius_compose(&cayley, n)?.scale(&pow2(n).recip());
            report.compare("d_from_D", n, from_d, via_b);
        }
    }
    Ok(report)
}

/// Special values at `x = -1` and `x = 0`, checked for every applicable
/// index up to `n_max` with series computed to `series_order`.
pub fn special_values(n_max: usize, series_order: usize) -> Result<Report> {
    if n_max < 2 {
        return Err(Error::Domain(format!("special values need n_max >= 2, got {n_max}")));
    }
    if series_order < n_max {
        return Err(Error::Domain(format!(
            "series order {series_order} below n_max {n_max}"
        )));
    }
    let minus_one = int(-1);
    let zero = Rational::zero();
    let table = OrderKTable::new(series_order)?;
    let t = |n: usize| Rational::from_integer(table.get(OrderKKind::T, n, 1));
    let s = |n: usize| Rational::from_integer(table.get(OrderKKind::S, n, 0));

    let one_plus_tanh = SeriesTruncated::one(series_order)
        .add(&series_coeffs(SeriesFn::Tanh, 0, series_order)?);
    let sech_2x = series_coeffs(SeriesFn::Sech, 0, series_order)?.scale_arg(&int(2));
    let ps = p_tilde_seq(n_max);
    let qs = q_tilde_seq(n_max);
    let big_d: Vec<Poly> = (0..=n_max)
        .map(|n| eulerian_fast(CoxeterType::D, n))
        .collect::<Result<_>>()?;

    let mut r = Report::new();
    for n in 0..=n_max {
        // P_n(x) = A_n(x)/x at x = -1
        let p_at = eulerian_fast(CoxeterType::A, n)?.eval(&minus_one) / &minus_one;
        r.compare("egf_1_plus_tanh", n, one_plus_tanh.egf_coeff(n), p_at);
        let b_at = eulerian_fast(CoxeterType::B, n)?.eval(&minus_one);
        r.compare("egf_sech_2x", n, sech_2x.egf_coeff(n), b_at);
    }
    for n in 2..=n_max {
        let d = family_poly(Family::TransformedD, n)?;
        r.compare("d_at_minus_one", n, sign(n), d.eval(&minus_one));
        let dn_at = big_d[n].eval(&minus_one);
        // D_n(-1) = 2^n d_n(0)
        r.compare("D_vs_d_at_zero", n, pow2(n) * d.eval(&zero), dn_at.clone());
        if n % 2 == 1 {
            r.compare("D_odd_vanishes", n, zero.clone(), dn_at.clone());
        } else {
            let m = n / 2;
            let rhs = Rational::from_integer(BigInt::from(-4).pow(m as u32))
                * (s(n) - int(m as i64) * t(n - 1));
            r.compare("D_even_closed_form", n, rhs, dn_at.clone());
        }
        if n >= 3 {
            let expected = if n % 2 == 1 { 0 } else if (n / 2) % 2 == 0 { 1 } else { -1 };
            r.compare("chow_sign", n, expected, rational::sgn(&dn_at));
        }
    }
    for n in 1..=n_max {
        if n % 2 == 1 {
            // n = 2m-1
            let m = n.div_ceil(2);
            r.compare("P_odd_at_zero", n, sign(m - 1) * t(n), ps[n].eval(&zero));
            r.compare("Q_odd_at_zero", n, zero.clone(), qs[n].eval(&zero));
        } else {
            // n = 2m
            let m = n / 2;
            r.compare("Q_even_at_zero", n, sign(m) * s(n), qs[n].eval(&zero));
            r.compare("P_even_at_zero", n, zero.clone(), ps[n].eval(&zero));
        }
    }
    Ok(r)
}

/// `D_2n(-1)` from the closed form in tangent and Euler numbers.
pub fn d_even_at_minus_one(m: usize, table: &OrderKTable) -> Rational {
    let s = Rational::from_integer(table.get(OrderKKind::S, 2 * m, 0));
    let t = Rational::from_integer(table.get(OrderKKind::T, 2 * m - 1, 1));
    Rational::from_integer(BigInt::from(-4).pow(m as u32)) * (s - int(m as i64) * t)
}
