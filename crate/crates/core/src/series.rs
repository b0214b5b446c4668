//! Truncated Maclaurin series with exact coefficients, and the tangent and
//! secant numbers of order `k` read off as exponential coefficients.

use num::{BigInt, One, Zero};
use std::ops::Mul;

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// `c_0 + c_1 x + ... + c_N x^N + O(x^(N+1))`, ordinary normalization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesTruncated {
    coeffs: Vec<Rational>,
}

impl SeriesTruncated {
    /// Coefficients `c_0..=c_N`; the order is `len - 1`.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a series has at least the constant term");
        SeriesTruncated { coeffs }
    }

    pub fn one(order: usize) -> Self {
        let mut c = vec![Rational::zero(); order + 1];
        c[0] = Rational::one();
        Self::new(c)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Rational {
        self.coeffs.get(n).cloned().unwrap_or_else(Rational::zero)
    }

    /// `n! * c_n`
    pub fn egf_coeff(&self, n: usize) -> Rational {
        self.coeff(n) * Rational::from_integer(rational::factorial(n))
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs[..=order.min(self.order())].to_vec())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::new((0..=n).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect())
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        let b0 = &other.coeffs[0];
        if b0.is_zero() {
            return Err(Error::SingularSeries);
        }
        let n = self.order().min(other.order());
        let mut q: Vec<Rational> = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let mut acc = self.coeffs[i].clone();
            for j in 1..=i {
                acc -= &other.coeffs[j] * &q[i - j];
            }
            q.push(acc / b0);
        }
        Ok(Self::new(q))
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(self.order()), |acc, _| &acc * self)
    }

    /// `f(a x)`
    pub fn scale_arg(&self, a: &Rational) -> Self {
        let mut p = Rational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c * &p);
            p *= a;
        }
        Self::new(out)
    }

    /// Multiply `c_n` by `(-1)^floor(n/2)`: turns `tan` into `tanh` and `sec`
    /// into `sech` (the series of `f(ix)` up to a factor of `i` on odd terms).
    fn hyperbolic_twist(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| if (n / 2) % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }
}

impl<'a> Mul<&'a SeriesTruncated> for &'a SeriesTruncated {
    type Output = SeriesTruncated;
    fn mul(self, rhs: &'a SeriesTruncated) -> SeriesTruncated {
        let n = self.order().min(rhs.order());
        let mut c = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n + 1 - i).enumerate() {
                c[i + j] += a * b;
            }
        }
        SeriesTruncated::new(c)
    }
}

/// Maclaurin series of `sin` (`odd`) or `cos`.
fn trig(order: usize, odd: bool) -> SeriesTruncated {
    let mut c = vec![Rational::zero(); order + 1];
    let mut fact = BigInt::one();
    for (n, slot) in c.iter_mut().enumerate() {
        if n > 0 {
            fact *= n;
        }
        if (n % 2 == 1) == odd {
            let sign = if (n / 2) % 2 == 0 { 1 } else { -1 };
            *slot = Rational::new(BigInt::from(sign), fact.clone());
        }
    }
    SeriesTruncated::new(c)
}

pub fn sin_series(order: usize) -> SeriesTruncated {
    trig(order, true)
}

pub fn cos_series(order: usize) -> SeriesTruncated {
    trig(order, false)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesFn {
    Tan,
    Sec,
    Tanh,
    Sech,
    /// `tan^k`
    TanPow,
    /// `sec * tan^k`
    SecTanPow,
}

/// `k` is ignored except for the power families.
pub fn series_coeffs(f: SeriesFn, k: usize, order: usize) -> Result<SeriesTruncated> {
    let tan = || sin_series(order).div(&cos_series(order));
    let sec = || SeriesTruncated::one(order).div(&cos_series(order));
    Ok(match f {
        SeriesFn::Tan => tan()?,
        SeriesFn::Sec => sec()?,
        SeriesFn::Tanh => tan()?.hyperbolic_twist(),
        SeriesFn::Sech => sec()?.hyperbolic_twist(),
        SeriesFn::TanPow => tan()?.pow(k),
        SeriesFn::SecTanPow => &sec()? * &tan()?.pow(k),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderKKind {
    /// Tangent numbers of order k: `tan^k x = sum T(n,k) x^n / n!`.
    T,
    /// Secant numbers of order k: `sec x tan^k x = sum S(n,k) x^n / n!`.
    S,
}

fn integral(r: Rational) -> BigInt {
    assert!(r.is_integer(), "order-k number {r} is not an integer");
    r.to_integer()
}

pub fn orderk_number(kind: OrderKKind, n: usize, k: usize) -> Result<BigInt> {
    if k > n {
        return Err(Error::Domain(format!("order k = {k} exceeds n = {n}")));
    }
    let f = match kind {
        OrderKKind::T => SeriesFn::TanPow,
        OrderKKind::S => SeriesFn::SecTanPow,
    };
    Ok(integral(series_coeffs(f, k, n)?.egf_coeff(n)))
}

/// All `T(n,k)` and `S(n,k)` for `0 <= k <= n <= order`, from one pass of
/// series powers.
#[derive(Clone, Debug)]
pub struct OrderKTable {
    order: usize,
    t: Vec<Vec<BigInt>>,
    s: Vec<Vec<BigInt>>,
}

impl OrderKTable {
    pub fn new(order: usize) -> Result<Self> {
        let tan = series_coeffs(SeriesFn::Tan, 0, order)?;
        let sec = series_coeffs(SeriesFn::Sec, 0, order)?;
        let mut t = vec![vec![BigInt::zero(); order + 1]; order + 1];
        let mut s = t.clone();
        let mut power = SeriesTruncated::one(order);
        for k in 0..=order {
            let sec_power = &sec * &power;
            for n in k..=order {
                t[n][k] = integral(power.egf_coeff(n));
                s[n][k] = integral(sec_power.egf_coeff(n));
            }
            power = &power * &tan;
        }
        Ok(OrderKTable { order, t, s })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Zero outside `0 <= k <= n`; panics when `n` exceeds the table order.
    pub fn get(&self, kind: OrderKKind, n: usize, k: usize) -> BigInt {
        assert!(n <= self.order, "n = {n} beyond table order {}", self.order);
        if k > n {
            return BigInt::zero();
        }
        match kind {
            OrderKKind::T => self.t[n][k].clone(),
            OrderKKind::S => self.s[n][k].clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::Signed;
    use crate::rational::{frac, int};

    #[test]
    fn tan_to_order_five() {
        // series division oracle: tan = sin / cos, by hand
        let tan = series_coeffs(SeriesFn::Tan, 0, 5).unwrap();
        let expected = [int(0), int(1), int(0), frac(1, 3), int(0), frac(2, 15)];
        assert_eq!(tan.coeffs(), &expected);
    }

    #[test]
    fn hyperbolic_examples() {
        let sech = series_coeffs(SeriesFn::Sech, 0, 0).unwrap();
        assert_eq!(sech.coeffs(), &[int(1)]);
        let tanh = series_coeffs(SeriesFn::Tanh, 0, 3).unwrap();
        assert_eq!(tanh.coeffs(), &[int(0), int(1), int(0), frac(-1, 3)]);
    }

    #[test]
    fn tanh_matches_sinh_over_cosh() {
        let order = 15;
        let sinh = SeriesTruncated::new(
            sin_series(order).coeffs().iter().map(|c| c.abs()).collect(),
        );
        let cosh = SeriesTruncated::new(
            cos_series(order).coeffs().iter().map(|c| c.abs()).collect(),
        );
        let direct = sinh.div(&cosh).unwrap();
        assert_eq!(direct, series_coeffs(SeriesFn::Tanh, 0, order).unwrap());
        let sech_direct = SeriesTruncated::one(order).div(&cosh).unwrap();
        assert_eq!(sech_direct, series_coeffs(SeriesFn::Sech, 0, order).unwrap());
    }

    #[test]
    fn singular_division() {
        let s = sin_series(4);
        assert_eq!(cos_series(4).div(&s), Err(Error::SingularSeries));
    }

    #[test]
    fn orderk_examples() {
        assert_eq!(orderk_number(OrderKKind::T, 3, 1).unwrap(), BigInt::from(2));
        assert_eq!(orderk_number(OrderKKind::S, 4, 0).unwrap(), BigInt::from(5));
        assert_eq!(orderk_number(OrderKKind::T, 2, 1).unwrap(), BigInt::from(0));
        assert_eq!(orderk_number(OrderKKind::S, 2, 2).unwrap(), BigInt::from(2));
        assert!(orderk_number(OrderKKind::T, 2, 3).is_err());
    }

    #[test]
    fn table_agrees_with_direct_and_vanishes_by_parity() {
        let table = OrderKTable::new(14).unwrap();
        for n in 0..=14 {
            for k in 0..=n {
                assert_eq!(table.get(OrderKKind::T, n, k), orderk_number(OrderKKind::T, n, k).unwrap());
                assert_eq!(table.get(OrderKKind::S, n, k), orderk_number(OrderKKind::S, n, k).unwrap());
                if (n + k) % 2 == 1 {
                    assert!(table.get(OrderKKind::T, n, k).is_zero());
                    assert!(table.get(OrderKKind::S, n, k).is_zero());
                }
            }
            if n % 2 == 0 {
                assert!(table.get(OrderKKind::T, n, 1).is_zero());
            } else {
                assert!(table.get(OrderKKind::S, n, 0).is_zero());
            }
        }
        // Euler numbers 1, 1, 5, 61, 1385 and tangent numbers 1, 2, 16, 272
        let euler: Vec<_> = (0..=8).step_by(2).map(|n| table.get(OrderKKind::S, n, 0)).collect();
        assert_eq!(euler, [1, 1, 5, 61, 1385].map(BigInt::from));
        let tangent: Vec<_> = (1..=7).step_by(2).map(|n| table.get(OrderKKind::T, n, 1)).collect();
        assert_eq!(tangent, [1, 2, 16, 272].map(BigInt::from));
        assert!(table.get(OrderKKind::T, 3, 5).is_zero());
    }
}
