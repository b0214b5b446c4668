//! Dense univariate polynomials over the rationals.
//!
//! `coeffs[i]` is the coefficient of `x^i`. The zero polynomial is the empty
//! vector and has no degree (`degree()` returns `None`, read as -inf).

use num::{BigInt, One, Signed, Zero};
use serde::{de::Error as _, Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::zpoly::ZPoly;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rational::int(c)).collect())
    }

    pub fn from_bigints(coeffs: impl IntoIterator<Item = BigInt>) -> Self {
        Self::new(coeffs.into_iter().map(Rational::from_integer).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::from_ints(&[0, 1])
    }

    /// `c * x^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// The linear polynomial `a*x + b`.
    pub fn linear(a: Rational, b: Rational) -> Self {
        Self::new(vec![b, a])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0; only for contexts that
    /// have already excluded zero.
    pub(crate) fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rational::int(i as i64))
                .collect(),
        )
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn pow(&self, k: usize) -> Poly {
        (0..k).fold(Poly::one(), |acc, _| &acc * self)
    }

    /// `p(-x)`
    pub fn reflect(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Euclidean division over the rationals.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        let lead = divisor.leading().ok_or(Error::ZeroPolynomial)?;
        let dd = divisor.deg();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] / lead;
            if !c.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] -= &c * d;
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        if self.is_zero() && other.is_zero() {
            return Poly::zero();
        }
        ZPoly::from_poly(self)
            .gcd(&ZPoly::from_poly(other))
            .to_poly()
            .monic()
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => Poly::zero(),
        }
    }

    /// Integer primitive part with positive leading coefficient.
    pub fn primitive_part(&self) -> Poly {
        ZPoly::from_poly(self).to_poly()
    }

    /// Square-free decomposition (Yun). Each factor is a primitive integer
    /// polynomial with positive leading coefficient; the product of
    /// `factor^multiplicity` equals `self` up to a rational constant.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(Poly, usize)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut out = Vec::new();
        if self.deg() == 0 {
            return Ok(out);
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = exact_quotient(&f, &a0);
        let c = exact_quotient(&df, &a0);
        let mut d = &c - &b.derivative();
        let mut mult = 1;
        while b.deg() > 0 {
            let a = b.gcd(&d);
            let next_b = exact_quotient(&b, &a);
            let c = exact_quotient(&d, &a);
            if a.deg() > 0 {
                out.push((a.primitive_part(), mult));
            }
            d = &c - &next_b.derivative();
            b = next_b;
            mult += 1;
        }
        Ok(out)
    }

    /// `self / gcd(self, self')` as a primitive integer polynomial.
    pub fn squarefree_part(&self) -> Result<Poly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g = self.gcd(&self.derivative());
        Ok(exact_quotient(self, &g).primitive_part())
    }

    /// Homogenized composition `(gamma*x+delta)^hom_degree * p(M(x))`.
    pub fn mobius_compose(&self, map: &MobiusMap, hom_degree: usize) -> Result<Poly> {
        let Some(d) = self.degree() else {
            return Ok(Poly::zero());
        };
        if hom_degree < d {
            return Err(Error::Domain(format!(
                "homogenization degree {hom_degree} below polynomial degree {d}"
            )));
        }
        let num = Poly::linear(map.alpha.clone(), map.beta.clone());
        let den = Poly::linear(map.gamma.clone(), map.delta.clone());
        // H_d = c_d;  H_i = H_{i+1} * num + c_i * den^(d-i)
        let mut acc = Poly::constant(self.coeffs[d].clone());
        let mut den_pow = Poly::one();
        for i in (0..d).rev() {
            den_pow = &den_pow * &den;
            acc = &(&acc * &num) + &den_pow.scale(&self.coeffs[i]);
        }
        for _ in d..hom_degree {
            acc = &acc * &den;
        }
        Ok(acc)
    }

    /// True when `other = c * self` for some nonzero rational `c`.
    pub fn is_proportional(&self, other: &Poly) -> bool {
        match (self.leading(), other.leading()) {
            (None, None) => true,
            (Some(a), Some(b)) => {
                self.degree() == other.degree() && self.scale(&(b / a)) == *other
            }
            _ => false,
        }
    }

    pub fn is_even(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(Zero::is_zero)
    }

    pub fn is_odd(&self) -> bool {
        self.coeffs.iter().step_by(2).all(Zero::is_zero)
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(rational::to_string).collect()
    }
}

/// Quotient of a division known to be exact.
fn exact_quotient(a: &Poly, b: &Poly) -> Poly {
    let (q, r) = a.div_rem(b).expect("nonzero divisor");
    debug_assert!(r.is_zero(), "inexact division");
    q
}

/// The map `x -> (alpha*x + beta) / (gamma*x + delta)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MobiusMap {
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
    pub delta: Rational,
}

impl MobiusMap {
    pub fn new(alpha: Rational, beta: Rational, gamma: Rational, delta: Rational) -> Result<Self> {
        if &alpha * &delta == &beta * &gamma {
            return Err(Error::DegenerateMap);
        }
        Ok(MobiusMap {
            alpha,
            beta,
            gamma,
            delta,
        })
    }

    pub fn from_ints(alpha: i64, beta: i64, gamma: i64, delta: i64) -> Result<Self> {
        Self::new(
            rational::int(alpha),
            rational::int(beta),
            rational::int(gamma),
            rational::int(delta),
        )
    }

    pub fn identity() -> Self {
        Self::from_ints(1, 0, 0, 1).unwrap()
    }

    /// `x -> (x-1)/(x+1)`
    pub fn cayley() -> Self {
        Self::from_ints(1, -1, 1, 1).unwrap()
    }

    /// `x -> (1+x)/(1-x)`, inverse of [`MobiusMap::cayley`].
    pub fn cayley_inverse() -> Self {
        Self::from_ints(1, 1, -1, 1).unwrap()
    }

    pub fn inverse(&self) -> Self {
        MobiusMap {
            alpha: self.delta.clone(),
            beta: -&self.beta,
            gamma: -&self.gamma,
            delta: self.alpha.clone(),
        }
    }

    pub fn determinant(&self) -> Rational {
        &self.alpha * &self.delta - &self.beta * &self.gamma
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Poly::new(coeffs)
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::new(coeffs)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{}", rational::to_cell(&mag))?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(rational::to_string))
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        let coeffs = raw
            .iter()
            .map(|s| rational::parse(s))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        Ok(Poly::new(coeffs))
    }
}
