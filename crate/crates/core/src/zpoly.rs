//! Primitive integer polynomials, pseudo-remainder sequences and Sturm chains.
//!
//! Everything here works on content-free integer coefficients so remainder
//! sequences stay small. Sign information is all the Sturm machinery needs,
//! so every step may divide by a positive constant.

use num::{BigInt, Integer, One, Signed, Zero};

use crate::poly::Poly;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct ZPoly {
    c: Vec<BigInt>,
}

impl ZPoly {
    fn new(mut c: Vec<BigInt>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        ZPoly { c }
    }

    /// Clears denominators and content; the leading coefficient becomes positive.
    pub fn from_poly(p: &Poly) -> Self {
        let lcm = p
            .coeffs()
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let c = p
            .coeffs()
            .iter()
            .map(|q| q.numer() * (&lcm / q.denom()))
            .collect();
        ZPoly::new(c).normalized()
    }

    pub fn to_poly(&self) -> Poly {
        Poly::from_bigints(self.c.iter().cloned())
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    fn lead(&self) -> &BigInt {
        self.c.last().expect("nonzero polynomial")
    }

    fn content(&self) -> BigInt {
        self.c.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x))
    }

    /// Divide out the content and make the leading coefficient positive.
    fn normalized(self) -> Self {
        if self.is_zero() {
            return self;
        }
        let mut g = self.content();
        if self.lead().is_negative() {
            g = -g;
        }
        ZPoly::new(self.c.into_iter().map(|x| x / &g).collect())
    }

    /// Divide out the (positive) content only, keeping the sign.
    fn primitive_keep_sign(self) -> Self {
        if self.is_zero() {
            return self;
        }
        let g = self.content();
        ZPoly::new(self.c.into_iter().map(|x| x / &g).collect())
    }

    pub fn derivative(&self) -> ZPoly {
        ZPoly::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, x)| x * BigInt::from(i))
                .collect(),
        )
    }

    /// `lc(b)^(deg a - deg b + 1) * a mod b`
    fn prem(&self, b: &ZPoly) -> ZPoly {
        let db = b.degree();
        if self.is_zero() || self.degree() < db {
            return self.clone();
        }
        let lb = b.lead();
        let mut r = self.c.clone();
        let mut steps = self.degree() - db + 1;
        while r.len() > db && !r.is_empty() {
            let top = r.len() - 1;
            let lr = r[top].clone();
            for x in r.iter_mut() {
                *x *= lb;
            }
            for (j, bj) in b.c.iter().enumerate() {
                r[top - db + j] -= &lr * bj;
            }
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
            steps -= 1;
        }
        let scale = num::pow(lb.clone(), steps);
        ZPoly::new(r.into_iter().map(|x| x * &scale).collect())
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, other: &ZPoly) -> ZPoly {
        let (mut a, mut b) = if self.degree() >= other.degree() {
            (self.clone(), other.clone())
        } else {
            (other.clone(), self.clone())
        };
        if b.is_zero() {
            return a.normalized();
        }
        while !b.is_zero() {
            let r = a.prem(&b).primitive_keep_sign();
            a = b;
            b = r;
        }
        a.normalized()
    }

    /// Sign of `p(x)` for rational `x`, via `den^d * p(num/den)` over the integers.
    pub fn sign_at(&self, x: &Rational) -> i32 {
        if self.is_zero() {
            return 0;
        }
        let (n, d) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut dpow = BigInt::one();
        for coef in self.c.iter().rev() {
            acc = acc * n + coef * &dpow;
            dpow *= d;
        }
        // acc = sum c_i n^i d^(deg-i), and d > 0
        sign_of(&acc)
    }

    /// Sign of `p(x)` as `x -> +inf` (`positive`) or `-inf`.
    pub fn sign_at_infinity(&self, positive: bool) -> i32 {
        if self.is_zero() {
            return 0;
        }
        let s = sign_of(self.lead());
        if positive || self.degree().is_multiple_of(2) {
            s
        } else {
            -s
        }
    }
}

fn sign_of(x: &BigInt) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

fn variations(signs: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut count = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Sturm chain of a square-free integer polynomial.
#[derive(Clone, Debug)]
pub(crate) struct SturmChain {
    seq: Vec<ZPoly>,
}

impl SturmChain {
    /// `f` must be square-free and nonconstant.
    pub fn new(f: &ZPoly) -> Self {
        let mut seq = vec![f.clone(), f.derivative().primitive_keep_sign()];
        loop {
            let n = seq.len();
            let (a, b) = (&seq[n - 2], &seq[n - 1]);
            if b.degree() == 0 {
                break;
            }
            // rem(a, b) = prem(a, b) / lc(b)^(delta+1); only its sign is kept
            let delta = a.degree() - b.degree();
            let flip = b.lead().is_negative() && delta % 2 == 0;
            let r = a.prem(b);
            if r.is_zero() {
                break;
            }
            let r = if flip { r } else { ZPoly::new(r.c.into_iter().map(|x| -x).collect()) };
            seq.push(r.primitive_keep_sign());
        }
        SturmChain { seq }
    }

    pub fn poly(&self) -> &ZPoly {
        &self.seq[0]
    }

    pub fn variations_at(&self, x: &Rational) -> usize {
        variations(self.seq.iter().map(|p| p.sign_at(x)))
    }

    pub fn variations_at_infinity(&self, positive: bool) -> usize {
        variations(self.seq.iter().map(|p| p.sign_at_infinity(positive)))
    }

    /// Distinct roots in the half-open interval `(lo, hi]`.
    pub fn count_half_open(&self, lo: &Rational, hi: &Rational) -> usize {
        self.variations_at(lo).saturating_sub(self.variations_at(hi))
    }

    /// Distinct real roots.
    pub fn count_all(&self) -> usize {
        self.variations_at_infinity(false)
            .saturating_sub(self.variations_at_infinity(true))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn z(c: &[i64]) -> ZPoly {
        ZPoly::from_poly(&Poly::from_ints(c))
    }

    #[test]
    fn from_poly_clears_denominators_and_content() {
        let p = Poly::new(vec![frac(1, 2), frac(-3, 4)]);
        assert_eq!(ZPoly::from_poly(&p), z(&[-2, 3]));
        assert_eq!(z(&[4, 6]), z(&[2, 3]));
    }

    #[test]
    fn prem_identity() {
        // lc(b)^(da-db+1) a = q b + r with deg r < deg b
        let a = z(&[1, 2, 3, 4]);
        let b = z(&[1, 0, 3]);
        let r = a.prem(&b);
        assert!(r.degree() < b.degree() || r.is_zero());
        let lhs = a.to_poly().scale(&int(9));
        let (_, rq) = lhs.div_rem(&b.to_poly()).unwrap();
        assert_eq!(rq, r.to_poly());
    }

    #[test]
    fn gcd_of_products() {
        let f = &Poly::from_ints(&[-1, 1]) * &Poly::from_ints(&[2, 3]);
        let g = &Poly::from_ints(&[-1, 1]) * &Poly::from_ints(&[5, 0, 1]);
        assert_eq!(ZPoly::from_poly(&f).gcd(&ZPoly::from_poly(&g)), z(&[-1, 1]));
    }

    #[test]
    fn sign_at_rationals() {
        let p = z(&[-2, 0, 3]);
        assert_eq!(p.sign_at(&int(0)), -1);
        assert_eq!(p.sign_at(&int(1)), 1);
        assert_eq!(p.sign_at(&frac(4, 5)), -1);
        assert_eq!(p.sign_at(&frac(5, 6)), 1);
        assert_eq!(z(&[-1, 3]).sign_at(&frac(1, 3)), 0);
        assert_eq!(z(&[0, 1]).sign_at_infinity(false), -1);
        assert_eq!(z(&[1, 0, 1]).sign_at_infinity(false), 1);
    }

    #[test]
    fn sturm_counts() {
        let x2p1 = SturmChain::new(&z(&[1, 0, 1]));
        assert_eq!(x2p1.count_half_open(&int(-10), &int(10)), 0);
        let d3 = SturmChain::new(&z(&[0, -2, 0, 3]));
        assert_eq!(d3.count_all(), 3);
        assert_eq!(d3.count_half_open(&int(0), &int(1)), 1);
        // root at the right endpoint is counted, at the left is not
        assert_eq!(d3.count_half_open(&int(-1), &int(0)), 2);
        assert_eq!(d3.count_half_open(&int(0), &frac(1, 2)), 0);
    }
}
