//! Real-root isolation by Sturm sequences and bisection, and exact
//! comparison of the algebraic numbers the isolating intervals stand for.

use num::{One, Signed, Zero};
use std::cmp::Ordering;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::{self, Rational};
use crate::zpoly::{SturmChain, ZPoly};

/// One real root of a polynomial, pinned down by a square-free factor and a
/// rational interval.
///
/// Either `lo == hi` and the root equals that rational, or `lo < hi`, the
/// factor is nonzero at both endpoints and has exactly one root in between.
#[derive(Clone, Debug)]
pub struct IsolatingInterval {
    lo: Rational,
    hi: Rational,
    multiplicity: usize,
    chain: Arc<SturmChain>,
}

impl IsolatingInterval {
    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn multiplicity(&self) -> usize {
        self.multiplicity
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    /// The square-free factor whose root this is (primitive, positive leading coefficient).
    pub fn factor(&self) -> Poly {
        self.chain.poly().to_poly()
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    fn sign_at(&self, x: &Rational) -> i32 {
        self.chain.poly().sign_at(x)
    }

    /// One bisection step; a no-op on exact roots.
    pub fn refine(&mut self) {
        if self.is_exact() {
            return;
        }
        let m = rational::midpoint(&self.lo, &self.hi);
        let sm = self.sign_at(&m);
        if sm == 0 {
            self.lo = m.clone();
            self.hi = m;
        } else if sm == self.sign_at(&self.lo) {
            self.lo = m;
        } else {
            self.hi = m;
        }
    }

    pub fn refine_to_width(&mut self, width: &Rational) {
        while !self.is_exact() && &self.width() > width {
            self.refine();
        }
    }

    /// Exact comparison of the root with a rational, without refinement.
    pub fn cmp_rational(&self, x: &Rational) -> Ordering {
        if self.is_exact() {
            return self.lo.cmp(x);
        }
        if x <= &self.lo {
            return Ordering::Greater;
        }
        if x >= &self.hi {
            return Ordering::Less;
        }
        match self.sign_at(x) {
            0 => Ordering::Equal,
            s if s == self.sign_at(&self.lo) => Ordering::Greater,
            _ => Ordering::Less,
        }
    }

    /// If the root equals `x`, collapse the interval onto it.
    pub fn pin_if_equal(&mut self, x: &Rational) -> bool {
        if self.cmp_rational(x) == Ordering::Equal {
            self.lo = x.clone();
            self.hi = x.clone();
            true
        } else {
            false
        }
    }

    /// Refine until the interval lies within `[lo, hi]`; the root must be
    /// strictly inside. Exact roots are left alone.
    pub(crate) fn shrink_into(&mut self, lo: Option<&Rational>, hi: Option<&Rational>) {
        loop {
            let lo_ok = lo.is_none_or(|l| &self.lo >= l);
            let hi_ok = hi.is_none_or(|h| &self.hi <= h);
            if (lo_ok && hi_ok) || self.is_exact() {
                return;
            }
            self.refine();
        }
    }
}

/// `a < b` decided from the intervals alone.
fn certainly_less(a: &IsolatingInterval, b: &IsolatingInterval) -> bool {
    a.hi < b.lo || (a.hi == b.lo && !(a.is_exact() && b.is_exact()))
}

/// Open or closed interval used when counting roots of a gcd.
fn count_in(chain: &SturmChain, lo: &Rational, lo_closed: bool, hi: &Rational, hi_closed: bool) -> usize {
    let p = chain.poly();
    if lo > hi {
        return 0;
    }
    if lo == hi {
        return usize::from(lo_closed && hi_closed && p.sign_at(lo) == 0);
    }
    let mut n = chain.count_half_open(lo, hi);
    if !hi_closed && p.sign_at(hi) == 0 {
        n -= 1;
    }
    if lo_closed && p.sign_at(lo) == 0 {
        n += 1;
    }
    n
}

/// Do the two intervals isolate the same algebraic number? Decided through
/// the gcd of the two square-free factors.
fn same_root(a: &IsolatingInterval, b: &IsolatingInterval) -> bool {
    let g = a.chain.poly().gcd(b.chain.poly());
    if g.degree() == 0 {
        return false;
    }
    // the intersection of the root regions: exact -> point, else open
    let (lo, lo_closed) = match a.lo.cmp(&b.lo) {
        Ordering::Greater => (&a.lo, a.is_exact()),
        Ordering::Less => (&b.lo, b.is_exact()),
        Ordering::Equal => (&a.lo, a.is_exact() && b.is_exact()),
    };
    let (hi, hi_closed) = match a.hi.cmp(&b.hi) {
        Ordering::Less => (&a.hi, a.is_exact()),
        Ordering::Greater => (&b.hi, b.is_exact()),
        Ordering::Equal => (&a.hi, a.is_exact() && b.is_exact()),
    };
    let chain = SturmChain::new(&g);
    count_in(&chain, lo, lo_closed, hi, hi_closed) > 0
}

/// Exact order of two real algebraic numbers. Equality is settled by a gcd
/// test before any refinement, so shared roots terminate.
pub fn compare_roots(a: &mut IsolatingInterval, b: &mut IsolatingInterval) -> Ordering {
    if certainly_less(a, b) {
        return Ordering::Less;
    }
    if certainly_less(b, a) {
        return Ordering::Greater;
    }
    if a.is_exact() && b.is_exact() {
        return Ordering::Equal;
    }
    if same_root(a, b) {
        return Ordering::Equal;
    }
    loop {
        if a.width() >= b.width() && !a.is_exact() {
            a.refine();
        } else {
            b.refine();
        }
        if certainly_less(a, b) {
            return Ordering::Less;
        }
        if certainly_less(b, a) {
            return Ordering::Greater;
        }
    }
}

/// Refine `lower` and `upper` (with `lower < upper`) until a rational lies
/// strictly between them, and return it.
pub(crate) fn separating_point(lower: &mut IsolatingInterval, upper: &mut IsolatingInterval) -> Rational {
    while lower.hi >= upper.lo {
        if lower.width() >= upper.width() && !lower.is_exact() {
            lower.refine();
        } else {
            upper.refine();
        }
    }
    rational::midpoint(&lower.hi, &upper.lo)
}

/// All real roots of a polynomial in strictly decreasing order.
#[derive(Clone, Debug, Default)]
pub struct RootList {
    roots: Vec<IsolatingInterval>,
}

impl RootList {
    pub fn roots(&self) -> &[IsolatingInterval] {
        &self.roots
    }

    pub fn roots_mut(&mut self) -> &mut [IsolatingInterval] {
        &mut self.roots
    }

    pub fn into_roots(self) -> Vec<IsolatingInterval> {
        self.roots
    }

    pub fn distinct(&self) -> usize {
        self.roots.len()
    }

    /// Real roots counted with multiplicity.
    pub fn total_multiplicity(&self) -> usize {
        self.roots.iter().map(|r| r.multiplicity).sum()
    }

    /// Multiplicity-weighted number of roots `>= x`.
    pub fn count_at_least(&self, x: &Rational) -> usize {
        self.roots
            .iter()
            .filter(|r| r.cmp_rational(x) != Ordering::Less)
            .map(|r| r.multiplicity)
            .sum()
    }

    /// Roots strictly greater than zero, largest first.
    pub fn positive(&self) -> Vec<IsolatingInterval> {
        let zero = Rational::zero();
        self.roots
            .iter()
            .filter(|r| r.cmp_rational(&zero) == Ordering::Greater)
            .cloned()
            .collect()
    }

    pub fn multiplicity_at(&self, x: &Rational) -> usize {
        self.roots
            .iter()
            .filter(|r| r.cmp_rational(x) == Ordering::Equal)
            .map(|r| r.multiplicity)
            .sum()
    }
}

/// A power of two strictly above every root modulus (Cauchy bound).
fn root_bound(f: &Poly) -> Rational {
    let lead = f.leading().expect("nonzero").abs();
    let max = f
        .coeffs()
        .iter()
        .map(|c| c.abs() / &lead)
        .max()
        .unwrap_or_else(Rational::zero);
    let bound = max + Rational::one();
    let mut b = Rational::one();
    while b <= bound {
        b *= rational::int(2);
    }
    b
}

fn isolate_factor(factor: &Poly, multiplicity: usize, out: &mut Vec<IsolatingInterval>) {
    let chain = Arc::new(SturmChain::new(&ZPoly::from_poly(factor)));
    let b = root_bound(factor);
    let lo = -&b;
    let total = chain.count_half_open(&lo, &b);
    let mut stack = vec![(lo, b, total)];
    while let Some((lo, hi, count)) = stack.pop() {
        match count {
            0 => {}
            1 => {
                let mut root = IsolatingInterval {
                    lo,
                    hi,
                    multiplicity,
                    chain: Arc::clone(&chain),
                };
                settle_half_open(&mut root);
                out.push(root);
            }
            _ => {
                let m = rational::midpoint(&lo, &hi);
                let left = chain.count_half_open(&lo, &m);
                stack.push((lo, m.clone(), left));
                stack.push((m, hi, count - left));
            }
        }
    }
}

/// Turn "exactly one root in `(lo, hi]`" into the [`IsolatingInterval`]
/// invariant: exact, or nonzero at both endpoints.
fn settle_half_open(root: &mut IsolatingInterval) {
    if root.sign_at(&root.hi) == 0 {
        root.lo = root.hi.clone();
        return;
    }
    // lo may be a different root of the same factor
    while root.sign_at(&root.lo) == 0 {
        let m = rational::midpoint(&root.lo, &root.hi);
        if root.sign_at(&m) == 0 {
            root.lo = m.clone();
            root.hi = m;
            return;
        }
        if root.chain.count_half_open(&m, &root.hi) == 1 {
            root.lo = m;
        } else {
            root.hi = m;
        }
    }
}

/// Sort into strictly decreasing order, refining overlapping neighbours apart.
fn sort_separated(roots: &mut [IsolatingInterval]) {
    loop {
        roots.sort_by(|a, b| {
            rational::midpoint(&b.lo, &b.hi).cmp(&rational::midpoint(&a.lo, &a.hi))
        });
        let mut clean = true;
        for i in 1..roots.len() {
            let (upper, lower) = roots.split_at_mut(i);
            let (up, low) = (&mut upper[i - 1], &mut lower[0]);
            if !certainly_less(low, up) {
                clean = false;
                if up.width() >= low.width() && !up.is_exact() {
                    up.refine();
                } else {
                    low.refine();
                }
            }
        }
        if clean {
            return;
        }
    }
}

/// Every real root with its multiplicity, largest first. Constant
/// polynomials have none.
pub fn isolate_roots(p: &Poly) -> Result<RootList> {
    let mut roots = Vec::new();
    for (factor, mult) in p.squarefree_decomposition()? {
        isolate_factor(&factor, mult, &mut roots);
    }
    sort_separated(&mut roots);
    Ok(RootList { roots })
}

/// Number of distinct real roots in the open interval `(lo, hi)`.
pub fn sturm_count(p: &Poly, lo: &Rational, hi: &Rational) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if lo >= hi {
        return Err(Error::Domain(format!(
            "empty interval ({}, {})",
            rational::to_string(lo),
            rational::to_string(hi)
        )));
    }
    for x in [lo, hi] {
        if p.eval(x).is_zero() {
            return Err(Error::EndpointRoot(rational::to_string(x)));
        }
    }
    if p.deg() == 0 {
        return Ok(0);
    }
    let chain = SturmChain::new(&ZPoly::from_poly(&p.squarefree_part()?));
    Ok(chain.count_half_open(lo, hi))
}

/// Real roots counted with multiplicity, straight from the Sturm chains of
/// the square-free factors.
pub fn real_root_count(p: &Poly) -> Result<usize> {
    Ok(p.squarefree_decomposition()?
        .iter()
        .map(|(f, m)| m * SturmChain::new(&ZPoly::from_poly(f)).count_all())
        .sum())
}

/// Multiplicity-weighted number of real roots in `[x0, inf)`.
pub fn nf_at(f: &Poly, x0: &Rational) -> Result<usize> {
    Ok(isolate_roots(f)?.count_at_least(x0))
}

/// Rational isolating interval of an exact rational root, for comparisons
/// against fixed points.
pub fn rational_root(x: &Rational) -> IsolatingInterval {
    let linear = Poly::linear(Rational::one(), -x);
    IsolatingInterval {
        lo: x.clone(),
        hi: x.clone(),
        multiplicity: 1,
        chain: Arc::new(SturmChain::new(&ZPoly::from_poly(&linear))),
    }
}
