use num::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::{self, Rational};

use super::roots::RootList;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Claim {
    RealRootedInRegion,
    Interleaves,
    StrictlyInterleaves,
    CommonInterleaver,
    Compatible,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn passed(self) -> bool {
        self == Verdict::Pass
    }
}

/// Where the roots are claimed to lie.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Region {
    AllReals,
    OpenInterval {
        #[serde(with = "rational::serde_str")]
        lo: Rational,
        #[serde(with = "rational::serde_str")]
        hi: Rational,
    },
    ClosedInterval {
        #[serde(with = "rational::serde_str")]
        lo: Rational,
        #[serde(with = "rational::serde_str")]
        hi: Rational,
    },
    /// `(-inf, 0)`
    NegativeAxis,
}

impl Region {
    /// Is an isolating interval (exact when `lo == hi`, otherwise with the
    /// root strictly inside) contained in the region?
    pub(crate) fn contains_interval(&self, lo: &Rational, hi: &Rational) -> bool {
        let exact = lo == hi;
        match self {
            Region::AllReals => true,
            Region::NegativeAxis => {
                if exact {
                    hi < &Rational::zero()
                } else {
                    hi <= &Rational::zero()
                }
            }
            Region::OpenInterval { lo: a, hi: b } => {
                if exact {
                    a < lo && hi < b
                } else {
                    a <= lo && hi <= b
                }
            }
            Region::ClosedInterval { lo: a, hi: b } => a <= lo && hi <= b,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootRecord {
    #[serde(with = "rational::serde_str")]
    pub lo: Rational,
    #[serde(with = "rational::serde_str")]
    pub hi: Rational,
    pub mult: usize,
    /// Index into the certificate's `polys`.
    pub poly: usize,
    /// Index into `evidence.factors`: the square-free factor owning the root.
    pub factor: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checkpoint {
    #[serde(with = "rational::serde_str")]
    pub x: Rational,
    pub nf: usize,
    pub ng: usize,
}

/// One link `upper relation lower` of an interleaving chain, e.g. `s1 > r1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainLink {
    pub upper: String,
    pub relation: String,
    pub lower: String,
}

/// A random nonnegative combination of the subject polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightSample {
    pub weights: Vec<String>,
    pub degree: usize,
    pub real_roots: usize,
    pub pass: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Evidence {
    pub roots: Vec<RootRecord>,
    pub checkpoints: Vec<Checkpoint>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub factors: Vec<Poly>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub region: Option<Region>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub chain: Vec<ChainLink>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub pairs: Vec<Certificate>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub samples: Vec<WeightSample>,
}

impl Evidence {
    /// Append the root lists of the given subject polynomials, deduplicating
    /// square-free factors.
    pub(crate) fn add_roots(&mut self, poly_index: usize, roots: &RootList) {
        for r in roots.roots() {
            let f = r.factor();
            let factor = match self.factors.iter().position(|g| *g == f) {
                Some(i) => i,
                None => {
                    self.factors.push(f);
                    self.factors.len() - 1
                }
            };
            self.roots.push(RootRecord {
                lo: r.lo().clone(),
                hi: r.hi().clone(),
                mult: r.multiplicity(),
                poly: poly_index,
                factor,
            });
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub claim: Claim,
    pub polys: Vec<Poly>,
    pub evidence: Evidence,
    pub verdict: Verdict,
    pub seed: Option<u64>,
}

impl Certificate {
    pub fn passed(&self) -> bool {
        self.verdict.passed()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificates always serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Re-derive a real-rootedness verdict from the recorded evidence alone,
    /// using only evaluation and sign comparisons:
    ///
    /// - the recorded factors raised to their multiplicities multiply to the
    ///   subject polynomial up to a constant,
    /// - each interval is a point root of its factor or shows a sign change,
    /// - intervals are pairwise disjoint (decreasing order),
    /// - multiplicities add up to the degree and every interval sits in the region.
    ///
    /// Returns `None` for other claims.
    pub fn recheck_real_rooted(&self) -> Option<bool> {
        if self.claim != Claim::RealRootedInRegion || self.polys.len() != 1 {
            return None;
        }
        let p = &self.polys[0];
        let ev = &self.evidence;
        let mut mult_of: BTreeMap<usize, usize> = BTreeMap::new();
        for r in &ev.roots {
            let Some(f) = ev.factors.get(r.factor) else {
                return Some(false);
            };
            if r.poly != 0 || r.lo > r.hi {
                return Some(false);
            }
            let ok = if r.lo == r.hi {
                f.eval(&r.lo).is_zero()
            } else {
                rational::sgn(&f.eval(&r.lo)) * rational::sgn(&f.eval(&r.hi)) < 0
            };
            if !ok || *mult_of.entry(r.factor).or_insert(r.mult) != r.mult {
                return Some(false);
            }
        }
        let product = mult_of
            .iter()
            .fold(Poly::one(), |acc, (&i, &m)| &acc * &ev.factors[i].pow(m));
        let factored = product.is_proportional(p);
        for w in ev.roots.windows(2) {
            let (upper, lower) = (&w[0], &w[1]);
            let both_exact = upper.lo == upper.hi && lower.lo == lower.hi;
            if !(lower.hi < upper.lo || (lower.hi == upper.lo && !both_exact)) {
                return Some(false);
            }
        }
        let total: usize = ev.roots.iter().map(|r| r.mult).sum();
        let in_region = match &ev.region {
            Some(region) => ev.roots.iter().all(|r| region.contains_interval(&r.lo, &r.hi)),
            None => true,
        };
        Some(factored && Some(total) == p.degree() && in_region)
    }
}
