//! Exact comparison of q-norm triangulation weights.
//!
//! A triangulation weight is `sum(|e|^q)` over its edges (or `max |e|` for
//! the bottleneck case `q = infinity`). Squared lengths are exact
//! rationals, so even exponents compare exactly. Odd exponents involve sums
//! of square roots; those are compared with certified interval arithmetic
//! at escalating precision, declaring a tie only past a fixed refinement
//! depth (genuine ties such as `sqrt(2) + sqrt(8) = sqrt(18)` exist, so a
//! cap is required for termination).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;

use crate::geom::Rat;
use crate::Error;

/// Cost exponent for the q-MWT objective. `Infinity` is the bottleneck
/// (minimax edge length) objective.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CostExponent {
    Finite(u32),
    Infinity,
}

impl CostExponent {
    pub fn new_finite(q: u32) -> Result<CostExponent, Error> {
        if q < 1 {
            return Err(Error::InvalidExponent);
        }
        Ok(CostExponent::Finite(q))
    }
}

impl std::fmt::Display for CostExponent {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CostExponent::Finite(q) => write!(f, "{q}"),
            CostExponent::Infinity => write!(f, "inf"),
        }
    }
}

/// Precision ladder for interval refinement, in bits after the point.
const REFINEMENT_BITS: [u64; 4] = [64, 128, 256, 512];

/// Certified bounds on `sqrt(r)` for a non-negative rational `r`:
/// `lo <= sqrt(r) <= hi` with `hi - lo <= 2^-bits`.
pub fn sqrt_bounds(r: &Rat, bits: u64) -> (Rat, Rat) {
    debug_assert!(!r.is_negative());
    if r.is_zero() {
        return (Rat::zero(), Rat::zero());
    }
    // sqrt(n/d) = sqrt(n*d) / d; floor-sqrt of n*d*4^bits gives the bounds.
    let n = r.numer();
    let d = r.denom();
    let scaled = (n * d) << (2 * bits);
    let s = scaled.sqrt();
    let denom = d * (BigInt::one() << bits);
    let lo = BigRational::new(s.clone(), denom.clone());
    let hi = BigRational::new(s + 1, denom);
    (lo, hi)
}

/// The q-weight of an edge multiset, held as exact squared lengths.
#[derive(Debug, Clone)]
pub struct QWeight {
    q: CostExponent,
    /// Squared lengths, sorted ascending for deterministic evaluation.
    sq_terms: Vec<Rat>,
}

impl QWeight {
    pub fn new(q: CostExponent, mut sq_terms: Vec<Rat>) -> QWeight {
        sq_terms.sort();
        QWeight { q, sq_terms }
    }

    pub fn exponent(&self) -> CostExponent {
        self.q
    }

    /// Exact rational value of `sum(sq^(q/2))` when `q` is even, or the
    /// maximum squared length for the bottleneck objective.
    fn even_value(&self) -> Option<Rat> {
        match self.q {
            CostExponent::Finite(q) if q % 2 == 0 => {
                let half = q / 2;
                let mut acc = Rat::zero();
                for t in &self.sq_terms {
                    acc += pow_rat(t, half);
                }
                Some(acc)
            }
            _ => None,
        }
    }

    /// Interval bounds on the weight for odd exponents at `bits` precision.
    fn interval(&self, bits: u64) -> (Rat, Rat) {
        let q = match self.q {
            CostExponent::Finite(q) => q,
            CostExponent::Infinity => unreachable!("interval is for finite exponents"),
        };
        debug_assert!(q % 2 == 1);
        let half = (q - 1) / 2;
        let mut lo = Rat::zero();
        let mut hi = Rat::zero();
        for t in &self.sq_terms {
            let c = pow_rat(t, half);
            let (slo, shi) = sqrt_bounds(t, bits);
            lo += &c * slo;
            hi += &c * shi;
        }
        (lo, hi)
    }

    /// Compare two weights with the same exponent. Returns `Equal` when the
    /// values are equal, or provably indistinguishable at the refinement cap.
    pub fn compare(&self, other: &QWeight) -> Ordering {
        assert_eq!(self.q, other.q, "weights must share the exponent");
        match self.q {
            CostExponent::Infinity => {
                let za = Rat::zero();
                let a = self.sq_terms.last().unwrap_or(&za);
                let b = other.sq_terms.last().unwrap_or(&za);
                a.cmp(b)
            }
            CostExponent::Finite(q) if q % 2 == 0 => {
                self.even_value().unwrap().cmp(&other.even_value().unwrap())
            }
            CostExponent::Finite(_) => {
                // Equal multisets of squared lengths have equal sums.
                if self.sq_terms == other.sq_terms {
                    return Ordering::Equal;
                }
                for bits in REFINEMENT_BITS {
                    let (alo, ahi) = self.interval(bits);
                    let (blo, bhi) = other.interval(bits);
                    if ahi < blo {
                        return Ordering::Less;
                    }
                    if bhi < alo {
                        return Ordering::Greater;
                    }
                }
                Ordering::Equal
            }
        }
    }

    /// Floating-point presentation of the weight (the q-th root is not
    /// applied; this is `sum(|e|^q)` itself, or `max |e|` for infinity).
    pub fn to_f64(&self) -> f64 {
        match self.q {
            CostExponent::Infinity => self
                .sq_terms
                .last()
                .map_or(0.0, |t| rat_to_f64(t).sqrt()),
            CostExponent::Finite(q) => {
                let mut acc = 0.0;
                for t in &self.sq_terms {
                    acc += rat_to_f64(t).powf(q as f64 / 2.0);
                }
                acc
            }
        }
    }
}

/// Deterministic f64 conversion of a rational.
pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Extremely large numerator/denominator: fall back to a quotient of
        // leading digits. Not expected at desk scale.
        let n = r.numer().to_f64().unwrap_or(f64::MAX);
        let d = r.denom().to_f64().unwrap_or(f64::MAX);
        n / d
    })
}

fn pow_rat(r: &Rat, e: u32) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..e {
        acc *= r;
    }
    acc
}
