//! Certified geometric predicates with adaptive precision escalation.
//!
//! A predicate is evaluated at the working precision and then re-evaluated at
//! doubled precision until two consecutive evaluations agree; disagreement all
//! the way up to the configured maximum is an [`NumError::AmbiguousPredicate`].
//! Equality decisions use the `epsilon_eq` band, so "equal" means "within the
//! predicate tolerance", never bitwise identity.

use std::cell::Cell;

use crate::config::Config;
use crate::numerics::{Cmp, NumError, Orientation, Point2, Scalar};

/// Numeric context: precisions and the predicate tolerance.
///
/// One context per board / thread; the context records the highest precision
/// any predicate had to escalate to (reported in verifier statistics).
#[derive(Debug, Clone)]
pub struct NumCtx {
    pub precision: usize,
    pub max_precision: usize,
    pub eps_eq: Scalar,
    max_seen: Cell<usize>,
}

impl NumCtx {
    pub fn new(config: &Config) -> Self {
        NumCtx {
            precision: config.precision_bits,
            max_precision: config.max_precision_bits,
            eps_eq: config.epsilon_eq.clone(),
            max_seen: Cell::new(config.precision_bits),
        }
    }

    pub fn from_parts(precision: usize, max_precision: usize, eps_eq: Scalar) -> Self {
        NumCtx { precision, max_precision, eps_eq, max_seen: Cell::new(precision) }
    }

    /// Highest precision any predicate has escalated to so far.
    pub fn max_precision_seen(&self) -> usize {
        self.max_seen.get()
    }

    fn note(&self, bits: usize) {
        if bits > self.max_seen.get() {
            self.max_seen.set(bits);
        }
    }

    /// Escalate `eval` through doubling precisions until two consecutive
    /// evaluations agree.
    pub fn certify<T, F>(&self, what: &str, eval: F) -> Result<T, NumError>
    where
        T: PartialEq + Copy,
        F: Fn(usize) -> T,
    {
        let mut bits = self.precision;
        let mut prev = eval(bits);
        self.note(bits);
        if bits.saturating_mul(2) > self.max_precision {
            // No headroom to confirm; accept the single evaluation.
            return Ok(prev);
        }
        loop {
            let next_bits = (bits * 2).min(self.max_precision);
            let cur = eval(next_bits);
            self.note(next_bits);
            if cur == prev {
                return Ok(cur);
            }
            if next_bits == self.max_precision {
                return Err(NumError::AmbiguousPredicate(what.to_owned()));
            }
            prev = cur;
            bits = next_bits;
        }
    }

    /// Compare ‖p − q‖ against 1 with the `eps_eq` equality band.
    pub fn cmp_unit_distance(&self, p: &Point2, q: &Point2) -> Result<Cmp, NumError> {
        self.cmp_distance(p, q, &Scalar::one(self.precision))
    }

    /// Compare ‖p − q‖ against a non-negative length `r`.
    pub fn cmp_distance(&self, p: &Point2, q: &Point2, r: &Scalar) -> Result<Cmp, NumError> {
        let eps = &self.eps_eq;
        self.certify("distance comparison", |bits| {
            let d2 = p.with_precision(bits).dist2(&q.with_precision(bits));
            let r = r.with_precision(bits);
            let e = eps.with_precision(bits);
            let lo = (&r - &e).max(Scalar::zero(bits)).square();
            let hi = (&r + &e).square();
            if d2 < lo {
                Cmp::Less
            } else if d2 > hi {
                Cmp::Greater
            } else {
                Cmp::Equal
            }
        })
    }

    /// Compare two scalars with the `eps_eq` equality band.
    pub fn cmp_scalar(&self, a: &Scalar, b: &Scalar) -> Result<Cmp, NumError> {
        let eps = &self.eps_eq;
        self.certify("scalar comparison", |bits| {
            let d = a.with_precision(bits) - b.with_precision(bits);
            let e = eps.with_precision(bits);
            if d < -&e {
                Cmp::Less
            } else if d > e {
                Cmp::Greater
            } else {
                Cmp::Equal
            }
        })
    }

    /// Certified sign of the cross product (q−p) × (r−p).
    pub fn orientation(&self, p: &Point2, q: &Point2, r: &Point2) -> Result<Orientation, NumError> {
        let eps = &self.eps_eq;
        self.certify("orientation", |bits| {
            let u = q.with_precision(bits).sub(&p.with_precision(bits));
            let v = r.with_precision(bits).sub(&p.with_precision(bits));
            let cross = u.cross(&v);
            let e = eps.with_precision(bits);
            if cross > e {
                Orientation::Left
            } else if cross < -&e {
                Orientation::Right
            } else {
                Orientation::On
            }
        })
    }

    /// Predicate equality of points: both coordinate differences within band.
    pub fn points_equal(&self, p: &Point2, q: &Point2) -> bool {
        let e = &self.eps_eq;
        (&p.x - &q.x).abs() <= *e && (&p.y - &q.y).abs() <= *e
    }

    /// Scalar equality within the band.
    pub fn scalar_equal(&self, a: &Scalar, b: &Scalar) -> bool {
        (a - b).abs() <= self.eps_eq
    }
}
