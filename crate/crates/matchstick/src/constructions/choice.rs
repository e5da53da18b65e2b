//! Deterministic resolution of the "arbitrary" choices the postulates allow.
//!
//! Postulate ii lets a construction pick any point on a stick, and several
//! macros need a fresh direction or a trial angle. All such decisions are
//! routed through a [`ChoiceSource`] so that a run is fully reproducible:
//! strategy `half` uses fixed canonical values, strategy `random` draws from a
//! seeded generator.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::{ChoiceStrategy, Config};
use crate::numerics::{Point2, Scalar};

#[derive(Debug)]
pub struct ChoiceSource {
    strategy: ChoiceStrategy,
    rng: ChaCha8Rng,
    precision: usize,
    directions_used: u32,
}

impl ChoiceSource {
    pub fn new(config: &Config) -> Self {
        ChoiceSource {
            strategy: config.choice_strategy,
            rng: ChaCha8Rng::seed_from_u64(config.seed),
            precision: config.precision_bits,
            directions_used: 0,
        }
    }

    /// Where to split a stick when an interior point is needed.
    ///
    /// `half` always answers 1/2, which lets repeated identical extensions
    /// reuse each other's points and sticks.
    pub fn split_param(&mut self) -> Scalar {
        match self.strategy {
            ChoiceStrategy::Half => Scalar::pow2(-1, self.precision),
            ChoiceStrategy::Random => {
                Scalar::from_f64(self.rng.gen_range(0.3..0.7), self.precision)
            }
        }
    }

    /// Height of the zig-zag chains in the bisector construction, in (0, 1).
    pub fn chain_height(&mut self) -> Scalar {
        match self.strategy {
            ChoiceStrategy::Half => Scalar::from_f64(0.6, self.precision),
            ChoiceStrategy::Random => {
                Scalar::from_f64(self.rng.gen_range(0.35..0.75), self.precision)
            }
        }
    }

    /// Three trial slopes tan θ with θ in (10°, 29°] for the perpendicular
    /// construction, paired with the side of the base line to try.
    pub fn trial_slopes(&mut self) -> [(f64, bool); 3] {
        match self.strategy {
            ChoiceStrategy::Half => [
                (20f64.to_radians().tan(), true),
                (24f64.to_radians().tan(), false),
                (28f64.to_radians().tan(), true),
            ],
            ChoiceStrategy::Random => {
                let mut out = [(0.0, false); 3];
                for slot in &mut out {
                    let deg = self.rng.gen_range(11.0..29.0);
                    *slot = ((deg as f64).to_radians().tan(), self.rng.gen());
                }
                out
            }
        }
    }

    /// A fresh direction for a new line; never aimed at a construction target.
    pub fn direction(&mut self) -> Point2 {
        let angle = match self.strategy {
            ChoiceStrategy::Half => {
                // Low-discrepancy sequence of angles, deterministic but
                // unlikely to align with anything in the input.
                self.directions_used += 1;
                let golden = 0.618_033_988_749_894_8_f64;
                (0.137 + golden * self.directions_used as f64).fract() * std::f64::consts::TAU
            }
            ChoiceStrategy::Random => self.rng.gen_range(0.0..std::f64::consts::TAU),
        };
        Point2::from_f64(angle.cos(), angle.sin(), self.precision)
    }
}
