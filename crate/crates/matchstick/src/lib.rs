//! Constructive plane geometry with unit match-sticks.
//!
//! A construction is a sequence of primitive instructions on a [`board::Board`]:
//! laying a stick of exactly unit length through known points, choosing a point
//! on a stick, and using a stick as a unitary compass against one other stick.
//! The [`constructions`] module builds classical compass-and-ruler results
//! (perpendiculars, bisectors, lines through distant points, circle
//! intersections) out of those primitives alone; the [`verifier`] replays a
//! recorded trace and re-checks every instruction for legality, and the
//! [`oracle`] evaluates the same program with ordinary analytic geometry so the
//! two answers can be compared.
//!
//! See the `examples/` directory for one runnable example per capability, and
//! the `matchstick` binary for the `compile` / `verify` / `render` / `check` /
//! `oracle` subcommands.

pub mod board;
pub mod cli;
pub mod config;
pub mod constructions;
pub mod lang;
pub mod numerics;
pub mod oracle;
pub mod progen;
pub mod render;
pub mod trace;
pub mod verifier;

pub use config::Config;
pub use numerics::{Point2, Scalar};
