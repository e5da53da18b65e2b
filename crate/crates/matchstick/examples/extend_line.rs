//! Extend a single unit stick into a long straight line.
//!
//! Each unit of extension costs three primitive instructions: choose a point
//! on the last stick, lay a stick from it through the far end, and keep the
//! fresh extremity as the next anchor.

use matchstick::constructions::{extend_line, Toolkit};
use matchstick::{Config, Scalar};

fn main() {
    let mut tk = Toolkit::new(Config::default());
    let a = tk.board.given_point(&Scalar::from_i64(0, 256), &Scalar::from_i64(0, 256));
    let b = tk.board.given_point(&Scalar::from_i64(1, 256), &Scalar::from_i64(0, 256));
    let stick = tk.board.lay_stick_both_ends(a, b).unwrap();

    let line = extend_line(&mut tk, stick, true, 25.0).unwrap();
    let far = *line.mark_points().last().unwrap();
    let (x, y) = tk.pt(far).to_f64();
    let trace = tk.board.into_trace();
    println!("extended to ({x}, {y}) in {} instructions", trace.records.len());
}
