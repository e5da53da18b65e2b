//! Perpendicular bisector and midpoint of a segment far longer than a stick,
//! via two mirrored zig-zag chains between parallels.

use matchstick::constructions::{line_through, perpendicular_bisector, Toolkit};
use matchstick::{Config, Scalar};

fn main() {
    let mut tk = Toolkit::new(Config::default());
    let a = tk.board.given_point(&Scalar::from_i64(0, 256), &Scalar::from_i64(0, 256));
    let b = tk.board.given_point(&Scalar::from_i64(7, 256), &Scalar::from_i64(0, 256));

    let mut line_ab = line_through(&mut tk, a, b).unwrap();
    let (bisector, midpoint) = perpendicular_bisector(&mut tk, a, b, &mut line_ab).unwrap();

    let mid = tk.pt(midpoint).clone();
    let (dx, dy) = bisector.carrier.dir.to_f64();
    println!("midpoint ({}, {})", mid.x.to_decimal_string(8), mid.y.to_decimal_string(8));
    println!("bisector direction ({dx:.6}, {dy:.6})");
}
