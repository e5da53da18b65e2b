//! Erect a perpendicular at a point of a line using Thales' theorem: a trial
//! stick through the point, its crossing with a compass arc, and the diameter
//! through the arc's center.

use matchstick::constructions::{perpendicular_at, LineHandle, Toolkit};
use matchstick::{Config, Scalar};

fn main() {
    let mut tk = Toolkit::new(Config::default());
    let a = tk.board.given_point(&Scalar::from_i64(0, 256), &Scalar::from_i64(0, 256));
    let b = tk.board.given_point(&Scalar::from_i64(1, 256), &Scalar::from_i64(0, 256));
    let stick = tk.board.lay_stick_both_ends(a, b).unwrap();
    let mut line = LineHandle::from_stick(&tk, stick);

    let perp = perpendicular_at(&mut tk, &mut line, a).unwrap();
    let (dx, dy) = perp.carrier.dir.to_f64();
    let dot = line.carrier.dir.dot(&perp.carrier.dir);
    println!("perpendicular direction ({dx:.6}, {dy:.6})");
    println!("residual dot product {}", dot.to_decimal_string(8));
}
