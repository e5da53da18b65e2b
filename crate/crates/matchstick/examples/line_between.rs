//! Draw the common line of two points that are many stick lengths apart, by
//! halving toward a helper corner until the shrunken segment fits a stick,
//! then pushing the short line back out as a parallel.

use matchstick::constructions::{line_through, Toolkit};
use matchstick::{Config, Scalar};

fn sc(x: f64) -> Scalar {
    Scalar::from_f64(x, 256)
}

fn main() {
    let mut tk = Toolkit::new(Config::default());
    let a = tk.board.given_point(&sc(0.0), &sc(0.0));
    let b = tk.board.given_point(&sc(6.4), &sc(2.5));

    let line = line_through(&mut tk, a, b).unwrap();
    let res_a = line.carrier.signed_dist(tk.pt(a));
    let res_b = line.carrier.signed_dist(tk.pt(b));
    println!("residual at A: {}", res_a.to_decimal_string(8));
    println!("residual at B: {}", res_b.to_decimal_string(8));
}
