//! Intersect a circle with a line, and two circles with each other, without
//! ever swinging two compasses at once: the circle–line case shrinks the
//! circle to unit size by a homothety, and the circle–circle case goes
//! through the radical axis.

use matchstick::constructions::{circle_circle_intersect, circle_line_intersect, CircleSpec, LineHandle, Toolkit};
use matchstick::{Config, Scalar};

fn sc(x: f64) -> Scalar {
    Scalar::from_f64(x, 256)
}

fn main() {
    // Circle center (0, 1) through (1, 2) against the x-axis.
    let mut tk = Toolkit::new(Config::default());
    let o = tk.board.given_point(&sc(0.0), &sc(1.0));
    let s = tk.board.given_point(&sc(1.0), &sc(2.0));
    let a = tk.board.given_point(&sc(5.0), &sc(0.0));
    let b = tk.board.given_point(&sc(5.5), &sc(0.0));
    let (s0, _) = tk.board.lay_stick_from_through(a, b).unwrap();
    let mut line = LineHandle::from_stick(&tk, s0);
    let circle = CircleSpec::new(&tk, o, s).unwrap();
    for hit in circle_line_intersect(&mut tk, &circle, &mut line).unwrap() {
        let (x, y) = tk.pt(hit).to_f64();
        println!("circle–line hit ({x}, {y})");
    }

    // Circles (0,0) radius 2 and (3,0) radius 3.
    let mut tk = Toolkit::new(Config::default());
    let o1 = tk.board.given_point(&sc(0.0), &sc(0.0));
    let s1 = tk.board.given_point(&sc(2.0), &sc(0.0));
    let o2 = tk.board.given_point(&sc(3.0), &sc(0.0));
    let s2 = tk.board.given_point(&sc(6.0), &sc(0.0));
    let g1 = CircleSpec::new(&tk, o1, s1).unwrap();
    let g2 = CircleSpec::new(&tk, o2, s2).unwrap();
    for hit in circle_circle_intersect(&mut tk, &g1, &g2).unwrap() {
        let (x, y) = tk.pt(hit).to_f64();
        println!("circle–circle hit ({x}, {y})");
    }
}
