//! Translate a segment to a new base point by completing parallelograms.

use matchstick::constructions::{translate_segment, Toolkit};
use matchstick::{Config, Scalar};

fn sc(x: f64) -> Scalar {
    Scalar::from_f64(x, 256)
}

fn main() {
    let mut tk = Toolkit::new(Config::default());
    let p = tk.board.given_point(&sc(0.0), &sc(0.0));
    let q = tk.board.given_point(&sc(1.5), &sc(0.75));
    let t = tk.board.given_point(&sc(-2.0), &sc(3.0));

    let image = translate_segment(&mut tk, p, q, t).unwrap();
    let (x, y) = tk.pt(image).to_f64();
    println!("segment PQ translated to T: endpoint lands at ({x}, {y})");
}
