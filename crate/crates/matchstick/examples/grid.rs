//! Cover a far-away point with the spiral grid: unit-spaced horizontal and
//! vertical lines built outward from an origin until the target's unit cell
//! is bounded on all four sides.

use matchstick::constructions::{coordinate_grid, perpendicular_at, LineHandle, Toolkit};
use matchstick::{Config, Scalar};

fn sc(x: f64) -> Scalar {
    Scalar::from_f64(x, 256)
}

fn main() {
    let mut tk = Toolkit::new(Config::default());
    let a = tk.board.given_point(&sc(0.0), &sc(0.0));
    let b = tk.board.given_point(&sc(6.18), &sc(8.24)); // 10.3 away
    let aim = tk.board.given_point(&sc(1.0), &sc(0.0));

    let (s0, _) = tk.board.lay_stick_from_through(a, aim).unwrap();
    let mut axis = LineHandle::from_stick(&tk, s0);
    let other = perpendicular_at(&mut tk, &mut axis, a).unwrap();

    let grid = coordinate_grid(&mut tk, a, axis, other, b).unwrap();
    let (bx, by) = grid.frame_of(&tk, &tk.pt(b).clone());
    let trace = tk.board.into_trace();
    println!(
        "grid of {} horizontals × {} verticals in {} instructions",
        grid.horizontals.len(),
        grid.verticals.len(),
        trace.records.len()
    );
    println!("target sits at frame coordinates ({bx:.4}, {by:.4})");
}
