//! Seeded generation of well-posed `.euclid` programs.
//!
//! Each program is built from a template instantiated with randomized
//! coordinates inside [−20, 20]². Well-posedness is enforced at generation
//! time with cheap float checks (triangle area bounds, circle intersection
//! margins), so every generated program compiles, verifies, and has a
//! defined analytic value for each output.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Half-width of the coordinate domain.
const DOMAIN: f64 = 20.0;

fn fmt(v: f64) -> String {
    format!("{v:.4}")
}

/// A random point inside a disc of radius `r` around `(cx, cy)`, clamped to
/// the domain.
fn around(rng: &mut ChaCha8Rng, cx: f64, cy: f64, r: f64) -> (f64, f64) {
    let a: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    let d: f64 = rng.gen_range(0.0..r);
    let clamp = |v: f64| v.clamp(-DOMAIN, DOMAIN);
    (clamp(cx + d * a.cos()), clamp(cy + d * a.sin()))
}

fn dist(a: (f64, f64), b: (f64, f64)) -> f64 {
    (a.0 - b.0).hypot(a.1 - b.1)
}

fn area2(a: (f64, f64), b: (f64, f64), c: (f64, f64)) -> f64 {
    ((b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)).abs()
}

/// A triangle with bounded sides and a real area, so derived intersections
/// stay well-conditioned and nearby.
fn triangle(rng: &mut ChaCha8Rng) -> [(f64, f64); 3] {
    let cx = rng.gen_range(-18.0..18.0);
    let cy = rng.gen_range(-18.0..18.0);
    loop {
        let a = around(rng, cx, cy, 2.0);
        let b = around(rng, cx, cy, 2.0);
        let c = around(rng, cx, cy, 2.0);
        let sides = [dist(a, b), dist(b, c), dist(c, a)];
        if sides.iter().all(|&s| (0.8..=4.0).contains(&s)) && area2(a, b, c) >= 1.0 {
            return [a, b, c];
        }
    }
}

fn points_decl(names: &[&str], pts: &[(f64, f64)]) -> String {
    names
        .iter()
        .zip(pts)
        .map(|(n, p)| format!("point {n} = ({}, {});\n", fmt(p.0), fmt(p.1)))
        .collect()
}

/// Sides of a triangle plus a vertex re-derived by intersection.
fn tpl_vertex(rng: &mut ChaCha8Rng) -> String {
    let t = triangle(rng);
    let mut s = points_decl(&["A", "B", "C"], &t);
    s.push_str(
        "let ab = line(A, B);\n\
         let bc = line(B, C);\n\
         let X = intersect(ab, bc)[0];\n\
         let M = midpoint(A, C);\n\
         output X;\n\
         output M;\n",
    );
    s
}

/// Circumcenter from two perpendicular bisectors.
fn tpl_circumcenter(rng: &mut ChaCha8Rng) -> String {
    let t = triangle(rng);
    let mut s = points_decl(&["A", "B", "C"], &t);
    s.push_str(
        "let p = perp_bisector(A, B);\n\
         let q = perp_bisector(B, C);\n\
         let X = intersect(p, q)[0];\n\
         output X;\n",
    );
    s
}

/// Foot of the altitude from C onto AB.
fn tpl_altitude(rng: &mut ChaCha8Rng) -> String {
    let t = triangle(rng);
    let mut s = points_decl(&["A", "B", "C"], &t);
    s.push_str(
        "let ab = line(A, B);\n\
         let h = perp(ab, C);\n\
         let X = intersect(ab, h)[0];\n\
         output X;\n\
         assert_on(X, ab);\n",
    );
    s
}

/// Fourth parallelogram vertex by translation, checked against the parallel
/// construction.
fn tpl_parallelogram(rng: &mut ChaCha8Rng) -> String {
    let t = triangle(rng);
    let mut s = points_decl(&["A", "B", "C"], &t);
    s.push_str(
        "let T = translate(A, B, C);\n\
         let ab = line(A, B);\n\
         let par = parallel(ab, C);\n\
         output T;\n\
         assert_on(T, par);\n",
    );
    s
}

/// A circle crossed by a secant line through its interior.
fn tpl_circle_line(rng: &mut ChaCha8Rng) -> String {
    let cx = rng.gen_range(-16.0..16.0);
    let cy = rng.gen_range(-16.0..16.0);
    let r: f64 = rng.gen_range(1.0..2.5);
    let sa: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    let o = (cx, cy);
    let s_pt = (cx + r * sa.cos(), cy + r * sa.sin());
    // The chord passes within r/2 of the center: two clean intersections.
    let la: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    let off: f64 = rng.gen_range(-0.5..0.5) * r;
    let mid = (cx - la.sin() * off, cy + la.cos() * off);
    let a = (mid.0 - 0.9 * la.cos(), mid.1 - 0.9 * la.sin());
    let b = (mid.0 + 0.9 * la.cos(), mid.1 + 0.9 * la.sin());
    let mut s = points_decl(&["O", "S", "A", "B"], &[o, s_pt, a, b]);
    s.push_str(
        "let g = circle(O, S);\n\
         let l = line(A, B);\n\
         let X = intersect(g, l)[0];\n\
         let Y = intersect(g, l)[1];\n\
         output X;\n\
         output Y;\n\
         assert_on(X, g);\n\
         assert_on(Y, l);\n",
    );
    s
}

/// Two circles crossing with a comfortable margin.
fn tpl_circle_circle(rng: &mut ChaCha8Rng) -> String {
    let cx = rng.gen_range(-15.0..15.0);
    let cy = rng.gen_range(-15.0..15.0);
    let d: f64 = rng.gen_range(1.5..3.0);
    let r1: f64 = rng.gen_range(1.0..2.0);
    // |r1 − r2| + 0.3 ≤ d and d ≤ r1 + r2 − 0.3 keeps the crossing generic.
    let lo = (d - r1 + 0.3).max(1.0);
    let hi = (d + r1 - 0.3).min(2.5);
    let r2: f64 = if lo < hi { rng.gen_range(lo..hi) } else { (lo + hi) / 2.0 };
    let da: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    let o1 = (cx, cy);
    let o2 = (cx + d * da.cos(), cy + d * da.sin());
    let a1: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    let a2: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    let s1 = (o1.0 + r1 * a1.cos(), o1.1 + r1 * a1.sin());
    let s2 = (o2.0 + r2 * a2.cos(), o2.1 + r2 * a2.sin());
    let mut s = points_decl(&["O1", "S1", "O2", "S2"], &[o1, s1, o2, s2]);
    s.push_str(
        "let g1 = circle(O1, S1);\n\
         let g2 = circle(O2, S2);\n\
         let X = intersect(g1, g2)[0];\n\
         output X;\n\
         assert_on(X, g1);\n\
         assert_on(X, g2);\n",
    );
    s
}

/// Generate the `index`-th program of the seeded suite.
///
/// Templates are weighted so that the expensive circle constructions appear
/// often enough to matter but do not dominate the batch runtime.
pub fn generate_program(seed: u64, index: usize) -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(0x9e37_79b9_7f4a_7c15u64.wrapping_mul(index as u64 + 1)));
    match rng.gen_range(0..100) {
        0..=24 => tpl_vertex(&mut rng),
        25..=44 => tpl_circumcenter(&mut rng),
        45..=64 => tpl_altitude(&mut rng),
        65..=81 => tpl_parallelogram(&mut rng),
        82..=93 => tpl_circle_line(&mut rng),
        _ => tpl_circle_circle(&mut rng),
    }
}

/// Generate a whole suite.
pub fn suite(seed: u64, count: usize) -> Vec<String> {
    (0..count).map(|i| generate_program(seed, i)).collect()
}
