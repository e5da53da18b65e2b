//! Verifier acceptance of macro output: every construction macro, run over
//! 200 seeded randomized inputs, must produce a trace the independent
//! verifier accepts.

use matchstick::config::Config;
use matchstick::constructions::{
    antipodal_on_circle, circle_circle_intersect, circle_line_intersect, extend_line, line_through,
    parallel_and_perpendicular_near, parallel_through, perpendicular_at, perpendicular_bisector,
    perpendicular_through, rotate90_on_circle, translate_segment, CircleSpec, LineHandle, Toolkit,
};
use matchstick::trace::PointId;
use matchstick::Scalar;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const RUNS: usize = 200;

fn sc(x: f64) -> Scalar {
    // Exact dyadic input; the board canonicalizes it on entry.
    Scalar::from_f64(x, 256)
}

fn given(tk: &mut Toolkit, x: f64, y: f64) -> PointId {
    tk.board.given_point(&sc(x), &sc(y))
}

/// A coordinate in a moderate range, kept away from exact grid values so
/// random configurations stay generic.
fn coord(rng: &mut ChaCha8Rng, range: f64) -> f64 {
    let raw: f64 = rng.gen_range(-range..range);
    (raw * 128.0).round() / 128.0 + 0.013671875
}

fn unit_apart(rng: &mut ChaCha8Rng, range: f64) -> ((f64, f64), (f64, f64)) {
    let x = coord(rng, range);
    let y = coord(rng, range);
    let angle: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    // Snap the direction to a dyadic grid, then renormalize on the board via
    // from_through; only approximate unit spacing is needed by callers.
    ((x, y), (x + angle.cos(), y + angle.sin()))
}

fn verify_accepts(tk: Toolkit, what: &str, seed_run: usize) {
    let trace = tk.board.into_trace();
    let report = matchstick::verifier::verify_trace(&trace.to_string()).unwrap();
    assert_eq!(
        report.verdict,
        matchstick::verifier::Verdict::Accept,
        "{what} run {seed_run}: {report}"
    );
}

/// A random line handle through two nearby points (unit sticks only).
fn random_line(tk: &mut Toolkit, rng: &mut ChaCha8Rng, range: f64) -> LineHandle {
    let ((ax, ay), _) = unit_apart(rng, range);
    let angle: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    let a = given(tk, ax, ay);
    let b = given(tk, ax + 0.75 * angle.cos(), ay + 0.75 * angle.sin());
    let (stick, _) = tk.board.lay_stick_from_through(a, b).unwrap();
    LineHandle::from_stick(&*tk, stick)
}

#[test]
fn extend_line_traces_verify() {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    for run in 0..RUNS {
        let mut tk = Toolkit::new(Config::default());
        let mut l = random_line(&mut tk, &mut rng, 3.0);
        let span = rng.gen_range(1.0..4.0);
        let forward = rng.gen_bool(0.5);
        let seed = l.stick_containing(&mut tk, 0.5).unwrap();
        let _ = extend_line(&mut tk, seed, forward, span).unwrap();
        drop(l);
        verify_accepts(tk, "extend_line", run);
    }
}

#[test]
fn perpendicular_at_traces_verify() {
    let mut rng = ChaCha8Rng::seed_from_u64(102);
    for run in 0..RUNS {
        let mut tk = Toolkit::new(Config::default());
        let mut l = random_line(&mut tk, &mut rng, 3.0);
        let a = l.mark(0).unwrap();
        perpendicular_at(&mut tk, &mut l, a).unwrap();
        verify_accepts(tk, "perpendicular_at", run);
    }
}

#[test]
fn perpendicular_bisector_traces_verify() {
    let mut rng = ChaCha8Rng::seed_from_u64(103);
    for run in 0..RUNS {
        let mut tk = Toolkit::new(Config::default());
        let ((ax, ay), _) = unit_apart(&mut rng, 3.0);
        let angle: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
        let span = rng.gen_range(1.2..4.0);
        let a = given(&mut tk, ax, ay);
        let b = given(&mut tk, ax + span * angle.cos(), ay + span * angle.sin());
        let mut l = line_through(&mut tk, a, b).unwrap();
        perpendicular_bisector(&mut tk, a, b, &mut l).unwrap();
        verify_accepts(tk, "perpendicular_bisector", run);
    }
}

#[test]
fn near_parallel_traces_verify() {
    let mut rng = ChaCha8Rng::seed_from_u64(104);
    for run in 0..RUNS {
        let mut tk = Toolkit::new(Config::default());
        let mut l = random_line(&mut tk, &mut rng, 3.0);
        let (ax, ay) = {
            let (px, py) = tk.pt(l.mark(0).unwrap()).to_f64();
            let n = l.carrier.dir.to_f64();
            let off = rng.gen_range(0.05..0.95);
            (px - n.1 * off, py + n.0 * off)
        };
        let a = given(&mut tk, ax, ay);
        parallel_and_perpendicular_near(&mut tk, &mut l, a).unwrap();
        verify_accepts(tk, "parallel_and_perpendicular_near", run);
    }
}

#[test]
fn line_through_traces_verify() {
    let mut rng = ChaCha8Rng::seed_from_u64(105);
    for run in 0..RUNS {
        let mut tk = Toolkit::new(Config::default());
        let ax = coord(&mut rng, 2.0);
        let ay = coord(&mut rng, 2.0);
        let angle: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
        let span = rng.gen_range(0.3..3.5);
        let a = given(&mut tk, ax, ay);
        let b = given(&mut tk, ax + span * angle.cos(), ay + span * angle.sin());
        line_through(&mut tk, a, b).unwrap();
        verify_accepts(tk, "line_through", run);
    }
}

#[test]
fn parallel_and_perpendicular_through_traces_verify() {
    let mut rng = ChaCha8Rng::seed_from_u64(106);
    for run in 0..RUNS {
        let mut tk = Toolkit::new(Config::default());
        let mut l = random_line(&mut tk, &mut rng, 2.0);
        let t = given(&mut tk, coord(&mut rng, 3.0), coord(&mut rng, 3.0));
        if run % 2 == 0 {
            parallel_through(&mut tk, &mut l, t).unwrap();
        } else {
            perpendicular_through(&mut tk, &mut l, t).unwrap();
        }
        verify_accepts(tk, "parallel/perpendicular_through", run);
    }
}

#[test]
fn translate_segment_traces_verify() {
    let mut rng = ChaCha8Rng::seed_from_u64(107);
    for run in 0..RUNS {
        let mut tk = Toolkit::new(Config::default());
        let p = given(&mut tk, coord(&mut rng, 2.0), coord(&mut rng, 2.0));
        let q = given(&mut tk, coord(&mut rng, 2.0), coord(&mut rng, 2.0));
        let t = given(&mut tk, coord(&mut rng, 2.0), coord(&mut rng, 2.0));
        if tk.ctx().points_equal(tk.pt(p), tk.pt(q)) {
            continue;
        }
        translate_segment(&mut tk, p, q, t).unwrap();
        verify_accepts(tk, "translate_segment", run);
    }
}

#[test]
fn circle_line_traces_verify() {
    let mut rng = ChaCha8Rng::seed_from_u64(108);
    for run in 0..RUNS {
        let mut tk = Toolkit::new(Config::default());
        let mut l = random_line(&mut tk, &mut rng, 2.0);
        let o = given(&mut tk, coord(&mut rng, 2.0), coord(&mut rng, 2.0));
        let s = given(&mut tk, coord(&mut rng, 2.0), coord(&mut rng, 2.0));
        if tk.ctx().points_equal(tk.pt(o), tk.pt(s)) {
            continue;
        }
        let c = CircleSpec::new(&tk, o, s).unwrap();
        circle_line_intersect(&mut tk, &c, &mut l).unwrap();
        verify_accepts(tk, "circle_line_intersect", run);
    }
}

#[test]
fn circle_circle_traces_verify() {
    let mut rng = ChaCha8Rng::seed_from_u64(109);
    for run in 0..RUNS {
        let mut tk = Toolkit::new(Config::default());
        let o1 = given(&mut tk, coord(&mut rng, 1.5), coord(&mut rng, 1.5));
        let s1 = given(&mut tk, coord(&mut rng, 2.5), coord(&mut rng, 2.5));
        let o2 = given(&mut tk, coord(&mut rng, 1.5), coord(&mut rng, 1.5));
        let s2 = given(&mut tk, coord(&mut rng, 2.5), coord(&mut rng, 2.5));
        if tk.ctx().points_equal(tk.pt(o1), tk.pt(s1))
            || tk.ctx().points_equal(tk.pt(o2), tk.pt(s2))
            || tk.ctx().points_equal(tk.pt(o1), tk.pt(o2))
        {
            continue;
        }
        let g1 = CircleSpec::new(&tk, o1, s1).unwrap();
        let g2 = CircleSpec::new(&tk, o2, s2).unwrap();
        circle_circle_intersect(&mut tk, &g1, &g2).unwrap();
        verify_accepts(tk, "circle_circle_intersect", run);
    }
}

#[test]
fn circle_point_helpers_verify() {
    let mut rng = ChaCha8Rng::seed_from_u64(110);
    for run in 0..RUNS {
        let mut tk = Toolkit::new(Config::default());
        let o = given(&mut tk, coord(&mut rng, 2.0), coord(&mut rng, 2.0));
        let s = given(&mut tk, coord(&mut rng, 2.0), coord(&mut rng, 2.0));
        if tk.ctx().points_equal(tk.pt(o), tk.pt(s)) {
            continue;
        }
        let c = CircleSpec::new(&tk, o, s).unwrap();
        if run % 2 == 0 {
            antipodal_on_circle(&mut tk, &c).unwrap();
        } else {
            rotate90_on_circle(&mut tk, &c).unwrap();
        }
        verify_accepts(tk, "circle point helpers", run);
    }
}
