//! The full pipeline in-process: compile a `.euclid` program, verify the
//! resulting trace by independent replay, compare against the analytic
//! oracle, and render the construction as SVG.

use matchstick::render::render_svg;
use matchstick::verifier::verify_parsed;
use matchstick::{lang, oracle, Config};

const SOURCE: &str = "\
point O = (0, 1);
point S = (1, 2);
point A = (5, 0);
point B = (5.5, 0);
let g = circle(O, S);
let l = line(A, B);
let X = intersect(g, l)[1];
output X;
assert_on(X, g);
";

fn main() {
    let config = Config::default();
    let program = lang::parse(SOURCE).unwrap();
    let lowered = lang::lower(&program, &config).unwrap();

    let report = verify_parsed(&lowered.trace, &config);
    print!("{report}");

    let oracle_report = oracle::compare(&program, &lowered.trace, &config).unwrap();
    print!("{oracle_report}");

    let svg = render_svg(&lowered.trace);
    println!("rendered SVG: {} bytes, {} line elements", svg.len(), svg.matches("<line ").count());
}
