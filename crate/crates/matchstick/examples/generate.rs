//! Generate a seeded random well-posed program and run it through the
//! compile → verify → oracle pipeline.

use matchstick::{cli, progen, Config};

fn main() {
    let seed = 42;
    let index = 7;
    let source = progen::generate_program(seed, index);
    println!("--- program (seed {seed}, index {index}) ---\n{source}---");
    let code = cli::check_program(&source, &Config::default(), false);
    println!("pipeline stage code: {code}");
}
