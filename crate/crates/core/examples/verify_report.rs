//! Runs every registered check and prints the verdicts.
use additive_chow::verify::{render_text, run, Options};

fn main() {
    let verdicts = run(&[], &Options::default()).expect("registered ids");
    print!("{}", render_text(&verdicts));
}
