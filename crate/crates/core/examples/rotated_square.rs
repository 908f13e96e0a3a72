//! Dissects a square of side `c + s` so that twelve pieces reassemble it with
//! the inner unit square turned by `(c, s)`, then prints the scenario file and
//! its trace.
//!
//! ```text
//! cargo run --example rotated_square -- 4/5 3/5 > scenarios/rotated_square.json
//! ```

use scissors::cli::{self, Options, Scenario};
use scissors::exactnum::parse_rational;
use scissors::geometry::Rotation;
use scissors::trace::rotated_square;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (c, s) = match args.as_slice() {
        [c, s] => (parse_rational(c)?, parse_rational(s)?),
        _ => (parse_rational("4/5")?, parse_rational("3/5")?),
    };
    let r = Rotation::new(c, s)?;
    let auto = rotated_square(&r)?;
    let scenario = Scenario::from_automorphism("rotated square", "area", &auto, None);
    let text = scenario.to_json();
    print!("{text}");
    let report = cli::trace(&text, &Options::default());
    eprintln!("{}", report.text);
    Ok(())
}
