//! Random chains of covers in the polytope category, checking that the trace
//! commutes with every face map.

use scissors::covercat::PolCategory;
use scissors::geometry::{Direction, GroupKind};
use scissors::measures::Measure;
use scissors::random::{pol_chain, rng, symbol_table};
use scissors::trace::check_simplicial;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    let mut r = rng(seed);
    let table = symbol_table();
    for (kind, mu) in [
        (GroupKind::T1, Measure::length()),
        (GroupKind::SE2, Measure::area()),
        (GroupKind::T2, Measure::hadwiger(Direction::new(1, 2)?)),
    ] {
        let cat = PolCategory::new(kind, table.clone());
        for degree in 1..=3 {
            let s = pol_chain(&mut r, &cat, degree, false)?;
            let report = check_simplicial(&cat, &s, &mu)?;
            println!("{kind} {mu} degree {degree}: {} faces agree: {}", degree + 1, report.passed());
        }
    }
    Ok(())
}
