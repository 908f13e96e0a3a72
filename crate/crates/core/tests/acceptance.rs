//! One line per criterion; the process fails if any criterion does.

use scissors::acceptance;

fn main() {
    let seed = std::env::var("SCISSORS_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(1);
    let mut failed = 0;
    for (id, _, _) in acceptance::CRITERIA {
        let c = acceptance::run(id, seed);
        println!("{c}");
        if !c.passed {
            failed += 1;
        }
    }
    println!("acceptance: {} passed, {failed} failed", acceptance::CRITERIA.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
