//! Swaps two intervals of lengths `x = √2 − 1` and `y = π − 3` and prints the
//! trace. The class `y⊗x − x⊗y` is nonzero because `x` and `y` are
//! independent symbols.

use scissors::exactnum::ExactReal;
use scissors::measures::Measure;
use scissors::random::symbol_table;
use scissors::trace::{interval_exchange, trace_automorphism};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let table = symbol_table();
    let (x, y) = (ExactReal::symbol("x"), ExactReal::symbol("y"));
    let auto = interval_exchange(&x, &y, &table)?;
    let (chain, class) = trace_automorphism(&auto, &Measure::length())?;
    println!("chain:   {chain}");
    println!("class:   {class}");
    let (_, back) = trace_automorphism(&auto.inverse()?, &Measure::length())?;
    println!("inverse: {back}");
    Ok(())
}
