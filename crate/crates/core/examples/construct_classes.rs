//! Builds automorphisms realizing a few requested classes and reads them
//! back with the trace.

use scissors::exactnum::{rat, ExactReal};
use scissors::geometry::Rotation;
use scissors::measures::Measure;
use scissors::random::symbol_table;
use scissors::trace::{construct_class, trace_automorphism, ClassRequest};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let table = symbol_table();
    let requests = vec![
        ClassRequest::T1 { x: ExactReal::symbol("x"), y: ExactReal::symbol("y"), table: table.clone() },
        ClassRequest::T1 { x: ExactReal::symbol("x") + ExactReal::rational(rat(1, 2)), y: ExactReal::symbol("x"), table },
        ClassRequest::SE2 { rotation: Rotation::new(rat(4, 5), rat(3, 5))?, area: rat(1, 1) },
        ClassRequest::SE2 { rotation: Rotation::new(rat(5, 13), rat(12, 13))?, area: rat(-3, 2) },
        ClassRequest::SE2 { rotation: Rotation::new(rat(-33, 65), rat(56, 65))?, area: rat(2, 3) },
    ];
    for req in &requests {
        let auto = construct_class(req)?;
        let mu = if matches!(req, ClassRequest::T1 { .. }) { Measure::length() } else { Measure::area() };
        let (_, class) = trace_automorphism(&auto, &mu)?;
        println!("{:>3} pieces  wanted {}  traced {}", auto.pieces().len(), req.expected(), class);
    }
    Ok(())
}
