//! Hadwiger invariants of a few polygons. They are additive and invariant
//! under translations but not under rotations.

use scissors::exactnum::rat;
use scissors::geometry::{Direction, Isometry, Point, Polytope, Rotation};
use scissors::measures::Measure;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p = |x: i64, y: i64| Point::new(rat(x, 1), rat(y, 1));
    let shapes = [
        ("unit square", Polytope::unit_square()),
        ("triangle", Polytope::polygon(vec![p(0, 0), p(2, 0), p(0, 1)])?),
        ("trapezoid", Polytope::polygon(vec![p(0, 0), p(3, 0), p(2, 1), p(1, 1)])?),
    ];
    let turn = Isometry::rigid(Rotation::new(rat(3, 5), rat(4, 5))?, p(0, 0));
    for (dx, dy) in [(1, 0), (0, 1), (1, 1)] {
        let mu = Measure::hadwiger(Direction::new(dx, dy)?);
        for (name, shape) in &shapes {
            let turned = shape.apply(&turn)?;
            println!("{mu:<14} {name:<12} {:<10} rotated {}", mu.eval(shape)?.to_string(), mu.eval(&turned)?);
        }
    }
    Ok(())
}
