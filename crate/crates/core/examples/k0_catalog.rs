//! K0 of the small categories in the catalog. With a directory argument it
//! also writes each one as a category file, the toy category carrying the
//! measure `a ↦ 2, b ↦ 1`.
//!
//! ```text
//! cargo run --example k0_catalog -- scenarios/categories
//! ```

use std::path::PathBuf;

use scissors::covercat::{build_ea, group_star, k0, one_star, toy_two_object, FinCatFam, FiniteGroup};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::args().nth(1).map(PathBuf::from);
    let cats: Vec<(&str, FinCatFam)> = vec![
        ("toy", toy_two_object()),
        ("one_star", one_star()),
        ("z3_star", group_star(&FiniteGroup::cyclic(3))),
        ("ea_z2", build_ea(&FiniteGroup::cyclic(2), 3)),
        ("ea_z3", build_ea(&FiniteGroup::cyclic(3), 3)),
        ("ea_z2xz2", build_ea(&FiniteGroup::abelian(&[2, 2]), 3)),
        ("ea_z6", build_ea(&FiniteGroup::cyclic(6), 3)),
    ];
    for (file, c) in &cats {
        let p = k0(c);
        println!("{:<10} {:>3} objects  K0 = {}", file, c.proper_objects().count(), p.group_string());
        if let Some(dir) = &dir {
            let mut doc: serde_json::Value = serde_json::from_str(&c.to_json())?;
            if *file == "toy" {
                doc["measure"] = serde_json::json!({ "a": "2", "b": "1" });
            }
            std::fs::write(dir.join(format!("{file}.json")), serde_json::to_string_pretty(&doc)? + "\n")?;
        }
    }
    Ok(())
}
