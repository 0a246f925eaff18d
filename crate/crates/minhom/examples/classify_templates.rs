//! Classify a handful of reflexive templates: polynomial cases get a
//! Min-Max ordering, NP-complete cases a forbidden-subgraph witness.

use minhom::hardness::identify_labeled_obstructions;
use minhom::io::verdict_report;
use minhom::recognition::{classify, derive_obstruction_catalog};
use minhom::{Digraph, Result};

fn main() -> Result<()> {
    let catalog = identify_labeled_obstructions(&derive_obstruction_catalog(4, false)?)?.0;

    let examples: Vec<(&str, Digraph)> = vec![
        (
            "transitive tournament on 3 vertices",
            Digraph::reflexive(["1", "2", "3"], &[("1", "2"), ("1", "3"), ("2", "3")])?,
        ),
        (
            "reflexive 4-cycle (symmetric)",
            Digraph::reflexive(
                ["a", "b", "c", "d"],
                &[
                    ("a", "b"),
                    ("b", "a"),
                    ("b", "c"),
                    ("c", "b"),
                    ("c", "d"),
                    ("d", "c"),
                    ("d", "a"),
                    ("a", "d"),
                ],
            )?,
        ),
        (
            "digon with a one-way spectator (the 3-vertex obstruction)",
            Digraph::reflexive(
                ["u", "v", "s"],
                &[("u", "v"), ("v", "u"), ("s", "v"), ("u", "s")],
            )?,
        ),
        (
            "reflexive path with extra forward arcs",
            Digraph::reflexive(
                ["p", "q", "r"],
                &[("p", "q"), ("q", "p"), ("q", "r"), ("r", "q"), ("p", "r")],
            )?,
        ),
    ];

    for (desc, h) in examples {
        println!("== {desc} ==");
        println!("{}", verdict_report(&h, &classify(&h, &catalog, None)?));
    }
    Ok(())
}
