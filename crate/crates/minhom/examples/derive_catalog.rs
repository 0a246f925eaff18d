//! Derive the minimal obstruction catalog from scratch, assign the
//! paper indices H1..H6 and role labels x1..x4, and print it.

use minhom::hardness::identify_labeled_obstructions;
use minhom::io::serialize_digraph;
use minhom::recognition::derive_obstruction_catalog;
use minhom::Result;

fn main() -> Result<()> {
    let catalog = derive_obstruction_catalog(4, false)?;
    let (labeled, report) = identify_labeled_obstructions(&catalog)?;

    println!(
        "{} minimal obstructions in {} converse classes\n",
        labeled.members.len(),
        labeled.converse_class_count
    );
    for (i, m) in labeled.members.iter().enumerate() {
        let tag = match m.paper_index {
            Some(p) => format!("H{p}"),
            None => format!("(converse of class {})", m.converse_class + 1),
        };
        println!("member {} {tag}, converse class {}", i + 1, m.converse_class + 1);
        print!("{}", serialize_digraph(&format!("member{}", i + 1), &m.digraph));
        if let Some(lab) = &m.labeling {
            let roles: Vec<&str> = lab.iter().map(|&v| m.digraph.name(v)).collect();
            println!("roles x1..x4: {}", roles.join(" "));
        }
        println!();
    }
    for (lemma, hits) in &report.lemma_matches {
        println!(
            "lemma-{lemma} constraint table matches members: {:?}",
            hits.iter().map(|i| i + 1).collect::<Vec<_>>()
        );
    }
    Ok(())
}
