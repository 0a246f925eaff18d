//! Build the NP-hardness gadget reducing 3-colored independent set to
//! MinHOM(H4), then confirm by brute force that the minimum cost equals
//! |V(X)| - alpha(X).

use minhom::hardness::{
    gadget, identify_labeled_obstructions, verify_reduction, Class, ThreeColoredGraph,
};
use minhom::io::{serialize_colored_graph, serialize_costs, serialize_digraph};
use minhom::recognition::derive_obstruction_catalog;
use minhom::{Result, UndirectedGraph, VertexId};

fn main() -> Result<()> {
    let catalog = identify_labeled_obstructions(&derive_obstruction_catalog(4, false)?)?.0;

    // a 5-cycle, 3-colored; alpha = 2
    let mut x = UndirectedGraph::new(["u1", "v1", "u2", "w1", "v2"])?;
    for (a, b) in [(0u32, 1u32), (1, 2), (2, 3), (3, 4), (4, 0)] {
        x.add_edge(VertexId(a), VertexId(b))?;
    }
    let x = ThreeColoredGraph::new(
        x,
        vec![Class::U, Class::V, Class::U, Class::W, Class::V],
    )?;
    print!("{}", serialize_colored_graph("c5", &x));

    let k = 2;
    let gi = gadget(4, &x, k, &catalog)?;
    let h4 = &catalog.member_with_paper_index(4).unwrap().digraph;
    println!("\ngadget instance (U-W and V-W edges gain an intermediate):");
    print!("{}", serialize_digraph("gadget_h4", &gi.g));
    println!("\ncosts (rows = instance, columns = template):");
    print!("{}", serialize_costs(&gi.costs, &gi.g, h4));
    println!("budget |V(X)| - k = {}", gi.budget);

    let check = verify_reduction(4, &x, k, &catalog, None)?;
    println!(
        "\nalpha(X) = {}, brute-force min cost = {} (= |V(X)| - alpha), iff holds: {}",
        check.alpha, check.min_cost, check.iff_holds
    );
    assert!(check.ok());
    Ok(())
}
