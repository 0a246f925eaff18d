//! Walk through the exchange procedure: start from a bipartite Min-Max
//! ordering of B(H) whose two sides disagree, repair it into a Min-Max
//! ordering of H, then show how the procedure gets stuck (with Case 1 /
//! Case 2 witnesses) on an obstruction.

use minhom::order::{
    enumerate_bipartite_min_max, exchange_construct, is_min_max, ExchangeOutcome,
};
use minhom::recognition::derive_obstruction_catalog;
use minhom::{Digraph, Result};

fn main() -> Result<()> {
    // a digon: every pairing of side orders is bipartite Min-Max
    let h = Digraph::reflexive(["a", "b"], &[("a", "b"), ("b", "a")])?;
    let b = h.bipartite_double();
    for bord in enumerate_bipartite_min_max(&b, None)? {
        let whites: Vec<&str> = bord.white.seq().iter().map(|&v| h.name(v)).collect();
        let blacks: Vec<&str> = bord.black.seq().iter().map(|&v| h.name(v)).collect();
        match exchange_construct(&h, &bord)? {
            ExchangeOutcome::Ordered { ordering, swaps } => {
                assert!(is_min_max(&h, &ordering)?);
                println!(
                    "start whites [{}] blacks [{}] -> ordering [{}] after {swaps} swap(s)",
                    whites.join(" "),
                    blacks.join(" "),
                    ordering.named(&h).join(" ")
                );
            }
            ExchangeOutcome::Stuck(_) => unreachable!("digons always repair"),
        }
    }

    // the 3-vertex obstruction: every start gets stuck with a witness
    let catalog = derive_obstruction_catalog(3, false)?;
    let h1 = &catalog.members[0].digraph;
    println!("\nobstruction: {h1}");
    let b1 = h1.bipartite_double();
    for bord in enumerate_bipartite_min_max(&b1, None)? {
        match exchange_construct(h1, &bord)? {
            ExchangeOutcome::Stuck(report) => {
                let (v, u) = report.pair;
                println!(
                    "stuck on improper pair ({}, {}): witnesses s={} t={} ({:?}{})",
                    h1.name(v),
                    h1.name(u),
                    h1.name(report.s),
                    h1.name(report.t),
                    report.case,
                    if report.mirrored { ", mirrored" } else { "" }
                );
            }
            ExchangeOutcome::Ordered { .. } => unreachable!("obstructions never repair"),
        }
    }
    Ok(())
}
