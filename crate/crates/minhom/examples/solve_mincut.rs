//! Solve a MinHOM instance exactly with the min-cut encoding and
//! confirm the optimum against the brute-force oracle.

use minhom::oracle::minhom_bruteforce;
use minhom::order::find_min_max_bruteforce;
use minhom::solver::{solve, CostMatrix};
use minhom::{Digraph, Result};

fn main() -> Result<()> {
    // template: reflexive path 1-2-3 with an extra arc 1->3
    let h = Digraph::reflexive(
        ["1", "2", "3"],
        &[("1", "2"), ("2", "1"), ("2", "3"), ("3", "2"), ("1", "3")],
    )?;
    let ord = find_min_max_bruteforce(&h, None)?.expect("template has a Min-Max ordering");
    println!("template ordering: {}", ord.named(&h).join(" "));

    // instance: directed 4-cycle of looped vertices
    let g = Digraph::reflexive(
        ["a", "b", "c", "d"],
        &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")],
    )?;
    // pull each instance vertex toward a different template vertex
    let costs = CostMatrix::from_integers(&[
        vec![0, 4, 9],
        vec![7, 0, 5],
        vec![9, 3, 0],
        vec![2, 8, 6],
    ]);

    let exact = solve(&h, &ord, &g, &costs)?;
    for u in g.vertices() {
        println!("{} -> {}", g.name(u), h.name(exact.map[u.idx()]));
    }
    println!("min-cut cost: {}", exact.cost);

    let brute = minhom_bruteforce(&g, &h, &costs, None)?;
    println!("brute-force cost: {}", brute.cost);
    assert_eq!(exact.cost, brute.cost);
    println!("solver and oracle agree");
    Ok(())
}
