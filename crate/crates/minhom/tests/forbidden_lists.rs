//! Cross-validation of the quoted forbidden-subgraph lists: re-derive
//! the minimal reflexive graphs without Min-Max orderings (<= 6
//! vertices) and the minimal bipartite graphs without bipartite Min-Max
//! orderings (<= 8 vertices) by exhaustive search, and match them
//! against the built-in patterns.

use minhom::graph::{BipartiteGraph, UndirectedGraph, VertexId};
use minhom::oracle::isomorphic;
use minhom::order::{find_bipartite_min_max, find_min_max_bruteforce};
use minhom::patterns::{BPatternKind, SPatternKind};

fn undirected_from_mask(n: usize, mask: u64) -> UndirectedGraph {
    let mut g = UndirectedGraph::new((0..n).map(|i| i.to_string())).unwrap();
    g.add_all_loops();
    let mut bit = 0;
    for a in 0..n {
        for b in a + 1..n {
            if mask >> bit & 1 == 1 {
                g.add_edge(VertexId(a as u32), VertexId(b as u32)).unwrap();
            }
            bit += 1;
        }
    }
    g
}

fn has_mmo(g: &UndirectedGraph) -> bool {
    find_min_max_bruteforce(&g.as_symmetric_digraph(), None)
        .unwrap()
        .is_some()
}

#[test]
fn wegner_list_is_complete_up_to_six_vertices() {
    let mut minimal: Vec<UndirectedGraph> = Vec::new();
    for n in 1..=6usize {
        let bits = n * (n - 1) / 2;
        'mask: for mask in 0u64..(1 << bits) {
            let g = undirected_from_mask(n, mask);
            if has_mmo(&g) {
                continue;
            }
            for drop in g.vertices() {
                let keep: Vec<VertexId> = g.vertices().filter(|&v| v != drop).collect();
                if !has_mmo(&g.induced_subgraph(&keep).unwrap()) {
                    continue 'mask; // a smaller obstruction hides inside
                }
            }
            let d = g.as_symmetric_digraph();
            if !minimal.iter().any(|m| isomorphic(&m.as_symmetric_digraph(), &d)) {
                minimal.push(g);
            }
        }
    }
    let expected = [
        SPatternKind::Cycle(4),
        SPatternKind::Cycle(5),
        SPatternKind::Cycle(6),
        SPatternKind::Claw,
        SPatternKind::Net,
        SPatternKind::Tent,
    ];
    assert_eq!(minimal.len(), expected.len());
    for kind in expected {
        let p = kind.build().as_symmetric_digraph();
        assert!(
            minimal.iter().any(|m| isomorphic(&m.as_symmetric_digraph(), &p)),
            "{kind} not re-derived"
        );
    }
}

fn bipartite_from_mask(wn: usize, bn: usize, mask: u64) -> BipartiteGraph {
    let mut g = BipartiteGraph::new(
        (0..wn).map(|i| format!("w{i}")),
        (0..bn).map(|i| format!("b{i}")),
    )
    .unwrap();
    for w in 0..wn {
        for b in 0..bn {
            if mask >> (w * bn + b) & 1 == 1 {
                g.add_edge(VertexId(w as u32), VertexId(b as u32)).unwrap();
            }
        }
    }
    g
}

fn has_bip_mmo(b: &BipartiteGraph) -> bool {
    find_bipartite_min_max(b, None).unwrap().is_some()
}

fn bip_isomorphic(a: &BipartiteGraph, b: &BipartiteGraph) -> bool {
    fn same_sides(a: &BipartiteGraph, b: &BipartiteGraph) -> bool {
        if a.white_count() != b.white_count()
            || a.black_count() != b.black_count()
            || a.edge_count() != b.edge_count()
        {
            return false;
        }
        let mut wp: Vec<usize> = (0..a.white_count()).collect();
        permute(&mut wp, 0, &mut |wp| {
            let mut bp: Vec<usize> = (0..a.black_count()).collect();
            permute(&mut bp, 0, &mut |bp| {
                a.edges().all(|(w, k)| {
                    b.has_edge(
                        VertexId(wp[w.idx()] as u32),
                        VertexId(bp[k.idx()] as u32),
                    )
                })
            })
        })
    }
    fn permute(items: &mut [usize], k: usize, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
        if k == items.len() {
            return f(items);
        }
        for i in k..items.len() {
            items.swap(k, i);
            if permute(items, k + 1, f) {
                items.swap(k, i);
                return true;
            }
            items.swap(k, i);
        }
        false
    }
    same_sides(a, b) || same_sides(&a.swap_sides(), b)
}

#[test]
fn hell_huang_list_is_complete_up_to_eight_vertices() {
    let mut minimal: Vec<BipartiteGraph> = Vec::new();
    for wn in 1..=4usize {
        for bn in wn..=(8 - wn) {
            'mask: for mask in 0u64..(1 << (wn * bn)) {
                let g = bipartite_from_mask(wn, bn, mask);
                if has_bip_mmo(&g) {
                    continue;
                }
                for dw in g.whites() {
                    let keep: Vec<VertexId> = g.whites().filter(|&v| v != dw).collect();
                    let blacks: Vec<VertexId> = g.blacks().collect();
                    if !has_bip_mmo(&g.induced_subgraph(&keep, &blacks).unwrap()) {
                        continue 'mask;
                    }
                }
                for db in g.blacks() {
                    let whites: Vec<VertexId> = g.whites().collect();
                    let keep: Vec<VertexId> = g.blacks().filter(|&v| v != db).collect();
                    if !has_bip_mmo(&g.induced_subgraph(&whites, &keep).unwrap()) {
                        continue 'mask;
                    }
                }
                if !minimal.iter().any(|m| bip_isomorphic(m, &g)) {
                    minimal.push(g);
                }
            }
        }
    }
    let expected = [
        BPatternKind::Cycle(3), // C6
        BPatternKind::Cycle(4), // C8
        BPatternKind::Biclaw,
        BPatternKind::Binet,
        BPatternKind::Bitent,
    ];
    assert_eq!(minimal.len(), expected.len());
    for kind in expected {
        let p = kind.build();
        assert!(
            minimal.iter().any(|m| bip_isomorphic(m, &p)),
            "{kind} not re-derived"
        );
    }
}
