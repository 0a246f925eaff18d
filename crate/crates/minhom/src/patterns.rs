//! The fixed forbidden patterns: Wegner's obstructions for proper
//! interval graphs (cycles C_k with k >= 4, claw, net, tent) and the
//! Hell–Huang obstructions for proper interval bigraphs (even cycles
//! C_2k with k >= 3, biclaw, binet, bitent).
//!
//! The three named bipartite patterns are frozen from an exhaustive
//! enumeration of minimal bipartite graphs without a bipartite Min-Max
//! ordering on <= 8 vertices; a test in `recognition` re-derives them.

use std::fmt;

use crate::graph::{BipartiteGraph, UndirectedGraph};

/// Reflexive cycle c0-c1-...-c(k-1)-c0, k >= 3.
pub fn reflexive_cycle(k: usize) -> UndirectedGraph {
    assert!(k >= 3);
    let names: Vec<String> = (0..k).map(|i| format!("c{i}")).collect();
    let mut edges = Vec::new();
    let owned: Vec<(String, String)> = (0..k)
        .map(|i| (format!("c{i}"), format!("c{}", (i + 1) % k)))
        .collect();
    for (a, b) in &owned {
        edges.push((a.as_str(), b.as_str()));
    }
    UndirectedGraph::from_edges(names, &edges, true).unwrap()
}

/// K_{1,3} with loops: center x adjacent to leaves y1, y2, y3.
pub fn claw() -> UndirectedGraph {
    UndirectedGraph::from_edges(
        ["x", "y1", "y2", "y3"],
        &[("x", "y1"), ("x", "y2"), ("x", "y3")],
        true,
    )
    .unwrap()
}

/// Triangle x1x2x3 with one pendant yi per corner, with loops.
pub fn net() -> UndirectedGraph {
    UndirectedGraph::from_edges(
        ["x1", "x2", "x3", "y1", "y2", "y3"],
        &[
            ("x1", "x2"),
            ("x2", "x3"),
            ("x1", "x3"),
            ("x1", "y1"),
            ("x2", "y2"),
            ("x3", "y3"),
        ],
        true,
    )
    .unwrap()
}

/// Triangle x1x2x3 plus y12, y23, y31 where y_ij is adjacent to x_i and
/// x_j only (the 3-sun), with loops.
pub fn tent() -> UndirectedGraph {
    UndirectedGraph::from_edges(
        ["x1", "x2", "x3", "y12", "y23", "y31"],
        &[
            ("x1", "x2"),
            ("x2", "x3"),
            ("x1", "x3"),
            ("x1", "y12"),
            ("x2", "y12"),
            ("x2", "y23"),
            ("x3", "y23"),
            ("x3", "y31"),
            ("x1", "y31"),
        ],
        true,
    )
    .unwrap()
}

/// Even cycle on 2k vertices (k whites, k blacks): edges wi-bi and
/// w(i+1)-bi cyclically. Requires k >= 2.
pub fn bipartite_cycle(k: usize) -> BipartiteGraph {
    assert!(k >= 2);
    let whites: Vec<String> = (0..k).map(|i| format!("w{i}")).collect();
    let blacks: Vec<String> = (0..k).map(|i| format!("b{i}")).collect();
    let owned: Vec<(String, String)> = (0..k)
        .flat_map(|i| {
            [
                (format!("w{i}"), format!("b{i}")),
                (format!("w{}", (i + 1) % k), format!("b{i}")),
            ]
        })
        .collect();
    let edges: Vec<(&str, &str)> = owned.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    BipartiteGraph::from_edges(whites, blacks, &edges).unwrap()
}

/// Central black vertex b0 adjacent to whites w0, w1, w2, each of which
/// carries its own pendant black (a tree on 3 + 4 vertices).
pub fn biclaw() -> BipartiteGraph {
    BipartiteGraph::from_edges(
        ["w0", "w1", "w2"],
        ["b0", "b1", "b2", "b3"],
        &[
            ("w0", "b0"),
            ("w0", "b1"),
            ("w1", "b0"),
            ("w1", "b2"),
            ("w2", "b0"),
            ("w2", "b3"),
        ],
    )
    .unwrap()
}

/// A 4-cycle w0-b0-w1-b1 with pendants b2 on w0, b3 on w1, and pendant
/// white w2 on b0 (3 + 4 vertices, 7 edges).
pub fn binet() -> BipartiteGraph {
    BipartiteGraph::from_edges(
        ["w0", "w1", "w2"],
        ["b0", "b1", "b2", "b3"],
        &[
            ("w0", "b0"),
            ("w0", "b1"),
            ("w0", "b2"),
            ("w1", "b0"),
            ("w1", "b1"),
            ("w1", "b3"),
            ("w2", "b0"),
        ],
    )
    .unwrap()
}

/// Two 4-cycles sharing the edge w0-b0, plus a pendant black on w0
/// (3 + 4 vertices, 8 edges).
pub fn bitent() -> BipartiteGraph {
    BipartiteGraph::from_edges(
        ["w0", "w1", "w2"],
        ["b0", "b1", "b2", "b3"],
        &[
            ("w0", "b0"),
            ("w0", "b1"),
            ("w0", "b2"),
            ("w0", "b3"),
            ("w1", "b0"),
            ("w1", "b1"),
            ("w2", "b0"),
            ("w2", "b2"),
        ],
    )
    .unwrap()
}

/// Names for the Wegner pattern family.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum SPatternKind {
    Cycle(usize),
    Claw,
    Net,
    Tent,
}

impl SPatternKind {
    pub fn build(self) -> UndirectedGraph {
        match self {
            SPatternKind::Cycle(k) => reflexive_cycle(k),
            SPatternKind::Claw => claw(),
            SPatternKind::Net => net(),
            SPatternKind::Tent => tent(),
        }
    }
}

impl fmt::Display for SPatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SPatternKind::Cycle(k) => write!(f, "C{k}"),
            SPatternKind::Claw => write!(f, "claw"),
            SPatternKind::Net => write!(f, "net"),
            SPatternKind::Tent => write!(f, "tent"),
        }
    }
}

/// Names for the Hell–Huang pattern family. `Cycle(k)` is the even
/// cycle on 2k vertices.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum BPatternKind {
    Cycle(usize),
    Biclaw,
    Binet,
    Bitent,
}

impl BPatternKind {
    pub fn build(self) -> BipartiteGraph {
        match self {
            BPatternKind::Cycle(k) => bipartite_cycle(k),
            BPatternKind::Biclaw => biclaw(),
            BPatternKind::Binet => binet(),
            BPatternKind::Bitent => bitent(),
        }
    }
}

impl fmt::Display for BPatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BPatternKind::Cycle(k) => write!(f, "C{}", 2 * k),
            BPatternKind::Biclaw => write!(f, "biclaw"),
            BPatternKind::Binet => write!(f, "binet"),
            BPatternKind::Bitent => write!(f, "bitent"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::{find_bipartite_min_max, find_min_max_bruteforce};

    #[test]
    fn pattern_sizes() {
        assert_eq!(claw().edge_count(), 3 + 4);
        assert_eq!(net().edge_count(), 6 + 6);
        assert_eq!(tent().edge_count(), 9 + 6);
        assert_eq!(reflexive_cycle(5).edge_count(), 5 + 5);
        assert_eq!(biclaw().edge_count(), 6);
        assert_eq!(binet().edge_count(), 7);
        assert_eq!(bitent().edge_count(), 8);
        assert_eq!(bipartite_cycle(3).edge_count(), 6);
    }

    #[test]
    fn patterns_have_no_min_max_ordering() {
        for kind in [
            SPatternKind::Cycle(4),
            SPatternKind::Cycle(5),
            SPatternKind::Claw,
            SPatternKind::Net,
            SPatternKind::Tent,
        ] {
            let h = kind.build().as_symmetric_digraph();
            assert!(
                find_min_max_bruteforce(&h, None).unwrap().is_none(),
                "{kind} unexpectedly admits a Min-Max ordering"
            );
        }
        for kind in [
            BPatternKind::Cycle(3),
            BPatternKind::Cycle(4),
            BPatternKind::Biclaw,
            BPatternKind::Binet,
            BPatternKind::Bitent,
        ] {
            let b = kind.build();
            assert!(
                find_bipartite_min_max(&b, None).unwrap().is_none(),
                "{kind} unexpectedly admits a bipartite Min-Max ordering"
            );
        }
    }

    #[test]
    fn c4_and_triangle_are_fine() {
        let tri = reflexive_cycle(3).as_symmetric_digraph();
        assert!(find_min_max_bruteforce(&tri, None).unwrap().is_some());
        let c4 = bipartite_cycle(2);
        assert!(find_bipartite_min_max(&c4, None).unwrap().is_some());
    }
}
