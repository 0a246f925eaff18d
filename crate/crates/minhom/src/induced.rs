//! Induced-subgraph embedding search (pattern into host, exact adjacency
//! and non-adjacency), used to certify classifications with concrete
//! obstruction copies.

use crate::graph::{BipartiteGraph, Digraph, UndirectedGraph, VertexId};

/// An injective map pattern-vertex -> host-vertex witnessing an induced copy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    /// image[i] is the host vertex assigned to pattern vertex i.
    pub image: Vec<VertexId>,
}

impl Embedding {
    pub fn named(&self, names: &[String]) -> Vec<String> {
        self.image.iter().map(|v| names[v.idx()].clone()).collect()
    }
}

/// Finds an induced copy of `pattern` in `host` as undirected graphs.
/// Loops must match exactly; for two reflexive graphs this reduces to
/// matching the loop-free parts.
pub fn find_induced_undirected(
    pattern: &UndirectedGraph,
    host: &UndirectedGraph,
) -> Option<Embedding> {
    let k = pattern.n();
    if k > host.n() {
        return None;
    }
    let mut image: Vec<VertexId> = Vec::with_capacity(k);
    let mut used = vec![false; host.n()];
    if extend_undirected(pattern, host, &mut image, &mut used) {
        Some(Embedding { image })
    } else {
        None
    }
}

fn extend_undirected(
    pattern: &UndirectedGraph,
    host: &UndirectedGraph,
    image: &mut Vec<VertexId>,
    used: &mut [bool],
) -> bool {
    let i = image.len();
    if i == pattern.n() {
        return true;
    }
    let p = VertexId(i as u32);
    'cand: for h in host.vertices() {
        if used[h.idx()] || host.degree(h) < pattern.degree(p) {
            continue;
        }
        if host.has_loop(h) != pattern.has_loop(p) {
            continue;
        }
        for (j, &hj) in image.iter().enumerate() {
            if pattern.has_edge(p, VertexId(j as u32)) != host.has_edge(h, hj) {
                continue 'cand;
            }
        }
        used[h.idx()] = true;
        image.push(h);
        if extend_undirected(pattern, host, image, used) {
            return true;
        }
        image.pop();
        used[h.idx()] = false;
    }
    false
}

/// Finds an induced copy of `pattern` in `host` as digraphs (arcs and
/// loops must match exactly).
pub fn find_induced_digraph(pattern: &Digraph, host: &Digraph) -> Option<Embedding> {
    let k = pattern.n();
    if k > host.n() {
        return None;
    }
    let mut image: Vec<VertexId> = Vec::with_capacity(k);
    let mut used = vec![false; host.n()];
    if extend_digraph(pattern, host, &mut image, &mut used) {
        Some(Embedding { image })
    } else {
        None
    }
}

fn extend_digraph(pattern: &Digraph, host: &Digraph, image: &mut Vec<VertexId>, used: &mut [bool]) -> bool {
    let i = image.len();
    if i == pattern.n() {
        return true;
    }
    let p = VertexId(i as u32);
    'cand: for h in host.vertices() {
        if used[h.idx()] {
            continue;
        }
        if pattern.has_arc(p, p) != host.has_arc(h, h) {
            continue;
        }
        for (j, &hj) in image.iter().enumerate() {
            let q = VertexId(j as u32);
            if pattern.has_arc(p, q) != host.has_arc(h, hj)
                || pattern.has_arc(q, p) != host.has_arc(hj, h)
            {
                continue 'cand;
            }
        }
        used[h.idx()] = true;
        image.push(h);
        if extend_digraph(pattern, host, image, used) {
            return true;
        }
        image.pop();
        used[h.idx()] = false;
    }
    false
}

/// An induced copy of a bipartite pattern in a bipartite host, mapping
/// whites to whites and blacks to blacks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteEmbedding {
    pub white_image: Vec<VertexId>,
    pub black_image: Vec<VertexId>,
}

/// Side-respecting search; callers wanting both orientations also try
/// `host.swap_sides()` (or equivalently a swapped pattern).
pub fn find_induced_bipartite(
    pattern: &BipartiteGraph,
    host: &BipartiteGraph,
) -> Option<BipartiteEmbedding> {
    if pattern.white_count() > host.white_count() || pattern.black_count() > host.black_count() {
        return None;
    }
    let mut white_image: Vec<VertexId> = Vec::with_capacity(pattern.white_count());
    let mut black_image: Vec<VertexId> = Vec::with_capacity(pattern.black_count());
    let mut used_w = vec![false; host.white_count()];
    let mut used_b = vec![false; host.black_count()];
    if extend_bipartite(
        pattern,
        host,
        &mut white_image,
        &mut black_image,
        &mut used_w,
        &mut used_b,
    ) {
        Some(BipartiteEmbedding {
            white_image,
            black_image,
        })
    } else {
        None
    }
}

fn extend_bipartite(
    pattern: &BipartiteGraph,
    host: &BipartiteGraph,
    white_image: &mut Vec<VertexId>,
    black_image: &mut Vec<VertexId>,
    used_w: &mut [bool],
    used_b: &mut [bool],
) -> bool {
    // Assign all whites first, then blacks; blacks are fully checked
    // against the complete white image, so the match is exact.
    if white_image.len() < pattern.white_count() {
        let p = VertexId(white_image.len() as u32);
        for h in host.whites() {
            if used_w[h.idx()] || host.white_degree(h) < pattern.white_degree(p) {
                continue;
            }
            used_w[h.idx()] = true;
            white_image.push(h);
            if extend_bipartite(pattern, host, white_image, black_image, used_w, used_b) {
                return true;
            }
            white_image.pop();
            used_w[h.idx()] = false;
        }
        return false;
    }
    if black_image.len() == pattern.black_count() {
        return true;
    }
    let p = VertexId(black_image.len() as u32);
    'cand: for h in host.blacks() {
        if used_b[h.idx()] {
            continue;
        }
        for (j, &wj) in white_image.iter().enumerate() {
            if pattern.has_edge(VertexId(j as u32), p) != host.has_edge(wj, h) {
                continue 'cand;
            }
        }
        used_b[h.idx()] = true;
        black_image.push(h);
        if extend_bipartite(pattern, host, white_image, black_image, used_w, used_b) {
            return true;
        }
        black_image.pop();
        used_b[h.idx()] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_reflexive_triangle_in_larger_graph() {
        let pattern = UndirectedGraph::from_edges(
            ["x", "y", "z"],
            &[("x", "y"), ("y", "z"), ("x", "z")],
            true,
        )
        .unwrap();
        let host = UndirectedGraph::from_edges(
            ["a", "b", "c", "d"],
            &[("a", "b"), ("b", "c"), ("a", "c"), ("c", "d")],
            true,
        )
        .unwrap();
        let emb = find_induced_undirected(&pattern, &host).unwrap();
        let mut names = emb.named(host.names());
        names.sort();
        assert_eq!(names, ["a", "b", "c"]);
    }

    #[test]
    fn induced_means_non_edges_matter() {
        // path x-y-z (no xz edge) does not embed induced into a triangle
        let pattern =
            UndirectedGraph::from_edges(["x", "y", "z"], &[("x", "y"), ("y", "z")], true).unwrap();
        let host = UndirectedGraph::from_edges(
            ["a", "b", "c"],
            &[("a", "b"), ("b", "c"), ("a", "c")],
            true,
        )
        .unwrap();
        assert!(find_induced_undirected(&pattern, &host).is_none());
    }

    #[test]
    fn digraph_embedding_respects_direction() {
        let pattern = Digraph::reflexive(["x", "y"], &[("x", "y")]).unwrap();
        let host = Digraph::reflexive(["a", "b"], &[("b", "a")]).unwrap();
        let emb = find_induced_digraph(&pattern, &host).unwrap();
        assert_eq!(emb.image, vec![VertexId(1), VertexId(0)]);
    }

    #[test]
    fn bipartite_embedding_respects_sides() {
        // pattern: single edge w-b; host: edge only from white 1 to black 0
        let pattern = BipartiteGraph::from_edges(["w"], ["b"], &[("w", "b")]).unwrap();
        let host =
            BipartiteGraph::from_edges(["w0", "w1"], ["b0"], &[("w1", "b0")]).unwrap();
        let emb = find_induced_bipartite(&pattern, &host).unwrap();
        assert_eq!(emb.white_image, vec![VertexId(1)]);
        assert_eq!(emb.black_image, vec![VertexId(0)]);
    }
}
