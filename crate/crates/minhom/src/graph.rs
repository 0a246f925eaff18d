//! Digraph, undirected graph and bipartite graph value types, plus the
//! derived-graph constructions (symmetric subgraph, underlying graph,
//! bipartite double, converse, induced subgraph).
//!
//! All types are immutable after construction and safe to share across
//! threads. Vertex names are strings; internally every graph assigns dense
//! indices in declaration order and stores adjacency as bitset rows.

use std::collections::HashMap;
use std::fmt;

use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// Index of a vertex inside a particular graph, stable under serialization
/// round-trips (declaration order is preserved).
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct VertexId(pub u32);

impl VertexId {
    #[inline]
    pub fn idx(self) -> usize {
        self.0 as usize
    }
}

fn build_index(names: &[String]) -> Result<HashMap<String, u32>> {
    let mut index = HashMap::with_capacity(names.len());
    for (i, name) in names.iter().enumerate() {
        if index.insert(name.clone(), i as u32).is_some() {
            return Err(Error::DuplicateVertex(name.clone()));
        }
    }
    Ok(index)
}

/// A digraph with loops allowed. Arc uv is stored in row u.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Digraph {
    names: Vec<String>,
    index: HashMap<String, u32>,
    rows: Vec<BitSet>,
}

impl Digraph {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let index = build_index(&names)?;
        let n = names.len();
        Ok(Digraph {
            names,
            index,
            rows: vec![BitSet::new(n); n],
        })
    }

    /// Builds a digraph from vertex names and named arcs.
    pub fn from_arcs<S: Into<String>>(
        names: impl IntoIterator<Item = S>,
        arcs: &[(&str, &str)],
    ) -> Result<Self> {
        let mut g = Self::new(names)?;
        for &(u, v) in arcs {
            let u = g.vertex(u)?;
            let v = g.vertex(v)?;
            g.add_arc(u, v)?;
        }
        Ok(g)
    }

    /// Same as `from_arcs` but adds a loop on every vertex first.
    pub fn reflexive<S: Into<String>>(
        names: impl IntoIterator<Item = S>,
        arcs: &[(&str, &str)],
    ) -> Result<Self> {
        let mut g = Self::new(names)?;
        g.add_all_loops();
        for &(u, v) in arcs {
            let u = g.vertex(u)?;
            let v = g.vertex(v)?;
            g.add_arc(u, v)?;
        }
        Ok(g)
    }

    /// Builds an n-vertex digraph with names "0".."n-1" from index arcs.
    pub fn from_index_arcs(n: usize, arcs: &[(usize, usize)], reflexive: bool) -> Self {
        let mut g = Self::new((0..n).map(|i| i.to_string())).unwrap();
        if reflexive {
            g.add_all_loops();
        }
        for &(u, v) in arcs {
            g.add_arc(VertexId(u as u32), VertexId(v as u32)).unwrap();
        }
        g
    }

    pub fn add_arc(&mut self, u: VertexId, v: VertexId) -> Result<()> {
        if !self.rows[u.idx()].insert(v.idx()) {
            return Err(Error::DuplicateArc(
                self.names[u.idx()].clone(),
                self.names[v.idx()].clone(),
            ));
        }
        Ok(())
    }

    pub fn add_all_loops(&mut self) {
        for i in 0..self.rows.len() {
            self.rows[i].insert(i);
        }
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.n() as u32).map(VertexId)
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v.idx()]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex(&self, name: &str) -> Result<VertexId> {
        self.index
            .get(name)
            .map(|&i| VertexId(i))
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    #[inline]
    pub fn has_arc(&self, u: VertexId, v: VertexId) -> bool {
        self.rows[u.idx()].contains(v.idx())
    }

    pub fn out_row(&self, u: VertexId) -> &BitSet {
        &self.rows[u.idx()]
    }

    pub fn arcs(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.vertices().flat_map(move |u| {
            self.rows[u.idx()]
                .iter()
                .map(move |j| (u, VertexId(j as u32)))
        })
    }

    pub fn arc_count(&self) -> usize {
        self.rows.iter().map(|r| r.count()).sum()
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.n()).all(|i| self.rows[i].contains(i))
    }

    /// Errors with the first loop-less vertex when not reflexive.
    pub fn require_reflexive(&self) -> Result<()> {
        for i in 0..self.n() {
            if !self.rows[i].contains(i) {
                return Err(Error::NotReflexive(self.names[i].clone()));
            }
        }
        Ok(())
    }

    /// S(H): edge uv present iff both arcs uv and vu are. Loops survive.
    pub fn symmetric_subgraph(&self) -> UndirectedGraph {
        let mut g = UndirectedGraph::new(self.names.clone()).unwrap();
        for u in self.vertices() {
            for j in self.rows[u.idx()].iter() {
                let v = VertexId(j as u32);
                if v >= u && self.has_arc(v, u) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        g
    }

    /// U(H): edge uv present iff at least one of the arcs uv, vu is.
    pub fn underlying_graph(&self) -> UndirectedGraph {
        let mut g = UndirectedGraph::new(self.names.clone()).unwrap();
        for u in self.vertices() {
            for j in self.rows[u.idx()].iter() {
                let v = VertexId(j as u32);
                if v >= u || !self.has_arc(v, u) {
                    g.add_edge(u.min(v), u.max(v)).unwrap();
                }
            }
        }
        g
    }

    /// B(H): white copy v', black copy v'', edge v'w'' per arc vw.
    pub fn bipartite_double(&self) -> BipartiteGraph {
        let mut g = BipartiteGraph::new(self.names.clone(), self.names.clone()).unwrap();
        for (u, v) in self.arcs() {
            g.add_edge(u, v).unwrap();
        }
        g
    }

    /// The digraph with every arc reversed.
    pub fn converse(&self) -> Digraph {
        let mut g = Digraph::new(self.names.clone()).unwrap();
        for (u, v) in self.arcs() {
            g.add_arc(v, u).unwrap();
        }
        g
    }

    /// Subgraph induced on the given vertices, which keep their order.
    pub fn induced_subgraph(&self, keep: &[VertexId]) -> Result<Digraph> {
        for &v in keep {
            if v.idx() >= self.n() {
                return Err(Error::UnknownVertex(format!("#{}", v.0)));
            }
        }
        let mut g = Digraph::new(keep.iter().map(|&v| self.names[v.idx()].clone()))?;
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate() {
                if self.has_arc(u, v) {
                    g.add_arc(VertexId(i as u32), VertexId(j as u32))?;
                }
            }
        }
        Ok(g)
    }
}

impl fmt::Display for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arcs: Vec<String> = self
            .arcs()
            .map(|(u, v)| format!("{}->{}", self.name(u), self.name(v)))
            .collect();
        write!(f, "[{}; {}]", self.names.join(" "), arcs.join(" "))
    }
}

/// An undirected graph with loops allowed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UndirectedGraph {
    names: Vec<String>,
    index: HashMap<String, u32>,
    rows: Vec<BitSet>,
}

impl UndirectedGraph {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let index = build_index(&names)?;
        let n = names.len();
        Ok(UndirectedGraph {
            names,
            index,
            rows: vec![BitSet::new(n); n],
        })
    }

    pub fn from_edges<S: Into<String>>(
        names: impl IntoIterator<Item = S>,
        edges: &[(&str, &str)],
        reflexive: bool,
    ) -> Result<Self> {
        let mut g = Self::new(names)?;
        if reflexive {
            g.add_all_loops();
        }
        for &(u, v) in edges {
            let u = g.vertex(u)?;
            let v = g.vertex(v)?;
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<()> {
        if !self.rows[u.idx()].insert(v.idx()) {
            return Err(Error::DuplicateEdge(
                self.names[u.idx()].clone(),
                self.names[v.idx()].clone(),
            ));
        }
        self.rows[v.idx()].insert(u.idx());
        Ok(())
    }

    pub fn add_all_loops(&mut self) {
        for i in 0..self.rows.len() {
            self.rows[i].insert(i);
        }
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.n() as u32).map(VertexId)
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v.idx()]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex(&self, name: &str) -> Result<VertexId> {
        self.index
            .get(name)
            .map(|&i| VertexId(i))
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    #[inline]
    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.rows[u.idx()].contains(v.idx())
    }

    pub fn has_loop(&self, u: VertexId) -> bool {
        self.rows[u.idx()].contains(u.idx())
    }

    pub fn degree(&self, u: VertexId) -> usize {
        self.rows[u.idx()].count()
    }

    /// Edges with u <= v, so loops appear once.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.vertices().flat_map(move |u| {
            self.rows[u.idx()]
                .iter()
                .filter(move |&j| j >= u.idx())
                .map(move |j| (u, VertexId(j as u32)))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.edges().count()
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.n()).all(|i| self.rows[i].contains(i))
    }

    pub fn require_reflexive(&self) -> Result<()> {
        for i in 0..self.n() {
            if !self.rows[i].contains(i) {
                return Err(Error::NotReflexive(self.names[i].clone()));
            }
        }
        Ok(())
    }

    /// View as a symmetric digraph (each edge becomes a digon).
    pub fn as_symmetric_digraph(&self) -> Digraph {
        let mut g = Digraph::new(self.names.clone()).unwrap();
        for u in self.vertices() {
            for j in self.rows[u.idx()].iter() {
                g.add_arc(u, VertexId(j as u32)).unwrap();
            }
        }
        g
    }

    pub fn induced_subgraph(&self, keep: &[VertexId]) -> Result<UndirectedGraph> {
        let mut g = UndirectedGraph::new(keep.iter().map(|&v| self.names[v.idx()].clone()))?;
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate() {
                if j >= i && self.has_edge(u, v) {
                    g.add_edge(VertexId(i as u32), VertexId(j as u32))?;
                }
            }
        }
        Ok(g)
    }
}

/// A bipartite graph with a fixed bipartition into white and black vertices.
/// When built from a digraph the two sides are copies of the same id space.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BipartiteGraph {
    white_names: Vec<String>,
    black_names: Vec<String>,
    white_index: HashMap<String, u32>,
    black_index: HashMap<String, u32>,
    rows: Vec<BitSet>, // rows[w].contains(b) ⇔ edge w'b''
}

impl BipartiteGraph {
    pub fn new<S: Into<String>>(
        white: impl IntoIterator<Item = S>,
        black: impl IntoIterator<Item = S>,
    ) -> Result<Self> {
        let white_names: Vec<String> = white.into_iter().map(Into::into).collect();
        let black_names: Vec<String> = black.into_iter().map(Into::into).collect();
        let white_index = build_index(&white_names)?;
        let black_index = build_index(&black_names)?;
        let bn = black_names.len();
        let wn = white_names.len();
        Ok(BipartiteGraph {
            white_names,
            black_names,
            white_index,
            black_index,
            rows: vec![BitSet::new(bn); wn],
        })
    }

    pub fn from_edges<S: Into<String>>(
        white: impl IntoIterator<Item = S>,
        black: impl IntoIterator<Item = S>,
        edges: &[(&str, &str)],
    ) -> Result<Self> {
        let mut g = Self::new(white, black)?;
        for &(w, b) in edges {
            let w = g.white_vertex(w)?;
            let b = g.black_vertex(b)?;
            g.add_edge(w, b)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, w: VertexId, b: VertexId) -> Result<()> {
        if !self.rows[w.idx()].insert(b.idx()) {
            return Err(Error::DuplicateEdge(
                self.white_names[w.idx()].clone(),
                self.black_names[b.idx()].clone(),
            ));
        }
        Ok(())
    }

    pub fn white_count(&self) -> usize {
        self.white_names.len()
    }

    pub fn black_count(&self) -> usize {
        self.black_names.len()
    }

    pub fn whites(&self) -> impl Iterator<Item = VertexId> {
        (0..self.white_count() as u32).map(VertexId)
    }

    pub fn blacks(&self) -> impl Iterator<Item = VertexId> {
        (0..self.black_count() as u32).map(VertexId)
    }

    pub fn white_name(&self, w: VertexId) -> &str {
        &self.white_names[w.idx()]
    }

    pub fn black_name(&self, b: VertexId) -> &str {
        &self.black_names[b.idx()]
    }

    pub fn white_vertex(&self, name: &str) -> Result<VertexId> {
        self.white_index
            .get(name)
            .map(|&i| VertexId(i))
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn black_vertex(&self, name: &str) -> Result<VertexId> {
        self.black_index
            .get(name)
            .map(|&i| VertexId(i))
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    #[inline]
    pub fn has_edge(&self, w: VertexId, b: VertexId) -> bool {
        self.rows[w.idx()].contains(b.idx())
    }

    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.whites().flat_map(move |w| {
            self.rows[w.idx()]
                .iter()
                .map(move |j| (w, VertexId(j as u32)))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count()).sum()
    }

    pub fn white_degree(&self, w: VertexId) -> usize {
        self.rows[w.idx()].count()
    }

    pub fn black_degree(&self, b: VertexId) -> usize {
        self.whites().filter(|&w| self.has_edge(w, b)).count()
    }

    /// The same graph with the white and black sides exchanged.
    pub fn swap_sides(&self) -> BipartiteGraph {
        let mut g =
            BipartiteGraph::new(self.black_names.clone(), self.white_names.clone()).unwrap();
        for (w, b) in self.edges() {
            g.add_edge(b, w).unwrap();
        }
        g
    }

    pub fn induced_subgraph(
        &self,
        white_keep: &[VertexId],
        black_keep: &[VertexId],
    ) -> Result<BipartiteGraph> {
        let mut g = BipartiteGraph::new(
            white_keep
                .iter()
                .map(|&w| self.white_names[w.idx()].clone()),
            black_keep
                .iter()
                .map(|&b| self.black_names[b.idx()].clone()),
        )?;
        for (i, &w) in white_keep.iter().enumerate() {
            for (j, &b) in black_keep.iter().enumerate() {
                if self.has_edge(w, b) {
                    g.add_edge(VertexId(i as u32), VertexId(j as u32))?;
                }
            }
        }
        Ok(g)
    }
}
