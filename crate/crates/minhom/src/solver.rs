//! Exact polynomial-time MinHOM solver for templates with a Min-Max
//! ordering. The ordering turns the arc relation of H into a monotone
//! band of row intervals; minimizing over homomorphisms then reduces to
//! a minimum s-t cut over threshold booleans "image position >= i".

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::{Digraph, VertexId};
use crate::order::Ordering;

/// Rational costs c_i(u) indexed by instance vertex u and template
/// vertex i.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CostMatrix {
    values: Vec<Vec<BigRational>>, // [u.idx()][i.idx()]
}

impl CostMatrix {
    pub fn new(g_n: usize, h_n: usize) -> Self {
        CostMatrix {
            values: vec![vec![BigRational::zero(); h_n]; g_n],
        }
    }

    pub fn from_rows(values: Vec<Vec<BigRational>>) -> Self {
        CostMatrix { values }
    }

    pub fn from_integers(rows: &[Vec<i64>]) -> Self {
        CostMatrix {
            values: rows
                .iter()
                .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
                .collect(),
        }
    }

    pub fn instance_size(&self) -> usize {
        self.values.len()
    }

    pub fn template_size(&self) -> usize {
        self.values.first().map_or(0, Vec::len)
    }

    pub fn get(&self, u: VertexId, i: VertexId) -> &BigRational {
        &self.values[u.idx()][i.idx()]
    }

    pub fn set(&mut self, u: VertexId, i: VertexId, c: BigRational) {
        self.values[u.idx()][i.idx()] = c;
    }

    pub fn check_dimensions(&self, g: &Digraph, h: &Digraph) -> Result<()> {
        if self.instance_size() != g.n()
            || self.values.iter().any(|row| row.len() != h.n())
        {
            return Err(Error::DimensionMismatch(format!(
                "costs are {}x{}, expected {}x{}",
                self.instance_size(),
                self.template_size(),
                g.n(),
                h.n()
            )));
        }
        Ok(())
    }
}

/// A homomorphism f: V(G) -> V(H) with its exact total cost.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Homomorphism {
    pub map: Vec<VertexId>, // map[u.idx()] = f(u)
    pub cost: BigRational,
}

/// Checks arc preservation and computes the exact cost of an arbitrary
/// total map (the cost is reported even when the map is invalid).
pub fn verify_homomorphism(
    g: &Digraph,
    h: &Digraph,
    map: &[VertexId],
    costs: &CostMatrix,
) -> Result<(bool, BigRational)> {
    if map.len() != g.n() {
        return Err(Error::DimensionMismatch(format!(
            "map covers {} of {} instance vertices",
            map.len(),
            g.n()
        )));
    }
    for &i in map {
        if i.idx() >= h.n() {
            return Err(Error::UnknownVertex(format!("#{}", i.0)));
        }
    }
    costs.check_dimensions(g, h)?;
    let valid = g
        .arcs()
        .all(|(u, v)| h.has_arc(map[u.idx()], map[v.idx()]));
    let cost = g
        .vertices()
        .map(|u| costs.get(u, map[u.idx()]).clone())
        .sum();
    Ok((valid, cost))
}

/// Row intervals of the arc relation of H under a Min-Max ordering:
/// position a maps to exactly the target positions [lo(a), hi(a)], with
/// lo and hi nondecreasing and lo(a) <= a <= hi(a). Positions 0-based.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BandProfile {
    pub lo: Vec<usize>,
    pub hi: Vec<usize>,
}

impl BandProfile {
    /// psi(b) = least source position whose row reaches target b; the
    /// constraint "target <= hi(source)" becomes "source >= psi(target)".
    pub fn psi(&self, b: usize) -> usize {
        self.hi.iter().position(|&h| h >= b).unwrap()
    }
}

/// Reads the rows of the arc relation under `ord` and verifies the band
/// structure. Succeeds exactly when `ord` is a Min-Max ordering of the
/// reflexive digraph H.
pub fn band_profile(h: &Digraph, ord: &Ordering) -> Result<BandProfile> {
    h.require_reflexive()?;
    if ord.len() != h.n() {
        return Err(Error::NotAPermutation);
    }
    let p = h.n();
    let mut lo = vec![0usize; p];
    let mut hi = vec![0usize; p];
    for a in 0..p {
        let va = ord.at(a);
        let row: Vec<usize> = (0..p).filter(|&b| h.has_arc(va, ord.at(b))).collect();
        let (first, last) = (row[0], *row.last().unwrap()); // nonempty: loop at a
        if row.len() != last - first + 1 {
            return Err(Error::BandViolation(format!(
                "row of position {a} is not an interval"
            )));
        }
        if !(first <= a && a <= last) {
            return Err(Error::BandViolation(format!(
                "row of position {a} misses the diagonal"
            )));
        }
        lo[a] = first;
        hi[a] = last;
    }
    for a in 1..p {
        if lo[a] < lo[a - 1] || hi[a] < hi[a - 1] {
            return Err(Error::BandViolation(format!(
                "row bounds decrease at position {a}"
            )));
        }
    }
    Ok(BandProfile { lo, hi })
}

/// Arc capacity: exact nonnegative integer or the symbolic infinity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Capacity {
    Finite(BigInt),
    Infinite,
}

#[derive(Clone, Debug)]
struct FlowArc {
    to: usize,
    cap: Capacity,
    flow: BigInt,
    rev: usize, // index of the reverse arc in nodes[to]
}

/// A directed s-t flow network with exact integer capacities.
pub struct CutNetwork {
    adj: Vec<Vec<FlowArc>>,
    pub source: usize,
    pub sink: usize,
    /// Constant added to the cut value to recover the objective.
    pub offset: BigInt,
}

impl CutNetwork {
    pub fn new(nodes: usize, source: usize, sink: usize) -> Self {
        CutNetwork {
            adj: vec![Vec::new(); nodes],
            source,
            sink,
            offset: BigInt::zero(),
        }
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    pub fn add_arc(&mut self, from: usize, to: usize, cap: Capacity) {
        if let Capacity::Finite(ref c) = cap {
            assert!(!c.is_negative(), "negative capacity");
            if c.is_zero() {
                return;
            }
        }
        let rev_from = self.adj[to].len();
        let rev_to = self.adj[from].len();
        self.adj[from].push(FlowArc {
            to,
            cap,
            flow: BigInt::zero(),
            rev: rev_from,
        });
        self.adj[to].push(FlowArc {
            to: from,
            cap: Capacity::Finite(BigInt::zero()),
            flow: BigInt::zero(),
            rev: rev_to,
        });
    }

    fn residual(&self, from: usize, k: usize) -> Option<BigInt> {
        let arc = &self.adj[from][k];
        match &arc.cap {
            Capacity::Infinite => None, // unbounded
            Capacity::Finite(c) => Some(c - &arc.flow),
        }
    }
}

/// Edmonds–Karp maximum flow. Returns the exact max-flow value together
/// with the source side of a minimum cut. Augmenting-path bottlenecks
/// are always finite because every source arc must be finite; a network
/// with an unbounded s-t path is rejected.
pub fn max_flow(net: &mut CutNetwork) -> Result<(BigInt, Vec<bool>)> {
    if net.adj[net.source]
        .iter()
        .any(|a| matches!(a.cap, Capacity::Infinite))
    {
        return Err(Error::Precondition(
            "source arcs must have finite capacity".into(),
        ));
    }
    let n = net.adj.len();
    let mut value = BigInt::zero();
    loop {
        // BFS for a shortest augmenting path
        let mut pred: Vec<Option<(usize, usize)>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[net.source] = true;
        let mut queue = std::collections::VecDeque::from([net.source]);
        while let Some(x) = queue.pop_front() {
            if x == net.sink {
                break;
            }
            for k in 0..net.adj[x].len() {
                let to = net.adj[x][k].to;
                if seen[to] {
                    continue;
                }
                let open = match net.residual(x, k) {
                    None => true,
                    Some(r) => r.is_positive(),
                };
                if open {
                    seen[to] = true;
                    pred[to] = Some((x, k));
                    queue.push_back(to);
                }
            }
        }
        if !seen[net.sink] {
            return Ok((value, seen));
        }
        // bottleneck
        let mut bottleneck: Option<BigInt> = None;
        let mut x = net.sink;
        while x != net.source {
            let (p, k) = pred[x].unwrap();
            if let Some(r) = net.residual(p, k) {
                bottleneck = Some(match bottleneck {
                    Some(b) if b <= r => b,
                    _ => r,
                });
            }
            x = p;
        }
        let aug = bottleneck.ok_or_else(|| {
            Error::Internal("augmenting path with unbounded capacity".into())
        })?;
        // augment
        let mut x = net.sink;
        while x != net.source {
            let (p, k) = pred[x].unwrap();
            let rev = net.adj[p][k].rev;
            net.adj[p][k].flow += &aug;
            net.adj[x][rev].flow -= &aug;
            x = p;
        }
        value += aug;
    }
}

/// Solves MinHOM(G -> H) exactly for a Min-Max-ordered reflexive H.
///
/// Encoding: booleans y_{u,i} = [position of f(u) >= i] for i in
/// 1..p-1, kept monotone by infinite chain arcs; unary costs telescoped
/// as c(u, 0) + sum of differences, with negative differences folded
/// into the constant offset; each instance arc uv contributes the
/// implications y_{u,a} -> y_{v,lo(a)} and y_{v,b} -> y_{u,psi(b)} as
/// infinite arcs, which together carve out exactly the band relation.
pub fn solve(
    h: &Digraph,
    ord: &Ordering,
    g: &Digraph,
    costs: &CostMatrix,
) -> Result<Homomorphism> {
    let band = band_profile(h, ord)?;
    costs.check_dimensions(g, h)?;
    let p = h.n();
    let gn = g.n();

    // Clear denominators so all capacities are integers.
    let mut denom = BigInt::one();
    for u in g.vertices() {
        for i in h.vertices() {
            denom = lcm(&denom, costs.get(u, i).denom());
        }
    }
    // scaled(u, a) = cost of placing u at ordering position a
    let scaled = |u: VertexId, a: usize| -> BigInt {
        let c = costs.get(u, ord.at(a));
        c.numer() * (&denom / c.denom())
    };

    if p == 1 {
        // single template vertex: the only map is constant
        let map = vec![ord.at(0); gn];
        let (valid, cost) = verify_homomorphism(g, h, &map, costs)?;
        debug_assert!(valid);
        return Ok(Homomorphism { map, cost });
    }

    // node ids: 0 = source, 1 = sink, then (u, i) for i in 1..p
    let node = |u: usize, i: usize| 2 + u * (p - 1) + (i - 1);
    let mut net = CutNetwork::new(2 + gn * (p - 1), 0, 1);

    for u in g.vertices() {
        net.offset += scaled(u, 0);
        for i in 1..p {
            let d = scaled(u, i) - scaled(u, i - 1);
            if d.is_negative() {
                // d * y = d + (-d) * (1 - y): charge -d when y = 0
                net.offset += &d;
                net.add_arc(net.source, node(u.idx(), i), Capacity::Finite(-d));
            } else {
                net.add_arc(node(u.idx(), i), net.sink, Capacity::Finite(d));
            }
        }
        for i in 1..p - 1 {
            // monotone: y_{u,i+1} -> y_{u,i}
            net.add_arc(node(u.idx(), i + 1), node(u.idx(), i), Capacity::Infinite);
        }
    }
    for (u, v) in g.arcs() {
        if u == v {
            continue; // loops are absorbed by reflexivity
        }
        for a in 1..p {
            if band.lo[a] >= 1 {
                net.add_arc(
                    node(u.idx(), a),
                    node(v.idx(), band.lo[a]),
                    Capacity::Infinite,
                );
            }
        }
        for b in 1..p {
            let t = band.psi(b);
            if t >= 1 {
                net.add_arc(node(v.idx(), b), node(u.idx(), t), Capacity::Infinite);
            }
        }
    }

    let (value, source_side) = max_flow(&mut net)?;

    // recover the assignment: position of f(u) = number of thresholds on
    // the source side (monotone by the chain arcs)
    let mut map = Vec::with_capacity(gn);
    for u in g.vertices() {
        let pos = (1..p).filter(|&i| source_side[node(u.idx(), i)]).count();
        map.push(ord.at(pos));
    }
    let (valid, cost) = verify_homomorphism(g, h, &map, costs)?;
    if !valid {
        return Err(Error::Internal(
            "min-cut assignment is not a homomorphism".into(),
        ));
    }
    let cut_cost = BigRational::new(value + &net.offset, denom);
    if cut_cost != cost {
        return Err(Error::Internal(format!(
            "cut value {cut_cost} disagrees with re-summed cost {cost}"
        )));
    }
    Ok(Homomorphism { map, cost })
}

fn lcm(a: &BigInt, b: &BigInt) -> BigInt {
    let g = gcd(a.clone(), b.clone());
    a / &g * b
}

fn gcd(mut a: BigInt, mut b: BigInt) -> BigInt {
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a.abs()
}
