//! Exponential-time ground truth: enumeration of reflexive digraphs up
//! to isomorphism, brute-force MinHOM, exact maximum independent set,
//! and the exhaustive dichotomy verification.

use num_rational::BigRational;
use rayon::prelude::*;
use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::{Digraph, UndirectedGraph, VertexId};
use crate::order::find_min_max_bruteforce;
use crate::recognition::{satisfies_conditions, ObstructionCatalog};
use crate::solver::{CostMatrix, Homomorphism};

/// Default cap on brute-force map evaluations.
pub const DEFAULT_MAP_BUDGET: u64 = 100_000_000;
/// Largest vertex count for independent-set instances.
pub const DEFAULT_MIS_BUDGET: usize = 20;
/// Largest vertex count for template enumeration.
pub const MAX_ENUM_N: usize = 5;

/// Adjacency matrix of `h` packed row-major into a u64 (n <= 8), with
/// bit (i, j) at position i*n + j counted from the most significant
/// end, so numeric order equals lexicographic order on the bit string.
fn matrix_bits(h: &Digraph) -> u64 {
    let n = h.n();
    assert!(n * n <= 64);
    let mut bits = 0u64;
    for (u, v) in h.arcs() {
        bits |= 1 << (n * n - 1 - (u.idx() * n + v.idx()));
    }
    bits
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    fn rec(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k == items.len() {
            out.push(items.clone());
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            rec(items, k + 1, out);
            items.swap(k, i);
        }
    }
    rec(&mut items, 0, &mut out);
    out.sort();
    out
}

fn relabel_bits(bits: u64, n: usize, perm: &[usize]) -> u64 {
    // vertex i of the original becomes perm[i] in the relabeled graph
    let mut out = 0u64;
    for i in 0..n {
        for j in 0..n {
            if bits >> (n * n - 1 - (i * n + j)) & 1 == 1 {
                out |= 1 << (n * n - 1 - (perm[i] * n + perm[j]));
            }
        }
    }
    out
}

/// Lexicographically minimal adjacency-matrix encoding over all vertex
/// permutations.
pub fn canonical_key(h: &Digraph) -> u64 {
    let n = h.n();
    let bits = matrix_bits(h);
    permutations(n)
        .iter()
        .map(|p| relabel_bits(bits, n, p))
        .min()
        .unwrap_or(0)
}

fn digraph_from_bits(bits: u64, n: usize) -> Digraph {
    let mut arcs = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && bits >> (n * n - 1 - (i * n + j)) & 1 == 1 {
                arcs.push((i, j));
            }
        }
    }
    let reflexive = (0..n).all(|i| bits >> (n * n - 1 - (i * n + i)) & 1 == 1);
    Digraph::from_index_arcs(n, &arcs, reflexive)
}

/// The canonical representative of the isomorphism class of `h`, with
/// vertices renamed 0..n-1.
pub fn canonical_form(h: &Digraph) -> Digraph {
    digraph_from_bits(canonical_key(h), h.n())
}

/// True when `a` and `b` are isomorphic digraphs.
pub fn isomorphic(a: &Digraph, b: &Digraph) -> bool {
    a.n() == b.n() && canonical_key(a) == canonical_key(b)
}

/// Enumerates reflexive digraphs on n vertices up to isomorphism, in
/// increasing canonical-key order (schedule-independent).
pub fn enumerate_reflexive_digraphs(n: usize, parallel: bool) -> Result<Vec<Digraph>> {
    if n == 0 || n > MAX_ENUM_N {
        return Err(Error::SizeOutOfRange(n, MAX_ENUM_N));
    }
    let slots: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let diag: u64 = (0..n).fold(0, |acc, i| acc | 1 << (n * n - 1 - (i * n + i)));
    let perms = permutations(n);
    let total = 1u64 << slots.len();

    let canon_of_mask = |mask: u64| -> u64 {
        let mut bits = diag;
        for (k, &(i, j)) in slots.iter().enumerate() {
            if mask >> k & 1 == 1 {
                bits |= 1 << (n * n - 1 - (i * n + j));
            }
        }
        perms.iter().map(|p| relabel_bits(bits, n, p)).min().unwrap()
    };

    let keys: HashSet<u64> = if parallel {
        (0..total)
            .into_par_iter()
            .map(canon_of_mask)
            .collect::<HashSet<u64>>()
    } else {
        (0..total).map(canon_of_mask).collect()
    };
    let mut sorted: Vec<u64> = keys.into_iter().collect();
    sorted.sort();
    Ok(sorted.into_iter().map(|bits| digraph_from_bits(bits, n)).collect())
}

/// Exhaustive exact MinHOM via depth-first search with arc-consistency
/// against assigned neighbours and a remaining-cost lower bound. H must
/// be reflexive so constant maps guarantee feasibility.
pub fn minhom_bruteforce(
    g: &Digraph,
    h: &Digraph,
    costs: &CostMatrix,
    budget: Option<u64>,
) -> Result<Homomorphism> {
    h.require_reflexive()?;
    costs.check_dimensions(g, h)?;
    let budget = budget.unwrap_or(DEFAULT_MAP_BUDGET);
    let total_maps = (h.n() as u64).checked_pow(g.n() as u32);
    match total_maps {
        Some(t) if t <= budget => {}
        _ => return Err(Error::BudgetExceeded(budget)),
    }

    // initial upper bound: the best constant map
    let mut best_map: Vec<VertexId> = Vec::new();
    let mut best_cost: Option<BigRational> = None;
    for i in h.vertices() {
        let cost: BigRational = g.vertices().map(|u| costs.get(u, i).clone()).sum();
        if best_cost.as_ref().is_none_or(|b| cost < *b) {
            best_cost = Some(cost);
            best_map = vec![i; g.n()];
        }
    }
    let mut best_cost = best_cost.ok_or(Error::NoHomomorphism)?;
    if g.n() == 0 {
        return Ok(Homomorphism { map: best_map, cost: best_cost });
    }

    // cheapest completion per vertex, for the lower bound
    let min_row: Vec<BigRational> = g
        .vertices()
        .map(|u| h.vertices().map(|i| costs.get(u, i).clone()).min().unwrap())
        .collect();
    let mut suffix_min = vec![BigRational::from_integer(0.into()); g.n() + 1];
    for u in (0..g.n()).rev() {
        suffix_min[u] = &suffix_min[u + 1] + &min_row[u];
    }

    let mut assignment: Vec<VertexId> = Vec::with_capacity(g.n());
    dfs(
        g,
        h,
        costs,
        &suffix_min,
        &mut assignment,
        &BigRational::from_integer(0.into()),
        &mut best_cost,
        &mut best_map,
    );
    Ok(Homomorphism { map: best_map, cost: best_cost })
}

#[allow(clippy::too_many_arguments)]
#[allow(clippy::needless_range_loop)] // w is both an index and a vertex id
fn dfs(
    g: &Digraph,
    h: &Digraph,
    costs: &CostMatrix,
    suffix_min: &[BigRational],
    assignment: &mut Vec<VertexId>,
    partial: &BigRational,
    best_cost: &mut BigRational,
    best_map: &mut Vec<VertexId>,
) {
    let u = assignment.len();
    if u == g.n() {
        if partial < best_cost {
            *best_cost = partial.clone();
            *best_map = assignment.clone();
        }
        return;
    }
    if partial + &suffix_min[u] >= *best_cost {
        return;
    }
    let uu = VertexId(u as u32);
    'cand: for i in h.vertices() {
        for w in 0..u {
            let ww = VertexId(w as u32);
            if g.has_arc(uu, ww) && !h.has_arc(i, assignment[w])
                || g.has_arc(ww, uu) && !h.has_arc(assignment[w], i)
            {
                continue 'cand;
            }
        }
        if g.has_arc(uu, uu) && !h.has_arc(i, i) {
            continue;
        }
        assignment.push(i);
        let next = partial + costs.get(uu, i);
        dfs(g, h, costs, suffix_min, assignment, &next, best_cost, best_map);
        assignment.pop();
    }
}

/// Exact maximum independent set size via branch and bound. Looped
/// vertices are never eligible.
pub fn max_independent_set(x: &UndirectedGraph, budget: Option<usize>) -> Result<usize> {
    let cap = budget.unwrap_or(DEFAULT_MIS_BUDGET);
    if x.n() > cap {
        return Err(Error::SizeOutOfRange(x.n(), cap));
    }
    let n = x.n();
    let mut candidates: u64 = 0;
    for v in x.vertices() {
        if !x.has_loop(v) {
            candidates |= 1 << v.idx();
        }
    }
    let neigh: Vec<u64> = x
        .vertices()
        .map(|v| {
            let mut m = 1u64 << v.idx();
            for w in x.vertices() {
                if w != v && x.has_edge(v, w) {
                    m |= 1 << w.idx();
                }
            }
            m
        })
        .collect();
    fn alpha(candidates: u64, neigh: &[u64], n: usize) -> usize {
        if candidates == 0 {
            return 0;
        }
        let v = candidates.trailing_zeros() as usize;
        debug_assert!(v < n);
        let with = 1 + alpha(candidates & !neigh[v], neigh, n);
        let without = alpha(candidates & !(1 << v), neigh, n);
        with.max(without)
    }
    Ok(alpha(candidates, &neigh, n))
}

/// Per-class verdict pair from the theorem verification.
#[derive(Clone, Debug)]
pub struct ClassVerdict {
    pub digraph: Digraph,
    pub has_min_max: bool,
    pub passes_conditions: bool,
}

/// Outcome of the exhaustive dichotomy check on all classes up to n
/// vertices.
#[derive(Clone, Debug)]
pub struct TheoremReport {
    pub max_n: usize,
    pub classes_checked: usize,
    pub mismatches: Vec<ClassVerdict>,
}

impl TheoremReport {
    pub fn summary(&self) -> String {
        let mut s = format!(
            "checked {} isomorphism classes on <= {} vertices: {} mismatch(es)\n",
            self.classes_checked,
            self.max_n,
            self.mismatches.len()
        );
        for m in &self.mismatches {
            s.push_str(&format!(
                "  MISMATCH {} : brute-force Min-Max = {}, conditions = {}\n",
                m.digraph, m.has_min_max, m.passes_conditions
            ));
        }
        s
    }
}

/// Compares, for every reflexive digraph class on <= max_n vertices,
/// brute-force Min-Max existence against the three structural
/// conditions (S proper interval, B proper interval bigraph, catalog
/// freeness). An empty mismatch list verifies the dichotomy boundary at
/// this scale.
pub fn verify_theorem(
    max_n: usize,
    catalog: &ObstructionCatalog,
    parallel: bool,
) -> Result<TheoremReport> {
    if max_n == 0 || max_n > MAX_ENUM_N {
        return Err(Error::SizeOutOfRange(max_n, MAX_ENUM_N));
    }
    let mut classes = Vec::new();
    for n in 1..=max_n {
        classes.extend(enumerate_reflexive_digraphs(n, parallel)?);
    }
    let check = |h: &Digraph| -> Result<Option<ClassVerdict>> {
        let has_min_max = find_min_max_bruteforce(h, None)?.is_some();
        let passes = satisfies_conditions(h, catalog)?;
        Ok((has_min_max != passes).then(|| ClassVerdict {
            digraph: h.clone(),
            has_min_max,
            passes_conditions: passes,
        }))
    };
    let results: Result<Vec<Option<ClassVerdict>>> = if parallel {
        classes.par_iter().map(check).collect()
    } else {
        classes.iter().map(check).collect()
    };
    let mismatches: Vec<ClassVerdict> = results?.into_iter().flatten().collect();
    Ok(TheoremReport {
        max_n,
        classes_checked: classes.len(),
        mismatches,
    })
}
