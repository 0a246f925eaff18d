//! Min-Max orderings: verification, brute-force construction, and the
//! exchange procedure that turns a bipartite Min-Max ordering of B(H)
//! into a Min-Max ordering of H (or a stuck report naming blocking
//! witnesses).

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Digraph, VertexId};

/// Soft cap on template sizes for the factorial searches.
pub const DEFAULT_TEMPLATE_LIMIT: usize = 10;

/// A linear ordering of the vertices of one graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Ordering {
    seq: Vec<VertexId>,
    pos: Vec<usize>, // pos[v.idx()] = position of v in seq
}

impl Ordering {
    pub fn new(n: usize, seq: Vec<VertexId>) -> Result<Self> {
        if seq.len() != n {
            return Err(Error::NotAPermutation);
        }
        let mut pos = vec![usize::MAX; n];
        for (k, v) in seq.iter().enumerate() {
            if v.idx() >= n || pos[v.idx()] != usize::MAX {
                return Err(Error::NotAPermutation);
            }
            pos[v.idx()] = k;
        }
        Ok(Ordering { seq, pos })
    }

    pub fn identity(n: usize) -> Self {
        Ordering::new(n, (0..n as u32).map(VertexId).collect()).unwrap()
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn seq(&self) -> &[VertexId] {
        &self.seq
    }

    pub fn pos(&self, v: VertexId) -> usize {
        self.pos[v.idx()]
    }

    pub fn at(&self, k: usize) -> VertexId {
        self.seq[k]
    }

    pub fn reversed(&self) -> Ordering {
        let seq: Vec<VertexId> = self.seq.iter().rev().copied().collect();
        Ordering::new(seq.len(), seq).unwrap()
    }

    pub fn named(&self, h: &Digraph) -> Vec<String> {
        self.seq.iter().map(|&v| h.name(v).to_string()).collect()
    }
}

/// Separate orders for the white and black sides of a bipartite graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BipartiteOrdering {
    pub white: Ordering,
    pub black: Ordering,
}

impl BipartiteOrdering {
    pub fn new(b: &BipartiteGraph, white: Vec<VertexId>, black: Vec<VertexId>) -> Result<Self> {
        Ok(BipartiteOrdering {
            white: Ordering::new(b.white_count(), white)?,
            black: Ordering::new(b.black_count(), black)?,
        })
    }
}

fn check_permutation(h: &Digraph, ord: &Ordering) -> Result<()> {
    if ord.len() != h.n() {
        return Err(Error::NotAPermutation);
    }
    Ok(())
}

/// The general Min-Max test: for positions i<j and s<r, arcs
/// ord[i]ord[r] and ord[j]ord[s] force arcs ord[i]ord[s] and
/// ord[j]ord[r].
pub fn is_min_max(h: &Digraph, ord: &Ordering) -> Result<bool> {
    check_permutation(h, ord)?;
    let n = h.n();
    for i in 0..n {
        for j in i + 1..n {
            let (vi, vj) = (ord.at(i), ord.at(j));
            for s in 0..n {
                for r in s + 1..n {
                    let (vs, vr) = (ord.at(s), ord.at(r));
                    if h.has_arc(vi, vr)
                        && h.has_arc(vj, vs)
                        && !(h.has_arc(vi, vs) && h.has_arc(vj, vr))
                    {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// The triple shortcut, equivalent to the general test when H is
/// reflexive: an arc spanning positions i..k forces both arcs through
/// any j in between, in the same direction.
pub fn is_min_max_shortcut(h: &Digraph, ord: &Ordering) -> Result<bool> {
    check_permutation(h, ord)?;
    h.require_reflexive()?;
    let n = h.n();
    for i in 0..n {
        for k in i + 2..n {
            let (vi, vk) = (ord.at(i), ord.at(k));
            let fwd = h.has_arc(vi, vk);
            let bwd = h.has_arc(vk, vi);
            if !fwd && !bwd {
                continue;
            }
            for j in i + 1..k {
                let vj = ord.at(j);
                if fwd && !(h.has_arc(vi, vj) && h.has_arc(vj, vk)) {
                    return Ok(false);
                }
                if bwd && !(h.has_arc(vk, vj) && h.has_arc(vj, vi)) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// The bipartite Min-Max test: whites i<j, blacks s<r, edges ir and js
/// force edges is and jr.
pub fn is_bipartite_min_max(b: &BipartiteGraph, bord: &BipartiteOrdering) -> Result<bool> {
    if bord.white.len() != b.white_count() || bord.black.len() != b.black_count() {
        return Err(Error::NotAPermutation);
    }
    let (wn, bn) = (b.white_count(), b.black_count());
    for i in 0..wn {
        for j in i + 1..wn {
            let (wi, wj) = (bord.white.at(i), bord.white.at(j));
            for s in 0..bn {
                for r in s + 1..bn {
                    let (bs, br) = (bord.black.at(s), bord.black.at(r));
                    if b.has_edge(wi, br)
                        && b.has_edge(wj, bs)
                        && !(b.has_edge(wi, bs) && b.has_edge(wj, br))
                    {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

fn check_limit(n: usize, limit: Option<usize>) -> Result<()> {
    let cap = limit.unwrap_or(DEFAULT_TEMPLATE_LIMIT);
    if n > cap {
        return Err(Error::TemplateTooLarge { n, limit: cap });
    }
    Ok(())
}

/// Exhaustive Min-Max ordering search with prefix pruning. Returns the
/// first ordering in lexicographic vertex-index order, or None.
pub fn find_min_max_bruteforce(h: &Digraph, limit: Option<usize>) -> Result<Option<Ordering>> {
    check_limit(h.n(), limit)?;
    let n = h.n();
    let reflexive = h.is_reflexive();
    let mut prefix: Vec<VertexId> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    if search_min_max(h, reflexive, &mut prefix, &mut used) {
        Ok(Some(Ordering::new(n, prefix)?))
    } else {
        Ok(None)
    }
}

/// Checks only the constraints introduced by the vertex just appended
/// at position k. Both variants are hereditary, so a clean prefix stays
/// clean when extended.
#[allow(clippy::needless_range_loop)] // position indices are the domain objects here
fn prefix_ok(h: &Digraph, reflexive: bool, prefix: &[VertexId]) -> bool {
    let k = prefix.len() - 1;
    let vk = prefix[k];
    if reflexive {
        // shortcut triples (i, j, k)
        for i in 0..k {
            let vi = prefix[i];
            let fwd = h.has_arc(vi, vk);
            let bwd = h.has_arc(vk, vi);
            if !fwd && !bwd {
                continue;
            }
            for j in i + 1..k {
                let vj = prefix[j];
                if fwd && !(h.has_arc(vi, vj) && h.has_arc(vj, vk)) {
                    return false;
                }
                if bwd && !(h.has_arc(vk, vj) && h.has_arc(vj, vi)) {
                    return false;
                }
            }
        }
        true
    } else {
        // general quadruples; the new vertex sits at the top position so
        // it can only appear as the larger source j or larger target r
        let m = prefix.len();
        for i in 0..m {
            for j in i + 1..m {
                let (vi, vj) = (prefix[i], prefix[j]);
                for s in 0..m {
                    for r in s + 1..m {
                        if j != k && r != k {
                            continue;
                        }
                        let (vs, vr) = (prefix[s], prefix[r]);
                        if h.has_arc(vi, vr)
                            && h.has_arc(vj, vs)
                            && !(h.has_arc(vi, vs) && h.has_arc(vj, vr))
                        {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

fn search_min_max(h: &Digraph, reflexive: bool, prefix: &mut Vec<VertexId>, used: &mut [bool]) -> bool {
    if prefix.len() == h.n() {
        return true;
    }
    for v in h.vertices() {
        if used[v.idx()] {
            continue;
        }
        prefix.push(v);
        used[v.idx()] = true;
        if prefix_ok(h, reflexive, prefix) && search_min_max(h, reflexive, prefix, used) {
            return true;
        }
        prefix.pop();
        used[v.idx()] = false;
    }
    false
}

/// Exhaustive bipartite Min-Max ordering search, interleaving the two
/// sides so violations prune early.
pub fn find_bipartite_min_max(
    b: &BipartiteGraph,
    limit: Option<usize>,
) -> Result<Option<BipartiteOrdering>> {
    check_limit(b.white_count().max(b.black_count()), limit)?;
    let mut white: Vec<VertexId> = Vec::with_capacity(b.white_count());
    let mut black: Vec<VertexId> = Vec::with_capacity(b.black_count());
    let mut used_w = vec![false; b.white_count()];
    let mut used_b = vec![false; b.black_count()];
    if search_bipartite(b, &mut white, &mut black, &mut used_w, &mut used_b) {
        Ok(Some(BipartiteOrdering::new(b, white, black)?))
    } else {
        Ok(None)
    }
}

#[allow(clippy::needless_range_loop)]
fn bip_prefix_ok(b: &BipartiteGraph, white: &[VertexId], black: &[VertexId], new_white: bool) -> bool {
    // check quadruples involving the vertex just placed (last of its side)
    if new_white {
        let j = white.len() - 1;
        let wj = white[j];
        for i in 0..j {
            let wi = white[i];
            for s in 0..black.len() {
                for r in s + 1..black.len() {
                    let (bs, br) = (black[s], black[r]);
                    if b.has_edge(wi, br)
                        && b.has_edge(wj, bs)
                        && !(b.has_edge(wi, bs) && b.has_edge(wj, br))
                    {
                        return false;
                    }
                }
            }
        }
    } else {
        let r = black.len() - 1;
        let br = black[r];
        for s in 0..r {
            let bs = black[s];
            for i in 0..white.len() {
                for j in i + 1..white.len() {
                    let (wi, wj) = (white[i], white[j]);
                    if b.has_edge(wi, br)
                        && b.has_edge(wj, bs)
                        && !(b.has_edge(wi, bs) && b.has_edge(wj, br))
                    {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn search_bipartite(
    b: &BipartiteGraph,
    white: &mut Vec<VertexId>,
    black: &mut Vec<VertexId>,
    used_w: &mut [bool],
    used_b: &mut [bool],
) -> bool {
    let place_white = if white.len() == b.white_count() {
        if black.len() == b.black_count() {
            return true;
        }
        false
    } else if black.len() == b.black_count() {
        true
    } else {
        white.len() <= black.len()
    };
    if place_white {
        for w in b.whites() {
            if used_w[w.idx()] {
                continue;
            }
            white.push(w);
            used_w[w.idx()] = true;
            if bip_prefix_ok(b, white, black, true)
                && search_bipartite(b, white, black, used_w, used_b)
            {
                return true;
            }
            white.pop();
            used_w[w.idx()] = false;
        }
    } else {
        for v in b.blacks() {
            if used_b[v.idx()] {
                continue;
            }
            black.push(v);
            used_b[v.idx()] = true;
            if bip_prefix_ok(b, white, black, false)
                && search_bipartite(b, white, black, used_w, used_b)
            {
                return true;
            }
            black.pop();
            used_b[v.idx()] = false;
        }
    }
    false
}

/// Collects every bipartite Min-Max ordering of `b`, in lexicographic
/// (white sequence, black sequence) order. Intended for small templates
/// only (full (wn!)(bn!) scan).
pub fn enumerate_bipartite_min_max(
    b: &BipartiteGraph,
    limit: Option<usize>,
) -> Result<Vec<BipartiteOrdering>> {
    check_limit(b.white_count().max(b.black_count()), limit)?;
    let mut out = Vec::new();
    let mut whites: Vec<VertexId> = b.whites().collect();
    permute(&mut whites, 0, &mut |wp| {
        let mut blacks: Vec<VertexId> = b.blacks().collect();
        permute(&mut blacks, 0, &mut |bp| {
            let bord = BipartiteOrdering::new(b, wp.to_vec(), bp.to_vec()).unwrap();
            if is_bipartite_min_max(b, &bord).unwrap() {
                out.push(bord);
            }
        });
    });
    out.sort_by(|a, b| (a.white.seq(), a.black.seq()).cmp(&(b.white.seq(), b.black.seq())));
    Ok(out)
}

/// Calls `f` on every permutation of `items` (order not specified;
/// results are sorted by callers needing determinism).
fn permute<T: Copy>(items: &mut [T], k: usize, f: &mut impl FnMut(&[T])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, f);
        items.swap(k, i);
    }
}

/// Which of the two stuck-case edge patterns the witnesses realize.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum StuckCase {
    Case1,
    Case2,
}

/// Evidence that the exchange procedure halted on an improper pair.
///
/// The pair (v, u) satisfies v' < u' and u'' < v''. With e(x,y) the
/// B(H)-edge x'y'' (equivalently the arc xy), witnesses satisfy:
/// Case 1: e(s,v), e(v,t) present, e(s,u), e(u,t) absent;
/// Case 2: e(s,v), e(u,t) present, e(s,u), e(v,t) absent;
/// mirrored variants exchange the roles of u and v.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StuckReport {
    pub pair: (VertexId, VertexId), // (v, u)
    pub s: VertexId,
    pub t: VertexId,
    pub case: StuckCase,
    pub mirrored: bool,
}

/// Result of the exchange procedure.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ExchangeOutcome {
    /// A Min-Max ordering of H plus the number of swaps performed.
    Ordered { ordering: Ordering, swaps: usize },
    Stuck(StuckReport),
}

/// Repairs a bipartite Min-Max ordering of B(H) into a proper one by
/// transposing the two members of an improper pair on one side, when no
/// blocking vertex forbids it, until the orders agree (then they induce
/// a Min-Max ordering of H) or no pair can be exchanged.
///
/// A swap is only committed if the result is still a bipartite Min-Max
/// ordering; candidate swaps whose blocking condition holds vacuously
/// but which would break the property are skipped rather than treated
/// as a failure (the unblocked-implies-safe claim does not hold for
/// every improper pair, only for some pair when one exists).
pub fn exchange_construct(h: &Digraph, bord: &BipartiteOrdering) -> Result<ExchangeOutcome> {
    h.require_reflexive()?;
    let b = h.bipartite_double();
    if !is_bipartite_min_max(&b, bord)? {
        return Err(Error::Precondition(
            "starting ordering is not a bipartite Min-Max ordering of B(H)".into(),
        ));
    }
    let n = h.n();
    let mut white: Vec<VertexId> = bord.white.seq().to_vec();
    let mut black: Vec<VertexId> = bord.black.seq().to_vec();
    let max_swaps = n * (n.saturating_sub(1)) / 2;
    let mut swaps = 0usize;

    loop {
        let improper = improper_pairs(n, &white, &black);
        if improper.is_empty() {
            let ordering = Ordering::new(n, white.clone())?;
            if !is_min_max(h, &ordering)? {
                return Err(Error::Internal(
                    "exchange produced a proper ordering that is not Min-Max".into(),
                ));
            }
            return Ok(ExchangeOutcome::Ordered { ordering, swaps });
        }
        let mut did = false;
        for &(v, u) in &improper {
            // black swap: exchange u'' and v'' unless some s' sees v'' but not u''
            let black_blocked = h.vertices().any(|s| h.has_arc(s, v) && !h.has_arc(s, u));
            if !black_blocked && guarded_swap(h, &white, &mut black, u, v, false) {
                did = true;
                break;
            }
            // white swap: exchange v' and u' unless some t'' is seen by u' but not v'
            let white_blocked = h.vertices().any(|t| h.has_arc(u, t) && !h.has_arc(v, t));
            if !white_blocked && guarded_swap(h, &black, &mut white, v, u, true) {
                did = true;
                break;
            }
        }
        if !did {
            let report = find_stuck_witness(h, &improper).ok_or_else(|| {
                Error::Internal("stuck exchange with no Case 1/Case 2 witness".into())
            })?;
            return Ok(ExchangeOutcome::Stuck(report));
        }
        swaps += 1;
        if swaps > max_swaps {
            return Err(Error::Internal(format!(
                "exchange exceeded the swap bound C(n,2) = {max_swaps}"
            )));
        }
    }
}

/// Improper pairs (v, u) with v before u on the white side and u before
/// v on the black side, in lexicographic position order.
fn improper_pairs(n: usize, white: &[VertexId], black: &[VertexId]) -> Vec<(VertexId, VertexId)> {
    let mut bpos = vec![0usize; n];
    for (k, &x) in black.iter().enumerate() {
        bpos[x.idx()] = k;
    }
    let mut out = Vec::new();
    for vp in 0..n {
        for up in vp + 1..n {
            let (v, u) = (white[vp], white[up]);
            if bpos[u.idx()] < bpos[v.idx()] {
                out.push((v, u));
            }
        }
    }
    out
}

/// Transposes `a` and `b` in `side`, keeping the swap only if the
/// bipartite Min-Max property survives. `side_is_white` says which
/// colour class `side` is.
fn guarded_swap(
    h: &Digraph,
    other_side: &[VertexId],
    side: &mut [VertexId],
    a: VertexId,
    b: VertexId,
    side_is_white: bool,
) -> bool {
    let ai = side.iter().position(|&x| x == a).unwrap();
    let bi = side.iter().position(|&x| x == b).unwrap();
    side.swap(ai, bi);
    let ok = if side_is_white {
        bip_ok_arrays(h, side, other_side)
    } else {
        bip_ok_arrays(h, other_side, side)
    };
    if !ok {
        side.swap(ai, bi);
    }
    ok
}

/// Bipartite Min-Max check for B(H) phrased over arcs of H with the
/// given white and black sequences.
fn bip_ok_arrays(h: &Digraph, white: &[VertexId], black: &[VertexId]) -> bool {
    let n = white.len();
    for i in 0..n {
        for j in i + 1..n {
            let (wi, wj) = (white[i], white[j]);
            for s in 0..n {
                for r in s + 1..n {
                    let (bs, br) = (black[s], black[r]);
                    if h.has_arc(wi, br)
                        && h.has_arc(wj, bs)
                        && !(h.has_arc(wi, bs) && h.has_arc(wj, br))
                    {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Scans improper pairs and witness candidates for the first (s, t)
/// realizing one of the four stuck patterns.
fn find_stuck_witness(h: &Digraph, improper: &[(VertexId, VertexId)]) -> Option<StuckReport> {
    for &(v, u) in improper {
        for s in h.vertices() {
            for t in h.vertices() {
                let patterns = [
                    (StuckCase::Case1, false, (s, v), (v, t), (s, u), (u, t)),
                    (StuckCase::Case2, false, (s, v), (u, t), (s, u), (v, t)),
                    (StuckCase::Case1, true, (s, u), (u, t), (s, v), (v, t)),
                    (StuckCase::Case2, true, (s, u), (v, t), (s, v), (u, t)),
                ];
                for (case, mirrored, e1, e2, f1, f2) in patterns {
                    if h.has_arc(e1.0, e1.1)
                        && h.has_arc(e2.0, e2.1)
                        && !h.has_arc(f1.0, f1.1)
                        && !h.has_arc(f2.0, f2.1)
                    {
                        return Some(StuckReport {
                            pair: (v, u),
                            s,
                            t,
                            case,
                            mirrored,
                        });
                    }
                }
            }
        }
    }
    None
}
