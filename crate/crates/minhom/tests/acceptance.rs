//! Acceptance gate: one pass/fail line per criterion. Run with
//! `cargo test --test acceptance -- --nocapture` to see all lines;
//! any failing criterion fails the test. Set MINHOM_EXTENDED=1 for the
//! extended n = 5 runs of criteria 1 and 6.

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use minhom::graph::{BipartiteGraph, Digraph, UndirectedGraph, VertexId};
use minhom::hardness::{identify_labeled_obstructions, verify_reduction, Class, ThreeColoredGraph};
use minhom::io::serialize_digraph;
use minhom::oracle::{enumerate_reflexive_digraphs, minhom_bruteforce, verify_theorem};
use minhom::order::{
    enumerate_bipartite_min_max, exchange_construct, find_bipartite_min_max,
    find_min_max_bruteforce, is_min_max, ExchangeOutcome,
};
use minhom::patterns;
use minhom::recognition::{
    derive_obstruction_catalog, is_proper_interval, is_proper_interval_bigraph,
    satisfies_conditions, Verdict,
};
use minhom::solver::{band_profile, solve, CostMatrix};

fn extended() -> bool {
    std::env::var("MINHOM_EXTENDED").is_ok_and(|v| v == "1")
}

struct Gate {
    failures: Vec<String>,
}

impl Gate {
    fn report(&mut self, idx: usize, name: &str, ok: bool) {
        let line = format!("criterion {idx} ({name}): {}", if ok { "PASS" } else { "FAIL" });
        println!("{line}");
        // libtest captures println! from passing tests; also write the line
        // straight to the process stderr so it is visible in plain
        // `cargo test` output.
        if let Ok(mut tty) = std::fs::OpenOptions::new().append(true).open("/dev/stderr") {
            use std::io::Write;
            let _ = writeln!(tty, "{line}");
        }
        if !ok {
            self.failures.push(format!("criterion {idx} ({name})"));
        }
    }
}

fn criterion1_theorem_verification() -> bool {
    let max_n = if extended() { 5 } else { 4 };
    let catalog = derive_obstruction_catalog(4, true).unwrap();
    let report = verify_theorem(max_n, &catalog, true).unwrap();
    println!("  {}", report.summary().trim_end());
    report.mismatches.is_empty()
}

fn criterion2_catalog() -> bool {
    let catalog = derive_obstruction_catalog(4, false).unwrap();
    let mut ok = catalog.members.len() == 9 && catalog.converse_class_count == 6;
    let three: Vec<_> = catalog.members.iter().filter(|m| m.digraph.n() == 3).collect();
    let four_classes: std::collections::BTreeSet<usize> = catalog
        .members
        .iter()
        .filter(|m| m.digraph.n() == 4)
        .map(|m| m.converse_class)
        .collect();
    ok &= three.len() == 1 && four_classes.len() == 5;
    for m in &catalog.members {
        let h = &m.digraph;
        ok &= find_min_max_bruteforce(h, None).unwrap().is_none();
        let s = h.symmetric_subgraph();
        ok &= matches!(is_proper_interval(&s, None).unwrap(), Verdict::Yes(_));
        ok &= matches!(
            is_proper_interval_bigraph(&h.bipartite_double(), None).unwrap(),
            Verdict::Yes(_)
        );
        // minimality
        for drop in h.vertices() {
            let keep: Vec<VertexId> = h.vertices().filter(|&v| v != drop).collect();
            let sub = h.induced_subgraph(&keep).unwrap();
            ok &= find_min_max_bruteforce(&sub, None).unwrap().is_some();
        }
    }
    // byte-identical across runs and parallelism settings
    let serialize = |c: &minhom::ObstructionCatalog| -> String {
        c.members
            .iter()
            .map(|m| serialize_digraph("m", &m.digraph))
            .collect()
    };
    let again = derive_obstruction_catalog(4, true).unwrap();
    ok &= serialize(&catalog) == serialize(&again);
    ok
}

fn random_digraph(rng: &mut ChaCha8Rng, n: usize, p: f64, reflexive: bool) -> Digraph {
    let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let mut g = Digraph::new(names).unwrap();
    if reflexive {
        g.add_all_loops();
    }
    for a in 0..n {
        for b in 0..n {
            let (u, v) = (VertexId(a as u32), VertexId(b as u32));
            if !g.has_arc(u, v) && rng.gen_bool(p) {
                g.add_arc(u, v).unwrap();
            }
        }
    }
    g
}

fn criterion3_solver_oracle() -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(1001);
    let mut trials = 0;
    while trials < 500 {
        let hn = rng.gen_range(1..=5);
        let h = random_digraph(&mut rng, hn, 0.4, true);
        let Some(ord) = find_min_max_bruteforce(&h, None).unwrap() else {
            continue; // template must admit a Min-Max ordering
        };
        trials += 1;
        let gn = rng.gen_range(1..=8);
        let g = random_digraph(&mut rng, gn, 0.3, false);
        let rows: Vec<Vec<i64>> = (0..gn)
            .map(|_| (0..hn).map(|_| rng.gen_range(0..=9)).collect())
            .collect();
        let costs = CostMatrix::from_integers(&rows);
        let exact = solve(&h, &ord, &g, &costs).unwrap();
        let brute = minhom_bruteforce(&g, &h, &costs, None).unwrap();
        if exact.cost != brute.cost {
            println!("  mismatch on trial {trials}: {} vs {}", exact.cost, brute.cost);
            return false;
        }
    }
    true
}

fn criterion4_encoding_exactness() -> bool {
    for h in enumerate_reflexive_digraphs(4, true).unwrap() {
        let Some(ord) = find_min_max_bruteforce(&h, None).unwrap() else {
            continue;
        };
        let band = band_profile(&h, &ord).unwrap();
        let p = h.n();
        for a in 0..p {
            for b in 0..p {
                // a threshold pair (a, b) satisfies the implication
                // system iff b >= lo(a) and a >= psi(b); that relation
                // must be exactly the arc relation under the ordering
                let allowed = b >= band.lo[a] && a >= band.psi(b);
                let arc = h.has_arc(ord.at(a), ord.at(b));
                if allowed != arc {
                    println!("  discrepancy at {h} positions ({a},{b})");
                    return false;
                }
            }
        }
    }
    true
}

fn criterion5_gadgets() -> bool {
    let catalog =
        identify_labeled_obstructions(&derive_obstruction_catalog(4, false).unwrap())
            .unwrap()
            .0;
    let mut rng = ChaCha8Rng::seed_from_u64(2002);
    for i in 2..=6 {
        for trial in 0..100 {
            let n = rng.gen_range(1..=8);
            let classes: Vec<Class> = (0..n)
                .map(|_| match rng.gen_range(0..3) {
                    0 => Class::U,
                    1 => Class::V,
                    _ => Class::W,
                })
                .collect();
            let mut x = UndirectedGraph::new((0..n).map(|j| format!("y{j}"))).unwrap();
            for a in 0..n {
                for b in a + 1..n {
                    if classes[a] != classes[b] && rng.gen_bool(0.3) {
                        x.add_edge(VertexId(a as u32), VertexId(b as u32)).unwrap();
                    }
                }
            }
            let x = ThreeColoredGraph::new(x, classes).unwrap();
            let k = rng.gen_range(0..=(n as i64));
            let check = verify_reduction(i, &x, k, &catalog, Some(u64::MAX)).unwrap();
            if !check.ok() {
                println!(
                    "  lemma {i} trial {trial}: alpha {} min cost {} budget {}",
                    check.alpha, check.min_cost, check.budget
                );
                return false;
            }
        }
    }
    true
}

fn criterion6_exchange() -> bool {
    let max_n = if extended() { 5 } else { 4 };
    let catalog = derive_obstruction_catalog(4, false).unwrap();
    for n in 1..=max_n {
        for h in enumerate_reflexive_digraphs(n, true).unwrap() {
            if !satisfies_conditions(&h, &catalog).unwrap() {
                continue;
            }
            let b = h.bipartite_double();
            let bound = n * n.saturating_sub(1) / 2;
            for bord in enumerate_bipartite_min_max(&b, None).unwrap() {
                match exchange_construct(&h, &bord).unwrap() {
                    ExchangeOutcome::Ordered { ordering, swaps } => {
                        if swaps > bound || !is_min_max(&h, &ordering).unwrap() {
                            println!("  bad repair on {h}");
                            return false;
                        }
                    }
                    ExchangeOutcome::Stuck(_) => {
                        println!("  stuck on condition-satisfying {h}");
                        return false;
                    }
                }
            }
        }
    }
    // every catalog member must get stuck with a witness from every start
    for m in &catalog.members {
        let b = m.digraph.bipartite_double();
        for bord in enumerate_bipartite_min_max(&b, None).unwrap() {
            match exchange_construct(&m.digraph, &bord).unwrap() {
                ExchangeOutcome::Stuck(report) => {
                    let h = &m.digraph;
                    let (v, u) = report.pair;
                    let (a, bb) = if report.mirrored { (u, v) } else { (v, u) };
                    let ok = match report.case {
                        minhom::order::StuckCase::Case1 => {
                            h.has_arc(report.s, a)
                                && h.has_arc(a, report.t)
                                && !h.has_arc(report.s, bb)
                                && !h.has_arc(bb, report.t)
                        }
                        minhom::order::StuckCase::Case2 => {
                            h.has_arc(report.s, a)
                                && h.has_arc(bb, report.t)
                                && !h.has_arc(report.s, bb)
                                && !h.has_arc(a, report.t)
                        }
                    };
                    if !ok {
                        println!("  witness pattern violated on {h}");
                        return false;
                    }
                }
                ExchangeOutcome::Ordered { .. } => {
                    println!("  exchange repaired an obstruction {}", m.digraph);
                    return false;
                }
            }
        }
    }
    true
}

fn criterion7_spot_checks() -> bool {
    use minhom::patterns::{BPatternKind, SPatternKind};
    let mut ok = true;
    let expect = |g: UndirectedGraph, kind: SPatternKind| -> bool {
        matches!(is_proper_interval(&g, None).unwrap(), Verdict::No((k, _)) if k == kind)
    };
    ok &= expect(patterns::reflexive_cycle(4), SPatternKind::Cycle(4));
    ok &= expect(patterns::claw(), SPatternKind::Claw);
    ok &= expect(patterns::net(), SPatternKind::Net);
    ok &= expect(patterns::tent(), SPatternKind::Tent);
    for len in 1..=6 {
        let names: Vec<String> = (0..len).map(|i| format!("p{i}")).collect();
        let mut path = UndirectedGraph::new(names).unwrap();
        path.add_all_loops();
        for i in 0..len - 1 {
            path.add_edge(VertexId(i as u32), VertexId(i as u32 + 1))
                .unwrap();
        }
        ok &= matches!(is_proper_interval(&path, None).unwrap(), Verdict::Yes(_));
    }
    ok &= matches!(
        is_proper_interval_bigraph(&patterns::bipartite_cycle(3), None).unwrap(),
        Verdict::No((BPatternKind::Cycle(3), _, _))
    );
    ok &= matches!(
        is_proper_interval_bigraph(&patterns::bipartite_cycle(2), None).unwrap(),
        Verdict::Yes(_)
    );
    ok
}

#[test]
fn acceptance_gate() {
    let mut gate = Gate { failures: Vec::new() };
    gate.report(1, "theorem verification", criterion1_theorem_verification());
    gate.report(2, "obstruction catalog", criterion2_catalog());
    gate.report(3, "solver-oracle equivalence", criterion3_solver_oracle());
    gate.report(4, "encoding exactness", criterion4_encoding_exactness());
    gate.report(5, "gadget correctness", criterion5_gadgets());
    gate.report(6, "exchange procedure", criterion6_exchange());
    gate.report(7, "recognition spot checks", criterion7_spot_checks());
    assert!(gate.failures.is_empty(), "failed: {:?}", gate.failures);
}

// a small sanity anchor outside the gate: the dichotomy verdict agrees
// with the brute-force oracle on a random template sample
#[test]
fn classifier_matches_bruteforce_on_random_templates() {
    let catalog = derive_obstruction_catalog(4, false).unwrap();
    let labeled = identify_labeled_obstructions(&catalog).unwrap().0;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..60 {
        let n = rng.gen_range(1..=5);
        let h = random_digraph(&mut rng, n, 0.4, true);
        let brute = find_min_max_bruteforce(&h, None).unwrap().is_some();
        let verdict = minhom::classify(&h, &labeled, None).unwrap();
        match verdict {
            minhom::DichotomyVerdict::Polynomial(ord) => {
                assert!(brute);
                assert!(is_min_max(&h, &ord).unwrap());
            }
            minhom::DichotomyVerdict::NPComplete(_) => assert!(!brute),
        }
    }
}

// bipartite Min-Max search agrees with full enumeration on small graphs
#[test]
fn bipartite_search_agrees_with_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..40 {
        let wn = rng.gen_range(1..=3);
        let bn = rng.gen_range(1..=3);
        let mut b = BipartiteGraph::new(
            (0..wn).map(|i| format!("w{i}")),
            (0..bn).map(|i| format!("b{i}")),
        )
        .unwrap();
        for w in 0..wn {
            for k in 0..bn {
                if rng.gen_bool(0.5) {
                    b.add_edge(VertexId(w as u32), VertexId(k as u32)).unwrap();
                }
            }
        }
        let found = find_bipartite_min_max(&b, None).unwrap().is_some();
        let all = enumerate_bipartite_min_max(&b, None).unwrap();
        assert_eq!(found, !all.is_empty());
    }
}

// negative and rational costs keep solver and oracle in agreement
#[test]
fn solver_handles_rational_and_negative_costs() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..50 {
        let hn = rng.gen_range(1..=4);
        let h = random_digraph(&mut rng, hn, 0.5, true);
        let Some(ord) = find_min_max_bruteforce(&h, None).unwrap() else {
            continue;
        };
        let gn = rng.gen_range(1..=5);
        let g = random_digraph(&mut rng, gn, 0.3, false);
        let mut costs = CostMatrix::new(gn, hn);
        for u in g.vertices() {
            for i in h.vertices() {
                let num: i64 = rng.gen_range(-20..=20);
                let den: i64 = rng.gen_range(1..=7);
                costs.set(u, i, BigRational::new(num.into(), den.into()));
            }
        }
        let exact = solve(&h, &ord, &g, &costs).unwrap();
        let brute = minhom_bruteforce(&g, &h, &costs, None).unwrap();
        assert_eq!(exact.cost, brute.cost);
    }
}
