//! Text formats: digraph files, cost tables, colored graphs, catalog
//! directories, DOT export, and line-oriented reports.
//!
//! Digraph grammar (round-trip stable):
//! ```text
//! digraph <name>
//! vertices: <id> <id> ...
//! reflexive            # optional: add all loops
//! arcs: <id>-><id> ...
//! ```
//!
//! Cost tables are whitespace-separated: the first row lists template
//! vertex ids, the first column instance vertex ids, and every cell is
//! an exact rational (`p/q`, decimal, or integer).
//!
//! Colored graphs (I3 instances):
//! ```text
//! colored <name>
//! U: <id> ...
//! V: <id> ...
//! W: <id> ...
//! edges: <id>-<id> ...
//! ```

use std::fmt::Write as _;
use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Pow, Zero};

use crate::error::{Error, Result};
use crate::graph::{Digraph, UndirectedGraph, VertexId};
use crate::hardness::{Class, GadgetInstance, Provenance, ThreeColoredGraph};
use crate::recognition::{Certificate, DichotomyVerdict, ObstructionCatalog};
use crate::solver::CostMatrix;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Logical lines of a document: trimmed, comment-stripped, non-empty,
/// paired with their 1-based line numbers.
fn logical_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect()
}

pub fn parse_digraph(text: &str) -> Result<(String, Digraph)> {
    let lines = logical_lines(text);
    let mut it = lines.iter();
    let &(ln, header) = it
        .next()
        .ok_or_else(|| parse_err(1, "empty document"))?;
    let name = header
        .strip_prefix("digraph ")
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .ok_or_else(|| parse_err(ln, "expected header `digraph <name>`"))?
        .to_string();
    let &(ln, vline) = it
        .next()
        .ok_or_else(|| parse_err(ln, "missing `vertices:` line"))?;
    let vids = vline
        .strip_prefix("vertices:")
        .ok_or_else(|| parse_err(ln, "expected `vertices: <id> ...`"))?;
    let mut g = Digraph::new(vids.split_whitespace())?;
    let mut reflexive = false;
    for &(ln, line) in it {
        if line == "reflexive" {
            reflexive = true;
            g.add_all_loops();
            continue;
        }
        let arcs = line
            .strip_prefix("arcs:")
            .ok_or_else(|| parse_err(ln, "expected `arcs: a->b ...` or `reflexive`"))?;
        for tok in arcs.split_whitespace() {
            let (a, b) = tok
                .split_once("->")
                .ok_or_else(|| parse_err(ln, format!("malformed arc `{tok}`")))?;
            let (u, v) = (g.vertex(a)?, g.vertex(b)?);
            if reflexive && u == v && g.has_arc(u, v) {
                continue; // loop already implied by the reflexive flag
            }
            g.add_arc(u, v)?;
        }
    }
    Ok((name, g))
}

pub fn serialize_digraph(name: &str, g: &Digraph) -> String {
    let mut out = format!("digraph {name}\nvertices:");
    for v in g.vertices() {
        write!(out, " {}", g.name(v)).unwrap();
    }
    out.push('\n');
    let reflexive = g.is_reflexive() && g.n() > 0;
    if reflexive {
        out.push_str("reflexive\n");
    }
    let arcs: Vec<String> = g
        .arcs()
        .filter(|(u, v)| !(reflexive && u == v))
        .map(|(u, v)| format!("{}->{}", g.name(u), g.name(v)))
        .collect();
    if !arcs.is_empty() {
        writeln!(out, "arcs: {}", arcs.join(" ")).unwrap();
    }
    out
}

/// Exact rational parsing: `p/q`, integer, or decimal literal (digits
/// scaled by a power of ten — no float round-trip).
pub fn parse_rational(tok: &str, line: usize) -> Result<BigRational> {
    let bad = || parse_err(line, format!("malformed rational `{tok}`"));
    if let Some((p, q)) = tok.split_once('/') {
        let num: BigInt = p.parse().map_err(|_| bad())?;
        let den: BigInt = q.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(parse_err(line, format!("zero denominator in `{tok}`")));
        }
        return Ok(BigRational::new(num, den));
    }
    if let Some((int, frac)) = tok.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let digits = format!("{int}{frac}");
        let num: BigInt = digits.parse().map_err(|_| bad())?;
        let den = BigInt::from(10u32).pow(frac.len() as u32);
        return Ok(BigRational::new(num, den));
    }
    let num: BigInt = tok.parse().map_err(|_| bad())?;
    Ok(BigRational::from_integer(num))
}

pub fn format_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_costs(text: &str, g: &Digraph, h: &Digraph) -> Result<CostMatrix> {
    let lines = logical_lines(text);
    let mut it = lines.iter();
    let &(ln, header) = it
        .next()
        .ok_or_else(|| parse_err(1, "empty cost table"))?;
    let cols: Vec<VertexId> = header
        .split_whitespace()
        .map(|id| h.vertex(id))
        .collect::<Result<_>>()
        .map_err(|e| parse_err(ln, e.to_string()))?;
    if cols.len() != h.n() {
        return Err(Error::DimensionMismatch(format!(
            "cost table names {} of {} template vertices",
            cols.len(),
            h.n()
        )));
    }
    let mut costs = CostMatrix::new(g.n(), h.n());
    let mut seen = vec![false; g.n()];
    for &(ln, line) in it {
        let mut toks = line.split_whitespace();
        let id = toks.next().unwrap();
        let u = g.vertex(id).map_err(|e| parse_err(ln, e.to_string()))?;
        if std::mem::replace(&mut seen[u.idx()], true) {
            return Err(parse_err(ln, format!("duplicate row for `{id}`")));
        }
        let cells: Vec<&str> = toks.collect();
        if cells.len() != h.n() {
            return Err(parse_err(
                ln,
                format!("row `{id}` has {} of {} cells", cells.len(), h.n()),
            ));
        }
        for (i, tok) in cells.iter().enumerate() {
            costs.set(u, cols[i], parse_rational(tok, ln)?);
        }
    }
    if let Some(missing) = seen.iter().position(|&s| !s) {
        return Err(Error::DimensionMismatch(format!(
            "cost table has no row for instance vertex `{}`",
            g.name(VertexId(missing as u32))
        )));
    }
    Ok(costs)
}

pub fn serialize_costs(costs: &CostMatrix, g: &Digraph, h: &Digraph) -> String {
    let mut out = String::new();
    let header: Vec<&str> = h.vertices().map(|v| h.name(v)).collect();
    writeln!(out, "{}", header.join(" ")).unwrap();
    for u in g.vertices() {
        let mut row = vec![g.name(u).to_string()];
        for i in h.vertices() {
            row.push(format_rational(costs.get(u, i)));
        }
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
    out
}

pub fn parse_colored_graph(text: &str) -> Result<(String, ThreeColoredGraph)> {
    let lines = logical_lines(text);
    let mut it = lines.iter();
    let &(ln, header) = it
        .next()
        .ok_or_else(|| parse_err(1, "empty document"))?;
    let name = header
        .strip_prefix("colored ")
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .ok_or_else(|| parse_err(ln, "expected header `colored <name>`"))?
        .to_string();
    let mut names: Vec<String> = Vec::new();
    let mut colors: Vec<Class> = Vec::new();
    let mut edge_lines: Vec<(usize, &str)> = Vec::new();
    for &(ln, line) in it {
        if let Some(rest) = line.strip_prefix("edges:") {
            edge_lines.push((ln, rest));
            continue;
        }
        let (class, rest) = match line.split_once(':') {
            Some(("U", r)) => (Class::U, r),
            Some(("V", r)) => (Class::V, r),
            Some(("W", r)) => (Class::W, r),
            _ => return Err(parse_err(ln, "expected `U:`, `V:`, `W:` or `edges:`")),
        };
        for id in rest.split_whitespace() {
            names.push(id.to_string());
            colors.push(class);
        }
    }
    let mut x = UndirectedGraph::new(names)?;
    for (ln, rest) in edge_lines {
        for tok in rest.split_whitespace() {
            let (a, b) = tok
                .split_once('-')
                .ok_or_else(|| parse_err(ln, format!("malformed edge `{tok}`")))?;
            x.add_edge(x.vertex(a)?, x.vertex(b)?)?;
        }
    }
    Ok((name, ThreeColoredGraph::new(x, colors)?))
}

pub fn serialize_colored_graph(name: &str, x: &ThreeColoredGraph) -> String {
    let mut out = format!("colored {name}\n");
    for class in [Class::U, Class::V, Class::W] {
        let ids: Vec<&str> = x
            .x
            .vertices()
            .filter(|&v| x.class(v) == class)
            .map(|v| x.x.name(v))
            .collect();
        writeln!(out, "{}: {}", class.letter(), ids.join(" ")).unwrap();
    }
    let edges: Vec<String> = x
        .x
        .edges()
        .map(|(a, b)| format!("{}-{}", x.x.name(a), x.x.name(b)))
        .collect();
    if !edges.is_empty() {
        writeln!(out, "edges: {}", edges.join(" ")).unwrap();
    }
    out
}

/// DOT rendering of a digraph; loops are kept (they carry meaning).
pub fn digraph_to_dot(name: &str, g: &Digraph) -> String {
    let mut out = format!("digraph \"{name}\" {{\n");
    for v in g.vertices() {
        writeln!(out, "  \"{}\";", g.name(v)).unwrap();
    }
    for (u, v) in g.arcs() {
        writeln!(out, "  \"{}\" -> \"{}\";", g.name(u), g.name(v)).unwrap();
    }
    out.push_str("}\n");
    out
}

/// DOT rendering of a certificate: the host digraph with the embedded
/// obstruction vertices (and the arcs among them) highlighted.
pub fn certificate_to_dot(h: &Digraph, cert: &Certificate) -> String {
    let highlighted: Vec<VertexId> = match cert {
        Certificate::S { embedding, .. } | Certificate::H { embedding, .. } => {
            embedding.image.clone()
        }
        Certificate::B { embedding, .. } => {
            // collapse primed/double-primed copies back to H's vertices
            let mut vs: Vec<VertexId> = embedding
                .white_image
                .iter()
                .chain(embedding.black_image.iter())
                .copied()
                .collect();
            vs.sort();
            vs.dedup();
            vs
        }
    };
    let mut out = format!("digraph \"certificate\" {{\n  label=\"{cert}\";\n");
    for v in h.vertices() {
        let style = if highlighted.contains(&v) {
            " [style=filled, fillcolor=gray80, penwidth=2]"
        } else {
            ""
        };
        writeln!(out, "  \"{}\"{style};", h.name(v)).unwrap();
    }
    for (u, v) in h.arcs() {
        let style = if highlighted.contains(&u) && highlighted.contains(&v) {
            " [penwidth=2]"
        } else {
            ""
        };
        writeln!(out, "  \"{}\" -> \"{}\"{style};", h.name(u), h.name(v)).unwrap();
    }
    out.push_str("}\n");
    out
}

/// Line-oriented `key: value` report for a classification verdict.
pub fn verdict_report(h: &Digraph, verdict: &DichotomyVerdict) -> String {
    let mut out = String::new();
    match verdict {
        DichotomyVerdict::Polynomial(ord) => {
            writeln!(out, "verdict: polynomial").unwrap();
            writeln!(out, "min-max-ordering: {}", ord.named(h).join(" ")).unwrap();
        }
        DichotomyVerdict::NPComplete(cert) => {
            writeln!(out, "verdict: np-complete").unwrap();
            writeln!(out, "certificate: {cert}").unwrap();
            match cert {
                Certificate::S { embedding, .. } | Certificate::H { embedding, .. } => {
                    writeln!(out, "witness: {}", embedding.named(h.names()).join(" "))
                        .unwrap();
                }
                Certificate::B {
                    embedding, swapped, ..
                } => {
                    let w: Vec<String> = embedding
                        .white_image
                        .iter()
                        .map(|&v| format!("{}'", h.name(v)))
                        .collect();
                    let b: Vec<String> = embedding
                        .black_image
                        .iter()
                        .map(|&v| format!("{}''", h.name(v)))
                        .collect();
                    writeln!(out, "witness: {} | {}", w.join(" "), b.join(" ")).unwrap();
                    if *swapped {
                        writeln!(out, "orientation: sides swapped").unwrap();
                    }
                }
            }
        }
    }
    out
}

/// Writes the catalog as a directory: one digraph file per member plus
/// an `index.txt` listing sizes, converse classes, paper indices, and
/// labelings. Deterministic byte-for-byte.
pub fn write_catalog_dir(catalog: &ObstructionCatalog, dir: &Path) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    let mut index = String::new();
    for (i, m) in catalog.members.iter().enumerate() {
        let file = format!("member{:02}.dg", i + 1);
        let name = match m.paper_index {
            Some(p) => format!("h{p}"),
            None => format!("member{:02}", i + 1),
        };
        std::fs::write(dir.join(&file), serialize_digraph(&name, &m.digraph))?;
        write!(
            index,
            "member: {file} vertices: {} converse-class: {}",
            m.digraph.n(),
            m.converse_class + 1
        )
        .unwrap();
        if let Some(p) = m.paper_index {
            write!(index, " paper-index: {p}").unwrap();
        }
        if let Some(lab) = &m.labeling {
            let roles: Vec<String> = lab
                .iter()
                .map(|&v| m.digraph.name(v).to_string())
                .collect();
            write!(index, " labeling(x1..x4): {}", roles.join(" ")).unwrap();
        }
        index.push('\n');
    }
    std::fs::write(dir.join("index.txt"), index)?;
    Ok(())
}

/// Writes a gadget instance: the instance digraph, its cost table, a
/// budget line, and a provenance sidecar.
pub fn write_gadget_dir(gi: &GadgetInstance, h: &Digraph, dir: &Path) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    std::fs::write(
        dir.join("instance.dg"),
        serialize_digraph(&format!("gadget_h{}", gi.lemma), &gi.g),
    )?;
    std::fs::write(dir.join("costs.tsv"), serialize_costs(&gi.costs, &gi.g, h))?;
    std::fs::write(
        dir.join("budget.txt"),
        format!("budget: {}\n", format_rational(&gi.budget)),
    )?;
    let mut prov = String::new();
    for (v, p) in gi.g.vertices().zip(gi.provenance.iter()) {
        match p {
            Provenance::Original(c) => {
                writeln!(prov, "{}: original class {}", gi.g.name(v), c.letter()).unwrap()
            }
            Provenance::Intermediate { tag, a, b } => writeln!(
                prov,
                "{}: intermediate m_{tag} for edge {a}-{b}",
                gi.g.name(v)
            )
            .unwrap(),
        }
    }
    std::fs::write(dir.join("provenance.txt"), prov)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digraph_roundtrip() {
        let text = "digraph h\nvertices: a b\narcs: a->a b->b a->b\n";
        let (name, g) = parse_digraph(text).unwrap();
        assert_eq!(name, "h");
        assert_eq!(g.n(), 2);
        assert_eq!(g.arc_count(), 3);
        let again = serialize_digraph(&name, &g);
        let (_, g2) = parse_digraph(&again).unwrap();
        assert_eq!(g, g2);
    }

    #[test]
    fn reflexive_flag_adds_loops() {
        let (_, g) = parse_digraph("digraph h\nvertices: a b\nreflexive\narcs: a->b\n").unwrap();
        assert!(g.is_reflexive());
        assert_eq!(g.arc_count(), 3);
    }

    #[test]
    fn unknown_vertex_rejected() {
        let err = parse_digraph("digraph h\nvertices: a\narcs: a->c\n").unwrap_err();
        assert!(err.to_string().contains("unknown vertex"));
    }

    #[test]
    fn rationals_parse_exactly() {
        assert_eq!(
            parse_rational("1/3", 1).unwrap(),
            BigRational::new(1.into(), 3.into())
        );
        assert_eq!(
            parse_rational("0.25", 1).unwrap(),
            BigRational::new(1.into(), 4.into())
        );
        assert_eq!(
            parse_rational("-2.5", 1).unwrap(),
            BigRational::new((-5).into(), 2.into())
        );
        assert_eq!(
            parse_rational("5", 1).unwrap(),
            BigRational::from_integer(5.into())
        );
        assert!(parse_rational("1/0", 1).is_err());
        assert!(parse_rational("x", 1).is_err());
    }

    #[test]
    fn cost_table_roundtrip() {
        let g = Digraph::reflexive(["p", "q"], &[("p", "q")]).unwrap();
        let h = Digraph::reflexive(["a", "b"], &[("a", "b")]).unwrap();
        let text = "a b\np 1/3 2\nq 0.5 -1\n";
        let costs = parse_costs(text, &g, &h).unwrap();
        assert_eq!(
            *costs.get(g.vertex("q").unwrap(), h.vertex("a").unwrap()),
            BigRational::new(1.into(), 2.into())
        );
        let again = serialize_costs(&costs, &g, &h);
        let costs2 = parse_costs(&again, &g, &h).unwrap();
        for u in g.vertices() {
            for i in h.vertices() {
                assert_eq!(costs.get(u, i), costs2.get(u, i));
            }
        }
    }

    #[test]
    fn cost_table_dimension_errors() {
        let g = Digraph::reflexive(["p"], &[]).unwrap();
        let h = Digraph::reflexive(["a", "b"], &[]).unwrap();
        assert!(parse_costs("a\np 1\n", &g, &h).is_err());
        assert!(parse_costs("a b\n", &g, &h).is_err());
        assert!(parse_costs("a b\np 1\n", &g, &h).is_err());
    }

    #[test]
    fn colored_graph_roundtrip() {
        let text = "colored x\nU: u1 u2\nV: v1\nW: w1\nedges: u1-v1 u2-w1 v1-w1\n";
        let (name, x) = parse_colored_graph(text).unwrap();
        assert_eq!(name, "x");
        assert_eq!(x.x.n(), 4);
        assert_eq!(x.x.edge_count(), 3);
        let again = serialize_colored_graph(&name, &x);
        let (_, x2) = parse_colored_graph(&again).unwrap();
        assert_eq!(x.x, x2.x);
        assert_eq!(x.color, x2.color);
    }

    #[test]
    fn colored_graph_rejects_monochrome_edge() {
        let err = parse_colored_graph("colored x\nU: a b\nedges: a-b\n").unwrap_err();
        assert!(matches!(err, Error::ClassNotIndependent { .. }));
    }

    #[test]
    fn dot_export_mentions_all_arcs() {
        let g = Digraph::reflexive(["a", "b"], &[("a", "b")]).unwrap();
        let dot = digraph_to_dot("g", &g);
        assert!(dot.contains("\"a\" -> \"b\""));
        assert!(dot.contains("\"a\" -> \"a\""));
    }
}
