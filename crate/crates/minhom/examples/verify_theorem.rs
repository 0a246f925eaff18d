//! Exhaustively verify the dichotomy boundary: for every reflexive
//! digraph up to isomorphism on <= 4 vertices, a Min-Max ordering
//! exists exactly when S(H) is a proper interval graph, B(H) a proper
//! interval bigraph, and H contains no catalog obstruction.
//!
//! Pass `--max-n 5` (and ideally `--parallel`) for the extended run.

use minhom::oracle::verify_theorem;
use minhom::recognition::derive_obstruction_catalog;
use minhom::Result;

fn main() -> Result<()> {
    let mut max_n = 4usize;
    let mut parallel = false;
    let mut args = std::env::args().skip(1);
    while let Some(a) = args.next() {
        match a.as_str() {
            "--max-n" => max_n = args.next().and_then(|v| v.parse().ok()).unwrap_or(4),
            "--parallel" => parallel = true,
            other => {
                eprintln!("unknown argument `{other}` (use --max-n N, --parallel)");
                std::process::exit(1);
            }
        }
    }
    let catalog = derive_obstruction_catalog(max_n.min(4), parallel)?;
    let report = verify_theorem(max_n, &catalog, parallel)?;
    print!("{}", report.summary());
    assert!(report.mismatches.is_empty());
    Ok(())
}
