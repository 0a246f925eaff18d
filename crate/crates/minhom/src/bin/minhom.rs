//! Thin command-line driver over the library. Exit codes: 0 polynomial
//! verdict / success, 2 NP-complete verdict, 1 error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use minhom::hardness::identify_labeled_obstructions;
use minhom::io;
use minhom::oracle::verify_theorem;
use minhom::recognition::{classify, derive_obstruction_catalog, DichotomyVerdict};
use minhom::solver::solve;
use minhom::{Digraph, Error, ObstructionCatalog, Result};

#[derive(Parser)]
#[command(name = "minhom", version, about = "Minimum-cost homomorphism dichotomy toolkit")]
struct Cli {
    /// Override the soft template-size limit for ordering searches
    #[arg(long, global = true)]
    limit_template_size: Option<usize>,
    /// Parallelize enumeration and verification
    #[arg(long, global = true)]
    parallel: bool,
    /// RNG seed (reserved for randomized harnesses; outputs stay deterministic)
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether MinHOM(H) is polynomial or NP-complete
    Classify { template: PathBuf },
    /// Print a Min-Max ordering of H or a certificate that none exists
    Ordering { template: PathBuf },
    /// Solve a MinHOM instance exactly via the min-cut encoding
    Solve {
        #[arg(long)]
        template: PathBuf,
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        costs: PathBuf,
    },
    /// Derive the minimal obstruction catalog and write it to a directory
    Catalog {
        #[arg(long, default_value_t = 4)]
        max_size: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Generate a hardness gadget for obstruction h2..h6 from an I3 instance
    Reduce {
        /// Obstruction index, e.g. `h4`
        #[arg(long)]
        obstruction: String,
        /// Colored-graph file (the I3 instance X)
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        k: i64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Exhaustively check the dichotomy boundary up to max-n vertices
    VerifyTheorem {
        #[arg(long, default_value_t = 4)]
        max_n: usize,
    },
    /// Export a digraph, or its NP-completeness certificate, as DOT
    ExportDot {
        template: PathBuf,
        /// Render the classification certificate instead of the plain digraph
        #[arg(long)]
        certificate: bool,
        /// Output file (stdout when omitted)
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn read_digraph(path: &PathBuf) -> Result<(String, Digraph)> {
    io::parse_digraph(&std::fs::read_to_string(path)?)
}

fn labeled_catalog(parallel: bool) -> Result<ObstructionCatalog> {
    let catalog = derive_obstruction_catalog(4, parallel)?;
    Ok(identify_labeled_obstructions(&catalog)?.0)
}

fn run(cli: Cli) -> Result<u8> {
    let limit = cli.limit_template_size;
    match cli.command {
        Command::Classify { template } => {
            let (_, h) = read_digraph(&template)?;
            let catalog = labeled_catalog(cli.parallel)?;
            let verdict = classify(&h, &catalog, limit)?;
            print!("{}", io::verdict_report(&h, &verdict));
            Ok(match verdict {
                DichotomyVerdict::Polynomial(_) => 0,
                DichotomyVerdict::NPComplete(_) => 2,
            })
        }
        Command::Ordering { template } => {
            let (_, h) = read_digraph(&template)?;
            let catalog = labeled_catalog(cli.parallel)?;
            match classify(&h, &catalog, limit)? {
                DichotomyVerdict::Polynomial(ord) => {
                    println!("min-max-ordering: {}", ord.named(&h).join(" "));
                    Ok(0)
                }
                v @ DichotomyVerdict::NPComplete(_) => {
                    print!("{}", io::verdict_report(&h, &v));
                    Ok(2)
                }
            }
        }
        Command::Solve {
            template,
            instance,
            costs,
        } => {
            let (_, h) = read_digraph(&template)?;
            let (_, g) = read_digraph(&instance)?;
            let c = io::parse_costs(&std::fs::read_to_string(&costs)?, &g, &h)?;
            let catalog = labeled_catalog(cli.parallel)?;
            match classify(&h, &catalog, limit)? {
                DichotomyVerdict::Polynomial(ord) => {
                    let hom = solve(&h, &ord, &g, &c)?;
                    for u in g.vertices() {
                        println!("{} -> {}", g.name(u), h.name(hom.map[u.idx()]));
                    }
                    println!("cost: {}", io::format_rational(&hom.cost));
                    Ok(0)
                }
                v @ DichotomyVerdict::NPComplete(_) => {
                    print!("{}", io::verdict_report(&h, &v));
                    Ok(2)
                }
            }
        }
        Command::Catalog { max_size, out } => {
            let catalog = derive_obstruction_catalog(max_size, cli.parallel)?;
            let catalog = if max_size == 4 {
                identify_labeled_obstructions(&catalog)?.0
            } else {
                catalog
            };
            io::write_catalog_dir(&catalog, &out)?;
            print!("{}", std::fs::read_to_string(out.join("index.txt"))?);
            Ok(0)
        }
        Command::Reduce {
            obstruction,
            input,
            k,
            out,
        } => {
            let i: usize = obstruction
                .strip_prefix('h')
                .and_then(|s| s.parse().ok())
                .filter(|i| (2..=6).contains(i))
                .ok_or_else(|| {
                    Error::Precondition(format!(
                        "obstruction must be h2..h6, got `{obstruction}`"
                    ))
                })?;
            let (_, x) = io::parse_colored_graph(&std::fs::read_to_string(&input)?)?;
            let catalog = labeled_catalog(cli.parallel)?;
            let gi = minhom::hardness::gadget(i, &x, k, &catalog)?;
            let member = catalog.member_with_paper_index(i).unwrap();
            io::write_gadget_dir(&gi, &member.digraph, &out)?;
            println!(
                "gadget: h{i} instance-vertices: {} instance-arcs: {} budget: {}",
                gi.g.n(),
                gi.g.arc_count(),
                io::format_rational(&gi.budget)
            );
            Ok(0)
        }
        Command::VerifyTheorem { max_n } => {
            let catalog = derive_obstruction_catalog(max_n.min(4), cli.parallel)?;
            let report = verify_theorem(max_n, &catalog, cli.parallel)?;
            print!("{}", report.summary());
            Ok(if report.mismatches.is_empty() { 0 } else { 1 })
        }
        Command::ExportDot {
            template,
            certificate,
            out,
        } => {
            let (name, h) = read_digraph(&template)?;
            let dot = if certificate {
                let catalog = labeled_catalog(cli.parallel)?;
                match classify(&h, &catalog, limit)? {
                    DichotomyVerdict::NPComplete(cert) => io::certificate_to_dot(&h, &cert),
                    DichotomyVerdict::Polynomial(_) => {
                        return Err(Error::Precondition(
                            "template is polynomial: no certificate to export".into(),
                        ))
                    }
                }
            } else {
                io::digraph_to_dot(&name, &h)
            };
            match out {
                Some(path) => std::fs::write(path, dot)?,
                None => print!("{dot}"),
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
