//! Command-line front end: parse the graph text format, run the requested
//! computation, print deterministic text.
//!
//! Exit codes: 0 success, 1 falsified identity under `verify`, 2 usage or
//! input error.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read};

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bijection::{forward, inverse, trace_string};
use crate::chromatic::chromatic_delcon;
use crate::corpus::default_corpus;
use crate::graph::{Dir, Multigraph, Orientation};
use crate::nbc::{nbc_sets, EdgeSet};
use crate::ncsf::{commutativize, specialize_ones, to_e_basis, y_delcon};
use crate::orientations::{all_acyclic, unique_sink};
use crate::verify::verify_graph;
use crate::{Error, Result};

#[derive(Parser)]
#[command(
    name = "sinks",
    version,
    about = "Acyclic orientations, broken circuits, and chromatic invariants of small multigraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the chromatic polynomial's coefficients, constant term first.
    Chromatic { file: String },
    /// List acyclic orientations as direction words, count first.
    Orient {
        file: String,
        /// Keep only orientations whose unique sink is this vertex.
        #[arg(long)]
        sink: Option<usize>,
    },
    /// List edge sets containing no broken circuit, smallest first.
    Nbc {
        file: String,
        /// Keep only sets of this many edges.
        #[arg(long)]
        size: Option<usize>,
    },
    /// Map each unique-sink orientation to its spanning tree, or back.
    Bijection {
        file: String,
        /// The root vertex serving as the unique sink.
        #[arg(long)]
        sink: usize,
        /// Read edge sets from standard input and emit orientation words.
        #[arg(long)]
        invert: bool,
        /// Derive the normal orientation from this seed instead of taking
        /// every edge forward.
        #[arg(long)]
        normal_seed: Option<u64>,
    },
    /// Print the noncommutative chromatic invariant's coefficients.
    Ncsf {
        file: String,
        /// Basis to expand in (default m).
        #[arg(long, value_enum)]
        basis: Option<BasisArg>,
        /// Collapse the e-expansion to commutative coefficients indexed by
        /// composition.
        #[arg(long)]
        commutative: bool,
        /// Evaluate at this many variables set to 1 instead of printing
        /// coefficients.
        #[arg(long)]
        spec_ones: Option<u64>,
    },
    /// Run the cross-identity suite on one graph, or on the standard corpus
    /// when no file is given.
    Verify {
        file: Option<String>,
        /// Check root-dependent identities at every vertex, not just v1.
        #[arg(long)]
        all_sinks: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    M,
    E,
}

/// Parse `argv` (program name first) and run the command, printing to the
/// standard streams; returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            2
        }
    }
}

fn read_graph(path: &str) -> Result<Multigraph> {
    let text = if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(path)?
    };
    text.parse()
}

fn normal_orientation(q: usize, seed: Option<u64>) -> Orientation {
    match seed {
        None => Orientation::all_forward(q),
        Some(s) => {
            let mut rng = ChaCha8Rng::seed_from_u64(s);
            Orientation::new(
                (0..q)
                    .map(|_| {
                        if rng.gen() {
                            Dir::Forward
                        } else {
                            Dir::Backward
                        }
                    })
                    .collect(),
            )
        }
    }
}

fn execute(cmd: Command) -> Result<i32> {
    match cmd {
        Command::Chromatic { file } => {
            let g = read_graph(&file)?;
            println!("{}", chromatic_delcon(&g));
            Ok(0)
        }
        Command::Orient { file, sink } => {
            let g = read_graph(&file)?;
            let orientations = match sink {
                Some(v0) => unique_sink(&g, v0)?,
                None => all_acyclic(&g),
            };
            println!("{}", orientations.len());
            for o in orientations {
                println!("{o}");
            }
            Ok(0)
        }
        Command::Nbc { file, size } => {
            let g = read_graph(&file)?;
            for s in nbc_sets(&g, size) {
                println!("{s}");
            }
            Ok(0)
        }
        Command::Bijection {
            file,
            sink,
            invert,
            normal_seed,
        } => {
            let g = read_graph(&file)?;
            let normal = normal_orientation(g.edge_count(), normal_seed);
            println!("normal {normal}");
            if invert {
                let mut text = String::new();
                io::stdin().read_to_string(&mut text)?;
                for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
                    let s: EdgeSet = line.parse()?;
                    println!("{}", inverse(&g, sink, &normal, &s)?);
                }
            } else {
                for d in unique_sink(&g, sink)? {
                    let (s, trace) = forward(&g, sink, &normal, &d)?;
                    println!("{d} {} {s}", trace_string(&trace));
                }
            }
            Ok(0)
        }
        Command::Ncsf {
            file,
            basis,
            commutative,
            spec_ones,
        } => {
            let g = read_graph(&file)?;
            if commutative && spec_ones.is_some() {
                return Err(Error::Parse(
                    "--commutative and --spec-ones cannot be combined".into(),
                ));
            }
            let y = y_delcon(&g);
            if let Some(n) = spec_ones {
                println!("{}", specialize_ones(&y, n));
                return Ok(0);
            }
            match (basis, commutative) {
                (Some(BasisArg::M) | None, false) => println!("{y}"),
                (Some(BasisArg::E), false) => println!("{}", to_e_basis(&y)?),
                (Some(BasisArg::M), true) => {
                    return Err(Error::Parse("--commutative requires --basis e".into()))
                }
                (Some(BasisArg::E) | None, true) => {
                    println!("{}", commutativize(&to_e_basis(&y)?)?)
                }
            }
            Ok(0)
        }
        Command::Verify { file, all_sinks } => {
            let graphs = match file {
                Some(f) => vec![read_graph(&f)?],
                None => default_corpus(),
            };
            let mut failures = 0usize;
            for g in &graphs {
                println!("# d={} edges={:?}", g.vertex_count(), g.edges());
                for report in verify_graph(g, all_sinks) {
                    if !report.passed {
                        failures += 1;
                    }
                    println!("{report}");
                }
            }
            println!("{} graphs, {} failures", graphs.len(), failures);
            Ok(if failures > 0 { 1 } else { 0 })
        }
    }
}
