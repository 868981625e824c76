// SPDX-License-Identifier: Apache-2.0

//! Command line front end. Exit status: 0 success, 1 counterexample found,
//! 2 usage error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use whitehead::primitivity::{is_basis_pair_f2, whitehead_minimize};
use whitehead::stallings::SubgroupGraph;
use whitehead::verify::{self, Claim, ClaimParams};
use whitehead::whitehead_graph::WhiteheadGraph;
use whitehead::{Error, Word};

#[derive(Parser)]
#[command(name = "whitehead", version, about = "Free group words, Whitehead graphs, primitivity and foldings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the freely reduced form of a word
    Reduce {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Multiply two words
    Mul {
        #[arg(allow_hyphen_values = true)]
        w1: String,
        #[arg(allow_hyphen_values = true)]
        w2: String,
    },
    /// Test whether two words are conjugate
    Conjugate {
        #[arg(allow_hyphen_values = true)]
        w1: String,
        #[arg(allow_hyphen_values = true)]
        w2: String,
    },
    /// Build the Whitehead graph of a word
    Wgraph {
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        rank: u32,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Report connectivity and a cut vertex of the Whitehead graph
    Cutvertex {
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        rank: u32,
    },
    /// Decide primitivity by Whitehead minimization
    Primitive {
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        rank: u32,
        /// Print the minimization trace as JSON
        #[arg(long)]
        trace: bool,
    },
    /// Nielsen's basis test for a pair in F_2
    Nielsen {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Fold a subgroup graph
    Fold {
        #[arg(long)]
        rank: u32,
        /// Generators; put numeric words starting with `-` after `--`
        gens: Vec<String>,
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Write the graph as JSON
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Subgroup membership; the last value is the word if none is given separately
    Member {
        #[arg(long)]
        rank: u32,
        #[arg(long, num_args = 1.., required = true, allow_hyphen_values = true)]
        subgroup: Vec<String>,
        #[arg(allow_hyphen_values = true)]
        word: Option<String>,
    },
    /// Count primitives per length
    Density {
        #[arg(long)]
        rank: u32,
        #[arg(long)]
        max_len: usize,
    },
    /// Run a verification claim, or `all`
    Verify {
        claim: String,
        #[arg(long)]
        rank: Option<u32>,
        #[arg(long)]
        max_len: Option<usize>,
        #[arg(long)]
        truncation: Option<u32>,
        #[arg(long)]
        json: Option<PathBuf>,
        /// Record wall-clock seconds in the reports
        #[arg(long)]
        timings: bool,
    },
}

enum Failure {
    Usage(String),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn parse(text: &str) -> Result<Word, Failure> {
    text.parse().map_err(|e| Failure::Usage(format!("cannot parse {text:?}: {e}")))
}

fn parse_ranked(text: &str, rank: u32) -> Result<Word, Failure> {
    Word::parse_with_rank(text, rank).map_err(|e| Failure::Usage(format!("cannot parse {text:?}: {e}")))
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::Reduce { word } => println!("{}", parse(&word)?),
        Command::Mul { w1, w2 } => println!("{}", parse(&w1)?.mul(&parse(&w2)?)),
        Command::Conjugate { w1, w2 } => println!("{}", parse(&w1)?.is_conjugate_to(&parse(&w2)?)),
        Command::Wgraph { word, rank, dot } => {
            let g = WhiteheadGraph::build(&parse_ranked(&word, rank)?, rank)?;
            println!("vertices: {}", g.vertex_count());
            for (x, y) in g.edges() {
                println!("{x} -- {y}");
            }
            if let Some(path) = dot {
                std::fs::write(path, g.to_dot())?;
            }
        }
        Command::Cutvertex { word, rank } => {
            let v = WhiteheadGraph::build(&parse_ranked(&word, rank)?, rank)?.find_cut_vertex();
            println!("connected: {}", v.connected);
            match v.cut_vertex {
                Some(c) => println!("cut_vertex: {c}"),
                None => println!("cut_vertex: none"),
            }
            println!("separable: {}", v.separable);
        }
        Command::Primitive { word, rank, trace } => {
            let t = whitehead_minimize(&parse_ranked(&word, rank)?, rank)?;
            if trace {
                println!("{}", serde_json::to_string_pretty(&t).expect("trace serializes"));
            }
            println!("{}", t.final_len() == 1);
        }
        Command::Nielsen { a, b } => println!("{}", is_basis_pair_f2(&parse(&a)?, &parse(&b)?)?),
        Command::Fold { rank, gens, dot, json } => {
            let gens: Vec<Word> = gens.iter().map(|g| parse_ranked(g, rank)).collect::<Result<_, _>>()?;
            let g = SubgroupGraph::build(&gens, rank)?;
            println!("vertices: {}", g.vertex_count());
            println!("edges: {}", g.edges().len());
            println!("rank: {}", g.subgroup_rank()?);
            println!("whole group: {}", g.is_rose());
            if let Some(path) = dot {
                std::fs::write(path, g.to_dot())?;
            }
            if let Some(path) = json {
                std::fs::write(path, serde_json::to_string_pretty(&g.to_json()).expect("graph serializes"))?;
            }
        }
        Command::Member { rank, mut subgroup, word } => {
            let word = match word {
                Some(w) => w,
                None if subgroup.len() >= 2 => subgroup.pop().expect("nonempty"),
                None => return Err(Failure::Usage("member needs a word to test".into())),
            };
            let gens: Vec<Word> = subgroup.iter().map(|g| parse_ranked(g, rank)).collect::<Result<_, _>>()?;
            let g = SubgroupGraph::build(&gens, rank)?;
            println!("{}", g.contains(&parse_ranked(&word, rank)?)?);
        }
        Command::Density { rank, max_len } => {
            println!("length\tprimitives\ttotal\tratio");
            for row in verify::primitive_density(rank, max_len)? {
                println!("{}\t{}\t{}\t{:.6}", row.length, row.primitives, row.total, row.ratio);
            }
        }
        Command::Verify { claim, rank, max_len, truncation, json, timings } => {
            let params = ClaimParams { rank, max_len, truncation, timings };
            let reports = if claim == "all" {
                verify::run_all(&params)?
            } else {
                verify::run_claim(claim.parse::<Claim>()?, &params)?
            };
            for r in &reports {
                println!("{}", r.summary());
                for c in r.counterexamples.iter().take(10) {
                    println!("    {c}");
                }
            }
            if let Some(path) = json {
                let mut text = serde_json::to_string_pretty(&reports).expect("reports serialize");
                text.push('\n');
                std::fs::write(path, text)?;
            }
            return Ok(reports.iter().all(|r| r.passed()));
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
