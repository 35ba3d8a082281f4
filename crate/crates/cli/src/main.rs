use std::process::ExitCode;

use bkl4::solver::solve_conjugacy_with_cap;
use bkl4::{compute_sc, quotient_graph, verify_certificate, BraidError, GarsideBraid, SolverDecision};
use bkl4_cli::output::{quotient_dot, quotient_json, sc_dot, sc_json, Report};
use bkl4_cli::parse::{format_braid, parse_braid};
use bkl4_cli::{bench, cap_from_env};
use clap::{Parser, Subcommand, ValueEnum};

const NOT_CONJUGATE: u8 = 1;
const PARSE_ERROR: u8 = 2;
const CAP_EXCEEDED: u8 = 3;

#[derive(Parser)]
#[command(name = "bkl4", version, about = "Dual Garside structure on the 4-strand braid group")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Beta,
}

#[derive(Subcommand)]
enum Command {
    /// Normal form and invariants.
    Nf {
        word: String,
        #[arg(long)]
        json: bool,
    },
    /// Set of sliding circuits.
    Sc {
        word: String,
        /// Print only the number of circuit elements.
        #[arg(long)]
        size: bool,
        /// Export the graph of minimal arrows.
        #[arg(long, value_enum, conflicts_with = "quotient")]
        graph: Option<Format>,
        /// Export the orbit quotient graph.
        #[arg(long, value_enum)]
        quotient: Option<Format>,
        #[arg(long)]
        json: bool,
    },
    /// Decide conjugacy; exit 0 when conjugate, 1 when not.
    Conj {
        x: String,
        y: String,
        /// Assume both braids are pseudo-Anosov, enabling the powering path.
        #[arg(long)]
        assume_pa: bool,
        #[arg(long)]
        json: bool,
    },
    /// Print the word of β_k.
    Beta { k: u32 },
    /// Timing over the β_k family, as CSV.
    Bench {
        #[arg(long, value_enum, default_value = "beta")]
        family: Family,
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(2..))]
        kmax: u32,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

fn parse(word: &str) -> Result<GarsideBraid, ExitCode> {
    parse_braid(word).map_err(|e| {
        eprintln!("{e}");
        ExitCode::from(PARSE_ERROR)
    })
}

fn cap() -> Result<usize, ExitCode> {
    cap_from_env().map_err(|e| {
        eprintln!("{e}");
        ExitCode::from(PARSE_ERROR)
    })
}

fn print_json(value: &impl serde::Serialize) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn nf(word: &str, json: bool) -> Result<ExitCode, ExitCode> {
    let report = Report::new(&parse(word)?);
    if json {
        print_json(&report);
    } else {
        println!("{}", report.text());
    }
    Ok(ExitCode::SUCCESS)
}

fn sc(
    word: &str,
    size: bool,
    graph: Option<Format>,
    quotient: Option<Format>,
    json: bool,
) -> Result<ExitCode, ExitCode> {
    let x = parse(word)?;
    let g = match compute_sc(&x, cap()?) {
        Ok(g) => g,
        Err(e @ BraidError::CapExceeded { .. }) => {
            eprintln!("{e}");
            return Err(ExitCode::from(CAP_EXCEEDED));
        }
        Err(e) => unreachable!("{e}"),
    };
    match (graph, quotient) {
        (Some(Format::Dot), _) => print!("{}", sc_dot(&g)),
        (Some(Format::Json), _) => print_json(&sc_json(&g)),
        (None, Some(Format::Dot)) => print!("{}", quotient_dot(&quotient_graph(&g))),
        (None, Some(Format::Json)) => print_json(&quotient_json(&g, &quotient_graph(&g))),
        (None, None) if json => {
            let mut report = Report::new(&x);
            report.sc_size = Some(g.len());
            print_json(&report);
        }
        (None, None) if size => println!("{}", g.len()),
        (None, None) => {
            println!("{}", g.len());
            for v in g.vertices() {
                println!("{}", format_braid(v));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn conj(x: &str, y: &str, assume_pa: bool, json: bool) -> Result<ExitCode, ExitCode> {
    let (bx, by) = (parse(x)?, parse(y)?);
    let decision = solve_conjugacy_with_cap(&bx, &by, assume_pa, cap()?);
    let mut report = Report::new(&bx);
    let (code, text) = match &decision {
        SolverDecision::Conjugate(c) => {
            assert!(verify_certificate(c), "solver returned an unverified certificate");
            let z = format_braid(&c.z);
            report.certificate = Some(z.clone());
            (ExitCode::SUCCESS, format!("conjugate\nz = {z}\n(z^-1 . y . z = x)"))
        }
        SolverDecision::NotConjugate(reason) => {
            (ExitCode::from(NOT_CONJUGATE), format!("not conjugate ({reason:?})"))
        }
        SolverDecision::Inconclusive { cap } => {
            eprintln!("sliding-circuit search exceeded the cap of {cap} vertices");
            return Err(ExitCode::from(CAP_EXCEEDED));
        }
    };
    if json {
        let mut value = serde_json::to_value(&report).expect("serializable");
        value["conjugate"] = decision.is_conjugate().into();
        if let SolverDecision::NotConjugate(reason) = decision {
            value["reason"] = format!("{reason:?}").into();
        }
        print_json(&value);
    } else {
        println!("{text}");
    }
    Ok(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Nf { word, json } => nf(&word, json),
        Command::Sc {
            word,
            size,
            graph,
            quotient,
            json,
        } => sc(&word, size, graph, quotient, json),
        Command::Conj {
            x,
            y,
            assume_pa,
            json,
        } => conj(&x, &y, assume_pa, json),
        Command::Beta { k } => {
            println!("{}", beta_text(k));
            Ok(ExitCode::SUCCESS)
        }
        Command::Bench { family: Family::Beta, kmax, seed } => {
            print!("{}", bench::csv(&bench::run(kmax, seed)));
            Ok(ExitCode::SUCCESS)
        }
    };
    result.unwrap_or_else(|code| code)
}

fn beta_text(k: u32) -> String {
    let mut s = String::from("a34.a23.a12.a13.a14");
    if k > 0 {
        s.push_str(&format!(".c124^{}.a12^-{}", 3 * k, 3 * k));
    }
    s
}
