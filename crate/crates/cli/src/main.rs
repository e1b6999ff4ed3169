//! `dearr`: Möbius polynomials, f-polynomials and face enumeration for
//! hyperplane arrangements, wiring diagrams and abstract semilattices.
//!
//! Exit codes: 0 success, 1 the two face counts disagree, 2 usage or input
//! error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use dearr::document::DocumentKind;
use dearr::faces::{enumerate_faces_capped, f_vector_of, DEFAULT_CAP};
use dearr::generate::{random_arrangement, random_wiring, HyperplaneParams, WiringParams};
use dearr::verify::{verify_arrangement, verify_wiring};
use dearr::document::InputDocument;
use dearr::{Document, RationalArrangement, VerifyReport};
use serde_json::json;

#[derive(Parser)]
#[command(name = "dearr", version, about = "Face counts of (pseudo)hyperplane arrangements")]
struct Cli {
    /// Maximum number of hyperplanes for face enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Möbius polynomial M(x, y).
    Mobius { file: PathBuf },
    /// Print the f-polynomial (-1)^rk M(-x, -1).
    Fpoly { file: PathBuf },
    /// Enumerate faces directly.
    Faces { file: PathBuf },
    /// Compare the f-polynomial with direct face counts.
    Verify {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Generate a random input document.
    Gen {
        #[arg(long, value_enum)]
        kind: GenKind,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long, default_value_t = 4)]
        count: usize,
        #[arg(long, default_value_t = 5)]
        bound: u32,
        #[arg(long, default_value_t = 4)]
        wires: usize,
        #[arg(long)]
        crossings: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Hyperplanes,
    Wiring,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<dearr::Error> for Failure {
    fn from(e: dearr::Error) -> Self {
        Failure { code: 2, message: e.to_string() }
    }
}

fn load(path: &Path) -> Result<Document, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure { code: 2, message: format!("{}: {e}", path.display()) })?;
    Ok(InputDocument::from_json(&text)?)
}

fn unsupported(kind: DocumentKind) -> Failure {
    Failure {
        code: 2,
        message: format!("unsupported kind {kind}: faces need a hyperplane or wiring input"),
    }
}

fn print_json(value: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("json"));
}

fn print_report(report: &VerifyReport) {
    let theorem = report
        .f_poly_theorem
        .as_ref()
        .map_or_else(|| "negative coefficient".to_string(), |f| f.to_string());
    println!("kind:             {}", report.kind);
    println!("ambient dim:      {}", report.ambient_dim);
    println!("rank:             {}", report.arrangement_rank);
    println!("M(x, y):          {}", report.mobius_poly);
    println!("f(x) from M:      {theorem}");
    println!("f-vector from M:  {:?}", report.f_vector_theorem.as_deref().unwrap_or(&[]));
    println!("f-vector direct:  {:?}", report.f_vector_direct);
    println!("chambers:         {} / {}", report.chambers_theorem, report.chambers_direct);
    println!("euler:            {}", if report.euler_check { "ok" } else { "FAILED" });
    println!("match:            {}", report.matches);
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Mobius { file } => {
            let lattice = load(&file)?.lattice();
            print_json(&json!({
                "arrangement_rank": lattice.arrangement_rank(),
                "mobius_poly": lattice.mobius_polynomial(),
            }));
        }
        Command::Fpoly { file } => {
            let lattice = load(&file)?.lattice();
            let f = lattice.f_polynomial()?;
            print_json(&json!({
                "arrangement_rank": lattice.arrangement_rank(),
                "f_poly": f,
            }));
        }
        Command::Faces { file } => {
            let (f_vector, faces) = match load(&file)? {
                InputDocument::Hyperplanes(a) => {
                    let faces = enumerate_faces_capped(&a, cli.cap)?;
                    (f_vector_of(&faces, a.ambient_dim()), faces)
                }
                InputDocument::Wiring(w) => {
                    let sweep = w.sweep();
                    (sweep.f_vector.to_vec(), sweep.faces)
                }
                doc => return Err(unsupported(doc.kind())),
            };
            print_json(&json!({ "f_vector": f_vector, "faces": faces }));
        }
        Command::Verify { file, json } => {
            let report = match load(&file)? {
                InputDocument::Hyperplanes(a) => verify_arrangement(&a, cli.cap)?,
                InputDocument::Wiring(w) => verify_wiring(&w),
                doc => return Err(unsupported(doc.kind())),
            };
            if json {
                print_json(&serde_json::to_value(&report).expect("json"));
            } else {
                print_report(&report);
            }
            if !report.matches {
                return Err(Failure { code: 1, message: "face counts disagree".into() });
            }
        }
        Command::Gen { kind, seed, dim, count, bound, wires, crossings } => {
            let doc: Document = match kind {
                GenKind::Hyperplanes => {
                    let a: RationalArrangement =
                        random_arrangement(HyperplaneParams { dim, count, bound, seed })?;
                    InputDocument::Hyperplanes(a)
                }
                GenKind::Wiring => InputDocument::Wiring(random_wiring(WiringParams { wires, crossings, seed })?),
            };
            println!("{}", doc.to_json());
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
