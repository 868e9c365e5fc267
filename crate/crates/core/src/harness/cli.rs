//! `zkrange prove|verify|params|bench`.

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use rand::rngs::OsRng;

use super::bench::{run_bench, run_comparison, write_outputs, BenchConfig};
use super::system::{Options, Range, Scheme, System};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_REJECT: i32 = 1;
pub const EXIT_WITNESS: i32 = 2;
pub const EXIT_MALFORMED: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "zkrange", version, about = "Zero-knowledge range proofs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Commit to a witness and write a range proof.
    Prove {
        #[command(flatten)]
        statement: Statement,
        /// Secret value to prove in range.
        #[arg(long)]
        witness: String,
        /// Output proof file.
        #[arg(long)]
        out: PathBuf,
    },
    /// Check a proof file against the range.
    Verify {
        #[command(flatten)]
        statement: Statement,
        /// Proof file written by `prove`.
        #[arg(long, alias = "in")]
        proof: PathBuf,
    },
    /// Print the parameters for a scheme and range.
    Params {
        #[command(flatten)]
        statement: Statement,
    },
    /// Measure proof size and timings; writes CSV and markdown.
    Bench {
        /// Comma-separated schemes (default: all).
        #[arg(long, value_delimiter = ',')]
        scheme: Vec<Scheme>,
        /// Comma-separated range bit lengths.
        #[arg(long, value_delimiter = ',', default_value = "8,16,32,64")]
        bits: Vec<u32>,
        #[arg(long, default_value_t = 5)]
        reps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output directory.
        #[arg(long, default_value = "bench_out")]
        out: PathBuf,
        #[arg(long, default_value_t = 2048)]
        modulus_bits: u64,
        /// Also measure every scheme at the fixed comparison interval.
        #[arg(long)]
        comparison: bool,
    },
}

#[derive(Debug, Args)]
struct Statement {
    #[arg(long)]
    scheme: Scheme,
    /// Half-open range `a:b`.
    #[arg(long)]
    range: Range,
    /// Seed for the public parameters; prover and verifier must agree.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// RSA modulus size for boudot.
    #[arg(long, default_value_t = 2048)]
    modulus_bits: u64,
    /// Digit base for sigrange.
    #[arg(long)]
    base: Option<u64>,
    /// Digit count for sigrange.
    #[arg(long)]
    digits: Option<u32>,
}

impl Statement {
    fn system(&self) -> crate::Result<System> {
        let opts = Options {
            seed: self.seed,
            modulus_bits: self.modulus_bits,
            base: self.base,
            digits: self.digits,
        };
        System::setup(self.scheme, self.range, &opts)
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::WitnessOutOfRange => EXIT_WITNESS,
        Error::VerificationFailed(_) => EXIT_REJECT,
        _ => EXIT_MALFORMED,
    }
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_MALFORMED } else { EXIT_OK };
        }
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn execute(command: Command) -> crate::Result<i32> {
    match command {
        Command::Prove {
            statement,
            witness,
            out,
        } => {
            let witness: BigInt = witness
                .trim()
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("witness {witness:?} is not an integer")))?;
            let system = statement.system()?;
            let bytes = system.prove(&witness, &mut OsRng)?;
            fs::write(&out, &bytes)?;
            println!("proof_size {}", bytes.len());
            Ok(EXIT_OK)
        }
        Command::Verify { statement, proof } => {
            let system = statement.system()?;
            let bytes = fs::read(&proof)?;
            if system.verify(&bytes)? {
                println!("accept");
                Ok(EXIT_OK)
            } else {
                println!("reject");
                Ok(EXIT_REJECT)
            }
        }
        Command::Params { statement } => {
            for (k, v) in statement.system()?.describe() {
                println!("{k} {v}");
            }
            Ok(EXIT_OK)
        }
        Command::Bench {
            scheme,
            bits,
            reps,
            seed,
            out,
            modulus_bits,
            comparison,
        } => {
            let config = BenchConfig {
                schemes: if scheme.is_empty() { Scheme::ALL.to_vec() } else { scheme },
                range_bits: bits,
                repetitions: reps,
                rng_seed: seed,
                output_path: Some(out.clone()),
                modulus_bits,
            };
            let rows = run_bench(&config)?;
            write_outputs(&rows, &out, "bench")?;
            print!("{}", super::bench::markdown(&rows));
            if comparison {
                let rows = run_comparison(&config)?;
                write_outputs(&rows, &out.join("comparison"), "comparison")?;
                print!("\n{}", super::bench::markdown(&rows));
            }
            Ok(EXIT_OK)
        }
    }
}
