//! Proof size and timing measurements across schemes and range widths.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

use super::system::{Options, Range, Scheme, System};
use crate::{Error, Result};

/// The fixed interval of the cross-scheme comparison.
pub const COMPARISON_RANGE: Range = Range {
    a: 347_184_000,
    b: 599_644_800,
};

/// Digit base and count used by the signature scheme on [`COMPARISON_RANGE`].
pub const COMPARISON_BASE: u64 = 57;
pub const COMPARISON_DIGITS: u32 = 5;

/// Bit length used for Bulletproofs when compared at [`COMPARISON_RANGE`]:
/// the smallest `[0, 2^n)` covering it.
pub const COMPARISON_BULLETPROOF_BITS: u32 = 30;

pub const MIN_REPETITIONS: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchConfig {
    pub schemes: Vec<Scheme>,
    pub range_bits: Vec<u32>,
    pub repetitions: usize,
    pub rng_seed: u64,
    pub output_path: Option<PathBuf>,
    pub modulus_bits: u64,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            schemes: Scheme::ALL.to_vec(),
            range_bits: vec![8, 16, 32, 64],
            repetitions: 5,
            rng_seed: 0,
            output_path: None,
            modulus_bits: Options::default().modulus_bits,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub scheme: Scheme,
    pub range_bits: u32,
    pub proof_size: usize,
    pub setup_ms: f64,
    pub prove_ms: f64,
    pub verify_ms: f64,
    pub repetitions: usize,
}

fn median(mut v: Vec<f64>) -> f64 {
    v.sort_by(|a, b| a.total_cmp(b));
    let mid = v.len() / 2;
    if v.len() % 2 == 1 {
        v[mid]
    } else {
        (v[mid - 1] + v[mid]) / 2.0
    }
}

fn elapsed_ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

/// Medians over `reps` runs after one warm-up run. The witness is drawn from
/// the seeded generator, and every proof must verify.
pub fn measure(
    scheme: Scheme,
    range: Range,
    opts: &Options,
    reps: usize,
) -> Result<BenchRow> {
    if reps < MIN_REPETITIONS {
        return Err(Error::InvalidParameter(format!(
            "at least {MIN_REPETITIONS} repetitions are required"
        )));
    }
    let mut rng = ChaCha20Rng::seed_from_u64(opts.seed);
    let witness = BigInt::from(rng.gen_range(range.a..range.b));
    let mut setup = Vec::with_capacity(reps);
    let mut prove = Vec::with_capacity(reps);
    let mut verify = Vec::with_capacity(reps);
    let mut proof_size = 0;
    for i in 0..=reps {
        let start = Instant::now();
        let system = System::setup(scheme, range, opts)?;
        let setup_ms = elapsed_ms(start);

        let start = Instant::now();
        let bytes = system.prove(&witness, &mut rng)?;
        let prove_ms = elapsed_ms(start);

        let start = Instant::now();
        let ok = system.verify(&bytes)?;
        let verify_ms = elapsed_ms(start);
        if !ok {
            return Err(Error::VerificationFailed(format!("{scheme} over {range}")));
        }
        if i == 0 {
            proof_size = bytes.len();
            continue;
        }
        setup.push(setup_ms);
        prove.push(prove_ms);
        verify.push(verify_ms);
    }
    Ok(BenchRow {
        scheme,
        range_bits: range.bit_length(),
        proof_size,
        setup_ms: median(setup),
        prove_ms: median(prove),
        verify_ms: median(verify),
        repetitions: reps,
    })
}

fn validate(config: &BenchConfig) -> Result<()> {
    if config.repetitions < MIN_REPETITIONS {
        return Err(Error::InvalidParameter(format!(
            "at least {MIN_REPETITIONS} repetitions are required"
        )));
    }
    if config.range_bits.iter().any(|&b| b == 0 || b > 64) {
        return Err(Error::InvalidParameter("range bits must lie in [1, 64]".into()));
    }
    Ok(())
}

fn options(config: &BenchConfig) -> Options {
    Options {
        seed: config.rng_seed,
        modulus_bits: config.modulus_bits,
        ..Options::default()
    }
}

/// One row per supported `(scheme, bits)` over `[0, 2^bits)`. Unsupported
/// combinations are skipped with a warning on stderr.
pub fn run_bench(config: &BenchConfig) -> Result<Vec<BenchRow>> {
    validate(config)?;
    let opts = options(config);
    let mut rows = Vec::new();
    for &scheme in &config.schemes {
        for &bits in &config.range_bits {
            let range = Range::bits(bits)?;
            match measure(scheme, range, &opts, config.repetitions) {
                Ok(row) => rows.push(row),
                Err(e @ (Error::InvalidParameter(_) | Error::NotPowerOfTwo)) => {
                    eprintln!("warning: skipping {scheme} at {bits} bits: {e}");
                }
                Err(e) => return Err(e),
            }
        }
    }
    Ok(rows)
}

/// Every scheme at the comparison interval. Bulletproofs, limited to
/// `[0, 2^n)`, runs on the smallest such range covering it.
pub fn run_comparison(config: &BenchConfig) -> Result<Vec<BenchRow>> {
    validate(config)?;
    let mut rows = Vec::new();
    for &scheme in &config.schemes {
        let mut opts = options(config);
        let range = match scheme {
            Scheme::Boudot => COMPARISON_RANGE,
            Scheme::SigRange => {
                opts.base = Some(COMPARISON_BASE);
                opts.digits = Some(COMPARISON_DIGITS);
                COMPARISON_RANGE
            }
            Scheme::Bulletproofs | Scheme::BulletproofsOpt => Range::bits(COMPARISON_BULLETPROOF_BITS)?,
        };
        rows.push(measure(scheme, range, &opts, config.repetitions)?);
    }
    Ok(rows)
}

pub const CSV_HEADER: [&str; 6] = [
    "scheme",
    "range_bits",
    "proof_size",
    "setup_ms",
    "prove_ms",
    "verify_ms",
];

fn ms(v: f64) -> String {
    format!("{v:.3}")
}

pub fn write_csv(rows: &[BenchRow], path: &Path) -> Result<()> {
    let mut w = csv::Writer::from_path(path).map_err(csv_err)?;
    w.write_record(CSV_HEADER).map_err(csv_err)?;
    for r in rows {
        w.write_record([
            r.scheme.to_string(),
            r.range_bits.to_string(),
            r.proof_size.to_string(),
            ms(r.setup_ms),
            ms(r.prove_ms),
            ms(r.verify_ms),
        ])
        .map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

fn csv_err(e: csv::Error) -> Error {
    match e.into_kind() {
        csv::ErrorKind::Io(io) => Error::Io(io),
        other => Error::Io(std::io::Error::other(format!("{other:?}"))),
    }
}

/// Markdown table of the bench rows.
pub fn markdown(rows: &[BenchRow]) -> String {
    let mut out = String::from(
        "| Scheme | Range bits | Proof size (octets) | Setup (ms) | Prove (ms) | Verify (ms) |\n\
         |---|---:|---:|---:|---:|---:|\n",
    );
    for r in rows {
        out.push_str(&format!(
            "| {} | {} | {} | {:.2} | {:.2} | {:.2} |\n",
            r.scheme, r.range_bits, r.proof_size, r.setup_ms, r.prove_ms, r.verify_ms
        ));
    }
    out
}

/// Writes `size.csv`, `prove.csv` and `verify.csv` into `dir`, each with one
/// `(scheme, range_bits, value)` row per bench row.
pub fn emit_figures(rows: &[BenchRow], dir: &Path) -> Result<()> {
    fs::create_dir_all(dir)?;
    type Metric = fn(&BenchRow) -> String;
    let series: [(&str, &str, Metric); 3] = [
        ("size.csv", "proof_size", |r| r.proof_size.to_string()),
        ("prove.csv", "prove_ms", |r| ms(r.prove_ms)),
        ("verify.csv", "verify_ms", |r| ms(r.verify_ms)),
    ];
    for (file, column, value) in series {
        let mut w = csv::Writer::from_path(dir.join(file)).map_err(csv_err)?;
        w.write_record(["scheme", "range_bits", column]).map_err(csv_err)?;
        for r in rows {
            w.write_record([r.scheme.to_string(), r.range_bits.to_string(), value(r)])
                .map_err(csv_err)?;
        }
        w.flush()?;
    }
    Ok(())
}

/// Writes `bench.csv`, `bench.md` and the three figure files into `dir`.
pub fn write_outputs(rows: &[BenchRow], dir: &Path, stem: &str) -> Result<()> {
    fs::create_dir_all(dir)?;
    write_csv(rows, &dir.join(format!("{stem}.csv")))?;
    fs::write(dir.join(format!("{stem}.md")), markdown(rows))?;
    emit_figures(rows, dir)
}
