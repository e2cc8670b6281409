//! Command-line front end for the ternion/submodule pipeline.

use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use ternion::classify::{decompose, RadicalClass};
use ternion::field::{build_field, FieldSpec};
use ternion::projective::{induced_factorization, ordinary_factorization, CoreContext};
use ternion::report;
use ternion::reproduce::run_reference_checks;
use ternion::ring::FiniteRing;
use ternion::submodule::{enumerate_nonunimodular_free, Enumeration};
use ternion::ternion::{build_ternions, TernionRing};
use ternion::{cayley, Ideal};

#[derive(Parser)]
#[command(
    name = "ternion",
    about = "Finite table-defined rings, ternion rings over GF(q), and the \
             free cyclic submodules of R^n generated by non-unimodular vectors",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the ring's Cayley tables in the plain-text file format.
    Tables(CommonOpts),
    /// Maximal two-sided ideals, Jacobson radical, units and zero-divisors.
    Ideals(CommonOpts),
    /// Enumerate free cyclic submodules with only non-unimodular generators.
    Enumerate {
        #[command(flatten)]
        common: CommonOpts,
        /// Shorthand for --format json.
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        /// Shorthand for --format csv.
        #[arg(long)]
        csv: bool,
    },
    /// Partition the enumerated submodules by radical signature.
    Classify(CommonOpts),
    /// Induced and ordinary factorizations of the core lines.
    Factorize(CommonOpts),
    /// Export the submodule/core-line incidence graph.
    Export(CommonOpts),
    /// Run the full rank-3 pipeline and diff it against the embedded
    /// reference values, exiting nonzero on any mismatch.
    Reproduce {
        #[command(flatten)]
        common: CommonOpts,
        /// Check against the published reference dataset (the default and
        /// only dataset).
        #[arg(long)]
        paper: bool,
    },
}

#[derive(Args)]
struct CommonOpts {
    /// Ring source: ternion:q, field:p^k (or field:q), or file:PATH.
    #[arg(long, default_value = "ternion:2")]
    ring: String,
    /// Module rank n of R^n.
    #[arg(long, default_value_t = 3)]
    rank: usize,
    /// Output format.
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Upper bound on |R|^rank; runs that would exceed it are rejected.
    #[arg(long, default_value_t = 1 << 24)]
    budget: u64,
    /// Worker threads for the parallel scans (default: all cores).
    #[arg(long)]
    workers: Option<usize>,
    /// Write the data stream to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

/// A ring plus the ternion metadata when it was built as one.
enum RingHandle {
    Ternion(TernionRing),
    Plain(FiniteRing),
}

impl RingHandle {
    fn ring(&self) -> &FiniteRing {
        match self {
            RingHandle::Ternion(t) => t.ring(),
            RingHandle::Plain(r) => r,
        }
    }

    fn core_context(&self) -> Result<CoreContext> {
        let ctx = match self {
            RingHandle::Ternion(t) => CoreContext::for_ternions(t)?,
            RingHandle::Plain(r) => CoreContext::for_generic(r)?,
        };
        Ok(ctx)
    }
}

fn parse_prime_power(s: &str) -> Result<(u16, u32)> {
    if let Some((p, k)) = s.split_once('^') {
        let p: u16 = p.parse().context("characteristic must be an integer")?;
        let k: u32 = k.parse().context("extension degree must be an integer")?;
        return Ok((p, k));
    }
    let q: u64 = s.parse().with_context(|| format!("bad order `{s}`"))?;
    if q < 2 {
        bail!("order must be at least 2");
    }
    let p = (2..=q).find(|d| q % d == 0).expect("q >= 2 has a divisor");
    let mut k = 0u32;
    let mut rest = q;
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    if rest != 1 {
        bail!("{q} is not a prime power");
    }
    Ok((p as u16, k))
}

fn load_handle(source: &str) -> Result<RingHandle> {
    match source.split_once(':') {
        Some(("ternion", q)) => {
            let (p, k) = parse_prime_power(q)?;
            let field = build_field(&FieldSpec::new(p, k))?;
            Ok(RingHandle::Ternion(build_ternions(&field)?))
        }
        Some(("field", spec)) => {
            let (p, k) = parse_prime_power(spec)?;
            Ok(RingHandle::Plain(build_field(&FieldSpec::new(p, k))?))
        }
        Some(("file", path)) => {
            let text = fs::read_to_string(path)
                .with_context(|| format!("reading Cayley tables from {path}"))?;
            let (ring, perm) = cayley::load_ring(&text)?;
            if perm.iter().enumerate().any(|(i, &v)| i != v as usize) {
                eprintln!(
                    "note: elements relabeled so zero is 0 and unity is 1; \
                     old->new permutation: {perm:?}"
                );
            }
            Ok(RingHandle::Plain(ring))
        }
        _ => bail!(
            "unrecognized ring source `{source}` (expected ternion:q, field:p^k, or file:PATH)"
        ),
    }
}

fn emit(out: &Option<PathBuf>, data: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, data).with_context(|| format!("writing {}", path.display())),
        None => {
            std::io::stdout()
                .write_all(data.as_bytes())
                .context("writing to stdout")
        }
    }
}

fn validate_common(common: &CommonOpts, ring: &FiniteRing) -> Result<()> {
    if common.rank < 2 {
        bail!("rank must be at least 2, got {}", common.rank);
    }
    let vectors = (ring.order() as u128).pow(common.rank as u32);
    if vectors > common.budget as u128 {
        bail!(
            "|R|^rank = {vectors} exceeds the budget of {} (raise --budget to proceed)",
            common.budget
        );
    }
    Ok(())
}

fn enumerate(common: &CommonOpts, ring: &FiniteRing) -> Result<Enumeration> {
    validate_common(common, ring)?;
    let e = enumerate_nonunimodular_free(ring, common.rank, common.budget)?;
    for sub in &e.mixed_generators {
        eprintln!(
            "diagnostic: free submodule {} also admits a unimodular generator; excluded",
            sub.canonical_id()
        );
    }
    Ok(e)
}

fn classes_for(
    common: &CommonOpts,
    ring: &FiniteRing,
    radical: &Ideal,
) -> Result<Vec<RadicalClass>> {
    let e = enumerate(common, ring)?;
    Ok(decompose(&e.submodules, radical)?)
}

fn run(cli: Cli) -> Result<ExitCode> {
    let common = match &cli.command {
        Command::Tables(c)
        | Command::Ideals(c)
        | Command::Classify(c)
        | Command::Factorize(c)
        | Command::Export(c) => c,
        Command::Enumerate { common, .. } | Command::Reproduce { common, .. } => common,
    };
    if let Some(workers) = common.workers {
        rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global()
            .context("configuring worker threads")?;
    }
    let handle = load_handle(&common.ring)?;
    let ring = handle.ring();
    let format = common.format;

    match &cli.command {
        Command::Tables(common) => {
            emit(&common.out, &cayley::write_tables(ring))?;
        }
        Command::Ideals(common) => {
            let doc = report::IdealsDoc::new(ring)?;
            let data = match format.unwrap_or(Format::Text) {
                Format::Json => report::to_json(&doc),
                Format::Text => report::ideals_text(&doc),
                other => bail!("ideals supports text or json output, not {other:?}"),
            };
            emit(&common.out, &data)?;
        }
        Command::Enumerate { common, json, csv } => {
            let e = enumerate(common, ring)?;
            let format = match (format, json, csv) {
                (Some(f), _, _) => f,
                (None, true, _) => Format::Json,
                (None, _, true) => Format::Csv,
                (None, false, false) => Format::Text,
            };
            let data = match format {
                Format::Json => report::to_json(&report::submodule_docs(&e.submodules)),
                Format::Csv => report::enumeration_csv(&e.submodules),
                Format::Text => report::enumeration_text(&e.submodules),
                Format::Dot => bail!("enumerate supports text, json or csv output"),
            };
            emit(&common.out, &data)?;
        }
        Command::Classify(common) => {
            let radical = ring.jacobson_radical()?.clone();
            let classes = classes_for(common, ring, &radical)?;
            let data = match format.unwrap_or(Format::Text) {
                Format::Json => report::to_json(&report::classify_doc(&classes)),
                Format::Text => report::classify_text(&classes),
                other => bail!("classify supports text or json output, not {other:?}"),
            };
            emit(&common.out, &data)?;
        }
        Command::Factorize(common) => {
            let radical = ring.jacobson_radical()?.clone();
            let classes = classes_for(common, ring, &radical)?;
            let ctx = handle.core_context()?;
            let induced = induced_factorization(&ctx, &classes)?;
            let ordinary = ordinary_factorization(ctx.field(), common.rank);
            let doc = report::factorize_doc(&induced, &ordinary);
            let data = match format.unwrap_or(Format::Json) {
                Format::Json => report::to_json(&doc),
                Format::Text => report::factorize_text(&doc),
                other => bail!("factorize supports text or json output, not {other:?}"),
            };
            emit(&common.out, &data)?;
        }
        Command::Export(common) => {
            match format.unwrap_or(Format::Dot) {
                Format::Dot => {}
                other => bail!("export supports dot output, not {other:?}"),
            }
            let radical = ring.jacobson_radical()?.clone();
            let classes = classes_for(common, ring, &radical)?;
            let ctx = handle.core_context()?;
            emit(&common.out, &report::dot_export(&ctx, &classes)?)?;
        }
        Command::Reproduce { common, .. } => {
            let ternions = match &handle {
                RingHandle::Ternion(t) => Some(t),
                RingHandle::Plain(_) => None,
            };
            let checks = run_reference_checks(ring, ternions);
            let mut data = String::new();
            let mut all_pass = true;
            for c in &checks {
                all_pass &= c.pass;
                data.push_str(&format!(
                    "{} {}: {}\n",
                    if c.pass { "PASS" } else { "FAIL" },
                    c.name,
                    c.detail
                ));
            }
            data.push_str(&format!(
                "{}: {} checks, {} failed\n",
                if all_pass { "OK" } else { "MISMATCH" },
                checks.len(),
                checks.iter().filter(|c| !c.pass).count()
            ));
            emit(&common.out, &data)?;
            if !all_pass {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}
