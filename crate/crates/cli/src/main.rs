use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use nrgrade::claims::{self, FactorKind, Status, SweepConfig};
use nrgrade::classify::{ClassifyConfig, Domain, Lattice};
use nrgrade::grading::enumerate_gradings;
use nrgrade::ideal::{IdealSet, ProductMode};
use nrgrade::io::corpus::{self, CorpusEntry};
use nrgrade::io::format::{self, LoadError};
use nrgrade::io::report::{self, Record};
use nrgrade::{SubSet, MAX_ORDER};

const OUT_DIR_VAR: &str = "NRGRADE_OUT_DIR";

#[derive(Parser, Debug)]
#[command(name = "nrgrade", version, about = "Graded weakly and almost prime ideals of finite near-rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a structure file against the near-ring and grading axioms.
    Validate { file: PathBuf },
    /// List ideals.
    Ideals {
        file: PathBuf,
        /// Only graded ideals (the default).
        #[arg(long, conflicts_with = "all")]
        graded: bool,
        /// Every ideal, graded or not.
        #[arg(long)]
        all: bool,
    },
    /// Classify every ideal as prime / weakly prime / almost prime.
    Classify {
        file: PathBuf,
        /// Report the vacuous verdicts for N instead of marking them n/a.
        #[arg(long)]
        improper: bool,
        /// Quantify over all ideals rather than graded ones.
        #[arg(long)]
        all_ideals: bool,
        #[arg(long, value_enum, default_value_t = Product::Subgroup)]
        product: Product,
    },
    /// Sweep claims over structure files and write a JSON-lines report.
    Check {
        files: Vec<PathBuf>,
        /// Comma-separated claim ids, or `all`.
        #[arg(long, default_value = "all")]
        claims: String,
        /// Add the bundled default corpus.
        #[arg(long)]
        default_corpus: bool,
        /// Form direct products of corpus pairs sharing a monoid.
        #[arg(long)]
        product_pairs: bool,
        /// Order bound for products.
        #[arg(long, default_value_t = MAX_ORDER)]
        max_order: usize,
        /// Exit with status 2 when a claim is falsified.
        #[arg(long)]
        strict: bool,
        /// Keep every counterexample instead of the first five.
        #[arg(long)]
        all_counterexamples: bool,
        /// Quantify over all ideals rather than graded ones.
        #[arg(long)]
        all_ideals: bool,
        /// Find the unique maximal ideal among graded ideals only.
        #[arg(long)]
        maximal_in_domain: bool,
        #[arg(long, value_enum, default_value_t = Product::Subgroup)]
        product: Product,
        /// Report path (default: stdout, or report.jsonl under $NRGRADE_OUT_DIR).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate the gradings of a near-ring by a monoid.
    Gradings {
        file: PathBuf,
        #[arg(long)]
        monoid: PathBuf,
    },
    /// Search for a factorization into weakly or almost prime ideals.
    Factor {
        file: PathBuf,
        /// Ideal as a bitmask (decimal or 0x-prefixed hex).
        #[arg(long, value_parser = parse_bitmask)]
        ideal: u64,
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, default_value_t = 3)]
        max_len: usize,
    },
    /// Emit the bundled corpus manifest.
    Corpus {
        #[arg(long, required = true)]
        default: bool,
        /// Also write every structure file into this directory
        /// (default: $NRGRADE_OUT_DIR when set).
        #[arg(long)]
        write: Option<PathBuf>,
    },
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Kind {
    Weakly,
    Almost,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Product {
    Subgroup,
    Ideal,
}

impl From<Product> for ProductMode {
    fn from(p: Product) -> Self {
        match p {
            Product::Subgroup => ProductMode::Subgroup,
            Product::Ideal => ProductMode::Ideal,
        }
    }
}

fn parse_bitmask(s: &str) -> Result<u64, String> {
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    };
    parsed.map_err(|e| format!("invalid bitmask {s:?}: {e}"))
}

/// Failures mapped to exit codes.
enum Failure {
    Validation(anyhow::Error),
    Usage(String),
    Other(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Other(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Other(e.into())
    }
}

fn load(path: &Path) -> Result<format::Loaded, Failure> {
    format::load_structure(path).map_err(|e| match e {
        LoadError::Io { .. } => Failure::Other(e.into()),
        e => Failure::Validation(anyhow::Error::new(e).context(format!("{} is not a valid structure", path.display()))),
    })
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn lattice(loaded: format::Loaded, config: ClassifyConfig) -> Result<Lattice> {
    Lattice::new(Arc::new(loaded.gnr), config).context("ideal enumeration failed")
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    let mut stdout = BufWriter::new(io::stdout().lock());
    match cli.command {
        Command::Validate { file } => {
            let loaded = load(&file)?;
            let g = &loaded.gnr;
            writeln!(
                stdout,
                "ok: {} (order {}, monoid order {}{})",
                loaded.name,
                g.order(),
                g.monoid().order(),
                if loaded.renumbered { ", renumbered" } else { "" }
            )?;
        }
        Command::Ideals { file, graded: _, all } => {
            let loaded = load(&file)?;
            let gnr = loaded.gnr.clone();
            let l = lattice(loaded, ClassifyConfig::default())?;
            writeln!(stdout, "{:<20} {:<32} graded", "bits", "elements")?;
            for &s in l.all_ideals() {
                let info = IdealSet::analyze(&gnr, s);
                if !all && !info.flags.is_graded {
                    continue;
                }
                writeln!(stdout, "{:<20} {:<32} {}", format!("{:#x}", s.bits()), s.to_string(), yes(info.flags.is_graded))?;
            }
        }
        Command::Classify {
            file,
            improper,
            all_ideals,
            product,
        } => {
            let config = ClassifyConfig {
                domain: if all_ideals { Domain::All } else { Domain::Graded },
                product: product.into(),
                max_order: MAX_ORDER,
            };
            let l = lattice(load(&file)?, config)?;
            writeln!(stdout, "{:<32} {:<7} {:<7} {:<7} {:<7} P²∩N", "ideal", "proper", "prime", "weakly", "almost")?;
            for c in l.classify_all().context("classification failed")? {
                let cols: [String; 3] = if c.proper || improper {
                    [c.is_graded_prime, c.is_graded_weakly_prime, c.is_graded_almost_prime].map(|b| yes(b).to_string())
                } else {
                    ["n/a".into(), "n/a".into(), "n/a".into()]
                };
                writeln!(
                    stdout,
                    "{:<32} {:<7} {:<7} {:<7} {:<7} {}",
                    c.ideal.bits.to_string(),
                    yes(c.proper),
                    cols[0],
                    cols[1],
                    cols[2],
                    l.square_cap(c.ideal.bits)
                )?;
            }
        }
        Command::Check {
            files,
            claims: claim_list,
            default_corpus,
            product_pairs,
            max_order,
            strict,
            all_counterexamples,
            all_ideals,
            maximal_in_domain,
            product,
            out,
        } => {
            if max_order == 0 || max_order > MAX_ORDER {
                return Err(Failure::Usage(format!("--max-order must be in 1..={MAX_ORDER}")));
            }
            let ids: Option<Vec<String>> = if claim_list.trim() == "all" {
                None
            } else {
                let ids: Vec<String> = claim_list.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect();
                if let Some(bad) = ids.iter().find(|id| claims::find_claim(id).is_none()) {
                    return Err(Failure::Usage(format!("unknown claim {bad}")));
                }
                Some(ids)
            };
            let mut corpus: Vec<CorpusEntry> = Vec::new();
            if default_corpus {
                corpus.extend(corpus::default_corpus().context("building the default corpus")?);
            }
            for f in &files {
                let loaded = load(f)?;
                corpus.push(CorpusEntry::new(loaded.name, loaded.gnr));
            }
            if corpus.is_empty() {
                return Err(Failure::Usage("check needs structure files or --default-corpus".into()));
            }
            let config = SweepConfig {
                classify: ClassifyConfig {
                    domain: if all_ideals { Domain::All } else { Domain::Graded },
                    product: product.into(),
                    max_order,
                },
                product_pairs,
                counterexample_cap: if all_counterexamples { None } else { Some(5) },
                maximal_in_domain,
                ..SweepConfig::default()
            };
            let records = report::sweep_report(&corpus, ids.as_deref(), config).context("sweep failed")?;
            let out = out.or_else(|| std::env::var_os(OUT_DIR_VAR).map(|d| PathBuf::from(d).join("report.jsonl")));
            match &out {
                Some(path) => {
                    let mut w = BufWriter::new(File::create(path).with_context(|| format!("creating {}", path.display()))?);
                    report::write_records(&mut w, &records)?;
                    w.flush()?;
                }
                None => report::write_records(&mut stdout, &records)?,
            }
            let mut falsified = false;
            let stderr = io::stderr();
            let mut err = stderr.lock();
            for r in &records {
                if let Record::Claim(c) = r {
                    let status = match c.status {
                        Status::VerifiedOnCorpus => "verified-on-corpus",
                        Status::Falsified => {
                            falsified = true;
                            "falsified"
                        }
                    };
                    writeln!(
                        err,
                        "{:<14} {:<19} instances {:>8}  nonvacuous {:>7}  counterexamples {}",
                        c.claim_id, status, c.instances_checked, c.nonvacuous, c.counterexamples_found
                    )?;
                }
                if let Record::Golden(g) = r {
                    if !g.holds {
                        writeln!(err, "golden fact {} failed: {}", g.fact, g.detail)?;
                    }
                }
            }
            stdout.flush()?;
            if strict && falsified {
                return Ok(ExitCode::from(2));
            }
        }
        Command::Gradings { file, monoid } => {
            let loaded = load(&file)?;
            let m = format::load_monoid(&monoid).map_err(|e| match e {
                LoadError::Io { .. } => Failure::Other(e.into()),
                e => Failure::Validation(e.into()),
            })?;
            let found = enumerate_gradings(loaded.gnr.ring(), &m, MAX_ORDER).context("grading enumeration failed")?;
            for (k, g) in found.iter().enumerate() {
                let parts: Vec<String> = g.grading().parts().iter().map(|p| p.to_string()).collect();
                writeln!(stdout, "{k}: {}", parts.join(" "))?;
            }
            writeln!(stdout, "{} grading(s)", found.len())?;
        }
        Command::Factor {
            file,
            ideal,
            kind,
            max_len,
        } => {
            let l = lattice(load(&file)?, ClassifyConfig::default())?;
            let target = SubSet::from_bits(ideal);
            let kind = match kind {
                Kind::Weakly => FactorKind::Weakly,
                Kind::Almost => FactorKind::Almost,
            };
            match claims::factor_into(&l, target, kind, max_len) {
                Ok(Some(seq)) => {
                    let parts: Vec<String> = seq.iter().map(|s| s.to_string()).collect();
                    writeln!(stdout, "{target} = {}", parts.join(" · "))?;
                }
                Ok(None) => writeln!(stdout, "{target}: no factorization of length ≤ {max_len}")?,
                Err(e @ claims::FactorError::BoundExceeded { .. }) => return Err(Failure::Usage(e.to_string())),
                Err(e) => return Err(Failure::Validation(e.into())),
            }
        }
        Command::Corpus { default: _, write } => {
            let entries = corpus::default_corpus().context("building the default corpus")?;
            for m in corpus::manifest(&entries) {
                serde_json::to_writer(&mut stdout, &m).context("writing manifest")?;
                writeln!(stdout)?;
            }
            if let Some(dir) = write.or_else(|| std::env::var_os(OUT_DIR_VAR).map(PathBuf::from)) {
                std::fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
                for e in &entries {
                    let path = dir.join(format!("{}.json", e.name));
                    format::save_structure(&path, &e.name, &e.gnr).with_context(|| format!("writing {}", path.display()))?;
                }
            }
        }
    }
    stdout.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(Failure::Validation(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Other(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
