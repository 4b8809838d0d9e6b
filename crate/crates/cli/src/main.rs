mod records;
mod select;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{SystemTime, UNIX_EPOCH};

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use diraccoh::catalog::{closed_form_hd, make_spec, standard_catalog, UnipotentSpec};
use diraccoh::dirac::{necessary_condition, spin_factor, HdStatus};
use diraccoh::repr::CharacterCache;
use diraccoh::{Engine, Error, DEFAULT_BUDGET};

use records::{CatalogRecord, CheckRecord, F4Record, HdRecord, Header, Record, SCHEMA_VERSION};

#[derive(Parser, Debug)]
#[command(name = "diraccoh", version, about = "Dirac cohomology of unitary representations of complex groups")]
struct Cli {
    /// Cap on weight instances materialized by any single operation.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
    budget: u64,

    /// Character cache file, loaded before and saved after the run.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,

    /// Directory for the default cache file when `--cache` is absent.
    #[arg(long, global = true, env = "DIRACCOH_CACHE_DIR", hide_env_values = true)]
    cache_dir: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Tsv)]
    format: Format,

    /// Omit the generated-at header line.
    #[arg(long, global = true)]
    no_header: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Jsonl,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dirac cohomology of a catalog representation, e.g. `hd sp 10 metaplectic-odd`,
    /// `hd gl 5 two-column 3 2`, `hd so 7 unipotent 1 2`, `hd e 8 4A1` or `hd "so-even(1,2,spherical)"`.
    Hd {
        #[arg(required = true, num_args = 1.., allow_negative_numbers = true)]
        selector: Vec<String>,
    },
    /// The F4 parameters at infinitesimal character rho/2.
    F4Table {
        /// Only the rows marked unitary.
        #[arg(long)]
        unitary_only: bool,
    },
    /// Run a verification suite (or `all`); exits 1 if any check fails.
    Verify {
        suite: String,
        #[arg(allow_negative_numbers = true)]
        args: Vec<String>,
    },
    /// List the catalog of unipotent representations.
    Catalog,
}

struct Out {
    format: Format,
    lock: io::StdoutLock<'static>,
}

impl Out {
    fn header(&mut self, command: &str, enabled: bool) -> io::Result<()> {
        if !enabled {
            return Ok(());
        }
        let h = Header {
            schema_version: SCHEMA_VERSION,
            tool: "diraccoh".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            command: command.into(),
            generated_unix: SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs()),
        };
        match self.format {
            Format::Tsv => {
                writeln!(self.lock, "# {} {} {} generated_unix={}", h.tool, h.version, h.command, h.generated_unix)
            }
            Format::Jsonl => writeln!(self.lock, "{}", serde_json::to_string(&h)?),
        }
    }

    fn records<R: Record>(&mut self, rows: &[R]) -> io::Result<()> {
        match self.format {
            Format::Tsv => {
                writeln!(self.lock, "{}", R::columns().join("\t"))?;
                for r in rows {
                    let cells: Vec<String> = r.cells().into_iter().map(|c| c.replace(['\t', '\n'], " ")).collect();
                    writeln!(self.lock, "{}", cells.join("\t"))?;
                }
            }
            Format::Jsonl => {
                for r in rows {
                    writeln!(self.lock, "{}", serde_json::to_string(r)?)?;
                }
            }
        }
        self.lock.flush()
    }
}

fn hd_record(engine: &Engine, spec: &UnipotentSpec) -> diraccoh::Result<HdRecord> {
    let nc = necessary_condition(&spec.system, spec.lambda())?;
    let base = HdRecord {
        schema_version: SCHEMA_VERSION,
        label: spec.label(),
        system: spec.system.label().to_string(),
        two_lambda: spec.two_lambda()?.to_string(),
        status: HdStatus::Undetermined.to_string(),
        tau: nc.tau.as_ref().map(ToString::to_string),
        per_copy_multiplicity: None,
        spin_factor: spin_factor(&spec.system),
        total_multiplicity: None,
        contributing_mu: Vec::new(),
        closed_form_agrees: None,
        unitarity: spec.unitary.to_string(),
        provenance: spec.provenance.clone(),
    };
    if spec.ktypes.is_none() {
        return Ok(HdRecord { status: if nc.holds() { base.status } else { HdStatus::Zero.to_string() }, ..base });
    }
    let r = engine.hd_of_spec(spec)?;
    let closed = closed_form_hd(spec).ok();
    let agrees = match &closed {
        Some(_) => Some(engine.crosscheck(spec)?.agree),
        None => None,
    };
    Ok(HdRecord {
        status: r.status.to_string(),
        tau: r.summands.keys().next().map(ToString::to_string).or(base.tau),
        per_copy_multiplicity: Some(r.per_copy_multiplicity()),
        total_multiplicity: Some(r.total_multiplicity()),
        contributing_mu: r.contributions.iter().map(|(mu, m)| format!("{mu}:{m}")).collect(),
        closed_form_agrees: agrees,
        ..base
    })
}

fn f4_records(engine: &Engine, unitary_only: bool) -> diraccoh::Result<Vec<F4Record>> {
    Ok(engine
        .f4_table()?
        .into_iter()
        .filter(|r| !unitary_only || r.row.unitary)
        .map(|r| F4Record {
            schema_version: SCHEMA_VERSION,
            row: r.row.index,
            lambda_r: r.row.lambda_r.to_string(),
            printed_mu: r.row.printed_mu.to_string(),
            printed_nu: r.row.printed_nu.to_string(),
            unitary: r.row.unitary,
            mu: r.mu.to_string(),
            nu: r.nu.to_string(),
            printed_mu_conjugate: r.printed_mu_conjugate,
            printed_pair_conjugate: r.printed_pair_conjugate,
            duplicate_of: r.duplicate_of,
            weight_multiplicity: r.weight_multiplicity,
            e_rho_multiplicity: r.e_rho_multiplicity,
            exterior_multiplicity: r.exterior_multiplicity,
            inducing: r.inducing.map(|i| i.to_string()),
            mu_prime: r.row.mu_prime.map(|w| w.to_string()),
        })
        .collect())
}

fn catalog_records() -> diraccoh::Result<Vec<CatalogRecord>> {
    standard_catalog()
        .into_iter()
        .map(|f| {
            let spec = make_spec(f)?;
            Ok(CatalogRecord {
                schema_version: SCHEMA_VERSION,
                label: spec.label(),
                system: spec.system.label().to_string(),
                lambda_l: spec.parameter.lambda_l.to_string(),
                lambda_r: spec.parameter.lambda_r.to_string(),
                two_lambda: spec.two_lambda()?.to_string(),
                ktypes: spec.ktypes.as_ref().map(ToString::to_string),
                unitarity: spec.unitary.to_string(),
                provenance: spec.provenance.clone(),
            })
        })
        .collect()
}

/// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 budget.
fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::BudgetExceeded { .. }) => 3,
        Some(Error::Cache(_) | Error::Inconsistent(_)) => 1,
        Some(_) => 2,
        None if err.downcast_ref::<io::Error>().is_some() => 1,
        None => 2,
    }
}

fn cache_path(cli: &Cli) -> Option<PathBuf> {
    cli.cache.clone().or_else(|| cli.cache_dir.as_ref().map(|d| d.join("characters.cache")))
}

fn run(cli: &Cli) -> anyhow::Result<bool> {
    let cache_file = cache_path(cli);
    let cache = match &cache_file {
        Some(p) if p.exists() => CharacterCache::load(p).with_context(|| format!("loading {}", p.display()))?,
        _ => CharacterCache::new(),
    };
    let cache = Arc::new(cache);
    let engine = Engine::new().budget(cli.budget).cache(cache.clone());
    let mut out = Out { format: cli.format, lock: io::stdout().lock() };
    let ok = match &cli.command {
        Command::Hd { selector } => {
            let spec = select::spec_from_selector(selector)?;
            let rec = hd_record(&engine, &spec)?;
            out.header("hd", !cli.no_header)?;
            out.records(&[rec])?;
            true
        }
        Command::F4Table { unitary_only } => {
            let rows = f4_records(&engine, *unitary_only)?;
            out.header("f4-table", !cli.no_header)?;
            out.records(&rows)?;
            true
        }
        Command::Verify { suite, args } => {
            let checks = engine.verify(suite, args)?;
            let rows: Vec<CheckRecord> = checks
                .iter()
                .map(|c| CheckRecord {
                    schema_version: SCHEMA_VERSION,
                    suite: c.suite.to_string(),
                    case: c.case.clone(),
                    passed: c.passed,
                    detail: c.detail.clone(),
                })
                .collect();
            out.header("verify", !cli.no_header)?;
            out.records(&rows)?;
            let failed = checks.iter().filter(|c| !c.passed).count();
            eprintln!("{} checks, {} failed", checks.len(), failed);
            failed == 0
        }
        Command::Catalog => {
            let rows = catalog_records()?;
            out.header("catalog", !cli.no_header)?;
            out.records(&rows)?;
            true
        }
    };
    if let Some(p) = &cache_file {
        if let Some(dir) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
            std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        }
        cache.save(p).with_context(|| format!("saving {}", p.display()))?;
    }
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
