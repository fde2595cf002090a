//! `plotkin`: build codes from recipes, bound their minimum distance, and
//! scan bounds tables for Plotkin sums.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use plotkin_core::codes::LinearCode;
use plotkin_core::distance::{
    low_weight_witness, min_distance_bz, min_distance_exhaustive, DEFAULT_BZ_BUDGET,
};
use plotkin_core::matrix::Mat;
use plotkin_core::recipe::{eval_recipe_with, parse_recipe};
use plotkin_core::search::{best_by_cell, findings_tsv, plotkin_scan, shortenings, stats, Class};
use plotkin_core::tables::{BoundsTable, FIELD_ORDERS};

const DEFAULT_TABLE: &str = "fixtures/paper_sixteen.tbl";
const DEFAULT_WITNESS_BUDGET: u64 = 10_000_000;

#[derive(Parser)]
#[command(name = "plotkin", version, about = "Linear codes, Plotkin sums and bounds tables")]
struct Cli {
    /// Worker threads for the distance and scan engines (default: all cores).
    #[arg(long, global = true, env = "PLOTKIN_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a recipe; print [n,k] and the distance knowledge.
    Eval {
        recipe: PathBuf,
        /// Write the generator matrix here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Bounds table whose entries are trusted for ingredient codes.
        #[arg(long, default_value = DEFAULT_TABLE)]
        table: PathBuf,
        /// Do not consult any bounds table.
        #[arg(long, conflicts_with = "table")]
        no_table: bool,
    },
    /// Compute or bound the minimum distance of a generator matrix file.
    Distance {
        matrix: PathBuf,
        #[arg(long, value_enum)]
        method: Method,
        /// Codeword evaluations allowed (bz: 1e9, witness: 1e7 by default).
        #[arg(long)]
        budget: Option<u64>,
        /// Witness search stops at a codeword of this weight or less.
        #[arg(long, default_value_t = 1)]
        target: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Classify every Plotkin sum of table entries against the table.
    Scan {
        #[arg(long)]
        table: PathBuf,
        #[arg(long)]
        q: u32,
        /// Smallest ingredient length.
        #[arg(long)]
        nmin: Option<usize>,
        /// Largest ingredient length (default: half the table limit).
        #[arg(long)]
        nmax: Option<usize>,
        /// Also classify shortenings of each sum that land on a table entry.
        #[arg(long)]
        shorten: bool,
        /// Write the findings TSV here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Per-field counts of even-length cells and cells a Plotkin sum reaches.
    Stats {
        #[arg(long)]
        table: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Exhaustive,
    Bz,
    Witness,
}

/// A failure caused by input data rather than command-line usage.
struct DataError(String);

impl<E: std::fmt::Display> From<E> for DataError {
    fn from(e: E) -> DataError {
        DataError(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    if let Some(n) = cli.threads {
        if n == 0 {
            eprintln!("error: --threads must be at least 1");
            return ExitCode::from(1);
        }
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(DataError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<String, DataError> {
    match command {
        Command::Eval { recipe, out, table, no_table } => eval(&recipe, out.as_deref(), (!no_table).then_some(&table)),
        Command::Distance { matrix, method, budget, target, seed } => {
            let text = read(&matrix)?;
            let code = LinearCode::from_generator(Mat::parse(&text).map_err(|e| in_file(&matrix, e))?)?;
            let r = match method {
                Method::Exhaustive => min_distance_exhaustive(&code)?,
                Method::Bz => min_distance_bz(&code, budget.unwrap_or(DEFAULT_BZ_BUDGET))?,
                Method::Witness => low_weight_witness(&code, target, budget.unwrap_or(DEFAULT_WITNESS_BUDGET), seed)?,
            };
            let mut s = format!("{code} {r}\n");
            if matches!(method, Method::Witness) {
                let _ = writeln!(s, "seed {seed}");
            }
            if let Some(w) = &r.witness {
                let symbols: Vec<String> = w.symbols.iter().map(|x| x.to_string()).collect();
                let _ = writeln!(s, "witness weight {}: {}", w.weight, symbols.join(" "));
            }
            Ok(s)
        }
        Command::Scan { table, q, nmin, nmax, shorten, out } => {
            let t = BoundsTable::load(&table)?;
            let default = plotkin_core::search::default_range(q);
            let range = nmin.unwrap_or(*default.start())..=nmax.unwrap_or(*default.end());
            let mut findings = plotkin_scan(&t, q, Some(range));
            if shorten {
                let extra = shortenings(&t, &findings);
                findings.extend(extra);
            }
            let tsv = findings_tsv(&findings);
            let best = best_by_cell(&findings);
            let count = |c: Class| best.values().filter(|f| f.class == c).count();
            let summary = format!(
                "{} findings; cells: {} Improves, {} Matches, {} Below\n",
                findings.len(),
                count(Class::Improves),
                count(Class::Matches),
                count(Class::Below)
            );
            match out {
                Some(path) => {
                    std::fs::write(&path, tsv).map_err(|e| in_file(&path, e))?;
                    Ok(summary)
                }
                None => {
                    eprint!("{summary}");
                    Ok(tsv)
                }
            }
        }
        Command::Stats { table } => {
            let t = BoundsTable::load(&table)?;
            let mut s = String::from("q\t# n even\t# Plotkin sum\t%\n");
            for q in FIELD_ORDERS {
                let st = stats(&t, q);
                let _ = writeln!(s, "{q}\t{}\t{}\t{}", st.total_even, st.achievable, st.percent());
            }
            Ok(s)
        }
    }
}

fn eval(recipe: &Path, out: Option<&Path>, table: Option<&PathBuf>) -> Result<String, DataError> {
    let text = read(recipe)?;
    let ast = parse_recipe(&text).map_err(|e| in_file(recipe, e))?;
    let table = match table {
        Some(p) if p.as_os_str() == DEFAULT_TABLE && !p.exists() => None,
        Some(p) => Some(BoundsTable::load(p)?),
        None => None,
    };
    let dir = recipe.parent().unwrap_or(Path::new("."));
    let e = eval_recipe_with(&ast, dir, table.as_ref()).map_err(|e| in_file(recipe, e))?;
    let c = &e.code;
    let mut s = format!("[{},{}] over GF({}) {} (propagated", c.n(), c.k(), c.field().order(), c.distance());
    if !e.table_sourced.is_empty() {
        let _ = write!(s, "; table bounds for {}", e.table_sourced.join(", "));
    }
    s.push_str(")\n");
    if let Some(path) = out {
        std::fs::write(path, c.generator().to_text()).map_err(|e| in_file(path, e))?;
    }
    Ok(s)
}

fn read(path: &Path) -> Result<String, DataError> {
    std::fs::read_to_string(path).map_err(|e| in_file(path, e))
}

fn in_file(path: &Path, e: impl std::fmt::Display) -> DataError {
    DataError(format!("{}: {e}", path.display()))
}
