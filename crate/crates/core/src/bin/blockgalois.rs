use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use blockgalois::blocks::{block_partition, blocks_to_json};
use blockgalois::chartab::character_table;
use blockgalois::galois_action::{fixed_height_zero_set, fixed_pprime_set};
use blockgalois::verify::{
    default_corpus, parse_manifest, run_corpus, GroupSpec, Mode, RunConfig, DEFAULT_MAX_ORDER,
};
use blockgalois::{Error, Result};

/// Character tables, p-blocks and Galois-fixed character counts of finite
/// permutation groups.
#[derive(Parser)]
#[command(name = "blockgalois", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Primes to work at (repeat or separate with commas); default 2,3
    #[arg(long = "p", global = true, value_delimiter = ',')]
    p: Vec<u64>,
    /// Exponent e of sigma_e
    #[arg(long, global = true, default_value_t = 1)]
    e: u32,
    /// Write output here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads for corpus runs
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Refuse groups larger than this
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ORDER)]
    max_order: u64,
    /// Include wall-clock timings in reports
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Print the character table
    Table { group: String },
    /// Print the p-blocks
    Blocks { group: String },
    /// Print the sigma_e-fixed p'-degree and height-zero characters of each block
    Fixed { group: String },
    /// Check the principal-block criterion at p in {2, 3}
    VerifyA { group: String },
    /// Check the block-wise criterion for blocks of nontrivial defect
    VerifyB { group: String },
    /// Run the block property suite
    Suite1 { group: String },
    /// Run a corpus manifest (JSON list of group specs); default: built-in corpus
    Corpus {
        manifest: Option<PathBuf>,
        /// Modes: theorem-a, conjecture-b, suite1, count-only
        #[arg(long, value_delimiter = ',', default_value = "theorem-a")]
        mode: Vec<String>,
        /// Print the manifest instead of running it
        #[arg(long)]
        print_manifest: bool,
    },
}

impl Global {
    fn primes(&self) -> Vec<u64> {
        if self.p.is_empty() {
            vec![2, 3]
        } else {
            self.p.clone()
        }
    }

    fn config(&self, modes: Vec<Mode>) -> RunConfig {
        RunConfig {
            modes,
            primes: self.primes(),
            e: self.e,
            jobs: self.jobs,
            max_order: self.max_order,
            timings: self.timings,
        }
    }

    fn emit(&self, text: &str) -> Result<()> {
        match &self.out {
            Some(path) => std::fs::write(path, text)?,
            None => print!("{text}"),
        }
        Ok(())
    }
}

fn build(global: &Global, text: &str) -> Result<blockgalois::PermGroup> {
    let group = GroupSpec::parse_short(text)?.build()?;
    if group.order_u64().is_none_or(|n| n > global.max_order) {
        return Err(Error::ResourceCap(format!(
            "order {} exceeds {}",
            group.order(),
            global.max_order
        )));
    }
    Ok(group)
}

fn pretty(v: &Value) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn run(cli: &Cli) -> Result<i32> {
    let g = &cli.global;
    let single = |group: &str, mode: Mode| -> Result<i32> {
        let spec = GroupSpec::parse_short(group)?;
        let report = run_corpus(&[spec], &g.config(vec![mode]))?;
        g.emit(&report.to_json_string()?)?;
        Ok(report.exit_code())
    };
    match &cli.command {
        Command::Table { group } => {
            let table = character_table(&build(g, group)?)?;
            g.emit(&pretty(&table.to_json())?)?;
        }
        Command::Blocks { group } => {
            let table = character_table(&build(g, group)?)?;
            let mut out = Vec::new();
            for p in g.primes() {
                let blocks = block_partition(&table, p)?;
                out.push(json!({ "p": p, "blocks": blocks_to_json(&table, &blocks)? }));
            }
            g.emit(&pretty(&Value::Array(out))?)?;
        }
        Command::Fixed { group } => {
            let table = character_table(&build(g, group)?)?;
            let mut out = Vec::new();
            for p in g.primes() {
                for (i, b) in block_partition(&table, p)?.iter().enumerate() {
                    let pprime = fixed_pprime_set(b, i, &table, g.e)?.with_group(group.as_str());
                    let zero = fixed_height_zero_set(b, i, &table, g.e)?.with_group(group.as_str());
                    out.push(json!({ "p": p, "block": i, "defect": b.defect, "pprime": pprime, "height_zero": zero }));
                }
            }
            g.emit(&pretty(&Value::Array(out))?)?;
        }
        Command::VerifyA { group } => return single(group, Mode::TheoremA),
        Command::VerifyB { group } => return single(group, Mode::ConjectureB),
        Command::Suite1 { group } => return single(group, Mode::Suite1),
        Command::Corpus {
            manifest,
            mode,
            print_manifest,
        } => {
            let corpus = match manifest {
                Some(path) => parse_manifest(&std::fs::read_to_string(path)?)?,
                None => default_corpus(),
            };
            if *print_manifest {
                g.emit(&(serde_json::to_string_pretty(&corpus)? + "\n"))?;
                return Ok(0);
            }
            let modes = mode
                .iter()
                .map(|m| m.parse())
                .collect::<Result<Vec<Mode>>>()?;
            let report = run_corpus(&corpus, &g.config(modes))?;
            g.emit(&report.to_json_string()?)?;
            return Ok(report.exit_code());
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_resource_cap() { 3 } else { 2 })
        }
    }
}
