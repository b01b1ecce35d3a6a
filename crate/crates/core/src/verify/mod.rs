//! Corpus construction and verification of the Galois-fixed character
//! counts in principal and general blocks.

mod checks;
mod corpus;
mod spec;
mod spot;

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

pub use checks::{
    conjecture_b_from, normal_defect_fixed_set, normal_sylow_kernel_set, suite_from,
    theorem_a_from, verify_conjecture_b, verify_section1_suite, verify_theorem_a, GroupAnalysis,
    PrimeData, Status, SuiteEntry, Verdict, SUITE_CHECKS,
};
pub use corpus::{affine_f11_sl2_5, default_corpus, parse_manifest};
pub use spec::{
    read_group_text, transitive_counts, transitive_group, Construction, GroupSpec, BUNDLED_FILES,
    MAX_PSL2_Q,
};
pub use spot::{row_orbits, row_permutation, spot_check, standard_spot_checks, SpotCheck};

use crate::error::{Error, Result};
use crate::galois_action::{fixed_pprime_set, FixedSetReport};

/// Report schema identifier.
pub const REPORT_SCHEMA: &str = "blockgalois-report/1";

/// Default cap on group orders.
pub const DEFAULT_MAX_ORDER: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    TheoremA,
    ConjectureB,
    Suite1,
    CountOnly,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "theorem-a" | "theoremA" | "a" => Ok(Mode::TheoremA),
            "conjecture-b" | "conjectureB" | "b" => Ok(Mode::ConjectureB),
            "suite1" => Ok(Mode::Suite1),
            "count-only" => Ok(Mode::CountOnly),
            _ => Err(Error::InvalidArgument(format!("unknown mode {s:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub modes: Vec<Mode>,
    pub primes: Vec<u64>,
    /// `e` of `sigma_e` in count-only mode; the verification modes use `sigma_1`
    pub e: u32,
    /// worker threads; `None` uses the rayon default
    pub jobs: Option<usize>,
    pub max_order: u64,
    /// record wall-clock timings, which makes reports differ between runs
    pub timings: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            modes: vec![Mode::TheoremA],
            primes: vec![2, 3],
            e: 1,
            jobs: None,
            max_order: DEFAULT_MAX_ORDER,
            timings: false,
        }
    }
}

/// Count-only output: `Irr_{p'}(B_0)^{sigma_e}` next to `|Irr(G)|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountReport {
    pub report: FixedSetReport,
    pub irr_count: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GroupStatus {
    Ok,
    Error,
    ResourceCap,
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupReport {
    pub name: String,
    pub order: Option<String>,
    pub status: GroupStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem_a: Option<Vec<Verdict>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conjecture_b: Option<Vec<Verdict>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub suite1: Option<Vec<SuiteEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub count_only: Option<Vec<CountReport>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<String, f64>>,
}

impl GroupReport {
    fn empty(name: &str) -> Self {
        GroupReport {
            name: name.to_string(),
            order: None,
            status: GroupStatus::Ok,
            error: None,
            theorem_a: None,
            conjecture_b: None,
            suite1: None,
            count_only: None,
            timings_ms: None,
        }
    }

    fn statuses(&self) -> impl Iterator<Item = Status> + '_ {
        let verdicts = self
            .theorem_a
            .iter()
            .chain(&self.conjecture_b)
            .flatten()
            .map(|v| v.status);
        verdicts.chain(self.suite1.iter().flatten().map(|e| e.status))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub groups: usize,
    pub pass: usize,
    pub fail: usize,
    pub not_applicable: usize,
    pub skipped: usize,
    pub inconsistent: usize,
    pub errors: usize,
    pub resource_caps: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub modes: Vec<Mode>,
    pub primes: Vec<u64>,
    pub e: u32,
    pub groups: Vec<GroupReport>,
    pub summary: Summary,
}

impl Report {
    /// 0 when nothing failed, 2 on any failed check or software error, 3 when
    /// the only problems are resource caps.
    pub fn exit_code(&self) -> i32 {
        if self.summary.fail > 0 || self.summary.errors > 0 {
            2
        } else if self.summary.resource_caps > 0 {
            3
        } else {
            0
        }
    }

    pub fn to_json_string(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)? + "\n")
    }
}

fn ms(start: Instant) -> f64 {
    (start.elapsed().as_secs_f64() * 1e6).round() / 1e3
}

fn evaluate(spec: &GroupSpec, config: &RunConfig, report: &mut GroupReport) -> Result<()> {
    let mut timings = BTreeMap::new();
    let start = Instant::now();
    let group = spec.build()?;
    report.order = Some(group.order().to_string());
    if group.order_u64().is_none_or(|n| n > config.max_order) {
        return Err(Error::ResourceCap(format!(
            "order {} exceeds {}",
            group.order(),
            config.max_order
        )));
    }
    let analysis = GroupAnalysis::new(spec.name.clone(), &group)?;
    timings.insert("table".to_string(), ms(start));

    let mut primes: Vec<u64> = config.primes.clone();
    primes.sort_unstable();
    primes.dedup();
    let mut data: BTreeMap<u64, PrimeData> = BTreeMap::new();
    for &p in &primes {
        if analysis.divides_order(p) {
            let t = Instant::now();
            data.insert(p, analysis.prime_data(p)?);
            timings.insert(format!("blocks p={p}"), ms(t));
        }
    }

    for &mode in &config.modes {
        let t = Instant::now();
        match mode {
            Mode::TheoremA => {
                let mut out = Vec::new();
                for &p in &primes {
                    out.push(match data.get(&p) {
                        Some(d) => theorem_a_from(&analysis, d)?,
                        None => verify_theorem_a(&analysis, p)?,
                    });
                }
                report.theorem_a = Some(out);
            }
            Mode::ConjectureB => {
                let mut out = Vec::new();
                for &p in &primes {
                    out.extend(match data.get(&p) {
                        Some(d) => conjecture_b_from(&analysis, d)?,
                        None => verify_conjecture_b(&analysis, p)?,
                    });
                }
                report.conjecture_b = Some(out);
            }
            Mode::Suite1 => {
                let mut out = Vec::new();
                for &p in &primes {
                    out.extend(match data.get(&p) {
                        Some(d) => suite_from(&analysis, d)?,
                        None => verify_section1_suite(&analysis, p)?,
                    });
                }
                report.suite1 = Some(out);
            }
            Mode::CountOnly => {
                let mut out = Vec::new();
                for &p in &primes {
                    let Some(d) = data.get(&p) else { continue };
                    let r = fixed_pprime_set(d.principal(), 0, &analysis.table, config.e)?
                        .with_group(&spec.name);
                    out.push(CountReport {
                        report: r,
                        irr_count: analysis.table.len(),
                    });
                }
                report.count_only = Some(out);
            }
        }
        timings.insert(format!("{mode:?}"), ms(t));
    }
    if config.timings {
        report.timings_ms = Some(timings);
    }
    Ok(())
}

/// Runs every mode on one group. Errors and panics are recorded in the
/// report instead of being propagated.
pub fn run_group(spec: &GroupSpec, config: &RunConfig) -> GroupReport {
    let mut report = GroupReport::empty(&spec.name);
    let outcome = catch_unwind(AssertUnwindSafe(|| evaluate(spec, config, &mut report)));
    let err = match outcome {
        Ok(Ok(())) => return report,
        Ok(Err(e)) => e,
        Err(panic) => {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Error::Internal(msg)
        }
    };
    let order = report.order.take();
    let mut report = GroupReport::empty(&spec.name);
    report.order = order;
    report.status = if err.is_resource_cap() {
        GroupStatus::ResourceCap
    } else {
        GroupStatus::Error
    };
    report.error = Some(err.to_string());
    report
}

/// Runs a corpus on a worker pool. Entries are processed independently and
/// merged in corpus order, so the report does not depend on `jobs`.
pub fn run_corpus(corpus: &[GroupSpec], config: &RunConfig) -> Result<Report> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = config.jobs {
        builder = builder.num_threads(j.max(1));
    }
    let pool = builder
        .build()
        .map_err(|e| Error::Internal(e.to_string()))?;
    let groups: Vec<GroupReport> =
        pool.install(|| corpus.par_iter().map(|s| run_group(s, config)).collect());
    let mut summary = Summary {
        groups: groups.len(),
        ..Summary::default()
    };
    for g in &groups {
        match g.status {
            GroupStatus::Error => summary.errors += 1,
            GroupStatus::ResourceCap => summary.resource_caps += 1,
            GroupStatus::Ok => {}
        }
        for s in g.statuses() {
            match s {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::NotApplicable => summary.not_applicable += 1,
                Status::Skipped => summary.skipped += 1,
                Status::Inconsistent => summary.inconsistent += 1,
            }
        }
    }
    let mut primes = config.primes.clone();
    primes.sort_unstable();
    primes.dedup();
    Ok(Report {
        schema: REPORT_SCHEMA,
        modes: config.modes.clone(),
        primes,
        e: config.e,
        groups,
        summary,
    })
}
