//! Formula-versus-solver surveys over family grids, and random bound-chain checks.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::constructions::{bistar_printed_value, chi_ed_formula, ConstructionError};
use crate::family::{Family, FamilyKind, GraphClassSpec};
use crate::graph::Graph;
use crate::partitions::chi_ed_complete_bipartite;
use crate::solver::{solve, Budget, ConstraintSet, SolveError};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");
pub const DEFAULT_SEED: u64 = 0x5eed_2024;

/// A family row of the survey. `BiStarPrinted` surveys bi-stars against the
/// order-sensitive expression `2 + ⌈a/2⌉ + ⌊b/2⌋` so its divergences show up.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SurveyFamily {
    Base(FamilyKind),
    Complement(FamilyKind),
    BiStarPrinted,
}

impl SurveyFamily {
    pub fn all() -> Vec<SurveyFamily> {
        let mut all: Vec<_> = FamilyKind::ALL
            .iter()
            .map(|&k| SurveyFamily::Base(k))
            .collect();
        all.push(SurveyFamily::BiStarPrinted);
        all.extend(
            [
                FamilyKind::Path,
                FamilyKind::Cycle,
                FamilyKind::BiStar,
                FamilyKind::Wheel,
                FamilyKind::Helm,
            ]
            .map(SurveyFamily::Complement),
        );
        all.sort();
        all
    }

    fn kind(self) -> FamilyKind {
        match self {
            SurveyFamily::Base(k) | SurveyFamily::Complement(k) => k,
            SurveyFamily::BiStarPrinted => FamilyKind::BiStar,
        }
    }
}

impl fmt::Display for SurveyFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurveyFamily::Base(k) => write!(f, "{k}"),
            SurveyFamily::Complement(k) => write!(f, "complement-{k}"),
            SurveyFamily::BiStarPrinted => f.write_str("bistar-printed"),
        }
    }
}

impl FromStr for SurveyFamily {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "bistar-printed" {
            return Ok(SurveyFamily::BiStarPrinted);
        }
        match s.strip_prefix("complement-") {
            Some(rest) => rest.parse().map(SurveyFamily::Complement),
            None => s.parse().map(SurveyFamily::Base),
        }
    }
}

/// Parses a comma-separated family list; `all` expands to every family.
pub fn parse_families(list: &str) -> Result<Vec<SurveyFamily>, String> {
    let mut out = Vec::new();
    for item in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        if item == "all" {
            out.extend(SurveyFamily::all());
        } else {
            out.push(item.parse()?);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Agree,
    Diverge,
    OutOfRangeInfo,
    Unknown,
}

impl Verdict {
    pub fn classify(formula: Option<usize>, in_range: bool, oracle: Option<usize>) -> Self {
        match (formula, oracle) {
            (Some(_), _) if !in_range => Verdict::OutOfRangeInfo,
            (None, _) => Verdict::OutOfRangeInfo,
            (Some(_), None) => Verdict::Unknown,
            (Some(f), Some(o)) if f == o => Verdict::Agree,
            (Some(_), Some(_)) => Verdict::Diverge,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Agree => "agree",
            Verdict::Diverge => "diverge",
            Verdict::OutOfRangeInfo => "out-of-range-info",
            Verdict::Unknown => "unknown",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

fn formula_text(v: Option<usize>) -> String {
    v.map_or_else(|| "none".to_owned(), |v| v.to_string())
}

fn oracle_text(v: Option<usize>) -> String {
    v.map_or_else(|| "unknown(budget)".to_owned(), |v| v.to_string())
}

fn ser_formula<S: Serializer>(v: &Option<usize>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.serialize_u64(*v as u64),
        None => s.serialize_str("none"),
    }
}

fn ser_oracle<S: Serializer>(v: &Option<usize>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.serialize_u64(*v as u64),
        None => s.serialize_str("unknown(budget)"),
    }
}

/// One survey row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiscrepancyRecord {
    pub family: String,
    pub params: String,
    #[serde(serialize_with = "ser_formula")]
    pub formula: Option<usize>,
    pub in_range: bool,
    #[serde(serialize_with = "ser_oracle")]
    pub oracle: Option<usize>,
    pub verdict: Verdict,
}

impl DiscrepancyRecord {
    pub fn csv_row(&self) -> [String; 6] {
        [
            self.family.clone(),
            self.params.clone(),
            formula_text(self.formula),
            self.in_range.to_string(),
            oracle_text(self.oracle),
            self.verdict.to_string(),
        ]
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub agree: usize,
    pub diverge: usize,
    pub out_of_range_info: usize,
    pub unknown: usize,
}

impl Summary {
    fn tally(records: &[DiscrepancyRecord]) -> Self {
        let mut s = Summary {
            total: records.len(),
            ..Summary::default()
        };
        for r in records {
            match r.verdict {
                Verdict::Agree => s.agree += 1,
                Verdict::Diverge => s.diverge += 1,
                Verdict::OutOfRangeInfo => s.out_of_range_info += 1,
                Verdict::Unknown => s.unknown += 1,
            }
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurveyReport {
    pub tool_version: String,
    pub budget: u64,
    pub summary: Summary,
    pub records: Vec<DiscrepancyRecord>,
}

pub const CSV_HEADER: [&str; 6] = [
    "family", "params", "formula", "in_range", "oracle", "verdict",
];

impl SurveyReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(CSV_HEADER).expect("in-memory write");
        for r in &self.records {
            w.write_record(r.csv_row()).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }

    pub fn records_for(&self, family: &str) -> impl Iterator<Item = &DiscrepancyRecord> {
        let family = family.to_owned();
        self.records.iter().filter(move |r| r.family == family)
    }
}

#[derive(Debug, Clone)]
pub struct SurveyConfig {
    pub families: Vec<SurveyFamily>,
    /// Smallest base parameter; raised to each family's own minimum.
    pub min_size: usize,
    /// Largest value of every family parameter.
    pub max_size: usize,
    pub budget: u64,
}

impl Default for SurveyConfig {
    fn default() -> Self {
        SurveyConfig {
            families: SurveyFamily::all(),
            min_size: 1,
            max_size: 8,
            budget: Budget::DEFAULT_NODES,
        }
    }
}

fn instances(config: &SurveyConfig) -> Vec<(SurveyFamily, Family)> {
    let mut families = config.families.clone();
    families.sort();
    families.dedup();
    let mut out = Vec::new();
    for sf in families {
        let kind = sf.kind();
        let lo = config.min_size.max(kind.min_param());
        let hi = config.max_size;
        if kind.arity() == 1 {
            for p in lo..=hi {
                out.push((sf, kind.with_params(&[p]).expect("in range")));
            }
        } else {
            for a in lo..=hi {
                for b in lo..=hi {
                    out.push((sf, kind.with_params(&[a, b]).expect("in range")));
                }
            }
        }
    }
    out
}

fn formula_for(sf: SurveyFamily, family: Family) -> (Option<usize>, bool) {
    match (sf, family) {
        (SurveyFamily::BiStarPrinted, Family::BiStar(a, b)) => {
            (Some(bistar_printed_value(a, b)), a >= 2 && b >= 2)
        }
        (SurveyFamily::Base(_), Family::CompleteBipartite(a, b)) => {
            (Some(chi_ed_complete_bipartite(a, b)), true)
        }
        _ => {
            let spec = spec_of(sf, family);
            match chi_ed_formula(&spec) {
                Ok(f) => (Some(f.value), f.in_range),
                Err(ConstructionError::NoClosedForm(_)) => (None, false),
                Err(e) => panic!("grid instance {spec} rejected: {e}"),
            }
        }
    }
}

fn spec_of(sf: SurveyFamily, family: Family) -> GraphClassSpec {
    match sf {
        SurveyFamily::Complement(_) => GraphClassSpec::complemented(family),
        _ => GraphClassSpec::new(family),
    }
}

/// Evaluates one instance against the exact solver.
pub fn evaluate(sf: SurveyFamily, family: Family, budget: u64) -> DiscrepancyRecord {
    let spec = spec_of(sf, family);
    let (formula, in_range) = formula_for(sf, family);
    let g = spec.build().expect("grid instances are in range");
    let oracle = match solve(
        &g,
        ConstraintSet::EQUITABLE_DOMINATOR,
        Budget::nodes(budget),
    ) {
        Ok(r) => Some(r.value),
        Err(SolveError::BudgetExhausted { .. } | SolveError::TooLarge(_)) => None,
        Err(e) => panic!("unexpected solver error on {spec}: {e}"),
    };
    DiscrepancyRecord {
        family: sf.to_string(),
        params: family.params_label(),
        formula,
        in_range,
        oracle,
        verdict: Verdict::classify(formula, in_range, oracle),
    }
}

/// Runs the survey. Records come out ordered by family, then parameters.
pub fn run_survey(config: &SurveyConfig) -> SurveyReport {
    let budget = config.budget.max(1);
    let records: Vec<DiscrepancyRecord> = instances(config)
        .into_par_iter()
        .map(|(sf, family)| evaluate(sf, family, budget))
        .collect();
    SurveyReport {
        tool_version: TOOL_VERSION.to_owned(),
        budget,
        summary: Summary::tally(&records),
        records,
    }
}

/// χ, χ_e, χ_d, χ_ed of one graph, in that order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainRecord {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub chi: Option<usize>,
    pub chi_e: Option<usize>,
    pub chi_d: Option<usize>,
    pub chi_ed: Option<usize>,
    /// `χ ≤ χ_e ≤ χ_ed` and `χ ≤ χ_d ≤ χ_ed`; `None` if any value is unknown.
    pub holds: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainReport {
    pub seed: u64,
    pub graphs: usize,
    pub violations: usize,
    pub unknown: usize,
    pub records: Vec<ChainRecord>,
}

/// Seeded random connected graphs for bound-chain checks. Orders are drawn
/// from `1..=max_n`, edge densities from `[0.1, 0.9)`.
pub fn random_connected_corpus(count: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            let p = rng.gen_range(0.1..0.9);
            Graph::random_connected(n, p, &mut rng).expect("n ≥ 1")
        })
        .collect()
}

pub fn check_bound_chain(g: &Graph, budget: u64) -> ChainRecord {
    let value = |cs| solve(g, cs, Budget::nodes(budget)).ok().map(|r| r.value);
    let chi = value(ConstraintSet::CHROMATIC);
    let chi_e = value(ConstraintSet::EQUITABLE);
    let chi_d = value(ConstraintSet::DOMINATOR);
    let chi_ed = value(ConstraintSet::EQUITABLE_DOMINATOR);
    let holds = match (chi, chi_e, chi_d, chi_ed) {
        (Some(c), Some(e), Some(d), Some(ed)) => Some(c <= e && e <= ed && c <= d && d <= ed),
        _ => None,
    };
    ChainRecord {
        n: g.n(),
        edges: g.edges().collect(),
        chi,
        chi_e,
        chi_d,
        chi_ed,
        holds,
    }
}

pub fn run_bound_chain(count: usize, max_n: usize, seed: u64, budget: u64) -> ChainReport {
    let records: Vec<ChainRecord> = random_connected_corpus(count, max_n, seed)
        .par_iter()
        .map(|g| check_bound_chain(g, budget))
        .collect();
    ChainReport {
        seed,
        graphs: records.len(),
        violations: records.iter().filter(|r| r.holds == Some(false)).count(),
        unknown: records.iter().filter(|r| r.holds.is_none()).count(),
        records,
    }
}
