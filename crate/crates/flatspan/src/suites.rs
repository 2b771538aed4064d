//! Verification suites over exact finite claims, with deterministic reports.
//!
//! Every suite returns a `SuiteReport`: parameters, case count, failures
//! (each carrying a full reproduction witness in exact rationals), and
//! observations. Reports serialize to JSON (canonical key order) or CSV and
//! are byte-identical across runs; all randomness flows through an explicit
//! seed.

use crate::constructions;
use crate::essdim;
use crate::flat::Flat;
use crate::incidence::{
    count_independent_lists, is_alpha_degenerate, is_essentially_alpha_degenerate,
    is_gamma_saturated, rich_profile, spanned_flats, IncidenceError,
};
use crate::point::Point;
use crate::pointset::Configuration;
use crate::procedures::{partition_cover, PartitionResult};
use crate::scalar::{format_scalar, Scalar};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use thiserror::Error;

pub const REPORT_SCHEMA: u32 = 1;

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error("parameter error: {0}")]
    Parameter(String),
    #[error(transparent)]
    Incidence(#[from] IncidenceError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteFailure {
    /// Reproduction parameters for the failing case.
    pub case: String,
    /// The exact values that violated the assertion.
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub schema: u32,
    pub suite: String,
    pub params: BTreeMap<String, String>,
    pub cases_run: usize,
    pub failures: Vec<SuiteFailure>,
    pub observations: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub table: Vec<BTreeMap<String, String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub banner: Option<String>,
}

impl SuiteReport {
    fn new(suite: &str) -> Self {
        SuiteReport {
            schema: REPORT_SCHEMA,
            suite: suite.to_string(),
            params: BTreeMap::new(),
            cases_run: 0,
            failures: Vec::new(),
            observations: BTreeMap::new(),
            table: Vec::new(),
            banner: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("report serialization");
        text.push('\n');
        text
    }

    /// Key,value lines for the scalar fields, then the table as a CSV block.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let mut put = |k: &str, v: &str| {
            let _ = writeln!(out, "{},{}", csv_escape(k), csv_escape(v));
        };
        put("schema", &self.schema.to_string());
        put("suite", &self.suite);
        for (k, v) in &self.params {
            put(&format!("param.{k}"), v);
        }
        put("cases_run", &self.cases_run.to_string());
        put("passed", if self.passed() { "true" } else { "false" });
        for (i, f) in self.failures.iter().enumerate() {
            put(&format!("failure.{i}.case"), &f.case);
            put(&format!("failure.{i}.witness"), &f.witness);
        }
        for (k, v) in &self.observations {
            put(&format!("observation.{k}"), v);
        }
        if let Some(banner) = &self.banner {
            put("banner", banner);
        }
        if !self.table.is_empty() {
            out.push('\n');
            let headers: Vec<&String> = self.table[0].keys().collect();
            let header_line: Vec<String> =
                headers.iter().map(|h| csv_escape(h)).collect();
            out.push_str(&header_line.join(","));
            out.push('\n');
            for row in &self.table {
                let line: Vec<String> = headers
                    .iter()
                    .map(|h| csv_escape(row.get(*h).map(String::as_str).unwrap_or("")))
                    .collect();
                out.push_str(&line.join(","));
                out.push('\n');
            }
        }
        out
    }

    fn fail(&mut self, case: String, witness: String) {
        self.failures.push(SuiteFailure { case, witness });
    }
}

fn csv_escape(field: &str) -> String {
    if field.contains([',', '"', '\n']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

pub fn render_report(report: &SuiteReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => report.to_json(),
        ReportFormat::Csv => report.to_csv(),
    }
}

pub fn save_report(
    report: &SuiteReport,
    path: &Path,
    format: ReportFormat,
) -> std::io::Result<()> {
    fs::write(path, render_report(report, format))
}

fn rat(n: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn flat_label(flat: &Flat) -> String {
    let rows: Vec<String> = flat
        .basis()
        .iter()
        .map(|row| {
            let coords: Vec<String> = row.iter().map(format_scalar).collect();
            format!("[{}]", coords.join(", "))
        })
        .collect();
    format!("dim {} basis {{{}}}", flat.dim(), rows.join(", "))
}

fn random_point(rng: &mut ChaCha8Rng, ambient: usize) -> Point {
    loop {
        let coords: Vec<i64> = (0..=ambient).map(|_| rng.gen_range(-9..=9)).collect();
        if coords.iter().any(|&c| c != 0) {
            return Point::from_integers(&coords).expect("nonzero vector");
        }
    }
}

fn random_flat(rng: &mut ChaCha8Rng, ambient: usize) -> Flat {
    let count = rng.gen_range(0..=ambient + 1);
    if count == 0 {
        return Flat::empty(ambient);
    }
    let points: Vec<Point> = (0..count).map(|_| random_point(rng, ambient)).collect();
    Flat::span(ambient, &points).expect("same ambient")
}

/// Checks dim(join) + dim(meet) = dim + dim on random flat pairs, and the
/// family bound dim(join of H) <= |H| - 1 + sum of dims on random families of
/// size up to 4, all in P^4.
pub fn verify_dim_identities(seed: u64, trials: usize) -> SuiteReport {
    let ambient = 4;
    let mut report = SuiteReport::new("dim_identities");
    report.params.insert("seed".into(), seed.to_string());
    report.params.insert("trials".into(), trials.to_string());
    report
        .params
        .insert("ambient_dim".into(), ambient.to_string());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    for case in 0..trials {
        let a = random_flat(&mut rng, ambient);
        let b = random_flat(&mut rng, ambient);
        let join = a.join(&b).expect("same ambient");
        let meet = a.meet(&b).expect("same ambient");
        report.cases_run += 1;
        if join.dim() + meet.dim() != a.dim() + b.dim() {
            report.fail(
                format!("pair case {case}, seed {seed}"),
                format!(
                    "dim(join) {} + dim(meet) {} != {} + {}; A = {}, B = {}",
                    join.dim(),
                    meet.dim(),
                    a.dim(),
                    b.dim(),
                    flat_label(&a),
                    flat_label(&b)
                ),
            );
        }
    }

    let families = trials / 5;
    for case in 0..families {
        let size = rng.gen_range(1..=4);
        let flats: Vec<Flat> = (0..size).map(|_| random_flat(&mut rng, ambient)).collect();
        let mut join = Flat::empty(ambient);
        let mut dim_sum: i64 = 0;
        for f in &flats {
            join = join.join(f).expect("same ambient");
            dim_sum += f.dim();
        }
        report.cases_run += 1;
        if join.dim() > size as i64 - 1 + dim_sum {
            report.fail(
                format!("family case {case}, seed {seed}"),
                format!(
                    "dim(join) {} > |H| - 1 + sum {} for sizes {:?}",
                    join.dim(),
                    size as i64 - 1 + dim_sum,
                    flats.iter().map(Flat::dim).collect::<Vec<_>>()
                ),
            );
        }
    }
    report
        .observations
        .insert("eq1_pairs".into(), trials.to_string());
    report
        .observations
        .insert("eq2_families".into(), families.to_string());
    report
}

/// Counts r-rich alpha-degenerate k-flats and checks the multiset bound
/// count <= (1 - alpha)^(-k) n^(k+1) r^(-k-1), plus the per-flat ordered-list
/// lower bound for every k' <= k, all in exact rationals.
pub fn verify_rich_degenerate_bound<C: Configuration>(
    config: &C,
    k: usize,
    r: u64,
    alpha: &Scalar,
) -> Result<SuiteReport, SuiteError> {
    if !(alpha > &BigRational::zero() && alpha < &BigRational::one()) {
        return Err(SuiteError::Parameter(format!(
            "alpha must lie in (0, 1), got {}",
            format_scalar(alpha)
        )));
    }
    if r < 1 {
        return Err(SuiteError::Parameter("r must be at least 1".into()));
    }
    let mut report = SuiteReport::new("rich_degenerate_bound");
    report.params.insert("k".into(), k.to_string());
    report.params.insert("r".into(), r.to_string());
    report
        .params
        .insert("alpha".into(), format_scalar(alpha));
    let n = config.total_weight();
    report.observations.insert("n".into(), n.to_string());

    let inventory = spanned_flats(config, k)?;
    let one_minus = BigRational::one() - alpha;
    let mut qualifying: Vec<&Flat> = Vec::new();
    for (flat, inc) in inventory.iter() {
        if inc.weight >= r && is_alpha_degenerate(flat, config, alpha).expect("alpha in range") {
            qualifying.push(flat);
        }
    }
    let count = qualifying.len();
    report
        .observations
        .insert("rich_degenerate_count".into(), count.to_string());

    // count * (1 - alpha)^k * r^(k+1) <= n^(k+1)
    let lhs = rat(count as u64) * one_minus.pow(k as i32) * rat(r).pow(k as i32 + 1);
    let rhs = rat(n).pow(k as i32 + 1);
    let bound = &rhs / (one_minus.pow(k as i32) * rat(r).pow(k as i32 + 1));
    report
        .observations
        .insert("outer_bound".into(), format_scalar(&bound));
    report.cases_run += 1;
    if lhs > rhs {
        report.fail(
            format!("outer bound, k = {k}, r = {r}, alpha = {}", format_scalar(alpha)),
            format!(
                "count {count} exceeds (1 - alpha)^(-k) n^(k+1) r^(-k-1) = {}",
                format_scalar(&bound)
            ),
        );
    }

    for flat in qualifying {
        let inside = config.restrict_to(flat);
        for k_prime in 0..=k {
            let lists = count_independent_lists(&inside, k_prime);
            let needed = one_minus.pow(k_prime as i32) * rat(r).pow(k_prime as i32 + 1);
            report.cases_run += 1;
            if BigRational::from_integer(BigInt::from(lists)) < needed {
                report.fail(
                    format!("inner bound, k' = {k_prime}, flat {}", flat_label(flat)),
                    format!(
                        "{lists} independent lists < (1 - alpha)^k' r^(k'+1) = {}",
                        format_scalar(&needed)
                    ),
                );
            }
        }
    }
    Ok(report)
}

/// Asserts essentially-alpha-degenerate => alpha-degenerate over every
/// spanned k-flat, and records the flats witnessing the strict converse gap
/// (alpha-degenerate but not essentially so).
pub fn verify_degeneracy_implication<C: Configuration>(
    config: &C,
    k: usize,
    alpha: &Scalar,
) -> Result<SuiteReport, SuiteError> {
    if !alpha.is_positive() {
        return Err(SuiteError::Parameter(format!(
            "alpha must be positive, got {}",
            format_scalar(alpha)
        )));
    }
    let mut report = SuiteReport::new("degeneracy_implication");
    report.params.insert("k".into(), k.to_string());
    report
        .params
        .insert("alpha".into(), format_scalar(alpha));
    let inventory = spanned_flats(config, k)?;
    let mut gap_witnesses = Vec::new();
    for (flat, _) in inventory.iter() {
        let plain = is_alpha_degenerate(flat, config, alpha).expect("alpha positive");
        let essential =
            is_essentially_alpha_degenerate(flat, config, alpha).expect("alpha positive");
        report.cases_run += 1;
        if essential && !plain {
            report.fail(
                format!("flat {}", flat_label(flat)),
                "essentially-alpha-degenerate but not alpha-degenerate".into(),
            );
        }
        if plain && !essential {
            gap_witnesses.push(flat_label(flat));
        }
    }
    report
        .observations
        .insert("gap_witnesses".into(), gap_witnesses.len().to_string());
    if let Some(first) = gap_witnesses.first() {
        report
            .observations
            .insert("first_gap_witness".into(), first.clone());
    }
    Ok(report)
}

/// Exercises the extremal constructions: the flat-plus-line containment and
/// count bound, the odd-k rich flat from k lines, and the partition
/// trichotomy on the natural covers of those configurations.
pub fn verify_beck_constructions(k: usize) -> Result<SuiteReport, SuiteError> {
    if k < 2 {
        return Err(SuiteError::Parameter(format!(
            "constructions need k >= 2, got {k}"
        )));
    }
    let mut report = SuiteReport::new("beck_constructions");
    report.params.insert("k".into(), k.to_string());
    let n = 4 * k;

    // (a) Flat plus line: every spanned k-flat contains one of the parts.
    let family = constructions::flat_plus_line_family(n, k, k + 1)
        .map_err(|e| SuiteError::Parameter(e.to_string()))?;
    let inventory = spanned_flats(&family.points, k)?;
    let half = n as u64 / 2;
    let choose: u64 = binomial(half, k as u64 - 1);
    report
        .observations
        .insert("flat_plus_line_count".into(), inventory.len().to_string());
    report
        .observations
        .insert("flat_plus_line_bound".into(), (half + choose).to_string());
    report.cases_run += 1;
    if inventory.len() as u64 > half + choose {
        report.fail(
            format!("flat_plus_line({n}, {k}) count"),
            format!("{} spanned flats exceed n/2 + C(n/2, k-1) = {}", inventory.len(), half + choose),
        );
    }
    for (flat, _) in inventory.iter() {
        report.cases_run += 1;
        if !(flat.contains_flat(&family.gamma) || flat.contains_flat(&family.line)) {
            report.fail(
                format!("flat_plus_line({n}, {k}) containment"),
                format!("spanned flat misses both parts: {}", flat_label(flat)),
            );
        }
    }
    let fpl_cover =
        essdim::Cover::from_flats(vec![family.gamma.clone(), family.line.clone()]);
    report.cases_run += 1;
    match partition_cover(&fpl_cover, k).map_err(|e| SuiteError::Parameter(e.to_string()))? {
        PartitionResult::Partitioned { .. } => {}
        other => report.fail(
            format!("flat_plus_line({n}, {k}) partition"),
            format!("expected a partition, got {other:?}"),
        ),
    }

    // (b) k pairwise skew lines; for odd k some k-flat is (k+1)n/(2k)-rich.
    if k % 2 == 1 {
        let lines_family = constructions::k_lines_family(n, k, 2 * k - 1)
            .map_err(|e| SuiteError::Parameter(e.to_string()))?;
        let inv = spanned_flats(&lines_family.points, k)?;
        let max_weight = inv.max_weight();
        let threshold = rat((k as u64 + 1) * n as u64) / rat(2 * k as u64);
        report
            .observations
            .insert("k_lines_max_richness".into(), max_weight.to_string());
        report.cases_run += 1;
        if rat(max_weight) < threshold {
            report.fail(
                format!("k_lines({n}, {k}) richness"),
                format!(
                    "max spanned k-flat weight {max_weight} < (k+1)n/(2k) = {}",
                    format_scalar(&threshold)
                ),
            );
        }
        let cover = essdim::Cover::from_flats(lines_family.lines.clone());
        report.cases_run += 1;
        match partition_cover(&cover, k).map_err(|e| SuiteError::Parameter(e.to_string()))? {
            PartitionResult::AllLinesOddK => {}
            other => report.fail(
                format!("k_lines({n}, {k}) partition"),
                format!("expected the all-lines marker, got {other:?}"),
            ),
        }
    } else {
        // (c even) the skew-lines family: n spanned planes and a clean split.
        let skew = constructions::skew_lines_family(12)
            .map_err(|e| SuiteError::Parameter(e.to_string()))?;
        let planes = spanned_flats(&skew.points, 2)?;
        report
            .observations
            .insert("skew_lines_plane_count".into(), planes.len().to_string());
        report.cases_run += 1;
        if planes.len() != 12 {
            report.fail(
                "skew_lines(12) plane count".into(),
                format!("{} spanned planes, expected 12", planes.len()),
            );
        }
        let cover = essdim::Cover::from_flats(vec![skew.line_a.clone(), skew.line_b.clone()]);
        report.cases_run += 1;
        match partition_cover(&cover, 2).map_err(|e| SuiteError::Parameter(e.to_string()))? {
            PartitionResult::Partitioned { .. } => {}
            other => report.fail(
                "skew_lines(12) partition".into(),
                format!("expected a partition, got {other:?}"),
            ),
        }
    }
    Ok(report)
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut result: u64 = 1;
    for i in 0..k {
        result = result * (n - i) / (i + 1);
    }
    result
}

/// Tabulates r-rich / alpha-degenerate / essentially-degenerate /
/// gamma-saturated counts (gamma = alpha) over spanned k-flats, alongside
/// f_k, the essential dimension, the g-profile, and the Beck-type products.
pub fn rich_report<C: Configuration>(
    config: &C,
    k: usize,
    r_list: &[u64],
    alpha_list: &[Scalar],
) -> Result<SuiteReport, SuiteError> {
    let mut report = SuiteReport::new("rich_report");
    report.params.insert("k".into(), k.to_string());
    report.params.insert(
        "r_list".into(),
        r_list
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(" "),
    );
    report.params.insert(
        "alpha_list".into(),
        alpha_list
            .iter()
            .map(|a| format_scalar(a))
            .collect::<Vec<_>>()
            .join(" "),
    );

    let inventory = spanned_flats(config, k)?;
    let f_k = inventory.len();
    report.observations.insert("f_k".into(), f_k.to_string());
    report
        .observations
        .insert("n".into(), config.total_weight().to_string());

    if config.support_len() > 0 && config.support_len() <= essdim::MAX_SUPPORT {
        let (dim_k, witness) = essdim::essential_dimension(config).expect("nonempty");
        report
            .observations
            .insert("essential_dimension".into(), dim_k.to_string());
        report.observations.insert(
            "essential_dimension_witness_dims".into(),
            witness
                .flats
                .iter()
                .map(|f| f.dim().to_string())
                .collect::<Vec<_>>()
                .join(" "),
        );
        let g = essdim::g_profile(config, k);
        report.observations.insert(
            "g_profile".into(),
            g.values
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(" "),
        );
        let beck = essdim::beck_lower_profile(config, k);
        report.observations.insert(
            "beck_products".into(),
            beck.iter()
                .map(BigInt::to_string)
                .collect::<Vec<_>>()
                .join(" "),
        );
    }

    let profile = rich_profile(&inventory, r_list);
    for ((r, rich), _) in profile.rows.iter().zip(r_list) {
        for alpha in alpha_list {
            let mut deg = 0usize;
            let mut ess = 0usize;
            let mut sat = 0usize;
            for (flat, inc) in inventory.iter() {
                if inc.weight < *r {
                    continue;
                }
                if is_alpha_degenerate(flat, config, alpha)? {
                    deg += 1;
                }
                if is_essentially_alpha_degenerate(flat, config, alpha)? {
                    ess += 1;
                }
                if is_gamma_saturated(flat, config, alpha)? {
                    sat += 1;
                }
            }
            let mut row = BTreeMap::new();
            row.insert("r".to_string(), r.to_string());
            row.insert("alpha".to_string(), format_scalar(alpha));
            row.insert("rich".to_string(), rich.to_string());
            row.insert("alpha_degenerate".to_string(), deg.to_string());
            row.insert("essentially_degenerate".to_string(), ess.to_string());
            row.insert("gamma_saturated".to_string(), sat.to_string());
            report.table.push(row);
            report.cases_run += 1;
        }
    }

    let mut banner =
        "Counts are exact at this instance size; no asymptotic constant is asserted.".to_string();
    if f_k == 0 && config.support_len() > 0 {
        banner.push_str(
            " No k-flat is spanned; rich k-flats through the configuration form unbounded \
             families and are not enumerated.",
        );
    }
    report.banner = Some(banner);
    Ok(report)
}
