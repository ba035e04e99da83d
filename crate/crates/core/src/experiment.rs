//! Config-driven experiments: strict JSON configs in, CSV/JSON artifacts out.
//!
//! A config names one experiment kind with its parameters, a master seed and
//! an optional output directory:
//!
//! ```json
//! {
//!   "experiment": { "kind": "scrambled_build_verify", "sequence": { "family": "primes" },
//!                   "tuple_size": 2, "growth": 10, "phases": 2 },
//!   "seed": 1
//! }
//! ```
//!
//! Every run writes `manifest.json` (the resolved config with all defaults
//! filled in, plus the tool version), the experiment's result files and
//! `summary.json` with one entry per assertion.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::averaging::{averages_at_seeds, sample_seeds, Observable};
use crate::chaos::{build_scrambled_family, random_tuple_scan, verify_scrambled, ScrambleParams};
use crate::error::{config, Error, Result};
use crate::export;
use crate::pinsker::{fiber_constancy_report, kolmogorov_samples, lacunary_dispersion_contrast};
use crate::rational::Fraction128;
use crate::seqgen::{condition_star_profile, SequenceSpec};
use crate::sum::CompensatedSum;
use crate::systems::SystemSpec;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub experiment: Experiment,
    #[serde(default)]
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output_dir: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Experiment {
    ConditionStarProfile(ConditionStarParams),
    VeryGoodDeviation(DeviationParams),
    DisintegrationConsistency(DeviationParams),
    TupleScan(TupleScanParams),
    ScrambledBuildVerify(ScrambledParams),
    FiberConstancy(FiberParams),
    KolmogorovCheck(DeviationParams),
    LacunaryContrast(LacunaryParams),
}

fn d_distance() -> u64 {
    10
}
fn d_checkpoints() -> Vec<u64> {
    vec![1_000, 10_000, 100_000]
}
fn d_hundred() -> usize {
    100
}
fn d_two() -> usize {
    2
}
fn d_growth() -> u64 {
    10
}
fn d_phases() -> u32 {
    2
}
fn d_window() -> u32 {
    48
}
fn d_mean_tolerance() -> f64 {
    0.05
}
fn d_terms() -> u64 {
    60
}
fn d_lacunary_samples() -> usize {
    200
}
fn d_long_horizon() -> u64 {
    100_000
}
fn d_fair_coin() -> SystemSpec {
    SystemSpec::fair_coin()
}
fn d_lacunary() -> SequenceSpec {
    SequenceSpec::Lacunary { base: 2 }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConditionStarParams {
    pub sequence: SequenceSpec,
    #[serde(default = "d_distance")]
    pub distance: u64,
    #[serde(default = "d_checkpoints")]
    pub checkpoints: Vec<u64>,
    /// Assert that densities strictly decrease along the checkpoints.
    #[serde(default)]
    pub assert_decreasing: bool,
    /// Assert that the last density is at most this.
    #[serde(default)]
    pub max_final_density: Option<f64>,
}

/// Parameters shared by the deviation-type experiments.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DeviationParams {
    pub system: SystemSpec,
    pub observable: Observable,
    pub sequence: SequenceSpec,
    pub n: u64,
    #[serde(default = "d_hundred")]
    pub samples: usize,
    /// Assert that the measured deviation is below this.
    #[serde(default)]
    pub tolerance: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TupleScanParams {
    #[serde(default = "d_fair_coin")]
    pub system: SystemSpec,
    pub sequence: SequenceSpec,
    #[serde(default = "d_two")]
    pub tuple_size: usize,
    #[serde(default = "d_hundred")]
    pub tuples: usize,
    pub n: u64,
    /// Assert that every tuple's min-average is at least this.
    #[serde(default)]
    pub min_average_floor: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScrambledParams {
    pub sequence: SequenceSpec,
    #[serde(default = "d_two")]
    pub tuple_size: usize,
    #[serde(default = "d_growth")]
    pub growth: u64,
    #[serde(default = "d_phases")]
    pub phases: u32,
    #[serde(default = "d_window")]
    pub window: u32,
    /// Defaults to `max(tuple_size, 2)`.
    #[serde(default)]
    pub alphabet: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FiberParams {
    #[serde(default = "d_fair_coin")]
    pub system: SystemSpec,
    pub alpha: Fraction128,
    pub thetas: Vec<Fraction128>,
    pub observable: Observable,
    pub sequence: SequenceSpec,
    pub n: u64,
    #[serde(default = "d_hundred")]
    pub samples: usize,
    /// Assert that every within-fiber dispersion is below this.
    #[serde(default)]
    pub max_dispersion: Option<f64>,
    /// Assert that fiber means match these, one per theta.
    #[serde(default)]
    pub expected_means: Option<Vec<f64>>,
    #[serde(default = "d_mean_tolerance")]
    pub mean_tolerance: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LacunaryParams {
    #[serde(default = "d_fair_coin")]
    pub system: SystemSpec,
    pub observable: Observable,
    pub good_sequence: SequenceSpec,
    #[serde(default = "d_lacunary")]
    pub lacunary_sequence: SequenceSpec,
    #[serde(default = "d_terms")]
    pub terms: u64,
    #[serde(default = "d_lacunary_samples")]
    pub samples: usize,
    #[serde(default = "d_long_horizon")]
    pub long_horizon: u64,
    /// Assert that the good sequence's long-horizon dispersion is below this.
    #[serde(default)]
    pub long_tolerance: Option<f64>,
}

// ---------------------------------------------------------------------------
// registry

pub struct ExperimentInfo {
    pub name: &'static str,
    pub description: &'static str,
    pub required: &'static str,
}

const REGISTRY: [ExperimentInfo; 8] = [
    ExperimentInfo {
        name: "condition_star_profile",
        description: "close-pair densities of a sequence at a ladder of N",
        required: "sequence",
    },
    ExperimentInfo {
        name: "very_good_deviation",
        description: "max over sampled points of |A_N f - integral f|",
        required: "system, observable, sequence, n",
    },
    ExperimentInfo {
        name: "disintegration_consistency",
        description: "|mean over sampled points of A_N f - integral f|",
        required: "system, observable, sequence, n",
    },
    ExperimentInfo {
        name: "tuple_scan",
        description: "max/min pairwise distance averages of random tuples",
        required: "sequence, n",
    },
    ExperimentInfo {
        name: "scrambled_build_verify",
        description: "build a scrambled family and check its certificate",
        required: "sequence",
    },
    ExperimentInfo {
        name: "fiber_constancy",
        description: "within-fiber dispersion on a shift x rotation product",
        required: "alpha, thetas, observable, sequence, n",
    },
    ExperimentInfo {
        name: "kolmogorov_check",
        description: "cylinder averages on a Bernoulli shift against its mass",
        required: "system, observable, sequence, n",
    },
    ExperimentInfo {
        name: "lacunary_contrast",
        description: "sample dispersion along a good and a lacunary sequence",
        required: "observable, good_sequence",
    },
];

pub fn registry() -> &'static [ExperimentInfo] {
    &REGISTRY
}

/// One line per experiment kind, in a fixed order.
pub fn list_experiments() -> String {
    REGISTRY
        .iter()
        .map(|e| {
            format!(
                "{:<28}{}  (requires: {})\n",
                e.name, e.description, e.required
            )
        })
        .collect()
}

impl Experiment {
    pub fn name(&self) -> &'static str {
        let idx = match self {
            Experiment::ConditionStarProfile(_) => 0,
            Experiment::VeryGoodDeviation(_) => 1,
            Experiment::DisintegrationConsistency(_) => 2,
            Experiment::TupleScan(_) => 3,
            Experiment::ScrambledBuildVerify(_) => 4,
            Experiment::FiberConstancy(_) => 5,
            Experiment::KolmogorovCheck(_) => 6,
            Experiment::LacunaryContrast(_) => 7,
        };
        REGISTRY[idx].name
    }

    /// Replaces defaults that depend on other fields by their values.
    pub fn resolve(&mut self) {
        if let Experiment::ScrambledBuildVerify(p) = self {
            p.alphabet.get_or_insert(p.tuple_size.max(2));
        }
    }

    /// Checks every field that can be checked without running the experiment.
    pub fn validate(&self) -> Result<()> {
        fn positive(name: &str, v: u64) -> Result<()> {
            if v == 0 {
                return config(format!("{name} must be >= 1"));
            }
            Ok(())
        }
        fn tolerance(name: &str, v: Option<f64>) -> Result<()> {
            match v {
                Some(t) if !(t.is_finite() && t >= 0.0) => {
                    config(format!("{name} must be a finite number >= 0"))
                }
                _ => Ok(()),
            }
        }
        match self {
            Experiment::ConditionStarProfile(p) => {
                p.sequence.validate()?;
                if p.checkpoints.is_empty()
                    || p.checkpoints[0] == 0
                    || !p.checkpoints.windows(2).all(|w| w[0] < w[1])
                {
                    return config("checkpoints must be a nonempty strictly increasing list of positive integers");
                }
                tolerance("max_final_density", p.max_final_density)
            }
            Experiment::VeryGoodDeviation(p)
            | Experiment::DisintegrationConsistency(p)
            | Experiment::KolmogorovCheck(p) => {
                p.system.validate()?;
                p.observable.validate(&p.system)?;
                p.sequence.validate()?;
                positive("n", p.n)?;
                positive("samples", p.samples as u64)?;
                if p.observable.declared_integral(&p.system).is_none() {
                    return config(format!(
                        "observable {} has no declared integral",
                        p.observable.label()
                    ));
                }
                tolerance("tolerance", p.tolerance)
            }
            Experiment::TupleScan(p) => {
                p.system.validate()?;
                p.sequence.validate()?;
                positive("n", p.n)?;
                positive("tuples", p.tuples as u64)?;
                if p.tuple_size < 2 {
                    return config("tuple_size must be >= 2");
                }
                tolerance("min_average_floor", p.min_average_floor)
            }
            Experiment::ScrambledBuildVerify(p) => {
                p.sequence.validate()?;
                if p.tuple_size < 2
                    || p.growth < 2
                    || p.phases == 0
                    || p.window == 0
                    || p.window > 62
                {
                    return config(
                        "need tuple_size >= 2, growth >= 2, phases >= 1 and window in 1..=62",
                    );
                }
                Ok(())
            }
            Experiment::FiberConstancy(p) => {
                p.system.validate()?;
                p.sequence.validate()?;
                positive("n", p.n)?;
                positive("samples", p.samples as u64)?;
                if p.thetas.is_empty() {
                    return config("thetas must not be empty");
                }
                if let Some(m) = &p.expected_means {
                    if m.len() != p.thetas.len() {
                        return config("expected_means needs one value per theta");
                    }
                }
                tolerance("max_dispersion", p.max_dispersion)?;
                tolerance("mean_tolerance", Some(p.mean_tolerance))
            }
            Experiment::LacunaryContrast(p) => {
                p.system.validate()?;
                p.observable.validate(&p.system)?;
                p.good_sequence.validate()?;
                p.lacunary_sequence.validate()?;
                positive("terms", p.terms)?;
                positive("samples", p.samples as u64)?;
                positive("long_horizon", p.long_horizon)?;
                tolerance("long_tolerance", p.long_tolerance)
            }
        }
    }
}

// ---------------------------------------------------------------------------
// parsing

/// Parses a config, applying `key=value` overrides first.
///
/// Keys are dotted paths into the JSON document (`experiment.n=1000`).
/// Values are read as JSON when possible and as strings otherwise.
pub fn parse_config(text: &str, overrides: &[String]) -> Result<ExperimentConfig> {
    let cfg: ExperimentConfig = if overrides.is_empty() {
        serde_json::from_str(text).map_err(|e| Error::Config(format!("invalid config: {e}")))?
    } else {
        let mut doc: Value = serde_json::from_str(text)
            .map_err(|e| Error::Config(format!("invalid config: {e}")))?;
        for o in overrides {
            apply_override(&mut doc, o)?;
        }
        serde_json::from_value(doc)
            .map_err(|e| Error::Config(format!("invalid config after overrides: {e}")))?
    };
    cfg.experiment.validate()?;
    Ok(cfg)
}

pub fn load_config(path: &Path, overrides: &[String]) -> Result<ExperimentConfig> {
    let text = fs::read_to_string(path)?;
    parse_config(&text, overrides).map_err(|e| match e {
        Error::Config(m) => Error::Config(format!("{}: {m}", path.display())),
        other => other,
    })
}

fn apply_override(doc: &mut Value, assignment: &str) -> Result<()> {
    let Some((key, raw)) = assignment.split_once('=') else {
        return config(format!("override {assignment:?} is not key=value"));
    };
    let value = serde_json::from_str(raw).unwrap_or_else(|_| Value::String(raw.to_string()));
    let mut node = doc;
    let parts: Vec<&str> = key.split('.').collect();
    for (i, part) in parts.iter().enumerate() {
        let Value::Object(map) = node else {
            return config(format!(
                "override key {key:?}: {part:?} is not inside an object"
            ));
        };
        if i + 1 == parts.len() {
            map.insert(part.to_string(), value);
            return Ok(());
        }
        node = map
            .entry(part.to_string())
            .or_insert_with(|| Value::Object(Default::default()));
    }
    config("empty override key")
}

// ---------------------------------------------------------------------------
// running

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Assertion {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Assertion {
    fn new(name: &str, passed: bool, detail: String) -> Self {
        Assertion {
            name: name.to_string(),
            passed,
            detail,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub experiment: String,
    pub passed: bool,
    pub assertions: Vec<Assertion>,
    pub files: Vec<String>,
}

impl Summary {
    /// 0 when every assertion holds, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }
}

#[derive(Serialize)]
struct Manifest<'a> {
    tool: &'static str,
    version: &'static str,
    config: &'a ExperimentConfig,
}

/// Process exit status for an error: 3 for sequence overflow, 2 otherwise.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Overflow { .. } => 3,
        _ => 2,
    }
}

/// Runs on a dedicated pool of `workers` threads (rayon's default when `None`).
pub fn run_with_workers(
    cfg: &ExperimentConfig,
    out: &Path,
    workers: Option<usize>,
) -> Result<Summary> {
    match workers {
        None => run(cfg, out),
        Some(k) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k.max(1))
                .build()
                .map_err(|e| Error::Config(format!("cannot start {k} workers: {e}")))?;
            pool.install(|| run(cfg, out))
        }
    }
}

struct Writer<'a> {
    dir: &'a Path,
    files: Vec<String>,
}

impl Writer<'_> {
    fn csv(&mut self, name: &str, csv: export::Csv) -> Result<()> {
        csv.write(&self.dir.join(name))?;
        self.files.push(name.to_string());
        Ok(())
    }

    fn json<T: Serialize>(&mut self, name: &str, value: &T) -> Result<()> {
        export::write_json(&self.dir.join(name), value)?;
        self.files.push(name.to_string());
        Ok(())
    }
}

fn below(name: &str, value: f64, limit: Option<f64>) -> Option<Assertion> {
    limit.map(|t| Assertion::new(name, value < t, format!("{value} < {t}")))
}

/// Executes the experiment and writes its artifacts into `out`.
pub fn run(cfg: &ExperimentConfig, out: &Path) -> Result<Summary> {
    cfg.experiment.validate()?;
    let mut resolved = cfg.clone();
    resolved.experiment.resolve();
    let cfg = &resolved;
    fs::create_dir_all(out)?;
    let mut w = Writer {
        dir: out,
        files: Vec::new(),
    };
    w.json(
        "manifest.json",
        &Manifest {
            tool: "meanchaos",
            version: TOOL_VERSION,
            config: cfg,
        },
    )?;
    let seed = cfg.seed;
    let mut assertions = Vec::new();

    match &cfg.experiment {
        Experiment::ConditionStarProfile(p) => {
            let r = condition_star_profile(&p.sequence, p.distance, &p.checkpoints)?;
            w.csv("condition_star.csv", export::condition_star_csv(&r))?;
            w.json("condition_star.json", &r)?;
            if p.assert_decreasing {
                assertions.push(Assertion::new(
                    "densities_strictly_decreasing",
                    r.is_strictly_decreasing(),
                    format!(
                        "{:?}",
                        r.checkpoints.iter().map(|c| c.density).collect::<Vec<_>>()
                    ),
                ));
            }
            let last = r.checkpoints.last().map_or(f64::NAN, |c| c.density);
            if let Some(t) = p.max_final_density {
                assertions.push(Assertion::new(
                    "final_density",
                    last <= t,
                    format!("{last} <= {t}"),
                ));
            }
        }
        Experiment::VeryGoodDeviation(p) | Experiment::KolmogorovCheck(p) => {
            let (integral, seeds, values, deviation) = if let Experiment::KolmogorovCheck(_) =
                cfg.experiment
            {
                let k = kolmogorov_samples(
                    &p.system,
                    &p.observable,
                    &p.sequence,
                    p.n,
                    p.samples,
                    seed,
                )?;
                (k.integral, k.seeds, k.averages, k.max_deviation)
            } else {
                let integral = p
                    .observable
                    .declared_integral(&p.system)
                    .unwrap_or(f64::NAN);
                let seeds = sample_seeds(seed, p.samples);
                let values = averages_at_seeds(&p.system, &seeds, &p.observable, &p.sequence, p.n)?;
                let dev = values
                    .iter()
                    .map(|v| (v - integral).abs())
                    .fold(0.0, f64::max);
                (integral, seeds, values, dev)
            };
            w.csv("samples.csv", export::samples_csv(&seeds, &values))?;
            w.json(
                "result.json",
                &serde_json::json!({ "integral": integral, "max_deviation": deviation }),
            )?;
            assertions.extend(below("max_deviation", deviation, p.tolerance));
        }
        Experiment::DisintegrationConsistency(p) => {
            let integral = p
                .observable
                .declared_integral(&p.system)
                .unwrap_or(f64::NAN);
            let seeds = sample_seeds(seed, p.samples);
            let values = averages_at_seeds(&p.system, &seeds, &p.observable, &p.sequence, p.n)?;
            let mean =
                values.iter().copied().collect::<CompensatedSum>().value() / values.len() as f64;
            let gap = (mean - integral).abs();
            w.csv("samples.csv", export::samples_csv(&seeds, &values))?;
            w.json(
                "result.json",
                &serde_json::json!({ "integral": integral, "mean": mean, "gap": gap }),
            )?;
            assertions.extend(below("consistency_gap", gap, p.tolerance));
        }
        Experiment::TupleScan(p) => {
            let tuples =
                random_tuple_scan(&p.system, &p.sequence, p.tuple_size, p.tuples, p.n, seed)?;
            w.csv("tuples.csv", export::tuple_scan_csv(p.n, &tuples))?;
            let lowest = tuples
                .iter()
                .map(|t| t.min_average)
                .fold(f64::INFINITY, f64::min);
            w.json(
                "result.json",
                &serde_json::json!({ "tuples": tuples.len(), "lowest_min_average": lowest }),
            )?;
            if let Some(floor) = p.min_average_floor {
                assertions.push(Assertion::new(
                    "min_average_floor",
                    lowest >= floor,
                    format!("{lowest} >= {floor}"),
                ));
            }
        }
        Experiment::ScrambledBuildVerify(p) => {
            let mut params = ScrambleParams::new(p.tuple_size, p.growth, p.phases, p.window);
            if let Some(s) = p.alphabet {
                params.alphabet = s;
            }
            let family = build_scrambled_family(&p.sequence, params)?;
            w.json("certificate.json", &family.certificate)?;
            let v = verify_scrambled(&family, &family.system(), &p.sequence)?;
            w.csv("trace.csv", export::tuple_report_csv(&v.report))?;
            w.csv("checks.csv", export::phase_checks_csv(&v))?;
            w.json("verification.json", &v)?;
            for c in &v.checks {
                assertions.push(Assertion::new(
                    &format!("phase_{}_{}", c.phase, c.kind),
                    c.passed,
                    format!("measured {} against bound {}", c.measured, c.bound),
                ));
            }
        }
        Experiment::FiberConstancy(p) => {
            let r = fiber_constancy_report(
                &p.system,
                p.alpha,
                &p.thetas,
                &p.observable,
                &p.sequence,
                p.n,
                p.samples,
                seed,
            )?;
            w.csv("fibers.csv", export::fiber_csv(&r))?;
            let fibers: Vec<Value> = r
                .fibers
                .iter()
                .map(|f| serde_json::json!({ "theta": f.theta, "dispersion": f.dispersion, "mean": f.mean }))
                .collect();
            w.json("fibers.json", &serde_json::json!({ "sequence": r.sequence, "observable": r.observable, "fibers": fibers }))?;
            assertions.extend(below(
                "max_dispersion",
                r.max_dispersion(),
                p.max_dispersion,
            ));
            if let Some(expected) = &p.expected_means {
                for (i, (f, e)) in r.fibers.iter().zip(expected).enumerate() {
                    let gap = (f.mean - e).abs();
                    assertions.push(Assertion::new(
                        &format!("fiber_{i}_mean"),
                        gap < p.mean_tolerance,
                        format!("|{} - {e}| < {}", f.mean, p.mean_tolerance),
                    ));
                }
            }
        }
        Experiment::LacunaryContrast(p) => {
            let r = lacunary_dispersion_contrast(
                &p.system,
                &p.observable,
                &p.good_sequence,
                &p.lacunary_sequence,
                p.terms,
                p.samples,
                p.long_horizon,
                seed,
            )?;
            w.json("contrast.json", &r)?;
            assertions.extend(below(
                "long_horizon_dispersion",
                r.good_at_long_horizon,
                p.long_tolerance,
            ));
        }
    }

    let passed = assertions.iter().all(|a| a.passed);
    let mut files = w.files.clone();
    files.push("summary.json".to_string());
    let summary = Summary {
        experiment: cfg.experiment.name().to_string(),
        passed,
        assertions,
        files,
    };
    export::write_json(&out.join("summary.json"), &summary)?;
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn listing_is_stable() {
        let a = list_experiments();
        assert_eq!(a.lines().count(), 8);
        assert_eq!(a, list_experiments());
    }

    #[test]
    fn defaults_are_filled_in() {
        let cfg = parse_config(r#"{"experiment": {"kind": "scrambled_build_verify", "sequence": {"family": "primes"}}}"#, &[])
            .unwrap();
        let Experiment::ScrambledBuildVerify(p) = &cfg.experiment else {
            panic!()
        };
        assert_eq!((p.tuple_size, p.growth, p.phases, p.window), (2, 10, 2, 48));
        let echoed = serde_json::to_value(&cfg).unwrap();
        assert_eq!(echoed["experiment"]["window"], 48);
    }

    #[test]
    fn unknown_keys_are_rejected() {
        let err = parse_config(
            r#"{"experiment": {"kind": "tuple_scan", "sequence": {"family": "naturals"}, "n": 10, "bogus": 1}}"#,
            &[],
        )
        .unwrap_err();
        assert!(err.to_string().contains("bogus"), "{err}");
        assert!(parse_config(r#"{"experiment": {"kind": "nope"}}"#, &[]).is_err());
        assert!(parse_config(r#"{"experiment": {"kind": "tuple_scan", "sequence": {"family": "naturals"}, "n": 1}, "x": 2}"#, &[]).is_err());
    }

    #[test]
    fn negative_n_is_a_config_error() {
        let err = parse_config(
            r#"{"experiment": {"kind": "tuple_scan", "sequence": {"family": "naturals"}, "n": -5}}"#,
            &[],
        )
        .unwrap_err();
        assert_eq!(exit_code(&err), 2);
        assert!(err.to_string().contains("line"), "{err}");
    }

    #[test]
    fn overrides() {
        let text = r#"{"experiment": {"kind": "tuple_scan", "sequence": {"family": "naturals"}, "n": 10}}"#;
        let cfg = parse_config(text, &["experiment.n=25".into(), "seed=9".into()]).unwrap();
        let Experiment::TupleScan(p) = &cfg.experiment else {
            panic!()
        };
        assert_eq!((p.n, cfg.seed), (25, 9));
        assert!(parse_config(text, &["experiment.n".into()]).is_err());
    }
}
