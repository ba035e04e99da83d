//! Fiber experiments on `FullShift x Rotation`, the Kolmogorov case and the
//! lacunary contrast.
//!
//! The product of a Bernoulli shift (a K-system) with a rotation (zero
//! entropy) has the rotation coordinate as its Pinsker factor. Sequence
//! averages along a good sequence should then be constant on each fiber
//! `{(omega, theta) : omega}` of that factor.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::averaging::{average_over_terms, averages_at_seeds, sample_seeds, Observable};
use crate::error::{config, Error, Result};
use crate::prf;
use crate::rational::Fraction128;
use crate::seqgen::{generate_prefix, SequenceSpec};
use crate::sum::CompensatedSum;
use crate::systems::{sample_point, Point, SystemKind, SystemSpec};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Fiber {
    pub theta: Fraction128,
    pub seeds: Vec<u64>,
    /// `A_N f((omega_j, theta))`, in sample order.
    pub averages: Vec<f64>,
    /// `max_j - min_j` of the averages.
    pub dispersion: f64,
    pub mean: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FiberReport {
    pub sequence: String,
    pub observable: String,
    pub alpha: Fraction128,
    pub n: u64,
    pub samples: usize,
    pub fibers: Vec<Fiber>,
}

impl FiberReport {
    pub fn max_dispersion(&self) -> f64 {
        self.fibers.iter().map(|f| f.dispersion).fold(0.0, f64::max)
    }

    pub fn means(&self) -> Vec<(Fraction128, f64)> {
        self.fibers.iter().map(|f| (f.theta, f.mean)).collect()
    }
}

/// `bernoulli x Rotation(alpha)`.
pub fn fiber_system(bernoulli: &SystemSpec, alpha: Fraction128) -> Result<SystemSpec> {
    if !matches!(bernoulli.kind, SystemKind::FullShift { .. }) {
        return config("fiber experiments need a full shift as the first factor");
    }
    let system = SystemSpec::product(vec![bernoulli.clone(), SystemSpec::rotation(alpha)]);
    system.validate()?;
    Ok(system)
}

fn spread(values: &[f64]) -> (f64, f64) {
    let lo = values.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let mean: CompensatedSum = values.iter().copied().collect();
    (hi - lo, mean.value() / values.len() as f64)
}

/// For each `theta`, `A_N f` at `M` Bernoulli-sampled points `(omega_j, theta)`.
///
/// Samples are drawn independently per fiber from
/// `derive_seed(seed, "fiber/{i}/sample/{j}")`.
#[allow(clippy::too_many_arguments)]
pub fn fiber_constancy_report(
    bernoulli: &SystemSpec,
    alpha: Fraction128,
    thetas: &[Fraction128],
    f: &Observable,
    seq: &SequenceSpec,
    n: u64,
    samples: usize,
    seed: u64,
) -> Result<FiberReport> {
    let system = fiber_system(bernoulli, alpha)?;
    f.validate(&system)?;
    if thetas.is_empty() {
        return config("at least one theta is required");
    }
    if samples == 0 {
        return config("sample count must be >= 1");
    }
    if n == 0 {
        return config("N must be >= 1");
    }
    let terms = generate_prefix(seq, n as usize)?;
    let tasks: Vec<(usize, usize)> = (0..thetas.len())
        .flat_map(|i| (0..samples).map(move |j| (i, j)))
        .collect();
    let values: Vec<(u64, f64)> = tasks
        .par_iter()
        .map(|&(i, j)| {
            let s = prf::derive_seed(seed, &format!("fiber/{i}/sample/{j}"));
            let omega = sample_point(bernoulli, s)?;
            let x = Point::Tuple(vec![omega, Point::Circle(thetas[i])]);
            Ok((s, average_over_terms(&system, &x, f, &terms)))
        })
        .collect::<Result<_>>()?;
    let fibers = thetas
        .iter()
        .zip(values.chunks(samples))
        .map(|(&theta, chunk)| {
            let averages: Vec<f64> = chunk.iter().map(|v| v.1).collect();
            let (dispersion, mean) = spread(&averages);
            Fiber {
                theta,
                seeds: chunk.iter().map(|v| v.0).collect(),
                averages,
                dispersion,
                mean,
            }
        })
        .collect();
    Ok(FiberReport {
        sequence: seq.label(),
        observable: f.label(),
        alpha,
        n,
        samples,
        fibers,
    })
}

/// `max_j |A_N f(omega_j) - mu(f)|` over `M` sampled points of a Bernoulli shift.
pub fn kolmogorov_limit_check(
    bernoulli: &SystemSpec,
    f: &Observable,
    seq: &SequenceSpec,
    n: u64,
    samples: usize,
    seed: u64,
) -> Result<f64> {
    Ok(kolmogorov_samples(bernoulli, f, seq, n, samples, seed)?.max_deviation)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KolmogorovSamples {
    pub integral: f64,
    pub seeds: Vec<u64>,
    pub averages: Vec<f64>,
    pub max_deviation: f64,
}

/// The per-sample averages behind [`kolmogorov_limit_check`].
pub fn kolmogorov_samples(
    bernoulli: &SystemSpec,
    f: &Observable,
    seq: &SequenceSpec,
    n: u64,
    samples: usize,
    seed: u64,
) -> Result<KolmogorovSamples> {
    if !matches!(bernoulli.kind, SystemKind::FullShift { .. }) {
        return config("the Kolmogorov check needs a full shift");
    }
    if !matches!(f, Observable::Cylinder { .. }) {
        return config("the Kolmogorov check takes a cylinder observable");
    }
    if samples == 0 {
        return config("sample count must be >= 1");
    }
    let integral = f
        .declared_integral(bernoulli)
        .ok_or_else(|| Error::Config("cylinder has no declared integral".into()))?;
    let seeds = sample_seeds(seed, samples);
    let averages = averages_at_seeds(bernoulli, &seeds, f, seq, n)?;
    let max_deviation = averages
        .iter()
        .map(|a| (a - integral).abs())
        .fold(0.0, f64::max);
    Ok(KolmogorovSamples {
        integral,
        seeds,
        averages,
        max_deviation,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LacunaryContrast {
    pub terms: u64,
    pub samples: usize,
    /// Twice the sample standard deviation of `A_K` along the good sequence.
    pub good_at_terms: f64,
    /// The same along the lacunary sequence.
    pub lacunary_at_terms: f64,
    pub long_horizon: u64,
    /// Dispersion of the good sequence at the long horizon.
    pub good_at_long_horizon: f64,
    /// Number of representable lacunary terms when fewer than the long
    /// horizon exist: the lacunary average cannot be pushed further.
    pub lacunary_cap: Option<u64>,
}

/// `2 * sd` of the values (sample standard deviation, `M - 1` denominator).
pub fn dispersion(values: &[f64]) -> f64 {
    if values.len() < 2 {
        return 0.0;
    }
    let m = values.len() as f64;
    let mean = values.iter().copied().collect::<CompensatedSum>().value() / m;
    let ss: CompensatedSum = values.iter().map(|v| (v - mean) * (v - mean)).collect();
    2.0 * (ss.value() / (m - 1.0)).sqrt()
}

fn representable_terms(seq: &SequenceSpec, limit: u64) -> Result<Option<u64>> {
    let mut count = 0u64;
    for t in seq.stream()? {
        match t {
            Ok(_) => count += 1,
            Err(Error::Overflow { .. }) => return Ok(Some(count)),
            Err(e) => return Err(e),
        }
        if count >= limit {
            return Ok(None);
        }
    }
    Ok(Some(count))
}

/// Dispersion of `A_K f` across `M` sampled points along a good and a
/// lacunary sequence at the same `K`, plus the good sequence at `long_horizon`.
#[allow(clippy::too_many_arguments)]
pub fn lacunary_dispersion_contrast(
    bernoulli: &SystemSpec,
    f: &Observable,
    good: &SequenceSpec,
    lacunary: &SequenceSpec,
    terms: u64,
    samples: usize,
    long_horizon: u64,
    seed: u64,
) -> Result<LacunaryContrast> {
    if !matches!(bernoulli.kind, SystemKind::FullShift { .. }) {
        return config("the lacunary contrast needs a full shift");
    }
    if samples == 0 || terms == 0 {
        return config("terms and sample count must be >= 1");
    }
    let seeds = sample_seeds(seed, samples);
    let good_short = averages_at_seeds(bernoulli, &seeds, f, good, terms)?;
    let lacunary_short = averages_at_seeds(bernoulli, &seeds, f, lacunary, terms)?;
    let good_long = averages_at_seeds(bernoulli, &seeds, f, good, long_horizon)?;
    Ok(LacunaryContrast {
        terms,
        samples,
        good_at_terms: dispersion(&good_short),
        lacunary_at_terms: dispersion(&lacunary_short),
        long_horizon,
        good_at_long_horizon: dispersion(&good_long),
        lacunary_cap: representable_terms(lacunary, long_horizon)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;

    fn frozen() -> (SystemSpec, Fraction128, SequenceSpec, Observable) {
        let alpha = Fraction128::from_rational(&Rational::new(1, 2));
        let f = Observable::product(vec![Observable::cylinder(&[(0, 0)]), Observable::cos(1)]);
        (
            SystemSpec::fair_coin(),
            alpha,
            SequenceSpec::polynomial(&[0, 2]),
            f,
        )
    }

    #[test]
    fn frozen_rotation_means() {
        let (b, alpha, seq, f) = frozen();
        let thetas = [
            Fraction128::ZERO,
            Fraction128::from_rational(&Rational::new(1, 3)),
        ];
        let r = fiber_constancy_report(&b, alpha, &thetas, &f, &seq, 10_000, 100, 11).unwrap();
        assert!(r.max_dispersion() < 0.05);
        assert!((r.fibers[0].mean - 0.5).abs() < 0.05);
        assert!((r.fibers[1].mean + 0.25).abs() < 0.05);
    }

    #[test]
    fn frozen_rotation_factorizes() {
        // A_N f(omega, theta) = cos(2 pi theta) * A_N 1[omega_0 = 0] since 2k * 1/2 is an integer
        let (b, alpha, seq, f) = frozen();
        let theta = Fraction128::from_rational(&Rational::new(1, 3));
        let r = fiber_constancy_report(&b, alpha, &[theta], &f, &seq, 100, 20, 5).unwrap();
        let g = (std::f64::consts::TAU / 3.0).cos();
        let terms = generate_prefix(&seq, 100).unwrap();
        for (&s, &v) in r.fibers[0].seeds.iter().zip(&r.fibers[0].averages) {
            let omega = sample_point(&b, s).unwrap();
            // brute force: count zeros at coordinates 2k
            let hits = terms
                .iter()
                .filter(|&&a| omega.as_symbolic().unwrap().symbol_at(a as i64) == 0)
                .count();
            assert!((v - g * hits as f64 / 100.0).abs() < 1e-12);
        }
    }

    #[test]
    fn omega_only_observable() {
        let (b, alpha, seq, _) = frozen();
        let f = Observable::product(vec![
            Observable::cylinder(&[(0, 0)]),
            Observable::constant(1.0),
        ]);
        let thetas = [
            Fraction128::ZERO,
            Fraction128::HALF,
            Fraction128::from_rational(&Rational::new(1, 3)),
        ];
        let r = fiber_constancy_report(&b, alpha, &thetas, &f, &seq, 2_000, 50, 2).unwrap();
        let means: Vec<f64> = r.fibers.iter().map(|f| f.mean).collect();
        for m in &means {
            assert!((m - means[0]).abs() < 0.02);
        }
    }

    #[test]
    fn theta_only_observable_has_zero_dispersion() {
        let (b, alpha, seq, _) = frozen();
        let f = Observable::product(vec![Observable::constant(1.0), Observable::cos(1)]);
        let r = fiber_constancy_report(
            &b,
            alpha,
            &[Fraction128::from_rational(&Rational::new(1, 5))],
            &f,
            &seq,
            500,
            10,
            4,
        )
        .unwrap();
        assert_eq!(r.max_dispersion(), 0.0);
        let one = Observable::constant(1.0);
        let r = fiber_constancy_report(&b, alpha, &[Fraction128::ZERO], &one, &seq, 500, 10, 4)
            .unwrap();
        assert_eq!(r.max_dispersion(), 0.0);
    }

    #[test]
    fn kolmogorov_full_space_is_exact() {
        let d = kolmogorov_limit_check(
            &SystemSpec::fair_coin(),
            &Observable::cylinder(&[]),
            &SequenceSpec::Primes,
            1_000,
            10,
            1,
        )
        .unwrap();
        assert_eq!(d, 0.0);
    }

    #[test]
    fn kolmogorov_naturals() {
        let d = kolmogorov_limit_check(
            &SystemSpec::fair_coin(),
            &Observable::cylinder(&[(0, 0)]),
            &SequenceSpec::Naturals,
            100_000,
            100,
            9,
        )
        .unwrap();
        assert!(d < 0.02, "{d}");
    }

    #[test]
    fn dispersion_of_constants() {
        assert_eq!(dispersion(&[0.3; 7]), 0.0);
        assert!((dispersion(&[0.0, 1.0]) - 2.0 * 0.5f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn contrast_constant_observable() {
        let r = lacunary_dispersion_contrast(
            &SystemSpec::fair_coin(),
            &Observable::constant(1.0),
            &SequenceSpec::Primes,
            &SequenceSpec::Lacunary { base: 2 },
            60,
            20,
            1_000,
            3,
        )
        .unwrap();
        assert_eq!(
            (r.good_at_terms, r.lacunary_at_terms, r.good_at_long_horizon),
            (0.0, 0.0, 0.0)
        );
        assert_eq!(r.lacunary_cap, Some(62));
    }

    #[test]
    fn contrast_past_cap_overflows() {
        let r = lacunary_dispersion_contrast(
            &SystemSpec::fair_coin(),
            &Observable::cylinder(&[(0, 0)]),
            &SequenceSpec::Naturals,
            &SequenceSpec::Lacunary { base: 2 },
            63,
            5,
            100,
            3,
        );
        assert!(matches!(r, Err(Error::Overflow { .. })));
    }
}
