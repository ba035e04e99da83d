//! Sequence ergodic averages `A_N f(x) = (1/N) sum_{k<=N} f(T^{a_k} x)`.

use std::f64::consts::TAU;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{config, domain, Error, Result};
use crate::prf;
use crate::rational::{Fraction128, Rational};
use crate::seqgen::{check_checkpoints, generate_prefix, SequenceSpec};
use crate::sum::CompensatedSum;
use crate::systems::{sample_point, Point, Symbol, SymbolicPoint, SystemKind, SystemSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Trig {
    Cos,
    Sin,
}

/// A bounded, finitely determined observable.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum Observable {
    Constant {
        value: f64,
    },
    /// Indicator of `{x : x_c = s for every (c, s)}`. An empty list is the
    /// indicator of the whole space.
    Cylinder {
        constraints: Vec<(i64, Symbol)>,
    },
    /// `cos(2 pi h x)` or `sin(2 pi h x)` on a circle.
    Trig {
        frequency: i64,
        function: Trig,
    },
    /// `f(x_1, ..., x_r) = f_1(x_1) * ... * f_r(x_r)` on a product system.
    ProductOf {
        factors: Vec<Observable>,
    },
}

impl Observable {
    pub fn constant(value: f64) -> Self {
        Observable::Constant { value }
    }

    pub fn cylinder(constraints: &[(i64, Symbol)]) -> Self {
        Observable::Cylinder {
            constraints: constraints.to_vec(),
        }
    }

    pub fn cos(frequency: i64) -> Self {
        Observable::Trig {
            frequency,
            function: Trig::Cos,
        }
    }

    pub fn sin(frequency: i64) -> Self {
        Observable::Trig {
            frequency,
            function: Trig::Sin,
        }
    }

    pub fn product(factors: Vec<Observable>) -> Self {
        Observable::ProductOf { factors }
    }

    pub fn label(&self) -> String {
        match self {
            Observable::Constant { value } => format!("const({value})"),
            Observable::Cylinder { constraints } => {
                let cs: Vec<String> = constraints
                    .iter()
                    .map(|(c, s)| format!("{c}:{s}"))
                    .collect();
                format!("cyl[{}]", cs.join(","))
            }
            Observable::Trig {
                frequency,
                function,
            } => match function {
                Trig::Cos => format!("cos(2pi*{frequency}x)"),
                Trig::Sin => format!("sin(2pi*{frequency}x)"),
            },
            Observable::ProductOf { factors } => factors
                .iter()
                .map(|f| f.label())
                .collect::<Vec<_>>()
                .join("*"),
        }
    }

    /// Check that the observable is defined on `system`'s phase space.
    pub fn validate(&self, system: &SystemSpec) -> Result<()> {
        match (self, &system.kind) {
            (Observable::Constant { value }, _) => {
                if !(-1.0..=1.0).contains(value) {
                    return config(format!("constant observable {value} outside [-1, 1]"));
                }
                Ok(())
            }
            (Observable::Cylinder { constraints }, SystemKind::FullShift { side, .. }) => {
                let alphabet = system.alphabet().unwrap_or(0);
                for &(c, s) in constraints {
                    if c < 0 && *side == crate::systems::Side::OneSided {
                        return config(format!("cylinder coordinate {c} on a one-sided shift"));
                    }
                    if s as usize >= alphabet {
                        return config(format!("cylinder symbol {s} outside the alphabet"));
                    }
                }
                Ok(())
            }
            (Observable::Cylinder { constraints }, SystemKind::NaturalExtension { .. }) => {
                let alphabet = system.alphabet().unwrap_or(0);
                match constraints.iter().find(|(_, s)| *s as usize >= alphabet) {
                    Some((_, s)) => config(format!("cylinder symbol {s} outside the alphabet")),
                    None => Ok(()),
                }
            }
            (Observable::Trig { frequency, .. }, SystemKind::Rotation { .. }) => {
                if *frequency == 0 {
                    return config("trigonometric observable needs a nonzero frequency");
                }
                Ok(())
            }
            (Observable::ProductOf { factors }, SystemKind::Product { components }) => {
                if factors.len() != components.len() {
                    return config(format!(
                        "product observable has {} factors for {} components",
                        factors.len(),
                        components.len()
                    ));
                }
                factors
                    .iter()
                    .zip(components)
                    .try_for_each(|(f, c)| f.validate(c))
            }
            _ => config(format!(
                "observable {} is not defined on this system",
                self.label()
            )),
        }
    }

    /// Exact integral against the system's invariant measure, where known.
    pub fn declared_integral(&self, system: &SystemSpec) -> Option<f64> {
        match (self, &system.kind) {
            (Observable::Constant { value }, _) => Some(*value),
            (Observable::Cylinder { constraints }, _) => {
                let law = system.law().ok()?;
                let mut seen: Vec<(i64, Symbol)> = Vec::new();
                let mut mass = 1.0;
                for &(c, s) in constraints {
                    match seen.iter().find(|(d, _)| *d == c) {
                        Some(&(_, t)) if t != s => return Some(0.0),
                        Some(_) => {}
                        None => {
                            seen.push((c, s));
                            mass *= law.weight(s);
                        }
                    }
                }
                Some(mass)
            }
            (Observable::Trig { .. }, SystemKind::Rotation { .. }) => Some(0.0),
            (Observable::ProductOf { factors }, SystemKind::Product { components }) => factors
                .iter()
                .zip(components)
                .map(|(f, c)| f.declared_integral(c))
                .product(),
            _ => None,
        }
    }

    /// `[min f, max f]`.
    pub fn range(&self) -> (f64, f64) {
        match self {
            Observable::Constant { value } => (*value, *value),
            Observable::Cylinder { .. } => (0.0, 1.0),
            Observable::Trig { .. } => (-1.0, 1.0),
            Observable::ProductOf { factors } => factors.iter().fold((1.0, 1.0), |(lo, hi), f| {
                let (a, b) = f.range();
                let c = [lo * a, lo * b, hi * a, hi * b];
                (
                    c.iter().cloned().fold(f64::INFINITY, f64::min),
                    c.iter().cloned().fold(f64::NEG_INFINITY, f64::max),
                )
            }),
        }
    }

    /// Bound on the absolute error of one evaluation.
    pub fn evaluation_error(&self) -> f64 {
        match self {
            Observable::Constant { .. } | Observable::Cylinder { .. } => 0.0,
            Observable::Trig { .. } => 4.0 * f64::EPSILON,
            Observable::ProductOf { factors } => factors.iter().map(|f| f.evaluation_error()).sum(),
        }
    }

    /// `f(T^m x)`, computed without materializing `T^m x`.
    #[inline]
    pub fn eval_at(&self, system: &SystemSpec, x: &Point, m: u64) -> f64 {
        match (self, &system.kind, x) {
            (Observable::Constant { value }, _, _) => *value,
            (Observable::Cylinder { constraints }, _, Point::Symbolic(p)) => {
                cylinder_holds(constraints, p, m as i64) as u8 as f64
            }
            (
                Observable::Trig {
                    frequency,
                    function,
                },
                SystemKind::Rotation { alpha },
                Point::Circle(theta),
            ) => {
                let y = *theta + alpha.times(m);
                trig(*function, *frequency, y)
            }
            (
                Observable::ProductOf { factors },
                SystemKind::Product { components },
                Point::Tuple(xs),
            ) => {
                let mut v = 1.0;
                for ((f, c), x) in factors.iter().zip(components).zip(xs) {
                    v *= f.eval_at(c, x, m);
                }
                v
            }
            _ => f64::NAN,
        }
    }

    /// `f(x)`.
    pub fn eval(&self, system: &SystemSpec, x: &Point) -> f64 {
        self.eval_at(system, x, 0)
    }
}

#[inline]
fn cylinder_holds(constraints: &[(i64, Symbol)], p: &SymbolicPoint, m: i64) -> bool {
    constraints.iter().all(|&(c, s)| p.symbol_at(c + m) == s)
}

#[inline]
fn trig(function: Trig, frequency: i64, y: Fraction128) -> f64 {
    // h*y mod 1, exact, then reduce to (-1/2, 1/2] to keep the argument small
    let phase = Fraction128((frequency as i128 as u128).wrapping_mul(y.0));
    let t = phase.0 as i128 as f64 * (1.0 / 340_282_366_920_938_463_463_374_607_431_768_211_456.0);
    match function {
        Trig::Cos => (TAU * t).cos(),
        Trig::Sin => (TAU * t).sin(),
    }
}

/// `(1/N) sum_{k<=N} g(a_k)` streamed over `seq`, with compensated summation.
pub fn sequence_average<G: FnMut(u64) -> f64>(seq: &SequenceSpec, n: u64, mut g: G) -> Result<f64> {
    if n == 0 {
        return config("N must be >= 1");
    }
    let mut sum = CompensatedSum::new();
    let mut stream = seq.stream()?;
    for k in 1..=n {
        let a = match stream.next() {
            Some(t) => t?,
            None => {
                return Err(Error::Exhausted {
                    index: k,
                    available: k - 1,
                })
            }
        };
        sum.add(g(a));
    }
    Ok(sum.value() / n as f64)
}

/// `A_N f(x)` along `seq`.
pub fn ergodic_average(
    system: &SystemSpec,
    x: &Point,
    f: &Observable,
    seq: &SequenceSpec,
    n: u64,
) -> Result<f64> {
    system.check_point(x)?;
    f.validate(system)?;
    sequence_average(seq, n, |a| f.eval_at(system, x, a))
}

/// Average of `f(T^{a_k} x)` over a materialized prefix of terms.
pub fn average_over_terms(system: &SystemSpec, x: &Point, f: &Observable, terms: &[u64]) -> f64 {
    let mut sum = CompensatedSum::new();
    for &a in terms {
        sum.add(f.eval_at(system, x, a));
    }
    sum.value() / terms.len() as f64
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TraceCheckpoint {
    pub n: u64,
    pub value: f64,
    pub running_min: f64,
    pub running_max: f64,
}

/// Checkpointed averages with running extrema (liminf/limsup proxies).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AverageTrace {
    pub sequence: String,
    pub point: String,
    pub observable: String,
    pub checkpoints: Vec<TraceCheckpoint>,
    pub err_bound: f64,
}

impl AverageTrace {
    pub fn liminf_proxy(&self) -> f64 {
        self.checkpoints.last().map_or(f64::NAN, |c| c.running_min)
    }

    pub fn limsup_proxy(&self) -> f64 {
        self.checkpoints.last().map_or(f64::NAN, |c| c.running_max)
    }
}

/// Single pass over `seq`, recording `A_N` at each checkpoint.
pub fn average_trace(
    system: &SystemSpec,
    x: &Point,
    f: &Observable,
    seq: &SequenceSpec,
    checkpoints: &[u64],
) -> Result<AverageTrace> {
    system.check_point(x)?;
    f.validate(system)?;
    check_checkpoints(checkpoints)?;
    let mut out = Vec::with_capacity(checkpoints.len());
    let mut sum = CompensatedSum::new();
    let mut stream = seq.stream()?;
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    let mut k = 0u64;
    for &target in checkpoints {
        while k < target {
            let a = match stream.next() {
                Some(t) => t?,
                None => {
                    return Err(Error::Exhausted {
                        index: k + 1,
                        available: k,
                    })
                }
            };
            sum.add(f.eval_at(system, x, a));
            k += 1;
        }
        let value = sum.value() / target as f64;
        lo = lo.min(value);
        hi = hi.max(value);
        out.push(TraceCheckpoint {
            n: target,
            value,
            running_min: lo,
            running_max: hi,
        });
    }
    Ok(AverageTrace {
        sequence: seq.label(),
        point: x.describe(),
        observable: f.label(),
        checkpoints: out,
        err_bound: f.evaluation_error(),
    })
}

fn require_integral(system: &SystemSpec, f: &Observable) -> Result<f64> {
    f.declared_integral(system)
        .ok_or_else(|| Error::Config(format!("observable {} has no declared integral", f.label())))
}

/// `A_N f` at `mu`-sampled points, one per seed, in seed order.
pub fn averages_at_seeds(
    system: &SystemSpec,
    seeds: &[u64],
    f: &Observable,
    seq: &SequenceSpec,
    n: u64,
) -> Result<Vec<f64>> {
    system.validate()?;
    f.validate(system)?;
    let terms = generate_prefix(seq, n as usize)?;
    seeds
        .par_iter()
        .map(|&s| {
            Ok(average_over_terms(
                system,
                &sample_point(system, s)?,
                f,
                &terms,
            ))
        })
        .collect()
}

/// `max_x |A_N f(x) - integral f|` over the points sampled from `seeds`.
pub fn very_good_deviation(
    system: &SystemSpec,
    seeds: &[u64],
    f: &Observable,
    seq: &SequenceSpec,
    n: u64,
) -> Result<f64> {
    let integral = require_integral(system, f)?;
    if seeds.is_empty() {
        return config("no seeds given");
    }
    let values = averages_at_seeds(system, seeds, f, seq, n)?;
    Ok(values
        .iter()
        .map(|v| (v - integral).abs())
        .fold(0.0, f64::max))
}

/// The seeds of `count` sampled points derived from a master seed.
pub fn sample_seeds(master: u64, count: usize) -> Vec<u64> {
    (0..count as u64)
        .map(|j| prf::derive_indexed(master, "sample", j))
        .collect()
}

/// `|(1/M) sum_j A_N f(x_j) - integral f|` over `M` sampled points.
pub fn disintegration_consistency(
    system: &SystemSpec,
    f: &Observable,
    seq: &SequenceSpec,
    n: u64,
    sample_count: usize,
    seed: u64,
) -> Result<f64> {
    let integral = require_integral(system, f)?;
    if sample_count == 0 {
        return config("sample count must be >= 1");
    }
    let values = averages_at_seeds(system, &sample_seeds(seed, sample_count), f, seq, n)?;
    let mean: CompensatedSum = values.into_iter().collect();
    Ok((mean.value() / sample_count as f64 - integral).abs())
}

// ---------------------------------------------------------------------------
// empirical measures

/// A cell of a finite partition.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum Cell {
    Whole,
    Cylinder {
        constraints: Vec<(i64, Symbol)>,
    },
    /// Half-open arc `[start, end)` of the circle; `start == end` is the
    /// full circle and `start > end` wraps through 0.
    Arc {
        start: Fraction128,
        end: Fraction128,
    },
    Product {
        factors: Vec<Cell>,
    },
}

impl Cell {
    fn contains(&self, system: &SystemSpec, x: &Point, m: u64) -> bool {
        match (self, &system.kind, x) {
            (Cell::Whole, _, _) => true,
            (Cell::Cylinder { constraints }, _, Point::Symbolic(p)) => {
                cylinder_holds(constraints, p, m as i64)
            }
            (Cell::Arc { start, end }, SystemKind::Rotation { alpha }, Point::Circle(t)) => {
                let y = *t + alpha.times(m);
                arc_contains(*start, *end, y)
            }
            (Cell::Product { factors }, SystemKind::Product { components }, Point::Tuple(xs)) => {
                factors
                    .iter()
                    .zip(components)
                    .zip(xs)
                    .all(|((c, s), x)| c.contains(s, x, m))
            }
            _ => false,
        }
    }

    /// Mass under the uniform reference measure (uniform symbols, Lebesgue).
    fn reference_mass(&self, system: &SystemSpec) -> Result<BigRational> {
        Ok(match (self, &system.kind) {
            (Cell::Whole, _) => BigRational::one(),
            (Cell::Cylinder { constraints }, _) => {
                let alphabet = system.alphabet().ok_or_else(|| {
                    Error::Config("cylinder cell on a non-symbolic system".into())
                })?;
                let mut seen: Vec<(i64, Symbol)> = Vec::new();
                for &(c, s) in constraints {
                    if s as usize >= alphabet {
                        return config(format!("cell symbol {s} outside the alphabet"));
                    }
                    match seen.iter().find(|(d, _)| *d == c) {
                        Some(&(_, t)) if t != s => return Ok(BigRational::zero()),
                        Some(_) => {}
                        None => seen.push((c, s)),
                    }
                }
                let den = num_traits::pow(num_bigint::BigInt::from(alphabet), seen.len());
                BigRational::new(1.into(), den)
            }
            (Cell::Arc { start, end }, SystemKind::Rotation { .. }) => {
                let len = end.0.wrapping_sub(start.0);
                if len == 0 {
                    BigRational::one()
                } else {
                    Fraction128(len).to_rational().0
                }
            }
            (Cell::Product { factors }, SystemKind::Product { components }) => {
                if factors.len() != components.len() {
                    return config("product cell arity does not match the system");
                }
                let mut m = BigRational::one();
                for (c, s) in factors.iter().zip(components) {
                    m *= c.reference_mass(s)?;
                }
                m
            }
            _ => return config("cell is not defined on this system"),
        })
    }

    fn disjoint(&self, other: &Cell) -> bool {
        match (self, other) {
            (Cell::Cylinder { constraints: a }, Cell::Cylinder { constraints: b }) => a
                .iter()
                .any(|(c, s)| b.iter().any(|(d, t)| c == d && s != t)),
            (Cell::Arc { start: a0, end: a1 }, Cell::Arc { start: b0, end: b1 }) => {
                let a = arc_pieces(*a0, *a1);
                let b = arc_pieces(*b0, *b1);
                a.iter().all(|x| {
                    b.iter()
                        .all(|y| ends_before(x.1, y.0) || ends_before(y.1, x.0))
                })
            }
            (Cell::Product { factors: a }, Cell::Product { factors: b }) => {
                a.iter().zip(b).any(|(x, y)| x.disjoint(y))
            }
            _ => false,
        }
    }
}

// arcs as non-wrapping intervals [lo, hi); hi = None stands for 2^128
fn arc_pieces(start: Fraction128, end: Fraction128) -> Vec<(u128, Option<u128>)> {
    if start.0 < end.0 {
        vec![(start.0, Some(end.0))]
    } else if start.0 == end.0 {
        vec![(0, None)]
    } else if end.0 == 0 {
        vec![(start.0, None)]
    } else {
        vec![(start.0, None), (0, Some(end.0))]
    }
}

fn ends_before(hi: Option<u128>, lo: u128) -> bool {
    hi.is_some_and(|h| h <= lo)
}

fn arc_contains(start: Fraction128, end: Fraction128, y: Fraction128) -> bool {
    if start.0 < end.0 {
        start.0 <= y.0 && y.0 < end.0
    } else if start.0 == end.0 {
        true
    } else {
        y.0 >= start.0 || y.0 < end.0
    }
}

/// A finite partition of the phase space into disjoint cells.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Partition {
    pub cells: Vec<Cell>,
}

impl Partition {
    pub fn trivial() -> Self {
        Partition {
            cells: vec![Cell::Whole],
        }
    }

    /// `2^k` arcs `[j/2^k, (j+1)/2^k)`.
    pub fn dyadic_arcs(k: u32) -> Self {
        assert!((1..=127).contains(&k));
        let width = 1u128 << (128 - k);
        let cells = (0..(1u128 << k))
            .map(|j| Cell::Arc {
                start: Fraction128(j * width),
                end: Fraction128((j + 1).wrapping_mul(width)),
            })
            .collect();
        Partition { cells }
    }

    /// All cylinders fixing coordinates `0..depth` of an `alphabet`-shift.
    pub fn cylinders(alphabet: usize, depth: u32) -> Self {
        let count = alphabet.pow(depth);
        let cells = (0..count)
            .map(|mut j| {
                let constraints = (0..depth as i64)
                    .map(|c| {
                        let s = (j % alphabet) as Symbol;
                        j /= alphabet;
                        (c, s)
                    })
                    .collect();
                Cell::Cylinder { constraints }
            })
            .collect();
        Partition { cells }
    }

    /// Checks that the cells are pairwise disjoint and cover the space.
    pub fn validate(&self, system: &SystemSpec) -> Result<()> {
        if self.cells.is_empty() {
            return config("partition has no cells");
        }
        let mut total = BigRational::zero();
        for (i, c) in self.cells.iter().enumerate() {
            total += c.reference_mass(system)?;
            for d in &self.cells[i + 1..] {
                if !c.disjoint(d) {
                    return config(format!("partition cells {c:?} and {d:?} overlap"));
                }
            }
        }
        if total != BigRational::one() {
            return config(format!(
                "partition cells cover mass {total}, not the whole space"
            ));
        }
        Ok(())
    }
}

/// Finite-resolution estimate of the limit measure of `T^{a_k} x`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EmpiricalMeasure {
    pub partition: Partition,
    pub counts: Vec<u64>,
    pub weights: Vec<f64>,
    pub n: u64,
}

/// Weight of each cell = fraction of `k <= N` with `T^{a_k} x` in the cell.
pub fn empirical_measure(
    system: &SystemSpec,
    x: &Point,
    partition: &Partition,
    seq: &SequenceSpec,
    n: u64,
) -> Result<EmpiricalMeasure> {
    system.check_point(x)?;
    partition.validate(system)?;
    if n == 0 {
        return config("N must be >= 1");
    }
    let mut counts = vec![0u64; partition.cells.len()];
    let mut stream = seq.stream()?;
    for k in 1..=n {
        let a = match stream.next() {
            Some(t) => t?,
            None => {
                return Err(Error::Exhausted {
                    index: k,
                    available: k - 1,
                })
            }
        };
        match partition
            .cells
            .iter()
            .position(|c| c.contains(system, x, a))
        {
            Some(j) => counts[j] += 1,
            None => return domain(format!("orbit point at time {a} lies in no cell")),
        }
    }
    let weights = counts.iter().map(|&c| c as f64 / n as f64).collect();
    Ok(EmpiricalMeasure {
        partition: partition.clone(),
        counts,
        weights,
        n,
    })
}

/// Exact rational weight of a cell.
pub fn exact_weight(measure: &EmpiricalMeasure, cell: usize) -> Rational {
    Rational(BigRational::new(
        measure.counts[cell].into(),
        measure.n.into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::GOLDEN_CONJUGATE;
    use crate::systems::Side;

    fn zero_point() -> Point {
        SymbolicPoint::constant(2, Side::OneSided, 0)
            .unwrap()
            .into()
    }

    #[test]
    fn fixed_point_cylinder_average() {
        let sys = SystemSpec::fair_coin();
        let f = Observable::cylinder(&[(0, 0)]);
        for seq in [
            SequenceSpec::Naturals,
            SequenceSpec::Primes,
            SequenceSpec::Lacunary { base: 3 },
        ] {
            assert_eq!(
                ergodic_average(&sys, &zero_point(), &f, &seq, 30).unwrap(),
                1.0
            );
        }
    }

    #[test]
    fn four_cycle_cosine() {
        let sys = SystemSpec::rotation("1/4".parse().unwrap());
        let v = ergodic_average(
            &sys,
            &Point::Circle(Fraction128::ZERO),
            &Observable::cos(1),
            &SequenceSpec::Naturals,
            4,
        )
        .unwrap();
        assert!(v.abs() < 1e-15, "{v}");
    }

    #[test]
    fn primes_on_random_point_brute_force() {
        let sys = SystemSpec::fair_coin();
        let x = sample_point(&sys, 7).unwrap();
        let f = Observable::cylinder(&[(0, 0)]);
        let primes = generate_prefix(&SequenceSpec::Primes, 1_000).unwrap();
        let p = x.as_symbolic().unwrap();
        let brute = primes
            .iter()
            .filter(|&&a| p.coordinate(a as i64).unwrap() == 0)
            .count() as f64
            / 1_000.0;
        let got = ergodic_average(&sys, &x, &f, &SequenceSpec::Primes, 1_000).unwrap();
        assert!((got - brute).abs() < 1e-15);
        let big = ergodic_average(&sys, &x, &f, &SequenceSpec::Primes, 100_000).unwrap();
        assert!((big - 0.5).abs() < 0.02, "{big}");
    }

    #[test]
    fn trace_examples() {
        let sys = SystemSpec::fair_coin();
        let x = sample_point(&sys, 3).unwrap();
        let tr = average_trace(
            &sys,
            &x,
            &Observable::constant(0.25),
            &SequenceSpec::Primes,
            &[10, 20, 40],
        )
        .unwrap();
        assert!(tr.checkpoints.iter().all(|c| c.value == 0.25));
        assert_eq!((tr.liminf_proxy(), tr.limsup_proxy()), (0.25, 0.25));

        let tr = average_trace(
            &sys,
            &zero_point(),
            &Observable::cylinder(&[(0, 1)]),
            &SequenceSpec::Naturals,
            &[5, 50],
        )
        .unwrap();
        assert!(tr.checkpoints.iter().all(|c| c.value == 0.0));

        let f = Observable::cylinder(&[(0, 1), (2, 0)]);
        let tr = average_trace(&sys, &x, &f, &SequenceSpec::Primes, &[10, 100, 1000]).unwrap();
        for c in &tr.checkpoints {
            let fresh = ergodic_average(&sys, &x, &f, &SequenceSpec::Primes, c.n).unwrap();
            assert_eq!(c.value.to_bits(), fresh.to_bits());
            assert!(c.running_min <= c.value && c.value <= c.running_max);
        }
    }

    #[test]
    fn exhausted_and_overflow_errors() {
        let sys = SystemSpec::fair_coin();
        let f = Observable::cylinder(&[(0, 0)]);
        let short = SequenceSpec::Explicit {
            terms: vec![1, 2, 3],
        };
        assert!(matches!(
            ergodic_average(&sys, &zero_point(), &f, &short, 4),
            Err(Error::Exhausted { index: 4, .. })
        ));
        let lac = SequenceSpec::Lacunary { base: 2 };
        assert!(matches!(
            ergodic_average(&sys, &zero_point(), &f, &lac, 63),
            Err(Error::Overflow { index: 63 })
        ));
    }

    #[test]
    fn deviation_needs_integral_and_matching_system() {
        let sys = SystemSpec::fair_coin();
        let f = Observable::cos(1);
        assert!(matches!(
            very_good_deviation(&sys, &[1], &f, &SequenceSpec::Naturals, 10),
            Err(Error::Config(_))
        ));
    }

    #[test]
    fn declared_integrals() {
        let sys = SystemSpec::bernoulli(vec![0.25, 0.75]);
        assert_eq!(
            Observable::cylinder(&[(0, 1), (3, 1)]).declared_integral(&sys),
            Some(0.5625)
        );
        assert_eq!(
            Observable::cylinder(&[(0, 1), (0, 0)]).declared_integral(&sys),
            Some(0.0)
        );
        assert_eq!(Observable::cylinder(&[]).declared_integral(&sys), Some(1.0));
        let rot = SystemSpec::rotation(GOLDEN_CONJUGATE);
        assert_eq!(Observable::cos(3).declared_integral(&rot), Some(0.0));
        let prod = SystemSpec::product(vec![sys, rot]);
        let f = Observable::product(vec![
            Observable::cylinder(&[(0, 0)]),
            Observable::constant(1.0),
        ]);
        assert_eq!(f.declared_integral(&prod), Some(0.25));
    }

    #[test]
    fn bernoulli_naturals_deviation() {
        let sys = SystemSpec::fair_coin();
        let f = Observable::cylinder(&[(0, 0)]);
        let d = very_good_deviation(
            &sys,
            &sample_seeds(11, 100),
            &f,
            &SequenceSpec::Naturals,
            100_000,
        )
        .unwrap();
        assert!(d < 0.02, "{d}");
    }

    #[test]
    fn golden_rotation_naturals_deviation() {
        let sys = SystemSpec::rotation(GOLDEN_CONJUGATE);
        let seeds = sample_seeds(5, 10);
        let d = very_good_deviation(
            &sys,
            &seeds,
            &Observable::cos(1),
            &SequenceSpec::Naturals,
            100_000,
        )
        .unwrap();
        // |sum_{k<=N} e(k alpha + t)| <= 1/|sin(pi alpha)|, so |A_N| <= 1/(N sin(pi alpha))
        let bound = 1.0 / (100_000.0 * (std::f64::consts::PI * GOLDEN_CONJUGATE.to_f64()).sin());
        assert!(d <= bound + 1e-12, "{d} > {bound}");
    }

    #[test]
    fn disintegration_constant_is_exact() {
        let sys = SystemSpec::fair_coin();
        let gap = disintegration_consistency(
            &sys,
            &Observable::constant(1.0),
            &SequenceSpec::Primes,
            100,
            10,
            1,
        )
        .unwrap();
        assert_eq!(gap, 0.0);
    }

    #[test]
    fn empirical_measure_examples() {
        let sys = SystemSpec::rotation("1/4".parse().unwrap());
        let x = Point::Circle(Fraction128::ZERO);
        let m =
            empirical_measure(&sys, &x, &Partition::trivial(), &SequenceSpec::Primes, 100).unwrap();
        assert_eq!(m.weights, vec![1.0]);

        let m = empirical_measure(
            &sys,
            &x,
            &Partition::dyadic_arcs(2),
            &SequenceSpec::Naturals,
            4_000,
        )
        .unwrap();
        assert_eq!(m.weights, vec![0.25; 4]);
        assert_eq!(exact_weight(&m, 0), Rational::new(1, 4));
    }

    #[test]
    fn partition_validation() {
        let sys = SystemSpec::fair_coin();
        let overlapping = Partition {
            cells: vec![
                Cell::Cylinder {
                    constraints: vec![(0, 0)],
                },
                Cell::Cylinder {
                    constraints: vec![(1, 0)],
                },
            ],
        };
        assert!(matches!(overlapping.validate(&sys), Err(Error::Config(_))));
        let gap = Partition {
            cells: vec![Cell::Cylinder {
                constraints: vec![(0, 0)],
            }],
        };
        assert!(gap.validate(&sys).is_err());
        assert!(Partition::cylinders(2, 3).validate(&sys).is_ok());
        let rot = SystemSpec::rotation(GOLDEN_CONJUGATE);
        assert!(Partition::dyadic_arcs(10).validate(&rot).is_ok());
        let wrap = Partition {
            cells: vec![
                Cell::Arc {
                    start: "3/4".parse().unwrap(),
                    end: "1/4".parse().unwrap(),
                },
                Cell::Arc {
                    start: "1/4".parse().unwrap(),
                    end: "3/4".parse().unwrap(),
                },
            ],
        };
        assert!(wrap.validate(&rot).is_ok());
        let bad = Partition {
            cells: vec![
                Cell::Arc {
                    start: "3/4".parse().unwrap(),
                    end: "1/4".parse().unwrap(),
                },
                Cell::Arc {
                    start: "0".parse().unwrap(),
                    end: "3/4".parse().unwrap(),
                },
            ],
        };
        assert!(bad.validate(&rot).is_err());
    }
}
