//! Explicitly computable dynamical systems.
//!
//! Symbolic points are rules, not tapes: any coordinate is computed on
//! demand, and `T^m` of a point is a [`SymbolicPoint`] that reads its base at
//! an offset. Circle points are exact 128-bit fractions. All values are
//! immutable and cheap to clone.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{config, domain, Error, Result};
use crate::prf;
use crate::rational::Fraction128;

pub type Symbol = u8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    /// Coordinates `i >= 0`.
    #[default]
    OneSided,
    /// Coordinates `i` in `Z`.
    TwoSided,
}

/// Per-symbol probabilities in 64-bit fixed point.
///
/// `thresholds[j]` is `floor(2^64 * (p_0 + ... + p_j))` for `j < s - 1`; the
/// last symbol takes the remainder, so the fixed-point weights sum to
/// exactly `2^64`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymbolLaw {
    thresholds: Vec<u64>,
}

impl SymbolLaw {
    pub fn new(weights: &[f64]) -> Result<Self> {
        if weights.len() < 2 || weights.len() > 256 {
            return config(format!(
                "alphabet size {} must be in 2..=256",
                weights.len()
            ));
        }
        if weights.iter().any(|w| !w.is_finite() || *w < 0.0) {
            return config("Bernoulli weights must be finite and non-negative");
        }
        let total: f64 = weights.iter().sum();
        if (total - 1.0).abs() > 1e-9 {
            return config(format!("Bernoulli weights sum to {total}, expected 1"));
        }
        const ONE: f64 = 18_446_744_073_709_551_616.0;
        let mut cumulative = 0f64;
        let mut thresholds = Vec::with_capacity(weights.len() - 1);
        for w in &weights[..weights.len() - 1] {
            cumulative += w;
            let t = (cumulative * ONE).clamp(0.0, ONE - 1.0) as u64;
            thresholds.push(t);
        }
        Ok(SymbolLaw { thresholds })
    }

    pub fn uniform(alphabet: usize) -> Result<Self> {
        SymbolLaw::new(&vec![1.0 / alphabet as f64; alphabet])
    }

    pub fn alphabet(&self) -> usize {
        self.thresholds.len() + 1
    }

    /// Fixed-point weights (units of `2^-64`) as `u128`, summing to `2^64`.
    pub fn fixed_point_weights(&self) -> Vec<u128> {
        let mut prev = 0u128;
        let mut out = Vec::with_capacity(self.alphabet());
        for &t in &self.thresholds {
            out.push(t as u128 - prev);
            prev = t as u128;
        }
        out.push((1u128 << 64) - prev);
        out
    }

    pub fn weight(&self, symbol: Symbol) -> f64 {
        self.fixed_point_weights()
            .get(symbol as usize)
            .map_or(0.0, |&w| w as f64 / 18_446_744_073_709_551_616.0)
    }

    #[inline]
    pub fn sample(&self, u: u64) -> Symbol {
        if self.thresholds.len() == 1 {
            return (u >= self.thresholds[0]) as Symbol;
        }
        self.thresholds.partition_point(|&t| t <= u) as Symbol
    }
}

/// Content of one block of a block-scheduled point.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BlockContent {
    Constant(Symbol),
    /// Read the same coordinate of another point.
    CopyOf(SymbolicPoint),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Rule {
    /// `word[i mod len]`.
    Periodic(Vec<Symbol>),
    /// i.i.d. symbols: coordinate `i` is `law.sample(prf::word(seed, i))`.
    /// Negative coordinates use the counter `i` reinterpreted as `u64`.
    SeededRandom { seed: u64, law: Arc<SymbolLaw> },
    /// `blocks[j]` covers `[boundaries[j-1], boundaries[j])`; block 0 extends
    /// to the left end of the domain and the last block to infinity.
    BlockScheduled {
        boundaries: Vec<i64>,
        blocks: Vec<BlockContent>,
    },
    /// `coordinate(i) = base.coordinate(i + offset)`.
    Shifted { base: SymbolicPoint, offset: i64 },
    /// Two-sided point with `coordinate(i) = base(i)` for `i >= 0` and
    /// `past(-i - 1)` for `i < 0`.
    Extended {
        base: SymbolicPoint,
        past: SymbolicPoint,
    },
}

/// A point of a full shift over `{0, ..., alphabet - 1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymbolicPoint {
    alphabet: usize,
    side: Side,
    rule: Arc<Rule>,
}

impl SymbolicPoint {
    pub fn periodic(alphabet: usize, side: Side, word: Vec<Symbol>) -> Result<Self> {
        if word.is_empty() {
            return config("periodic word is empty");
        }
        check_alphabet(alphabet)?;
        if let Some(&s) = word.iter().find(|&&s| s as usize >= alphabet) {
            return config(format!("symbol {s} outside alphabet of size {alphabet}"));
        }
        Ok(Self::from_rule(alphabet, side, Rule::Periodic(word)))
    }

    pub fn constant(alphabet: usize, side: Side, symbol: Symbol) -> Result<Self> {
        Self::periodic(alphabet, side, vec![symbol])
    }

    pub fn seeded(side: Side, seed: u64, law: Arc<SymbolLaw>) -> Self {
        Self::from_rule(law.alphabet(), side, Rule::SeededRandom { seed, law })
    }

    pub fn block_scheduled(
        alphabet: usize,
        side: Side,
        boundaries: Vec<i64>,
        blocks: Vec<BlockContent>,
    ) -> Result<Self> {
        check_alphabet(alphabet)?;
        if blocks.len() != boundaries.len() + 1 {
            return config(format!(
                "{} boundaries need {} blocks, got {}",
                boundaries.len(),
                boundaries.len() + 1,
                blocks.len()
            ));
        }
        if !boundaries.windows(2).all(|w| w[0] < w[1]) {
            return config("block boundaries must be strictly increasing");
        }
        for b in &blocks {
            match b {
                BlockContent::Constant(s) if *s as usize >= alphabet => {
                    return config(format!("symbol {s} outside alphabet of size {alphabet}"));
                }
                BlockContent::CopyOf(p) if p.alphabet > alphabet || p.side != side => {
                    return config("copied point lives in a different shift space");
                }
                _ => {}
            }
        }
        Ok(Self::from_rule(
            alphabet,
            side,
            Rule::BlockScheduled { boundaries, blocks },
        ))
    }

    fn from_rule(alphabet: usize, side: Side, rule: Rule) -> Self {
        SymbolicPoint {
            alphabet,
            side,
            rule: Arc::new(rule),
        }
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn rule(&self) -> &Rule {
        &self.rule
    }

    /// Human-readable rule descriptor (never a tape).
    pub fn describe(&self) -> String {
        match &*self.rule {
            Rule::Periodic(w) => {
                let s: String = w
                    .iter()
                    .map(|s| s.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                format!("periodic({s})")
            }
            Rule::SeededRandom { seed, .. } => format!("seeded({seed:#018x})"),
            Rule::BlockScheduled { boundaries, .. } => {
                format!("blocks({} edges)", boundaries.len())
            }
            Rule::Shifted { base, offset } => format!("shift({}, {offset})", base.describe()),
            Rule::Extended { base, past } => {
                format!("extended({}, {})", base.describe(), past.describe())
            }
        }
    }

    /// The symbol at coordinate `i`.
    pub fn coordinate(&self, i: i64) -> Result<Symbol> {
        if i < 0 && self.side == Side::OneSided {
            return domain(format!("coordinate {i} of a one-sided point"));
        }
        Ok(self.symbol_at(i))
    }

    /// Symbol at `i` without the domain check. Total for every `i`.
    #[inline]
    pub fn symbol_at(&self, i: i64) -> Symbol {
        match &*self.rule {
            Rule::Periodic(w) => w[i.rem_euclid(w.len() as i64) as usize],
            Rule::SeededRandom { seed, law } => law.sample(prf::word(*seed, i as u64)),
            Rule::BlockScheduled { boundaries, blocks } => {
                let j = boundaries.partition_point(|&b| b <= i);
                match &blocks[j] {
                    BlockContent::Constant(s) => *s,
                    BlockContent::CopyOf(p) => p.symbol_at(i),
                }
            }
            Rule::Shifted { base, offset } => base.symbol_at(i.wrapping_add(*offset)),
            Rule::Extended { base, past } => {
                if i >= 0 {
                    base.symbol_at(i)
                } else {
                    past.symbol_at(-(i + 1))
                }
            }
        }
    }

    /// `T^m` of this point, as a flattened shifted view.
    pub fn shifted(&self, m: i64) -> Result<Self> {
        if m < 0 && self.side == Side::OneSided {
            return domain("negative shift of a one-sided point");
        }
        if m == 0 {
            return Ok(self.clone());
        }
        let (base, offset) = match &*self.rule {
            Rule::Shifted { base, offset } => (
                base.clone(),
                offset.checked_add(m).ok_or_else(|| shift_overflow(m))?,
            ),
            _ => (self.clone(), m),
        };
        if offset == 0 {
            return Ok(base);
        }
        Ok(Self::from_rule(
            self.alphabet,
            self.side,
            Rule::Shifted { base, offset },
        ))
    }
}

fn shift_overflow(m: i64) -> Error {
    Error::Domain(format!("shift offset overflow at m = {m}"))
}

fn check_alphabet(alphabet: usize) -> Result<()> {
    if !(2..=256).contains(&alphabet) {
        return config(format!("alphabet size {alphabet} must be in 2..=256"));
    }
    Ok(())
}

/// A point of the natural extension of a one-sided full shift: the full
/// backward orbit `(x_1, x_2, ...)` with `T x_{i+1} = x_i`, stored as one
/// two-sided word whose non-negative half is `x_1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtendedPoint(SymbolicPoint);

impl ExtendedPoint {
    pub fn new(base: SymbolicPoint, past: SymbolicPoint) -> Result<Self> {
        if base.side != Side::OneSided || past.side != Side::OneSided {
            return config("natural extension needs one-sided base and past rules");
        }
        let alphabet = base.alphabet.max(past.alphabet);
        Ok(ExtendedPoint(SymbolicPoint::from_rule(
            alphabet,
            Side::TwoSided,
            Rule::Extended { base, past },
        )))
    }

    /// Wrap an arbitrary two-sided word.
    pub fn from_two_sided(point: SymbolicPoint) -> Result<Self> {
        if point.side != Side::TwoSided {
            return config("expected a two-sided point");
        }
        Ok(ExtendedPoint(point))
    }

    pub fn as_symbolic(&self) -> &SymbolicPoint {
        &self.0
    }

    pub fn into_symbolic(self) -> SymbolicPoint {
        self.0
    }

    /// `x_i` (1-based) as a one-sided point: `x_i(j) = word(j - (i - 1))`.
    pub fn component(&self, i: u32) -> Result<SymbolicPoint> {
        if i == 0 {
            return domain("natural-extension components are numbered from 1");
        }
        let view = self.0.shifted(-(i as i64 - 1))?;
        Ok(SymbolicPoint::from_rule(
            view.alphabet,
            Side::OneSided,
            Rule::Shifted {
                base: view,
                offset: 0,
            },
        ))
    }

    /// The factor map `pi(x_1, x_2, ...) = x_1`.
    pub fn projection(&self) -> Result<SymbolicPoint> {
        self.component(1)
    }

    /// The shift homeomorphism applied `m` times.
    pub fn shift(&self, m: i64) -> Result<Self> {
        Ok(ExtendedPoint(self.0.shifted(m)?))
    }
}

/// A phase point of any supported system.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Point {
    Symbolic(SymbolicPoint),
    Circle(Fraction128),
    Tuple(Vec<Point>),
}

impl Point {
    pub fn describe(&self) -> String {
        match self {
            Point::Symbolic(p) => p.describe(),
            Point::Circle(f) => f.to_hex(),
            Point::Tuple(ps) => {
                format!(
                    "({})",
                    ps.iter()
                        .map(|p| p.describe())
                        .collect::<Vec<_>>()
                        .join(", ")
                )
            }
        }
    }

    pub fn as_symbolic(&self) -> Option<&SymbolicPoint> {
        match self {
            Point::Symbolic(p) => Some(p),
            _ => None,
        }
    }
}

impl From<SymbolicPoint> for Point {
    fn from(p: SymbolicPoint) -> Self {
        Point::Symbolic(p)
    }
}

impl From<ExtendedPoint> for Point {
    fn from(p: ExtendedPoint) -> Self {
        Point::Symbolic(p.0)
    }
}

impl From<Fraction128> for Point {
    fn from(f: Fraction128) -> Self {
        Point::Circle(f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum ShiftMetric {
    /// `sum_{i < w} [x_i != y_i] 2^-(i+1)`.
    #[default]
    Summed,
    /// `2^-(first index of disagreement)`, 0 if none within the window.
    FirstDifference,
}

pub const DEFAULT_WINDOW: u32 = 48;

fn default_window() -> u32 {
    DEFAULT_WINDOW
}

/// A dynamical system `(X, T, d, mu)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemSpec {
    pub kind: SystemKind,
    /// Truncation depth for symbolic metrics.
    #[serde(default = "default_window")]
    pub window: u32,
    #[serde(default)]
    pub metric: ShiftMetric,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum SystemKind {
    /// Full shift with a Bernoulli measure.
    FullShift {
        weights: Vec<f64>,
        #[serde(default)]
        side: Side,
    },
    /// `x -> x + alpha mod 1` with Lebesgue measure.
    Rotation { alpha: Fraction128 },
    /// Product system, acting componentwise.
    Product { components: Vec<SystemSpec> },
    /// Natural extension of a one-sided full shift.
    NaturalExtension { base: Box<SystemSpec> },
}

/// A distance value together with a bound on its truncation error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Distance {
    pub value: f64,
    pub error: f64,
}

impl SystemSpec {
    pub fn bernoulli(weights: Vec<f64>) -> Self {
        SystemSpec {
            kind: SystemKind::FullShift {
                weights,
                side: Side::OneSided,
            },
            window: DEFAULT_WINDOW,
            metric: ShiftMetric::Summed,
        }
    }

    pub fn fair_coin() -> Self {
        Self::bernoulli(vec![0.5, 0.5])
    }

    pub fn uniform_shift(alphabet: usize) -> Self {
        Self::bernoulli(vec![1.0 / alphabet as f64; alphabet])
    }

    pub fn rotation(alpha: Fraction128) -> Self {
        SystemSpec {
            kind: SystemKind::Rotation { alpha },
            window: DEFAULT_WINDOW,
            metric: ShiftMetric::Summed,
        }
    }

    pub fn product(components: Vec<SystemSpec>) -> Self {
        SystemSpec {
            kind: SystemKind::Product { components },
            window: DEFAULT_WINDOW,
            metric: ShiftMetric::Summed,
        }
    }

    pub fn natural_extension(base: SystemSpec) -> Self {
        let window = base.window;
        SystemSpec {
            kind: SystemKind::NaturalExtension {
                base: Box::new(base),
            },
            window,
            metric: ShiftMetric::Summed,
        }
    }

    pub fn with_window(mut self, window: u32) -> Self {
        self.window = window;
        if let SystemKind::NaturalExtension { base } = &mut self.kind {
            base.window = window;
        }
        self
    }

    pub fn with_metric(mut self, metric: ShiftMetric) -> Self {
        self.metric = metric;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.window == 0 || self.window > 62 {
            return config(format!("metric window {} must be in 1..=62", self.window));
        }
        match &self.kind {
            SystemKind::FullShift { weights, .. } => SymbolLaw::new(weights).map(|_| ()),
            SystemKind::Rotation { .. } => Ok(()),
            SystemKind::Product { components } => {
                if components.is_empty() {
                    return config("product system has no components");
                }
                components.iter().try_for_each(|c| c.validate())
            }
            SystemKind::NaturalExtension { base } => match &base.kind {
                SystemKind::FullShift {
                    side: Side::OneSided,
                    ..
                } => base.validate(),
                _ => config("natural extension is only provided for one-sided full shifts"),
            },
        }
    }

    /// The Bernoulli law of a full shift (or of the shift under a natural extension).
    pub fn law(&self) -> Result<Arc<SymbolLaw>> {
        match &self.kind {
            SystemKind::FullShift { weights, .. } => Ok(Arc::new(SymbolLaw::new(weights)?)),
            SystemKind::NaturalExtension { base } => base.law(),
            _ => config("system has no symbol law"),
        }
    }

    pub fn alphabet(&self) -> Option<usize> {
        match &self.kind {
            SystemKind::FullShift { weights, .. } => Some(weights.len()),
            SystemKind::NaturalExtension { base } => base.alphabet(),
            _ => None,
        }
    }

    pub fn components(&self) -> Option<&[SystemSpec]> {
        match &self.kind {
            SystemKind::Product { components } => Some(components),
            _ => None,
        }
    }

    fn symbolic_side(&self) -> Option<Side> {
        match &self.kind {
            SystemKind::FullShift { side, .. } => Some(*side),
            SystemKind::NaturalExtension { .. } => Some(Side::TwoSided),
            _ => None,
        }
    }

    /// Whether `point` lies in this system's phase space.
    pub fn contains(&self, point: &Point) -> bool {
        match (&self.kind, point) {
            (SystemKind::Rotation { .. }, Point::Circle(_)) => true,
            (SystemKind::Product { components }, Point::Tuple(ps)) => {
                components.len() == ps.len()
                    && components.iter().zip(ps).all(|(c, p)| c.contains(p))
            }
            (_, Point::Symbolic(p)) => match (self.alphabet(), self.symbolic_side()) {
                (Some(a), Some(side)) => p.alphabet <= a && p.side == side,
                _ => false,
            },
            _ => false,
        }
    }

    pub fn check_point(&self, point: &Point) -> Result<()> {
        if self.contains(point) {
            Ok(())
        } else {
            domain(format!(
                "point {} is not in the phase space",
                point.describe()
            ))
        }
    }

    /// `T^m(point)`.
    pub fn iterate(&self, point: &Point, m: u64) -> Result<Point> {
        self.check_point(point)?;
        self.iterate_unchecked(point, m)
    }

    fn iterate_unchecked(&self, point: &Point, m: u64) -> Result<Point> {
        Ok(match (&self.kind, point) {
            (SystemKind::Rotation { alpha }, Point::Circle(x)) => {
                Point::Circle(*x + alpha.times(m))
            }
            (SystemKind::Product { components }, Point::Tuple(ps)) => Point::Tuple(
                components
                    .iter()
                    .zip(ps)
                    .map(|(c, p)| c.iterate_unchecked(p, m))
                    .collect::<Result<_>>()?,
            ),
            (_, Point::Symbolic(p)) => {
                let m = i64::try_from(m)
                    .map_err(|_| Error::Domain(format!("time {m} exceeds 2^63")))?;
                Point::Symbolic(p.shifted(m)?)
            }
            _ => return domain("point does not match system"),
        })
    }

    /// Distance between `x` and `y` with its truncation error bound.
    pub fn distance(&self, x: &Point, y: &Point) -> Result<Distance> {
        self.check_point(x)?;
        self.check_point(y)?;
        if x == y {
            return Ok(Distance {
                value: 0.0,
                error: 0.0,
            });
        }
        Ok(Distance {
            value: self.distance_at(x, y, 0),
            error: self.truncation_error(),
        })
    }

    /// Upper bound on `|d(x, y) - distance_at(x, y, m)|`.
    pub fn truncation_error(&self) -> f64 {
        let tail = (-(self.window as f64)).exp2();
        match &self.kind {
            SystemKind::FullShift { .. } => tail,
            SystemKind::Rotation { .. } => 0.0,
            SystemKind::Product { components } => components
                .iter()
                .enumerate()
                .map(|(j, c)| c.truncation_error() * (-(j as f64) - 1.0).exp2())
                .sum(),
            // inner windows contribute sum_i 2^-i 2^-w <= 2^-w, the outer tail another 2^-w
            SystemKind::NaturalExtension { .. } => 2.0 * tail,
        }
    }

    /// Truncated distance between `T^m x` and `T^m y`, without validation.
    ///
    /// Points must belong to the system (see [`SystemSpec::contains`]).
    #[inline]
    pub fn distance_at(&self, x: &Point, y: &Point, m: u64) -> f64 {
        match (&self.kind, x, y) {
            (SystemKind::Rotation { alpha }, Point::Circle(a), Point::Circle(b)) => {
                let shift = alpha.times(m);
                (*a + shift).circle_distance(*b + shift)
            }
            (SystemKind::Product { components }, Point::Tuple(xs), Point::Tuple(ys)) => {
                let mut total = 0.0;
                let mut weight = 0.5;
                for ((c, a), b) in components.iter().zip(xs).zip(ys) {
                    total += weight * c.distance_at(a, b, m);
                    weight *= 0.5;
                }
                total
            }
            (SystemKind::FullShift { side, .. }, Point::Symbolic(a), Point::Symbolic(b)) => {
                let m = m as i64;
                match side {
                    Side::OneSided => one_sided_distance(self.metric, self.window, a, b, m),
                    Side::TwoSided => two_sided_distance(self.metric, self.window, a, b, m),
                }
            }
            (SystemKind::NaturalExtension { .. }, Point::Symbolic(a), Point::Symbolic(b)) => {
                let w = self.window;
                let components: Vec<f64> = (1..=w)
                    .map(|i| one_sided_distance(self.metric, w, a, b, m as i64 - (i as i64 - 1)))
                    .collect();
                natural_extension_metric(&components)
            }
            _ => f64::NAN,
        }
    }
}

/// `sum_{i >= 1} d_i / 2^i` over the given component distances `d_1, d_2, ...`.
pub fn natural_extension_metric(component_distances: &[f64]) -> f64 {
    let mut total = 0.0;
    let mut weight = 0.5;
    for d in component_distances {
        total += d * weight;
        weight *= 0.5;
    }
    total
}

#[inline]
fn one_sided_distance(
    metric: ShiftMetric,
    w: u32,
    x: &SymbolicPoint,
    y: &SymbolicPoint,
    start: i64,
) -> f64 {
    let mut total = 0.0;
    let mut weight = 0.5;
    for i in 0..w as i64 {
        if x.symbol_at(start + i) != y.symbol_at(start + i) {
            match metric {
                ShiftMetric::Summed => total += weight,
                ShiftMetric::FirstDifference => return 2.0 * weight,
            }
        }
        weight *= 0.5;
    }
    total
}

#[inline]
fn two_sided_distance(
    metric: ShiftMetric,
    w: u32,
    x: &SymbolicPoint,
    y: &SymbolicPoint,
    centre: i64,
) -> f64 {
    let differs = |i: i64| x.symbol_at(centre + i) != y.symbol_at(centre + i);
    let mut total = 0.0;
    let mut weight = 0.5;
    for r in 0..w as i64 {
        let hits = if r == 0 {
            differs(0) as u32
        } else {
            differs(r) as u32 + differs(-r) as u32
        };
        if hits > 0 {
            match metric {
                ShiftMetric::Summed => total += weight * hits as f64,
                ShiftMetric::FirstDifference => return 2.0 * weight,
            }
        }
        weight *= 0.5;
    }
    match metric {
        ShiftMetric::Summed => total / 2.0,
        ShiftMetric::FirstDifference => total,
    }
}

/// A `mu`-distributed point, as a pure function of `seed`.
pub fn sample_point(system: &SystemSpec, seed: u64) -> Result<Point> {
    Ok(match &system.kind {
        SystemKind::FullShift { side, .. } => {
            Point::Symbolic(SymbolicPoint::seeded(*side, seed, system.law()?))
        }
        SystemKind::Rotation { .. } => {
            let hi = prf::word(seed, 0) as u128;
            let lo = prf::word(seed, 1) as u128;
            Point::Circle(Fraction128((hi << 64) | lo))
        }
        SystemKind::Product { components } => Point::Tuple(
            components
                .iter()
                .enumerate()
                .map(|(j, c)| sample_point(c, prf::derive_indexed(seed, "component", j as u64)))
                .collect::<Result<_>>()?,
        ),
        SystemKind::NaturalExtension { base } => {
            let law = base.law()?;
            let x = SymbolicPoint::seeded(Side::OneSided, seed, law.clone());
            let past = SymbolicPoint::seeded(Side::OneSided, prf::derive_seed(seed, "past"), law);
            ExtendedPoint::new(x, past)?.into()
        }
    })
}

/// Lift a one-sided point to the natural extension, filling the past with
/// i.i.d. symbols drawn from the system's law under `past_seed`.
pub fn natural_extension_lift(
    system: &SystemSpec,
    base: &SymbolicPoint,
    past_seed: u64,
) -> Result<ExtendedPoint> {
    let law = match &system.kind {
        SystemKind::FullShift {
            side: Side::OneSided,
            ..
        } => system.law()?,
        SystemKind::NaturalExtension { base } => base.law()?,
        _ => return config("natural extension lift needs a one-sided full shift"),
    };
    if base.side != Side::OneSided {
        return domain("base point must be one-sided");
    }
    ExtendedPoint::new(
        base.clone(),
        SymbolicPoint::seeded(Side::OneSided, past_seed, law),
    )
}
