//! Sequence families and exact close-pair counting.
//!
//! Every family streams positive integers through [`SequenceStream`]. Terms
//! are capped at [`MAX_TERM`] `= 2^63 - 1` so that they can be used directly
//! as shift offsets; any term beyond the cap is reported as
//! [`Error::Overflow`] carrying its 1-based index.

use std::collections::VecDeque;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{config, Error, Result};
use crate::rational::Rational;

/// Largest representable sequence term.
pub const MAX_TERM: u64 = i64::MAX as u64;

/// A named, parameterized family of positive integer sequences.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case", deny_unknown_fields)]
pub enum SequenceSpec {
    /// `1, 2, 3, ...`
    Naturals,
    /// `2, 3, 5, 7, ...`
    Primes,
    /// `floor(p(k))` for `p(x) = b_0 + b_1 x + ... + b_m x^m`, coefficients
    /// listed from the constant term up. Non-positive terms and terms that
    /// do not exceed the previously emitted term are skipped.
    PolynomialFloor { coefficients: Vec<Rational> },
    /// `floor(k^r)` for a positive non-integer rational `r`.
    FractionalPowerFloor { exponent: Rational },
    /// Indices `n >= 1` with an odd binary digit sum.
    ThueMorseReturnTimes,
    /// `base^k` for `k = 1, 2, ...`
    Lacunary { base: u64 },
    /// A finite list of positive integers, in the given order.
    Explicit { terms: Vec<u64> },
}

impl SequenceSpec {
    pub fn polynomial(coefficients: &[i64]) -> Self {
        SequenceSpec::PolynomialFloor {
            coefficients: coefficients
                .iter()
                .map(|&c| Rational::from_integer(c))
                .collect(),
        }
    }

    pub fn fractional_power(num: i64, den: i64) -> Self {
        SequenceSpec::FractionalPowerFloor {
            exponent: Rational::new(num, den),
        }
    }

    /// Short identifier used in reports and file names.
    pub fn label(&self) -> String {
        match self {
            SequenceSpec::Naturals => "naturals".into(),
            SequenceSpec::Primes => "primes".into(),
            SequenceSpec::PolynomialFloor { coefficients } => {
                let cs: Vec<String> = coefficients.iter().map(|c| c.to_string()).collect();
                format!("poly[{}]", cs.join(","))
            }
            SequenceSpec::FractionalPowerFloor { exponent } => format!("pow[{exponent}]"),
            SequenceSpec::ThueMorseReturnTimes => "thue_morse".into(),
            SequenceSpec::Lacunary { base } => format!("lacunary[{base}]"),
            SequenceSpec::Explicit { terms } => format!("explicit[{}]", terms.len()),
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            SequenceSpec::PolynomialFloor { coefficients } => {
                if coefficients.len() < 2 {
                    return config("polynomial must have degree >= 1");
                }
                if !coefficients.last().unwrap().is_positive() {
                    return config("polynomial leading coefficient must be positive");
                }
            }
            SequenceSpec::FractionalPowerFloor { exponent } => {
                if !exponent.is_positive() {
                    return config("fractional power exponent must be positive");
                }
                if exponent.is_integer() {
                    return config(format!(
                        "fractional power exponent {exponent} is an integer"
                    ));
                }
            }
            SequenceSpec::Lacunary { base } => {
                if *base < 2 {
                    return config(format!("lacunary base {base} must be >= 2"));
                }
            }
            SequenceSpec::Explicit { terms } => {
                if terms.is_empty() {
                    return config("explicit sequence is empty");
                }
                if let Some(t) = terms.iter().find(|&&t| t == 0 || t > MAX_TERM) {
                    return config(format!("explicit term {t} is outside [1, 2^63)"));
                }
            }
            _ => {}
        }
        Ok(())
    }

    /// Whether the family is strictly increasing by construction.
    ///
    /// `floor(k^r)` with `r < 1` repeats values and is only non-decreasing.
    pub fn is_strictly_increasing(&self) -> bool {
        match self {
            SequenceSpec::FractionalPowerFloor { exponent } => {
                exponent.inner() > &num_rational::BigRational::one()
            }
            SequenceSpec::Explicit { terms } => terms.windows(2).all(|w| w[0] < w[1]),
            _ => true,
        }
    }

    pub fn stream(&self) -> Result<SequenceStream> {
        self.validate()?;
        let gen = match self {
            SequenceSpec::Naturals => Gen::Naturals,
            SequenceSpec::Primes => Gen::Primes(PrimeStream::new()),
            SequenceSpec::PolynomialFloor { coefficients } => {
                Gen::Polynomial(Polynomial::new(coefficients), None)
            }
            SequenceSpec::FractionalPowerFloor { exponent } => {
                Gen::Power(FractionalPower::new(exponent)?)
            }
            SequenceSpec::ThueMorseReturnTimes => Gen::ThueMorse(0),
            SequenceSpec::Lacunary { base } => Gen::Lacunary {
                base: *base,
                current: 1,
            },
            SequenceSpec::Explicit { terms } => Gen::Explicit(terms.clone()),
        };
        Ok(SequenceStream {
            gen,
            emitted: 0,
            counter: 0,
            skipped: 0,
            failed: false,
        })
    }
}

enum Gen {
    Naturals,
    Primes(PrimeStream),
    Polynomial(Polynomial, Option<u64>),
    Power(FractionalPower),
    ThueMorse(u64),
    Lacunary { base: u64, current: u64 },
    Explicit(Vec<u64>),
}

/// Lazy stream of the terms `a_1, a_2, ...` of a [`SequenceSpec`].
///
/// Yields `Err` at most once and then ends.
pub struct SequenceStream {
    gen: Gen,
    emitted: u64,
    // polynomial argument k (counts skipped evaluations too)
    counter: u64,
    skipped: u64,
    failed: bool,
}

impl SequenceStream {
    /// Number of terms emitted so far.
    pub fn emitted(&self) -> u64 {
        self.emitted
    }

    /// Number of polynomial evaluations skipped (non-positive or not
    /// exceeding the previous term).
    pub fn skipped(&self) -> u64 {
        self.skipped
    }

    fn next_term(&mut self) -> Result<Option<u64>> {
        let index = self.emitted + 1;
        let overflow = || Error::Overflow { index };
        let v = match &mut self.gen {
            Gen::Naturals => index,
            Gen::Primes(p) => p.next_prime().ok_or_else(overflow)?,
            Gen::Polynomial(poly, last) => loop {
                self.counter += 1;
                let k = self.counter;
                let v = poly.floor_at(k);
                if v.is_positive() && last.is_none_or(|l| v > BigInt::from(l)) {
                    let v = v.to_u64().filter(|&v| v <= MAX_TERM).ok_or_else(overflow)?;
                    *last = Some(v);
                    break v;
                }
                self.skipped += 1;
            },
            Gen::Power(p) => p.term(index).ok_or_else(overflow)?,
            Gen::ThueMorse(n) => loop {
                *n += 1;
                if *n > MAX_TERM {
                    return Err(overflow());
                }
                if n.count_ones() % 2 == 1 {
                    break *n;
                }
            },
            Gen::Lacunary { base, current } => {
                let v = current
                    .checked_mul(*base)
                    .filter(|&v| v <= MAX_TERM)
                    .ok_or_else(overflow)?;
                *current = v;
                v
            }
            Gen::Explicit(terms) => match terms.get(self.emitted as usize) {
                Some(&t) => t,
                None => return Ok(None),
            },
        };
        self.emitted = index;
        Ok(Some(v))
    }
}

impl Iterator for SequenceStream {
    type Item = Result<u64>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.failed {
            return None;
        }
        match self.next_term() {
            Ok(v) => v.map(Ok),
            Err(e) => {
                self.failed = true;
                Some(Err(e))
            }
        }
    }
}

/// The first `count` terms of `spec`.
pub fn generate_prefix(spec: &SequenceSpec, count: usize) -> Result<Vec<u64>> {
    if count == 0 {
        return config("prefix length must be >= 1");
    }
    let mut out = Vec::with_capacity(count);
    for term in spec.stream()?.take(count) {
        out.push(term?);
    }
    if out.len() < count {
        return Err(Error::Exhausted {
            index: out.len() as u64 + 1,
            available: out.len() as u64,
        });
    }
    Ok(out)
}

/// The first `count` return times of the Thue-Morse orbit to the cylinder `[1]`.
pub fn thue_morse_return_times(count: usize) -> Result<Vec<u64>> {
    generate_prefix(&SequenceSpec::ThueMorseReturnTimes, count)
}

// ---------------------------------------------------------------------------
// primes

const SEGMENT: u64 = 1 << 18;

/// Segmented sieve of Eratosthenes, one segment at a time.
struct PrimeStream {
    base: Vec<u64>,
    base_limit: u64,
    low: u64,
    buf: Vec<u64>,
    pos: usize,
}

impl PrimeStream {
    fn new() -> Self {
        PrimeStream {
            base: Vec::new(),
            base_limit: 1,
            low: 2,
            buf: Vec::new(),
            pos: 0,
        }
    }

    fn next_prime(&mut self) -> Option<u64> {
        while self.pos == self.buf.len() {
            self.fill_segment()?;
        }
        let p = self.buf[self.pos];
        self.pos += 1;
        Some(p)
    }

    fn ensure_base(&mut self, limit: u64) {
        if limit <= self.base_limit {
            return;
        }
        let limit = limit.max(self.base_limit * 2).max(1024);
        self.base = simple_sieve(limit as usize);
        self.base_limit = limit;
    }

    fn fill_segment(&mut self) -> Option<()> {
        let low = self.low;
        if low > MAX_TERM {
            return None;
        }
        let high = low.checked_add(SEGMENT)?.min(MAX_TERM + 1);
        self.ensure_base(isqrt(high - 1) + 1);
        let len = (high - low) as usize;
        let mut composite = vec![false; len];
        for &p in &self.base {
            if p * p >= high {
                break;
            }
            let start = (p * p).max(low.div_ceil(p) * p);
            let mut m = start;
            while m < high {
                composite[(m - low) as usize] = true;
                m += p;
            }
        }
        self.buf.clear();
        self.pos = 0;
        for (i, &c) in composite.iter().enumerate() {
            if !c {
                self.buf.push(low + i as u64);
            }
        }
        self.low = high;
        Some(())
    }
}

fn simple_sieve(limit: usize) -> Vec<u64> {
    let mut is_prime = vec![true; limit + 1];
    is_prime[0] = false;
    if limit >= 1 {
        is_prime[1] = false;
    }
    let mut i = 2;
    while i * i <= limit {
        if is_prime[i] {
            let mut j = i * i;
            while j <= limit {
                is_prime[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    is_prime
        .iter()
        .enumerate()
        .filter(|(_, &p)| p)
        .map(|(i, _)| i as u64)
        .collect()
}

fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r.checked_mul(r).is_none_or(|s| s > n) {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).is_some_and(|s| s <= n) {
        r += 1;
    }
    r
}

// ---------------------------------------------------------------------------
// polynomials with rational coefficients, evaluated exactly

struct Polynomial {
    // integer coefficients c_i = b_i * denom, constant term first
    small: Option<Vec<i128>>,
    big: Vec<BigInt>,
    denom: BigInt,
    denom_small: Option<i128>,
}

impl Polynomial {
    fn new(coefficients: &[Rational]) -> Self {
        let denom = coefficients
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let big: Vec<BigInt> = coefficients
            .iter()
            .map(|c| c.numer() * (&denom / c.denom()))
            .collect();
        let small = big.iter().map(|c| c.to_i128()).collect();
        let denom_small = denom.to_i128();
        Polynomial {
            small,
            big,
            denom,
            denom_small,
        }
    }

    /// `floor(p(k))`, exact.
    fn floor_at(&self, k: u64) -> BigInt {
        if let (Some(cs), Some(d)) = (&self.small, self.denom_small) {
            let x = k as i128;
            let mut acc: Option<i128> = Some(0);
            for c in cs.iter().rev() {
                acc = acc
                    .and_then(|a| a.checked_mul(x))
                    .and_then(|a| a.checked_add(*c));
            }
            if let Some(v) = acc {
                return BigInt::from(v.div_euclid(d));
            }
        }
        let x = BigInt::from(k);
        let mut acc = BigInt::zero();
        for c in self.big.iter().rev() {
            acc = acc * &x + c;
        }
        acc.div_floor(&self.denom)
    }
}

// ---------------------------------------------------------------------------
// floor(k^(p/q)) = largest m with m^q <= k^p, exact integer root

struct FractionalPower {
    p: u32,
    q: u32,
}

impl FractionalPower {
    fn new(r: &Rational) -> Result<Self> {
        let p = r
            .numer()
            .to_u32()
            .ok_or_else(|| Error::Config(format!("exponent {r} too large")))?;
        let q = r
            .denom()
            .to_u32()
            .ok_or_else(|| Error::Config(format!("exponent {r} too large")))?;
        Ok(FractionalPower { p, q })
    }

    fn term(&self, k: u64) -> Option<u64> {
        let v = match (k as u128).checked_pow(self.p) {
            Some(power) => root_u128(power, self.q),
            None => {
                let power = num_traits::pow(BigUint::from(k), self.p as usize);
                power.nth_root(self.q).to_u128()?
            }
        };
        u64::try_from(v).ok().filter(|&v| v <= MAX_TERM)
    }
}

/// `floor(n^(1/q))`, exact.
fn root_u128(n: u128, q: u32) -> u128 {
    if n < 2 || q == 1 {
        return n;
    }
    let mut r = (n as f64).powf(1.0 / q as f64) as u128;
    let fits = |r: u128| r.checked_pow(q).is_some_and(|v| v <= n);
    while r > 0 && !fits(r) {
        r -= 1;
    }
    while fits(r + 1) {
        r += 1;
    }
    r
}

// ---------------------------------------------------------------------------
// Condition (*)

/// Exact number of ordered pairs `(i, j)` in `[1, N]^2` with
/// `|a_i - a_j| <= distance`. Diagonal pairs are included.
pub fn condition_star_count(prefix: &[u64], distance: u64) -> u64 {
    let sorted_buf;
    let sorted: &[u64] = if prefix.windows(2).all(|w| w[0] <= w[1]) {
        prefix
    } else {
        let mut v = prefix.to_vec();
        v.sort_unstable();
        sorted_buf = v;
        &sorted_buf
    };
    let mut off_diagonal = 0u64;
    let mut left = 0usize;
    for (j, &a) in sorted.iter().enumerate() {
        while a - sorted[left] > distance {
            left += 1;
        }
        off_diagonal += (j - left) as u64;
    }
    sorted.len() as u64 + 2 * off_diagonal
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConditionStarPoint {
    pub n: u64,
    pub count: u64,
    pub density: f64,
}

/// Close-pair counts of a sequence at a ladder of prefix lengths.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConditionStarReport {
    pub sequence: String,
    pub distance: u64,
    pub checkpoints: Vec<ConditionStarPoint>,
}

impl ConditionStarReport {
    /// Densities strictly decrease along the ladder.
    pub fn is_strictly_decreasing(&self) -> bool {
        self.checkpoints
            .windows(2)
            .all(|w| w[1].density < w[0].density)
    }
}

fn validate_checkpoints(checkpoints: &[u64]) -> Result<()> {
    if checkpoints.is_empty() {
        return config("checkpoint list is empty");
    }
    if checkpoints[0] == 0 {
        return config("checkpoints must be >= 1");
    }
    if !checkpoints.windows(2).all(|w| w[0] < w[1]) {
        return config("checkpoints must be strictly increasing");
    }
    Ok(())
}

pub(crate) fn check_checkpoints(checkpoints: &[u64]) -> Result<()> {
    validate_checkpoints(checkpoints)
}

/// Streams `spec` once and reports the exact pair count at each checkpoint.
///
/// For sorted streams only the terms within `distance` of the newest one are
/// kept in memory.
pub fn condition_star_profile(
    spec: &SequenceSpec,
    distance: u64,
    checkpoints: &[u64],
) -> Result<ConditionStarReport> {
    validate_checkpoints(checkpoints)?;
    let point = |n: u64, count: u64| ConditionStarPoint {
        n,
        count,
        density: count as f64 / (n as f64 * n as f64),
    };
    let mut out = Vec::with_capacity(checkpoints.len());

    if let SequenceSpec::Explicit { terms } = spec {
        if !terms.windows(2).all(|w| w[0] <= w[1]) {
            spec.validate()?;
            for &n in checkpoints {
                let slice = terms.get(..n as usize).ok_or(Error::Exhausted {
                    index: terms.len() as u64 + 1,
                    available: terms.len() as u64,
                })?;
                out.push(point(n, condition_star_count(slice, distance)));
            }
            return Ok(ConditionStarReport {
                sequence: spec.label(),
                distance,
                checkpoints: out,
            });
        }
    }

    let mut window: VecDeque<u64> = VecDeque::new();
    let mut off_diagonal = 0u64;
    let mut next = checkpoints.iter().copied().peekable();
    let mut stream = spec.stream()?;
    let mut n = 0u64;
    while let Some(&target) = next.peek() {
        let a = match stream.next() {
            Some(t) => t?,
            None => {
                return Err(Error::Exhausted {
                    index: n + 1,
                    available: n,
                })
            }
        };
        n += 1;
        while window.front().is_some_and(|&f| a - f > distance) {
            window.pop_front();
        }
        off_diagonal += window.len() as u64;
        window.push_back(a);
        if n == target {
            out.push(point(n, n + 2 * off_diagonal));
            next.next();
        }
    }
    Ok(ConditionStarReport {
        sequence: spec.label(),
        distance,
        checkpoints: out,
    })
}

/// `true` iff `a_{k+1} / a_k >= lambda` for every consecutive pair, with the
/// ratio compared exactly.
pub fn is_lacunary(prefix: &[u64], lambda: f64) -> bool {
    let Some(lambda) = Rational::from_f64(lambda) else {
        return false;
    };
    let (num, den) = (lambda.numer().clone(), lambda.denom().clone());
    prefix
        .windows(2)
        .all(|w| BigInt::from(w[1]) * &den >= BigInt::from(w[0]) * &num)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sieve_oracle(limit: usize) -> Vec<u64> {
        (2..=limit as u64)
            .filter(|&n| (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0))
            .collect()
    }

    fn brute_pairs(prefix: &[u64], l: u64) -> u64 {
        let mut c = 0;
        for &a in prefix {
            for &b in prefix {
                if a.abs_diff(b) <= l {
                    c += 1;
                }
            }
        }
        c
    }

    #[test]
    fn primes_first_five() {
        assert_eq!(
            generate_prefix(&SequenceSpec::Primes, 5).unwrap(),
            vec![2, 3, 5, 7, 11]
        );
    }

    #[test]
    fn primes_match_trial_division_across_segments() {
        let oracle = sieve_oracle(600_000);
        let got = generate_prefix(&SequenceSpec::Primes, oracle.len()).unwrap();
        assert_eq!(got, oracle);
    }

    #[test]
    fn squares() {
        assert_eq!(
            generate_prefix(&SequenceSpec::polynomial(&[0, 0, 1]), 4).unwrap(),
            vec![1, 4, 9, 16]
        );
    }

    #[test]
    fn three_halves_power() {
        assert_eq!(
            generate_prefix(&SequenceSpec::fractional_power(3, 2), 4).unwrap(),
            vec![1, 2, 5, 8]
        );
    }

    #[test]
    fn lacunary_powers_of_two_and_cap() {
        let spec = SequenceSpec::Lacunary { base: 2 };
        assert_eq!(generate_prefix(&spec, 4).unwrap(), vec![2, 4, 8, 16]);
        let all = generate_prefix(&spec, 62).unwrap();
        assert_eq!(*all.last().unwrap(), 1 << 62);
        match generate_prefix(&spec, 63) {
            Err(Error::Overflow { index }) => assert_eq!(index, 63),
            other => panic!("expected overflow, got {other:?}"),
        }
    }

    #[test]
    fn invalid_parameters() {
        assert!(matches!(
            SequenceSpec::polynomial(&[3]).stream(),
            Err(Error::Config(_))
        ));
        assert!(matches!(
            SequenceSpec::polynomial(&[0, -1]).stream(),
            Err(Error::Config(_))
        ));
        assert!(matches!(
            SequenceSpec::fractional_power(2, 1).stream(),
            Err(Error::Config(_))
        ));
        assert!(matches!(
            SequenceSpec::fractional_power(-1, 2).stream(),
            Err(Error::Config(_))
        ));
        assert!(matches!(
            SequenceSpec::Lacunary { base: 1 }.stream(),
            Err(Error::Config(_))
        ));
        assert!(matches!(
            SequenceSpec::Explicit { terms: vec![1, 0] }.stream(),
            Err(Error::Config(_))
        ));
    }

    #[test]
    fn explicit_exhaustion() {
        let spec = SequenceSpec::Explicit {
            terms: vec![3, 1, 2],
        };
        assert_eq!(generate_prefix(&spec, 3).unwrap(), vec![3, 1, 2]);
        assert!(matches!(
            generate_prefix(&spec, 4),
            Err(Error::Exhausted { index: 4, .. })
        ));
    }

    #[test]
    fn polynomial_skips_leading_terms() {
        // p(x) = x^2 - 5x + 5: 1, -1, -1, 1, 5, 11, ...
        let spec = SequenceSpec::polynomial(&[5, -5, 1]);
        let mut stream = spec.stream().unwrap();
        let got: Vec<u64> = stream.by_ref().take(3).map(|t| t.unwrap()).collect();
        assert_eq!(got, vec![1, 5, 11]);
        assert_eq!(stream.skipped(), 3);
    }

    #[test]
    fn polynomial_rational_coefficients_are_exact() {
        // p(x) = x^2 / 3 + 1/3: floor((k^2 + 1) / 3)
        let spec = SequenceSpec::PolynomialFloor {
            coefficients: vec![
                Rational::new(1, 3),
                Rational::from_integer(0),
                Rational::new(1, 3),
            ],
        };
        let got = generate_prefix(&spec, 6).unwrap();
        // k=1: 0 skipped; k=2: 1; k=3: 3; k=4: 5; k=5: 8; k=6: 12; k=7: 16
        assert_eq!(got, vec![1, 3, 5, 8, 12, 16]);
    }

    #[test]
    fn polynomial_overflow_is_explicit() {
        let spec = SequenceSpec::polynomial(&[0, 0, 0, 0, 0, 1]);
        // k^5 exceeds 2^63 once k > 6208
        match generate_prefix(&spec, 7000) {
            Err(Error::Overflow { index }) => assert_eq!(index, 6209),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn fractional_power_below_one_repeats() {
        let spec = SequenceSpec::fractional_power(1, 2);
        assert!(!spec.is_strictly_increasing());
        assert_eq!(
            generate_prefix(&spec, 9).unwrap(),
            vec![1, 1, 1, 2, 2, 2, 2, 2, 3]
        );
    }

    #[test]
    fn thue_morse_substitution_oracle() {
        let mut word = vec![0u8];
        while word.len() < 4096 {
            word = word
                .iter()
                .flat_map(|&b| if b == 0 { [0, 1] } else { [1, 0] })
                .collect();
        }
        let oracle: Vec<u64> = (1..word.len())
            .filter(|&i| word[i] == 1)
            .map(|i| i as u64)
            .collect();
        assert_eq!(thue_morse_return_times(4).unwrap(), vec![1, 2, 4, 7]);
        assert_eq!(thue_morse_return_times(1).unwrap(), vec![1]);
        assert_eq!(thue_morse_return_times(oracle.len()).unwrap(), oracle);
        assert_eq!(
            thue_morse_return_times(100).unwrap(),
            thue_morse_return_times(100).unwrap()
        );
    }

    #[test]
    fn pair_count_examples() {
        assert_eq!(brute_pairs(&[1, 2, 3, 4, 5], 1), 13);
        assert_eq!(condition_star_count(&[1, 2, 3, 4, 5], 1), 13);
        assert_eq!(condition_star_count(&[2, 4, 8, 16], 1), 4);
        assert_eq!(condition_star_count(&[5, 9, 1, 100], 0), 4);
        // unsorted input is sorted internally
        assert_eq!(condition_star_count(&[5, 1, 4, 2, 3], 1), 13);
        // L >= spread: every pair
        assert_eq!(condition_star_count(&[3, 10, 7], 7), 9);
    }

    #[test]
    fn profile_examples() {
        let r = condition_star_profile(&SequenceSpec::Naturals, 1, &[100]).unwrap();
        assert_eq!(r.checkpoints[0].count, 298);
        assert!((r.checkpoints[0].density - 0.0298).abs() < 1e-15);

        let r = condition_star_profile(&SequenceSpec::Lacunary { base: 2 }, 1, &[50]).unwrap();
        assert_eq!(r.checkpoints[0].count, 50);
        assert!((r.checkpoints[0].density - 1.0 / 50.0).abs() < 1e-15);

        let r =
            condition_star_profile(&SequenceSpec::Primes, 2, &[1_000, 10_000, 100_000]).unwrap();
        assert!(r.is_strictly_decreasing(), "{r:?}");
    }

    #[test]
    fn profile_matches_batch_count() {
        let spec = SequenceSpec::Primes;
        let prefix = generate_prefix(&spec, 500).unwrap();
        let r = condition_star_profile(&spec, 6, &[10, 100, 500]).unwrap();
        for p in &r.checkpoints {
            assert_eq!(p.count, brute_pairs(&prefix[..p.n as usize], 6));
        }
    }

    #[test]
    fn profile_on_unsorted_explicit() {
        let spec = SequenceSpec::Explicit {
            terms: vec![5, 1, 4, 2, 3],
        };
        let r = condition_star_profile(&spec, 1, &[2, 5]).unwrap();
        assert_eq!(r.checkpoints[0].count, 2);
        assert_eq!(r.checkpoints[1].count, 13);
    }

    #[test]
    fn profile_rejects_bad_ladders() {
        assert!(condition_star_profile(&SequenceSpec::Naturals, 1, &[]).is_err());
        assert!(condition_star_profile(&SequenceSpec::Naturals, 1, &[10, 10]).is_err());
        assert!(condition_star_profile(&SequenceSpec::Naturals, 1, &[0, 10]).is_err());
    }

    #[test]
    fn lacunarity() {
        assert!(is_lacunary(&[2, 4, 8, 16], 2.0));
        assert!(!is_lacunary(&[2, 3, 5, 7, 11], 1.5));
        assert!(is_lacunary(&[2, 3], 1.5));
        assert!(is_lacunary(&[17], 1e9));
    }
}
