//! Seeded leading-digit sampling: draw random integers with random upper
//! bounds and tally the leading digit of each in a chosen base. With a
//! log-uniform bound the tallies converge on the Newcomb–Benford law.

use crate::base::BaseSpec;
use crate::error::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// How the upper bound S of each draw `x ~ uniform{1..S}` is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SizeSampler {
    /// Every draw uses the same bound.
    Fixed(u64),
    /// ln S is uniform over [ln min, ln max]; S is rounded and clamped back
    /// into [min, max]. This is the standard sufficient condition for the
    /// leading-digit frequencies to approach the Benford probabilities.
    LogUniform { min: u64, max: u64 },
}

impl SizeSampler {
    fn validate(&self) -> Result<()> {
        match *self {
            SizeSampler::Fixed(s) if s >= 1 => Ok(()),
            SizeSampler::Fixed(_) => Err(Error::InvalidParameter(
                "fixed bound must be at least 1".to_string(),
            )),
            SizeSampler::LogUniform { min, max } if min >= 1 && min <= max => Ok(()),
            SizeSampler::LogUniform { min, max } => Err(Error::InvalidInterval {
                lo: min as f64,
                hi: max as f64,
            }),
        }
    }

    fn sample(&self, rng: &mut ChaCha8Rng) -> u64 {
        match *self {
            SizeSampler::Fixed(s) => s,
            SizeSampler::LogUniform { min, max } => {
                if min == max {
                    return min;
                }
                let ln_s = rng.gen_range((min as f64).ln()..=(max as f64).ln());
                (ln_s.exp().round() as u64).clamp(min, max)
            }
        }
    }
}

/// Empirical distribution of leading digits from one experiment run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LeadingDigitPmf {
    base: BaseSpec,
    samples: u64,
    /// counts[d - 1] tallies leading digit d.
    counts: Vec<u64>,
}

impl LeadingDigitPmf {
    pub fn base(&self) -> BaseSpec {
        self.base
    }

    pub fn samples(&self) -> u64 {
        self.samples
    }

    /// Tally for leading digit `d` (1..=max_digit).
    pub fn count(&self, d: u8) -> u64 {
        if d == 0 || d > self.base.max_digit() {
            return 0;
        }
        self.counts[d as usize - 1]
    }

    /// Relative frequency of leading digit `d`.
    pub fn frequency(&self, d: u8) -> f64 {
        self.count(d) as f64 / self.samples as f64
    }

    /// (digit, count, frequency) rows for digits 1..=max_digit.
    pub fn rows(&self) -> Vec<(u8, u64, f64)> {
        (1..=self.base.max_digit())
            .map(|d| (d, self.count(d), self.frequency(d)))
            .collect()
    }

    /// Digits that actually occurred.
    pub fn support(&self) -> Vec<u8> {
        self.rows()
            .into_iter()
            .filter(|&(_, c, _)| c > 0)
            .map(|(d, _, _)| d)
            .collect()
    }
}

/// The leading (most significant) digit of `x >= 1` in the given base: the
/// digit at exponent n where r^n <= x < r^(n+1).
pub fn leading_digit(x: f64, base: BaseSpec) -> Result<u8> {
    if !x.is_finite() || x < 1.0 {
        return Err(Error::InvalidTarget(x));
    }
    let n = base.leading_exponent(x);
    let d = (x / base.weight(n)).floor();
    Ok((d as u8).clamp(1, base.max_digit()))
}

/// Run the leading-digit experiment: `samples` times, draw a bound S from
/// the sampler, draw x uniform on {1..S}, and tally the leading digit of x
/// in `base`. The run is fully determined by the seed.
pub fn leading_digit_experiment(
    samples: u64,
    base: BaseSpec,
    sampler: SizeSampler,
    seed: u64,
) -> Result<LeadingDigitPmf> {
    if samples < 1 {
        return Err(Error::InvalidParameter(
            "sample count must be at least 1".to_string(),
        ));
    }
    sampler.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counts = vec![0u64; base.max_digit() as usize];
    for _ in 0..samples {
        let s = sampler.sample(&mut rng);
        let x = rng.gen_range(1..=s);
        let d = leading_digit(x as f64, base)?;
        counts[d as usize - 1] += 1;
    }
    Ok(LeadingDigitPmf {
        base,
        samples,
        counts,
    })
}
