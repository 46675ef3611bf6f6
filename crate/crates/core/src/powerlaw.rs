//! The distribution family: Newcomb–Benford leading-digit probabilities and
//! their series expansion, the Zipf approximation, and three ranked laws —
//! exponential e^(−(k−1)), power k^(−γ), and the saturated form (αe)^(−(k−1)).

use crate::base::BaseSpec;
use crate::error::{Error, Result};
use serde::Serialize;
use std::f64::consts::E;
use std::fmt;

/// Which law generated a ranked distribution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Benford,
    ZipfApprox,
    ExpRanked,
    Power,
    Saturated,
    Empirical,
}

impl Family {
    pub fn tag(&self) -> &'static str {
        match self {
            Family::Benford => "benford",
            Family::ZipfApprox => "zipf-approx",
            Family::ExpRanked => "exp-ranked",
            Family::Power => "power",
            Family::Saturated => "saturated",
            Family::Empirical => "empirical",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// log_r(1 + 1/n) for any real base r > 1 and any n >= 1.
///
/// This is the raw leading-digit formula; note that over a non-integer
/// base's digit support it does not sum to 1 (for base e the digits 1 and 2
/// give ln 2 + ln(3/2) = ln 3).
pub fn benford_raw(r: f64, n: u64) -> Result<f64> {
    if !r.is_finite() || r <= 1.0 {
        return Err(Error::InvalidBase(r));
    }
    if n < 1 {
        return Err(Error::InvalidParameter(
            "leading digit must be at least 1".to_string(),
        ));
    }
    Ok((1.0 + 1.0 / n as f64).ln() / r.ln())
}

/// Probability that the leading digit is `n` under the Newcomb–Benford law
/// for the given base: log_r(1 + 1/n), with `n` restricted to the base's
/// leading-digit alphabet 1..=max_digit.
pub fn benford_pmf(base: BaseSpec, n: u8) -> Result<f64> {
    if n < 1 || n > base.max_digit() {
        return Err(Error::DigitOutOfRange {
            digit: n,
            max_digit: base.max_digit(),
        });
    }
    benford_raw(base.r(), n as u64)
}

/// Partial sum of the series Σ_{j=1..terms} 1/(j·(n+1)^j), which converges
/// to ln(1 + 1/n) — the base-e Benford probability of digit n.
pub fn benford_series(n: u64, terms: u32) -> Result<f64> {
    if n < 1 {
        return Err(Error::InvalidParameter(
            "leading digit must be at least 1".to_string(),
        ));
    }
    if terms < 1 {
        return Err(Error::InvalidParameter(
            "term count must be at least 1".to_string(),
        ));
    }
    let ratio = (n + 1) as f64;
    let mut power = 1.0;
    let mut sum = 0.0;
    for j in 1..=terms {
        power *= ratio;
        sum += 1.0 / (j as f64 * power);
    }
    Ok(sum)
}

/// The first-term truncation of the Benford series: k/n, Zipf's law.
pub fn zipf_approx(n: u64, k_const: f64) -> Result<f64> {
    if n < 1 {
        return Err(Error::InvalidParameter(
            "rank must be at least 1".to_string(),
        ));
    }
    if !k_const.is_finite() || k_const <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "Zipf constant must be positive, got {k_const}"
        )));
    }
    Ok(k_const / n as f64)
}

/// Exponential ranked law: p(k) ~ e^(−(k−1)), value 1 at rank 1.
pub fn exp_ranked(k: u64) -> Result<f64> {
    if k < 1 {
        return Err(Error::InvalidParameter(
            "rank must be at least 1".to_string(),
        ));
    }
    Ok((-((k - 1) as f64)).exp())
}

/// Classical power law: p(k) ~ k^(−γ).
pub fn power_ranked(k: u64, gamma: f64) -> Result<f64> {
    if k < 1 {
        return Err(Error::InvalidParameter(
            "rank must be at least 1".to_string(),
        ));
    }
    if !gamma.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "power-law exponent must be finite, got {gamma}"
        )));
    }
    Ok((k as f64).powf(-gamma))
}

/// Saturated ranked law: p(k) ~ (αe)^(−(k−1)). With α = 1 it reduces to the
/// exponential law; α < 1 slows the decay (saturation), α > 1 speeds it up.
pub fn saturated_ranked(k: u64, alpha: f64) -> Result<f64> {
    if k < 1 {
        return Err(Error::InvalidParameter(
            "rank must be at least 1".to_string(),
        ));
    }
    if !alpha.is_finite() || alpha <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "saturation parameter must be positive, got {alpha}"
        )));
    }
    Ok((alpha * E).powf(-((k - 1) as f64)))
}

/// Probabilities (or unnormalized weights) indexed by rank k = 1..K.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankedDistribution {
    family: Family,
    values: Vec<f64>,
    normalized: bool,
}

impl RankedDistribution {
    fn from_law(
        family: Family,
        kmax: u64,
        law: impl Fn(u64) -> Result<f64>,
    ) -> Result<Self> {
        if kmax < 1 {
            return Err(Error::InvalidParameter(
                "kmax must be at least 1".to_string(),
            ));
        }
        let values = (1..=kmax).map(law).collect::<Result<Vec<f64>>>()?;
        Ok(RankedDistribution {
            family,
            values,
            normalized: false,
        })
    }

    /// e^(−(k−1)) over ranks 1..=kmax, unnormalized (value 1 at k = 1).
    pub fn exponential(kmax: u64) -> Result<Self> {
        Self::from_law(Family::ExpRanked, kmax, exp_ranked)
    }

    /// k^(−γ) over ranks 1..=kmax with γ > 0, unnormalized.
    pub fn power(kmax: u64, gamma: f64) -> Result<Self> {
        if !gamma.is_finite() || gamma <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "ranked power law needs a positive exponent, got {gamma}"
            )));
        }
        Self::from_law(Family::Power, kmax, |k| power_ranked(k, gamma))
    }

    /// (αe)^(−(k−1)) over ranks 1..=kmax, unnormalized.
    pub fn saturated(kmax: u64, alpha: f64) -> Result<Self> {
        Self::from_law(Family::Saturated, kmax, |k| saturated_ranked(k, alpha))
    }

    /// k_const/k over ranks 1..=kmax.
    pub fn zipf(kmax: u64, k_const: f64) -> Result<Self> {
        Self::from_law(Family::ZipfApprox, kmax, |k| zipf_approx(k, k_const))
    }

    /// The raw leading-digit probabilities of a base over digits
    /// 1..=max_digit. For integer bases these already sum to 1; for
    /// non-integer bases they do not (the `normalized` flag says which).
    pub fn benford(base: BaseSpec) -> Self {
        let values: Vec<f64> = (1..=base.max_digit() as u64)
            .map(|n| benford_raw(base.r(), n).expect("digit range is valid"))
            .collect();
        let sum: f64 = values.iter().sum();
        RankedDistribution {
            family: Family::Benford,
            values,
            normalized: (sum - 1.0).abs() <= 1e-9,
        }
    }

    /// Wrap measured data (nonnegative, finite) as an empirical ranked
    /// distribution.
    pub fn empirical(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyInput("ranked values"));
        }
        for &v in &values {
            if !v.is_finite() || v < 0.0 {
                return Err(Error::InvalidParameter(format!(
                    "ranked values must be finite and nonnegative, got {v}"
                )));
            }
        }
        Ok(RankedDistribution {
            family: Family::Empirical,
            values,
            normalized: false,
        })
    }

    /// Rescale so the values sum to 1.
    pub fn normalize(mut self) -> Result<Self> {
        let sum: f64 = self.values.iter().sum();
        if sum <= 0.0 {
            return Err(Error::InvalidParameter(
                "cannot normalize a distribution whose values sum to zero".to_string(),
            ));
        }
        for v in &mut self.values {
            *v /= sum;
        }
        self.normalized = true;
        Ok(self)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Value at rank k (1-indexed).
    pub fn value_at(&self, k: u64) -> Option<f64> {
        if k < 1 {
            return None;
        }
        self.values.get(k as usize - 1).copied()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }
}

/// One row of the exponential-vs-power comparison.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CompareRow {
    pub k: u64,
    pub exponential: f64,
    pub power: f64,
}

/// Side-by-side values of the exponential and power ranked laws.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CompareTable {
    pub gamma: f64,
    pub rows: Vec<CompareRow>,
}

/// Tabulate e^(−(k−1)) against k^(−γ) for ranks 1..=kmax.
pub fn compare_table(kmax: u64, gamma: f64) -> Result<CompareTable> {
    if kmax < 1 {
        return Err(Error::InvalidParameter(
            "kmax must be at least 1".to_string(),
        ));
    }
    let rows = (1..=kmax)
        .map(|k| {
            Ok(CompareRow {
                k,
                exponential: exp_ranked(k)?,
                power: power_ranked(k, gamma)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CompareTable { gamma, rows })
}
