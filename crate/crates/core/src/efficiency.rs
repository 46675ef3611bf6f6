//! Information-theoretic analytics: per-symbol coding efficiency across
//! bases, symbol information content, entropy, and whole-corpus digit costs.

use crate::base::BaseSpec;
use crate::encode::{encode_integer_base, encode_wf_in_base};
use crate::error::{Error, Result};
use serde::Serialize;
use std::f64::consts::LN_2;
use std::ops::RangeInclusive;

/// Probability vectors may stray from unit sum by at most this much.
pub const NORMALIZATION_TOLERANCE: f64 = 1e-9;

/// Per-symbol coding efficiency of a base: E(r) = ln r / r, reported in both
/// nats and bits. E peaks at r = e and declines monotonically afterwards.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EfficiencyReport {
    pub r: f64,
    pub nats: f64,
    pub bits: f64,
}

/// Total cost of writing out a corpus of integers in one base: the digit
/// count (radix points excluded) weighted by ln r per digit.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CostReport {
    pub base: BaseSpec,
    pub total_digits: u64,
    pub cost_nats: f64,
    pub cost_bits: f64,
}

/// E(r) = ln r / r for any real base r > 1.
pub fn efficiency(r: f64) -> Result<EfficiencyReport> {
    if !r.is_finite() || r <= 1.0 {
        return Err(Error::InvalidBase(r));
    }
    let nats = r.ln() / r;
    Ok(EfficiencyReport {
        r,
        nats,
        bits: nats / LN_2,
    })
}

/// Argmax of E(r) over `[lo, hi]` by golden-section search (bracket
/// tolerance 1e-9). When the interval contains e the result is e to within
/// 1e-6; when E is monotone on the interval the matching endpoint wins.
pub fn optimal_base(lo: f64, hi: f64) -> Result<f64> {
    if !lo.is_finite() || !hi.is_finite() || lo <= 1.0 || lo >= hi {
        return Err(Error::InvalidInterval { lo, hi });
    }
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    const BRACKET_TOLERANCE: f64 = 1e-9;
    let f = |r: f64| r.ln() / r;
    let (mut a, mut b) = (lo, hi);
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while b - a > BRACKET_TOLERANCE {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    Ok(0.5 * (a + b))
}

/// Information carried by a symbol of probability `p`: −ln p nats,
/// −log2 p bits.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SymbolInformation {
    pub p: f64,
    pub nats: f64,
    pub bits: f64,
}

/// I(x) = −log P(x) for a symbol probability in (0, 1].
pub fn symbol_information(p: f64) -> Result<SymbolInformation> {
    if !p.is_finite() || p <= 0.0 || p > 1.0 {
        return Err(Error::InvalidProbability(p));
    }
    let nats = -p.ln();
    Ok(SymbolInformation {
        p,
        nats,
        bits: nats / LN_2,
    })
}

/// Entropy H = −Σ p ln p in nats, with 0·ln 0 taken as 0. The vector must
/// be nonnegative and sum to 1 within [`NORMALIZATION_TOLERANCE`].
pub fn entropy(probs: &[f64]) -> Result<f64> {
    if probs.is_empty() {
        return Err(Error::EmptyInput("probability list"));
    }
    for &p in probs {
        if !p.is_finite() || p < 0.0 {
            return Err(Error::InvalidProbability(p));
        }
    }
    let sum: f64 = probs.iter().sum();
    if (sum - 1.0).abs() > NORMALIZATION_TOLERANCE {
        return Err(Error::NotNormalized {
            sum,
            tolerance: NORMALIZATION_TOLERANCE,
        });
    }
    Ok(probs
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| -p * p.ln())
        .sum())
}

/// Total digit cost of writing every integer in `range` in each base.
///
/// Integer bases use the exact positional encoding; non-integer bases use
/// the whole-form (fraction-free, minimum-error) encoding. Digit counts
/// include interior zeros and exclude radix points; the cost in nats is
/// `total_digits · ln r`.
pub fn corpus_cost(range: RangeInclusive<u64>, bases: &[BaseSpec]) -> Result<Vec<CostReport>> {
    let (lo, hi) = (*range.start(), *range.end());
    if lo < 1 || lo > hi {
        return Err(Error::InvalidParameter(format!(
            "corpus range {lo}..{hi} must be a nonempty range of positive integers"
        )));
    }
    if bases.is_empty() {
        return Err(Error::EmptyInput("base list"));
    }
    let mut reports = Vec::with_capacity(bases.len());
    for &base in bases {
        let mut total_digits: u64 = 0;
        for x in lo..=hi {
            let repr = match base.integer_radix() {
                Some(_) => encode_integer_base(x, base)?,
                None => encode_wf_in_base(x, base),
            };
            total_digits += repr.digit_count() as u64;
        }
        let cost_nats = total_digits as f64 * base.r().ln();
        reports.push(CostReport {
            base,
            total_digits,
            cost_nats,
            cost_bits: cost_nats / LN_2,
        });
    }
    Ok(reports)
}
