use crate::base::BaseSpec;
use crate::error::{Error, Result};
use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

/// A number written positionally: digits attached to integer exponents of a
/// base, most significant first.
///
/// Digits are stored contiguously from the highest stored exponent down to the
/// lowest; interior and trailing zeros are explicit, so formatted output
/// preserves trailing fractional zeros as written ("10.0200" round-trips).
/// The highest-exponent digit is nonzero except for the canonical zero
/// representation (a single 0 digit at exponent 0).
///
/// Alongside the digits, a representation remembers the `target` it was
/// encoded from, its own decoded `value`, the signed `error = value - target`,
/// and an `out_of_tolerance` flag set when |error| reached the error budget of
/// the request that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct PositionalRepr {
    base: BaseSpec,
    max_exp: i32,
    digits: Vec<u8>,
    target: f64,
    value: f64,
    error: f64,
    out_of_tolerance: bool,
}

/// Σ digits[i] · r^i over a contiguous digit run anchored at `max_exp`,
/// summed most-significant-first (single canonical accumulation order).
fn positional_sum(base: &BaseSpec, max_exp: i32, digits: &[u8]) -> f64 {
    let mut acc = 0.0;
    for (j, &d) in digits.iter().enumerate() {
        acc += d as f64 * base.weight(max_exp - j as i32);
    }
    acc
}

impl PositionalRepr {
    /// The canonical zero representation: one 0 digit at exponent 0.
    pub fn zero(base: BaseSpec) -> Self {
        PositionalRepr {
            base,
            max_exp: 0,
            digits: vec![0],
            target: 0.0,
            value: 0.0,
            error: 0.0,
            out_of_tolerance: false,
        }
    }

    /// Zero produced while encoding `target` (everything rounded away);
    /// carries the signed error and the tolerance flag.
    pub(crate) fn zero_for_target(base: BaseSpec, target: f64, epsilon: f64) -> Self {
        let error = -target;
        PositionalRepr {
            base,
            max_exp: 0,
            digits: vec![0],
            target,
            value: 0.0,
            error,
            out_of_tolerance: error.abs() >= epsilon,
        }
    }

    /// Build from explicit digits (most significant first, anchored at
    /// `max_exp`); the represented value itself becomes the target, so the
    /// stored error is zero. Leading zeros are stripped; an all-zero digit
    /// run collapses to the canonical zero.
    pub fn from_digits(base: BaseSpec, max_exp: i32, digits: Vec<u8>) -> Result<Self> {
        Self::build(base, max_exp, digits, None, f64::INFINITY)
    }

    /// Build for a specific encoding target and error budget.
    pub(crate) fn from_digits_for_target(
        base: BaseSpec,
        max_exp: i32,
        digits: Vec<u8>,
        target: f64,
        epsilon: f64,
    ) -> Result<Self> {
        Self::build(base, max_exp, digits, Some(target), epsilon)
    }

    fn build(
        base: BaseSpec,
        max_exp: i32,
        digits: Vec<u8>,
        target: Option<f64>,
        epsilon: f64,
    ) -> Result<Self> {
        if digits.is_empty() {
            return Err(Error::EmptyInput("digit run"));
        }
        for &d in &digits {
            if d > base.max_digit() {
                return Err(Error::DigitOutOfRange {
                    digit: d,
                    max_digit: base.max_digit(),
                });
            }
        }
        // strip leading zeros so the highest stored digit is significant
        let lead = digits.iter().position(|&d| d != 0);
        let (max_exp, digits) = match lead {
            None => {
                return Ok(match target {
                    None => Self::zero(base),
                    Some(t) => Self::zero_for_target(base, t, epsilon),
                })
            }
            Some(p) => (max_exp - p as i32, digits[p..].to_vec()),
        };
        let value = positional_sum(&base, max_exp, &digits);
        let target = target.unwrap_or(value);
        let error = value - target;
        Ok(PositionalRepr {
            base,
            max_exp,
            digits,
            target,
            value,
            error,
            out_of_tolerance: error.abs() >= epsilon,
        })
    }

    pub fn base(&self) -> BaseSpec {
        self.base
    }

    /// Highest stored exponent (0 for the zero representation).
    pub fn max_exp(&self) -> i32 {
        self.max_exp
    }

    /// Lowest stored exponent.
    pub fn min_exp(&self) -> i32 {
        self.max_exp - (self.digits.len() as i32 - 1)
    }

    /// Stored digits, most significant first.
    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    /// Digit at exponent `i` (0 outside the stored range).
    pub fn digit_at(&self, i: i32) -> u8 {
        if i > self.max_exp || i < self.min_exp() {
            0
        } else {
            self.digits[(self.max_exp - i) as usize]
        }
    }

    /// (exponent, digit) pairs in descending exponent order.
    pub fn exponent_digits(&self) -> impl Iterator<Item = (i32, u8)> + '_ {
        let max_exp = self.max_exp;
        self.digits
            .iter()
            .enumerate()
            .map(move |(j, &d)| (max_exp - j as i32, d))
    }

    /// Number of stored digits — radix point excluded, interior and trailing
    /// zeros included.
    pub fn digit_count(&self) -> usize {
        self.digits.len()
    }

    pub fn is_zero(&self) -> bool {
        self.digits == [0]
    }

    /// The number the encoder was asked to represent.
    pub fn target(&self) -> f64 {
        self.target
    }

    /// Decoded value Σ digits[i] · r^i.
    pub fn value(&self) -> f64 {
        self.value
    }

    /// Signed error `value - target`.
    pub fn error(&self) -> f64 {
        self.error
    }

    /// True when |error| reached the error budget of the producing request.
    pub fn out_of_tolerance(&self) -> bool {
        self.out_of_tolerance
    }
}

/// Evaluate Σ digits[i] · r^i for a representation.
///
/// This recomputes the sum from the stored digits; constructors store the
/// identical sum, so `decode(&repr) == repr.value()` exactly.
pub fn decode(repr: &PositionalRepr) -> f64 {
    positional_sum(&repr.base(), repr.max_exp(), repr.digits())
}

/// Render digits as text: integer part, then a radix point and the fractional
/// digits when any stored exponent is negative. A representation whose
/// highest digit sits below exponent 0 gains a presentational leading "0".
pub fn format(repr: &PositionalRepr) -> String {
    if repr.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    if repr.max_exp() >= 0 {
        for i in (0..=repr.max_exp()).rev() {
            out.push((b'0' + repr.digit_at(i)) as char);
        }
    } else {
        out.push('0');
    }
    let min_exp = repr.min_exp();
    if min_exp < 0 {
        out.push('.');
        for i in (min_exp..=-1).rev() {
            out.push((b'0' + repr.digit_at(i)) as char);
        }
    }
    out
}

impl fmt::Display for PositionalRepr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format(self))
    }
}

/// Parse a digit string — grammar `digit+ ('.' digit+)?` with characters
/// '0'..'9' — into a representation over `base`.
///
/// Trailing fractional zeros are preserved; leading zeros are normalized
/// away. Malformed text reports the byte position of the offense; digits
/// beyond the base's alphabet are rejected.
pub fn parse(text: &str, base: BaseSpec) -> Result<PositionalRepr> {
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Parse {
            position: 0,
            reason: "empty digit string".to_string(),
        });
    }
    let mut int_digits: Vec<u8> = Vec::new();
    let mut frac_digits: Vec<u8> = Vec::new();
    let mut seen_point: Option<usize> = None;
    for (pos, &b) in bytes.iter().enumerate() {
        match b {
            b'0'..=b'9' => {
                let d = b - b'0';
                if d > base.max_digit() {
                    return Err(Error::DigitOutOfRange {
                        digit: d,
                        max_digit: base.max_digit(),
                    });
                }
                match seen_point {
                    None => int_digits.push(d),
                    Some(_) => frac_digits.push(d),
                }
            }
            b'.' => {
                if seen_point.is_some() {
                    return Err(Error::Parse {
                        position: pos,
                        reason: "second radix point".to_string(),
                    });
                }
                if int_digits.is_empty() {
                    return Err(Error::Parse {
                        position: pos,
                        reason: "radix point before any digit".to_string(),
                    });
                }
                seen_point = Some(pos);
            }
            _ => {
                return Err(Error::Parse {
                    position: pos,
                    reason: std::format!("unexpected character {:?}", b as char),
                });
            }
        }
    }
    if seen_point.is_some() && frac_digits.is_empty() {
        return Err(Error::Parse {
            position: bytes.len() - 1,
            reason: "radix point with no fractional digits".to_string(),
        });
    }
    let max_exp = int_digits.len() as i32 - 1;
    let mut digits = int_digits;
    digits.extend_from_slice(&frac_digits);
    PositionalRepr::from_digits(base, max_exp, digits)
}

/// The integers at which representations in `base` grow one digit longer:
/// round(r^k) for k = 1..=count.
///
/// For base e these are 3, 7, 20, 55, 148, 403, 1097, ...
pub fn turning_points(base: BaseSpec, count: u32) -> Result<Vec<u64>> {
    if count < 1 {
        return Err(Error::InvalidParameter(
            "turning-point count must be at least 1".to_string(),
        ));
    }
    let mut points = Vec::with_capacity(count as usize);
    for k in 1..=count as i32 {
        let w = base.weight(k);
        if !w.is_finite() || w >= 9.2e18 {
            return Err(Error::InvalidParameter(std::format!(
                "r^{k} exceeds the integer range"
            )));
        }
        points.push(w.round() as u64);
    }
    Ok(points)
}

// --- wire format -----------------------------------------------------------
//
// {"base": r, "digits": [[exponent, digit], ...], "value": v, "target": t,
//  "error": e, "out_of_tolerance": flag}
// with digits listed in descending exponent order.

impl Serialize for PositionalRepr {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("PositionalRepr", 6)?;
        st.serialize_field("base", &self.base.r())?;
        let digits: Vec<(i32, u8)> = self.exponent_digits().collect();
        st.serialize_field("digits", &digits)?;
        st.serialize_field("value", &self.value)?;
        st.serialize_field("target", &self.target)?;
        st.serialize_field("error", &self.error)?;
        st.serialize_field("out_of_tolerance", &self.out_of_tolerance)?;
        st.end()
    }
}

#[derive(Deserialize)]
struct ReprRecord {
    base: f64,
    digits: Vec<(i32, u8)>,
    #[allow(dead_code)]
    value: f64,
    target: f64,
    #[allow(dead_code)]
    error: f64,
    out_of_tolerance: bool,
}

impl<'de> Deserialize<'de> for PositionalRepr {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let record = ReprRecord::deserialize(deserializer)?;
        let base = BaseSpec::new(record.base).map_err(D::Error::custom)?;
        if record.digits.is_empty() {
            return Err(D::Error::custom("empty digit list"));
        }
        let max_exp = record.digits[0].0;
        for (j, &(exp, _)) in record.digits.iter().enumerate() {
            if exp != max_exp - j as i32 {
                return Err(D::Error::custom(
                    "digit exponents must be contiguous and descending",
                ));
            }
        }
        let digits: Vec<u8> = record.digits.iter().map(|&(_, d)| d).collect();
        let mut repr =
            PositionalRepr::from_digits_for_target(base, max_exp, digits, record.target, f64::INFINITY)
                .map_err(D::Error::custom)?;
        repr.out_of_tolerance = record.out_of_tolerance;
        Ok(repr)
    }
}
