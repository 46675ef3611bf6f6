use crate::error::{Error, Result};
use std::fmt;

/// A positional radix: a real base `r > 1` together with its digit alphabet.
///
/// Digits run from 0 to [`max_digit`](BaseSpec::max_digit), where `max_digit`
/// is `r - 1` for integer bases and `ceil(r) - 1` otherwise. Base e therefore
/// carries the digit alphabet {0, 1, 2}, the same as base 3.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BaseSpec {
    r: f64,
    max_digit: u8,
}

impl BaseSpec {
    /// Largest supported base: the digit grammar only has characters '0'..'9'.
    pub const MAX_RADIX: f64 = 10.0;

    /// Build a base from any real radix in (1, 10].
    pub fn new(r: f64) -> Result<Self> {
        if !r.is_finite() || r <= 1.0 || r > Self::MAX_RADIX {
            return Err(Error::InvalidBase(r));
        }
        let max_digit = if r.fract() == 0.0 {
            r as u8 - 1
        } else {
            r.ceil() as u8 - 1
        };
        Ok(BaseSpec { r, max_digit })
    }

    /// Base e, the radix with the best economy; digits {0, 1, 2}.
    pub fn e() -> Self {
        BaseSpec {
            r: std::f64::consts::E,
            max_digit: 2,
        }
    }

    /// Build an integer base in 2..=10.
    pub fn from_integer(radix: u8) -> Result<Self> {
        if !(2..=10).contains(&radix) {
            return Err(Error::InvalidBase(radix as f64));
        }
        Self::new(radix as f64)
    }

    /// The radix value.
    pub fn r(&self) -> f64 {
        self.r
    }

    /// Largest digit the alphabet allows.
    pub fn max_digit(&self) -> u8 {
        self.max_digit
    }

    /// `Some(radix)` when the base is an integer, `None` otherwise.
    pub fn integer_radix(&self) -> Option<u8> {
        if self.r.fract() == 0.0 {
            Some(self.r as u8)
        } else {
            None
        }
    }

    /// r^i — the weight of the digit position at exponent `i`.
    ///
    /// All positional sums in the crate go through this single helper so that
    /// encoders, decoders, and searches agree bit-for-bit on position weights.
    pub(crate) fn weight(&self, i: i32) -> f64 {
        self.r.powi(i)
    }

    /// The exponent n with r^n <= x < r^(n+1), measured with the same powers
    /// used everywhere else (a plain floor(log) is adjusted so the invariant
    /// holds even when the logarithm lands a rounding error away from an
    /// integer).
    pub(crate) fn leading_exponent(&self, x: f64) -> i32 {
        debug_assert!(x > 0.0 && x.is_finite());
        let mut n = (x.ln() / self.r.ln()).floor() as i32;
        while self.weight(n + 1) <= x {
            n += 1;
        }
        while self.weight(n) > x {
            n -= 1;
        }
        n
    }
}

impl fmt::Display for BaseSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.r == std::f64::consts::E {
            write!(f, "e")
        } else {
            write!(f, "{}", self.r)
        }
    }
}

/// On the wire a base is just its radix value; the digit alphabet is derived.
impl serde::Serialize for BaseSpec {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_f64(self.r)
    }
}

impl<'de> serde::Deserialize<'de> for BaseSpec {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let r = f64::deserialize(deserializer)?;
        BaseSpec::new(r).map_err(serde::de::Error::custom)
    }
}
