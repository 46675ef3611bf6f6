use crate::base::BaseSpec;
use crate::error::{Error, Result};
use crate::repr::PositionalRepr;

/// Default error budget: representations whose absolute error reaches one
/// half are flagged as out of tolerance.
pub const DEFAULT_TOLERANCE: f64 = 0.5;

/// Everything an encoder needs: the number to represent, the base, how many
/// fractional positions it may spend, and the error budget used to set the
/// `out_of_tolerance` flag on the result.
#[derive(Debug, Clone, Copy)]
pub struct EncodeRequest {
    target: f64,
    base: BaseSpec,
    max_frac_digits: u32,
    epsilon: f64,
}

impl EncodeRequest {
    /// A request with the default tolerance of 0.5.
    pub fn new(target: f64, base: BaseSpec, max_frac_digits: u32) -> Result<Self> {
        Self::with_tolerance(target, base, max_frac_digits, DEFAULT_TOLERANCE)
    }

    /// A request with an explicit error budget (must be positive and finite).
    pub fn with_tolerance(
        target: f64,
        base: BaseSpec,
        max_frac_digits: u32,
        epsilon: f64,
    ) -> Result<Self> {
        if !target.is_finite() || target < 0.0 {
            return Err(Error::InvalidTarget(target));
        }
        if !epsilon.is_finite() || epsilon <= 0.0 {
            return Err(Error::InvalidEpsilon(epsilon));
        }
        // keep every positional weight representable: r^-m must not underflow
        if max_frac_digits as f64 * base.r().ln() > 700.0 {
            return Err(Error::InvalidParameter(format!(
                "max_frac_digits {max_frac_digits} is too deep for base {base}"
            )));
        }
        Ok(EncodeRequest {
            target,
            base,
            max_frac_digits,
            epsilon,
        })
    }

    pub fn target(&self) -> f64 {
        self.target
    }

    pub fn base(&self) -> BaseSpec {
        self.base
    }

    pub fn max_frac_digits(&self) -> u32 {
        self.max_frac_digits
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }
}

/// Most-significant-first greedy digits over the exponent range hi..=lo:
/// each position takes the largest digit that fits the remaining residual.
fn greedy_digits(base: &BaseSpec, target: f64, hi: i32, lo: i32) -> Vec<u8> {
    let max_digit = base.max_digit() as f64;
    let mut residual = target;
    let mut digits = Vec::with_capacity((hi - lo + 1) as usize);
    for i in (lo..=hi).rev() {
        let w = base.weight(i);
        let d = (residual / w).floor().clamp(0.0, max_digit);
        residual -= d * w;
        digits.push(d as u8);
    }
    digits
}

/// Rebuild a representation from a full digit run, dropping trailing zeros
/// that sit below the radix point (they contribute nothing to the value).
fn build_stripped(
    base: BaseSpec,
    hi: i32,
    mut digits: Vec<u8>,
    lo: i32,
    target: f64,
    epsilon: f64,
) -> PositionalRepr {
    let mut cur_lo = lo;
    while digits.len() > 1 && cur_lo < 0 && *digits.last().unwrap() == 0 {
        digits.pop();
        cur_lo += 1;
    }
    PositionalRepr::from_digits_for_target(base, hi, digits, target, epsilon)
        .expect("digits validated during search")
}

/// Encode by the greedy rule: digits are chosen most-significant-first, each
/// position taking the largest digit that does not overshoot the residual.
///
/// The result spans from the leading exponent of the target down to
/// `-max_frac_digits`; trailing fractional zeros are kept so the digit
/// budget is visible in the output, except when the encoding is exact, in
/// which case the clean integer form is returned.
pub fn encode_greedy(request: &EncodeRequest) -> PositionalRepr {
    let base = request.base;
    let target = request.target;
    let lo = -(request.max_frac_digits as i32);
    if target == 0.0 {
        return PositionalRepr::zero_for_target(base, target, request.epsilon);
    }
    let hi = base.leading_exponent(target);
    if hi < lo {
        // the whole target is smaller than the finest available position
        return PositionalRepr::zero_for_target(base, target, request.epsilon);
    }
    let digits = greedy_digits(&base, target, hi, lo);
    let repr = PositionalRepr::from_digits_for_target(base, hi, digits, target, request.epsilon)
        .expect("greedy digits are within the base alphabet");
    if repr.error() == 0.0 && repr.min_exp() < 0 {
        return build_stripped(
            base,
            repr.max_exp(),
            repr.digits().to_vec(),
            repr.min_exp(),
            target,
            request.epsilon,
        );
    }
    repr
}

// --- minimum-error search ---------------------------------------------------

/// Canonical comparison key for tie-breaking between equal-error encodings:
/// fewer significant digits first, then the lexicographically smaller text.
fn canonical_key(base: BaseSpec, hi: i32, digits: &[u8], lo: i32, target: f64) -> (usize, String) {
    let repr = build_stripped(base, hi, digits.to_vec(), lo, target, f64::INFINITY);
    (repr.digit_count(), crate::repr::format(&repr))
}

struct MinErrorSearch {
    base: BaseSpec,
    target: f64,
    max_digit: u8,
    hi: i32,
    lo: i32,
    weights: Vec<f64>,
    /// suffix_max[k] = largest value positions k.. can still contribute
    suffix_max: Vec<f64>,
    best_err: f64,
    best_digits: Vec<u8>,
    best_key: (usize, String),
    path: Vec<u8>,
}

impl MinErrorSearch {
    fn run(base: BaseSpec, target: f64, hi: i32, lo: i32, epsilon: f64) -> PositionalRepr {
        let n = (hi - lo + 1) as usize;
        let weights: Vec<f64> = (0..n).map(|k| base.weight(hi - k as i32)).collect();
        let mut suffix_max = vec![0.0; n + 1];
        for k in (0..n).rev() {
            suffix_max[k] = suffix_max[k + 1] + base.max_digit() as f64 * weights[k];
        }
        // seed the incumbent with the greedy encoding over the same range
        let seed = greedy_digits(&base, target, hi, lo);
        let mut seed_value = 0.0;
        for (k, &d) in seed.iter().enumerate() {
            seed_value += d as f64 * weights[k];
        }
        let mut search = MinErrorSearch {
            base,
            target,
            max_digit: base.max_digit(),
            hi,
            lo,
            weights,
            suffix_max,
            best_err: (seed_value - target).abs(),
            best_key: canonical_key(base, hi, &seed, lo, target),
            best_digits: seed,
            path: Vec::with_capacity(n),
        };
        search.descend(0, 0.0);
        build_stripped(base, hi, search.best_digits, lo, target, epsilon)
    }

    fn descend(&mut self, k: usize, value: f64) {
        if k == self.weights.len() {
            let err = (value - self.target).abs();
            if err > self.best_err {
                return;
            }
            let key = canonical_key(self.base, self.hi, &self.path, self.lo, self.target);
            if err < self.best_err || key < self.best_key {
                self.best_err = err;
                self.best_digits = self.path.clone();
                self.best_key = key;
            }
            return;
        }
        let w = self.weights[k];
        for d in 0..=self.max_digit {
            let v = value + d as f64 * w;
            if v - self.target > self.best_err {
                // already overshooting by more than the incumbent; larger
                // digits only overshoot further
                break;
            }
            if v + self.suffix_max[k + 1] < self.target - self.best_err {
                // even all-max digits below cannot come close enough
                continue;
            }
            self.path.push(d);
            self.descend(k + 1, v);
            self.path.pop();
        }
    }
}

/// Encode with the minimum achievable absolute error for the given base and
/// fractional-digit budget, searching every admissible digit string.
///
/// Ties are broken toward fewer significant digits, then toward the
/// lexicographically smaller rendering. The result never carries trailing
/// fractional zeros: among equal-error strings the shortest is canonical.
///
/// The search is a pruned branch-and-bound over per-position digit choices.
/// Non-integer bases admit many expansions of the same number, and the
/// number of near-optimal candidates grows exponentially with the position
/// count `log_r(target) + max_frac_digits`, so bases close to 1 combined
/// with large targets can make this search very slow. Bases of 2 and above
/// stay fast for targets well past a million.
pub fn encode_best(request: &EncodeRequest) -> PositionalRepr {
    let base = request.base;
    let target = request.target;
    let lo = -(request.max_frac_digits as i32);
    if target == 0.0 {
        return PositionalRepr::zero_for_target(base, target, request.epsilon);
    }
    // one position above the leading exponent lets the search round upward
    // across a power boundary (e.g. prefer r^k over a string just below it)
    let hi = (base.leading_exponent(target) + 1).max(lo);
    MinErrorSearch::run(base, target, hi, lo, request.epsilon)
}

/// Whole-form encoding: represent a nonnegative integer using digit
/// positions at nonnegative exponents only (no radix point), choosing the
/// digit string with the smallest absolute error. Results at least half a
/// unit away from the target are flagged out of tolerance.
///
/// Shares the min-error search with [`encode_best`], including its
/// exponential worst case for bases close to 1 with large inputs.
pub fn encode_wf_in_base(x: u64, base: BaseSpec) -> PositionalRepr {
    let target = x as f64;
    if x == 0 {
        return PositionalRepr::zero_for_target(base, target, DEFAULT_TOLERANCE);
    }
    let hi = base.leading_exponent(target);
    MinErrorSearch::run(base, target, hi, 0, DEFAULT_TOLERANCE)
}

/// Whole-form encoding in base e.
pub fn encode_wf(x: u64) -> PositionalRepr {
    encode_wf_in_base(x, BaseSpec::e())
}

/// Exact positional encoding of an integer in an integer base (2..=10) by
/// repeated division; the error is always zero.
pub fn encode_integer_base(x: u64, base: BaseSpec) -> Result<PositionalRepr> {
    let Some(radix) = base.integer_radix() else {
        return Err(Error::IntegerBaseRequired(base.r()));
    };
    if x == 0 {
        return Ok(PositionalRepr::zero(base));
    }
    let radix = radix as u64;
    let mut digits = Vec::new();
    let mut q = x;
    while q > 0 {
        digits.push((q % radix) as u8);
        q /= radix;
    }
    digits.reverse();
    let max_exp = digits.len() as i32 - 1;
    PositionalRepr::from_digits(base, max_exp, digits)
}
