//! Acceptance suite: one test per reference criterion, each printing a
//! PASS line (visible with `cargo test --test acceptance -- --nocapture`).
//!
//! Reference tables the criteria check against come from the source
//! write-up of this numeration scheme; deviations the library makes on
//! purpose (documented in the repr/encode modules) are asserted explicitly
//! and noted in the printed output rather than silently skipped.

use basee::efficiency::{corpus_cost, efficiency, optimal_base};
use basee::fit::{fit_power, fit_saturated};
use basee::powerlaw::{benford_pmf, benford_raw, benford_series, compare_table, RankedDistribution};
use basee::sim::{leading_digit_experiment, SizeSampler};
use basee::tree::build_division_tree;
use basee::{
    decode, encode_best, encode_greedy, encode_integer_base, encode_wf, format, parse, BaseSpec,
    EncodeRequest,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::E;
use std::time::Instant;

#[test]
fn criterion_01_efficiency_table_for_reference_bases() {
    let start = Instant::now();
    let bases = [2.0, E, 3.0, 4.0, 5.0, 8.0, 10.0];
    let nats_row = [0.347, 0.368, 0.366, 0.347, 0.322, 0.260, 0.230];
    let bits_row = [0.500, 0.531, 0.528, 0.500, 0.465, 0.375, 0.332];
    for ((r, nats), bits) in bases.iter().zip(nats_row).zip(bits_row) {
        let report = efficiency(*r).unwrap();
        assert!(
            (report.nats - nats).abs() <= 1e-3,
            "r = {r}: nats {} vs {}",
            report.nats,
            nats
        );
        assert!(
            (report.bits - bits).abs() <= 1e-3,
            "r = {r}: bits {} vs {}",
            report.bits,
            bits
        );
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    println!(
        "criterion 1 PASS: E(r) matches the reference table for 7 bases within 0.001 \
         ({elapsed:?}); note: the base-10 bits cell computes to 0.33219, which rounds to \
         0.332 — the reference prints 0.331, off by 0.0012"
    );
}

#[test]
fn criterion_02_optimal_base_is_e() {
    let argmax = optimal_base(2.0, 4.0).unwrap();
    assert!((argmax - E).abs() < 1e-6, "argmax = {argmax}");
    let at_peak = efficiency(argmax).unwrap();
    assert!((at_peak.nats - 0.368).abs() <= 1e-3);
    assert!((at_peak.bits - 0.531).abs() <= 1e-3);
    println!(
        "criterion 2 PASS: argmax of E on [2, 4] = {argmax:.9} (e within 1e-6), \
         E = {:.3} nats / {:.3} bits",
        at_peak.nats, at_peak.bits
    );
}

/// Reference table of base-e encodings to four fractional digits, n = 1..20.
/// Row 8 lists two forms; the first is recorded here.
const TABLE2_REFERENCE: [&str; 20] = [
    "1", "2", "10.0200", "11.0200", "12.0200", "20.1110", "21.1110", "22.1110", "101.1120",
    "102.1120", "110.2101", "111.2101", "112.2101", "121.0102", "122.0102", "201.0110",
    "202.0110", "210.1100", "211.1100", "212.1100",
];

/// Rows where the reference strings are not greedy outputs, with what the
/// greedy rule actually produces. These deviations are logged, not silently
/// corrected: each reference string decodes farther from n than the greedy
/// string does (or, for row 8, is the table's alternative form).
const GREEDY_DEVIATIONS: [(usize, &str); 5] = [
    (8, "100.1120"),
    (13, "120.0102"),
    (15, "200.0112"),
    (16, "201.0112"),
    (17, "202.0112"),
];

#[test]
fn criterion_03_four_place_encodings_and_the_two_forms_of_eight() {
    let e = BaseSpec::e();
    let mut deviations = Vec::new();
    for (n, reference) in (1..=20u64).zip(TABLE2_REFERENCE) {
        let repr = encode_greedy(&EncodeRequest::new(n as f64, e, 4).unwrap());
        let text = format(&repr);
        match GREEDY_DEVIATIONS.iter().find(|&&(row, _)| row as u64 == n) {
            None => assert_eq!(text, reference, "n = {n}"),
            Some(&(_, greedy_expected)) => {
                assert_eq!(text, greedy_expected, "n = {n}");
                // the greedy string must sit at least as close to n as the
                // reference string it replaces, otherwise the deviation
                // would be a bug rather than a logged table discrepancy
                let reference_value = decode(&parse(reference, e).unwrap());
                assert!(
                    repr.error().abs() <= (reference_value - n as f64).abs() + 1e-12,
                    "n = {n}: greedy must not be worse than the reference row"
                );
                deviations.push(n);
            }
        }
    }
    assert_eq!(deviations, vec![8, 13, 15, 16, 17]);

    // the two forms of 8: the four-place form 100.1120 decodes to 7.992,
    // closer to 8 than 22.1110's 7.989
    let first_form = decode(&parse("22.1110", e).unwrap());
    let second_form = decode(&parse("100.1120", e).unwrap());
    assert!((first_form - 7.989).abs() <= 1e-3, "got {first_form}");
    assert!((second_form - 7.992).abs() <= 1e-3, "got {second_form}");
    assert!((8.0 - second_form).abs() < (8.0 - first_form).abs());

    // the minimum-error search must do at least as well as both forms
    let best = encode_best(&EncodeRequest::new(8.0, e, 4).unwrap());
    assert_eq!(format(&best), "22.1111");
    assert!(best.error().abs() <= (second_form - 8.0).abs());
    assert!(best.error().abs() <= (first_form - 8.0).abs());

    println!(
        "criterion 3 PASS: greedy matches the reference table on 15/20 rows; rows \
         8, 13, 15, 16, 17 deviate as logged (each greedy string decodes at least as \
         close to n as the reference row; row 8 greedy = 100.1120, the table's own \
         second form, 7.992 > 7.989 as stated)"
    );
    println!(
        "criterion 3 note: the minimum-|error| string for 8 at four places is 22.1111 \
         (|error| 0.0079), strictly better than 100.1120 (0.0082) and 22.1110 (0.0104); \
         the search result is pinned to it by the exhaustive-optimality criterion"
    );
}

// frozen reference column as printed at three decimals; row 3's 2.718 is the
// rounded display value, not a stand-in for the exact constant
#[allow(clippy::approx_constant)]
const TABLE3_WF: [(&str, f64); 20] = [
    ("1", 1.0),
    ("2", 2.0),
    ("10", 2.718),
    ("11", 3.718),
    ("12", 4.718),
    ("21", 6.436),
    ("22", 7.436),
    ("101", 8.389),
    ("102", 9.389),
    ("110", 10.107),
    ("111", 11.107),
    ("112", 12.107),
    ("120", 12.825),
    ("121", 13.825),
    ("122", 14.825),
    ("201", 15.778),
    ("202", 16.778),
    ("211", 18.496),
    ("212", 19.496),
    ("220", 20.214),
];

#[test]
fn criterion_04_whole_form_table() {
    for (n, (expected, true_value)) in (1..=20u64).zip(TABLE3_WF) {
        let repr = encode_wf(n);
        assert_eq!(format(&repr), expected, "n = {n}");
        assert!(repr.error().abs() < 0.5, "n = {n}: error {}", repr.error());
        assert!(
            (repr.value() - true_value).abs() <= 1e-3,
            "n = {n}: decoded {} vs true value {true_value}",
            repr.value()
        );
    }
    println!(
        "criterion 4 PASS: whole-form encodings of 1..20 match all 20 reference \
         strings, every |error| < 0.5, decoded values within 0.001 of the true-value column"
    );
}

#[test]
fn criterion_05_corpus_cost_comparison() {
    let bases = [
        BaseSpec::e(),
        BaseSpec::from_integer(2).unwrap(),
        BaseSpec::from_integer(3).unwrap(),
    ];
    let reports = corpus_cost(1..=20, &bases).unwrap();
    assert_eq!(reports[0].total_digits, 51, "base e digit total");
    assert_eq!(reports[1].total_digits, 74, "base 2 digit total");
    assert_eq!(reports[2].total_digits, 50, "base 3 digit total");
    assert!((reports[0].cost_nats - 51.0).abs() < 1e-9);
    assert!(
        (reports[1].cost_nats - 51.29).abs() <= 0.02,
        "base 2 cost = {}",
        reports[1].cost_nats
    );
    assert!(
        (reports[2].cost_nats - 54.93).abs() <= 0.01,
        "base 3 cost = {}",
        reports[2].cost_nats
    );
    assert!(reports[0].cost_nats < reports[1].cost_nats);
    assert!(reports[0].cost_nats < reports[2].cost_nats);
    println!(
        "criterion 5 PASS: digit totals over 1..20 are 51 / 74 / 50 for bases e / 2 / 3; \
         costs 51.000 / {:.3} / {:.3} nats with base e strictly smallest \
         (74·ln 2 = 51.293 exactly; the reference's 51.282 used a rounded ln 2)",
        reports[1].cost_nats, reports[2].cost_nats
    );
}

#[test]
fn criterion_06_ranked_law_comparison_table() {
    let table = compare_table(6, 2.5).unwrap();
    let exp_cells = [1.0, 0.368, 0.135, 0.050, 0.018, 0.007];
    let pow_cells = [1.0, 0.178, 0.064, 0.031, 0.018, 0.011];
    for ((row, exp_cell), pow_cell) in table.rows.iter().zip(exp_cells).zip(pow_cells) {
        assert!(
            (row.exponential - exp_cell).abs() <= 2e-3,
            "k = {}: {} vs {}",
            row.k,
            row.exponential,
            exp_cell
        );
        assert!(
            (row.power - pow_cell).abs() <= 2e-3,
            "k = {}: {} vs {}",
            row.k,
            row.power,
            pow_cell
        );
    }
    println!(
        "criterion 6 PASS: e^(-(k-1)) and k^(-2.5) for k = 1..6 match all 12 reference \
         cells within 0.002"
    );
}

/// Independent brute force: enumerate every digit string over exponents
/// hi..=lo (digits 0..=2 in base e) and return the smallest |value − x|.
/// Strings with a leading digit above `hi` are dominated: their value is at
/// least e·x, farther from x than the all-zero string already enumerated.
fn exhaustive_min_error(x: f64, max_frac_digits: i32) -> f64 {
    let mut hi = 0i32;
    while E.powi(hi + 1) <= x {
        hi += 1;
    }
    hi += 1; // one position above the leading exponent, for upward rounding
    let lo = -max_frac_digits;
    let positions = (hi - lo + 1) as usize;
    let mut digits = vec![0u8; positions];
    let mut best = f64::INFINITY;
    loop {
        let mut value = 0.0;
        for (j, &d) in digits.iter().enumerate() {
            value += d as f64 * E.powi(hi - j as i32);
        }
        let err = (value - x).abs();
        if err < best {
            best = err;
        }
        // odometer increment over base-3 digit vectors
        let mut j = positions;
        loop {
            if j == 0 {
                return best;
            }
            j -= 1;
            if digits[j] < 2 {
                digits[j] += 1;
                break;
            }
            digits[j] = 0;
        }
    }
}

#[test]
fn criterion_07_search_matches_the_exhaustive_oracle() {
    let start = Instant::now();
    let e = BaseSpec::e();
    for x in 1..=30u64 {
        for m in 0..=3u32 {
            let request = EncodeRequest::new(x as f64, e, m).unwrap();
            let best = encode_best(&request);
            let oracle = exhaustive_min_error(x as f64, m as i32);
            assert_eq!(
                best.error().abs(),
                oracle,
                "x = {x}, m = {m}: search found {}, oracle found {oracle}",
                best.error().abs()
            );
            let greedy = encode_greedy(&request);
            assert!(best.error().abs() <= greedy.error().abs(), "x = {x}, m = {m}");
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 60, "took {elapsed:?}");
    println!(
        "criterion 7 PASS: minimum-error search equals the exhaustive oracle exactly for \
         all x in 1..30, m in 0..3 ({elapsed:?})"
    );
}

#[test]
fn criterion_08_benford_normalization_and_series() {
    for r in 2..=10u8 {
        let base = BaseSpec::from_integer(r).unwrap();
        let total: f64 = (1..=base.max_digit())
            .map(|n| benford_pmf(base, n).unwrap())
            .sum();
        assert!((total - 1.0).abs() < 1e-12, "base {r}: sum = {total}");
    }
    for n in 1..=9u64 {
        let series = benford_series(n, 50).unwrap();
        let formula = benford_raw(E, n).unwrap();
        assert!(
            (series - formula).abs() < 1e-12,
            "n = {n}: series {series} vs formula {formula}"
        );
    }
    // where the base-e digit alphabet covers n, the checked pmf agrees
    let e = BaseSpec::e();
    for n in 1..=2u8 {
        assert_eq!(
            benford_pmf(e, n).unwrap(),
            benford_raw(E, n as u64).unwrap()
        );
    }
    println!(
        "criterion 8 PASS: leading-digit probabilities sum to 1 within 1e-12 for every \
         integer base 2..10; the series converges to ln(1 + 1/n) within 1e-12 at 50 terms \
         for n = 1..9 (digits above 2 use the raw formula — base e's digit alphabet ends \
         at 2, so its checked pmf covers n = 1, 2 only)"
    );
}

#[test]
fn criterion_09_fit_round_trips_and_residual_ordering() {
    let scales = [0.05, 1.0, 250.0];
    for alpha in [0.5, 0.8, 1.0] {
        let clean = RankedDistribution::saturated(10, alpha).unwrap();
        for c in scales {
            let data = RankedDistribution::empirical(
                clean.values().iter().map(|v| v * c).collect(),
            )
            .unwrap();
            let fit = fit_saturated(&data).unwrap();
            assert!(
                (fit.parameter - alpha).abs() < 1e-9,
                "alpha = {alpha}, scale = {c}: got {}",
                fit.parameter
            );
        }
    }
    for gamma in [1.0, 2.5, 3.0] {
        let clean = RankedDistribution::power(10, gamma).unwrap();
        for c in scales {
            let data = RankedDistribution::empirical(
                clean.values().iter().map(|v| v * c).collect(),
            )
            .unwrap();
            let fit = fit_power(&data).unwrap();
            assert!(
                (fit.parameter - gamma).abs() < 1e-9,
                "gamma = {gamma}, scale = {c}: got {}",
                fit.parameter
            );
        }
    }
    // cross-family ordering: exponential-generated data is explained
    // exactly by the saturated family and only approximately by a power law
    let exp_data = RankedDistribution::exponential(6).unwrap();
    let saturated = fit_saturated(&exp_data).unwrap();
    let power = fit_power(&exp_data).unwrap();
    assert!(saturated.residual < power.residual);
    println!(
        "criterion 9 PASS: saturated fits recover alpha in {{0.5, 0.8, 1.0}} and power fits \
         recover gamma in {{1.0, 2.5, 3.0}} within 1e-9 across positive rescalings; \
         saturated explains exponential data strictly better than power \
         ({:.2e} vs {:.2e} residual)",
        saturated.residual, power.residual
    );
}

#[test]
fn criterion_10_leading_digit_simulation() {
    let start = Instant::now();
    let ten = BaseSpec::from_integer(10).unwrap();
    let sampler = SizeSampler::LogUniform {
        min: 10,
        max: 1_000_000,
    };
    let seed = 20_260_821;
    let pmf = leading_digit_experiment(1_000_000, ten, sampler, seed).unwrap();
    let p1 = pmf.frequency(1);
    assert!((p1 - 0.301).abs() <= 0.02, "P(1) = {p1}");

    let base_e = leading_digit_experiment(200_000, BaseSpec::e(), sampler, seed).unwrap();
    assert_eq!(base_e.support(), vec![1, 2]);

    let again = leading_digit_experiment(1_000_000, ten, sampler, seed).unwrap();
    assert_eq!(pmf, again, "same seed must reproduce identical tallies");

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 30, "took {elapsed:?}");
    println!(
        "criterion 10 PASS: 10^6 log-uniform draws give P(leading digit 1) = {p1:.4} \
         (reference 0.301 ± 0.02); base-e support is exactly {{1, 2}}; reruns with the \
         same seed reproduce identical tallies ({elapsed:?})"
    );
}

#[test]
fn criterion_11_division_trees_match_positional_digits() {
    let three = BaseSpec::from_integer(3).unwrap();
    let tree = build_division_tree(43, three).unwrap();
    let chain: Vec<(u64, u8)> = tree.steps().iter().map(|s| (s.quotient, s.remainder)).collect();
    assert_eq!(chain, vec![(14, 1), (4, 2), (1, 1), (0, 1)]);

    let mut rng = ChaCha8Rng::seed_from_u64(431);
    for _ in 0..1000 {
        let x: u64 = rng.gen_range(0..=1_000_000);
        let r: u8 = rng.gen_range(2..=10);
        let base = BaseSpec::from_integer(r).unwrap();
        let tree = build_division_tree(x, base).unwrap();
        let encoded = encode_integer_base(x, base).unwrap();
        assert_eq!(
            tree.digits(),
            encoded.digits(),
            "x = {x}, base = {r}: reversed remainders must be the positional digits"
        );
        assert_eq!(tree.steps().last().unwrap().quotient, 0);
    }
    println!(
        "criterion 11 PASS: the division chain of 43 in base 3 is (14,1), (4,2), (1,1), \
         (0,1), and reversed remainders equal positional digits for 1000 random (x, base) pairs"
    );
}
