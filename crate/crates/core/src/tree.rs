//! Successive-division representation trees and multiplicative counting
//! sequences.
//!
//! Dividing an integer by an integer base over and over yields a chain of
//! (quotient, remainder) steps whose remainders, read in reverse, are the
//! positional digits of the number. The chain exports to Graphviz DOT for
//! rendering. The counting sequence models r-fold branching per level:
//! counts A, A·b, A·b², ..., whose reversal is Max, Max·b⁻¹, Max·b⁻², ...

use crate::base::BaseSpec;
use crate::error::{Error, Result};
use serde::Serialize;
use std::fmt::Write as _;

/// One division step: `value = quotient × base + remainder`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DivisionStep {
    pub quotient: u64,
    pub remainder: u8,
}

/// The full division chain for one integer in one integer base, ending at
/// quotient 0.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DivisionTree {
    root: u64,
    base: BaseSpec,
    steps: Vec<DivisionStep>,
}

impl DivisionTree {
    pub fn root(&self) -> u64 {
        self.root
    }

    pub fn base(&self) -> BaseSpec {
        self.base
    }

    /// The (quotient, remainder) chain, first division first.
    pub fn steps(&self) -> &[DivisionStep] {
        &self.steps
    }

    /// Remainders read in reverse order: the positional digits of the root,
    /// most significant first.
    pub fn digits(&self) -> Vec<u8> {
        self.steps.iter().rev().map(|s| s.remainder).collect()
    }
}

/// Divide `x` by an integer base repeatedly until the quotient reaches 0.
///
/// `43` in base 3 produces the chain (14,1), (4,2), (1,1), (0,1) — that is,
/// 43 = 14×3+1, 14 = 4×3+2, 4 = 1×3+1, 1 = 0×3+1. Zero produces the single
/// step (0,0).
pub fn build_division_tree(x: u64, base: BaseSpec) -> Result<DivisionTree> {
    let Some(radix) = base.integer_radix() else {
        return Err(Error::IntegerBaseRequired(base.r()));
    };
    let r = radix as u64;
    let mut steps = Vec::new();
    if x == 0 {
        steps.push(DivisionStep {
            quotient: 0,
            remainder: 0,
        });
    } else {
        let mut v = x;
        while v > 0 {
            steps.push(DivisionStep {
                quotient: v / r,
                remainder: (v % r) as u8,
            });
            v /= r;
        }
    }
    Ok(DivisionTree {
        root: x,
        base,
        steps,
    })
}

/// Render the division chain as a Graphviz DOT digraph.
///
/// Each division step becomes a box labeled with its equation
/// ("43 = 14 × 3 + 1"), a final box holds the terminal quotient 0, and each
/// edge carries the remainder digit produced at that step. The output is
/// byte-identical across runs for identical input.
pub fn export_dot(tree: &DivisionTree) -> String {
    let mut out = String::new();
    out.push_str("digraph division {\n");
    out.push_str("    rankdir=TB;\n");
    out.push_str("    node [shape=box];\n");
    if tree.root() == 0 {
        out.push_str("    n0 [label=\"0\"];\n");
        out.push_str("}\n");
        return out;
    }
    let radix = tree.base().integer_radix().expect("trees use integer bases");
    let mut value = tree.root();
    for (i, step) in tree.steps().iter().enumerate() {
        let _ = writeln!(
            out,
            "    n{i} [label=\"{value} = {} × {radix} + {}\"];",
            step.quotient, step.remainder
        );
        value = step.quotient;
    }
    let _ = writeln!(out, "    n{} [label=\"0\"];", tree.steps().len());
    for (i, step) in tree.steps().iter().enumerate() {
        let _ = writeln!(out, "    n{i} -> n{} [label=\"{}\"];", i + 1, step.remainder);
    }
    out.push_str("}\n");
    out
}

/// A geometric counting sequence: counts[n] = initial · branchⁿ for
/// n = 0..=levels, the level populations of a tree that branches `branch`
/// ways at every level.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CountSequence {
    initial: f64,
    branch: f64,
    levels: u32,
    counts: Vec<f64>,
    max: f64,
}

impl CountSequence {
    pub fn initial(&self) -> f64 {
        self.initial
    }

    pub fn branch(&self) -> f64 {
        self.branch
    }

    pub fn levels(&self) -> u32 {
        self.levels
    }

    /// Level counts from the root down: initial, initial·b, ..., max.
    pub fn counts(&self) -> &[f64] {
        &self.counts
    }

    /// The final (largest) count.
    pub fn max(&self) -> f64 {
        self.max
    }

    /// The counts read backwards: max, max·b⁻¹, max·b⁻², ..., initial.
    pub fn reversed(&self) -> Vec<f64> {
        self.counts.iter().rev().copied().collect()
    }
}

/// Grow the counting sequence A, A·b, ..., A·b^levels by iterated
/// multiplication.
pub fn grow_counting_tree(initial: f64, branch: f64, levels: u32) -> Result<CountSequence> {
    if !initial.is_finite() || initial <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "initial count must be positive, got {initial}"
        )));
    }
    if !branch.is_finite() || branch <= 1.0 {
        return Err(Error::InvalidParameter(format!(
            "branching factor must exceed 1, got {branch}"
        )));
    }
    if levels < 1 {
        return Err(Error::InvalidParameter(
            "levels must be at least 1".to_string(),
        ));
    }
    let mut counts = Vec::with_capacity(levels as usize + 1);
    let mut c = initial;
    counts.push(c);
    for _ in 0..levels {
        c *= branch;
        if !c.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "counts overflow after {levels} levels of {branch}-fold branching"
            )));
        }
        counts.push(c);
    }
    Ok(CountSequence {
        initial,
        branch,
        levels,
        max: c,
        counts,
    })
}
