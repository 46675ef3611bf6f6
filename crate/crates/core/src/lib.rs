//! Positional numeration in arbitrary real bases, centered on base e.
//!
//! The crate covers four connected areas:
//!
//! * **Representation** — digit strings over any real base in (1, 10]
//!   ([`BaseSpec`], [`PositionalRepr`]), with parsing, formatting, decoding,
//!   and a JSON wire form.
//! * **Encoding** — greedy most-significant-first digits
//!   ([`encode_greedy`]), exhaustive minimum-error search ([`encode_best`]),
//!   fraction-free whole-form encoding ([`encode_wf`]), and exact integer
//!   bases ([`encode_integer_base`]).
//! * **Economy** — the per-symbol cost function E(r) = ln r / r, its
//!   maximiser, digit-corpus costs, and symbol information content.
//! * **Distributions** — leading-digit laws, ranked probability families
//!   with log-domain least-squares fitting, division trees, and a seeded
//!   leading-digit sampling experiment.

mod base;
mod encode;
mod error;
mod repr;

pub mod efficiency;
pub mod fit;
pub mod powerlaw;
pub mod sim;
pub mod tree;

pub use base::BaseSpec;
pub use encode::{
    encode_best, encode_greedy, encode_integer_base, encode_wf, encode_wf_in_base, EncodeRequest,
    DEFAULT_TOLERANCE,
};
pub use error::{Error, Result};
pub use repr::{decode, format, parse, turning_points, PositionalRepr};
