//! Saturation numbers of monomial ideals and their powers.
//!
//! The crate works with monomial ideals of `S = K[x1, ..., xn]` purely
//! through exponent vectors; no coefficient field is ever materialized.
//! On top of the ideal arithmetic in [`ideal`] it provides
//!
//! - colon chains, saturation numbers and the graded profile of
//!   `I^sat / I` ([`saturation`]),
//! - exact quasi-linear fits of `k ↦ sat(I^k)` ([`quasilinear`]),
//! - associated primes and the scaling law `sat(I^k) = k·sat(I)` ([`primes`]),
//! - `k`-bounded Borel closures, the order `⪯_k` and squarefree Veronese
//!   formulas ([`borel`]),
//! - polymatroid rank functions and intersection presentations
//!   ([`polymatroid`], [`presentation`]),
//! - a reproduction suite that checks the closed formulas against colon
//!   chains ([`verify`]).

pub mod borel;
pub mod catalog;
pub mod error;
pub mod format;
pub mod ideal;
pub mod limits;
pub mod monomial;
pub mod polymatroid;
pub mod presentation;
pub mod primes;
pub mod quasilinear;
pub mod saturation;
pub mod verify;

pub use error::{Error, Result};
pub use ideal::MonomialIdeal;
pub use limits::Limits;
pub use monomial::{Monomial, VarSet};
pub use presentation::IntersectionPresentation;
