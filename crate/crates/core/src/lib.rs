//! Exact real-rootedness and interlacing over the rationals.
//!
//! Polynomials have `BigRational` coefficients and every decision is exact:
//! root counting uses Sturm sequences, never floating point. On top of that
//! sit products that preserve real roots (`◇`, `⊙`, `f(D)g`), E-polynomials of
//! labelled posets, Ferrers posets and a seeded verification harness.
//!
//! ```
//! use realroots::{interlacing::interlaces, transforms::diamond, Polynomial};
//!
//! let f: Polynomial = "0 1 1".parse().unwrap(); // x + x^2
//! let g: Polynomial = "1 2".parse().unwrap(); // 1 + 2x
//! assert!(interlaces(&g, &f, true).unwrap());
//! assert_eq!(diamond(&f, &g).to_text(), "0 3 9 6");
//! ```

pub mod cli;
pub mod error;
pub mod ferrers;
pub mod interlacing;
pub mod poly;
pub mod posets;
pub mod random;
pub mod rootedness;
pub mod transforms;
pub mod verify;

pub use error::{Error, Result};
pub use poly::{Degree, Polynomial, Rational};
