//! Exact representation theory of ordinary metacyclic p-groups.
//!
//! A group is given by the parameters `(p, n, m, r, s)` of its uniquely
//! reduced presentation
//!
//! ```text
//! G = < a, b | a^(p^n) = 1, b^(p^m) = a^(p^(n-r)), b a b^-1 = a^(1+p^(n-s)) >
//! ```
//!
//! From those five numbers the crate builds every complex irreducible
//! representation, groups them into Galois conjugacy classes, produces
//! integral rational matrix representations, and evaluates the closed-form
//! Wedderburn decomposition of the rational group algebra. The [`oracle`]
//! module recomputes the same data by brute force.
//!
//! ```
//! use metacyclic::{presentation::{validate, MetacyclicParams}, wedderburn::decompose};
//!
//! let g = validate(MetacyclicParams::new(2, 5, 3, 0, 2)).unwrap();
//! assert_eq!(
//!     decompose(&g).to_string(),
//!     "4 Q + 6 Q(z4) + 12 Q(z8) + 4 M2(Q(z8)) + 2 M4(Q(z8))"
//! );
//! ```

pub mod arith;
pub mod complex_reps;
pub mod cyclotomic;
pub mod matrix;
pub mod oracle;
pub mod presentation;
pub mod rational_reps;
pub mod wedderburn;

mod error;

pub use error::{Error, Result, ValidationError};
