//! Exact noncommutative rewriting for Temperley–Lieb algebras of the complex
//! reflection groups G(d,1,n), with the accompanying combinatorics.
//!
//! * [`scalars`]: rationals and polynomials in δ.
//! * [`free_algebra`]: words, the degree-lexicographic order, free-algebra
//!   elements.
//! * [`rewrite`]: normal forms, compositions, closure checks, standard-word
//!   enumeration and bounded completion.
//! * [`presentations`]: relations and Gröbner–Shirshov bases of T(A_{n-1}),
//!   T(B_n), T(d,n); standard monomials; dimensions; products; subalgebras.
//! * [`combinatorics`]: Catalan triangle, G(d,1,n)-Dyck paths, fully
//!   commutative words, packets and a wreath-product group oracle.
//! * [`cli`]: the `tlgsb` command-line front end.

pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod free_algebra;
pub mod presentations;
pub mod rewrite;
pub mod scalars;

pub use error::{Error, Result};
pub use free_algebra::{Alphabet, NcPoly, Word};
pub use rewrite::{RewriteRule, RuleSet};
pub use scalars::{DeltaPoly, Rational};
