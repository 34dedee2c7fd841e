//! Exact-arithmetic construction of Appell polynomial families.
//!
//! Every family is carried by a transfer matrix `M = f(H)`, where `H` is
//! the creation matrix (subdiagonal 1..m, nilpotent of degree m+1) and `f`
//! is the family's generating-function factor. Because `H` is nilpotent,
//! every series in `H` is a finite sum and all arithmetic stays in exact
//! rationals, so the classical polynomial identities (translation,
//! multiplication theorem, symmetry, the inverse-coefficient recurrence)
//! hold as exact equalities and are verified that way.
//!
//! Module map:
//! - [`rat`]: the exact rational scalar.
//! - [`matrix`]: the lower-triangular kernel (`H`, Pascal matrices,
//!   diagonal scalings, truncated series, forward-substitution inverse).
//! - [`families`]: transfer-matrix builders and the Taylor/inverse
//!   coefficient machinery.
//! - [`appell`]: the Appell vector `p(x) = M xi(x)` and its identities,
//!   plus reconstruction of classical Hermite/Laguerre/Legendre/Chebyshev
//!   values.
//! - [`oracles`]: independent reference implementations (recurrences,
//!   series division) used only for cross-validation.
//! - [`verify`]: the seeded exact-identity suite behind `appell verify`.

pub mod appell;
pub mod error;
pub mod families;
pub mod matrix;
pub mod oracles;
pub mod rat;
pub mod verify;

pub use appell::AppellVector;
pub use error::{Error, Result};
pub use families::{FamilySpec, TransferMatrix};
pub use matrix::{LTMatrix, RatVector};
pub use rat::Rat;
