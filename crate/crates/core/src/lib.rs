//! Affine pavings of regular nilpotent Hessenberg varieties in classical types.
//!
//! The crate is organised bottom-up:
//!
//! - [`rootcore`]: root systems of types A–D, the dominance order, the row
//!   decomposition of the positive roots and the Weyl group with inversion sets.
//! - [`hessenberg`]: Hessenberg spaces encoded as root subsets `Φ_H ⊇ Φ⁺`.
//! - [`paving`]: nonempty Bruhat cells, their dimensions and Betti numbers.
//! - [`liealg`]: explicit matrix realizations, the row operators `ψ_i` and `θ_i`,
//!   machine checks of the supporting identities and constructive witnesses.
//! - [`fforacle`]: a brute-force type-A point count over small prime fields.
//! - [`linalg`]: small dense matrices and exact elimination over `Q`.
//! - [`cli`]: the `hessenpave` command line driver.
//!
//! All arithmetic is exact (integers and rationals); nothing here uses floats.
//!
//! ```
//! use hessenpave::{hessenberg::HessenbergSpace, paving, rootcore::{LieType, RootSystem}};
//!
//! let rs = RootSystem::new(LieType::A, 2).unwrap();
//! let peterson = HessenbergSpace::peterson(&rs);
//! assert_eq!(paving::poincare_polynomial(&peterson).coefficients(), &[1, 2, 1]);
//! ```

pub mod cli;
pub mod error;
pub mod fforacle;
pub mod hessenberg;
pub mod liealg;
pub mod linalg;
pub mod paving;
pub mod rootcore;

pub use error::{Error, Result};
