//! Matrix realizations of the classical Lie algebras and the computations
//! built on them: structure constants, the row operators `ψ_i(N)` and
//! `θ_i(N)`, randomized checks of the identities the paving relies on, and
//! constructive witnesses for nonempty cells.
//!
//! Everything is exact over `Q`.

mod element;
mod lemmata;
mod ops;
mod realization;
mod witness;

pub use element::{LieElement, NilpotentElement};
pub use lemmata::{verify_lemmata, CheckResult, CheckStatus, LemmaReport, CHECK_NAMES};
pub use ops::nilpotent_exp;
pub use realization::{ChevalleyRealization, StructureConstantTable};
pub use witness::{find_witness, StageRecord, WitnessRecord, WitnessResult};
