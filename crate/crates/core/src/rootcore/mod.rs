//! Classical root systems, their row decomposition and Weyl groups.

mod root;
mod rows;
mod system;
mod weyl;

pub use root::{parse_coeffs, parse_word, word_to_text, LieType, Root};
pub use rows::RowDecomposition;
pub use system::{RootSystem, SystemId};
pub use weyl::WeylElement;
