pub mod bitset;
pub mod cli;
pub mod cm;
pub mod complex;
pub mod corpus;
pub mod error;
pub mod filtered;
pub mod homology;
pub mod io;
pub mod label;
pub mod matrix;
pub mod polynomial;
pub mod posets;
pub mod rational;
pub mod stanley_reisner;
pub mod ternary;

pub use complex::{Face, SimplicialComplex};
pub use error::{Error, Result};
pub use homology::{Coefficients, HomologyProfile};
pub use label::Label;
pub use ternary::Ternary;
