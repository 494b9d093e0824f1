//! Combinatorics of the AI-crystal tableau model for SO_n.
//!
//! Semistandard tableaux carry a gl_n-crystal structure, and every gl_n-crystal
//! carries an induced AI-crystal structure (`B̃_i`, `deg_i`). AI-tableaux
//! ([`kmatrix::is_ai_tableau`]) of shape `ρ` form a connected AI-crystal whose
//! character is that of the so_n-module of highest weight `ρ`. On top of this
//! sit the RS^AI correspondence ([`rsai`]) and a combinatorial branching rule
//! from gl_n to so_n.

pub mod ai;
pub mod cli;
pub mod error;
pub mod gl;
pub mod graph;
pub mod kmatrix;
pub mod laurent;
pub mod partition;
pub mod rsai;
pub mod tableau;
pub mod verify;

pub use ai::{AiCrystal, AiTensor, SoWeight};
pub use error::{Error, Result};
pub use gl::{GlCrystal, GlWeight};
pub use laurent::LaurentPolynomial;
pub use partition::Partition;
pub use rsai::{AiQSymbol, Mark, OscillatingTableau, Sign};
pub use tableau::{Tableau, Word};
