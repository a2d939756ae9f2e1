//! Exact symbolic engine for the q-quaternion algebra H_q ~ R_q^4, its two
//! covariant differential calculi, Hodge duality on 2-forms, and the
//! (anti)self-dual instanton solutions, over the field of rational
//! functions in q. Every identity is checked as an exact equality of
//! canonical normal forms.

pub mod error;
pub mod forms;
pub mod algebra;
pub mod scalar;
pub mod tensor;

pub use error::{EngineError, Result};
