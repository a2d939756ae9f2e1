//! Exact scalar arithmetic: Q(q), its radial extension Q(q)(u,p) and the
//! square-root classes needed by the instanton projector.

pub mod mpoly;
pub mod mrat;
pub mod qrat;
pub mod radial;

pub use mrat::MRat;
pub use qrat::QRat;
pub use radial::{Atom, Mask, Radial};
