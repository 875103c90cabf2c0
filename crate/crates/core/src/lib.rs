//! Exhaustive-verification toolkit for the binomials f_b(x) = b x^q + x^{q^4}
//! over F_{q^6}: which parameters b make the subspace
//! U_b = {(x, f_b(x))} of F_{q^6} x F_{q^6} maximum scattered, counted through
//! the norm N = b^{q^3+1}, together with the companion cubic-polynomial
//! censuses, Frobenius-orbit equivalence classes, and the rank-metric codes
//! the scattered subspaces induce.
//!
//! Everything is desk-scale and deterministic: fields come with a canonical
//! modulus and generator, brute-force oracles double-check every closed-form
//! criterion on small q, and reports serialize with stable layouts.

pub mod census;
pub mod equiv;
pub mod error;
pub mod field;
pub mod linearized;
pub mod num;
pub mod scatter;

pub use error::{Error, Result};
pub use field::{Elt, FieldSpec, Parity, TowerCtx, TraceTarget};
