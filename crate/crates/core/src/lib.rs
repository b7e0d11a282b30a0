//! Exact-arithmetic engine for 2-step nilpotent Lie algebras: classification,
//! closed left-invariant 2-forms split into type I and type II, and symplectic
//! structure existence with machine-checkable witnesses and certificates.
//!
//! All computation is over the rationals; no floating point enters any
//! verdict path. Every type is immutable after construction and every
//! operation is a pure function of its inputs.

pub mod algebra;
pub mod error;
pub mod forms;
pub mod matrix;
pub mod poly;
pub mod rational;

pub use algebra::{
    is_orthogonal_automorphism, Certainty, Decomposition, LieAlgebra, Metric, SingularityClass,
    SingularityKind,
};
pub use error::{Error, Result};
pub use forms::{
    betti2, closed_space, conjugate_form, exact_space, is_closed, split_form,
    type_i_closed_space, type_ii_closed_space, type_ii_system, FormKind, FormSpace, TwoForm,
    TypeIISystem,
};
pub use matrix::Mat;
pub use rational::Rat;
