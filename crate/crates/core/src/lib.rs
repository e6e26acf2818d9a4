//! Exact computations with partial actions of finite-dimensional Hopf
//! algebras: invariants, partial traces, enveloping actions, partial smash
//! products, Morita contexts and partial Hopf–Galois extensions.

pub mod algebra;
pub mod catalog;
pub mod document;
pub mod envelope;
pub mod error;
pub mod galois;
pub mod group;
pub mod hopf;
pub mod linalg;
pub mod morita;
pub mod paction;
pub mod pipeline;
pub mod poly;
pub mod report;
pub mod scalar;
pub mod smash;

pub use error::{Error, Result};
