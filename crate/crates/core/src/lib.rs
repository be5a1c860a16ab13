//! Exact combinatorics of real hyperplane arrangements: intersection
//! posets, characteristic polynomials, regions, the classical families and
//! their bijections, and Orlik–Solomon algebras.

pub mod arrangement;
pub mod combinatorics;
pub mod error;
pub mod exact_math;
pub mod orlik_solomon;
pub mod poset;
pub mod regions;
pub mod selftest;

pub use error::{Error, Result};
