//! Exact rational and prime-field arithmetic, row reduction and dense
//! polynomials.

pub mod field;
pub mod matrix;
pub mod polynomial;
pub mod roots;
pub mod serde_rational;

pub use field::{int, is_prime, next_prime, ratio, Field, PrimeField, Rational, Rationals};
pub use matrix::{rref_over, Matrix, RationalMatrix, Rref};
pub use polynomial::Polynomial;
pub use roots::poly_roots_numeric;
