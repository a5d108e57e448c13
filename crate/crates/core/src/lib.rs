//! Nichols algebras of Hecke-type braidings: graded structure, Koszul and
//! AS-regularity evidence, homological determinant, and the Calabi-Yau test.

pub mod braiding;
pub mod cy;
pub mod examples;
pub mod frobenius;
pub mod frt;
pub mod input;
pub mod linalg;
pub mod nichols;
pub mod quadratic;
pub mod report;
pub mod scalar;

pub use scalar::Scalar;
