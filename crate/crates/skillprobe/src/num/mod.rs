//! Numerical substrate: dense matrices, nonlinearities, seeded RNG, Adam,
//! and a finite-difference gradient checker.
//!
//! Everything here is generic over the scalar type; the rest of the crate
//! pins `f64` through the [`crate::Mat`] alias.

mod activation;
mod adam;
mod gradcheck;
mod matrix;
mod rng;
mod scalar;

pub use activation::{gelu, gelu_grad, relu, relu_grad, Activation};
pub use adam::{Adam, AdamConfig};
pub use gradcheck::{finite_diff_check, finite_diff_check_directional};
pub use matrix::Matrix;
pub use rng::SeededRng;
pub use scalar::Scalar;
