//! A desk-scale transformer laboratory for locating FFN neurons whose
//! activations on soft-prompt tokens predict task labels, and for running
//! the follow-on analyses those neurons support: activation perturbation,
//! cross-task rank correlation, origin baselines, neuron-guided pruning
//! with bias folding, and a prompt-transferability indicator.

pub mod error;
pub mod num;

pub use error::{Error, Result};

/// Pipeline scalar. All analysis math runs in 64-bit; weight files and
/// prompt files store 32-bit.
pub type Real = f64;

/// Dense matrix over the pipeline scalar.
pub type Mat = num::Matrix<Real>;
