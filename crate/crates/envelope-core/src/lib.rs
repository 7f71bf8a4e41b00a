//! Class-imbalance learning toolkit for mapping the stable operating
//! envelope of a partially stable combustion engine from per-cycle data.
//!
//! The crate covers the full workflow: a seeded surrogate trace generator
//! ([`synth`]), the window-based stable/unstable labeling rules
//! ([`labeling`]), re-sampling and cost-sensitive imbalance treatments
//! ([`resampling`], per-sample weights in each trainer), four classifier
//! families (logistic regression and linear least squares in [`linear`],
//! extreme learning machines in [`elm`], an RBF-kernel SVM trained by an
//! SMO dual solver in [`svm`]), and the skewed-data evaluation and
//! model-selection harness ([`eval`]).
//!
//! Conventions shared by everything: labels are ±1 with +1 the stable
//! majority class, a decision value of exactly zero classifies as −1, and
//! features are z-score standardized with parameters fitted on training
//! data and stored inside each model.

pub mod data;
pub mod elm;
pub mod error;
pub mod eval;
pub mod kernel;
pub mod labeling;
pub mod linalg;
pub mod linear;
pub mod model;
pub mod resampling;
pub mod svm;
pub mod synth;

pub use error::{Error, Result};
