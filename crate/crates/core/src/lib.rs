//! Simulate-and-infer laboratory for player movement tendencies in a
//! tile-based mining game.
//!
//! The crate has three layers:
//!
//! * a forward model — [`gridworld`] extracts situational features from tile
//!   maps, [`decision_model`] turns features plus a tendency vector
//!   [`decision_model::Theta`] into stochastic move/direction decisions, and
//!   [`datagen`] samples whole decision datasets;
//! * an inverse layer — [`posterior`] defines the Bayesian target (priors,
//!   likelihood, gradient) and [`sampler`] draws from it with a self-tuning
//!   Hamiltonian sampler or an adaptive random walk;
//! * [`diagnostics`] summarizes chains (mean, sd, HDI, ESS, split R-hat) and
//!   renders trace/autocorrelation plots.
//!
//! With the default `parallel` feature the per-record likelihood terms, chain
//! execution, and dataset generation run on rayon; disabling the feature
//! yields a sequential build that produces bit-identical results.

pub mod datagen;
pub mod decision_model;
pub mod diagnostics;
mod exec;
pub mod gridworld;
pub mod plots;
pub mod posterior;
pub mod rng;
pub mod sampler;

pub use decision_model::{Decision, Theta};
pub use gridworld::{Direction, GameMap, GameStateFeatures, Tile};
pub use posterior::PriorSpec;
pub use sampler::{PosteriorChains, SamplerConfig};
