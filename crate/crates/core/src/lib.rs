//! Online non-stationarity detection and adaptive prediction for streaming
//! time series.
//!
//! The pipeline monitors the evolution of short-time spectral energies of a
//! signal: each arriving sample is windowed, transformed, and the distance
//! between consecutive feature vectors is tracked with an EWMA control chart.
//! When the chart flags a change, online predictors are retrained on a replay
//! mini-batch whose size is proportional to the chart deviation, which keeps
//! adaptation cheap while limiting catastrophic forgetting.
//!
//! Modules:
//! - [`datagen`]: seeded piecewise-stationary process generators, CSV
//!   ingestion, chronological splitting.
//! - [`features`]: sliding-window buffers, Hamming-windowed spectral
//!   energies, and the five-statistic time-domain baseline.
//! - [`detector`]: distance functions and the EWMA/SMA control-chart
//!   decision logic.
//! - [`predictors`]: passive-aggressive, random-feature kernel SVR, and MLP
//!   regressors behind one online-learning contract.
//! - [`adaptation`]: proportional replay mini-batches driven by detector
//!   flags.
//! - [`evaluation`]: detection scoring against ground-truth breakpoints and
//!   prediction quality metrics.

pub mod adaptation;
pub mod datagen;
pub mod detector;
pub mod error;
pub mod evaluation;
pub mod features;
pub mod predictors;
pub mod rng;

pub use error::{Error, Result};
