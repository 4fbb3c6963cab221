//! Deterministic simulator and analysis toolkit for a two-hop cellular
//! uplink in which user terminals split transmit power across parallel
//! links to a base station and to relays.
//!
//! The crate is organised as a small stack of pure, seedable layers:
//!
//! - [`numerics`]: dense linear-algebra and scalar-search kernels shared by
//!   everything else (spectral radius, linear solve, 2x2 SVD, grid search).
//! - [`scenario`]: reproducible topology, channel, bandwidth and backhaul
//!   generation from a [`scenario::ScenarioConfig`].
//! - [`ratecalc`]: effective interference, SINRs, link rates, relay rate
//!   differentials and end-to-end network capacity for any network state.
//! - [`ndt`]: the network-state-based distributed transmission algorithm
//!   (threshold PoA switching, waterfilling, multiplicative back-off) and
//!   its synchronous iteration engine.
//! - [`baselines`]: greedy, single-PoA waterfilling and BS-PoA waterfilling
//!   comparison schemes on the same engine.
//! - [`analysis`]: convergence theory tooling (closed-form fixed point,
//!   spectral-radius predicate, asynchronous update harness, high-backhaul
//!   PoA prediction).
//! - [`smallnet`]: two-user upper bounds (cooperative MIMO, asymmetric
//!   interference cancellation, centralized exhaustive optimization).
//!
//! Everything is `no_std`-compatible (with `alloc`); IO, file formats and
//! the CLI live in the companion `ndtsim-cli` crate.

#![cfg_attr(not(feature = "std"), no_std)]

#[cfg(not(any(feature = "std", feature = "libm")))]
compile_error!("ndtsim-core requires either the `std` or the `libm` feature");

extern crate alloc;

pub mod analysis;
pub mod baselines;
pub(crate) mod float;
pub mod ndt;
pub mod numerics;
pub mod ratecalc;
pub mod rng;
pub mod scenario;
pub mod smallnet;

pub use numerics::Matrix;
pub use ratecalc::NetworkState;
pub use scenario::{ChannelRealization, ScenarioConfig};
