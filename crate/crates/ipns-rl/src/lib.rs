//! Plausible-novelty intrinsic rewards for off-policy actor-critic agents.
//!
//! The crate implements the IPNS mechanism (incentivizing plausible novel
//! states) as a pluggable augmentation over SAC, DDPG, and TD3: states are
//! compressed by an autoencoder, their novelty is scored as the distance to
//! the highest-visitation-density point of the encoded-state history, the
//! novelty is weighted by a TD-trained V-network, and the resulting score is
//! normalized against perturbed neighbors into an intrinsic reward in (0, 1]
//! that is blended with the environment reward.
//!
//! Everything runs on a small dense-network engine ([`nn`]) with named,
//! seedable random streams ([`rng`]) so that runs are reproducible and a
//! disabled bonus (`beta = 0`) leaves the base agent bit-for-bit unchanged.
//!
//! See the `examples/` directory for runnable entry points covering each
//! capability, and the `harness` module for the experiment loop used by the
//! `ipns-rl` binary.

pub mod agents;
pub mod checkpoint;
mod error;
pub mod envs;
pub mod harness;
pub mod ipns;
pub mod nn;
pub mod replay;
pub mod rng;

pub use error::{Error, Result};
