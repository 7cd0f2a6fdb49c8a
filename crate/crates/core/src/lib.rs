//! Matter-wave phases, free-particle propagators and slit-time sums for the
//! double-slit experiment.
//!
//! The crate compares three ways of assigning an amplitude to a path that
//! passes through a slit: the optical-path intuition, the stationary-phase
//! value of the two-step propagator, and the full sum over the slit transit
//! time.

pub mod doubleslit;
pub mod error;
pub mod faddeeva;
pub mod kinematics;
pub mod presets;
pub mod propagator;
mod quadrature;
pub mod timesum;
pub mod wavepacket;

pub use error::{Error, Result};
pub use kinematics::{ParticleSpecies, PhaseValue};
pub use propagator::{AmplitudeUnit, ComplexAmplitude, SpaceTimeEvent, TwoLegPath};
