//! Dirac modes near a Garfinkle–Horowitz–Strominger dilaton black hole.
//!
//! Maps `(M, α, ω, q_R)` to the horizon mixing angle, the Hawking spectrum,
//! the explicit Kruskal vacuum and one-particle kets, and the two-qubit state
//! shared by an inertial observer A and a particle detector B hovering outside
//! the horizon.

mod fock;
mod params;
mod shared;
mod thermal;

pub use fock::{kruskal_one_particle, kruskal_vacuum, FockLabeling, Mode};
pub use params::DilatonParams;
pub use shared::{shared_state_direct, shared_state_fock, shared_state_three_mode};
pub use thermal::{hawking_temperature, occupation_number, squeeze_angle, SqueezeAngle};
