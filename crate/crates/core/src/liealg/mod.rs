//! Weight systems, torus elements and `su(2)` membership.

pub mod aut;
pub mod brute;
pub mod cartan;
pub mod catalog;
pub mod factor;
pub mod su2;

pub use aut::{AutAction, Generator};
pub use brute::{brute_force_j, j_moduli, RANK_GUARD};
pub use cartan::{CartanElement, Weight};
pub use catalog::{weights_of, Family, FkmModules, FkmParams, RepDescriptor};
pub use factor::{FactorKind, FactorSpec, FactorType, FlipRule};
pub use su2::{in_su2, verify_witness, Membership, Rejection, Su2Witness, WitnessPart, WitnessTag};
