//! Exact computations in the Chevalley group of type E7.
//!
//! The crate is organised bottom-up:
//!
//! - [`rootsystem`]: simply-laced root systems, Cartan pairing, reflections, subsystems.
//! - [`intlinalg`]: integer linear algebra (determinants, Smith normal form, exact solving).
//! - [`lattices`]: torsion torus elements in coroot coordinates, adjoint vs simply
//!   connected equality, Frobenius twists and the derived-subgroup criterion.
//! - [`finitefield`]: prime fields and their extensions with roots of unity.
//! - [`fieldmatrix`] and [`chevalley`]: a Chevalley basis of the Lie algebra and the
//!   Steinberg generators as exact 133x133 matrices on the adjoint module.
//! - [`groupelems`]: words in the generators, the elements `e`, `f`, `g`, and the
//!   involution census.
//! - [`cohomology`]: twisted conjugacy classes in a finite group model of Sym4.
//! - [`verification`]: end-to-end checks and the JSON report.
//! - [`cli`]: the `chevkit` command-line frontend.

pub mod chevalley;
pub mod cli;
pub mod cohomology;
pub mod fieldmatrix;
pub mod finitefield;
pub mod groupelems;
pub mod intlinalg;
pub mod lattices;
pub mod rootsystem;
pub mod verification;

/// Seed of the ChaCha8 generator used by every sampling loop in the crate.
pub const SAMPLING_SEED: u64 = 0x5EED_E7E7;

/// The generator behind [`SAMPLING_SEED`].
pub fn sampling_rng() -> rand_chacha::ChaCha8Rng {
    use rand::SeedableRng;
    rand_chacha::ChaCha8Rng::seed_from_u64(SAMPLING_SEED)
}
