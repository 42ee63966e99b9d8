//! Exact arithmetic on the n-fold metaplectic cover of `GL(2, Q_p)`.
//!
//! The crate is layered bottom-up:
//!
//! - [`padic`]: valuations, unit residues, n-th power tests and `μ_n`;
//! - [`hilbert`]: the n-th order Hilbert symbol;
//! - [`gl2`] and [`cocycle`]: matrices, the Kubota cocycle and its splitting;
//! - [`group`]: the cover `G̃` itself;
//! - [`involution`]: `τ`, its lifts `σ`, `σ_α` and `ρ_α`;
//! - [`witness`]: explicit conjugacy witnesses and the `n ≥ 3` obstruction;
//! - [`verify`]: deterministic sampling and the property suites.

pub mod cocycle;
pub mod error;
pub mod gl2;
pub mod group;
pub mod hilbert;
pub mod involution;
pub mod padic;
pub mod serial;
pub mod verify;
pub mod witness;

pub use cocycle::{cocycle, in_congruence_subgroup, kappa, splitting_s, x_invariant};
pub use error::{Error, Result};
pub use gl2::GL2;
pub use group::{standard_element, u_tilde, z_tilde, MetaElement, StandardKind};
pub use hilbert::{hilbert, nondegeneracy_witness};
pub use involution::{rho_alpha, sigma, sigma_alpha, sigma_defining, tau};
pub use padic::{Mode, Mu, PadicContext, Rational};
pub use witness::{
    base_witness, centralizer_obstruction, classify, rho_witness, square_map_trivial, witness,
    witness_alpha, CanonicalCase, CaseKind, ObstructionReport, WitnessReport,
};
