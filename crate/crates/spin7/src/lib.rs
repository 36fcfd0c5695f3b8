//! Exact pointwise algebra of Spin(7) geometry on flat eight-space.
//!
//! This crate builds, in arbitrary-precision rational arithmetic, the
//! algebraic machinery behind instanton deformation theory on locally
//! conformal Spin(7) structures: the Cayley four-form with its two- and
//! three-form decompositions, a real 16-dimensional Clifford module with
//! chirality splitting, the invariant spinor and the spinorial instanton
//! condition, the torsion algebra of the Lee form, and the Lichnerowicz-type
//! rigidity bound with its homogeneous-space catalog. Every identity is
//! verified by exact computation — there is no floating point, and every
//! constant is a reduced fraction.
//!
//! The companion binary `spin7` drives the verification suites and exposes
//! form decomposition and rigidity evaluation on the command line. The
//! `book/` directory at the repository root contains a narrative guide whose
//! code snippets compile and run as doctests of this crate.
//!
//! ```
//! use spin7::cayley::cayley_form;
//!
//! let phi = cayley_form();
//! assert_eq!(phi.len(), 14);
//! assert_eq!(phi.hodge_star(), phi);
//! ```

pub mod cayley;
pub mod clifford;
pub mod form;
pub mod linalg;
pub mod rational;
pub mod report;
pub mod rigidity;
pub mod spinor;
pub mod torsion;

pub use cayley::{cayley_form, lambda3_projectors, project2, project3, CayleyStructure};
pub use clifford::{
    build_gamma_rep, chirality_projectors, clifford_action, clifford_apply, GammaRep, Spinor,
    SpinorEndo,
};
pub use form::KForm;
pub use linalg::{eigenspace, kernel_basis, rank, rational_spectrum, RatMatrix, RatVector};
pub use rational::{int, rat, Rational};
pub use rigidity::{catalog, rigidity_verdict, scalar_curvature, GeometryRecord, RigidityVerdict};
pub use spinor::{
    extract_singlet, instanton_check, phi_spectrum, triality, weitzenbock_constant, SingletData,
};
pub use torsion::{
    cancellation_check, lee_from_delta_phi, torsion_from_lee, torsion_operator, LeeForm,
    TorsionData,
};

// The guide chapters double as doctests so the book can never drift from the
// library. `cargo test --doc` compiles and runs every fenced Rust block.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/exact-arithmetic.md")]
    pub mod exact_arithmetic {}
    #[doc = include_str!("../../../book/src/exterior-forms.md")]
    pub mod exterior_forms {}
    #[doc = include_str!("../../../book/src/cayley-form.md")]
    pub mod cayley_form {}
    #[doc = include_str!("../../../book/src/clifford-spinors.md")]
    pub mod clifford_spinors {}
    #[doc = include_str!("../../../book/src/singlet-instantons.md")]
    pub mod singlet_instantons {}
    #[doc = include_str!("../../../book/src/torsion-dirac.md")]
    pub mod torsion_dirac {}
    #[doc = include_str!("../../../book/src/rigidity.md")]
    pub mod rigidity_chapter {}
    #[doc = include_str!("../../../book/src/cli.md")]
    pub mod cli {}
}
