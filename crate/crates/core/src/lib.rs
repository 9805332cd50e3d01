//! Homological data of the exceptional sequence of line bundles attached to
//! a chain of negative rational curves on a surface with exceptional
//! structure sheaf: exact cohomology tables, the Cartan/Euler form, and a
//! path-algebra model of the endomorphism algebra of the universal
//! extension, together with the checks tying the two sides together.
//!
//! All linear algebra runs over arbitrary-precision rationals; every
//! dimension reported by this crate is exact.

pub mod algebra;
pub mod chain;
pub mod cohomology;
pub mod euler;
pub mod linalg;
pub mod par;

pub use chain::{Chain, ChainError, DivisorWindow, LineBundleOnChain, Twist};
pub use cohomology::{
    check_ass, check_exceptional, ext_table, h0_h1, surface_cohomology_negative,
    surface_cohomology_positive, AssVerdict, CohPair, CohTable,
};
pub use euler::{
    cartan_closed_form, cartan_from_cohomology, classify_definiteness, grid_scan, is_symmetric,
    quadratic_form_value, CartanMatrix, DefinitenessClass,
};
