//! Riemann-Roch spaces, Weierstrass semigroups and pure gaps at the
//! distinguished places of the third function field of the second
//! Garcia-Stichtenoth tower, in exact integer arithmetic.

pub mod arith;
pub mod error;
pub mod fixtures;
pub mod lattice;
pub mod oracle;
pub mod riemann_roch;
pub mod semigroup;
pub mod tower;

pub use arith::{ceil_div, floor_div};
pub use error::{Error, Result};
pub use lattice::{AggParams, LatticePoint3, MultiLatticePoint, MultiParams, PrimePoint3, ReductionResult};
pub use oracle::{verify_suite, BoxSize, Suite, VerificationReport};
pub use riemann_roch::{dim, BasisVariant, MonomialBasis};
pub use semigroup::{PlaceSelection, TwoPoint};
pub use tower::{Divisor, GeneralLevelDivisor, PlaceId, TowerParams};
