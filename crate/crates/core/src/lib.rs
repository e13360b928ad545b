//! Multiplicity bounds for codimension three almost complete intersections
//! and for complete intersections linked to them.
//!
//! The degree-level modules ([`degrees`], [`resolution`], [`bounds`],
//! [`sweep`]) work purely with integer degree data. The [`poly`] module is a
//! small Gröbner basis kernel used to check individual ideals symbolically.

pub mod bounds;
pub mod degrees;
pub mod golden;
pub mod instance;
pub mod poly;
pub mod resolution;
pub mod sweep;

pub use bounds::{check_bounds, BoundCheck, BoundsError};
pub use degrees::{
    validate_aci, validate_gorenstein, validate_linked_ci, AciDegreeData, CaseVariant, Degree, DegreeError,
    GorensteinDegrees, LinkedCiDegreeData, PfaffianDegreeData,
};
pub use resolution::{GradedBettiTable, ResolutionError, ShiftVectors};
pub use sweep::{sweep, SweepError, SweepPlan, SweepReport};
