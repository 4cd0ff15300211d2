//! Admissible polytopes and chamber complexes of the hypersimplex `Delta_{n,2}`,
//! the parameter spaces attached to them, and the mod-2 homology of the
//! orbit spaces `X5` and `X6`.

pub mod chamber;
pub mod error;
pub mod gf2;
pub mod homology;
pub mod lp;
pub mod params;
pub mod par;
pub mod perm;
pub mod polytope;
pub mod rational;
pub mod report;

pub use error::{Error, Result};
