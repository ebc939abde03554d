//! Finite semitopologies.
//!
//! A semitopology is a set of points with a family of open sets that
//! contains the empty set and the universe and is closed under unions, but
//! not necessarily under intersections. This crate computes closures,
//! communities and the regularity hierarchy of points, builds spaces from
//! witness functions, converts to and from semiframes, evaluates a
//! three-valued logic over continuous valuations, and reduces SAT to
//! intertwinedness.
//!
//! ```
//! use semitop::{catalog, Analysis};
//!
//! let s = catalog("fig-012-tl", 0).unwrap();
//! let a = Analysis::new(&s);
//! let one = s.index_of("1").unwrap();
//! assert!(a.is_weakly_regular(one));
//! assert!(!a.is_regular(one));
//! ```

pub mod antisep;
pub mod catalog;
pub mod cli;
pub mod error;
pub mod figures;
pub mod io;
pub mod logic3;
pub mod pointset;
pub mod semiframe;
pub mod solvers;
pub mod space;
pub mod three;
pub mod witness;

pub use antisep::{Analysis, Classification, NeighbourhoodInvariants, TopenPartition};
pub use catalog::catalog;
pub use error::{Error, Result};
pub use pointset::PointSet;
pub use semiframe::{soberify, Semiframe};
pub use space::{Mode, Semitopology};
pub use three::{Three, Valuation3};
pub use witness::WitnessFunction;
