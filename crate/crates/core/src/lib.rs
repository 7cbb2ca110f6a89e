//! Decision procedures for Coxeter groups given by their Coxeter matrix:
//! finite and affine type recognition, Moussong hyperbolicity, relative
//! hyperbolicity with respect to parabolic subgroups, and isolated flats.
//!
//! ```
//! use coxeter_rh::{chain4, relhyp, GenSet};
//!
//! let m = chain4(7).unwrap();
//! let family = relhyp::minimal_family(&m).unwrap();
//! assert_eq!(family.classes.len(), 4);
//! assert_eq!(family.classes[1], GenSet::from_one_based([2, 3, 4]));
//! ```

pub mod classify;
pub mod diagram;
pub mod error;
pub mod genset;
pub mod racg;
pub mod relhyp;
pub mod testkit;

pub use classify::{DiagramType, SubsetAtlas};
pub use diagram::{chain4, CoxeterMatrix, Order, MAX_GENERATORS};
pub use error::{Error, Result};
pub use genset::GenSet;
pub use relhyp::{Analyzer, Decision, Status};
