//! Orbits of parabolic subgroups of `GL_n` acting by conjugation on nilpotent matrices.
//!
//! For 2-nilpotent matrices the orbits are enumerated combinatorially and ordered by
//! degeneration. For 3-nilpotent matrices under a two-block parabolic they are
//! described through a finite catalog of indecomposable representations.

pub mod conjugacy;
pub mod error;
pub mod linalg;
pub mod matrix;
pub mod model;
pub mod nilp2;
pub mod nilp3;
pub mod poset;
pub mod reptype;

pub use error::{Error, Result};
pub use linalg::{QuiverRep, SampleConfig, SubspaceBasis};
pub use matrix::{ExactMatrix, Rational};
pub use model::{BlockStructure, EnhancedOlp, HomProfile, LabelledOlp, OrientedLinkPattern, PatternDoc};

pub use nilp3::{CatalogEntry3, Decomposition3};
pub use poset::{Hasse, Poset};
