//! Bier spheres, Murai spheres, their face rings and cubical models.
//!
//! Complexes live on ordered ground sets `[m]` with `m ≤ 64` (see [`VertexSet`]). All
//! algebra is exact: rational arithmetic uses fraction-free elimination, and prime fields
//! use modular arithmetic.

pub mod bier;
pub mod builders;
pub mod cache;
pub mod census;
pub mod complex;
pub mod cubical;
pub mod error;
pub mod faces;
pub mod homology;
pub mod ideal;
pub mod isomorphism;
pub mod json;
pub mod linalg;
pub mod multicomplex;
pub mod murai;
pub mod tor;
pub mod verify;
pub mod vertex_set;

pub use bier::{alexander_dual, bier_sphere, classify_bier, BierClassification, BierTag, FlagKind};
pub use complex::{Complex, Subcomplex};
pub use error::{Error, Result};
pub use linalg::FieldTag;
pub use isomorphism::{are_isomorphic, canonical_form, Isomorphism};
pub use multicomplex::Multicomplex;
pub use vertex_set::{VertexSet, MAX_VERTICES};
