//! Exact computation over finite frames and lattice-valued fuzzy sets.
//!
//! The crate is organised around a small [`Frame`] abstraction with two
//! implementations: [`Lattice`], an arbitrary finite bounded lattice given by
//! its cover relation, and [`UnitInterval`], the real unit interval as a
//! chain of `f64` values. On top of that sit
//!
//! * [`fuzzyset`]: fuzzy sets, crisp and fuzzy α-cuts, images under maps;
//! * [`localic`]: the graded inclusion relation on a family of fuzzy sets and
//!   the nine localic-frame axioms;
//! * [`topology`], [`group`], [`rough`]: fuzzy topological spaces, fuzzy
//!   groups with graded equality, and rough-set approximations;
//! * [`enumerate`]: exhaustive generation of small lattices up to isomorphism.

pub mod catalog;
pub mod enumerate;
mod error;
mod frame;
pub mod fuzzyset;
pub mod generate;
pub mod group;
pub mod json;
pub mod lattice;
pub mod localic;
pub mod rough;
mod subsets;
pub mod topology;

pub use error::{Error, Result};
pub use frame::{Arrow, Frame, Unit, UnitInterval};
pub use fuzzyset::{Base, CrispSet, FuzzySet, PointMap};
pub use lattice::{ClassificationReport, Elem, Lattice};
pub use subsets::SubsetPolicy;
