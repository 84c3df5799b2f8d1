//! Exact search over zero-sum-square-free `{-1, +1}` matrices.
//!
//! A *square* in a matrix is the 2x2 sub-matrix on rows `i, i+s` and columns
//! `j, j+s`; it is *zero-sum* when two corners are `+1` and two are `-1`.
//! This crate enumerates matrices avoiding such squares under a discrepancy
//! constraint, recognises the split family, reduces results up to symmetry,
//! and runs the verification checks in [`verify`].

pub mod error;
pub mod matrix;
pub mod search;
pub mod split;
pub mod symmetry;
pub mod verify;

pub use error::{Error, ParseError, Result};
pub use matrix::{BinaryMatrix, PartialFill, Sign, Square};
pub use search::{enumerate, DiscConstraint, Emit, EnumerationQuery, EnumerationReport};
pub use split::{classify_split, make_t_split, split_disc_formula, SplitClassifier, SplitDescriptor, SplitVariant};
pub use symmetry::{canonical_form, dedup, Spatial, SymmetryElement};
