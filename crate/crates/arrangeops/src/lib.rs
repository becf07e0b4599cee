//! Exact projective line-arrangement toolkit.
//!
//! This crate computes with finite sets of lines in the projective plane over
//! exactly-represented number fields (the rationals, quadratic and cyclotomic
//! fields, and square-root towers). On top of the incidence primitives it
//! implements the point/line operators on arrangements, the six-line
//! "unassuming" families and their moduli invariant, and the discrete
//! dynamics of the operator that sends an arrangement to the union of lines
//! through exactly three of its double points — including closed-form
//! iteration, periodic-orbit detection, preimages, and recognition of the
//! Ceva arrangements that periodic orbit unions assemble into.
//!
//! Every geometric predicate in the crate is exact: no floating point enters
//! any decision. Floating approximations exist only for figure export and are
//! produced from certified interval enclosures.
//!
//! The `examples/` directory of this crate walks through each capability; the
//! `arrangeops` binary exposes the same operations as a small command-line
//! tool.

// Index loops mirror the row/column algebra in the matrix code.
#![allow(clippy::needless_range_loop)]

pub mod arrangement;
pub mod catalog;
pub mod dynamics;
pub mod error;
pub mod export;
pub mod field;
pub mod geom;
pub mod io;
pub mod table1;
pub mod unassuming;

pub use error::{Error, Result};
pub use field::{adjoin_sqrt, Field, FieldElement, FieldKind, Q};
