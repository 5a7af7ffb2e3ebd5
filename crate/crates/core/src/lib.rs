//! Planar monomials over `F_{q^3}` and the 3-partite graph `G_q(a)`.
//!
//! `G_q(a)` has `q^6` vertices per part, no 4-cycle between any two parts,
//! and exactly `q^6 (q^3 - 1)(q + 1)` triangles. This crate builds the field
//! arithmetic, the polynomials behind the triangle count, the implicit graph
//! and the checks that confirm each of these facts on concrete fields.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod construction;
pub mod error;
pub mod fa;
pub mod gf;
pub mod planar;
pub mod poly;
pub mod verify;

pub use construction::{
    baseline_projective, constraint_check, select_parameter, ExplicitTripartite, GraphSpec, Layer,
    Part, Vertex,
};
pub use error::{ConstraintViolation, Error, Result};
pub use gf::{FieldCtx, FieldElem};
pub use poly::Poly;
