//! Computational certification of *very simple* modules over F₂ and of the
//! 2-torsion of hyperelliptic jacobians.
//!
//! A module V for a group G is very simple when every unital subalgebra of
//! End(V) stable under conjugation by the group image is either the scalars
//! or all of End(V). The crate builds the relevant groups (PSL₂ over even
//! fields, Suzuki groups on their ovoids, the Mathieu groups, symmetric and
//! alternating groups), realizes the heart of their F₂ permutation modules
//! as bit-packed matrix representations, and decides very simplicity by a
//! combination of computed certificates (enveloping-algebra rank, trace
//! exclusion of tensor factors) and an explicit ledger of cited facts.
//! A brute-force definitional oracle covers small modules, and a separate
//! layer verifies that the 2-torsion of a hyperelliptic jacobian realizes
//! the symmetric-difference module of its Weierstrass points.

#![allow(clippy::manual_is_multiple_of)]

pub mod f2linalg;
pub mod ff;
pub mod groups;
pub mod hyperjac;
pub mod permgrp;
pub mod permmod;
pub mod pipeline;
pub mod repcheck;
pub mod report;
