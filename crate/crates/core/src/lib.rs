//! Exact computations of knot Floer and Khovanov invariants over GF(2).

pub mod cfk;
pub mod error;
pub mod fixtures;
pub mod f2core;
pub mod grid;
pub mod group;
pub mod invariants;
pub mod kh;
pub mod knots;
pub mod laurent;
pub mod pd;
pub mod sample;
pub mod verify;

pub use cfk::{CfkComplex, CfkGenerator, CfkTerm, ValidationReport, VerticalComplex};
pub use error::{Error, Result};
pub use f2core::{
    graded_homology_fu, homology_dims_f2, kernel_basis, rank_f2, smith_form_fu, F2Poly, F2UMatrix,
    SmithForm, SparseF2Matrix, UModule,
};
pub use group::BigradedGroup;
pub use laurent::LaurentPoly;
