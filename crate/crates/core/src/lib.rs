//! Cyclic codes and cyclic product codes over GF(q).
//!
//! The crate builds q-ary cyclic codes from defining sets, forms cyclic
//! product codes of coprime lengths, computes the BCH and Hartmann-Tzeng
//! bounds and two generalizations that borrow an associated cyclic code, and
//! decodes up to the first generalized bound with joint key equations solved
//! by multi-sequence shift-register synthesis.
//!
//! Every bound comes with a [`bounds::BoundCertificate`] that can be checked
//! independently of the search that produced it.

pub mod arith;
pub mod bounds;
pub mod cyclic;
pub mod decoder;
pub mod distance;
pub mod error;
pub mod files;
pub mod gf;
pub mod linalg;
pub mod poly;
pub mod product;
pub mod sweep;

pub use bounds::{BoundCertificate, Variant};
pub use cyclic::{CyclicCode, DefiningSet};
pub use error::{BoundError, CodeError, DecodeError, FieldError, FileError, ProductError};
pub use gf::{make_field, FieldContext, FieldElement};
pub use poly::Poly;
