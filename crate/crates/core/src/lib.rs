//! Exact-arithmetic workbench for finite-dimensional associative algebras:
//! structure-constant algebras, cyclic-ideal hom calculus, modules and
//! syzygies, Ext groups with Yoneda products, and Φ-Auslander-Yoneda
//! algebras, together with the quantum exterior algebra family built on top of them.

pub mod algebra;
pub mod error;
pub mod ext;
pub mod homological;
pub mod ideal;
pub mod iso;
pub mod linalg;
pub mod module;
pub mod quantum_exterior;
pub mod report;
pub mod scalar;

pub use error::{Error, Result};
