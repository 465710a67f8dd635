//! Exact verification workbench for cubic minimal cones.
//!
//! The crate builds the cubic forms whose zero sets are minimal cones
//! (Clifford-type, Cartan isoparametric, and the Jordan-algebra derived
//! exceptional forms), decides the differential identities they satisfy
//! with exact rational arithmetic, and studies the metrised commutative
//! algebra `V(u)` attached to each form: idempotents, Peirce spectra and
//! the admissible Peirce-triple table.
//!
//! Module map:
//!
//! - [`composition`]: Cayley–Dickson algebras `K_d`, `d = 1, 2, 4, 8`.
//! - [`jordan`]: Hermitian 3×3 matrices over `K_d` and their Jordan product.
//! - [`clifford`]: Hurwitz–Radon numbers and symmetric Clifford systems.
//! - [`cubics`]: sparse exact polynomials, [`CubicForm`] and the catalog.
//! - [`identities`]: radial, eiconal, harmonic and trace identity checks.
//! - [`algebra`]: the metrised algebra, idempotents and Peirce data.
//! - [`tables`]: the admissible Peirce triples and cross-validation.

pub mod algebra;
pub mod clifford;
pub mod composition;
pub mod cubics;
pub mod error;
pub mod identities;
pub mod jordan;
pub mod rational;
pub mod tables;

pub use algebra::{FloatAlgebra, MetrisedAlgebra, PeirceData};
pub use clifford::CliffordSystem;
pub use composition::CDElement;
pub use cubics::{CubicForm, Poly};
pub use error::{Error, Result};
pub use identities::{ClassificationRecord, Label, Mode};
pub use jordan::{ComplexHermMat3, HermMat3};
pub use rational::Q;
