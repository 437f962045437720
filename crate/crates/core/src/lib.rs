pub mod algebra;
pub mod census;
pub mod corpus;
pub mod degree;
pub mod error;
pub mod exceptional;
pub mod finite;
pub mod involution;
pub mod rank3;
pub mod ring;

pub use algebra::{AlgebraElement, MonicPolynomial, RingHom, StructureAlgebra};
pub use error::{Error, Result};
pub use ring::{BaseRing, RingElem};
