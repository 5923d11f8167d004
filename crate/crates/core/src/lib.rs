//! Qudit homological quantum codes over `Z_D` for any `D >= 2`.
//!
//! A 2-complex (or a hypermap, through an equivalent 2-complex) defines a
//! chain complex `C_2 -> C_1 -> C_0` over `Z_D`. Its boundary maps give
//! Z-type face generators and X-type vertex generators of a CSS stabilizer
//! code whose dimension is `|H_1|`. Everything here is exact; the dense
//! operators in [`oracle`] exist only to cross-check the exact results.

pub mod complex2;
pub mod distance;
pub mod error;
pub mod hypermap;
pub mod io;
pub mod oracle;
pub mod pauli;
pub mod random;
pub mod zmod;

pub use complex2::{
    ChainComplexData, ClosedWalk, Edge, Face, Sign, SignedEdge, TwoComplex, Violation,
};
pub use distance::{Distance, DistanceReport, Method, Side, Witness};
pub use error::{Error, Result};
pub use hypermap::{Hypermap, HypermapChain, Permutation, SpecialDarts};
pub use pauli::{PauliProduct, StabilizerSpec};
pub use zmod::{Modulus, SubmoduleSpan, ZModMatrix};
