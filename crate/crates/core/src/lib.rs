//! Exact arithmetic for quantized enveloping algebras and the quantized
//! coordinate ring of the flag variety.

pub mod cartan;
pub mod coord;
pub mod dmod;
pub mod emod;
pub mod linalg;
pub mod rmatrix;
pub mod scalars;
pub mod uqg;
pub mod verify;
pub mod wmod;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/scalars.md")]
    struct Scalars;
    #[doc = include_str!("../../../book/src/cartan.md")]
    struct Cartan;
    #[doc = include_str!("../../../book/src/quantum-group.md")]
    struct QuantumGroup;
    #[doc = include_str!("../../../book/src/modules.md")]
    struct Modules;
    #[doc = include_str!("../../../book/src/coordinate-ring.md")]
    struct CoordinateRing;
    #[doc = include_str!("../../../book/src/operators.md")]
    struct Operators;
    #[doc = include_str!("../../../book/src/verification.md")]
    struct Verification;
}
