//! Weight modules: Verma modules, their duals, simple modules, tensor
//! products and braid operators.

mod braid;
mod module;
mod relations;
mod simple;
mod tensor;
mod verma;

pub use braid::{braid_operator, braid_word_operator, exp_nilpotent, transpose_braid};
pub use module::{BasisEntry, ModuleExport, Side, WeightModule, Window};
pub use relations::{check_relations, RelationReport};
pub use simple::{dual_simple, full_depth, simple, simple_truncated};
pub use tensor::tensor;
pub use verma::{dual_verma, dual_verma_right, verma, verma_right};
pub(crate) use verma::verma_right_with_words;

use crate::cartan::{CartanError, RootSum, Weight};
use crate::uqg::UqError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WmodError {
    #[error(transparent)]
    Algebra(#[from] UqError),
    #[error(transparent)]
    Cartan(#[from] CartanError),
    #[error("{0} is not dominant")]
    NotDominant(Weight),
    #[error("bad truncation depth {0}")]
    BadDepth(RootSum),
    #[error("character of V({0}) does not match the Weyl character")]
    CharacterMismatch(Weight),
    #[error("modules act from different sides")]
    SideMismatch,
    #[error("operation needs a finite-dimensional (untruncated) module")]
    Truncated,
    #[error("exponential series does not terminate")]
    NotNilpotent,
    #[error("the two expressions for T_{0} disagree")]
    BraidMismatch(usize),
}

#[cfg(test)]
mod tests;
