//! Characters of affine modules: expressions, spectral flow, evaluation.

mod eval;
mod expr;
mod families;
mod weights;

pub use eval::{evaluate, Specialization, VarValue};
pub use expr::{apply_spectral_flow, CharExpr, FlowData, FormalMonomial, Var};
pub use families::*;
pub use weights::{flowed_weight_dim, general_admissible_weight_dim, WeightDim};
