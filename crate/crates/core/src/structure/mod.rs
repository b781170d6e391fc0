//! Homogeneous sets, graph primality, and the connectivity / primality
//! criteria for `G_R(p)` in executable form.

mod homogeneous;
mod oracle;
mod theorems;
pub mod validate;

pub use homogeneous::{is_homogeneous_set, is_nontrivial, HomogeneousSetReport};
pub use oracle::{
    is_prime_graph_oracle, is_prime_graph_oracle_transitive, minimal_module_containing,
    ModuleCloser,
};
pub use theorems::{
    homogeneous_ideal_search, is_primitive_divisor, predict_anticonnected, predict_connected,
    predict_prime, Prediction,
};

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Oracle,
    Theorem,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimalityVerdict {
    pub is_prime: bool,
    /// A non-trivial homogeneous set when `is_prime` is false.
    pub certificate: Option<Vec<u32>>,
    pub method: Method,
    pub citation: String,
    /// Clause evaluations behind a theorem verdict, in evaluation order.
    pub clauses: Vec<String>,
}

impl PrimalityVerdict {
    pub(crate) fn prime(method: Method, citation: impl Into<String>) -> Self {
        PrimalityVerdict {
            is_prime: true,
            certificate: None,
            method,
            citation: citation.into(),
            clauses: Vec::new(),
        }
    }
}
