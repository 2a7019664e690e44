//! Generalized power hypergraphs `G^{k,s}` built from simple graphs,
//! exact odd-bipartiteness decisions, and spectral radii of hypergraph
//! adjacency and signless Laplacian tensors.
//!
//! The matrix routines in [`matrix`] are an independent path to the same
//! spectral radii for `s = k/2`, where the hypergraph and its base graph
//! share adjacency and signless Laplacian spectral radius.
//!
//! Batch routines (enumeration, class sweeps) run on rayon when the
//! `parallel` feature is enabled and sequentially otherwise.

pub mod constructions;
pub mod enumerate;
pub mod error;
pub mod experiments;
pub mod graph;
pub mod io;
pub mod matrix;
pub mod par;
pub mod parity;
pub mod tensor;

pub use constructions::{generalized_power, BlowupMap};
pub use error::{Error, Result};
pub use graph::{Bipartition, Hypergraph, SimpleGraph};
pub use tensor::{ImplicitTensor, Operator, PowerOptions, SpectralResult};
