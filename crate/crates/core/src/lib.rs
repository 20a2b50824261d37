//! Matching powers of edge ideals of weighted oriented graphs.
//!
//! The crate computes `I(D)^[k]`, decides polymatroidality, linear
//! resolutions and linear relatedness by direct computation, and decides
//! which weighted oriented forests have a polymatroidal last matching power
//! through a recursive procedure that emits replayable certificates.

pub mod classifier;
pub mod error;
pub mod graph;
pub mod harness;
pub mod homology;
pub mod io;
pub mod ideal;
pub mod monomial;
pub mod polymatroid;
pub mod powers;
pub mod resolution;

pub use classifier::{classify_last_power, verify_certificate, Certificate, Condition, Trace};
pub use error::{Error, Result};
pub use graph::{
    Configuration, DistantConfiguration, Matching, SimpleGraph, VertexSet, WeightedOrientedGraph,
};
pub use ideal::{IdealDocument, MonomialIdeal};
pub use io::{GraphDocument, WeightAdjustment};
pub use monomial::Monomial;
