//! Odd spanning trees and connected odd factors: constructions, exhaustive
//! oracles, and certificates of nonexistence.

pub mod dense;
pub mod error;
pub mod families;
pub mod graph;
pub mod odd_factor;
pub mod oracle;
pub mod packing;
pub mod split;
pub mod sweep;
pub mod trifree;

pub use error::{Error, Result};
pub use graph::{EdgeSet, Graph, Vertex};
