//! Shift graphs, order-type graphs, exact chromatic numbers, and the
//! orderly decomposition of tuple pairs with its embedding into a shift
//! graph over a lexicographic alphabet.

pub mod chroma;
pub mod decomp;
pub mod embedder;
pub mod error;
pub mod graph;
pub mod rng;
pub mod seq;
pub mod suite;

pub use error::{Error, Result};
pub use seq::{IncreasingTuple, LexFrame, OrderTypePattern};
