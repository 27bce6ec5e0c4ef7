//! Exact-arithmetic toolkit for edge-colored graph theory and its
//! interactions with Cartan graphs, Weyl groupoids, frieze patterns,
//! odd-reflection graphs of basic Lie superalgebras, and root-of-unity
//! linkage data of Nichols algebras of diagonal type.
//!
//! Everything is computed over the integers or in cyclotomic integer
//! rings; there is no floating point anywhere.

pub mod cartan;
pub mod cyclo;
pub mod ecgraph;
pub mod frieze;
pub mod nichols;
pub mod superalg;
