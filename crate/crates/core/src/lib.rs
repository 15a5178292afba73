//! Minimum-genus cyclically symmetric embeddings of complete bipartite
//! graphs K_{n,n} that have a Hamiltonian face.
//!
//! The crate is organised bottom-up:
//!
//! - [`embedding`]: multigraphs, rotation systems, face tracing, genus;
//! - [`zn`] and [`voltage`]: Z_n voltage assignments on dipoles and their
//!   derived embeddings;
//! - [`transition`] and [`constructions`]: transition graphs and the
//!   optimal-genus generators;
//! - [`bounds`]: closed-form genus bounds and number-theoretic helpers;
//! - [`cut`], [`ring`], [`rotational`] and [`exception`]: the crossing-signature model of
//!   3-dimensional rotational symmetry and its constructions;
//! - [`search`]: exhaustive small-n search used as an independent oracle;
//! - [`io`]: JSON, DOT and SVG interchange.

pub mod bounds;
pub mod constructions;
pub mod cut;
pub mod embedding;
pub mod error;
pub mod exception;
pub mod io;
pub mod ring;
pub mod rotational;
pub mod search;
pub mod transition;
pub mod voltage;
pub mod zn;

pub use embedding::{EdgeEnd, EmbeddedGraph, End, Face, Multigraph};
pub use error::{Error, Result};
pub use transition::TransitionGraph;
pub use voltage::VoltageGraph;
pub use zn::CyclicElement;
