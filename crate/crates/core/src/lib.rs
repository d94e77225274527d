//! Chromatic symmetric functions of small graphs.
//!
//! `X_G` is computed from the census of stable set partitions, converted
//! between the monomial, augmented monomial and elementary bases with exact
//! integers, and compared against closed forms for generalised pyramids and
//! bulls. A classifier certifies the components of 2K2-free unit interval
//! graphs, and [`search`] enumerates small labelled graphs for e-positivity.

pub mod cli;
pub mod csf;
pub mod error;
pub mod graph;
pub mod partition;
pub mod search;
pub mod symfunc;
pub mod theorems;

pub use csf::{csf_e, csf_m, e_positivity, Bounds, EposVerdict};
pub use error::{Error, Result};
pub use graph::Graph;
pub use partition::Partition;
pub use symfunc::{Basis, SymPoly};
