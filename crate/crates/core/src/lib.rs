//! Skew braces, brace systems and related structures on finite groups,
//! free groups and the lattice ℤ².

pub mod automorphism;
pub mod brace;
pub mod catalog;
pub mod config;
pub mod error;
pub mod free;
pub mod group;
pub mod holomorph;
pub mod io;
pub mod lattice;
pub mod perm;
pub mod rota_baxter;
pub mod samples;
pub mod structure;
pub mod system;

pub use config::Caps;
pub use error::{Error, GroupViolation, Result};
pub use group::{FiniteGroup, GroupMap};
pub use brace::SkewBrace;
