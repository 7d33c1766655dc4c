//! Cluster seeds of double braid words in every finite Dynkin type.
//!
//! The pipeline is: a [`DoubleWord`] and its [`Crossings`], the orders of
//! vanishing of grid minors in an [`OrdTable`] (computed by the recursive
//! cocharacter of [`GammaEngine`]), and finally a [`Seed`].
#![no_std]

extern crate alloc;

pub mod braidword;
pub mod clusterops;
pub mod error;
pub mod folding;
pub mod gamma;
pub mod intlat;
pub mod moves;
pub mod oracle;
pub mod rootsys;
pub mod seedbuild;

pub use braidword::{demazure_pi, Crossings, DoubleWord};
pub use clusterops::{AbstractSeed, MutationSeq};
pub use error::{Error, Result};
pub use gamma::{GammaEngine, OrdTable};
pub use rootsys::{CartanType, DynkinData, WeylElt};
pub use seedbuild::Seed;
