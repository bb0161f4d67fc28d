//! Finite join-distributive lattices and their coordinatization by vectors
//! of permutations.
//!
//! A lattice is given by its covering relation ([`poset::Lattice`]).
//! [`jd`] decides join-distributivity several independent ways,
//! [`trajectory`] computes Jordan-Hölder permutations between maximal chains,
//! [`coords`] translates between permutation vectors and lattices with
//! distinguished chains, and [`structures`] relates the lattices to
//! antimatroids and convex geometries.

pub mod coords;
pub mod dot;
pub mod io;
pub mod jd;
pub mod perm;
pub mod poset;
pub mod structures;
pub mod trajectory;

pub use coords::{eta, xi, ChainedLattice, PermVector};
pub use perm::Permutation;
pub use poset::{Chain, Lattice};
