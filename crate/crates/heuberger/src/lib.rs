//! Exact chromatic-number certificates for connected finite-degree Cayley
//! graphs on abelian groups.
//!
//! Every such graph can be written as `Cay(Z^m/H, {H±e_1, …, H±e_m})` for an
//! integer relation lattice `H` spanned by the columns of an `m x r` integer
//! matrix (a *Heuberger matrix*). This crate represents graphs that way and
//! derives certified chromatic bounds from row/column calculus on the matrix:
//! bipartiteness from column-sum parity, 3-colorability from column-sum gcds
//! and sign patterns, the complete rank-1 classification, and the cube-like
//! machinery behind Payan's theorem ("no cube-like graph has chromatic
//! number 3"). A brute-force oracle materializes finite quotients and BFS
//! balls to validate every certificate at desk scale.
//!
//! The main entry points are [`sacg::SACGraph`] for building graphs,
//! [`hom::chi_upper_pipeline`] for certified bounds, [`oracle`] for exact
//! chromatic numbers of finite materializations, and [`payan`] for the
//! cube-like verification suite.

pub mod hom;
pub mod linalg;
pub mod oracle;
pub mod payan;
pub mod sacg;

pub use linalg::{
    cross_product, det, gcd_vec, hnf, kernel_mod_lattice, lattice_equal, lattice_membership, snf,
    HermiteForm, IntMatrix, LinalgError, MatrixTextError, SmithForm,
};
// pub use sacg::{GroupSpec, HeubergerMatrix, SACGraph, SpecError, StructuralOp};
