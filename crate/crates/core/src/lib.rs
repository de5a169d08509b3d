//! Exact computations for Drinfeld doubles of finite-dimensional Hopf algebras.

pub mod exactlin;
pub mod algcore;
pub mod double;
pub mod hopfcore;
pub mod rmatrix;
pub mod dycomplex;
pub mod relext;
