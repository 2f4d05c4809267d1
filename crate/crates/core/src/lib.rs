pub mod bases;
pub mod cache;
pub mod composition;
pub mod cycle_index;
pub mod equivalences;
pub mod error;
pub mod forest;
pub mod fqsym;
pub mod linear;
pub mod matrix;
pub mod output;
pub mod permutation;
pub mod products;
pub mod qpoly;
