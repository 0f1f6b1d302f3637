#![no_std]
// `!(a < b)` guards are written that way so NaN is rejected too
#![allow(clippy::neg_cmp_op_on_partial_ord)]
extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bessel;
pub mod dunkl;
pub mod error;
pub mod jack;
pub mod partition;
pub mod product;
pub mod quadrature;
pub mod report;
pub mod sample;
pub mod scalar;
pub mod special;
pub mod sympoly;
