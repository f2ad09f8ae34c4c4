//! Exact lifts of classical Weyl groups to GL_n, Pin, Spin and quaternionic
//! matrix groups, with the root data and Lie algebra checks they rely on.

#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod clifford;
pub mod exactmat;
pub mod liealg;
pub mod quat;
pub mod lifts;
pub mod report;
pub mod rootdata;
pub mod scalars;
