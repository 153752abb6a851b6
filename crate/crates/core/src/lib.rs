// `!(x < y)` is used on purpose so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod experiments;
pub mod io;
pub mod map;
pub mod quantum;
pub mod sphere;
