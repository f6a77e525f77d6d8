//! Compiles the guide under `book/src` so that `cargo test` runs every Rust
//! snippet in it. One module per chapter keeps failures traceable.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/field.md")]
pub mod field {}
#[doc = include_str!("../../../book/src/polynomials.md")]
pub mod polynomials {}
#[doc = include_str!("../../../book/src/linear_algebra.md")]
pub mod linear_algebra {}
#[doc = include_str!("../../../book/src/encoding.md")]
pub mod encoding {}
#[doc = include_str!("../../../book/src/list_decoding.md")]
pub mod list_decoding {}
#[doc = include_str!("../../../book/src/side_information.md")]
pub mod side_information {}
#[doc = include_str!("../../../book/src/experiments.md")]
pub mod experiments {}
