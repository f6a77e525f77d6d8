//! Order-`m` derivative codes over prime fields.
//!
//! A message polynomial `f` of degree `< k` is sent as `n` columns
//! `(f(a_i), f'(a_i), ..., f^(m-1)(a_i))` of formal derivatives. The decoder
//! is purely linear-algebraic: one homogeneous system finds an interpolation
//! polynomial, and a second, structured system yields an affine space of
//! dimension at most `s - 1` containing every message close to the received
//! word.
//!
//! ```
//! use dercode::{list_decode, CodeParams, DecoderConfig, Message};
//!
//! let params = CodeParams::new(41, 10, 4, 8, None).unwrap();
//! let msg = Message::from_u64(params.field(), &[3, 1, 4, 1, 5, 9, 2, 6]).unwrap();
//! let mut word = params.encode(&msg).unwrap();
//!
//! // Garble five of the ten columns.
//! let (noisy, _) = dercode::harness::corrupt(
//!     &word,
//!     dercode::harness::ChannelSpec { errors: 5, seed: 7 },
//! );
//! word = noisy;
//!
//! let out = list_decode(&word, &params, &DecoderConfig::new(2)).unwrap();
//! assert!(out.candidates.iter().any(|c| c.message == msg));
//! ```

pub mod code;
pub mod decoder;
pub mod field;
pub mod harness;
pub mod linalg;
pub mod poly;

pub use code::{CodeError, CodeParams, Message, ParamError, ParamsReport, Word};
pub use decoder::{
    choose_d, column_guess_decode, interpolate, list_decode, retrieve_space, side_info_decode,
    threshold, Candidate, DecodeError, DecodeOutput, DecoderConfig, Inconsistency,
    InterpolationPoly, SideInfo,
};
pub use field::{FieldError, Fp, PrimeField};
pub use linalg::{AffineSpace, Matrix};
pub use poly::Poly;
