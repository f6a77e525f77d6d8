//! List decoding of derivative codes.
//!
//! Decoding runs in two linear-algebra steps:
//!
//! 1. [`interpolate`] finds a nonzero `Q = A_0 + A_1 Y_1 + ... + A_s Y_s`
//!    with `deg A_0 <= d + k - 1`, `deg A_j <= d`, such that `Q` and its
//!    first `m - s` images under [`D`](dop::YLinear::apply_d) vanish at every
//!    received column.
//! 2. [`retrieve_space`] solves `A_0 + A_1 f + A_2 f' + ... + A_s f^(s-1) = 0`
//!    for `deg f < k`. Every message agreeing with the received word in at
//!    least [`threshold`] columns satisfies it, and the solutions form an
//!    affine space of dimension at most `s - 1`.
//!
//! [`list_decode`] expands that space (when small enough) and keeps the
//! members that actually agree with the word. [`side_info_decode`] and
//! [`column_guess_decode`] pin the free coefficients instead of enumerating.

pub mod dop;
mod interpolate;
mod retrieve;
mod side;

use thiserror::Error;

use crate::code::{CodeError, CodeParams, Message, Word};
use crate::field::Fp;
use crate::linalg::AffineSpace;

pub use interpolate::{interpolate, interpolation_system, InterpolationPoly};
pub use retrieve::{retrieve_space, Retrieval};
pub use side::{column_guess_decode, side_info_decode, ColumnGuessOutput, SideInfo};

pub const DEFAULT_ENUMERATION_CAP: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecodeError {
    #[error("s = {s} outside 1..={m}")]
    InvalidS { s: usize, m: usize },
    #[error("s infeasible for these parameters (d = {numerator}/{denominator} < 0)")]
    InfeasibleS { numerator: i64, denominator: i64 },
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error("expected {expected} side-information values, got {got}")]
    SideInfoLength { expected: usize, got: usize },
    #[error("side information unusable: A_{used_s}({alpha}) = 0")]
    SideInfoUnusable { alpha: u64, used_s: usize },
    #[error("no consistent message: {0}")]
    NoConsistentMessage(Inconsistency),
}

/// Why the side-information pipeline rejected its output.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Inconsistency {
    #[error("interpolation produced only A_0")]
    Degenerate,
    #[error("recurrence output violates the retrieval system")]
    SystemUnsatisfied,
    #[error("agreement {agreement} below threshold {threshold}")]
    BelowThreshold { agreement: usize, threshold: usize },
    #[error("message disagrees with the supplied derivative values")]
    SideInfoMismatch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DecoderConfig {
    pub s: usize,
    /// Largest number of space members [`list_decode`] will expand.
    pub enumeration_cap: u64,
}

impl DecoderConfig {
    pub fn new(s: usize) -> Self {
        Self {
            s,
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
        }
    }

    pub fn with_cap(mut self, cap: u64) -> Self {
        self.enumeration_cap = cap;
        self
    }

    /// Returns the degree budget `d` when `s` is usable with `params`.
    pub fn validate(&self, params: &CodeParams) -> Result<usize, DecodeError> {
        choose_d(params.n(), params.m(), self.s, params.k())
    }
}

/// `d = floor((n(m - s + 1) - k + 1) / (s + 1))`, rejected when negative.
pub fn choose_d(n: usize, m: usize, s: usize, k: usize) -> Result<usize, DecodeError> {
    if s == 0 || s > m {
        return Err(DecodeError::InvalidS { s, m });
    }
    let numerator = (n * (m - s + 1)) as i64 - k as i64 + 1;
    let denominator = s as i64 + 1;
    let d = numerator.div_euclid(denominator);
    if d < 0 {
        return Err(DecodeError::InfeasibleS {
            numerator,
            denominator,
        });
    }
    Ok(d as usize)
}

/// Smallest `t` with `t (m - s + 1) > d + k - 1`.
pub fn threshold(d: usize, k: usize, m: usize, s: usize) -> usize {
    assert!(s >= 1 && s <= m, "need 1 <= s <= m");
    (d + k).saturating_sub(1) / (m - s + 1) + 1
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate {
    pub message: Message,
    pub agreement: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeOutput {
    /// The `s` requested in the configuration.
    pub s: usize,
    /// Largest `j >= 1` with `A_j != 0`; 0 when only `A_0` survived.
    pub used_s: usize,
    pub d: usize,
    pub threshold: usize,
    /// Translation used to make `A_{used_s}` nonvanishing at the origin.
    pub shift: Option<Fp>,
    /// All messages satisfying the retrieval equation.
    pub space: AffineSpace,
    /// Members of `space` with agreement at least `threshold`, sorted by
    /// agreement (descending) and then by coefficients.
    pub candidates: Vec<Candidate>,
    /// Set when the space had more than `enumeration_cap` members.
    pub enumeration_skipped: bool,
}

/// Interpolate, retrieve, and expand the candidate space.
pub fn list_decode(
    y: &Word,
    params: &CodeParams,
    cfg: &DecoderConfig,
) -> Result<DecodeOutput, DecodeError> {
    let q = interpolate(y, params, cfg)?;
    let d = q.d();
    let t_min = threshold(d, params.k(), params.m(), cfg.s);
    let Retrieval {
        space,
        used_s,
        shift,
    } = retrieve_space(&q, params);

    let size = space.size(params.p());
    let enumerate = size.is_some_and(|n| n <= cfg.enumeration_cap);
    let mut candidates = Vec::new();
    if enumerate {
        for coeffs in space.points(params.field()) {
            let message = Message::new(params.field(), coeffs);
            let agreement = params.encode(&message)?.agreement(y)?;
            if agreement >= t_min {
                candidates.push(Candidate { message, agreement });
            }
        }
        sort_candidates(&mut candidates);
    }
    Ok(DecodeOutput {
        s: cfg.s,
        used_s,
        d,
        threshold: t_min,
        shift,
        space,
        candidates,
        enumeration_skipped: !enumerate,
    })
}

pub(crate) fn sort_candidates(c: &mut [Candidate]) {
    c.sort_by(|a, b| {
        b.agreement
            .cmp(&a.agreement)
            .then_with(|| a.message.values().cmp(&b.message.values()))
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn choose_d_examples() {
        assert_eq!(choose_d(10, 4, 2, 8), Ok(7));
        assert_eq!(choose_d(4, 3, 2, 4), Ok(1));
        assert!(matches!(
            choose_d(4, 3, 3, 11),
            Err(DecodeError::InfeasibleS {
                numerator: -6,
                denominator: 4
            })
        ));
        assert_eq!(choose_d(10, 4, 1, 8), Ok(16));
        assert_eq!(
            choose_d(10, 4, 0, 8),
            Err(DecodeError::InvalidS { s: 0, m: 4 })
        );
        assert_eq!(
            choose_d(10, 4, 5, 8),
            Err(DecodeError::InvalidS { s: 5, m: 4 })
        );
    }

    #[test]
    fn infeasible_message() {
        let e = choose_d(4, 3, 3, 11).unwrap_err();
        assert!(e
            .to_string()
            .starts_with("s infeasible for these parameters"));
    }

    #[test]
    fn threshold_examples() {
        assert_eq!(threshold(7, 8, 4, 2), 5);
        assert_eq!(threshold(16, 8, 4, 1), 6);
        assert_eq!(threshold(0, 1, 3, 3), 1);
    }

    #[test]
    fn interpolation_has_more_unknowns_than_equations() {
        for m in 1..=8usize {
            for n in 1..=20usize {
                for k in m..n * m {
                    for s in 1..=m {
                        if let Ok(d) = choose_d(n, m, s, k) {
                            assert!(
                                (d + 1) * (s + 1) + k - 1 > n * (m - s + 1),
                                "n={n} m={m} k={k} s={s}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn threshold_is_tight() {
        for d in 0..30 {
            for k in 1..30 {
                for m in 1..6 {
                    for s in 1..=m {
                        let t = threshold(d, k, m, s);
                        assert!(t * (m - s + 1) > d + k - 1);
                        assert!((t - 1) * (m - s + 1) < d + k);
                    }
                }
            }
        }
    }
}
