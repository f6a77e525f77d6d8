//! Unique decoding when `f, f', ..., f^(s-1)` are known at one point.
//!
//! After translating by `alpha`, the shifted message `g(X) = f(X + alpha)`
//! has `g_j = f^(j)(alpha) / j!`. Fixing `g_0 .. g_{s-2}` determines the
//! remaining coefficients one at a time, since the coefficient of `X^i` in
//! the retrieval equation involves `g_{i+s-1}` with factor
//! `A_s(alpha) (i+s-1)!/i!`, which is nonzero whenever `A_s(alpha) != 0`.

use crate::code::{CodeParams, Message, Word};
use crate::field::Fp;
use crate::poly::Poly;

use super::interpolate::{interpolate, InterpolationPoly};
use super::retrieve::{effective_s, retrieval_system, unshift};
use super::{threshold, DecodeError, DecoderConfig, Inconsistency};

/// `alpha` and the values `f(alpha), f'(alpha), ..., f^(s-1)(alpha)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SideInfo {
    pub alpha: Fp,
    pub values: Vec<Fp>,
}

impl SideInfo {
    /// Side information for a known message (what an encoder would send).
    pub fn for_message(msg: &Message, alpha: Fp, s: usize) -> Self {
        Self {
            alpha,
            values: msg.to_poly().eval_derivs(alpha, s),
        }
    }
}

pub(crate) fn decode_with_side_info(
    q: &InterpolationPoly,
    params: &CodeParams,
    y: &Word,
    t_min: usize,
    alpha: Fp,
    values: &[Fp],
) -> Result<Message, DecodeError> {
    let field = params.field();
    let k = params.k();
    let used_s = effective_s(q);
    if used_s == 0 {
        return Err(DecodeError::NoConsistentMessage(Inconsistency::Degenerate));
    }
    if q.a(used_s).eval(alpha).is_zero() {
        return Err(DecodeError::SideInfoUnusable {
            alpha: alpha.value(),
            used_s,
        });
    }
    let shifted: Vec<Poly> = q.coeffs()[..=used_s]
        .iter()
        .map(|a| a.taylor_shift(alpha))
        .collect();
    let (m, rhs) = retrieval_system(&shifted, used_s, k);

    let mut g = vec![field.zero(); k];
    let mut fact = field.one();
    for j in 0..(used_s - 1).min(k) {
        if j > 0 {
            fact *= field.elem(j as u64);
        }
        g[j] = values[j] * fact.inv().expect("j < k < p");
    }
    // Row i pins g_{i + used_s - 1}; every other term in that row is known.
    for (i, &r) in rhs.iter().enumerate().take(k - used_s + 1) {
        let target = i + used_s - 1;
        let row = m.row(i);
        let known = (0..target).fold(-r, |acc, e| acc + row[e] * g[e]);
        let pivot = row[target].inv().expect("leading factor is nonzero");
        g[target] = -known * pivot;
    }
    if m.mul_vec(&g) != rhs {
        return Err(DecodeError::NoConsistentMessage(
            Inconsistency::SystemUnsatisfied,
        ));
    }

    let msg = Message::new(field, unshift(field, &g, alpha));
    if msg.to_poly().eval_derivs(alpha, values.len()) != values {
        return Err(DecodeError::NoConsistentMessage(
            Inconsistency::SideInfoMismatch,
        ));
    }
    let agreement = params.encode(&msg)?.agreement(y)?;
    if agreement < t_min {
        return Err(DecodeError::NoConsistentMessage(
            Inconsistency::BelowThreshold {
                agreement,
                threshold: t_min,
            },
        ));
    }
    Ok(msg)
}

/// Decodes `y` to the unique message consistent with `info`, or explains why
/// that is impossible for this `alpha`.
pub fn side_info_decode(
    y: &Word,
    params: &CodeParams,
    cfg: &DecoderConfig,
    info: &SideInfo,
) -> Result<Message, DecodeError> {
    if info.values.len() != cfg.s {
        return Err(DecodeError::SideInfoLength {
            expected: cfg.s,
            got: info.values.len(),
        });
    }
    let q = interpolate(y, params, cfg)?;
    let t_min = threshold(q.d(), params.k(), params.m(), cfg.s);
    decode_with_side_info(&q, params, y, t_min, info.alpha, &info.values)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnGuessOutput {
    /// Distinct verified messages, in order of first discovery.
    pub messages: Vec<Message>,
    /// Per column: index into `messages`, or the reason the guess failed.
    pub outcomes: Vec<Result<usize, DecodeError>>,
}

/// Uses each received column as a guess for the side information at its own
/// evaluation point. Only the first `s - 1` entries are pinned; the rest of
/// the column is left to the agreement check.
pub fn column_guess_decode(
    y: &Word,
    params: &CodeParams,
    cfg: &DecoderConfig,
) -> Result<ColumnGuessOutput, DecodeError> {
    let q = interpolate(y, params, cfg)?;
    let t_min = threshold(q.d(), params.k(), params.m(), cfg.s);
    let mut messages: Vec<Message> = Vec::new();
    let mut outcomes = Vec::with_capacity(params.n());
    for (&a, col) in params.points().iter().zip(y.columns()) {
        let outcome =
            decode_with_side_info(&q, params, y, t_min, a, &col[..cfg.s - 1]).map(|msg| {
                match messages.iter().position(|m| *m == msg) {
                    Some(i) => i,
                    None => {
                        messages.push(msg);
                        messages.len() - 1
                    }
                }
            });
        outcomes.push(outcome);
    }
    Ok(ColumnGuessOutput { messages, outcomes })
}
