//! Seeded column-replacement channel.

use crate::code::Word;

use super::rng::SplitMix64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChannelSpec {
    /// Number of columns to corrupt, at most `n`.
    pub errors: usize,
    pub seed: u64,
}

/// Replaces exactly `spec.errors` columns with uniformly random columns.
///
/// The column set is the first `e` entries of a partial Fisher-Yates shuffle
/// of `0..n`; each chosen column is then redrawn entry by entry until it
/// differs from the original. All randomness comes from one SplitMix64
/// stream seeded with `spec.seed`. Also returns the corrupted indices
/// (zero-based, in selection order).
pub fn corrupt(w: &Word, spec: ChannelSpec) -> (Word, Vec<usize>) {
    let n = w.n();
    assert!(
        spec.errors <= n,
        "cannot corrupt {} of {} columns",
        spec.errors,
        n
    );
    let field = w.field();
    let p = field.modulus();
    let mut rng = SplitMix64::new(spec.seed);
    let mut idx: Vec<usize> = (0..n).collect();
    for i in 0..spec.errors {
        let j = i + rng.below((n - i) as u64) as usize;
        idx.swap(i, j);
    }
    let chosen = idx[..spec.errors].to_vec();
    let mut out = w.clone();
    for &c in &chosen {
        let original = w.column(c);
        loop {
            let fresh: Vec<_> = (0..w.m()).map(|_| field.elem(rng.below(p))).collect();
            if fresh != original {
                out.columns_mut()[c] = fresh;
                break;
            }
        }
    }
    (out, chosen)
}
