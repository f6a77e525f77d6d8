//! Monte Carlo decoding experiments.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use crate::code::{CodeParams, Message};
use crate::decoder::{list_decode, DecodeError, DecoderConfig};

use super::channel::{corrupt, ChannelSpec};
use super::rng::{mix, SplitMix64};

/// Why a trial's transmitted message was missing from the decoder output.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FailureBreakdown {
    pub not_in_space: usize,
    pub below_threshold: usize,
    pub enumeration_skipped: usize,
}

/// The seed-determined part of a simulation report.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SimOutcome {
    pub trials: usize,
    pub successes: usize,
    pub failures: FailureBreakdown,
    /// Candidate-list sizes; `None` counts trials whose space was too large
    /// to enumerate.
    pub list_sizes: BTreeMap<Option<usize>, usize>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TimingStats {
    pub min: Duration,
    pub mean: Duration,
    pub max: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimReport {
    pub outcome: SimOutcome,
    pub timing: TimingStats,
}

/// The message and channel seed used by trial `index`.
pub fn trial_inputs(params: &CodeParams, seed: u64, index: u64) -> (Message, u64) {
    let mut rng = SplitMix64::new(mix(seed ^ index));
    let field = params.field();
    let coeffs = (0..params.k())
        .map(|_| field.elem(rng.below(params.p())))
        .collect();
    (Message::new(field, coeffs), rng.next_u64())
}

/// Runs `trials` independent encode / corrupt / list-decode rounds with
/// exactly `errors` corrupted columns each.
pub fn simulate(
    params: &CodeParams,
    cfg: &DecoderConfig,
    errors: usize,
    trials: usize,
    seed: u64,
) -> Result<SimReport, DecodeError> {
    cfg.validate(params)?;
    let mut outcome = SimOutcome {
        trials,
        ..Default::default()
    };
    let mut times = Vec::with_capacity(trials);
    for t in 0..trials {
        let (msg, channel_seed) = trial_inputs(params, seed, t as u64);
        let sent = params.encode(&msg)?;
        let (received, _) = corrupt(
            &sent,
            ChannelSpec {
                errors,
                seed: channel_seed,
            },
        );
        let start = Instant::now();
        let out = list_decode(&received, params, cfg)?;
        times.push(start.elapsed());

        let size = (!out.enumeration_skipped).then_some(out.candidates.len());
        *outcome.list_sizes.entry(size).or_default() += 1;
        if out.candidates.iter().any(|c| c.message == msg) {
            outcome.successes += 1;
        } else if !out.space.contains(msg.coeffs()) {
            outcome.failures.not_in_space += 1;
        } else if out.enumeration_skipped {
            outcome.failures.enumeration_skipped += 1;
        } else {
            outcome.failures.below_threshold += 1;
        }
    }
    let timing = if times.is_empty() {
        TimingStats::default()
    } else {
        TimingStats {
            min: *times.iter().min().expect("nonempty"),
            max: *times.iter().max().expect("nonempty"),
            mean: times.iter().sum::<Duration>() / times.len() as u32,
        }
    };
    Ok(SimReport { outcome, timing })
}

/// Line-oriented rendering of the deterministic part of a report.
pub fn render_outcome(o: &SimOutcome) -> String {
    let mut s = String::from("dercode-sim v1\n");
    writeln!(s, "trials {}", o.trials).unwrap();
    writeln!(s, "successes {}", o.successes).unwrap();
    writeln!(s, "fail_not_in_space {}", o.failures.not_in_space).unwrap();
    writeln!(s, "fail_below_threshold {}", o.failures.below_threshold).unwrap();
    writeln!(
        s,
        "fail_enumeration_skipped {}",
        o.failures.enumeration_skipped
    )
    .unwrap();
    for (size, count) in &o.list_sizes {
        match size {
            Some(n) => writeln!(s, "list_size {n} {count}").unwrap(),
            None => writeln!(s, "list_size none {count}").unwrap(),
        }
    }
    s
}

pub fn render_timing(t: &TimingStats) -> String {
    format!(
        "time_us min {} mean {} max {}\n",
        t.min.as_micros(),
        t.mean.as_micros(),
        t.max.as_micros()
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params() -> CodeParams {
        CodeParams::new(41, 10, 4, 8, None).unwrap()
    }

    #[test]
    fn zero_errors_always_succeed() {
        let r = simulate(&params(), &DecoderConfig::new(2), 0, 25, 5).unwrap();
        assert_eq!(r.outcome.successes, 25);
        assert_eq!(r.outcome.list_sizes.values().sum::<usize>(), 25);
    }

    #[test]
    fn identical_seeds_identical_outcomes() {
        let cfg = DecoderConfig::new(2);
        let a = simulate(&params(), &cfg, 5, 20, 77).unwrap();
        let b = simulate(&params(), &cfg, 5, 20, 77).unwrap();
        assert_eq!(a.outcome, b.outcome);
        assert_eq!(render_outcome(&a.outcome), render_outcome(&b.outcome));
    }

    #[test]
    fn trials_do_not_depend_on_order() {
        let p = params();
        let (m3, s3) = trial_inputs(&p, 99, 3);
        let again = (0..5).map(|t| trial_inputs(&p, 99, t)).nth(3).unwrap();
        assert_eq!((m3, s3), again);
    }

    #[test]
    fn beyond_radius_failures_are_classified() {
        let r = simulate(&params(), &DecoderConfig::new(2), 9, 30, 1).unwrap();
        let f = &r.outcome.failures;
        assert_eq!(
            r.outcome.successes + f.not_in_space + f.below_threshold + f.enumeration_skipped,
            30
        );
        assert!(r.outcome.successes < 30);
    }
}
