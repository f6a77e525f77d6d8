//! Experiment plumbing: file formats, the seeded channel, Monte Carlo
//! simulation and radius tables.

pub mod channel;
pub mod format;
pub mod rng;
pub mod sim;
pub mod table;

pub use channel::{corrupt, ChannelSpec};
pub use format::{
    parse_decode, parse_message, parse_params, parse_word, render_decode, render_message,
    render_params, render_word, DecodeRecord, FormatError,
};
pub use rng::SplitMix64;
pub use sim::{render_outcome, render_timing, simulate, SimOutcome, SimReport};
pub use table::{list_radius, normalized_radius, radius_table, render_table, RadiusRow};
