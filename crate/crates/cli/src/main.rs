//! `dercode` command-line front end.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 bad parameters or malformed
//! input, 3 decoding found nothing.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use thiserror::Error;

use dercode::harness::{
    corrupt, parse_message, parse_params, parse_word, radius_table, render_decode, render_message,
    render_outcome, render_params, render_table, render_timing, render_word, simulate, ChannelSpec,
    DecodeRecord, FormatError,
};
use dercode::{
    column_guess_decode, list_decode, side_info_decode, CodeError, CodeParams, DecodeError,
    DecoderConfig, FieldError, Inconsistency, ParamError, SideInfo, Word,
};

#[derive(Parser)]
#[command(
    name = "dercode",
    version,
    about = "Derivative codes and their list decoder"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate code parameters and print rate, distance and radius table.
    Params {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        /// Evaluation points, space separated; defaults to 1..n.
        #[arg(long)]
        points: Option<String>,
        /// Append the per-s decoding radius table.
        #[arg(long)]
        table: bool,
        /// Also write a params file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Encode a message file into a word file.
    Encode {
        #[arg(long)]
        params: PathBuf,
        #[arg(long)]
        message: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Replace exactly E columns of a word with seeded random columns.
    Corrupt {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        errors: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// List-decode a received word.
    Decode {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        params: PathBuf,
        #[arg(long)]
        s: usize,
        /// Largest candidate space that is enumerated.
        #[arg(long, default_value_t = dercode::decoder::DEFAULT_ENUMERATION_CAP)]
        cap: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Unique decoding from f(alpha), ..., f^(s-1)(alpha).
    DecodeSide {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        params: PathBuf,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        alpha: u64,
        /// The s derivative values at alpha, space separated.
        #[arg(long)]
        values: String,
    },
    /// Try every received column as side information at its own point.
    DecodeColguess {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        params: PathBuf,
        #[arg(long)]
        s: usize,
    },
    /// Monte Carlo encode / corrupt / decode runs.
    Simulate {
        #[arg(long)]
        params: PathBuf,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        errors: usize,
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        seed: u64,
        /// Append wall-clock statistics (not reproducible).
        #[arg(long)]
        timing: bool,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Format { path: PathBuf, source: FormatError },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Params(#[from] ParamError),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Decode(DecodeError),
    /// Decoding ran but produced nothing; the message has been reported.
    #[error("{0}")]
    NotFound(String),
}

impl From<DecodeError> for CliError {
    fn from(e: DecodeError) -> Self {
        match e {
            DecodeError::SideInfoUnusable { .. } | DecodeError::NoConsistentMessage(_) => {
                CliError::NotFound(e.to_string())
            }
            other => CliError::Decode(other),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } => 1,
            CliError::NotFound(_) => 3,
            _ => 2,
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn load<T>(path: &Path, parse: fn(&str) -> Result<T, FormatError>) -> Result<T, CliError> {
    parse(&read(path)?).map_err(|source| CliError::Format {
        path: path.to_owned(),
        source,
    })
}

fn parse_list(what: &str, text: &str) -> Result<Vec<u64>, CliError> {
    text.split_whitespace()
        .map(|t| {
            t.parse()
                .map_err(|_| CliError::Usage(format!("{what}: invalid integer `{t}`")))
        })
        .collect()
}

fn load_word(input: &Path, params: &CodeParams) -> Result<Word, CliError> {
    let y = load(input, parse_word)?;
    params.check_word(&y)?;
    Ok(y)
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Params {
            p,
            n,
            m,
            k,
            points,
            table,
            out,
        } => {
            let points = points.map(|s| parse_list("--points", &s)).transpose()?;
            let params = CodeParams::new(p, n, m, k, points.as_deref())?;
            if let Some(path) = out {
                write(&path, &render_params(&params))?;
            }
            let report = params.report();
            let mut s = String::new();
            writeln!(s, "p {p}\nn {n}\nm {m}\nk {k}").unwrap();
            writeln!(s, "rate {}\ndistance {}", report.rate, report.distance).unwrap();
            if table {
                s.push_str(&render_table(&radius_table(&params)));
            }
            Ok(s)
        }
        Command::Encode {
            params,
            message,
            out,
        } => {
            let params = load(&params, parse_params)?;
            let msg = load(&message, parse_message)?;
            let word = params.encode(&msg)?;
            write(&out, &render_word(&word))?;
            Ok(String::new())
        }
        Command::Corrupt {
            input,
            errors,
            seed,
            out,
        } => {
            let w = load(&input, parse_word)?;
            if errors > w.n() {
                return Err(CliError::Usage(format!(
                    "--errors {errors} exceeds block length {}",
                    w.n()
                )));
            }
            let (y, _) = corrupt(&w, ChannelSpec { errors, seed });
            write(&out, &render_word(&y))?;
            Ok(String::new())
        }
        Command::Decode {
            input,
            params,
            s,
            cap,
            out,
        } => {
            let params = load(&params, parse_params)?;
            let y = load_word(&input, &params)?;
            let cfg = DecoderConfig::new(s).with_cap(cap);
            let output = list_decode(&y, &params, &cfg)?;
            let text = render_decode(&DecodeRecord::from(&output));
            let shown = match out {
                Some(path) => {
                    write(&path, &text)?;
                    String::new()
                }
                None => text,
            };
            if output.candidates.is_empty() {
                let why = if output.enumeration_skipped {
                    format!("candidate space exceeds --cap {cap}; not enumerated")
                } else {
                    "no candidate reaches the agreement threshold".to_string()
                };
                print!("{shown}");
                return Err(CliError::NotFound(why));
            }
            Ok(shown)
        }
        Command::DecodeSide {
            input,
            params,
            s,
            alpha,
            values,
        } => {
            let params = load(&params, parse_params)?;
            let y = load_word(&input, &params)?;
            let field = params.field();
            let values = parse_list("--values", &values)?
                .into_iter()
                .map(|v| field.canonical(v))
                .collect::<Result<Vec<_>, _>>()?;
            let info = SideInfo {
                alpha: field.canonical(alpha)?,
                values,
            };
            let msg = side_info_decode(&y, &params, &DecoderConfig::new(s), &info)?;
            Ok(render_message(&msg))
        }
        Command::DecodeColguess { input, params, s } => {
            let params = load(&params, parse_params)?;
            let y = load_word(&input, &params)?;
            let out = column_guess_decode(&y, &params, &DecoderConfig::new(s))?;
            let mut text = format!("dercode-colguess v1\ns {s}\n");
            for (i, outcome) in out.outcomes.iter().enumerate() {
                let status = match outcome {
                    Ok(idx) => format!("message {idx}"),
                    Err(DecodeError::SideInfoUnusable { .. }) => "unusable".into(),
                    Err(DecodeError::NoConsistentMessage(Inconsistency::BelowThreshold {
                        ..
                    })) => "below_threshold".into(),
                    Err(_) => "inconsistent".into(),
                };
                writeln!(text, "col {} {status}", i + 1).unwrap();
            }
            for (idx, msg) in out.messages.iter().enumerate() {
                let vals: Vec<String> = msg.values().iter().map(u64::to_string).collect();
                writeln!(text, "message {idx} {}", vals.join(" ")).unwrap();
            }
            if out.messages.is_empty() {
                print!("{text}");
                return Err(CliError::NotFound("no column yielded a message".into()));
            }
            Ok(text)
        }
        Command::Simulate {
            params,
            s,
            errors,
            trials,
            seed,
            timing,
        } => {
            let params = load(&params, parse_params)?;
            if errors > params.n() {
                return Err(CliError::Usage(format!(
                    "--errors {errors} exceeds block length {}",
                    params.n()
                )));
            }
            let report = simulate(&params, &DecoderConfig::new(s), errors, trials, seed)?;
            let mut text = render_outcome(&report.outcome);
            if timing {
                text.push_str(&render_timing(&report.timing));
            }
            Ok(text)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("dercode: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
