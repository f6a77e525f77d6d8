//! Line-oriented text formats for parameters, messages, words and decoder
//! output. UTF-8, LF line endings, space-separated decimal integers, each
//! file opening with a `dercode-<kind> v1` header line.

use std::fmt::Write as _;
use std::str::FromStr;

use thiserror::Error;

use crate::code::{CodeError, CodeParams, Message, ParamError, Word};
use crate::decoder::DecodeOutput;
use crate::field::{FieldError, PrimeField};
use crate::linalg::AffineSpace;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("unexpected end of input, expected `{0}`")]
    Truncated(String),
    #[error(transparent)]
    Params(#[from] ParamError),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

struct Reader<'a> {
    lines: Vec<&'a str>,
    pos: usize,
}

impl<'a> Reader<'a> {
    fn new(text: &'a str) -> Self {
        let mut lines: Vec<&str> = text.split('\n').collect();
        if lines.last() == Some(&"") {
            lines.pop();
        }
        Self { lines, pos: 0 }
    }

    fn err(&self, msg: impl Into<String>) -> FormatError {
        FormatError::Syntax {
            line: self.pos,
            msg: msg.into(),
        }
    }

    fn header(&mut self, want: &str) -> Result<(), FormatError> {
        let got = self.next_line(want)?;
        if got.trim_end() != want {
            return Err(self.err(format!("expected header `{want}`, found `{got}`")));
        }
        Ok(())
    }

    fn next_line(&mut self, expecting: &str) -> Result<&'a str, FormatError> {
        let line = self
            .lines
            .get(self.pos)
            .copied()
            .ok_or_else(|| FormatError::Truncated(expecting.to_string()))?;
        self.pos += 1;
        Ok(line)
    }

    fn peek_key(&self) -> Option<&'a str> {
        self.lines
            .get(self.pos)
            .and_then(|l| l.split_whitespace().next())
    }

    /// Tokens after `key` on the next line.
    fn keyed(&mut self, key: &str) -> Result<Vec<&'a str>, FormatError> {
        let line = self.next_line(key)?;
        let mut toks = line.split_whitespace();
        match toks.next() {
            Some(k) if k == key => Ok(toks.collect()),
            other => Err(self.err(format!("expected `{key}`, found `{}`", other.unwrap_or("")))),
        }
    }

    fn parse<T: FromStr>(&self, tok: &str) -> Result<T, FormatError> {
        tok.parse()
            .map_err(|_| self.err(format!("invalid integer `{tok}`")))
    }

    fn scalar<T: FromStr>(&mut self, key: &str) -> Result<T, FormatError> {
        let toks = self.keyed(key)?;
        match toks.as_slice() {
            [one] => self.parse(one),
            _ => Err(self.err(format!("`{key}` takes exactly one value"))),
        }
    }

    fn values(&mut self, key: &str, count: usize) -> Result<Vec<u64>, FormatError> {
        let toks = self.keyed(key)?;
        self.parse_all(&toks, count, key)
    }

    fn parse_all(&self, toks: &[&str], count: usize, key: &str) -> Result<Vec<u64>, FormatError> {
        if toks.len() != count {
            return Err(self.err(format!(
                "`{key}` expects {count} values, found {}",
                toks.len()
            )));
        }
        toks.iter().map(|t| self.parse(t)).collect()
    }

    fn finish(&self) -> Result<(), FormatError> {
        if self.pos < self.lines.len() {
            return Err(FormatError::Syntax {
                line: self.pos + 1,
                msg: "trailing content".into(),
            });
        }
        Ok(())
    }
}

fn join(values: impl IntoIterator<Item = u64>) -> String {
    values
        .into_iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn keyed_line(out: &mut String, key: &str, values: impl IntoIterator<Item = u64>) {
    let body = join(values);
    if body.is_empty() {
        writeln!(out, "{key}").unwrap();
    } else {
        writeln!(out, "{key} {body}").unwrap();
    }
}

pub fn render_params(p: &CodeParams) -> String {
    let mut s = String::from("dercode-params v1\n");
    writeln!(s, "p {}", p.p()).unwrap();
    writeln!(s, "n {}", p.n()).unwrap();
    writeln!(s, "m {}", p.m()).unwrap();
    writeln!(s, "k {}", p.k()).unwrap();
    keyed_line(&mut s, "points", p.points().iter().map(|a| a.value()));
    s
}

pub fn parse_params(text: &str) -> Result<CodeParams, FormatError> {
    let mut r = Reader::new(text);
    r.header("dercode-params v1")?;
    let p: u64 = r.scalar("p")?;
    let n: usize = r.scalar("n")?;
    let m: usize = r.scalar("m")?;
    let k: usize = r.scalar("k")?;
    let points = r.values("points", n)?;
    r.finish()?;
    Ok(CodeParams::new(p, n, m, k, Some(&points))?)
}

pub fn render_message(msg: &Message) -> String {
    let mut s = String::from("dercode-msg v1\n");
    writeln!(s, "p {}", msg.field().modulus()).unwrap();
    writeln!(s, "k {}", msg.len()).unwrap();
    keyed_line(&mut s, "coeffs", msg.values());
    s
}

pub fn parse_message(text: &str) -> Result<Message, FormatError> {
    let mut r = Reader::new(text);
    r.header("dercode-msg v1")?;
    let field = PrimeField::new(r.scalar("p")?)?;
    let k: usize = r.scalar("k")?;
    let coeffs = r.values("coeffs", k)?;
    r.finish()?;
    Ok(Message::from_u64(field, &coeffs)?)
}

pub fn render_word(w: &Word) -> String {
    let mut s = String::from("dercode-word v1\n");
    writeln!(s, "p {}", w.field().modulus()).unwrap();
    writeln!(s, "n {}", w.n()).unwrap();
    writeln!(s, "m {}", w.m()).unwrap();
    for (i, col) in w.columns().iter().enumerate() {
        writeln!(s, "col {} {}", i + 1, join(col.iter().map(|v| v.value()))).unwrap();
    }
    s
}

pub fn parse_word(text: &str) -> Result<Word, FormatError> {
    let mut r = Reader::new(text);
    r.header("dercode-word v1")?;
    let field = PrimeField::new(r.scalar("p")?)?;
    let n: usize = r.scalar("n")?;
    let m: usize = r.scalar("m")?;
    let mut cols = Vec::with_capacity(n);
    for i in 1..=n {
        let toks = r.keyed("col")?;
        let Some((idx, rest)) = toks.split_first() else {
            return Err(r.err("`col` needs an index"));
        };
        let idx: usize = r.parse(idx)?;
        if idx != i {
            return Err(r.err(format!("expected column {i}, found {idx}")));
        }
        cols.push(r.parse_all(rest, m, "col")?);
    }
    r.finish()?;
    Ok(Word::from_u64(field, m, &cols)?)
}

/// The contents of a decode output file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeRecord {
    pub s: usize,
    pub used_s: usize,
    pub d: usize,
    pub threshold: usize,
    /// `(offset, basis)`, or `None` when no message satisfies the retrieval
    /// equation.
    pub space: Option<(Vec<u64>, Vec<Vec<u64>>)>,
    /// `(agreement, coefficients)`, sorted by agreement descending then
    /// coefficients ascending.
    pub candidates: Vec<(usize, Vec<u64>)>,
}

impl From<&DecodeOutput> for DecodeRecord {
    fn from(o: &DecodeOutput) -> Self {
        let vals = |v: &[crate::field::Fp]| v.iter().map(|x| x.value()).collect::<Vec<_>>();
        let space = match &o.space {
            AffineSpace::Empty { .. } => None,
            AffineSpace::Coset { offset, basis } => {
                Some((vals(offset), basis.iter().map(|b| vals(b)).collect()))
            }
        };
        Self {
            s: o.s,
            used_s: o.used_s,
            d: o.d,
            threshold: o.threshold,
            space,
            candidates: o
                .candidates
                .iter()
                .map(|c| (c.agreement, c.message.values()))
                .collect(),
        }
    }
}

/// Renders a decode record; an empty space is written as `dim none` with no
/// offset or basis lines.
pub fn render_decode(rec: &DecodeRecord) -> String {
    let mut s = String::from("dercode-decode v1\n");
    writeln!(s, "s {}", rec.s).unwrap();
    writeln!(s, "used_s {}", rec.used_s).unwrap();
    writeln!(s, "d {}", rec.d).unwrap();
    writeln!(s, "threshold {}", rec.threshold).unwrap();
    match &rec.space {
        None => writeln!(s, "dim none").unwrap(),
        Some((offset, basis)) => {
            writeln!(s, "dim {}", basis.len()).unwrap();
            keyed_line(&mut s, "offset", offset.iter().copied());
            for b in basis {
                keyed_line(&mut s, "basis", b.iter().copied());
            }
        }
    }
    for (agreement, coeffs) in &rec.candidates {
        writeln!(s, "candidate {agreement} {}", join(coeffs.iter().copied())).unwrap();
    }
    s
}

pub fn parse_decode(text: &str) -> Result<DecodeRecord, FormatError> {
    let mut r = Reader::new(text);
    r.header("dercode-decode v1")?;
    let s: usize = r.scalar("s")?;
    let used_s: usize = r.scalar("used_s")?;
    let d: usize = r.scalar("d")?;
    let threshold: usize = r.scalar("threshold")?;
    let dim_tok = r.keyed("dim")?;
    let dim = match dim_tok.as_slice() {
        ["none"] => None,
        [v] => Some(r.parse::<usize>(v)?),
        _ => return Err(r.err("`dim` takes exactly one value")),
    };
    let mut width = None;
    let space = match dim {
        None => None,
        Some(dim) => {
            let offset: Vec<u64> = {
                let toks = r.keyed("offset")?;
                r.parse_all(&toks, toks.len(), "offset")?
            };
            let mut basis = Vec::with_capacity(dim);
            for _ in 0..dim {
                basis.push(r.values("basis", offset.len())?);
            }
            width = Some(offset.len());
            Some((offset, basis))
        }
    };
    let mut candidates = Vec::new();
    while r.peek_key() == Some("candidate") {
        let toks = r.keyed("candidate")?;
        let Some((a, rest)) = toks.split_first() else {
            return Err(r.err("`candidate` needs an agreement count"));
        };
        let agreement: usize = r.parse(a)?;
        let w = *width.get_or_insert(rest.len());
        candidates.push((agreement, r.parse_all(rest, w, "candidate")?));
    }
    r.finish()?;
    Ok(DecodeRecord {
        s,
        used_s,
        d,
        threshold,
        space,
        candidates,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decoder::{list_decode, DecoderConfig};
    use proptest::prelude::*;

    #[test]
    fn params_layout() {
        let p = CodeParams::new(41, 3, 2, 4, Some(&[5, 1, 9])).unwrap();
        let text = render_params(&p);
        assert_eq!(
            text,
            "dercode-params v1\np 41\nn 3\nm 2\nk 4\npoints 5 1 9\n"
        );
        assert_eq!(parse_params(&text).unwrap(), p);
    }

    #[test]
    fn word_layout() {
        let f = PrimeField::new(13).unwrap();
        let w = Word::from_u64(f, 2, &[vec![1, 2], vec![3, 4]]).unwrap();
        let text = render_word(&w);
        assert_eq!(
            text,
            "dercode-word v1\np 13\nn 2\nm 2\ncol 1 1 2\ncol 2 3 4\n"
        );
        assert_eq!(parse_word(&text).unwrap(), w);
    }

    #[test]
    fn message_layout() {
        let f = PrimeField::new(13).unwrap();
        let m = Message::from_u64(f, &[0, 12, 3]).unwrap();
        let text = render_message(&m);
        assert_eq!(text, "dercode-msg v1\np 13\nk 3\ncoeffs 0 12 3\n");
        assert_eq!(parse_message(&text).unwrap(), m);
    }

    #[test]
    fn decode_output_round_trip() {
        let p = CodeParams::new(13, 4, 3, 4, None).unwrap();
        let msg = Message::from_u64(p.field(), &[1, 2, 3, 4]).unwrap();
        let mut y = p.encode(&msg).unwrap();
        y.columns_mut()[0][0] += p.field().one();
        let out = list_decode(&y, &p, &DecoderConfig::new(2)).unwrap();
        let rec = DecodeRecord::from(&out);
        let text = render_decode(&rec);
        assert!(text.starts_with("dercode-decode v1\ns 2\nused_s "));
        assert_eq!(parse_decode(&text).unwrap(), rec);

        let empty = DecodeRecord {
            s: 2,
            used_s: 0,
            d: 1,
            threshold: 3,
            space: None,
            candidates: vec![],
        };
        let text = render_decode(&empty);
        assert!(text.contains("dim none\n"));
        assert_eq!(parse_decode(&text).unwrap(), empty);
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(matches!(
            parse_params("dercode-params v2\n"),
            Err(FormatError::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            parse_params("dercode-params v1\np 41\nn 3\n"),
            Err(FormatError::Truncated(_))
        ));
        assert!(matches!(
            parse_params("dercode-params v1\np 41\nn 3\nm 2\nk 4\npoints 1 2 2\n"),
            Err(FormatError::Params(ParamError::RepeatedPoint(2)))
        ));
        assert!(matches!(
            parse_message("dercode-msg v1\np 13\nk 2\ncoeffs 1 13\n"),
            Err(FormatError::Code(CodeError::NotCanonical {
                value: 13,
                p: 13
            }))
        ));
        assert!(matches!(
            parse_word("dercode-word v1\np 13\nn 2\nm 1\ncol 2 1\ncol 1 1\n"),
            Err(FormatError::Syntax { line: 5, .. })
        ));
        assert!(matches!(
            parse_message("dercode-msg v1\np 13\nk 1\ncoeffs 1\nextra\n"),
            Err(FormatError::Syntax { line: 5, .. })
        ));
        assert!(matches!(
            parse_message("dercode-msg v1\np 12\nk 1\ncoeffs 1\n"),
            Err(FormatError::Field(FieldError::NotPrime(12)))
        ));
    }

    fn arb_record() -> impl Strategy<Value = DecodeRecord> {
        (1usize..6, 0usize..3).prop_flat_map(|(k, dim)| {
            (
                0usize..6,
                0usize..6,
                0usize..50,
                0usize..20,
                proptest::option::of((
                    prop::collection::vec(0u64..1000, k),
                    prop::collection::vec(prop::collection::vec(0u64..1000, k), dim),
                )),
                prop::collection::vec((0usize..20, prop::collection::vec(0u64..1000, k)), 0..4),
            )
                .prop_map(|(s, used_s, d, threshold, space, candidates)| {
                    DecodeRecord {
                        s,
                        used_s,
                        d,
                        threshold,
                        space,
                        candidates,
                    }
                })
        })
    }

    proptest! {
        #[test]
        fn decode_records_round_trip(rec in arb_record()) {
            prop_assert_eq!(parse_decode(&render_decode(&rec)).unwrap(), rec);
        }

        #[test]
        fn words_round_trip(cols in prop::collection::vec(prop::collection::vec(0u64..101, 3), 1..8)) {
            let w = Word::from_u64(PrimeField::new(101).unwrap(), 3, &cols).unwrap();
            prop_assert_eq!(parse_word(&render_word(&w)).unwrap(), w);
        }
    }
}
