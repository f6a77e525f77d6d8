//! Order-`m` derivative codes: parameters, messages, received words and the
//! encoder.
//!
//! A message is a polynomial `f` of degree `< k`. Its codeword has `n`
//! columns; column `i` is `(f(a_i), f'(a_i), ..., f^(m-1)(a_i))`.

use std::collections::HashSet;

use num_rational::Ratio;
use thiserror::Error;

use crate::field::{FieldError, Fp, PrimeField};
use crate::poly::Poly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("m >= 1 violated (m = {0})")]
    ZeroOrder(usize),
    #[error("char > k violated (p = {p}, k = {k})")]
    CharacteristicTooSmall { p: u64, k: usize },
    #[error("m <= k violated (m = {m}, k = {k})")]
    OrderExceedsDimension { m: usize, k: usize },
    #[error("k < nm violated (k = {k}, nm = {nm})")]
    DimensionTooLarge { k: usize, nm: usize },
    #[error("nm <= q violated (nm = {nm}, q = {p})")]
    BlockTooLong { nm: usize, p: u64 },
    #[error("expected {expected} evaluation points, got {got}")]
    PointCount { expected: usize, got: usize },
    #[error("evaluation points must be distinct (repeated {0})")]
    RepeatedPoint(u64),
    #[error("evaluation point {value} is not a residue modulo {p}")]
    PointOutOfRange { value: u64, p: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("message length {got} does not match k = {expected}")]
    MessageLength { expected: usize, got: usize },
    #[error("word shape {got_m}x{got_n} does not match {m}x{n}")]
    WordShape {
        m: usize,
        n: usize,
        got_m: usize,
        got_n: usize,
    },
    #[error("value {value} is not a residue modulo {p}")]
    NotCanonical { value: u64, p: u64 },
    #[error("field mismatch: expected p = {expected}, got p = {got}")]
    FieldMismatch { expected: u64, got: u64 },
}

/// Parameters of `Der_p^(m)[n, k]` together with its evaluation points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeParams {
    field: PrimeField,
    n: usize,
    m: usize,
    k: usize,
    points: Vec<Fp>,
}

impl CodeParams {
    /// Validates and builds a parameter set. With `points = None` the
    /// evaluation points are `1, 2, ..., n`.
    ///
    /// Constraints are checked in a fixed order and the first failure is
    /// reported: modulus, `m >= 1`, `p > k`, `m <= k`, `k < nm`, `nm <= p`,
    /// then the evaluation points.
    pub fn new(
        p: u64,
        n: usize,
        m: usize,
        k: usize,
        points: Option<&[u64]>,
    ) -> Result<Self, ParamError> {
        let field = PrimeField::new(p)?;
        if m == 0 {
            return Err(ParamError::ZeroOrder(m));
        }
        if (k as u128) >= p as u128 {
            return Err(ParamError::CharacteristicTooSmall { p, k });
        }
        if m > k {
            return Err(ParamError::OrderExceedsDimension { m, k });
        }
        let nm = n.saturating_mul(m);
        if k >= nm {
            return Err(ParamError::DimensionTooLarge { k, nm });
        }
        if nm as u128 > p as u128 {
            return Err(ParamError::BlockTooLong { nm, p });
        }
        let raw: Vec<u64> = match points {
            Some(pts) => pts.to_vec(),
            None => (1..=n as u64).collect(),
        };
        if raw.len() != n {
            return Err(ParamError::PointCount {
                expected: n,
                got: raw.len(),
            });
        }
        let mut seen = HashSet::with_capacity(n);
        let mut pts = Vec::with_capacity(n);
        for &v in &raw {
            let e = field
                .canonical(v)
                .map_err(|_| ParamError::PointOutOfRange { value: v, p })?;
            if !seen.insert(v) {
                return Err(ParamError::RepeatedPoint(v));
            }
            pts.push(e);
        }
        Ok(Self {
            field,
            n,
            m,
            k,
            points: pts,
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn p(&self) -> u64 {
        self.field.modulus()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn points(&self) -> &[Fp] {
        &self.points
    }

    /// Rate `k / (nm)`, reduced.
    pub fn rate(&self) -> Ratio<u64> {
        Ratio::new(self.k as u64, (self.n * self.m) as u64)
    }

    /// Minimum distance `n - floor((k-1)/m)`.
    pub fn distance(&self) -> usize {
        self.n - (self.k - 1) / self.m
    }

    pub fn report(&self) -> ParamsReport {
        ParamsReport {
            rate: self.rate(),
            distance: self.distance(),
        }
    }

    pub fn encode(&self, msg: &Message) -> Result<Word, CodeError> {
        self.check_message(msg)?;
        let f = msg.to_poly();
        let columns = self
            .points
            .iter()
            .map(|&a| f.eval_derivs(a, self.m))
            .collect();
        Ok(Word {
            field: self.field,
            m: self.m,
            columns,
        })
    }

    /// Encodes any polynomial, without the `deg < k` restriction.
    pub fn encode_poly(&self, f: &Poly) -> Word {
        Word {
            field: self.field,
            m: self.m,
            columns: self
                .points
                .iter()
                .map(|&a| f.eval_derivs(a, self.m))
                .collect(),
        }
    }

    pub fn check_message(&self, msg: &Message) -> Result<(), CodeError> {
        if msg.field != self.field {
            return Err(CodeError::FieldMismatch {
                expected: self.p(),
                got: msg.field.modulus(),
            });
        }
        if msg.coeffs.len() != self.k {
            return Err(CodeError::MessageLength {
                expected: self.k,
                got: msg.coeffs.len(),
            });
        }
        Ok(())
    }

    pub fn check_word(&self, w: &Word) -> Result<(), CodeError> {
        if w.field != self.field {
            return Err(CodeError::FieldMismatch {
                expected: self.p(),
                got: w.field.modulus(),
            });
        }
        if w.m != self.m || w.columns.len() != self.n {
            return Err(CodeError::WordShape {
                m: self.m,
                n: self.n,
                got_m: w.m,
                got_n: w.columns.len(),
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamsReport {
    pub rate: Ratio<u64>,
    pub distance: usize,
}

/// The `k` coefficients `f_0 .. f_{k-1}` of a message polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Message {
    field: PrimeField,
    coeffs: Vec<Fp>,
}

impl Message {
    pub fn new(field: PrimeField, coeffs: Vec<Fp>) -> Self {
        Self { field, coeffs }
    }

    /// Rejects non-canonical residues.
    pub fn from_u64(field: PrimeField, coeffs: &[u64]) -> Result<Self, CodeError> {
        let coeffs = coeffs
            .iter()
            .map(|&v| {
                field.canonical(v).map_err(|_| CodeError::NotCanonical {
                    value: v,
                    p: field.modulus(),
                })
            })
            .collect::<Result<_, _>>()?;
        Ok(Self { field, coeffs })
    }

    /// Pads or truncates `f` to `k` coefficients. Panics if `deg f >= k`.
    pub fn from_poly(f: &Poly, k: usize) -> Self {
        Self {
            field: f.field(),
            coeffs: f.to_padded(k),
        }
    }

    pub fn zero(field: PrimeField, k: usize) -> Self {
        Self {
            field,
            coeffs: vec![field.zero(); k],
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn coeffs(&self) -> &[Fp] {
        &self.coeffs
    }

    pub fn values(&self) -> Vec<u64> {
        self.coeffs.iter().map(|c| c.value()).collect()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn to_poly(&self) -> Poly {
        Poly::new(self.field, self.coeffs.clone())
    }
}

/// A (possibly corrupted) received word: `n` columns of `m` symbols.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    field: PrimeField,
    m: usize,
    columns: Vec<Vec<Fp>>,
}

impl Word {
    /// Every column must have length `m`.
    pub fn new(field: PrimeField, m: usize, columns: Vec<Vec<Fp>>) -> Result<Self, CodeError> {
        if let Some(bad) = columns.iter().find(|c| c.len() != m) {
            return Err(CodeError::WordShape {
                m,
                n: columns.len(),
                got_m: bad.len(),
                got_n: columns.len(),
            });
        }
        Ok(Self { field, m, columns })
    }

    pub fn from_u64(field: PrimeField, m: usize, columns: &[Vec<u64>]) -> Result<Self, CodeError> {
        let cols = columns
            .iter()
            .map(|c| {
                c.iter()
                    .map(|&v| {
                        field.canonical(v).map_err(|_| CodeError::NotCanonical {
                            value: v,
                            p: field.modulus(),
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(field, m, cols)
    }

    pub fn zero(field: PrimeField, n: usize, m: usize) -> Self {
        Self {
            field,
            m,
            columns: vec![vec![field.zero(); m]; n],
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn n(&self) -> usize {
        self.columns.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Column `i`, zero-based.
    pub fn column(&self, i: usize) -> &[Fp] {
        &self.columns[i]
    }

    pub fn columns(&self) -> &[Vec<Fp>] {
        &self.columns
    }

    pub(crate) fn columns_mut(&mut self) -> &mut [Vec<Fp>] {
        &mut self.columns
    }

    /// Entrywise sum, for linearity checks.
    pub fn add(&self, other: &Word) -> Result<Word, CodeError> {
        self.check_shape(other)?;
        Ok(Word {
            field: self.field,
            m: self.m,
            columns: self
                .columns
                .iter()
                .zip(&other.columns)
                .map(|(a, b)| a.iter().zip(b).map(|(&x, &y)| x + y).collect())
                .collect(),
        })
    }

    /// Number of columns equal in all `m` entries.
    pub fn agreement(&self, other: &Word) -> Result<usize, CodeError> {
        self.check_shape(other)?;
        Ok(self
            .columns
            .iter()
            .zip(&other.columns)
            .filter(|(a, b)| a == b)
            .count())
    }

    fn check_shape(&self, other: &Word) -> Result<(), CodeError> {
        if self.field != other.field {
            return Err(CodeError::FieldMismatch {
                expected: self.field.modulus(),
                got: other.field.modulus(),
            });
        }
        if self.m != other.m || self.columns.len() != other.columns.len() {
            return Err(CodeError::WordShape {
                m: self.m,
                n: self.columns.len(),
                got_m: other.m,
                got_n: other.columns.len(),
            });
        }
        Ok(())
    }
}
