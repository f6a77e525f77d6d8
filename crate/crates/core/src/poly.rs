//! Dense univariate polynomials over a prime field.

use std::fmt;

use crate::field::{Fp, PrimeField};

/// A polynomial stored low-degree first. The coefficient vector never has a
/// trailing zero, so the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: PrimeField,
    coeffs: Vec<Fp>,
}

impl Poly {
    pub fn new(field: PrimeField, coeffs: Vec<Fp>) -> Self {
        let mut p = Self { field, coeffs };
        p.normalize();
        p
    }

    pub fn from_u64(field: PrimeField, coeffs: &[u64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.elem(c)).collect())
    }

    pub fn zero(field: PrimeField) -> Self {
        Self {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(c: Fp) -> Self {
        Self::new(c.field(), vec![c])
    }

    /// `c X^e`.
    pub fn monomial(c: Fp, e: usize) -> Self {
        let mut coeffs = vec![c.field().zero(); e + 1];
        coeffs[e] = c;
        Self::new(c.field(), coeffs)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn coeffs(&self) -> &[Fp] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Fp> {
        self.coeffs
    }

    /// Coefficient of `X^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> Fp {
        self.coeffs.get(i).copied().unwrap_or(self.field.zero())
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficients padded (or checked) to exactly `len` entries.
    ///
    /// Panics if the polynomial does not fit.
    pub fn to_padded(&self, len: usize) -> Vec<Fp> {
        assert!(self.coeffs.len() <= len, "degree exceeds requested length");
        let mut v = self.coeffs.clone();
        v.resize(len, self.field.zero());
        v
    }

    /// Horner evaluation.
    pub fn eval(&self, x: Fp) -> Fp {
        self.coeffs
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, &c| acc * x + c)
    }

    /// Formal derivative `sum i f_i X^(i-1)`.
    pub fn derivative(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| self.field.elem(i as u64) * c)
            .collect();
        Poly::new(self.field, coeffs)
    }

    /// The `j`-fold formal derivative.
    pub fn nth_derivative(&self, j: usize) -> Poly {
        if j >= self.coeffs.len() {
            return Poly::zero(self.field);
        }
        let coeffs = (j..self.coeffs.len())
            .map(|i| self.field.falling(i as u64, j as u64) * self.coeffs[i])
            .collect();
        Poly::new(self.field, coeffs)
    }

    /// `g(X) = f(X + alpha)`.
    pub fn taylor_shift(&self, alpha: Fp) -> Poly {
        let mut c = self.coeffs.clone();
        let n = c.len();
        // Repeated synthetic division by (X - alpha).
        for i in 0..n {
            for j in (i..n - 1).rev() {
                let next = c[j + 1];
                c[j] += alpha * next;
            }
        }
        Poly::new(self.field, c)
    }

    /// The first `m` coefficients of `f(X + x)`, by `m` rounds of synthetic
    /// division by `X - x`.
    pub fn taylor_coeffs(&self, x: Fp, m: usize) -> Vec<Fp> {
        let mut c = self.coeffs.clone();
        let mut out = Vec::with_capacity(m);
        for _ in 0..m {
            if c.is_empty() {
                out.push(self.field.zero());
                continue;
            }
            // c <- c div (X - x), remainder pushed to out
            let mut carry = self.field.zero();
            for v in c.iter_mut().rev() {
                let cur = *v + carry * x;
                *v = carry;
                carry = cur;
            }
            c.pop();
            out.push(carry);
        }
        out
    }

    /// `(f(x), f'(x), ..., f^(m-1)(x))`: Taylor-shift to `x`, then scale the
    /// `j`-th coefficient by `j!`.
    pub fn eval_derivs(&self, x: Fp, m: usize) -> Vec<Fp> {
        let mut fact = self.field.one();
        self.taylor_coeffs(x, m)
            .into_iter()
            .enumerate()
            .map(|(j, c)| {
                if j > 0 {
                    fact *= self.field.elem(j as u64);
                }
                c * fact
            })
            .collect()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        Poly::new(
            self.field,
            (0..len).map(|i| self.coeff(i) + other.coeff(i)).collect(),
        )
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        Poly::new(
            self.field,
            (0..len).map(|i| self.coeff(i) - other.coeff(i)).collect(),
        )
    }

    pub fn neg(&self) -> Poly {
        Poly::new(self.field, self.coeffs.iter().map(|&c| -c).collect())
    }

    pub fn scale(&self, c: Fp) -> Poly {
        Poly::new(self.field, self.coeffs.iter().map(|&a| a * c).collect())
    }

    /// Schoolbook product.
    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(self.field, out)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}X")?,
                _ => write!(f, "{c}X^{i}")?,
            }
        }
        Ok(())
    }
}
