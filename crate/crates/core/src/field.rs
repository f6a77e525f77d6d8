//! Arithmetic in a prime field `F_p` with `2 < p < 2^61`.
//!
//! Elements carry their modulus so that polynomials, matrices and words can be
//! manipulated without threading a field handle through every call. Residues
//! are always canonical (`0 <= value < p`), so equality is integer equality.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use thiserror::Error;

/// Largest admissible modulus is strictly below this bound.
pub const MODULUS_BOUND: u64 = 1 << 61;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("modulus {0} out of range (need 2 < p < 2^61)")]
    ModulusOutOfRange(u64),
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("value {value} is not a residue modulo {p}")]
    NotCanonical { value: u64, p: u64 },
}

/// A prime field `F_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Builds the field, rejecting composite or out-of-range moduli.
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if p <= 2 || p >= MODULUS_BOUND {
            return Err(FieldError::ModulusOutOfRange(p));
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(Self { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn zero(&self) -> Fp {
        Fp {
            value: 0,
            p: self.p,
        }
    }

    pub fn one(&self) -> Fp {
        Fp {
            value: 1,
            p: self.p,
        }
    }

    /// Reduces an arbitrary integer into the field.
    pub fn elem(&self, value: u64) -> Fp {
        Fp {
            value: value % self.p,
            p: self.p,
        }
    }

    /// Reduces a signed integer into the field.
    pub fn elem_i64(&self, value: i64) -> Fp {
        let r = (value as i128).rem_euclid(self.p as i128);
        Fp {
            value: r as u64,
            p: self.p,
        }
    }

    /// Accepts `value` only if it is already a canonical residue.
    pub fn canonical(&self, value: u64) -> Result<Fp, FieldError> {
        if value < self.p {
            Ok(Fp { value, p: self.p })
        } else {
            Err(FieldError::NotCanonical { value, p: self.p })
        }
    }

    /// `n! mod p`.
    pub fn factorial(&self, n: u64) -> Fp {
        (1..=n).fold(self.one(), |acc, i| acc * self.elem(i))
    }

    /// Falling factorial `n (n-1) ... (n-r+1) mod p`, i.e. `n!/(n-r)!`.
    pub fn falling(&self, n: u64, r: u64) -> Fp {
        debug_assert!(r <= n);
        (n - r + 1..=n).fold(self.one(), |acc, i| acc * self.elem(i))
    }

    /// Binomial coefficient `C(n, r) mod p` by Pascal's rule (exact for any `n`).
    pub fn binomial(&self, n: u64, r: u64) -> Fp {
        if r > n {
            return self.zero();
        }
        let r = r.min(n - r) as usize;
        let mut row = vec![self.zero(); r + 1];
        row[0] = self.one();
        for i in 1..=n as usize {
            for j in (1..=r.min(i)).rev() {
                let prev = row[j - 1];
                row[j] += prev;
            }
        }
        row[r]
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}

/// An element of a [`PrimeField`].
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u64,
    p: u64,
}

impl Fp {
    pub fn value(self) -> u64 {
        self.value
    }

    pub fn field(self) -> PrimeField {
        PrimeField { p: self.p }
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    pub fn inv(self) -> Result<Fp, FieldError> {
        if self.value == 0 {
            return Err(FieldError::DivisionByZero);
        }
        let (mut r0, mut r1) = (self.p as i128, self.value as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Ok(Fp {
            value: t0.rem_euclid(self.p as i128) as u64,
            p: self.p,
        })
    }

    /// `self^e` by square-and-multiply; `0^0 = 1`.
    pub fn pow(self, mut e: u64) -> Fp {
        let mut base = self;
        let mut acc = Fp {
            value: 1,
            p: self.p,
        };
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base *= base;
            e >>= 1;
        }
        acc
    }

    #[inline]
    fn check(self, other: Fp) {
        debug_assert_eq!(self.p, other.p, "mixing elements of different fields");
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for Fp {
    type Output = Fp;
    #[inline]
    fn add(self, rhs: Fp) -> Fp {
        self.check(rhs);
        // p < 2^61, so the sum cannot overflow.
        let s = self.value + rhs.value;
        Fp {
            value: if s >= self.p { s - self.p } else { s },
            p: self.p,
        }
    }
}

impl Sub for Fp {
    type Output = Fp;
    #[inline]
    fn sub(self, rhs: Fp) -> Fp {
        self.check(rhs);
        let value = if self.value >= rhs.value {
            self.value - rhs.value
        } else {
            self.value + self.p - rhs.value
        };
        Fp { value, p: self.p }
    }
}

impl Mul for Fp {
    type Output = Fp;
    #[inline]
    fn mul(self, rhs: Fp) -> Fp {
        self.check(rhs);
        let wide = self.value as u128 * rhs.value as u128;
        Fp {
            value: (wide % self.p as u128) as u64,
            p: self.p,
        }
    }
}

impl Neg for Fp {
    type Output = Fp;
    #[inline]
    fn neg(self) -> Fp {
        Fp {
            value: if self.value == 0 {
                0
            } else {
                self.p - self.value
            },
            p: self.p,
        }
    }
}

impl AddAssign for Fp {
    fn add_assign(&mut self, rhs: Fp) {
        *self = *self + rhs;
    }
}

impl SubAssign for Fp {
    fn sub_assign(&mut self, rhs: Fp) {
        *self = *self - rhs;
    }
}

impl MulAssign for Fp {
    fn mul_assign(&mut self, rhs: Fp) {
        *self = *self * rhs;
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    (a as u128 * b as u128 % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin, exact for every `u64`.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &w in &WITNESSES {
        if n.is_multiple_of(w) {
            return n == w;
        }
    }
    let mut d = n - 1;
    let mut r = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        r += 1;
    }
    'outer: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}
