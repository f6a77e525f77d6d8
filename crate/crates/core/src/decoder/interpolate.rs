use crate::code::{CodeParams, Word};
use crate::field::{Fp, PrimeField};
use crate::linalg::Matrix;
use crate::poly::Poly;

use super::dop::{LinearForm, YLinear};
use super::{DecodeError, DecoderConfig};

/// `Q = A_0 + A_1 Y_1 + ... + A_s Y_s` together with its degree budget `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterpolationPoly {
    a: Vec<Poly>,
    d: usize,
}

impl InterpolationPoly {
    /// Wraps `A_0 .. A_s`. Panics if every `A_j` is zero.
    pub fn new(a: Vec<Poly>, d: usize) -> Self {
        assert!(a.len() >= 2, "need at least A_0 and A_1");
        assert!(a.iter().any(|p| !p.is_zero()), "Q must be nonzero");
        Self { a, d }
    }

    pub fn s(&self) -> usize {
        self.a.len() - 1
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn field(&self) -> PrimeField {
        self.a[0].field()
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.a
    }

    pub fn a(&self, j: usize) -> &Poly {
        &self.a[j]
    }

    /// `Q` as a polynomial in `Y_1 .. Y_m`.
    pub fn to_ylinear(&self, m: usize) -> YLinear<Fp> {
        YLinear::from_polys(self.field(), m, &self.a)
    }

    /// `Q(X, f, f', ..., f^(s-1))`.
    pub fn substitute(&self, f: &Poly) -> Poly {
        let mut acc = self.a[0].clone();
        let mut deriv = f.clone();
        for aj in &self.a[1..] {
            acc = acc.add(&aj.mul(&deriv));
            deriv = deriv.derivative();
        }
        acc
    }

    /// Re-checks every interpolation condition against `y`.
    pub fn satisfies_conditions(&self, y: &Word, params: &CodeParams) -> bool {
        let q = self.to_ylinear(params.m());
        let s = self.s();
        (0..=params.m() - s).all(|kappa| {
            let dq = q.apply_d_times(kappa);
            params
                .points()
                .iter()
                .zip(y.columns())
                .all(|(&a, col)| dq.evaluate(a, col).is_zero())
        })
    }
}

/// Column layout of the unknowns: `A_0` has `d + k` coefficients, then each
/// `A_j` (`j >= 1`) has `d + 1`.
fn unknown_offset(j: usize, d: usize, k: usize) -> usize {
    if j == 0 {
        0
    } else {
        d + k + (j - 1) * (d + 1)
    }
}

/// The homogeneous system whose kernel vectors are interpolation polynomials:
/// `n (m - s + 1)` rows (point-major, then `D`-power) and
/// `(d + 1)(s + 1) + k - 1` columns. Returns the matrix and `d`.
pub fn interpolation_system(
    y: &Word,
    params: &CodeParams,
    s: usize,
) -> Result<(Matrix, usize), DecodeError> {
    params.check_word(y)?;
    let (n, m, k) = (params.n(), params.m(), params.k());
    let d = super::choose_d(n, m, s, k)?;
    let field = params.field();
    let width = unknown_offset(s + 1, d, k);

    let mut q = YLinear::<LinearForm>::zero(field, m);
    for j in 0..=s {
        let len = if j == 0 { d + k } else { d + 1 };
        let base = unknown_offset(j, d, k);
        for e in 0..len {
            q.add_term(j, e, &LinearForm::unknown(base + e, field.one()));
        }
    }

    // D^kappa Q does not depend on the point, so build each power once.
    let mut powers = Vec::with_capacity(m - s + 1);
    powers.push(q);
    for _ in 1..=m - s {
        let next = powers.last().expect("nonempty").apply_d();
        powers.push(next);
    }
    // Y indices reach at most s + (m - s) = m, so Y_{m+1} is never produced.
    assert!(
        powers.iter().all(|p| !p.wrapped()),
        "D wrapped Y_m to Y_1 during interpolation"
    );

    let mut rows = Vec::with_capacity(n * (m - s + 1));
    for (&a, col) in params.points().iter().zip(y.columns()) {
        for dq in &powers {
            rows.push(dq.evaluate_dense(a, col, width));
        }
    }
    Ok((Matrix::from_rows(field, width, rows), d))
}

/// Finds the interpolation polynomial: the deterministic kernel vector of
/// [`interpolation_system`], split into `A_0 .. A_s`.
pub fn interpolate(
    y: &Word,
    params: &CodeParams,
    cfg: &DecoderConfig,
) -> Result<InterpolationPoly, DecodeError> {
    let s = cfg.s;
    let (system, d) = interpolation_system(y, params, s)?;
    let v = system
        .nullspace_vector()
        .expect("more unknowns than equations, so the kernel is nontrivial");
    let k = params.k();
    let a = (0..=s)
        .map(|j| {
            let lo = unknown_offset(j, d, k);
            let hi = unknown_offset(j + 1, d, k);
            Poly::new(params.field(), v[lo..hi].to_vec())
        })
        .collect();
    Ok(InterpolationPoly::new(a, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::Message;

    fn params() -> CodeParams {
        CodeParams::new(41, 10, 4, 8, None).unwrap()
    }

    #[test]
    fn system_dimensions() {
        let p = params();
        let y = Word::zero(p.field(), 10, 4);
        let (sys, d) = interpolation_system(&y, &p, 2).unwrap();
        assert_eq!(d, 7);
        assert_eq!((sys.rows(), sys.cols()), (30, 31));
        let (sys, d) = interpolation_system(&y, &p, 1).unwrap();
        assert_eq!(d, 16);
        assert_eq!((sys.rows(), sys.cols()), (40, 41));
    }

    #[test]
    fn zero_word_forces_zero_a0() {
        let p = params();
        let y = p.encode(&Message::zero(p.field(), 8)).unwrap();
        let q = interpolate(&y, &p, &DecoderConfig::new(2)).unwrap();
        assert!(q.a(0).is_zero());
        assert!(q.satisfies_conditions(&y, &p));
    }

    #[test]
    fn degree_bounds_hold() {
        let p = params();
        let f = p.field();
        let msg = Message::from_u64(f, &[3, 1, 4, 1, 5, 9, 2, 6]).unwrap();
        let mut y = p.encode(&msg).unwrap();
        y.columns_mut()[0][0] += f.one();
        y.columns_mut()[3][2] += f.one();
        for s in 1..=4 {
            let Ok(q) = interpolate(&y, &p, &DecoderConfig::new(s)) else {
                continue;
            };
            let d = q.d();
            assert!(q.a(0).degree().is_none_or(|g| g <= d + 7));
            for j in 1..=s {
                assert!(q.a(j).degree().is_none_or(|g| g <= d));
            }
            assert!(q.satisfies_conditions(&y, &p));
        }
    }

    #[test]
    fn rejects_mismatched_word() {
        let p = params();
        let y = Word::zero(p.field(), 9, 4);
        assert!(matches!(
            interpolate(&y, &p, &DecoderConfig::new(2)),
            Err(DecodeError::Code(_))
        ));
    }
}
