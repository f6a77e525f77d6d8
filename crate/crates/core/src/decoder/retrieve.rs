use crate::code::CodeParams;
use crate::field::{Fp, PrimeField};
use crate::linalg::{AffineSpace, Matrix};
use crate::poly::Poly;

use super::interpolate::InterpolationPoly;

/// Output of the retrieval step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Retrieval {
    /// Solutions `(f_0, ..., f_{k-1})` of the retrieval equation.
    pub space: AffineSpace,
    /// Largest `j >= 1` with `A_j != 0`, or 0 if none.
    pub used_s: usize,
    /// The translation `alpha` with `A_{used_s}(alpha) != 0`.
    pub shift: Option<Fp>,
}

/// Largest index `j >= 1` with `A_j` nonzero.
pub(crate) fn effective_s(q: &InterpolationPoly) -> usize {
    (1..=q.s()).rev().find(|&j| !q.a(j).is_zero()).unwrap_or(0)
}

/// The retrieval equation `B_0 + sum_{j=1}^{s} B_j g^(j-1) = 0` as a linear
/// system `M g = rhs` over the `k` coefficients of `g`.
///
/// Row `i` is the coefficient of `X^i`; the entry for `g_e` collects
/// `e!/(e-j+1)! * b_{j, i-(e-j+1)}` over `j`.
pub(crate) fn retrieval_system(b: &[Poly], s: usize, k: usize) -> (Matrix, Vec<Fp>) {
    let field = b[0].field();
    let rows = std::iter::once(b[0].coeffs().len())
        .chain((1..=s).map(|j| b[j].coeffs().len() + k - 1))
        .max()
        .unwrap_or(0);
    let mut m = Matrix::zeros(field, rows, k);
    for e in 0..k {
        for (j, bj) in b.iter().enumerate().take(s.min(e + 1) + 1).skip(1) {
            let shift = e + 1 - j;
            let factor = field.falling(e as u64, j as u64 - 1);
            for (t, &c) in bj.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    m[(t + shift, e)] += factor * c;
                }
            }
        }
    }
    let rhs = (0..rows).map(|i| -b[0].coeff(i)).collect();
    (m, rhs)
}

/// First `alpha = 0, 1, 2, ...` where `poly` does not vanish.
pub(crate) fn first_nonroot(poly: &Poly) -> Fp {
    let field = poly.field();
    (0..field.modulus())
        .map(|a| field.elem(a))
        .find(|&a| !poly.eval(a).is_zero())
        .expect("nonzero polynomial of degree < p has a non-root")
}

/// `g(X) -> g(X - alpha)` on a length-`k` coefficient vector.
pub(crate) fn unshift(field: PrimeField, g: &[Fp], alpha: Fp) -> Vec<Fp> {
    Poly::new(field, g.to_vec())
        .taylor_shift(-alpha)
        .to_padded(g.len())
}

/// Solves the retrieval equation for every `deg f < k`.
///
/// Trailing zero `A_j` are dropped, the problem is translated so that the
/// leading retained `A_j` has a nonzero constant term, the full coefficient
/// system is solved, and the solution space is translated back.
pub fn retrieve_space(q: &InterpolationPoly, params: &CodeParams) -> Retrieval {
    let k = params.k();
    let field = params.field();
    let used_s = effective_s(q);
    if used_s == 0 {
        return Retrieval {
            space: AffineSpace::Empty { ambient: k },
            used_s,
            shift: None,
        };
    }
    let alpha = first_nonroot(q.a(used_s));
    let shifted: Vec<Poly> = q.coeffs()[..=used_s]
        .iter()
        .map(|a| a.taylor_shift(alpha))
        .collect();
    let (m, rhs) = retrieval_system(&shifted, used_s, k);
    let space = m.affine_solve(&rhs).map(|g| unshift(field, g, alpha));
    Retrieval {
        space,
        used_s,
        shift: Some(alpha),
    }
}
