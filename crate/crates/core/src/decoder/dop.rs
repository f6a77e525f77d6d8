//! Polynomials of the form `B_0(X) + B_1(X) Y_1 + ... + B_m(X) Y_m` and the
//! derivation `D` acting on them.
//!
//! `D` differentiates the `X`-part and sends `p Y_i` to `p' Y_i + p Y_{i+1}`,
//! with `Y_{m+1}` identified with `Y_1`. Substituting `Y_j = f^(j-1)` turns
//! `D` into `d/dX` (product rule), which is what makes the interpolation
//! conditions useful.
//!
//! The coefficients are generic: concrete field elements for testing and
//! checking, or [`LinearForm`]s over the unknown coefficients of an
//! interpolation polynomial when building the linear system.

use crate::field::{Fp, PrimeField};
use crate::poly::Poly;

/// Coefficients that `D` can act on: an `F_p`-module.
pub trait Coefficient: Clone {
    fn zero(field: PrimeField) -> Self;
    fn is_zero(&self) -> bool;
    fn add_assign(&mut self, other: &Self);
    fn scale(&self, c: Fp) -> Self;
}

impl Coefficient for Fp {
    fn zero(field: PrimeField) -> Self {
        field.zero()
    }

    fn is_zero(&self) -> bool {
        Fp::is_zero(*self)
    }

    fn add_assign(&mut self, other: &Self) {
        *self += *other;
    }

    fn scale(&self, c: Fp) -> Self {
        *self * c
    }
}

/// A sparse linear combination `sum c_u * x_u` of unknowns, sorted by index.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LinearForm(Vec<(usize, Fp)>);

impl LinearForm {
    /// The single unknown `x_index`.
    pub fn unknown(index: usize, one: Fp) -> Self {
        LinearForm(vec![(index, one)])
    }

    pub fn terms(&self) -> &[(usize, Fp)] {
        &self.0
    }

    /// Adds `scale * self` into a dense row.
    pub fn accumulate_into(&self, row: &mut [Fp], scale: Fp) {
        for &(u, c) in &self.0 {
            row[u] += c * scale;
        }
    }
}

impl Coefficient for LinearForm {
    fn zero(_field: PrimeField) -> Self {
        LinearForm(Vec::new())
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn add_assign(&mut self, other: &Self) {
        if other.0.is_empty() {
            return;
        }
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.0, &other.0);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i]);
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                out.push(b[j]);
                j += 1;
            } else {
                let s = a[i].1 + b[j].1;
                if !s.is_zero() {
                    out.push((a[i].0, s));
                }
                i += 1;
                j += 1;
            }
        }
        self.0 = out;
    }

    fn scale(&self, c: Fp) -> Self {
        if c.is_zero() {
            return LinearForm(Vec::new());
        }
        LinearForm(self.0.iter().map(|&(u, v)| (u, v * c)).collect())
    }
}

/// `B_0(X) + sum_{j=1}^{m} B_j(X) Y_j`, each `B_j` stored as a dense
/// coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YLinear<C> {
    field: PrimeField,
    parts: Vec<Vec<C>>,
    wrapped: bool,
}

impl<C: Coefficient> YLinear<C> {
    /// The zero polynomial in `Y_1 .. Y_m`.
    pub fn zero(field: PrimeField, m: usize) -> Self {
        Self {
            field,
            parts: vec![Vec::new(); m + 1],
            wrapped: false,
        }
    }

    pub fn num_vars(&self) -> usize {
        self.parts.len() - 1
    }

    /// Coefficients of `B_j` (`j = 0` is the `X`-only part).
    pub fn part(&self, j: usize) -> &[C] {
        &self.parts[j]
    }

    /// True once some application of `D` moved a term from `Y_m` to `Y_1`.
    pub fn wrapped(&self) -> bool {
        self.wrapped
    }

    /// Adds `c X^e` to `B_j`.
    pub fn add_term(&mut self, j: usize, e: usize, c: &C) {
        add_at(&mut self.parts[j], e, c, self.field);
    }

    /// One application of `D`.
    pub fn apply_d(&self) -> Self {
        let m = self.num_vars();
        let mut out = Self::zero(self.field, m);
        out.wrapped = self.wrapped;
        for (j, part) in self.parts.iter().enumerate() {
            for (e, c) in part.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                if e > 0 {
                    add_at(
                        &mut out.parts[j],
                        e - 1,
                        &c.scale(self.field.elem(e as u64)),
                        self.field,
                    );
                }
                if j > 0 {
                    let next = if j == m {
                        out.wrapped = true;
                        1
                    } else {
                        j + 1
                    };
                    add_at(&mut out.parts[next], e, c, self.field);
                }
            }
        }
        out
    }

    /// `D^times`.
    pub fn apply_d_times(&self, times: usize) -> Self {
        (0..times).fold(self.clone(), |q, _| q.apply_d())
    }

    /// Substitutes `X = x` and `Y_j = ys[j-1]`. Parts beyond `ys.len()` must be zero.
    pub fn evaluate(&self, x: Fp, ys: &[Fp]) -> C {
        let mut acc = C::zero(self.field);
        for (j, part) in self.parts.iter().enumerate() {
            if part.iter().all(|c| c.is_zero()) {
                continue;
            }
            let y = if j == 0 { self.field.one() } else { ys[j - 1] };
            let mut xe = y;
            for c in part {
                acc.add_assign(&c.scale(xe));
                xe *= x;
            }
        }
        acc
    }
}

impl YLinear<LinearForm> {
    /// Evaluates into a dense row of width `width` over the unknowns.
    pub fn evaluate_dense(&self, x: Fp, ys: &[Fp], width: usize) -> Vec<Fp> {
        let mut row = vec![self.field.zero(); width];
        for (j, part) in self.parts.iter().enumerate() {
            if part.is_empty() {
                continue;
            }
            let y = if j == 0 { self.field.one() } else { ys[j - 1] };
            let mut xe = y;
            for form in part {
                form.accumulate_into(&mut row, xe);
                xe *= x;
            }
        }
        row
    }
}

impl YLinear<Fp> {
    /// Builds `parts[0] + sum parts[j] Y_j` over `m` variables.
    pub fn from_polys(field: PrimeField, m: usize, parts: &[Poly]) -> Self {
        assert!(parts.len() <= m + 1, "more parts than variables");
        let mut q = Self::zero(field, m);
        for (j, p) in parts.iter().enumerate() {
            q.parts[j] = p.coeffs().to_vec();
        }
        q
    }

    pub fn to_polys(&self) -> Vec<Poly> {
        self.parts
            .iter()
            .map(|c| Poly::new(self.field, c.clone()))
            .collect()
    }
}

fn add_at<C: Coefficient>(v: &mut Vec<C>, e: usize, c: &C, field: PrimeField) {
    if v.len() <= e {
        v.resize(e + 1, C::zero(field));
    }
    v[e].add_assign(c);
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fld() -> PrimeField {
        PrimeField::new(101).unwrap()
    }

    #[test]
    fn d_of_x_part_is_derivative() {
        let f = fld();
        let p = Poly::from_u64(f, &[3, 1, 4, 1, 5]);
        let q = YLinear::from_polys(f, 3, std::slice::from_ref(&p));
        let dq = q.apply_d().to_polys();
        assert_eq!(dq[0], p.derivative());
        assert!(dq[1..].iter().all(|b| b.is_zero()));
    }

    #[test]
    fn d_of_y_term_follows_product_rule() {
        let f = fld();
        let p = Poly::from_u64(f, &[2, 7, 1]);
        let zero = Poly::zero(f);
        let q = YLinear::from_polys(f, 4, &[zero.clone(), zero.clone(), p.clone()]);
        let dq = q.apply_d().to_polys();
        assert!(dq[0].is_zero() && dq[1].is_zero());
        assert_eq!(dq[2], p.derivative());
        assert_eq!(dq[3], p);
        assert!(!q.apply_d().wrapped());
    }

    #[test]
    fn d_squared_closed_form() {
        let f = fld();
        let p = Poly::from_u64(f, &[5, 0, 3, 9]);
        let q = YLinear::from_polys(f, 3, &[Poly::zero(f), p.clone()]);
        let d2 = q.apply_d_times(2).to_polys();
        assert!(d2[0].is_zero());
        assert_eq!(d2[1], p.nth_derivative(2));
        assert_eq!(d2[2], p.derivative().scale(f.elem(2)));
        assert_eq!(d2[3], p);
    }

    #[test]
    fn wraparound_is_flagged() {
        let f = fld();
        let q = YLinear::from_polys(
            f,
            2,
            &[Poly::zero(f), Poly::zero(f), Poly::constant(f.one())],
        );
        let dq = q.apply_d();
        assert!(dq.wrapped());
        assert_eq!(dq.to_polys()[1], Poly::constant(f.one()));
    }

    #[test]
    fn substitution_turns_d_into_derivative() {
        let f = fld();
        let a0 = Poly::from_u64(f, &[1, 2, 3]);
        let a1 = Poly::from_u64(f, &[4, 0, 6]);
        let a2 = Poly::from_u64(f, &[7, 8]);
        let g = Poly::from_u64(f, &[9, 1, 1, 2, 3]);
        let q = YLinear::from_polys(f, 4, &[a0.clone(), a1.clone(), a2.clone()]);
        let qhat = a0.add(&a1.mul(&g)).add(&a2.mul(&g.derivative()));
        for kappa in 0..=2 {
            let dq = q.apply_d_times(kappa);
            for x in 0..10 {
                let x = f.elem(x);
                let ys = g.eval_derivs(x, 4);
                assert_eq!(dq.evaluate(x, &ys), qhat.nth_derivative(kappa).eval(x));
            }
        }
    }

    #[test]
    fn symbolic_and_concrete_agree() {
        let f = fld();
        let a = Poly::from_u64(f, &[3, 1, 4]);
        let b = Poly::from_u64(f, &[1, 5]);
        // unknowns: coefficients of B_0 (3 of them) then B_1 (2 of them)
        let mut sym = YLinear::<LinearForm>::zero(f, 3);
        for e in 0..3 {
            sym.add_term(0, e, &LinearForm::unknown(e, f.one()));
        }
        for e in 0..2 {
            sym.add_term(1, e, &LinearForm::unknown(3 + e, f.one()));
        }
        let values: Vec<Fp> = a.coeffs().iter().chain(b.coeffs()).copied().collect();
        let conc = YLinear::from_polys(f, 3, &[a, b]);
        let ys = [f.elem(2), f.elem(9), f.elem(4)];
        for kappa in 0..3 {
            let row = sym.apply_d_times(kappa).evaluate_dense(f.elem(7), &ys, 5);
            let lhs = row
                .iter()
                .zip(&values)
                .fold(f.zero(), |acc, (&r, &v)| acc + r * v);
            assert_eq!(lhs, conc.apply_d_times(kappa).evaluate(f.elem(7), &ys));
        }
    }

    proptest! {
        #[test]
        fn linear_form_addition_is_pointwise(
            a in prop::collection::btree_map(0usize..20, 1u64..101, 0..10),
            b in prop::collection::btree_map(0usize..20, 1u64..101, 0..10),
        ) {
            let f = fld();
            let mk = |m: &std::collections::BTreeMap<usize, u64>| LinearForm(m.iter().map(|(&k, &v)| (k, f.elem(v))).collect());
            let mut s = mk(&a);
            s.add_assign(&mk(&b));
            let mut dense = vec![f.zero(); 20];
            s.accumulate_into(&mut dense, f.one());
            for (i, &got) in dense.iter().enumerate() {
                let want = f.elem(a.get(&i).copied().unwrap_or(0) + b.get(&i).copied().unwrap_or(0));
                prop_assert_eq!(got, want);
            }
            prop_assert!(s.terms().iter().all(|(_, c)| !c.is_zero()));
            prop_assert!(s.terms().windows(2).all(|w| w[0].0 < w[1].0));
        }
    }
}
