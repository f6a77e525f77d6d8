//! Decoding-radius tables: per-`s` degree budgets, agreement thresholds and
//! the asymptotic error fraction.

use std::fmt::Write as _;

use num_rational::Ratio;

use crate::code::CodeParams;
use crate::decoder::{choose_d, threshold};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeasibleRow {
    pub d: usize,
    pub threshold: usize,
    /// `n - threshold`, or `None` when the threshold exceeds `n`.
    pub max_errors: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadiusRow {
    pub s: usize,
    /// `None` when the degree budget is negative for this `s`.
    pub feasible: Option<FeasibleRow>,
    /// `s/(s+1) * (n - k/(m-s+1))`.
    pub radius: Ratio<i128>,
}

/// `s/(s+1) * (n - k/(m-s+1))`, the number of column errors covered by the
/// list decoder's guarantee.
pub fn list_radius(n: usize, m: usize, k: usize, s: usize) -> Ratio<i128> {
    let (n, m, k, s) = (n as i128, m as i128, k as i128, s as i128);
    Ratio::new(s, s + 1) * (Ratio::from_integer(n) - Ratio::new(k, m - s + 1))
}

/// Error fraction `s/(s+1) * (1 - mR/(m-s+1))` for a code of rate `rate`,
/// without constructing one.
pub fn normalized_radius(rate: Ratio<i128>, s: usize, m: usize) -> Ratio<i128> {
    assert!(s >= 1 && s <= m, "need 1 <= s <= m");
    let (s, m) = (s as i128, m as i128);
    Ratio::new(s, s + 1) * (Ratio::from_integer(1) - rate * Ratio::new(m, m - s + 1))
}

/// One row per `s = 1..=m`; infeasible values of `s` are kept and marked.
pub fn radius_table(params: &CodeParams) -> Vec<RadiusRow> {
    let (n, m, k) = (params.n(), params.m(), params.k());
    (1..=m)
        .map(|s| {
            let feasible = choose_d(n, m, s, k).ok().map(|d| {
                let t = threshold(d, k, m, s);
                FeasibleRow {
                    d,
                    threshold: t,
                    max_errors: n.checked_sub(t),
                }
            });
            RadiusRow {
                s,
                feasible,
                radius: list_radius(n, m, k, s),
            }
        })
        .collect()
}

pub fn render_table(rows: &[RadiusRow]) -> String {
    let mut out = String::from("s d threshold max_errors radius radius_approx\n");
    for r in rows {
        let approx = *r.radius.numer() as f64 / *r.radius.denom() as f64;
        match &r.feasible {
            Some(f) => {
                let me = f.max_errors.map_or("-".to_string(), |e| e.to_string());
                writeln!(
                    out,
                    "{} {} {} {} {} {:.4}",
                    r.s, f.d, f.threshold, me, r.radius, approx
                )
                .unwrap();
            }
            None => {
                writeln!(out, "{} infeasible - - {} {:.4}", r.s, r.radius, approx).unwrap();
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_row() {
        let p = CodeParams::new(41, 10, 4, 8, None).unwrap();
        let rows = radius_table(&p);
        assert_eq!(rows.len(), 4);
        let r = &rows[1];
        assert_eq!(r.s, 2);
        assert_eq!(
            r.feasible,
            Some(FeasibleRow {
                d: 7,
                threshold: 5,
                max_errors: Some(5)
            })
        );
        assert_eq!(r.radius, Ratio::new(44, 9));
        assert_eq!(rows[0].feasible.as_ref().unwrap().threshold, 6);
    }

    #[test]
    fn infeasible_rows_are_kept() {
        let p = CodeParams::new(13, 4, 3, 11, None).unwrap();
        let rows = radius_table(&p);
        assert_eq!(rows.len(), 3);
        assert!(rows[2].feasible.is_none());
        assert!(render_table(&rows).contains("3 infeasible"));
    }

    #[test]
    fn reed_solomon_specialization() {
        let p = CodeParams::new(101, 30, 1, 10, None).unwrap();
        let row = &radius_table(&p)[0];
        let f = row.feasible.as_ref().unwrap();
        assert_eq!(f.d, 10);
        assert_eq!(f.max_errors, Some(10));
        assert_eq!(row.radius, Ratio::new(10, 1));
    }

    #[test]
    fn high_order_regime() {
        let r = normalized_radius(Ratio::new(1, 4), 10, 100);
        assert_eq!(r, Ratio::new(660, 1001));
        assert!(r >= Ratio::new(3, 4) - Ratio::new(1, 10));
    }
}
