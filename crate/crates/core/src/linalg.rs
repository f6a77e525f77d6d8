//! Dense exact linear algebra over `F_p`.
//!
//! Elimination is plain Gauss-Jordan. Pivots are taken as the first nonzero
//! entry, scanning top to bottom, in the leftmost column not yet resolved;
//! kernel vectors put a 1 on free variables in increasing column order. These
//! conventions make every output a deterministic function of the input.

use crate::field::{Fp, PrimeField};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<Fp>,
}

impl Matrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Self {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    /// Builds from row vectors; every row must have length `cols`.
    pub fn from_rows(field: PrimeField, cols: usize, rows: Vec<Vec<Fp>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged row");
            data.extend(r);
        }
        Self {
            field,
            rows: n,
            cols,
            data,
        }
    }

    pub fn from_u64(field: PrimeField, rows: &[&[u64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            field,
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&v| field.elem(v)).collect())
                .collect(),
        )
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[Fp] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [Fp] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[Fp]) -> Vec<Fp> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(self.field.zero(), |acc, (&a, &b)| acc + a * b)
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut prow = 0;
        for col in 0..self.cols {
            if prow == self.rows {
                break;
            }
            let Some(src) = (prow..self.rows).find(|&r| !self[(r, col)].is_zero()) else {
                continue;
            };
            self.swap_rows(prow, src);
            let inv = self[(prow, col)].inv().expect("pivot is nonzero");
            for v in self.row_mut(prow)[col..].iter_mut() {
                *v *= inv;
            }
            for r in 0..self.rows {
                if r == prow {
                    continue;
                }
                let factor = self[(r, col)];
                if factor.is_zero() {
                    continue;
                }
                let (pivot_row, target) = if r < prow {
                    let (lo, hi) = self.data.split_at_mut(prow * self.cols);
                    (
                        &hi[..self.cols],
                        &mut lo[r * self.cols..(r + 1) * self.cols],
                    )
                } else {
                    let (lo, hi) = self.data.split_at_mut(r * self.cols);
                    (
                        &lo[prow * self.cols..(prow + 1) * self.cols],
                        &mut hi[..self.cols],
                    )
                };
                for c in col..self.cols {
                    target[c] -= factor * pivot_row[c];
                }
            }
            pivots.push(col);
            prow += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// The kernel vector with the lowest-index free variable set to 1 and
    /// all other free variables 0, or `None` if the kernel is trivial.
    pub fn nullspace_vector(&self) -> Option<Vec<Fp>> {
        let (r, pivots) = self.rref();
        let free = first_free(&pivots, self.cols)?;
        Some(kernel_vector(&r, &pivots, free))
    }

    /// One kernel basis vector per free variable, in column order.
    pub fn kernel_basis(&self) -> Vec<Vec<Fp>> {
        let (r, pivots) = self.rref();
        free_columns(&pivots, self.cols)
            .map(|f| kernel_vector(&r, &pivots, f))
            .collect()
    }

    /// Full solution set of `self * x = b`.
    pub fn affine_solve(&self, b: &[Fp]) -> AffineSpace {
        assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
        let mut aug = Matrix::zeros(self.field, self.rows, self.cols + 1);
        for r in 0..self.rows {
            aug.row_mut(r)[..self.cols].copy_from_slice(self.row(r));
            aug[(r, self.cols)] = b[r];
        }
        let pivots = aug.rref_in_place();
        if pivots.last() == Some(&self.cols) {
            return AffineSpace::Empty { ambient: self.cols };
        }
        let mut offset = vec![self.field.zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            offset[pc] = aug[(row, self.cols)];
        }
        let basis = free_columns(&pivots, self.cols)
            .map(|f| {
                let mut v = vec![self.field.zero(); self.cols];
                v[f] = self.field.one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -aug[(row, f)];
                }
                v
            })
            .collect();
        AffineSpace::Coset { offset, basis }
    }
}

fn free_columns(pivots: &[usize], cols: usize) -> impl Iterator<Item = usize> + '_ {
    (0..cols).filter(move |c| pivots.binary_search(c).is_err())
}

fn first_free(pivots: &[usize], cols: usize) -> Option<usize> {
    free_columns(pivots, cols).next()
}

fn kernel_vector(rref: &Matrix, pivots: &[usize], free: usize) -> Vec<Fp> {
    let mut v = vec![rref.field.zero(); rref.cols];
    v[free] = rref.field.one();
    for (row, &pc) in pivots.iter().enumerate() {
        v[pc] = -rref[(row, free)];
    }
    v
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Fp;
    fn index(&self, (r, c): (usize, usize)) -> &Fp {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Fp {
        &mut self.data[r * self.cols + c]
    }
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

/// Solution set of a linear system: either empty, or `offset + span(basis)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AffineSpace {
    Empty {
        ambient: usize,
    },
    Coset {
        offset: Vec<Fp>,
        basis: Vec<Vec<Fp>>,
    },
}

impl AffineSpace {
    pub fn ambient(&self) -> usize {
        match self {
            AffineSpace::Empty { ambient } => *ambient,
            AffineSpace::Coset { offset, .. } => offset.len(),
        }
    }

    /// Dimension, or `None` for the empty set.
    pub fn dim(&self) -> Option<usize> {
        match self {
            AffineSpace::Empty { .. } => None,
            AffineSpace::Coset { basis, .. } => Some(basis.len()),
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, AffineSpace::Empty { .. })
    }

    /// `offset + sum coords[i] * basis[i]`.
    pub fn point(&self, coords: &[Fp]) -> Option<Vec<Fp>> {
        let AffineSpace::Coset { offset, basis } = self else {
            return None;
        };
        assert_eq!(coords.len(), basis.len());
        let mut v = offset.clone();
        for (c, b) in coords.iter().zip(basis) {
            for (vi, bi) in v.iter_mut().zip(b) {
                *vi += *c * *bi;
            }
        }
        Some(v)
    }

    /// Membership test by solving for coordinates against the basis.
    pub fn contains(&self, v: &[Fp]) -> bool {
        let AffineSpace::Coset { offset, basis } = self else {
            return false;
        };
        if v.len() != offset.len() {
            return false;
        }
        let Some(field) = offset.first().map(|x| x.field()) else {
            return true;
        };
        let diff: Vec<Fp> = v.iter().zip(offset).map(|(&a, &b)| a - b).collect();
        let cols: Vec<Vec<Fp>> = (0..offset.len())
            .map(|i| basis.iter().map(|b| b[i]).collect())
            .collect();
        let a = Matrix::from_rows(field, basis.len(), cols);
        !a.affine_solve(&diff).is_empty()
    }

    /// Applies the map `x -> f(x)` to the offset and `x -> g(x)` to each
    /// basis vector. For an invertible linear `g` with `f = g` this maps the
    /// space onto its image.
    pub fn map(&self, f: impl Fn(&[Fp]) -> Vec<Fp>) -> AffineSpace {
        match self {
            AffineSpace::Empty { ambient } => AffineSpace::Empty { ambient: *ambient },
            AffineSpace::Coset { offset, basis } => AffineSpace::Coset {
                offset: f(offset),
                basis: basis.iter().map(|b| f(b)).collect(),
            },
        }
    }

    /// Number of points, `p^dim`, if it fits in a `u64`.
    pub fn size(&self, p: u64) -> Option<u64> {
        match self.dim() {
            None => Some(0),
            Some(d) => p.checked_pow(d as u32),
        }
    }

    /// Iterates over every point, in mixed-radix order of the coordinates.
    pub fn points(&self, field: PrimeField) -> Points<'_> {
        let dim = self.dim();
        Points {
            space: self,
            field,
            coords: dim.map(|d| vec![0; d]),
        }
    }
}

pub struct Points<'a> {
    space: &'a AffineSpace,
    field: PrimeField,
    coords: Option<Vec<u64>>,
}

impl Iterator for Points<'_> {
    type Item = Vec<Fp>;

    fn next(&mut self) -> Option<Vec<Fp>> {
        let coords = self.coords.as_mut()?;
        let c: Vec<Fp> = coords.iter().map(|&v| self.field.elem(v)).collect();
        let out = self.space.point(&c);
        let p = self.field.modulus();
        let mut carry = true;
        for v in coords.iter_mut() {
            *v += 1;
            if *v < p {
                carry = false;
                break;
            }
            *v = 0;
        }
        if carry {
            self.coords = None;
        }
        out
    }
}
