use crate::polyring::{Family, Polynomial, Ring};
use crate::{Error, Field, Result};

/// Square matrix of polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicMatrix<C> {
    n: usize,
    nvars: usize,
    entries: Vec<Polynomial<C>>,
}

impl<C: Field> SymbolicMatrix<C> {
    pub fn from_fn(n: usize, nvars: usize, f: impl Fn(usize, usize) -> Polynomial<C>) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                entries.push(f(i, j));
            }
        }
        SymbolicMatrix { n, nvars, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// 1-based entry.
    pub fn get(&self, i: usize, j: usize) -> &Polynomial<C> {
        &self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n);
        Self::from_fn(self.n, self.nvars, |i, j| {
            (1..=self.n).fold(Polynomial::zero(self.nvars), |acc, k| {
                &acc + &(self.get(i, k) * rhs.get(k, j))
            })
        })
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self::from_fn(self.n, self.nvars, |i, j| self.get(i, j) - rhs.get(i, j))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, self.nvars, |i, j| self.get(j, i).clone())
    }

    /// `XY - YX`.
    pub fn commutator(&self, rhs: &Self) -> Self {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    /// Determinant of the submatrix on the given 1-based rows and columns,
    /// by cofactor expansion along the first row.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Polynomial<C> {
        assert_eq!(rows.len(), cols.len());
        if rows.is_empty() {
            return Polynomial::constant(self.nvars, C::one());
        }
        let mut acc = Polynomial::zero(self.nvars);
        let rest_rows = &rows[1..];
        for (k, &c) in cols.iter().enumerate() {
            let entry = self.get(rows[0], c);
            if entry.is_zero() {
                continue;
            }
            let rest_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = entry * &self.minor(rest_rows, &rest_cols);
            acc = if k % 2 == 0 {
                &acc + &term
            } else {
                &acc - &term
            };
        }
        acc
    }
}

/// The generic matrices `X = (X[i][j])`, `Y = (Y[i][j])` of a matrix ring.
pub fn generic_matrices<C: Field>(ring: &Ring) -> Result<(SymbolicMatrix<C>, SymbolicMatrix<C>)> {
    let n = ring
        .matrix_size()
        .ok_or_else(|| Error::InvalidInput("not a matrix ring".into()))?;
    let nv = ring.nvars();
    Ok((
        SymbolicMatrix::from_fn(n, nv, |i, j| ring.entry(Family::X, i, j)),
        SymbolicMatrix::from_fn(n, nv, |i, j| ring.entry(Family::Y, i, j)),
    ))
}
