use num_traits::Zero;

use crate::linalg::Matrix;
use crate::permlab::Permutation;
use crate::polyring::{Family, Ring};
use crate::{Error, Ideal, RatMatrix, Rational, Result};

/// Coordinates of `(X, Y)` in the variable order of `ring`.
pub fn point_values(ring: &Ring, x: &RatMatrix, y: &RatMatrix) -> Result<Vec<Rational>> {
    let n = ring
        .matrix_size()
        .ok_or_else(|| Error::InvalidInput("not a matrix ring".into()))?;
    for m in [x, y] {
        if m.rows() != n || m.cols() != n {
            return Err(Error::SizeMismatch {
                expected: n,
                found: m.rows(),
            });
        }
    }
    Ok((0..ring.nvars())
        .map(|k| {
            let v = ring.variable_id(k).expect("matrix ring");
            let m = if v.family == Family::X { x } else { y };
            m[(v.row - 1, v.col - 1)].clone()
        })
        .collect())
}

/// `Ok` if every generator vanishes at the point, otherwise the first
/// offending generator.
pub fn vanishes_at(ideal: &Ideal, ring: &Ring, x: &RatMatrix, y: &RatMatrix) -> Result<()> {
    let point = point_values(ring, x, y)?;
    match ideal
        .generators
        .iter()
        .find(|g| !g.evaluate(&point).is_zero())
    {
        Some(g) => Err(Error::NotOnScheme(ring.render(g))),
        None => Ok(()),
    }
}

/// Rank of the Jacobian matrix of the generators at a point of the scheme.
pub fn jacobian_rank(ideal: &Ideal, ring: &Ring, x: &RatMatrix, y: &RatMatrix) -> Result<usize> {
    vanishes_at(ideal, ring, x, y)?;
    let point = point_values(ring, x, y)?;
    let rows: Vec<Vec<Rational>> = ideal
        .generators
        .iter()
        .map(|g| {
            (0..ring.nvars())
                .map(|k| g.derivative(k).evaluate(&point))
                .collect()
        })
        .collect();
    if rows.is_empty() {
        return Ok(0);
    }
    Ok(Matrix::from_rows(rows)?.rank())
}

/// The `n x 2n` matrix whose columns are `diag(X^0), ..., diag(X^{n-1}),
/// diag(Y^0), ..., diag(Y^{n-1})`.
pub fn power_diagonal_matrix(x: &RatMatrix, y: &RatMatrix) -> Result<RatMatrix> {
    let n = x.rows();
    if !x.is_square() || !y.is_square() || y.rows() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: y.rows(),
        });
    }
    let mut out = Matrix::zeros(n, 2 * n);
    for (offset, m) in [(0, x), (n, y)] {
        let mut power = Matrix::identity(n);
        for k in 0..n {
            for (i, d) in power.diag().into_iter().enumerate() {
                out[(i, offset + k)] = d;
            }
            power = &power * m;
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaoReport {
    /// `[X, Y]` is diagonal and nonzero.
    pub applies: bool,
    pub rank: usize,
    pub pass: bool,
}

/// When `[X, Y]` is diagonal and nonzero, the power-diagonal matrix must
/// have rank at most `n - 1`.
pub fn tao_rank_check(x: &RatMatrix, y: &RatMatrix) -> Result<TaoReport> {
    let n = x.rows();
    let rank = power_diagonal_matrix(x, y)?.rank();
    let c = &(x * y) - &(y * x);
    let applies = c.is_diagonal() && !c.is_zero();
    Ok(TaoReport {
        applies,
        rank,
        pass: !applies || rank < n,
    })
}

/// How a permutation acts on a diagonal vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum DiagConvention {
    /// `(XY)_{pi(i), pi(i)} = (YX)_ii`.
    #[default]
    Standard,
    /// `(XY)_ii = (YX)_{pi(i), pi(i)}`.
    Inverse,
}

pub fn diag_lemma_check(
    x: &RatMatrix,
    y: &RatMatrix,
    pi: &Permutation,
    convention: DiagConvention,
) -> bool {
    let n = pi.n();
    if x.rows() != n || y.rows() != n {
        return false;
    }
    let xy = (x * y).diag();
    let yx = (y * x).diag();
    let sigma = match convention {
        DiagConvention::Standard => pi.clone(),
        DiagConvention::Inverse => pi.inverse(),
    };
    (1..=n).all(|i| xy[sigma.apply(i) - 1] == yx[i - 1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int_matrix;
    use crate::scalar::int;
    use crate::schemes::{build_ideal, sample_point, SamplePointParams, SchemeTag};

    fn central() -> (RatMatrix, RatMatrix) {
        (
            int_matrix(&[&[0, 2], &[1, 0]]),
            int_matrix(&[&[0, 3], &[5, 0]]),
        )
    }

    #[test]
    fn jacobian_of_e_at_central_point() {
        let ring = Ring::matrix_pair(2).unwrap();
        let e = build_ideal(&SchemeTag::E, 2).unwrap();
        let (x, y) = central();
        assert_eq!(jacobian_rank(&e, &ring, &x, &y).unwrap(), 2);
        let z = Matrix::zeros(2, 2);
        assert_eq!(jacobian_rank(&e, &ring, &z, &z).unwrap(), 0);
        let off = int_matrix(&[&[1, 1], &[1, 1]]);
        assert!(matches!(
            jacobian_rank(&e, &ring, &off, &off),
            Err(Error::NotOnScheme(_))
        ));
    }

    #[test]
    fn jacobian_of_d0_at_pulled_back_point() {
        let ring = Ring::matrix_pair(2).unwrap();
        let d0 = build_ideal(&SchemeTag::D0, 2).unwrap();
        let (xe, ye) = central();
        let w0 = int_matrix(&[&[0, 1], &[1, 0]]);
        let (x, y) = (&w0 * &xe, &ye * &w0);
        assert_eq!(jacobian_rank(&d0, &ring, &x, &y).unwrap(), 2);
    }

    #[test]
    fn power_diagonals() {
        let (x, y) = central();
        let m = power_diagonal_matrix(&x, &y).unwrap();
        assert_eq!(m, int_matrix(&[&[1, 0, 1, 0], &[1, 0, 1, 0]]));
        assert_eq!(m.rank(), 1);
        let d = int_matrix(&[&[1, 0], &[0, 2]]);
        let zero = Matrix::zeros(2, 2);
        let m = power_diagonal_matrix(&d, &zero).unwrap();
        assert_eq!(m, int_matrix(&[&[1, 1, 1, 0], &[1, 2, 1, 0]]));
        assert_eq!(m.rank(), 2);
        let id = Matrix::identity(2);
        assert_eq!(power_diagonal_matrix(&id, &id).unwrap().rank(), 1);
        assert!(power_diagonal_matrix(&id, &Matrix::identity(3)).is_err());
    }

    #[test]
    fn tao_reports() {
        let (x, y) = central();
        assert_eq!(
            tao_rank_check(&x, &y).unwrap(),
            TaoReport {
                applies: true,
                rank: 1,
                pass: true
            }
        );
        assert_eq!(
            tao_rank_check(&x, &x).unwrap(),
            TaoReport {
                applies: false,
                rank: 1,
                pass: true
            }
        );
        let d = int_matrix(&[&[1, 0], &[0, 2]]);
        let r = tao_rank_check(&d, &Matrix::zeros(2, 2)).unwrap();
        assert_eq!(
            r,
            TaoReport {
                applies: false,
                rank: 2,
                pass: true
            }
        );
    }

    #[test]
    fn diag_lemma() {
        let pi: Permutation = "21".parse().unwrap();
        let (x, y) = central();
        assert!(diag_lemma_check(&x, &y, &pi, DiagConvention::Standard));
        let x2 = int_matrix(&[&[1, 0], &[1, -2]]);
        let y2 = int_matrix(&[&[10, -7], &[5, -5]]);
        assert!(diag_lemma_check(&x2, &y2, &pi, DiagConvention::Standard));
        let d = int_matrix(&[&[1, 0], &[0, 2]]);
        let id = Permutation::identity(2);
        assert!(diag_lemma_check(&d, &d, &id, DiagConvention::Standard));
        assert!(!diag_lemma_check(
            &d,
            &Matrix::identity(2),
            &pi,
            DiagConvention::Standard
        ));
    }

    #[test]
    fn diag_lemma_three_cycle() {
        let pi: Permutation = "231".parse().unwrap();
        let p = SamplePointParams::central(
            pi.clone(),
            vec![int(1), int(2), int(3)],
            vec![int(5), int(7), int(11)],
        );
        let (x, y) = sample_point(&p).unwrap();
        assert!(diag_lemma_check(&x, &y, &pi, DiagConvention::Standard));
        assert!(!diag_lemma_check(&x, &y, &pi, DiagConvention::Inverse));
        assert!(diag_lemma_check(
            &x,
            &y,
            &pi.inverse(),
            DiagConvention::Inverse
        ));
    }
}
