use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

use crate::linalg::Matrix;
use crate::permlab::Permutation;
use crate::scalar::int;
use crate::{Error, RatMatrix, Rational, Result};

/// Parameters of a point `(U1 P t U2^-1, U2 s P^-1 U1^-1)` of the stratum
/// of a permutation.
#[derive(Clone, Debug, PartialEq)]
pub struct SamplePointParams {
    pub pi: Permutation,
    pub t: Vec<Rational>,
    pub s: Vec<Rational>,
    pub u1: Option<RatMatrix>,
    pub u2: Option<RatMatrix>,
}

impl SamplePointParams {
    pub fn central(pi: Permutation, t: Vec<Rational>, s: Vec<Rational>) -> Self {
        SamplePointParams {
            pi,
            t,
            s,
            u1: None,
            u2: None,
        }
    }

    /// `s` and `t` invertible, the ratios `t_i / s_i` pairwise distinct and
    /// the products `s_j t_j` pairwise distinct.
    pub fn is_generic(&self) -> bool {
        let n = self.pi.n();
        if self.t.len() != n || self.s.len() != n {
            return false;
        }
        if self.s.iter().chain(&self.t).any(|v| v.is_zero()) {
            return false;
        }
        let ratios: Vec<Rational> = self.t.iter().zip(&self.s).map(|(t, s)| t / s).collect();
        let products: Vec<Rational> = self.t.iter().zip(&self.s).map(|(t, s)| t * s).collect();
        pairwise_distinct(&ratios) && pairwise_distinct(&products)
    }
}

fn pairwise_distinct(v: &[Rational]) -> bool {
    (0..v.len()).all(|i| (i + 1..v.len()).all(|j| v[i] != v[j]))
}

/// `P(pi)` with the 1 of column `i` in row `pi(i)`, so `P(pi) e_i = e_pi(i)`.
pub fn permutation_matrix(pi: &Permutation) -> RatMatrix {
    let n = pi.n();
    let mut m = Matrix::zeros(n, n);
    for i in 1..=n {
        m[(pi.apply(i) - 1, i - 1)] = Rational::one();
    }
    m
}

pub fn sample_point(params: &SamplePointParams) -> Result<(RatMatrix, RatMatrix)> {
    let n = params.pi.n();
    if params.t.len() != n || params.s.len() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: params.t.len().min(params.s.len()),
        });
    }
    let unipotent = |u: &Option<RatMatrix>| -> Result<RatMatrix> {
        match u {
            None => Ok(Matrix::identity(n)),
            Some(u) if u.rows() == n && u.is_unipotent_upper() => Ok(u.clone()),
            Some(_) => Err(Error::InvalidInput(
                "U must be upper unipotent of size n".into(),
            )),
        }
    };
    let u1 = unipotent(&params.u1)?;
    let u2 = unipotent(&params.u2)?;
    let p = permutation_matrix(&params.pi);
    let t = Matrix::diagonal(&params.t);
    let s = Matrix::diagonal(&params.s);
    let x = &(&(&u1 * &p) * &t) * &u2.inverse()?;
    let y = &(&(&u2 * &s) * &p.transpose()) * &u1.inverse()?;
    Ok((x, y))
}

fn random_int<R: Rng>(rng: &mut R) -> Rational {
    int(rng.gen_range(-20..=20))
}

fn random_unipotent<R: Rng>(rng: &mut R, n: usize) -> RatMatrix {
    let mut u = Matrix::identity(n);
    for i in 0..n {
        for j in i + 1..n {
            u[(i, j)] = random_int(rng);
        }
    }
    u
}

const MAX_DRAWS: usize = 1000;

/// Draws `t`, `s` (and optionally `U1`, `U2`) with integer entries in
/// `[-20, 20]`, rejecting non-generic draws.
pub fn random_params<R: Rng>(
    rng: &mut R,
    pi: &Permutation,
    unipotent: bool,
) -> Result<SamplePointParams> {
    let n = pi.n();
    for _ in 0..MAX_DRAWS {
        let t: Vec<Rational> = (0..n).map(|_| random_int(rng)).collect();
        let s: Vec<Rational> = (0..n).map(|_| random_int(rng)).collect();
        let mut params = SamplePointParams::central(pi.clone(), t, s);
        if !params.is_generic() {
            continue;
        }
        if unipotent {
            params.u1 = Some(random_unipotent(rng, n));
            params.u2 = Some(random_unipotent(rng, n));
        }
        return Ok(params);
    }
    Err(Error::GenericityExhausted(MAX_DRAWS))
}

/// A point of the diagonal commutator scheme with nonzero commutator.
///
/// Starts from a central point `(P t, s P^-1)` of a non-identity
/// permutation (whose commutator is diagonal) and moves it by maps that keep
/// `[X, Y]` diagonal: `Y += c X^k`, `X += c Y^k`, conjugation by a
/// permutation matrix and by an invertible diagonal matrix.
pub fn random_d_point<R: Rng>(rng: &mut R, n: usize) -> Result<(RatMatrix, RatMatrix)> {
    if n < 2 {
        return Err(Error::InvalidInput(
            "nonzero commutators need n >= 2".into(),
        ));
    }
    let perms: Vec<Permutation> = Permutation::all(n)
        .into_iter()
        .filter(|p| *p != Permutation::identity(n))
        .collect();
    for _ in 0..MAX_DRAWS {
        let pi = perms.choose(rng).expect("n >= 2").clone();
        let params = random_params(rng, &pi, false)?;
        let (mut x, mut y) = sample_point(&params)?;
        // one shear of each kind; repeated shears blow up the entry sizes
        let k = rng.gen_range(0..n as u32);
        y = &y + &scalar_mul(&x.pow(k), &int(rng.gen_range(-3..=3)));
        let k = rng.gen_range(0..n as u32);
        x = &x + &scalar_mul(&y.pow(k), &int(rng.gen_range(-3..=3)));
        let mut order: Vec<usize> = (1..=n).collect();
        order.shuffle(rng);
        let sigma = permutation_matrix(&Permutation::new(order)?);
        x = &(&sigma * &x) * &sigma.transpose();
        y = &(&sigma * &y) * &sigma.transpose();
        let torus: Vec<Rational> = (0..n)
            .map(|_| int(rng.gen_range(1..=5) * if rng.gen() { 1 } else { -1 }))
            .collect();
        let g = Matrix::diagonal(&torus);
        let ginv = g.inverse()?;
        x = &(&g * &x) * &ginv;
        y = &(&g * &y) * &ginv;
        let c = &(&x * &y) - &(&y * &x);
        if c.is_diagonal() && !c.is_zero() {
            return Ok((x, y));
        }
    }
    Err(Error::GenericityExhausted(MAX_DRAWS))
}

fn scalar_mul(m: &RatMatrix, c: &Rational) -> RatMatrix {
    let rows: Vec<Vec<Rational>> = (0..m.rows())
        .map(|i| m.row(i).iter().map(|v| v * c).collect())
        .collect();
    Matrix::from_rows(rows).expect("rectangular")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int_matrix;
    use rand::SeedableRng;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&k| int(k)).collect()
    }

    #[test]
    fn central_point_two_by_two() {
        let params =
            SamplePointParams::central("21".parse().unwrap(), ints(&[1, 2]), ints(&[3, 5]));
        assert!(params.is_generic());
        let (x, y) = sample_point(&params).unwrap();
        assert_eq!(x, int_matrix(&[&[0, 2], &[1, 0]]));
        assert_eq!(y, int_matrix(&[&[0, 3], &[5, 0]]));
        assert_eq!(&x * &y, int_matrix(&[&[10, 0], &[0, 3]]));
        assert_eq!(&y * &x, int_matrix(&[&[3, 0], &[0, 10]]));
    }

    #[test]
    fn dense_orbit_point_two_by_two() {
        let mut params =
            SamplePointParams::central("21".parse().unwrap(), ints(&[1, 2]), ints(&[3, 5]));
        params.u1 = Some(int_matrix(&[&[1, 1], &[0, 1]]));
        params.u2 = Some(int_matrix(&[&[1, 2], &[0, 1]]));
        let (x, y) = sample_point(&params).unwrap();
        assert_eq!(x, int_matrix(&[&[1, 0], &[1, -2]]));
        assert_eq!(y, int_matrix(&[&[10, -7], &[5, -5]]));
        assert_eq!(&x * &y, int_matrix(&[&[10, -7], &[0, 3]]));
        assert_eq!(&y * &x, int_matrix(&[&[3, 14], &[0, 10]]));
    }

    #[test]
    fn matrix_sends_e_i_to_e_pi_i() {
        let pi: Permutation = "231".parse().unwrap();
        assert_eq!(
            permutation_matrix(&pi),
            int_matrix(&[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]])
        );
        let (x, y) = sample_point(&SamplePointParams::central(
            pi,
            ints(&[1, 2, 3]),
            ints(&[5, 7, 11]),
        ))
        .unwrap();
        assert_eq!((&x * &y).diag(), ints(&[33, 5, 14]));
        assert_eq!((&y * &x).diag(), ints(&[5, 14, 33]));
    }

    #[test]
    fn non_unipotent_rejected() {
        let mut params =
            SamplePointParams::central("21".parse().unwrap(), ints(&[1, 2]), ints(&[3, 5]));
        params.u1 = Some(int_matrix(&[&[2, 1], &[0, 1]]));
        assert!(sample_point(&params).is_err());
    }

    #[test]
    fn genericity_predicate() {
        let pi: Permutation = "21".parse().unwrap();
        // t/s equal: 1/3 = 2/6
        assert!(!SamplePointParams::central(pi.clone(), ints(&[1, 2]), ints(&[3, 6])).is_generic());
        // products equal: 2*3 = 3*2
        assert!(!SamplePointParams::central(pi.clone(), ints(&[2, 3]), ints(&[3, 2])).is_generic());
        assert!(!SamplePointParams::central(pi, ints(&[1, 2]), ints(&[0, 5])).is_generic());
    }

    #[test]
    fn random_points_are_generic_and_on_d() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for n in 2..=4 {
            let pi = Permutation::longest(n);
            let p = random_params(&mut rng, &pi, true).unwrap();
            assert!(p.is_generic());
            let (x, y) = random_d_point(&mut rng, n).unwrap();
            let c = &(&x * &y) - &(&y * &x);
            assert!(c.is_diagonal() && !c.is_zero());
        }
    }
}
