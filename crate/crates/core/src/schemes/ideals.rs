use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_traits::One;

use super::{generic_matrices, SymbolicMatrix};
use crate::groebner::IdealSpec;
use crate::permlab::Permutation;
use crate::polyring::{Family, Polynomial, Ring, VariableId, WeightVector};
use crate::{Error, Ideal, Poly, Rational, Result};

/// Which way the torus degeneration runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Orientation {
    /// `w(X[i][j]) = i-1`, `w(Y[i][j]) = -(j-1)`: the limit has `XY` lower
    /// triangular and `YX` upper triangular.
    #[default]
    Standard,
    /// The negated weight; the limit is the `w0`-conjugate of the standard one.
    Flipped,
}

impl FromStr for Orientation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "standard" => Ok(Orientation::Standard),
            "flipped" => Ok(Orientation::Flipped),
            _ => Err(Error::InvalidInput(format!("unknown orientation {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SchemeTag {
    Commuting,
    D,
    Dz(Rational),
    D0,
    E,
    EpiCandidate(Permutation),
    ClosureUnion(Permutation),
}

/// A scheme tag together with the matrix size. Serializes as
/// `commuting:n=3`, `E:n=3`, `Epi:n=3:pi=231`, `Dz:n=3:z=7/3`, ...
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SchemeKey {
    pub tag: SchemeTag,
    pub n: usize,
}

impl SchemeKey {
    pub fn new(tag: SchemeTag, n: usize) -> Self {
        SchemeKey { tag, n }
    }
}

impl fmt::Display for SchemeKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n;
        match &self.tag {
            SchemeTag::Commuting => write!(f, "commuting:n={n}"),
            SchemeTag::D => write!(f, "D:n={n}"),
            SchemeTag::Dz(z) => write!(f, "Dz:n={n}:z={z}"),
            SchemeTag::D0 => write!(f, "D0:n={n}"),
            SchemeTag::E => write!(f, "E:n={n}"),
            SchemeTag::EpiCandidate(pi) => write!(f, "Epi:n={n}:pi={pi}"),
            SchemeTag::ClosureUnion(pi) => write!(f, "closure:n={n}:pi={pi}"),
        }
    }
}

impl FromStr for SchemeKey {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad scheme key {s:?}"));
        let mut parts = s.split(':');
        let kind = parts.next().ok_or_else(bad)?;
        let n: usize = parts
            .next()
            .and_then(|p| p.strip_prefix("n="))
            .and_then(|v| v.parse().ok())
            .ok_or_else(bad)?;
        let extra = parts.next();
        if parts.next().is_some() {
            return Err(bad());
        }
        let pi = || -> Result<Permutation> {
            extra
                .and_then(|p| p.strip_prefix("pi="))
                .ok_or_else(bad)?
                .parse()
        };
        let tag = match (kind, extra) {
            ("commuting", None) => SchemeTag::Commuting,
            ("D", None) => SchemeTag::D,
            ("D0", None) => SchemeTag::D0,
            ("E", None) => SchemeTag::E,
            ("Dz", Some(z)) => SchemeTag::Dz(
                z.strip_prefix("z=")
                    .and_then(|v| v.parse().ok())
                    .ok_or_else(bad)?,
            ),
            ("Epi", Some(_)) => SchemeTag::EpiCandidate(pi()?),
            ("closure", Some(_)) => SchemeTag::ClosureUnion(pi()?),
            _ => return Err(bad()),
        };
        Ok(SchemeKey { tag, n })
    }
}

/// Generators of the ideal of the tagged scheme in the ring of
/// [`Ring::matrix_pair`]`(n)`.
pub fn build_ideal(tag: &SchemeTag, n: usize) -> Result<Ideal> {
    let ring = Ring::matrix_pair(n)?;
    let (x, y) = generic_matrices::<Rational>(&ring)?;
    let xy = x.mul(&y);
    let yx = y.mul(&x);
    let off_diagonal = || {
        (1..=n)
            .flat_map(|i| (1..=n).map(move |j| (i, j)))
            .filter(|(i, j)| i != j)
    };
    let strict_lower = || (1..=n).flat_map(|i| (1..i).map(move |j| (i, j)));
    let strict_upper = || (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j)));

    let gens: Vec<Poly> = match tag {
        SchemeTag::Commuting => {
            let c = xy.sub(&yx);
            (1..=n)
                .flat_map(|i| (1..=n).map(move |j| (i, j)))
                .map(|(i, j)| c.get(i, j).clone())
                .collect()
        }
        SchemeTag::D => off_diagonal()
            .map(|(i, j)| xy.get(i, j) - yx.get(i, j))
            .collect(),
        SchemeTag::Dz(z) => off_diagonal()
            .map(|(i, j)| {
                // i<j: (XY)_ij - z^(j-i) (YX)_ij ; i>j: z^(i-j) (XY)_ij - (YX)_ij
                if i < j {
                    xy.get(i, j) - &yx.get(i, j).scale(&rpow(z, j - i))
                } else {
                    &xy.get(i, j).scale(&rpow(z, i - j)) - yx.get(i, j)
                }
            })
            .collect(),
        SchemeTag::D0 => strict_upper()
            .map(|(i, j)| xy.get(i, j).clone())
            .chain(strict_lower().map(|(i, j)| yx.get(i, j).clone()))
            .collect(),
        SchemeTag::E => e_generators(&xy, &yx, n),
        SchemeTag::EpiCandidate(pi) => {
            check_size(pi, n)?;
            let mut gens = e_generators(&xy, &yx, n);
            gens.extend((1..=n).map(|i| {
                let k = pi.apply(i);
                xy.get(k, k) - yx.get(i, i)
            }));
            gens.extend(schubert_rank_minors(&x, pi)?);
            gens.extend(schubert_rank_minors(&y, &pi.inverse())?);
            gens
        }
        SchemeTag::ClosureUnion(pi) => {
            check_size(pi, n)?;
            let mut gens = e_generators(&xy, &yx, n);
            gens.extend(schubert_rank_minors(&x, pi)?);
            gens.extend(schubert_rank_minors(&y, &pi.inverse())?);
            gens
        }
    };
    let ideal = IdealSpec::new(SchemeKey::new(tag.clone(), n).to_string(), gens);
    if let Some(g) = ideal
        .generators
        .iter()
        .find(|g| !g.is_bihomogeneous(ring.grading()))
    {
        return Err(Error::Inconsistent(format!(
            "generator {} is not bihomogeneous",
            ring.render(g)
        )));
    }
    Ok(ideal)
}

fn e_generators(
    xy: &SymbolicMatrix<Rational>,
    yx: &SymbolicMatrix<Rational>,
    n: usize,
) -> Vec<Poly> {
    let lower: Vec<(usize, usize)> = (1..=n).flat_map(|i| (1..i).map(move |j| (i, j))).collect();
    lower
        .iter()
        .map(|&(i, j)| xy.get(i, j).clone())
        .chain(lower.iter().map(|&(i, j)| yx.get(i, j).clone()))
        .collect()
}

fn check_size(pi: &Permutation, n: usize) -> Result<()> {
    if pi.n() != n {
        return Err(Error::InvalidPermutation(format!("{pi} is not in S_{n}")));
    }
    Ok(())
}

fn rpow(z: &Rational, e: usize) -> Rational {
    (0..e).fold(Rational::one(), |acc, _| acc * z.clone())
}

/// Rank conditions of the matrix Schubert variety of `pi` on `m`: for each
/// southwest rectangle (bottom `i` rows, left `j` columns) holding `r <
/// min(i, j)` ones of `pi`, all `(r+1)`-minors of that rectangle.
pub fn schubert_rank_minors(m: &SymbolicMatrix<Rational>, pi: &Permutation) -> Result<Vec<Poly>> {
    let n = m.n();
    check_size(pi, n)?;
    let mut seen: BTreeSet<(Vec<usize>, Vec<usize>)> = BTreeSet::new();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            let r = pi.southwest_rank(i, j);
            if r >= i.min(j) {
                continue;
            }
            let rows: Vec<usize> = (n + 1 - i..=n).collect();
            let cols: Vec<usize> = (1..=j).collect();
            for rs in subsets(&rows, r + 1) {
                for cs in subsets(&cols, r + 1) {
                    if seen.insert((rs.clone(), cs.clone())) {
                        let minor = m.minor(&rs, &cs);
                        if !minor.is_zero() {
                            out.push(minor);
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut out: Vec<Vec<usize>> = subsets(&items[1..], k - 1)
        .into_iter()
        .map(|mut s| {
            s.insert(0, items[0]);
            s
        })
        .collect();
    out.extend(subsets(&items[1..], k));
    out
}

fn variable_images(ring: &Ring, f: impl Fn(VariableId) -> VariableId) -> Vec<usize> {
    (0..ring.nvars())
        .map(|k| {
            ring.index_of(f(ring.variable_id(k).expect("matrix ring")))
                .expect("matrix ring")
        })
        .collect()
}

/// The twist `(X, Y) -> (w0 X, Y w0)` applied to generators: `X[i][j] ->
/// X[n+1-i][j]`, `Y[i][j] -> Y[i][n+1-j]`.
pub fn tau_substitute(ideal: &Ideal, n: usize) -> Result<Ideal> {
    let ring = Ring::matrix_pair(n)?;
    let images = variable_images(&ring, |v| match v.family {
        Family::X => VariableId {
            row: n + 1 - v.row,
            ..v
        },
        Family::Y => VariableId {
            col: n + 1 - v.col,
            ..v
        },
    });
    Ok(IdealSpec::new(
        format!("tau({})", ideal.label),
        ideal
            .generators
            .iter()
            .map(|g| g.permute_variables(&images))
            .collect(),
    ))
}

/// Conjugation of both matrices by `w0`: `X[i][j] -> X[n+1-i][n+1-j]`,
/// likewise for `Y`.
pub fn w0_conjugate(ideal: &Ideal, n: usize) -> Result<Ideal> {
    let ring = Ring::matrix_pair(n)?;
    let images = variable_images(&ring, |v| VariableId {
        row: n + 1 - v.row,
        col: n + 1 - v.col,
        ..v
    });
    Ok(IdealSpec::new(
        format!("w0({})", ideal.label),
        ideal
            .generators
            .iter()
            .map(|g| g.permute_variables(&images))
            .collect(),
    ))
}

/// The degeneration weight on the `2n^2` matrix variables.
pub fn degeneration_weight(n: usize, orientation: Orientation) -> Result<WeightVector> {
    let ring = Ring::matrix_pair(n)?;
    let w: Vec<i64> = (0..ring.nvars())
        .map(|k| {
            let v = ring.variable_id(k).expect("matrix ring");
            match v.family {
                Family::X => v.row as i64 - 1,
                Family::Y => -(v.col as i64 - 1),
            }
        })
        .collect();
    let w = WeightVector::new(w);
    Ok(match orientation {
        Orientation::Standard => w,
        Orientation::Flipped => w.negated(),
    })
}

/// Polynomials equal up to sign.
pub fn same_up_to_sign(a: &Polynomial<Rational>, b: &Polynomial<Rational>) -> bool {
    a == b || (a + b).is_zero()
}
