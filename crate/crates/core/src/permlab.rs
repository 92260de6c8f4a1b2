//! Permutations, partial permutation matrices, orbit and stratum
//! dimensions, Bruhat order and block concatenation.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// Permutation in one-line notation: `pi(i) = one_line[i-1]`, values 1-based.
///
/// Its matrix has the 1 of row `i` in column `pi(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    one_line: Vec<usize>,
}

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!("{one_line:?}")));
            }
            seen[v] = true;
        }
        Ok(Permutation { one_line })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            one_line: (1..=n).collect(),
        }
    }

    /// The longest element `w0`, `i -> n+1-i`.
    pub fn longest(n: usize) -> Self {
        Permutation {
            one_line: (1..=n).rev().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.one_line.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    /// `pi(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.one_line[i - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.one_line.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { one_line: inv }
    }

    /// `(self * other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                expected: self.n(),
                found: other.n(),
            });
        }
        Ok(Permutation {
            one_line: other.one_line.iter().map(|&i| self.apply(i)).collect(),
        })
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let v = &self.one_line;
        (0..v.len())
            .map(|i| (i + 1..v.len()).filter(|&j| v[i] > v[j]).count())
            .sum()
    }

    /// `w0 pi w0`, i.e. `i -> n+1-pi(n+1-i)`.
    pub fn conjugate_by_w0(&self) -> Self {
        let n = self.n();
        Permutation {
            one_line: (1..=n).map(|i| n + 1 - self.apply(n + 1 - i)).collect(),
        }
    }

    /// Block direct sum: `self` on `1..=k`, `other` shifted onto `k+1..`.
    pub fn concat_star(&self, other: &Permutation) -> Self {
        let k = self.n();
        let mut one_line = self.one_line.clone();
        one_line.extend(other.one_line.iter().map(|v| v + k));
        Permutation { one_line }
    }

    /// Splits `self = a * b` with `a` in `S_k`, if that is possible.
    pub fn split_at(&self, k: usize) -> Option<(Permutation, Permutation)> {
        if k == 0 || k >= self.n() || self.one_line[..k].iter().any(|&v| v > k) {
            return None;
        }
        let a = Permutation {
            one_line: self.one_line[..k].to_vec(),
        };
        let b = Permutation {
            one_line: self.one_line[k..].iter().map(|v| v - k).collect(),
        };
        Some((a, b))
    }

    /// The permutation matrix, with the 1 of column `i` in row `pi(i)`.
    pub fn to_partial(&self) -> PartialPerm {
        PartialPerm {
            cols: self.inverse().one_line.iter().map(|&c| Some(c)).collect(),
        }
    }

    /// Number of 1s of the permutation matrix in the southwest rectangle made
    /// of the bottom `i` rows and the left `j` columns.
    pub fn southwest_rank(&self, i: usize, j: usize) -> usize {
        self.to_partial().southwest_rank(i, j)
    }

    /// All permutations of `1..=n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(n);
        let mut used = vec![false; n + 1];
        fn rec(n: usize, current: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if current.len() == n {
                out.push(Permutation {
                    one_line: current.clone(),
                });
                return;
            }
            for v in 1..=n {
                if !used[v] {
                    used[v] = true;
                    current.push(v);
                    rec(n, current, used, out);
                    current.pop();
                    used[v] = false;
                }
            }
        }
        rec(n, &mut current, &mut used, &mut out);
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n() > 9 { "," } else { "" };
        let parts: Vec<String> = self.one_line.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(sep))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Digit string (`"231"`) or comma-separated list (`"2,3,1"`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parsed: Option<Vec<usize>> = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<usize>().ok())
                .collect()
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect()
        };
        let v = parsed.ok_or_else(|| Error::InvalidPermutation(s.to_string()))?;
        if v.is_empty() {
            return Err(Error::InvalidPermutation(s.to_string()));
        }
        Permutation::new(v)
    }
}

/// Bruhat order through southwest rank counts: `rho <= pi` iff every
/// southwest rectangle holds at most as many 1s of `rho` as of `pi`. The
/// identity is the minimum and `w0` the maximum.
pub fn bruhat_leq(rho: &Permutation, pi: &Permutation) -> Result<bool> {
    let n = pi.n();
    if rho.n() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: rho.n(),
        });
    }
    let (a, b) = (rho.to_partial(), pi.to_partial());
    Ok((1..=n).all(|i| (1..=n).all(|j| a.southwest_rank(i, j) <= b.southwest_rank(i, j))))
}

/// 0/1 matrix with at most one 1 per row and column, stored as the column
/// (1-based) of the 1 in each row.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialPerm {
    cols: Vec<Option<usize>>,
}

impl PartialPerm {
    pub fn new(cols: Vec<Option<usize>>) -> Result<Self> {
        let n = cols.len();
        let mut seen = vec![false; n + 1];
        for c in cols.iter().flatten() {
            if *c == 0 || *c > n || seen[*c] {
                return Err(Error::InvalidInput(format!(
                    "not a partial permutation: {cols:?}"
                )));
            }
            seen[*c] = true;
        }
        Ok(PartialPerm { cols })
    }

    pub fn zero(n: usize) -> Self {
        PartialPerm {
            cols: vec![None; n],
        }
    }

    pub fn n(&self) -> usize {
        self.cols.len()
    }

    pub fn cols(&self) -> &[Option<usize>] {
        &self.cols
    }

    pub fn rank(&self) -> usize {
        self.cols.iter().flatten().count()
    }

    /// 1-based entry test.
    pub fn has_one(&self, row: usize, col: usize) -> bool {
        self.cols[row - 1] == Some(col)
    }

    pub fn as_permutation(&self) -> Option<Permutation> {
        let v: Option<Vec<usize>> = self.cols.iter().copied().collect();
        v.map(|one_line| Permutation { one_line }.inverse())
    }

    pub fn southwest_rank(&self, i: usize, j: usize) -> usize {
        let n = self.n();
        (n + 1 - i.min(n)..=n)
            .filter(|&r| matches!(self.cols[r - 1], Some(c) if c <= j))
            .count()
    }

    /// Dimension of the `B+ x B+` orbit: entries that carry a 1, or have a 1
    /// directly below them (same column) or directly to their left (same
    /// row).
    pub fn orbit_dimension(&self) -> usize {
        let n = self.n();
        let mut count = 0;
        for r in 1..=n {
            for c in 1..=n {
                let at_or_left = matches!(self.cols[r - 1], Some(k) if k <= c);
                let below = (r..=n).any(|rr| self.cols[rr - 1] == Some(c));
                if at_or_left || below {
                    count += 1;
                }
            }
        }
        count
    }

    /// Dimension of the stratum `E_p`: `n^2 + rank`.
    pub fn stratum_dimension(&self) -> usize {
        self.n() * self.n() + self.rank()
    }

    /// Every partial permutation of size `n` (`n <= 6`), lexicographic in
    /// the row-to-column list with an empty row sorting first.
    pub fn all(n: usize) -> Result<Vec<PartialPerm>> {
        if n > 6 {
            return Err(Error::TooLarge(format!("partial permutations of size {n}")));
        }
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(n);
        let mut used = vec![false; n + 1];
        fn rec(
            n: usize,
            cur: &mut Vec<Option<usize>>,
            used: &mut [bool],
            out: &mut Vec<PartialPerm>,
        ) {
            if cur.len() == n {
                out.push(PartialPerm { cols: cur.clone() });
                return;
            }
            cur.push(None);
            rec(n, cur, used, out);
            cur.pop();
            for v in 1..=n {
                if !used[v] {
                    used[v] = true;
                    cur.push(Some(v));
                    rec(n, cur, used, out);
                    cur.pop();
                    used[v] = false;
                }
            }
        }
        rec(n, &mut current, &mut used, &mut out);
        Ok(out)
    }
}

impl fmt::Display for PartialPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .cols
            .iter()
            .map(|c| c.map_or("0".to_string(), |v| v.to_string()))
            .collect();
        let sep = if self.n() > 9 { "," } else { "" };
        write!(f, "{}", parts.join(sep))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn codec() {
        assert_eq!(p("231").one_line(), &[2, 3, 1]);
        assert_eq!(p("2,3,1"), p("231"));
        assert_eq!(p("231").to_string(), "231");
        let big = Permutation::longest(10);
        assert_eq!(big.to_string(), "10,9,8,7,6,5,4,3,2,1");
        assert_eq!(big.to_string().parse::<Permutation>().unwrap(), big);
        assert!("221".parse::<Permutation>().is_err());
        assert!("2x1".parse::<Permutation>().is_err());
        assert!("".parse::<Permutation>().is_err());
    }

    #[test]
    fn orbit_dimensions() {
        assert_eq!(Permutation::identity(2).to_partial().orbit_dimension(), 3);
        assert_eq!(Permutation::longest(2).to_partial().orbit_dimension(), 4);
        assert_eq!(PartialPerm::zero(3).orbit_dimension(), 0);
    }

    #[test]
    fn stratum_dimensions() {
        for pi in Permutation::all(3) {
            assert_eq!(pi.to_partial().stratum_dimension(), 12);
        }
        assert_eq!(PartialPerm::zero(2).stratum_dimension(), 4);
        assert_eq!(
            PartialPerm::new(vec![Some(1), None])
                .unwrap()
                .stratum_dimension(),
            5
        );
    }

    #[test]
    fn star_inverse_conjugate_length() {
        assert_eq!(p("21").concat_star(&p("1")), p("213"));
        assert_eq!(p("1").concat_star(&p("1")), p("12"));
        assert_eq!(p("21").concat_star(&p("21")), p("2143"));
        assert_eq!(p("231").conjugate_by_w0(), p("312"));
        assert_eq!(p("312").inverse(), p("231"));
        assert_eq!(p("321").length(), 3);
        assert_eq!(p("2143").split_at(2), Some((p("21"), p("21"))));
        assert_eq!(p("231").split_at(1), None);
    }

    #[test]
    fn bruhat_examples() {
        for pi in Permutation::all(3) {
            assert!(bruhat_leq(&Permutation::identity(3), &pi).unwrap());
            assert!(bruhat_leq(&pi, &Permutation::longest(3)).unwrap());
        }
        assert!(bruhat_leq(&p("132"), &p("312")).unwrap());
        assert!(!bruhat_leq(&p("321"), &p("312")).unwrap());
        let below: Vec<_> = Permutation::all(3)
            .into_iter()
            .filter(|r| bruhat_leq(r, &p("312")).unwrap())
            .collect();
        assert_eq!(below, vec![p("123"), p("132"), p("213"), p("312")]);
        assert!(bruhat_leq(&p("12"), &p("123")).is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(Permutation::all(3).len(), 6);
        assert_eq!(PartialPerm::all(1).unwrap().len(), 2);
        assert_eq!(PartialPerm::all(2).unwrap().len(), 7);
        assert_eq!(PartialPerm::all(3).unwrap().len(), 34);
        assert!(PartialPerm::all(7).is_err());
    }
}
