use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use super::{Monomial, Polynomial};
use crate::{Error, Field, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    X,
    Y,
}

/// Entry `(row, col)` of the matrix `X` or `Y`, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VariableId {
    pub family: Family,
    pub row: usize,
    pub col: usize,
}

impl fmt::Display for VariableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.family {
            Family::X => "X",
            Family::Y => "Y",
        };
        write!(f, "{}[{}][{}]", name, self.row, self.col)
    }
}

/// A named, bigraded variable set.
///
/// The matrix ring for size `n` enumerates `X[1][1], ..., X[1][n], ...,
/// X[n][n], Y[1][1], ..., Y[n][n]`; the `X` variables have bidegree `(1,0)`
/// and the `Y` variables `(0,1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ring {
    names: Vec<String>,
    grading: Vec<(u32, u32)>,
    matrix_size: Option<usize>,
    lookup: HashMap<String, usize>,
}

impl Ring {
    pub fn new(names: Vec<String>, grading: Vec<(u32, u32)>) -> Result<Self> {
        if names.len() != grading.len() {
            return Err(Error::SizeMismatch {
                expected: names.len(),
                found: grading.len(),
            });
        }
        let lookup: HashMap<_, _> = names
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, s)| (s, i))
            .collect();
        if lookup.len() != names.len() {
            return Err(Error::InvalidInput("duplicate variable name".into()));
        }
        Ok(Ring {
            names,
            grading,
            matrix_size: None,
            lookup,
        })
    }

    /// Variables named by `names`, all of bidegree `(1,0)`.
    pub fn with_names(names: &[&str]) -> Self {
        Self::new(
            names.iter().map(|s| s.to_string()).collect(),
            vec![(1, 0); names.len()],
        )
        .expect("distinct names")
    }

    /// The `2n^2` entries of a pair of generic `n x n` matrices.
    pub fn matrix_pair(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidInput("matrix size must be at least 1".into()));
        }
        let mut names = Vec::with_capacity(2 * n * n);
        let mut grading = Vec::with_capacity(2 * n * n);
        for family in [Family::X, Family::Y] {
            for row in 1..=n {
                for col in 1..=n {
                    names.push(VariableId { family, row, col }.to_string());
                    grading.push(if family == Family::X { (1, 0) } else { (0, 1) });
                }
            }
        }
        let mut ring = Self::new(names, grading)?;
        ring.matrix_size = Some(n);
        Ok(ring)
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn grading(&self) -> &[(u32, u32)] {
        &self.grading
    }

    pub fn total_grading(&self) -> Vec<(u32, u32)> {
        vec![(1, 0); self.nvars()]
    }

    pub fn matrix_size(&self) -> Option<usize> {
        self.matrix_size
    }

    pub fn index_of(&self, id: VariableId) -> Option<usize> {
        let n = self.matrix_size?;
        if id.row == 0 || id.col == 0 || id.row > n || id.col > n {
            return None;
        }
        let base = if id.family == Family::X { 0 } else { n * n };
        Some(base + (id.row - 1) * n + (id.col - 1))
    }

    pub fn variable_id(&self, index: usize) -> Option<VariableId> {
        let n = self.matrix_size?;
        if index >= 2 * n * n {
            return None;
        }
        let family = if index < n * n { Family::X } else { Family::Y };
        let local = index % (n * n);
        Some(VariableId {
            family,
            row: local / n + 1,
            col: local % n + 1,
        })
    }

    pub fn index_by_name(&self, name: &str) -> Option<usize> {
        self.lookup.get(name).copied()
    }

    pub fn var<C: Field>(&self, index: usize) -> Polynomial<C> {
        Polynomial::monomial(Monomial::var(self.nvars(), index), C::one())
    }

    /// The variable `X[row][col]` (or `Y`) of a matrix ring.
    pub fn entry<C: Field>(&self, family: Family, row: usize, col: usize) -> Polynomial<C> {
        let idx = self
            .index_of(VariableId { family, row, col })
            .expect("entry outside the matrix ring");
        self.var(idx)
    }

    pub fn bidegree(&self, m: &Monomial) -> (u32, u32) {
        m.exponents()
            .iter()
            .zip(self.grading.iter())
            .fold((0, 0), |(a, b), (&e, &(ga, gb))| {
                (a + e as u32 * ga, b + e as u32 * gb)
            })
    }

    pub fn render_monomial(&self, m: &Monomial) -> String {
        let parts: Vec<String> = m
            .support()
            .map(|i| match m.exponent(i) {
                1 => self.names[i].clone(),
                e => format!("{}^{}", self.names[i], e),
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    /// Canonical text form: terms in descending grevlex order, coefficients
    /// as `num/den`, factors joined by `*`, e.g.
    /// `X[1][1]*Y[1][2] - 2/3*Y[2][2]`.
    pub fn render<C: Field>(&self, p: &Polynomial<C>) -> String {
        if p.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in p.terms().iter().enumerate() {
            let negative = c.to_string().starts_with('-');
            let abs = if negative { -c.clone() } else { c.clone() };
            match (k, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            if m.is_one() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&self.render_monomial(m));
            } else {
                out.push_str(&format!("{}*{}", abs, self.render_monomial(m)));
            }
        }
        out
    }

    /// Inverse of [`Ring::render`]; also accepts arbitrary term order and
    /// repeated monomials.
    pub fn parse<C: Field + FromStr>(&self, text: &str) -> Result<Polynomial<C>> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut terms = Vec::new();
        let mut start = 0;
        let bytes = compact.as_bytes();
        for i in 1..=bytes.len() {
            // a sign starts a new term unless it follows '^', '*' or '/'
            let boundary = i == bytes.len()
                || ((bytes[i] == b'+' || bytes[i] == b'-')
                    && !matches!(bytes[i - 1], b'^' | b'*' | b'/'));
            if boundary {
                terms.push(self.parse_term::<C>(&compact[start..i])?);
                start = i;
            }
        }
        Ok(Polynomial::from_terms(self.nvars(), terms))
    }

    fn parse_term<C: Field + FromStr>(&self, term: &str) -> Result<(Monomial, C)> {
        let (negative, body) = match term.as_bytes()[0] {
            b'-' => (true, &term[1..]),
            b'+' => (false, &term[1..]),
            _ => (false, term),
        };
        if body.is_empty() {
            return Err(Error::Parse(format!("dangling sign in {term:?}")));
        }
        let mut coeff = C::one();
        let mut exps = vec![0u16; self.nvars()];
        for factor in body.split('*') {
            if factor.starts_with(|c: char| c.is_ascii_digit()) {
                let c: C = factor
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad coefficient {factor:?}")))?;
                coeff = coeff * c;
                continue;
            }
            let (name, power) = match factor.rsplit_once('^') {
                Some((name, e)) => (
                    name,
                    e.parse::<u16>()
                        .map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?,
                ),
                None => (factor, 1),
            };
            let idx = self
                .index_by_name(name)
                .ok_or_else(|| Error::Parse(format!("unknown variable {name:?}")))?;
            exps[idx] += power;
        }
        if negative {
            coeff = -coeff;
        }
        Ok((Monomial::from_exponents(exps), coeff))
    }
}
