//! Dimension, K-polynomials and (bi)degrees of monomial ideals, and of
//! arbitrary ideals through their initial ideals.

use std::collections::BTreeMap;
use std::fmt;

use crate::groebner::{buchberger, initial_ideal, GroebnerBasis, IdealSpec};
use crate::polyring::{Monomial, Ring, TermOrder};
use crate::{Error, Field, Result};

/// Monomial ideal given by its minimal generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> Self {
        MonomialIdeal {
            nvars,
            gens: minimalize(gens),
        }
    }

    /// Fails with [`Error::NotMonomial`] unless every generator is a term.
    pub fn from_ideal<C: Field>(ideal: &IdealSpec<C>, nvars: usize) -> Result<Self> {
        let mut gens = Vec::with_capacity(ideal.generators.len());
        for g in &ideal.generators {
            if !g.is_monomial() {
                return Err(Error::NotMonomial(format!(
                    "{:?}",
                    g.terms().iter().map(|t| &t.0).collect::<Vec<_>>()
                )));
            }
            gens.push(g.terms()[0].0.clone());
        }
        Ok(Self::new(nvars, gens))
    }

    pub fn from_basis<C: Field>(gb: &GroebnerBasis<C>) -> Self {
        Self::new(gb.nvars(), gb.leading_monomials())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_one())
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.exponents().cmp(b.exponents()))
    });
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

fn support_mask(m: &Monomial) -> u128 {
    m.support().fold(0u128, |acc, i| acc | (1u128 << i))
}

fn check_dimension_input(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_unit() {
        return Err(Error::InvalidInput(
            "the unit ideal has empty quotient".into(),
        ));
    }
    Ok(())
}

/// Krull dimension of `S / M`: the largest set of variables containing the
/// support of no generator. Exhaustive search up to 20 variables,
/// branch and bound beyond.
pub fn monomial_dimension(ideal: &MonomialIdeal) -> Result<usize> {
    if ideal.nvars <= 20 {
        monomial_dimension_exhaustive(ideal)
    } else {
        monomial_dimension_branch_and_bound(ideal)
    }
}

pub fn monomial_dimension_exhaustive(ideal: &MonomialIdeal) -> Result<usize> {
    check_dimension_input(ideal)?;
    if ideal.nvars > 20 {
        return Err(Error::TooLarge(format!(
            "exhaustive search over {} variables",
            ideal.nvars
        )));
    }
    let supports: Vec<u32> = ideal.gens.iter().map(|g| support_mask(g) as u32).collect();
    let best = (0u32..1 << ideal.nvars)
        .filter(|&s| supports.iter().all(|&g| g & !s != 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0);
    Ok(best)
}

/// Dimension as `nvars` minus a minimum set of variables meeting every
/// generator's support.
pub fn monomial_dimension_branch_and_bound(ideal: &MonomialIdeal) -> Result<usize> {
    check_dimension_input(ideal)?;
    if ideal.nvars > 128 {
        return Err(Error::TooLarge(format!("{} variables", ideal.nvars)));
    }
    let supports: Vec<u128> = ideal.gens.iter().map(support_mask).collect();
    fn search(supports: &[u128], chosen: u128, size: usize, best: &mut usize) {
        if size >= *best {
            return;
        }
        // branch on the unhit generator with the smallest support
        let unhit = supports
            .iter()
            .filter(|&&s| s & chosen == 0)
            .min_by_key(|s| s.count_ones());
        match unhit {
            None => *best = size,
            Some(&s) => {
                let mut rest = s;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    search(supports, chosen | bit, size + 1, best);
                    rest &= rest - 1;
                }
            }
        }
    }
    let mut best = ideal.nvars + 1;
    search(&supports, 0, 0, &mut best);
    Ok(ideal.nvars - best)
}

/// Laurent-free polynomial in `a`, `b` with integer coefficients: the
/// numerator of a bigraded Hilbert series.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KPolynomial {
    terms: BTreeMap<(u32, u32), i64>,
}

impl KPolynomial {
    pub fn one() -> Self {
        Self::monomial((0, 0), 1)
    }

    pub fn monomial(exp: (u32, u32), c: i64) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(exp, c);
        }
        KPolynomial { terms }
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), i64> {
        &self.terms
    }

    pub fn coefficient(&self, a: u32, b: u32) -> i64 {
        self.terms.get(&(a, b)).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, exp: (u32, u32), c: i64) {
        let v = self.terms.entry(exp).or_insert(0);
        *v += c;
        if *v == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&e, &c) in &other.terms {
            out.add_term(e, c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = KPolynomial::default();
        for (&(a1, b1), &c1) in &self.terms {
            for (&(a2, b2), &c2) in &other.terms {
                out.add_term((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }

    fn shift(&self, (da, db): (u32, u32)) -> Self {
        KPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), &c)| ((a + da, b + db), c))
                .collect(),
        }
    }
}

impl fmt::Display for KPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(u32, u32, u64)> = self
            .terms
            .iter()
            .map(|(&(a, b), &c)| (a, b, c.unsigned_abs()))
            .collect();
        let signs: Vec<bool> = self.terms.values().map(|&c| c < 0).collect();
        write_terms(f, &terms, &signs, 'a', 'b')
    }
}

fn weight_of(m: &Monomial, grading: &[(u32, u32)]) -> (u32, u32) {
    m.exponents()
        .iter()
        .zip(grading)
        .fold((0, 0), |(a, b), (&e, &(ga, gb))| {
            (a + e as u32 * ga, b + e as u32 * gb)
        })
}

/// K-polynomial by pivot recursion: for a variable `x`,
/// `K(M) = K(M + (x)) + t^deg(x) K(M : x)`, with generators whose support is
/// disjoint from all others split off as factors `1 - t^deg(g)`.
pub fn k_polynomial(ideal: &MonomialIdeal, grading: &[(u32, u32)]) -> KPolynomial {
    assert_eq!(grading.len(), ideal.nvars, "grading has wrong length");
    k_rec(ideal.gens.clone(), grading)
}

fn k_rec(gens: Vec<Monomial>, grading: &[(u32, u32)]) -> KPolynomial {
    if gens.is_empty() {
        return KPolynomial::one();
    }
    if gens.iter().any(|g| g.is_one()) {
        return KPolynomial::default();
    }
    let masks: Vec<u64> = gens.iter().map(|g| g.mask()).collect();
    let mut factor = KPolynomial::one();
    let mut rest = Vec::with_capacity(gens.len());
    for (k, g) in gens.iter().enumerate() {
        let others = masks
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != k)
            .fold(0u64, |acc, (_, m)| acc | m);
        if masks[k] & others == 0 {
            factor = factor
                .mul(&KPolynomial::one().add(&KPolynomial::monomial(weight_of(g, grading), -1)));
        } else {
            rest.push(g.clone());
        }
    }
    if rest.is_empty() {
        return factor;
    }
    // pivot on the variable occurring in the most generators
    let nvars = rest[0].nvars();
    let x = (0..nvars)
        .max_by_key(|&i| {
            (
                rest.iter().filter(|g| g.exponent(i) > 0).count(),
                std::cmp::Reverse(i),
            )
        })
        .expect("nonempty ring");
    let with_x: Vec<Monomial> = rest
        .iter()
        .filter(|g| g.exponent(x) == 0)
        .cloned()
        .chain(std::iter::once(Monomial::var(nvars, x)))
        .collect();
    let colon: Vec<Monomial> = rest
        .iter()
        .map(|g| {
            if g.exponent(x) > 0 {
                g.with_exponent(x, g.exponent(x) - 1)
            } else {
                g.clone()
            }
        })
        .collect();
    let sum = k_rec(minimalize(with_x), grading)
        .add(&k_rec(minimalize(colon), grading).shift(grading[x]));
    factor.mul(&sum)
}

/// Raw inclusion–exclusion is only attempted up to this many minimal generators.
pub const INCLUSION_EXCLUSION_CAP: usize = 24;

/// K-polynomial as `sum over subsets S of (-1)^|S| t^deg(lcm S)`.
///
/// A branch whose running lcm is already divisible by a generator still to
/// be decided contributes zero (toggling that generator pairs its subsets
/// off with opposite signs), so it is pruned.
pub fn k_polynomial_inclusion_exclusion(
    ideal: &MonomialIdeal,
    grading: &[(u32, u32)],
) -> Result<KPolynomial> {
    assert_eq!(grading.len(), ideal.nvars, "grading has wrong length");
    if ideal.gens.len() > INCLUSION_EXCLUSION_CAP {
        return Err(Error::TooLarge(format!(
            "{} minimal generators",
            ideal.gens.len()
        )));
    }
    fn rec(
        gens: &[Monomial],
        k: usize,
        lcm: &Monomial,
        sign: i64,
        grading: &[(u32, u32)],
        out: &mut KPolynomial,
    ) {
        if gens[k..].iter().any(|g| g.divides(lcm)) {
            return;
        }
        if k == gens.len() {
            out.add_term(weight_of(lcm, grading), sign);
            return;
        }
        rec(gens, k + 1, lcm, sign, grading, out);
        rec(gens, k + 1, &lcm.lcm(&gens[k]), -sign, grading, out);
    }
    let mut out = KPolynomial::default();
    rec(
        &ideal.gens,
        0,
        &Monomial::one(ideal.nvars),
        1,
        grading,
        &mut out,
    );
    Ok(out)
}

/// Homogeneous polynomial in `A`, `B` with nonnegative coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BidegreePolynomial {
    terms: BTreeMap<(u32, u32), u64>,
}

impl BidegreePolynomial {
    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32), u64)>) -> Self {
        let mut out = BidegreePolynomial::default();
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    pub fn one() -> Self {
        Self::from_terms([((0, 0), 1)])
    }

    /// `(AB)^k`.
    pub fn ab_power(k: u32) -> Self {
        Self::from_terms([((k, k), 1)])
    }

    /// `(A + B)^k`.
    pub fn a_plus_b_power(k: u32) -> Self {
        let mut c: u64 = 1;
        let mut terms = Vec::new();
        for i in 0..=k {
            terms.push(((k - i, i), c));
            c = c * (k - i) as u64 / (i + 1) as u64;
        }
        Self::from_terms(terms)
    }

    fn add_term(&mut self, e: (u32, u32), c: u64) {
        if c == 0 {
            return;
        }
        *self.terms.entry(e).or_insert(0) += c;
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), u64> {
        &self.terms
    }

    pub fn coefficient(&self, a: u32, b: u32) -> u64 {
        self.terms.get(&(a, b)).copied().unwrap_or(0)
    }

    /// Total degree, if homogeneous and nonzero.
    pub fn degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|(a, b)| a + b);
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.is_empty() || self.degree().is_some()
    }

    /// Value at `A = B = 1`.
    pub fn eval_at_one(&self) -> u64 {
        self.terms.values().sum()
    }

    /// `p(B, A)`.
    pub fn swap(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(&(a, b), &c)| ((b, a), c)))
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_terms(self.terms.iter().chain(&other.terms).map(|(&e, &c)| (e, c)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::from_terms(self.terms.iter().flat_map(|(&(a1, b1), &c1)| {
            other
                .terms
                .iter()
                .map(move |(&(a2, b2), &c2)| ((a1 + a2, b1 + b2), c1 * c2))
        }))
    }

    /// Parses the canonical rendering (`A^2 + AB + B^2`).
    pub fn parse(text: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad bidegree polynomial {text:?}"));
        let mut out = BidegreePolynomial::default();
        for term in text.split('+').map(str::trim) {
            if term == "0" {
                continue;
            }
            let digits: String = term.chars().take_while(|c| c.is_ascii_digit()).collect();
            let mut rest = &term[digits.len()..];
            let c: u64 = if digits.is_empty() {
                1
            } else {
                digits.parse().map_err(|_| bad())?
            };
            let mut exps = [0u32; 2];
            for (k, letter) in ['A', 'B'].into_iter().enumerate() {
                if let Some(r) = rest.strip_prefix(letter) {
                    rest = r;
                    exps[k] = 1;
                    if let Some(r) = rest.strip_prefix('^') {
                        let d: String = r.chars().take_while(|c| c.is_ascii_digit()).collect();
                        exps[k] = d.parse().map_err(|_| bad())?;
                        rest = &r[d.len()..];
                    }
                }
            }
            if !rest.is_empty() || (digits.is_empty() && exps == [0, 0]) {
                return Err(bad());
            }
            out.add_term((exps[0], exps[1]), c);
        }
        Ok(out)
    }
}

/// Descending `A` exponent: `A^6 + 3A^5B + 7A^4B^2 + ... + B^6`.
impl fmt::Display for BidegreePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(u32, u32, u64)> = self
            .terms
            .iter()
            .rev()
            .map(|(&(a, b), &c)| (a, b, c))
            .collect();
        write_terms(f, &terms, &vec![false; terms.len()], 'A', 'B')
    }
}

fn write_terms(
    f: &mut fmt::Formatter<'_>,
    terms: &[(u32, u32, u64)],
    negative: &[bool],
    x: char,
    y: char,
) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (k, (&(a, b, c), &neg)) in terms.iter().zip(negative).enumerate() {
        match (k, neg) {
            (0, true) => write!(f, "-")?,
            (0, false) => {}
            (_, true) => write!(f, " - ")?,
            (_, false) => write!(f, " + ")?,
        }
        if c != 1 || (a == 0 && b == 0) {
            write!(f, "{c}")?;
        }
        for (v, e) in [(x, a), (y, b)] {
            match e {
                0 => {}
                1 => write!(f, "{v}")?,
                e => write!(f, "{v}^{e}")?,
            }
        }
    }
    Ok(())
}

fn binomial(n: u32, k: u32) -> i128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128)
}

/// Multidegree: the lowest-degree part of `K(1 - A, 1 - B)`. Its degree
/// must be the codimension and its coefficients nonnegative.
pub fn multidegree(ideal: &MonomialIdeal, grading: &[(u32, u32)]) -> Result<BidegreePolynomial> {
    let codim = (ideal.nvars - monomial_dimension(ideal)?) as u32;
    let k = k_polynomial(ideal, grading);
    multidegree_from_k(&k, codim)
}

pub fn multidegree_from_k(k: &KPolynomial, codim: u32) -> Result<BidegreePolynomial> {
    let coeff = |i: u32, j: u32| -> i128 {
        let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
        k.terms
            .iter()
            .map(|(&(a, b), &c)| c as i128 * binomial(a, i) * binomial(b, j))
            .sum::<i128>()
            * sign
    };
    for d in 0..codim {
        if let Some(i) = (0..=d).find(|&i| coeff(i, d - i) != 0) {
            return Err(Error::Inconsistent(format!(
                "nonzero component in degree {d} (at A^{i}B^{}) below the codimension {codim}",
                d - i
            )));
        }
    }
    let mut out = BidegreePolynomial::default();
    for i in 0..=codim {
        let c = coeff(i, codim - i);
        if c < 0 {
            return Err(Error::Inconsistent(format!(
                "negative multidegree coefficient {c} at A^{i}B^{}",
                codim - i
            )));
        }
        out.add_term((i, codim - i), c as u64);
    }
    if out.terms.is_empty() {
        return Err(Error::Inconsistent(format!(
            "multidegree vanishes in the codimension {codim}"
        )));
    }
    Ok(out)
}

/// Degree of the projective scheme of a homogeneous ideal under the total
/// grading, read off its initial ideal.
pub fn degree<C: Field>(ideal: &IdealSpec<C>, order: &TermOrder) -> Result<u64> {
    let gb = buchberger(ideal, order);
    degree_from_basis(&gb)
}

pub fn degree_from_basis<C: Field>(gb: &GroebnerBasis<C>) -> Result<u64> {
    let m = MonomialIdeal::from_ideal(&initial_ideal(gb), gb.nvars())?;
    let md = multidegree(&m, &vec![(1, 0); gb.nvars()])?;
    Ok(md.eval_at_one())
}

/// Bidegree under the ring's grading, read off the initial ideal.
pub fn bidegree<C: Field>(
    ideal: &IdealSpec<C>,
    ring: &Ring,
    order: &TermOrder,
) -> Result<BidegreePolynomial> {
    let gb = buchberger(ideal, order);
    bidegree_from_basis(&gb, ring)
}

pub fn bidegree_from_basis<C: Field>(
    gb: &GroebnerBasis<C>,
    ring: &Ring,
) -> Result<BidegreePolynomial> {
    // the zero ideal carries no variable count of its own
    if !gb.is_empty() && gb.nvars() != ring.nvars() {
        return Err(Error::SizeMismatch {
            expected: ring.nvars(),
            found: gb.nvars(),
        });
    }
    let m = MonomialIdeal::new(ring.nvars(), gb.leading_monomials());
    multidegree(&m, ring.grading())
}

/// Number of standard monomials of each bidegree `(i, j)` with `i + j <=
/// up_to`, by enumeration.
pub fn hilbert_function_bruteforce(
    ideal: &MonomialIdeal,
    grading: &[(u32, u32)],
    up_to: u32,
) -> Result<BTreeMap<(u32, u32), u64>> {
    if ideal.nvars > 10 || up_to > 8 {
        return Err(Error::TooLarge(format!(
            "{} variables up to degree {up_to}",
            ideal.nvars
        )));
    }
    let mut out = BTreeMap::new();
    let mut exps = vec![0u16; ideal.nvars];
    fn rec(
        ideal: &MonomialIdeal,
        grading: &[(u32, u32)],
        exps: &mut Vec<u16>,
        k: usize,
        budget: u32,
        out: &mut BTreeMap<(u32, u32), u64>,
    ) {
        if k == exps.len() {
            let m = Monomial::from_exponents(exps.clone());
            if !ideal.contains(&m) {
                *out.entry(weight_of(&m, grading)).or_insert(0) += 1;
            }
            return;
        }
        for e in 0..=budget {
            exps[k] = e as u16;
            rec(ideal, grading, exps, k + 1, budget - e, out);
        }
        exps[k] = 0;
    }
    rec(ideal, grading, &mut exps, 0, up_to, &mut out);
    Ok(out)
}

/// Coefficients of `K(a,b) / ((1-a)^p (1-b)^q)` with `i + j <= up_to`,
/// omitting zeros.
pub fn hilbert_function_from_k(
    k: &KPolynomial,
    p: u32,
    q: u32,
    up_to: u32,
) -> BTreeMap<(u32, u32), u64> {
    let count = |vars: u32, d: i64| -> i128 {
        if d < 0 {
            0
        } else if vars == 0 {
            (d == 0) as i128
        } else {
            binomial(d as u32 + vars - 1, vars - 1)
        }
    };
    let mut out = BTreeMap::new();
    for i in 0..=up_to {
        for j in 0..=up_to - i {
            let v: i128 = k
                .terms
                .iter()
                .map(|(&(a, b), &c)| {
                    c as i128 * count(p, i as i64 - a as i64) * count(q, j as i64 - b as i64)
                })
                .sum();
            if v != 0 {
                out.insert((i, j), v as u64);
            }
        }
    }
    out
}

/// Numbers of variables of bidegree `(1,0)` and `(0,1)`.
pub fn grading_counts(grading: &[(u32, u32)]) -> Result<(u32, u32)> {
    let mut p = 0;
    let mut q = 0;
    for &g in grading {
        match g {
            (1, 0) => p += 1,
            (0, 1) => q += 1,
            other => {
                return Err(Error::InvalidInput(format!(
                    "unsupported variable degree {other:?}"
                )))
            }
        }
    }
    Ok((p, q))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    fn ideal(nvars: usize, gens: &[&[u16]]) -> MonomialIdeal {
        MonomialIdeal::new(nvars, gens.iter().map(|g| mono(g)).collect())
    }

    const XY: [(u32, u32); 2] = [(1, 0), (0, 1)];

    #[test]
    fn dimensions() {
        assert_eq!(monomial_dimension(&ideal(2, &[&[1, 1]])).unwrap(), 1);
        assert_eq!(monomial_dimension(&ideal(2, &[&[1, 0]])).unwrap(), 1);
        assert_eq!(
            monomial_dimension(&ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 2, 0]])).unwrap(),
            1
        );
        assert!(monomial_dimension(&ideal(2, &[&[0, 0]])).is_err());
    }

    #[test]
    fn k_polynomial_examples() {
        let k = k_polynomial(&ideal(1, &[&[1]]), &[(1, 0)]);
        assert_eq!(k.to_string(), "1 - a");
        let k = k_polynomial(&ideal(2, &[&[1, 1]]), &XY);
        assert_eq!(k.to_string(), "1 - ab");
        let m = ideal(2, &[&[2, 0], &[1, 1]]);
        let k = k_polynomial(&m, &XY);
        // 1 - a^2 - ab + a^2 b
        assert_eq!(
            k,
            KPolynomial::one()
                .add(&KPolynomial::monomial((2, 0), -1))
                .add(&KPolynomial::monomial((1, 1), -1))
                .add(&KPolynomial::monomial((2, 1), 1))
        );
        assert_eq!(k_polynomial_inclusion_exclusion(&m, &XY).unwrap(), k);
    }

    #[test]
    fn multidegree_examples() {
        assert_eq!(
            multidegree(&ideal(1, &[&[1]]), &[(1, 0)])
                .unwrap()
                .to_string(),
            "A"
        );
        assert_eq!(
            multidegree(&ideal(2, &[&[2, 0], &[1, 1]]), &XY)
                .unwrap()
                .to_string(),
            "A"
        );
        assert_eq!(
            multidegree(&ideal(1, &[&[2]]), &[(1, 0)])
                .unwrap()
                .to_string(),
            "2A"
        );
    }

    #[test]
    fn bruteforce_examples() {
        let h = hilbert_function_bruteforce(&ideal(2, &[&[1, 0]]), &XY, 2).unwrap();
        assert_eq!(h, BTreeMap::from([((0, 0), 1), ((0, 1), 1), ((0, 2), 1)]));
        let h = hilbert_function_bruteforce(&ideal(2, &[&[1, 1]]), &XY, 3).unwrap();
        assert!(h.keys().all(|&(a, b)| a == 0 || b == 0));
        assert_eq!(h.len(), 7);
        // standard monomials of (x^2, xy): 1, x, y, y^2, y^3, ...
        let h = hilbert_function_bruteforce(&ideal(2, &[&[2, 0], &[1, 1]]), &XY, 3).unwrap();
        assert_eq!(
            h,
            BTreeMap::from([
                ((0, 0), 1),
                ((1, 0), 1),
                ((0, 1), 1),
                ((0, 2), 1),
                ((0, 3), 1)
            ])
        );
        assert!(hilbert_function_bruteforce(&ideal(11, &[]), &[(1, 0); 11], 2).is_err());
    }

    #[test]
    fn bidegree_rendering() {
        let p = BidegreePolynomial::from_terms([
            ((6, 0), 1),
            ((5, 1), 3),
            ((4, 2), 7),
            ((3, 3), 9),
            ((2, 4), 7),
            ((1, 5), 3),
            ((0, 6), 1),
        ]);
        let text = "A^6 + 3A^5B + 7A^4B^2 + 9A^3B^3 + 7A^2B^4 + 3AB^5 + B^6";
        assert_eq!(p.to_string(), text);
        assert_eq!(BidegreePolynomial::parse(text).unwrap(), p);
        assert_eq!(BidegreePolynomial::one().to_string(), "1");
        assert_eq!(
            BidegreePolynomial::a_plus_b_power(2).to_string(),
            "A^2 + 2AB + B^2"
        );
        assert_eq!(p.eval_at_one(), 31);
        assert!(BidegreePolynomial::parse("A^2 + C").is_err());
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_ideal() -> impl Strategy<Value = MonomialIdeal> {
            prop::collection::vec(prop::collection::vec(0u16..3, 5), 1..7)
                .prop_map(|gens| {
                    MonomialIdeal::new(5, gens.into_iter().map(Monomial::from_exponents).collect())
                })
                .prop_filter("proper", |m| !m.is_unit())
        }

        const G: [(u32, u32); 5] = [(1, 0), (1, 0), (1, 0), (0, 1), (0, 1)];

        proptest! {
            #[test]
            fn k_routes_agree(m in arb_ideal()) {
                prop_assert_eq!(k_polynomial(&m, &G), k_polynomial_inclusion_exclusion(&m, &G).unwrap());
            }

            #[test]
            fn series_matches_enumeration(m in arb_ideal()) {
                let k = k_polynomial(&m, &G);
                prop_assert_eq!(hilbert_function_bruteforce(&m, &G, 5).unwrap(), hilbert_function_from_k(&k, 3, 2, 5));
            }

            #[test]
            fn dimension_routes_agree(m in arb_ideal()) {
                prop_assert_eq!(monomial_dimension_exhaustive(&m).unwrap(), monomial_dimension_branch_and_bound(&m).unwrap());
            }

            #[test]
            fn multidegree_is_homogeneous_nonnegative(m in arb_ideal()) {
                let md = multidegree(&m, &G).unwrap();
                let codim = 5 - monomial_dimension(&m).unwrap() as u32;
                prop_assert_eq!(md.degree(), Some(codim));
            }
        }
    }
}
