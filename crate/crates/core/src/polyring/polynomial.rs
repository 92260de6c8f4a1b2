use std::cmp::Ordering;
use std::collections::HashMap;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Monomial, TermOrder, WeightVector};
use crate::{Error, Field, Result};

/// Sparse polynomial in canonical form: terms sorted by descending grevlex,
/// no zero coefficients, no repeated monomials. Two polynomials are equal
/// exactly when their term lists are.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<C> {
    nvars: usize,
    terms: Vec<(Monomial, C)>,
}

impl<C: Field> Polynomial<C> {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        Self::monomial(Monomial::one(nvars), c)
    }

    pub fn monomial(m: Monomial, c: C) -> Self {
        let nvars = m.nvars();
        if c.is_zero() {
            return Self::zero(nvars);
        }
        Polynomial {
            nvars,
            terms: vec![(m, c)],
        }
    }

    /// Collects arbitrary terms into canonical form.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut acc: HashMap<Monomial, C> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), nvars);
            match acc.get_mut(&m) {
                Some(v) => *v = v.clone() + c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| TermOrder::Grevlex.compare(&b.0, &a.0));
        Polynomial { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Monomial, C)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, C)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// All terms share one total degree.
    pub fn is_homogeneous(&self) -> bool {
        self.terms
            .windows(2)
            .all(|w| w[0].0.degree() == w[1].0.degree())
    }

    /// All terms share one bidegree under `grading`.
    pub fn is_bihomogeneous(&self, grading: &[(u32, u32)]) -> bool {
        let bideg = |m: &Monomial| {
            m.exponents()
                .iter()
                .zip(grading)
                .fold((0u32, 0u32), |(a, b), (&e, &(ga, gb))| {
                    (a + e as u32 * ga, b + e as u32 * gb)
                })
        };
        match self.terms.first() {
            None => true,
            Some((m0, _)) => {
                let d0 = bideg(m0);
                self.terms.iter().all(|(m, _)| bideg(m) == d0)
            }
        }
    }

    /// Leading term under `order`.
    pub fn leading_term(&self, order: &TermOrder) -> Option<&(Monomial, C)> {
        match order {
            TermOrder::Grevlex => self.terms.first(),
            _ => self.terms.iter().max_by(|a, b| order.compare(&a.0, &b.0)),
        }
    }

    pub fn leading_monomial(&self, order: &TermOrder) -> Option<&Monomial> {
        self.leading_term(order).map(|(m, _)| m)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        // multiplication by a monomial preserves grevlex order
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t * m, a.clone() * c.clone()))
                .collect(),
        }
    }

    /// Divides by the leading coefficient under `order`.
    pub fn monic(&self, order: &TermOrder) -> Self {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv()),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(self.nvars, C::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn evaluate(&self, point: &[C]) -> C {
        assert_eq!(point.len(), self.nvars, "point has wrong dimension");
        let mut total = C::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for i in m.support() {
                for _ in 0..m.exponent(i) {
                    v = v * point[i].clone();
                }
            }
            total = total + v;
        }
        total
    }

    /// Partial derivative with respect to variable `index`.
    pub fn derivative(&self, index: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exponent(index) > 0)
            .map(|(m, c)| {
                let e = m.exponent(index);
                let mut k = C::zero();
                for _ in 0..e {
                    k = k + C::one();
                }
                (m.with_exponent(index, e - 1), c.clone() * k)
            });
        Self::from_terms(self.nvars, terms)
    }

    /// Renames variables: `i` goes to `images[i]`.
    pub fn permute_variables(&self, images: &[usize]) -> Self {
        Self::from_terms(
            self.nvars,
            self.terms
                .iter()
                .map(|(m, c)| (m.permuted(images), c.clone())),
        )
    }

    /// Substitutes each variable by a polynomial (all in the same target ring).
    pub fn substitute(&self, images: &[Polynomial<C>], target_nvars: usize) -> Self {
        assert_eq!(images.len(), self.nvars);
        let mut acc = Self::zero(target_nvars);
        for (m, c) in &self.terms {
            let mut t = Self::constant(target_nvars, c.clone());
            for i in m.support() {
                for _ in 0..m.exponent(i) {
                    t = &t * &images[i];
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Embeds into a ring with `nvars` variables (new variables appended,
    /// or trailing variables set to 1 when shrinking).
    pub fn resized(&self, nvars: usize) -> Self {
        Self::from_terms(
            nvars,
            self.terms
                .iter()
                .map(|(m, c)| (m.resized(nvars), c.clone())),
        )
    }

    /// Homogenizes with respect to total degree using the extra variable
    /// `h` appended at index `nvars`.
    pub fn homogenize(&self) -> Self {
        let d = self.total_degree().unwrap_or(0);
        let h = self.nvars;
        Self::from_terms(
            self.nvars + 1,
            self.terms.iter().map(|(m, c)| {
                let mm = m.resized(self.nvars + 1);
                let e = mm.exponent(h) + (d - m.degree()) as u16;
                (mm.with_exponent(h, e), c.clone())
            }),
        )
    }

    /// Sets the last variable to 1 and drops it.
    pub fn dehomogenize(&self) -> Self {
        self.resized(self.nvars - 1)
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        assert_eq!(self.nvars, other.nvars, "polynomials from different rings");
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let sign = |c: &C| if negate { -c.clone() } else { c.clone() };
        while i < a.len() && j < b.len() {
            match TermOrder::Grevlex.compare(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), sign(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = a[i].1.clone() + sign(&b[j].1);
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), sign(c))));
        Polynomial {
            nvars: self.nvars,
            terms: out,
        }
    }
}

impl<C: Field> Add for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(self, rhs: Self) -> Polynomial<C> {
        self.merge(rhs, false)
    }
}

impl<C: Field> Sub for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(self, rhs: Self) -> Polynomial<C> {
        self.merge(rhs, true)
    }
}

impl<C: Field> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: Self) -> Polynomial<C> {
        assert_eq!(self.nvars, rhs.nvars, "polynomials from different rings");
        let terms = self.terms.iter().flat_map(|(m, a)| {
            rhs.terms
                .iter()
                .map(move |(t, b)| (m * t, a.clone() * b.clone()))
        });
        Polynomial::from_terms(self.nvars, terms)
    }
}

impl<C: Field> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl<C: Field> $tr for Polynomial<C> {
            type Output = Polynomial<C>;
            fn $f(self, rhs: Self) -> Polynomial<C> {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Sum of the terms of `p` whose `w`-weight is minimal.
pub fn weight_initial_form<C: Field>(p: &Polynomial<C>, w: &WeightVector) -> Result<Polynomial<C>> {
    let min = p
        .terms
        .iter()
        .map(|(m, _)| w.of(m))
        .min()
        .ok_or(Error::ZeroPolynomial)?;
    Ok(Polynomial {
        nvars: p.nvars,
        terms: p
            .terms
            .iter()
            .filter(|(m, _)| w.of(m) == min)
            .cloned()
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::Ring;
    use crate::Rational;
    use proptest::prelude::*;

    fn xy() -> Ring {
        Ring::with_names(&["x", "y"])
    }

    fn p(ring: &Ring, s: &str) -> Polynomial<Rational> {
        ring.parse(s).unwrap()
    }

    #[test]
    fn arithmetic_identities() {
        let r = xy();
        assert_eq!(&p(&r, "x + y") * &p(&r, "x - y"), p(&r, "x^2 - y^2"));
        assert_eq!(&p(&r, "x + 1") * &p(&r, "x + 1"), p(&r, "x^2 + 2*x + 1"));
        let q = p(&r, "3*x*y - 1/2");
        assert_eq!(&q + &Polynomial::zero(2), q);
        assert!((&q - &q).is_zero());
    }

    #[test]
    fn initial_form_selects_minimal_weight() {
        let r = xy();
        let w = WeightVector::new(vec![0, 1]);
        assert_eq!(
            weight_initial_form(&p(&r, "x + y"), &w).unwrap(),
            p(&r, "x")
        );
        let h = p(&r, "x^2 - 3*x*y");
        assert_eq!(
            weight_initial_form(&h, &WeightVector::new(vec![1, 1])).unwrap(),
            h
        );
        assert_eq!(
            weight_initial_form(&Polynomial::<Rational>::zero(2), &w),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn derivative_and_evaluation() {
        let r = xy();
        let f = p(&r, "x^3*y - 2*y^2 + 5");
        assert_eq!(f.derivative(0), p(&r, "3*x^2*y"));
        assert_eq!(f.derivative(1), p(&r, "x^3 - 4*y"));
        let v = f.evaluate(&[
            Rational::from_integer(2.into()),
            Rational::from_integer((-1).into()),
        ]);
        assert_eq!(v, Rational::from_integer((-5).into()));
    }

    #[test]
    fn homogenize_round_trip() {
        let r = xy();
        let f = p(&r, "x^2 - y + 1");
        let h = f.homogenize();
        assert!(h.is_homogeneous());
        assert_eq!(h.dehomogenize(), f);
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial<Rational>> {
        prop::collection::vec(((0u16..3, 0u16..3, 0u16..3), -5i64..6), 0..5).prop_map(|ts| {
            Polynomial::from_terms(
                3,
                ts.into_iter().map(|((a, b, c), k)| {
                    (
                        Monomial::from_exponents(vec![a, b, c]),
                        Rational::from_integer(k.into()),
                    )
                }),
            )
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
        }

        #[test]
        fn initial_form_is_multiplicative(a in arb_poly(), b in arb_poly(), w in prop::collection::vec(-3i64..4, 3)) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            let w = WeightVector::new(w);
            let lhs = weight_initial_form(&(&a * &b), &w).unwrap();
            let rhs = &weight_initial_form(&a, &w).unwrap() * &weight_initial_form(&b, &w).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
