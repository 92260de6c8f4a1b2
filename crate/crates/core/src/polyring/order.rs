use std::cmp::Ordering;

use super::Monomial;

/// Integer weight per variable, indexed like the ring's variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightVector {
    weights: Vec<i64>,
}

impl WeightVector {
    pub fn new(weights: Vec<i64>) -> Self {
        WeightVector { weights }
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn of(&self, m: &Monomial) -> i64 {
        m.exponents()
            .iter()
            .zip(self.weights.iter())
            .map(|(&e, &w)| e as i64 * w)
            .sum()
    }

    /// Negated weights (the opposite degeneration direction).
    pub fn negated(&self) -> Self {
        WeightVector {
            weights: self.weights.iter().map(|w| -w).collect(),
        }
    }

    /// Appends one more variable with the given weight.
    pub fn extended(&self, weight: i64) -> Self {
        let mut weights = self.weights.clone();
        weights.push(weight);
        WeightVector { weights }
    }
}

/// Global monomial orders. Variable `0` has the highest priority.
///
/// `Weighted` compares total degree first, then prefers the monomial of
/// *smaller* weight, then falls back to grevlex. On homogeneous
/// polynomials the leading term therefore always lies in the minimal-weight
/// part, which is what the initial-form computations rely on.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TermOrder {
    Lex,
    Grevlex,
    Weighted(WeightVector),
}

impl TermOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            TermOrder::Lex => lex(a, b),
            TermOrder::Grevlex => grevlex(a, b),
            TermOrder::Weighted(w) => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| w.of(b).cmp(&w.of(a)))
                .then_with(|| grevlex_same_degree(a, b)),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            TermOrder::Lex => "lex",
            TermOrder::Grevlex => "grevlex",
            TermOrder::Weighted(_) => "weighted",
        }
    }
}

fn lex(a: &Monomial, b: &Monomial) -> Ordering {
    for (x, y) in a.exponents().iter().zip(b.exponents()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

fn grevlex(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| grevlex_same_degree(a, b))
}

fn grevlex_same_degree(a: &Monomial, b: &Monomial) -> Ordering {
    for (x, y) in a.exponents().iter().zip(b.exponents()).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn grevlex_prefers_smaller_last_exponent() {
        // u > v > w: u^2 v vs u v w
        assert_eq!(
            TermOrder::Grevlex.compare(&m(&[2, 1, 0]), &m(&[1, 1, 1])),
            Ordering::Greater
        );
    }

    #[test]
    fn lex_compares_first_variable() {
        assert_eq!(
            TermOrder::Lex.compare(&m(&[1, 0]), &m(&[0, 5])),
            Ordering::Greater
        );
    }

    #[test]
    fn weighted_prefers_smaller_weight() {
        let order = TermOrder::Weighted(WeightVector::new(vec![0, 1]));
        assert_eq!(order.compare(&m(&[1, 0]), &m(&[0, 1])), Ordering::Greater);
    }

    fn orders() -> Vec<TermOrder> {
        vec![
            TermOrder::Lex,
            TermOrder::Grevlex,
            TermOrder::Weighted(WeightVector::new(vec![0, 1, -1, 2])),
        ]
    }

    proptest! {
        #[test]
        fn orders_are_total_and_multiplicative(
            a in prop::collection::vec(0u16..4, 4),
            b in prop::collection::vec(0u16..4, 4),
            c in prop::collection::vec(0u16..4, 4),
        ) {
            let (a, b, c) = (m(&a), m(&b), m(&c));
            for order in orders() {
                let ab = order.compare(&a, &b);
                prop_assert_eq!(ab, order.compare(&b, &a).reverse());
                prop_assert_eq!(ab == Ordering::Equal, a == b);
                prop_assert_eq!(order.compare(&(&a * &c), &(&b * &c)), ab);
                if ab == Ordering::Greater && order.compare(&b, &c) == Ordering::Greater {
                    prop_assert_eq!(order.compare(&a, &c), Ordering::Greater);
                }
                prop_assert!(order.compare(&a, &Monomial::one(4)) != Ordering::Less);
            }
        }
    }
}
