use std::fmt;

/// Dense exponent vector with cached total degree and support mask.
///
/// Bit `i` of the mask is set when variable `i` (taken mod 64) occurs, which
/// makes most failed divisibility tests a single word operation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Box<[u16]>,
    degree: u32,
    mask: u64,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars].into_boxed_slice(),
            degree: 0,
            mask: 0,
        }
    }

    pub fn from_exponents(exps: Vec<u16>) -> Self {
        let degree = exps.iter().map(|&e| e as u32).sum();
        let mask = mask_of(&exps);
        Monomial {
            exps: exps.into_boxed_slice(),
            degree,
            mask,
        }
    }

    /// The single variable `x_index`.
    pub fn var(nvars: usize, index: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[index] = 1;
        Self::from_exponents(exps)
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn exponent(&self, index: usize) -> u16 {
        self.exps[index]
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Indices of the variables that occur.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        if self.mask & !other.mask != 0 || self.degree > other.degree {
            return false;
        }
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `self / other`, if `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Self::from_exponents(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| a - b)
                .collect(),
        ))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Self::from_exponents(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        if self.exps.len() <= 64 {
            return self.mask & other.mask == 0;
        }
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Exponents with variable `index` set to `value`.
    pub fn with_exponent(&self, index: usize, value: u16) -> Monomial {
        let mut exps = self.exps.to_vec();
        exps[index] = value;
        Self::from_exponents(exps)
    }

    /// The same exponents in a ring with `nvars` variables; extra slots are
    /// zero, dropped slots are discarded.
    pub fn resized(&self, nvars: usize) -> Monomial {
        let mut exps = self.exps.to_vec();
        exps.resize(nvars, 0);
        Self::from_exponents(exps)
    }

    /// Image under a permutation of the variables: exponent of `i` moves to
    /// `images[i]`.
    pub fn permuted(&self, images: &[usize]) -> Monomial {
        let mut exps = vec![0; self.exps.len()];
        for (i, &e) in self.exps.iter().enumerate() {
            exps[images[i]] += e;
        }
        Self::from_exponents(exps)
    }
}

impl std::ops::Mul for &Monomial {
    type Output = Monomial;

    fn mul(self, rhs: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), rhs.exps.len());
        let exps: Box<[u16]> = self
            .exps
            .iter()
            .zip(rhs.exps.iter())
            .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
            .collect();
        Monomial {
            exps,
            degree: self.degree + rhs.degree,
            mask: self.mask | rhs.mask,
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps)
    }
}

fn mask_of(exps: &[u16]) -> u64 {
    exps.iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .fold(0u64, |m, (i, _)| m | (1u64 << (i % 64)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisibility_and_lcm() {
        let a = Monomial::from_exponents(vec![2, 0, 1]);
        let b = Monomial::from_exponents(vec![3, 1, 1]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(
            b.checked_div(&a),
            Some(Monomial::from_exponents(vec![1, 1, 0]))
        );
        assert_eq!(
            a.lcm(&Monomial::from_exponents(vec![0, 4, 0])).exponents(),
            &[2, 4, 1]
        );
        assert_eq!((&a * &b).degree(), 8);
        assert!(Monomial::var(3, 0).is_coprime(&Monomial::var(3, 2)));
        assert!(!a.is_coprime(&b));
    }
}
