use std::time::{Duration, Instant};

use diagcomm::groebner::{buchberger_with, BuchbergerOptions};
use diagcomm::hilbert::{
    bidegree_from_basis, monomial_dimension, BidegreePolynomial, MonomialIdeal,
};
use diagcomm::polyring::{Ring, TermOrder};
use diagcomm::schemes::{build_ideal, SchemeKey, SchemeTag};
use diagcomm::{Basis, Error, Ideal, Result};

use crate::cache::{Cache, Lookup};

/// Shared settings for every Gröbner computation of a run.
#[derive(Debug, Clone)]
pub struct Engine {
    pub order: TermOrder,
    pub budget: Duration,
    pub cache: Option<Cache>,
}

#[derive(Debug, Clone)]
pub struct Invariants {
    pub dimension: usize,
    pub bidegree: BidegreePolynomial,
}

impl Invariants {
    pub fn degree(&self) -> u64 {
        self.bidegree.eval_at_one()
    }
}

impl Engine {
    pub fn options(&self) -> BuchbergerOptions {
        BuchbergerOptions {
            deadline: Some(Instant::now() + self.budget),
        }
    }

    /// Basis of an arbitrary ideal under the run's order, within budget.
    pub fn basis_of(&self, ideal: &Ideal) -> Result<Basis> {
        self.basis_with_order(ideal, &self.order)
    }

    pub fn basis_with_order(&self, ideal: &Ideal, order: &TermOrder) -> Result<Basis> {
        buchberger_with(ideal, order, &self.options())
    }

    /// Basis of a scheme ideal, through the cache when one is configured.
    pub fn scheme_basis(&self, tag: &SchemeTag, n: usize) -> Result<(Basis, Lookup)> {
        let ideal = build_ideal(tag, n)?;
        let key = SchemeKey::new(tag.clone(), n);
        let ring = Ring::matrix_pair(n)?;
        let mut lookup = Lookup::Miss;
        if let Some(cache) = &self.cache {
            let (hit, how) = cache.load(&key, &self.order, &ideal, &ring);
            if let Some(gb) = hit {
                return Ok((gb, how));
            }
            lookup = how;
        }
        let gb = self.basis_of(&ideal)?;
        if let Some(cache) = &self.cache {
            cache
                .store(&key, &self.order, &gb, &ring)
                .map_err(|e| Error::InvalidInput(format!("cache write: {e}")))?;
        }
        Ok((gb, lookup))
    }

    pub fn invariants(&self, tag: &SchemeTag, n: usize) -> Result<Invariants> {
        let (gb, _) = self.scheme_basis(tag, n)?;
        let ring = Ring::matrix_pair(n)?;
        let bidegree = bidegree_from_basis(&gb, &ring)?;
        let dimension =
            monomial_dimension(&MonomialIdeal::new(ring.nvars(), gb.leading_monomials()))?;
        Ok(Invariants {
            dimension,
            bidegree,
        })
    }
}
