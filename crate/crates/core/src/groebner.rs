//! Division, Buchberger's algorithm, reduced bases and weight degenerations.

use std::cmp::Ordering;
use std::time::Instant;

use crate::polyring::{weight_initial_form, Monomial, Polynomial, TermOrder, WeightVector};
use crate::{Error, Field, Result};

/// Generators of an ideal together with a provenance label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealSpec<C> {
    pub generators: Vec<Polynomial<C>>,
    pub label: String,
}

impl<C: Field> IdealSpec<C> {
    /// Drops zero generators and exact duplicates, keeping first occurrences.
    pub fn new(label: impl Into<String>, generators: Vec<Polynomial<C>>) -> Self {
        let mut out: Vec<Polynomial<C>> = Vec::with_capacity(generators.len());
        for g in generators {
            if !g.is_zero() && !out.contains(&g) {
                out.push(g);
            }
        }
        IdealSpec {
            generators: out,
            label: label.into(),
        }
    }

    pub fn nvars(&self) -> Option<usize> {
        self.generators.first().map(|g| g.nvars())
    }

    pub fn is_monomial(&self) -> bool {
        self.generators.iter().all(|g| g.is_monomial())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(|g| g.is_homogeneous())
    }
}

/// Polynomial with terms sorted descending under a fixed order.
#[derive(Clone, Debug)]
struct Sorted<C> {
    terms: Vec<(Monomial, C)>,
}

impl<C: Field> Sorted<C> {
    fn new(p: &Polynomial<C>, order: &TermOrder) -> Self {
        let mut terms = p.terms().to_vec();
        if *order != TermOrder::Grevlex {
            terms.sort_by(|a, b| order.compare(&b.0, &a.0));
        }
        Sorted { terms }
    }

    fn to_poly(&self, nvars: usize) -> Polynomial<C> {
        Polynomial::from_terms(nvars, self.terms.iter().cloned())
    }

    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn make_monic(&mut self) {
        let inv = self.terms[0].1.inv();
        if inv.is_one() {
            return;
        }
        for t in &mut self.terms {
            t.1 = t.1.clone() * inv.clone();
        }
    }

    /// `self[from..] - c * m * g`, where the caller guarantees every term of
    /// `self[..from]` is larger than `m * lm(g)` (so the prefix is untouched).
    fn sub_mul_from(&mut self, from: usize, c: &C, m: &Monomial, g: &Sorted<C>, order: &TermOrder) {
        let tail = self.terms.split_off(from);
        let mut out = Vec::with_capacity(tail.len() + g.terms.len());
        let mut a = tail.into_iter().peekable();
        let mut b = g
            .terms
            .iter()
            .map(|(t, k)| (t * m, -(k.clone() * c.clone())))
            .peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (Some(x), Some(y)) => order.compare(&x.0, &y.0),
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (None, None) => break,
            };
            match ord {
                Ordering::Greater => out.push(a.next().unwrap()),
                Ordering::Less => out.push(b.next().unwrap()),
                Ordering::Equal => {
                    let (mono, x) = a.next().unwrap();
                    let (_, y) = b.next().unwrap();
                    let s = x + y;
                    if !s.is_zero() {
                        out.push((mono, s));
                    }
                }
            }
        }
        self.terms.extend(out);
    }
}

fn find_reducer<'a, C>(
    m: &Monomial,
    basis: impl Iterator<Item = &'a Sorted<C>>,
) -> Option<&'a Sorted<C>>
where
    C: 'a,
{
    basis.into_iter().find(|g| g.terms[0].0.divides(m))
}

/// Full reduction: repeatedly cancels the largest reducible term, choosing
/// the first listed basis element whose leading term divides it.
fn reduce_full<'a, C: Field + 'a>(
    mut p: Sorted<C>,
    basis: &[&'a Sorted<C>],
    order: &TermOrder,
) -> Sorted<C> {
    let mut pos = 0;
    while pos < p.terms.len() {
        let reducer = find_reducer(&p.terms[pos].0, basis.iter().copied());
        match reducer {
            Some(g) => {
                let (m, c) = &p.terms[pos];
                let q = m.checked_div(g.lm()).expect("leading term divides");
                let k = c.clone() / g.terms[0].1.clone();
                p.sub_mul_from(pos, &k, &q, g, order);
            }
            None => pos += 1,
        }
    }
    p
}

/// Remainder of `p` on division by `basis` under `order`.
///
/// The largest reducible term is always reduced first, against the first
/// element of `basis` (in listed order) whose leading term divides it.
pub fn normal_form<C: Field>(
    p: &Polynomial<C>,
    basis: &[Polynomial<C>],
    order: &TermOrder,
) -> Polynomial<C> {
    let sorted: Vec<Sorted<C>> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| Sorted::new(g, order))
        .collect();
    let refs: Vec<&Sorted<C>> = sorted.iter().collect();
    reduce_full(Sorted::new(p, order), &refs, order).to_poly(p.nvars())
}

/// Reduced Gröbner basis: monic, interreduced, sorted by ascending leading
/// monomial. Uniquely determined by the ideal and the order.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<C> {
    pub order: TermOrder,
    pub basis: Vec<Polynomial<C>>,
    pub source: IdealSpec<C>,
    nvars: usize,
    sorted: Vec<Sorted<C>>,
}

impl<C: Field> PartialEq for GroebnerBasis<C> {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.basis == other.basis
    }
}

impl<C: Field> GroebnerBasis<C> {
    /// Wraps a list already known to be a reduced basis (e.g. loaded from a
    /// cache). Use [`GroebnerBasis::verify`] before trusting it.
    pub fn from_reduced(
        order: TermOrder,
        basis: Vec<Polynomial<C>>,
        source: IdealSpec<C>,
        nvars: usize,
    ) -> Self {
        let mut sorted: Vec<Sorted<C>> = basis.iter().map(|g| Sorted::new(g, &order)).collect();
        sorted.sort_by(|a, b| order.compare(a.lm(), b.lm()));
        let basis = sorted.iter().map(|s| s.to_poly(nvars)).collect();
        GroebnerBasis {
            order,
            basis,
            source,
            nvars,
            sorted,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.sorted.iter().map(|s| s.lm().clone()).collect()
    }

    /// The unit ideal has basis `{1}`.
    pub fn is_unit(&self) -> bool {
        self.sorted.iter().any(|s| s.lm().is_one())
    }

    pub fn reduce(&self, p: &Polynomial<C>) -> Polynomial<C> {
        let refs: Vec<&Sorted<C>> = self.sorted.iter().collect();
        reduce_full(Sorted::new(p, &self.order), &refs, &self.order).to_poly(self.nvars)
    }

    pub fn contains(&self, p: &Polynomial<C>) -> bool {
        self.reduce(p).is_zero()
    }

    /// Buchberger's criterion: every S-polynomial reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        self.spair_violations(usize::MAX) == 0
    }

    /// Checks at most `limit` S-pairs (in index order) and counts failures.
    ///
    /// Pairs with coprime leading monomials are skipped, as are pairs `(i, j)`
    /// with some `k` whose leading monomial divides `lcm_ij` while `lcm_ik`
    /// and `lcm_kj` are proper divisors of it; by induction on `lcm` the
    /// remaining pairs decide the criterion.
    pub fn spair_violations(&self, limit: usize) -> usize {
        let refs: Vec<&Sorted<C>> = self.sorted.iter().collect();
        let lms: Vec<&Monomial> = self.sorted.iter().map(|g| g.lm()).collect();
        let mut checked = 0;
        let mut bad = 0;
        for j in 0..self.sorted.len() {
            for i in 0..j {
                if checked >= limit {
                    return bad;
                }
                if lms[i].is_coprime(lms[j]) {
                    continue;
                }
                let l = lms[i].lcm(lms[j]);
                let chain = (0..lms.len()).any(|k| {
                    k != i
                        && k != j
                        && lms[k].divides(&l)
                        && lms[i].lcm(lms[k]) != l
                        && lms[k].lcm(lms[j]) != l
                });
                if chain {
                    continue;
                }
                checked += 1;
                if let Some(s) = spoly(&self.sorted[i], &self.sorted[j], &self.order) {
                    if !reduce_full(s, &refs, &self.order).terms.is_empty() {
                        bad += 1;
                    }
                }
            }
        }
        bad
    }

    /// Monic, interreduced, and no leading term divides another term.
    pub fn is_reduced(&self) -> bool {
        self.sorted.iter().enumerate().all(|(i, g)| {
            g.terms[0].1.is_one()
                && self
                    .sorted
                    .iter()
                    .enumerate()
                    .all(|(j, h)| i == j || g.terms.iter().all(|(m, _)| !h.lm().divides(m)))
        })
    }

    /// Full consistency check used for cached bases: reducedness, the
    /// S-pair criterion on the first `spair_limit` pairs, and that every
    /// source generator reduces to zero.
    pub fn verify(&self, spair_limit: usize) -> bool {
        self.is_reduced()
            && self.spair_violations(spair_limit) == 0
            && self.source.generators.iter().all(|g| self.contains(g))
    }

    /// One canonical polynomial per line, sorted by leading monomial.
    pub fn to_text(&self, render: impl Fn(&Polynomial<C>) -> String) -> String {
        let mut out = String::new();
        for g in &self.basis {
            out.push_str(&render(g));
            out.push('\n');
        }
        out
    }
}

fn spoly<C: Field>(f: &Sorted<C>, g: &Sorted<C>, order: &TermOrder) -> Option<Sorted<C>> {
    let l = f.lm().lcm(g.lm());
    let mf = l.checked_div(f.lm())?;
    let mg = l.checked_div(g.lm())?;
    let cf = f.terms[0].1.inv();
    let cg = g.terms[0].1.inv();
    let mut s = Sorted {
        terms: f
            .terms
            .iter()
            .map(|(m, c)| (m * &mf, c.clone() * cf.clone()))
            .collect(),
    };
    s.sub_mul_from(0, &cg, &mg, g, order);
    Some(s)
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Options for [`buchberger_with`].
#[derive(Clone, Debug, Default)]
pub struct BuchbergerOptions {
    /// Abort with [`Error::Timeout`] once this instant has passed.
    pub deadline: Option<Instant>,
}

/// Reduced Gröbner basis of `ideal` under `order`.
pub fn buchberger<C: Field>(ideal: &IdealSpec<C>, order: &TermOrder) -> GroebnerBasis<C> {
    buchberger_with(ideal, order, &BuchbergerOptions::default()).expect("no deadline set")
}

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// degree, ties by pair indices) and the Gebauer–Möller installation of the
/// coprime and chain criteria.
pub fn buchberger_with<C: Field>(
    ideal: &IdealSpec<C>,
    order: &TermOrder,
    opts: &BuchbergerOptions,
) -> Result<GroebnerBasis<C>> {
    let nvars = match ideal.nvars() {
        Some(n) => n,
        None => {
            return Ok(GroebnerBasis {
                order: order.clone(),
                basis: Vec::new(),
                source: ideal.clone(),
                nvars: 0,
                sorted: Vec::new(),
            })
        }
    };
    let mut polys: Vec<Sorted<C>> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut inputs: Vec<Sorted<C>> = ideal
        .generators
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| Sorted::new(g, order))
        .collect();
    inputs.sort_by(|a, b| order.compare(a.lm(), b.lm()));
    for g in inputs {
        let refs: Vec<&Sorted<C>> = polys
            .iter()
            .zip(&active)
            .filter(|(_, &a)| a)
            .map(|(p, _)| p)
            .collect();
        let mut h = reduce_full(g, &refs, order);
        if h.terms.is_empty() {
            continue;
        }
        h.make_monic();
        install(&mut polys, &mut active, &mut pairs, h);
    }

    while !pairs.is_empty() {
        if let Some(deadline) = opts.deadline {
            if Instant::now() > deadline {
                return Err(Error::Timeout);
            }
        }
        let best = (0..pairs.len())
            .min_by_key(|&k| (pairs[k].lcm.degree(), pairs[k].i, pairs[k].j))
            .unwrap();
        let pair = pairs.swap_remove(best);
        let s = match spoly(&polys[pair.i], &polys[pair.j], order) {
            Some(s) => s,
            None => continue,
        };
        let refs: Vec<&Sorted<C>> = polys
            .iter()
            .zip(&active)
            .filter(|(_, &a)| a)
            .map(|(p, _)| p)
            .collect();
        let mut h = reduce_full(s, &refs, order);
        if h.terms.is_empty() {
            continue;
        }
        h.make_monic();
        install(&mut polys, &mut active, &mut pairs, h);
    }

    Ok(reduce_basis(polys, active, ideal.clone(), order, nvars))
}

/// Gebauer–Möller update for a new element `h`.
fn install<C: Field>(
    polys: &mut Vec<Sorted<C>>,
    active: &mut Vec<bool>,
    pairs: &mut Vec<Pair>,
    h: Sorted<C>,
) {
    let hidx = polys.len();
    let hlm = h.lm().clone();
    let candidates: Vec<Pair> = (0..polys.len())
        .filter(|&g| active[g])
        .map(|g| Pair {
            i: g,
            j: hidx,
            lcm: hlm.lcm(polys[g].lm()),
        })
        .collect();

    // chain criterion among the new pairs
    let mut kept: Vec<(Pair, bool)> = Vec::new();
    for (k, p) in candidates.iter().enumerate() {
        let coprime = hlm.is_coprime(polys[p.i].lm());
        let dominated_later = candidates[k + 1..].iter().any(|q| q.lcm.divides(&p.lcm));
        let dominated_kept = kept.iter().any(|(q, _)| q.lcm.divides(&p.lcm));
        if coprime || (!dominated_later && !dominated_kept) {
            kept.push((p.clone(), coprime));
        }
    }

    // old pairs made redundant by h
    pairs.retain(|p| {
        !(hlm.divides(&p.lcm)
            && hlm.lcm(polys[p.i].lm()) != p.lcm
            && hlm.lcm(polys[p.j].lm()) != p.lcm)
    });
    // coprime leading terms: the S-polynomial reduces to zero
    pairs.extend(
        kept.into_iter()
            .filter(|(_, coprime)| !coprime)
            .map(|(p, _)| p),
    );

    for g in 0..polys.len() {
        if active[g] && hlm.divides(polys[g].lm()) {
            active[g] = false;
        }
    }
    polys.push(h);
    active.push(true);
}

fn reduce_basis<C: Field>(
    polys: Vec<Sorted<C>>,
    active: Vec<bool>,
    source: IdealSpec<C>,
    order: &TermOrder,
    nvars: usize,
) -> GroebnerBasis<C> {
    let mut gens: Vec<Sorted<C>> = polys
        .into_iter()
        .zip(active)
        .filter(|(_, a)| *a)
        .map(|(p, _)| p)
        .collect();
    gens.sort_by(|a, b| order.compare(a.lm(), b.lm()));
    // minimal: drop elements whose leading term is divisible by another's
    let mut minimal: Vec<Sorted<C>> = Vec::new();
    for g in gens {
        if !minimal.iter().any(|m| m.lm().divides(g.lm())) {
            minimal.push(g);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<&Sorted<C>> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != k)
            .map(|(_, g)| g)
            .collect();
        let mut g = minimal[k].clone();
        let head = g.terms.remove(0);
        let mut tail = reduce_full(g, &others, order);
        tail.terms.insert(0, head);
        tail.make_monic();
        reduced.push(tail);
    }
    let basis = reduced.iter().map(|s| s.to_poly(nvars)).collect();
    GroebnerBasis {
        order: order.clone(),
        basis,
        source,
        nvars,
        sorted: reduced,
    }
}

/// The ideal generated by the leading monomials of a reduced basis (already
/// a minimal monomial generating set).
pub fn initial_ideal<C: Field>(gb: &GroebnerBasis<C>) -> IdealSpec<C> {
    IdealSpec::new(
        format!("in({})", gb.source.label),
        gb.leading_monomials()
            .into_iter()
            .map(|m| Polynomial::monomial(m, C::one()))
            .collect(),
    )
}

pub fn ideal_member<C: Field>(p: &Polynomial<C>, gb: &GroebnerBasis<C>) -> bool {
    gb.contains(p)
}

/// Mutual containment: every generator of each ideal reduces to zero modulo
/// a Gröbner basis of the other.
pub fn ideal_equal<C: Field>(a: &IdealSpec<C>, b: &IdealSpec<C>, order: &TermOrder) -> bool {
    let ga = buchberger(a, order);
    let gb = buchberger(b, order);
    b.generators.iter().all(|g| ga.contains(g)) && a.generators.iter().all(|g| gb.contains(g))
}

/// Ideal equality decided from already computed bases of both sides.
pub fn bases_generate_same_ideal<C: Field>(a: &GroebnerBasis<C>, b: &GroebnerBasis<C>) -> bool {
    b.basis.iter().all(|g| a.contains(g)) && a.basis.iter().all(|g| b.contains(g))
}

/// The ideal of `w`-initial forms (minimal-weight parts) of all elements of
/// `ideal`.
///
/// Homogeneous input goes through a Gröbner basis for the `w`-refined
/// order directly. Inhomogeneous input goes through
/// [`initial_forms_ideal_homogenized`].
pub fn initial_forms_ideal<C: Field>(
    ideal: &IdealSpec<C>,
    w: &WeightVector,
) -> Result<IdealSpec<C>> {
    initial_forms_ideal_with(ideal, w, &BuchbergerOptions::default())
}

pub fn initial_forms_ideal_with<C: Field>(
    ideal: &IdealSpec<C>,
    w: &WeightVector,
    opts: &BuchbergerOptions,
) -> Result<IdealSpec<C>> {
    if !ideal.is_homogeneous() {
        return initial_forms_ideal_homogenized(ideal, w, opts);
    }
    let gb = buchberger_with(ideal, &TermOrder::Weighted(w.clone()), opts)?;
    let forms = gb
        .basis
        .iter()
        .map(|g| weight_initial_form(g, w))
        .collect::<Result<Vec<_>>>()?;
    Ok(IdealSpec::new(format!("in_w({})", ideal.label), forms))
}

/// Initial-form ideal through homogenization: adjoin `h` of weight zero,
/// form the homogenized ideal from a degree-compatible basis, take a basis
/// of that under the `(w, 0)`-refined order, then set `h = 1` in the
/// initial forms.
pub fn initial_forms_ideal_homogenized<C: Field>(
    ideal: &IdealSpec<C>,
    w: &WeightVector,
    opts: &BuchbergerOptions,
) -> Result<IdealSpec<C>> {
    let grevlex = buchberger_with(ideal, &TermOrder::Grevlex, opts)?;
    let homog = IdealSpec::new(
        format!("{}^h", ideal.label),
        grevlex.basis.iter().map(|g| g.homogenize()).collect(),
    );
    let wh = w.extended(0);
    let gb = buchberger_with(&homog, &TermOrder::Weighted(wh.clone()), opts)?;
    let forms = gb
        .basis
        .iter()
        .map(|g| weight_initial_form(g, &wh).map(|f| f.dehomogenize()))
        .collect::<Result<Vec<_>>>()?;
    Ok(IdealSpec::new(format!("in_w({})", ideal.label), forms))
}
