//! Ideals of a ring context: canonical generator lists, powers, and the two
//! generator-count invariants μ(I) and length(I/I²).
//!
//! Powers are the cost center of every Hilbert–Samuel computation. `I^(j+1)`
//! is built incrementally as `I^j · I`, pruning any product whose normal form
//! against the already-accepted products (plus the quotient modulus) is zero
//! — such a product adds nothing to the ideal, and dropping it keeps the
//! Buchberger inputs far from the combinatorial explosion of all k-fold
//! products.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::error::Error;
use crate::groebner::{self, Colength};
use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::RingContext;
use crate::Result;

/// An ideal given by a canonicalized generator list: generators are nonzero,
/// monic, deduplicated, and sorted, so equal inputs produce equal values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    ring: Arc<RingContext>,
    gens: Vec<Polynomial>,
}

/// Total order on canonical polynomials: by term list, monomials first
/// (descending storage order), then coefficients.
fn poly_cmp(a: &Polynomial, b: &Polynomial) -> Ordering {
    let (ta, tb) = (a.terms(), b.terms());
    for ((ca, ma), (cb, mb)) in ta.iter().zip(tb.iter()) {
        match MonomialOrder::DegRevLex.compare(ma, mb) {
            Ordering::Equal => {}
            o => return o,
        }
        match ca.cmp(cb) {
            Ordering::Equal => {}
            o => return o,
        }
    }
    ta.len().cmp(&tb.len())
}

impl Ideal {
    /// Builds an ideal from generators in `ring`. Zero generators are
    /// dropped; an effectively empty list is rejected.
    pub fn new(ring: &Arc<RingContext>, gens: &[Polynomial]) -> Result<Self> {
        let mut canon: Vec<Polynomial> = Vec::with_capacity(gens.len());
        for g in gens {
            if g.ring() != ring {
                return Err(Error::RingMismatch(format!(
                    "generator in {} used in {}",
                    g.ring(),
                    ring
                )));
            }
            if g.is_zero() {
                continue;
            }
            let (lc, _) = g.leading_term(MonomialOrder::DegRevLex).expect("nonzero");
            canon.push(if lc.is_one() { g.clone() } else { g.scale(&lc.inv()) });
        }
        if canon.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        canon.sort_by(poly_cmp);
        canon.dedup();
        Ok(Ideal { ring: ring.clone(), gens: canon })
    }

    /// The maximal ideal (x_1, ..., x_v) of the ring.
    pub fn maximal(ring: &Arc<RingContext>) -> Self {
        let gens = (0..ring.nvars()).map(|i| Polynomial::variable(ring, i)).collect();
        Ideal { ring: ring.clone(), gens }
    }

    pub fn ring(&self) -> &Arc<RingContext> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    /// Canonical reduced Gröbner basis of the ideal (modulus included when
    /// the ring is a quotient).
    pub fn groebner(&self, order: MonomialOrder) -> Result<groebner::GroebnerBasis> {
        groebner::ideal_groebner(&self.gens, &self.ring, order)
    }

    /// length(ring/I) as a vector-space dimension, or infinite.
    pub fn colength(&self) -> Result<Colength> {
        groebner::colength(&self.gens, &self.ring)
    }

    pub fn is_m_primary(&self) -> Result<bool> {
        groebner::is_m_primary(&self.gens, &self.ring)
    }

    /// Product ideal: generated by all pairwise generator products, pruned.
    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch("product of ideals in different rings".into()));
        }
        let mut pruning = ProductPruner::new(&self.ring);
        for g in &self.gens {
            for h in &other.gens {
                pruning.offer(g.mul(h))?;
            }
        }
        Ideal::new(&self.ring, &pruning.accepted)
    }

    /// `I^k` for `k >= 1`, computed incrementally with pruning.
    pub fn pow(&self, k: u32) -> Result<Ideal> {
        let mut chain = self.powers_up_to(k)?;
        Ok(chain.pop().expect("k >= 1 yields a nonempty chain"))
    }

    /// The chain `[I, I^2, ..., I^k]`; each step reuses the previous power.
    pub fn powers_up_to(&self, k: u32) -> Result<Vec<Ideal>> {
        if k == 0 {
            return Err(Error::InvalidInput("ideal power requires k >= 1".into()));
        }
        let mut chain = Vec::with_capacity(k as usize);
        chain.push(self.clone());
        for _ in 1..k {
            let next = chain.last().unwrap().product(self)?;
            chain.push(next);
        }
        Ok(chain)
    }

    /// μ(I), the minimal number of generators, via Nakayama:
    /// μ(I) = length(I/mI) = colength(mI) − colength(I).
    pub fn minimal_generator_count(&self) -> Result<u64> {
        self.require_m_primary("minimal_generator_count")?;
        let m = Ideal::maximal(&self.ring);
        let mi = m.product(self)?;
        let a = mi.colength()?.finite().ok_or_else(|| {
            Error::InvariantViolation("mI of an m-primary ideal has finite colength".into())
        })?;
        let b = self.colength()?.finite().expect("m-primary implies finite");
        Ok(a - b)
    }

    /// length(I/I²) = colength(I²) − colength(I).
    pub fn length_mod_square(&self) -> Result<u64> {
        self.require_m_primary("length_mod_square")?;
        let sq = self.product(self)?;
        let a = sq.colength()?.finite().ok_or_else(|| {
            Error::InvariantViolation("I^2 of an m-primary ideal has finite colength".into())
        })?;
        let b = self.colength()?.finite().expect("m-primary implies finite");
        Ok(a - b)
    }

    pub(crate) fn require_m_primary(&self, what: &str) -> Result<()> {
        if !self.is_m_primary()? {
            return Err(Error::Precondition(format!(
                "{what} requires an m-primary ideal (proper, supported only at the origin)"
            )));
        }
        Ok(())
    }
}

/// Incremental acceptance of product generators: a candidate is dropped only
/// when it is provably already in the ideal generated by the accepted ones
/// (plus the quotient modulus), so pruning never changes the generated ideal.
///
/// Two membership witnesses are used: divisibility by an accepted monomial
/// (cheap, covers the bulk of products of monomial-rich ideals) and a zero
/// normal form against the accepted list (general).
struct ProductPruner {
    accepted: Vec<Polynomial>,
    with_modulus: Vec<Polynomial>,
    accepted_monos: Vec<crate::monomial::Monomial>,
}

impl ProductPruner {
    fn new(ring: &Arc<RingContext>) -> Self {
        let with_modulus = match ring.modulus() {
            Some(f) => vec![f.reinterpret_in(ring)],
            None => Vec::new(),
        };
        ProductPruner { accepted: Vec::new(), with_modulus, accepted_monos: Vec::new() }
    }

    fn offer(&mut self, candidate: Polynomial) -> Result<()> {
        if candidate.is_zero() {
            return Ok(());
        }
        // Cheap pre-filter: a monomial that is a multiple of an accepted
        // monomial would reduce to zero below anyway.
        let mono = (candidate.terms().len() == 1).then(|| candidate.terms()[0].1.clone());
        if let Some(m) = &mono {
            if self.accepted_monos.iter().any(|k| k.divides(m)) {
                return Ok(());
            }
        }
        let nf = groebner::normal_form(&candidate, &self.with_modulus, MonomialOrder::DegRevLex)?;
        if nf.is_zero() {
            return Ok(());
        }
        if let Some(m) = mono {
            self.accepted_monos.push(m);
        }
        self.accepted.push(candidate.clone());
        self.with_modulus.push(candidate);
        Ok(())
    }
}
