//! Buchberger engine and everything downstream of leading terms: normal
//! forms, canonical reduced Gröbner bases, standard monomials, colengths,
//! and the origin-support test.
//!
//! Determinism contract: the reduced Gröbner basis of an ideal is unique for
//! a fixed monomial order once elements are monic and sorted, so the output
//! here is independent of generator order and internal scheduling. Reduction
//! always rewrites the largest reducible term using the first listed reducer;
//! pair selection takes the smallest lcm degree with a total tiebreak.
//!
//! Quotient rings are handled by lifting: operations that take a ring context
//! append the hypersurface modulus to the generator list, so lengths computed
//! here are lengths in `R/(f)`. Because every ideal downstream is supported
//! only at the origin, global colengths agree with local lengths and global
//! orders suffice (no Mora machinery).

use std::cmp::Ordering;
use std::collections::{BinaryHeap, HashMap, HashSet};
use std::sync::Arc;

use crate::coeff::Coefficient;
use crate::error::Error;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::ring::RingContext;
use crate::Result;

/// Cells allowed in the standard-monomial bounding box before giving up.
const MAX_BOX_CELLS: u64 = 16_000_000;

/// A canonical reduced Gröbner basis: monic, interreduced, sorted by leading
/// monomial ascending under `order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    elements: Vec<Polynomial>,
    lms: Vec<Monomial>,
    order: MonomialOrder,
    ring: Arc<RingContext>,
}

/// The monomials outside the leading-term ideal — a vector-space basis of the
/// quotient — or a marker that there are infinitely many.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StandardMonomialSet {
    Finite(Vec<Monomial>),
    Infinite,
}

impl StandardMonomialSet {
    pub fn count(&self) -> Option<u64> {
        match self {
            StandardMonomialSet::Finite(v) => Some(v.len() as u64),
            StandardMonomialSet::Infinite => None,
        }
    }
}

/// A quotient-algebra dimension: finite length or infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Colength {
    Finite(u64),
    Infinite,
}

impl Colength {
    pub fn finite(&self) -> Option<u64> {
        match self {
            Colength::Finite(n) => Some(*n),
            Colength::Infinite => None,
        }
    }
}

impl std::fmt::Display for Colength {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Colength::Finite(n) => write!(f, "{n}"),
            Colength::Infinite => write!(f, "infinite"),
        }
    }
}

// ---------------------------------------------------------------------------
// Reduction

/// A monic reducer with its tail split off for the rewrite loop.
struct Reducer {
    lm: Monomial,
    tail: Vec<(Coefficient, Monomial)>,
}

impl Reducer {
    fn from_monic(p: &Polynomial, order: MonomialOrder) -> Self {
        let (lc, lm) = p.leading_term(order).expect("nonzero reducer");
        debug_assert!(lc.is_one(), "reducers must be monic");
        let lm = lm.clone();
        let tail = p
            .terms()
            .iter()
            .filter(|(_, m)| *m != lm)
            .cloned()
            .collect();
        Reducer { lm, tail }
    }
}

/// Max-heap entry ordered by the active monomial order.
struct HeapMono {
    m: Monomial,
    order: MonomialOrder,
}

impl PartialEq for HeapMono {
    fn eq(&self, other: &Self) -> bool {
        self.order.compare(&self.m, &other.m) == Ordering::Equal
    }
}
impl Eq for HeapMono {}
impl PartialOrd for HeapMono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for HeapMono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order.compare(&self.m, &other.m)
    }
}

/// Full reduction of `p` modulo the reducer list. Terms are processed from
/// the largest down; each reducible term is rewritten with the first listed
/// reducer whose leading monomial divides it, and irreducible terms are
/// emitted to the remainder. Terminates because the order is global.
fn reduce_full(p: &Polynomial, reducers: &[Reducer], order: MonomialOrder) -> Polynomial {
    if p.is_zero() || reducers.is_empty() {
        return p.clone();
    }
    let ring = p.ring().clone();
    let mut map: HashMap<Monomial, Coefficient> = HashMap::with_capacity(p.terms().len() * 2);
    let mut heap: BinaryHeap<HeapMono> = BinaryHeap::with_capacity(p.terms().len() * 2);
    for (c, m) in p.terms() {
        map.insert(m.clone(), c.clone());
        heap.push(HeapMono { m: m.clone(), order });
    }
    let mut remainder: Vec<(Coefficient, Monomial)> = Vec::new();
    while let Some(top) = heap.pop() {
        let m = top.m;
        // Stale heap entries (cancelled or already emitted) are skipped.
        let Some(c) = map.remove(&m) else { continue };
        if c.is_zero() {
            continue;
        }
        match reducers.iter().find(|r| r.lm.divides(&m)) {
            Some(r) => {
                // work -= c * (m / r.lm) * r; the leading term cancels by
                // construction, leaving only the shifted tail.
                let q = m.checked_div(&r.lm).expect("divisibility checked");
                for (tc, tm) in &r.tail {
                    let mm = tm.mul(&q);
                    let delta = c.mul(tc).neg();
                    match map.get_mut(&mm) {
                        Some(acc) => *acc = acc.add(&delta),
                        None => {
                            map.insert(mm.clone(), delta);
                            heap.push(HeapMono { m: mm, order });
                        }
                    }
                }
            }
            None => remainder.push((c, m)),
        }
    }
    Polynomial::from_terms(&ring, remainder)
}

/// Normal form of `p` against an arbitrary polynomial list (zeros ignored).
/// `p − result` lies in the ideal generated by `basis`, and no term of the
/// result is divisible by any basis leading monomial.
pub fn normal_form(
    p: &Polynomial,
    basis: &[Polynomial],
    order: MonomialOrder,
) -> Result<Polynomial> {
    for b in basis {
        if b.ring() != p.ring() {
            return Err(Error::RingMismatch(format!(
                "normal form across rings {} and {}",
                p.ring(),
                b.ring()
            )));
        }
    }
    let reducers: Vec<Reducer> = basis
        .iter()
        .filter(|b| !b.is_zero())
        .map(|b| {
            let (lc, _) = b.leading_term(order).expect("nonzero");
            let monic = if lc.is_one() { b.clone() } else { b.scale(&lc.inv()) };
            Reducer::from_monic(&monic, order)
        })
        .collect();
    Ok(reduce_full(p, &reducers, order))
}

// ---------------------------------------------------------------------------
// Buchberger

struct GbElem {
    poly: Polynomial,
    lm: Monomial,
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    deg: u32,
}

fn pair_key(i: usize, j: usize) -> (usize, usize) {
    if i < j {
        (i, j)
    } else {
        (j, i)
    }
}

fn monic(p: &Polynomial, order: MonomialOrder) -> Polynomial {
    let (lc, _) = p.leading_term(order).expect("nonzero");
    if lc.is_one() {
        p.clone()
    } else {
        p.scale(&lc.inv())
    }
}

fn s_polynomial(f: &GbElem, g: &GbElem, lcm: &Monomial, ring: &Arc<RingContext>) -> Polynomial {
    let one = ring.field().one();
    let uf = lcm.checked_div(&f.lm).expect("lcm divisibility");
    let ug = lcm.checked_div(&g.lm).expect("lcm divisibility");
    f.poly.mul_term(&one, &uf).sub(&g.poly.mul_term(&one, &ug))
}

/// Computes the canonical reduced Gröbner basis of the ideal generated by
/// `gens` under `order`. Fails with [`Error::ZeroIdeal`] when every generator
/// is zero (the zero ideal has no meaningful basis here).
pub fn buchberger(gens: &[Polynomial], order: MonomialOrder) -> Result<GroebnerBasis> {
    let first = gens
        .first()
        .ok_or_else(|| Error::InvalidInput("empty generator list".into()))?;
    let ring = first.ring().clone();
    for g in gens {
        if g.ring() != &ring {
            return Err(Error::RingMismatch(format!(
                "generators span rings {} and {}",
                ring,
                g.ring()
            )));
        }
    }
    let nonzero: Vec<&Polynomial> = gens.iter().filter(|g| !g.is_zero()).collect();
    if nonzero.is_empty() {
        return Err(Error::ZeroIdeal);
    }

    // Monomial ideals need no S-pairs: the reduced basis is exactly the set
    // of divisibility-minimal generator monomials, made monic.
    if nonzero.iter().all(|g| g.terms().len() == 1) {
        let monos: Vec<Monomial> = nonzero.iter().map(|g| g.terms()[0].1.clone()).collect();
        let minimal = minimal_monomials(monos);
        let elements: Vec<Polynomial> =
            minimal.into_iter().map(|m| Polynomial::from_monomial(&ring, m)).collect();
        return Ok(finish_basis(elements, order, ring));
    }

    let mut basis: Vec<GbElem> = Vec::new();
    let mut reducers: Vec<Reducer> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();

    let push_elem = |p: Polynomial,
                         basis: &mut Vec<GbElem>,
                         reducers: &mut Vec<Reducer>,
                         pairs: &mut Vec<Pair>,
                         pending: &mut HashSet<(usize, usize)>| {
        let p = monic(&p, order);
        let lm = p.leading_term(order).expect("nonzero").1.clone();
        reducers.push(Reducer::from_monic(&p, order));
        let new = basis.len();
        for (k, e) in basis.iter().enumerate() {
            let lcm = e.lm.lcm(&lm);
            let deg = lcm.degree();
            pairs.push(Pair { i: k, j: new, lcm, deg });
            pending.insert(pair_key(k, new));
        }
        basis.push(GbElem { poly: p, lm });
    };

    for g in &nonzero {
        push_elem((*g).clone(), &mut basis, &mut reducers, &mut pairs, &mut pending);
    }

    while !pairs.is_empty() {
        // Normal selection strategy: smallest lcm degree, with the order on
        // lcms and then the index pair as a total tiebreak.
        let mut best = 0;
        for k in 1..pairs.len() {
            let a = &pairs[k];
            let b = &pairs[best];
            let better = match a.deg.cmp(&b.deg) {
                Ordering::Less => true,
                Ordering::Greater => false,
                Ordering::Equal => match order.compare(&a.lcm, &b.lcm) {
                    Ordering::Less => true,
                    Ordering::Greater => false,
                    Ordering::Equal => (a.i, a.j) < (b.i, b.j),
                },
            };
            if better {
                best = k;
            }
        }
        let pair = pairs.swap_remove(best);
        pending.remove(&pair_key(pair.i, pair.j));

        // Product criterion: coprime leading monomials reduce to zero.
        if basis[pair.i].lm.is_coprime_with(&basis[pair.j].lm) {
            continue;
        }
        // Chain criterion: if some other leading monomial divides the lcm and
        // both side pairs were already treated, this pair is redundant.
        let chained = (0..basis.len()).any(|k| {
            k != pair.i
                && k != pair.j
                && basis[k].lm.divides(&pair.lcm)
                && !pending.contains(&pair_key(pair.i, k))
                && !pending.contains(&pair_key(pair.j, k))
        });
        if chained {
            continue;
        }

        let s = s_polynomial(&basis[pair.i], &basis[pair.j], &pair.lcm, &ring);
        let nf = reduce_full(&s, &reducers, order);
        if !nf.is_zero() {
            push_elem(nf, &mut basis, &mut reducers, &mut pairs, &mut pending);
        }
    }

    // Minimalize: drop elements whose leading monomial another strictly
    // divides; among equal leading monomials (possible only within the
    // original generators) keep the first.
    let lms: Vec<Monomial> = basis.iter().map(|e| e.lm.clone()).collect();
    let mut kept: Vec<Polynomial> = Vec::new();
    for (i, e) in basis.iter().enumerate() {
        let redundant = lms
            .iter()
            .enumerate()
            .any(|(j, m)| j != i && m.divides(&e.lm) && (*m != e.lm || j < i));
        if !redundant {
            kept.push(e.poly.clone());
        }
    }
    kept.sort_by(|a, b| {
        let la = a.leading_term(order).expect("nonzero").1;
        let lb = b.leading_term(order).expect("nonzero").1;
        order.compare(la, lb)
    });

    // Interreduce: each element's tail reduced against the rest. Leading
    // monomials are pairwise non-divisible, so they survive reduction and
    // the result is the unique reduced basis.
    let mut reduced = kept.clone();
    for i in 0..reduced.len() {
        let others: Vec<Reducer> = reduced
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, p)| Reducer::from_monic(p, order))
            .collect();
        reduced[i] = monic(&reduce_full(&reduced[i], &others, order), order);
    }
    Ok(finish_basis(reduced, order, ring))
}

fn minimal_monomials(monos: Vec<Monomial>) -> Vec<Monomial> {
    let mut minimal: Vec<Monomial> = Vec::new();
    for m in monos {
        if minimal.iter().any(|k| k.divides(&m)) {
            continue;
        }
        minimal.retain(|k| !m.divides(k));
        minimal.push(m);
    }
    minimal
}

fn finish_basis(
    mut elements: Vec<Polynomial>,
    order: MonomialOrder,
    ring: Arc<RingContext>,
) -> GroebnerBasis {
    elements.sort_by(|a, b| {
        let la = a.leading_term(order).expect("nonzero").1;
        let lb = b.leading_term(order).expect("nonzero").1;
        order.compare(la, lb)
    });
    let lms = elements
        .iter()
        .map(|p| p.leading_term(order).expect("nonzero").1.clone())
        .collect();
    GroebnerBasis { elements, lms, order, ring }
}

/// Gröbner basis of the ideal `gens` *as an ideal of `ring`*: when the ring
/// is a quotient `k[x]/(f)`, the modulus joins the generators, so leading
/// terms and colengths describe the quotient ring's ideal.
pub fn ideal_groebner(
    gens: &[Polynomial],
    ring: &Arc<RingContext>,
    order: MonomialOrder,
) -> Result<GroebnerBasis> {
    let mut all: Vec<Polynomial> = Vec::with_capacity(gens.len() + 1);
    for g in gens {
        if g.ring() != ring {
            return Err(Error::RingMismatch(format!(
                "generator in {} used in {}",
                g.ring(),
                ring
            )));
        }
        all.push(g.clone());
    }
    if let Some(f) = ring.modulus() {
        all.push(f.reinterpret_in(ring));
    }
    buchberger(&all, order)
}

impl GroebnerBasis {
    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.lms
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn ring(&self) -> &Arc<RingContext> {
        &self.ring
    }

    /// The whole ring: some element is a nonzero constant.
    pub fn is_unit_ideal(&self) -> bool {
        self.lms.iter().any(|m| m.is_one())
    }

    /// Unique normal form modulo the ideal.
    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        if p.ring() != &self.ring {
            return Err(Error::RingMismatch(format!(
                "normal form of {} element against a {} basis",
                p.ring(),
                self.ring
            )));
        }
        let reducers: Vec<Reducer> =
            self.elements.iter().map(|e| Reducer::from_monic(e, self.order)).collect();
        Ok(reduce_full(p, &reducers, self.order))
    }

    /// Ideal membership: the normal form vanishes.
    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }

    /// Monomials outside the leading-term ideal. Finite exactly when every
    /// variable has a pure power among the leading terms; otherwise the
    /// `Infinite` marker is returned (a value, not an error — callers decide).
    pub fn standard_monomials(&self) -> Result<StandardMonomialSet> {
        if self.is_unit_ideal() {
            return Ok(StandardMonomialSet::Finite(Vec::new()));
        }
        let n = self.ring.nvars();
        // Box bounds from minimal pure powers; a missing one means infinity.
        let mut bounds: Vec<u16> = Vec::with_capacity(n);
        for v in 0..n {
            let b = self
                .lms
                .iter()
                .filter_map(|m| match m.pure_power() {
                    Some((i, k)) if i == v => Some(k),
                    _ => None,
                })
                .min();
            match b {
                Some(k) => bounds.push(k),
                None => return Ok(StandardMonomialSet::Infinite),
            }
        }
        let cells: u64 = bounds.iter().try_fold(1u64, |acc, &b| {
            acc.checked_mul(b as u64).filter(|&c| c <= MAX_BOX_CELLS)
        }).ok_or_else(|| {
            Error::ResourceCap(format!(
                "standard-monomial box exceeds {MAX_BOX_CELLS} cells"
            ))
        })?;

        // Divisibility sieve over the box: a cell lies in the leading-term
        // ideal iff it is a leading monomial or a coordinate predecessor is
        // already in the ideal.
        let mut strides = vec![1u64; n];
        for i in (0..n.saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * bounds[i + 1] as u64;
        }
        let gen_set: HashSet<&[u16]> = self
            .lms
            .iter()
            .filter(|m| m.exps().iter().zip(&bounds) .all(|(&e, &b)| e < b))
            .map(|m| m.exps())
            .collect();
        let mut in_ideal = vec![false; cells as usize];
        let mut exps = vec![0u16; n];
        let mut standard: Vec<Monomial> = Vec::new();
        for idx in 0..cells {
            let mut hit = gen_set.contains(exps.as_slice());
            if !hit {
                for i in 0..n {
                    if exps[i] > 0 && in_ideal[(idx - strides[i]) as usize] {
                        hit = true;
                        break;
                    }
                }
            }
            in_ideal[idx as usize] = hit;
            if !hit {
                standard.push(Monomial::new(exps.clone()));
            }
            // Odometer increment, last variable fastest (row-major).
            for i in (0..n).rev() {
                exps[i] += 1;
                if exps[i] < bounds[i] {
                    break;
                }
                exps[i] = 0;
            }
        }
        standard.sort_by(|a, b| self.order.compare(a, b));
        Ok(StandardMonomialSet::Finite(standard))
    }

    /// Test-support invariant check: confirms the reduced-basis properties
    /// and that every S-polynomial reduces to zero.
    pub fn verify(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::InvariantViolation(msg));
        for (i, e) in self.elements.iter().enumerate() {
            let (lc, lm) = match e.leading_term(self.order) {
                Some(t) => t,
                None => return fail("zero element in basis".into()),
            };
            if !lc.is_one() {
                return fail(format!("element {i} not monic"));
            }
            for (j, other) in self.lms.iter().enumerate() {
                if i != j && other.divides(lm) {
                    return fail(format!("leading monomial {j} divides {i}"));
                }
                if i != j && e.terms().iter().any(|(_, m)| other.divides(m)) {
                    return fail(format!("element {i} not reduced against {j}"));
                }
            }
        }
        for i in 0..self.elements.len() {
            for j in (i + 1)..self.elements.len() {
                let f = GbElem { poly: self.elements[i].clone(), lm: self.lms[i].clone() };
                let g = GbElem { poly: self.elements[j].clone(), lm: self.lms[j].clone() };
                let s = s_polynomial(&f, &g, &f.lm.lcm(&g.lm), &self.ring);
                if !self.normal_form(&s)?.is_zero() {
                    return fail(format!("S-polynomial ({i},{j}) does not reduce to zero"));
                }
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Colength and origin support

/// Vector-space dimension of `ring/(gens)` (plus the modulus when the ring is
/// a quotient), or `Infinite`.
pub fn colength(gens: &[Polynomial], ring: &Arc<RingContext>) -> Result<Colength> {
    colength_with_order(gens, ring, MonomialOrder::DegRevLex)
}

/// Colength under an explicit order — the value is order-invariant; the
/// parameter exists so tests can assert exactly that.
pub fn colength_with_order(
    gens: &[Polynomial],
    ring: &Arc<RingContext>,
    order: MonomialOrder,
) -> Result<Colength> {
    let gb = ideal_groebner(gens, ring, order)?;
    Ok(match gb.standard_monomials()? {
        StandardMonomialSet::Finite(v) => Colength::Finite(v.len() as u64),
        StandardMonomialSet::Infinite => Colength::Infinite,
    })
}

fn origin_support_data(
    gens: &[Polynomial],
    ring: &Arc<RingContext>,
) -> Result<(Option<u64>, bool)> {
    let gb = ideal_groebner(gens, ring, MonomialOrder::DegRevLex)?;
    let len = match gb.standard_monomials()? {
        StandardMonomialSet::Finite(v) => v.len() as u64,
        StandardMonomialSet::Infinite => return Ok((None, false)),
    };
    // Finite colength L makes each coordinate a linear operator on an
    // L-dimensional space; the ideal is supported only at the origin exactly
    // when each operator is nilpotent, i.e. x_i^(L+1) lies in the ideal.
    let k = len + 1;
    if k > u16::MAX as u64 {
        return Err(Error::ResourceCap(format!(
            "colength {len} exceeds the exponent range for the origin test"
        )));
    }
    let lifted = gb.ring().clone();
    for v in 0..ring.nvars() {
        let p = Polynomial::from_monomial(&lifted, Monomial::var_pow(v, k as u16, ring.nvars()));
        if !gb.contains(&p)? {
            return Ok((Some(len), false));
        }
    }
    Ok((Some(len), true))
}

/// True when every variable has a power inside the ideal (plus modulus): the
/// vanishing locus is contained in the origin.
pub fn supported_only_at_origin(gens: &[Polynomial], ring: &Arc<RingContext>) -> Result<bool> {
    Ok(origin_support_data(gens, ring)?.1)
}

/// The m-primary test: proper (colength ≥ 1) and supported only at the
/// origin. This is the precondition every Hilbert–Samuel entry point checks.
pub fn is_m_primary(gens: &[Polynomial], ring: &Arc<RingContext>) -> Result<bool> {
    let (len, origin_only) = origin_support_data(gens, ring)?;
    Ok(origin_only && len.is_some_and(|l| l >= 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::FieldKind;

    fn ring_xy() -> Arc<RingContext> {
        RingContext::polynomial_ring(FieldKind::Q, &["x", "y"]).unwrap()
    }

    fn vars2(r: &Arc<RingContext>) -> (Polynomial, Polynomial) {
        (Polynomial::variable(r, 0), Polynomial::variable(r, 1))
    }

    fn notfix_ring(n: u16) -> (Arc<RingContext>, Arc<RingContext>) {
        let base = ring_xy();
        let (x, y) = vars2(&base);
        let f = y.pow(2).sub(&x.pow(n as u32));
        let q = RingContext::quotient_ring(&base, f).unwrap();
        (base, q)
    }

    #[test]
    fn normal_form_binomial_flip() {
        let r = ring_xy();
        let (x, y) = vars2(&r);
        let f = y.pow(2).sub(&x.pow(8));
        // Leading monomial of y^2 - x^8 under degrevlex is x^8, so x^8
        // rewrites to y^2.
        let nf = normal_form(&x.pow(8), &[f.clone()], MonomialOrder::DegRevLex).unwrap();
        assert_eq!(nf, y.pow(2));
        // Self-reduction and irreducible constants.
        assert!(normal_form(&f, &[f.clone()], MonomialOrder::DegRevLex).unwrap().is_zero());
        let one = Polynomial::one(&r);
        assert_eq!(
            normal_form(&one, &[x.clone(), y.clone()], MonomialOrder::DegRevLex).unwrap(),
            one
        );
    }

    #[test]
    fn buchberger_already_a_basis() {
        let r = ring_xy();
        let (x, y) = vars2(&r);
        let gb = buchberger(&[x.pow(2), x.mul(&y)], MonomialOrder::DegRevLex).unwrap();
        assert_eq!(gb.elements(), &[x.mul(&y), x.pow(2)]);
        gb.verify().unwrap();
    }

    #[test]
    fn buchberger_linear_elimination() {
        let r = ring_xy();
        let (x, y) = vars2(&r);
        let gb =
            buchberger(&[x.add(&y), x.sub(&y)], MonomialOrder::DegRevLex).unwrap();
        assert_eq!(gb.elements(), &[y.clone(), x.clone()]);
        gb.verify().unwrap();
    }

    #[test]
    fn buchberger_notfix_generators() {
        let r = ring_xy();
        let (x, y) = vars2(&r);
        let f = y.pow(2).sub(&x.pow(8));
        let gb = buchberger(
            &[x.pow(6), x.pow(2).mul(&y), f],
            MonomialOrder::DegRevLex,
        )
        .unwrap();
        let lms: Vec<String> = gb
            .leading_monomials()
            .iter()
            .map(|m| m.format(r.var_names()))
            .collect();
        assert_eq!(lms, vec!["y^2", "x^2*y", "x^6"]);
        gb.verify().unwrap();
        // y^2 itself became a member via x^8 = x^2 * x^6.
        assert!(gb.contains(&y.pow(2)).unwrap());
        assert!(!gb.contains(&Polynomial::one(&r)).unwrap());
        assert!(gb.contains(&Polynomial::zero(&r)).unwrap());
    }

    #[test]
    fn permuting_generators_gives_identical_basis() {
        let r = ring_xy();
        let (x, y) = vars2(&r);
        let f = y.pow(2).sub(&x.pow(8));
        let gens = [x.pow(6), x.pow(2).mul(&y), f];
        let gb1 = buchberger(&gens, MonomialOrder::DegRevLex).unwrap();
        let gb2 = buchberger(
            &[gens[2].clone(), gens[0].clone(), gens[1].clone()],
            MonomialOrder::DegRevLex,
        )
        .unwrap();
        let gb3 = buchberger(
            &[gens[1].clone(), gens[2].clone(), gens[0].clone()],
            MonomialOrder::DegRevLex,
        )
        .unwrap();
        assert_eq!(gb1, gb2);
        assert_eq!(gb1, gb3);
    }

    #[test]
    fn zero_ideal_is_an_error() {
        let r = ring_xy();
        let z = Polynomial::zero(&r);
        assert!(matches!(
            buchberger(&[z.clone(), z], MonomialOrder::DegRevLex),
            Err(Error::ZeroIdeal)
        ));
    }

    #[test]
    fn unit_ideal_collapses() {
        let r = ring_xy();
        let (x, _) = vars2(&r);
        let gb = buchberger(
            &[x.clone(), x.sub(&Polynomial::one(&r))],
            MonomialOrder::DegRevLex,
        )
        .unwrap();
        assert!(gb.is_unit_ideal());
        assert_eq!(gb.elements(), &[Polynomial::one(&r)]);
        assert_eq!(
            gb.standard_monomials().unwrap(),
            StandardMonomialSet::Finite(vec![])
        );
    }

    #[test]
    fn standard_monomials_cube_of_maximal() {
        let r = ring_xy();
        let (x, y) = vars2(&r);
        // (x,y)^3
        let gens = [x.pow(3), x.pow(2).mul(&y), x.mul(&y.pow(2)), y.pow(3)];
        let gb = buchberger(&gens, MonomialOrder::DegRevLex).unwrap();
        match gb.standard_monomials().unwrap() {
            StandardMonomialSet::Finite(v) => {
                let names: Vec<String> = v.iter().map(|m| m.format(r.var_names())).collect();
                assert_eq!(names, vec!["1", "y", "x", "y^2", "x*y", "x^2"]);
            }
            StandardMonomialSet::Infinite => panic!("expected finite"),
        }
    }

    #[test]
    fn standard_monomials_notfix_shape() {
        let r = ring_xy();
        let (x, y) = vars2(&r);
        let gens = [x.pow(6), x.pow(2).mul(&y), y.pow(2)];
        let gb = buchberger(&gens, MonomialOrder::DegRevLex).unwrap();
        let sms = gb.standard_monomials().unwrap();
        assert_eq!(sms.count(), Some(8));
        if let StandardMonomialSet::Finite(v) = sms {
            let names: Vec<String> = v.iter().map(|m| m.format(r.var_names())).collect();
            assert_eq!(names, vec!["1", "y", "x", "x*y", "x^2", "x^3", "x^4", "x^5"]);
        }
    }

    #[test]
    fn principal_ideal_infinite_quotient() {
        let r = ring_xy();
        let (x, _) = vars2(&r);
        let gb = buchberger(&[x], MonomialOrder::DegRevLex).unwrap();
        assert_eq!(gb.standard_monomials().unwrap(), StandardMonomialSet::Infinite);
        assert_eq!(colength(&[Polynomial::variable(&r, 0)], &r).unwrap(), Colength::Infinite);
    }

    #[test]
    fn colength_in_quotient_ring() {
        let (_, q) = notfix_ring(8);
        let (x, y) = vars2(&q);
        let gens = [x.pow(6), x.pow(2).mul(&y)];
        assert_eq!(colength(&gens, &q).unwrap(), Colength::Finite(8));
        // All three orders agree.
        for order in [MonomialOrder::Lex, MonomialOrder::DegLex, MonomialOrder::DegRevLex] {
            assert_eq!(colength_with_order(&gens, &q, order).unwrap(), Colength::Finite(8));
        }
    }

    #[test]
    fn colength_maximal_powers() {
        let r = ring_xy();
        let (x, y) = vars2(&r);
        // (x,y)^(k+1) has colength C(k+2, 2).
        for k in 0u32..4 {
            let d = k + 1;
            let gens: Vec<Polynomial> = (0..=d)
                .map(|i| x.pow(d - i).mul(&y.pow(i)))
                .collect();
            // length(R/(x,y)^(k+1)) = C(k+2, 2) monomials of degree <= k.
            let expected = (((k + 2) * (k + 1)) / 2) as u64;
            assert_eq!(
                colength(&gens, &r).unwrap(),
                Colength::Finite(expected),
                "k={k}"
            );
        }
    }

    #[test]
    fn origin_support() {
        let (_, q) = notfix_ring(8);
        let (x, y) = vars2(&q);
        assert!(supported_only_at_origin(&[x.pow(6), x.pow(2).mul(&y)], &q).unwrap());
        assert!(is_m_primary(&[x.pow(6), x.pow(2).mul(&y)], &q).unwrap());

        let r = ring_xy();
        let (x, y) = vars2(&r);
        assert!(!supported_only_at_origin(&[x.clone()], &r).unwrap());
        // Supported at (1, 0): finite colength but not at the origin only.
        let shifted = [x.sub(&Polynomial::one(&r)), y.clone()];
        assert_eq!(colength(&shifted, &r).unwrap(), Colength::Finite(1));
        assert!(!supported_only_at_origin(&shifted, &r).unwrap());
        // Unit ideal: "supported only at origin" vacuously, but not m-primary.
        let unit = [x.clone(), x.sub(&Polynomial::one(&r))];
        assert!(supported_only_at_origin(&unit, &r).unwrap());
        assert!(!is_m_primary(&unit, &r).unwrap());
    }

    #[test]
    fn lex_basis_differs_but_colength_agrees() {
        let r = ring_xy();
        let (x, y) = vars2(&r);
        let gens = [x.pow(2).add(&y), y.pow(2)];
        let a = colength_with_order(&gens, &r, MonomialOrder::Lex).unwrap();
        let b = colength_with_order(&gens, &r, MonomialOrder::DegRevLex).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, Colength::Finite(4));
    }
}
