//! Exact multivariate polynomials over a shared ring context.
//!
//! Terms are stored sorted strictly descending under degrevlex with no zero
//! coefficients, so equal polynomials have identical representations and
//! derived equality is semantic equality. Arithmetic is exact; all operations
//! return canonical results.
//!
//! The storage order is a fixed internal convention. Computations that need a
//! different active order (Gröbner bases under lex, say) re-sort on entry;
//! see [`crate::groebner`].

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::coeff::Coefficient;
use crate::monomial::{Monomial, MonomialOrder};
use crate::ring::RingContext;

/// A polynomial in canonical form. Zero is the empty term list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Arc<RingContext>,
    /// Strictly descending under degrevlex; coefficients nonzero.
    terms: Vec<(Coefficient, Monomial)>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<RingContext>) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &Arc<RingContext>) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn constant(ring: &Arc<RingContext>, c: Coefficient) -> Self {
        assert_eq!(c.field(), ring.field(), "coefficient field mismatch");
        let terms = if c.is_zero() { Vec::new() } else { vec![(c, Monomial::one(ring.nvars()))] };
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn variable(ring: &Arc<RingContext>, i: usize) -> Self {
        Self::from_monomial(ring, Monomial::var(i, ring.nvars()))
    }

    pub fn from_monomial(ring: &Arc<RingContext>, m: Monomial) -> Self {
        assert_eq!(m.nvars(), ring.nvars(), "arity mismatch");
        Polynomial { ring: ring.clone(), terms: vec![(ring.field().one(), m)] }
    }

    /// Builds from arbitrary terms: merges duplicates, drops zeros, sorts.
    pub fn from_terms(ring: &Arc<RingContext>, raw: Vec<(Coefficient, Monomial)>) -> Self {
        let mut map: HashMap<Monomial, Coefficient> = HashMap::with_capacity(raw.len());
        for (c, m) in raw {
            assert_eq!(m.nvars(), ring.nvars(), "arity mismatch");
            assert_eq!(c.field(), ring.field(), "coefficient field mismatch");
            match map.get_mut(&m) {
                Some(acc) => *acc = acc.add(&c),
                None => {
                    map.insert(m, c);
                }
            }
        }
        Self::from_map(ring.clone(), map)
    }

    fn from_map(ring: Arc<RingContext>, map: HashMap<Monomial, Coefficient>) -> Self {
        let mut terms: Vec<(Coefficient, Monomial)> =
            map.into_iter().filter(|(_, c)| !c.is_zero()).map(|(m, c)| (c, m)).collect();
        terms.sort_by(|a, b| MonomialOrder::DegRevLex.compare(&b.1, &a.1));
        Polynomial { ring, terms }
    }

    pub fn ring(&self) -> &Arc<RingContext> {
        &self.ring
    }

    /// Terms in storage order (descending degrevlex).
    pub fn terms(&self) -> &[(Coefficient, Monomial)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.iter().all(|(_, m)| m.is_one())
    }

    fn assert_same_ring(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring,
            "ring context mismatch: {} vs {}",
            self.ring,
            other.ring
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_ring(other);
        let mut map: HashMap<Monomial, Coefficient> =
            self.terms.iter().map(|(c, m)| (m.clone(), c.clone())).collect();
        for (c, m) in &other.terms {
            match map.get_mut(m) {
                Some(acc) => *acc = acc.add(c),
                None => {
                    map.insert(m.clone(), c.clone());
                }
            }
        }
        Self::from_map(self.ring.clone(), map)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let terms = self.terms.iter().map(|(c, m)| (c.neg(), m.clone())).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_ring(other);
        let mut map: HashMap<Monomial, Coefficient> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ca, ma) in &self.terms {
            for (cb, mb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca.mul(cb);
                match map.get_mut(&m) {
                    Some(acc) => *acc = acc.add(&c),
                    None => {
                        map.insert(m, c);
                    }
                }
            }
        }
        Self::from_map(self.ring.clone(), map)
    }

    /// Multiplies by a single term. Sort order is preserved, so this skips
    /// the re-sort (term-by-monomial multiplication is order-preserving).
    pub fn mul_term(&self, c: &Coefficient, m: &Monomial) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(ci, mi)| (ci.mul(c), mi.mul(m))).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        self.mul_term(c, &Monomial::one(self.ring.nvars()))
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ring);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Largest term under `order`; `None` for zero.
    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Coefficient, &Monomial)> {
        match order {
            // Storage order is descending degrevlex, so the head is leading.
            MonomialOrder::DegRevLex => self.terms.first().map(|(c, m)| (c, m)),
            _ => self
                .terms
                .iter()
                .max_by(|a, b| order.compare(&a.1, &b.1))
                .map(|(c, m)| (c, m)),
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(_, m)| m.degree()).max()
    }

    /// Multiplicity at the origin: the minimal total degree of a term.
    /// `None` for the zero polynomial.
    pub fn order_of_vanishing(&self) -> Option<u32> {
        // Storage is degree-descending, so the tail term has minimal degree.
        self.terms.last().map(|(_, m)| m.degree())
    }

    /// The degree-`d` homogeneous part.
    pub fn homogeneous_component(&self, d: u32) -> Self {
        let terms =
            self.terms.iter().filter(|(_, m)| m.degree() == d).cloned().collect::<Vec<_>>();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// Substitutes `images[i]` for variable `i`. Images live in a common
    /// context (of any arity), which becomes the result's context.
    pub fn substitute(&self, images: &[Polynomial]) -> Self {
        assert_eq!(images.len(), self.ring.nvars(), "arity mismatch");
        let target = images
            .first()
            .map(|p| p.ring.clone())
            .expect("rings have at least one variable");
        for im in images {
            assert!(
                Arc::ptr_eq(&im.ring, &target) || im.ring == target,
                "substitution images span different rings"
            );
        }
        // Cache powers of each image up to its maximal exponent.
        let mut pow_cache: Vec<Vec<Polynomial>> =
            images.iter().map(|_| vec![Polynomial::one(&target)]).collect();
        let mut acc = Polynomial::zero(&target);
        for (c, m) in &self.terms {
            let mut term = Polynomial::constant(&target, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                let cache = &mut pow_cache[i];
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap().mul(&images[i]);
                    cache.push(next);
                }
                term = term.mul(&cache[e as usize]);
            }
            acc = acc.add(&term);
        }
        acc
    }

    /// `p(x + point)`: moves `point` to the origin.
    pub fn translate(&self, point: &[Coefficient]) -> Self {
        assert_eq!(point.len(), self.ring.nvars(), "arity mismatch");
        let images: Vec<Polynomial> = point
            .iter()
            .enumerate()
            .map(|(i, c)| {
                Polynomial::variable(&self.ring, i).add(&Polynomial::constant(&self.ring, c.clone()))
            })
            .collect();
        self.substitute(&images)
    }

    /// Exact division by `x_i^k`; every term must be divisible.
    pub fn divexact_var_power(&self, i: usize, k: u16) -> Self {
        let divisor = Monomial::var_pow(i, k, self.ring.nvars());
        let terms = self
            .terms
            .iter()
            .map(|(c, m)| {
                let q = m
                    .checked_div(&divisor)
                    .unwrap_or_else(|| panic!("term not divisible by variable power"));
                (c.clone(), q)
            })
            .collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Self {
        let mut raw = Vec::new();
        for (c, m) in &self.terms {
            let e = m.exps()[i];
            if e == 0 {
                continue;
            }
            let factor = self.ring.field().from_i64(e as i64);
            let dm = m.checked_div(&Monomial::var(i, self.ring.nvars())).unwrap();
            raw.push((c.mul(&factor), dm));
        }
        Self::from_terms(&self.ring, raw)
    }

    /// Evaluates at a point of coefficients.
    pub fn eval(&self, point: &[Coefficient]) -> Coefficient {
        assert_eq!(point.len(), self.ring.nvars(), "arity mismatch");
        let field = self.ring.field();
        let mut acc = field.zero();
        for (c, m) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                for _ in 0..e {
                    t = t.mul(&point[i]);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// When `p` involves only variable `i`, returns its dense coefficient
    /// vector `[c_0, c_1, ...]` (constant term first). `None` if another
    /// variable appears.
    pub fn univariate_in(&self, i: usize) -> Option<Vec<Coefficient>> {
        let deg = self
            .terms
            .iter()
            .map(|(_, m)| m.exps()[i] as usize)
            .max()
            .unwrap_or(0);
        let mut coeffs = vec![self.ring.field().zero(); deg + 1];
        for (c, m) in &self.terms {
            for (j, &e) in m.exps().iter().enumerate() {
                if j != i && e != 0 {
                    return None;
                }
            }
            coeffs[m.exps()[i] as usize] = c.clone();
        }
        Some(coeffs)
    }

    /// Reinterprets the polynomial in another context with the same field
    /// and arity — e.g. lifting a quotient modulus into the quotient context
    /// so it can join generator lists there.
    pub fn reinterpret_in(&self, ring: &Arc<RingContext>) -> Self {
        assert_eq!(ring.nvars(), self.ring.nvars(), "arity mismatch");
        assert_eq!(ring.field(), self.ring.field(), "field mismatch");
        Polynomial { ring: ring.clone(), terms: self.terms.clone() }
    }

    /// Renders with terms descending under `order`; `Display` uses degrevlex.
    pub fn format_ordered(&self, order: MonomialOrder) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut sorted: Vec<&(Coefficient, Monomial)> = self.terms.iter().collect();
        if order != MonomialOrder::DegRevLex {
            sorted.sort_by(|a, b| order.compare(&b.1, &a.1));
        }
        let names = self.ring.var_names();
        let mut out = String::new();
        for (k, (c, m)) in sorted.iter().enumerate() {
            let (sign_neg, mag) = if c.is_negative() { (true, c.neg()) } else { (false, c.clone()) };
            if k == 0 {
                if sign_neg {
                    out.push('-');
                }
            } else {
                out.push_str(if sign_neg { " - " } else { " + " });
            }
            if m.is_one() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&m.format(names));
            } else {
                out.push_str(&format!("{}*{}", mag, m.format(names)));
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_ordered(MonomialOrder::DegRevLex))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::FieldKind;

    fn ring2() -> Arc<RingContext> {
        RingContext::polynomial_ring(FieldKind::Q, &["x", "y"]).unwrap()
    }

    fn xy(r: &Arc<RingContext>) -> (Polynomial, Polynomial) {
        (Polynomial::variable(r, 0), Polynomial::variable(r, 1))
    }

    #[test]
    fn difference_of_squares() {
        let r = ring2();
        let (x, y) = xy(&r);
        let lhs = x.add(&y).mul(&x.sub(&y));
        let rhs = x.mul(&x).sub(&y.mul(&y));
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.to_string(), "x^2 - y^2");
    }

    #[test]
    fn additive_identity_and_cancellation() {
        let r = ring2();
        let (x, y) = xy(&r);
        let p = x.mul(&y).add(&Polynomial::one(&r));
        assert_eq!(p.add(&Polynomial::zero(&r)), p);
        // (y^2 - x^8) - y^2 = -x^8
        let y2 = y.pow(2);
        let f = y2.sub(&x.pow(8));
        assert_eq!(f.sub(&y2.neg().neg()), x.pow(8).neg());
    }

    #[test]
    fn order_of_vanishing_examples() {
        let r = ring2();
        let (x, y) = xy(&r);
        assert_eq!(y.pow(2).sub(&x.pow(8)).order_of_vanishing(), Some(2));
        assert_eq!(x.add(&y.pow(3)).order_of_vanishing(), Some(1));
        let p = x.pow(3).mul(&y.pow(2)).add(&x.pow(6));
        assert_eq!(p.order_of_vanishing(), Some(5));
        assert_eq!(Polynomial::zero(&r).order_of_vanishing(), None);
    }

    #[test]
    fn translate_examples() {
        let r = RingContext::polynomial_ring(FieldKind::Q, &["x"]).unwrap();
        let x = Polynomial::variable(&r, 0);
        // translate(x^2 - 1, (1,)) = x^2 + 2x
        let p = x.pow(2).sub(&Polynomial::one(&r));
        let t = p.translate(&[Coefficient::from_int(1)]);
        let expected = x.pow(2).add(&x.scale(&Coefficient::from_int(2)));
        assert_eq!(t, expected);

        let r2 = ring2();
        let (x, y) = xy(&r2);
        let q = y.pow(2).sub(&x.pow(2));
        let shifted = q.translate(&[Coefficient::from_int(1), Coefficient::from_int(1)]);
        // y^2 + 2y - x^2 - 2x
        let expected = y
            .pow(2)
            .add(&y.scale(&Coefficient::from_int(2)))
            .sub(&x.pow(2))
            .sub(&x.scale(&Coefficient::from_int(2)));
        assert_eq!(shifted, expected);
        // Round trip back to the original.
        let back = shifted.translate(&[Coefficient::from_int(-1), Coefficient::from_int(-1)]);
        assert_eq!(back, q);
    }

    #[test]
    fn substitution_blowup_shape() {
        // f = y^2 - x^3; chart substitution y -> x*y gives x^2*(y^2 - x).
        let r = ring2();
        let (x, y) = xy(&r);
        let f = y.pow(2).sub(&x.pow(3));
        let g = f.substitute(&[x.clone(), x.mul(&y)]);
        assert_eq!(g, x.pow(2).mul(&y.pow(2).sub(&x)));
        let strict = g.divexact_var_power(0, 2);
        assert_eq!(strict, y.pow(2).sub(&x));
    }

    #[test]
    fn derivative_and_eval() {
        let r = ring2();
        let (x, y) = xy(&r);
        let f = x.pow(3).mul(&y).add(&y.pow(2));
        assert_eq!(f.derivative(0), x.pow(2).mul(&y).scale(&Coefficient::from_int(3)));
        assert_eq!(
            f.derivative(1),
            x.pow(3).add(&y.scale(&Coefficient::from_int(2)))
        );
        let v = f.eval(&[Coefficient::from_int(2), Coefficient::from_int(-1)]);
        assert_eq!(v, Coefficient::from_int(-7));
    }

    #[test]
    fn univariate_extraction() {
        let r = ring2();
        let (x, y) = xy(&r);
        let p = y.pow(3).sub(&y.scale(&Coefficient::from_int(4)));
        let c = p.univariate_in(1).unwrap();
        assert_eq!(
            c,
            vec![
                Coefficient::from_int(0),
                Coefficient::from_int(-4),
                Coefficient::from_int(0),
                Coefficient::from_int(1)
            ]
        );
        assert!(x.add(&y).univariate_in(1).is_none());
    }

    #[test]
    fn canonical_display() {
        let r = ring2();
        let (x, y) = xy(&r);
        let p = y
            .pow(2)
            .neg()
            .add(&x.mul(&y).scale(&Coefficient::from_int(3)))
            .sub(&Polynomial::constant(
                &r,
                FieldKind::Q.from_ratio(1, 2).unwrap(),
            ));
        assert_eq!(p.to_string(), "3*x*y - y^2 - 1/2");
        assert_eq!(Polynomial::zero(&r).to_string(), "0");
    }

    #[test]
    fn homogeneous_component() {
        let r = ring2();
        let (x, y) = xy(&r);
        let f = y.pow(2).sub(&x.pow(2)).add(&x.pow(5));
        assert_eq!(f.homogeneous_component(2), y.pow(2).sub(&x.pow(2)));
        assert_eq!(f.homogeneous_component(3), Polynomial::zero(&r));
    }
}
