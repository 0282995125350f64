//! Monomials as exponent vectors, plus the three classical term orders.
//!
//! A `Monomial` never knows its variable names; formatting borrows names from
//! the owning ring context. Comparison is always explicit through a
//! [`MonomialOrder`] — there is no implicit `Ord` because the "right" order
//! depends on the computation in flight.

use std::cmp::Ordering;

/// A power product, stored as one exponent per ring variable.
///
/// Invariant: the exponent vector length equals the arity of the ring the
/// monomial belongs to. Arities are asserted on every binary operation;
/// mixing rings is a caller bug.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u16>,
}

impl Monomial {
    pub fn new(exps: Vec<u16>) -> Self {
        Monomial { exps }
    }

    /// The unit monomial `1` in `nvars` variables.
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars] }
    }

    /// The single variable `x_i`.
    pub fn var(i: usize, nvars: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial { exps }
    }

    /// `x_i^k`.
    pub fn var_pow(i: usize, k: u16, nvars: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut exps = vec![0; nvars];
        exps[i] = k;
        Monomial { exps }
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.exps.len(), other.exps.len(), "arity mismatch");
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_add(b).expect("monomial exponent overflow"))
            .collect();
        Monomial { exps }
    }

    /// Whether `self` divides `other` componentwise.
    pub fn divides(&self, other: &Self) -> bool {
        assert_eq!(self.exps.len(), other.exps.len(), "arity mismatch");
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a <= b)
    }

    /// `self / divisor` when the division is exact.
    pub fn checked_div(&self, divisor: &Self) -> Option<Self> {
        assert_eq!(self.exps.len(), divisor.exps.len(), "arity mismatch");
        let mut exps = Vec::with_capacity(self.exps.len());
        for (&a, &b) in self.exps.iter().zip(&divisor.exps) {
            if a < b {
                return None;
            }
            exps.push(a - b);
        }
        Some(Monomial { exps })
    }

    pub fn lcm(&self, other: &Self) -> Self {
        assert_eq!(self.exps.len(), other.exps.len(), "arity mismatch");
        let exps = self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.max(b)).collect();
        Monomial { exps }
    }

    /// True when the supports are disjoint (the Buchberger product criterion).
    pub fn is_coprime_with(&self, other: &Self) -> bool {
        assert_eq!(self.exps.len(), other.exps.len(), "arity mismatch");
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a.min(b) == 0)
    }

    /// `Some((i, k))` when the monomial is `x_i^k` with `k >= 1`.
    pub fn pure_power(&self) -> Option<(usize, u16)> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, e));
            }
        }
        found
    }

    /// Renders using the supplied variable names, e.g. `x^2*y`.
    pub fn format(&self, names: &[String]) -> String {
        assert_eq!(self.exps.len(), names.len(), "arity mismatch");
        let mut parts = Vec::new();
        for (name, &e) in names.iter().zip(&self.exps) {
            match e {
                0 => {}
                1 => parts.push(name.clone()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// The three supported term orders. All are global (1 is smallest), which the
/// standard-monomial and colength machinery relies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    Lex,
    DegLex,
    #[default]
    DegRevLex,
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        assert_eq!(a.exps.len(), b.exps.len(), "arity mismatch");
        match self {
            MonomialOrder::Lex => lex_cmp(&a.exps, &b.exps),
            MonomialOrder::DegLex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| lex_cmp(&a.exps, &b.exps)),
            MonomialOrder::DegRevLex => a.degree().cmp(&b.degree()).then_with(|| {
                for (&ea, &eb) in a.exps.iter().zip(&b.exps).rev() {
                    if ea != eb {
                        // Reverse-lex tiebreak: smaller trailing exponent wins.
                        return eb.cmp(&ea);
                    }
                }
                Ordering::Equal
            }),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::Lex => "lex",
            MonomialOrder::DegLex => "deglex",
            MonomialOrder::DegRevLex => "degrevlex",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "lex" => Some(MonomialOrder::Lex),
            "deglex" => Some(MonomialOrder::DegLex),
            "degrevlex" => Some(MonomialOrder::DegRevLex),
            _ => None,
        }
    }
}

fn lex_cmp(a: &[u16], b: &[u16]) -> Ordering {
    for (&ea, &eb) in a.iter().zip(b) {
        if ea != eb {
            return ea.cmp(&eb);
        }
    }
    Ordering::Equal
}
