//! Ring contexts: the ambient stage every polynomial lives on.
//!
//! A context is a coefficient field plus an ordered variable list, optionally
//! modded out by a single hypersurface `f` (e.g. `Q[x,y]/(y^2 - x^8)`). The
//! modulus itself is a polynomial over the *base* context, so contexts form a
//! two-level hierarchy with no cycles. Contexts are immutable and shared via
//! `Arc`; equality is structural so that independently parsed inputs compare
//! equal.

use std::fmt;
use std::sync::Arc;

use crate::coeff::FieldKind;
use crate::error::Error;
use crate::poly::Polynomial;
use crate::Result;

/// Field, variables, and optional hypersurface modulus.
#[derive(Debug, Clone)]
pub struct RingContext {
    field: FieldKind,
    vars: Vec<String>,
    /// Modulus over the base polynomial ring; `None` for a polynomial ring.
    modulus: Option<Polynomial>,
    /// Krull dimension of the local ring at the origin. Defaults to the
    /// variable count, or 1 for a plane-curve quotient; callers may override.
    declared_dim: usize,
}

impl RingContext {
    /// A polynomial ring `field[vars...]`.
    pub fn polynomial_ring(field: FieldKind, vars: &[&str]) -> Result<Arc<Self>> {
        let vars: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        Self::validate_vars(&vars)?;
        let dim = vars.len();
        Ok(Arc::new(RingContext { field, vars, modulus: None, declared_dim: dim }))
    }

    /// The quotient `base/(modulus)`. The modulus must be a nonzero element
    /// of `base` vanishing at the origin, and `base` must itself be a plain
    /// polynomial ring.
    pub fn quotient_ring(base: &Arc<RingContext>, modulus: Polynomial) -> Result<Arc<Self>> {
        if base.modulus.is_some() {
            return Err(Error::InvalidInput(
                "iterated quotients are not supported".into(),
            ));
        }
        if !Arc::ptr_eq(modulus.ring(), base) && modulus.ring().as_ref() != base.as_ref() {
            return Err(Error::RingMismatch(
                "modulus does not belong to the base ring".into(),
            ));
        }
        if modulus.is_zero() {
            return Err(Error::InvalidInput("quotient modulus is zero".into()));
        }
        if modulus.order_of_vanishing() == Some(0) {
            return Err(Error::InvalidInput(
                "quotient modulus must vanish at the origin".into(),
            ));
        }
        let declared_dim = if base.vars.len() == 2 { 1 } else { base.vars.len() };
        Ok(Arc::new(RingContext {
            field: base.field,
            vars: base.vars.clone(),
            modulus: Some(modulus),
            declared_dim,
        }))
    }

    /// Same context with an explicit local dimension.
    pub fn with_declared_dim(self: &Arc<Self>, dim: usize) -> Arc<Self> {
        let mut ctx = (**self).clone();
        ctx.declared_dim = dim;
        Arc::new(ctx)
    }

    fn validate_vars(vars: &[String]) -> Result<()> {
        if vars.is_empty() {
            return Err(Error::InvalidInput("a ring needs at least one variable".into()));
        }
        for (i, v) in vars.iter().enumerate() {
            let mut chars = v.chars();
            let head_ok = chars.next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_');
            if !head_ok || !chars.all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(Error::InvalidInput(format!("invalid variable name {v:?}")));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidInput(format!("duplicate variable name {v:?}")));
            }
        }
        Ok(())
    }

    pub fn field(&self) -> FieldKind {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn modulus(&self) -> Option<&Polynomial> {
        self.modulus.as_ref()
    }

    pub fn is_quotient(&self) -> bool {
        self.modulus.is_some()
    }

    /// Krull dimension of the local ring at the origin.
    pub fn declared_dim(&self) -> usize {
        self.declared_dim
    }

    /// The polynomial ring this context lifts to: itself if already free,
    /// otherwise the base ring of the modulus.
    pub fn lift_ring(self: &Arc<Self>) -> Arc<RingContext> {
        match &self.modulus {
            Some(f) => f.ring().clone(),
            None => self.clone(),
        }
    }
}

impl PartialEq for RingContext {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.vars == other.vars && self.modulus == other.modulus
    }
}

impl Eq for RingContext {}

impl fmt::Display for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field, self.vars.join(","))?;
        if let Some(m) = &self.modulus {
            write!(f, "/({m})")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Polynomial;

    #[test]
    fn polynomial_ring_validation() {
        assert!(RingContext::polynomial_ring(FieldKind::Q, &["x", "y"]).is_ok());
        assert!(RingContext::polynomial_ring(FieldKind::Q, &[]).is_err());
        assert!(RingContext::polynomial_ring(FieldKind::Q, &["x", "x"]).is_err());
        assert!(RingContext::polynomial_ring(FieldKind::Q, &["2x"]).is_err());
    }

    #[test]
    fn quotient_requires_origin() {
        let r = RingContext::polynomial_ring(FieldKind::Q, &["x", "y"]).unwrap();
        let x = Polynomial::variable(&r, 0);
        let one = Polynomial::one(&r);
        // x - 1 misses the origin.
        assert!(RingContext::quotient_ring(&r, x.sub(&one)).is_err());
        assert!(RingContext::quotient_ring(&r, Polynomial::zero(&r)).is_err());
        let q = RingContext::quotient_ring(&r, x.clone()).unwrap();
        assert_eq!(q.declared_dim(), 1);
        assert!(q.is_quotient());
        // No towers of quotients.
        assert!(RingContext::quotient_ring(&q, x).is_err());
    }

    #[test]
    fn dimension_defaults() {
        let r3 = RingContext::polynomial_ring(FieldKind::Q, &["x", "y", "z"]).unwrap();
        assert_eq!(r3.declared_dim(), 3);
        assert_eq!(r3.with_declared_dim(2).declared_dim(), 2);
    }

    #[test]
    fn display() {
        let r = RingContext::polynomial_ring(FieldKind::Q, &["x", "y"]).unwrap();
        assert_eq!(r.to_string(), "Q[x,y]");
    }
}
