//! Exact coefficient arithmetic: arbitrary-precision rationals and prime fields.
//!
//! The default field is `Q` (exact rationals, canonical form with gcd 1 and a
//! positive denominator). A prime field `F_p` is available as an opt-in speed
//! mode; results over `F_p` are advisory and never used by the verification
//! suites.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::error::Error;

/// The coefficient field of a ring context.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldKind {
    /// Exact rationals.
    Q,
    /// Prime field with `p` elements, `p` an odd prime fitting in 63 bits.
    Fp(u64),
}

impl FieldKind {
    /// Validates a prime-field modulus. `p` must be prime and below 2^63 so
    /// that products of residues fit in `u128` without overflow.
    pub fn prime_field(p: u64) -> Result<Self, Error> {
        if p < 2 || p >= (1 << 63) || !is_prime_u64(p) {
            return Err(Error::InvalidInput(format!("{p} is not a usable prime")));
        }
        Ok(FieldKind::Fp(p))
    }

    /// Additive identity in this field.
    pub fn zero(&self) -> Coefficient {
        match self {
            FieldKind::Q => Coefficient::Rational(BigRational::zero()),
            FieldKind::Fp(p) => Coefficient::Fp { value: 0, p: *p },
        }
    }

    /// Multiplicative identity in this field.
    pub fn one(&self) -> Coefficient {
        match self {
            FieldKind::Q => Coefficient::Rational(BigRational::one()),
            FieldKind::Fp(p) => Coefficient::Fp { value: 1 % *p, p: *p },
        }
    }

    /// Embeds an integer.
    pub fn from_i64(&self, n: i64) -> Coefficient {
        match self {
            FieldKind::Q => Coefficient::Rational(BigRational::from(BigInt::from(n))),
            FieldKind::Fp(p) => {
                let r = n.rem_euclid(*p as i64) as u64;
                Coefficient::Fp { value: r, p: *p }
            }
        }
    }

    /// Embeds a rational `num/den`. Fails in `F_p` when `den ≡ 0 (mod p)`.
    pub fn from_ratio(&self, num: i64, den: i64) -> Result<Coefficient, Error> {
        if den == 0 {
            return Err(Error::InvalidInput("zero denominator".into()));
        }
        match self {
            FieldKind::Q => Ok(Coefficient::Rational(BigRational::new(
                BigInt::from(num),
                BigInt::from(den),
            ))),
            FieldKind::Fp(_) => {
                let d = self.from_i64(den);
                if d.is_zero() {
                    return Err(Error::InvalidInput(format!(
                        "denominator {den} vanishes in {self}"
                    )));
                }
                Ok(self.from_i64(num).div(&d))
            }
        }
    }
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Q => write!(f, "Q"),
            FieldKind::Fp(p) => write!(f, "F_{p}"),
        }
    }
}

/// An exact field element: a canonical rational or a residue mod a prime.
///
/// Canonical forms are unique per value, so derived equality is semantic
/// equality. Mixing elements of different fields is a caller bug and panics;
/// every public entry point validates ring contexts before arithmetic starts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Coefficient {
    Rational(BigRational),
    Fp { value: u64, p: u64 },
}

impl Coefficient {
    /// Convenience constructor for rationals from an integer.
    pub fn from_int(n: i64) -> Self {
        Coefficient::Rational(BigRational::from(BigInt::from(n)))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coefficient::Rational(r) => r.is_zero(),
            Coefficient::Fp { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coefficient::Rational(r) => r.is_one(),
            Coefficient::Fp { value, p } => *value == 1 % *p,
        }
    }

    /// True for negative rationals; `F_p` residues are never negative.
    pub fn is_negative(&self) -> bool {
        match self {
            Coefficient::Rational(r) => r.is_negative(),
            Coefficient::Fp { .. } => false,
        }
    }

    pub fn field(&self) -> FieldKind {
        match self {
            Coefficient::Rational(_) => FieldKind::Q,
            Coefficient::Fp { p, .. } => FieldKind::Fp(*p),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        match (self, other) {
            (Coefficient::Rational(a), Coefficient::Rational(b)) => Coefficient::Rational(a + b),
            (Coefficient::Fp { value: a, p }, Coefficient::Fp { value: b, p: q }) => {
                assert_eq!(p, q, "mixed prime fields");
                Coefficient::Fp { value: add_mod(*a, *b, *p), p: *p }
            }
            _ => panic!("mixed coefficient fields"),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (Coefficient::Rational(a), Coefficient::Rational(b)) => Coefficient::Rational(a * b),
            (Coefficient::Fp { value: a, p }, Coefficient::Fp { value: b, p: q }) => {
                assert_eq!(p, q, "mixed prime fields");
                Coefficient::Fp { value: mul_mod(*a, *b, *p), p: *p }
            }
            _ => panic!("mixed coefficient fields"),
        }
    }

    /// Division; the divisor must be nonzero.
    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }

    pub fn neg(&self) -> Self {
        match self {
            Coefficient::Rational(a) => Coefficient::Rational(-a),
            Coefficient::Fp { value, p } => {
                let v = if *value == 0 { 0 } else { p - value };
                Coefficient::Fp { value: v, p: *p }
            }
        }
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> Self {
        match self {
            Coefficient::Rational(a) => {
                assert!(!a.is_zero(), "inverse of zero");
                Coefficient::Rational(a.recip())
            }
            Coefficient::Fp { value, p } => {
                assert!(*value != 0, "inverse of zero");
                Coefficient::Fp { value: inv_mod(*value, *p), p: *p }
            }
        }
    }

    /// The underlying rational, if this is a `Q` element.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Coefficient::Rational(r) => Some(r),
            Coefficient::Fp { .. } => None,
        }
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficient::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Coefficient::Fp { value, .. } => write!(f, "{value}"),
        }
    }
}

fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // p is prime, so a^(p-2) inverts a.
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for u64 moduli.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_canonical_form() {
        let a = FieldKind::Q.from_ratio(2, 4).unwrap();
        let b = FieldKind::Q.from_ratio(1, 2).unwrap();
        assert_eq!(a, b);
        let c = FieldKind::Q.from_ratio(1, -2).unwrap();
        assert_eq!(c, b.neg());
        assert!(c.is_negative());
    }

    #[test]
    fn prime_field_ops() {
        let f = FieldKind::prime_field(7).unwrap();
        let three = f.from_i64(3);
        let five = f.from_i64(5);
        assert_eq!(three.add(&five), f.from_i64(1));
        assert_eq!(three.mul(&five), f.from_i64(1));
        assert_eq!(three.inv(), five); // 3*5 = 15 = 1 mod 7
        assert_eq!(f.from_i64(-1), f.from_i64(6));
    }

    #[test]
    fn prime_validation() {
        assert!(FieldKind::prime_field(2).is_ok());
        assert!(FieldKind::prime_field(101).is_ok());
        assert!(FieldKind::prime_field(91).is_err()); // 7*13
        assert!(FieldKind::prime_field(1).is_err());
        assert!(FieldKind::prime_field((1 << 61) - 1).is_ok()); // Mersenne prime
    }

    #[test]
    fn display_forms() {
        assert_eq!(FieldKind::Q.from_ratio(3, 4).unwrap().to_string(), "3/4");
        assert_eq!(Coefficient::from_int(-5).to_string(), "-5");
    }
}
