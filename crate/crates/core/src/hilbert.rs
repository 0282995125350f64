//! Hilbert–Samuel functions and their invariants.
//!
//! Everything is driven by the value table h(n) = length(R/I^(n+1)). Once the
//! table stabilizes onto a polynomial, three derived objects are extracted:
//!
//! - the binomial-basis coefficients `e_0, ..., e_d` with
//!   `p(n) = Σ_i (−1)^i e_i C(n+d−i, d−i)`,
//! - the Poincaré-series numerator `a_0, ..., a_s`, computed as (d+1)-th
//!   backward differences of the values (zero-padded on the left), and
//! - the stabilization index n0.
//!
//! The two routes to `e` — the direct fit and the classical identity
//! `e_i = Σ_{j≥i} C(j,i) a_j` — are computed independently and must agree;
//! the driver asserts this together with the basis identity
//! `e_d = (−1)^d p(−1)` on every result it returns.
//!
//! Note on the series convention: with h of degree d, `Σ h(n) Z^n` has pole
//! order d+1 at Z=1, so the numerator entries are (d+1)-th differences. This
//! is the numerator that makes `a_0 = length(R/I)` and the identity above
//! hold; sources that write the denominator as `(1−Z)^d` refer to the same
//! vector via the associated-graded series.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::ideal::Ideal;
use crate::Result;

/// A stabilized Hilbert–Samuel computation, fully cross-checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSamuelData {
    /// h(0..N), exact lengths.
    pub values: Vec<u64>,
    /// Degree of the eventual polynomial = Krull dimension.
    pub d: usize,
    /// Least n such that h(n) = p(n) for every computed n ≥ n0.
    pub n0: usize,
    /// Binomial-basis coefficients (e_0, ..., e_d); e_0 ≥ 1.
    pub e: Vec<BigInt>,
    /// Numerator vector (a_0, ..., a_s) with a_s ≠ 0.
    pub a: Vec<BigInt>,
}

/// Result of a polynomial fit on a value table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyFit {
    pub d: usize,
    pub n0: usize,
    pub e: Vec<BigInt>,
}

/// Generalized binomial coefficient C(m, k) for integer m (possibly
/// negative), exact.
pub fn binom(m: i64, k: usize) -> BigInt {
    let mut num = BigInt::one();
    for t in 0..k {
        num *= BigInt::from(m - t as i64);
    }
    let mut fact = BigInt::one();
    for t in 1..=k {
        fact *= BigInt::from(t as i64);
    }
    debug_assert!((&num % &fact).is_zero());
    num / fact
}

/// Evaluates `p(n) = Σ_i (−1)^i e_i C(n+d−i, d−i)` at an integer point.
pub fn eval_binomial_poly(e: &[BigInt], n: i64) -> BigInt {
    let d = e.len() - 1;
    let mut acc = BigInt::zero();
    for (i, ei) in e.iter().enumerate() {
        let term = ei * binom(n + (d - i) as i64, d - i);
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Infers the polynomial degree and binomial-basis coefficients from a value
/// table.
///
/// `window` is the width of the trailing run that must witness stabilization
/// (the (d+1)-th difference row zero there, and the fitted polynomial
/// reproducing the values there). `None` selects the default rule
/// `max(3, d+2)`; short tables can pass an explicit smaller width.
///
/// When `declared_dim` is given and disagrees with the inferred degree the
/// fit fails with [`Error::DimensionMismatch`] — on a transient plateau the
/// caller escalates with more values.
pub fn fit_hilbert_polynomial(
    values: &[u64],
    window: Option<usize>,
    declared_dim: Option<usize>,
) -> Result<PolyFit> {
    let n_count = values.len();
    let not_stabilized = || Error::NotStabilized { cap: n_count.saturating_sub(1) };
    if n_count < 2 {
        return Err(not_stabilized());
    }
    // Difference table; row k holds the k-th forward differences.
    let mut rows: Vec<Vec<BigInt>> = vec![values.iter().map(|&v| BigInt::from(v)).collect()];
    while rows.last().unwrap().len() > 1 {
        let prev = rows.last().unwrap();
        let next: Vec<BigInt> = prev.windows(2).map(|w| &w[1] - &w[0]).collect();
        rows.push(next);
    }
    // Smallest k whose row is zero across the trailing window ⇒ degree k−1.
    let mut found: Option<(usize, usize)> = None; // (d, effective window)
    for k in 1..rows.len() {
        let d = k - 1;
        let w = window.unwrap_or_else(|| 3.max(d + 2));
        let row = &rows[k];
        if row.len() < w {
            continue;
        }
        if row[row.len() - w..].iter().all(|x| x.is_zero()) {
            found = Some((d, w));
            break;
        }
    }
    let (d, w) = found.ok_or_else(not_stabilized)?;
    if n_count < d + 2 {
        return Err(not_stabilized());
    }
    let e = solve_binomial_system(values, d).ok_or_else(not_stabilized)?;
    // The fitted polynomial must reproduce the whole trailing window, not
    // just the interpolation points.
    let start = n_count - w.max(d + 1);
    for n in start..n_count {
        if eval_binomial_poly(&e, n as i64) != BigInt::from(values[n]) {
            return Err(not_stabilized());
        }
    }
    if let Some(dd) = declared_dim {
        if dd != d {
            return Err(Error::DimensionMismatch { inferred: d, declared: dd });
        }
    }
    // n0: everything from the last disagreement onward matches.
    let mut n0 = 0;
    for n in (0..n_count).rev() {
        if eval_binomial_poly(&e, n as i64) != BigInt::from(values[n]) {
            n0 = n + 1;
            break;
        }
    }
    Ok(PolyFit { d, n0, e })
}

/// Solves for (e_0, ..., e_d) from the last d+1 values by exact Gaussian
/// elimination in the binomial basis. `None` when the solution is not
/// integral (the table is not polynomial there yet).
fn solve_binomial_system(values: &[u64], d: usize) -> Option<Vec<BigInt>> {
    let m = d + 1;
    if values.len() < m {
        return None;
    }
    let first = values.len() - m;
    // Augmented matrix rows: Σ_i (−1)^i C(n+d−i, d−i) e_i = h(n).
    let mut aug: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    for j in 0..m {
        let n = (first + j) as i64;
        let mut row: Vec<BigRational> = Vec::with_capacity(m + 1);
        for i in 0..m {
            let c = binom(n + (d - i) as i64, d - i);
            let signed = if i % 2 == 0 { c } else { -c };
            row.push(BigRational::from(signed));
        }
        row.push(BigRational::from(BigInt::from(values[first + j])));
        aug.push(row);
    }
    // Forward elimination with pivot search.
    for col in 0..m {
        let pivot = (col..m).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(col, pivot);
        for r in (col + 1)..m {
            if aug[r][col].is_zero() {
                continue;
            }
            let factor = &aug[r][col] / &aug[col][col];
            for c in col..=m {
                let delta = &factor * &aug[col][c];
                aug[r][c] = &aug[r][c] - &delta;
            }
        }
    }
    // Back substitution.
    let mut sol = vec![BigRational::zero(); m];
    for col in (0..m).rev() {
        let mut acc = aug[col][m].clone();
        for c in (col + 1)..m {
            acc -= &aug[col][c] * &sol[c];
        }
        sol[col] = acc / &aug[col][col];
    }
    let mut e = Vec::with_capacity(m);
    for x in sol {
        if !x.is_integer() {
            return None;
        }
        e.push(x.to_integer());
    }
    Some(e)
}

/// Extracts the numerator vector (a_0, ..., a_s): (d+1)-th backward
/// differences of the values with h(negative) = 0. Fails unless every
/// computed entry beyond s vanishes with a margin of at least d+1 entries.
pub fn numerator_vector(values: &[u64], d: usize) -> Result<Vec<BigInt>> {
    let n_count = values.len();
    let not_stabilized = || Error::NotStabilized { cap: n_count.saturating_sub(1) };
    let h = |idx: i64| -> BigInt {
        if idx < 0 || idx as usize >= n_count {
            BigInt::zero()
        } else {
            BigInt::from(values[idx as usize])
        }
    };
    let mut a: Vec<BigInt> = Vec::with_capacity(n_count);
    for j in 0..n_count as i64 {
        let mut acc = BigInt::zero();
        for k in 0..=(d + 1) {
            let term = binom((d + 1) as i64, k) * h(j - k as i64);
            if k % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        a.push(acc);
    }
    let s = match a.iter().rposition(|x| !x.is_zero()) {
        Some(s) => s,
        None => return Err(Error::InvalidInput("identically zero value table".into())),
    };
    // Margin: at least d+1 computed zero entries beyond s.
    if n_count - 1 - s < d + 1 {
        return Err(not_stabilized());
    }
    a.truncate(s + 1);
    Ok(a)
}

/// The classical identity `e_i = Σ_{j≥i} C(j,i) a_j`, an independent route
/// from the numerator to the coefficients.
pub fn ev91_e_from_a(a: &[BigInt], d: usize) -> Vec<BigInt> {
    (0..=d)
        .map(|i| {
            a.iter()
                .enumerate()
                .skip(i)
                .map(|(j, aj)| binom(j as i64, i) * aj)
                .sum()
        })
        .collect()
}

impl HilbertSamuelData {
    /// Checks every structural invariant; the driver refuses to return data
    /// that fails any of these.
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::InvariantViolation(msg));
        if self.e.len() != self.d + 1 {
            return fail("e-vector length is not d+1".into());
        }
        if self.e[0] < BigInt::one() {
            return fail(format!("e_0 = {} < 1", self.e[0]));
        }
        if self.a.is_empty() || self.a.last().unwrap().is_zero() {
            return fail("numerator must end with a nonzero entry".into());
        }
        if self.a[0] != BigInt::from(self.values[0]) {
            return fail(format!(
                "a_0 = {} differs from length(R/I) = {}",
                self.a[0], self.values[0]
            ));
        }
        // Strict growth of powers of a proper m-primary ideal.
        if self.values.windows(2).any(|w| w[0] >= w[1]) {
            return fail("h-values of a proper ideal must strictly increase".into());
        }
        // The fit matches from n0 on.
        for n in self.n0..self.values.len() {
            if eval_binomial_poly(&self.e, n as i64) != BigInt::from(self.values[n]) {
                return fail(format!("p({n}) does not reproduce h({n})"));
            }
        }
        // Independent route through the numerator.
        if ev91_e_from_a(&self.a, self.d) != self.e {
            return fail("numerator route disagrees with the binomial fit".into());
        }
        // Basis identity (Grothendieck–Serre form): e_d = (−1)^d p(−1).
        let pd = eval_binomial_poly(&self.e, -1);
        let ed = self.e.last().unwrap().clone();
        let expected = if self.d % 2 == 0 { pd } else { -pd };
        if ed != expected {
            return fail(format!("e_d = {ed} differs from (−1)^d p(−1) = {expected}"));
        }
        Ok(())
    }

    /// e_d, the last coefficient.
    pub fn e_last(&self) -> &BigInt {
        self.e.last().expect("e has d+1 entries")
    }
}

// ---------------------------------------------------------------------------
// Drivers

/// Lazily extended table of colengths of the powers of one ideal:
/// entry j holds length(R/I^(j+1)). One chain serves h-tables for every
/// power of the ideal, since h_{I^n}(k) = entry at n(k+1) − 1.
pub struct PowerChain {
    base: Ideal,
    chain: Vec<Ideal>,
    values: Vec<u64>,
}

impl PowerChain {
    /// Validates m-primariness once; all later sampling is unchecked.
    pub fn new(base: &Ideal) -> Result<Self> {
        base.require_m_primary("Hilbert-Samuel sampling")?;
        Ok(PowerChain { base: base.clone(), chain: Vec::new(), values: Vec::new() })
    }

    /// length(R/I^(j+1)), extending the chain as needed.
    pub fn value(&mut self, j: usize) -> Result<u64> {
        while self.values.len() <= j {
            let next = match self.chain.last() {
                Some(prev) => prev.product(&self.base)?,
                None => self.base.clone(),
            };
            let len = next.colength()?.finite().ok_or_else(|| {
                Error::InvariantViolation(
                    "powers of an m-primary ideal have finite colength".into(),
                )
            })?;
            self.chain.push(next);
            self.values.push(len);
        }
        Ok(self.values[j])
    }

    /// The h-table of I^n up to h(n_max), sampled from the shared chain.
    pub fn power_values(&mut self, n: usize, n_max: usize) -> Result<Vec<u64>> {
        (0..=n_max).map(|k| self.value(n * (k + 1) - 1)).collect()
    }

    /// Full Hilbert–Samuel data of I^n, reusing the shared chain.
    pub fn power_data(&mut self, n: usize, cap: usize) -> Result<HilbertSamuelData> {
        let declared = self.base.ring().declared_dim();
        drive(declared, cap, |k| self.value(n * (k + 1) - 1))
    }
}

/// h(0..n_max) for an m-primary ideal: exact lengths of R/I^(n+1).
pub fn hs_values(ideal: &Ideal, n_max: usize) -> Result<Vec<u64>> {
    let mut chain = PowerChain::new(ideal)?;
    (0..=n_max).map(|n| chain.value(n)).collect()
}

/// Escalating driver: samples values, fits, extracts the numerator, checks
/// all invariants. `n_max` starts at 2d+3 and doubles up to `cap`.
fn drive(
    declared_dim: usize,
    cap: usize,
    mut value: impl FnMut(usize) -> Result<u64>,
) -> Result<HilbertSamuelData> {
    let mut n_max = (2 * declared_dim + 3).min(cap);
    let mut values: Vec<u64> = Vec::new();
    loop {
        while values.len() <= n_max {
            let v = value(values.len())?;
            values.push(v);
        }
        let attempt = fit_hilbert_polynomial(&values, None, Some(declared_dim))
            .and_then(|fit| Ok((numerator_vector(&values, fit.d)?, fit)));
        match attempt {
            Ok((a, fit)) => {
                let data = HilbertSamuelData {
                    values,
                    d: fit.d,
                    n0: fit.n0,
                    e: fit.e,
                    a,
                };
                data.validate()?;
                return Ok(data);
            }
            Err(Error::NotStabilized { .. }) | Err(Error::DimensionMismatch { .. })
                if n_max < cap =>
            {
                n_max = (n_max * 2).min(cap);
            }
            Err(Error::NotStabilized { .. }) => {
                return Err(Error::NotStabilized { cap });
            }
            Err(e) => return Err(e),
        }
    }
}

/// Complete Hilbert–Samuel data for an m-primary ideal, escalating the
/// sample size up to the default cap of 64 values.
pub fn e_coefficients(ideal: &Ideal) -> Result<HilbertSamuelData> {
    e_coefficients_capped(ideal, 64)
}

/// As [`e_coefficients`] with an explicit escalation cap on n_max.
pub fn e_coefficients_capped(ideal: &Ideal, cap: usize) -> Result<HilbertSamuelData> {
    let mut chain = PowerChain::new(ideal)?;
    drive(ideal.ring().declared_dim(), cap, |j| chain.value(j))
}
