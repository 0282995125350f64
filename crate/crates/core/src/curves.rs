//! Plane curve singularities: blow-ups, resolution trees, the δ-invariant,
//! and Hironaka-ideal detection.
//!
//! A curve germ is a polynomial `f` in two variables over `Q` vanishing at
//! the origin. Blowing up the origin produces, in chart A (`y = x·t`), the
//! strict transform `f(x, x·t)/x^m` with `m` the multiplicity; the
//! infinitely-near points are the rational roots of its restriction to the
//! exceptional line, plus one chart-B point (`x = y·s`, at `s = 0`) exactly
//! when the tangent cone contains the vertical direction. Only rational
//! directions are supported — an irrational tangent direction raises
//! [`Error::Rationality`] rather than silently producing a wrong δ.
//!
//! δ is computed by two independent routes that must agree:
//! combinatorially as `Σ m(m−1)/2` over all infinitely-near points, and via
//! Northcott's formula as the sum of `e_1` of the maximal ideal of each
//! singular point's local ring, with each `e_1` coming from the full
//! Hilbert–Samuel pipeline (powers, colengths, stabilized fit).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::sync::Arc;

use crate::coeff::{Coefficient, FieldKind};
use crate::error::Error;
use crate::hilbert::{self, HilbertSamuelData};
use crate::ideal::Ideal;
use crate::poly::Polynomial;
use crate::ring::RingContext;
use crate::Result;

/// Maximum blow-up depth before concluding the input cannot resolve (a
/// reduced plane curve always terminates far earlier; non-reduced inputs
/// loop forever and are caught here).
const MAX_DEPTH: usize = 64;

/// Largest integer coefficient magnitude admitted to the rational-root
/// divisor search.
const MAX_ROOT_SEARCH: i128 = 1_000_000_000_000;

/// Which affine chart of the blow-up a point lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChartLabel {
    /// `y = x·t`: parametrizes every direction except the vertical one.
    A,
    /// `x = y·s`: contributes only the vertical direction `s = 0`.
    B,
}

impl fmt::Display for ChartLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChartLabel::A => write!(f, "A"),
            ChartLabel::B => write!(f, "B"),
        }
    }
}

/// One infinitely-near point of a single blow-up.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlowUpRecord {
    pub chart: ChartLabel,
    /// Coordinate of the point on the exceptional line in its chart.
    pub point: Coefficient,
    /// Strict transform translated so that the point sits at the origin.
    pub transform: Polynomial,
}

/// A node of the infinitely-near-point tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolutionNode {
    /// Local equation with the point at the origin.
    pub local_equation: Polynomial,
    /// Multiplicity of the point; 1 means smooth (leaf).
    pub multiplicity: u32,
    /// Chart labels along the path from the root.
    pub chart_path: Vec<ChartLabel>,
    pub children: Vec<ResolutionNode>,
}

impl ResolutionNode {
    /// All nodes of the subtree, depth-first.
    pub fn nodes(&self) -> Vec<&ResolutionNode> {
        let mut out = vec![self];
        let mut i = 0;
        while i < out.len() {
            // Manual worklist to avoid recursion limits on deep chains.
            let node = out[i];
            out.extend(node.children.iter());
            i += 1;
        }
        out
    }

    /// Multiplicities of all nodes, depth-first.
    pub fn multiplicities(&self) -> Vec<u32> {
        self.nodes().iter().map(|n| n.multiplicity).collect()
    }
}

/// The δ-invariant computed along two independent routes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaReport {
    /// `Σ m(m−1)/2` over every node of the tree.
    pub delta_combinatorial: u64,
    /// `Σ e_1(maximal ideal)` over the singular (m ≥ 2) nodes, each `e_1`
    /// from the Hilbert–Samuel pipeline on the node's local ring.
    pub delta_northcott: u64,
    pub agree: bool,
    pub tree: ResolutionNode,
}

/// Outcome of the Hironaka test `e_1(I) = δ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HironakaReport {
    pub e0: BigInt,
    pub e1: BigInt,
    pub delta: u64,
    pub hironaka: bool,
}

/// A plane curve germ together with its local ring `Q[x,y]/(f)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneCurve {
    f: Polynomial,
    ring: Arc<RingContext>,
}

impl PlaneCurve {
    /// Validates the germ: two variables over `Q`, nonzero, through origin.
    pub fn new(f: Polynomial) -> Result<Self> {
        validate_curve_equation(&f)?;
        let ring = RingContext::quotient_ring(f.ring(), f.clone())?;
        Ok(PlaneCurve { f, ring })
    }

    pub fn equation(&self) -> &Polynomial {
        &self.f
    }

    /// The quotient context `Q[x,y]/(f)` ideals of the curve live in.
    pub fn ring(&self) -> &Arc<RingContext> {
        &self.ring
    }

    pub fn resolve(&self) -> Result<ResolutionNode> {
        resolve(&self.f)
    }

    pub fn delta(&self) -> Result<DeltaReport> {
        delta(&self.f)
    }
}

fn validate_curve_equation(f: &Polynomial) -> Result<()> {
    if f.ring().nvars() != 2 || f.ring().is_quotient() {
        return Err(Error::Precondition(
            "plane curves live in a two-variable polynomial ring".into(),
        ));
    }
    if f.ring().field() != FieldKind::Q {
        return Err(Error::Precondition(
            "curve resolution requires exact rational coefficients".into(),
        ));
    }
    match f.order_of_vanishing() {
        None => Err(Error::ZeroPolynomial("curve equation".into())),
        Some(0) => Err(Error::Precondition("curve must pass through the origin".into())),
        Some(_) => Ok(()),
    }
}

/// Blows up the origin once: one record per infinitely-near point on the
/// exceptional line, each with its strict transform recentered at the
/// origin. Chart A points come in ascending root order, then the chart B
/// point when the vertical direction lies on the tangent cone.
pub fn blow_up_origin(f: &Polynomial) -> Result<Vec<BlowUpRecord>> {
    validate_curve_equation(f)?;
    let ring = f.ring().clone();
    let m = f.order_of_vanishing().expect("validated nonzero");
    let x = Polynomial::variable(&ring, 0);
    let y = Polynomial::variable(&ring, 1);

    // Chart A: substitute y -> x*y and strip x^m.
    let total_a = f.substitute(&[x.clone(), x.mul(&y)]);
    let strict_a = total_a.divexact_var_power(0, m as u16);
    if strict_a.is_zero() {
        return Err(Error::NonReduced("strict transform vanished".into()));
    }
    // Restriction to the exceptional line x = 0: the tangent-cone form
    // f_m(1, t). Nonzero because f_m is nonzero.
    let on_line = Polynomial::from_terms(
        &ring,
        strict_a
            .terms()
            .iter()
            .filter(|(_, mo)| mo.exps()[0] == 0)
            .cloned()
            .collect(),
    );
    let coeffs = on_line.univariate_in(1).expect("x-free by construction");
    let line_degree = coeffs.len() - 1;
    let (roots, leftover) = rational_roots(&coeffs)?;
    if leftover > 0 {
        return Err(Error::Rationality(format!(
            "tangent cone does not split into rational directions ({leftover} irrational \
             degree(s) remain)"
        )));
    }

    let mut records = Vec::new();
    for (root, _mult) in roots {
        let c = Coefficient::Rational(root);
        let transform = strict_a.translate(&[ring.field().zero(), c.clone()]);
        if transform.is_zero() {
            return Err(Error::NonReduced("strict transform vanished".into()));
        }
        records.push(BlowUpRecord { chart: ChartLabel::A, point: c, transform });
    }

    // Chart B contributes s = 0 exactly when x divides the tangent form,
    // i.e. the restriction above has degree < m. Every other chart-B point
    // coincides with a chart-A point.
    if (line_degree as u32) < m {
        let total_b = f.substitute(&[x.mul(&y), y.clone()]);
        let strict_b = total_b.divexact_var_power(1, m as u16);
        if strict_b.is_zero() {
            return Err(Error::NonReduced("strict transform vanished".into()));
        }
        records.push(BlowUpRecord {
            chart: ChartLabel::B,
            point: ring.field().zero(),
            transform: strict_b,
        });
    }
    Ok(records)
}

/// Resolves the germ: blows up recursively through all points of
/// multiplicity ≥ 2, recording smooth infinitely-near points as leaves.
pub fn resolve(f: &Polynomial) -> Result<ResolutionNode> {
    validate_curve_equation(f)?;
    resolve_inner(f.clone(), Vec::new(), 0)
}

fn resolve_inner(f: Polynomial, path: Vec<ChartLabel>, depth: usize) -> Result<ResolutionNode> {
    if depth > MAX_DEPTH {
        return Err(Error::DepthExceeded(MAX_DEPTH));
    }
    let m = f
        .order_of_vanishing()
        .ok_or_else(|| Error::NonReduced("strict transform vanished".into()))?;
    let mut children = Vec::new();
    if m >= 2 {
        for rec in blow_up_origin(&f)? {
            let mut child_path = path.clone();
            child_path.push(rec.chart);
            let child = resolve_inner(rec.transform, child_path, depth + 1)?;
            if child.multiplicity > m {
                return Err(Error::InvariantViolation(format!(
                    "child multiplicity {} exceeds parent {} — blow-up bookkeeping bug",
                    child.multiplicity, m
                )));
            }
            children.push(child);
        }
    }
    Ok(ResolutionNode { local_equation: f, multiplicity: m, chart_path: path, children })
}

/// δ by both routes, with the full tree attached.
pub fn delta(f: &Polynomial) -> Result<DeltaReport> {
    let tree = resolve(f)?;
    let base = f.ring();
    let mut comb: u64 = 0;
    let mut north: u64 = 0;
    for node in tree.nodes() {
        let m = node.multiplicity as u64;
        comb += m * (m - 1) / 2;
        if m >= 2 {
            let data = node_max_ideal_data(base, &node.local_equation)?;
            let e1 = data.e[1].clone();
            if e1.is_negative() {
                return Err(Error::InvariantViolation(format!(
                    "negative e_1 = {e1} at a curve point"
                )));
            }
            // e_0 of the maximal ideal is the multiplicity; a mismatch means
            // the resolution and the length pipeline disagree about m.
            if data.e[0] != BigInt::from(m) {
                return Err(Error::InvariantViolation(format!(
                    "node multiplicity {m} but maximal-ideal e_0 = {}",
                    data.e[0]
                )));
            }
            north += u64::try_from(e1).expect("small nonnegative e_1");
        }
    }
    Ok(DeltaReport {
        delta_combinatorial: comb,
        delta_northcott: north,
        agree: comb == north,
        tree,
    })
}

fn node_max_ideal_data(base: &Arc<RingContext>, g: &Polynomial) -> Result<HilbertSamuelData> {
    let local = RingContext::quotient_ring(base, g.clone())?;
    let m = Ideal::maximal(&local);
    hilbert::e_coefficients(&m)
}

/// `(e_0, e_1)` of an m-primary ideal of the curve's local ring, through the
/// stabilized degree-1 Hilbert–Samuel fit.
pub fn e1_of_ideal(curve: &PlaneCurve, ideal: &Ideal) -> Result<(BigInt, BigInt)> {
    if ideal.ring() != curve.ring() {
        return Err(Error::RingMismatch(
            "ideal does not live in the curve's local ring".into(),
        ));
    }
    let data = hilbert::e_coefficients(ideal)?;
    Ok((data.e[0].clone(), data.e[1].clone()))
}

/// The Hironaka test: compares `e_1(I)` with δ of the curve. The containment
/// `0 ≤ e_1 ≤ δ` is asserted — a violation is a bug signal, not a result.
pub fn is_hironaka(curve: &PlaneCurve, ideal: &Ideal) -> Result<HironakaReport> {
    let (e0, e1) = e1_of_ideal(curve, ideal)?;
    let report = curve.delta()?;
    if !report.agree {
        return Err(Error::InvariantViolation(format!(
            "delta routes disagree: combinatorial {} vs length-based {}",
            report.delta_combinatorial, report.delta_northcott
        )));
    }
    let d = report.delta_combinatorial;
    if e1.is_negative() || e1 > BigInt::from(d) {
        return Err(Error::InvariantViolation(format!(
            "e_1 = {e1} falls outside [0, δ = {d}]"
        )));
    }
    let hironaka = e1 == BigInt::from(d);
    Ok(HironakaReport { e0, e1, delta: d, hironaka })
}

// ---------------------------------------------------------------------------
// Rational roots

/// All rational roots (with multiplicity, ascending) of a dense univariate
/// polynomial over `Q` given by `coeffs[i]` = coefficient of `t^i`, plus the
/// degree of the root-free cofactor that remains.
fn rational_roots(coeffs: &[Coefficient]) -> Result<(Vec<(BigRational, usize)>, usize)> {
    let mut c: Vec<BigRational> = coeffs
        .iter()
        .map(|x| x.as_rational().expect("curve machinery is Q-only").clone())
        .collect();
    while c.last().is_some_and(|x| x.is_zero()) {
        c.pop();
    }
    assert!(!c.is_empty(), "zero polynomial has no root structure");
    let mut roots: Vec<(BigRational, usize)> = Vec::new();

    // Factor out t^v.
    let v = c.iter().position(|x| !x.is_zero()).expect("nonzero");
    if v > 0 {
        roots.push((BigRational::zero(), v));
        c.drain(..v);
    }
    if c.len() > 1 {
        // Clear denominators to an integer polynomial for the divisor search.
        let mut lcm = BigInt::one();
        for x in &c {
            lcm = num_integer::lcm(lcm, x.denom().clone());
        }
        let ints: Vec<BigInt> = c.iter().map(|x| (x * &lcm).to_integer()).collect();
        let candidates = root_candidates(&ints[0], ints.last().unwrap())?;
        for cand in candidates {
            let mut mult = 0;
            while c.len() > 1 && eval_rational(&c, &cand).is_zero() {
                c = deflate(&c, &cand);
                mult += 1;
            }
            if mult > 0 {
                roots.push((cand, mult));
            }
        }
    }
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    Ok((roots, c.len() - 1))
}

/// Candidate roots ±p/q with p | constant, q | leading (both nonzero).
fn root_candidates(constant: &BigInt, leading: &BigInt) -> Result<Vec<BigRational>> {
    let ps = divisors(constant)?;
    let qs = divisors(leading)?;
    let mut out = Vec::new();
    for p in &ps {
        for q in &qs {
            if num_integer::gcd(p.clone(), q.clone()).is_one() {
                let r = BigRational::new(p.clone(), q.clone());
                out.push(-r.clone());
                out.push(r);
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

fn divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let n: i128 = n.abs().try_into().ok().filter(|&v| v <= MAX_ROOT_SEARCH).ok_or_else(|| {
        Error::ResourceCap("coefficient too large for the rational-root search".into())
    })?;
    assert!(n > 0, "nonzero by construction");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d: i128 = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(BigInt::from(d));
            if d * d != n {
                large.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    Ok(small)
}

fn eval_rational(c: &[BigRational], t: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for x in c.iter().rev() {
        acc = acc * t + x;
    }
    acc
}

/// Exact synthetic division by (t − r); the remainder must vanish.
fn deflate(c: &[BigRational], r: &BigRational) -> Vec<BigRational> {
    let k = c.len() - 1;
    let mut q = vec![BigRational::zero(); k];
    let mut carry = c[k].clone();
    for i in (0..k).rev() {
        q[i] = carry.clone();
        carry = &c[i] + &(carry * r);
    }
    debug_assert!(carry.is_zero(), "deflation by a non-root");
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring_xy() -> Arc<RingContext> {
        RingContext::polynomial_ring(FieldKind::Q, &["x", "y"]).unwrap()
    }

    fn vars2(r: &Arc<RingContext>) -> (Polynomial, Polynomial) {
        (Polynomial::variable(r, 0), Polynomial::variable(r, 1))
    }

    fn hyperelliptic(n: u32) -> Polynomial {
        let r = ring_xy();
        let (x, y) = vars2(&r);
        y.pow(2).sub(&x.pow(n))
    }

    #[test]
    fn blow_up_hyperelliptic() {
        let r = ring_xy();
        let (x, y) = vars2(&r);
        let recs = blow_up_origin(&hyperelliptic(8)).unwrap();
        assert_eq!(recs.len(), 1);
        assert_eq!(recs[0].chart, ChartLabel::A);
        assert!(recs[0].point.is_zero());
        assert_eq!(recs[0].transform, y.pow(2).sub(&x.pow(6)));
    }

    #[test]
    fn blow_up_cusp() {
        let r = ring_xy();
        let (x, y) = vars2(&r);
        let recs = blow_up_origin(&hyperelliptic(3)).unwrap();
        assert_eq!(recs.len(), 1);
        assert_eq!(recs[0].transform, y.pow(2).sub(&x));
    }

    #[test]
    fn blow_up_node_uses_both_charts() {
        let r = ring_xy();
        let (x, y) = vars2(&r);
        let recs = blow_up_origin(&x.mul(&y)).unwrap();
        assert_eq!(recs.len(), 2);
        assert_eq!(recs[0].chart, ChartLabel::A);
        assert_eq!(recs[0].transform, y.clone());
        assert_eq!(recs[1].chart, ChartLabel::B);
        assert_eq!(recs[1].transform, x.clone());
    }

    #[test]
    fn blow_up_transverse_branches() {
        // y^2 - x^2 = (y-x)(y+x): two rational directions ±1.
        let recs = blow_up_origin(&hyperelliptic(2)).unwrap();
        assert_eq!(recs.len(), 2);
        let pts: Vec<String> = recs.iter().map(|r| r.point.to_string()).collect();
        assert_eq!(pts, vec!["-1", "1"]);
        for r in &recs {
            assert_eq!(r.transform.order_of_vanishing(), Some(1));
        }
    }

    #[test]
    fn irrational_directions_are_rejected() {
        let r = ring_xy();
        let (x, y) = vars2(&r);
        // y^2 + x^2 has tangent directions ±i.
        let f = y.pow(2).add(&x.pow(2));
        assert!(matches!(blow_up_origin(&f), Err(Error::Rationality(_))));
        // y^2 - 2x^2 has directions ±sqrt(2).
        let g = y.pow(2).sub(&x.pow(2).scale(&Coefficient::from_int(2)));
        assert!(matches!(blow_up_origin(&g), Err(Error::Rationality(_))));
    }

    #[test]
    fn resolve_hyperelliptic_chain() {
        // y^2 - x^8: four double points in a chain, then two smooth leaves.
        let tree = resolve(&hyperelliptic(8)).unwrap();
        let mut mults = tree.multiplicities();
        mults.sort_unstable();
        assert_eq!(mults, vec![1, 1, 2, 2, 2, 2]);
        // The chain structure: each double point has exactly one child until
        // the last, which splits into two smooth branches.
        let mut node = &tree;
        for _ in 0..3 {
            assert_eq!(node.multiplicity, 2);
            assert_eq!(node.children.len(), 1);
            node = &node.children[0];
        }
        assert_eq!(node.multiplicity, 2);
        assert_eq!(node.children.len(), 2);
    }

    #[test]
    fn resolve_smooth_is_a_leaf() {
        let r = ring_xy();
        let (x, y) = vars2(&r);
        let tree = resolve(&y.sub(&x.pow(2))).unwrap();
        assert_eq!(tree.multiplicity, 1);
        assert!(tree.children.is_empty());
    }

    #[test]
    fn non_reduced_input_exceeds_depth() {
        let r = ring_xy();
        let (_, y) = vars2(&r);
        assert!(matches!(resolve(&y.pow(2)), Err(Error::DepthExceeded(_))));
    }

    #[test]
    fn delta_families() {
        // δ(y² − xⁿ) = ⌊n/2⌋.
        for n in 2u32..=13 {
            let rep = delta(&hyperelliptic(n)).unwrap();
            assert!(rep.agree, "routes disagree for n={n}");
            assert_eq!(rep.delta_combinatorial, (n / 2) as u64, "n={n}");
            // Every internal node is a double point.
            for node in rep.tree.nodes() {
                assert!(node.multiplicity <= 2);
            }
        }
    }

    #[test]
    fn delta_node_cusp_and_higher() {
        let r = ring_xy();
        let (x, y) = vars2(&r);
        let node_rep = delta(&x.mul(&y)).unwrap();
        assert_eq!(node_rep.delta_combinatorial, 1);
        assert!(node_rep.agree);

        let e6 = delta(&y.pow(3).sub(&x.pow(4))).unwrap();
        assert_eq!(e6.delta_combinatorial, 3);
        assert!(e6.agree);

        let smooth = delta(&y.sub(&x.pow(2))).unwrap();
        assert_eq!(smooth.delta_combinatorial, 0);
        assert_eq!(smooth.delta_northcott, 0);
        assert!(smooth.agree);
    }

    #[test]
    fn swapping_variables_preserves_delta() {
        let r = ring_xy();
        let (x, y) = vars2(&r);
        for f in [
            hyperelliptic(5),
            hyperelliptic(8),
            y.pow(3).sub(&x.pow(4)),
            x.mul(&y),
        ] {
            let swapped = f.substitute(&[y.clone(), x.clone()]);
            let a = delta(&f).unwrap();
            let b = delta(&swapped).unwrap();
            assert_eq!(a.delta_combinatorial, b.delta_combinatorial);
            let mut ma = a.tree.multiplicities();
            let mut mb = b.tree.multiplicities();
            ma.sort_unstable();
            mb.sort_unstable();
            assert_eq!(ma, mb);
        }
    }

    #[test]
    fn notfix_hironaka_window() {
        for n in 8u32..=12 {
            let curve = PlaneCurve::new(hyperelliptic(n)).unwrap();
            let (x, y) = vars2(curve.ring());
            let i = Ideal::new(curve.ring(), &[x.pow(6), x.pow(2).mul(&y)]).unwrap();
            let rep = is_hironaka(&curve, &i).unwrap();
            assert_eq!(rep.e0, BigInt::from(12), "n={n}");
            assert_eq!(rep.e1, BigInt::from(4), "n={n}");
            assert_eq!(rep.delta, (n / 2) as u64, "n={n}");
            assert_eq!(rep.hironaka, n == 8 || n == 9, "n={n}");
        }
    }

    #[test]
    fn jacobian_style_ideal_is_not_hironaka() {
        let curve = PlaneCurve::new(hyperelliptic(8)).unwrap();
        let (x, y) = vars2(curve.ring());
        let j = Ideal::new(curve.ring(), &[y.clone(), x.pow(7)]).unwrap();
        let rep = is_hironaka(&curve, &j).unwrap();
        assert_eq!(rep.e1, BigInt::from(1));
        assert_eq!(rep.delta, 4);
        assert!(!rep.hironaka);
    }

    #[test]
    fn maximal_ideal_of_double_point() {
        let curve = PlaneCurve::new(hyperelliptic(8)).unwrap();
        let m = Ideal::maximal(curve.ring());
        let (e0, e1) = e1_of_ideal(&curve, &m).unwrap();
        assert_eq!((e0, e1), (BigInt::from(2), BigInt::from(1)));
    }

    #[test]
    fn rational_root_machinery() {
        // (t-1)^2 (t+2) t = t^4 - 3t^2 + 2t... compute: (t-1)^2 = t^2-2t+1;
        // times (t+2) = t^3 - 3t + 2; times t = t^4 - 3t^2 + 2t.
        let c: Vec<Coefficient> = [0i64, 2, -3, 0, 1].iter().map(|&v| Coefficient::from_int(v)).collect();
        let (roots, leftover) = rational_roots(&c).unwrap();
        assert_eq!(leftover, 0);
        let printable: Vec<(String, usize)> =
            roots.iter().map(|(r, m)| (r.to_string(), *m)).collect();
        assert_eq!(
            printable,
            vec![
                ("-2".to_string(), 1),
                ("0".to_string(), 1),
                ("1".to_string(), 2)
            ]
        );
        // t^2 - 2: no rational roots, degree 2 remains.
        let c: Vec<Coefficient> = [-2i64, 0, 1].iter().map(|&v| Coefficient::from_int(v)).collect();
        let (roots, leftover) = rational_roots(&c).unwrap();
        assert!(roots.is_empty());
        assert_eq!(leftover, 2);
        // Non-monic with fractional root: 2t - 1.
        let c: Vec<Coefficient> = [-1i64, 2].iter().map(|&v| Coefficient::from_int(v)).collect();
        let (roots, leftover) = rational_roots(&c).unwrap();
        assert_eq!(leftover, 0);
        assert_eq!(roots[0].0, BigRational::new(BigInt::one(), BigInt::from(2)));
    }
}
