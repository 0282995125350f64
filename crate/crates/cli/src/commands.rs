//! Shared command implementations: each builds a report struct from typed
//! inputs, so the flag dispatcher and the session interpreter render
//! identically.

use std::sync::Arc;
use std::time::Instant;

use hscalc_core::{
    curves, hilbert, verify, Ideal, MonomialOrder, PlaneCurve, Polynomial, Result, RingContext,
};

use crate::report::{
    big_strings, u64_strings, CoeffsOut, DeltaOut, HhcOut, HironakaOut, HvectorOut, PowersOut,
    ResolveOut, TreeOut, ValuesOut, VerifyOut,
};

/// Options shared by every command invocation.
#[derive(Clone)]
pub struct Ctx {
    pub order: MonomialOrder,
    pub order_name: String,
    pub max_power: usize,
    pub timings: bool,
}

impl Ctx {
    fn timing(&self, start: Instant) -> Option<String> {
        self.timings.then(|| start.elapsed().as_millis().to_string())
    }
}

fn ideal_echo(ideal: &Ideal, order: MonomialOrder) -> Vec<String> {
    ideal.generators().iter().map(|g| g.format_ordered(order)).collect()
}

pub fn coeffs(ideal: &Ideal, ctx: &Ctx) -> Result<CoeffsOut> {
    let start = Instant::now();
    let data = hilbert::e_coefficients_capped(ideal, ctx.max_power)?;
    Ok(CoeffsOut {
        command: "coeffs",
        ring: ideal.ring().to_string(),
        order: ctx.order_name.clone(),
        ideal: ideal_echo(ideal, ctx.order),
        max_power: ctx.max_power.to_string(),
        dimension: data.d.to_string(),
        stable_from: data.n0.to_string(),
        e: big_strings(&data.e),
        timing_ms: ctx.timing(start),
    })
}

pub fn hvector(ideal: &Ideal, ctx: &Ctx) -> Result<HvectorOut> {
    let start = Instant::now();
    let data = hilbert::e_coefficients_capped(ideal, ctx.max_power)?;
    Ok(HvectorOut {
        command: "hvector",
        ring: ideal.ring().to_string(),
        order: ctx.order_name.clone(),
        ideal: ideal_echo(ideal, ctx.order),
        max_power: ctx.max_power.to_string(),
        dimension: data.d.to_string(),
        s: (data.a.len() - 1).to_string(),
        a: big_strings(&data.a),
        timing_ms: ctx.timing(start),
    })
}

pub fn hilbert_values(ideal: &Ideal, count: usize, ctx: &Ctx) -> Result<ValuesOut> {
    let start = Instant::now();
    let values = hilbert::hs_values(ideal, count - 1)?;
    Ok(ValuesOut {
        command: "hilbert-values",
        ring: ideal.ring().to_string(),
        order: ctx.order_name.clone(),
        ideal: ideal_echo(ideal, ctx.order),
        count: count.to_string(),
        values: u64_strings(&values),
        timing_ms: ctx.timing(start),
    })
}

pub fn check_hhc(ideal: &Ideal, ctx: &Ctx) -> Result<HhcOut> {
    let start = Instant::now();
    let report = verify::check_hhc(ideal)?;
    Ok(HhcOut::from_report(
        "check-hhc",
        ideal.ring().to_string(),
        ctx.order_name.clone(),
        ideal_echo(ideal, ctx.order),
        &report,
        ctx.timing(start),
    ))
}

pub fn check_powers(ideal: &Ideal, powers: usize, ctx: &Ctx) -> Result<PowersOut> {
    let start = Instant::now();
    let report = verify::check_power_invariance(ideal, powers)?;
    Ok(PowersOut::from_report(
        ideal.ring().to_string(),
        ctx.order_name.clone(),
        ideal_echo(ideal, ctx.order),
        powers,
        &report,
        ctx.timing(start),
    ))
}

pub fn curve_resolve(f: &Polynomial, ctx: &Ctx) -> Result<ResolveOut> {
    let start = Instant::now();
    let tree = curves::resolve(f)?;
    let multiplicities: Vec<String> =
        tree.multiplicities().iter().map(u32::to_string).collect();
    Ok(ResolveOut {
        command: "curve-resolve",
        ring: f.ring().to_string(),
        order: ctx.order_name.clone(),
        curve: f.format_ordered(ctx.order),
        points: tree.nodes().len().to_string(),
        multiplicities,
        tree: TreeOut::new(&tree, ctx.order),
        timing_ms: ctx.timing(start),
    })
}

pub fn delta(f: &Polynomial, ctx: &Ctx) -> Result<DeltaOut> {
    let start = Instant::now();
    let report = curves::delta(f)?;
    Ok(DeltaOut::from_report(
        f.ring().to_string(),
        ctx.order_name.clone(),
        f.format_ordered(ctx.order),
        &report,
        ctx.timing(start),
    ))
}

pub fn hironaka(curve: &PlaneCurve, ideal: &Ideal, ctx: &Ctx) -> Result<HironakaOut> {
    let start = Instant::now();
    let report = curves::is_hironaka(curve, ideal)?;
    Ok(HironakaOut::from_report(
        curve.ring().to_string(),
        ctx.order_name.clone(),
        curve.equation().format_ordered(ctx.order),
        ideal_echo(ideal, ctx.order),
        &report,
        ctx.timing(start),
    ))
}

/// Runs the whole verification table; the caller decides the exit status
/// from `all_pass`.
pub fn verify_paper(timings: bool) -> Result<(VerifyOut, hscalc_core::SuiteReport)> {
    let start = Instant::now();
    let report = verify::run_paper_suite()?;
    let timing = timings.then(|| start.elapsed().as_millis().to_string());
    Ok((VerifyOut::from_report(&report, timing), report))
}

/// Builds the quotient ring `base/(f)` and parses the generator list there.
pub fn quotient_ideal(
    base: &Arc<RingContext>,
    modulus: Polynomial,
    gens_text: &str,
) -> Result<Ideal> {
    let ring = RingContext::quotient_ring(base, modulus)?;
    let gens = crate::parse::parse_generators(gens_text, &ring)?;
    Ideal::new(&ring, &gens)
}
