//! Report structs with a fixed JSON key order (struct declaration order)
//! plus aligned text renderers.
//!
//! Every integer is serialized as a decimal string so consumers never face
//! 64-bit overflow; booleans stay booleans. `timing_ms` appears only when
//! timings were requested, keeping the default output byte-identical across
//! runs.

use hscalc_core::{
    ChartLabel, DeltaReport, HHCReport, HilbertSamuelData, HironakaReport, PowerReport,
    ResolutionNode, SuiteReport,
};
use num_bigint::BigInt;
use serde::Serialize;

pub fn big_strings(v: &[BigInt]) -> Vec<String> {
    v.iter().map(BigInt::to_string).collect()
}

pub fn u64_strings(v: &[u64]) -> Vec<String> {
    v.iter().map(u64::to_string).collect()
}

fn vector(v: &[String]) -> String {
    format!("({})", v.join(", "))
}

/// Aligned `key  value` lines; the value column starts two spaces after the
/// longest key.
fn kv_block(pairs: &[(&str, String)]) -> String {
    let w = pairs.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in pairs {
        out.push_str(&format!("{k:<w$}  {v}\n"));
    }
    out
}

fn push_timing(pairs: &mut Vec<(&'static str, String)>, timing: &Option<String>) {
    if let Some(ms) = timing {
        pairs.push(("timing (ms)", ms.clone()));
    }
}

#[derive(Serialize)]
pub struct CoeffsOut {
    pub command: &'static str,
    pub ring: String,
    pub order: String,
    pub ideal: Vec<String>,
    pub max_power: String,
    pub dimension: String,
    pub stable_from: String,
    pub e: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<String>,
}

impl CoeffsOut {
    pub fn text(&self) -> String {
        let mut pairs = vec![
            ("command", self.command.to_string()),
            ("ring", self.ring.clone()),
            ("order", self.order.clone()),
            ("ideal", vector(&self.ideal)),
            ("dimension", self.dimension.clone()),
            ("stable from", format!("n = {}", self.stable_from)),
            ("e", vector(&self.e)),
        ];
        push_timing(&mut pairs, &self.timing_ms);
        kv_block(&pairs)
    }
}

#[derive(Serialize)]
pub struct HvectorOut {
    pub command: &'static str,
    pub ring: String,
    pub order: String,
    pub ideal: Vec<String>,
    pub max_power: String,
    pub dimension: String,
    pub s: String,
    pub a: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<String>,
}

impl HvectorOut {
    pub fn text(&self) -> String {
        let mut pairs = vec![
            ("command", self.command.to_string()),
            ("ring", self.ring.clone()),
            ("order", self.order.clone()),
            ("ideal", vector(&self.ideal)),
            ("dimension", self.dimension.clone()),
            ("s", self.s.clone()),
            ("a", vector(&self.a)),
        ];
        push_timing(&mut pairs, &self.timing_ms);
        kv_block(&pairs)
    }
}

#[derive(Serialize)]
pub struct ValuesOut {
    pub command: &'static str,
    pub ring: String,
    pub order: String,
    pub ideal: Vec<String>,
    pub count: String,
    pub values: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<String>,
}

impl ValuesOut {
    pub fn text(&self) -> String {
        let mut pairs = vec![
            ("command", self.command.to_string()),
            ("ring", self.ring.clone()),
            ("order", self.order.clone()),
            ("ideal", vector(&self.ideal)),
        ];
        push_timing(&mut pairs, &self.timing_ms);
        let mut out = kv_block(&pairs);
        out.push_str("  n  h(n)\n");
        for (n, v) in self.values.iter().enumerate() {
            out.push_str(&format!("{n:>3}  {v}\n"));
        }
        out
    }
}

#[derive(Serialize)]
pub struct ClauseOut {
    pub length_term: String,
    pub bound: String,
    pub left_ok: bool,
    pub right_ok: bool,
    pub a1_relation_ok: bool,
}

#[derive(Serialize)]
pub struct VanishOut {
    pub i: String,
    pub value: String,
    pub ok: bool,
}

#[derive(Serialize)]
pub struct ChainOut {
    pub i: String,
    pub lhs: String,
    pub rhs: String,
    pub ok: bool,
}

#[derive(Serialize)]
pub struct RangeOut {
    pub i: String,
    pub value: String,
    pub bound: String,
    pub ok: bool,
}

#[derive(Serialize)]
pub struct HhcOut {
    pub command: &'static str,
    pub ring: String,
    pub order: String,
    pub ideal: Vec<String>,
    pub dimension: String,
    pub s: String,
    pub e: Vec<String>,
    pub a: Vec<String>,
    pub colength: String,
    pub mu: String,
    pub length_i_mod_i2: String,
    pub clause_i_printed: ClauseOut,
    pub clause_i_mu: ClauseOut,
    pub clause_ii: Vec<VanishOut>,
    pub clause_iii: Vec<ChainOut>,
    pub clause_iv: Vec<RangeOut>,
    pub hypotheses_witnessed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<String>,
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAIL"
    }
}

impl HhcOut {
    pub fn from_report(
        command: &'static str,
        ring: String,
        order: String,
        ideal: Vec<String>,
        r: &HHCReport,
        timing_ms: Option<String>,
    ) -> Self {
        let clause = |c: &hscalc_core::verify::ClauseI| ClauseOut {
            length_term: c.length_term.to_string(),
            bound: c.bound.to_string(),
            left_ok: c.left_ok,
            right_ok: c.right_ok,
            a1_relation_ok: c.a1_relation_ok,
        };
        HhcOut {
            command,
            ring,
            order,
            ideal,
            dimension: r.d.to_string(),
            s: r.s.to_string(),
            e: big_strings(&r.e),
            a: big_strings(&r.a),
            colength: r.colength.to_string(),
            mu: r.mu.to_string(),
            length_i_mod_i2: r.length_i_mod_i2.to_string(),
            clause_i_printed: clause(&r.clause_i_printed),
            clause_i_mu: clause(&r.clause_i_mu),
            clause_ii: r
                .clause_ii
                .iter()
                .map(|c| VanishOut { i: c.i.to_string(), value: c.value.to_string(), ok: c.ok })
                .collect(),
            clause_iii: r
                .clause_iii
                .iter()
                .map(|c| ChainOut {
                    i: c.i.to_string(),
                    lhs: c.lhs.to_string(),
                    rhs: c.rhs.to_string(),
                    ok: c.ok,
                })
                .collect(),
            clause_iv: r
                .clause_iv
                .iter()
                .map(|c| RangeOut {
                    i: c.i.to_string(),
                    value: c.value.to_string(),
                    bound: c.bound.to_string(),
                    ok: c.ok,
                })
                .collect(),
            hypotheses_witnessed: r.hypotheses_witnessed,
            timing_ms,
        }
    }

    pub fn text(&self) -> String {
        let mut pairs = vec![
            ("command", self.command.to_string()),
            ("ring", self.ring.clone()),
            ("order", self.order.clone()),
            ("ideal", vector(&self.ideal)),
            ("dimension", self.dimension.clone()),
            ("s", self.s.clone()),
            ("e", vector(&self.e)),
            ("a", vector(&self.a)),
            ("colength", self.colength.clone()),
            ("mu", self.mu.clone()),
            ("l(I/I^2)", self.length_i_mod_i2.clone()),
            (
                "hypotheses",
                if self.hypotheses_witnessed {
                    "witnessed (a_i > 0 for 0 <= i <= s)".to_string()
                } else {
                    "not witnessed (some a_i <= 0); clauses reported, not asserted".to_string()
                },
            ),
        ];
        push_timing(&mut pairs, &self.timing_ms);
        let mut out = kv_block(&pairs);
        let clause_line = |label: &str, c: &ClauseOut| {
            format!(
                "clause (i) [{label}]: s <= {bound} {l} | {bound} <= e_0 {r} | a_1 relation {a} (length term {t})\n",
                bound = c.bound,
                l = mark(c.left_ok),
                r = mark(c.right_ok),
                a = mark(c.a1_relation_ok),
                t = c.length_term,
            )
        };
        out.push_str(&clause_line("printed, l(I/I^2)", &self.clause_i_printed));
        out.push_str(&clause_line("mu reading", &self.clause_i_mu));
        if self.clause_ii.is_empty() {
            out.push_str("clause (ii): vacuous (s >= d)\n");
        }
        for c in &self.clause_ii {
            out.push_str(&format!("clause (ii), i = {}: e_i = {} {}\n", c.i, c.value, mark(c.ok)));
        }
        for c in &self.clause_iii {
            out.push_str(&format!(
                "clause (iii), i = {}: 0 <= {} <= {} {}\n",
                c.i,
                c.lhs,
                c.rhs,
                mark(c.ok)
            ));
        }
        for c in &self.clause_iv {
            out.push_str(&format!(
                "clause (iv), i = {}: 0 <= {} <= {} {}\n",
                c.i,
                c.value,
                c.bound,
                mark(c.ok)
            ));
        }
        out
    }
}

#[derive(Serialize)]
pub struct PowerRowOut {
    pub n: String,
    pub dimension: String,
    pub stable_from: String,
    pub e: Vec<String>,
    pub a: Vec<String>,
    pub values: Vec<String>,
}

impl PowerRowOut {
    fn new(n: usize, data: &HilbertSamuelData) -> Self {
        PowerRowOut {
            n: n.to_string(),
            dimension: data.d.to_string(),
            stable_from: data.n0.to_string(),
            e: big_strings(&data.e),
            a: big_strings(&data.a),
            values: u64_strings(&data.values),
        }
    }
}

#[derive(Serialize)]
pub struct PowersOut {
    pub command: &'static str,
    pub ring: String,
    pub order: String,
    pub ideal: Vec<String>,
    pub powers: String,
    pub rows: Vec<PowerRowOut>,
    pub e_d_constant: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<String>,
}

impl PowersOut {
    pub fn from_report(
        ring: String,
        order: String,
        ideal: Vec<String>,
        powers: usize,
        r: &PowerReport,
        timing_ms: Option<String>,
    ) -> Self {
        PowersOut {
            command: "check-powers",
            ring,
            order,
            ideal,
            powers: powers.to_string(),
            rows: r.rows.iter().map(|row| PowerRowOut::new(row.n, &row.data)).collect(),
            e_d_constant: r.e_d_constant,
            timing_ms,
        }
    }

    pub fn text(&self) -> String {
        let mut pairs = vec![
            ("command", self.command.to_string()),
            ("ring", self.ring.clone()),
            ("order", self.order.clone()),
            ("ideal", vector(&self.ideal)),
            ("e_d constant", mark(self.e_d_constant).to_string()),
        ];
        push_timing(&mut pairs, &self.timing_ms);
        let mut out = kv_block(&pairs);
        for row in &self.rows {
            out.push_str(&format!(
                "I^{}: d = {}, e = {}, a = {}\n",
                row.n,
                row.dimension,
                vector(&row.e),
                vector(&row.a)
            ));
        }
        out
    }
}

#[derive(Serialize)]
pub struct TreeOut {
    pub equation: String,
    pub multiplicity: String,
    pub chart_path: Vec<String>,
    pub children: Vec<TreeOut>,
}

impl TreeOut {
    pub fn new(node: &ResolutionNode, order: hscalc_core::MonomialOrder) -> Self {
        TreeOut {
            equation: node.local_equation.format_ordered(order),
            multiplicity: node.multiplicity.to_string(),
            chart_path: node.chart_path.iter().map(ChartLabel::to_string).collect(),
            children: node.children.iter().map(|c| TreeOut::new(c, order)).collect(),
        }
    }

    fn render(&self, depth: usize, out: &mut String) {
        let indent = "  ".repeat(depth);
        let path = if self.chart_path.is_empty() {
            "origin".to_string()
        } else {
            self.chart_path.join("")
        };
        out.push_str(&format!(
            "{indent}[{path}] multiplicity {}: {}\n",
            self.multiplicity, self.equation
        ));
        for c in &self.children {
            c.render(depth + 1, out);
        }
    }
}

#[derive(Serialize)]
pub struct ResolveOut {
    pub command: &'static str,
    pub ring: String,
    pub order: String,
    pub curve: String,
    pub points: String,
    pub multiplicities: Vec<String>,
    pub tree: TreeOut,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<String>,
}

impl ResolveOut {
    pub fn text(&self) -> String {
        let mut pairs = vec![
            ("command", self.command.to_string()),
            ("ring", self.ring.clone()),
            ("order", self.order.clone()),
            ("curve", self.curve.clone()),
            ("points", self.points.clone()),
            ("multiplicities", vector(&self.multiplicities)),
        ];
        push_timing(&mut pairs, &self.timing_ms);
        let mut out = kv_block(&pairs);
        self.tree.render(0, &mut out);
        out
    }
}

#[derive(Serialize)]
pub struct DeltaOut {
    pub command: &'static str,
    pub ring: String,
    pub order: String,
    pub curve: String,
    pub delta: String,
    pub delta_combinatorial: String,
    pub delta_northcott: String,
    pub agree: bool,
    pub multiplicities: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<String>,
}

impl DeltaOut {
    pub fn from_report(
        ring: String,
        order: String,
        curve: String,
        r: &DeltaReport,
        timing_ms: Option<String>,
    ) -> Self {
        DeltaOut {
            command: "delta",
            ring,
            order,
            curve,
            delta: r.delta_combinatorial.to_string(),
            delta_combinatorial: r.delta_combinatorial.to_string(),
            delta_northcott: r.delta_northcott.to_string(),
            agree: r.agree,
            multiplicities: r.tree.multiplicities().iter().map(u32::to_string).collect(),
            timing_ms,
        }
    }

    pub fn text(&self) -> String {
        let mut pairs = vec![
            ("command", self.command.to_string()),
            ("ring", self.ring.clone()),
            ("order", self.order.clone()),
            ("curve", self.curve.clone()),
            ("delta", self.delta.clone()),
            ("combinatorial", self.delta_combinatorial.clone()),
            ("northcott", self.delta_northcott.clone()),
            ("routes agree", mark(self.agree).to_string()),
            ("multiplicities", vector(&self.multiplicities)),
        ];
        push_timing(&mut pairs, &self.timing_ms);
        kv_block(&pairs)
    }
}

#[derive(Serialize)]
pub struct HironakaOut {
    pub command: &'static str,
    pub ring: String,
    pub order: String,
    pub curve: String,
    pub ideal: Vec<String>,
    pub e0: String,
    pub e1: String,
    pub delta: String,
    pub hironaka: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<String>,
}

impl HironakaOut {
    pub fn from_report(
        ring: String,
        order: String,
        curve: String,
        ideal: Vec<String>,
        r: &HironakaReport,
        timing_ms: Option<String>,
    ) -> Self {
        HironakaOut {
            command: "hironaka",
            ring,
            order,
            curve,
            ideal,
            e0: r.e0.to_string(),
            e1: r.e1.to_string(),
            delta: r.delta.to_string(),
            hironaka: r.hironaka,
            timing_ms,
        }
    }

    pub fn text(&self) -> String {
        let mut pairs = vec![
            ("command", self.command.to_string()),
            ("ring", self.ring.clone()),
            ("order", self.order.clone()),
            ("curve", self.curve.clone()),
            ("ideal", vector(&self.ideal)),
            ("e_0", self.e0.clone()),
            ("e_1", self.e1.clone()),
            ("delta", self.delta.clone()),
            ("hironaka", if self.hironaka { "yes".into() } else { "no".into() }),
        ];
        push_timing(&mut pairs, &self.timing_ms);
        kv_block(&pairs)
    }
}

#[derive(Serialize)]
pub struct SuiteRowOut {
    pub criterion: String,
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

#[derive(Serialize)]
pub struct VerifyOut {
    pub command: &'static str,
    pub rows: Vec<SuiteRowOut>,
    pub rows_passed: String,
    pub rows_total: String,
    pub all_pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<String>,
}

impl VerifyOut {
    pub fn from_report(r: &SuiteReport, timing_ms: Option<String>) -> Self {
        VerifyOut {
            command: "verify-paper",
            rows: r
                .rows
                .iter()
                .map(|row| SuiteRowOut {
                    criterion: row.criterion.to_string(),
                    name: row.name.clone(),
                    expected: row.expected.clone(),
                    computed: row.computed.clone(),
                    pass: row.pass,
                })
                .collect(),
            rows_passed: r.rows.iter().filter(|row| row.pass).count().to_string(),
            rows_total: r.rows.len().to_string(),
            all_pass: r.all_pass(),
            timing_ms,
        }
    }

    pub fn text(&self, report: &SuiteReport) -> String {
        let mut out = report.to_string();
        if let Some(ms) = &self.timing_ms {
            out.push_str(&format!("timing (ms)  {ms}\n"));
        }
        out
    }
}
