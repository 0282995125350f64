//! Session files: a line-oriented script declaring one ring, an optional
//! modulus, named ideals, and a list of commands over them.
//!
//! ```text
//! # comments run to end of line; blank lines are skipped
//! ring Q[x,y]
//! mod y^2 - x^8            # quotient modulus; doubles as the curve
//! ideal I = x^6, x^2 y
//! coeffs I
//! hvector I
//! hilbert-values I 10
//! check-hhc I
//! check-powers I 3
//! curve-resolve
//! delta
//! hironaka I
//! ```
//!
//! Every identifier must be declared before use; `ring` must precede `mod`
//! and every `ideal`; `mod` must precede every `ideal` so generators are
//! read in the quotient. The curve commands require `mod`.

use std::collections::HashMap;
use std::sync::Arc;

use hscalc_core::{Error, FieldKind, Ideal, PlaneCurve, Polynomial, Result, RingContext};
use serde::Serialize;

use crate::commands::{self, Ctx};
use crate::parse;

#[derive(Debug, Serialize)]
pub struct SessionOut {
    pub command: &'static str,
    pub file: String,
    pub reports: Vec<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<String>,
}

struct State {
    base: Option<Arc<RingContext>>,
    modulus: Option<Polynomial>,
    effective: Option<Arc<RingContext>>,
    ideals: HashMap<String, Ideal>,
}

impl State {
    fn effective(&self, line: usize) -> Result<&Arc<RingContext>> {
        self.effective
            .as_ref()
            .ok_or_else(|| perr(line, 1, "no ring declared yet"))
    }

    fn ideal(&self, name: &str, line: usize, col: usize) -> Result<&Ideal> {
        self.ideals
            .get(name)
            .ok_or_else(|| perr(line, col, format!("ideal '{name}' is not declared")))
    }

    fn curve(&self, line: usize) -> Result<PlaneCurve> {
        let Some(modulus) = &self.modulus else {
            return Err(perr(line, 1, "this command needs a 'mod' declaration (the curve)"));
        };
        PlaneCurve::new(modulus.clone())
    }
}

fn perr(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, col, msg: msg.into() }
}

/// Shifts a sub-parser error (positions relative to a single-line fragment)
/// to session-file coordinates.
fn at(line: usize, offset: usize, e: Error) -> Error {
    match e {
        Error::Parse { line: 1, col, msg } => perr(line, col + offset, msg),
        Error::Parse { col, msg, .. } => perr(line, col, msg),
        other => other,
    }
}

/// Runs a session script. `text` is the file contents; `file` only labels
/// the report. Returns per-command reports as (JSON value, rendered text).
pub fn run_session(
    text: &str,
    file: &str,
    ctx: &Ctx,
) -> Result<(SessionOut, Vec<String>)> {
    let start = std::time::Instant::now();
    let mut state =
        State { base: None, modulus: None, effective: None, ideals: HashMap::new() };
    let mut reports: Vec<serde_json::Value> = Vec::new();
    let mut texts: Vec<String> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        if line.trim().is_empty() {
            continue;
        }
        let word_start = line.len() - line.trim_start().len();
        let trimmed = line.trim();
        let (word, rest) = match trimmed.find(char::is_whitespace) {
            Some(i) => (&trimmed[..i], trimmed[i..].trim_start()),
            None => (trimmed, ""),
        };
        // Column (1-based, chars) where `rest` begins in the original line.
        let rest_offset = match rest.is_empty() {
            true => line.chars().count(),
            false => {
                let byte = line.rfind(rest).expect("rest is a suffix of line");
                line[..byte].chars().count()
            }
        };
        let mut emit = |value: serde_json::Value, text: String| {
            reports.push(value);
            texts.push(text);
        };
        match word {
            "ring" => {
                if state.base.is_some() {
                    return Err(perr(line_no, word_start + 1, "ring is already declared"));
                }
                if rest.is_empty() {
                    return Err(perr(line_no, rest_offset + 1, "expected a ring spec"));
                }
                let ring = parse::parse_ring_spec(rest, FieldKind::Q)
                    .map_err(|e| at(line_no, rest_offset, e))?;
                state.effective = Some(ring.clone());
                state.base = Some(ring);
            }
            "mod" => {
                let base = state.effective(line_no)?.clone();
                if state.modulus.is_some() {
                    return Err(perr(line_no, word_start + 1, "mod is already declared"));
                }
                if !state.ideals.is_empty() {
                    return Err(perr(
                        line_no,
                        word_start + 1,
                        "mod must be declared before any ideal",
                    ));
                }
                let f = parse::parse_polynomial(rest, &base)
                    .map_err(|e| at(line_no, rest_offset, e))?;
                let quotient = RingContext::quotient_ring(&base, f.clone())?;
                state.modulus = Some(f);
                state.effective = Some(quotient);
            }
            "ideal" => {
                let ring = state.effective(line_no)?.clone();
                let Some((name_part, gens_part)) = rest.split_once('=') else {
                    return Err(perr(
                        line_no,
                        rest_offset + 1,
                        "expected 'ideal <name> = <generators>'",
                    ));
                };
                let name = name_part.trim();
                if name.is_empty()
                    || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
                    || name.starts_with(|c: char| c.is_ascii_digit())
                {
                    return Err(perr(
                        line_no,
                        rest_offset + 1,
                        format!("'{name}' is not a valid ideal name"),
                    ));
                }
                if state.ideals.contains_key(name) {
                    return Err(perr(
                        line_no,
                        rest_offset + 1,
                        format!("ideal '{name}' is already declared"),
                    ));
                }
                let gens_offset =
                    rest_offset + rest[..rest.len() - gens_part.len()].chars().count();
                let gens = parse::parse_generators(gens_part, &ring)
                    .map_err(|e| at(line_no, gens_offset, e))?;
                let ideal = Ideal::new(&ring, &gens)?;
                state.ideals.insert(name.to_string(), ideal);
            }
            "coeffs" | "hvector" | "check-hhc" | "hilbert-values" | "check-powers"
            | "hironaka" => {
                let mut args = rest.split_whitespace();
                let Some(name) = args.next() else {
                    return Err(perr(line_no, rest_offset + 1, "expected an ideal name"));
                };
                let ideal = state.ideal(name, line_no, rest_offset + 1)?.clone();
                let extra = args.next();
                if args.next().is_some() {
                    return Err(perr(line_no, rest_offset + 1, "too many arguments"));
                }
                let number = |what: &str, default: usize, lo: usize| -> Result<usize> {
                    let Some(text) = extra else { return Ok(default) };
                    let n: usize = text.parse().map_err(|_| {
                        perr(line_no, rest_offset + 1, format!("invalid {what} '{text}'"))
                    })?;
                    if n < lo {
                        return Err(perr(
                            line_no,
                            rest_offset + 1,
                            format!("{what} must be at least {lo}"),
                        ));
                    }
                    Ok(n)
                };
                match word {
                    "coeffs" => {
                        if extra.is_some() {
                            return Err(perr(line_no, rest_offset + 1, "too many arguments"));
                        }
                        let out = commands::coeffs(&ideal, ctx)?;
                        emit(serde_json::to_value(&out).expect("serializable"), out.text());
                    }
                    "hvector" => {
                        if extra.is_some() {
                            return Err(perr(line_no, rest_offset + 1, "too many arguments"));
                        }
                        let out = commands::hvector(&ideal, ctx)?;
                        emit(serde_json::to_value(&out).expect("serializable"), out.text());
                    }
                    "check-hhc" => {
                        if extra.is_some() {
                            return Err(perr(line_no, rest_offset + 1, "too many arguments"));
                        }
                        let out = commands::check_hhc(&ideal, ctx)?;
                        emit(serde_json::to_value(&out).expect("serializable"), out.text());
                    }
                    "hilbert-values" => {
                        let count = number("count", 8, 1)?;
                        let out = commands::hilbert_values(&ideal, count, ctx)?;
                        emit(serde_json::to_value(&out).expect("serializable"), out.text());
                    }
                    "check-powers" => {
                        let powers = number("power bound", 3, 2)?;
                        let out = commands::check_powers(&ideal, powers, ctx)?;
                        emit(serde_json::to_value(&out).expect("serializable"), out.text());
                    }
                    "hironaka" => {
                        if extra.is_some() {
                            return Err(perr(line_no, rest_offset + 1, "too many arguments"));
                        }
                        let curve = state.curve(line_no)?;
                        let out = commands::hironaka(&curve, &ideal, ctx)?;
                        emit(serde_json::to_value(&out).expect("serializable"), out.text());
                    }
                    _ => unreachable!(),
                }
            }
            "curve-resolve" | "delta" => {
                if !rest.is_empty() {
                    return Err(perr(line_no, rest_offset + 1, "this command takes no arguments"));
                }
                let curve = state.curve(line_no)?;
                match word {
                    "curve-resolve" => {
                        let out = commands::curve_resolve(curve.equation(), ctx)?;
                        emit(serde_json::to_value(&out).expect("serializable"), out.text());
                    }
                    "delta" => {
                        let out = commands::delta(curve.equation(), ctx)?;
                        emit(serde_json::to_value(&out).expect("serializable"), out.text());
                    }
                    _ => unreachable!(),
                }
            }
            other => {
                return Err(perr(
                    line_no,
                    word_start + 1,
                    format!("unknown directive '{other}'"),
                ));
            }
        }
    }
    let timing_ms = ctx.timings.then(|| start.elapsed().as_millis().to_string());
    Ok((SessionOut { command: "run", file: file.to_string(), reports, timing_ms }, texts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use hscalc_core::MonomialOrder;

    fn ctx() -> Ctx {
        Ctx {
            order: MonomialOrder::DegRevLex,
            order_name: "degrevlex".into(),
            max_power: 64,
            timings: false,
        }
    }

    #[test]
    fn declarations_then_commands() {
        let script = "\
# the notfix setting at n = 8
ring Q[x,y]
mod y^2 - x^8
ideal I = x^6, x^2 y
coeffs I
delta
hironaka I
";
        let (out, texts) = run_session(script, "s.hs", &ctx()).unwrap();
        assert_eq!(out.reports.len(), 3);
        assert_eq!(texts.len(), 3);
        assert_eq!(out.reports[0]["command"], "coeffs");
        assert_eq!(out.reports[0]["e"][0], "12");
        assert_eq!(out.reports[0]["e"][1], "4");
        assert_eq!(out.reports[1]["delta"], "4");
        assert_eq!(out.reports[2]["hironaka"], true);
    }

    #[test]
    fn error_positions_are_file_relative() {
        let script = "ring Q[x,y]\nideal I = x^2, w\n";
        match run_session(script, "s.hs", &ctx()) {
            Err(Error::Parse { line, col, msg }) => {
                assert_eq!(line, 2);
                assert_eq!(col, 16);
                assert!(msg.contains("unknown variable 'w'"), "{msg}");
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn ordering_rules_are_enforced() {
        let cases = [
            ("coeffs I\n", "not declared"),
            ("mod y^2 - x^3\n", "no ring declared"),
            ("ideal I = x, y\n", "no ring declared"),
            ("ring Q[x,y]\ncoeffs I\n", "not declared"),
            ("ring Q[x,y]\nring Q[u,v]\n", "already declared"),
            ("ring Q[x,y]\nideal I = x, y\nmod y^2 - x^3\n", "before any ideal"),
            ("ring Q[x,y]\ndelta\n", "needs a 'mod'"),
            ("ring Q[x,y]\nideal I = x, y\nideal I = x, y\n", "already declared"),
            ("ring Q[x,y]\nfrobnicate I\n", "unknown directive"),
            ("ring Q[x,y]\nideal 2bad = x, y\n", "not a valid ideal name"),
        ];
        for (script, needle) in cases {
            match run_session(script, "s.hs", &ctx()) {
                Err(Error::Parse { msg, .. }) => {
                    assert!(msg.contains(needle), "script {script:?}: {msg}");
                }
                other => panic!("script {script:?}: expected parse error, got {other:?}"),
            }
        }
    }
}
