//! Text → algebra: ring specs, polynomial expressions, and generator lists.
//!
//! Grammar (whitespace insignificant, positions tracked for errors):
//!
//! ```text
//! expr     := [+|-] product { (+|-) product }
//! product  := atom { [*] atom }                 (juxtaposition allowed)
//! atom     := nat [/ nat] | ident [^ nat] | ( expr ) [^ nat]
//! ```
//!
//! Generator lists are comma-separated expressions; an entry that is exactly
//! `m` or `m^k` — in a ring with no variable named `m` — expands to all
//! monomials of total degree `k`, the generators of the k-th power of the
//! maximal ideal.

use std::sync::Arc;

use hscalc_core::{Error, FieldKind, Monomial, Polynomial, Result, RingContext};

#[derive(Debug, Clone, PartialEq, Eq)]
enum TokKind {
    Ident(String),
    Nat(u64),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Colon,
}

#[derive(Debug, Clone)]
struct Tok {
    kind: TokKind,
    line: usize,
    col: usize,
}

fn err(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, col, msg: msg.into() }
}

fn tokenize(text: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let (mut line, mut col) = (1usize, 1usize);
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (tline, tcol) = (line, col);
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next().expect("peeked");
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
            c
        };
        if c.is_whitespace() {
            bump(&mut chars);
            continue;
        }
        let kind = match c {
            '+' => {
                bump(&mut chars);
                TokKind::Plus
            }
            '-' => {
                bump(&mut chars);
                TokKind::Minus
            }
            '*' => {
                bump(&mut chars);
                TokKind::Star
            }
            '^' => {
                bump(&mut chars);
                TokKind::Caret
            }
            '/' => {
                bump(&mut chars);
                TokKind::Slash
            }
            '(' => {
                bump(&mut chars);
                TokKind::LParen
            }
            ')' => {
                bump(&mut chars);
                TokKind::RParen
            }
            '[' => {
                bump(&mut chars);
                TokKind::LBracket
            }
            ']' => {
                bump(&mut chars);
                TokKind::RBracket
            }
            ',' => {
                bump(&mut chars);
                TokKind::Comma
            }
            ':' => {
                bump(&mut chars);
                TokKind::Colon
            }
            _ if c.is_ascii_digit() => {
                let mut digits = String::new();
                while chars.peek().is_some_and(|d| d.is_ascii_digit()) {
                    digits.push(bump(&mut chars));
                }
                let n: u64 = digits
                    .parse()
                    .map_err(|_| err(tline, tcol, format!("number {digits} is too large")))?;
                TokKind::Nat(n)
            }
            _ if c.is_ascii_alphabetic() || c == '_' => {
                let mut name = String::new();
                while chars
                    .peek()
                    .is_some_and(|d| d.is_ascii_alphanumeric() || *d == '_')
                {
                    name.push(bump(&mut chars));
                }
                TokKind::Ident(name)
            }
            other => return Err(err(tline, tcol, format!("unexpected character '{other}'"))),
        };
        out.push(Tok { kind, line: tline, col: tcol });
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [Tok],
    pos: usize,
    ring: &'a Arc<RingContext>,
    /// Position reported when input ends unexpectedly.
    end: (usize, usize),
}

impl<'a> Parser<'a> {
    fn new(toks: &'a [Tok], ring: &'a Arc<RingContext>, end: (usize, usize)) -> Self {
        Parser { toks, pos: 0, ring, end }
    }

    fn peek(&self) -> Option<&TokKind> {
        self.toks.get(self.pos).map(|t| &t.kind)
    }

    fn here(&self) -> (usize, usize) {
        self.toks.get(self.pos).map_or(self.end, |t| (t.line, t.col))
    }

    fn advance(&mut self) -> Option<&Tok> {
        let t = self.toks.get(self.pos);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, kind: &TokKind, what: &str) -> Result<()> {
        let (line, col) = self.here();
        match self.advance() {
            Some(t) if &t.kind == kind => Ok(()),
            Some(t) => Err(err(t.line, t.col, format!("expected {what}, found {}", show(&t.kind)))),
            None => Err(err(line, col, format!("expected {what}, found end of input"))),
        }
    }

    fn nat(&mut self, what: &str) -> Result<u64> {
        let (line, col) = self.here();
        match self.advance() {
            Some(Tok { kind: TokKind::Nat(n), .. }) => Ok(*n),
            Some(t) => Err(err(t.line, t.col, format!("expected {what}, found {}", show(&t.kind)))),
            None => Err(err(line, col, format!("expected {what}, found end of input"))),
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut negate = false;
        if matches!(self.peek(), Some(TokKind::Plus | TokKind::Minus)) {
            negate = matches!(self.peek(), Some(TokKind::Minus));
            self.advance();
        }
        let first = self.product()?;
        let mut acc = if negate { first.neg() } else { first };
        while let Some(kind) = self.peek() {
            let minus = match kind {
                TokKind::Plus => false,
                TokKind::Minus => true,
                _ => break,
            };
            self.advance();
            let next = self.product()?;
            acc = if minus { acc.sub(&next) } else { acc.add(&next) };
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<Polynomial> {
        let mut acc = self.atom()?;
        loop {
            match self.peek() {
                Some(TokKind::Star) => {
                    self.advance();
                    let next = self.atom()?;
                    acc = acc.mul(&next);
                }
                // Juxtaposition: "3 x y^2", "2(x+y)".
                Some(TokKind::Ident(_) | TokKind::Nat(_) | TokKind::LParen) => {
                    let next = self.atom()?;
                    acc = acc.mul(&next);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let (line, col) = self.here();
        let Some(tok) = self.advance() else {
            return Err(err(line, col, "expected a term, found end of input"));
        };
        let (tline, tcol) = (tok.line, tok.col);
        match tok.kind.clone() {
            TokKind::Nat(n) => {
                let num = to_i64(n, tline, tcol)?;
                let c = if matches!(self.peek(), Some(TokKind::Slash)) {
                    self.advance();
                    let (dline, dcol) = self.here();
                    let den = to_i64(self.nat("a denominator")?, dline, dcol)?;
                    if den == 0 {
                        return Err(err(dline, dcol, "zero denominator"));
                    }
                    self.ring
                        .field()
                        .from_ratio(num, den)
                        .map_err(|e| err(dline, dcol, e.to_string()))?
                } else {
                    self.ring.field().from_i64(num)
                };
                Ok(Polynomial::constant(self.ring, c))
            }
            TokKind::Ident(name) => {
                let Some(i) = self.ring.var_index(&name) else {
                    return Err(err(tline, tcol, format!("unknown variable '{name}'")));
                };
                let e = self.maybe_exponent()?;
                Ok(Polynomial::from_monomial(
                    self.ring,
                    Monomial::var_pow(i, e, self.ring.nvars()),
                ))
            }
            TokKind::LParen => {
                let inner = self.expr()?;
                self.expect(&TokKind::RParen, "')'")?;
                let e = self.maybe_exponent()?;
                Ok(inner.pow(e as u32))
            }
            other => Err(err(tline, tcol, format!("expected a term, found {}", show(&other)))),
        }
    }

    fn maybe_exponent(&mut self) -> Result<u16> {
        if !matches!(self.peek(), Some(TokKind::Caret)) {
            return Ok(1);
        }
        self.advance();
        let (line, col) = self.here();
        let n = self.nat("an exponent")?;
        u16::try_from(n).map_err(|_| err(line, col, format!("exponent {n} is too large")))
    }
}

fn to_i64(n: u64, line: usize, col: usize) -> Result<i64> {
    i64::try_from(n).map_err(|_| err(line, col, format!("coefficient {n} is too large")))
}

fn show(kind: &TokKind) -> String {
    match kind {
        TokKind::Ident(s) => format!("'{s}'"),
        TokKind::Nat(n) => format!("'{n}'"),
        TokKind::Plus => "'+'".into(),
        TokKind::Minus => "'-'".into(),
        TokKind::Star => "'*'".into(),
        TokKind::Caret => "'^'".into(),
        TokKind::Slash => "'/'".into(),
        TokKind::LParen => "'('".into(),
        TokKind::RParen => "')'".into(),
        TokKind::LBracket => "'['".into(),
        TokKind::RBracket => "']'".into(),
        TokKind::Comma => "','".into(),
        TokKind::Colon => "':'".into(),
    }
}

fn end_of(text: &str) -> (usize, usize) {
    let line = text.lines().count().max(1);
    let col = text.lines().last().map_or(1, |l| l.chars().count() + 1);
    (line, col)
}

/// Parses one polynomial over `ring`.
pub fn parse_polynomial(text: &str, ring: &Arc<RingContext>) -> Result<Polynomial> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(err(1, 1, "empty polynomial"));
    }
    let mut p = Parser::new(&toks, ring, end_of(text));
    let poly = p.expr()?;
    if let Some(t) = p.toks.get(p.pos) {
        return Err(err(t.line, t.col, format!("unexpected {}", show(&t.kind))));
    }
    Ok(poly)
}

/// Parses a comma-separated generator list, expanding `m` / `m^k` entries
/// (when `m` is not a ring variable) into all monomials of total degree `k`.
pub fn parse_generators(text: &str, ring: &Arc<RingContext>) -> Result<Vec<Polynomial>> {
    let toks = tokenize(text)?;
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    let end = end_of(text);
    let mut slices = Vec::new();
    for (i, t) in toks.iter().enumerate() {
        match t.kind {
            TokKind::LParen => depth += 1,
            TokKind::RParen => depth = depth.saturating_sub(1),
            TokKind::Comma if depth == 0 => {
                slices.push((&toks[start..i], (t.line, t.col)));
                start = i + 1;
            }
            _ => {}
        }
    }
    slices.push((&toks[start..], end));
    for (slice, pos) in slices {
        if slice.is_empty() {
            return Err(err(pos.0, pos.1, "empty generator"));
        }
        if ring.var_index("m").is_none() {
            if let Some(k) = maximal_power_entry(slice) {
                expand_maximal_power(ring, k, slice[0].line, slice[0].col, &mut out)?;
                continue;
            }
        }
        let mut p = Parser::new(slice, ring, pos);
        let poly = p.expr()?;
        if let Some(t) = slice.get(p.pos) {
            return Err(err(t.line, t.col, format!("unexpected {}", show(&t.kind))));
        }
        out.push(poly);
    }
    Ok(out)
}

/// Recognizes a whole entry of the form `m` or `m^k`.
fn maximal_power_entry(slice: &[Tok]) -> Option<u16> {
    match slice {
        [Tok { kind: TokKind::Ident(name), .. }] if name == "m" => Some(1),
        [Tok { kind: TokKind::Ident(name), .. }, Tok { kind: TokKind::Caret, .. }, Tok { kind: TokKind::Nat(k), .. }]
            if name == "m" =>
        {
            u16::try_from(*k).ok()
        }
        _ => None,
    }
}

fn expand_maximal_power(
    ring: &Arc<RingContext>,
    k: u16,
    line: usize,
    col: usize,
    out: &mut Vec<Polynomial>,
) -> Result<()> {
    if k == 0 {
        return Err(err(line, col, "m^0 is the unit ideal, not a generator set"));
    }
    let nv = ring.nvars();
    // Count before enumerating: C(k+nv-1, nv-1) entries.
    let mut count: u64 = 1;
    for i in 1..nv {
        count = count.saturating_mul(k as u64 + i as u64) / i as u64;
        if count > 10_000 {
            return Err(err(line, col, format!("m^{k} expands to too many monomials")));
        }
    }
    let mut exps = vec![0u16; nv];
    fill_degree(ring, k, 0, &mut exps, out);
    Ok(())
}

fn fill_degree(
    ring: &Arc<RingContext>,
    remaining: u16,
    var: usize,
    exps: &mut Vec<u16>,
    out: &mut Vec<Polynomial>,
) {
    if var + 1 == ring.nvars() {
        exps[var] = remaining;
        out.push(Polynomial::from_monomial(ring, Monomial::new(exps.clone())));
        exps[var] = 0;
        return;
    }
    for e in (0..=remaining).rev() {
        exps[var] = e;
        fill_degree(ring, remaining - e, var + 1, exps, out);
        exps[var] = 0;
    }
}

/// Parses a ring spec `FIELD[vars]` — `Q[x,y]`, `fp:7[x,y]`, or `[x,y]`
/// with the field supplied by `default_field`.
pub fn parse_ring_spec(text: &str, default_field: FieldKind) -> Result<Arc<RingContext>> {
    let toks = tokenize(text)?;
    let mut pos = 0usize;
    let field = match toks.first().map(|t| &t.kind) {
        Some(TokKind::Ident(name)) if name.eq_ignore_ascii_case("q") => {
            pos = 1;
            FieldKind::Q
        }
        Some(TokKind::Ident(name)) if name.eq_ignore_ascii_case("fp") => {
            let (l, c) = (toks[0].line, toks[0].col);
            let Some(Tok { kind: TokKind::Colon, .. }) = toks.get(1) else {
                return Err(err(l, c, "expected 'fp:<prime>'"));
            };
            let Some(Tok { kind: TokKind::Nat(p), line, col }) = toks.get(2) else {
                return Err(err(l, c, "expected 'fp:<prime>'"));
            };
            pos = 3;
            FieldKind::prime_field(*p).map_err(|e| err(*line, *col, e.to_string()))?
        }
        Some(TokKind::Ident(name)) => {
            return Err(err(toks[0].line, toks[0].col, format!("unknown field '{name}'")))
        }
        _ => default_field,
    };
    let (eline, ecol) = end_of(text);
    let here = |i: usize| toks.get(i).map_or((eline, ecol), |t| (t.line, t.col));
    let Some(Tok { kind: TokKind::LBracket, .. }) = toks.get(pos) else {
        let (l, c) = here(pos);
        return Err(err(l, c, "expected '[' to open the variable list"));
    };
    pos += 1;
    let mut vars = Vec::new();
    loop {
        match toks.get(pos) {
            Some(Tok { kind: TokKind::Ident(name), .. }) => {
                vars.push(name.clone());
                pos += 1;
            }
            _ => {
                let (l, c) = here(pos);
                return Err(err(l, c, "expected a variable name"));
            }
        }
        match toks.get(pos) {
            Some(Tok { kind: TokKind::Comma, .. }) => pos += 1,
            Some(Tok { kind: TokKind::RBracket, .. }) => {
                pos += 1;
                break;
            }
            _ => {
                let (l, c) = here(pos);
                return Err(err(l, c, "expected ',' or ']'"));
            }
        }
    }
    if let Some(t) = toks.get(pos) {
        return Err(err(t.line, t.col, format!("unexpected {}", show(&t.kind))));
    }
    let names: Vec<&str> = vars.iter().map(String::as_str).collect();
    RingContext::polynomial_ring(field, &names)
}
