use super::ast::{ExtOp, NamedGroup, StructureExpr};
use super::lexer::{lex, Tok, Token};
use super::{AtlasError, AtlasErrorKind};
use crate::arith::primes::is_prime_u64;
use crate::arith::PrimePower;
use crate::groups::{ExceptionalKind, GroupSpec, OrthogonalKind, Sporadic};

const MAX_DEPTH: usize = 64;
const MAX_EXPONENT: u32 = 100_000;
const MAX_LIE_RANK: u64 = 64;
const MAX_LIE_Q: u64 = 1 << 20;
const MAX_DEGREE: u64 = 100_000;

pub fn parse_structure(src: &str) -> Result<StructureExpr, AtlasError> {
    let tokens = lex(src)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        depth: 0,
        end: src.len(),
    };
    let expr = p.product()?;
    if let Some(t) = p.peek_token() {
        return Err(p.err_at(t.offset, AtlasErrorKind::UnexpectedToken(describe(&t.tok))));
    }
    Ok(expr)
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(v) => v.to_string(),
        Tok::Ident(s) => s.clone(),
        Tok::Underscore => "_".into(),
        Tok::Caret => "^".into(),
        Tok::RaisedDot => "^.".into(),
        Tok::Dot => ".".into(),
        Tok::Colon => ":".into(),
        Tok::Times => "×".into(),
        Tok::Plus => "+".into(),
        Tok::Minus => "-".into(),
        Tok::Prime => "'".into(),
        Tok::LParen => "(".into(),
        Tok::RParen => ")".into(),
        Tok::LBrace => "{".into(),
        Tok::RBrace => "}".into(),
        Tok::LBracket => "[".into(),
        Tok::RBracket => "]".into(),
    }
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    depth: usize,
    end: usize,
}

impl Parser {
    fn peek_token(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|t| &t.tok)
    }

    fn peek_at(&self, k: usize) -> Option<&Tok> {
        self.tokens.get(self.pos + k).map(|t| &t.tok)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |t| t.offset)
    }

    fn err_at(&self, offset: usize, kind: AtlasErrorKind) -> AtlasError {
        AtlasError { offset, kind }
    }

    fn err(&self, kind: AtlasErrorKind) -> AtlasError {
        self.err_at(self.offset(), kind)
    }

    fn unexpected(&self) -> AtlasError {
        match self.peek() {
            Some(t) => self.err(AtlasErrorKind::UnexpectedToken(describe(t))),
            None => self.err(AtlasErrorKind::UnexpectedEnd),
        }
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.tokens.get(self.pos).map(|t| t.tok.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect_close(&mut self, close: Tok, open_at: usize) -> Result<(), AtlasError> {
        if self.eat(&close) {
            Ok(())
        } else if self.peek().is_none() {
            Err(self.err_at(open_at, AtlasErrorKind::Unbalanced))
        } else {
            Err(self.unexpected())
        }
    }

    fn int(&mut self) -> Result<u64, AtlasError> {
        match self.peek() {
            Some(Tok::Int(v)) => {
                let v = *v;
                self.pos += 1;
                Ok(v)
            }
            _ => Err(self.unexpected()),
        }
    }

    fn enter(&mut self) -> Result<(), AtlasError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(self.err(AtlasErrorKind::TooDeep));
        }
        Ok(())
    }

    /// product := extension ('×' extension)*
    fn product(&mut self) -> Result<StructureExpr, AtlasError> {
        self.enter()?;
        let mut parts = vec![self.extension()?];
        while self.eat(&Tok::Times) {
            parts.push(self.extension()?);
        }
        self.depth -= 1;
        Ok(if parts.len() == 1 {
            parts.pop().expect("one part")
        } else {
            StructureExpr::Product(
                parts
                    .into_iter()
                    .flat_map(|p| match p {
                        StructureExpr::Product(inner) => inner,
                        other => vec![other],
                    })
                    .collect(),
            )
        })
    }

    /// extension := unary (('.' | '^.' | ':') unary)*, left-associative.
    fn extension(&mut self) -> Result<StructureExpr, AtlasError> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek() {
                Some(Tok::Dot) => ExtOp::Dot,
                Some(Tok::RaisedDot) => ExtOp::RaisedDot,
                Some(Tok::Colon) => ExtOp::Colon,
                _ => return Ok(lhs),
            };
            self.pos += 1;
            let rhs = self.unary()?;
            lhs = StructureExpr::Extension {
                lower: Box::new(lhs),
                upper: Box::new(rhs),
                op,
            };
        }
    }

    /// unary := cover-prefix? primary ('^' exponent)?
    fn unary(&mut self) -> Result<StructureExpr, AtlasError> {
        if let (Some(Tok::Int(k)), Some(Tok::Ident(_))) = (self.peek(), self.peek_at(1)) {
            let adjacent = !self.tokens[self.pos + 1].spaced;
            if adjacent {
                let k = *k;
                if k == 0 {
                    return Err(self.err(AtlasErrorKind::InvalidParameter("zero order".into())));
                }
                self.pos += 1;
                let group = self.named()?;
                return self.postfix(StructureExpr::CoverPrefix {
                    k,
                    group: Box::new(group),
                });
            }
        }
        let base = self.primary()?;
        self.postfix(base)
    }

    fn postfix(&mut self, base: StructureExpr) -> Result<StructureExpr, AtlasError> {
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        let at = self.offset();
        self.pos += 1;
        let exps = self.exponent()?;
        match base {
            StructureExpr::Integer { value, label: None } if is_prime_u64(value) => {
                Ok(StructureExpr::PrimePowerBlock {
                    base: value,
                    exponents: exps,
                })
            }
            other => {
                if exps.len() != 1 {
                    return Err(self.err_at(at, AtlasErrorKind::MalformedExponent));
                }
                Ok(StructureExpr::Power {
                    base: Box::new(other),
                    exponent: exps[0],
                })
            }
        }
    }

    /// exponent := INT | '{' INT ('+' INT)* '}'
    fn exponent(&mut self) -> Result<Vec<u32>, AtlasError> {
        let at = self.offset();
        let mut exps = Vec::new();
        let single = |p: &mut Self, v: u64| -> Result<u32, AtlasError> {
            if v == 0 || v > MAX_EXPONENT as u64 {
                return Err(p.err_at(at, AtlasErrorKind::MalformedExponent));
            }
            Ok(v as u32)
        };
        match self.peek() {
            Some(Tok::Int(v)) => {
                let v = *v;
                self.pos += 1;
                exps.push(single(self, v)?);
            }
            Some(Tok::LBrace) => {
                self.pos += 1;
                loop {
                    match self.peek() {
                        Some(Tok::Int(v)) => {
                            let v = *v;
                            self.pos += 1;
                            exps.push(single(self, v)?);
                        }
                        _ => return Err(self.err(AtlasErrorKind::MalformedExponent)),
                    }
                    if !self.eat(&Tok::Plus) {
                        break;
                    }
                }
                if !self.eat(&Tok::RBrace) {
                    return Err(self.err(AtlasErrorKind::MalformedExponent));
                }
                if exps.iter().map(|&e| e as u64).sum::<u64>() > MAX_EXPONENT as u64 {
                    return Err(self.err_at(at, AtlasErrorKind::MalformedExponent));
                }
            }
            _ => return Err(self.err(AtlasErrorKind::MalformedExponent)),
        }
        Ok(exps)
    }

    fn primary(&mut self) -> Result<StructureExpr, AtlasError> {
        let at = self.offset();
        match self.peek() {
            Some(Tok::Int(v)) => {
                let value = *v;
                if value == 0 {
                    return Err(self.err(AtlasErrorKind::InvalidParameter("zero order".into())));
                }
                self.pos += 1;
                let label = if self.eat(&Tok::Underscore) {
                    Some(self.subscript()?)
                } else {
                    None
                };
                Ok(StructureExpr::Integer { value, label })
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.product()?;
                self.expect_close(Tok::RParen, at)?;
                Ok(inner)
            }
            Some(Tok::LBrace) => {
                // `{^2}E_6(q)` and `{}^2E_6(q)` are twisted names.
                if matches!(self.peek_at(1), Some(Tok::Caret) | Some(Tok::RBrace)) {
                    return self.named();
                }
                self.pos += 1;
                let inner = self.product()?;
                self.expect_close(Tok::RBrace, at)?;
                Ok(inner)
            }
            Some(Tok::LBracket) => {
                self.pos += 1;
                let inner = self.product()?;
                self.expect_close(Tok::RBracket, at)?;
                match inner {
                    StructureExpr::Integer { label: None, .. }
                    | StructureExpr::PrimePowerBlock { .. } => {
                        Ok(StructureExpr::BracketOrder(Box::new(inner)))
                    }
                    _ => Err(self.err_at(at + 1, AtlasErrorKind::BracketNotOrder)),
                }
            }
            Some(Tok::Ident(_)) | Some(Tok::Caret) => self.named(),
            _ => Err(self.unexpected()),
        }
    }

    /// subscript := INT | '{' INT '}'
    fn subscript(&mut self) -> Result<u64, AtlasError> {
        if self.eat(&Tok::LBrace) {
            let at = self.offset();
            let v = self.int()?;
            self.expect_close(Tok::RBrace, at)?;
            Ok(v)
        } else {
            self.int()
        }
    }

    /// A twist prefix `^k`, `{^k}` or `{}^k`, if present.
    fn twist(&mut self) -> Result<Option<u64>, AtlasError> {
        if self.eat(&Tok::Caret) {
            return self.int().map(Some);
        }
        if self.peek() == Some(&Tok::LBrace) {
            let at = self.offset();
            self.pos += 1;
            if self.eat(&Tok::RBrace) {
                if !self.eat(&Tok::Caret) {
                    return Err(self.unexpected());
                }
                return self.int().map(Some);
            }
            if !self.eat(&Tok::Caret) {
                return Err(self.unexpected());
            }
            let k = self.int()?;
            self.expect_close(Tok::RBrace, at)?;
            return Ok(Some(k));
        }
        Ok(None)
    }

    fn named(&mut self) -> Result<StructureExpr, AtlasError> {
        let start = self.offset();
        let twist = self.twist()?;
        let name = match self.bump() {
            Some(Tok::Ident(s)) => s,
            Some(t) => {
                self.pos -= 1;
                return Err(self.err(AtlasErrorKind::UnexpectedToken(describe(&t))));
            }
            None => return Err(self.err(AtlasErrorKind::UnexpectedEnd)),
        };
        // Subscript: `_n`, `_{n}`, or digits written directly after the name.
        let sub = if self.eat(&Tok::Underscore) {
            Some(self.subscript()?)
        } else if let (Some(Tok::Int(v)), false) =
            (self.peek(), self.peek_token().map_or(true, |t| t.spaced))
        {
            let v = *v;
            self.pos += 1;
            Some(v)
        } else {
            None
        };
        let primed = self.eat(&Tok::Prime);
        // `^+` / `^-` on orthogonal groups.
        let sign = if self.peek() == Some(&Tok::Caret)
            && matches!(self.peek_at(1), Some(Tok::Plus) | Some(Tok::Minus))
        {
            self.pos += 1;
            Some(self.bump() == Some(Tok::Plus))
        } else {
            None
        };
        let q = if self.peek() == Some(&Tok::LParen) {
            let at = self.offset();
            self.pos += 1;
            let v = self.int()?;
            self.expect_close(Tok::RParen, at)?;
            Some(v)
        } else {
            None
        };
        let unknown = || {
            let mut s = String::new();
            if let Some(t) = twist {
                s.push_str(&format!("^{t}"));
            }
            s.push_str(&name);
            if let Some(n) = sub {
                s.push_str(&format!("_{n}"));
            }
            AtlasErrorKind::UnknownGroup(s)
        };
        let bad = |why: String| AtlasError {
            offset: start,
            kind: AtlasErrorKind::InvalidParameter(why),
        };
        if primed && !(name == "Fi" && sub == Some(24)) {
            return Err(self.err_at(start, unknown()));
        }

        if let Some(qv) = q {
            let pp = PrimePower::from_value(qv)
                .ok()
                .filter(|_| qv <= MAX_LIE_Q)
                .ok_or_else(|| bad(format!("q = {qv} is not a prime power up to 2^20")))?;
            let n = sub.ok_or_else(|| self.err_at(start, unknown()))?;
            if !(2..=MAX_LIE_RANK).contains(&n) {
                return Err(bad(format!("rank {n} out of range")));
            }
            let n32 = n as u32;
            let spec = match (twist, name.as_str(), sign) {
                (None, "PSL" | "L", None) => GroupSpec::Linear { n: n32, q: pp },
                (None, "PSU" | "U", None) => GroupSpec::Unitary { n: n32, q: pp },
                (None, "PSp", None) if n % 2 == 0 => GroupSpec::Symplectic { dim: n32, q: pp },
                (None, "POmega" | "Omega", s) => {
                    let kind = match s {
                        None if n % 2 == 1 && pp.p() != 2 => OrthogonalKind::Odd,
                        Some(true) if n % 2 == 0 && n >= 4 => OrthogonalKind::Plus,
                        Some(false) if n % 2 == 0 => OrthogonalKind::Minus,
                        _ => return Err(bad(format!("orthogonal parameters ({n}, {qv})"))),
                    };
                    GroupSpec::Orthogonal { kind, dim: n32, q: pp }
                }
                (t, head, None) => {
                    let kind = match (t, head, n) {
                        (None, "G", 2) => ExceptionalKind::G2,
                        (None, "F", 4) => ExceptionalKind::F4,
                        (None, "E", 6) => ExceptionalKind::E6,
                        (None, "E", 7) => ExceptionalKind::E7,
                        (None, "E", 8) => ExceptionalKind::E8,
                        (Some(2), "E", 6) => ExceptionalKind::TwistedE6,
                        (Some(3), "D", 4) => ExceptionalKind::TrialityD4,
                        (Some(2), "B", 2) => ExceptionalKind::Suzuki,
                        (Some(2), "G", 2) => ExceptionalKind::Ree,
                        (Some(2), "F", 4) => ExceptionalKind::TwistedF4,
                        _ => return Err(self.err_at(start, unknown())),
                    };
                    let odd_power = |p: u64| pp.p() == p && pp.e() % 2 == 1;
                    let ok = match kind {
                        ExceptionalKind::Suzuki | ExceptionalKind::TwistedF4 => odd_power(2),
                        ExceptionalKind::Ree => odd_power(3),
                        _ => true,
                    };
                    if !ok {
                        return Err(bad(format!("q = {qv} invalid for this twisted group")));
                    }
                    GroupSpec::Exceptional { kind, q: pp }
                }
                _ => return Err(self.err_at(start, unknown())),
            };
            return Ok(StructureExpr::Named(NamedGroup::Lie(spec)));
        }

        if twist.is_some() || sign.is_some() {
            return Err(self.err_at(start, unknown()));
        }
        let group = match (name.as_str(), sub) {
            ("A", Some(n)) if (1..=MAX_DEGREE).contains(&n) => NamedGroup::Alternating(n as u32),
            ("S", Some(n)) if (1..=MAX_DEGREE).contains(&n) => NamedGroup::Symmetric(n as u32),
            ("D", Some(n)) if n >= 2 && n % 2 == 0 => NamedGroup::Dihedral(n),
            ("A" | "S" | "D", _) => return Err(bad(format!("bad degree for {name}"))),
            (_, sub) => {
                let key = match sub {
                    Some(n) => format!("{name}{n}{}", if primed { "'" } else { "" }),
                    None => name.clone(),
                };
                let sp = match key.as_str() {
                    "ON" | "O'N" => Some(Sporadic::ON),
                    "F1" => Some(Sporadic::M),
                    "F2" => Some(Sporadic::B),
                    "Fi24" => None,
                    k => Sporadic::from_name(k),
                };
                NamedGroup::Sporadic(sp.ok_or_else(|| self.err_at(start, unknown()))?)
            }
        };
        Ok(StructureExpr::Named(group))
    }
}
