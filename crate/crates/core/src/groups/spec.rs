use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::sporadic::Sporadic;
use super::GroupError;
use crate::arith::PrimePower;

/// Largest rank or degree accepted from text input.
pub const MAX_RANK: u32 = 256;
/// Largest alternating degree accepted from text input.
pub const MAX_DEGREE: u32 = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OrthogonalKind {
    /// Odd dimension, written `o`.
    Odd,
    Plus,
    Minus,
}

impl OrthogonalKind {
    fn symbol(self) -> &'static str {
        match self {
            OrthogonalKind::Odd => "o",
            OrthogonalKind::Plus => "+",
            OrthogonalKind::Minus => "-",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExceptionalKind {
    G2,
    F4,
    E6,
    E7,
    E8,
    TwistedE6,
    TrialityD4,
    Suzuki,
    Ree,
    TwistedF4,
}

impl ExceptionalKind {
    pub const ALL: [ExceptionalKind; 10] = [
        ExceptionalKind::G2,
        ExceptionalKind::F4,
        ExceptionalKind::E6,
        ExceptionalKind::E7,
        ExceptionalKind::E8,
        ExceptionalKind::TwistedE6,
        ExceptionalKind::TrialityD4,
        ExceptionalKind::Suzuki,
        ExceptionalKind::Ree,
        ExceptionalKind::TwistedF4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ExceptionalKind::G2 => "G2",
            ExceptionalKind::F4 => "F4",
            ExceptionalKind::E6 => "E6",
            ExceptionalKind::E7 => "E7",
            ExceptionalKind::E8 => "E8",
            ExceptionalKind::TwistedE6 => "2E6",
            ExceptionalKind::TrialityD4 => "3D4",
            ExceptionalKind::Suzuki => "2B2",
            ExceptionalKind::Ree => "2G2",
            ExceptionalKind::TwistedF4 => "2F4",
        }
    }

    fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == s)
    }
}

/// A finite simple group, by family and parameters.
///
/// Variants are public so callers can name non-simple parameter points (for
/// instance the full group `2F4(2)` as an ATLAS leaf); [`GroupSpec::validate`]
/// decides simplicity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupSpec {
    Alternating(u32),
    Sporadic(Sporadic),
    Linear { n: u32, q: PrimePower },
    Unitary { n: u32, q: PrimePower },
    Symplectic { dim: u32, q: PrimePower },
    Orthogonal {
        kind: OrthogonalKind,
        dim: u32,
        q: PrimePower,
    },
    Exceptional { kind: ExceptionalKind, q: PrimePower },
}

impl GroupSpec {
    pub fn linear(n: u32, q: u64) -> Result<Self, GroupError> {
        let g = GroupSpec::Linear {
            n,
            q: prime_power(q)?,
        };
        g.validate()?;
        Ok(g)
    }

    pub fn unitary(n: u32, q: u64) -> Result<Self, GroupError> {
        let g = GroupSpec::Unitary {
            n,
            q: prime_power(q)?,
        };
        g.validate()?;
        Ok(g)
    }

    pub fn exceptional(kind: ExceptionalKind, q: u64) -> Result<Self, GroupError> {
        let g = GroupSpec::Exceptional {
            kind,
            q: prime_power(q)?,
        };
        g.validate()?;
        Ok(g)
    }

    /// Sort key used by catalogs: family rank, then rank parameter, then q.
    pub fn sort_key(&self) -> (u8, u32, u64, u8) {
        match *self {
            GroupSpec::Alternating(n) => (0, n, 0, 0),
            GroupSpec::Sporadic(s) => (1, s as u32, 0, 0),
            GroupSpec::Linear { n, q } => (2, n, q.value(), 0),
            GroupSpec::Unitary { n, q } => (3, n, q.value(), 0),
            GroupSpec::Symplectic { dim, q } => (4, dim, q.value(), 0),
            GroupSpec::Orthogonal { kind, dim, q } => (5, dim, q.value(), kind as u8),
            GroupSpec::Exceptional { kind, q } => (6, kind as u32, q.value(), 0),
        }
    }

    /// Rejects parameter points that do not give a simple group, and points
    /// that only duplicate a smaller family.
    pub fn validate(&self) -> Result<(), GroupError> {
        let non_simple = |why: &str| Err(GroupError::NotSimple(format!("{self}: {why}")));
        let invalid = |why: &str| Err(GroupError::InvalidParameter(format!("{self}: {why}")));
        match *self {
            GroupSpec::Alternating(n) => {
                if n < 5 {
                    return non_simple("alternating groups need degree at least 5");
                }
                if n > MAX_DEGREE {
                    return invalid("degree too large");
                }
            }
            GroupSpec::Sporadic(_) => {}
            GroupSpec::Linear { n, q } => {
                if n < 2 {
                    return invalid("n must be at least 2");
                }
                if n > MAX_RANK {
                    return invalid("n too large");
                }
                if n == 2 && q.value() <= 3 {
                    return non_simple("PSL(2,2) and PSL(2,3) are solvable");
                }
            }
            GroupSpec::Unitary { n, q } => {
                if n < 3 {
                    return invalid("unitary groups need n >= 3; PSU(2,q) is PSL(2,q)");
                }
                if n > MAX_RANK {
                    return invalid("n too large");
                }
                if n == 3 && q.value() == 2 {
                    return non_simple("PSU(3,2) is solvable");
                }
            }
            GroupSpec::Symplectic { dim, q } => {
                if dim % 2 == 1 || dim < 4 {
                    return invalid("symplectic dimension must be even and at least 4");
                }
                if dim > MAX_RANK {
                    return invalid("dimension too large");
                }
                if dim == 4 && q.value() == 2 {
                    return non_simple("PSp(4,2) is S6");
                }
            }
            GroupSpec::Orthogonal { kind, dim, q } => {
                if dim > MAX_RANK {
                    return invalid("dimension too large");
                }
                match kind {
                    OrthogonalKind::Odd => {
                        if dim % 2 == 0 || dim < 5 {
                            return invalid("odd-dimensional type needs odd dim >= 5");
                        }
                        if q.p() == 2 {
                            return invalid("odd-dimensional type needs odd q");
                        }
                    }
                    OrthogonalKind::Plus => {
                        if dim % 2 == 1 || dim < 6 {
                            return invalid("plus type needs even dim >= 6");
                        }
                    }
                    OrthogonalKind::Minus => {
                        if dim % 2 == 1 || dim < 4 {
                            return invalid("minus type needs even dim >= 4");
                        }
                    }
                }
            }
            GroupSpec::Exceptional { kind, q } => match kind {
                ExceptionalKind::G2 if q.value() == 2 => {
                    return non_simple("G2(2) is not perfect");
                }
                ExceptionalKind::Suzuki | ExceptionalKind::TwistedF4 => {
                    if q.p() != 2 || q.e() % 2 == 0 {
                        return invalid("q must be an odd power of 2");
                    }
                    if q.value() == 2 {
                        return non_simple("q = 2 does not give a simple group");
                    }
                }
                ExceptionalKind::Ree => {
                    if q.p() != 3 || q.e() % 2 == 0 {
                        return invalid("q must be an odd power of 3");
                    }
                    if q.value() == 3 {
                        return non_simple("2G2(3) is PSL(2,8):3");
                    }
                }
                _ => {}
            },
        }
        Ok(())
    }

    /// Known exceptional isomorphisms with other families.
    pub fn aliases(&self) -> Vec<String> {
        let v = |q: &PrimePower| q.value();
        let list: &[&str] = match *self {
            GroupSpec::Alternating(5) => &["PSL(2,4)", "PSL(2,5)"],
            GroupSpec::Alternating(6) => &["PSL(2,9)"],
            GroupSpec::Alternating(8) => &["PSL(4,2)"],
            GroupSpec::Linear { n: 2, ref q } => match v(q) {
                4 => &["A5", "PSL(2,5)"],
                5 => &["A5", "PSL(2,4)"],
                7 => &["PSL(3,2)"],
                9 => &["A6"],
                _ => &[],
            },
            GroupSpec::Linear { n: 3, ref q } if v(q) == 2 => &["PSL(2,7)"],
            GroupSpec::Linear { n: 4, ref q } if v(q) == 2 => &["A8"],
            GroupSpec::Unitary { n: 4, ref q } if v(q) == 2 => &["PSp(4,3)"],
            GroupSpec::Symplectic { dim: 4, ref q } if v(q) == 3 => &["PSU(4,2)"],
            _ => &[],
        };
        list.iter().map(|s| s.to_string()).collect()
    }
}

fn prime_power(q: u64) -> Result<PrimePower, GroupError> {
    PrimePower::from_value(q)
        .map_err(|_| GroupError::InvalidParameter(format!("q = {q} is not a prime power")))
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Alternating(n) => write!(f, "A{n}"),
            GroupSpec::Sporadic(s) => write!(f, "{}", s.name()),
            GroupSpec::Linear { n, q } => write!(f, "PSL({n},{})", q.value()),
            GroupSpec::Unitary { n, q } => write!(f, "PSU({n},{})", q.value()),
            GroupSpec::Symplectic { dim, q } => write!(f, "PSp({dim},{})", q.value()),
            GroupSpec::Orthogonal { kind, dim, q } => {
                write!(f, "POmega({},{dim},{})", kind.symbol(), q.value())
            }
            GroupSpec::Exceptional { kind, q } => write!(f, "{}({})", kind.name(), q.value()),
        }
    }
}

impl Serialize for GroupSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

fn parse_err(offset: usize, message: impl Into<String>) -> GroupError {
    GroupError::Parse {
        offset,
        message: message.into(),
    }
}

/// Parses a decimal integer field at byte `offset` of the original input.
fn number<T: FromStr>(field: &str, offset: usize) -> Result<T, GroupError> {
    let lead = field.len() - field.trim_start().len();
    let t = field.trim();
    if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
        return Err(parse_err(offset + lead, format!("expected an integer, found `{t}`")));
    }
    t.parse()
        .map_err(|_| parse_err(offset + lead, format!("integer `{t}` out of range")))
}

impl FromStr for GroupSpec {
    type Err = GroupError;

    /// Strict grammar: `A<n>`, `PSL(n,q)`, `PSU(n,q)`, `PSp(2m,q)`,
    /// `POmega(o|+|-,d,q)`, `E8(q)` and the other exceptional names, and the
    /// sporadic names.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.len() > 64 {
            return Err(parse_err(64, "input too long"));
        }
        let start = s.len() - s.trim_start().len();
        let t = s.trim();
        if t.is_empty() {
            return Err(parse_err(0, "empty group name"));
        }
        if let Some(sp) = Sporadic::from_name(t) {
            return Ok(GroupSpec::Sporadic(sp));
        }
        if let Some(deg) = t.strip_prefix('A') {
            if !deg.is_empty() && deg.bytes().all(|b| b.is_ascii_digit()) {
                let g = GroupSpec::Alternating(number(deg, start + 1)?);
                g.validate()?;
                return Ok(g);
            }
        }
        let Some(open) = t.find('(') else {
            return Err(parse_err(start, format!("unknown group `{t}`")));
        };
        if !t.ends_with(')') {
            return Err(parse_err(start + t.len(), "expected `)` at end"));
        }
        let head = &t[..open];
        let body = &t[open + 1..t.len() - 1];
        let body_at = start + open + 1;
        let mut fields = Vec::new();
        let mut at = body_at;
        for part in body.split(',') {
            fields.push((part, at));
            at += part.len() + 1;
        }
        let arity = |k: usize| {
            if fields.len() == k {
                Ok(())
            } else {
                Err(parse_err(body_at, format!("`{head}` takes {k} parameters")))
            }
        };
        let q_at = |i: usize| -> Result<PrimePower, GroupError> {
            let (f, o) = fields[i];
            let v: u64 = number(f, o)?;
            PrimePower::from_value(v)
                .map_err(|_| GroupError::InvalidParameter(format!("q = {v} is not a prime power")))
        };
        let g = match head {
            "PSL" | "PSU" | "PSp" => {
                arity(2)?;
                let n: u32 = number(fields[0].0, fields[0].1)?;
                let q = q_at(1)?;
                match head {
                    "PSL" => GroupSpec::Linear { n, q },
                    "PSU" => GroupSpec::Unitary { n, q },
                    _ => GroupSpec::Symplectic { dim: n, q },
                }
            }
            "POmega" => {
                arity(3)?;
                let kind = match fields[0].0.trim() {
                    "o" => OrthogonalKind::Odd,
                    "+" => OrthogonalKind::Plus,
                    "-" => OrthogonalKind::Minus,
                    other => {
                        return Err(parse_err(
                            fields[0].1,
                            format!("orthogonal type must be o, + or -, found `{other}`"),
                        ))
                    }
                };
                let dim: u32 = number(fields[1].0, fields[1].1)?;
                GroupSpec::Orthogonal {
                    kind,
                    dim,
                    q: q_at(2)?,
                }
            }
            _ => match ExceptionalKind::from_name(head) {
                Some(kind) => {
                    arity(1)?;
                    GroupSpec::Exceptional { kind, q: q_at(0)? }
                }
                None => return Err(parse_err(start, format!("unknown group family `{head}`"))),
            },
        };
        g.validate()?;
        Ok(g)
    }
}
