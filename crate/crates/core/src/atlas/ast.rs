use std::fmt::{self, Write};

use crate::arith::FactoredInt;
use crate::groups::{
    formula_order, order_alternating, order_symmetric, ExceptionalKind, GroupSpec, OrthogonalKind,
    Sporadic,
};

/// Extension operators. All three multiply orders; the distinction is kept
/// for rendering only.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExtOp {
    /// `A.B`
    Dot,
    /// `A^.B`, typeset with a raised dot.
    RaisedDot,
    /// `A:B`, a split extension.
    Colon,
}

impl ExtOp {
    fn symbol(self) -> &'static str {
        match self {
            ExtOp::Dot => ".",
            ExtOp::RaisedDot => "^.",
            ExtOp::Colon => ":",
        }
    }
}

/// A leaf naming a specific group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum NamedGroup {
    Alternating(u32),
    Symmetric(u32),
    /// `D_n`: the dihedral group of order `n`.
    Dihedral(u64),
    /// A group of Lie type, at any parameter point the order formula accepts.
    Lie(GroupSpec),
    Sporadic(Sporadic),
}

impl NamedGroup {
    pub fn order(&self) -> FactoredInt {
        match self {
            NamedGroup::Alternating(n) => order_alternating(*n),
            NamedGroup::Symmetric(n) => order_symmetric(*n),
            NamedGroup::Dihedral(n) => FactoredInt::from_u64(*n).expect("n >= 2"),
            NamedGroup::Lie(g) => formula_order(g),
            NamedGroup::Sporadic(s) => s.order(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum StructureExpr {
    /// A cyclic group of the given order; `label` keeps a class subscript such
    /// as the `2` in `2_2`.
    Integer { value: u64, label: Option<u64> },
    /// `p^{a+b+...}`: a group of order `p^(a+b+...)`.
    PrimePowerBlock { base: u64, exponents: Vec<u32> },
    /// `[N]`: an unspecified group of order `N`.
    BracketOrder(Box<StructureExpr>),
    Named(NamedGroup),
    /// `A × B × ...`
    Product(Vec<StructureExpr>),
    Extension {
        lower: Box<StructureExpr>,
        upper: Box<StructureExpr>,
        op: ExtOp,
    },
    /// `kG` written by juxtaposition, e.g. `2S_4`: a central extension of
    /// `G` by a cyclic group of order `k`.
    CoverPrefix { k: u64, group: Box<StructureExpr> },
    /// `G^k`: direct power of a non-integer group.
    Power { base: Box<StructureExpr>, exponent: u32 },
}

impl StructureExpr {
    /// Exact order. Every operator is multiplicative in the orders of its
    /// operands.
    pub fn order(&self) -> FactoredInt {
        match self {
            StructureExpr::Integer { value, .. } => {
                FactoredInt::from_u64(*value).expect("integers are positive")
            }
            StructureExpr::PrimePowerBlock { base, exponents } => {
                let e: u32 = exponents.iter().sum();
                FactoredInt::from_u64(*base).expect("positive").pow(e)
            }
            StructureExpr::BracketOrder(inner) => inner.order(),
            StructureExpr::Named(g) => g.order(),
            StructureExpr::Product(parts) => parts
                .iter()
                .fold(FactoredInt::one(), |acc, p| acc.mul(&p.order())),
            StructureExpr::Extension { lower, upper, .. } => lower.order().mul(&upper.order()),
            StructureExpr::CoverPrefix { k, group } => FactoredInt::from_u64(*k)
                .expect("positive")
                .mul(&group.order()),
            StructureExpr::Power { base, exponent } => base.order().pow(*exponent),
        }
    }

    /// Canonical text; parsing it yields an identical tree.
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.write(&mut out);
        out
    }

    fn precedence(&self) -> u8 {
        match self {
            StructureExpr::Product(_) => 0,
            StructureExpr::Extension { .. } => 1,
            _ => 2,
        }
    }

    fn write_at(&self, out: &mut String, min: u8) {
        if self.precedence() < min {
            out.push('(');
            self.write(out);
            out.push(')');
        } else {
            self.write(out);
        }
    }

    fn write(&self, out: &mut String) {
        match self {
            StructureExpr::Integer { value, label } => {
                write!(out, "{value}").unwrap();
                if let Some(l) = label {
                    out.push('_');
                    subscript(out, *l);
                }
            }
            StructureExpr::PrimePowerBlock { base, exponents } => {
                write!(out, "{base}^").unwrap();
                if exponents.len() == 1 && exponents[0] < 10 {
                    write!(out, "{}", exponents[0]).unwrap();
                } else {
                    let parts: Vec<String> = exponents.iter().map(u32::to_string).collect();
                    write!(out, "{{{}}}", parts.join("+")).unwrap();
                }
            }
            StructureExpr::BracketOrder(inner) => {
                out.push('[');
                inner.write(out);
                out.push(']');
            }
            StructureExpr::Named(g) => write_named(out, g),
            StructureExpr::Product(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        out.push_str(" \\times ");
                    }
                    p.write_at(out, 1);
                }
            }
            StructureExpr::Extension { lower, upper, op } => {
                lower.write_at(out, 1);
                out.push_str(op.symbol());
                upper.write_at(out, 2);
            }
            StructureExpr::CoverPrefix { k, group } => {
                write!(out, "{k}").unwrap();
                group.write(out);
            }
            StructureExpr::Power { base, exponent } => {
                base.write_at(out, 2);
                if *exponent < 10 {
                    write!(out, "^{exponent}").unwrap();
                } else {
                    write!(out, "^{{{exponent}}}").unwrap();
                }
            }
        }
    }
}

impl fmt::Display for StructureExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn subscript(out: &mut String, v: impl fmt::Display) {
    let s = v.to_string();
    if s.len() == 1 {
        out.push_str(&s);
    } else {
        write!(out, "{{{s}}}").unwrap();
    }
}

fn write_named(out: &mut String, g: &NamedGroup) {
    match g {
        NamedGroup::Alternating(n) => {
            out.push_str("A_");
            subscript(out, n);
        }
        NamedGroup::Symmetric(n) => {
            out.push_str("S_");
            subscript(out, n);
        }
        NamedGroup::Dihedral(n) => {
            out.push_str("D_");
            subscript(out, n);
        }
        NamedGroup::Sporadic(s) => out.push_str(sporadic_latex(*s)),
        NamedGroup::Lie(spec) => write_lie(out, spec),
    }
}

fn write_lie(out: &mut String, spec: &GroupSpec) {
    let (head, sub, sup, q) = match *spec {
        GroupSpec::Linear { n, q } => ("PSL", n, "", q.value()),
        GroupSpec::Unitary { n, q } => ("PSU", n, "", q.value()),
        GroupSpec::Symplectic { dim, q } => ("PSp", dim, "", q.value()),
        GroupSpec::Orthogonal { kind, dim, q } => {
            let sup = match kind {
                OrthogonalKind::Odd => "",
                OrthogonalKind::Plus => "^+",
                OrthogonalKind::Minus => "^-",
            };
            ("P\\Omega", dim, sup, q.value())
        }
        GroupSpec::Exceptional { kind, q } => {
            let (head, sub) = match kind {
                ExceptionalKind::G2 => ("G", 2),
                ExceptionalKind::F4 => ("F", 4),
                ExceptionalKind::E6 => ("E", 6),
                ExceptionalKind::E7 => ("E", 7),
                ExceptionalKind::E8 => ("E", 8),
                ExceptionalKind::TwistedE6 => ("{^2}E", 6),
                ExceptionalKind::TrialityD4 => ("{^3}D", 4),
                ExceptionalKind::Suzuki => ("{^2}B", 2),
                ExceptionalKind::Ree => ("{^2}G", 2),
                ExceptionalKind::TwistedF4 => ("{^2}F", 4),
            };
            (head, sub, "", q.value())
        }
        GroupSpec::Alternating(_) | GroupSpec::Sporadic(_) => {
            unreachable!("not a group of Lie type")
        }
    };
    out.push_str(head);
    out.push('_');
    subscript(out, sub);
    out.push_str(sup);
    write!(out, "({q})").unwrap();
}

pub(crate) fn sporadic_latex(s: Sporadic) -> &'static str {
    match s {
        Sporadic::M11 => "M_{11}",
        Sporadic::M12 => "M_{12}",
        Sporadic::J1 => "J_1",
        Sporadic::M22 => "M_{22}",
        Sporadic::J2 => "J_2",
        Sporadic::M23 => "M_{23}",
        Sporadic::HS => "HS",
        Sporadic::J3 => "J_3",
        Sporadic::M24 => "M_{24}",
        Sporadic::McL => "McL",
        Sporadic::He => "He",
        Sporadic::Ru => "Ru",
        Sporadic::Suz => "Suz",
        Sporadic::ON => "O'N",
        Sporadic::Co3 => "Co_3",
        Sporadic::Co2 => "Co_2",
        Sporadic::Fi22 => "Fi_{22}",
        Sporadic::HN => "HN",
        Sporadic::Ly => "Ly",
        Sporadic::Th => "Th",
        Sporadic::Fi23 => "Fi_{23}",
        Sporadic::Co1 => "Co_1",
        Sporadic::J4 => "J_4",
        Sporadic::Fi24 => "Fi_{24}'",
        Sporadic::B => "B",
        Sporadic::M => "M",
    }
}
