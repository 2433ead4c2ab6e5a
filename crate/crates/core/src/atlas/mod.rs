//! ATLAS-style structure strings such as `2^{9+16}.PSp_8(2)` and their orders.
//!
//! Precedence, tightest first: parentheses and braces, cover prefixes and
//! powers, the extension operators `.`, `^.` and `:` (left-associative), and
//! finally `\times`.

mod ast;
mod lexer;
mod parser;
pub mod tables;

pub use ast::{ExtOp, NamedGroup, StructureExpr};
pub use parser::parse_structure;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{kind} at byte {offset}")]
pub struct AtlasError {
    pub offset: usize,
    pub kind: AtlasErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AtlasErrorKind {
    #[error("unexpected character `{0}`")]
    UnexpectedChar(char),
    #[error("unknown command `\\{0}`")]
    UnknownCommand(String),
    #[error("integer too large")]
    IntegerTooLarge,
    #[error("unexpected `{0}`")]
    UnexpectedToken(String),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("unbalanced bracket")]
    Unbalanced,
    #[error("malformed exponent")]
    MalformedExponent,
    #[error("unknown group `{0}`")]
    UnknownGroup(String),
    #[error("invalid parameters: {0}")]
    InvalidParameter(String),
    #[error("`[..]` must contain an order")]
    BracketNotOrder,
    #[error("nesting too deep")]
    TooDeep,
}

/// Parses `s` and returns its exact order.
pub fn structure_order(s: &str) -> Result<crate::arith::FactoredInt, AtlasError> {
    parse_structure(s).map(|e| e.order())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> StructureExpr {
        parse_structure(s).unwrap_or_else(|e| panic!("{s}: {e}"))
    }

    fn int(v: u64) -> StructureExpr {
        StructureExpr::Integer { value: v, label: None }
    }

    #[test]
    fn shapes() {
        assert_eq!(
            parse("5:4"),
            StructureExpr::Extension {
                lower: Box::new(int(5)),
                upper: Box::new(int(4)),
                op: ExtOp::Colon
            }
        );
        let StructureExpr::Extension { lower, upper, op } = parse("2^{9+16}.PSp_8(2)") else {
            panic!()
        };
        assert_eq!(op, ExtOp::Dot);
        assert_eq!(
            *lower,
            StructureExpr::PrimePowerBlock { base: 2, exponents: vec![9, 16] }
        );
        assert!(matches!(*upper, StructureExpr::Named(NamedGroup::Lie(_))));
        let StructureExpr::Extension { lower, .. } = parse("(S_6 \\times S_6).4") else {
            panic!()
        };
        assert!(matches!(*lower, StructureExpr::Product(ref v) if v.len() == 2));
        assert!(matches!(parse("5:4 \\times HS:2"), StructureExpr::Product(ref v) if v.len() == 2));
        assert!(matches!(parse("2S_4"), StructureExpr::CoverPrefix { k: 2, .. }));
        assert!(matches!(
            parse("PSL_3(4):2_2"),
            StructureExpr::Extension { upper, .. } if *upper == StructureExpr::Integer { value: 2, label: Some(2) }
        ));
    }

    #[test]
    fn orders() {
        let o = |s: &str| parse(s).order().value().to_string();
        assert_eq!(o("47:23"), "1081");
        assert_eq!(o("2^4:(3×A_5):2"), "5760");
        assert_eq!(o("[2^{35}].(S_5 \\times PSL_3(2))"), (34359738368u64 * 120 * 168).to_string());
        assert_eq!(o("D_8"), "8");
        assert_eq!(o("HN:2"), "546061824000000");
        assert_eq!(o("2^.({}^2E_6(2)):2"), o("2^.({^2}E_6(2)):2"));
        assert_eq!(o("^2F_4(2)"), "35942400");
        assert_eq!(o("(A_5)^2"), "3600");
        assert_eq!(o("M22"), "443520");
        assert_eq!(o("O'N"), o("ON"));
        assert_eq!(o("F_2"), o("B"));
    }

    #[test]
    fn errors_carry_offsets() {
        let e = |s: &str| parse_structure(s).unwrap_err();
        assert_eq!(e("(S_6 \\times S_6.4").kind, AtlasErrorKind::Unbalanced);
        assert_eq!(e("(S_6 \\times S_6.4").offset, 0);
        assert_eq!(e("2^4:Q_7").kind, AtlasErrorKind::UnknownGroup("Q_7".into()));
        assert_eq!(e("2^4:Q_7").offset, 4);
        assert_eq!(e("2^{9+}.A_5").kind, AtlasErrorKind::MalformedExponent);
        assert_eq!(e("2^{9+}.A_5").offset, 5);
        assert_eq!(e("A_5)").offset, 3);
        assert_eq!(e("PSL_2(6)").offset, 0);
        assert_eq!(e("").kind, AtlasErrorKind::UnexpectedEnd);
        assert_eq!(e("[S_4]").kind, AtlasErrorKind::BracketNotOrder);
        assert_eq!(e("Fi_{24}").kind, AtlasErrorKind::UnknownGroup("Fi_24".into()));
        assert_eq!(e(&"(".repeat(100)).kind, AtlasErrorKind::TooDeep);
        assert!(matches!(e("0:2").kind, AtlasErrorKind::InvalidParameter(_)));
    }

    #[test]
    fn canonical_rendering() {
        assert_eq!(parse("{PSL_3(4):{2_2}}").render(), "PSL_3(4):2_2");
        assert_eq!(parse("5:4×HS:2").render(), "5:4 \\times HS:2");
        assert_eq!(parse("2^.({}^2E_6(2)):2").render(), "2^.{^2}E_6(2):2");
        assert_eq!(parse("A_5.(2.3)").to_string(), "A_5.(2.3)");
        assert_eq!(parse("(A_5.2).3").to_string(), "A_5.2.3");
        assert_eq!(parse("(A_5 × A_5) × 2").to_string(), "A_5 \\times A_5 \\times 2");
    }
}
