use super::{AtlasError, AtlasErrorKind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Tok {
    Int(u64),
    Ident(String),
    Underscore,
    Caret,
    /// `^.` or `·`: a raised-dot extension.
    RaisedDot,
    Dot,
    Colon,
    Times,
    Plus,
    Minus,
    Prime,
    LParen,
    RParen,
    LBrace,
    RBrace,
    LBracket,
    RBracket,
}

#[derive(Clone, Debug)]
pub(crate) struct Token {
    pub tok: Tok,
    pub offset: usize,
    /// True when whitespace separates this token from the previous one.
    pub spaced: bool,
}

fn err(offset: usize, kind: AtlasErrorKind) -> AtlasError {
    AtlasError { offset, kind }
}

pub(crate) fn lex(src: &str) -> Result<Vec<Token>, AtlasError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let mut spaced = false;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let simple = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                spaced = true;
                i += 1;
                continue;
            }
            b'_' => Some(Tok::Underscore),
            b'.' => Some(Tok::Dot),
            b':' => Some(Tok::Colon),
            b'+' => Some(Tok::Plus),
            b'-' => Some(Tok::Minus),
            b'\'' => Some(Tok::Prime),
            b'(' => Some(Tok::LParen),
            b')' => Some(Tok::RParen),
            b'{' => Some(Tok::LBrace),
            b'}' => Some(Tok::RBrace),
            b'[' => Some(Tok::LBracket),
            b']' => Some(Tok::RBracket),
            _ => None,
        };
        let tok = if let Some(t) = simple {
            i += 1;
            t
        } else if c == b'^' {
            if bytes.get(i + 1) == Some(&b'.') {
                i += 2;
                Tok::RaisedDot
            } else {
                i += 1;
                Tok::Caret
            }
        } else if c.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let digits = &src[start..i];
            Tok::Int(
                digits
                    .parse()
                    .map_err(|_| err(start, AtlasErrorKind::IntegerTooLarge))?,
            )
        } else if c.is_ascii_alphabetic() || c == b'\\' {
            let mut name = String::new();
            loop {
                match bytes.get(i) {
                    Some(b) if b.is_ascii_alphabetic() => {
                        name.push(*b as char);
                        i += 1;
                    }
                    Some(b'\\') => {
                        let cmd_start = i + 1;
                        let mut j = cmd_start;
                        while j < bytes.len() && bytes[j].is_ascii_alphabetic() {
                            j += 1;
                        }
                        let cmd = &src[cmd_start..j];
                        if cmd == "times" {
                            if name.is_empty() {
                                i = j;
                            }
                            break;
                        }
                        if cmd != "Omega" {
                            return Err(err(i, AtlasErrorKind::UnknownCommand(cmd.to_string())));
                        }
                        name.push_str(cmd);
                        i = j;
                    }
                    // `O'N`: an apostrophe between letters stays in the name.
                    Some(b'\'')
                        if !name.is_empty()
                            && bytes.get(i + 1).is_some_and(|b| b.is_ascii_alphabetic()) =>
                    {
                        name.push('\'');
                        i += 1;
                    }
                    _ => break,
                }
            }
            if name.is_empty() {
                Tok::Times
            } else {
                Tok::Ident(name)
            }
        } else if src[i..].starts_with('×') {
            i += '×'.len_utf8();
            Tok::Times
        } else if src[i..].starts_with('·') {
            i += '·'.len_utf8();
            Tok::RaisedDot
        } else {
            let ch = src[i..].chars().next().expect("in bounds");
            return Err(err(i, AtlasErrorKind::UnexpectedChar(ch)));
        };
        out.push(Token {
            tok,
            offset: start,
            spaced,
        });
        spaced = false;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(s: &str) -> Vec<Tok> {
        lex(s).unwrap().into_iter().map(|t| t.tok).collect()
    }

    #[test]
    fn lexes_latex_and_unicode_forms() {
        assert_eq!(
            toks("P\\Omega_8^+(3)"),
            vec![
                Tok::Ident("POmega".into()),
                Tok::Underscore,
                Tok::Int(8),
                Tok::Caret,
                Tok::Plus,
                Tok::LParen,
                Tok::Int(3),
                Tok::RParen
            ]
        );
        assert_eq!(toks("a \\times b"), toks("a × b"));
        assert_eq!(toks("2^.A"), toks("2·A"));
        assert_eq!(toks("O'N"), vec![Tok::Ident("O'N".into())]);
    }

    #[test]
    fn reports_offsets() {
        let e = lex("2^4:\\foo").unwrap_err();
        assert_eq!(e.offset, 4);
        let e = lex("A_5 $").unwrap_err();
        assert_eq!(e.offset, 4);
        let e = lex("99999999999999999999999").unwrap_err();
        assert_eq!(e.kind, AtlasErrorKind::IntegerTooLarge);
    }
}
