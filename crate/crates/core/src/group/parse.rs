//! Recursive-descent parser for the group expression language.
//!
//! ```text
//! expr    := factor ( '*' factor )*
//! factor  := 'Sym' '(' int ')' | 'Cyc' '(' int ')' | 'Dih' '(' int ')'
//!          | 'Q8' | 'Perm' '(' int ';' perm ( ',' perm )* ')' | '(' expr ')'
//! perm    := cycle+
//! cycle   := '(' int* ')'
//! ```
//!
//! Whitespace between tokens is ignored; inside a cycle it separates points.

use crate::error::{HkrError, Result};

use super::perm::Permutation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupExpr {
    Sym(usize),
    Cyc(usize),
    Dih(usize),
    Q8,
    Perm {
        degree: usize,
        generators: Vec<Permutation>,
    },
    Product(Vec<GroupExpr>),
}

impl GroupExpr {
    /// Canonical text; parsing it again yields an equal expression.
    pub fn canonical(&self) -> String {
        match self {
            GroupExpr::Sym(m) => format!("Sym({m})"),
            GroupExpr::Cyc(m) => format!("Cyc({m})"),
            GroupExpr::Dih(m) => format!("Dih({m})"),
            GroupExpr::Q8 => "Q8".into(),
            GroupExpr::Perm { degree, generators } => {
                let gens: Vec<String> = generators.iter().map(Permutation::cycle_notation).collect();
                if gens.is_empty() {
                    format!("Perm({degree})")
                } else {
                    format!("Perm({degree}; {})", gens.join(", "))
                }
            }
            GroupExpr::Product(parts) => parts
                .iter()
                .map(|p| match p {
                    GroupExpr::Product(_) => format!("({})", p.canonical()),
                    _ => p.canonical(),
                })
                .collect::<Vec<_>>()
                .join("*"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(u64),
    LParen,
    RParen,
    Star,
    Comma,
    Semi,
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '*' => Tok::Star,
            ',' => Tok::Comma,
            ';' => Tok::Semi,
            d if d.is_ascii_digit() => {
                while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                    i += 1;
                }
                let n = src[start..i].parse().map_err(|_| HkrError::Parse {
                    offset: start,
                    message: "integer too large".into(),
                })?;
                out.push((start, Tok::Int(n)));
                continue;
            }
            a if a.is_ascii_alphabetic() => {
                while i < bytes.len() && (bytes[i] as char).is_ascii_alphanumeric() {
                    i += 1;
                }
                out.push((start, Tok::Ident(src[start..i].to_string())));
                continue;
            }
            other => {
                return Err(HkrError::Parse {
                    offset: start,
                    message: format!("unexpected character `{other}`"),
                })
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.len, |(o, _)| *o)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(HkrError::Parse {
            offset: self.offset(),
            message: message.into(),
        })
    }

    fn expect(&mut self, want: Tok) -> Result<()> {
        if self.peek() == Some(&want) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected {want:?}"))
        }
    }

    fn int(&mut self) -> Result<u64> {
        match self.peek() {
            Some(Tok::Int(n)) => {
                let n = *n;
                self.pos += 1;
                Ok(n)
            }
            _ => self.err("expected an integer"),
        }
    }

    fn expr(&mut self) -> Result<GroupExpr> {
        let mut parts = vec![self.factor()?];
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            parts.push(self.factor()?);
        }
        Ok(if parts.len() == 1 {
            parts.pop().expect("one part")
        } else {
            GroupExpr::Product(parts)
        })
    }

    fn paren_int(&mut self) -> Result<usize> {
        self.expect(Tok::LParen)?;
        let n = self.int()? as usize;
        self.expect(Tok::RParen)?;
        Ok(n)
    }

    fn factor(&mut self) -> Result<GroupExpr> {
        match self.peek().cloned() {
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                match name.as_str() {
                    "Sym" => Ok(GroupExpr::Sym(self.paren_int()?)),
                    "Cyc" => {
                        let m = self.paren_int()?;
                        if m == 0 {
                            return self.err("Cyc(0) is not a finite group");
                        }
                        Ok(GroupExpr::Cyc(m))
                    }
                    "Dih" => {
                        let m = self.paren_int()?;
                        if m == 0 {
                            return self.err("Dih(0) is not a finite group");
                        }
                        Ok(GroupExpr::Dih(m))
                    }
                    "Q8" => Ok(GroupExpr::Q8),
                    "Perm" => self.perm_group(),
                    _ => Err(HkrError::UnsupportedFamily(name)),
                }
            }
            _ => self.err("expected a group"),
        }
    }

    fn perm_group(&mut self) -> Result<GroupExpr> {
        self.expect(Tok::LParen)?;
        let degree = self.int()? as usize;
        let mut generators = Vec::new();
        if self.peek() == Some(&Tok::Semi) {
            self.pos += 1;
            loop {
                generators.push(self.permutation(degree)?);
                if self.peek() == Some(&Tok::Comma) {
                    self.pos += 1;
                } else {
                    break;
                }
            }
        }
        self.expect(Tok::RParen)?;
        Ok(GroupExpr::Perm { degree, generators })
    }

    fn permutation(&mut self, degree: usize) -> Result<Permutation> {
        let mut cycles = Vec::new();
        while self.peek() == Some(&Tok::LParen) {
            self.pos += 1;
            let mut cycle = Vec::new();
            while let Some(Tok::Int(n)) = self.peek() {
                cycle.push(*n as u32);
                self.pos += 1;
            }
            self.expect(Tok::RParen)?;
            cycles.push(cycle);
        }
        if cycles.is_empty() {
            return self.err("expected a permutation in cycle notation");
        }
        Permutation::from_cycles(degree, &cycles)
    }
}

pub fn parse_group_expr(src: &str) -> Result<GroupExpr> {
    let toks = tokenize(src)?;
    let mut parser = Parser {
        toks,
        pos: 0,
        len: src.len(),
    };
    let e = parser.expr()?;
    if parser.pos != parser.toks.len() {
        return parser.err("trailing input");
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_families_and_products() {
        assert_eq!(parse_group_expr(" Sym( 4 ) ").unwrap(), GroupExpr::Sym(4));
        let e = parse_group_expr("Cyc(2)*Cyc(2)").unwrap();
        assert_eq!(e, GroupExpr::Product(vec![GroupExpr::Cyc(2), GroupExpr::Cyc(2)]));
        assert_eq!(e.canonical(), "Cyc(2)*Cyc(2)");
        let p = parse_group_expr("Perm(4; (0 1)(2 3), (0 2))").unwrap();
        assert_eq!(p.canonical(), "Perm(4; (0 1)(2 3), (0 2))");
        assert_eq!(parse_group_expr(&p.canonical()).unwrap(), p);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_group_expr("Sym(3"), Err(HkrError::Parse { .. })));
        assert!(matches!(
            parse_group_expr("Foo(3)"),
            Err(HkrError::UnsupportedFamily(_))
        ));
        assert!(matches!(
            parse_group_expr("Cyc(2) Cyc(3)"),
            Err(HkrError::Parse { .. })
        ));
        assert!(matches!(
            parse_group_expr("Perm(3; (0 5))"),
            Err(HkrError::MalformedPermutation(_))
        ));
        assert!(matches!(
            parse_group_expr("Sym(3)#"),
            Err(HkrError::Parse { offset: 6, .. })
        ));
    }
}
