//! The group expression language.
//!
//! ```text
//! Sym(5)  Alt(6)  C(12)  D(8)  PSL2(7)  Sp62  InvolutionExample(4)
//! A * B   Pow(A,3)   (A * B)
//! Perm(deg=5; gens="(1 2 3)(4 5), (1 2)")
//! ```
//!
//! Whitespace outside the quoted generator list is ignored; keywords are
//! case-sensitive. `D(n)` is the dihedral group of order `2n`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{GroupError, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupExpression {
    Sym(usize),
    Alt(usize),
    Cyclic(usize),
    /// order `2n`
    Dihedral(usize),
    Psl2(u64),
    Sp62,
    DirectProduct(Vec<GroupExpression>),
    Power(Box<GroupExpression>, usize),
    InvolutionExample(usize),
    FromGenerators {
        degree: usize,
        generators: Vec<String>,
    },
}

impl GroupExpression {
    pub fn parse(s: &str) -> Result<Self> {
        let mut p = Parser {
            src: strip_whitespace(s),
            pos: 0,
        };
        let e = p.expr()?;
        if p.pos != p.src.len() {
            return Err(p.error("trailing input"));
        }
        Ok(e)
    }

    /// Direct factors, with powers unrolled.
    pub fn factors(&self) -> Vec<GroupExpression> {
        match self {
            GroupExpression::DirectProduct(fs) => fs.iter().flat_map(|f| f.factors()).collect(),
            GroupExpression::Power(e, t) => (0..*t).flat_map(|_| e.factors()).collect(),
            other => vec![other.clone()],
        }
    }

    /// True when the expression mentions the Sp(6,2) construction.
    pub fn is_stretch(&self) -> bool {
        match self {
            GroupExpression::Sp62 => true,
            GroupExpression::DirectProduct(fs) => fs.iter().any(|f| f.is_stretch()),
            GroupExpression::Power(e, _) => e.is_stretch(),
            _ => false,
        }
    }
}

/// Drops whitespace everywhere except inside double quotes.
fn strip_whitespace(s: &str) -> Vec<char> {
    let mut out = Vec::with_capacity(s.len());
    let mut quoted = false;
    for c in s.chars() {
        if c == '"' {
            quoted = !quoted;
        }
        if quoted || !c.is_whitespace() {
            out.push(c);
        }
    }
    out
}

struct Parser {
    src: Vec<char>,
    pos: usize,
}

impl Parser {
    fn error(&self, msg: &str) -> GroupError {
        let rest: String = self.src[self.pos.min(self.src.len())..].iter().collect();
        GroupError::Parse(format!("{msg} at `{rest}`"))
    }

    fn peek(&self) -> Option<char> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected `{c}`")))
        }
    }

    fn expect_str(&mut self, s: &str) -> Result<()> {
        for c in s.chars() {
            self.expect(c)?;
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<GroupExpression> {
        let mut factors = vec![self.factor()?];
        while self.eat('*') {
            factors.push(self.factor()?);
        }
        Ok(if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            GroupExpression::DirectProduct(factors)
        })
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_alphanumeric()) {
            self.pos += 1;
        }
        self.src[start..self.pos].iter().collect()
    }

    fn number(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let text: String = self.src[start..self.pos].iter().collect();
        text.parse().map_err(|_| self.error("number too large"))
    }

    fn paren_number(&mut self) -> Result<u64> {
        self.expect('(')?;
        let n = self.number()?;
        self.expect(')')?;
        Ok(n)
    }

    fn factor(&mut self) -> Result<GroupExpression> {
        if self.eat('(') {
            let e = self.expr()?;
            self.expect(')')?;
            return Ok(e);
        }
        let name = self.ident();
        Ok(match name.as_str() {
            "Sym" => GroupExpression::Sym(self.paren_number()? as usize),
            "Alt" => GroupExpression::Alt(self.paren_number()? as usize),
            "C" => GroupExpression::Cyclic(self.paren_number()? as usize),
            "D" => GroupExpression::Dihedral(self.paren_number()? as usize),
            "PSL2" => GroupExpression::Psl2(self.paren_number()?),
            "Sp62" => GroupExpression::Sp62,
            "InvolutionExample" => GroupExpression::InvolutionExample(self.paren_number()? as usize),
            "Pow" => {
                self.expect('(')?;
                let e = self.expr()?;
                self.expect(',')?;
                let t = self.number()? as usize;
                self.expect(')')?;
                GroupExpression::Power(Box::new(e), t)
            }
            "Perm" => {
                self.expect('(')?;
                self.expect_str("deg=")?;
                let degree = self.number()? as usize;
                self.expect(';')?;
                self.expect_str("gens=\"")?;
                let start = self.pos;
                while self.peek().is_some_and(|c| c != '"') {
                    self.pos += 1;
                }
                let body: String = self.src[start..self.pos].iter().collect();
                self.expect('"')?;
                self.expect(')')?;
                GroupExpression::FromGenerators {
                    degree,
                    generators: split_generators(&body),
                }
            }
            "" => return Err(self.error("expected a group")),
            other => return Err(GroupError::Parse(format!("unknown group keyword `{other}`"))),
        })
    }
}

/// Splits `"(1 2 3)(4 5), (1 2)"` at commas outside parentheses.
fn split_generators(body: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in body.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if c == ',' && depth == 0 {
            out.push(cur.trim().to_string());
            cur.clear();
        } else {
            cur.push(c);
        }
    }
    if !cur.trim().is_empty() || !out.is_empty() {
        out.push(cur.trim().to_string());
    }
    out.retain(|g| !g.is_empty());
    out
}

impl fmt::Display for GroupExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupExpression::Sym(n) => write!(f, "Sym({n})"),
            GroupExpression::Alt(n) => write!(f, "Alt({n})"),
            GroupExpression::Cyclic(n) => write!(f, "C({n})"),
            GroupExpression::Dihedral(n) => write!(f, "D({n})"),
            GroupExpression::Psl2(q) => write!(f, "PSL2({q})"),
            GroupExpression::Sp62 => f.write_str("Sp62"),
            GroupExpression::InvolutionExample(s) => write!(f, "InvolutionExample({s})"),
            GroupExpression::Power(e, t) => write!(f, "Pow({e},{t})"),
            GroupExpression::DirectProduct(fs) => {
                for (i, e) in fs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" * ")?;
                    }
                    if matches!(e, GroupExpression::DirectProduct(_)) {
                        write!(f, "({e})")?;
                    } else {
                        write!(f, "{e}")?;
                    }
                }
                Ok(())
            }
            GroupExpression::FromGenerators { degree, generators } => {
                write!(f, "Perm(deg={degree}; gens=\"{}\")", generators.join(", "))
            }
        }
    }
}

impl FromStr for GroupExpression {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self> {
        GroupExpression::parse(s)
    }
}

impl Serialize for GroupExpression {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GroupExpression {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        GroupExpression::parse(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use GroupExpression as E;

    #[test]
    fn parses_every_keyword() {
        assert_eq!(E::parse("Sym(5)").unwrap(), E::Sym(5));
        assert_eq!(E::parse("Alt(6)").unwrap(), E::Alt(6));
        assert_eq!(E::parse("C(12)").unwrap(), E::Cyclic(12));
        assert_eq!(E::parse("D(8)").unwrap(), E::Dihedral(8));
        assert_eq!(E::parse("PSL2(7)").unwrap(), E::Psl2(7));
        assert_eq!(E::parse("Sp62").unwrap(), E::Sp62);
        assert_eq!(E::parse("InvolutionExample(4)").unwrap(), E::InvolutionExample(4));
        assert_eq!(E::parse("Pow(Sym(3),3)").unwrap(), E::Power(Box::new(E::Sym(3)), 3));
        assert_eq!(
            E::parse(r#"Perm(deg=5; gens="(1 2 3)(4 5), (1 2)")"#).unwrap(),
            E::FromGenerators {
                degree: 5,
                generators: vec!["(1 2 3)(4 5)".into(), "(1 2)".into()]
            }
        );
    }

    #[test]
    fn products_and_whitespace() {
        let e = E::parse(" Sym( 5 ) *Pow( Sym(3) , 2 )").unwrap();
        assert_eq!(e, E::DirectProduct(vec![E::Sym(5), E::Power(Box::new(E::Sym(3)), 2)]));
        assert_eq!(e.factors(), vec![E::Sym(5), E::Sym(3), E::Sym(3)]);
        let nested = E::parse("Alt(5) * (C(2) * C(3))").unwrap();
        assert_eq!(E::parse(&nested.to_string()).unwrap(), nested);
    }

    #[test]
    fn rejects_bad_input() {
        for bad in ["sym(5)", "Sym(5", "Sym(x)", "Sym(5) *", "Foo(3)", "", "Pow(Sym(3))"] {
            assert!(matches!(E::parse(bad), Err(GroupError::Parse(_))), "{bad}");
        }
    }

    #[test]
    fn display_round_trips() {
        for s in [
            "Sym(5) * Pow(Sym(3),2)",
            "Perm(deg=4; gens=\"(1 2 3 4), (1 3)\")",
            "InvolutionExample(3)",
            "Alt(5) * C(6)",
        ] {
            let e = E::parse(s).unwrap();
            assert_eq!(e.to_string(), s);
        }
    }

    #[test]
    fn serde_as_string() {
        let e = E::parse("Sym(5) * C(6)").unwrap();
        let json = serde_json::to_string(&e).unwrap();
        assert_eq!(json, "\"Sym(5) * C(6)\"");
        assert_eq!(serde_json::from_str::<E>(&json).unwrap(), e);
    }
}
