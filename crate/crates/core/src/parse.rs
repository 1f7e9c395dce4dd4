//! Ideal literals.
//!
//! Two notations are accepted:
//!
//! * monomial syntax: `x^7 + x^6*y^2 + y^10`. Exponent 1 may be left out and
//!   `*` is optional, so `xy^6` and `x*y^6` are the same term. Terms may also
//!   be separated by commas and the whole list wrapped in parentheses.
//! * exponent pairs: `[(7,0),(6,2),(0,10)]`. Pairs may be written `[c,d]`
//!   too, which makes the JSON arrays emitted by the CLI valid input.
//!
//! Both normalize through [`MonomialIdeal::minimalize`].

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};

pub fn parse_ideal(src: &str) -> Result<MonomialIdeal> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
    };
    p.skip_ws();
    let gens = if p.peek() == Some(b'[') {
        p.pair_list()?
    } else {
        p.term_list()?
    };
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("trailing input"));
    }
    MonomialIdeal::minimalize(gens).map_err(|e| match e {
        Error::Empty => Error::Parse {
            pos: 0,
            msg: "no generators".into(),
        },
        e => e,
    })
}

pub fn parse_monomial(src: &str) -> Result<Monomial> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
    };
    p.skip_ws();
    let m = if p.peek() == Some(b'(') || p.peek() == Some(b'[') {
        p.pair()?
    } else {
        p.term()?
    };
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("trailing input"));
    }
    Ok(m)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", c as char)))
        }
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| Error::Parse {
                pos: start,
                msg: "exponent does not fit in 64 bits".into(),
            })
    }

    fn pair(&mut self) -> Result<Monomial> {
        self.skip_ws();
        let close = match self.peek() {
            Some(b'(') => b')',
            Some(b'[') => b']',
            _ => return Err(self.error("expected '(' or '['")),
        };
        self.pos += 1;
        let x = self.number()?;
        self.expect(b',')?;
        let y = self.number()?;
        self.expect(close)?;
        Ok(Monomial::new(x, y))
    }

    fn pair_list(&mut self) -> Result<Vec<Monomial>> {
        self.expect(b'[')?;
        let mut out = Vec::new();
        if self.eat(b']') {
            return Ok(out);
        }
        loop {
            out.push(self.pair()?);
            if self.eat(b']') {
                return Ok(out);
            }
            self.expect(b',')?;
        }
    }

    fn term_list(&mut self) -> Result<Vec<Monomial>> {
        let parens = self.eat(b'(');
        let mut out = vec![self.term()?];
        while self.eat(b'+') || self.eat(b',') {
            out.push(self.term()?);
        }
        if parens {
            self.expect(b')')?;
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<Monomial> {
        self.skip_ws();
        let mut m = Monomial::ONE;
        let mut factors = 0;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(v @ (b'x' | b'y')) => {
                    self.pos += 1;
                    let e = if self.eat(b'^') { self.number()? } else { 1 };
                    let add = if v == b'x' {
                        Monomial::new(e, 0)
                    } else {
                        Monomial::new(0, e)
                    };
                    m = m.mul(&add)?;
                }
                Some(b'1') if factors == 0 => {
                    self.pos += 1;
                }
                _ if factors == 0 => return Err(self.error("expected a monomial")),
                _ => return Ok(m),
            }
            factors += 1;
            self.eat(b'*');
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs(i: &MonomialIdeal) -> Vec<(u64, u64)> {
        i.generators().iter().map(|m| (m.x, m.y)).collect()
    }

    #[test]
    fn monomial_syntax() {
        let i = parse_ideal("x^7 + x^6*y^2 + y^10").unwrap();
        assert_eq!(pairs(&i), vec![(0, 10), (6, 2), (7, 0)]);
        let j = parse_ideal("x^4 + y^8 + x^3y^3 + xy^6").unwrap();
        assert_eq!(pairs(&j), vec![(0, 8), (1, 6), (3, 3), (4, 0)]);
        let k = parse_ideal("(x^2, x*y, y^2)").unwrap();
        assert_eq!(pairs(&k), vec![(0, 2), (1, 1), (2, 0)]);
    }

    #[test]
    fn pair_syntax() {
        let i = parse_ideal("[(7,0),(6,2),(0,10)]").unwrap();
        assert_eq!(pairs(&i), vec![(0, 10), (6, 2), (7, 0)]);
        let j = parse_ideal("[[4,0], [3,3], [0,8]]").unwrap();
        assert_eq!(pairs(&j), vec![(0, 8), (3, 3), (4, 0)]);
    }

    #[test]
    fn parsed_ideals_are_minimalized() {
        let i = parse_ideal("x^2 + x^3*y + y^2").unwrap();
        assert_eq!(pairs(&i), vec![(0, 2), (2, 0)]);
    }

    #[test]
    fn unit_and_repeated_variables() {
        assert!(parse_ideal("1").unwrap().is_unit());
        assert_eq!(parse_monomial("x*x*y").unwrap(), Monomial::new(2, 1));
        assert_eq!(parse_monomial("(3,4)").unwrap(), Monomial::new(3, 4));
    }

    #[test]
    fn display_round_trips() {
        let i = parse_ideal("[(7,0),(6,2),(3,3),(2,5),(1,6),(0,10)]").unwrap();
        assert_eq!(parse_ideal(&i.to_string()).unwrap(), i);
    }

    #[test]
    fn rejects_garbage() {
        for bad in [
            "",
            "x^",
            "z^2",
            "x^2 +",
            "[(1,2)",
            "[(1,2,3)]",
            "x^2 y^3 q",
            "[]",
        ] {
            let err = parse_ideal(bad).unwrap_err();
            assert!(err.is_parse(), "{bad:?} gave {err:?}");
        }
    }
}
