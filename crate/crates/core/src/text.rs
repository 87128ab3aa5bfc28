//! Parser for the canonical scalar and quaternion text forms.
//!
//! ```text
//! quaternion := '(' scalar ',' scalar ',' scalar ',' scalar ')'
//! scalar     := [sign] term [sign term]
//! term       := ratio | ratio '*' surd | surd
//! ratio      := digits ['/' digits]
//! surd       := 'sqrt(' digits ')'
//! ```
//!
//! Whitespace is ignored everywhere. Error positions are byte offsets into the
//! input.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::quaternion::Quaternion;
use crate::scalar::{Field, QuadScalar};

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str) -> Self {
        Cursor {
            src: s.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("`{}`", b as char)))
        }
    }

    fn eat_keyword(&mut self, kw: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(kw.as_bytes()) {
            self.pos += kw.len();
            true
        } else {
            false
        }
    }

    fn unexpected(&mut self, wanted: &str) -> Error {
        match self.peek() {
            Some(c) => Error::parse(
                self.pos,
                format!("expected {wanted}, found `{}`", c as char),
            ),
            None => Error::parse(self.pos, format!("expected {wanted}, found end of input")),
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.unexpected("a digit"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digit run parses"))
    }

    fn ratio(&mut self) -> Result<BigRational> {
        let num = self.digits()?;
        if self.eat(b'/') {
            let at = self.pos;
            let den = self.digits()?;
            if den.is_zero() {
                return Err(Error::parse(at, "zero denominator"));
            }
            Ok(BigRational::new(num, den))
        } else {
            Ok(BigRational::from_integer(num))
        }
    }

    fn surd(&mut self) -> Result<Field> {
        let at = self.pos;
        if !self.eat_keyword("sqrt") {
            return Err(self.unexpected("`sqrt`"));
        }
        self.expect(b'(')?;
        let d = self.digits()?;
        self.expect(b')')?;
        u32::try_from(&d)
            .ok()
            .and_then(Field::from_radicand)
            .filter(|f| *f != Field::Rational)
            .ok_or_else(|| Error::parse(at, format!("unsupported radicand {d}; use 2 or 5")))
    }

    fn term(&mut self) -> Result<Term> {
        match self.peek() {
            Some(b's') => Ok(Term::Surd(BigRational::one(), self.surd()?)),
            Some(c) if c.is_ascii_digit() => {
                let r = self.ratio()?;
                if self.eat(b'*') {
                    Ok(Term::Surd(r, self.surd()?))
                } else {
                    Ok(Term::Rational(r))
                }
            }
            _ => Err(self.unexpected("a number or `sqrt`")),
        }
    }

    fn sign(&mut self) -> Option<bool> {
        if self.eat(b'-') {
            Some(true)
        } else if self.eat(b'+') {
            Some(false)
        } else {
            None
        }
    }

    fn scalar(&mut self) -> Result<QuadScalar> {
        let start = self.pos;
        let neg = self.sign().unwrap_or(false);
        let mut terms = vec![self.term()?.negate_if(neg)];
        if let Some(neg) = self.sign() {
            terms.push(self.term()?.negate_if(neg));
        }
        let mut rational = None;
        let mut surd = None;
        for t in terms {
            match t {
                Term::Rational(r) if rational.is_none() => rational = Some(r),
                Term::Surd(r, f) if surd.is_none() => surd = Some((r, f)),
                _ => return Err(Error::parse(start, "repeated term kind in scalar")),
            }
        }
        let (b, field) = surd.unwrap_or((BigRational::zero(), Field::Rational));
        QuadScalar::new(rational.unwrap_or_else(BigRational::zero), b, field)
            .map_err(|e| Error::parse(start, e.to_string()))
    }

    fn finish(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(_) => Err(self.unexpected("end of input")),
        }
    }
}

enum Term {
    Rational(BigRational),
    Surd(BigRational, Field),
}

impl Term {
    fn negate_if(self, neg: bool) -> Term {
        if !neg {
            return self;
        }
        match self {
            Term::Rational(r) => Term::Rational(-r),
            Term::Surd(r, f) => Term::Surd(-r, f),
        }
    }
}

pub fn parse_scalar(s: &str) -> Result<QuadScalar> {
    let mut c = Cursor::new(s);
    let v = c.scalar()?;
    c.finish()?;
    Ok(v)
}

pub fn parse_quaternion(s: &str) -> Result<Quaternion> {
    let mut c = Cursor::new(s);
    c.expect(b'(')?;
    let start = c.pos;
    let w = c.scalar()?;
    c.expect(b',')?;
    let x = c.scalar()?;
    c.expect(b',')?;
    let y = c.scalar()?;
    c.expect(b',')?;
    let z = c.scalar()?;
    c.expect(b')')?;
    c.finish()?;
    Quaternion::new(w, x, y, z).map_err(|e| Error::parse(start, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_whitespace_insensitively() {
        let a = parse_quaternion(" ( 1 , -1/2 ,0,  3/4 + 1/4 * sqrt(2) ) ").unwrap();
        let b = parse_quaternion("(1,-1/2,0,3/4+1/4*sqrt(2))").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn surd_forms() {
        assert_eq!(
            parse_scalar("-sqrt(5)").unwrap(),
            QuadScalar::surd(0, 1, -1, 1, Field::Sqrt5).unwrap()
        );
        assert_eq!(
            parse_scalar("1/2*sqrt(2) - 1").unwrap(),
            parse_scalar("-1+1/2*sqrt(2)").unwrap()
        );
    }

    #[test]
    fn error_positions() {
        match parse_quaternion("(1, 2, x, 4)") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 7),
            other => panic!("unexpected {other:?}"),
        }
        match parse_quaternion("(1,2,3)") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 6),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("1*sqrt(3)").is_err());
        assert!(parse_scalar("1+2").is_err());
        assert!(parse_quaternion("(1,0,0,0) trailing").is_err());
    }

    #[test]
    fn mixed_radicands_rejected() {
        assert!(parse_quaternion("(sqrt(2), sqrt(5), 0, 0)").is_err());
    }
}
