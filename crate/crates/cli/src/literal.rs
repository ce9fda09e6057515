//! Literal syntax: rationals are `p` or `p/q` with an optional sign and
//! no whitespace; classes are `a,b,c`.

use cxj_core::rational::parse_rational;
use cxj_core::{Error, Genus, NSClass, Rational};

/// Unvalidated command-line description of a class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassSpec {
    pub g: i64,
    pub a: String,
    pub b: String,
    pub c: String,
}

impl ClassSpec {
    pub fn from_literal(g: i64, literal: &str) -> Result<Self, Error> {
        let parts: Vec<&str> = literal.split(',').collect();
        match parts.as_slice() {
            [a, b, c] => Ok(ClassSpec { g, a: a.to_string(), b: b.to_string(), c: c.to_string() }),
            _ => Err(Error::ParseClass(literal.to_string())),
        }
    }

    pub fn parse(&self) -> Result<NSClass, Error> {
        let genus = Genus::new(self.g)?;
        Ok(NSClass::new(genus, parse_rational(&self.a)?, parse_rational(&self.b)?, parse_rational(&self.c)?))
    }
}

pub fn parse_class(g: i64, literal: &str) -> Result<NSClass, Error> {
    ClassSpec::from_literal(g, literal)?.parse()
}

pub fn parse_rational_arg(s: &str) -> Result<Rational, Error> {
    parse_rational(s)
}
