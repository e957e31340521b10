//! Text forms: elements as `(i,j,k)`, bicyclic pairs as `(i,j)` and families as
//! `lo..hi` or `lo..inf`. Formatting is canonical (no spaces), so
//! `parse(x.to_string()) == x` always holds.

use std::str::FromStr;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::element::{BicyclicElement, Element, MAX_COORD};
use crate::error::{Error, Result};
use crate::family::{CanonicalFamily, NormalizedFamily};

fn parse_err(column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        column,
        message: message.into(),
    }
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { text, pos: 0 }
    }

    fn column(&self) -> usize {
        self.text[..self.pos].chars().count() + 1
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn skip_spaces(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn expect(&mut self, want: char) -> Result<()> {
        self.skip_spaces();
        match self.peek() {
            Some(c) if c == want => {
                self.pos += c.len_utf8();
                Ok(())
            }
            Some(c) => Err(parse_err(
                self.column(),
                format!("expected '{want}', found '{c}'"),
            )),
            None => Err(parse_err(
                self.column(),
                format!("expected '{want}', found end of input"),
            )),
        }
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_spaces();
        let start = self.pos;
        if self.peek() == Some('-') {
            return Err(parse_err(self.column(), "negative numbers are not allowed"));
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(parse_err(self.column(), "expected a decimal number"));
        }
        let digits = &self.text[start..self.pos];
        let col = self.text[..start].chars().count() + 1;
        digits
            .parse::<u64>()
            .ok()
            .filter(|&v| v <= MAX_COORD)
            .ok_or_else(|| parse_err(col, format!("number {digits} is out of range")))
    }

    fn finish(&mut self) -> Result<()> {
        self.skip_spaces();
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(parse_err(
                self.column(),
                format!("unexpected trailing '{c}'"),
            )),
        }
    }
}

/// Parses a parenthesised tuple of exactly `arity` non-negative integers.
fn parse_tuple(text: &str, arity: usize) -> Result<Vec<u64>> {
    let mut cur = Cursor::new(text);
    cur.expect('(')?;
    let mut parts = vec![cur.number()?];
    loop {
        cur.skip_spaces();
        match cur.peek() {
            Some(',') => {
                cur.pos += 1;
                parts.push(cur.number()?);
            }
            Some(')') => {
                if parts.len() != arity {
                    return Err(parse_err(
                        cur.column(),
                        format!("expected {arity} components, found {}", parts.len()),
                    ));
                }
                cur.pos += 1;
                break;
            }
            Some(c) => {
                return Err(parse_err(
                    cur.column(),
                    format!("expected ',' or ')', found '{c}'"),
                ))
            }
            None => return Err(parse_err(cur.column(), "unterminated tuple")),
        }
    }
    cur.finish()?;
    Ok(parts)
}

pub fn parse_element(text: &str) -> Result<Element> {
    let p = parse_tuple(text, 3)?;
    Ok(Element::new(p[0], p[1], p[2]))
}

pub fn parse_bicyclic(text: &str) -> Result<BicyclicElement> {
    let p = parse_tuple(text, 2)?;
    Ok(BicyclicElement::new(p[0], p[1]))
}

/// Parses `lo..hi` or `lo..inf` as written, without shifting.
pub fn parse_interval(text: &str) -> Result<NormalizedFamily> {
    let mut cur = Cursor::new(text);
    let lo = cur.number()?;
    cur.skip_spaces();
    if !cur.text[cur.pos..].starts_with("..") {
        return Err(parse_err(cur.column(), "expected '..'"));
    }
    cur.pos += 2;
    cur.skip_spaces();
    let hi = if cur.text[cur.pos..].starts_with("inf") {
        cur.pos += 3;
        None
    } else {
        Some(cur.number()?)
    };
    cur.finish()?;
    NormalizedFamily::new(lo, hi)
}

/// Parses a family and records the shift that makes it canonical.
pub fn parse_family(text: &str) -> Result<CanonicalFamily> {
    Ok(parse_interval(text)?.canonicalize())
}

impl FromStr for Element {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_element(s)
    }
}

impl FromStr for BicyclicElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_bicyclic(s)
    }
}

impl FromStr for NormalizedFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_interval(s)
    }
}

macro_rules! text_serde {
    ($ty:ty, $what:literal) => {
        impl Serialize for $ty {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.collect_str(self)
            }
        }

        impl<'de> Deserialize<'de> for $ty {
            fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                let text = String::deserialize(d)?;
                text.parse()
                    .map_err(|e: Error| de::Error::custom(format!("invalid {}: {e}", $what)))
            }
        }
    };
}

text_serde!(Element, "element");
text_serde!(BicyclicElement, "bicyclic element");
text_serde!(NormalizedFamily, "family");
