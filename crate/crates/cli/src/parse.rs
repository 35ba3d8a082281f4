//! Braid word syntax.
//!
//! ```text
//! word := term (('.' | WS) term)*
//! term := name ('^' int)?
//! name := a12 | a13 | a14 | a23 | a24 | a34 | c123 | c124 | c134 | c234
//!       | p12-34 | p14-23 | d | s1 | s2 | s3
//! int  := '-'? digit+
//! ```

use std::fmt;

use bkl4::{BraidWord, DualSimple, GarsideBraid};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub message: String,
    pub input: String,
}

impl ParseError {
    fn new(input: &str, position: usize, message: impl Into<String>) -> Self {
        ParseError {
            position,
            message: message.into(),
            input: input.to_string(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let column = self.input[..self.position].chars().count();
        writeln!(f, "parse error at column {}: {}", column + 1, self.message)?;
        writeln!(f, "  {}", self.input)?;
        write!(f, "  {}^", " ".repeat(column))
    }
}

impl std::error::Error for ParseError {}

fn generator(name: &str) -> Option<DualSimple> {
    match name {
        "d" => Some(DualSimple::Delta),
        "s1" => Some(DualSimple::A12),
        "s2" => Some(DualSimple::A23),
        "s3" => Some(DualSimple::A34),
        "1" | "delta" => None,
        _ => name.parse().ok(),
    }
}

fn skip_whitespace(input: &str, mut pos: usize) -> usize {
    while let Some(c) = input[pos..].chars().next().filter(|c| c.is_whitespace()) {
        pos += c.len_utf8();
    }
    pos
}

/// Parses one term at `pos`, returning its generator, exponent and end.
fn term(input: &str, pos: usize) -> Result<(DualSimple, i64, usize), ParseError> {
    let bytes = input.as_bytes();
    let mut end = pos;
    while end < bytes.len() && (bytes[end].is_ascii_alphanumeric() || bytes[end] == b'-') {
        end += 1;
    }
    let name = &input[pos..end];
    if name.is_empty() {
        return Err(match input[pos..].chars().next() {
            Some('.') => ParseError::new(input, pos, "expected a generator before '.'"),
            Some(c) => ParseError::new(input, pos, format!("unexpected character '{c}'")),
            None => ParseError::new(input, pos, "expected a generator"),
        });
    }
    let g = generator(name)
        .ok_or_else(|| ParseError::new(input, pos, format!("unknown generator '{name}'")))?;
    if bytes.get(end) != Some(&b'^') {
        return Ok((g, 1, end));
    }
    let start = end + 1;
    let mut stop = start + usize::from(bytes.get(start) == Some(&b'-'));
    let digits = stop;
    while bytes.get(stop).is_some_and(u8::is_ascii_digit) {
        stop += 1;
    }
    if stop == digits {
        return Err(ParseError::new(input, start, "expected an integer exponent after '^'"));
    }
    let exponent = input[start..stop]
        .parse()
        .map_err(|_| ParseError::new(input, start, "exponent out of range"))?;
    Ok((g, exponent, stop))
}

pub fn parse_word(input: &str) -> Result<BraidWord, ParseError> {
    let mut word = BraidWord::new();
    let mut pos = skip_whitespace(input, 0);
    if pos == input.len() {
        return Ok(word);
    }
    loop {
        let (g, exponent, end) = term(input, pos)?;
        word.push_simple(g, exponent);
        let next = skip_whitespace(input, end);
        if next == input.len() {
            return Ok(word);
        }
        if input[next..].starts_with('.') {
            pos = skip_whitespace(input, next + 1);
            if pos == input.len() {
                return Err(ParseError::new(input, next, "trailing '.'"));
            }
        } else if next > end {
            pos = next;
        } else {
            let c = input[next..].chars().next().unwrap();
            return Err(ParseError::new(input, next, format!("unexpected character '{c}'")));
        }
    }
}

pub fn parse_braid(input: &str) -> Result<GarsideBraid, ParseError> {
    parse_word(input).map(|w| w.normalize())
}

/// Normal form in word syntax, e.g. `d^-1 . c134 . a13`; parses back to the
/// same braid.
pub fn format_braid(x: &GarsideBraid) -> String {
    x.to_string()
}
