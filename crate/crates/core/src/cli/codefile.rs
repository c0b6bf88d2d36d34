//! Text format describing one multi-twisted code.
//!
//! ```text
//! # comments start with '#'
//! q = 4
//! modulus = [1, 1, 1]          # only for proper prime powers, ascending over F_p
//! lambda = [1, 2]              # element codes, each nonzero
//! m = [3, 5]
//! gen = [[1, 1], [0, 2, 1]]    # one line per generator tuple, ascending coefficients
//! gen = [[1], [1, 0, 0, 1]]
//! ```

use std::fmt::Write as _;

use thiserror::Error;

use crate::algebra::{field::prime_power, Field, Poly};
use crate::error::Error;
use crate::mtcode::{MTCode, MTShape};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("line {line}: unknown key `{key}`")]
    UnknownKey { line: usize, key: String },
    #[error("line {line}: duplicate key `{key}`")]
    DuplicateKey { line: usize, key: String },
    #[error("missing required key `{0}`")]
    MissingKey(&'static str),
    #[error("line {line}: {message}")]
    InvalidField { line: usize, message: String },
    #[error("line {line}: lambda for block {block} is zero")]
    ZeroLambda { line: usize, block: usize },
    #[error("line {line}: {message}")]
    LengthMismatch { line: usize, message: String },
    #[error("line {line}: coefficient {value} is outside [0, {q})")]
    CoefficientOutOfRange { line: usize, value: u64, q: u32 },
}

#[derive(Debug, Clone, PartialEq)]
enum Value {
    Int(u64),
    List(Vec<Value>),
}

struct Cursor {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    /// column of `chars[0]` in the original line (1-based)
    offset: usize,
}

impl Cursor {
    fn err(&self, message: impl Into<String>) -> ParseError {
        ParseError::Syntax { line: self.line, column: self.offset + self.pos, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn value(&mut self) -> Result<Value, ParseError> {
        match self.peek() {
            Some('[') => {
                self.pos += 1;
                let mut items = Vec::new();
                if self.peek() == Some(']') {
                    self.pos += 1;
                    return Ok(Value::List(items));
                }
                loop {
                    items.push(self.value()?);
                    match self.peek() {
                        Some(',') => self.pos += 1,
                        Some(']') => {
                            self.pos += 1;
                            return Ok(Value::List(items));
                        }
                        Some(c) => return Err(self.err(format!("expected `,` or `]`, found `{c}`"))),
                        None => return Err(self.err("unterminated list")),
                    }
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let text: String = self.chars[start..self.pos].iter().collect();
                text.parse::<u64>().map(Value::Int).map_err(|_| {
                    self.pos = start;
                    self.err("integer too large")
                })
            }
            Some(c) => Err(self.err(format!("unexpected `{c}`"))),
            None => Err(self.err("missing value")),
        }
    }
}

/// Parsed, not yet validated, contents of a code file.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CodeFile {
    pub q: u32,
    pub modulus: Option<Vec<u32>>,
    pub lambda: Vec<u32>,
    pub m: Vec<usize>,
    pub gens: Vec<Vec<Vec<u32>>>,
}

#[derive(Default)]
struct Lines {
    q: usize,
    modulus: usize,
    lambda: usize,
    m: usize,
    gens: Vec<usize>,
}

fn expect_int(v: &Value, line: usize, what: &str) -> Result<u64, ParseError> {
    match v {
        Value::Int(i) => Ok(*i),
        Value::List(_) => Err(ParseError::Syntax { line, column: 1, message: format!("{what} must be an integer") }),
    }
}

fn expect_ints(v: &Value, line: usize, what: &str) -> Result<Vec<u64>, ParseError> {
    match v {
        Value::List(items) => items.iter().map(|i| expect_int(i, line, what)).collect(),
        Value::Int(_) => Err(ParseError::Syntax { line, column: 1, message: format!("{what} must be a list") }),
    }
}

fn expect_int_lists(v: &Value, line: usize, what: &str) -> Result<Vec<Vec<u64>>, ParseError> {
    match v {
        Value::List(items) => items.iter().map(|i| expect_ints(i, line, what)).collect(),
        Value::Int(_) => Err(ParseError::Syntax { line, column: 1, message: format!("{what} must be a list of lists") }),
    }
}

impl CodeFile {
    /// Parses text and validates it into a [`MTCode`] (fields capped at `max_q`).
    pub fn parse_code(text: &str, max_q: u32) -> Result<MTCode, Error> {
        let (file, lines) = Self::parse_with_lines(text)?;
        file.validate(&lines, max_q)
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        Ok(Self::parse_with_lines(text)?.0)
    }

    fn parse_with_lines(text: &str) -> Result<(Self, Lines), ParseError> {
        let mut file = CodeFile::default();
        let mut lines = Lines::default();
        let mut seen: Vec<&str> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("");
            if content.trim().is_empty() {
                continue;
            }
            let Some(eq) = content.find('=') else {
                let column = content.len() - content.trim_start().len() + 1;
                return Err(ParseError::Syntax { line, column, message: "expected `key = value`".into() });
            };
            let key = content[..eq].trim();
            let value_src = &content[eq + 1..];
            let mut cur = Cursor {
                chars: value_src.chars().collect(),
                pos: 0,
                line,
                offset: content[..eq + 1].chars().count() + 1,
            };
            let value = cur.value()?;
            if cur.peek().is_some() {
                return Err(cur.err("trailing characters after value"));
            }
            if key != "gen" && seen.contains(&key) {
                return Err(ParseError::DuplicateKey { line, key: key.to_string() });
            }
            match key {
                "q" => {
                    let q = expect_int(&value, line, "q")?;
                    file.q = u32::try_from(q).map_err(|_| ParseError::InvalidField {
                        line,
                        message: format!("q = {q} is too large"),
                    })?;
                    lines.q = line;
                }
                "modulus" => {
                    let m = expect_ints(&value, line, "modulus")?;
                    file.modulus = Some(m.into_iter().map(|c| c.min(u32::MAX as u64) as u32).collect());
                    lines.modulus = line;
                }
                "lambda" => {
                    let l = expect_ints(&value, line, "lambda")?;
                    file.lambda = l.into_iter().map(|c| c.min(u32::MAX as u64) as u32).collect();
                    lines.lambda = line;
                }
                "m" => {
                    let m = expect_ints(&value, line, "m")?;
                    file.m = m.into_iter().map(|c| c as usize).collect();
                    lines.m = line;
                }
                "gen" => {
                    let g = expect_int_lists(&value, line, "gen")?;
                    file.gens.push(
                        g.into_iter()
                            .map(|c| c.into_iter().map(|x| x.min(u32::MAX as u64) as u32).collect())
                            .collect(),
                    );
                    lines.gens.push(line);
                }
                other => return Err(ParseError::UnknownKey { line, key: other.to_string() }),
            }
            seen.push(key);
        }
        Ok((file, lines))
    }

    fn validate(&self, lines: &Lines, max_q: u32) -> Result<MTCode, Error> {
        if lines.q == 0 {
            return Err(ParseError::MissingKey("q").into());
        }
        if lines.lambda == 0 {
            return Err(ParseError::MissingKey("lambda").into());
        }
        if lines.m == 0 {
            return Err(ParseError::MissingKey("m").into());
        }
        let invalid = |line: usize, message: String| Error::from(ParseError::InvalidField { line, message });
        let (_, e) = prime_power(self.q)
            .ok_or_else(|| invalid(lines.q, format!("q = {} is not a prime power", self.q)))?;
        match (&self.modulus, e > 1) {
            (None, true) => return Err(ParseError::MissingKey("modulus").into()),
            (Some(_), false) => {
                return Err(invalid(lines.modulus, format!("modulus given for prime q = {}", self.q)))
            }
            _ => {}
        }
        let field = Field::from_parts(self.q, self.modulus.as_deref(), max_q).map_err(|err| {
            let line = if self.modulus.is_some() { lines.modulus } else { lines.q };
            invalid(line, err.to_string())
        })?;
        if self.lambda.len() != self.m.len() {
            return Err(ParseError::LengthMismatch {
                line: lines.m,
                message: format!("{} block lengths for {} twist constants", self.m.len(), self.lambda.len()),
            }
            .into());
        }
        if self.lambda.is_empty() {
            return Err(ParseError::LengthMismatch { line: lines.lambda, message: "no blocks".into() }.into());
        }
        if let Some(i) = self.m.iter().position(|&m| m == 0) {
            return Err(ParseError::LengthMismatch { line: lines.m, message: format!("block {i} has length 0") }.into());
        }
        let q = field.order();
        for (block, &l) in self.lambda.iter().enumerate() {
            if l >= q {
                return Err(ParseError::CoefficientOutOfRange { line: lines.lambda, value: l as u64, q }.into());
            }
            if l == 0 {
                return Err(ParseError::ZeroLambda { line: lines.lambda, block }.into());
            }
        }
        let shape = MTShape::from_codes(&field, &self.lambda, &self.m)?;
        let mut gens = Vec::with_capacity(self.gens.len());
        for (tuple, &line) in self.gens.iter().zip(&lines.gens) {
            if tuple.len() != shape.ell() {
                return Err(ParseError::LengthMismatch {
                    line,
                    message: format!("{} components for {} blocks", tuple.len(), shape.ell()),
                }
                .into());
            }
            let mut comps = Vec::with_capacity(tuple.len());
            for coeffs in tuple {
                if let Some(&bad) = coeffs.iter().find(|&&c| c >= q) {
                    return Err(ParseError::CoefficientOutOfRange { line, value: bad as u64, q }.into());
                }
                comps.push(Poly::from_codes(&field, coeffs)?);
            }
            gens.push(comps);
        }
        MTCode::new(shape, gens)
    }

    /// Canonical file contents for a code (components already reduced).
    pub fn from_code(code: &MTCode) -> Self {
        let shape = code.shape();
        let field = code.field();
        CodeFile {
            q: field.order(),
            modulus: field.modulus().map(<[u32]>::to_vec),
            lambda: shape.lambdas().iter().map(|l| l.code()).collect(),
            m: shape.block_lengths().to_vec(),
            gens: code
                .generators()
                .iter()
                .map(|t| t.iter().map(Poly::codes).collect())
                .collect(),
        }
    }

    pub fn serialize(&self) -> String {
        fn list<T: ToString>(v: &[T]) -> String {
            format!("[{}]", v.iter().map(T::to_string).collect::<Vec<_>>().join(", "))
        }
        let mut out = String::new();
        writeln!(out, "q = {}", self.q).unwrap();
        if let Some(m) = &self.modulus {
            writeln!(out, "modulus = {}", list(m)).unwrap();
        }
        writeln!(out, "lambda = {}", list(&self.lambda)).unwrap();
        writeln!(out, "m = {}", list(&self.m)).unwrap();
        for g in &self.gens {
            let comps: Vec<String> = g.iter().map(|c| list(c)).collect();
            writeln!(out, "gen = [{}]", comps.join(", ")).unwrap();
        }
        out
    }
}

/// Parses and validates a code file with the default field-size cap.
pub fn parse_code_file(text: &str) -> Result<MTCode, Error> {
    CodeFile::parse_code(text, crate::algebra::DEFAULT_MAX_Q)
}

pub fn serialize_code(code: &MTCode) -> String {
    CodeFile::from_code(code).serialize()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mtcode::DEFAULT_MAX_ENUM;
    use crate::Distance;

    #[test]
    fn minimal_cyclic_file() {
        let code = parse_code_file("q = 2\nlambda = [1]\nm = [3]\ngen = [[1, 1]]\n").unwrap();
        let c = code.expand();
        assert_eq!((c.n(), c.dimension()), (3, 2));
        assert_eq!(c.min_distance(DEFAULT_MAX_ENUM).unwrap(), Distance::Finite(2));
    }

    #[test]
    fn extension_field_example() {
        let text = "q = 4\nmodulus = [1, 1, 1]  # x^2+x+1\nlambda = [1, 2]\nm = [3, 5]\n\
                    gen = [[1, 1], [0, 2, 1]]\ngen = [[1], [1, 0, 0, 1]]\n";
        let code = parse_code_file(text).unwrap();
        assert_eq!(code.rho(), 2);
        assert_eq!(code.shape().n(), 8);
        assert_eq!(serialize_code(&code), text.replace("  # x^2+x+1", ""));
    }

    #[test]
    fn zero_lambda_rejected() {
        let err = parse_code_file("q = 2\nlambda = [0]\nm = [3]\n").unwrap_err();
        assert_eq!(err, Error::Parse(ParseError::ZeroLambda { line: 2, block: 0 }));
    }

    #[test]
    fn component_is_reduced_and_round_trips() {
        // x^3 + x over F_2 mod x^3 - 1 is x + 1
        let code = parse_code_file("q = 2\nlambda = [1]\nm = [3]\ngen = [[0, 1, 0, 1]]\n").unwrap();
        let text = serialize_code(&code);
        assert_eq!(text, "q = 2\nlambda = [1]\nm = [3]\ngen = [[1, 1]]\n");
        assert_eq!(parse_code_file(&text).unwrap(), code);
    }

    #[test]
    fn diagnostics() {
        let e = |t: &str| match parse_code_file(t).unwrap_err() {
            Error::Parse(p) => p,
            other => panic!("{other:?}"),
        };
        assert_eq!(
            e("q = 2\nlambda = [1, \nm = [3]\n"),
            ParseError::Syntax { line: 2, column: 14, message: "missing value".into() }
        );
        assert!(matches!(e("q = 2\nlambda [1]\n"), ParseError::Syntax { line: 2, column: 1, .. }));
        assert!(matches!(e("q = 2\nfoo = 1\n"), ParseError::UnknownKey { line: 2, .. }));
        assert!(matches!(e("q = 2\nq = 3\n"), ParseError::DuplicateKey { line: 2, .. }));
        assert_eq!(e("lambda = [1]\nm = [3]\n"), ParseError::MissingKey("q"));
        assert_eq!(e("q = 4\nlambda = [1]\nm = [3]\n"), ParseError::MissingKey("modulus"));
        assert!(matches!(e("q = 6\nlambda = [1]\nm = [3]\n"), ParseError::InvalidField { line: 1, .. }));
        assert!(matches!(
            e("q = 4\nmodulus = [1, 0, 1]\nlambda = [1]\nm = [3]\n"),
            ParseError::InvalidField { line: 2, .. }
        ));
        assert!(matches!(e("q = 2\nlambda = [1, 1]\nm = [3]\n"), ParseError::LengthMismatch { line: 3, .. }));
        assert!(matches!(
            e("q = 2\nlambda = [1]\nm = [3]\ngen = [[1], [1]]\n"),
            ParseError::LengthMismatch { line: 4, .. }
        ));
        assert_eq!(
            e("q = 3\nlambda = [1]\nm = [3]\ngen = [[1, 3]]\n"),
            ParseError::CoefficientOutOfRange { line: 4, value: 3, q: 3 }
        );
        assert_eq!(
            e("q = 3\nlambda = [5]\nm = [3]\n"),
            ParseError::CoefficientOutOfRange { line: 2, value: 5, q: 3 }
        );
    }

    #[test]
    fn zero_code_file() {
        let code = parse_code_file("q = 3\nlambda = [2, 1]\nm = [2, 2]\n").unwrap();
        assert_eq!(code.rho(), 0);
        assert_eq!(code.expand().dimension(), 0);
    }
}
