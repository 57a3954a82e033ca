//! Text formats for monomials and ideals.
//!
//! Pretty form: `n=4; (x1*x2, x2^2*x3)`, with `1` for the unit monomial and
//! `()` for the zero ideal. Record form, for machine use:
//!
//! ```text
//! n 4
//! 1 1 0 0
//! 0 2 1 0
//! ```

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealFormat {
    Pretty,
    Records,
}

pub fn render_ideal(ideal: &MonomialIdeal, format: IdealFormat) -> String {
    match format {
        IdealFormat::Pretty => format!("n={}; {}", ideal.nvars(), ideal),
        IdealFormat::Records => {
            let mut out = format!("n {}\n", ideal.nvars());
            for g in ideal.gens() {
                let row: Vec<String> = g.exponents().iter().map(u32::to_string).collect();
                writeln!(out, "{}", row.join(" ")).unwrap();
            }
            out
        }
    }
}

/// Parses either format, telling them apart by the header.
pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    let head = text.trim_start();
    if head.starts_with("n ") || head.starts_with("n\t") {
        parse_records(text)
    } else {
        parse_pretty(text)
    }
}

/// Parses a monomial in `n` variables, e.g. `x1^2*x3`.
pub fn parse_monomial(text: &str, n: usize) -> Result<Monomial> {
    let mut cur = Cursor::new(text);
    cur.skip_ws();
    let u = cur.monomial(n)?;
    cur.skip_ws();
    if !cur.at_end() {
        return Err(cur.error("trailing input after monomial"));
    }
    Ok(u)
}

pub fn parse_pretty(text: &str) -> Result<MonomialIdeal> {
    let mut cur = Cursor::new(text);
    cur.skip_ws();
    cur.expect('n')?;
    cur.skip_ws();
    cur.expect('=')?;
    cur.skip_ws();
    let n = cur.number()? as usize;
    cur.skip_ws();
    cur.expect(';')?;
    cur.skip_ws();
    cur.expect('(')?;
    cur.skip_ws();
    let mut gens = Vec::new();
    if cur.peek() != Some(')') {
        loop {
            cur.skip_ws();
            gens.push(cur.monomial(n)?);
            cur.skip_ws();
            match cur.peek() {
                Some(',') => {
                    cur.bump();
                }
                Some(')') => break,
                _ => return Err(cur.error("expected `,` or `)`")),
            }
        }
    }
    cur.expect(')')?;
    cur.skip_ws();
    if !cur.at_end() {
        return Err(cur.error("trailing input after ideal"));
    }
    MonomialIdeal::minimalize(gens, n)
}

pub fn parse_records(text: &str) -> Result<MonomialIdeal> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty());
    let err = |line: usize, message: String| Error::Parse {
        line,
        column: 1,
        message,
    };
    let (hline, header) = lines
        .next()
        .ok_or_else(|| err(1, "missing `n <count>` header".into()))?;
    let mut fields = header.split_whitespace();
    let n: usize = match (fields.next(), fields.next(), fields.next()) {
        (Some("n"), Some(count), None) => count
            .parse()
            .map_err(|_| err(hline, format!("bad variable count {count:?}")))?,
        _ => return Err(err(hline, "expected header `n <count>`".into())),
    };
    let mut gens = Vec::new();
    for (lineno, line) in lines {
        let exps = line
            .split_whitespace()
            .map(|t| {
                t.parse::<u32>()
                    .map_err(|_| err(lineno, format!("bad exponent {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if exps.len() != n {
            return Err(err(
                lineno,
                format!("expected {n} exponents, found {}", exps.len()),
            ));
        }
        gens.push(Monomial::new(exps)?);
    }
    MonomialIdeal::minimalize(gens, n)
}

struct Cursor<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    column: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor {
            chars: text.chars().peekable(),
            line: 1,
            column: 1,
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            column: self.column,
            message: message.into(),
        }
    }

    fn expect(&mut self, want: char) -> Result<()> {
        match self.peek() {
            Some(c) if c == want => {
                self.bump();
                Ok(())
            }
            Some(c) => Err(self.error(format!("expected `{want}`, found `{c}`"))),
            None => Err(self.error(format!("expected `{want}`, found end of input"))),
        }
    }

    fn number(&mut self) -> Result<u64> {
        let mut digits = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            digits.push(c);
            self.bump();
        }
        if digits.is_empty() {
            return Err(self.error("expected a number"));
        }
        digits
            .parse()
            .map_err(|_| self.error("number out of range"))
    }

    fn monomial(&mut self, n: usize) -> Result<Monomial> {
        if self.peek() == Some('1') {
            self.bump();
            return Ok(Monomial::one(n));
        }
        let mut exps = vec![0u32; n];
        loop {
            self.skip_ws();
            let (line, column) = (self.line, self.column);
            self.expect('x')?;
            let index = self.number()? as usize;
            if index == 0 || index > n {
                return Err(Error::Parse {
                    line,
                    column,
                    message: format!("variable x{index} outside x1..x{n}"),
                });
            }
            self.skip_ws();
            let exp = if self.peek() == Some('^') {
                self.bump();
                self.skip_ws();
                u32::try_from(self.number()?).map_err(|_| self.error("exponent out of range"))?
            } else {
                1
            };
            exps[index - 1] = exps[index - 1]
                .checked_add(exp)
                .ok_or_else(|| self.error("exponent out of range"))?;
            self.skip_ws();
            if self.peek() == Some('*') {
                self.bump();
            } else {
                break;
            }
        }
        Monomial::new(exps)
    }
}
