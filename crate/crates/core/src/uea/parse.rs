//! Text format for PBW vectors:
//!
//! ```text
//! (2/9)*e[-2] - (1/3)*e[-1]h[-1] + e[-1]^2 f[0]  |hw: level=-4/3, j=-2/3>
//! ```
//!
//! The ket is `|hw: ...>` (Verma), `|vac: level=...>` or `|contra: level=..., j=...>`.
//! Modes may be written `e[-1]` or `e(-1)`; `#` starts a comment.

use serde::{Deserialize, Serialize};

use super::{Gen, Mode, ModuleData, ModuleKind, PBWElement};
use crate::algebra::Rat;
use crate::error::{MathError, Result};

/// A parsed vector together with the module it lives in.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleVector {
    pub module: ModuleData,
    /// Terms as written, before normal ordering.
    pub terms: Vec<(Rat, Vec<Mode>)>,
}

impl ModuleVector {
    pub fn element(&self) -> PBWElement {
        PBWElement::from_terms(self.terms.clone(), &self.module)
    }
}

fn err(msg: impl Into<String>) -> MathError {
    MathError::Parse(msg.into())
}

fn parse_ket(ket: &str) -> Result<ModuleData> {
    let body = ket.trim().strip_prefix('|').and_then(|s| s.strip_suffix('>')).ok_or_else(|| err(format!("bad ket {ket:?}")))?;
    let (kind, rest) = body.split_once(':').unwrap_or((body, ""));
    let kind = match kind.trim() {
        "hw" | "verma" => ModuleKind::Verma,
        "vac" | "vacuum" | "0" => ModuleKind::Vacuum,
        "contra" | "lw" => ModuleKind::Contra,
        k => return Err(err(format!("unknown module kind {k:?}"))),
    };
    let (mut level, mut weight) = (None, None);
    for item in rest.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (k, v) = item.split_once('=').ok_or_else(|| err(format!("expected key=value, got {item:?}")))?;
        let v: Rat = v.trim().parse()?;
        match k.trim() {
            "level" | "k" => level = Some(v),
            "j" | "weight" => weight = Some(v),
            k => return Err(err(format!("unknown ket key {k:?}"))),
        }
    }
    let level = level.ok_or_else(|| err("ket needs level=..."))?;
    Ok(match kind {
        ModuleKind::Vacuum => ModuleData::vacuum(level),
        k => ModuleData { kind: k, level, weight: weight.ok_or_else(|| err("ket needs j=..."))? },
    })
}

struct Cursor<'a> {
    s: &'a [u8],
    i: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.i < self.s.len() && (self.s[self.i] as char).is_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.s.get(self.i).map(|&b| b as char)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &'a str {
        self.skip_ws();
        let start = self.i;
        while self.i < self.s.len() && f(self.s[self.i] as char) {
            self.i += 1;
        }
        std::str::from_utf8(&self.s[start..self.i]).unwrap()
    }

    fn number(&mut self) -> Result<Rat> {
        let t = self.take_while(|c| c.is_ascii_digit() || c == '/' || c == '-');
        t.parse()
    }

    fn int(&mut self) -> Result<i64> {
        let t = self.take_while(|c| c.is_ascii_digit() || c == '-');
        t.parse().map_err(|_| err(format!("expected an integer, got {t:?}")))
    }
}

fn parse_term(c: &mut Cursor) -> Result<(Rat, Vec<Mode>)> {
    let mut coeff = Rat::one();
    match c.peek() {
        Some('(') => {
            c.eat('(');
            coeff = c.number()?;
            if !c.eat(')') {
                return Err(err("unclosed coefficient"));
            }
            c.eat('*');
        }
        Some(ch) if ch.is_ascii_digit() => {
            coeff = c.number()?;
            c.eat('*');
        }
        _ => {}
    }
    let mut modes = Vec::new();
    while let Some(ch) = c.peek() {
        let g = match ch {
            'e' => Gen::E,
            'f' => Gen::F,
            'h' => Gen::H,
            _ => break,
        };
        c.i += 1;
        c.eat('_');
        let close = if c.eat('[') {
            ']'
        } else if c.eat('(') {
            ')'
        } else {
            return Err(err(format!("expected a mode index after {ch}")));
        };
        let n = c.int()?;
        if !c.eat(close) {
            return Err(err("unclosed mode index"));
        }
        let mut pow = 1;
        if c.eat('^') {
            pow = c.int()?;
            if pow < 0 {
                return Err(err("negative power"));
            }
        }
        for _ in 0..pow {
            modes.push((g, n));
        }
        c.eat('*');
    }
    Ok((coeff, modes))
}

/// Parses a vector in the text format described in the module documentation.
pub fn parse_vector(text: &str) -> Result<ModuleVector> {
    let cleaned: String = text.lines().map(|l| l.split('#').next().unwrap()).collect::<Vec<_>>().join(" ");
    let pos = cleaned.find('|').ok_or_else(|| err("missing ket |...>"))?;
    let module = parse_ket(&cleaned[pos..])?;
    let sum = cleaned[..pos].trim();
    let mut c = Cursor { s: sum.as_bytes(), i: 0 };
    let mut terms = Vec::new();
    let mut sign = Rat::one();
    if c.eat('-') {
        sign = Rat::int(-1);
    } else {
        c.eat('+');
    }
    loop {
        let (coeff, modes) = parse_term(&mut c)?;
        terms.push((&coeff * &sign, modes));
        if c.eat('+') {
            sign = Rat::one();
        } else if c.eat('-') {
            sign = Rat::int(-1);
        } else {
            break;
        }
    }
    if c.peek().is_some() {
        return Err(err(format!("unexpected input at {:?}", &sum[c.i..])));
    }
    Ok(ModuleVector { module, terms })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn parses_singular_vector() {
        let v = parse_vector("2/9*e[-2] - (1/3)*e[-1]h[-1] + e[-1]^2 f[0] |hw: level=-4/3, j=-2/3>").unwrap();
        assert_eq!(v.module, ModuleData::verma(rat(-4, 3), rat(-2, 3)));
        assert_eq!(v.terms.len(), 3);
        assert_eq!(v.terms[1].0, rat(-1, 3));
        assert_eq!(v.terms[2].1, vec![(Gen::E, -1), (Gen::E, -1), (Gen::F, 0)]);
    }

    #[test]
    fn round_trips_display() {
        let v = parse_vector("h(-1)^3 + 18 h(-2)h(-1) |vac: level=-4/3>").unwrap();
        let e = v.element();
        let again = parse_vector(&format!("{e} |vac: level=-4/3>")).unwrap();
        assert_eq!(again.element(), e);
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_vector("e[-1] |hw: level=1>").is_err());
        assert!(parse_vector("x[-1] |vac: level=1>").is_err());
        assert!(parse_vector("e[-1]").is_err());
    }
}
