//! Words over the generators γ₁..γ₃, t₁..t₃, t′₁..t′₃.
//!
//! Grammar: `g1`..`g3` (or `gamma1`..), `t1`..`t3`, `tp1`..`tp3`, `1` for the
//! empty word, juxtaposition or `*` for products, `^k` and `^-k` powers, and
//! parentheses.

use std::fmt;

use crate::error::{Error, Result};

pub const GENERATOR_COUNT: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    Gamma(usize),
    T(usize),
    Tp(usize),
}

impl Letter {
    /// Index in `g1 g2 g3 t1 t2 t3 tp1 tp2 tp3` order.
    pub fn index(self) -> usize {
        match self {
            Letter::Gamma(i) => i,
            Letter::T(i) => 3 + i,
            Letter::Tp(i) => 6 + i,
        }
    }

    pub fn from_index(i: usize) -> Option<Letter> {
        match i {
            0..=2 => Some(Letter::Gamma(i)),
            3..=5 => Some(Letter::T(i - 3)),
            6..=8 => Some(Letter::Tp(i - 6)),
            _ => None,
        }
    }

    pub fn all() -> Vec<Letter> {
        (0..GENERATOR_COUNT).filter_map(Letter::from_index).collect()
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Gamma(i) => write!(f, "g{}", i + 1),
            Letter::T(i) => write!(f, "t{}", i + 1),
            Letter::Tp(i) => write!(f, "tp{}", i + 1),
        }
    }
}

/// A freely reduced word, stored as syllables `letter^k` with `k ≠ 0` and no
/// two adjacent syllables on the same letter.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word {
    syllables: Vec<(Letter, i64)>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn letter(l: Letter) -> Self {
        Word {
            syllables: vec![(l, 1)],
        }
    }

    pub fn from_syllables(syllables: impl IntoIterator<Item = (Letter, i64)>) -> Self {
        let mut w = Word::identity();
        for (l, k) in syllables {
            w.push(l, k);
        }
        w
    }

    fn push(&mut self, l: Letter, k: i64) {
        if k == 0 {
            return;
        }
        if let Some(last) = self.syllables.last_mut() {
            if last.0 == l {
                last.1 += k;
                if last.1 == 0 {
                    self.syllables.pop();
                }
                return;
            }
        }
        self.syllables.push((l, k));
    }

    pub fn syllables(&self) -> &[(Letter, i64)] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Letters with multiplicity as `(letter, ±1)`.
    pub fn letters(&self) -> Vec<(Letter, i64)> {
        let mut out = Vec::new();
        for &(l, k) in &self.syllables {
            for _ in 0..k.unsigned_abs() {
                out.push((l, k.signum()));
            }
        }
        out
    }

    pub fn mul(&self, o: &Word) -> Word {
        let mut w = self.clone();
        for &(l, k) in &o.syllables {
            w.push(l, k);
        }
        w
    }

    pub fn inverse(&self) -> Word {
        Word::from_syllables(self.syllables.iter().rev().map(|&(l, k)| (l, -k)))
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut w = Word::identity();
        for _ in 0..k.unsigned_abs() {
            w = w.mul(&base);
        }
        w
    }

    pub fn exponent_sums(&self) -> [i64; GENERATOR_COUNT] {
        let mut out = [0; GENERATOR_COUNT];
        for &(l, k) in &self.syllables {
            out[l.index()] += k;
        }
        out
    }

    pub fn parse(text: &str) -> Result<Word> {
        let mut p = Parser {
            src: text.as_bytes(),
            pos: 0,
        };
        let w = p.product()?;
        p.skip_ws();
        if p.pos < p.src.len() {
            return Err(p.error("unexpected character"));
        }
        Ok(w)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return write!(f, "1");
        }
        for (i, (l, k)) in self.syllables.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if *k == 1 {
                write!(f, "{l}")?;
            } else {
                write!(f, "{l}^{k}")?;
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        Word::parse(s)
    }
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

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn product(&mut self) -> Result<Word> {
        let mut w = Word::identity();
        let mut expect_factor = false;
        let mut seen = false;
        loop {
            match self.peek() {
                Some(b'*') => {
                    if expect_factor || !seen {
                        return Err(self.error("dangling '*'"));
                    }
                    self.pos += 1;
                    expect_factor = true;
                }
                Some(c) if c == b'(' || c.is_ascii_alphanumeric() => {
                    w = w.mul(&self.factor()?);
                    expect_factor = false;
                    seen = true;
                }
                _ => break,
            }
        }
        if expect_factor {
            return Err(self.error("expected a factor after '*'"));
        }
        Ok(w)
    }

    fn factor(&mut self) -> Result<Word> {
        let base = match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.product()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                inner
            }
            _ => self.atom()?,
        };
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let k = self.integer()?;
            return Ok(base.pow(k));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if self.src.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Parse {
                pos: start,
                msg: "expected an integer exponent".into(),
            })
    }

    fn atom(&mut self) -> Result<Word> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("");
        let digits_start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let digits = std::str::from_utf8(&self.src[digits_start..self.pos]).unwrap_or("");
        if name.is_empty() && digits == "1" {
            return Ok(Word::identity());
        }
        let bad = || Error::Parse {
            pos: start,
            msg: format!("unknown generator '{name}{digits}'"),
        };
        let i: usize = digits.parse().map_err(|_| bad())?;
        if !(1..=3).contains(&i) {
            return Err(bad());
        }
        let letter = match name {
            "g" | "gamma" => Letter::Gamma(i - 1),
            "t" => Letter::T(i - 1),
            "tp" => Letter::Tp(i - 1),
            _ => return Err(bad()),
        };
        Ok(Word::letter(letter))
    }
}
