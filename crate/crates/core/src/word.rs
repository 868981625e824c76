// SPDX-License-Identifier: Apache-2.0

//! Freely reduced words in a free group `F_n`.
//!
//! A [`Letter`] is a signed generator index (`e_i` is `+i`, `e_i^-1` is `-i`);
//! a [`Word`] is a sequence of letters that is kept freely reduced by every
//! constructor. Two text syntaxes are accepted when parsing:
//!
//! * form A: `a`..`z` are `e1`..`e26`, `A`..`Z` their inverses, with optional
//!   powers such as `ab^3` or `b^-2`;
//! * form B: whitespace separated nonzero signed integers, e.g. `1 2 2 -1`.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A generator or inverse generator, encoded as a nonzero signed integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "i32", into = "i32")]
pub struct Letter(i32);

impl Letter {
    /// `e_generator` raised to `+1` or `-1`. Panics on a zero index.
    pub fn new(generator: u32, positive: bool) -> Self {
        assert!(generator >= 1, "generator indices start at 1");
        let g = generator as i32;
        Letter(if positive { g } else { -g })
    }

    pub fn gen(generator: u32) -> Self {
        Letter::new(generator, true)
    }

    pub fn from_signed(value: i32) -> Option<Self> {
        (value != 0).then_some(Letter(value))
    }

    pub fn to_signed(self) -> i32 {
        self.0
    }

    /// 1-based generator index.
    pub fn generator(self) -> u32 {
        self.0.unsigned_abs()
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    pub fn inverse(self) -> Self {
        Letter(-self.0)
    }

    pub fn is_inverse_of(self, other: Letter) -> bool {
        self.0 == -other.0
    }

    /// Label used in graph renderings: `e3` or `e3^-1`.
    pub fn label(self) -> String {
        if self.is_positive() {
            format!("e{}", self.generator())
        } else {
            format!("e{}^-1", self.generator())
        }
    }
}

impl TryFrom<i32> for Letter {
    type Error = String;

    fn try_from(value: i32) -> Result<Self, Self::Error> {
        Letter::from_signed(value).ok_or_else(|| "letter 0 is not a generator".to_string())
    }
}

impl From<Letter> for i32 {
    fn from(l: Letter) -> i32 {
        l.0
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// A freely reduced word. Equality, ordering and hashing ignore `rank_hint`.
#[derive(Clone, Debug, Default)]
pub struct Word {
    letters: Vec<Letter>,
    rank_hint: Option<u32>,
}

impl PartialEq for Word {
    fn eq(&self, other: &Self) -> bool {
        self.letters == other.letters
    }
}

impl Eq for Word {}

impl Hash for Word {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.letters.hash(state);
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Shortlex: shorter words first, then lexicographic on signed letters.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.letters.len().cmp(&other.letters.len()).then_with(|| self.letters.cmp(&other.letters))
    }
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn letter(l: Letter) -> Self {
        Word { letters: vec![l], rank_hint: None }
    }

    /// The single-letter word `e_i`.
    pub fn gen(i: u32) -> Self {
        Word::letter(Letter::gen(i))
    }

    /// Freely reduces an arbitrary letter sequence with a single stack pass.
    pub fn reduce<I: IntoIterator<Item = Letter>>(raw: I) -> Self {
        let mut letters: Vec<Letter> = Vec::new();
        for l in raw {
            if letters.last().is_some_and(|&last| last.is_inverse_of(l)) {
                letters.pop();
            } else {
                letters.push(l);
            }
        }
        Word { letters, rank_hint: None }
    }

    /// Builds a word from signed integers. Zero entries are rejected.
    pub fn from_signed(values: &[i32]) -> Result<Self, ParseError> {
        let mut raw = Vec::with_capacity(values.len());
        for (position, &v) in values.iter().enumerate() {
            raw.push(Letter::from_signed(v).ok_or(ParseError { position, kind: ParseErrorKind::ZeroGenerator })?);
        }
        Ok(Word::reduce(raw))
    }

    /// `e_i^k` for any integer exponent.
    pub fn gen_pow(i: u32, k: i32) -> Self {
        let l = Letter::new(i, k >= 0);
        Word::reduce(std::iter::repeat_n(l, k.unsigned_abs() as usize))
    }

    pub fn with_rank_hint(mut self, rank: u32) -> Self {
        self.rank_hint = Some(rank);
        self
    }

    pub fn rank_hint(&self) -> Option<u32> {
        self.rank_hint
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn first(&self) -> Option<Letter> {
        self.letters.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.letters.last().copied()
    }

    /// Largest generator index occurring in the word, 0 for the identity.
    pub fn max_generator(&self) -> u32 {
        self.letters.iter().map(|l| l.generator()).max().unwrap_or(0)
    }

    pub fn is_reduced(&self) -> bool {
        self.letters.windows(2).all(|p| !p[0].is_inverse_of(p[1]))
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        self.is_reduced()
            && match (self.first(), self.last()) {
                (Some(f), Some(l)) => self.len() == 1 || !f.is_inverse_of(l),
                _ => true,
            }
    }

    pub fn mul(&self, other: &Word) -> Word {
        let mut out = Word::reduce(self.letters.iter().chain(&other.letters).copied());
        out.rank_hint = merge_hint(self.rank_hint, other.rank_hint);
        out
    }

    pub fn inverse(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(|l| l.inverse()).collect(), rank_hint: self.rank_hint }
    }

    pub fn pow(&self, k: i32) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..k.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// Product of a sequence of words.
    pub fn product<'a, I: IntoIterator<Item = &'a Word>>(words: I) -> Word {
        Word::reduce(words.into_iter().flat_map(|w| w.letters.iter().copied()))
    }

    /// `g · self · g^-1`.
    pub fn conjugate_by(&self, g: &Word) -> Word {
        Word::product([g, self, &g.inverse()])
    }

    /// Splits the word as `conjugator · core · conjugator^-1` with `core`
    /// cyclically reduced.
    pub fn cyclically_reduce(&self) -> (CyclicWord, Word) {
        let n = self.letters.len();
        let mut k = 0;
        while 2 * k + 1 < n && self.letters[k].is_inverse_of(self.letters[n - 1 - k]) {
            k += 1;
        }
        let core = Word { letters: self.letters[k..n - k].to_vec(), rank_hint: self.rank_hint };
        let conjugator = Word { letters: self.letters[..k].to_vec(), rank_hint: self.rank_hint };
        (CyclicWord { representative: core }, conjugator)
    }

    /// Length of the cyclically reduced core.
    pub fn cyclic_len(&self) -> usize {
        let n = self.letters.len();
        let mut k = 0;
        while 2 * k + 1 < n && self.letters[k].is_inverse_of(self.letters[n - 1 - k]) {
            k += 1;
        }
        n - 2 * k
    }

    pub fn is_conjugate_to(&self, other: &Word) -> bool {
        self.cyclically_reduce().0 == other.cyclically_reduce().0
    }

    /// `[self, other] = self^-1 other^-1 self other`.
    pub fn commutator(&self, other: &Word) -> Word {
        Word::product([&self.inverse(), &other.inverse(), self, other])
    }

    /// Checks every letter against a declared rank.
    pub fn check_rank(&self, rank: u32) -> Result<(), RankError> {
        match self.letters.iter().position(|l| l.generator() > rank) {
            Some(position) => Err(RankError { generator: self.letters[position].generator(), rank, position }),
            None => Ok(()),
        }
    }

    /// Parses and checks every generator index against `rank`.
    pub fn parse_with_rank(text: &str, rank: u32) -> Result<Word, ParseError> {
        let w = parse_word(text, Some(rank))?;
        Ok(w.with_rank_hint(rank))
    }

    /// Form B rendering, valid for any rank.
    pub fn to_numeric(&self) -> String {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_signed().to_string()).collect();
        parts.join(" ")
    }

    /// Form A rendering, `None` if some generator index exceeds 26.
    pub fn to_alpha(&self) -> Option<String> {
        self.letters.iter().map(|&l| alpha_char(l)).collect()
    }
}

fn merge_hint(a: Option<u32>, b: Option<u32>) -> Option<u32> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.max(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

fn alpha_char(l: Letter) -> Option<char> {
    let g = l.generator();
    if g > 26 {
        return None;
    }
    let base = if l.is_positive() { b'a' } else { b'A' };
    Some((base + (g - 1) as u8) as char)
}

/// Canonical form: form A when the rank (hint, or largest index) is at most
/// 26, else form B.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rank = self.rank_hint.unwrap_or(0).max(self.max_generator());
        match self.to_alpha() {
            Some(s) if rank <= 26 => f.write_str(&s),
            _ => f.write_str(&self.to_numeric()),
        }
    }
}

impl FromStr for Word {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_word(s, None)
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A cyclically reduced word standing for its conjugacy class; equality is
/// equality up to rotation.
#[derive(Clone, Debug)]
pub struct CyclicWord {
    representative: Word,
}

impl CyclicWord {
    pub fn representative(&self) -> &Word {
        &self.representative
    }

    pub fn into_word(self) -> Word {
        self.representative
    }

    pub fn len(&self) -> usize {
        self.representative.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representative.is_empty()
    }

    /// All rotations of the representative, starting with itself.
    pub fn rotations(&self) -> impl Iterator<Item = Word> + '_ {
        let letters = &self.representative.letters;
        let n = letters.len().max(1);
        (0..n).map(move |k| {
            let mut v = letters[k.min(letters.len())..].to_vec();
            v.extend_from_slice(&letters[..k.min(letters.len())]);
            Word { letters: v, rank_hint: self.representative.rank_hint }
        })
    }
}

impl PartialEq for CyclicWord {
    fn eq(&self, other: &Self) -> bool {
        let a = &self.representative.letters;
        let b = &other.representative.letters;
        if a.len() != b.len() {
            return false;
        }
        if a.is_empty() {
            return true;
        }
        // a occurs in b·b
        let doubled: Vec<Letter> = b.iter().chain(b.iter()).copied().collect();
        doubled.windows(a.len()).any(|w| w == a.as_slice())
    }
}

impl Eq for CyclicWord {}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.representative.fmt(f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("generator e{generator} at letter {position} exceeds rank {rank}")]
pub struct RankError {
    pub generator: u32,
    pub rank: u32,
    pub position: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at position {position}")]
pub struct ParseError {
    /// Byte offset into the input (or element index for signed-integer input).
    pub position: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected character {0:?}")]
    UnexpectedChar(char),
    #[error("malformed integer {0:?}")]
    BadInteger(String),
    #[error("generator index 0 is not allowed")]
    ZeroGenerator,
    #[error("generator e{generator} exceeds declared rank {rank}")]
    ExceedsRank { generator: u32, rank: u32 },
    #[error("power without a base letter")]
    DanglingPower,
}

fn parse_word(text: &str, rank: Option<u32>) -> Result<Word, ParseError> {
    let numeric = text.trim_start().chars().next().is_some_and(|c| c.is_ascii_digit() || c == '-' || c == '+');
    let raw = if numeric { parse_numeric(text)? } else { parse_alpha(text)? };
    if let Some(rank) = rank {
        for &(position, l) in &raw {
            if l.generator() > rank {
                return Err(ParseError {
                    position,
                    kind: ParseErrorKind::ExceedsRank { generator: l.generator(), rank },
                });
            }
        }
    }
    Ok(Word::reduce(raw.into_iter().map(|(_, l)| l)))
}

fn parse_numeric(text: &str) -> Result<Vec<(usize, Letter)>, ParseError> {
    let mut out = Vec::new();
    let mut offset = 0;
    for token in text.split_whitespace() {
        let position = offset + text[offset..].find(token).unwrap_or(0);
        offset = position + token.len();
        let value: i32 =
            token.parse().map_err(|_| ParseError { position, kind: ParseErrorKind::BadInteger(token.to_string()) })?;
        let l = Letter::from_signed(value).ok_or(ParseError { position, kind: ParseErrorKind::ZeroGenerator })?;
        out.push((position, l));
    }
    Ok(out)
}

fn parse_alpha(text: &str) -> Result<Vec<(usize, Letter)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out: Vec<(usize, Letter)> = Vec::new();
    // start index in `out` of the most recent letter, for powers
    let mut last: Option<(usize, Letter)> = None;
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            c if c.is_whitespace() => i += 1,
            'a'..='z' => {
                let l = Letter::new((bytes[i] - b'a') as u32 + 1, true);
                out.push((i, l));
                last = Some((i, l));
                i += 1;
            }
            'A'..='Z' => {
                let l = Letter::new((bytes[i] - b'A') as u32 + 1, false);
                out.push((i, l));
                last = Some((i, l));
                i += 1;
            }
            '^' => {
                let (pos, base) = last.take().ok_or(ParseError { position: i, kind: ParseErrorKind::DanglingPower })?;
                let start = i + 1;
                let mut end = start;
                if end < bytes.len() && (bytes[end] == b'-' || bytes[end] == b'+') {
                    end += 1;
                }
                while end < bytes.len() && bytes[end].is_ascii_digit() {
                    end += 1;
                }
                let token = &text[start..end];
                let k: i64 = token
                    .parse()
                    .map_err(|_| ParseError { position: start, kind: ParseErrorKind::BadInteger(token.to_string()) })?;
                // replace the single base letter by base^k
                out.pop();
                let l = if k < 0 { base.inverse() } else { base };
                out.extend(std::iter::repeat_n((pos, l), k.unsigned_abs() as usize));
                i = end;
            }
            other => return Err(ParseError { position: i, kind: ParseErrorKind::UnexpectedChar(other) }),
        }
    }
    Ok(out)
}
