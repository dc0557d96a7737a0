//! Words over a signed alphabet and free reduction.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

/// A signed generator: `code = 2 * generator + (1 if inverse)`.
///
/// The derived ordering is the shortlex letter order `a < A < b < B < ...`,
/// i.e. generator declaration order with each inverse immediately after its
/// generator.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(u16);

impl Letter {
    pub fn new(generator: usize, inverse: bool) -> Letter {
        Letter((generator as u16) << 1 | inverse as u16)
    }

    pub fn from_code(code: usize) -> Letter {
        Letter(code as u16)
    }

    pub fn generator(self) -> usize {
        (self.0 >> 1) as usize
    }

    pub fn is_inverse(self) -> bool {
        self.0 & 1 == 1
    }

    pub fn inverse(self) -> Letter {
        Letter(self.0 ^ 1)
    }

    pub fn code(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = (b'a' + self.generator() as u8) as char;
        if self.is_inverse() {
            write!(f, "{}", base.to_ascii_uppercase())
        } else {
            write!(f, "{}", base)
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("generator index {index} is out of range for rank {rank}")]
    InvalidGenerator { index: usize, rank: usize },
    #[error("symbol '{0}' is not in the alphabet")]
    UnknownSymbol(char),
}

/// A finite sequence of signed generators. The empty word is the identity.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Word {
        Word(letters)
    }

    pub fn letter(l: Letter) -> Word {
        Word(vec![l])
    }

    /// Builds a word from signed 1-based indices: `2` is the second
    /// generator, `-1` the inverse of the first.
    pub fn from_signed(indices: &[i32]) -> Word {
        Word(
            indices
                .iter()
                .map(|&i| {
                    assert!(i != 0, "signed generator index must be nonzero");
                    Letter::new(i.unsigned_abs() as usize - 1, i < 0)
                })
                .collect(),
        )
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, l: Letter) {
        self.0.push(l);
    }

    /// Appends a letter, cancelling it against the last letter if possible.
    pub fn push_reduced(&mut self, l: Letter) {
        if self.0.last() == Some(&l.inverse()) {
            self.0.pop();
        } else {
            self.0.push(l);
        }
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Largest generator index used, plus one.
    pub fn max_generator(&self) -> usize {
        self.0.iter().map(|l| l.generator() + 1).max().unwrap_or(0)
    }

    pub fn check_rank(&self, rank: usize) -> Result<(), WordError> {
        match self.0.iter().find(|l| l.generator() >= rank) {
            Some(l) => Err(WordError::InvalidGenerator {
                index: l.generator(),
                rank,
            }),
            None => Ok(()),
        }
    }

    pub fn is_reduced(&self) -> bool {
        self.0.windows(2).all(|w| w[0] != w[1].inverse())
    }

    /// The unique freely reduced word equal to `self` in the free group.
    pub fn reduced(&self) -> Word {
        let mut out = Word(Vec::with_capacity(self.len()));
        for &l in &self.0 {
            out.push_reduced(l);
        }
        out
    }

    /// Free product `self * other`, reduced, assuming both factors are reduced.
    pub fn mul_reduced(&self, other: &Word) -> Word {
        let mut out = self.clone();
        for &l in &other.0 {
            out.push_reduced(l);
        }
        out
    }

    pub fn pow_reduced(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::empty();
        for _ in 0..n.unsigned_abs() {
            out = out.mul_reduced(&base);
        }
        out
    }

    /// Splits a reduced word as `u * core * u^-1` with `core` cyclically reduced.
    pub fn cyclic_decomposition(&self) -> (Word, Word) {
        let w = &self.0;
        let mut i = 0;
        while 2 * i + 2 <= w.len() && w[i] == w[w.len() - 1 - i].inverse() {
            i += 1;
        }
        (Word(w[..i].to_vec()), Word(w[i..w.len() - i].to_vec()))
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        self.is_reduced()
            && (self.len() < 2 || self.0[0] != self.0[self.len() - 1].inverse())
    }

    /// Shortlex comparison: shorter words first, then lexicographic by letter.
    pub fn shortlex_cmp(&self, other: &Word) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "ε");
        }
        for l in &self.0 {
            write!(f, "{:?}", l)?;
        }
        Ok(())
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Word {
        Word(v)
    }
}

/// Checked free reduction for words over a free group of the given rank.
pub fn free_reduce(w: &Word, rank: usize) -> Result<Word, WordError> {
    w.check_rank(rank)?;
    Ok(w.reduced())
}

/// Generator names; lowercase is the generator, uppercase its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<char>,
}

impl Alphabet {
    pub fn new(names: Vec<char>) -> Alphabet {
        Alphabet { names }
    }

    /// `a, b, c, ...` for the given rank.
    pub fn standard(rank: usize) -> Alphabet {
        Alphabet {
            names: (0..rank).map(|i| (b'a' + i as u8) as char).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[char] {
        &self.names
    }

    pub fn index_of(&self, c: char) -> Option<usize> {
        self.names.iter().position(|&n| n == c)
    }

    pub fn parse(&self, s: &str) -> Result<Word, WordError> {
        let mut out = Vec::with_capacity(s.len());
        for c in s.chars() {
            if c == 'e' && self.index_of('e').is_none() && s.len() == 1 {
                return Ok(Word::empty());
            }
            let lower = c.to_ascii_lowercase();
            let gen = self.index_of(lower).ok_or(WordError::UnknownSymbol(c))?;
            out.push(Letter::new(gen, c.is_ascii_uppercase()));
        }
        Ok(Word(out))
    }

    /// Uppercase marks inverses; the identity prints as `e` unless `e`
    /// names a generator.
    pub fn format(&self, w: &Word) -> String {
        if w.is_empty() && self.index_of('e').is_none() {
            return "e".into();
        }
        w.letters()
            .iter()
            .map(|l| {
                let c = self.names[l.generator()];
                if l.is_inverse() {
                    c.to_ascii_uppercase()
                } else {
                    c
                }
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Alphabet::standard(3).parse(s).unwrap()
    }

    #[test]
    fn free_reduce_examples() {
        assert_eq!(free_reduce(&w("aA"), 2).unwrap(), Word::empty());
        assert_eq!(free_reduce(&w("abBa"), 2).unwrap(), w("aa"));
        assert_eq!(free_reduce(&w("bAaBb"), 2).unwrap(), w("b"));
    }

    #[test]
    fn free_reduce_rejects_bad_index() {
        assert_eq!(
            free_reduce(&w("ac"), 2),
            Err(WordError::InvalidGenerator { index: 2, rank: 2 })
        );
    }

    #[test]
    fn letter_order_is_shortlex_declaration_order() {
        let a = Letter::new(0, false);
        let inv_a = Letter::new(0, true);
        let b = Letter::new(1, false);
        assert!(a < inv_a && inv_a < b);
        assert_eq!(w("ba").shortlex_cmp(&w("ab")), Ordering::Greater);
        assert_eq!(w("b").shortlex_cmp(&w("aa")), Ordering::Less);
    }

    #[test]
    fn cyclic_decomposition_of_conjugate() {
        let (u, core) = w("baaB").cyclic_decomposition();
        assert_eq!(u, w("b"));
        assert_eq!(core, w("aa"));
        let (u, core) = w("aBA").cyclic_decomposition();
        assert_eq!(u, w("a"));
        assert_eq!(core, w("B"));
    }

    #[test]
    fn parse_and_format_round_trip() {
        let alpha = Alphabet::new(vec!['a', 'b', 't']);
        let word = alpha.parse("aTbB").unwrap();
        assert_eq!(alpha.format(&word), "aTbB");
        assert_eq!(alpha.parse("c"), Err(WordError::UnknownSymbol('c')));
        assert_eq!(alpha.parse("e").unwrap(), Word::empty());
    }
}
