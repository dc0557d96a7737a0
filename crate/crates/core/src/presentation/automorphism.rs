use std::collections::BTreeMap;

use super::word::{Alphabet, Letter, Word, WordError};
use crate::error::{Error, Result};

/// Default length bound for the inverse-image search.
pub const INVERSE_SEARCH_BOUND: usize = 8;

/// An endomorphism of the free group of rank `rank`, given by the reduced
/// images of the generators. `inverse` holds the images of an inverse map
/// once one has been found; without it the map is only an endomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeAutomorphism {
    rank: usize,
    images: Vec<Word>,
    inverse: Option<Vec<Word>>,
}

impl FreeAutomorphism {
    pub fn new(rank: usize, images: Vec<Word>) -> Result<FreeAutomorphism> {
        if rank == 0 {
            return Err(Error::Spec("rank must be at least 1".into()));
        }
        if images.len() != rank {
            return Err(Error::Spec(format!(
                "expected {} generator images, got {}",
                rank,
                images.len()
            )));
        }
        for w in &images {
            w.check_rank(rank)?;
        }
        Ok(FreeAutomorphism {
            rank,
            images: images.iter().map(Word::reduced).collect(),
            inverse: None,
        })
    }

    pub fn identity(rank: usize) -> FreeAutomorphism {
        let images = (0..rank).map(|i| Word::letter(Letter::new(i, false))).collect();
        FreeAutomorphism {
            rank,
            inverse: Some(Vec::clone(&images)),
            images,
        }
    }

    /// Conjugation `x -> c x c^-1`.
    pub fn conjugation(rank: usize, c: &Word) -> Result<FreeAutomorphism> {
        let c = c.reduced();
        c.check_rank(rank)?;
        let ci = c.inverse();
        let images = (0..rank)
            .map(|i| c.mul_reduced(&Word::letter(Letter::new(i, false))).mul_reduced(&ci))
            .collect();
        let inv = (0..rank)
            .map(|i| ci.mul_reduced(&Word::letter(Letter::new(i, false))).mul_reduced(&c))
            .collect();
        Ok(FreeAutomorphism {
            rank,
            images,
            inverse: Some(inv),
        })
    }

    /// Parses `{"a": "ab", "b": "a"}` style maps over `alphabet`.
    pub fn from_map(alphabet: &Alphabet, map: &BTreeMap<String, String>) -> Result<FreeAutomorphism> {
        let rank = alphabet.rank();
        let mut images = vec![None; rank];
        for (k, v) in map {
            let mut chars = k.chars();
            let (Some(c), None) = (chars.next(), chars.next()) else {
                return Err(Error::Spec(format!("automorphism key '{}' is not a generator", k)));
            };
            let i = alphabet.index_of(c).ok_or(WordError::UnknownSymbol(c))?;
            images[i] = Some(alphabet.parse(v)?);
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(i, w)| {
                w.ok_or_else(|| {
                    Error::Spec(format!("no image given for generator '{}'", alphabet.names()[i]))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        FreeAutomorphism::new(rank, images)
    }

    pub fn to_map(&self, alphabet: &Alphabet) -> BTreeMap<String, String> {
        self.images
            .iter()
            .enumerate()
            .map(|(i, w)| (alphabet.names()[i].to_string(), alphabet.format(w)))
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn inverse_images(&self) -> Option<&[Word]> {
        self.inverse.as_deref()
    }

    pub fn is_invertible(&self) -> bool {
        self.inverse.is_some()
    }

    pub fn image_of(&self, l: Letter) -> Word {
        let w = &self.images[l.generator()];
        if l.is_inverse() {
            w.inverse()
        } else {
            w.clone()
        }
    }

    /// Free reduction of the letter-by-letter substitution.
    pub fn apply(&self, w: &Word) -> Result<Word> {
        w.check_rank(self.rank)?;
        Ok(self.apply_unchecked(w))
    }

    pub(crate) fn apply_unchecked(&self, w: &Word) -> Word {
        let mut out = Word::empty();
        for &l in w.letters() {
            let img = &self.images[l.generator()];
            if l.is_inverse() {
                for &x in img.letters().iter().rev() {
                    out.push_reduced(x.inverse());
                }
            } else {
                for &x in img.letters() {
                    out.push_reduced(x);
                }
            }
        }
        out
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &FreeAutomorphism) -> FreeAutomorphism {
        assert_eq!(self.rank, other.rank);
        let images = other.images.iter().map(|w| self.apply_unchecked(w)).collect();
        let inverse = match (&self.inverse, &other.inverse) {
            (Some(si), Some(oi)) => {
                let s = FreeAutomorphism { rank: self.rank, images: si.clone(), inverse: None };
                let o = FreeAutomorphism { rank: self.rank, images: oi.clone(), inverse: None };
                Some((0..self.rank).map(|i| o.apply_unchecked(&s.images[i])).collect())
            }
            _ => None,
        };
        FreeAutomorphism {
            rank: self.rank,
            images,
            inverse,
        }
    }

    /// `self^k` for `k >= 0`.
    pub fn power(&self, k: u32) -> FreeAutomorphism {
        let mut acc = FreeAutomorphism::identity(self.rank);
        for _ in 0..k {
            acc = self.compose(&acc);
        }
        acc
    }

    /// The inverse map, if known.
    pub fn inverted(&self) -> Option<FreeAutomorphism> {
        self.inverse.as_ref().map(|inv| FreeAutomorphism {
            rank: self.rank,
            images: inv.clone(),
            inverse: Some(self.images.clone()),
        })
    }

    /// Looks for preimages of every generator among reduced words of length
    /// at most `max_len`. Success proves surjectivity, hence invertibility
    /// (free groups are Hopfian), and records the inverse.
    pub fn with_inverse_search(mut self, max_len: usize) -> FreeAutomorphism {
        if self.inverse.is_some() {
            return self;
        }
        let mut found: Vec<Option<Word>> = vec![None; self.rank];
        let mut remaining = self.rank;
        let mut level = vec![Word::empty()];
        'outer: for _ in 0..max_len {
            let mut next = Vec::with_capacity(level.len() * (2 * self.rank - 1).max(1));
            for w in &level {
                for c in 0..2 * self.rank {
                    let x = Letter::from_code(c);
                    if w.letters().last() == Some(&x.inverse()) {
                        continue;
                    }
                    let mut v = w.clone();
                    v.push(x);
                    let img = self.apply_unchecked(&v);
                    if img.len() == 1 {
                        let y = img.letters()[0];
                        let g = y.generator();
                        if found[g].is_none() {
                            found[g] = Some(if y.is_inverse() { v.inverse() } else { v.clone() });
                            remaining -= 1;
                            if remaining == 0 {
                                break 'outer;
                            }
                        }
                    }
                    next.push(v);
                }
            }
            level = next;
        }
        if remaining == 0 {
            self.inverse = Some(found.into_iter().map(Option::unwrap).collect());
        }
        self
    }
}
