//! Arithmetic in F_n ⋊_α Z with every element written uniquely as f·t^l.
//!
//! Convention: `t f t^-1 = α(f)`, so `f t^l · g t^m = f α^l(g) t^(l+m)`.

use super::automorphism::FreeAutomorphism;
use super::word::{Letter, Word};
use crate::error::{Error, Result};

const CACHE_POWERS: usize = 24;
const CACHE_LETTERS: usize = 1 << 18;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FbcElement {
    pub f: Word,
    pub l: i64,
}

impl FbcElement {
    pub fn identity() -> FbcElement {
        FbcElement { f: Word::empty(), l: 0 }
    }
}

#[derive(Clone, Debug)]
pub struct Semidirect {
    aut: FreeAutomorphism,
    inv: FreeAutomorphism,
    // forward[k][i] = α^(k+1)(x_i), backward[k][i] = α^-(k+1)(x_i)
    forward: Vec<Vec<Word>>,
    backward: Vec<Vec<Word>>,
}

fn power_table(map: &FreeAutomorphism) -> Vec<Vec<Word>> {
    let mut table: Vec<Vec<Word>> = vec![map.images().to_vec()];
    while table.len() < CACHE_POWERS {
        let last = table.last().unwrap();
        if last.iter().map(Word::len).sum::<usize>() > CACHE_LETTERS {
            break;
        }
        let next = last.iter().map(|w| map.apply_unchecked(w)).collect();
        table.push(next);
    }
    table
}

impl Semidirect {
    pub fn new(aut: &FreeAutomorphism) -> Result<Semidirect> {
        let inv = aut.inverted().ok_or_else(|| {
            Error::Spec("free-by-cyclic automorphism has no inverse within the search bound".into())
        })?;
        Ok(Semidirect {
            forward: power_table(aut),
            backward: power_table(&inv),
            aut: aut.clone(),
            inv,
        })
    }

    pub fn rank(&self) -> usize {
        self.aut.rank()
    }

    pub fn automorphism(&self) -> &FreeAutomorphism {
        &self.aut
    }

    /// The stable letter `t` as a letter of the (rank + 1)-letter alphabet.
    pub fn stable_letter(&self) -> Letter {
        Letter::new(self.rank(), false)
    }

    /// α^l applied to a reduced free word.
    pub fn twist(&self, l: i64, w: &Word) -> Word {
        if l == 0 {
            return w.clone();
        }
        let (table, map) = if l > 0 {
            (&self.forward, &self.aut)
        } else {
            (&self.backward, &self.inv)
        };
        let steps = l.unsigned_abs() as usize;
        // Long words cancel heavily between images, so substituting a deep
        // cached power letter by letter would blow up; step through instead.
        if w.len() > 16 {
            let mut out = w.clone();
            for _ in 0..steps {
                out = map.apply_unchecked(&out);
            }
            return out;
        }
        let cached = steps.min(table.len());
        let images = &table[cached - 1];
        let mut out = Word::empty();
        for &x in w.letters() {
            let img = &images[x.generator()];
            if x.is_inverse() {
                for &y in img.letters().iter().rev() {
                    out.push_reduced(y.inverse());
                }
            } else {
                for &y in img.letters() {
                    out.push_reduced(y);
                }
            }
        }
        for _ in cached..steps {
            out = map.apply_unchecked(&out);
        }
        out
    }

    pub fn mul(&self, x: &FbcElement, y: &FbcElement) -> FbcElement {
        FbcElement {
            f: x.f.mul_reduced(&self.twist(x.l, &y.f)),
            l: x.l + y.l,
        }
    }

    pub fn inverse(&self, x: &FbcElement) -> FbcElement {
        // (f t^l)^-1 = t^-l f^-1 = α^-l(f^-1) t^-l
        FbcElement {
            f: self.twist(-x.l, &x.f.inverse()),
            l: -x.l,
        }
    }

    pub fn mul_letter(&self, x: &FbcElement, c: Letter) -> FbcElement {
        if c.generator() == self.rank() {
            let d = if c.is_inverse() { -1 } else { 1 };
            return FbcElement { f: x.f.clone(), l: x.l + d };
        }
        FbcElement {
            f: x.f.mul_reduced(&self.twist(x.l, &Word::letter(c))),
            l: x.l,
        }
    }

    pub fn from_word(&self, w: &Word) -> FbcElement {
        let mut acc = FbcElement::identity();
        for &c in w.letters() {
            acc = self.mul_letter(&acc, c);
        }
        acc
    }

    pub fn to_word(&self, x: &FbcElement) -> Word {
        let mut out = x.f.clone();
        let t = Letter::new(self.rank(), x.l < 0);
        for _ in 0..x.l.unsigned_abs() {
            out.push(t);
        }
        out
    }

    /// Splits a normal-form word into its free part and t-exponent.
    pub fn parse_normal_form(&self, w: &Word) -> FbcElement {
        let n = self.rank();
        let split = w
            .letters()
            .iter()
            .position(|c| c.generator() == n)
            .unwrap_or(w.len());
        let l = w.letters()[split..]
            .iter()
            .map(|c| if c.is_inverse() { -1i64 } else { 1 })
            .sum();
        FbcElement {
            f: Word::from_letters(w.letters()[..split].to_vec()),
            l,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::Alphabet;

    #[test]
    fn relation_t_f_equals_alpha_f_t() {
        let alpha = Alphabet::standard(2);
        let aut = FreeAutomorphism::new(2, vec![alpha.parse("ab").unwrap(), alpha.parse("a").unwrap()])
            .unwrap()
            .with_inverse_search(8);
        let s = Semidirect::new(&aut).unwrap();
        let abt = Alphabet::new(vec!['a', 'b', 't']);
        let lhs = s.from_word(&abt.parse("ta").unwrap());
        let rhs = s.from_word(&abt.parse("abt").unwrap());
        assert_eq!(lhs, rhs);
        let x = s.from_word(&abt.parse("tTbaTTab").unwrap());
        assert_eq!(s.mul(&x, &s.inverse(&x)), FbcElement::identity());
        // deep powers fall back past the cache
        let far = s.twist(27, &alpha.parse("a").unwrap());
        assert_eq!(s.twist(-27, &far), alpha.parse("a").unwrap());
    }
}
