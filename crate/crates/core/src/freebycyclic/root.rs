use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::presentation::{Letter, Word};

/// `w = root^exponent`, with `root = conjugator · core · conjugator⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDecomposition {
    pub root: Word,
    pub exponent: usize,
    pub conjugator: Word,
    /// Cyclically reduced and not a proper power.
    pub core: Word,
}

fn rotate(w: &[Letter], i: usize) -> Vec<Letter> {
    let mut out = w[i..].to_vec();
    out.extend_from_slice(&w[..i]);
    out
}

/// Smallest `p` with `w` invariant under rotation by `p`.
fn period(w: &[Letter]) -> usize {
    (1..=w.len())
        .find(|&p| w.len().is_multiple_of(p) && rotate(w, p) == w)
        .unwrap_or(w.len())
}

/// The primitive root of a nontrivial element of a free group.
pub fn free_root(w: &Word) -> Result<RootDecomposition> {
    let w = w.reduced();
    if w.is_empty() {
        return Err(Error::Trivial("the identity has no root".into()));
    }
    let (u, v) = w.cyclic_decomposition();
    let p = period(v.letters());
    let core = Word::from_letters(v.letters()[..p].to_vec());
    Ok(RootDecomposition {
        root: u.concat(&core).concat(&u.inverse()),
        exponent: v.len() / p,
        conjugator: u,
        core,
    })
}

/// Outcome of the exhaustive root-uniqueness search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UniqueRootReport {
    pub rank: usize,
    pub length_bound: usize,
    pub exponents: Vec<u32>,
    pub words: usize,
    pub pairs_checked: usize,
    /// `(u, v, k)` with `u ≠ v` but `u^k = v^k`, as signed-index words.
    pub counterexamples: Vec<(Vec<i32>, Vec<i32>, u32)>,
}

/// All reduced words of length at most `n` in the free group of rank `rank`.
pub fn reduced_words(rank: usize, n: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut level = vec![Word::empty()];
    for _ in 0..n {
        let mut next = Vec::new();
        for w in &level {
            for c in 0..2 * rank {
                let x = Letter::from_code(c);
                if w.letters().last() != Some(&x.inverse()) {
                    let mut u = w.clone();
                    u.push(x);
                    next.push(u);
                }
            }
        }
        out.extend(next.iter().cloned());
        level = next;
    }
    out
}

fn signed(w: &Word) -> Vec<i32> {
    w.letters()
        .iter()
        .map(|l| {
            let g = l.generator() as i32 + 1;
            if l.is_inverse() {
                -g
            } else {
                g
            }
        })
        .collect()
}

/// Checks `u^k = v^k ⇒ u = v` over every pair of reduced words of length
/// at most `length_bound` and every `k` in `exponents`.
pub fn unique_root_check(rank: usize, length_bound: usize, exponents: &[u32]) -> UniqueRootReport {
    let words = reduced_words(rank, length_bound);
    let mut counterexamples = Vec::new();
    for &k in exponents {
        // Bucketing by k-th power finds every colliding pair.
        let mut seen: HashMap<Word, usize> = HashMap::new();
        for (i, w) in words.iter().enumerate() {
            if let Some(&j) = seen.get(&w.pow_reduced(k as i64)) {
                counterexamples.push((signed(&words[j]), signed(w), k));
            } else {
                seen.insert(w.pow_reduced(k as i64), i);
            }
        }
    }
    UniqueRootReport {
        rank,
        length_bound,
        exponents: exponents.to_vec(),
        words: words.len(),
        pairs_checked: words.len() * words.len() * exponents.len(),
        counterexamples,
    }
}
