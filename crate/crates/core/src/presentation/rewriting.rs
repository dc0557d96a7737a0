//! Shortlex string rewriting with implicit free cancellation.

use std::cmp::Ordering;

use serde::Serialize;

use super::word::{Alphabet, Letter, Word};
use crate::error::{Error, Result};

const NONE: u32 = u32::MAX;

/// A rule set together with a trie over the reversed left sides, so that a
/// stack-based reducer can test every suffix of its stack in one walk.
#[derive(Clone, Debug)]
pub struct RewriteSystem {
    alphabet_size: usize,
    rules: Vec<(Word, Word)>,
    children: Vec<u32>,
    terminal: Vec<u32>,
}

impl RewriteSystem {
    /// Rules must strictly decrease in shortlex order.
    pub fn new(rank: usize, rules: Vec<(Word, Word)>, alphabet: &Alphabet) -> Result<RewriteSystem> {
        for (l, r) in &rules {
            l.check_rank(rank)?;
            r.check_rank(rank)?;
            if l.shortlex_cmp(r) != Ordering::Greater || l.is_empty() {
                return Err(Error::NotDecreasing {
                    lhs: alphabet.format(l),
                    rhs: alphabet.format(r),
                });
            }
        }
        let alphabet_size = 2 * rank;
        let mut sys = RewriteSystem {
            alphabet_size,
            rules,
            children: vec![NONE; alphabet_size],
            terminal: vec![NONE],
        };
        for i in 0..sys.rules.len() {
            let lhs: Vec<Letter> = sys.rules[i].0.letters().to_vec();
            let mut node = 0usize;
            for l in lhs.iter().rev() {
                let slot = node * alphabet_size + l.code();
                if sys.children[slot] == NONE {
                    sys.children[slot] = sys.terminal.len() as u32;
                    sys.terminal.push(NONE);
                    sys.children.extend(std::iter::repeat_n(NONE, alphabet_size));
                }
                node = sys.children[slot] as usize;
            }
            if sys.terminal[node] == NONE {
                sys.terminal[node] = i as u32;
            }
        }
        Ok(sys)
    }

    pub fn rules(&self) -> &[(Word, Word)] {
        &self.rules
    }

    pub fn max_lhs(&self) -> usize {
        self.rules.iter().map(|r| r.0.len()).max().unwrap_or(0).max(2)
    }

    /// Shortest rule whose left side is a suffix of `stack`.
    fn match_suffix(&self, stack: &[Letter]) -> Option<usize> {
        let mut node = 0usize;
        for l in stack.iter().rev() {
            let next = self.children[node * self.alphabet_size + l.code()];
            if next == NONE {
                return None;
            }
            node = next as usize;
            if self.terminal[node] != NONE {
                return Some(self.terminal[node] as usize);
            }
        }
        None
    }

    /// Reduces `pending` (read left to right) onto an irreducible `stack`.
    fn reduce_onto(&self, stack: &mut Vec<Letter>, pending: &[Letter]) {
        let mut input: Vec<Letter> = pending.iter().rev().copied().collect();
        while let Some(x) = input.pop() {
            if stack.last() == Some(&x.inverse()) {
                stack.pop();
                continue;
            }
            stack.push(x);
            if let Some(i) = self.match_suffix(stack) {
                let (lhs, rhs) = &self.rules[i];
                stack.truncate(stack.len() - lhs.len());
                input.extend(rhs.letters().iter().rev());
            }
        }
    }

    pub fn reduce(&self, w: &Word) -> Word {
        let mut stack = Vec::with_capacity(w.len());
        self.reduce_onto(&mut stack, w.letters());
        Word::from_letters(stack)
    }

    /// `reduce(nf · x)` for an already irreducible `nf`.
    pub fn reduce_append(&self, nf: &Word, x: Letter) -> Word {
        let mut stack = nf.letters().to_vec();
        self.reduce_onto(&mut stack, &[x]);
        Word::from_letters(stack)
    }

    /// Explicit rule list with the cancellation rules `x X -> ε` prepended.
    fn with_cancellation(&self) -> Vec<(Word, Word)> {
        let mut all: Vec<(Word, Word)> = (0..self.alphabet_size)
            .map(|c| {
                let x = Letter::from_code(c);
                (Word::from_letters(vec![x, x.inverse()]), Word::empty())
            })
            .collect();
        all.extend(self.rules.iter().cloned());
        all
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriticalPair {
    pub overlap: String,
    pub left: String,
    pub right: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConfluenceReport {
    pub length_bound: usize,
    pub rule_count: usize,
    pub critical_pairs_checked: usize,
    pub non_joinable: Vec<CriticalPair>,
    /// True when the bound covers every possible overlap, so local
    /// confluence (and with termination, confluence) is fully decided.
    pub complete: bool,
}

impl ConfluenceReport {
    pub fn is_confluent(&self) -> bool {
        self.non_joinable.is_empty()
    }
}

/// Enumerates critical pairs with overlap words of length at most
/// `length_bound` and checks each for joinability.
pub fn check_confluence(sys: &RewriteSystem, alphabet: &Alphabet, length_bound: usize) -> ConfluenceReport {
    let rules = sys.with_cancellation();
    let n = sys.alphabet_size;

    // forward trie over left sides, each node listing the rules below it
    let mut children = vec![NONE; n];
    let mut below: Vec<Vec<u32>> = vec![Vec::new()];
    let mut ends: Vec<Vec<u32>> = vec![Vec::new()];
    for (i, (l, _)) in rules.iter().enumerate() {
        let mut node = 0usize;
        below[0].push(i as u32);
        for x in l.letters() {
            let slot = node * n + x.code();
            if children[slot] == NONE {
                children[slot] = below.len() as u32;
                below.push(Vec::new());
                ends.push(Vec::new());
                children.extend(std::iter::repeat_n(NONE, n));
            }
            node = children[slot] as usize;
            below[node].push(i as u32);
        }
        ends[node].push(i as u32);
    }

    let mut checked = 0usize;
    let mut bad = Vec::new();
    let mut check = |overlap: Vec<Letter>, left: Word, right: Word| {
        checked += 1;
        let l = sys.reduce(&left);
        let r = sys.reduce(&right);
        if l != r {
            bad.push(CriticalPair {
                overlap: alphabet.format(&Word::from_letters(overlap)),
                left: alphabet.format(&l),
                right: alphabet.format(&r),
            });
        }
    };

    for (i, (l1, r1)) in rules.iter().enumerate() {
        let a = l1.letters();
        if a.len() > length_bound {
            continue;
        }
        for p in 0..a.len() {
            let mut node = 0usize;
            let mut alive = true;
            for (q, x) in a[p..].iter().enumerate() {
                let next = children[node * n + x.code()];
                if next == NONE {
                    alive = false;
                    break;
                }
                node = next as usize;
                // a rule contained in l1 at position p
                for &j in &ends[node] {
                    if j as usize == i {
                        continue;
                    }
                    let r2 = &rules[j as usize].1;
                    let mut right = a[..p].to_vec();
                    right.extend_from_slice(r2.letters());
                    right.extend_from_slice(&a[p + q + 1..]);
                    check(a.to_vec(), r1.clone(), Word::from_letters(right));
                }
            }
            if !alive || p == 0 {
                continue;
            }
            // rules whose prefix is the suffix a[p..] and which extend past l1
            let k = a.len() - p;
            for &j in &below[node] {
                let (l2, r2) = &rules[j as usize];
                if l2.len() <= k || a.len() + l2.len() - k > length_bound {
                    continue;
                }
                let mut overlap = a.to_vec();
                overlap.extend_from_slice(&l2.letters()[k..]);
                let mut left = r1.letters().to_vec();
                left.extend_from_slice(&l2.letters()[k..]);
                let mut right = a[..p].to_vec();
                right.extend_from_slice(r2.letters());
                check(overlap, Word::from_letters(left), Word::from_letters(right));
            }
        }
    }

    ConfluenceReport {
        length_bound,
        rule_count: sys.rules.len(),
        critical_pairs_checked: checked,
        complete: length_bound + 1 >= 2 * sys.max_lhs(),
        non_joinable: bad,
    }
}
