use serde::Serialize;

use super::rewriting::{check_confluence, ConfluenceReport, RewriteSystem};
use super::semidirect::Semidirect;
use super::spec::{Family, GroupSpec};
use super::word::{Letter, Word};
use crate::error::{Error, Result};

/// How far the normal forms can be trusted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "length", rename_all = "snake_case")]
pub enum Certificate {
    /// Canonical for every word.
    Exact,
    /// Canonical for words up to this length.
    Bounded(usize),
}

impl Certificate {
    pub fn covers(&self, len: usize) -> bool {
        match *self {
            Certificate::Exact => true,
            Certificate::Bounded(b) => len <= b,
        }
    }
}

#[derive(Clone, Debug)]
enum Engine {
    Free,
    Abelian,
    Rewriting(RewriteSystem),
    FreeByCyclic(Semidirect),
}

/// Canonical forms for a [`GroupSpec`]. Immutable and shareable.
#[derive(Clone, Debug)]
pub struct NormalFormOracle {
    spec: GroupSpec,
    engine: Engine,
    certificate: Certificate,
}

/// Checks a rewriting spec's rules and critical pairs up to `length_bound`.
pub fn validate_rewriting(spec: &GroupSpec, length_bound: usize) -> Result<ConfluenceReport> {
    let Family::Rewriting { rules, .. } = &spec.family else {
        return Err(Error::Precondition("validate_rewriting needs a rewriting spec".into()));
    };
    let sys = RewriteSystem::new(spec.rank, rules.clone(), &spec.alphabet)?;
    Ok(check_confluence(&sys, &spec.alphabet, length_bound))
}

impl NormalFormOracle {
    /// Builds the oracle. Rewriting systems are checked for confluence up
    /// to their declared bound and rejected if any pair fails to join.
    pub fn new(spec: GroupSpec) -> Result<NormalFormOracle> {
        let (engine, certificate) = match &spec.family {
            Family::Free => (Engine::Free, Certificate::Exact),
            Family::FreeAbelian => (Engine::Abelian, Certificate::Exact),
            Family::FreeByCyclic { automorphism } => (
                Engine::FreeByCyclic(Semidirect::new(automorphism)?),
                Certificate::Exact,
            ),
            Family::Rewriting {
                rules,
                confluence_bound,
            } => {
                let sys = RewriteSystem::new(spec.rank, rules.clone(), &spec.alphabet)?;
                let bound = confluence_bound.unwrap_or(2 * sys.max_lhs() - 1);
                let report = check_confluence(&sys, &spec.alphabet, bound);
                if let Some(p) = report.non_joinable.first() {
                    return Err(Error::NotConfluent {
                        overlap: p.overlap.clone(),
                        left: p.left.clone(),
                        right: p.right.clone(),
                    });
                }
                let cert = if report.complete {
                    Certificate::Exact
                } else {
                    Certificate::Bounded(bound)
                };
                (Engine::Rewriting(sys), cert)
            }
        };
        Ok(NormalFormOracle {
            spec,
            engine,
            certificate,
        })
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn certificate(&self) -> Certificate {
        self.certificate
    }

    pub fn generator_count(&self) -> usize {
        self.spec.generator_count()
    }

    pub fn semidirect(&self) -> Option<&Semidirect> {
        match &self.engine {
            Engine::FreeByCyclic(s) => Some(s),
            _ => None,
        }
    }

    /// Canonical representative; checks the alphabet first.
    pub fn normal_form(&self, w: &Word) -> Result<Word> {
        w.check_rank(self.generator_count())?;
        Ok(self.canonicalize(w))
    }

    pub fn canonicalize(&self, w: &Word) -> Word {
        match &self.engine {
            Engine::Free => w.reduced(),
            Engine::Abelian => abelian_word(&self.exponents(w)),
            Engine::Rewriting(sys) => sys.reduce(w),
            Engine::FreeByCyclic(s) => s.to_word(&s.from_word(w)),
        }
    }

    /// `canonicalize(nf · x)` for a word `nf` already in normal form.
    pub fn mul_letter(&self, nf: &Word, x: Letter) -> Word {
        match &self.engine {
            Engine::Free => {
                let mut out = nf.clone();
                out.push_reduced(x);
                out
            }
            Engine::Abelian => {
                let mut e = self.exponents(nf);
                e[x.generator()] += if x.is_inverse() { -1 } else { 1 };
                abelian_word(&e)
            }
            Engine::Rewriting(sys) => sys.reduce_append(nf, x),
            Engine::FreeByCyclic(s) => s.to_word(&s.mul_letter(&s.parse_normal_form(nf), x)),
        }
    }

    pub fn multiply(&self, u: &Word, v: &Word) -> Word {
        self.canonicalize(&u.concat(v))
    }

    pub fn inverse(&self, u: &Word) -> Word {
        self.canonicalize(&u.inverse())
    }

    pub fn power(&self, u: &Word, n: i64) -> Word {
        let base = if n < 0 { u.inverse() } else { u.clone() };
        let mut acc = Word::empty();
        for _ in 0..n.unsigned_abs() {
            acc = self.multiply(&acc, &base);
        }
        acc
    }

    pub fn is_identity(&self, w: &Word) -> bool {
        self.canonicalize(w).is_empty()
    }

    fn exponents(&self, w: &Word) -> Vec<i64> {
        let mut e = vec![0i64; self.generator_count()];
        for l in w.letters() {
            e[l.generator()] += if l.is_inverse() { -1 } else { 1 };
        }
        e
    }
}

fn abelian_word(e: &[i64]) -> Word {
    let mut out = Vec::new();
    for (i, &k) in e.iter().enumerate() {
        let l = Letter::new(i, k < 0);
        out.extend(std::iter::repeat_n(l, k.unsigned_abs() as usize));
    }
    Word::from_letters(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::Alphabet;

    fn bs_small() -> GroupSpec {
        let alpha = Alphabet::new(vec!['a', 't']);
        let p = |s: &str| alpha.parse(s).unwrap();
        // length-4 truncation of the complete system for <a, t | t a T = a a>
        let rules = [
            ("aat", "ta"), ("atA", "At"), ("aTA", "Ta"),
            ("AAt", "tA"), ("Ata", "at"), ("ATa", "TA"),
            ("taT", "aa"), ("tAT", "AA"), ("Taa", "aT"),
            ("TAA", "AT"), ("AtAt", "attA"), ("Atta", "atat"),
            ("taaT", "aaaa"), ("tAAT", "AAAA"), ("Tata", "aTat"),
            ("TaTa", "aTTA"), ("TAtA", "ATAt"), ("TATA", "ATTa"),
        ]
        .iter()
        .map(|(l, r)| (p(l), p(r)))
        .collect();
        GroupSpec::rewriting(alpha, rules, Some(4))
    }

    #[test]
    fn z2_orders_letters() {
        let oracle = NormalFormOracle::new(GroupSpec::free_abelian(2)).unwrap();
        let spec = oracle.spec().clone();
        let nf = oracle.normal_form(&spec.parse_word("ba").unwrap()).unwrap();
        assert_eq!(spec.format_word(&nf), "ab");
        let nf = oracle.normal_form(&spec.parse_word("BAbaB").unwrap()).unwrap();
        assert_eq!(spec.format_word(&nf), "B");
    }

    #[test]
    fn free_is_identity_on_reduced_words() {
        let oracle = NormalFormOracle::new(GroupSpec::free(2)).unwrap();
        let w = oracle.spec().parse_word("abAB").unwrap();
        assert_eq!(oracle.normal_form(&w).unwrap(), w);
    }

    #[test]
    fn wrong_alphabet_is_rejected() {
        let oracle = NormalFormOracle::new(GroupSpec::free(2)).unwrap();
        let w = Word::from_signed(&[1, 3]);
        assert!(oracle.normal_form(&w).is_err());
    }

    #[test]
    fn bounded_certificate_for_truncated_system() {
        let oracle = NormalFormOracle::new(bs_small()).unwrap();
        assert_eq!(oracle.certificate(), Certificate::Bounded(4));
        let spec = oracle.spec().clone();
        let nf = oracle.canonicalize(&spec.parse_word("taT").unwrap());
        assert_eq!(spec.format_word(&nf), "aa");
    }

    #[test]
    fn non_confluent_system_is_rejected() {
        let alpha = Alphabet::standard(2);
        let rules = vec![
            (alpha.parse("aa").unwrap(), Word::empty()),
            (alpha.parse("bb").unwrap(), Word::empty()),
        ];
        let err = NormalFormOracle::new(GroupSpec::rewriting(alpha, rules, None)).unwrap_err();
        assert!(matches!(err, Error::NotConfluent { .. }));
    }
}
