use rayon::prelude::*;
use serde::Serialize;

use super::conjugacy::conjugator_solve;
use crate::error::{Error, Result};
use crate::presentation::{Alphabet, FreeAutomorphism, Letter, Word};

/// What the search established about a single power `α^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KStatus {
    /// `α^k(x) = m x m⁻¹` for every generator.
    Inner { m: Word },
    /// `α^k(generator)` is not conjugate to the generator.
    NotConjugate { generator: usize },
    /// Every candidate `m0 · root^n` with `|n| <= bound` fails on `generator`.
    ExponentExhausted { bound: usize, generator: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KCertificate {
    pub k: u32,
    pub status: KStatus,
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificateReport {
    pub k: u32,
    pub status: &'static str,
    pub m: Option<String>,
    pub generator: Option<String>,
    pub exponent_bound: Option<usize>,
}

impl KCertificate {
    pub fn report(&self, alphabet: &Alphabet) -> CertificateReport {
        let name = |g: usize| Some(alphabet.names()[g].to_string());
        let (status, m, generator, exponent_bound) = match &self.status {
            KStatus::Inner { m } => ("inner", Some(alphabet.format(m)), None, None),
            KStatus::NotConjugate { generator } => ("not_conjugate", None, name(*generator), None),
            KStatus::ExponentExhausted { bound, generator } => {
                ("exponent_exhausted", None, name(*generator), Some(*bound))
            }
        };
        CertificateReport {
            k: self.k,
            status,
            m,
            generator,
            exponent_bound,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InnerPower {
    pub k_max: u32,
    /// Smallest `k` with `α^k` inner, and its witness.
    pub found: Option<(u32, Word)>,
    /// One certificate per `k` in `1..=k_max`.
    pub certificates: Vec<KCertificate>,
}

fn generator(i: usize) -> Word {
    Word::letter(Letter::new(i, false))
}

/// `n` in the order 0, 1, -1, 2, -2, ...
fn exponents(bound: usize) -> impl Iterator<Item = i64> {
    (0..=bound as i64).flat_map(|n| if n == 0 { vec![0] } else { vec![n, -n] })
}

/// Decides whether `beta` is inner, exactly.
pub fn inner_witness(beta: &FreeAutomorphism) -> KStatus {
    let rank = beta.rank();
    let images = beta.images();
    let conj = match conjugator_solve(&generator(0), &images[0]) {
        Ok(Some(c)) => c,
        _ => return KStatus::NotConjugate { generator: 0 },
    };
    for i in 1..rank {
        if matches!(conjugator_solve(&generator(i), &images[i]), Ok(None) | Err(_)) {
            return KStatus::NotConjugate { generator: i };
        }
    }
    // Conjugating by root^n changes lengths linearly in n, so no solution
    // lies beyond this bound.
    let bound = (0..rank)
        .map(|i| conj.m0.len() + images[i].len() + 1)
        .max()
        .unwrap_or(0);
    let mut worst = 0;
    for n in exponents(bound) {
        let m = conj.m0.mul_reduced(&conj.centralizer.pow_reduced(n));
        let mi = m.inverse();
        match (0..rank).find(|&i| m.mul_reduced(&generator(i)).mul_reduced(&mi) != images[i]) {
            None => return KStatus::Inner { m },
            Some(i) => worst = worst.max(i),
        }
    }
    KStatus::ExponentExhausted { bound, generator: worst }
}

/// Smallest `k <= k_max` with `α^k` inner, with a certificate for every
/// `k` searched. Requires a known inverse: the question is about `Aut(F_n)`.
pub fn inner_power(aut: &FreeAutomorphism, k_max: u32) -> Result<InnerPower> {
    if k_max == 0 {
        return Err(Error::Precondition("k_max must be at least 1".into()));
    }
    if !aut.is_invertible() {
        return Err(Error::Precondition(
            "no inverse found: endomorphism out of scope".into(),
        ));
    }
    // Powers are built sequentially; the checks run in parallel.
    let mut powers = Vec::with_capacity(k_max as usize);
    let mut acc = aut.clone();
    for _ in 0..k_max {
        let next = aut.compose(&acc);
        powers.push(acc);
        acc = next;
    }
    let certificates: Vec<KCertificate> = powers
        .par_iter()
        .enumerate()
        .map(|(i, beta)| KCertificate {
            k: i as u32 + 1,
            status: inner_witness(beta),
        })
        .collect();
    let found = certificates.iter().find_map(|c| match &c.status {
        KStatus::Inner { m } => Some((c.k, m.clone())),
        _ => None,
    });
    Ok(InnerPower {
        k_max,
        found,
        certificates,
    })
}
