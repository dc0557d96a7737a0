use serde::Serialize;

use super::inner::{inner_power, CertificateReport, KCertificate};
use crate::error::Result;
use crate::presentation::{Alphabet, FreeAutomorphism, Letter, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FbcOutcome {
    /// `α^k` is conjugation by `m`; `⟨F_n, m⁻¹t^k⟩ ≅ F_n × Z` has index at most `k`.
    VirtuallyDirect { k: u32, m: Word },
    /// No inner power up to `k_max`; says nothing about larger `k`.
    NotVirtuallyDirectUpToBound,
    /// No inverse was found, so the map may not be an automorphism.
    EndomorphismOutOfScope,
}

#[derive(Clone, Debug)]
pub struct FbcVerdict {
    pub automorphism: FreeAutomorphism,
    pub k_max: u32,
    pub outcome: FbcOutcome,
    pub certificates: Vec<KCertificate>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FbcVerdictReport {
    pub automorphism: std::collections::BTreeMap<String, String>,
    pub k_max: u32,
    pub outcome: &'static str,
    pub k: Option<u32>,
    pub m: Option<String>,
    pub index_bound: Option<u32>,
    pub witness_generators: Vec<String>,
    pub certificates: Vec<CertificateReport>,
    pub epistemic_status: String,
}

/// Whether `F_n ⋊_α Z` is virtually `F_n × Z`, searching `k <= k_max`.
pub fn virtually_direct_verdict(aut: &FreeAutomorphism, k_max: u32) -> Result<FbcVerdict> {
    if !aut.is_invertible() {
        return Ok(FbcVerdict {
            automorphism: aut.clone(),
            k_max,
            outcome: FbcOutcome::EndomorphismOutOfScope,
            certificates: Vec::new(),
        });
    }
    let search = inner_power(aut, k_max)?;
    let outcome = match search.found {
        Some((k, m)) => FbcOutcome::VirtuallyDirect { k, m },
        None => FbcOutcome::NotVirtuallyDirectUpToBound,
    };
    Ok(FbcVerdict {
        automorphism: aut.clone(),
        k_max,
        outcome,
        certificates: search.certificates,
    })
}

impl FbcVerdict {
    /// Generators of the direct-product subgroup, in the alphabet of the
    /// semidirect product (free letters then the stable letter).
    pub fn witness_generators(&self) -> Vec<Word> {
        let FbcOutcome::VirtuallyDirect { k, m } = &self.outcome else {
            return Vec::new();
        };
        let rank = self.automorphism.rank();
        let mut gens: Vec<Word> = (0..rank).map(|i| Word::letter(Letter::new(i, false))).collect();
        let mut last = m.inverse();
        for _ in 0..*k {
            last.push(Letter::new(rank, false));
        }
        gens.push(last);
        gens
    }

    /// `alphabet` names the free generators followed by the stable letter.
    pub fn report(&self, alphabet: &Alphabet) -> FbcVerdictReport {
        let free = Alphabet::new(alphabet.names()[..self.automorphism.rank()].to_vec());
        let (outcome, k, m, status) = match &self.outcome {
            FbcOutcome::VirtuallyDirect { k, m } => (
                "virtually_direct",
                Some(*k),
                Some(free.format(m)),
                "exact: inner power verified on every generator".to_string(),
            ),
            FbcOutcome::NotVirtuallyDirectUpToBound => (
                "not_virtually_direct_up_to_bound",
                None,
                None,
                format!("bounded negative: no inner power for k <= {}", self.k_max),
            ),
            FbcOutcome::EndomorphismOutOfScope => (
                "endomorphism_out_of_scope",
                None,
                None,
                "no inverse found within the search bound".to_string(),
            ),
        };
        FbcVerdictReport {
            automorphism: self.automorphism.to_map(&free),
            k_max: self.k_max,
            outcome,
            k,
            m,
            index_bound: k,
            witness_generators: self.witness_generators().iter().map(|w| alphabet.format(w)).collect(),
            certificates: self.certificates.iter().map(|c| c.report(&free)).collect(),
            epistemic_status: status,
        }
    }
}
