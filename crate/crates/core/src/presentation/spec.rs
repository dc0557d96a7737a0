use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::automorphism::{FreeAutomorphism, INVERSE_SEARCH_BOUND};
use super::word::{Alphabet, Word};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub enum Family {
    Free,
    FreeAbelian,
    Rewriting {
        rules: Vec<(Word, Word)>,
        /// Overlap length up to which confluence is checked; `None` means
        /// the full `2 * max_lhs - 1` that decides confluence outright.
        confluence_bound: Option<usize>,
    },
    /// `F_rank ⋊ Z`; the stable letter is the last generator.
    FreeByCyclic { automorphism: FreeAutomorphism },
}

/// A presentation: a family, the free rank, and generator names. For the
/// free-by-cyclic family the alphabet has `rank + 1` letters.
#[derive(Clone, Debug)]
pub struct GroupSpec {
    pub name: String,
    pub family: Family,
    pub rank: usize,
    pub alphabet: Alphabet,
}

/// On-disk form of a [`GroupSpec`].
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub family: String,
    pub rank: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub generators: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub rules: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub automorphism: Option<BTreeMap<String, String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub confluence_bound: Option<usize>,
}

fn default_names(count: usize, with_t: bool) -> Vec<char> {
    let mut names: Vec<char> = (0..count).map(|i| (b'a' + i as u8) as char).collect();
    if with_t {
        names.push('t');
    }
    names
}

impl GroupSpec {
    pub fn free(rank: usize) -> GroupSpec {
        GroupSpec {
            name: format!("F{}", rank),
            family: Family::Free,
            rank,
            alphabet: Alphabet::standard(rank),
        }
    }

    pub fn free_abelian(rank: usize) -> GroupSpec {
        GroupSpec {
            name: format!("Z^{}", rank),
            family: Family::FreeAbelian,
            rank,
            alphabet: Alphabet::standard(rank),
        }
    }

    pub fn free_by_cyclic(automorphism: FreeAutomorphism) -> GroupSpec {
        let rank = automorphism.rank();
        GroupSpec {
            name: format!("F{} x| Z", rank),
            family: Family::FreeByCyclic { automorphism },
            rank,
            alphabet: Alphabet::new(default_names(rank, true)),
        }
    }

    /// F_rank × Z, presented as free-by-cyclic with the identity.
    pub fn free_times_z(rank: usize) -> GroupSpec {
        let mut spec = GroupSpec::free_by_cyclic(FreeAutomorphism::identity(rank));
        spec.name = format!("F{} x Z", rank);
        spec
    }

    pub fn rewriting(
        alphabet: Alphabet,
        rules: Vec<(Word, Word)>,
        confluence_bound: Option<usize>,
    ) -> GroupSpec {
        GroupSpec {
            name: "rewriting".into(),
            rank: alphabet.rank(),
            family: Family::Rewriting {
                rules,
                confluence_bound,
            },
            alphabet,
        }
    }

    /// Number of Cayley-graph generators (the alphabet size without inverses).
    pub fn generator_count(&self) -> usize {
        self.alphabet.rank()
    }

    pub fn family_name(&self) -> &'static str {
        match self.family {
            Family::Free => "free",
            Family::FreeAbelian => "free_abelian",
            Family::Rewriting { .. } => "rewriting",
            Family::FreeByCyclic { .. } => "free_by_cyclic",
        }
    }

    pub fn parse_word(&self, s: &str) -> Result<Word> {
        Ok(self.alphabet.parse(s)?)
    }

    pub fn format_word(&self, w: &Word) -> String {
        self.alphabet.format(w)
    }

    pub fn from_file_data(file: &SpecFile) -> Result<GroupSpec> {
        if file.rank == 0 {
            return Err(Error::Spec("rank must be at least 1".into()));
        }
        let fbc = file.family == "free_by_cyclic";
        let expected = file.rank + fbc as usize;
        let names = if file.generators.is_empty() {
            default_names(file.rank, fbc)
        } else {
            let mut names = Vec::new();
            for g in &file.generators {
                let mut cs = g.chars();
                match (cs.next(), cs.next()) {
                    (Some(c), None) if c.is_ascii_lowercase() => names.push(c),
                    _ => {
                        return Err(Error::Spec(format!(
                            "generator name '{}' must be one lowercase letter",
                            g
                        )))
                    }
                }
            }
            names
        };
        if names.len() != expected {
            return Err(Error::Spec(format!(
                "family {} of rank {} needs {} generator names, got {}",
                file.family,
                file.rank,
                expected,
                names.len()
            )));
        }
        let mut sorted = names.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != names.len() {
            return Err(Error::Spec("duplicate generator names".into()));
        }
        let alphabet = Alphabet::new(names);
        let family = match file.family.as_str() {
            "free" => Family::Free,
            "free_abelian" => Family::FreeAbelian,
            "rewriting" => {
                let rules = file
                    .rules
                    .iter()
                    .map(|(l, r)| Ok((alphabet.parse(l)?, alphabet.parse(r)?)))
                    .collect::<Result<Vec<_>>>()?;
                Family::Rewriting {
                    rules,
                    confluence_bound: file.confluence_bound,
                }
            }
            "free_by_cyclic" => {
                let map = file.automorphism.as_ref().ok_or_else(|| {
                    Error::Spec("free_by_cyclic needs an automorphism".into())
                })?;
                let free_alphabet = Alphabet::new(alphabet.names()[..file.rank].to_vec());
                let aut = FreeAutomorphism::from_map(&free_alphabet, map)?
                    .with_inverse_search(INVERSE_SEARCH_BOUND);
                Family::FreeByCyclic { automorphism: aut }
            }
            other => return Err(Error::Spec(format!("unknown family '{}'", other))),
        };
        Ok(GroupSpec {
            name: file.name.clone().unwrap_or_else(|| file.family.clone()),
            family,
            rank: file.rank,
            alphabet,
        })
    }

    pub fn from_json(text: &str) -> Result<GroupSpec> {
        let file: SpecFile =
            serde_json::from_str(text).map_err(|e| Error::Spec(e.to_string()))?;
        GroupSpec::from_file_data(&file)
    }

    pub fn load(path: &Path) -> Result<GroupSpec> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Spec(format!("{}: {}", path.display(), e)))?;
        GroupSpec::from_json(&text)
    }

    pub fn to_file_data(&self) -> SpecFile {
        let mut file = SpecFile {
            name: Some(self.name.clone()),
            family: self.family_name().into(),
            rank: self.rank,
            generators: self.alphabet.names().iter().map(|c| c.to_string()).collect(),
            ..SpecFile::default()
        };
        match &self.family {
            Family::Rewriting {
                rules,
                confluence_bound,
            } => {
                file.rules = rules
                    .iter()
                    .map(|(l, r)| (self.format_word(l), self.format_word(r)))
                    .collect();
                file.confluence_bound = *confluence_bound;
            }
            Family::FreeByCyclic { automorphism } => {
                let free_alphabet = Alphabet::new(self.alphabet.names()[..self.rank].to_vec());
                file.automorphism = Some(automorphism.to_map(&free_alphabet));
            }
            _ => {}
        }
        file
    }
}
