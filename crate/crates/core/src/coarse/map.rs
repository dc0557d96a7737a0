use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::cayley::CayleyBall;
use crate::error::{Error, Result};
use crate::presentation::{Family, Letter, NormalFormOracle, Word};

#[derive(Clone, Debug)]
pub enum MapKind {
    /// Generator images; extended to words by substitution.
    Homomorphism { images: Vec<Word> },
    /// Explicit lookup from source ball vertices to target ball vertices.
    Table { table: Vec<usize> },
}

/// A map between Cayley graphs. Table maps are tied to the balls they
/// were built on.
#[derive(Clone, Debug)]
pub struct ExplicitMap {
    pub src: Arc<NormalFormOracle>,
    pub dst: Arc<NormalFormOracle>,
    pub kind: MapKind,
}

/// On-disk map description: `{"kind": "homomorphism", "images": {"a": "aa"}}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MapFile {
    pub kind: String,
    pub images: BTreeMap<String, String>,
}

fn relators(oracle: &NormalFormOracle) -> Vec<Word> {
    let spec = oracle.spec();
    let gen = |i: usize| Word::letter(Letter::new(i, false));
    match &spec.family {
        Family::Free => Vec::new(),
        Family::FreeAbelian => {
            let n = spec.generator_count();
            let mut out = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    out.push(gen(i).concat(&gen(j)).concat(&gen(i).inverse()).concat(&gen(j).inverse()));
                }
            }
            out
        }
        Family::Rewriting { rules, .. } => rules.iter().map(|(l, r)| l.concat(&r.inverse())).collect(),
        Family::FreeByCyclic { automorphism } => {
            let t = gen(spec.rank);
            (0..spec.rank)
                .map(|i| {
                    t.concat(&gen(i))
                        .concat(&t.inverse())
                        .concat(&automorphism.images()[i].inverse())
                })
                .collect()
        }
    }
}

impl ExplicitMap {
    /// A homomorphism; every defining relator must map to the identity.
    pub fn homomorphism(
        src: &Arc<NormalFormOracle>,
        dst: &Arc<NormalFormOracle>,
        images: Vec<Word>,
    ) -> Result<ExplicitMap> {
        if images.len() != src.generator_count() {
            return Err(Error::Spec(format!(
                "expected {} generator images, got {}",
                src.generator_count(),
                images.len()
            )));
        }
        let images = images
            .iter()
            .map(|w| dst.normal_form(w))
            .collect::<Result<Vec<_>>>()?;
        let map = ExplicitMap {
            src: Arc::clone(src),
            dst: Arc::clone(dst),
            kind: MapKind::Homomorphism { images },
        };
        for r in relators(src) {
            if !dst.is_identity(&map.image_word(&r)) {
                return Err(Error::Spec(format!(
                    "relator {} does not map to the identity",
                    src.spec().format_word(&r)
                )));
            }
        }
        Ok(map)
    }

    pub fn identity(oracle: &Arc<NormalFormOracle>) -> ExplicitMap {
        let images = (0..oracle.generator_count())
            .map(|i| Word::letter(Letter::new(i, false)))
            .collect();
        ExplicitMap {
            src: Arc::clone(oracle),
            dst: Arc::clone(oracle),
            kind: MapKind::Homomorphism { images },
        }
    }

    pub fn from_file(src: &Arc<NormalFormOracle>, dst: &Arc<NormalFormOracle>, file: &MapFile) -> Result<ExplicitMap> {
        if file.kind != "homomorphism" {
            return Err(Error::Spec(format!("unsupported map kind '{}'", file.kind)));
        }
        let names = src.spec().alphabet.names();
        let mut images = vec![None; names.len()];
        for (k, v) in &file.images {
            let i = k
                .chars()
                .next()
                .and_then(|c| src.spec().alphabet.index_of(c))
                .filter(|_| k.chars().count() == 1)
                .ok_or_else(|| Error::Spec(format!("'{}' is not a source generator", k)))?;
            images[i] = Some(dst.spec().parse_word(v)?);
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(i, w)| w.ok_or_else(|| Error::Spec(format!("no image for '{}'", names[i]))))
            .collect::<Result<Vec<_>>>()?;
        ExplicitMap::homomorphism(src, dst, images)
    }

    pub fn is_homomorphism(&self) -> bool {
        matches!(self.kind, MapKind::Homomorphism { .. })
    }

    /// Image of a source word under a homomorphism, canonicalized.
    pub fn image_word(&self, w: &Word) -> Word {
        let MapKind::Homomorphism { images } = &self.kind else {
            panic!("image_word needs a homomorphism");
        };
        let mut out = Word::empty();
        for l in w.letters() {
            let img = &images[l.generator()];
            out = out.concat(&if l.is_inverse() { img.inverse() } else { img.clone() });
        }
        self.dst.canonicalize(&out)
    }

    /// Longest generator image, the Lipschitz constant of a homomorphism.
    pub fn lipschitz(&self) -> Option<usize> {
        match &self.kind {
            MapKind::Homomorphism { images } => Some(images.iter().map(Word::len).max().unwrap_or(0)),
            MapKind::Table { .. } => None,
        }
    }

    /// Image of every source ball vertex in the target ball, if it lands there.
    pub fn vertex_images(&self, src: &CayleyBall, dst: &CayleyBall) -> Vec<Option<usize>> {
        match &self.kind {
            MapKind::Homomorphism { .. } => (0..src.len())
                .map(|v| dst.index_of(&self.image_word(src.word(v))))
                .collect(),
            MapKind::Table { table } => (0..src.len())
                .map(|v| table.get(v).copied().filter(|&t| t < dst.len()))
                .collect(),
        }
    }
}
