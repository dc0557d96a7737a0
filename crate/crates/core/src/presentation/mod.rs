//! Words, presentations and word-problem oracles.

mod automorphism;
pub mod catalog;
mod oracle;
mod rewriting;
mod semidirect;
mod spec;
mod word;

pub use automorphism::{FreeAutomorphism, INVERSE_SEARCH_BOUND};
pub use oracle::{validate_rewriting, Certificate, NormalFormOracle};
pub use rewriting::{check_confluence, ConfluenceReport, CriticalPair, RewriteSystem};
pub use semidirect::{FbcElement, Semidirect};
pub use spec::{Family, GroupSpec, SpecFile};
pub use word::{free_reduce, Alphabet, Letter, Word, WordError};

/// `aut` applied to `w`, freely reduced.
pub fn apply_automorphism(aut: &FreeAutomorphism, w: &Word) -> crate::Result<Word> {
    aut.apply(w)
}
