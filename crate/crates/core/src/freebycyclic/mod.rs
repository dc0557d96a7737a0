//! Free-by-cyclic groups: roots, conjugacy, inner powers and the
//! virtually-direct verdict.

mod conjugacy;
mod inner;
mod prop93;
mod root;
mod verdict;

pub use conjugacy::{conjugator_solve, Conjugator};
pub use inner::{inner_power, inner_witness, CertificateReport, InnerPower, KCertificate, KStatus};
pub use prop93::{m_k, prop93_check, Prop93Result};
pub use root::{free_root, reduced_words, unique_root_check, RootDecomposition, UniqueRootReport};
pub use verdict::{virtually_direct_verdict, FbcOutcome, FbcVerdict, FbcVerdictReport};

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use super::*;
    use crate::presentation::{Alphabet, FreeAutomorphism, Word, INVERSE_SEARCH_BOUND};

    fn f2() -> Alphabet {
        Alphabet::standard(2)
    }

    fn w(s: &str) -> Word {
        f2().parse(s).unwrap()
    }

    fn aut(pairs: &[(&str, &str)]) -> FreeAutomorphism {
        let map: BTreeMap<String, String> = pairs.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
        FreeAutomorphism::from_map(&f2(), &map)
            .unwrap()
            .with_inverse_search(INVERSE_SEARCH_BOUND)
    }

    #[test]
    fn roots() {
        let r = free_root(&w("aaa")).unwrap();
        assert_eq!((r.root, r.exponent), (w("a"), 3));
        let r = free_root(&w("abab")).unwrap();
        assert_eq!((r.root, r.exponent), (w("ab"), 2));
        let r = free_root(&w("baaB")).unwrap();
        assert_eq!((r.root.clone(), r.exponent), (w("baB"), 2));
        assert_eq!(r.root.pow_reduced(2), w("baaB"));
        assert!(free_root(&w("aA")).is_err());
    }

    #[test]
    fn root_uniqueness_small() {
        let rep = unique_root_check(2, 4, &[2, 3]);
        assert!(rep.counterexamples.is_empty());
        assert_eq!(rep.words, 161);
        assert!(unique_root_check(1, 2, &[2]).counterexamples.is_empty());
    }

    #[test]
    fn conjugators() {
        let c = conjugator_solve(&w("a"), &w("a")).unwrap().unwrap();
        assert_eq!((c.m0, c.centralizer), (w("e"), w("a")));
        let c = conjugator_solve(&w("a"), &w("baB")).unwrap().unwrap();
        assert_eq!((c.m0, c.centralizer), (w("b"), w("a")));
        assert_eq!(conjugator_solve(&w("a"), &w("b")).unwrap(), None);
        let c = conjugator_solve(&w("abb"), &w("Abbaa")).unwrap().unwrap();
        assert_eq!(c.m0.mul_reduced(&w("abb")).mul_reduced(&c.m0.inverse()), w("Abbaa"));
    }

    #[test]
    fn inner_powers() {
        let conj = FreeAutomorphism::conjugation(2, &w("b")).unwrap();
        assert_eq!(inner_power(&conj, 4).unwrap().found, Some((1, w("b"))));
        let swap = aut(&[("a", "b"), ("b", "a")]);
        assert_eq!(inner_power(&swap, 4).unwrap().found, Some((2, w("e"))));
        let fib = aut(&[("a", "ab"), ("b", "a")]);
        let res = inner_power(&fib, 10).unwrap();
        assert_eq!(res.found, None);
        assert_eq!(res.certificates.len(), 10);
    }

    #[test]
    fn verdicts() {
        let v = virtually_direct_verdict(&FreeAutomorphism::identity(2), 4).unwrap();
        assert_eq!(v.outcome, FbcOutcome::VirtuallyDirect { k: 1, m: w("e") });
        let swap = aut(&[("a", "b"), ("b", "a")]);
        let v = virtually_direct_verdict(&swap, 4).unwrap();
        assert_eq!(v.outcome, FbcOutcome::VirtuallyDirect { k: 2, m: w("e") });
        let names = Alphabet::new(vec!['a', 'b', 't']);
        assert_eq!(v.report(&names).witness_generators, vec!["a", "b", "tt"]);
        let fib = aut(&[("a", "ab"), ("b", "a")]);
        let v = virtually_direct_verdict(&fib, 16).unwrap();
        assert_eq!(v.outcome, FbcOutcome::NotVirtuallyDirectUpToBound);
        assert_eq!(v.certificates.len(), 16);
        // a -> aa is not onto.
        let endo = aut(&[("a", "aa"), ("b", "b")]);
        let v = virtually_direct_verdict(&endo, 4).unwrap();
        assert_eq!(v.outcome, FbcOutcome::EndomorphismOutOfScope);
    }

    #[test]
    fn m_k_examples() {
        assert_eq!(m_k(&FreeAutomorphism::identity(2), &w("a"), 3).unwrap(), w("aaa"));
        let fib = aut(&[("a", "ab"), ("b", "a")]);
        assert_eq!(m_k(&fib, &w("a"), 2).unwrap(), w("aab"));
        let r = prop93_check(&w("a"), &fib, &w("b"), 2).unwrap();
        assert_eq!(r.lhs_holds, r.rhs_holds);
        let r = prop93_check(&w("a"), &FreeAutomorphism::identity(2), &w("a"), 3).unwrap();
        assert!(r.lhs_holds && r.rhs_holds);
    }
}
