//! Complementary components of quasi-lines, coends, chains.

mod chains;
mod classify;
mod coends;

pub use chains::{chain_connect, fg_probe, FgProbeReport, PairProbe};
pub use classify::{
    components_classify, parting_number, Classification, Component, ComponentReport, MarginRule,
};
pub use coends::{coend_estimate, coend_verdict, CoendEntry, CoendEstimate, CoendVerdict};

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::cayley::{build_ball, neighborhood, CayleyBall, VertexSet};
    use crate::presentation::{GroupSpec, NormalFormOracle, Word};
    use crate::quasiline::{axis_quasiline, Line, QuasiLine};

    fn ball(spec: GroupSpec, r: usize) -> CayleyBall {
        build_ball(&Arc::new(NormalFormOracle::new(spec).unwrap()), r).unwrap()
    }

    fn v(b: &CayleyBall, s: &str) -> usize {
        b.lookup(&b.oracle().spec().parse_word(s).unwrap()).unwrap()
    }

    fn a_axis(b: &CayleyBall, k: i32) -> QuasiLine {
        let verts: Vec<usize> = (-k..=k)
            .map(|i| b.lookup(&Word::from_signed(&vec![i.signum(); i.unsigned_abs() as usize])).unwrap())
            .collect();
        let line = Line { vertices: verts.clone(), injective: true };
        QuasiLine::from_parts(b, VertexSet::from_vec(verts), line).unwrap()
    }

    #[test]
    fn z2_strip_has_two_half_planes() {
        let b = ball(GroupSpec::free_abelian(2), 20);
        let q = axis_quasiline(&b, &Word::from_signed(&[1]), 1).unwrap().quasi_line;
        let report = components_classify(&b, &q, 5).unwrap();
        assert_eq!(report.essential_count(), 2);
        assert_eq!(report.bounded_count(), 0);
        assert_eq!(parting_number(&b, &q, 5).unwrap(), 2);
    }

    #[test]
    fn free_axis_branches() {
        let b = ball(GroupSpec::free(2), 7);
        let q = a_axis(&b, 6);
        assert_eq!(q.thickness, 0);
        let report = components_classify(&b, &q, 1).unwrap();
        assert_eq!(report.essential_count(), 22);
        assert_eq!(report.bounded_count(), 6);
        assert_eq!(report.m1, Some(1));
    }

    #[test]
    fn whole_ball_support_is_empty_report() {
        let b = ball(GroupSpec::free(2), 3);
        let all: VertexSet = (0..b.len()).collect();
        let line = Line { vertices: vec![0], injective: true };
        let q = QuasiLine::from_parts(&b, all, line).unwrap();
        let report = components_classify(&b, &q, 1).unwrap();
        assert!(report.components.is_empty());
        assert_eq!(parting_number(&b, &q, 1).unwrap(), 0);
        assert!(components_classify(&b, &q, 0).is_err());
    }

    #[test]
    fn verdict_rules() {
        assert_eq!(coend_verdict(&[2, 2, 2]), CoendVerdict::Stable(2));
        assert_eq!(coend_verdict(&[1, 2, 2, 2]), CoendVerdict::Stable(2));
        assert_eq!(coend_verdict(&[12, 36, 108]), CoendVerdict::Growing);
        assert_eq!(coend_verdict(&[2, 3, 3]), CoendVerdict::Inconclusive);
    }

    #[test]
    fn z2_coends_are_stable() {
        let oracle = Arc::new(NormalFormOracle::new(GroupSpec::free_abelian(2)).unwrap());
        let schedule = [(1, 20), (2, 30), (3, 40)];
        for h in [vec![1], vec![1, 1]] {
            let est = coend_estimate(&oracle, &Word::from_signed(&h), &schedule, MarginRule::Default).unwrap();
            assert_eq!(est.verdict, CoendVerdict::Stable(2));
        }
        assert!(coend_estimate(&oracle, &Word::from_signed(&[1]), &[(1, 20), (2, 20)], MarginRule::Default).is_err());
    }

    #[test]
    fn chains_stay_in_their_half_plane() {
        let b = ball(GroupSpec::free_abelian(2), 12);
        let q = axis_quasiline(&b, &Word::from_signed(&[1]), 3).unwrap().quasi_line;
        let report = components_classify(&b, &q, 1).unwrap();
        let comps: VertexSet = report.components.iter().flat_map(|c| c.vertices.clone()).collect();
        let closure = neighborhood(&b, &comps, 1);
        let x = v(&b, "bbb");
        let y = v(&b, "aaaabbb");
        let z = v(&b, "BBB");
        assert_eq!(chain_connect(&b, &q.support, &closure, 4, x, x).unwrap(), Some(vec![x]));
        let chain = chain_connect(&b, &q.support, &closure, 4, x, y).unwrap().unwrap();
        assert_eq!((chain[0], *chain.last().unwrap()), (x, y));
        assert_eq!(chain_connect(&b, &q.support, &closure, 4, x, z).unwrap(), None);
        assert!(chain_connect(&b, &q.support, &closure, 4, 0, x).is_err());
    }

    #[test]
    fn fg_probe_examples() {
        let z2 = ball(GroupSpec::free_abelian(2), 12);
        let exps = |i: usize| {
            let w = z2.word(i);
            let x: i32 = w.letters().iter().filter(|l| l.generator() == 0).map(|l| if l.is_inverse() { -1 } else { 1 }).sum();
            let y: i32 = w.letters().iter().filter(|l| l.generator() == 1).map(|l| if l.is_inverse() { -1 } else { 1 }).sum();
            (x, y)
        };
        let member = |i: usize| {
            let (x, y) = exps(i);
            x % 2 == 0 && y % 3 == 0
        };
        let pairs: Vec<(usize, usize)> = (0..z2.len()).filter(|&i| member(i)).map(|i| (0, i)).collect();
        let report = fg_probe(&z2, member, 4, &pairs).unwrap();
        assert!(report.pairs.iter().all(|p| p.connected));

        let f2 = ball(GroupSpec::free(2), 10);
        let kernel = |i: usize| {
            f2.word(i).letters().iter().map(|l| if l.is_inverse() { -1 } else { 1 }).sum::<i32>() == 0
        };
        let near = fg_probe(&f2, kernel, 3, &[(0, v(&f2, "aB"))]).unwrap();
        assert_eq!(near.pairs[0].chain.as_ref().unwrap().len(), 2);
        let far = fg_probe(&f2, kernel, 3, &[(0, v(&f2, "aaBB"))]).unwrap();
        assert!(!far.pairs[0].connected);
        assert!(fg_probe(&f2, kernel, 3, &[(0, v(&f2, "a"))]).is_err());
    }
}
