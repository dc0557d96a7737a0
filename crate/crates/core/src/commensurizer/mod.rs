//! Commensurizer membership through Hausdorff distances between cosets.

mod cover;
mod metric;
mod score;

pub use cover::{coset_cover_test, within_hausdorff, CoverResult};
pub use metric::{coset_metric, CosetMetric};
pub use score::{
    comm_members, comm_score, comm_verdict, score_at, CommMembers, CommSchedule, CommScore,
    CommVerdict,
};

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::cayley::{build_ball, conjugate_subgroup, cyclic_subgroup};
    use crate::presentation::{GroupSpec, NormalFormOracle, Word};

    fn oracle(spec: GroupSpec) -> Arc<NormalFormOracle> {
        Arc::new(NormalFormOracle::new(spec).unwrap())
    }

    fn w(s: &[i32]) -> Word {
        Word::from_signed(s)
    }

    #[test]
    fn verdict_rules() {
        assert_eq!(comm_verdict(&[Some(5), Some(5), Some(5)]), CommVerdict::MemberEvidence);
        assert_eq!(comm_verdict(&[Some(6), Some(8), Some(10)]), CommVerdict::NonmemberEvidence);
        assert_eq!(comm_verdict(&[Some(6), Some(8), None]), CommVerdict::NonmemberEvidence);
        assert_eq!(comm_verdict(&[Some(6), Some(6), Some(7)]), CommVerdict::Inconclusive);
    }

    #[test]
    fn score_examples() {
        let z2 = CommSchedule::new(&oracle(GroupSpec::free_abelian(2)), &[10, 14, 18]).unwrap();
        let s = comm_score(&z2, &w(&[1]), &w(&[1])).unwrap();
        assert_eq!(s.values(), vec![Some(0); 3]);
        let s = comm_score(&z2, &w(&[1]), &w(&[2, 2, 2, 2, 2])).unwrap();
        assert_eq!(s.values(), vec![Some(5); 3]);
        assert_eq!(s.verdict, CommVerdict::MemberEvidence);

        let f2 = CommSchedule::new(&oracle(GroupSpec::free(2)), &[6, 7, 8]).unwrap();
        let s = comm_score(&f2, &w(&[1]), &w(&[2])).unwrap();
        assert_eq!(s.values(), vec![Some(6), Some(7), Some(8)]);
        assert_eq!(s.verdict, CommVerdict::NonmemberEvidence);
    }

    #[test]
    fn cover_examples() {
        let z2 = build_ball(&oracle(GroupSpec::free_abelian(2)), 12).unwrap();
        let c = coset_cover_test(&z2, &w(&[1]), &w(&[1, 1]), 0).unwrap();
        assert!(c.both());
        let c = coset_cover_test(&z2, &w(&[1]), &w(&[2, 2, 2, 2, 2]), 5).unwrap();
        assert!(c.both());
        let f2 = build_ball(&oracle(GroupSpec::free(2)), 10).unwrap();
        let c = coset_cover_test(&f2, &w(&[1]), &w(&[2]), 3).unwrap();
        assert_eq!((c.cover1, c.cover2), (false, false));
        assert!(coset_cover_test(&f2, &w(&[1]), &w(&[2]), 10).is_err());
        let hs = cyclic_subgroup(&f2, &w(&[1])).unwrap();
        let hg = conjugate_subgroup(&f2, &w(&[2]), &w(&[1])).unwrap();
        assert!(!within_hausdorff(&f2, &hs, &hg, 3));
    }

    #[test]
    fn metric_examples() {
        let z2 = build_ball(&oracle(GroupSpec::free_abelian(2)), 10).unwrap();
        let m = coset_metric(&z2, &[Word::empty(), w(&[2])], &w(&[1])).unwrap();
        assert_eq!(m.value(0, 0), Some(0));
        assert_eq!(m.value(0, 1), Some(1));
        let fz = build_ball(&oracle(GroupSpec::free_times_z(2)), 8).unwrap();
        let m = coset_metric(&fz, &[w(&[1]), w(&[2])], &w(&[3])).unwrap();
        assert_eq!(m.value(0, 1), Some(2));
        assert!(coset_metric(&fz, &[], &w(&[3])).is_err());
    }
}
