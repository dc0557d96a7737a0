//! Commensurator evidence for <aa> in F2.

use std::sync::Arc;

use coarse_geom::commensurizer::{comm_members, comm_score, CommSchedule};
use coarse_geom::presentation::{GroupSpec, NormalFormOracle};

fn main() -> coarse_geom::Result<()> {
    let oracle = Arc::new(NormalFormOracle::new(GroupSpec::free(2))?);
    let schedule = CommSchedule::new(&oracle, &[6, 8, 10])?;
    let h = oracle.spec().parse_word("aa")?;
    for g in ["a", "b", "ab"] {
        let s = comm_score(&schedule, &h, &oracle.spec().parse_word(g)?)?;
        println!("{:>3}: {:?} {:?}", g, s.values(), s.verdict);
    }
    let all = comm_members(&schedule, &h)?;
    println!("member evidence: {:?}", all.members);
    println!("closure violations: {}", all.closure_violations.len());
    Ok(())
}
