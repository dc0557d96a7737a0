//! Hausdorff distances between cosets of <t> in F2 x Z.

use std::sync::Arc;

use coarse_geom::cayley::build_ball;
use coarse_geom::commensurizer::coset_metric;
use coarse_geom::presentation::{GroupSpec, NormalFormOracle};

fn main() -> coarse_geom::Result<()> {
    let oracle = Arc::new(NormalFormOracle::new(GroupSpec::free_times_z(2))?);
    let ball = build_ball(&oracle, 6)?;
    let spec = oracle.spec();
    let members = ["e", "a", "b", "ab"].iter().map(|s| spec.parse_word(s)).collect::<Result<Vec<_>, _>>()?;
    let m = coset_metric(&ball, &members, &spec.parse_word("t")?)?;
    print!("{}", m.to_csv());
    Ok(())
}
