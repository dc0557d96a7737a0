//! Rips components of the even integers at scales 1 and 2.

use std::sync::Arc;

use coarse_geom::cayley::{build_ball, cyclic_subgroup};
use coarse_geom::coarse::rips_components;
use coarse_geom::presentation::{GroupSpec, NormalFormOracle};

fn main() -> coarse_geom::Result<()> {
    let z = Arc::new(NormalFormOracle::new(GroupSpec::free_abelian(1))?);
    let ball = build_ball(&z, 10)?;
    let evens = cyclic_subgroup(&ball, &z.spec().parse_word("aa")?)?;
    for d in [1, 2] {
        println!("d={}: {} components", d, rips_components(&ball, &evens, d).len());
    }
    Ok(())
}
