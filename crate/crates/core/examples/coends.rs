//! Coend estimates: a line in Z^2 has two sides, the t-axis in F2 x Z keeps
//! branching.

use std::sync::Arc;

use coarse_geom::complement::{coend_estimate, MarginRule};
use coarse_geom::presentation::{GroupSpec, NormalFormOracle};

fn main() -> coarse_geom::Result<()> {
    let z2 = Arc::new(NormalFormOracle::new(GroupSpec::free_abelian(2))?);
    let a = z2.spec().parse_word("a")?;
    let est = coend_estimate(&z2, &a, &[(1, 20), (2, 30), (3, 40)], MarginRule::Default)?;
    println!("Z^2 <a>: {:?} -> {:?}", est.counts(), est.verdict);

    let fz = Arc::new(NormalFormOracle::new(GroupSpec::free_times_z(2))?);
    let t = fz.spec().parse_word("t")?;
    let est = coend_estimate(&fz, &t, &[(1, 5), (2, 6), (3, 7)], MarginRule::Fixed(1))?;
    println!("F2 x Z <t>: {:?} -> {:?}", est.counts(), est.verdict);
    print!("{}", est.to_csv());
    Ok(())
}
