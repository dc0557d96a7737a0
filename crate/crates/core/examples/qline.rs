//! A quasi-line around <ab> in F2 and its complementary components.

use std::sync::Arc;

use coarse_geom::cayley::build_ball;
use coarse_geom::complement::{components_classify, MarginRule};
use coarse_geom::presentation::{GroupSpec, NormalFormOracle};
use coarse_geom::quasiline::axis_quasiline;

fn main() -> coarse_geom::Result<()> {
    let oracle = Arc::new(NormalFormOracle::new(GroupSpec::free(2))?);
    let ball = build_ball(&oracle, 8)?;
    let h = oracle.spec().parse_word("ab")?;
    let axis = axis_quasiline(&ball, &h, 1)?;
    let q = &axis.quasi_line;
    println!("exponents {:?}, thickness {}, support {}", axis.exponent_range, q.thickness, q.support.len());

    let margin = MarginRule::Fixed(1).margin(q.thickness);
    let comps = components_classify(&ball, q, margin)?;
    println!("candidate essential {}, bounded {}", comps.essential_count(), comps.bounded_count());
    Ok(())
}
