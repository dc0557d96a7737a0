//! Pushing the a-axis of Z^2 through a stretch map.

use std::sync::Arc;

use coarse_geom::cayley::build_ball;
use coarse_geom::coarse::{pushforward_qline, ExplicitMap};
use coarse_geom::complement::MarginRule;
use coarse_geom::presentation::{GroupSpec, NormalFormOracle};
use coarse_geom::quasiline::axis_quasiline;

fn main() -> coarse_geom::Result<()> {
    let z2 = Arc::new(NormalFormOracle::new(GroupSpec::free_abelian(2))?);
    let spec = z2.spec();
    let stretch = ExplicitMap::homomorphism(&z2, &z2, vec![spec.parse_word("aa")?, spec.parse_word("b")?])?;
    let (src, dst) = (build_ball(&z2, 10)?, build_ball(&z2, 20)?);
    let axis = axis_quasiline(&src, &spec.parse_word("a")?, 1)?;
    let (image, report) = pushforward_qline(&stretch, &axis.quasi_line, &src, &dst, MarginRule::Fixed(1))?;
    println!("image support {} vertices", image.support.len());
    println!("{:?}", report);
    Ok(())
}
