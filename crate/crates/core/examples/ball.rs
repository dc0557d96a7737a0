//! Sphere sizes of Cayley balls for the builtin groups.

use std::sync::Arc;

use coarse_geom::cayley::build_ball;
use coarse_geom::presentation::{catalog, NormalFormOracle};

fn main() -> coarse_geom::Result<()> {
    for (name, radius) in [("z", 6), ("f2", 5), ("z2", 6), ("f2xz", 4), ("bs12", 6)] {
        let oracle = Arc::new(NormalFormOracle::new(catalog::builtin(name)?)?);
        let ball = build_ball(&oracle, radius)?;
        println!("{:>6} R={}  |B|={:<6} spheres {:?}", name, radius, ball.len(), ball.sphere_sizes());
    }
    Ok(())
}
