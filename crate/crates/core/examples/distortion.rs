//! Distortion profile and coarse inverse of Z -> Z, 1 -> 2, plus the
//! distorted powers of a in BS(1,2).

use std::sync::Arc;

use coarse_geom::cayley::build_ball;
use coarse_geom::coarse::{coarse_inverse, ud_profile, ExplicitMap};
use coarse_geom::presentation::{catalog, GroupSpec, NormalFormOracle};

fn main() -> coarse_geom::Result<()> {
    let z = Arc::new(NormalFormOracle::new(GroupSpec::free_abelian(1))?);
    let double = ExplicitMap::homomorphism(&z, &z, vec![z.spec().parse_word("aa")?])?;
    let (src, dst) = (build_ball(&z, 8)?, build_ball(&z, 16)?);
    let p = ud_profile(&double, &src, &dst, 8)?;
    println!("phi {:?}", p.phi);
    println!("Phi {:?}", p.big_phi);
    let inv = coarse_inverse(&double, &src, &dst)?;
    println!("coarse inverse {:?}", inv.report);

    let bs = Arc::new(NormalFormOracle::new(catalog::builtin("bs12")?)?);
    let ball = build_ball(&bs, 9)?;
    let a = bs.spec().parse_word("a")?;
    for n in [4usize, 8, 16, 24] {
        let w = coarse_geom::presentation::Word::from_letters(a.letters().repeat(n));
        let d = ball.lookup(&w).map(|v| ball.dist0(v));
        println!("|a^{}| = {:?}", n, d);
    }
    Ok(())
}
