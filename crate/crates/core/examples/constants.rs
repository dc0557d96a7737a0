//! The constant chain for an affine control function.

use coarse_geom::constants::{appendix_chain, lemma31_x1, recheck, PhiSpec};

fn main() -> coarse_geom::Result<()> {
    let phi = PhiSpec::Affine { s: 2, c: 1 };
    println!("x1(N=1, x2=3) = {}", lemma31_x1(&phi, 1, 3)?);
    let chain = appendix_chain(&phi, 1, 2, 60)?;
    println!("R={} K1={} r1={} K={}", chain.big_r, chain.k1, chain.r1, chain.k);
    for i in recheck(&chain)? {
        println!("  {:<38} {}", i.name, if i.holds { "ok" } else { "FAILS" });
    }
    Ok(())
}
