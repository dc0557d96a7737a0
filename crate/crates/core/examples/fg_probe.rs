//! Chain connectivity of <aa, b> inside a ball of F2.

use std::sync::Arc;

use coarse_geom::cayley::{build_ball, coset};
use coarse_geom::complement::fg_probe;
use coarse_geom::presentation::{GroupSpec, NormalFormOracle};

fn main() -> coarse_geom::Result<()> {
    let oracle = Arc::new(NormalFormOracle::new(GroupSpec::free(2))?);
    let ball = build_ball(&oracle, 6)?;
    let spec = oracle.spec();
    // <aa> and its translate by b, as a two-coset test set
    let aa = spec.parse_word("aa")?;
    let h = coset(&ball, &spec.parse_word("e")?, &aa)?;
    let bh = coset(&ball, &spec.parse_word("b")?, &aa)?;
    let member = |v: usize| h.contains(v) || bh.contains(v);
    let b = ball.lookup(&spec.parse_word("b")?).unwrap();
    let far = ball.lookup(&spec.parse_word("baa")?).unwrap();
    for a0 in [1, 2, 3] {
        let r = fg_probe(&ball, member, a0, &[(0, b), (0, far)])?;
        let hits: Vec<bool> = r.pairs.iter().map(|p| p.connected).collect();
        println!("a0={}: connected {:?}", a0, hits);
    }
    Ok(())
}
