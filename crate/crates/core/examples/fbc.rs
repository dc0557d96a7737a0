//! Virtually-direct verdicts for a few free-by-cyclic groups.

use coarse_geom::freebycyclic::{free_root, virtually_direct_verdict};
use coarse_geom::presentation::{Alphabet, FreeAutomorphism, INVERSE_SEARCH_BOUND};

fn main() -> coarse_geom::Result<()> {
    let free = Alphabet::standard(2);
    let with_t = Alphabet::new(vec!['a', 'b', 't']);
    let w = |s: &str| free.parse(s);

    let x = w("abab")?;
    let root = free_root(&x)?;
    println!("root of abab: ({})^{}", free.format(&root.root), root.exponent);

    let cases = [
        ("swap", vec![w("b")?, w("a")?]),
        ("inner by a", vec![w("a")?, w("abA")?]),
        ("fibonacci", vec![w("ab")?, w("a")?]),
    ];
    for (name, images) in cases {
        let aut = FreeAutomorphism::new(2, images)?.with_inverse_search(INVERSE_SEARCH_BOUND);
        let v = virtually_direct_verdict(&aut, 12)?;
        let r = v.report(&with_t);
        println!("{:>10}: {} k={:?} m={:?}", name, r.outcome, r.k, r.m);
    }
    Ok(())
}
