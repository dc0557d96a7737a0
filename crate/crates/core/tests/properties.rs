//! Property tests for words, semidirect products, roots, conjugacy,
//! profiles, Rips complexes, constants and loop removal.

use std::sync::Arc;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use coarse_geom::cayley::{bfs, build_ball, CayleyBall, VertexSet};
use coarse_geom::coarse::{rips_components, ud_profile, ExplicitMap};
use coarse_geom::constants::{appendix_chain, lemma31_x1, PhiSpec};
use coarse_geom::freebycyclic::{conjugator_solve, free_root, reduced_words};
use coarse_geom::presentation::{catalog, Family, FbcElement, GroupSpec, Letter, NormalFormOracle, Semidirect, Word};
use coarse_geom::quasiline::embed_line;

fn word_strategy(rank: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..2 * rank, 0..=max_len)
        .prop_map(|codes| Word::from_letters(codes.into_iter().map(Letter::from_code).collect()))
}

proptest! {
    #[test]
    fn reduction_is_idempotent(w in word_strategy(3, 20)) {
        let r = w.reduced();
        prop_assert!(r.is_reduced());
        prop_assert_eq!(r.reduced(), r.clone());
        prop_assert!(w.concat(&w.inverse()).reduced().is_empty());
    }

    #[test]
    fn cyclic_decomposition_recomposes(w in word_strategy(2, 16)) {
        let w = w.reduced();
        let (u, core) = w.cyclic_decomposition();
        prop_assert_eq!(u.concat(&core).concat(&u.inverse()), w);
        prop_assert!(core.is_cyclically_reduced() || core.is_empty());
    }

    #[test]
    fn root_powers_back(w in word_strategy(2, 10)) {
        let w = w.reduced();
        prop_assume!(!w.is_empty());
        let r = free_root(&w).unwrap();
        prop_assert_eq!(r.root.pow_reduced(r.exponent as i64), w);
        prop_assert_eq!(free_root(&r.core).unwrap().exponent, 1);
    }

    #[test]
    fn loop_removal_keeps_endpoints(seed in any::<u64>(), steps in 1usize..80) {
        let ball = f2_ball();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut walk = vec![rng.gen_range(0..ball.len())];
        for _ in 0..steps {
            let nbrs: Vec<usize> = ball.neighbors(*walk.last().unwrap()).collect();
            walk.push(nbrs[rng.gen_range(0..nbrs.len())]);
        }
        let line = embed_line(ball, &walk).unwrap();
        let seen: std::collections::HashSet<usize> = line.vertices.iter().copied().collect();
        prop_assert_eq!(seen.len(), line.len());
        prop_assert!(line.vertices.iter().all(|v| walk.contains(v)));
        prop_assert_eq!(line.vertices.first(), walk.first());
        prop_assert_eq!(line.vertices.last(), walk.last());
    }

    #[test]
    fn rips_refines(d in 0usize..4, extra in 0usize..3, picks in prop::collection::vec(0usize..161, 1..20)) {
        let ball = f2_ball();
        let s: VertexSet = picks.into_iter().collect();
        let fine = rips_components(ball, &s, d);
        let coarse = rips_components(ball, &s, d + extra);
        prop_assert!(fine.len() >= coarse.len());
        for c in &fine {
            prop_assert!(coarse.iter().any(|k| c.iter().all(|v| k.contains(v))));
        }
    }

    #[test]
    fn constants_are_strict(n in 0u64..6, m in 0u64..6, slope in 1u64..3, c in 0u64..3, bump in 1u64..5) {
        let phi = PhiSpec::Affine { s: slope, c };
        let base = appendix_chain(&phi, n, m, 1_000).unwrap();
        let chain = appendix_chain(&phi, n, m, base.r1 + bump).unwrap();
        prop_assert!(chain.inequalities.iter().all(|i| i.holds));
        let x2 = m;
        prop_assert!(lemma31_x1(&phi, n, x2).unwrap() > x2);
    }
}

fn f2_ball() -> &'static CayleyBall {
    use std::sync::OnceLock;
    static BALL: OnceLock<CayleyBall> = OnceLock::new();
    BALL.get_or_init(|| build_ball(&Arc::new(NormalFormOracle::new(GroupSpec::free(2)).unwrap()), 4).unwrap())
}

#[test]
fn root_of_power_for_short_words() {
    for w in reduced_words(2, 4).into_iter().skip(1) {
        let base = free_root(&w).unwrap();
        for k in 1..=3 {
            let r = free_root(&w.pow_reduced(k)).unwrap();
            assert_eq!(r.root, base.root);
            assert_eq!(r.exponent, base.exponent * k as usize);
        }
    }
}

/// Brute force: some rotation of one cyclic reduction spells the other.
fn rotations_agree(x: &Word, y: &Word) -> bool {
    let strip = |w: &Word| {
        let mut v = w.reduced().letters().to_vec();
        while v.len() >= 2 && v[0] == v[v.len() - 1].inverse() {
            v.remove(0);
            v.pop();
        }
        v
    };
    let (a, b) = (strip(x), strip(y));
    if a.len() != b.len() {
        return false;
    }
    (0..a.len()).any(|i| {
        let mut r = a[i..].to_vec();
        r.extend_from_slice(&a[..i]);
        r == b
    })
}

#[test]
fn conjugacy_matches_rotation_oracle() {
    let words: Vec<Word> = reduced_words(2, 4).into_iter().skip(1).collect();
    for x in &words {
        for y in &words {
            let sol = conjugator_solve(x, y).unwrap();
            assert_eq!(sol.is_some(), rotations_agree(x, y), "{:?} {:?}", x, y);
            if let Some(c) = sol {
                assert_eq!(c.m0.mul_reduced(x).mul_reduced(&c.m0.inverse()), y.clone());
            }
        }
    }
}

#[test]
fn semidirect_is_associative_and_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for name in ["f2_swap", "f2_fib", "f2xz"] {
        let spec = catalog::builtin(name).unwrap();
        let Family::FreeByCyclic { automorphism } = &spec.family else { unreachable!() };
        let sd = Semidirect::new(automorphism).unwrap();
        let random = |rng: &mut ChaCha8Rng| {
            let len = rng.gen_range(0..6);
            let f = Word::from_letters((0..len).map(|_| Letter::from_code(rng.gen_range(0..4))).collect()).reduced();
            FbcElement { f, l: rng.gen_range(-3..=3) }
        };
        for _ in 0..10_000 / 3 {
            let (x, y, z) = (random(&mut rng), random(&mut rng), random(&mut rng));
            assert_eq!(sd.mul(&sd.mul(&x, &y), &z), sd.mul(&x, &sd.mul(&y, &z)));
            assert_eq!(sd.from_word(&sd.to_word(&x)), x);
            assert_eq!(sd.mul(&x, &sd.inverse(&x)), FbcElement::identity());
        }
    }
}

#[test]
fn profiles_of_random_homomorphisms() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let f2 = Arc::new(NormalFormOracle::new(GroupSpec::free(2)).unwrap());
    let z2 = Arc::new(NormalFormOracle::new(GroupSpec::free_abelian(2)).unwrap());
    let (src, dst) = (build_ball(&f2, 4).unwrap(), build_ball(&z2, 12).unwrap());
    let dst_f2 = build_ball(&f2, 8).unwrap();
    for _ in 0..20 {
        let mut img = || {
            let len = rng.gen_range(1..=3);
            Word::from_letters((0..len).map(|_| Letter::from_code(rng.gen_range(0..4))).collect())
        };
        let (x, y) = (img(), img());
        for (target, ball) in [(&z2, &dst), (&f2, &dst_f2)] {
            let Ok(map) = ExplicitMap::homomorphism(&f2, target, vec![x.clone(), y.clone()]) else { continue };
            let Ok(p) = ud_profile(&map, &src, ball, 4) else { continue };
            assert!(p.check_invariants());
            let lip = map.lipschitz().unwrap();
            for (r, v) in p.big_phi.iter().enumerate() {
                if let Some(v) = v {
                    assert!(*v <= lip * r);
                }
            }
        }
    }
}

#[test]
fn constants_are_monotone() {
    let phis = [PhiSpec::identity(), PhiSpec::Affine { s: 2, c: 1 }];
    for phi in &phis {
        for n in 0..4 {
            for x2 in 0..4 {
                let v = lemma31_x1(phi, n, x2).unwrap();
                assert!(lemma31_x1(phi, n + 1, x2).unwrap() >= v);
                assert!(lemma31_x1(phi, n, x2 + 1).unwrap() >= v);
            }
            for m in 0..4 {
                let r2 = 500;
                let c = appendix_chain(phi, n, m, r2).unwrap();
                for d in [appendix_chain(phi, n + 1, m, r2).unwrap(), appendix_chain(phi, n, m + 1, r2).unwrap(), appendix_chain(phi, n, m, r2 + 1).unwrap()] {
                    assert!(d.big_r >= c.big_r && d.k1 >= c.k1 && d.r1 >= c.r1 && d.k >= c.k);
                }
            }
        }
    }
}

#[test]
fn in_ball_distance_is_a_metric() {
    let ball = f2_ball();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..30 {
        let (u, v, w) = (rng.gen_range(0..ball.len()), rng.gen_range(0..ball.len()), rng.gen_range(0..ball.len()));
        let (du, dv) = (bfs(ball, [u], None), bfs(ball, [v], None));
        assert_eq!(du[v], dv[u]);
        assert!(du[w] <= du[v] + dv[w]);
    }
}

#[test]
fn automorphism_powers_compose() {
    let fib = catalog::builtin("f2_fib").unwrap();
    let Family::FreeByCyclic { automorphism } = &fib.family else { unreachable!() };
    let inv = automorphism.inverted().unwrap();
    for w in reduced_words(2, 3) {
        assert_eq!(inv.apply(&automorphism.apply(&w).unwrap()).unwrap(), w);
        assert_eq!(
            automorphism.power(3).apply(&w).unwrap(),
            automorphism.apply(&automorphism.power(2).apply(&w).unwrap()).unwrap()
        );
    }
}
