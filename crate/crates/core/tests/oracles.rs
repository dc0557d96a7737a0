//! Independent oracles: Stallings folding for subgroup membership in F2 and
//! a union-find recount of complementary components.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use coarse_geom::cayley::{bfs, build_ball, coset, cyclic_subgroup, CayleyBall};
use coarse_geom::complement::{components_classify, Classification};
use coarse_geom::presentation::{GroupSpec, NormalFormOracle, Word};
use coarse_geom::quasiline::{axis_quasiline, QuasiLine};
use coarse_geom::suite::branch_count_oracle;
use coarse_geom::unionfind::UnionFind;

/// Folded core graph of a subgroup of a free group; base vertex 0.
struct Stallings {
    // edges[v][code] = target
    edges: Vec<HashMap<usize, usize>>,
}

impl Stallings {
    fn new(gens: &[Word]) -> Stallings {
        let mut edges: Vec<HashMap<usize, usize>> = vec![HashMap::new()];
        let add = |edges: &mut Vec<HashMap<usize, usize>>, from: usize, code: usize, to: usize| {
            edges[from].insert(code, to);
            edges[to].insert(code ^ 1, from);
        };
        let mut pending: Vec<(usize, usize, usize)> = Vec::new();
        for g in gens {
            let letters = g.reduced();
            let mut cur = 0;
            for (i, l) in letters.letters().iter().enumerate() {
                let next = if i + 1 == letters.len() {
                    0
                } else {
                    edges.push(HashMap::new());
                    edges.len() - 1
                };
                pending.push((cur, l.code(), next));
                cur = next;
            }
        }
        // Fold by union-find on vertices until labels are deterministic.
        let n = edges.len();
        let mut uf = UnionFind::new(n);
        let mut changed = true;
        while changed {
            changed = false;
            let mut out: HashMap<(usize, usize), usize> = HashMap::new();
            for &(a, c, b) in &pending {
                for (x, code, y) in [(a, c, b), (b, c ^ 1, a)] {
                    let (x, y) = (uf.find(x), uf.find(y));
                    match out.get(&(x, code)) {
                        Some(&z) if uf.find(z) != y => {
                            uf.union(z, y);
                            changed = true;
                        }
                        Some(_) => {}
                        None => {
                            out.insert((x, code), y);
                        }
                    }
                }
            }
        }
        let mut folded: Vec<HashMap<usize, usize>> = vec![HashMap::new(); n];
        for &(a, c, b) in &pending {
            let (a, b) = (uf.find(a), uf.find(b));
            add(&mut folded, a, c, b);
        }
        let base = uf.find(0);
        let mut s = Stallings { edges: folded };
        s.edges.swap(0, base);
        for m in s.edges.iter_mut() {
            for t in m.values_mut() {
                if *t == base {
                    *t = 0;
                } else if *t == 0 {
                    *t = base;
                }
            }
        }
        s
    }

    fn contains(&self, w: &Word) -> bool {
        let mut v = 0;
        for l in w.reduced().letters() {
            match self.edges[v].get(&l.code()) {
                Some(&u) => v = u,
                None => return false,
            }
        }
        v == 0
    }
}

fn f2() -> Arc<NormalFormOracle> {
    Arc::new(NormalFormOracle::new(GroupSpec::free(2)).unwrap())
}

#[test]
fn stallings_sanity() {
    let w = |s: &str| f2().spec().parse_word(s).unwrap();
    let h = Stallings::new(&[w("aa"), w("bab")]);
    assert!(h.contains(&w("aabab")));
    assert!(h.contains(&w("BABaa")));
    assert!(!h.contains(&w("a")));
    assert!(!h.contains(&w("ba")));
}

#[test]
fn cyclic_subgroups_match_folding() {
    let o = f2();
    let ball = build_ball(&o, 7).unwrap();
    for h in ["a", "aa", "ab", "abAB", "aab", "baB", "abab"] {
        let hw = o.spec().parse_word(h).unwrap();
        let oracle = Stallings::new(std::slice::from_ref(&hw));
        let set = cyclic_subgroup(&ball, &hw).unwrap();
        for v in 0..ball.len() {
            assert_eq!(set.contains(v), oracle.contains(ball.word(v)), "<{}> at {}", h, ball.format(v));
        }
        for g in ["b", "ab", "BA"] {
            let gw = o.spec().parse_word(g).unwrap();
            let cs = coset(&ball, &gw, &hw).unwrap();
            for v in 0..ball.len() {
                let back = gw.inverse().concat(ball.word(v));
                assert_eq!(cs.contains(v), oracle.contains(&back), "{}<{}>", g, h);
            }
        }
    }
}

/// Components of the complement of the support by union-find, classified
/// with a separate breadth-first search.
fn recount(ball: &CayleyBall, q: &QuasiLine, margin: usize) -> (usize, usize) {
    let inside: HashSet<usize> = q.support.iter().collect();
    let mut uf = UnionFind::new(ball.len());
    for v in (0..ball.len()).filter(|v| !inside.contains(v)) {
        for u in ball.neighbors(v).filter(|u| !inside.contains(u)) {
            uf.union(u, v);
        }
    }
    let d = bfs(ball, q.support.iter(), None);
    let mut roots: HashMap<usize, (bool, u32)> = HashMap::new();
    for v in (0..ball.len()).filter(|v| !inside.contains(v)) {
        let e = roots.entry(uf.find(v)).or_insert((false, 0));
        e.0 |= ball.dist0(v) == ball.radius();
        e.1 = e.1.max(d[v]);
    }
    let essential = roots.values().filter(|(t, far)| *t && *far as usize > margin).count();
    (essential, roots.len() - essential)
}

#[test]
fn classification_matches_recount() {
    let cases: [(GroupSpec, usize, &str, usize); 5] = [
        (GroupSpec::free(2), 6, "a", 0),
        (GroupSpec::free(2), 6, "ab", 1),
        (GroupSpec::free_abelian(2), 10, "ab", 1),
        (GroupSpec::free_times_z(2), 5, "t", 1),
        (GroupSpec::free_times_z(2), 5, "at", 0),
    ];
    for (spec, radius, h, r) in cases {
        let o = Arc::new(NormalFormOracle::new(spec).unwrap());
        let ball = build_ball(&o, radius).unwrap();
        let q = axis_quasiline(&ball, &o.spec().parse_word(h).unwrap(), r).unwrap().quasi_line;
        for margin in 1..=3 {
            let rep = components_classify(&ball, &q, margin).unwrap();
            let bounded = rep.components.iter().filter(|c| c.class == Classification::Bounded).count();
            assert_eq!((rep.essential_count(), bounded), recount(&ball, &q, margin), "{} m={}", h, margin);
        }
    }
}

#[test]
fn branch_counts_in_f2_times_z() {
    let o = Arc::new(NormalFormOracle::new(GroupSpec::free_times_z(2)).unwrap());
    let t = o.spec().parse_word("t").unwrap();
    for (r, radius) in [(1, 5), (2, 6), (3, 7)] {
        let ball = build_ball(&o, radius).unwrap();
        let axis = cyclic_subgroup(&ball, &t).unwrap();
        // One branch per reduced free prefix of length r + 1.
        assert_eq!(branch_count_oracle(&ball, &axis, r, 1), 4 * 3usize.pow(r as u32));
    }
}
