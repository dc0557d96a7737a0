//! Cross-checks the shipped BS(1,2) rewriting system against the faithful
//! affine representation a: x -> x + 1, t: x -> 2x.

use std::collections::HashMap;
use std::sync::Arc;

use coarse_geom::cayley::build_ball;
use coarse_geom::presentation::{catalog, Family, GroupSpec, NormalFormOracle, Word};

/// `x -> 2^k x + num / 2^SHIFT`, exact for every word of length <= 40.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
struct Affine {
    k: i32,
    num: i128,
}

const SHIFT: u32 = 40;

impl Affine {
    const ID: Affine = Affine { k: 0, num: 0 };

    /// `self ∘ other`: apply `other` first, matching right multiplication.
    fn then(self, other: Affine) -> Affine {
        let scaled = if self.k >= 0 {
            other.num << self.k
        } else {
            let s = -self.k;
            assert_eq!(other.num % (1 << s), 0, "precision exhausted");
            other.num >> s
        };
        Affine {
            k: self.k + other.k,
            num: scaled + self.num,
        }
    }
}

fn letter(code: usize) -> Affine {
    match code {
        0 => Affine { k: 0, num: 1 << SHIFT },
        1 => Affine { k: 0, num: -(1 << SHIFT) },
        2 => Affine { k: 1, num: 0 },
        _ => Affine { k: -1, num: 0 },
    }
}

fn eval(w: &Word) -> Affine {
    w.letters().iter().fold(Affine::ID, |acc, l| acc.then(letter(l.code())))
}

fn bs() -> GroupSpec {
    catalog::builtin("bs12").unwrap()
}

#[test]
fn every_rule_holds_in_the_affine_group() {
    let spec = bs();
    let Family::Rewriting { rules, confluence_bound } = &spec.family else { panic!() };
    assert_eq!(rules.len(), 4792);
    assert_eq!(*confluence_bound, Some(20));
    for (l, r) in rules {
        assert_eq!(eval(l), eval(r), "{} -> {}", spec.format_word(l), spec.format_word(r));
        assert!(r.shortlex_cmp(l).is_lt());
    }
}

#[test]
fn ball_matches_affine_enumeration() {
    let oracle = Arc::new(NormalFormOracle::new(bs()).unwrap());
    let ball = build_ball(&oracle, 9).unwrap();
    // Independent BFS over affine maps.
    let mut seen: HashMap<Affine, usize> = HashMap::from([(Affine::ID, 0)]);
    let mut frontier = vec![Affine::ID];
    let mut sizes = vec![1];
    for r in 1..=9 {
        let mut next = Vec::new();
        for g in &frontier {
            for c in 0..4 {
                let h = g.then(letter(c));
                if let std::collections::hash_map::Entry::Vacant(e) = seen.entry(h) {
                    e.insert(r);
                    next.push(h);
                }
            }
        }
        sizes.push(next.len());
        frontier = next;
    }
    assert_eq!(ball.sphere_sizes(), sizes);
    let cumulative: Vec<usize> = (1..=9).map(|r| ball.sub_ball(r).len()).collect();
    assert_eq!(cumulative, [5, 17, 43, 93, 191, 375, 711, 1317, 2403]);
    for v in 0..ball.len() {
        assert_eq!(seen[&eval(ball.word(v))], ball.dist0(v));
    }
}

#[test]
fn distorted_powers() {
    let oracle = Arc::new(NormalFormOracle::new(bs()).unwrap());
    let ball = build_ball(&oracle, 9).unwrap();
    let a = Word::from_signed(&[1]);
    let inside: Vec<i64> = (1..=40).filter(|&n| ball.lookup(&a.pow_reduced(n)).is_some()).collect();
    let mut expect: Vec<i64> = (1..=18).collect();
    expect.extend([20, 24]);
    assert_eq!(inside, expect);
    let a16 = ball.lookup(&a.pow_reduced(16)).unwrap();
    assert_eq!(ball.dist0(a16), 8);
    assert_eq!(eval(&Word::from_signed(&[2, 2, 2, 1, 1, -2, -2, -2])), eval(&a.pow_reduced(16)));
}

/// Rewrites `data/groups/bs12.json` from the affine representation:
/// the rules are the words `v` with `v[..-1]` and `v[1..]` in normal form
/// but `v` not, for `|v| <= 20`.
#[test]
#[ignore = "regenerates a data file"]
fn regenerate_bs12() {
    let names = ['a', 'A', 't', 'T'];
    let mut nf: HashMap<Affine, Vec<usize>> = HashMap::from([(Affine::ID, vec![])]);
    let mut spheres: Vec<Vec<Affine>> = vec![vec![Affine::ID]];
    let bound = 20;
    for _ in 1..=bound {
        let mut cur = Vec::new();
        for g in spheres.last().unwrap() {
            for c in 0..4 {
                let h = g.then(letter(c));
                if !nf.contains_key(&h) {
                    let mut w = nf[g].clone();
                    w.push(c);
                    nf.insert(h, w);
                    cur.push(h);
                }
            }
        }
        cur.sort_by(|x, y| nf[x].cmp(&nf[y]));
        spheres.push(cur);
    }
    let normal: std::collections::HashSet<Vec<usize>> = nf.values().cloned().collect();
    let spell = |w: &[usize]| -> String { w.iter().map(|&c| names[c]).collect() };
    let mut rules = Vec::new();
    for sphere in &spheres[..bound] {
        for g in sphere {
            let w = &nf[g];
            for c in 0..4 {
                let mut v = w.clone();
                v.push(c);
                if normal.contains(&v) || w.last().is_some_and(|&p| p ^ 1 == c) || !normal.contains(&v[1..]) {
                    continue;
                }
                let rhs = &nf[&g.then(letter(c))];
                rules.push(format!("[\"{}\", \"{}\"]", spell(&v), if rhs.is_empty() { "e".into() } else { spell(rhs) }));
            }
        }
    }
    let text = format!(
        "{{\"name\": \"BS(1,2)\", \"family\": \"rewriting\", \"rank\": 2, \"generators\": [\"a\", \"t\"], \"confluence_bound\": {}, \"rules\": [\n{}\n]}}\n",
        bound,
        rules.join(",\n")
    );
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/groups/bs12.json");
    std::fs::write(path, text).unwrap();
}
