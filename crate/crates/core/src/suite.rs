//! The acceptance corpus: twelve fixed checks with pinned parameters,
//! seeds and time budgets.

use std::collections::HashSet;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cayley::{
    bfs, build_ball, conjugate_subgroup, cyclic_subgroup, distance, hausdorff, CayleyBall, VertexSet,
};
use crate::coarse::{sloped_line_walk, ud_profile, ExplicitMap};
use crate::commensurizer::{comm_members, comm_score, coset_cover_test, within_hausdorff, CommSchedule, CommVerdict};
use crate::complement::{coend_estimate, CoendVerdict, MarginRule};
use crate::constants::{appendix_chain, lemma31_x1, recheck, PhiSpec};
use crate::error::Result;
use crate::freebycyclic::{prop93_check, unique_root_check, virtually_direct_verdict, FbcOutcome, KStatus};
use crate::presentation::{catalog, FreeAutomorphism, GroupSpec, Letter, NormalFormOracle, Word};
use crate::quasiline::{axis_quasiline, embed_line, quasiline_ends};
use crate::unionfind::UnionFind;

/// Base seed; criterion `i` uses `SEED + i`.
pub const SEED: u64 = 0x5eed_2024;

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub title: &'static str,
    /// Correct and within budget.
    pub passed: bool,
    pub correct: bool,
    pub elapsed_ms: u128,
    pub budget_ms: u128,
    pub detail: String,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "[{}] criterion {:>2}: {} ({} ms / {} ms) {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.elapsed_ms,
            self.budget_ms,
            self.detail
        )
    }
}

pub const TITLES: [&str; 12] = [
    "ball sizes",
    "coend stability in Z^2",
    "infinite coends in F2 x Z",
    "commensurizer membership and symmetry",
    "coset covering vs Hausdorff",
    "root uniqueness",
    "commuting criterion biconditional",
    "virtually-direct verdicts",
    "irrational slope line",
    "distortion in BS(1,2)",
    "quasi-line invariants",
    "constants",
];

const BUDGETS_S: [u64; 12] = [5, 10, 60, 20, 20, 10, 10, 10, 30, 60, 30, 1];

pub fn run_criterion(id: u8) -> CriterionResult {
    assert!((1..=12).contains(&id), "criteria are numbered 1 to 12");
    let start = Instant::now();
    let outcome = match id {
        1 => ball_sizes(),
        2 => coend_stability(),
        3 => infinite_coends(),
        4 => commensurizer(),
        5 => cover_equivalence(),
        6 => root_uniqueness(),
        7 => commuting_criterion(),
        8 => fbc_verdicts(),
        9 => irrational_slope(),
        10 => distortion(),
        11 => quasiline_invariants(),
        _ => constants(),
    };
    let elapsed = start.elapsed();
    let budget = Duration::from_secs(BUDGETS_S[id as usize - 1]);
    let (correct, detail) = outcome.unwrap_or_else(|e| (false, format!("error: {}", e)));
    CriterionResult {
        id,
        title: TITLES[id as usize - 1],
        passed: correct && elapsed <= budget,
        correct,
        elapsed_ms: elapsed.as_millis(),
        budget_ms: budget.as_millis(),
        detail,
    }
}

pub fn run_suite() -> Vec<CriterionResult> {
    (1..=12).map(run_criterion).collect()
}

type Outcome = Result<(bool, String)>;

fn oracle(spec: GroupSpec) -> Result<Arc<NormalFormOracle>> {
    Ok(Arc::new(NormalFormOracle::new(spec)?))
}

fn parse(o: &NormalFormOracle, s: &str) -> Result<Word> {
    o.spec().parse_word(s)
}

fn rng(id: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED + id)
}

fn random_reduced(rng: &mut ChaCha8Rng, rank: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    let mut w = Word::empty();
    while w.len() < len {
        let x = Letter::from_code(rng.gen_range(0..2 * rank));
        if w.letters().last() != Some(&x.inverse()) {
            w.push(x);
        }
    }
    w
}

fn ball_sizes() -> Outcome {
    let f2 = build_ball(&oracle(GroupSpec::free(2))?, 8)?;
    let z2 = build_ball(&oracle(GroupSpec::free_abelian(2))?, 40)?;
    let f2_ok = (0..=8u32).all(|r| f2.sub_ball(r as usize).len() == 2 * 3usize.pow(r) - 1);
    let z2_ok = (0..=40usize).all(|r| z2.sub_ball(r).len() == 2 * r * r + 2 * r + 1);
    Ok((f2_ok && z2_ok, format!("F2 |B_8| = {}, Z^2 |B_40| = {}", f2.len(), z2.len())))
}

fn coend_stability() -> Outcome {
    let z2 = oracle(GroupSpec::free_abelian(2))?;
    let schedule = [(1, 20), (2, 30), (3, 40)];
    let mut ok = true;
    let mut detail = Vec::new();
    for h in ["a", "aa"] {
        let est = coend_estimate(&z2, &parse(&z2, h)?, &schedule, MarginRule::Default)?;
        ok &= est.verdict == CoendVerdict::Stable(2);
        detail.push(format!("<{}>: {:?} {:?}", h, est.counts(), est.verdict));
    }
    Ok((ok, detail.join("; ")))
}

/// Independent recount: complement components of the closed
/// `r`-neighbourhood of the axis that reach the outer sphere and stray
/// more than `margin` from it, by union-find over edges.
pub fn branch_count_oracle(ball: &CayleyBall, axis: &VertexSet, r: usize, margin: usize) -> usize {
    let to_axis = bfs(ball, axis.iter(), None);
    let inside = |v: usize| to_axis[v] as usize <= r;
    let mut uf = UnionFind::new(ball.len());
    for v in 0..ball.len() {
        if inside(v) {
            continue;
        }
        for u in ball.neighbors(v) {
            if !inside(u) {
                uf.union(u, v);
            }
        }
    }
    let mut touches = HashSet::new();
    let mut far = HashSet::new();
    for v in (0..ball.len()).filter(|&v| !inside(v)) {
        let root = uf.find(v);
        if ball.dist0(v) == ball.radius() {
            touches.insert(root);
        }
        if to_axis[v] as usize - r > margin {
            far.insert(root);
        }
    }
    touches.intersection(&far).count()
}

fn infinite_coends() -> Outcome {
    let g = oracle(GroupSpec::free_times_z(2))?;
    let t = parse(&g, "t")?;
    let schedule = [(1, 5), (2, 6), (3, 7)];
    let margin = 1;
    let est = coend_estimate(&g, &t, &schedule, MarginRule::Fixed(margin))?;
    let counts = est.counts();
    let mut oracle_counts = Vec::new();
    for &(r, big_r) in &schedule {
        let ball = build_ball(&g, big_r)?;
        let axis = cyclic_subgroup(&ball, &t)?;
        oracle_counts.push(branch_count_oracle(&ball, &axis, r, margin));
    }
    let formula: Vec<usize> = schedule.iter().map(|&(r, _)| 4 * 3usize.pow(r as u32 - 1)).collect();
    let ok = est.verdict == CoendVerdict::Growing && counts == oracle_counts && counts == formula;
    Ok((
        ok,
        format!(
            "counts {:?}, union-find recount {:?}, 4*3^(r-1) = {:?}, verdict {:?}",
            counts, oracle_counts, formula, est.verdict
        ),
    ))
}

fn commensurizer() -> Outcome {
    let f2 = oracle(GroupSpec::free(2))?;
    let h = parse(&f2, "aa")?;
    let schedule = CommSchedule::new(&f2, &[6, 8, 10])?;
    let report = comm_members(&schedule, &h)?;
    let small = schedule.smallest();
    let mut members_ok = true;
    for (v, e) in report.entries.iter().enumerate() {
        let word = small.word(v);
        let is_power = word.letters().iter().all(|l| l.generator() == 0);
        let expect = if is_power {
            CommVerdict::MemberEvidence
        } else {
            CommVerdict::NonmemberEvidence
        };
        members_ok &= e.verdict == expect;
    }

    let mut sym_ok = true;
    let mut rng = rng(4);
    let z2 = oracle(GroupSpec::free_abelian(2))?;
    let z2_schedule = CommSchedule::new(&z2, &[10, 14, 18])?;
    let cases = [(&f2, &schedule, h.clone()), (&z2, &z2_schedule, parse(&z2, "a")?)];
    for (o, sched, h) in cases {
        let small = sched.smallest();
        for _ in 0..100 {
            let g = small.word(rng.gen_range(0..small.len())).clone();
            let s = comm_score(sched, &h, &g)?.values();
            let si = comm_score(sched, &h, &o.inverse(&g))?.values();
            sym_ok &= s == si;
        }
    }
    Ok((
        members_ok && sym_ok,
        format!(
            "{} member-evidence vertices in B_6 ({}), symmetry {}",
            report.members.len(),
            report.members.join(" "),
            if sym_ok { "holds" } else { "fails" }
        ),
    ))
}

fn cover_equivalence() -> Outcome {
    let mut rng = rng(5);
    let families = [(GroupSpec::free(2), 8usize, "a"), (GroupSpec::free_abelian(2), 20, "a"), (GroupSpec::free_times_z(2), 6, "t")];
    let mut mismatches = 0;
    let mut both = 0;
    let mut total = 0;
    for (spec, radius, h) in families {
        let o = oracle(spec)?;
        let ball = build_ball(&o, radius)?;
        let h = parse(&o, h)?;
        let hs = cyclic_subgroup(&ball, &h)?;
        let inner = ball.sub_ball(radius / 2).len();
        for _ in 0..50 {
            let g = ball.word(rng.gen_range(0..inner)).clone();
            let m = rng.gen_range(0..=radius / 4);
            let cover = coset_cover_test(&ball, &h, &g, m)?;
            let metric = within_hausdorff(&ball, &hs, &conjugate_subgroup(&ball, &g, &h)?, m);
            mismatches += (cover.both() != metric) as usize;
            both += cover.both() as usize;
            total += 1;
        }
    }
    Ok((
        mismatches == 0,
        format!("{} instances, {} covered both ways, {} mismatches", total, both, mismatches),
    ))
}

fn root_uniqueness() -> Outcome {
    let rep = unique_root_check(2, 4, &[2, 3]);
    Ok((
        rep.counterexamples.is_empty(),
        format!("{} words, {} pairs, {} counterexamples", rep.words, rep.pairs_checked, rep.counterexamples.len()),
    ))
}

fn sample_automorphisms() -> Result<Vec<(&'static str, FreeAutomorphism)>> {
    let swap = catalog::builtin("f2_swap")?;
    let fib = catalog::builtin("f2_fib")?;
    let aut = |spec: &GroupSpec| match &spec.family {
        crate::presentation::Family::FreeByCyclic { automorphism } => automorphism.clone(),
        _ => unreachable!("catalog entries are free-by-cyclic"),
    };
    Ok(vec![
        ("id", FreeAutomorphism::identity(2)),
        ("swap", aut(&swap)),
        ("a->ab,b->a", aut(&fib)),
    ])
}

fn commuting_criterion() -> Outcome {
    let mut rng = rng(7);
    let mut disagreements = 0;
    let mut positives = 0;
    for (_, aut) in sample_automorphisms()? {
        for _ in 0..200 {
            let f = random_reduced(&mut rng, 2, 4);
            let g = random_reduced(&mut rng, 2, 4);
            let k = rng.gen_range(1..=4);
            let r = prop93_check(&f, &aut, &g, k)?;
            disagreements += (r.lhs_holds != r.rhs_holds) as usize;
            positives += r.lhs_holds as usize;
        }
    }
    Ok((
        disagreements == 0,
        format!("600 instances, {} commuting, {} disagreements", positives, disagreements),
    ))
}

/// Cyclic reduction by stripping inverse end letters, then every rotation
/// compared as a string: the conjugacy oracle for negative certificates.
fn cyclically_equal(x: &Word, y: &Word) -> bool {
    let strip = |w: &Word| {
        let mut v: Vec<Letter> = w.reduced().letters().to_vec();
        while v.len() >= 2 && v[0] == v[v.len() - 1].inverse() {
            v.remove(0);
            v.pop();
        }
        v
    };
    let (a, b) = (strip(x), strip(y));
    a.len() == b.len() && (0..a.len().max(1)).any(|i| a[i..].iter().chain(&a[..i]).eq(b.iter()))
}

fn fbc_verdicts() -> Outcome {
    let auts = sample_automorphisms()?;
    let b = Word::letter(Letter::new(1, false));
    let conj = FreeAutomorphism::conjugation(2, &b)?;
    let expect = [
        (&auts[0].1, 8, Some((1, Word::empty()))),
        (&auts[1].1, 8, Some((2, Word::empty()))),
        (&conj, 8, Some((1, b))),
        (&auts[2].1, 16, None),
    ];
    let mut ok = true;
    let mut detail = Vec::new();
    for (aut, k_max, want) in expect {
        let v = virtually_direct_verdict(aut, k_max)?;
        match (&v.outcome, want) {
            (FbcOutcome::VirtuallyDirect { k, m }, Some((wk, wm))) => {
                ok &= *k == wk && *m == wm;
                let beta = aut.power(*k);
                for i in 0..2 {
                    let x = Word::letter(Letter::new(i, false));
                    ok &= beta.apply(&x)? == m.mul_reduced(&x).mul_reduced(&m.inverse());
                }
                detail.push(format!("virtually_direct({}, {:?})", k, m));
            }
            (FbcOutcome::NotVirtuallyDirectUpToBound, None) => {
                let mut valid = 0;
                for c in &v.certificates {
                    let beta = aut.power(c.k);
                    if let KStatus::NotConjugate { generator } = c.status {
                        let x = Word::letter(Letter::new(generator, false));
                        valid += !cyclically_equal(&x, &beta.images()[generator]) as usize;
                    }
                }
                ok &= v.certificates.len() == 16 && valid == 16;
                detail.push(format!("not_virtually_direct_up_to_bound ({} valid certificates)", valid));
            }
            (other, _) => {
                ok = false;
                detail.push(format!("unexpected {:?}", other));
            }
        }
    }
    Ok((ok, detail.join("; ")))
}

fn irrational_slope() -> Outcome {
    let z2 = oracle(GroupSpec::free_abelian(2))?;
    let balls = [20, 40, 60].iter().map(|&r| build_ball(&z2, r)).collect::<Result<Vec<_>>>()?;
    let lines = balls
        .iter()
        .map(|b| Ok(sloped_line_walk(b, 2f64.sqrt())?.into_iter().collect::<VertexSet>()))
        .collect::<Result<Vec<_>>>()?;
    let mut failing = Vec::new();
    let mut checked = 0;
    for p in -5i32..=5 {
        for q in -5i32..=5 {
            if (p, q) == (0, 0) {
                continue;
            }
            let mut h = Word::empty();
            for _ in 0..p.abs() {
                h.push(Letter::new(0, p < 0));
            }
            for _ in 0..q.abs() {
                h.push(Letter::new(1, q < 0));
            }
            let values = balls
                .iter()
                .zip(&lines)
                .map(|(b, l)| Ok(hausdorff(b, l, &cyclic_subgroup(b, &h)?)?.value))
                .collect::<Result<Vec<_>>>()?;
            checked += 1;
            let increasing = values.windows(2).all(|w| match (w[0], w[1]) {
                (Some(a), Some(b)) => a < b,
                _ => false,
            });
            if !increasing {
                failing.push(format!("({},{}): {:?}", p, q, values.iter().flatten().collect::<Vec<_>>()));
            }
        }
    }
    let shown: Vec<_> = failing.iter().take(4).cloned().collect();
    Ok((
        failing.is_empty(),
        format!("{} of {} subgroups not strictly increasing {}", failing.len(), checked, shown.join(" ")),
    ))
}

fn distortion() -> Outcome {
    let bs = oracle(catalog::builtin("bs12")?)?;
    let dst = build_ball(&bs, 9)?;
    let a16 = dst.lookup(&parse(&bs, &"a".repeat(16))?);
    let d = match a16 {
        Some(v) => Some(distance(&dst, 0, v)?.value),
        None => None,
    };
    let z = oracle(GroupSpec::free(1))?;
    let src = build_ball(&z, 24)?;
    let incl = ExplicitMap::homomorphism(&z, &bs, vec![parse(&bs, "a")?])?;
    let p = ud_profile(&incl, &src, &dst, 24)?;
    let phi16 = p.phi[16];
    let f2 = oracle(GroupSpec::free(2))?;
    let control = ExplicitMap::homomorphism(&z, &f2, vec![parse(&f2, "aa")?])?;
    let q = ud_profile(&control, &build_ball(&z, 5)?, &build_ball(&f2, 10)?, 5)?;
    let lip = |p: &crate::coarse::UdProfile, l: usize| {
        p.big_phi.iter().enumerate().all(|(r, v)| v.is_none_or(|v| v <= l * r))
    };
    let linear = lip(&p, incl.lipschitz().unwrap_or(0)) && lip(&q, control.lipschitz().unwrap_or(0));
    let ok = d == Some(9) && phi16.is_some_and(|v| v <= 9) && linear && p.check_invariants() && q.check_invariants();
    Ok((
        ok,
        format!("d(e, a^16) = {:?} (expected 9), phi(16) = {:?}, linear upper bounds {}", d, phi16, linear),
    ))
}

fn random_walk(rng: &mut ChaCha8Rng, ball: &CayleyBall, steps: usize) -> Vec<usize> {
    let mut walk = vec![rng.gen_range(0..ball.len())];
    while walk.len() <= steps {
        let v = *walk.last().unwrap();
        let nbrs: Vec<usize> = ball.neighbors(v).collect();
        walk.push(nbrs[rng.gen_range(0..nbrs.len())]);
    }
    walk
}

fn quasiline_invariants() -> Outcome {
    let mut rng = rng(11);
    let f2 = oracle(GroupSpec::free(2))?;
    let z2 = oracle(GroupSpec::free_abelian(2))?;
    let fz = oracle(GroupSpec::free_times_z(2))?;
    let (bf, bz) = (build_ball(&f2, 6)?, build_ball(&z2, 10)?);
    let mut walks_ok = 0;
    for i in 0..1000 {
        let ball = if i % 2 == 0 { &bf } else { &bz };
        let steps = rng.gen_range(1..=60);
        let walk = random_walk(&mut rng, ball, steps);
        let line = embed_line(ball, &walk)?;
        let image: HashSet<usize> = walk.iter().copied().collect();
        let distinct: HashSet<usize> = line.vertices.iter().copied().collect();
        let ok = line.injective
            && distinct.len() == line.len()
            && line.vertices.iter().all(|v| image.contains(v))
            && line.vertices.first() == walk.first()
            && line.vertices.last() == walk.last()
            && line.vertices.windows(2).all(|p| ball.neighbors(p[0]).any(|u| u == p[1]));
        walks_ok += ok as usize;
    }

    let axes = [(&z2, 12, "a", 1), (&f2, 6, "a", 0), (&fz, 6, "t", 1)];
    let mut ends = Vec::new();
    let mut distortion_ok = true;
    for (o, radius, h, r) in axes {
        let ball = build_ball(o, radius)?;
        let q = axis_quasiline(&ball, &parse(o, h)?, r)?.quasi_line;
        distortion_ok &= q.distortion.iter().all(|(&t, &d)| d >= t);
        ends.push(quasiline_ends(&ball, &q, 1)?);
    }
    let ok = walks_ok == 1000 && distortion_ok && ends == [2, 2, 2];
    Ok((
        ok,
        format!("{}/1000 walks, D(t) >= t {}, ends {:?}", walks_ok, distortion_ok, ends),
    ))
}

fn constants() -> Outcome {
    let id = PhiSpec::identity();
    let x1 = lemma31_x1(&id, 2, 3)?;
    let c = appendix_chain(&id, 1, 2, 25)?;
    let rechecked = recheck(&c)?.iter().all(|i| i.holds);
    let ok = x1 == 13 && (c.big_r, c.k1, c.r1, c.k) == (5, 17, 19, 44) && rechecked;
    Ok((
        ok,
        format!("x1 = {}, R = {}, K1 = {}, r1 = {}, K = {}, recheck {}", x1, c.big_r, c.k1, c.r1, c.k, rechecked),
    ))
}

