use std::collections::HashMap;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::cayley::{build_ball, coset, cyclic_subgroup, CayleyBall, Hausdorff, VertexSet, Window};
use crate::error::{Error, Result};
use crate::presentation::{NormalFormOracle, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CommVerdict {
    MemberEvidence,
    NonmemberEvidence,
    Inconclusive,
}

/// Member evidence: the last three scores are finite and never increase.
/// Nonmember evidence: the scores increase strictly along the schedule
/// (an infinite score counts as larger than every finite one).
pub fn comm_verdict(scores: &[Option<usize>]) -> CommVerdict {
    let key = |s: &Option<usize>| s.map_or(u64::MAX, |v| v as u64);
    if scores.len() >= 2 && scores.windows(2).all(|w| key(&w[0]) < key(&w[1])) {
        return CommVerdict::NonmemberEvidence;
    }
    if scores.len() >= 3 {
        let tail = &scores[scores.len() - 3..];
        if tail.iter().all(Option::is_some) && tail.windows(2).all(|w| w[1] <= w[0]) {
            return CommVerdict::MemberEvidence;
        }
    }
    CommVerdict::Inconclusive
}

/// Balls for a strictly increasing radius schedule, built once and shared
/// by every score computed against them.
pub struct CommSchedule {
    balls: Vec<CayleyBall>,
}

impl CommSchedule {
    pub fn new(oracle: &Arc<NormalFormOracle>, radii: &[usize]) -> Result<CommSchedule> {
        if radii.is_empty() || radii.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Precondition("radii must be nonempty and strictly increasing".into()));
        }
        let balls = radii.iter().map(|&r| build_ball(oracle, r)).collect::<Result<Vec<_>>>()?;
        Ok(CommSchedule { balls })
    }

    pub fn radii(&self) -> Vec<usize> {
        self.balls.iter().map(CayleyBall::radius).collect()
    }

    pub fn balls(&self) -> &[CayleyBall] {
        &self.balls
    }

    pub fn smallest(&self) -> &CayleyBall {
        &self.balls[0]
    }

    pub fn largest(&self) -> &CayleyBall {
        self.balls.last().unwrap()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CommScore {
    pub g: String,
    pub radii: Vec<usize>,
    pub scores: Vec<Hausdorff>,
    pub verdict: CommVerdict,
}

impl CommScore {
    pub fn values(&self) -> Vec<Option<usize>> {
        self.scores.iter().map(|s| s.value).collect()
    }
}

/// `d_Haus(H, gH)` at one radius, measured inside the lens
/// `B_R(e) ∩ B_R(g)`. Measuring in the lens makes the score invariant
/// under `g -> g^-1`, since left multiplication by `g^-1` carries the
/// lens for `g` onto the lens for `g^-1`.
pub fn score_at(ball: &CayleyBall, subgroup: &VertexSet, g: &Word, h: &Word) -> Result<Hausdorff> {
    let mut window = Window::new(ball, std::slice::from_ref(g));
    let a: VertexSet = subgroup.iter().filter(|&v| window.contains(v)).collect();
    let b: VertexSet = coset(ball, g, h)?.iter().filter(|&v| window.contains(v)).collect();
    if b.is_empty() || a.is_empty() {
        return Err(Error::Precondition(format!(
            "radius {} is too small for {}",
            ball.radius(),
            ball.oracle().spec().format_word(g)
        )));
    }
    window.hausdorff(&a, &b)
}

fn score_with(schedule: &CommSchedule, subgroups: &[VertexSet], h: &Word, g: &Word) -> Result<CommScore> {
    let scores = schedule
        .balls
        .iter()
        .zip(subgroups)
        .map(|(ball, sub)| score_at(ball, sub, g, h))
        .collect::<Result<Vec<_>>>()?;
    let values: Vec<Option<usize>> = scores.iter().map(|s| s.value).collect();
    Ok(CommScore {
        g: schedule.largest().oracle().spec().format_word(g),
        radii: schedule.radii(),
        verdict: comm_verdict(&values),
        scores,
    })
}

pub fn comm_score(schedule: &CommSchedule, h: &Word, g: &Word) -> Result<CommScore> {
    let oracle = schedule.largest().oracle();
    let g = oracle.normal_form(g)?;
    if schedule.largest().index_of(&g).is_none() {
        return Err(Error::Precondition("g lies outside the largest ball".into()));
    }
    let subgroups = schedule
        .balls
        .iter()
        .map(|b| cyclic_subgroup(b, h))
        .collect::<Result<Vec<_>>>()?;
    score_with(schedule, &subgroups, h, &g)
}

#[derive(Clone, Debug, Serialize)]
pub struct CommMembers {
    pub h: String,
    pub radii: Vec<usize>,
    pub entries: Vec<CommScore>,
    pub members: Vec<String>,
    /// Products `g g'` of member-evidence elements with
    /// `|g| + |g'| <= R_min / 2` that came out nonmember-evidence.
    pub closure_violations: Vec<(String, String)>,
    pub epistemic_status: &'static str,
}

/// Scores every vertex of the smallest scheduled ball.
pub fn comm_members(schedule: &CommSchedule, h: &Word) -> Result<CommMembers> {
    let small = schedule.smallest();
    let oracle = small.oracle();
    let subgroups = schedule
        .balls
        .iter()
        .map(|b| cyclic_subgroup(b, h))
        .collect::<Result<Vec<_>>>()?;
    let entries = (0..small.len())
        .into_par_iter()
        .map(|v| score_with(schedule, &subgroups, h, small.word(v)))
        .collect::<Result<Vec<_>>>()?;
    let verdict: HashMap<usize, CommVerdict> =
        entries.iter().enumerate().map(|(v, e)| (v, e.verdict)).collect();

    let members: Vec<usize> = (0..small.len())
        .filter(|v| verdict[v] == CommVerdict::MemberEvidence)
        .collect();
    let half = small.radius() / 2;
    let mut closure_violations = Vec::new();
    for &x in &members {
        for &y in &members {
            if small.dist0(x) + small.dist0(y) > half {
                continue;
            }
            let p = small.lookup(&small.word(x).concat(small.word(y))).expect("product is short");
            if verdict[&p] == CommVerdict::NonmemberEvidence {
                closure_violations.push((small.format(x), small.format(y)));
            }
        }
    }
    Ok(CommMembers {
        h: oracle.spec().format_word(h),
        radii: schedule.radii(),
        members: members.iter().map(|&v| small.format(v)).collect(),
        entries,
        closure_violations,
        epistemic_status: "evidence: finite-radius trends, not a certificate of membership",
    })
}
