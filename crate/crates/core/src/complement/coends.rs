use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use super::classify::{parting_number, MarginRule};
use crate::cayley::build_ball;
use crate::error::{Error, Result};
use crate::presentation::{NormalFormOracle, Word};
use crate::quasiline::axis_quasiline;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "count", rename_all = "snake_case")]
pub enum CoendVerdict {
    Stable(usize),
    Growing,
    Inconclusive,
}

#[derive(Clone, Debug, Serialize)]
pub struct CoendEntry {
    pub r: usize,
    pub ball_radius: usize,
    pub thickness: usize,
    pub margin: usize,
    pub parting: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct CoendEstimate {
    pub entries: Vec<CoendEntry>,
    pub verdict: CoendVerdict,
}

impl CoendEstimate {
    pub fn counts(&self) -> Vec<usize> {
        self.entries.iter().map(|e| e.parting).collect()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("r,R,thickness,margin,parting\n");
        for e in &self.entries {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                e.r, e.ball_radius, e.thickness, e.margin, e.parting
            ));
        }
        out
    }
}

/// stable(n) needs the last three counts equal; growing needs strict
/// growth along the whole schedule.
pub fn coend_verdict(counts: &[usize]) -> CoendVerdict {
    if counts.len() >= 2 && counts.windows(2).all(|w| w[0] < w[1]) {
        return CoendVerdict::Growing;
    }
    if counts.len() >= 3 {
        let tail = &counts[counts.len() - 3..];
        if tail.iter().all(|&c| c == tail[0]) {
            return CoendVerdict::Stable(tail[0]);
        }
    }
    CoendVerdict::Inconclusive
}

/// Parting numbers of the quasi-lines `N_r(⟨h⟩)` in balls of radius `R`
/// for each `(r, R)` of the schedule.
pub fn coend_estimate(
    oracle: &Arc<NormalFormOracle>,
    h: &Word,
    schedule: &[(usize, usize)],
    margin: MarginRule,
) -> Result<CoendEstimate> {
    if schedule.is_empty() {
        return Err(Error::Precondition("empty schedule".into()));
    }
    if schedule.windows(2).any(|w| w[0].0 > w[1].0 || w[0].1 >= w[1].1) {
        return Err(Error::Precondition("schedule must increase in both coordinates".into()));
    }
    let entries = schedule
        .par_iter()
        .map(|&(r, big_r)| {
            let ball = build_ball(oracle, big_r)?;
            let q = axis_quasiline(&ball, h, r)?.quasi_line;
            let m = margin.margin(q.thickness);
            Ok(CoendEntry {
                r,
                ball_radius: big_r,
                thickness: q.thickness,
                margin: m,
                parting: parting_number(&ball, &q, m)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let counts: Vec<usize> = entries.iter().map(|e| e.parting).collect();
    Ok(CoendEstimate {
        verdict: coend_verdict(&counts),
        entries,
    })
}
