use rayon::prelude::*;
use serde::Serialize;

use super::map::{ExplicitMap, MapKind};
use crate::cayley::{bfs, CayleyBall, UNREACHED};
use crate::error::{Error, Result};

/// Sampled distortion controls of a map, indexed by source distance `r`.
///
/// `phi` is a minimum over the sampled source ball, so it bounds the true
/// lower control from above; `Phi` is exact where defined.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UdProfile {
    /// `phi[r]`: least target distance over source pairs at distance `>= r`.
    pub phi: Vec<Option<usize>>,
    /// `big_phi[r]`: greatest target distance over source pairs at distance `<= r`.
    #[serde(rename = "Phi")]
    pub big_phi: Vec<Option<usize>>,
    /// Largest distance from a target ball vertex to the image.
    pub t_onto: Option<usize>,
    pub r_max: usize,
    /// Largest `r` for which the image of `B_r` fits in the target ball.
    pub r_effective: usize,
    /// Whether every distance used passed the in-ball exactness test.
    pub exact: bool,
}

impl UdProfile {
    /// Monotonicity and `phi <= Phi`.
    pub fn check_invariants(&self) -> bool {
        let mono = |v: &[Option<usize>]| {
            let known: Vec<usize> = v.iter().flatten().copied().collect();
            known.windows(2).all(|w| w[0] <= w[1])
        };
        let below = self.phi.iter().zip(&self.big_phi).all(|(p, q)| match (p, q) {
            (Some(p), Some(q)) => p <= q,
            _ => true,
        });
        mono(&self.phi) && mono(&self.big_phi) && below
    }
}

/// Distinct image points that land in the target ball, sorted.
pub(crate) fn image_set(images: &[Option<usize>]) -> Vec<usize> {
    let mut out: Vec<usize> = images.iter().flatten().copied().collect();
    out.sort_unstable();
    out.dedup();
    out
}

pub(crate) fn t_onto(dst: &CayleyBall, image: &[usize]) -> Option<usize> {
    let dist = bfs(dst, image.iter().copied(), None);
    let worst = *dist.iter().max()?;
    (worst != UNREACHED).then_some(worst as usize)
}

/// Distortion profile of `map` between two balls, sampled for `r <= r_max`.
///
/// Homomorphisms are equivariant, so pairs reduce to `(e, c)` and the
/// values are group lengths. Table maps compare every pair with in-ball
/// distances.
pub fn ud_profile(map: &ExplicitMap, src: &CayleyBall, dst: &CayleyBall, r_max: usize) -> Result<UdProfile> {
    let images = map.vertex_images(src, dst);
    let image = image_set(&images);
    let r_max = r_max.min(src.radius());
    let (phi, big_phi, r_effective, exact) = match &map.kind {
        MapKind::Homomorphism { .. } => hom_profile(src, dst, &images, r_max),
        MapKind::Table { .. } => table_profile(src, dst, &images, r_max),
    };
    if image.is_empty() || (r_max > 0 && r_effective == 0) {
        return Err(Error::Precondition("image escapes the destination ball entirely".into()));
    }
    Ok(UdProfile {
        phi,
        big_phi,
        t_onto: t_onto(dst, &image),
        r_max,
        r_effective,
        exact,
    })
}

type Sampled = (Vec<Option<usize>>, Vec<Option<usize>>, usize, bool);

fn effective_radius(src: &CayleyBall, images: &[Option<usize>], r_max: usize) -> usize {
    let escape = (0..src.len()).find(|&v| images[v].is_none()).map(|v| src.dist0(v));
    match escape {
        Some(r) => r.saturating_sub(1).min(r_max),
        None => r_max,
    }
}

fn hom_profile(src: &CayleyBall, dst: &CayleyBall, images: &[Option<usize>], r_max: usize) -> Sampled {
    let r_eff = effective_radius(src, images, r_max);
    let mut lo = vec![None; src.radius() + 2];
    let mut hi = vec![None; src.radius() + 1];
    for v in 0..src.len() {
        let Some(t) = images[v] else { continue };
        let (r, len) = (src.dist0(v), dst.dist0(t));
        lo[r] = Some(lo[r].map_or(len, |m: usize| m.min(len)));
        hi[r] = Some(hi[r].map_or(len, |m: usize| m.max(len)));
    }
    let mut phi = vec![None; r_max + 1];
    let mut acc: Option<usize> = None;
    for r in (0..=src.radius()).rev() {
        acc = match (acc, lo[r]) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        if r <= r_max {
            phi[r] = acc;
        }
    }
    let mut big_phi = vec![None; r_max + 1];
    let mut acc = 0;
    for r in 0..=r_eff {
        acc = acc.max(hi[r].unwrap_or(0));
        big_phi[r] = Some(acc);
    }
    (phi, big_phi, r_eff, true)
}

fn table_profile(src: &CayleyBall, dst: &CayleyBall, images: &[Option<usize>], r_max: usize) -> Sampled {
    let r_eff = effective_radius(src, images, r_max);
    let width = 2 * src.radius() + 1;
    let (src_slack, dst_slack) = (2 * src.radius() + 2, 2 * dst.radius() + 2);
    // Per source distance: (min, max) target distance, and an exactness flag.
    let merged = (0..src.len())
        .into_par_iter()
        .filter(|&u| images[u].is_some())
        .map(|u| {
            let ds = bfs(src, [u], None);
            let tu = images[u].unwrap();
            let dt = bfs(dst, [tu], None);
            let mut acc = vec![(usize::MAX, 0usize); width];
            let mut exact = true;
            for v in 0..src.len() {
                let Some(tv) = images[v] else { continue };
                let (a, b) = (ds[v] as usize, dt[tv] as usize);
                if ds[v] == UNREACHED || dt[tv] == UNREACHED {
                    exact = false;
                    continue;
                }
                exact &= a + src.dist0(u) + src.dist0(v) <= src_slack;
                exact &= b + dst.dist0(tu) + dst.dist0(tv) <= dst_slack;
                let slot = &mut acc[a];
                slot.0 = slot.0.min(b);
                slot.1 = slot.1.max(b);
            }
            (acc, exact)
        })
        .reduce(
            || (vec![(usize::MAX, 0usize); width], true),
            |(mut a, ea), (b, eb)| {
                for (x, y) in a.iter_mut().zip(b) {
                    x.0 = x.0.min(y.0);
                    x.1 = x.1.max(y.1);
                }
                (a, ea && eb)
            },
        );
    let (by_dist, exact) = merged;
    let mut phi = vec![None; r_max + 1];
    let mut acc = usize::MAX;
    for r in (0..width).rev() {
        acc = acc.min(by_dist[r].0);
        if r <= r_max && acc != usize::MAX {
            phi[r] = Some(acc);
        }
    }
    let mut big_phi = vec![None; r_max + 1];
    let mut acc = 0;
    for r in 0..=r_eff {
        acc = acc.max(by_dist[r].1);
        big_phi[r] = Some(acc);
    }
    (phi, big_phi, r_eff, exact)
}
