use std::collections::VecDeque;

use serde::Serialize;

use super::ball::CayleyBall;
use super::vertex_set::VertexSet;
use crate::error::{Error, Result};
use crate::presentation::Word;

pub const UNREACHED: u32 = u32::MAX;

/// An in-ball distance. `exact` certifies that it equals the distance in
/// the whole Cayley graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Distance {
    pub value: usize,
    pub exact: bool,
}

impl Distance {
    /// The value when certified, `None` for "unknown".
    pub fn known(&self) -> Option<usize> {
        self.exact.then_some(self.value)
    }
}

/// A restricted Hausdorff distance; `value == None` means some point had no
/// path to the other set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Hausdorff {
    pub value: Option<usize>,
    pub exact: bool,
}

impl Hausdorff {
    pub fn is_infinite(&self) -> bool {
        self.value.is_none()
    }
}

/// Multi-source breadth-first search over the ball, restricted to vertices
/// accepted by `allowed` and stopped at `max_depth`.
pub fn bfs_filtered(
    ball: &CayleyBall,
    sources: impl IntoIterator<Item = usize>,
    max_depth: Option<usize>,
    mut allowed: impl FnMut(usize) -> bool,
) -> Vec<u32> {
    let mut dist = vec![UNREACHED; ball.len()];
    let mut queue = VecDeque::new();
    for s in sources {
        if dist[s] == UNREACHED && allowed(s) {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    let limit = max_depth.map_or(u32::MAX - 1, |d| d as u32);
    while let Some(v) = queue.pop_front() {
        let d = dist[v];
        if d >= limit {
            continue;
        }
        for u in ball.neighbors(v) {
            if dist[u] == UNREACHED && allowed(u) {
                dist[u] = d + 1;
                queue.push_back(u);
            }
        }
    }
    dist
}

pub fn bfs(ball: &CayleyBall, sources: impl IntoIterator<Item = usize>, max_depth: Option<usize>) -> Vec<u32> {
    bfs_filtered(ball, sources, max_depth, |_| true)
}

/// Shortest in-ball path length between `u` and `v`.
///
/// Exact when `d + |u| + |v| <= 2R + 2`: a strictly shorter geodesic would
/// then have stayed inside the ball and been found.
pub fn distance(ball: &CayleyBall, u: usize, v: usize) -> Result<Distance> {
    ball.check_vertex(u)?;
    ball.check_vertex(v)?;
    let dist = bfs(ball, [u], None);
    let d = dist[v] as usize;
    Ok(Distance {
        value: d,
        exact: d + ball.dist0(u) + ball.dist0(v) <= 2 * ball.radius() + 2,
    })
}

/// `N_r(Y)`: ball vertices within in-ball distance `r` of `Y`.
pub fn neighborhood(ball: &CayleyBall, y: &VertexSet, r: usize) -> VertexSet {
    let dist = bfs(ball, y.iter(), Some(r));
    dist.iter()
        .enumerate()
        .filter(|(_, &d)| d != UNREACHED)
        .map(|(i, _)| i)
        .collect()
}

/// Restricted Hausdorff distance with in-ball distances.
pub fn hausdorff(ball: &CayleyBall, a: &VertexSet, b: &VertexSet) -> Result<Hausdorff> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySet);
    }
    let slack = 2 * ball.radius() + 2;
    let one_side = |from: &VertexSet, to: &VertexSet| -> (Option<usize>, bool) {
        let dist = bfs(ball, to.iter(), None);
        let far = to.iter().map(|v| ball.dist0(v)).max().unwrap();
        let mut worst = 0usize;
        let mut exact = true;
        for x in from.iter() {
            if dist[x] == UNREACHED {
                return (None, false);
            }
            let d = dist[x] as usize;
            worst = worst.max(d);
            exact &= d + ball.dist0(x) + far <= slack;
        }
        (Some(worst), exact)
    };
    let (ab, e1) = one_side(a, b);
    let (ba, e2) = one_side(b, a);
    Ok(match (ab, ba) {
        (Some(x), Some(y)) => Hausdorff {
            value: Some(x.max(y)),
            exact: e1 && e2,
        },
        _ => Hausdorff {
            value: None,
            exact: false,
        },
    })
}

/// The lens `B_R(e) ∩ B_R(c_1) ∩ ...` for a list of centres, with
/// membership decided lazily by exact normal-form lookups of `c^-1 v`.
///
/// Distances measured inside a window are invariant under left
/// translation: `g·window(cs)` is `window(g·cs ∪ {g})` intersected back.
pub struct Window<'a> {
    ball: &'a CayleyBall,
    inverse_centers: Vec<Word>,
    state: Vec<u8>,
}

impl<'a> Window<'a> {
    pub fn new(ball: &'a CayleyBall, centers: &[Word]) -> Window<'a> {
        let oracle = ball.oracle();
        Window {
            ball,
            inverse_centers: centers.iter().map(|c| oracle.inverse(c)).collect(),
            state: vec![0; ball.len()],
        }
    }

    pub fn ball(&self) -> &CayleyBall {
        self.ball
    }

    pub fn contains(&mut self, v: usize) -> bool {
        match self.state[v] {
            1 => true,
            2 => false,
            _ => {
                let inside = self
                    .inverse_centers
                    .iter()
                    .all(|ci| self.ball.translate(ci, v).is_some());
                self.state[v] = if inside { 1 } else { 2 };
                inside
            }
        }
    }

    /// `max_c |c^-1 v|` over the centres and the identity.
    fn spread(&self, v: usize) -> usize {
        self.inverse_centers
            .iter()
            .map(|ci| self.ball.translate(ci, v).map_or(usize::MAX / 4, |i| self.ball.dist0(i)))
            .chain(std::iter::once(self.ball.dist0(v)))
            .max()
            .unwrap()
    }

    fn lengths(&self, v: usize) -> Vec<usize> {
        let mut out = vec![self.ball.dist0(v)];
        for ci in &self.inverse_centers {
            out.push(self.ball.translate(ci, v).map_or(usize::MAX / 4, |i| self.ball.dist0(i)));
        }
        out
    }

    /// Distances from `sources` inside the window; stops once every
    /// vertex of `targets` is reached.
    pub fn distances_to(&mut self, sources: &VertexSet, targets: &VertexSet) -> Vec<u32> {
        let n = self.ball.len();
        let mut dist = vec![UNREACHED; n];
        let mut queue = VecDeque::new();
        let mut want: Vec<bool> = targets.mask(n);
        let mut missing = targets.len();
        for s in sources.iter() {
            if dist[s] == UNREACHED && self.contains(s) {
                dist[s] = 0;
                if want[s] {
                    want[s] = false;
                    missing -= 1;
                }
                queue.push_back(s);
            }
        }
        while let Some(v) = queue.pop_front() {
            if missing == 0 {
                break;
            }
            let d = dist[v];
            for u in self.ball.neighbors(v) {
                if dist[u] == UNREACHED && self.contains(u) {
                    dist[u] = d + 1;
                    if want[u] {
                        want[u] = false;
                        missing -= 1;
                    }
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    /// Restricted Hausdorff distance between two subsets of the window,
    /// measured in the subgraph the window induces.
    pub fn hausdorff(&mut self, a: &VertexSet, b: &VertexSet) -> Result<Hausdorff> {
        if a.is_empty() || b.is_empty() {
            return Err(Error::EmptySet);
        }
        let slack = 2 * self.ball.radius() + 2;
        let mut value = 0usize;
        let mut exact = true;
        for (from, to) in [(a, b), (b, a)] {
            let dist = self.distances_to(to, from);
            let far: Vec<usize> = to.iter().map(|v| self.lengths(v)).fold(
                vec![0; self.inverse_centers.len() + 1],
                |acc, l| acc.iter().zip(&l).map(|(x, y)| *x.max(y)).collect(),
            );
            for x in from.iter() {
                if dist[x] == UNREACHED {
                    return Ok(Hausdorff {
                        value: None,
                        exact: false,
                    });
                }
                let d = dist[x] as usize;
                value = value.max(d);
                if exact {
                    let lx = self.lengths(x);
                    exact = lx.iter().zip(&far).all(|(l, f)| d + l + f <= slack);
                }
            }
        }
        Ok(Hausdorff {
            value: Some(value),
            exact,
        })
    }

    /// Whether all of `v`'s distances to the centres stay within the radius.
    pub fn spread_ok(&self, v: usize) -> bool {
        self.spread(v) <= self.ball.radius()
    }
}

/// Connected components of the subgraph induced by `mask`, each sorted,
/// listed in order of their smallest vertex.
pub fn components(ball: &CayleyBall, mask: &[bool]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; ball.len()];
    let mut out = Vec::new();
    for s in 0..ball.len() {
        if !mask[s] || seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            let v = comp[i];
            i += 1;
            for u in ball.neighbors(v) {
                if mask[u] && !seen[u] {
                    seen[u] = true;
                    comp.push(u);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Components of `ball − B_core(e)` that reach the outer sphere: a lower
/// bound for the number of ends.
pub fn ends_estimate(ball: &CayleyBall, core_radius: usize) -> Result<usize> {
    if core_radius >= ball.radius() {
        return Err(Error::Precondition(format!(
            "core radius {} must be below the ball radius {}",
            core_radius,
            ball.radius()
        )));
    }
    let mask: Vec<bool> = (0..ball.len()).map(|v| ball.dist0(v) > core_radius).collect();
    Ok(components(ball, &mask)
        .iter()
        .filter(|c| c.iter().any(|&v| ball.dist0(v) == ball.radius()))
        .count())
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::cayley::build_ball;
    use crate::presentation::{GroupSpec, NormalFormOracle};

    fn ball(spec: GroupSpec, r: usize) -> CayleyBall {
        build_ball(&Arc::new(NormalFormOracle::new(spec).unwrap()), r).unwrap()
    }

    fn v(b: &CayleyBall, s: &str) -> usize {
        b.lookup(&b.oracle().spec().parse_word(s).unwrap()).unwrap()
    }

    #[test]
    fn distance_examples() {
        let f2 = ball(GroupSpec::free(2), 4);
        assert_eq!(distance(&f2, 0, v(&f2, "ab")).unwrap(), Distance { value: 2, exact: true });
        let z2 = ball(GroupSpec::free_abelian(2), 4);
        assert_eq!(distance(&z2, v(&z2, "a"), v(&z2, "b")).unwrap().value, 2);
        let d = distance(&f2, v(&f2, "aaaa"), v(&f2, "bbbb")).unwrap();
        assert_eq!(d.value, 8);
        assert!(!d.exact);
        assert_eq!(d.known(), None);
        assert!(distance(&f2, 0, f2.len()).is_err());
    }

    #[test]
    fn neighborhood_examples() {
        let f2 = ball(GroupSpec::free(2), 4);
        let y = VertexSet::from_vec(vec![0, 3, 7]);
        assert_eq!(neighborhood(&f2, &y, 0), y);
        assert_eq!(neighborhood(&f2, &VertexSet::singleton(0), 1).len(), 5);
    }

    #[test]
    fn hausdorff_examples() {
        let f2 = ball(GroupSpec::free(2), 5);
        let a = VertexSet::singleton(0);
        assert_eq!(hausdorff(&f2, &a, &a).unwrap().value, Some(0));
        let ab = VertexSet::singleton(v(&f2, "ab"));
        assert_eq!(hausdorff(&f2, &a, &ab).unwrap().value, Some(2));
        let axis: VertexSet = (0..f2.len())
            .filter(|&i| f2.word(i).letters().iter().all(|l| l.generator() == 0))
            .collect();
        let shifted: VertexSet = (0..f2.len())
            .filter(|&i| {
                let w = f2.word(i).letters();
                !w.is_empty() && w[0].code() == 2 && w[1..].iter().all(|l| l.generator() == 0)
            })
            .collect();
        assert_eq!(hausdorff(&f2, &axis, &shifted).unwrap().value, Some(6));
        assert_eq!(hausdorff(&f2, &a, &VertexSet::new()), Err(Error::EmptySet));
    }

    #[test]
    fn ends_examples() {
        assert_eq!(ends_estimate(&ball(GroupSpec::free(1), 10), 0).unwrap(), 2);
        assert_eq!(ends_estimate(&ball(GroupSpec::free_abelian(2), 20), 2).unwrap(), 1);
        assert_eq!(ends_estimate(&ball(GroupSpec::free(2), 5), 1).unwrap(), 12);
        assert!(ends_estimate(&ball(GroupSpec::free(2), 3), 3).is_err());
    }
}
