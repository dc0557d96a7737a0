use std::collections::VecDeque;

use serde::Serialize;

use crate::cayley::{CayleyBall, VertexSet, UNREACHED};
use crate::error::{Error, Result};

/// Breadth-first search over an auxiliary graph whose nodes are `nodes`
/// and whose edges join nodes at distance at most `step` in the subgraph
/// induced by `through`. Returns the node path from `x` to `y`.
fn aux_search(
    ball: &CayleyBall,
    nodes: &[bool],
    through: &[bool],
    step: usize,
    x: usize,
    y: usize,
) -> Option<Vec<usize>> {
    if x == y {
        return Some(vec![x]);
    }
    let mut parent = vec![usize::MAX; ball.len()];
    parent[x] = x;
    let mut queue = VecDeque::from([x]);
    // scratch for the bounded inner searches, reset through `touched`
    let mut dist = vec![UNREACHED; ball.len()];
    let mut touched: Vec<usize> = Vec::new();
    let mut inner = VecDeque::new();
    while let Some(z) = queue.pop_front() {
        for &t in &touched {
            dist[t] = UNREACHED;
        }
        touched.clear();
        dist[z] = 0;
        touched.push(z);
        inner.push_back(z);
        while let Some(v) = inner.pop_front() {
            let d = dist[v];
            if nodes[v] && parent[v] == usize::MAX {
                parent[v] = z;
                if v == y {
                    let mut chain = vec![y];
                    let mut cur = y;
                    while cur != x {
                        cur = parent[cur];
                        chain.push(cur);
                    }
                    chain.reverse();
                    return Some(chain);
                }
                queue.push_back(v);
            }
            if d as usize >= step {
                continue;
            }
            for u in ball.neighbors(v) {
                if dist[u] == UNREACHED && through[u] {
                    dist[u] = d + 1;
                    touched.push(u);
                    inner.push_back(u);
                }
            }
        }
    }
    None
}

/// An (L, n)-chain in `C ∩ L` from `x` to `y`: consecutive points are
/// joined by paths of length at most `n` inside `L`. `None` when no chain
/// exists within the ball.
pub fn chain_connect(
    ball: &CayleyBall,
    l: &VertexSet,
    c: &VertexSet,
    n: usize,
    x: usize,
    y: usize,
) -> Result<Option<Vec<usize>>> {
    ball.check_vertex(x)?;
    ball.check_vertex(y)?;
    let through = l.mask(ball.len());
    let mut nodes = c.mask(ball.len());
    for (v, m) in nodes.iter_mut().enumerate() {
        *m &= through[v];
    }
    for p in [x, y] {
        if !nodes[p] {
            return Err(Error::Precondition(format!("{} is not in C ∩ L", ball.format(p))));
        }
    }
    Ok(aux_search(ball, &nodes, &through, n, x, y))
}

#[derive(Clone, Debug, Serialize)]
pub struct PairProbe {
    pub x: usize,
    pub y: usize,
    pub connected: bool,
    pub chain: Option<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FgProbeReport {
    pub a0: usize,
    pub search_radius: usize,
    pub member_count: usize,
    pub pairs: Vec<PairProbe>,
    /// Disconnection is only evidence: a chain may leave the ball.
    pub epistemic_status: &'static str,
}

/// A0-chains between members: steps join members at in-ball distance
/// strictly below `a0`.
pub fn fg_probe(
    ball: &CayleyBall,
    member: impl Fn(usize) -> bool,
    a0: usize,
    pairs: &[(usize, usize)],
) -> Result<FgProbeReport> {
    if a0 == 0 {
        return Err(Error::Precondition("A0 must be positive".into()));
    }
    let nodes: Vec<bool> = (0..ball.len()).map(&member).collect();
    if !nodes[0] {
        return Err(Error::Precondition("the identity must be a member".into()));
    }
    let everything = vec![true; ball.len()];
    let mut out = Vec::new();
    for &(x, y) in pairs {
        ball.check_vertex(x)?;
        ball.check_vertex(y)?;
        for p in [x, y] {
            if !nodes[p] {
                return Err(Error::Precondition(format!("{} is not a member", ball.format(p))));
            }
        }
        let chain = aux_search(ball, &nodes, &everything, a0 - 1, x, y);
        out.push(PairProbe {
            x,
            y,
            connected: chain.is_some(),
            chain,
        });
    }
    Ok(FgProbeReport {
        a0,
        search_radius: ball.radius(),
        member_count: nodes.iter().filter(|&&m| m).count(),
        pairs: out,
        epistemic_status: "evidence: negative results are bounded by the search radius",
    })
}
