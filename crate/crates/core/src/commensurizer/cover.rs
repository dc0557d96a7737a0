use serde::Serialize;

use crate::cayley::{bfs, conjugate_subgroup, cyclic_subgroup, CayleyBall, VertexSet, UNREACHED};
use crate::error::{Error, Result};
use crate::presentation::Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CoverResult {
    pub cover1: bool,
    pub cover2: bool,
}

impl CoverResult {
    pub fn both(&self) -> bool {
        self.cover1 && self.cover2
    }
}

/// Every `x` of `from` with `|x| <= R - M` has some `k`, `|k| <= M`, with
/// `x k^-1` in `to`. The `k` run over `L(M) = B_M(e)` read off the ball.
fn covers(ball: &CayleyBall, from: &VertexSet, to: &VertexSet, m: usize) -> bool {
    let lm = ball.sub_ball(m);
    let oracle = ball.oracle();
    from.iter()
        .filter(|&x| ball.dist0(x) + m <= ball.radius())
        .all(|x| {
            lm.clone().any(|k| {
                let w = oracle.multiply(ball.word(x), &ball.word(k).inverse());
                ball.index_of(&w).is_some_and(|y| to.contains(y))
            })
        })
}

/// The covering conditions `H ⊂ ∪_{k ∈ L(M)} H^g k` and its mirror, tested
/// on the part of each subgroup at depth `M` inside the ball.
pub fn coset_cover_test(ball: &CayleyBall, h: &Word, g: &Word, m: usize) -> Result<CoverResult> {
    if m >= ball.radius() {
        return Err(Error::Precondition(format!(
            "M = {} must be below the radius {}",
            m,
            ball.radius()
        )));
    }
    let hs = cyclic_subgroup(ball, h)?;
    let hg = conjugate_subgroup(ball, g, h)?;
    Ok(CoverResult {
        cover1: covers(ball, &hs, &hg, m),
        cover2: covers(ball, &hg, &hs, m),
    })
}

/// The metric side of the covering equivalence: every point of either set
/// at depth `M` lies within in-ball distance `M` of the other set.
pub fn within_hausdorff(ball: &CayleyBall, a: &VertexSet, b: &VertexSet, m: usize) -> bool {
    let side = |from: &VertexSet, to: &VertexSet| {
        let d = bfs(ball, to.iter(), Some(m));
        from.iter()
            .filter(|&x| ball.dist0(x) + m <= ball.radius())
            .all(|x| d[x] != UNREACHED)
    };
    side(a, b) && side(b, a)
}
