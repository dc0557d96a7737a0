use std::collections::HashMap;

use crate::cayley::CayleyBall;
use crate::error::{Error, Result};

/// An edge path in a ball, parameterized by arc length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Line {
    pub vertices: Vec<usize>,
    pub injective: bool,
}

impl Line {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// One collapse pass: the repeat size before it and the collapsed windows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollapsePass {
    pub n: usize,
    pub windows: Vec<(usize, usize)>,
}

/// Largest index gap between two occurrences of the same vertex.
pub fn repeat_size(walk: &[usize]) -> usize {
    let mut first: HashMap<usize, usize> = HashMap::new();
    let mut n = 0;
    for (i, &v) in walk.iter().enumerate() {
        let f = *first.entry(v).or_insert(i);
        n = n.max(i - f);
    }
    n
}

fn check_walk(ball: &CayleyBall, walk: &[usize]) -> Result<()> {
    for &v in walk {
        ball.check_vertex(v)?;
    }
    for w in walk.windows(2) {
        if !ball.neighbors(w[0]).any(|u| u == w[1]) {
            return Err(Error::Precondition(format!(
                "walk steps from {} to {}, which are not adjacent",
                ball.format(w[0]),
                ball.format(w[1])
            )));
        }
    }
    Ok(())
}

/// Removes loops from a walk until it is injective.
///
/// Each pass takes the largest repeat gap `n`, greedily picks disjoint
/// windows `[i, i+n]` with equal endpoints from left to right, and deletes
/// the interior plus the right endpoint of each. Returns the passes too.
pub fn embed_line_traced(ball: &CayleyBall, walk: &[usize]) -> Result<(Line, Vec<CollapsePass>)> {
    check_walk(ball, walk)?;
    let mut cur = walk.to_vec();
    let mut passes = Vec::new();
    loop {
        let n = repeat_size(&cur);
        if n == 0 {
            break;
        }
        if let Some(prev) = passes.last().map(|p: &CollapsePass| p.n) {
            assert!(n < prev, "repeat size must drop on every pass ({} -> {})", prev, n);
        }
        let mut windows = Vec::new();
        let mut i = 0;
        while i + n < cur.len() {
            if cur[i] == cur[i + n] {
                windows.push((i, i + n));
                i += n + 1;
            } else {
                i += 1;
            }
        }
        let mut keep = vec![true; cur.len()];
        for &(s, e) in &windows {
            for k in keep.iter_mut().take(e + 1).skip(s + 1) {
                *k = false;
            }
        }
        cur = cur.iter().zip(&keep).filter(|(_, &k)| k).map(|(&v, _)| v).collect();
        passes.push(CollapsePass { n, windows });
    }
    Ok((
        Line {
            vertices: cur,
            injective: true,
        },
        passes,
    ))
}

pub fn embed_line(ball: &CayleyBall, walk: &[usize]) -> Result<Line> {
    embed_line_traced(ball, walk).map(|(l, _)| l)
}
