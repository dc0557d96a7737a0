use std::collections::HashMap;
use std::fmt::Write;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::presentation::{Certificate, Letter, NormalFormOracle, Word};

pub const DEFAULT_VERTEX_CAP: usize = 2_000_000;
pub const VERTEX_CAP_ENV: &str = "COARSE_GEOM_VERTEX_CAP";

pub(crate) const NONE: u32 = u32::MAX;

/// The vertex cap, honouring `COARSE_GEOM_VERTEX_CAP` when it parses.
pub fn default_vertex_cap() -> usize {
    std::env::var(VERTEX_CAP_ENV)
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|&c| c > 0)
        .unwrap_or(DEFAULT_VERTEX_CAP)
}

/// The closed ball of radius `radius` about the identity in a Cayley graph.
///
/// Vertices are stored in breadth-first order, so the identity is vertex 0
/// and spheres are contiguous. `adjacency[v * degree + c]` is the neighbour
/// reached by letter code `c`, or `NONE` when it lies outside the ball.
#[derive(Clone, Debug)]
pub struct CayleyBall {
    oracle: Arc<NormalFormOracle>,
    radius: usize,
    degree: usize,
    vertices: Vec<Word>,
    index: HashMap<Word, u32>,
    adjacency: Vec<u32>,
    dist0: Vec<u32>,
    sphere_starts: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BallSummary {
    pub group: String,
    pub radius: usize,
    pub vertex_count: usize,
    pub sphere_sizes: Vec<usize>,
    pub certificate: Certificate,
}

/// Breadth-first enumeration of all elements of word length at most `radius`.
pub fn build_ball(oracle: &Arc<NormalFormOracle>, radius: usize) -> Result<CayleyBall> {
    build_ball_with_cap(oracle, radius, default_vertex_cap())
}

pub fn build_ball_with_cap(
    oracle: &Arc<NormalFormOracle>,
    radius: usize,
    cap: usize,
) -> Result<CayleyBall> {
    if let Certificate::Bounded(b) = oracle.certificate() {
        let needed = 2 * radius + 2;
        if b < needed {
            return Err(Error::ConfluenceBound {
                certified: b,
                radius,
                needed,
            });
        }
    }
    let degree = 2 * oracle.generator_count();
    let mut vertices = vec![Word::empty()];
    let mut index = HashMap::new();
    index.insert(Word::empty(), 0u32);
    let mut dist0 = vec![0u32];
    let mut adjacency: Vec<u32> = Vec::new();
    let mut sphere_starts = vec![0usize];

    let mut v = 0usize;
    while v < vertices.len() {
        let d = dist0[v];
        for c in 0..degree {
            let w = oracle.mul_letter(&vertices[v], Letter::from_code(c));
            let target = match index.get(&w) {
                Some(&t) => t,
                None if (d as usize) < radius => {
                    if vertices.len() >= cap {
                        return Err(Error::VertexCap { cap, radius });
                    }
                    let t = vertices.len() as u32;
                    if dist0[vertices.len() - 1] == d {
                        sphere_starts.push(vertices.len());
                    }
                    index.insert(w.clone(), t);
                    vertices.push(w);
                    dist0.push(d + 1);
                    t
                }
                None => NONE,
            };
            adjacency.push(target);
        }
        v += 1;
    }
    Ok(CayleyBall {
        oracle: Arc::clone(oracle),
        radius,
        degree,
        vertices,
        index,
        adjacency,
        dist0,
        sphere_starts,
    })
}

impl CayleyBall {
    pub fn oracle(&self) -> &Arc<NormalFormOracle> {
        &self.oracle
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Number of signed letters, i.e. the valence of the Cayley graph.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn word(&self, v: usize) -> &Word {
        &self.vertices[v]
    }

    pub fn dist0(&self, v: usize) -> usize {
        self.dist0[v] as usize
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.len() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange(v))
        }
    }

    /// Neighbour of `v` along letter code `c`, if inside the ball.
    #[inline]
    pub fn step(&self, v: usize, c: usize) -> Option<usize> {
        let t = self.adjacency[v * self.degree + c];
        (t != NONE).then_some(t as usize)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[v * self.degree..(v + 1) * self.degree]
            .iter()
            .filter(|&&t| t != NONE)
            .map(|&t| t as usize)
    }

    /// Vertex of an already canonical word.
    pub fn index_of(&self, nf: &Word) -> Option<usize> {
        self.index.get(nf).map(|&i| i as usize)
    }

    /// Vertex of an arbitrary word, canonicalizing first.
    pub fn lookup(&self, w: &Word) -> Option<usize> {
        self.index_of(&self.oracle.canonicalize(w))
    }

    /// Vertex of `g · v`, if it lies in the ball.
    pub fn translate(&self, g: &Word, v: usize) -> Option<usize> {
        self.lookup(&g.concat(&self.vertices[v]))
    }

    /// Word length of `g^-1 · v` when it is at most the radius.
    pub fn length_from(&self, g: &Word, v: usize) -> Option<usize> {
        self.translate(&g.inverse(), v).map(|i| self.dist0(i))
    }

    /// Follows a walk of letters from `v`, failing if it leaves the ball.
    pub fn walk(&self, v: usize, w: &Word) -> Option<Vec<usize>> {
        let mut path = vec![v];
        let mut cur = v;
        for l in w.letters() {
            cur = self.step(cur, l.code())?;
            path.push(cur);
        }
        Some(path)
    }

    /// A geodesic from the identity to `v`, preferring low vertex indices.
    pub fn geodesic_from_identity(&self, v: usize) -> Vec<usize> {
        let mut path = vec![v];
        let mut cur = v;
        while cur != 0 {
            let d = self.dist0[cur];
            cur = self
                .neighbors(cur)
                .filter(|&u| self.dist0[u] + 1 == d)
                .min()
                .expect("breadth-first ball has a parent for every vertex");
            path.push(cur);
        }
        path.reverse();
        path
    }

    /// Vertices at exactly distance `r` from the identity.
    pub fn sphere(&self, r: usize) -> std::ops::Range<usize> {
        if r > self.radius {
            return self.len()..self.len();
        }
        let start = self.sphere_starts[r];
        let end = self.sphere_starts.get(r + 1).copied().unwrap_or(self.len());
        start..end
    }

    /// The sub-ball `B_r(e)` as an index range.
    pub fn sub_ball(&self, r: usize) -> std::ops::Range<usize> {
        0..self.sphere(r.min(self.radius)).end
    }

    pub fn sphere_sizes(&self) -> Vec<usize> {
        (0..=self.radius).map(|r| self.sphere(r).len()).collect()
    }

    pub fn summary(&self) -> BallSummary {
        BallSummary {
            group: self.oracle.spec().name.clone(),
            radius: self.radius,
            vertex_count: self.len(),
            sphere_sizes: self.sphere_sizes(),
            certificate: self.oracle.certificate(),
        }
    }

    pub fn format(&self, v: usize) -> String {
        let s = self.oracle.spec().format_word(&self.vertices[v]);
        if s.is_empty() {
            "e".into()
        } else {
            s
        }
    }

    /// Graphviz rendering; `highlight` vertices are filled.
    pub fn to_dot(&self, highlight: &[usize]) -> String {
        let mut marked = vec![false; self.len()];
        for &v in highlight {
            marked[v] = true;
        }
        let mut out = String::from("graph ball {\n");
        for v in 0..self.len() {
            let style = if marked[v] { ", style=filled" } else { "" };
            let _ = writeln!(out, "  v{} [label=\"{}\"{}];", v, self.format(v), style);
        }
        for v in 0..self.len() {
            for c in (0..self.degree).step_by(2) {
                if let Some(u) = self.step(v, c) {
                    let name = self.oracle.spec().alphabet.names()[c / 2];
                    let _ = writeln!(out, "  v{} -- v{} [label=\"{}\"];", v, u, name);
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::GroupSpec;

    fn ball(spec: GroupSpec, r: usize) -> CayleyBall {
        build_ball(&Arc::new(NormalFormOracle::new(spec).unwrap()), r).unwrap()
    }

    #[test]
    fn spec_examples() {
        assert_eq!(ball(GroupSpec::free(2), 2).len(), 17);
        assert_eq!(ball(GroupSpec::free_abelian(2), 2).len(), 13);
        assert_eq!(ball(GroupSpec::free_times_z(2), 0).len(), 1);
    }

    #[test]
    fn spheres_and_adjacency() {
        let b = ball(GroupSpec::free(2), 3);
        assert_eq!(b.sphere_sizes(), vec![1, 4, 12, 36]);
        for v in 0..b.len() {
            for c in 0..b.degree() {
                if let Some(u) = b.step(v, c) {
                    assert_eq!(b.step(u, c ^ 1), Some(v));
                    assert!(b.dist0(u).abs_diff(b.dist0(v)) <= 1);
                }
            }
        }
        let g = b.geodesic_from_identity(b.len() - 1);
        assert_eq!(g.len(), 4);
    }

    #[test]
    fn vertex_cap_is_enforced() {
        let oracle = Arc::new(NormalFormOracle::new(GroupSpec::free(2)).unwrap());
        assert_eq!(
            build_ball_with_cap(&oracle, 4, 50).unwrap_err(),
            Error::VertexCap { cap: 50, radius: 4 }
        );
    }
}
