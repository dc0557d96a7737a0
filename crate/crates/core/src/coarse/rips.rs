use crate::cayley::{bfs, CayleyBall, VertexSet, UNREACHED};
use crate::unionfind::UnionFind;

/// Components of the 0-skeleton of `Rips_d(S)`: points of `S` are joined
/// when their in-ball distance is at most `d`.
///
/// Components are sorted and listed by smallest vertex.
pub fn rips_components(ball: &CayleyBall, s: &VertexSet, d: usize) -> Vec<Vec<usize>> {
    let pts = s.as_slice();
    let mut uf = UnionFind::new(pts.len());
    for (i, &p) in pts.iter().enumerate() {
        let dist = bfs(ball, [p], Some(d));
        for (j, &q) in pts.iter().enumerate().skip(i + 1) {
            if dist[q] != UNREACHED {
                uf.union(i, j);
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; pts.len()];
    for (i, &p) in pts.iter().enumerate() {
        let root = uf.find(i);
        if slot[root] == usize::MAX {
            slot[root] = groups.len();
            groups.push(Vec::new());
        }
        groups[slot[root]].push(p);
    }
    groups
}
