use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use super::map::{ExplicitMap, MapKind};
use super::profile::image_set;
use crate::cayley::{bfs, CayleyBall};
use crate::error::{Error, Result};

/// A table map back from the target ball, with measured roundtrip displacements.
#[derive(Clone, Debug)]
pub struct CoarseInverse {
    pub map: ExplicitMap,
    pub report: CoarseInverseReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoarseInverseReport {
    /// Largest distance from a target vertex to the image.
    pub t_onto: usize,
    /// Largest source distance between two points with the same image.
    pub collapse: usize,
    /// `max d(f'f(x), x)` over the source ball.
    pub roundtrip_src: usize,
    /// `max d(ff'(y), y)` over the target ball.
    pub roundtrip_dst: usize,
}

/// Sends each target vertex to a preimage of its nearest image point.
///
/// Ties go to the smallest source vertex index, so the table is deterministic.
pub fn coarse_inverse(map: &ExplicitMap, src: &CayleyBall, dst: &CayleyBall) -> Result<CoarseInverse> {
    let images = map.vertex_images(src, dst);
    if image_set(&images).is_empty() {
        return Err(Error::EmptySet);
    }
    // Layered search: each vertex takes the smallest label among its
    // neighbours one layer closer to the image.
    let mut label = vec![usize::MAX; dst.len()];
    for (x, t) in images.iter().enumerate() {
        if let Some(t) = *t {
            label[t] = label[t].min(x);
        }
    }
    let mut layer: Vec<usize> = (0..dst.len()).filter(|&y| label[y] != usize::MAX).collect();
    let mut depth = 0;
    let mut dist = vec![usize::MAX; dst.len()];
    for &y in &layer {
        dist[y] = 0;
    }
    while !layer.is_empty() {
        let mut next = Vec::new();
        for &y in &layer {
            for z in dst.neighbors(y) {
                if dist[z] == usize::MAX {
                    dist[z] = depth + 1;
                    next.push(z);
                }
                if dist[z] == depth + 1 {
                    label[z] = label[z].min(label[y]);
                }
            }
        }
        depth += 1;
        layer = next;
    }
    let t_onto = dist.iter().copied().max().unwrap_or(0);
    if t_onto > dst.radius() {
        return Err(Error::Precondition(format!(
            "t-onto radius {} exceeds the destination ball radius {}",
            t_onto,
            dst.radius()
        )));
    }
    let mut fibres: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (x, t) in images.iter().enumerate() {
        if let Some(t) = *t {
            fibres.entry(t).or_default().push(x);
        }
    }
    // Within a fibre, f'f sends everything to its smallest member.
    let (collapse, roundtrip_src) = fibres
        .par_iter()
        .filter(|(_, xs)| xs.len() > 1)
        .map(|(_, xs)| {
            let mut collapse = 0;
            let mut roundtrip = 0;
            for (i, &x) in xs.iter().enumerate() {
                let d = bfs(src, [x], None);
                for &x2 in &xs[i + 1..] {
                    collapse = collapse.max(d[x2] as usize);
                }
                if i == 0 {
                    roundtrip = xs.iter().map(|&x2| d[x2] as usize).max().unwrap_or(0);
                }
            }
            (collapse, roundtrip)
        })
        .reduce(|| (0, 0), |a, b| (a.0.max(b.0), a.1.max(b.1)));
    Ok(CoarseInverse {
        map: ExplicitMap {
            src: Arc::clone(&map.dst),
            dst: Arc::clone(&map.src),
            kind: MapKind::Table { table: label },
        },
        report: CoarseInverseReport {
            t_onto,
            collapse,
            roundtrip_src,
            roundtrip_dst: t_onto,
        },
    })
}
