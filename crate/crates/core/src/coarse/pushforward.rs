use serde::Serialize;

use super::map::{ExplicitMap, MapKind};
use crate::cayley::{components, neighborhood, CayleyBall, VertexSet};
use crate::complement::{parting_number, MarginRule};
use crate::error::{Error, Result};
use crate::quasiline::{embed_line, QuasiLine};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PushforwardReport {
    /// Least thickening radius making the image of the support connected.
    pub r_prime: usize,
    pub src_thickness: usize,
    pub dst_thickness: usize,
    pub src_margin: usize,
    pub dst_margin: usize,
    pub src_parting: usize,
    pub dst_parting: usize,
    pub preserved: bool,
}

fn connected(ball: &CayleyBall, set: &VertexSet) -> bool {
    components(ball, &set.mask(ball.len())).len() == 1
}

/// Pushes a quasi-line forward along a homomorphism and compares parting
/// numbers before and after.
pub fn pushforward_qline(
    map: &ExplicitMap,
    l: &QuasiLine,
    src: &CayleyBall,
    dst: &CayleyBall,
    margin: MarginRule,
) -> Result<(QuasiLine, PushforwardReport)> {
    let MapKind::Homomorphism { images } = &map.kind else {
        return Err(Error::Precondition("pushforward needs a homomorphism".into()));
    };
    let all = map.vertex_images(src, dst);
    let image: VertexSet = l
        .support
        .iter()
        .map(|v| all[v].ok_or_else(|| Error::Precondition("image of the support leaves the destination ball".into())))
        .collect::<Result<_>>()?;

    // The image line follows each generator image letter by letter.
    let mut walk = vec![all[l.line.vertices[0]].expect("line lies in the support")];
    for pair in l.line.vertices.windows(2) {
        let code = (0..src.degree())
            .find(|&c| src.step(pair[0], c) == Some(pair[1]))
            .expect("consecutive line vertices are adjacent");
        let g = &images[code / 2];
        let w = if code % 2 == 1 { g.inverse() } else { g.clone() };
        let from = *walk.last().unwrap();
        let path = dst
            .walk(from, &w)
            .ok_or_else(|| Error::Precondition("image of the line leaves the destination ball".into()))?;
        walk.extend_from_slice(&path[1..]);
    }
    let line = embed_line(dst, &walk)?;

    let r_prime = (0..=dst.radius())
        .find(|&r| connected(dst, &neighborhood(dst, &image, r)))
        .ok_or(Error::Disconnected {
            requested: dst.radius(),
            connecting: None,
        })?;
    let support = neighborhood(dst, &image, r_prime);
    let pushed = QuasiLine::from_parts(dst, support, line)?;

    let src_margin = margin.margin(l.thickness);
    let dst_margin = margin.margin(pushed.thickness);
    let src_parting = parting_number(src, l, src_margin)?;
    let dst_parting = parting_number(dst, &pushed, dst_margin)?;
    let report = PushforwardReport {
        r_prime,
        src_thickness: l.thickness,
        dst_thickness: pushed.thickness,
        src_margin,
        dst_margin,
        src_parting,
        dst_parting,
        preserved: src_parting == dst_parting,
    };
    Ok((pushed, report))
}
