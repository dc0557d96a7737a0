use std::collections::BTreeMap;

use serde::Serialize;

use super::line::{embed_line, Line};
use crate::cayley::{bfs, bfs_filtered, components, neighborhood, powers_in_ball, CayleyBall, VertexSet, POWER_LIMIT, UNREACHED};
use crate::error::{Error, Result};
use crate::presentation::Word;

/// A vertex set within bounded distance of an embedded line.
#[derive(Clone, Debug)]
pub struct QuasiLine {
    pub support: VertexSet,
    pub line: Line,
    /// Largest in-ball distance from a support vertex to the line.
    pub thickness: usize,
    /// Sampled lower bounds for the distortion function of the line.
    pub distortion: BTreeMap<usize, usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct QuasiLineReport {
    pub thickness: usize,
    pub line_length: usize,
    pub support_size: usize,
    pub distortion_samples: BTreeMap<usize, usize>,
}

impl QuasiLine {
    /// Wraps an arbitrary support and line, measuring the thickness.
    pub fn from_parts(ball: &CayleyBall, support: VertexSet, line: Line) -> Result<QuasiLine> {
        if line.is_empty() {
            return Err(Error::EmptySet);
        }
        let support = support.union(&VertexSet::from_vec(line.vertices.clone()));
        let thickness = thickness(ball, &support, &line)?;
        let t_max = line.len().saturating_sub(1).min(2 * ball.radius());
        let distortion = distortion_profile(ball, &line, t_max)?;
        Ok(QuasiLine {
            support,
            line,
            thickness,
            distortion,
        })
    }

    pub fn report(&self) -> QuasiLineReport {
        QuasiLineReport {
            thickness: self.thickness,
            line_length: self.line.len(),
            support_size: self.support.len(),
            distortion_samples: self.distortion.clone(),
        }
    }
}

fn thickness(ball: &CayleyBall, support: &VertexSet, line: &Line) -> Result<usize> {
    let dist = bfs(ball, line.vertices.iter().copied(), None);
    let mut worst = 0;
    for v in support.iter() {
        if dist[v] == UNREACHED {
            return Err(Error::Precondition("support vertex unreachable from line".into()));
        }
        worst = worst.max(dist[v] as usize);
    }
    Ok(worst)
}

/// Connected in the subgraph the set induces?
fn is_connected(ball: &CayleyBall, set: &VertexSet) -> bool {
    let Some(start) = set.iter().next() else {
        return true;
    };
    let mask = set.mask(ball.len());
    let dist = bfs_filtered(ball, [start], None, |v| mask[v]);
    set.iter().all(|v| dist[v] != UNREACHED)
}

/// The letter codes along a vertex path.
fn path_letters(ball: &CayleyBall, path: &[usize]) -> Word {
    let mut w = Word::empty();
    for p in path.windows(2) {
        let c = (0..ball.degree())
            .find(|&c| ball.step(p[0], c) == Some(p[1]))
            .expect("path vertices are adjacent");
        w.push(crate::presentation::Letter::from_code(c));
    }
    w
}

#[derive(Clone, Debug)]
pub struct AxisQuasiLine {
    pub quasi_line: QuasiLine,
    /// `(lo, hi)`: the translates `h^n·p`, `lo <= n < hi`, fit in the ball,
    /// so the visible powers are `h^lo ..= h^hi`.
    pub exponent_range: (i64, i64),
    /// The visible powers `h^n`, n in `exponent_range`.
    pub powers: VertexSet,
}

/// Quasi-line around `⟨h⟩`: the translates `h^n·p` of a geodesic `p` from
/// `e` to `h`, for the contiguous run of `n` around 0 whose translates stay
/// in the ball, are concatenated and made injective by loop removal. The
/// support is `N_r` of the visible powers together with the line.
pub fn axis_quasiline(ball: &CayleyBall, h: &Word, r: usize) -> Result<AxisQuasiLine> {
    let oracle = ball.oracle();
    let h = oracle.normal_form(h)?;
    if h.is_empty() {
        return Err(Error::Trivial("axis generator".into()));
    }
    let hv = ball.index_of(&h).ok_or_else(|| {
        Error::Precondition(format!("{} lies outside the ball", oracle.spec().format_word(&h)))
    })?;
    let p = ball.geodesic_from_identity(hv);
    let letters = path_letters(ball, &p);
    let powers: BTreeMap<i64, usize> = powers_in_ball(ball, &h, POWER_LIMIT)?.into_iter().collect();

    let translate = |n: i64| -> Option<Vec<usize>> { ball.walk(*powers.get(&n)?, &letters) };
    let mut hi = 0i64;
    while translate(hi).is_some() {
        hi += 1;
    }
    let mut lo = 0i64;
    while translate(lo - 1).is_some() {
        lo -= 1;
    }
    if hi == 0 {
        return Err(Error::Precondition(
            "no translate of the axis segment fits in the ball".into(),
        ));
    }
    let mut walk: Vec<usize> = Vec::new();
    for n in lo..hi {
        let seg = translate(n).unwrap();
        if walk.is_empty() {
            walk.extend(seg);
        } else {
            walk.extend(&seg[1..]);
        }
    }
    let line = embed_line(ball, &walk)?;
    let visible: VertexSet = (lo..=hi).map(|n| powers[&n]).collect();

    let support = neighborhood(ball, &visible, r).union(&VertexSet::from_vec(line.vertices.clone()));
    if !is_connected(ball, &support) {
        let connecting = (r + 1..=2 * ball.radius()).find(|&s| {
            let cand = neighborhood(ball, &visible, s).union(&VertexSet::from_vec(line.vertices.clone()));
            is_connected(ball, &cand)
        });
        return Err(Error::Disconnected {
            requested: r,
            connecting,
        });
    }
    Ok(AxisQuasiLine {
        quasi_line: QuasiLine::from_parts(ball, support, line)?,
        exponent_range: (lo, hi),
        powers: visible,
    })
}

/// For each `t <= t_max`, the largest parameter gap `|i - j|` between line
/// vertices at in-ball distance at most `t`. In-ball distances only
/// overestimate, so every value is a lower bound for `D_l(t)`.
pub fn distortion_profile(ball: &CayleyBall, line: &Line, t_max: usize) -> Result<BTreeMap<usize, usize>> {
    if !line.injective {
        return Err(Error::Precondition("distortion needs an injective line".into()));
    }
    let m = line.len();
    let mut best = vec![0usize; t_max + 1];
    for i in 0..m {
        let dist = bfs(ball, [line.vertices[i]], Some(t_max));
        for j in i + 1..m {
            let d = dist[line.vertices[j]];
            if d != UNREACHED {
                let d = d as usize;
                best[d] = best[d].max(j - i);
            }
        }
    }
    let mut out = BTreeMap::new();
    let mut run = 0;
    for (t, b) in best.into_iter().enumerate() {
        run = run.max(b);
        out.insert(t, run);
    }
    Ok(out)
}

/// Components of `support − B_core(e)` reaching distance `R − thickness`.
pub fn quasiline_ends(ball: &CayleyBall, l: &QuasiLine, core_radius: usize) -> Result<usize> {
    if l.line.vertices.iter().all(|&v| ball.dist0(v) <= core_radius) {
        return Err(Error::Precondition("line lies entirely inside the core".into()));
    }
    if !l.line.vertices.iter().any(|&v| ball.dist0(v) <= core_radius) {
        return Err(Error::Precondition("core ball misses the line".into()));
    }
    if core_radius + l.thickness >= ball.radius() {
        return Err(Error::Precondition(format!(
            "core radius {} plus thickness {} must stay below the ball radius {}",
            core_radius,
            l.thickness,
            ball.radius()
        )));
    }
    let mut mask = l.support.mask(ball.len());
    for (v, m) in mask.iter_mut().enumerate() {
        if ball.dist0(v) <= core_radius {
            *m = false;
        }
    }
    let reach = ball.radius() - l.thickness;
    Ok(components(ball, &mask)
        .iter()
        .filter(|c| c.iter().any(|&v| ball.dist0(v) >= reach))
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

    fn word(b: &CayleyBall, s: &str) -> Word {
        b.oracle().spec().parse_word(s).unwrap()
    }

    #[test]
    fn z2_generator_axis() {
        let b = ball(GroupSpec::free_abelian(2), 10);
        let q = axis_quasiline(&b, &word(&b, "a"), 1).unwrap().quasi_line;
        assert_eq!(q.thickness, 1);
        assert_eq!(q.line.len(), 21);
        for t in 0..=10 {
            assert_eq!(q.distortion[&t], t);
        }
        assert_eq!(quasiline_ends(&b, &q, 3).unwrap(), 2);
    }

    #[test]
    fn free_product_axis_has_zero_thickness() {
        let b = ball(GroupSpec::free(2), 6);
        let ax = axis_quasiline(&b, &word(&b, "ab"), 0).unwrap();
        let q = &ax.quasi_line;
        assert_eq!(q.thickness, 0);
        assert_eq!(q.support, VertexSet::from_vec(q.line.vertices.clone()));
        assert!(q.line.vertices.contains(&b.lookup(&word(&b, "a")).unwrap()));
        assert_eq!(ax.exponent_range, (-3, 3));
    }

    #[test]
    fn contract_errors() {
        let b = ball(GroupSpec::free(2), 4);
        assert!(matches!(axis_quasiline(&b, &Word::empty(), 0), Err(Error::Trivial(_))));
        let q = axis_quasiline(&b, &word(&b, "a"), 0).unwrap().quasi_line;
        assert!(quasiline_ends(&b, &q, 4).is_err());
    }
}
