use crate::cayley::CayleyBall;
use crate::error::{Error, Result};
use crate::presentation::Family;

/// Letter codes for `a`, `A`, `b`, `B`.
const A: usize = 0;
const B: usize = 2;

/// Lattice path following the line `y = slope·x` through the origin in the
/// ℤ² Cayley graph: each step crosses the next vertical (`a`) or
/// horizontal (`b`) half-integer gridline. Both directions are followed
/// until the path would leave the ball.
pub fn sloped_line_walk(ball: &CayleyBall, slope: f64) -> Result<Vec<usize>> {
    let spec = ball.oracle().spec();
    if !matches!(spec.family, Family::FreeAbelian) || spec.generator_count() != 2 {
        return Err(Error::Precondition("sloped lines live in the rank-2 free abelian group".into()));
    }
    if !(slope.is_finite() && slope > 0.0) {
        return Err(Error::Precondition("slope must be positive and finite".into()));
    }
    let half = |forward: bool| {
        let (mut kx, mut ky) = (0u32, 0u32);
        let mut v = 0;
        let mut out = Vec::new();
        loop {
            let x_cross = f64::from(kx) + 0.5;
            let y_cross = (f64::from(ky) + 0.5) / slope;
            let code = if x_cross <= y_cross { A } else { B };
            // Backwards is the point reflection: inverse letters.
            let code = if forward { code } else { code + 1 };
            match ball.step(v, code) {
                Some(u) => {
                    if code / 2 == 0 {
                        kx += 1;
                    } else {
                        ky += 1;
                    }
                    out.push(u);
                    v = u;
                }
                None => return out,
            }
        }
    };
    let mut walk: Vec<usize> = half(false).into_iter().rev().collect();
    walk.push(0);
    walk.extend(half(true));
    Ok(walk)
}
