use super::ball::CayleyBall;
use super::vertex_set::VertexSet;
use crate::error::{Error, Result};
use crate::presentation::{Certificate, Family, NormalFormOracle, Word};

/// Default cap on |n| when enumerating powers h^n.
pub const POWER_LIMIT: usize = 512;

/// True once no power beyond `power` can have length at most `radius`, or
/// once further products would leave the certified range of the oracle.
fn past_reach(
    oracle: &NormalFormOracle,
    h: &Word,
    power: &Word,
    n: usize,
    radius: usize,
    extra: usize,
) -> bool {
    match &oracle.spec().family {
        // |u v^n u^-1| = 2|u| + n|v| grows strictly, as does |n·v|_1
        Family::Free | Family::FreeAbelian => power.len() > radius,
        Family::FreeByCyclic { automorphism } => {
            let s = oracle.semidirect().expect("free-by-cyclic oracle");
            let l = s.parse_normal_form(h).l;
            if l != 0 {
                // word length bounds the t-exponent sum
                (n as i64 * l.abs()) as usize > radius
            } else {
                let id = automorphism.images().iter().enumerate().all(|(i, w)| {
                    w.len() == 1 && w.letters()[0].generator() == i && !w.letters()[0].is_inverse()
                });
                // in F_n × Z the free part is undistorted
                id && power.len() > radius
            }
        }
        Family::Rewriting { .. } => match oracle.certificate() {
            Certificate::Exact => false,
            Certificate::Bounded(b) => power.len() + h.len() + extra > b,
        },
    }
}

/// Calls `visit(n, h^n)` for `1 <= |n| <= limit` in each direction until
/// the family guarantees no further power has length at most `reach`.
fn for_each_power(
    oracle: &NormalFormOracle,
    h: &Word,
    reach: usize,
    limit: usize,
    extra: usize,
    mut visit: impl FnMut(i64, &Word),
) -> Result<()> {
    for sign in [1i64, -1] {
        let step = if sign > 0 { h.clone() } else { oracle.inverse(h) };
        let mut power = Word::empty();
        for n in 1..=limit {
            power = oracle.multiply(&power, &step);
            if power.is_empty() {
                return Err(Error::Precondition(format!(
                    "{} has finite order {}",
                    oracle.spec().format_word(h),
                    n
                )));
            }
            visit(sign * n as i64, &power);
            if past_reach(oracle, &step, &power, n, reach, extra) {
                break;
            }
        }
    }
    Ok(())
}

/// The powers `h^n`, `|n| <= limit`, that lie in the ball, as
/// `(n, vertex)` pairs sorted by `n`. Enumeration in each direction stops
/// early when the family guarantees no further power can return.
pub fn powers_in_ball(ball: &CayleyBall, h: &Word, limit: usize) -> Result<Vec<(i64, usize)>> {
    coset_powers(ball, &Word::empty(), h, limit)
}

/// The pairs `(n, vertex of g h^n)` for `g h^n` in the ball.
pub fn coset_powers(ball: &CayleyBall, g: &Word, h: &Word, limit: usize) -> Result<Vec<(i64, usize)>> {
    let oracle = ball.oracle();
    let h = oracle.normal_form(h)?;
    let g = oracle.normal_form(g)?;
    if h.is_empty() {
        return Err(Error::Trivial("subgroup generator".into()));
    }
    let mut out = Vec::new();
    if let Some(v) = ball.index_of(&g) {
        out.push((0, v));
    }
    // |g h^n| >= |h^n| - |g|
    let reach = ball.radius() + g.len();
    for_each_power(oracle, &h, reach, limit, g.len(), |n, p| {
        let w = if g.is_empty() { p.clone() } else { oracle.multiply(&g, p) };
        if let Some(v) = ball.index_of(&w) {
            out.push((n, v));
        }
    })?;
    out.sort_unstable();
    Ok(out)
}

/// `⟨h⟩ ∩ ball` as a vertex set.
pub fn cyclic_subgroup(ball: &CayleyBall, h: &Word) -> Result<VertexSet> {
    Ok(powers_in_ball(ball, h, POWER_LIMIT)?.into_iter().map(|(_, v)| v).collect())
}

/// `g⟨h⟩ ∩ ball` as a vertex set.
pub fn coset(ball: &CayleyBall, g: &Word, h: &Word) -> Result<VertexSet> {
    Ok(coset_powers(ball, g, h, POWER_LIMIT)?.into_iter().map(|(_, v)| v).collect())
}

/// `g⟨h⟩g^-1 ∩ ball`.
pub fn conjugate_subgroup(ball: &CayleyBall, g: &Word, h: &Word) -> Result<VertexSet> {
    let oracle = ball.oracle();
    let conj = oracle.multiply(&oracle.multiply(g, h), &oracle.inverse(g));
    cyclic_subgroup(ball, &conj)
}
