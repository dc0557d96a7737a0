use serde::Serialize;

use crate::cayley::{bfs, components, CayleyBall, UNREACHED};
use crate::error::{Error, Result};
use crate::quasiline::QuasiLine;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    CandidateEssential,
    Bounded,
}

/// How the margin separating essential from bounded components is chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MarginRule {
    /// `2 * thickness + 2`.
    Default,
    Fixed(usize),
}

impl MarginRule {
    pub fn margin(&self, thickness: usize) -> usize {
        match *self {
            MarginRule::Default => 2 * thickness + 2,
            MarginRule::Fixed(m) => m,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Component {
    pub vertices: Vec<usize>,
    pub touches_sphere: bool,
    /// Largest in-ball distance from a vertex of the component to the support.
    pub max_distance: usize,
    pub class: Classification,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComponentReport {
    pub margin: usize,
    pub components: Vec<Component>,
    /// Smallest m such that every candidate-essential component meets
    /// `B_m(p)` for every line vertex p.
    pub m0: Option<usize>,
    /// Largest distance from the support reached by a bounded component.
    pub m1: Option<usize>,
}

impl ComponentReport {
    pub fn essential_count(&self) -> usize {
        self.components
            .iter()
            .filter(|c| c.class == Classification::CandidateEssential)
            .count()
    }

    pub fn bounded_count(&self) -> usize {
        self.components.len() - self.essential_count()
    }
}

/// Labels the components of `ball − support`. A component is
/// candidate-essential when it reaches the outer sphere and strays more
/// than `margin` from the support.
pub fn components_classify(ball: &CayleyBall, l: &QuasiLine, margin: usize) -> Result<ComponentReport> {
    if margin == 0 {
        return Err(Error::Precondition("margin must be at least 1".into()));
    }
    if l.support.is_empty() {
        return Err(Error::EmptySet);
    }
    let support_mask = l.support.mask(ball.len());
    let rest: Vec<bool> = support_mask.iter().map(|&s| !s).collect();
    let to_support = bfs(ball, l.support.iter(), None);
    let mut comps = Vec::new();
    for c in components(ball, &rest) {
        let touches = c.iter().any(|&v| ball.dist0(v) == ball.radius());
        let far = c.iter().map(|&v| to_support[v]).max().unwrap_or(0);
        debug_assert!(far != UNREACHED, "balls are connected");
        let far = far as usize;
        let class = if touches && far > margin {
            Classification::CandidateEssential
        } else {
            Classification::Bounded
        };
        comps.push(Component {
            vertices: c,
            touches_sphere: touches,
            max_distance: far,
            class,
        });
    }

    let mut m0: Option<usize> = None;
    for c in comps.iter().filter(|c| c.class == Classification::CandidateEssential) {
        let d = bfs(ball, c.vertices.iter().copied(), None);
        let worst = l.line.vertices.iter().map(|&p| d[p] as usize).max().unwrap_or(0);
        m0 = Some(m0.map_or(worst, |m| m.max(worst)));
    }
    let m1 = comps
        .iter()
        .filter(|c| c.class == Classification::Bounded)
        .map(|c| c.max_distance)
        .max();
    Ok(ComponentReport {
        margin,
        components: comps,
        m0,
        m1,
    })
}

/// Number of candidate-essential components: `L` is n-parting for every
/// n up to this count.
pub fn parting_number(ball: &CayleyBall, l: &QuasiLine, margin: usize) -> Result<usize> {
    Ok(components_classify(ball, l, margin)?.essential_count())
}
