use serde::Serialize;

use crate::cayley::{coset, CayleyBall, Hausdorff, VertexSet, Window};
use crate::error::{Error, Result};
use crate::presentation::Word;

/// Restricted Hausdorff distances between cosets `g_i H`.
#[derive(Clone, Debug, Serialize)]
pub struct CosetMetric {
    pub h: String,
    pub representatives: Vec<String>,
    pub table: Vec<Vec<Hausdorff>>,
}

impl CosetMetric {
    pub fn value(&self, i: usize, j: usize) -> Option<usize> {
        self.table[i][j].value
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("coset");
        for r in &self.representatives {
            out.push(',');
            out.push_str(r);
        }
        out.push('\n');
        for (i, row) in self.table.iter().enumerate() {
            out.push_str(&self.representatives[i]);
            for d in row {
                out.push(',');
                match d.value {
                    Some(v) => out.push_str(&v.to_string()),
                    None => out.push_str("inf"),
                }
            }
            out.push('\n');
        }
        out
    }
}

/// Distance between `g_i H` and `g_j H` inside the lens
/// `B_R(e) ∩ B_R(g_i) ∩ B_R(g_j)`, so that the table is invariant under
/// left translation of the representatives.
pub fn coset_metric(ball: &CayleyBall, members: &[Word], h: &Word) -> Result<CosetMetric> {
    if members.is_empty() {
        return Err(Error::EmptySet);
    }
    let oracle = ball.oracle();
    let members = members
        .iter()
        .map(|g| oracle.normal_form(g))
        .collect::<Result<Vec<_>>>()?;
    let cosets = members
        .iter()
        .map(|g| coset(ball, g, h))
        .collect::<Result<Vec<_>>>()?;
    let n = members.len();
    let zero = Hausdorff { value: Some(0), exact: true };
    let mut table = vec![vec![zero; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let mut window = Window::new(ball, &[members[i].clone(), members[j].clone()]);
            let a: VertexSet = cosets[i].iter().filter(|&v| window.contains(v)).collect();
            let b: VertexSet = cosets[j].iter().filter(|&v| window.contains(v)).collect();
            if a.is_empty() || b.is_empty() {
                return Err(Error::Precondition(format!(
                    "radius {} is too small for the cosets of {} and {}",
                    ball.radius(),
                    oracle.spec().format_word(&members[i]),
                    oracle.spec().format_word(&members[j])
                )));
            }
            let d = window.hausdorff(&a, &b)?;
            table[i][j] = d;
            table[j][i] = d;
        }
    }
    Ok(CosetMetric {
        h: oracle.spec().format_word(h),
        representatives: members.iter().map(|g| oracle.spec().format_word(g)).collect(),
        table,
    })
}
