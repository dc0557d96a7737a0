//! Explicit constants for quasi-line arguments, integerized as the least
//! integer strictly above each real bound.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A nondecreasing control function with `φ(t) >= t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PhiSpec {
    /// `t -> s·t + c`.
    Affine { s: u64, c: u64 },
    /// `table[t]`, extended by its last value.
    Table { values: Vec<u64> },
}

impl PhiSpec {
    pub fn identity() -> PhiSpec {
        PhiSpec::Affine { s: 1, c: 0 }
    }

    /// Rejects decreasing tables and any sample below the diagonal.
    pub fn validate(&self) -> Result<()> {
        match self {
            PhiSpec::Affine { s, .. } if *s == 0 => Err(Error::Precondition("phi(t) >= t needs slope >= 1".into())),
            PhiSpec::Affine { .. } => Ok(()),
            PhiSpec::Table { values } => {
                if values.is_empty() {
                    return Err(Error::EmptySet);
                }
                if values.windows(2).any(|w| w[0] > w[1]) {
                    return Err(Error::Precondition("phi table must be nondecreasing".into()));
                }
                match values.iter().enumerate().find(|(t, &v)| v < *t as u64) {
                    Some((t, v)) => Err(Error::Precondition(format!("phi({}) = {} is below the diagonal", t, v))),
                    None => Ok(()),
                }
            }
        }
    }

    pub fn eval(&self, t: u64) -> Result<u64> {
        let v = match self {
            PhiSpec::Affine { s, c } => s * t + c,
            PhiSpec::Table { values } => {
                let last = *values.last().ok_or(Error::EmptySet)?;
                values.get(t as usize).copied().unwrap_or(last)
            }
        };
        if v < t {
            return Err(Error::Precondition(format!("phi({}) = {} is below the diagonal", t, v)));
        }
        Ok(v)
    }
}

/// Least integer strictly above `twice / 2`.
fn above_half(twice: u64) -> u64 {
    twice / 2 + 1
}

/// Least integer above `½φ(2(x₂+N)) + 2N + x₂`.
pub fn lemma31_x1(phi: &PhiSpec, n: u64, x2: u64) -> Result<u64> {
    phi.validate()?;
    let p = phi.eval(2 * (x2 + n))?;
    Ok(above_half(p + 2 * (2 * n + x2)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Inequality {
    pub name: String,
    pub value: u64,
    /// Twice the real lower bound, so half-integers stay exact.
    pub twice_bound: u64,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConstantChain {
    pub phi: PhiSpec,
    pub n: u64,
    pub m: u64,
    pub r2: u64,
    #[serde(rename = "R")]
    pub big_r: u64,
    #[serde(rename = "K1")]
    pub k1: u64,
    pub r1: u64,
    #[serde(rename = "K")]
    pub k: u64,
    /// `r₂ > max(r₁, m₀)`: checked against `r₁` here, `m₀` is the caller's.
    pub caller_asserted: String,
    pub inequalities: Vec<Inequality>,
}

/// Computes `R`, `K₁`, `r₁`, `K` in order from `φ`, `N`, `M` and the
/// caller-supplied `r₂`.
pub fn appendix_chain(phi: &PhiSpec, n: u64, m: u64, r2: u64) -> Result<ConstantChain> {
    phi.validate()?;
    let big_r = above_half(phi.eval(2 * n)? + 2 * (n + m));
    let k1 = above_half(phi.eval(2 * (n + big_r + 1))? + 2 * (2 * n + big_r + 1 + n));
    let r1 = k1 + n + 1;
    if r2 <= r1 {
        return Err(Error::Precondition(format!("r2 = {} must exceed r1 = {}", r2, r1)));
    }
    let s = k1 + n + r2;
    let k = above_half(phi.eval(s)? + s).max(r2 + big_r + 2);
    let mut chain = ConstantChain {
        phi: phi.clone(),
        n,
        m,
        r2,
        big_r,
        k1,
        r1,
        k,
        caller_asserted: "r2 > m0".into(),
        inequalities: Vec::new(),
    };
    chain.inequalities = recheck(&chain)?;
    Ok(chain)
}

/// Substitutes a chain back into the inequality list.
pub fn recheck(c: &ConstantChain) -> Result<Vec<Inequality>> {
    let (phi, n, m) = (&c.phi, c.n, c.m);
    let s = c.k1 + n + c.r2;
    let rows = [
        ("R > phi(2N)/2 + N + M", c.big_r, phi.eval(2 * n)? + 2 * (n + m)),
        (
            "K1 > phi(2(N+R+1))/2 + (2N+R+1) + N",
            c.k1,
            phi.eval(2 * (n + c.big_r + 1))? + 2 * (3 * n + c.big_r + 1),
        ),
        ("r1 > K1 + N", c.r1, 2 * (c.k1 + n)),
        ("r2 > r1", c.r2, 2 * c.r1),
        ("K > (phi(K1+N+r2) + K1+N+r2)/2", c.k, phi.eval(s)? + s),
        ("K > r2 + R + 1", c.k, 2 * (c.r2 + c.big_r + 1)),
    ];
    Ok(rows
        .into_iter()
        .map(|(name, value, twice_bound)| Inequality {
            name: name.into(),
            value,
            twice_bound,
            holds: 2 * value > twice_bound,
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn x1_examples() {
        let id = PhiSpec::identity();
        assert_eq!(lemma31_x1(&id, 2, 3).unwrap(), 13);
        assert_eq!(lemma31_x1(&id, 0, 0).unwrap(), 1);
        for n in 0..5 {
            for x2 in 0..5 {
                assert!(lemma31_x1(&id, n, x2).unwrap() > x2);
            }
        }
        assert!(lemma31_x1(&PhiSpec::Table { values: vec![0, 0] }, 0, 0).is_err());
    }

    #[test]
    fn chain_examples() {
        let id = PhiSpec::identity();
        let c = appendix_chain(&id, 1, 2, 25).unwrap();
        assert_eq!((c.big_r, c.k1, c.r1, c.k), (5, 17, 19, 44));
        assert!(c.inequalities.iter().all(|i| i.holds));
        let c = appendix_chain(&id, 0, 0, 7).unwrap();
        assert_eq!((c.big_r, c.k1, c.r1, c.k), (1, 5, 6, 13));
        assert!(appendix_chain(&id, 1, 2, 19).is_err());
    }

    #[test]
    fn odd_values_round_up() {
        // phi(t) = t + 1 makes every bound a half-integer.
        let phi = PhiSpec::Affine { s: 1, c: 1 };
        assert_eq!(lemma31_x1(&phi, 0, 0).unwrap(), 1);
        assert_eq!(lemma31_x1(&phi, 1, 0).unwrap(), 4);
    }
}
