use crate::error::{Error, Result};
use crate::presentation::{FbcElement, FreeAutomorphism, Semidirect, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prop93Result {
    pub m_k: Word,
    /// `g` commutes with `(f t)^k`.
    pub lhs_holds: bool,
    /// `α^k(g) = m_k⁻¹ g m_k`.
    pub rhs_holds: bool,
}

/// `m_k = f · α(f) · α²(f) ··· α^(k-1)(f)`, freely reduced.
pub fn m_k(aut: &FreeAutomorphism, f: &Word, k: u32) -> Result<Word> {
    let mut out = Word::empty();
    let mut cur = f.reduced();
    for _ in 0..k {
        out = out.mul_reduced(&cur);
        cur = aut.apply(&cur)?;
    }
    Ok(out)
}

/// Evaluates both sides of the commuting criterion for `h = f t`
/// independently: the left side by multiplying normal forms in the
/// semidirect product, the right side by applying `α^k` in the free group.
pub fn prop93_check(f: &Word, aut: &FreeAutomorphism, g: &Word, k: u32) -> Result<Prop93Result> {
    if k == 0 {
        return Err(Error::Precondition("k must be at least 1".into()));
    }
    let sd = Semidirect::new(aut)?;
    let h = FbcElement { f: f.reduced(), l: 1 };
    let mut hk = FbcElement::identity();
    for _ in 0..k {
        hk = sd.mul(&hk, &h);
    }
    let g_el = FbcElement { f: g.reduced(), l: 0 };
    let lhs = sd.mul(&sd.mul(&g_el, &hk), &sd.inverse(&g_el)) == hk;

    let m = m_k(aut, f, k)?;
    let gk = aut.power(k).apply(g)?;
    let rhs = gk == m.inverse().mul_reduced(g).mul_reduced(&m);
    Ok(Prop93Result {
        m_k: m,
        lhs_holds: lhs,
        rhs_holds: rhs,
    })
}
