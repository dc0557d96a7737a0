use super::root::free_root;
use crate::error::{Error, Result};
use crate::presentation::Word;

/// One solution of `g x g⁻¹ = y`; all solutions are `m0 · ⟨centralizer⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conjugator {
    pub m0: Word,
    pub centralizer: Word,
}

/// Offset `i` with `core_x` rotated left by `i` equal to `core_y`.
pub(crate) fn rotation_offset(core_x: &Word, core_y: &Word) -> Option<usize> {
    let (x, y) = (core_x.letters(), core_y.letters());
    if x.len() != y.len() {
        return None;
    }
    (0..x.len().max(1)).find(|&i| x[i..].iter().chain(&x[..i]).eq(y.iter()))
}

/// Solves the conjugacy problem in a free group.
///
/// Writing `x = u p u⁻¹` and `y = v q v⁻¹` with cyclically reduced cores,
/// a solution exists iff `q` is a rotation `s⁻¹ p s` of `p`, and then
/// `g = v s⁻¹ u⁻¹`.
pub fn conjugator_solve(x: &Word, y: &Word) -> Result<Option<Conjugator>> {
    let (x, y) = (x.reduced(), y.reduced());
    if x.is_empty() || y.is_empty() {
        return Err(Error::Trivial("conjugacy needs nontrivial words".into()));
    }
    let (u, p) = x.cyclic_decomposition();
    let (v, q) = y.cyclic_decomposition();
    let Some(i) = rotation_offset(&p, &q) else {
        return Ok(None);
    };
    let s = Word::from_letters(p.letters()[..i].to_vec());
    let m0 = v.concat(&s.inverse()).concat(&u.inverse()).reduced();
    debug_assert_eq!(m0.mul_reduced(&x).mul_reduced(&m0.inverse()), y);
    Ok(Some(Conjugator {
        m0,
        centralizer: free_root(&x)?.root,
    }))
}
