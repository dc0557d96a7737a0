//! Built-in groups, addressable by short name.

use super::spec::GroupSpec;
use crate::error::{Error, Result};

const BS12: &str = include_str!("../../../../data/groups/bs12.json");
const F2_SWAP: &str = include_str!("../../../../data/groups/f2_swap.json");
const F2_FIB: &str = include_str!("../../../../data/groups/f2_fib.json");

pub const NAMES: &[&str] = &["z", "f2", "z2", "f2xz", "f2_swap", "f2_fib", "bs12"];

/// Looks up a built-in group: `z`, `f2`, `z2`, `f2xz`, `f2_swap`,
/// `f2_fib` or `bs12` (a length-20 truncation of the shortlex complete
/// system for BS(1,2)).
pub fn builtin(name: &str) -> Result<GroupSpec> {
    match name {
        "z" => Ok(named(GroupSpec::free(1), "Z")),
        "f2" => Ok(named(GroupSpec::free(2), "F2")),
        "z2" => Ok(named(GroupSpec::free_abelian(2), "Z^2")),
        "f2xz" => Ok(named(GroupSpec::free_times_z(2), "F2 x Z")),
        "f2_swap" => GroupSpec::from_json(F2_SWAP),
        "f2_fib" => GroupSpec::from_json(F2_FIB),
        "bs12" => GroupSpec::from_json(BS12),
        _ => Err(Error::Spec(format!(
            "unknown built-in group '{}' (known: {})",
            name,
            NAMES.join(", ")
        ))),
    }
}

fn named(mut spec: GroupSpec, name: &str) -> GroupSpec {
    spec.name = name.into();
    spec
}
