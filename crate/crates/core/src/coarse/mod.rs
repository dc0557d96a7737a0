//! Maps between groups and what they do to distances and quasi-lines.

mod inverse;
mod map;
mod profile;
mod pushforward;
mod rips;
mod slope;

pub use inverse::{coarse_inverse, CoarseInverse, CoarseInverseReport};
pub use map::{ExplicitMap, MapFile, MapKind};
pub use profile::{ud_profile, UdProfile};
pub use pushforward::{pushforward_qline, PushforwardReport};
pub use rips::rips_components;
pub use slope::sloped_line_walk;
