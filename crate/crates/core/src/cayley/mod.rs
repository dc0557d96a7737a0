//! Finite metric balls in Cayley graphs and the metric primitives on them.

mod ball;
mod metric;
mod subgroup;
mod vertex_set;

pub use ball::{
    build_ball, build_ball_with_cap, default_vertex_cap, BallSummary, CayleyBall,
    DEFAULT_VERTEX_CAP, VERTEX_CAP_ENV,
};
pub use metric::{
    bfs, bfs_filtered, components, distance, ends_estimate, hausdorff, neighborhood, Distance,
    Hausdorff, Window, UNREACHED,
};
pub use vertex_set::VertexSet;
pub use subgroup::{
    conjugate_subgroup, coset, coset_powers, cyclic_subgroup, powers_in_ball, POWER_LIMIT,
};
