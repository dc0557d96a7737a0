//! Lines, loop removal and quasi-lines around cyclic subgroups.

mod axis;
mod line;

pub use axis::{
    axis_quasiline, distortion_profile, quasiline_ends, AxisQuasiLine, QuasiLine, QuasiLineReport,
};
pub use line::{embed_line, embed_line_traced, repeat_size, CollapsePass, Line};
