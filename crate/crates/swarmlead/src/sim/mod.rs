//! Agent-based simulators with known leadership structure.
//!
//! Both models run in a bounded (non-toroidal) square world, advance one
//! tick at a time in a fixed agent order, and are bit-deterministic under a
//! fixed seed (see [`crate::rng`] for the stream-splitting rule). A run of
//! `steps` records exactly `steps` ticks, the first being the initial state.

pub mod vicsek;
pub mod wolfsheep;

pub use vicsek::{VicsekConfig, VicsekSim};
pub use wolfsheep::{WolfKind, WolfSheepConfig, WolfSheepSim};

pub(crate) fn clamp(v: f64, lo: f64, hi: f64) -> f64 {
    v.max(lo).min(hi)
}

/// Heading after reflecting a velocity component at an axis-aligned wall.
/// `flip_x` mirrors across the vertical axis, `flip_y` across the horizontal.
pub(crate) fn reflect_heading(heading_deg: f64, flip_x: bool, flip_y: bool) -> f64 {
    let h = match (flip_x, flip_y) {
        (false, false) => heading_deg,
        (true, false) => 180.0 - heading_deg,
        (false, true) => -heading_deg,
        (true, true) => 180.0 + heading_deg,
    };
    h.rem_euclid(360.0)
}
