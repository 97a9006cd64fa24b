//! Angle arithmetic on the circle.
//!
//! All phases in this crate live on [0, 2π); angle *differences* are compared
//! after reduction to (−π, π], so that congruence modulo 2π never depends on
//! which branch a caller happened to produce.

/// One full turn.
pub const TAU: f64 = 2.0 * std::f64::consts::PI;

/// Reduces an angle to the canonical interval [0, 2π).
///
/// An input equal to 2π (or any multiple of it) maps to 0.
pub fn wrap_two_pi(x: f64) -> f64 {
    let r = x.rem_euclid(TAU);
    // rem_euclid of a tiny negative can round up to exactly 2π.
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// Reduces an angle difference to (−π, π].
pub fn wrap_pi(x: f64) -> f64 {
    let r = x.rem_euclid(TAU);
    if r > std::f64::consts::PI {
        r - TAU
    } else {
        r
    }
}
