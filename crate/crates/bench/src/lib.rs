//! Shared fixtures for the benchmark suite.

use prym_core::curve::{new_curve, BiellipticCurve};
use prym_core::qalg::rat::int;

/// The three worked curves, in spec order.
pub fn worked_curves() -> Vec<BiellipticCurve> {
    vec![
        new_curve(int(0), int(0), int(1), int(-6), int(5), int(0)).unwrap(),
        new_curve(int(1), int(-1), int(0), int(2), int(-3), int(0)).unwrap(),
        new_curve(int(1), int(-2), int(3), int(-4), int(3), int(0)).unwrap(),
    ]
}
