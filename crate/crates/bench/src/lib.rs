//! Benchmark fixtures shared by the criterion suites.

use realforms_core::builders::{build_alternating, build_hessian216, build_quaternion};
use realforms_core::FiniteGroup;

/// Groups whose automorphism groups dominate reproduction runtime.
pub fn heavy_groups() -> Vec<FiniteGroup> {
    vec![
        build_quaternion(3).expect("Q8"),
        build_alternating(5).expect("A5"),
        build_hessian216().expect("Hessian group"),
        build_alternating(6).expect("A6"),
    ]
}
