//! Tilings of integer m-by-n rectangles by integer squares of side length at
//! least 2: a closed-form tileability characterization, an exhaustive
//! backtracking search, constructive tilers for arbitrarily large instances,
//! an independent verifier, and a guillotine-join reachability analysis.

pub mod closure;
pub mod construct;
pub mod search;
pub mod theory;
pub mod tiling;

pub use tiling::{verify, Failure, Placement, Rect, Tiling, VerificationReport};
