//! Moving points of a disk onto the vertices of a regular polygon on its boundary.
//!
//! The bottleneck (min-max) objective is handled as a decision and as an exact
//! optimization. Total movement (min-sum) is solved exactly when the points already lie
//! on the circle and approximated within a factor of 3 otherwise. Brute-force
//! references live in [`oracles`].

pub mod geom;
pub mod matching;
pub mod dynamic;
pub mod oracles;
pub mod decision;
pub mod optimize;
pub mod minsum;
