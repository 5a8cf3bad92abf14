//! Range-free localization for 2-D wireless sensor networks.
//!
//! Three estimators share one simulation pipeline:
//!
//! * **GRL**: a centroid of all reachable anchors weighted by `φ^(−hops)`,
//!   with anchors on a golden-angle spiral and a `φ`-scaled radio range;
//! * **DV-Hop**: hop counts turned into distances with an average hop size,
//!   then least-squares multilateration;
//! * **Centroid**: the plain mean of anchors in direct range.
//!
//! The pipeline is deployment → unit-disk graph → anchor hop counts →
//! estimates → energy and error metrics, repeated over seeded Monte Carlo
//! trials by [`experiment::run_experiment`].

pub mod deployment;
pub mod energy;
pub mod experiment;
pub mod geometry;
pub mod localization;
pub mod metrics;
pub mod network;
pub mod rng;

pub use geometry::{distance, FieldSpec, Point2D, GOLDEN_ANGLE, PHI};
pub use localization::Algorithm;
