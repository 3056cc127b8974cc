//! Swarmlead: trajectory generation and leader-follower detection for
//! collective motion.
//!
//! The crate has three layers:
//!
//! * [`sim`] — two agent-based simulators with known leadership structure:
//!   a Vicsek-style alignment model with informed leaders and a wolf-sheep
//!   predation model with a single pack-coordinating alpha.
//! * [`methods`] — three competing detectors that turn agent trajectories
//!   into a directed influence matrix: time-lagged correlation network
//!   inference, transfer entropy (k-nearest-neighbor estimation), and
//!   time-lagged mutual information (binned).
//! * [`evaluation`] — leadership rankings, top-k hit rates, detection
//!   histograms, and the multi-seed benchmark harness tying it together.
//!
//! [`trajectory`] defines the common data model: per-agent position tracks
//! with role labels, derived kinematics (velocity, speed, acceleration,
//! heading), and the trajectory CSV interchange format.

pub mod error;
pub mod evaluation;
pub mod influence;
pub mod methods;
pub mod rng;
pub mod sim;
pub mod trajectory;

pub use error::{Error, Result};
pub use influence::InfluenceMatrix;
pub use trajectory::{AgentId, Role, TrajectorySet, Variable};
