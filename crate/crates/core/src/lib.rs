//! Concurrence vectors for multipartite pure states.
//!
//! The entanglement of a pure state is read off from a vector whose
//! components are built from the defining representation of the rotation
//! groups SO(N) of every subsystem. For two parties the norm of that vector
//! coincides with the I-concurrence; for more parties the vector splits into
//! one subvector per pair of subsystems, and the norm of each subvector is the
//! pairwise contribution to the total.
//!
//! Modules:
//!
//! - [`state`]: dense pure states, index arithmetic, the named state families.
//! - [`son`]: SO(N) generators with their Levi-Civita signs.
//! - [`bipartite`]: two-party concurrence vector and the classical measures
//!   it is checked against (I-concurrence, entropy, entanglement of formation).
//! - [`multipartite`]: pairwise subvectors and the total concurrence.
//! - [`oracle`]: dense density-matrix evaluation of the operator definition,
//!   used only for verification.
//! - [`io`] and [`cli`]: state files, reports, sweeps and the command line.

pub mod bipartite;
pub mod cli;
mod error;
pub mod io;
pub mod linalg;
pub mod multipartite;
pub mod oracle;
pub mod son;
pub mod state;

pub use error::{Error, Result};
pub use num_complex::Complex64;

pub use bipartite::{BipartiteConcurrenceVector, ReducedDensity, Side};
pub use multipartite::{ConcurrenceReport, PairwiseSubvector, Separability};
pub use son::SonGenerator;
pub use state::PureState;

/// Amplitude type used throughout the crate.
pub type ComplexScalar = Complex64;

/// Tolerance on Σ|a|² when a state is accepted without renormalization.
pub const NORM_TOLERANCE: f64 = 1e-8;

/// Default threshold below which a total concurrence counts as zero.
pub const DEFAULT_SEPARABILITY_TOL: f64 = 1e-10;
