//! Principal component analysis for interval-valued (symbolic) data.
//!
//! Each object is described by intervals `[lo, hi]` instead of single
//! numbers. The centers method runs an ordinary PCA on the interval
//! midpoints and then projects the interval boxes onto the components:
//!
//! * objects give interval principal components ([`pca::PcaResult::scores`]);
//! * variables give interval correlations with the components
//!   ([`pca::PcaResult::correlations`]), the rectangles of the symbolic
//!   correlation circle.
//!
//! Both come from one eigendecomposition, of either `ZZᵗ` (objects) or
//! `ZᵗZ` (variables), linked by `u = Zᵗv/√λ` and `v = Zu/√λ`.
//! [`pca::pca_auto`] solves whichever is smaller.
//!
//! ```
//! use symbolic_pca::{datasets, pca};
//!
//! let oils = datasets::oils();
//! let result = pca::pca_auto(&oils, None).unwrap();
//! assert_eq!(result.method_used, pca::Method::Ztz);
//! let gra = result.correlations.clamped_unit().get(0, 0);
//! assert!(gra.contains(result.center_correlations[(0, 0)]));
//! ```
//!
//! The runnable programs under `examples/` walk through each capability;
//! the `symbolic-pca` binary exposes the same operations on CSV files.

pub mod bench;
pub mod cli;
pub mod datasets;
pub mod error;
pub mod interval;
pub mod linalg;
pub mod pca;
pub mod render;
pub mod table;

pub use error::{Error, Result};
pub use interval::{interval_project, vertex_extremes, BoundsPair, Interval, IntervalMatrix};
pub use linalg::{dual_u_from_v, dual_v_from_u, eigen_sym, EigenDecomposition, Matrix};
pub use pca::{pca_auto, pca_ztz, pca_zzt, Method, PcaResult};
