//! Combinatorics of set partitions and perfect matchings on a line:
//! arc diagrams, their scalar statistics (depth index, intertwining number,
//! crossings/nestings/alignments, spans, the involution length), exact
//! q-polynomial arithmetic, exhaustive enumeration, the strong Bruhat order
//! on fixed-point-free involutions, statistic-exchanging bijections, and an
//! identity suite that verifies every implemented relation at desk scale.
//!
//! The central objects:
//!
//! * [`SetPartition`]: a partition of `{1, ..., n}` in standard form, with
//!   bar notation `1378|26|45` and an arc diagram joining consecutive block
//!   elements.
//! * [`PerfectMatching`]: a partition of `[2n]` into blocks of size 2,
//!   equivalently a fixed-point-free involution; text form `1-4,2-3`.
//! * [`QPolynomial`]: dense exact-integer polynomials in `q`, enough to
//!   state the generating-function results such as
//!   `sum q^ell = [2n-1]_q!!` over all matchings.

pub mod arc;
pub mod bruhat;
pub mod enumerate;
pub mod error;
pub mod matching;
pub mod partition;
pub mod qpoly;
pub mod stats;
pub mod symmetry;
pub mod verify;

pub use arc::{Arc, Endpoint, GeneralizedArc};
pub use enumerate::{perfect_matchings, set_partitions, DistributionTable, Family, Statistic};
pub use error::Error;
pub use matching::PerfectMatching;
pub use partition::SetPartition;
pub use qpoly::QPolynomial;
pub use stats::{ArcDiagram, PartitionStatRecord, StatRecord};
