//! Algorithms for burning graphs: an exhaustive exact solver, a burner
//! parameterized by minimum degree, and burners for graphs given with a
//! path or tree decomposition of small length.

pub mod decomp;
pub mod dense;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod pathlen;
pub mod process;
pub mod treelen;

pub use error::Error;
pub use graph::{DistanceOracle, Graph, MetricSummary};
pub use process::{BurnReport, BurningSchedule};

/// ⌈√x⌉ for nonnegative integers.
pub fn ceil_sqrt(x: u64) -> u64 {
    let s = x.isqrt();
    if s * s == x {
        s
    } else {
        s + 1
    }
}
