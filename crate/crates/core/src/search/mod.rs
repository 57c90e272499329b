//! Exhaustive search for net-regular SRSGs.

mod census;
mod classify;
mod constrained;
mod factors;
mod generate;

pub use census::{census_file, ingest_census, Census, CensusError};
pub use classify::{
    classify, classify_range, negative_regularity, Budget, Classification, Mode, RangeOptions, SearchReport, Source,
    StratumNote, Survivor,
};
pub use constrained::Target;
pub use factors::{enumerate_negative_subgraphs, k_factors, sign_by_factor, Factor};
pub use generate::gen_regular;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("order {0} outside the supported range")]
    BadOrder(usize),
    #[error("no {r}-regular graph on {n} vertices: need r < n and n*r even")]
    Parity { n: usize, r: usize },
    #[error("net-degree {rho} incompatible with degree {r}")]
    NetParity { r: usize, rho: i64 },
    #[error("census: {0}")]
    Census(String),
}
