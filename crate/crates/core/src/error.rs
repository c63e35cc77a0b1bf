use thiserror::Error;

use crate::symfunc::Partition;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts {0:?} do not form a partition (must be weakly decreasing)")]
    NotAPartition(Vec<u32>),
    #[error("weight mismatch: |{0}| != |{1}|")]
    WeightMismatch(Partition, Partition),
    #[error("invalid ranks: need 1 <= r < n, got n = {n}, r = {r}")]
    InvalidRanks { n: u32, r: u32 },
    #[error("rank mismatch: G({0}, {1}) vs G({2}, {3})")]
    RankMismatch(u32, u32, u32, u32),
    #[error("expression is not homogeneous (degrees {0:?})")]
    NotHomogeneous(Vec<u32>),
    #[error("{0} already lies in the {1}x{2} box")]
    InBox(Partition, u32, u32),
    #[error("{0} does not lie in the {1}x{2} box")]
    OutOfBox(Partition, u32, u32),
    #[error("index {index} out of range: {reason}")]
    OutOfRange { index: i64, reason: &'static str },
    #[error("result is not linear in the quotient power sums: {0}")]
    Nonlinear(String),
    #[error("cannot parse `{0}`: {1}")]
    Parse(String, String),
}
