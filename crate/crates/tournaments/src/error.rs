use thiserror::Error;

use crate::tournament::MAX_VERTICES;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("tournament on {0} vertices exceeds the {MAX_VERTICES}-vertex limit")]
    TooManyVertices(usize),

    #[error("half-order p must be positive")]
    ZeroHalfOrder,

    #[error("connector {connector} out of range 1..={p}")]
    ConnectorOutOfRange { connector: usize, p: usize },

    #[error("invalid connector list `{0}`")]
    BadConnectorList(String),

    #[error("interval {lo}..={hi} is not a vertex range of a {n}-vertex tournament")]
    BadInterval { lo: usize, hi: usize, n: usize },

    #[error("malformed tournament literal: {0}")]
    BadLiteral(String),

    #[error("arc rows do not describe a tournament: {0}")]
    NotATournament(String),

    #[error("label out of range 1..={r}")]
    LabelOutOfRange { r: u8 },

    #[error("permutation image is not a bijection")]
    NotABijection,

    #[error("permutation is not an automorphism of this tournament")]
    NotAutomorphism,

    #[error("search on {n} vertices exceeds the bound of {bound}; raise the bound explicitly")]
    SearchTooLarge { n: usize, bound: usize },

    #[error("distinguishing cost is undefined for a rigid tournament")]
    CostOfRigid,

    #[error("{0} is not an odd prime congruent to 3 mod 4")]
    NotPaleyModulus(usize),

    #[error("sweep up to p = {0} exceeds the default limit of {1}; enable force to override")]
    SweepTooLarge(usize, usize),

    #[error("sweep range is empty: p_min {0} > p_max {1}")]
    BadSweepRange(usize, usize),
}
