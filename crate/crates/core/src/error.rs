use thiserror::Error;

use crate::coxeter::CoxeterType;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("unsupported Coxeter type {0} as a permutation host")]
    UnsupportedType(CoxeterType),

    #[error("generator orders disagree with the {ctype} diagram: {detail}")]
    RelationMismatch { ctype: CoxeterType, detail: String },

    #[error("group exceeds the configured size cap of {cap} elements")]
    GroupTooLarge { cap: usize },

    #[error("reduced word count {count} exceeds the configured cap of {cap}")]
    ExplosionGuard { count: u128, cap: u64 },

    #[error("element is not in the group")]
    NotInGroup,

    #[error("word {0} is not reduced")]
    NotReduced(String),

    #[error("generator index {index} out of range for rank {rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },

    #[error("invalid relation pair {0:?}")]
    InvalidRelation((usize, usize)),

    #[error("admissible partition with host {0} has no permutation realization")]
    UnsupportedHost(CoxeterType),

    #[error("no Table 1 row maps {host} to {target}")]
    UnknownRow {
        host: CoxeterType,
        target: CoxeterType,
    },

    #[error("induced order of t{} t{} is {found}, expected {expected}", .pair.0 + 1, .pair.1 + 1)]
    MatrixMismatch {
        pair: (usize, usize),
        expected: u32,
        found: u32,
    },

    #[error("word is not reduced in the embedded group")]
    NotReducedInX,

    #[error("word is not reduced in the host group")]
    NotReducedInW,

    #[error("element is not in the embedded subgroup")]
    NotInSubgroup,

    #[error("invalid edge angles: {0}")]
    InvalidAngles(String),

    #[error("octagon megatile violates its construction rules: {0}")]
    MegatileViolation(String),

    #[error("edge basis does not match the tiling host")]
    BasisMismatch,

    #[error("edge basis is not mirror symmetric")]
    AsymmetricBasis,

    #[error("generator {0} does not act as a tile-producing swap on the border")]
    UntileableGenerator(usize),

    #[error("{0}")]
    WrongFamily(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Errors caused by the caller's input rather than by a computation limit.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::UnsupportedType(_)
                | Error::NotInGroup
                | Error::NotReduced(_)
                | Error::GeneratorOutOfRange { .. }
                | Error::InvalidRelation(_)
                | Error::UnsupportedHost(_)
                | Error::UnknownRow { .. }
                | Error::NotReducedInX
                | Error::NotReducedInW
                | Error::NotInSubgroup
                | Error::InvalidAngles(_)
                | Error::WrongFamily(_)
                | Error::Parse(_)
        )
    }
}
