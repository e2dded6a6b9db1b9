use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("e must be a finite integer >= 2, got {0}")]
    InvalidModulus(i64),

    #[error("parts must be positive and weakly decreasing, got {0:?}")]
    InvalidPartition(Vec<u32>),

    #[error("a multipartition needs at least one component")]
    EmptyLevel,

    #[error("multicharge has {charge} entries but the multipartition has {components} components")]
    LevelMismatch { components: usize, charge: usize },

    #[error("component {component} is out of range for level {level}")]
    ComponentOutOfRange { component: usize, level: usize },

    #[error("residue {residue} is out of range for e = {e}")]
    ResidueOutOfRange { residue: usize, e: u32 },

    #[error("weights for e = {left} and e = {right} cannot be combined")]
    ModulusMismatch { left: u32, right: u32 },

    #[error("multicharge {charge:?} is not normalized for e = {e}")]
    NotNormalized { charge: Vec<i64>, e: u32 },

    #[error("illegal elementary move {0}")]
    IllegalMove(String),

    #[error("{0}")]
    Parse(String),
}
