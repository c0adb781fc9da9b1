use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("inversion of zero")]
    DivisionByZero,
    #[error("cyclotomic level {level} has degree {degree}, above the configured ceiling {ceiling}")]
    LevelOverflow { level: u64, degree: usize, ceiling: usize },
    #[error("a coefficient does not fit the scalar type")]
    CoefficientOverflow,
    #[error("level {from} does not divide level {to}")]
    LevelMismatch { from: u64, to: u64 },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("closure exceeded the bound of {bound} elements")]
    ExceedsBound { bound: usize },
    #[error("element is not a member of the group")]
    NotAMember,
    #[error("isometry reverses orientation where an orientation-preserving one is required")]
    ReversingElement,
    #[error("isometry does not normalize the group")]
    NotNormalizing,
    #[error("table is not a surjective homomorphism: {0}")]
    BadHomomorphism(String),
    #[error("group order {order} exceeds the analysis bound {bound}")]
    TooLarge { order: usize, bound: usize },
    #[error("wrong group type: {0}")]
    WrongType(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DescriptorError {
    #[error("{0}")]
    Constraint(String),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("missing parameter `{0}`")]
    MissingParameter(&'static str),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HopfError {
    #[error("isometry is outside the domain of the induced action on the sphere")]
    OutOfDomain,
    #[error("the identity has no isolated fixed points")]
    IdentityMap,
    #[error("antiholomorphic map; fixed points are not a pole pair")]
    Antiholomorphic,
    #[error("the group contains a reflection; mirror orbifolds are not supported")]
    MirrorOrbifold,
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
