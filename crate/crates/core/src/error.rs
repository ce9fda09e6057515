use thiserror::Error;

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("genus must be an integer g >= 2, got {0}")]
    InvalidGenus(i64),
    #[error("genus mismatch: {left} vs {right}")]
    GenusMismatch { left: u32, right: u32 },
    #[error("top intersection in genus {genus} needs {expected} classes, got {got}")]
    WrongClassCount { genus: u32, expected: usize, got: usize },
    #[error("monomial exponents ({i},{j},{k}) do not sum to g+1 = {top}")]
    NotTopDegree { i: u32, j: u32, k: u32, top: u32 },
    #[error("class {class} is not nef (defect {defect})")]
    NotNef { class: String, defect: Rational },
    #[error("class is not on the nef boundary (defect={defect})")]
    NotOnBoundary { defect: Rational },
    #[error("inconsistent boundary data: b = 0 but c = {c}")]
    InconsistentBoundary { c: Rational },
    #[error("not a point class: degree a = {0} must be positive")]
    NonPositiveDegree(Rational),
    #[error("not a point class: class is not pseudo-effective (defect={0})")]
    NotPseudoEffective(Rational),
    #[error("generic degree must be positive, got {0}")]
    NonPositiveGenericDegree(Rational),
    #[error("A = 0 with C = {0} != 0: minimisation is unbounded")]
    UnboundedMinimum(Rational),
    #[error("empty grid: {0}")]
    EmptyGrid(String),
    #[error("witness index must be positive, got {0}")]
    NonPositiveIndex(i64),
    #[error("base polarization scale must be positive, got {0}")]
    NonPositiveScale(Rational),
    #[error("invalid rational literal {0:?}")]
    ParseRational(String),
    #[error("invalid class literal {0:?}: expected a,b,c")]
    ParseClass(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
