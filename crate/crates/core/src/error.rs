use crate::rootcore::LieType;

/// Errors raised anywhere in the crate.
///
/// Variants split into two families: input validation (bad ranks, malformed
/// text, closure violations, ...) and internal consistency failures, which
/// mean two independent computations disagreed and always indicate a bug.
/// [`Error::is_internal`] tells them apart.
#[derive(thiserror::Error, Debug)]
pub enum Error {
    #[error("rank {rank} is out of range for type {lie_type}")]
    RankOutOfRange { lie_type: LieType, rank: usize },
    #[error("{0:?} is not a root of the ambient system")]
    NotARoot(Vec<i32>),
    #[error("simple reflection index {index} is out of range 1..={rank}")]
    ReflectionIndex { index: usize, rank: usize },
    #[error("operands belong to different root systems ({left} vs {right})")]
    MixedSystems { left: String, right: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0} is not a negative root")]
    NotNegative(String),
    #[error("closure violated: {beta} + α{simple} is a root outside Φ_H")]
    ClosureViolation { beta: String, simple: usize },
    #[error("invalid Hessenberg function {h:?}: {reason}")]
    InvalidHessenbergFunction { h: Vec<usize>, reason: String },
    #[error("cell for w = [{word}] is empty")]
    EmptyCell { word: String },
    #[error("operation requires type {expected}, got {actual}")]
    WrongType { expected: String, actual: LieType },
    #[error("element is not in the span of the root vectors and Cartan subalgebra")]
    NotInAlgebra,
    #[error("element is not supported on a single row")]
    NotSingleRow,
    #[error("nilpotent element is not regular: simple root α{0} has zero coefficient")]
    NotRegular(usize),
    #[error("point counting requires n <= 5 and q in {{2, 3, 5}}, got n = {n}, q = {q}")]
    OracleBounds { n: usize, q: u32 },

    #[error("internal: row {row} differs between the definitional and closed-form computations")]
    RowsDisagree { row: usize },
    #[error("internal: matrix realization self-check failed: {0}")]
    Realization(String),
    #[error("internal: no consistent type-D rescaling found: {0}")]
    NormalizationFailed(String),
    #[error("internal: formula and bracket computations of ψ_{row} disagree at ({alpha}, {beta})")]
    PsiMismatch { row: usize, alpha: String, beta: String },
    #[error("internal: witness stage {stage} is infeasible: {reason}")]
    StageInfeasible { stage: usize, reason: String },
    #[error("internal: witness for w = [{word}] failed the membership check at root {root}")]
    WitnessVerification { word: String, root: String },
    #[error("internal: lemma check {check} failed: {detail}")]
    LemmaCheck { check: String, detail: String },
    #[error("internal: point count for {perm} is {count}, predicted {predicted}")]
    CountMismatch { perm: String, count: u64, predicted: u64 },

    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    /// True for consistency failures (exit code 2 in the CLI).
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::RowsDisagree { .. }
                | Error::Realization(_)
                | Error::NormalizationFailed(_)
                | Error::PsiMismatch { .. }
                | Error::StageInfeasible { .. }
                | Error::WitnessVerification { .. }
                | Error::LemmaCheck { .. }
                | Error::CountMismatch { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
