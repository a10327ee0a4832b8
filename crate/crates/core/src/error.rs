use thiserror::Error;

/// The structure theory of a modulator was violated; only reachable with a
/// vertex set that is not a modulator.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompositionError {
    #[error("component containing vertex {vertex} is neither triangle-free nor complete multipartite")]
    NotPawFree { vertex: usize },
    #[error("component containing vertex {vertex} forms a triangle with the modulator but is not complete bipartite")]
    NotCompleteBipartite { vertex: usize },
    #[error("non-neighbours of modulator vertex {modulator} in the component are not exactly one part")]
    SplitPart { modulator: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RuleError {
    #[error("rule needs {needed} edge modifications but only {available} remain in the budget")]
    BudgetExhausted { needed: usize, available: i64 },
    #[error(transparent)]
    Decomposition(#[from] DecompositionError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("enumeration would inspect {subsets} subsets, above the cap of {cap}")]
    CapExceeded { subsets: u128, cap: u128 },
    #[error("budget must be nonnegative, got {0}")]
    NegativeBudget(i64),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenerateError {
    #[error("edge probability {0} is outside [0, 1]")]
    Probability(f64),
    #[error("bad planted spec `{0}`: expected items like cm:<parts>x<size>, tone:<L>x<R>, pendants:<c>")]
    PlantedSyntax(String),
    #[error("planted structure needs {needed} vertices but n = {n}")]
    TooSmall { needed: usize, n: usize },
}
