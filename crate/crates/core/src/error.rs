use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid exponent `{0}`: expected `N` or `N/D` with decimal integers")]
    ExponentSyntax(String),
    #[error("exponent {num}/{den} must be greater than 1")]
    ExponentTooSmall { num: u64, den: u64 },
    #[error("pattern must not be empty")]
    EmptyPattern,
    #[error("invalid catcher bounds i={i}, j={j} for text of length {n}")]
    CatcherBounds { i: usize, j: usize, n: usize },
    #[error("catcher history is disabled")]
    HistoryDisabled,
    #[error("nothing to backtrack")]
    EmptyText,
    #[error("level {k} is below the smallest usable level {k_min}")]
    LevelTooSmall { k: u32, k_min: u32 },
    #[error("level {k} does not fit text length {n}")]
    LevelGeometry { k: u32, n: usize },
    #[error("cover span {span} is too small for a catcher cover")]
    SpanTooSmall { span: usize },
    #[error("line {line}: {message}")]
    Script { line: usize, message: String },
    #[error("line {line}: backtrack on empty text")]
    ScriptUnderflow { line: usize },
    #[error("detectors disagree: dyadic {dyadic}, ordered {ordered}")]
    Disagreement { dyadic: String, ordered: String },
    #[error("generator config: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
