use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("automaton must have at least one state")]
    NoStates,
    #[error("duplicate letter `{0}` in alphabet")]
    DuplicateLetter(String),
    #[error("transition row for letter `{letter}` has length {len}, expected {states}")]
    RowLength { letter: String, len: usize, states: usize },
    #[error(
        "transition target out of range: letter `{letter}` maps state {source_state} to {target} (states: {states})"
    )]
    TargetOutOfRange { letter: String, source_state: usize, target: usize, states: usize },
    #[error("initial state {0} out of range")]
    InitialOutOfRange(usize),
    #[error("final state {0} out of range")]
    FinalOutOfRange(usize),
    #[error("alphabet is missing letter `{0}` of the automaton")]
    MissingLetter(String),
    #[error("unknown letter `{0}`")]
    UnknownLetter(String),
    #[error("transformation size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("state {state} out of range for a transformation of {size} states")]
    StateOutOfRange { state: usize, size: usize },
    #[error("state {0} repeated in cycle")]
    RepeatedCycleState(usize),
    #[error("invalid shift range {low}..={high}")]
    InvalidShift { low: usize, high: usize },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("dialect maps two letters to `{0}`")]
    DuplicateTarget(String),
    #[error("no catalogued operands for {0}")]
    UnknownCatalogEntry(String),
    #[error("binary operation `{0}` needs a second operand")]
    MissingOperand(String),
    #[error("transition semigroup exceeds cap of {0} elements")]
    SemigroupOverflow(usize),
    #[error("input is not prefix-convex")]
    NotPrefixConvex,
    #[error("invalid atom index {subset:?} for {family}")]
    InvalidAtomIndex { family: String, subset: Vec<usize> },
    #[error("atom count {atoms} differs from reverse complexity {reverse}")]
    AtomCountMismatch { atoms: usize, reverse: usize },
}
