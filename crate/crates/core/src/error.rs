use alloc::string::String;
use core::fmt;

/// Errors raised by the core algorithms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A letter outside `{0,1,2,3}`.
    InvalidLetter(u32),
    /// Word positions are 1-based.
    ZeroIndex,
    /// Periodic words need a non-empty period.
    EmptyPeriod,
    /// Access past the end of an explicit prefix.
    IndexOutOfPrefix { index: usize, len: usize },
    /// The substitution rule of the seed does not start with the seed or never grows.
    NonProlongable { seed: u8 },
    /// A substitution rule is missing for a reachable letter.
    MissingRule { letter: u8 },
    /// Malformed Sturmian slope or intercept.
    InvalidRotation(&'static str),
    /// An empty search factor.
    EmptyFactor,
    /// The inspected window contains no non-zero letter.
    AllZeroWindow,
    /// Vertex id not present in the graph.
    UnknownVertex(usize),
    /// Two vertices carry the same id.
    DuplicateId(usize),
    /// Simple graphs have no loops.
    SelfLoop(usize),
    /// An expression tag that names no vertex of the target graph.
    UnknownTag(String),
    /// Edges of a part join vertices that are not consecutive in its order.
    NotALinearForest,
    /// Two vertices carry the same grid coordinate.
    DuplicateCoord { row: usize, col: usize },
    /// A vertex without grid coordinates where coordinates are required.
    MissingCoords(usize),
    /// Letter outside `{2,3}` where only those are allowed.
    LetterNotTwoThree { position: usize, letter: u8 },
    /// The pair is not an edge.
    NotAnEdge(usize, usize),
    /// Input exceeds the documented size cap of an exhaustive routine.
    SizeCap { what: &'static str, size: usize, cap: usize },
    /// A vertex tag is created twice in one expression.
    DuplicateTag(String),
    /// `join i i` is not a valid operation.
    SelfJoin(u32),
    /// Labels are positive integers.
    ZeroLabel,
    /// The factor carries no non-zero letter.
    AllZeroFactor,
    /// A similarity-class bound of the partition composition is violated.
    SimilarityBound { index: usize, mu: usize, bound: usize, prefix: bool },
    /// A part expression does not build the induced subgraph on its part.
    PartMismatch { index: usize },
    /// Parts do not form a partition of the vertex set.
    NotAPartition,
    /// The grid window does not carry the factor the reduction rule expects.
    FactorMismatch { column: usize, rule: &'static str },
    /// Not enough rows left for the requested reduction.
    TooFewRows { rows: usize, needed: usize },
    /// The factor has no letter from `{2,3}`.
    NoTwoThreeLetter,
    /// Coordinates do not form a full grid window with letter links between
    /// consecutive columns only.
    NotAGridWindow,
    /// The graph does not occupy consecutive columns.
    NonConsecutiveColumns { column: usize },
    /// Two clusters share more than one vertex (the input is not prime).
    NonPrimeCluster { column: usize, shared: usize },
    /// A right module overlapping a left module on several rows, or several modules.
    ClusterPairing { column: usize },
    /// A graph vertex carried by no type-A edge.
    UntaggedVertex(usize),
    /// The forbidden grid embeds into the input.
    ForbiddenPatternPresent,
    /// A full bar of the pipeline contains no copy of the chosen factor.
    FactorNotInBar { bar: usize },
    /// Text or document parse failure.
    Parse(String),
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidLetter(l) => write!(f, "letter {l} is not in {{0,1,2,3}}"),
            Error::ZeroIndex => write!(f, "word positions start at 1"),
            Error::EmptyPeriod => write!(f, "periodic word with an empty period"),
            Error::IndexOutOfPrefix { index, len } => {
                write!(f, "position {index} is beyond the explicit prefix of length {len}")
            }
            Error::NonProlongable { seed } => {
                write!(f, "substitution is not prolongable on seed {seed}")
            }
            Error::MissingRule { letter } => write!(f, "no substitution rule for letter {letter}"),
            Error::InvalidRotation(why) => write!(f, "invalid rotation word: {why}"),
            Error::EmptyFactor => write!(f, "factor must be non-empty"),
            Error::AllZeroWindow => {
                write!(f, "window is all zeros, which is excluded by the definition of the word set")
            }
            Error::UnknownVertex(v) => write!(f, "unknown vertex {v}"),
            Error::DuplicateId(v) => write!(f, "vertex id {v} used twice"),
            Error::SelfLoop(v) => write!(f, "loop at vertex {v}"),
            Error::UnknownTag(t) => write!(f, "tag {t} names no vertex"),
            Error::NotALinearForest => write!(f, "part has an edge between non-consecutive vertices"),
            Error::DuplicateCoord { row, col } => write!(f, "coordinate ({row},{col}) used twice"),
            Error::MissingCoords(v) => write!(f, "vertex {v} has no grid coordinate"),
            Error::LetterNotTwoThree { position, letter } => {
                write!(f, "letter {letter} at position {position} is not 2 or 3")
            }
            Error::NotAnEdge(a, b) => write!(f, "{a}{b} is not an edge"),
            Error::SizeCap { what, size, cap } => {
                write!(f, "{what}: input size {size} exceeds the cap {cap}")
            }
            Error::DuplicateTag(t) => write!(f, "vertex tag {t} created twice"),
            Error::SelfJoin(l) => write!(f, "join of label {l} with itself"),
            Error::ZeroLabel => write!(f, "labels are positive integers"),
            Error::AllZeroFactor => write!(
                f,
                "factor has no non-zero letter; the grid is a union of paths and has a 3-label expression"
            ),
            Error::SimilarityBound { index, mu, bound, prefix } => {
                let what = if *prefix { "prefix" } else { "part" };
                write!(f, "{what} {index} has {mu} similarity classes, above the bound {bound}")
            }
            Error::PartMismatch { index } => {
                write!(f, "expression of part {index} does not build the induced subgraph")
            }
            Error::NotAPartition => write!(f, "parts do not partition the vertex set"),
            Error::FactorMismatch { column, rule } => {
                write!(f, "window does not carry factor {rule} at column {column}")
            }
            Error::TooFewRows { rows, needed } => {
                write!(f, "{rows} rows available, {needed} needed")
            }
            Error::NoTwoThreeLetter => write!(f, "factor has no letter from {{2,3}}"),
            Error::NotAGridWindow => write!(f, "graph is not a grid window"),
            Error::NonConsecutiveColumns { column } => {
                write!(f, "graph has no vertex in column {column} inside its column span")
            }
            Error::NonPrimeCluster { column, shared } => write!(
                f,
                "clusters around column {column} share {shared} vertices; the input is not prime"
            ),
            Error::ClusterPairing { column } => {
                write!(f, "module pairing failed for the link starting at column {column}")
            }
            Error::UntaggedVertex(v) => write!(f, "vertex {v} is not carried by a type-A edge"),
            Error::ForbiddenPatternPresent => write!(f, "input contains the forbidden grid"),
            Error::FactorNotInBar { bar } => write!(f, "bar {bar} contains no copy of the factor"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
