use thiserror::Error;

/// Geometry failures raised while building or evaluating curves and surfaces.
///
/// Point indices are positions within the sequence handed to the failing
/// operation. Errors raised inside a net carry row, column or patch context.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeomError {
    #[error("DegenerateChord: points {first} and {second} coincide")]
    DegenerateChord { first: usize, second: usize },

    #[error("IllConditionedTriple: point {} projects to fraction {foot} of chord {index}-{}", index + 1, index + 2)]
    IllConditionedTriple { index: usize, foot: f64 },

    #[error("InsufficientPoints: need at least 2 points, got {count}")]
    InsufficientPoints { count: usize },

    #[error("ParameterOutOfRange: {value} is outside [0, {max}]")]
    ParameterOutOfRange { value: f64, max: f64 },

    #[error("NonFinite: point {index} has a non-finite coordinate")]
    NonFinite { index: usize },

    #[error("NetTooNarrow: a net needs at least 2x2 points, got {cols}x{rows}")]
    NetTooNarrow { cols: usize, rows: usize },

    #[error("DegenerateChord: net points ({}, {}) and ({}, {}) coincide", a.0, a.1, b.0, b.1)]
    NetDegenerateChord { a: (usize, usize), b: (usize, usize) },

    #[error("DimensionMismatch: {cols}x{rows} net needs {} points, got {got}", cols * rows)]
    DimensionMismatch { cols: usize, rows: usize, got: usize },

    #[error("PatchOutOfRange: patch ({i}, {j}) outside a {p}x{q} patch grid")]
    PatchOutOfRange { i: usize, j: usize, p: usize, q: usize },

    #[error("InvalidCount: {what} must be at least 1, got {value}")]
    InvalidCount { what: &'static str, value: usize },

    #[error("row {row}: {source}")]
    InRow { row: usize, source: Box<GeomError> },

    #[error("column {col}: {source}")]
    InColumn { col: usize, source: Box<GeomError> },

    #[error("patch ({i}, {j}): {source}")]
    InPatch { i: usize, j: usize, source: Box<GeomError> },
}

impl GeomError {
    /// Stable identifier of the underlying failure, ignoring context wrappers.
    pub fn kind(&self) -> &'static str {
        match self {
            GeomError::DegenerateChord { .. } | GeomError::NetDegenerateChord { .. } => {
                "DegenerateChord"
            }
            GeomError::IllConditionedTriple { .. } => "IllConditionedTriple",
            GeomError::InsufficientPoints { .. } => "InsufficientPoints",
            GeomError::ParameterOutOfRange { .. } => "ParameterOutOfRange",
            GeomError::NonFinite { .. } => "NonFinite",
            GeomError::NetTooNarrow { .. } => "NetTooNarrow",
            GeomError::DimensionMismatch { .. } => "DimensionMismatch",
            GeomError::PatchOutOfRange { .. } => "PatchOutOfRange",
            GeomError::InvalidCount { .. } => "InvalidCount",
            GeomError::InRow { source, .. }
            | GeomError::InColumn { source, .. }
            | GeomError::InPatch { source, .. } => source.kind(),
        }
    }

    /// Shifts point indices by `base`, for errors raised on a sub-slice.
    pub(crate) fn offset(self, base: usize) -> Self {
        match self {
            GeomError::DegenerateChord { first, second } => GeomError::DegenerateChord {
                first: first + base,
                second: second + base,
            },
            GeomError::IllConditionedTriple { index, foot } => GeomError::IllConditionedTriple {
                index: index + base,
                foot,
            },
            GeomError::NonFinite { index } => GeomError::NonFinite { index: index + base },
            other => other,
        }
    }

    pub(crate) fn in_row(self, row: usize) -> Self {
        GeomError::InRow { row, source: Box::new(self) }
    }

    pub(crate) fn in_column(self, col: usize) -> Self {
        GeomError::InColumn { col, source: Box::new(self) }
    }

    pub(crate) fn in_patch(self, i: usize, j: usize) -> Self {
        GeomError::InPatch { i, j, source: Box::new(self) }
    }
}

pub type Result<T, E = GeomError> = std::result::Result<T, E>;
