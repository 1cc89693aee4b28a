use thiserror::Error;

/// Errors raised by the toolkit.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum AceError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("degenerate channel: effective X-type probability is zero")]
    DegenerateChannel,

    #[error("unknown preset `{0}`")]
    PresetNotFound(String),

    #[error("syntax error: {0}")]
    Syntax(String),

    #[error("qubit {qubit} appears twice in timestep {step}")]
    DuplicateQubit { step: usize, qubit: usize },

    #[error("qubit index {qubit} out of range for a {n_qubits}-qubit circuit")]
    QubitOutOfRange { qubit: usize, n_qubits: usize },

    #[error("CNOT control equals target (qubit {0})")]
    ControlEqualsTarget(usize),

    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<AceError>,
    },

    #[error("unsupported circuit: {0}")]
    UnsupportedCircuit(String),

    #[error("circuit is not error-corrected: {0}")]
    Unscheduled(String),

    #[error("circuit already contains correction blocks")]
    AlreadyCorrected,

    #[error("invalid policy: {0}")]
    InvalidPolicy(String),

    #[error("{0} levels of concatenation requested; only 1 or 2 are supported")]
    UnsupportedLevels(usize),

    #[error("gate {0} is not Clifford and cannot be propagated exactly")]
    NonClifford(String),

    #[error("logical channel needs per-operation attribution: {0}")]
    MissingAttribution(String),
}

impl AceError {
    pub(crate) fn at_line(self, line: usize) -> Self {
        match self {
            e @ AceError::AtLine { .. } => e,
            e => AceError::AtLine {
                line,
                source: Box::new(e),
            },
        }
    }
}

pub type Result<T> = std::result::Result<T, AceError>;
