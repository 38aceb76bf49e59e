use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("not in R: element has valuation {0} < 0 at the specialization point")]
    NotInRing(i64),

    #[error("division by zero")]
    DivisionByZero,

    #[error("singular matrix")]
    Singular,

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("separation violated: tableaux {first} and {second} have equal content vectors")]
    SeparationViolated { first: String, second: String },

    #[error("size gate exceeded: {what} requires n <= {limit} (got n = {n}); pass {flag} to override")]
    SizeGate {
        what: String,
        n: usize,
        limit: usize,
        flag: String,
    },

    #[error("F_T not integral: coordinate {index} has valuation {valuation}")]
    NotIntegral { index: usize, valuation: i64 },

    #[error("idempotents are not directed: e_{later} * e_{earlier} != 0")]
    NotDirected { earlier: usize, later: usize },

    #[error("separating condition fails for the pair ({i}, {j})")]
    Unseparated { i: usize, j: usize },

    #[error("no unit denominator available for j = {j} (class representative {i}, checked {checked} operators)")]
    MissingUnit { j: usize, i: usize, checked: usize },

    #[error("residue hypothesis violated: contents {first} and {second} have distinct residues but their difference is not a unit")]
    ResidueHypothesis { first: String, second: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}
