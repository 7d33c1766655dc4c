use braidseed::Error;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{0} verification failure(s)")]
    Failed(usize),
    #[error("thread pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

impl CliError {
    /// 2 for a word whose Demazure product is not `w0`, 3 when a computed
    /// object breaks a structural property, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::BadDemazure) => 2,
            CliError::Core(
                Error::InternalInconsistency(_)
                | Error::NonIntegral { .. }
                | Error::DivisionFailure(_)
                | Error::FactorizationFailure(_),
            )
            | CliError::Failed(_) => 3,
            _ => 1,
        }
    }
}

pub type Outcome<T> = Result<T, CliError>;
