use thiserror::Error;

/// Errors surfaced to callers (the CLI maps parse errors to exit code 2).
///
/// Contract violations that only library misuse can trigger (e.g. taking a
/// cross product of non-vectors) panic instead; see the individual methods.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("expected a paravector-valued function, found a component of grade {grade}")]
    NotParavector { grade: u32 },
    #[error("function must not depend on x0")]
    DependsOnX0,
    #[error("degree {degree} exceeds the configured cap {cap}")]
    DegreeCap { degree: u32, cap: u32 },
}
