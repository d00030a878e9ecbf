use std::fmt;

/// Error kinds mapped to exit codes: usage -> 1, parse -> 2, resource -> 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Usage,
    Parse,
    Resource,
}

#[derive(Debug)]
pub struct CliError {
    pub kind: Kind,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError { kind: Kind::Usage, message: message.into() }
    }

    pub fn parse(message: impl Into<String>) -> Self {
        CliError { kind: Kind::Parse, message: message.into() }
    }

    pub fn resource(message: impl Into<String>) -> Self {
        CliError { kind: Kind::Resource, message: message.into() }
    }

    pub fn exit_code(&self) -> u8 {
        match self.kind {
            Kind::Usage => 1,
            Kind::Parse => 2,
            Kind::Resource => 3,
        }
    }

    /// Single machine-readable line for standard error.
    pub fn stderr_line(&self) -> String {
        let kind = match self.kind {
            Kind::Usage => "usage",
            Kind::Parse => "parse",
            Kind::Resource => "resource",
        };
        format!("error kind={kind} msg={:?}", self.message)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.message)
    }
}

impl From<hunt_core::Error> for CliError {
    fn from(e: hunt_core::Error) -> Self {
        use hunt_core::Error as E;
        let kind = match &e {
            E::Parse { .. } => Kind::Parse,
            E::CapExceeded(_) => Kind::Resource,
            _ => Kind::Usage,
        };
        CliError { kind, message: e.to_string() }
    }
}

pub type CliResult<T> = Result<T, CliError>;

pub fn read_file(path: &std::path::Path) -> CliResult<String> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::parse(format!("cannot read {}: {e}", path.display())))
}

pub fn write_file(path: &std::path::Path, contents: &str) -> CliResult<()> {
    std::fs::write(path, contents)
        .map_err(|e| CliError::parse(format!("cannot write {}: {e}", path.display())))
}
