use serde::Serialize;

/// Exit status for malformed input.
pub const EXIT_MALFORMED: i32 = 1;
/// Exit status when a check ran and failed.
pub const EXIT_FAILED: i32 = 2;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliError {
    pub code: String,
    pub message: String,
    #[serde(skip)]
    pub exit: i32,
}

impl CliError {
    pub fn malformed(code: &str, message: impl Into<String>) -> Self {
        Self {
            code: code.to_string(),
            message: message.into(),
            exit: EXIT_MALFORMED,
        }
    }

    pub fn to_json(&self) -> String {
        let body = serde_json::json!({ "error": self });
        serde_json::to_string_pretty(&body).expect("serializable") + "\n"
    }
}

impl From<commcert::Error> for CliError {
    fn from(e: commcert::Error) -> Self {
        let exit = match e {
            commcert::Error::CounterexampleFound(_) | commcert::Error::IdentityFailed(_) => EXIT_FAILED,
            _ => EXIT_MALFORMED,
        };
        Self {
            code: e.code().to_string(),
            message: e.to_string(),
            exit,
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        Self::malformed("malformed_json", e.to_string())
    }
}
