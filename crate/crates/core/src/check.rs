use serde::Serialize;

/// One named pass/fail assertion with a short explanation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckItem {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl CheckItem {
    pub fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        CheckItem {
            name: name.into(),
            pass,
            detail: detail.into(),
        }
    }
}
