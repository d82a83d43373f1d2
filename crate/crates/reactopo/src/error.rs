use std::fmt;

/// Failure while reading one of the data files, located to a line when the
/// format is line-oriented.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub struct LoadError {
    pub source_name: String,
    pub line: Option<usize>,
    pub message: String,
}

impl LoadError {
    pub fn at(source_name: &str, line: usize, message: impl fmt::Display) -> Self {
        LoadError {
            source_name: source_name.to_owned(),
            line: Some(line),
            message: message.to_string(),
        }
    }

    pub fn whole(source_name: &str, message: impl fmt::Display) -> Self {
        LoadError {
            source_name: source_name.to_owned(),
            line: None,
            message: message.to_string(),
        }
    }
}

impl fmt::Display for LoadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(line) => write!(f, "{}:{}: {}", self.source_name, line, self.message),
            None => write!(f, "{}: {}", self.source_name, self.message),
        }
    }
}
