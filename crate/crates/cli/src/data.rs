//! Bundled datasets, overridable from a directory named by `HECKE_DATA_DIR`.

use crate::CliError;
use heckemod::import::{EXAMPLES, Q5_U3_TABLES, TRIVIAL_DEGREES};

pub const DATA_DIR_VAR: &str = "HECKE_DATA_DIR";

pub const DATASETS: [(&str, &str); 3] = [("q5_u3_tables", Q5_U3_TABLES), ("examples", EXAMPLES), ("trivial_degrees", TRIVIAL_DEGREES)];

/// `<dir>/<name>.json` when the variable is set and the file exists,
/// otherwise the bundled copy.
pub fn dataset(name: &str) -> Result<String, CliError> {
    if let Some(dir) = std::env::var_os(DATA_DIR_VAR) {
        let path = std::path::Path::new(&dir).join(format!("{name}.json"));
        if path.exists() {
            return std::fs::read_to_string(&path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())));
        }
    }
    DATASETS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, t)| t.to_string())
        .ok_or_else(|| CliError::Input(format!("unknown dataset {name:?}; known: {}", names().join(", "))))
}

pub fn names() -> Vec<&'static str> {
    DATASETS.iter().map(|(n, _)| *n).collect()
}

/// Reads a file, or stdin for "-".
pub fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s).map_err(|e| CliError::Input(e.to_string()))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{path}: {e}")))
}
