//! Deterministic file output: shortest round-trip float formatting, `\n`
//! line endings, and atomic writes (temp file + rename) so failures never
//! leave partial artifacts.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use crate::CliError;

/// Shortest decimal that round-trips the value (Rust's default f64
/// Display), never more than 17 significant digits.
pub fn fmt(value: f64) -> String {
    format!("{value}")
}

/// Writes bytes to `path` atomically: a sibling temp file is renamed into
/// place only after a complete write.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    let tmp: PathBuf = {
        let mut name = path.file_name().unwrap_or_default().to_os_string();
        name.push(".tmp");
        path.with_file_name(name)
    };
    let mut file = fs::File::create(&tmp)
        .map_err(|e| CliError::input(format!("cannot create {}: {e}", tmp.display())))?;
    file.write_all(bytes)
        .and_then(|_| file.sync_all())
        .map_err(|e| CliError::input(format!("cannot write {}: {e}", tmp.display())))?;
    drop(file);
    fs::rename(&tmp, path)
        .map_err(|e| CliError::input(format!("cannot move into {}: {e}", path.display())))
}

/// A CSV artifact: `#`-prefixed metadata comments, one header row, then
/// data rows, all `\n`-terminated.
pub struct Csv {
    buffer: String,
}

impl Csv {
    pub fn new(comments: &[String], header: &[&str]) -> Self {
        let mut buffer = String::new();
        for comment in comments {
            buffer.push_str("# ");
            buffer.push_str(comment);
            buffer.push('\n');
        }
        buffer.push_str(&header.join(","));
        buffer.push('\n');
        Self { buffer }
    }

    pub fn row(&mut self, fields: &[String]) {
        self.buffer.push_str(&fields.join(","));
        self.buffer.push('\n');
    }

    pub fn write(self, path: &Path) -> Result<(), CliError> {
        write_atomic(path, self.buffer.as_bytes())
    }
}

/// `hbar=… inertia=…` comment carried by every rotor CSV artifact.
pub fn spec_comment(hbar: f64, inertia: f64) -> String {
    format!("hbar={} inertia={}", fmt(hbar), fmt(inertia))
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    let digest = hasher.finalize();
    let mut out = String::with_capacity(64);
    for byte in digest {
        out.push_str(&format!("{byte:02x}"));
    }
    out
}

/// Reads an input file, returning its text and content digest.
pub fn read_input(path: &Path) -> Result<(String, String), CliError> {
    let bytes = fs::read(path)
        .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?;
    let digest = sha256_hex(&bytes);
    let text = String::from_utf8(bytes)
        .map_err(|_| CliError::input(format!("{} is not UTF-8", path.display())))?;
    Ok((text, digest))
}
