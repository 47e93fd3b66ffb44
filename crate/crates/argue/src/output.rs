//! File plumbing: reads map to exit code 4; writes go through a temp file
//! and a rename, and refuse to clobber existing files without --force.

use std::fs;
use std::path::{Path, PathBuf};

use serde_json::Value;

use crate::error::CliError;

pub fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

pub fn pretty(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serializable value");
    text.push('\n');
    text
}

/// Output sink: a directory for named files, or stdout when none given.
pub struct OutDir {
    dir: Option<PathBuf>,
    force: bool,
}

impl OutDir {
    pub fn new(dir: Option<PathBuf>, force: bool) -> OutDir {
        OutDir { dir, force }
    }

    pub fn emit(&self, name: &str, contents: &str) -> Result<(), CliError> {
        let Some(dir) = &self.dir else {
            print!("{contents}");
            if !contents.ends_with('\n') {
                println!();
            }
            return Ok(());
        };
        let io_err = |path: &Path, e: std::io::Error| {
            CliError::Io(format!("{}: {e}", path.display()))
        };
        fs::create_dir_all(dir).map_err(|e| io_err(dir, e))?;
        let path = dir.join(name);
        if path.exists() && !self.force {
            return Err(CliError::Io(format!(
                "{} exists; pass --force to overwrite",
                path.display()
            )));
        }
        let tmp = dir.join(format!(".{name}.tmp"));
        fs::write(&tmp, contents).map_err(|e| io_err(&tmp, e))?;
        fs::rename(&tmp, &path).map_err(|e| io_err(&path, e))?;
        eprintln!("wrote {}", path.display());
        Ok(())
    }
}
