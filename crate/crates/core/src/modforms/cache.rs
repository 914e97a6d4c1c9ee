//! Write-once disk cache for q-expansions, keyed by
//! (series name, weight, precision).
//!
//! File format: a header line `name weight precision`, then one decimal
//! integer coefficient per line, a_0 through a_precision. Files are
//! written to a temporary path and renamed into place, so concurrent
//! readers never observe a partial file.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct QExpansionCache {
    dir: PathBuf,
}

impl QExpansionCache {
    pub fn new(dir: impl Into<PathBuf>) -> Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(QExpansionCache { dir })
    }

    /// Per-user default location: `$XDG_CACHE_HOME/mpll` or
    /// `$HOME/.cache/mpll`, falling back to the system temp directory.
    pub fn default_dir() -> PathBuf {
        if let Ok(x) = std::env::var("XDG_CACHE_HOME") {
            if !x.is_empty() {
                return Path::new(&x).join("mpll");
            }
        }
        if let Ok(h) = std::env::var("HOME") {
            if !h.is_empty() {
                return Path::new(&h).join(".cache").join("mpll");
            }
        }
        std::env::temp_dir().join("mpll-cache")
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path_for(&self, name: &str, weight: u64, precision: usize) -> PathBuf {
        self.dir.join(format!("{name}-{weight}-{precision}.qexp"))
    }

    pub fn get_or_compute(
        &self,
        name: &str,
        weight: u64,
        precision: usize,
        compute: impl FnOnce() -> Vec<BigInt>,
    ) -> Result<Vec<BigInt>> {
        let path = self.path_for(name, weight, precision);
        if path.exists() {
            return self.read(&path, name, weight, precision);
        }
        let coeffs = compute();
        debug_assert_eq!(coeffs.len(), precision + 1);
        self.write_once(&path, name, weight, precision, &coeffs)?;
        Ok(coeffs)
    }

    fn read(
        &self,
        path: &Path,
        name: &str,
        weight: u64,
        precision: usize,
    ) -> Result<Vec<BigInt>> {
        let body = fs::read_to_string(path)?;
        let mut lines = body.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::Cache(format!("{}: empty file", path.display())))?;
        let expected = format!("{name} {weight} {precision}");
        if header != expected {
            return Err(Error::Cache(format!(
                "{}: header {header:?} does not match key {expected:?}",
                path.display()
            )));
        }
        let coeffs: Vec<BigInt> = lines
            .map(|l| {
                BigInt::from_str(l.trim()).map_err(|e| {
                    Error::Cache(format!("{}: bad coefficient {l:?}: {e}", path.display()))
                })
            })
            .collect::<Result<_>>()?;
        if coeffs.len() != precision + 1 {
            return Err(Error::Cache(format!(
                "{}: expected {} coefficients, found {}",
                path.display(),
                precision + 1,
                coeffs.len()
            )));
        }
        Ok(coeffs)
    }

    fn write_once(
        &self,
        path: &Path,
        name: &str,
        weight: u64,
        precision: usize,
        coeffs: &[BigInt],
    ) -> Result<()> {
        let tmp = path.with_extension(format!("tmp.{}", std::process::id()));
        {
            let mut f = fs::File::create(&tmp)?;
            writeln!(f, "{name} {weight} {precision}")?;
            for c in coeffs {
                writeln!(f, "{c}")?;
            }
            f.sync_all()?;
        }
        // first writer wins; a concurrent rename of identical content is fine
        fs::rename(&tmp, path)?;
        Ok(())
    }
}
