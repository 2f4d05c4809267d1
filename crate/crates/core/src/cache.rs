//! On-disk cache of transition matrices, one JSON file per degree.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::bases::{compute_transition_matrix, seed_transition_matrix, transition_matrix};
use crate::composition::{compositions_ordered, Composition};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

pub const SCHEMA: &str = "ncsf.transition_matrix";
pub const SCHEMA_VERSION: u32 = 1;
pub const CACHE_DIR_VAR: &str = "NCSF_CACHE_DIR";

#[derive(Serialize, Deserialize)]
struct CachedMatrix {
    schema: String,
    version: u32,
    n: usize,
    labels: Vec<Composition>,
    rows: Vec<Vec<String>>,
}

/// `$NCSF_CACHE_DIR`, else the platform cache directory plus `ncsf`.
pub fn default_dir() -> Option<PathBuf> {
    match std::env::var_os(CACHE_DIR_VAR) {
        Some(dir) if !dir.is_empty() => Some(PathBuf::from(dir)),
        _ => dirs::cache_dir().map(|d| d.join("ncsf")),
    }
}

pub fn matrix_path(dir: &Path, n: usize) -> PathBuf {
    dir.join(format!("transition_matrix_{n}.json"))
}

#[derive(Debug)]
pub enum Lookup {
    Hit(IntMatrix),
    Miss,
    Corrupt(String),
}

/// Reads and validates the cached `M_n`.
pub fn load(dir: &Path, n: usize) -> Lookup {
    let path = matrix_path(dir, n);
    let text = match fs::read_to_string(&path) {
        Ok(t) => t,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Lookup::Miss,
        Err(e) => return Lookup::Corrupt(format!("{}: {e}", path.display())),
    };
    match decode(&text, n) {
        Ok(m) => Lookup::Hit(m),
        Err(e) => Lookup::Corrupt(format!("{}: {e}", path.display())),
    }
}

fn decode(text: &str, n: usize) -> Result<IntMatrix> {
    let c: CachedMatrix = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if c.schema != SCHEMA || c.version != SCHEMA_VERSION {
        return Err(Error::Parse(format!("unsupported schema {} v{}", c.schema, c.version)));
    }
    if c.n != n || c.labels != compositions_ordered(n) {
        return Err(Error::LabelMismatch(format!("file does not hold degree {n}")));
    }
    let rows = c
        .rows
        .iter()
        .map(|r| {
            r.iter().map(|x| x.parse::<BigInt>().map_err(|e| Error::Parse(e.to_string()))).collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let m = IntMatrix::new(c.labels, rows)?;
    let total: BigInt = m.rows().iter().flatten().sum();
    let fact: BigInt = (1..=n).map(BigInt::from).product();
    if !m.is_upper_unitriangular() || total != fact {
        return Err(Error::Parse("entries fail the consistency checks".into()));
    }
    Ok(m)
}

/// Writes `M_n` atomically (temporary file, then rename).
pub fn store(dir: &Path, n: usize, m: &IntMatrix) -> io::Result<()> {
    fs::create_dir_all(dir)?;
    let c = CachedMatrix {
        schema: SCHEMA.into(),
        version: SCHEMA_VERSION,
        n,
        labels: m.labels().to_vec(),
        rows: m.rows().iter().map(|r| r.iter().map(BigInt::to_string).collect()).collect(),
    };
    let text = serde_json::to_string(&c).map_err(io::Error::other)?;
    let path = matrix_path(dir, n);
    let tmp = path.with_extension(format!("json.{}.tmp", std::process::id()));
    fs::write(&tmp, text)?;
    fs::rename(&tmp, &path)
}

/// `M_n`, taken from the cache when possible and stored there otherwise.
/// Problems with the cache never fail the computation; they are returned
/// as warnings.
pub fn cached_transition_matrix(dir: Option<&Path>, n: usize) -> Result<(Arc<IntMatrix>, Vec<String>)> {
    let mut warnings = Vec::new();
    let Some(dir) = dir else {
        return Ok((transition_matrix(n)?, warnings));
    };
    match load(dir, n) {
        Lookup::Hit(m) => {
            seed_transition_matrix(n, m)?;
            return Ok((transition_matrix(n)?, warnings));
        }
        Lookup::Corrupt(msg) => warnings.push(format!("ignoring corrupt cache entry ({msg}); recomputing")),
        Lookup::Miss => {}
    }
    let m = compute_transition_matrix(n)?;
    if let Err(e) = store(dir, n, &m) {
        warnings.push(format!("could not write cache in {}: {e}", dir.display()));
    }
    seed_transition_matrix(n, m)?;
    Ok((transition_matrix(n)?, warnings))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_corruption() {
        let dir = tempfile::tempdir().unwrap();
        assert!(matches!(load(dir.path(), 4), Lookup::Miss));
        let (m, w) = cached_transition_matrix(Some(dir.path()), 4).unwrap();
        assert!(w.is_empty());
        match load(dir.path(), 4) {
            Lookup::Hit(c) => assert_eq!(&c, m.as_ref()),
            other => panic!("{other:?}"),
        }
        fs::write(matrix_path(dir.path(), 4), "{not json").unwrap();
        let (again, w) = cached_transition_matrix(Some(dir.path()), 4).unwrap();
        assert_eq!(again, m);
        assert_eq!(w.len(), 1);
        assert!(matches!(load(dir.path(), 4), Lookup::Hit(_)));

        let text = fs::read_to_string(matrix_path(dir.path(), 4)).unwrap().replacen("\"1\"", "\"7\"", 1);
        fs::write(matrix_path(dir.path(), 4), text).unwrap();
        assert!(matches!(load(dir.path(), 4), Lookup::Corrupt(_)));
    }
}
