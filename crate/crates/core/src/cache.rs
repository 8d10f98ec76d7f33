//! On-disk cache for enumerated character tables and Bernoulli polynomials.
//!
//! One directory of JSON files, each carrying a version field; a version
//! mismatch or any parse/validation failure is treated as a miss and the
//! entry is recomputed. Writes go through a temp file in the same directory
//! followed by a rename.

use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};

use serde::{Deserialize, Serialize};

use crate::dirichlet::{BernoulliPoly, DirichletCharacter};
use crate::error::Result;
use crate::exact::Rational;

pub const CACHE_VERSION: u32 = 1;

static TEMP_COUNTER: AtomicU64 = AtomicU64::new(0);

#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

#[derive(Serialize, Deserialize)]
struct CharactersFile {
    version: u32,
    modulus: u64,
    characters: Vec<DirichletCharacter>,
}

#[derive(Serialize, Deserialize)]
struct BernoulliFile {
    version: u32,
    degree: u32,
    coeffs: Vec<String>,
}

impl Cache {
    pub fn open(dir: impl Into<PathBuf>) -> Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(Cache { dir })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn write_atomic(&self, name: &str, contents: &str) -> Result<()> {
        let unique = TEMP_COUNTER.fetch_add(1, Ordering::Relaxed);
        let tmp = self
            .dir
            .join(format!(".{name}.tmp.{}.{unique}", std::process::id()));
        fs::write(&tmp, contents)?;
        fs::rename(&tmp, self.dir.join(name))?;
        Ok(())
    }

    pub fn load_characters(&self, modulus: u64) -> Option<Vec<DirichletCharacter>> {
        let raw = fs::read_to_string(self.dir.join(format!("characters_{modulus}.json"))).ok()?;
        let file: CharactersFile = serde_json::from_str(&raw).ok()?;
        if file.version != CACHE_VERSION || file.modulus != modulus {
            return None;
        }
        if file.characters.len() as u64 != crate::exact::numtheory::euler_phi(modulus) {
            return None;
        }
        for chi in &file.characters {
            if chi.modulus() != modulus || chi.validate().is_err() {
                return None;
            }
        }
        Some(file.characters)
    }

    pub fn store_characters(&self, modulus: u64, characters: &[DirichletCharacter]) -> Result<()> {
        let file = CharactersFile {
            version: CACHE_VERSION,
            modulus,
            characters: characters.to_vec(),
        };
        self.write_atomic(
            &format!("characters_{modulus}.json"),
            &serde_json::to_string(&file)?,
        )
    }

    pub fn load_bernoulli(&self, degree: u32) -> Option<BernoulliPoly> {
        let raw = fs::read_to_string(self.dir.join(format!("bernoulli_{degree}.json"))).ok()?;
        let file: BernoulliFile = serde_json::from_str(&raw).ok()?;
        if file.version != CACHE_VERSION || file.degree != degree {
            return None;
        }
        let coeffs = file
            .coeffs
            .iter()
            .map(|s| Rational::from_str(s))
            .collect::<std::result::Result<Vec<_>, _>>()
            .ok()?;
        BernoulliPoly::from_coeffs(degree, coeffs).ok()
    }

    pub fn store_bernoulli(&self, poly: &BernoulliPoly) -> Result<()> {
        let file = BernoulliFile {
            version: CACHE_VERSION,
            degree: poly.degree(),
            coeffs: poly.coeffs().iter().map(|c| c.to_string()).collect(),
        };
        self.write_atomic(
            &format!("bernoulli_{}.json", poly.degree()),
            &serde_json::to_string(&file)?,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dirichlet::{bernoulli_polynomial, enumerate_characters};

    #[test]
    fn roundtrip_characters_and_bernoulli() {
        let tmp = tempfile::tempdir().unwrap();
        let cache = Cache::open(tmp.path()).unwrap();
        let chars = enumerate_characters(12);
        cache.store_characters(12, &chars).unwrap();
        assert_eq!(cache.load_characters(12).unwrap(), chars);

        let poly = bernoulli_polynomial(6);
        cache.store_bernoulli(&poly).unwrap();
        assert_eq!(cache.load_bernoulli(6).unwrap(), poly);
    }

    #[test]
    fn version_mismatch_invalidates() {
        let tmp = tempfile::tempdir().unwrap();
        let cache = Cache::open(tmp.path()).unwrap();
        cache
            .store_characters(4, &enumerate_characters(4))
            .unwrap();
        let path = tmp.path().join("characters_4.json");
        let doctored = std::fs::read_to_string(&path)
            .unwrap()
            .replace("\"version\":1", "\"version\":999");
        std::fs::write(&path, doctored).unwrap();
        assert!(cache.load_characters(4).is_none());
    }

    #[test]
    fn corrupted_exponents_invalidate() {
        let tmp = tempfile::tempdir().unwrap();
        let cache = Cache::open(tmp.path()).unwrap();
        cache
            .store_characters(4, &enumerate_characters(4))
            .unwrap();
        let path = tmp.path().join("characters_4.json");
        let doctored = std::fs::read_to_string(&path)
            .unwrap()
            .replace("[3,1]", "[3,7]");
        std::fs::write(&path, doctored).unwrap();
        assert!(cache.load_characters(4).is_none());
    }

    #[test]
    fn missing_entries_are_misses() {
        let tmp = tempfile::tempdir().unwrap();
        let cache = Cache::open(tmp.path()).unwrap();
        assert!(cache.load_characters(7).is_none());
        assert!(cache.load_bernoulli(3).is_none());
    }
}
