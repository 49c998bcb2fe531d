//! Catalog of small knots, shipped as JSON fixtures with SHA-256 checksums.
//!
//! The fixtures are compiled in; setting `KNOTFORGE_CATALOG` to a directory
//! holding `manifest.json` and the entry files loads those instead.

use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::alexander_from_pd;
use crate::error::{Error, Result};
use crate::grid::{grid_to_pd, GridDiagram};
use crate::laurent::LaurentPoly;
use crate::pd::PlanarDiagram;

pub const CATALOG_ENV: &str = "KNOTFORGE_CATALOG";

/// Values known from the literature, used as test oracles.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnownValues {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub genus: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fibered: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tau: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g4: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alexander: Option<LaurentPoly>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    pub pd: PlanarDiagram,
    #[serde(default)]
    pub grid: Option<GridDiagram>,
    #[serde(default)]
    pub known: KnownValues,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub name: String,
    pub file: String,
    pub sha256: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Manifest {
    pub entries: Vec<ManifestEntry>,
}

macro_rules! fixture {
    ($f:literal) => {
        ($f, include_str!(concat!("../../fixtures/catalog/", $f)))
    };
}

const MANIFEST: &str = include_str!("../../fixtures/catalog/manifest.json");
const FILES: &[(&str, &str)] = &[
    fixture!("unknot.json"),
    fixture!("trefoil_rh.json"),
    fixture!("trefoil_lh.json"),
    fixture!("fig8.json"),
    fixture!("6_1.json"),
    fixture!("8_19.json"),
    fixture!("8_19m.json"),
    fixture!("T_2_5.json"),
    fixture!("T_2_7.json"),
    fixture!("T_3_4.json"),
    fixture!("T_3_5.json"),
];

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn bad(m: String) -> Error {
    Error::Catalog(m)
}

impl CatalogEntry {
    /// Checks the diagrams against each other and against the known values.
    pub fn validate(&self) -> Result<()> {
        let alex = alexander_from_pd(&self.pd)?;
        if let Some(g) = &self.grid {
            g.check_knot()?;
            let ga = alexander_from_pd(&grid_to_pd(g)?)?;
            if ga != alex {
                return Err(bad(format!("{}: grid Alexander polynomial {ga} differs from {alex}", self.name)));
            }
        }
        if let Some(k) = &self.known.alexander {
            if *k != alex {
                return Err(bad(format!("{}: known Alexander polynomial {k} differs from {alex}", self.name)));
            }
        }
        Ok(())
    }
}

fn parse_entry(name: &str, text: &str, sha: &str) -> Result<CatalogEntry> {
    let got = sha256_hex(text.as_bytes());
    if got != sha {
        return Err(bad(format!("checksum mismatch for {name}: manifest {sha}, file {got}")));
    }
    let e: CatalogEntry = serde_json::from_str(text).map_err(|e| bad(format!("{name}: {e}")))?;
    if e.name != name {
        return Err(bad(format!("manifest names {name} but the file holds {}", e.name)));
    }
    e.validate()?;
    Ok(e)
}

fn manifest(text: &str) -> Result<Manifest> {
    serde_json::from_str(text).map_err(|e| bad(format!("manifest: {e}")))
}

/// Loads and validates every entry listed in `dir/manifest.json`.
pub fn load_catalog_dir(dir: &Path) -> Result<Vec<CatalogEntry>> {
    let read = |p: &Path| std::fs::read_to_string(p).map_err(|e| Error::Io(format!("{}: {e}", p.display())));
    let m = manifest(&read(&dir.join("manifest.json"))?)?;
    m.entries.iter().map(|me| parse_entry(&me.name, &read(&dir.join(&me.file))?, &me.sha256)).collect()
}

fn builtin_manifest() -> Manifest {
    manifest(MANIFEST).expect("bundled manifest parses")
}

fn builtin_text(file: &str) -> Option<&'static str> {
    FILES.iter().find(|(f, _)| *f == file).map(|(_, t)| *t)
}

/// Names in catalog order.
pub fn catalog_names() -> Result<Vec<String>> {
    match std::env::var_os(CATALOG_ENV) {
        Some(dir) => {
            let text = std::fs::read_to_string(Path::new(&dir).join("manifest.json"))
                .map_err(|e| Error::Io(e.to_string()))?;
            Ok(manifest(&text)?.entries.into_iter().map(|e| e.name).collect())
        }
        None => Ok(builtin_manifest().entries.into_iter().map(|e| e.name).collect()),
    }
}

/// Every catalog entry, validated.
pub fn catalog_all() -> Result<Vec<CatalogEntry>> {
    match std::env::var_os(CATALOG_ENV) {
        Some(dir) => load_catalog_dir(Path::new(&dir)),
        None => builtin_manifest()
            .entries
            .iter()
            .map(|me| {
                let text = builtin_text(&me.file).ok_or_else(|| bad(format!("missing fixture {}", me.file)))?;
                parse_entry(&me.name, text, &me.sha256)
            })
            .collect(),
    }
}

/// The catalog entry called `name`.
pub fn catalog(name: &str) -> Result<CatalogEntry> {
    match std::env::var_os(CATALOG_ENV) {
        Some(dir) => load_catalog_dir(Path::new(&dir))?
            .into_iter()
            .find(|e| e.name == name)
            .ok_or_else(|| Error::UnknownKnot(name.to_string())),
        None => {
            let m = builtin_manifest();
            let me = m.entries.iter().find(|e| e.name == name).ok_or_else(|| Error::UnknownKnot(name.to_string()))?;
            let text = builtin_text(&me.file).ok_or_else(|| bad(format!("missing fixture {}", me.file)))?;
            parse_entry(name, text, &me.sha256)
        }
    }
}
