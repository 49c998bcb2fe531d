//! Bundled CFK model complexes.

use crate::cfk::CfkComplex;
use crate::error::{Error, Result};

const CFK: &[(&str, &str)] = &[
    ("unknot", include_str!("../fixtures/cfk/unknot.json")),
    ("trefoil", include_str!("../fixtures/cfk/trefoil.json")),
    ("fig5-right", include_str!("../fixtures/cfk/fig5-right.json")),
    ("gap3", include_str!("../fixtures/cfk/gap3.json")),
    ("gap-staircase", include_str!("../fixtures/cfk/gap-staircase.json")),
];

/// Symmetric candidates with nothing in Alexander grading g - 1.
pub const LSPACE_COUNTEREXAMPLES: [&str; 3] = ["fig5-right", "gap3", "gap-staircase"];

pub fn cfk_fixture_names() -> impl Iterator<Item = &'static str> {
    CFK.iter().map(|(n, _)| *n)
}

/// Fixture by name, with or without a `.json` suffix.
pub fn cfk_fixture(name: &str) -> Result<CfkComplex> {
    let key = name.strip_suffix(".json").unwrap_or(name);
    let (_, text) = CFK
        .iter()
        .find(|(n, _)| *n == key)
        .ok_or_else(|| Error::Catalog(format!("no CFK fixture named {name}")))?;
    CfkComplex::from_json(text)
}
