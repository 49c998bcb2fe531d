//! Knot diagrams: catalog, families, diagram operations and the Alexander
//! polynomial from a PD code.

mod alexander;
mod bands;
mod catalog;
mod families;
mod ops;

pub use alexander::alexander_from_pd;
pub use catalog::{catalog, catalog_all, catalog_names, load_catalog_dir, sha256_hex, CatalogEntry, KnownValues, Manifest, ManifestEntry, CATALOG_ENV};
pub use bands::{band_class, band_family, band_sites, faces, insert_twists, BandTemplate};
pub use families::{kanenobu, six_one_template};
pub use ops::{connected_sum, mirror, reverse, simplify_joins};
