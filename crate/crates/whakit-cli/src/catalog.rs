//! Named instances and input resolution: an argument is read as a bundle
//! file when it exists on disk and as a catalog name otherwise.

use std::path::Path;

use sha2::{Digest, Sha256};
use whakit_core::examples::{group_z2z2, group_zn, sweedler, QtInstance};
use whakit_core::face_algebra::build_face_algebra;
use whakit_core::FieldDesc;

use crate::bundle::{AlgebraBundle, BundleError, ComoduleAlgebraBundle, ModuleBundle};

/// The catalog names understood by [`catalog_instance`].
pub const CATALOG_NAMES: &[&str] = &["sweedler", "group_zn:<n>", "group_z2z2", "face:<n>"];

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Bundle { path: String, source: BundleError },
    #[error("{0:?} is neither a file nor a catalog name (known: {known})", known = CATALOG_NAMES.join(", "))]
    UnknownName(String),
}

/// The smallest field holding every structure constant of `inst`.
pub fn instance_field(inst: &QtInstance) -> FieldDesc {
    let sc = &inst.constants;
    let scalars = sc
        .mult
        .iter()
        .map(|t| &t.3)
        .chain(sc.comult.iter().map(|t| &t.3))
        .chain(sc.unit.iter().map(|t| &t.1))
        .chain(sc.counit.iter().map(|t| &t.1))
        .chain(sc.antipode.iter().map(|t| &t.2))
        .chain(inst.r.iter().map(|(_, c)| c))
        .chain(inst.r_bar.iter().map(|(_, c)| c));
    scalars.map(|c| c.field()).max_by_key(|f| match f {
        FieldDesc::Rational => 0,
        FieldDesc::Cyclotomic { order } => *order,
    })
    .unwrap_or(FieldDesc::Rational)
}

/// Builds a catalog instance: `sweedler`, `group_zn:<n>`, `group_z2z2` or
/// `face:<n>`.
pub fn catalog_instance(name: &str) -> Option<QtInstance> {
    let arg = |prefix: &str| name.strip_prefix(prefix).and_then(|s| s.parse::<usize>().ok());
    match name {
        "sweedler" => Some(sweedler()),
        "group_z2z2" => Some(group_z2z2()),
        _ => {
            if let Some(n) = arg("group_zn:") {
                (n >= 1).then(|| group_zn(n))
            } else if let Some(n) = arg("face:") {
                (n >= 2).then(|| build_face_algebra(n))
            } else {
                None
            }
        }
    }
}

pub fn catalog_bundle(name: &str) -> Option<AlgebraBundle> {
    catalog_instance(name).map(|inst| {
        let field = instance_field(&inst);
        AlgebraBundle::from_instance(&inst, field)
    })
}

/// Where an input came from, for the run report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputDigest {
    pub source: String,
    pub sha256: String,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

fn read_file(arg: &str) -> Result<Option<String>, InputError> {
    if !Path::new(arg).is_file() {
        return Ok(None);
    }
    std::fs::read_to_string(arg).map(Some).map_err(|source| InputError::Io { path: arg.to_string(), source })
}

fn parse_json<T: serde::de::DeserializeOwned>(arg: &str, text: &str) -> Result<T, InputError> {
    serde_json::from_str(text).map_err(|e| InputError::Bundle { path: arg.to_string(), source: BundleError::Json(e) })
}

/// An algebra bundle from a file or the catalog.
pub fn load_algebra(arg: &str) -> Result<(AlgebraBundle, InputDigest), InputError> {
    match read_file(arg)? {
        Some(text) => {
            let bundle = parse_json(arg, &text)?;
            Ok((bundle, InputDigest { source: arg.to_string(), sha256: sha256_hex(text.as_bytes()) }))
        }
        None => {
            let bundle = catalog_bundle(arg).ok_or_else(|| InputError::UnknownName(arg.to_string()))?;
            let text = crate::bundle::to_canonical_json(&bundle);
            Ok((bundle, InputDigest { source: format!("catalog:{arg}"), sha256: sha256_hex(text.as_bytes()) }))
        }
    }
}

pub fn load_comodule_algebra(arg: &str) -> Result<(ComoduleAlgebraBundle, InputDigest), InputError> {
    let text = read_file(arg)?.ok_or_else(|| InputError::Io {
        path: arg.to_string(),
        source: std::io::Error::new(std::io::ErrorKind::NotFound, "no such file"),
    })?;
    let bundle = parse_json(arg, &text)?;
    Ok((bundle, InputDigest { source: arg.to_string(), sha256: sha256_hex(text.as_bytes()) }))
}

pub fn load_module(arg: &str) -> Result<(ModuleBundle, InputDigest), InputError> {
    let text = read_file(arg)?.ok_or_else(|| InputError::Io {
        path: arg.to_string(),
        source: std::io::Error::new(std::io::ErrorKind::NotFound, "no such file"),
    })?;
    let bundle = parse_json(arg, &text)?;
    Ok((bundle, InputDigest { source: arg.to_string(), sha256: sha256_hex(text.as_bytes()) }))
}
