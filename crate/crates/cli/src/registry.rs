//! The local registry: a directory of algebra definition files, one per
//! registered algebra, overridable through HNLAB_REGISTRY.

use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use hnlab_core::liealg::{catalog, load_algebra, LieAlgebraSpec};

pub fn registry_dir() -> PathBuf {
    if let Ok(dir) = std::env::var("HNLAB_REGISTRY") {
        return PathBuf::from(dir);
    }
    match std::env::var("HOME") {
        Ok(home) => Path::new(&home).join(".hnlab").join("registry"),
        Err(_) => PathBuf::from(".hnlab-registry"),
    }
}

/// Registered algebras, sorted by name.
pub fn registered() -> Result<Vec<LieAlgebraSpec>> {
    let dir = registry_dir();
    let mut out = Vec::new();
    if !dir.exists() {
        return Ok(out);
    }
    let mut entries: Vec<PathBuf> = std::fs::read_dir(&dir)
        .with_context(|| format!("cannot read registry {}", dir.display()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().map(|e| e == "toml").unwrap_or(false))
        .collect();
    entries.sort();
    for path in entries {
        let text = std::fs::read_to_string(&path)
            .with_context(|| format!("cannot read {}", path.display()))?;
        let spec = load_algebra(&text)
            .with_context(|| format!("invalid registry entry {}", path.display()))?;
        out.push(spec);
    }
    Ok(out)
}

/// Resolves an algebra by file path, built-in name, or registry name.
pub fn resolve(name_or_path: &str) -> std::result::Result<LieAlgebraSpec, hnlab_core::Error> {
    let path = Path::new(name_or_path);
    if path.is_file() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| hnlab_core::Error::BadAlgebraFile(e.to_string()))?;
        return load_algebra(&text);
    }
    if let Ok(spec) = catalog::get(name_or_path) {
        return Ok(spec);
    }
    let registry_path = registry_dir().join(format!("{name_or_path}.toml"));
    if registry_path.is_file() {
        let text = std::fs::read_to_string(&registry_path)
            .map_err(|e| hnlab_core::Error::BadAlgebraFile(e.to_string()))?;
        return load_algebra(&text);
    }
    let mut available: Vec<String> = catalog::NAMES.iter().map(|s| s.to_string()).collect();
    if let Ok(regs) = registered() {
        available.extend(regs.iter().map(|r| r.name().to_string()));
    }
    Err(hnlab_core::Error::UnknownAlgebra {
        name: name_or_path.to_string(),
        available: available.join(", "),
    })
}

/// Validates and persists an algebra file; the name must be new.
pub fn add(path: &Path) -> std::result::Result<String, AddError> {
    let text = std::fs::read_to_string(path).map_err(|e| AddError::Io(e.to_string()))?;
    let spec = load_algebra(&text).map_err(AddError::Core)?;
    let name = spec.name().to_string();
    if catalog::NAMES.contains(&name.as_str()) {
        return Err(AddError::Duplicate(name));
    }
    let dir = registry_dir();
    let target = dir.join(format!("{name}.toml"));
    if target.exists() {
        return Err(AddError::Duplicate(name));
    }
    std::fs::create_dir_all(&dir).map_err(|e| AddError::Io(e.to_string()))?;
    std::fs::write(&target, spec.to_toml_string()).map_err(|e| AddError::Io(e.to_string()))?;
    Ok(name)
}

pub enum AddError {
    Io(String),
    Core(hnlab_core::Error),
    Duplicate(String),
}
