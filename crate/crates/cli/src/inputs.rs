//! Input specifier resolution.
//!
//! An input is, in order of precedence:
//! 1. a path to an algebra file, optionally `FILE#DERIVATION`;
//! 2. a bundled example pair name (`ex21_alpha`, ..., `ex25_n2`);
//! 3. a catalog instance `LABEL` or `LABEL[p1,p2,...]`.

use crate::format::{parse_algebra_file, serialize_algebra, AlgebraFile};
use lieclass_core::catalog;
use lieclass_core::homogeneous::{validate_homogeneous, HomogeneousGroup};
use lieclass_core::lie::{Derivation, LieAlgebra};
use lieclass_core::rat::{parse_rat, Rat};
use std::collections::BTreeMap;
use std::path::Path;

pub struct ResolvedAlgebra {
    pub algebra: LieAlgebra,
    pub derivations: BTreeMap<String, Derivation>,
    pub file: Option<AlgebraFile>,
    /// Canonical description fed into the inputs digest.
    pub canonical: String,
    pub display: String,
}

pub fn parse_instance_spec(spec: &str) -> Result<(String, Vec<Rat>), String> {
    match spec.find('[') {
        None => Ok((spec.to_string(), Vec::new())),
        Some(open) => {
            if !spec.ends_with(']') {
                return Err(format!("malformed instance `{spec}` (missing `]`)"));
            }
            let label = spec[..open].to_string();
            let inner = &spec[open + 1..spec.len() - 1];
            let mut params = Vec::new();
            if !inner.trim().is_empty() {
                for part in inner.split(',') {
                    params.push(parse_rat(part).map_err(|e| format!("bad parameter: {e}"))?);
                }
            }
            Ok((label, params))
        }
    }
}

pub fn resolve_algebra(spec: &str) -> Result<ResolvedAlgebra, String> {
    let (path_part, deriv_part) = match spec.split_once('#') {
        Some((p, d)) => (p, Some(d.to_string())),
        None => (spec, None),
    };
    if Path::new(path_part).is_file() {
        let text = std::fs::read_to_string(path_part)
            .map_err(|e| format!("cannot read `{path_part}`: {e}"))?;
        let file = parse_algebra_file(&text).map_err(|e| format!("{path_part}: {e}"))?;
        let canonical = serialize_algebra(
            &file.algebra,
            &file.derivations,
            file.presentation.as_ref(),
        );
        let mut derivations = file.derivations.clone();
        if let Some(name) = &deriv_part {
            let d = derivations
                .remove(name)
                .ok_or_else(|| format!("`{path_part}` has no derivation `{name}`"))?;
            derivations = BTreeMap::from([(name.clone(), d)]);
        }
        return Ok(ResolvedAlgebra {
            algebra: file.algebra.clone(),
            derivations,
            display: spec.to_string(),
            canonical,
            file: Some(file),
        });
    }
    if catalog::homogeneous_example_names().contains(&path_part) {
        let ex = catalog::homogeneous_example(path_part).map_err(|e| e.to_string())?;
        let alpha = ex
            .group
            .algebra
            .derivation(ex.group.alpha.clone())
            .expect("example derivation");
        let canonical = format!(
            "example:{}\n{}",
            path_part,
            serialize_algebra(
                &ex.group.algebra,
                &BTreeMap::from([("alpha".to_string(), alpha.clone())]),
                None
            )
        );
        return Ok(ResolvedAlgebra {
            algebra: ex.group.algebra.clone(),
            derivations: BTreeMap::from([("alpha".to_string(), alpha)]),
            file: None,
            canonical,
            display: path_part.to_string(),
        });
    }
    let (label, params) = parse_instance_spec(path_part)?;
    let algebra = catalog::load(&label, &params).map_err(|e| e.to_string())?;
    let canonical = format!(
        "catalog:{}\n{}",
        catalog::format_instance(&label, &params),
        serialize_algebra(&algebra, &BTreeMap::new(), None)
    );
    Ok(ResolvedAlgebra {
        algebra,
        derivations: BTreeMap::new(),
        file: None,
        canonical,
        display: catalog::format_instance(&label, &params),
    })
}

impl ResolvedAlgebra {
    /// The unique derivation of this input, or an error naming the options.
    pub fn single_derivation(&self) -> Result<(String, Derivation), String> {
        match self.derivations.len() {
            1 => {
                let (k, v) = self.derivations.iter().next().unwrap();
                Ok((k.clone(), v.clone()))
            }
            0 => Err(format!(
                "`{}` carries no derivation; use FILE#NAME or an example pair",
                self.display
            )),
            _ => Err(format!(
                "`{}` has several derivations ({}); pick one with FILE#NAME",
                self.display,
                self.derivations.keys().cloned().collect::<Vec<_>>().join(", ")
            )),
        }
    }

    pub fn homogeneous(&self) -> Result<HomogeneousGroup, String> {
        let (_, d) = self.single_derivation()?;
        validate_homogeneous(&self.algebra, &d).map_err(|e| e.to_string())
    }
}

