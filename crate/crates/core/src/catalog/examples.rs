//! Bundled homogeneous example pairs (ex21 .. ex25): the distinguishability
//! case studies shipped with the tool. Each is a nilpotent algebra with a
//! named derivation.

use super::builders;
use crate::error::LieError;
use crate::homogeneous::{validate_homogeneous, HomogeneousGroup};
use crate::lie::LieAlgebra;
use crate::matrix::Matrix;
use crate::rat::{rat, rint, Rat};

pub struct HomogeneousExample {
    pub name: &'static str,
    pub group: HomogeneousGroup,
}

const NAMES: &[&str] = &[
    "ex21_alpha",
    "ex21_beta",
    "ex22_alpha",
    "ex22_beta",
    "ex23_n1",
    "ex23_n2",
    "ex24_alpha",
    "ex24_beta",
    "ex25_n1",
    "ex25_n2",
];

pub fn homogeneous_example_names() -> &'static [&'static str] {
    NAMES
}

fn diag_i64(entries: &[i64]) -> Matrix {
    Matrix::diag(&entries.iter().map(|&x| rint(x)).collect::<Vec<_>>())
}

fn make(g: LieAlgebra, m: Matrix) -> Result<HomogeneousGroup, LieError> {
    let d = g.derivation(m)?;
    validate_homogeneous(&g, &d)
}

/// The pair on `Heis x R` with parameter `a > 1`: the derivations differ
/// only in the Jordan structure at the eigenvalue `a`.
pub fn ex22_pair(a: &Rat) -> Result<(HomogeneousGroup, HomogeneousGroup), LieError> {
    let g = builders::heis_x_r();
    builders::ex22_admissible(std::slice::from_ref(a)).map_err(|detail| {
        LieError::ParameterOutOfRange {
            label: "ex22".into(),
            detail,
        }
    })?;
    let diag = Matrix::diag(&[a - rint(1), rint(1), a.clone(), a.clone()]);
    let mut with_block = diag.clone();
    *with_block.at_mut(2, 3) = rint(1);
    Ok((make(g.clone(), with_block)?, make(g, diag)?))
}

pub fn ex22_default_parameter() -> Rat {
    rat(3, 2)
}

pub fn ex22_sample_parameters() -> Vec<Rat> {
    builders::ex22_samples().into_iter().map(|mut v| v.remove(0)).collect()
}

pub fn homogeneous_example(name: &str) -> Result<HomogeneousExample, LieError> {
    let group = match name {
        "ex21_alpha" => make(builders::heis_x_r3(), diag_i64(&[1, 2, 3, 4, 5, 9]))?,
        "ex21_beta" => make(builders::heis_x_r3(), diag_i64(&[4, 5, 9, 1, 2, 3]))?,
        "ex22_alpha" => ex22_pair(&ex22_default_parameter())?.0,
        "ex22_beta" => ex22_pair(&ex22_default_parameter())?.1,
        "ex23_n1" => make(
            super::load("L_{6,8}", &[])?,
            diag_i64(&[2, 1, 1, 2, 3, 3]),
        )?,
        "ex23_n2" => make(
            super::load("L_{6,22}", &[rint(0)])?,
            diag_i64(&[2, 1, 1, 2, 3, 3]),
        )?,
        "ex24_alpha" => make(
            builders::heis5_x_heis5(),
            diag_i64(&[1, 7, 3, 5, 8, 2, 6, 4, 4, 8]),
        )?,
        "ex24_beta" => make(
            builders::heis5_x_heis5(),
            diag_i64(&[1, 7, 4, 4, 8, 2, 6, 3, 5, 8]),
        )?,
        "ex25_n1" => make(
            super::load("L_{6,23}", &[])?,
            diag_i64(&[1, 1, 2, 2, 3, 3]),
        )?,
        "ex25_n2" => make(
            super::load("L_{6,25}", &[])?,
            diag_i64(&[1, 1, 2, 2, 3, 3]),
        )?,
        _ => return Err(LieError::UnknownLabel(name.to_string())),
    };
    let name = NAMES
        .iter()
        .find(|n| **n == name)
        .expect("known example name");
    Ok(HomogeneousExample { name, group })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_examples_validate() {
        for name in homogeneous_example_names() {
            let ex = homogeneous_example(name).unwrap();
            assert!(ex.group.is_purely_real(), "{name} not purely real");
        }
    }

    #[test]
    fn ex22_rejects_small_parameter() {
        assert!(ex22_pair(&rint(1)).is_err());
        assert!(ex22_pair(&rat(3, 2)).is_ok());
    }
}
