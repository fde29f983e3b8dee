use std::fmt;
use std::str::FromStr;

use super::closed::{hamming_eigenstructure, hamming_walk};
use super::engines::{amplitudes_eigen, amplitudes_group, amplitudes_spectral};
use super::series::AmplitudeSeries;
use crate::error::{Error, Result};
use crate::group::{character_table_cyclic, SymmetrizedScheme};
use crate::scheme::{eigenstructure_from_array, IntersectionArray, SchemeSpec};
use crate::spectral::{catalog, golub_welsch, jacobi_from_intersection, srg_distribution};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Engine {
    Eigen,
    Character,
    Spectral,
    Auto,
}

impl FromStr for Engine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "eigen" => Ok(Engine::Eigen),
            "character" => Ok(Engine::Character),
            "spectral" => Ok(Engine::Spectral),
            "auto" => Ok(Engine::Auto),
            other => Err(Error::BadParameter(format!("unknown engine {other:?}"))),
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Engine::Eigen => "eigen",
            Engine::Character => "character",
            Engine::Spectral => "spectral",
            Engine::Auto => "auto",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct WalkRequest {
    pub spec: SchemeSpec,
    pub times: Vec<f64>,
    pub engine: Engine,
    /// Walk with `A / a_1` instead of `A`.
    pub normalized_adjacency: bool,
}

impl WalkRequest {
    pub fn new(spec: SchemeSpec, times: Vec<f64>) -> Self {
        WalkRequest {
            spec,
            times,
            engine: Engine::Auto,
            normalized_adjacency: false,
        }
    }

    pub fn engine(mut self, engine: Engine) -> Self {
        self.engine = engine;
        self
    }

    pub fn normalized(mut self, on: bool) -> Self {
        self.normalized_adjacency = on;
        self
    }
}

fn mismatch(engine: Engine, spec: &SchemeSpec) -> Error {
    Error::EngineSpecMismatch {
        engine: engine.to_string(),
        spec: spec.describe(),
    }
}

fn spectral_from_array(ia: &IntersectionArray, times: &[f64]) -> Result<AmplitudeSeries> {
    let jc = jacobi_from_intersection(ia)?;
    amplitudes_spectral(&golub_welsch(&jc)?, &jc, ia, times)
}

/// `K_n` as the fusion of `Z_n` with every non-identity element merged.
fn complete_by_characters(n: u64, times: &[f64]) -> Result<AmplitudeSeries> {
    let table = character_table_cyclic(n as u32)?;
    let rest: Vec<usize> = (1..n as usize).collect();
    amplitudes_group(&table, &rest, &[vec![0], rest.clone()], times)
}

fn cycle_by_characters(n: u64, times: &[f64]) -> Result<AmplitudeSeries> {
    let table = character_table_cyclic(n as u32)?;
    let parts = table.inverse_pairs();
    amplitudes_group(&table, &parts[1], &parts, times)
}

fn evaluate(spec: &SchemeSpec, engine: Engine, times: &[f64]) -> Result<AmplitudeSeries> {
    use Engine::*;
    match spec {
        SchemeSpec::FromIntersectionArray(ia) => match engine {
            Eigen => Ok(amplitudes_eigen(&eigenstructure_from_array(ia)?, times)),
            Spectral | Auto => spectral_from_array(ia, times),
            Character => Err(mismatch(engine, spec)),
        },
        SchemeSpec::FromSrg { n, k, lambda, mu } => {
            let ia = spec.intersection_array()?;
            match engine {
                Eigen => Ok(amplitudes_eigen(&eigenstructure_from_array(&ia)?, times)),
                Spectral | Auto => {
                    let dist = srg_distribution(*n, *k, *lambda, *mu)?;
                    amplitudes_spectral(&dist, &jacobi_from_intersection(&ia)?, &ia, times)
                }
                Character => Err(mismatch(engine, spec)),
            }
        }
        SchemeSpec::Product { n, copies } => match engine {
            Character | Auto => hamming_walk(*n, *copies, times).map(|(s, _)| s),
            Eigen => Ok(amplitudes_eigen(&hamming_eigenstructure(*n, *copies)?, times)),
            Spectral => spectral_from_array(&spec.intersection_array()?, times),
        },
        SchemeSpec::Catalog { name, params } => {
            let entry = catalog(name, params)?;
            let p = &entry.params;
            match (engine, name.as_str()) {
                (Eigen, "hamming") => Ok(amplitudes_eigen(
                    &hamming_eigenstructure(p[1] as u64, p[0] as u64)?,
                    times,
                )),
                (Eigen, _) => Ok(amplitudes_eigen(&eigenstructure_from_array(&entry.array)?, times)),
                (Spectral | Auto, _) => spectral_from_array(&entry.array, times),
                (Character, "complete") if p[0] >= 3 => complete_by_characters(p[0] as u64, times),
                (Character, "cycle") => cycle_by_characters(p[0] as u64, times),
                (Character, "hamming") => hamming_walk(p[1] as u64, p[0] as u64, times).map(|(s, _)| s),
                (Character, _) => Err(mismatch(engine, spec)),
            }
        }
        SchemeSpec::FromGroup { group, class } => {
            let table = group.character_table()?;
            let strata = group.strata(&table, *class)?;
            match engine {
                Character | Auto => amplitudes_group(&table, &strata[1], &strata, times),
                Eigen => {
                    let fused = SymmetrizedScheme::fuse(&table, &strata)?;
                    Ok(amplitudes_eigen(&fused.eigenstructure(), times))
                }
                // distance strata, which are coarser than the class strata
                // for dihedral groups
                Spectral => {
                    let ia = spec.intersection_array().map_err(|_| mismatch(engine, spec))?;
                    spectral_from_array(&ia, times)
                }
            }
        }
    }
}

/// Runs the requested engine; `Auto` picks characters for groups and
/// products and the spectral route otherwise.
pub fn dispatch(req: &WalkRequest) -> Result<AmplitudeSeries> {
    if let Some(t) = req.times.iter().find(|t| !t.is_finite() || **t < 0.0) {
        return Err(Error::BadParameter(format!(
            "time {t} is not a nonnegative finite number"
        )));
    }
    if !req.normalized_adjacency {
        return evaluate(&req.spec, req.engine, &req.times);
    }
    let degree = evaluate(&req.spec, req.engine, &[])?.strata_sizes.a[1] as f64;
    let scaled: Vec<f64> = req.times.iter().map(|t| t / degree).collect();
    let mut series = evaluate(&req.spec, req.engine, &scaled)?;
    series.times = req.times.clone();
    Ok(series)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupDescriptor;
    use num_complex::Complex64;

    fn grid() -> Vec<f64> {
        (0..64).map(|i| 20.0 * i as f64 / 63.0).collect()
    }

    #[test]
    fn srg_auto_is_spectral() {
        let spec = SchemeSpec::FromSrg {
            n: 10,
            k: 3,
            lambda: 0,
            mu: 1,
        };
        let auto = dispatch(&WalkRequest::new(spec.clone(), grid())).unwrap();
        let ia = spec.intersection_array().unwrap();
        let jc = jacobi_from_intersection(&ia).unwrap();
        let direct = amplitudes_spectral(&srg_distribution(10, 3, 0, 1).unwrap(), &jc, &ia, &grid()).unwrap();
        assert_eq!(auto, direct);
    }

    #[test]
    fn normalized_complete_graph() {
        for n in 3..9u64 {
            let spec = SchemeSpec::Catalog {
                name: "complete".into(),
                params: vec![n as i64],
            };
            for engine in [Engine::Eigen, Engine::Spectral, Engine::Character] {
                let s = dispatch(&WalkRequest::new(spec.clone(), grid()).engine(engine).normalized(true)).unwrap();
                let nf = n as f64;
                for (t, row) in s.times.iter().zip(&s.amplitudes) {
                    let want =
                        (Complex64::new(0.0, -t).exp() + Complex64::new(0.0, t / (nf - 1.0)).exp() * (nf - 1.0)) / nf;
                    assert!((row[0] - want).norm() < 1e-12, "{engine} n = {n}");
                }
            }
        }
    }

    #[test]
    fn empty_and_invalid_times() {
        let spec = SchemeSpec::Catalog {
            name: "petersen".into(),
            params: vec![],
        };
        assert!(dispatch(&WalkRequest::new(spec.clone(), vec![]))
            .unwrap()
            .amplitudes
            .is_empty());
        assert!(dispatch(&WalkRequest::new(spec.clone(), vec![-1.0])).is_err());
        assert!(matches!(
            dispatch(&WalkRequest::new(spec, vec![1.0]).engine(Engine::Character)),
            Err(Error::EngineSpecMismatch { .. })
        ));
    }

    #[test]
    fn group_engines() {
        for g in [
            GroupDescriptor::Cyclic(7),
            GroupDescriptor::Dihedral(5),
            GroupDescriptor::Dihedral(6),
            GroupDescriptor::Symmetric(4),
        ] {
            let spec = SchemeSpec::FromGroup { group: g, class: None };
            let ch = dispatch(&WalkRequest::new(spec.clone(), grid())).unwrap();
            let eig = dispatch(&WalkRequest::new(spec.clone(), grid()).engine(Engine::Eigen)).unwrap();
            assert!(ch.max_difference(&eig).unwrap() < 1e-10, "{g}");
            assert!(ch.unitarity_defect() < 1e-10);
        }
        let s4 = SchemeSpec::FromGroup {
            group: GroupDescriptor::Symmetric(4),
            class: None,
        };
        assert!(dispatch(&WalkRequest::new(s4, grid()).engine(Engine::Spectral)).is_err());
    }
}
