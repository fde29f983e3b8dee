//! Vertex-level checks of a spec: the oracle graph against every engine
//! that accepts the spec.

use crate::error::Result;
use crate::oracle::{bfs_strata, build_graph, quantum_decomposition, DistancePartition, VertexEvolution};
use crate::scheme::SchemeSpec;
use crate::spectral::jacobi_from_intersection;
use crate::walk::{dispatch, Engine, WalkRequest};

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub deviation: f64,
    pub tolerance: f64,
}

impl Check {
    fn new(name: impl Into<String>, deviation: f64, tolerance: f64) -> Self {
        Check {
            name: name.into(),
            deviation,
            tolerance,
        }
    }

    pub fn passed(&self) -> bool {
        self.deviation < self.tolerance
    }
}

pub fn verify(spec: &SchemeSpec, times: &[f64]) -> Result<Vec<Check>> {
    let g = build_graph(spec)?;
    let bfs = bfs_strata(&g);
    let strata = match &g.class_of {
        Some(levels) => DistancePartition::from_levels(levels.clone()),
        None => bfs.clone(),
    };
    let ev = VertexEvolution::new(&g)?;
    let a = g.adjacency();
    let mut checks = vec![
        Check::new("eigenvector_orthogonality", ev.eigen.orthogonality_defect(), 1e-10),
        Check::new("eigen_residual", ev.eigen.residual(&a), 1e-9),
    ];
    let uniform = ev.uniformity(&strata, times);
    checks.push(Check::new("stratum_uniformity", uniform.max_spread, 1e-9));
    checks.push(Check::new("vertex_unitarity", uniform.norm_defect, 1e-9));

    if let Ok(ia) = spec.intersection_array() {
        let found = bfs.intersection_array(&g)?;
        checks.push(Check::new(
            "intersection_array",
            if found == ia { 0.0 } else { 1.0 },
            0.5,
        ));
        let q = quantum_decomposition(&g, &bfs)?;
        let ladder = q
            .reconstruction_defect(&g)
            .max(q.adjoint_defect())
            .max(q.ladder_defect(&bfs, &jacobi_from_intersection(&ia)?)?);
        checks.push(Check::new("quantum_decomposition", ladder, 1e-10));
    }

    for engine in [Engine::Eigen, Engine::Character, Engine::Spectral] {
        let Ok(series) = dispatch(&WalkRequest::new(spec.clone(), times.to_vec()).engine(engine)) else {
            continue;
        };
        let partition = if series.strata_sizes.a == strata.sizes() {
            &strata
        } else {
            &bfs
        };
        let exact = ev.stratum_series(partition, times);
        checks.push(Check::new(
            format!("{engine}_vs_oracle"),
            series.max_difference(&exact)?,
            1e-8,
        ));
        checks.push(Check::new(
            format!("{engine}_unitarity"),
            series.unitarity_defect(),
            1e-9,
        ));
    }
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupDescriptor;

    #[test]
    fn petersen_and_dihedral() {
        let times: Vec<f64> = (0..16).map(|i| i as f64 * 1.3).collect();
        for spec in [
            SchemeSpec::Catalog {
                name: "petersen".into(),
                params: vec![],
            },
            SchemeSpec::FromGroup {
                group: GroupDescriptor::Dihedral(6),
                class: None,
            },
        ] {
            let checks = verify(&spec, &times).unwrap();
            assert!(checks.iter().any(|c| c.name == "spectral_vs_oracle"));
            assert!(checks.iter().all(Check::passed), "{checks:?}");
        }
    }
}
