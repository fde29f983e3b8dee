use num_complex::Complex64;

use scheme_walk::group::GroupDescriptor;
use scheme_walk::oracle::{
    bfs_strata, build_graph, cayley_graph, check_stratum_uniformity, exact_walk, jacobi_eigen, stratum_series,
    DistancePartition, VertexGraph,
};
use scheme_walk::scheme::SchemeSpec;
use scheme_walk::spectral::{catalog, golub_welsch, jacobi_from_intersection};
use scheme_walk::walk::{amplitudes_spectral, dispatch, Engine, WalkRequest};

fn grid() -> Vec<f64> {
    (0..64).map(|i| 20.0 * i as f64 / 63.0).collect()
}

fn builders() -> Vec<(String, VertexGraph)> {
    let mut graphs: Vec<(String, VertexGraph)> = Vec::new();
    for n in [2, 3, 5, 8] {
        graphs.push((format!("K_{n}"), VertexGraph::complete(n).unwrap()));
    }
    for n in [4, 5, 7, 9, 10] {
        graphs.push((format!("C_{n}"), VertexGraph::cycle(n).unwrap()));
    }
    for m in [2, 3, 5] {
        graphs.push((format!("K_{m},{m}"), VertexGraph::complete_bipartite(m).unwrap()));
    }
    graphs.push(("K(5,2)".into(), VertexGraph::kneser(5, 2).unwrap()));
    graphs.push(("K(7,3)".into(), VertexGraph::kneser(7, 3).unwrap()));
    for (v, d) in [(5, 2), (6, 3), (7, 3)] {
        graphs.push((format!("J({v},{d})"), VertexGraph::johnson(v, d).unwrap()));
    }
    for (d, n) in [(2, 3), (3, 2), (3, 3), (4, 2)] {
        graphs.push((format!("H({d},{n})"), VertexGraph::hamming(d, n).unwrap()));
    }
    graphs
}

#[test]
fn spectral_pipeline_matches_exact_evolution() {
    for (label, g) in builders() {
        let partition = bfs_strata(&g);
        let ia = partition.intersection_array(&g).unwrap();
        let jc = jacobi_from_intersection(&ia).unwrap();
        let series = amplitudes_spectral(&golub_welsch(&jc).unwrap(), &jc, &ia, &grid()).unwrap();
        let exact = stratum_series(&g, &partition, &grid()).unwrap();
        let d = series.max_difference(&exact).unwrap();
        assert!(d < 1e-8, "{label}: {d:e}");
    }
}

#[test]
fn eigensolver_is_orthogonal_on_every_builder() {
    for (label, g) in builders() {
        let eig = jacobi_eigen(&g.adjacency()).unwrap();
        assert!(eig.orthogonality_defect() < 1e-10, "{label}");
        assert!(eig.residual(&g.adjacency()) < 1e-9, "{label}");
    }
}

#[test]
fn vertex_amplitudes_are_uniform_on_strata() {
    for (label, g) in builders() {
        let r = check_stratum_uniformity(&g, &bfs_strata(&g), &grid()).unwrap();
        assert!(r.passed(), "{label}: {r:?}");
    }
}

#[test]
fn catalog_arrays_match_breadth_first_search() {
    let cases: Vec<(&str, Vec<i64>)> = vec![
        ("petersen", vec![]),
        ("johnson", vec![5, 2]),
        ("johnson", vec![8, 4]),
        ("hamming", vec![3, 4]),
        ("cycle", vec![11]),
        ("complete", vec![6]),
    ];
    for (name, params) in cases {
        let spec = SchemeSpec::Catalog {
            name: name.into(),
            params: params.clone(),
        };
        let g = build_graph(&spec).unwrap();
        assert_eq!(
            bfs_strata(&g).intersection_array(&g).unwrap(),
            catalog(name, &params).unwrap().array,
            "{name}"
        );
    }
}

/// `amp_k = (√a_k / n) Σ_j e^{-2it cos(2πj/n)} cos(2πjk/n)`.
fn cycle_closed_form(n: usize, k: usize, t: f64) -> Complex64 {
    let a: f64 = if k == 0 || 2 * k == n { 1.0 } else { 2.0 };
    let s: Complex64 = (0..n)
        .map(|j| {
            let theta = 2.0 * std::f64::consts::PI * j as f64 / n as f64;
            Complex64::new(0.0, -2.0 * t * theta.cos()).exp() * (theta * k as f64).cos()
        })
        .sum();
    s * a.sqrt() / n as f64
}

#[test]
fn cyclic_cayley_graphs_match_closed_form() {
    for n in [5u32, 6, 7, 8, 9] {
        let group = GroupDescriptor::Cyclic(n);
        let table = group.character_table().unwrap();
        let strata = group.strata(&table, None).unwrap();
        let g = cayley_graph(group, &strata).unwrap();
        let partition = DistancePartition::from_levels(g.class_of.clone().unwrap());
        let exact = stratum_series(&g, &partition, &grid()).unwrap();
        let engine = dispatch(&WalkRequest::new(SchemeSpec::FromGroup { group, class: None }, grid())).unwrap();
        assert!(engine.max_difference(&exact).unwrap() < 1e-9, "Z_{n}");
        for (t, row) in exact.times.iter().zip(&exact.amplitudes) {
            for (p, z) in row.iter().enumerate() {
                // the class part p holds the elements at distance p on the cycle
                assert!(
                    (z - cycle_closed_form(n as usize, p, *t)).norm() < 1e-9,
                    "Z_{n} part {p}"
                );
            }
        }
    }
}

#[test]
fn symmetric_group_engines_match_the_cayley_oracle() {
    for n in 3..=5u32 {
        let spec = SchemeSpec::FromGroup {
            group: GroupDescriptor::Symmetric(n),
            class: None,
        };
        let g = build_graph(&spec).unwrap();
        let partition = DistancePartition::from_levels(g.class_of.clone().unwrap());
        let exact = stratum_series(&g, &partition, &grid()).unwrap();
        for engine in [Engine::Character, Engine::Eigen] {
            let s = dispatch(&WalkRequest::new(spec.clone(), grid()).engine(engine)).unwrap();
            assert!(s.max_difference(&exact).unwrap() < 1e-8, "S_{n} {engine}");
        }
    }
}

#[test]
fn root_amplitude_of_exact_walk_is_the_first_stratum() {
    let g = VertexGraph::kneser(5, 2).unwrap();
    let vertices = exact_walk(&g, &grid()).unwrap();
    let strata = stratum_series(&g, &bfs_strata(&g), &grid()).unwrap();
    for (v, s) in vertices.iter().zip(&strata.amplitudes) {
        assert!((v[g.root] - s[0]).norm() < 1e-14);
    }
}
