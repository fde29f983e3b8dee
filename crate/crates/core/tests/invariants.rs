use proptest::prelude::*;

use scheme_walk::group::{
    character_table_cyclic, character_table_dihedral, character_table_symmetric, SymmetrizedScheme,
};
use scheme_walk::scheme::{derive_stratum_sizes, eigenstructure_from_array, IntersectionArray, SchemeSpec};
use scheme_walk::spectral::{catalog, evaluate_polynomials, golub_welsch, jacobi_from_intersection};
use scheme_walk::walk::{coarsen, dispatch, Engine, WalkRequest};

/// Catalog families with parameters drawn from their admissible ranges.
fn family() -> impl Strategy<Value = (String, Vec<i64>)> {
    prop_oneof![
        (2i64..12).prop_map(|n| ("complete".to_string(), vec![n])),
        (3i64..16).prop_map(|n| ("cycle".to_string(), vec![n])),
        (1i64..5, 2i64..6).prop_map(|(d, n)| ("hamming".to_string(), vec![d, n])),
        (1i64..4, 0i64..4).prop_map(|(d, extra)| ("johnson".to_string(), vec![2 * d + extra, d])),
        Just(("petersen".to_string(), vec![])),
        Just(("foster".to_string(), vec![])),
    ]
}

fn array(name: &str, params: &[i64]) -> IntersectionArray {
    catalog(name, params).unwrap().array
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn quadrature_weights_are_a_probability((name, params) in family()) {
        let dist = golub_welsch(&jacobi_from_intersection(&array(&name, &params)).unwrap()).unwrap();
        prop_assert!(dist.weights.iter().all(|w| *w > 0.0));
        prop_assert!((dist.total_mass() - 1.0).abs() < 1e-12);
        prop_assert!(dist.atoms.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn moments_count_closed_walks((name, params) in family()) {
        let ia = array(&name, &params);
        let jc = jacobi_from_intersection(&ia).unwrap();
        let dist = golub_welsch(&jc).unwrap();
        let (diag, off) = jc.tridiagonal();
        let n = diag.len();
        // (0, 0) entry of T^m by repeated application to e_0
        let mut v = vec![0.0; n];
        v[0] = 1.0;
        for m in 0..=2 * ia.diameter() {
            let scale = dist.atoms.iter().fold(1.0f64, |s, x| s.max(x.abs())).powi(m as i32);
            prop_assert!((dist.moment(m as u32) - v[0]).abs() <= 1e-8 * scale.max(1.0), "m = {m}");
            let next: Vec<f64> = (0..n)
                .map(|i| {
                    let mut s = diag[i] * v[i];
                    if i > 0 { s += off[i - 1] * v[i - 1]; }
                    if i + 1 < n { s += off[i] * v[i + 1]; }
                    s
                })
                .collect();
            v = next;
        }
    }

    #[test]
    fn recurrence_polynomials_are_orthogonal((name, params) in family()) {
        let ia = array(&name, &params);
        let jc = jacobi_from_intersection(&ia).unwrap();
        let dist = golub_welsch(&jc).unwrap();
        let d = ia.diameter();
        let q: Vec<Vec<f64>> = dist.atoms.iter().map(|&x| evaluate_polynomials(&jc, x, d)).collect();
        let mut norm = 1.0;
        for j in 0..=d {
            if j > 0 { norm *= jc.omega[j - 1]; }
            for k in 0..=j {
                let s: f64 = dist.weights.iter().zip(&q).map(|(w, p)| w * p[j] * p[k]).sum();
                let want = if j == k { norm } else { 0.0 };
                prop_assert!((s - want).abs() < 1e-8 * norm.max(1.0), "j = {j}, k = {k}");
            }
        }
    }

    #[test]
    fn eigenstructure_identities((name, params) in family()) {
        let es = eigenstructure_from_array(&array(&name, &params)).unwrap();
        prop_assert!(es.check().passed(), "{:?}", es.check());
        prop_assert!(es.integer_multiplicities().is_ok());
    }

    #[test]
    fn unitarity_for_every_engine((name, params) in family(), t in 0.0f64..50.0) {
        let spec = SchemeSpec::Catalog { name, params };
        for engine in [Engine::Eigen, Engine::Character, Engine::Spectral] {
            if let Ok(s) = dispatch(&WalkRequest::new(spec.clone(), vec![t]).engine(engine)) {
                prop_assert!(s.unitarity_defect() < 1e-9, "{engine}");
            }
        }
    }

    #[test]
    fn vertex_rescaling_is_exact((name, params) in family(), t in 0.0f64..20.0) {
        let s = dispatch(&WalkRequest::new(SchemeSpec::Catalog { name, params }, vec![t])).unwrap();
        let v = s.to_vertex();
        for (k, (a, b)) in s.amplitudes[0].iter().zip(&v.amplitudes[0]).enumerate() {
            let size = s.strata_sizes.a[k] as f64;
            prop_assert!((a / size.sqrt() - b).norm() < 1e-12);
        }
        prop_assert!(v.unitarity_defect() < 1e-9);
    }

    #[test]
    fn coarsening_keeps_total_probability((name, params) in family(), t in 0.0f64..20.0, cut in 1usize..6) {
        let s = dispatch(&WalkRequest::new(SchemeSpec::Catalog { name, params }, vec![t])).unwrap();
        let k = s.strata();
        let cut = cut.min(k);
        let groups = if cut == k { vec![(0..k).collect::<Vec<_>>()] } else { vec![(0..cut).collect(), (cut..k).collect()] };
        let c = coarsen(&s, &groups).unwrap();
        prop_assert!(c.row_norms()[0] <= 1.0 + 1e-9);
        prop_assert_eq!(c.strata_sizes.n, s.strata_sizes.n);
    }

    #[test]
    fn stratum_sizes_sum_to_order((name, params) in family()) {
        let sizes = derive_stratum_sizes(&array(&name, &params)).unwrap();
        prop_assert_eq!(sizes.a.iter().sum::<u64>(), sizes.n);
        prop_assert_eq!(sizes.a[0], 1);
    }

    #[test]
    fn character_tables_are_orthogonal(kind in 0usize..3, n in 3u32..12) {
        let table = match kind {
            0 => character_table_cyclic(n).unwrap(),
            1 => character_table_dihedral(n).unwrap(),
            _ => character_table_symmetric(n.min(7)).unwrap(),
        };
        prop_assert!(table.check().passed(1e-10), "{:?}", table.check());
        let sym = SymmetrizedScheme::symmetrize(&table).unwrap();
        prop_assert!(sym.eigenstructure().check().passed());
    }

    #[test]
    fn dispatch_is_deterministic((name, params) in family(), t in 0.0f64..20.0) {
        let req = WalkRequest::new(SchemeSpec::Catalog { name, params }, vec![t, t / 2.0]);
        prop_assert_eq!(dispatch(&req).unwrap(), dispatch(&req).unwrap());
    }
}
