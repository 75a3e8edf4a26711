//! Randomized invariants across the pipeline.

use proptest::prelude::*;

use pcube::brute::oracle_labeling;
use pcube::complex::{build_from_crossing_structure, build_from_lines};
use pcube::duals::{affine_dual, spherical_dual};
use pcube::partialcube::{are_isomorphic, is_partial_cube, verify_labeling};
use pcube::tiling::{glue, Transform, ZonotopalTiling};
use pcube::zonohedron::zonohedron_skeleton;
use pcube::{CrossingStructure, HomCoord, LabeledGraph};

/// Distinct lines with small coefficients; `affine` excludes the line at
/// infinity.
fn lines(min: usize, max: usize, affine: bool) -> impl Strategy<Value = Vec<HomCoord>> {
    proptest::collection::vec((-4i64..=4, -4i64..=4, -4i64..=4), min..=max).prop_filter_map("too few distinct lines", move |raw| {
        let mut out: Vec<HomCoord> = Vec::new();
        for (a, b, c) in raw {
            if (a, b) == (0, 0) && (affine || c == 0) {
                continue;
            }
            let h = HomCoord::from_i64(a, b, c).unwrap();
            if out.iter().all(|l| !l.projectively_equal(&h)) {
                out.push(h);
            }
        }
        (out.len() >= min).then_some(out)
    })
}

fn solid(ls: &[HomCoord]) -> bool {
    build_from_lines(ls).is_ok_and(|c| !c.is_pencil())
}

/// A connected graph: a random spanning tree plus random extra edges.
fn connected_graph() -> impl Strategy<Value = LabeledGraph> {
    (3usize..=10)
        .prop_flat_map(|n| {
            let parents: Vec<_> = (1..n).map(|v| 0..v).collect();
            (Just(n), parents, proptest::collection::vec((0..n, 0..n), 0..n))
        })
        .prop_map(|(n, parents, extra)| {
            let mut edges: Vec<(usize, usize)> = parents.into_iter().enumerate().map(|(i, p)| (p, i + 1)).collect();
            for (a, b) in extra {
                let e = (a.min(b), a.max(b));
                if a != b && !edges.iter().any(|&(x, y)| (x.min(y), x.max(y)) == e) {
                    edges.push(e);
                }
            }
            LabeledGraph::new(n, edges).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn affine_labels_are_isometric(ls in lines(1, 6, true)) {
        let g = affine_dual(&ls).unwrap();
        prop_assert!(verify_labeling(&g, g.labels.as_ref().unwrap()).unwrap());
        prop_assert_eq!(is_partial_cube(&g).unwrap().class_count(), Some(ls.len()));
    }

    #[test]
    fn crossing_structure_round_trip(ls in lines(3, 6, false)) {
        let c = build_from_lines(&ls).unwrap();
        let cs = CrossingStructure::from_complex(&c);
        let json = serde_json::to_string(&cs).unwrap();
        let back: CrossingStructure = serde_json::from_str(&json).unwrap();
        let d = build_from_crossing_structure(&back).unwrap();
        prop_assert!(are_isomorphic(&spherical_dual(&c), &spherical_dual(&d), 500).unwrap());
    }

    #[test]
    fn reflected_glue_is_the_closure_dual(ls in lines(1, 5, true)) {
        let t = ZonotopalTiling::from_affine_arrangement(&ls).unwrap();
        let g = glue(&t, &t, Transform::Reflect).unwrap().graph;
        let mut closed = ls.clone();
        closed.push(HomCoord::from_i64(0, 0, 1).unwrap());
        let c = spherical_dual(&build_from_lines(&closed).unwrap());
        prop_assert!(are_isomorphic(&g, &c, 500).unwrap());
    }

    #[test]
    fn zonohedron_ignores_generator_scale(ls in lines(3, 6, false), k in proptest::collection::vec(1i64..=5, 6)) {
        prop_assume!(solid(&ls));
        let scaled: Vec<HomCoord> = ls
            .iter()
            .zip(&k)
            .map(|(l, &s)| HomCoord::new(l.x() * s, l.y() * s, l.z() * s).unwrap())
            .collect();
        let a = zonohedron_skeleton(&ls).unwrap();
        let b = zonohedron_skeleton(&scaled).unwrap();
        prop_assert!(are_isomorphic(&a.graph, &b.graph, 500).unwrap());
        prop_assert!(are_isomorphic(&a.graph, &spherical_dual(&build_from_lines(&ls).unwrap()), 500).unwrap());
    }

    #[test]
    fn recognizer_agrees_with_oracle(g in connected_graph()) {
        let fast = is_partial_cube(&g).unwrap();
        let slow = oracle_labeling(&g).unwrap();
        prop_assert_eq!(fast.is_partial_cube(), slow.is_some());
        if let Some(ls) = fast.labels() {
            prop_assert!(verify_labeling(&g, ls).unwrap());
        }
    }

    #[test]
    fn recognition_is_invariant_under_relabeling(g in connected_graph(), seed in any::<u64>()) {
        let n = g.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = g.permuted(&perm);
        prop_assert!(are_isomorphic(&g, &h, 100).unwrap());
        prop_assert_eq!(is_partial_cube(&g).unwrap().class_count(), is_partial_cube(&h).unwrap().class_count());
    }
}
