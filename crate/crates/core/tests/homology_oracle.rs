mod common;

use chordhom::chords::realize_sphere;
use chordhom::complexes::{independence_complex, join, reference, Group, HomologyResult, SimplicialComplex};
use chordhom::fixtures;
use chordhom::graphs::Graph;
use common::{naive_complex_homology, naive_independence_homology, rational_rank, smith_diagonal};
use num_bigint::BigInt;
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let mut g = Graph::new(n);
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        g.add_edge(u, v);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn arb_complex() -> impl Strategy<Value = SimplicialComplex> {
    proptest::collection::vec(proptest::collection::btree_set(0u32..7, 1..5), 0..7)
        .prop_map(|fs| SimplicialComplex::from_facets(fs.into_iter().map(|s| s.into_iter().collect::<Vec<_>>())))
}

#[test]
fn oracle_self_checks() {
    assert_eq!(naive_complex_homology(&[]), HomologyResult::sphere(-1));
    assert_eq!(naive_complex_homology(&[vec![0, 1], vec![1, 2], vec![0, 2]]), HomologyResult::sphere(1));
    assert_eq!(rational_rank(vec![vec![2.into(), 4.into()], vec![1.into(), 2.into()]]), 1);
    let d = smith_diagonal(vec![vec![2.into(), 0.into()], vec![0.into(), 3.into()]]);
    assert_eq!(d.iter().product::<BigInt>(), BigInt::from(6));
}

#[test]
fn projective_plane_torsion() {
    let k = fixtures::rp2();
    let expect = HomologyResult::from_groups([(1, Group::new(0, [2]))]);
    assert_eq!(k.homology(), expect);
    assert_eq!(naive_complex_homology(k.facets()), expect);
    let co = k.cohomology();
    assert_eq!(co, HomologyResult::from_groups([(2, Group::new(0, [2]))]));
}

#[test]
fn sphere_joins_follow_dimension_formula() {
    for a in -1..=2 {
        for b in -1..=2 {
            let ka = independence_complex(&realize_sphere(a).intersection_graph());
            let kb = independence_complex(&realize_sphere(b).intersection_graph());
            assert_eq!(join(&ka, &kb).homology(), HomologyResult::sphere(a + b + 1), "S^{a} * S^{b}");
        }
    }
}

#[test]
fn join_of_two_point_sets_is_a_square() {
    let s0 = SimplicialComplex::from_facets([vec![0], vec![1]]);
    let sq = join(&s0, &s0);
    assert_eq!(sq.facets().len(), 4);
    assert_eq!(sq.homology(), HomologyResult::sphere(1));
    assert_eq!(join(&SimplicialComplex::empty(), &sq), sq);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn facet_homology_matches_naive_oracle(g in arb_graph(9)) {
        let fast = independence_complex(&g).homology();
        prop_assert_eq!(&fast, &naive_independence_homology(&g));
        prop_assert_eq!(&fast, &reference::independence_homology(&g));
    }

    #[test]
    fn complex_homology_matches_naive_oracle(k in arb_complex()) {
        prop_assert_eq!(k.homology(), naive_complex_homology(k.facets()));
    }

    #[test]
    fn boundary_squares_to_zero(k in arb_complex()) {
        let c = k.chain_complex();
        for d in 1..=c.dimension() {
            let upper = c.boundary_dense(d);
            let lower = c.boundary_dense(d - 1);
            // boundary_dense(d)[i][j]: coefficient of (d-1)-face i in d-face j
            for i in 0..lower.len() {
                for j in 0..upper.first().map_or(0, Vec::len) {
                    let s: i64 = (0..upper.len()).map(|m| lower[i][m] * upper[m][j]).sum();
                    prop_assert_eq!(s, 0);
                }
            }
        }
    }

    #[test]
    fn euler_characteristic_matches_face_counts(k in arb_complex()) {
        let chi: i64 = k.f_vector().iter().map(|(&d, &f)| if d.rem_euclid(2) == 0 { f as i64 } else { -(f as i64) }).sum();
        prop_assert_eq!(k.homology().euler_characteristic(), chi);
    }

    #[test]
    fn degrees_within_dimension(k in arb_complex()) {
        let h = k.homology();
        for d in h.degrees() {
            prop_assert!(d >= -1 && d <= k.dimension());
        }
    }

    #[test]
    fn cohomology_keeps_free_ranks(k in arb_complex()) {
        let h = k.homology();
        let co = h.cohomology();
        for d in -1..=k.dimension() + 1 {
            prop_assert_eq!(h.rank(d), co.rank(d));
        }
    }

    #[test]
    fn join_homology_is_kunneth(a in arb_graph(5), b in arb_graph(5)) {
        let ka = independence_complex(&a);
        let kb = independence_complex(&b);
        let direct = join(&ka, &kb).homology();
        prop_assert_eq!(&direct, &ka.homology().join(&kb.homology()));
        prop_assert_eq!(&direct, &independence_complex(&a.disjoint_union(&b)).homology());
    }
}
