mod common;

use std::collections::{BTreeSet, HashMap};

use chordhom::chordio::{emit_dow, parse_dow};
use chordhom::chords::{connected_sum, interlace, is_linear, realize_sphere, ChordDiagram};
use chordhom::complexes::{independence_complex, HomologyResult};
use chordhom::graphs::Graph;
use chordhom::search::enumerate_diagrams;
use common::naive_independence_homology;
use proptest::prelude::*;

/// Random matching on `2n` points by repeatedly pairing the first free point.
fn arb_diagram(max_n: usize) -> impl Strategy<Value = ChordDiagram> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<prop::sample::Index>(), n).prop_map(move |picks| {
            let mut free: Vec<u32> = (0..2 * n as u32).collect();
            let mut pairs = Vec::new();
            for p in picks {
                let a = free.remove(0);
                let b = free.remove(p.index(free.len()));
                pairs.push((a, b));
            }
            ChordDiagram::from_pairs(&pairs).unwrap()
        })
    })
}

fn arb_linear(max_n: usize) -> impl Strategy<Value = ChordDiagram> {
    arb_diagram(max_n).prop_filter("linear", |d| is_linear(d).is_some())
}

/// Brute-force crossing test: exactly one endpoint of `b` strictly inside `a`.
fn graph_by_brute_force(d: &ChordDiagram) -> Graph {
    let cs = d.chords();
    let mut g = Graph::new(cs.len());
    for i in 0..cs.len() {
        for j in 0..cs.len() {
            let (a1, a2) = cs[i];
            let (b1, b2) = cs[j];
            let inside = |x: u32| a1 < x && x < a2;
            if i != j && inside(b1) != inside(b2) {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// Partner arrays of every rotation and reflection of `d`.
fn orbit(d: &ChordDiagram) -> BTreeSet<Vec<usize>> {
    let m = d.point_count();
    let mut out = BTreeSet::new();
    for flip in [false, true] {
        for k in 0..m.max(1) {
            let f = |p: usize| if flip { (2 * m - p + k) % m } else { (p + k) % m };
            let mut partner = vec![0; m];
            for p in 0..m {
                partner[f(p)] = f(d.partner(p));
            }
            out.insert(partner);
        }
    }
    out
}

#[test]
fn canonical_form_separates_orbits_exhaustively() {
    for n in 0..=5 {
        let all: Vec<ChordDiagram> = enumerate_diagrams(n, false).collect();
        let mut orbit_of: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut orbits = 0;
        for d in &all {
            let me: Vec<usize> = (0..d.point_count()).map(|p| d.partner(p)).collect();
            if !orbit_of.contains_key(&me) {
                for member in orbit(d) {
                    orbit_of.insert(member, orbits);
                }
                orbits += 1;
            }
        }
        let mut class_of_form = HashMap::new();
        for d in &all {
            let me: Vec<usize> = (0..d.point_count()).map(|p| d.partner(p)).collect();
            let o = orbit_of[&me];
            let prev = class_of_form.insert(d.canonical_form(), o);
            assert!(prev.is_none_or(|p| p == o), "one form for two orbits at n = {n}");
        }
        assert_eq!(class_of_form.len(), orbits, "n = {n}");
    }
}

#[test]
fn connected_sum_of_hexagons_gives_four_three_spheres() {
    let ca = chordhom::fixtures::ca();
    let d = connected_sum(&ca, 0, &ca, 5).unwrap();
    let h = independence_complex(&d.intersection_graph()).homology();
    assert_eq!(h, HomologyResult::from_groups([(3, chordhom::complexes::Group::free(4))]));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn dow_round_trip(d in arb_diagram(8)) {
        let w = emit_dow(&d);
        let back = parse_dow(&w).unwrap();
        prop_assert_eq!(&back, &d);
        prop_assert_eq!(emit_dow(&back), w);
    }

    #[test]
    fn intersection_graph_matches_brute_force(d in arb_diagram(8)) {
        prop_assert_eq!(d.intersection_graph().edges(), graph_by_brute_force(&d).edges());
    }

    #[test]
    fn connected_sum_graph_is_disjoint_union_for_all_gaps(a in arb_diagram(3), b in arb_diagram(3)) {
        let expect = a.intersection_graph().disjoint_union(&b.intersection_graph()).canonical();
        for g1 in 0..=a.point_count() {
            for g2 in 0..=b.point_count() {
                let s = connected_sum(&a, g1, &b, g2).unwrap();
                prop_assert_eq!(s.chord_count(), a.chord_count() + b.chord_count());
                prop_assert_eq!(s.intersection_graph().canonical(), expect.clone());
            }
        }
    }

    #[test]
    fn interlace_joins_graphs(a in arb_linear(4), b in arb_linear(4)) {
        let d = interlace(&a, &b).unwrap();
        prop_assert!(is_linear(&d).is_some());
        let joined = a.intersection_graph().join(&b.intersection_graph());
        prop_assert_eq!(d.intersection_graph().canonical(), joined.canonical());
        let ia = naive_independence_homology(&a.intersection_graph());
        let ib = naive_independence_homology(&b.intersection_graph());
        // I of a graph join is the disjoint union, whose reduced H̃₀ gains a
        // generator when both sides are nonempty
        let expect = match (a.chord_count(), b.chord_count()) {
            (0, _) => ib,
            (_, 0) => ia,
            _ => ia.direct_sum(&ib).direct_sum(&HomologyResult::sphere(0)),
        };
        prop_assert_eq!(naive_independence_homology(&d.intersection_graph()), expect);
    }

    #[test]
    fn canonical_form_is_dihedral_invariant(d in arb_diagram(7), k in 0usize..16) {
        let c = d.canonical_form();
        prop_assert_eq!(d.rotate(k).canonical_form(), c.clone());
        prop_assert_eq!(d.reflect().canonical_form(), c);
    }

    #[test]
    fn sphere_gadgets_give_matchings(dim in -1i32..6) {
        let d = realize_sphere(dim);
        let g = d.intersection_graph();
        prop_assert_eq!(g.vertex_count(), 2 * (dim + 1) as usize);
        prop_assert!(g.components().iter().all(|c| c.len() == 2));
        prop_assert_eq!(g.edge_count(), (dim + 1) as usize);
    }
}
