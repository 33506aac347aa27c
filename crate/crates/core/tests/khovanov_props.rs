use std::collections::HashMap;

use chordhom::chordio::{emit_pd, parse_pd};
use chordhom::complexes::independence_complex;
use chordhom::fixtures;
use chordhom::graphs::{is_bipartite, Graph};
use chordhom::khovanov::{
    a_state, circle_graphs, extreme_khovanov, jmin, pretzel_pd, state_complex, Gradings, LinkDiagram,
};
use proptest::prelude::*;

/// Circle count of a smoothing by union-find over crossing slots: slots on
/// the same arc are merged, and so are the slot pairs the smoothing joins.
fn smoothing_circles(d: &LinkDiagram, pairs: [(usize, usize); 2]) -> usize {
    let c = d.crossing_count();
    let mut parent: Vec<usize> = (0..4 * c).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    let unite = |p: &mut Vec<usize>, a: usize, b: usize| {
        let (ra, rb) = (find(p, a), find(p, b));
        p[ra] = rb;
    };
    let mut by_arc: HashMap<u32, Vec<usize>> = HashMap::new();
    for (x, t) in d.crossings().iter().enumerate() {
        for (s, a) in t.iter().enumerate() {
            by_arc.entry(*a).or_default().push(4 * x + s);
        }
        for (s, r) in pairs {
            unite(&mut parent, 4 * x + s, 4 * x + r);
        }
    }
    for ends in by_arc.values() {
        unite(&mut parent, ends[0], ends[1]);
    }
    (0..4 * c).filter(|&i| find(&mut parent, i) == i).count() + d.free_loops()
}

const A: [(usize, usize); 2] = [(0, 1), (2, 3)];
const B: [(usize, usize); 2] = [(1, 2), (3, 0)];

fn arb_twists() -> impl Strategy<Value = Vec<i32>> {
    proptest::collection::vec(prop_oneof![-4i32..=-1, 1i32..=4], 1..5)
}

#[test]
fn trefoil_circle_counts_against_oracle() {
    let d = fixtures::trefoil();
    assert_eq!(smoothing_circles(&d, A), 3);
    assert_eq!(smoothing_circles(&d, B), 2);
    assert_eq!(a_state(&d).unwrap().circle_count(), smoothing_circles(&d, A));
}

#[test]
fn pretzel_conventions_pinned() {
    let d = pretzel_pd(&[3, 4, 5, -5]);
    assert_eq!(smoothing_circles(&d, A), 7);
    assert_eq!(jmin(&d).unwrap(), Gradings::new(12, 5, 7));
    assert!(a_state(&d).unwrap().is_adequate());
}

#[test]
fn negative_pretzel_against_oracle() {
    let d = pretzel_pd(&[-1, -1, -1]);
    assert_eq!(a_state(&d).unwrap().circle_count(), smoothing_circles(&d, A));
}

#[test]
fn two_diagrams_of_the_knot_agree() {
    let d = extreme_khovanov(&fixtures::pretzel_3455()).unwrap();
    let circles = fixtures::dprime_circles();
    let e = chordhom::khovanov::extreme_from_circles(&circles, fixtures::dprime_gradings());
    assert_eq!(d.gradings.jmin, e.gradings.jmin);
    assert_eq!(d.groups, e.groups);
}

#[test]
fn two_arc_over_only_component_is_reported() {
    // one component passes over at both crossings and has only two arcs
    let d = pretzel_pd(&[1, -1]);
    assert!(matches!(d.orientation(), Err(chordhom::khovanov::KhovanovError::OrientationAmbiguous { component: 1 })));
    assert!(pretzel_pd(&[2, -2]).orientation().is_ok());
}

#[test]
fn pd_emit_round_trip() {
    let d = fixtures::pretzel_3455();
    assert_eq!(parse_pd(&emit_pd(&d)).unwrap(), d);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn a_state_matches_oracle(t in arb_twists()) {
        let d = pretzel_pd(&t);
        prop_assert_eq!(a_state(&d).unwrap().circle_count(), smoothing_circles(&d, A));
    }

    #[test]
    fn circle_graphs_are_bipartite(t in arb_twists()) {
        let s = a_state(&pretzel_pd(&t)).unwrap();
        let gs = circle_graphs(&s).unwrap();
        let whole = gs.iter().fold(Graph::new(0), |acc, (_, g)| acc.disjoint_union(g));
        prop_assert!(is_bipartite(&whole).is_some());
        for (c, g) in &gs {
            prop_assert_eq!(c.chord_count(), g.vertex_count());
        }
    }

    #[test]
    fn mirror_swaps_signs(t in arb_twists()) {
        let d = pretzel_pd(&t);
        prop_assume!(d.orientation().is_ok());
        let (p, n) = d.crossing_signs().unwrap();
        prop_assert_eq!(d.mirror().unwrap().crossing_signs().unwrap(), (n, p));
        // mirroring exchanges the two smoothings
        prop_assert_eq!(smoothing_circles(&d.mirror().unwrap(), A), smoothing_circles(&d, B));
    }

    #[test]
    fn distant_unknot_shifts_jmin(t in arb_twists()) {
        let d = pretzel_pd(&t);
        prop_assume!(d.orientation().is_ok());
        let a = extreme_khovanov(&d).unwrap();
        let b = extreme_khovanov(&d.with_distant_unknot()).unwrap();
        prop_assert_eq!(b.gradings.k, a.gradings.k + 1);
        prop_assert_eq!(b.gradings.jmin, a.gradings.jmin - 1);
        prop_assert_eq!(b.groups, a.groups);
    }

    #[test]
    fn join_over_circles_equals_whole_graph(t in arb_twists()) {
        let s = a_state(&pretzel_pd(&t)).unwrap();
        let gs: Vec<Graph> = circle_graphs(&s).unwrap().into_iter().map(|(_, g)| g).collect();
        let whole = gs.iter().fold(Graph::new(0), |acc, g| acc.disjoint_union(g));
        let joined = state_complex(&gs).homology();
        prop_assert_eq!(&joined, &independence_complex(&whole).homology());
        let co = joined.cohomology();
        for d in -1..=8 {
            prop_assert_eq!(joined.rank(d), co.rank(d));
        }
    }

    #[test]
    fn adequate_diagrams_have_one_group_at_minus_n(t in arb_twists()) {
        let d = pretzel_pd(&t);
        let s = a_state(&d).unwrap();
        prop_assume!(s.is_adequate() && d.orientation().is_ok());
        let kh = extreme_khovanov(&d).unwrap();
        let n = kh.gradings.n as i64;
        prop_assert_eq!(kh.groups.len(), 1);
        prop_assert_eq!(kh.groups.get(&-n).map(|g| g.rank), Some(1));
    }
}
