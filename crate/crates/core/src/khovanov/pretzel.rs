use super::LinkDiagram;

// Leg positions of a crossing drawn as an X, counterclockwise.
const SE: usize = 0;
const NE: usize = 1;
const NW: usize = 2;
const SW: usize = 3;

/// Standard pretzel diagram: twist regions side by side, region `i` a
/// vertical column of `|t_i|` crossings. In a region with `t_i > 0` the
/// SW–NE strand passes over, otherwise the SE–NW strand does. Neighbouring
/// regions are joined at the top and bottom, and the last region is joined to
/// the first by arcs passing around the outside.
///
/// Arcs are numbered consecutively along each component.
pub fn pretzel_pd(twists: &[i32]) -> LinkDiagram {
    assert!(!twists.is_empty() && twists.iter().all(|&t| t != 0), "twists must be nonzero");
    let mut first = Vec::with_capacity(twists.len());
    let mut over_ne = Vec::new();
    for &t in twists {
        first.push(over_ne.len());
        over_ne.extend(std::iter::repeat_n(t > 0, t.unsigned_abs() as usize));
    }
    let c = over_ne.len();
    let mut link = vec![[(usize::MAX, usize::MAX); 4]; c];
    let mut join = |a: (usize, usize), b: (usize, usize)| {
        link[a.0][a.1] = b;
        link[b.0][b.1] = a;
    };
    let m = twists.len();
    for (i, &t) in twists.iter().enumerate() {
        let (top, len) = (first[i], t.unsigned_abs() as usize);
        for r in top..top + len - 1 {
            join((r, SW), (r + 1, NW));
            join((r, SE), (r + 1, NE));
        }
        let bottom = top + len - 1;
        let j = (i + 1) % m;
        let (next_top, next_bottom) = (first[j], first[j] + twists[j].unsigned_abs() as usize - 1);
        join((top, NE), (next_top, NW));
        join((bottom, SE), (next_bottom, SW));
    }

    // orient by walking straight through, numbering arcs as they are left
    let mut label = vec![[0u32; 4]; c];
    let mut entered = vec![[false; 4]; c];
    let mut next = 1;
    for x0 in 0..c {
        for s0 in [NW, NE] {
            if label[x0][s0] != 0 {
                continue;
            }
            let (mut x, mut s) = (x0, s0);
            loop {
                entered[x][s] = true;
                let out = (s + 2) % 4;
                let (y, t) = link[x][out];
                label[x][out] = next;
                label[y][t] = next;
                next += 1;
                (x, s) = (y, t);
                if (x, s) == (x0, s0) {
                    break;
                }
            }
        }
    }

    let crossings = (0..c)
        .map(|x| {
            let under = if over_ne[x] { [SE, NW] } else { [SW, NE] };
            let start = if entered[x][under[0]] { under[0] } else { under[1] };
            std::array::from_fn(|k| label[x][(start + k) % 4])
        })
        .collect();
    LinkDiagram::new(crossings, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::khovanov::a_state;

    #[test]
    fn single_crossing() {
        let d = pretzel_pd(&[1]);
        assert_eq!(d.crossing_count(), 1);
        assert_eq!(d.orientation().unwrap().components, 1);
        assert_eq!(a_state(&d).unwrap().circle_count(), 1);
    }

    #[test]
    fn every_arc_twice() {
        let d = pretzel_pd(&[3, 4, 5, -5]);
        assert_eq!(d.crossing_count(), 17);
        let mut labels: Vec<u32> = d.crossings().iter().flatten().copied().collect();
        labels.sort();
        let expect: Vec<u32> = (1..=34).flat_map(|a| [a, a]).collect();
        assert_eq!(labels, expect);
        d.validate().unwrap();
    }

    #[test]
    fn component_counts() {
        assert_eq!(pretzel_pd(&[3, 4, 5, -5]).orientation().unwrap().components, 1);
        assert_eq!(pretzel_pd(&[2, 2]).orientation().unwrap().components, 2);
        assert_eq!(pretzel_pd(&[1, 1]).orientation().unwrap().components, 2);
        assert_eq!(pretzel_pd(&[-1, -1, -1]).orientation().unwrap().components, 1);
    }

    #[test]
    fn negative_region_is_horizontal() {
        let s = a_state(&pretzel_pd(&[-3])).unwrap();
        // top and bottom caps each close up through the outer arcs
        assert_eq!(s.circle_count(), 4);
    }
}
