use std::collections::HashMap;

use super::KhovanovError;

/// A half-edge: slot `1` of crossing `0`.
pub(crate) type Slot = (usize, usize);

/// A link projection in PD notation. Slots of each tuple run counterclockwise
/// from the incoming under-strand; strands pass straight through (slot `s` to
/// `s + 2`). `free_loops` counts extra crossingless unknotted components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkDiagram {
    crossings: Vec<[u32; 4]>,
    free_loops: usize,
}

/// One traversal direction per component, as the sequence of slots entered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    /// `entered[x][s]` is true when the oriented strand enters crossing `x` at slot `s`.
    pub entered: Vec<[bool; 4]>,
    pub components: usize,
}

impl LinkDiagram {
    pub fn new(crossings: Vec<[u32; 4]>, free_loops: usize) -> Self {
        LinkDiagram { crossings, free_loops }
    }

    pub fn unknot() -> Self {
        LinkDiagram::new(Vec::new(), 1)
    }

    pub fn crossings(&self) -> &[[u32; 4]] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn arc_count(&self) -> usize {
        self.crossings.len() * 2
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    /// The same diagram with one more distant crossingless unknot.
    pub fn with_distant_unknot(&self) -> Self {
        LinkDiagram::new(self.crossings.clone(), self.free_loops + 1)
    }

    /// For every slot, the slot at the other end of its arc.
    pub(crate) fn arc_partner(&self) -> Result<Vec<[Slot; 4]>, KhovanovError> {
        let mut seen: HashMap<u32, Vec<Slot>> = HashMap::new();
        for (x, t) in self.crossings.iter().enumerate() {
            for (s, &a) in t.iter().enumerate() {
                seen.entry(a).or_default().push((x, s));
            }
        }
        let mut partner = vec![[(0, 0); 4]; self.crossings.len()];
        for (a, ends) in seen {
            let [p, q] = ends[..] else {
                return Err(KhovanovError::InvalidDiagram(format!("arc {a} occurs {} times", ends.len())));
            };
            partner[p.0][p.1] = q;
            partner[q.0][q.1] = p;
        }
        Ok(partner)
    }

    /// Checks that the arcs pair up and that the projection is planar: each
    /// connected piece of the 4-valent graph must have `V - E + F = 2`.
    pub fn validate(&self) -> Result<(), KhovanovError> {
        let partner = self.arc_partner()?;
        let c = self.crossings.len();
        if c == 0 {
            return Ok(());
        }
        // faces: orbits of "cross the arc, then turn to the next slot counterclockwise"
        let mut seen = vec![[false; 4]; c];
        let mut faces = 0;
        for x in 0..c {
            for s in 0..4 {
                if seen[x][s] {
                    continue;
                }
                faces += 1;
                let (mut y, mut t) = (x, s);
                while !seen[y][t] {
                    seen[y][t] = true;
                    (y, t) = partner[y][(t + 1) % 4];
                }
            }
        }
        let pieces = self.projection_pieces(&partner);
        if faces + c != c * 2 + 2 * pieces {
            return Err(KhovanovError::InvalidDiagram(format!(
                "not planar: {c} crossings, {faces} faces, {pieces} connected pieces"
            )));
        }
        Ok(())
    }

    fn projection_pieces(&self, partner: &[[Slot; 4]]) -> usize {
        let c = self.crossings.len();
        let mut parent: Vec<usize> = (0..c).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for (x, ends) in partner.iter().enumerate() {
            for &(y, _) in ends {
                let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                parent[a] = b;
            }
        }
        (0..c).filter(|&x| find(&mut parent, x) == x).count()
    }

    /// Orients every component. A component that passes under somewhere is
    /// oriented so that it enters at slot 0; one that only passes over takes
    /// the direction in which its arc labels increase with one wraparound.
    pub fn orientation(&self) -> Result<Orientation, KhovanovError> {
        self.validate()?;
        let partner = self.arc_partner()?;
        let c = self.crossings.len();
        let mut entered = vec![[false; 4]; c];
        let mut visited = vec![[false; 4]; c];
        let mut components = 0;
        for x0 in 0..c {
            for s0 in 0..4 {
                if visited[x0][s0] {
                    continue;
                }
                // walk entering at (x0, s0); record (crossing, slot entered, arc label)
                let mut walk: Vec<(usize, usize, u32)> = Vec::new();
                let (mut x, mut s) = (x0, s0);
                loop {
                    visited[x][s] = true;
                    visited[x][(s + 2) % 4] = true;
                    walk.push((x, s, self.crossings[x][s]));
                    (x, s) = partner[x][(s + 2) % 4];
                    if (x, s) == (x0, s0) {
                        break;
                    }
                }
                let forward = walk.iter().any(|&(_, s, _)| s == 0);
                let backward = walk.iter().any(|&(_, s, _)| s == 2);
                let keep = match (forward, backward) {
                    (true, true) => {
                        return Err(KhovanovError::InvalidDiagram(format!(
                            "component {components} runs against an under-strand"
                        )))
                    }
                    (true, false) => true,
                    (false, true) => false,
                    (false, false) => {
                        let labels: Vec<u32> = walk.iter().map(|w| w.2).collect();
                        let up = cyclic_descents(labels.iter().copied()) <= 1;
                        let down = cyclic_descents(labels.iter().rev().copied()) <= 1;
                        match (up, down) {
                            (true, false) => true,
                            (false, true) => false,
                            _ => return Err(KhovanovError::OrientationAmbiguous { component: components }),
                        }
                    }
                };
                for &(x, s, _) in &walk {
                    let s = if keep { s } else { (s + 2) % 4 };
                    entered[x][s] = true;
                }
                components += 1;
            }
        }
        Ok(Orientation { entered, components: components + self.free_loops })
    }

    /// Crossing signs: `+1` when the over-strand runs from slot 3 to slot 1.
    pub fn signs(&self) -> Result<Vec<i8>, KhovanovError> {
        let o = self.orientation()?;
        Ok(o.entered.iter().map(|e| if e[3] { 1 } else { -1 }).collect())
    }

    /// Counts of positive and negative crossings.
    pub fn crossing_signs(&self) -> Result<(usize, usize), KhovanovError> {
        let s = self.signs()?;
        let p = s.iter().filter(|&&x| x > 0).count();
        Ok((p, s.len() - p))
    }

    /// Mirror image: every crossing switched, orientation kept.
    pub fn mirror(&self) -> Result<LinkDiagram, KhovanovError> {
        let o = self.orientation()?;
        let crossings = self
            .crossings
            .iter()
            .zip(&o.entered)
            .map(|(&[a, b, c, d], e)| if e[3] { [d, a, b, c] } else { [b, c, d, a] })
            .collect();
        Ok(LinkDiagram::new(crossings, self.free_loops))
    }
}

/// Number of positions `i` with `seq[i] > seq[i + 1]`, cyclically.
fn cyclic_descents(seq: impl Iterator<Item = u32> + Clone) -> usize {
    let v: Vec<u32> = seq.collect();
    (0..v.len()).filter(|&i| v[i] >= v[(i + 1) % v.len()] && v.len() > 1).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chordio::parse_pd;

    const TREFOIL: &str = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";

    #[test]
    fn trefoil_signs_and_mirror() {
        let d = parse_pd(TREFOIL).unwrap();
        assert_eq!(d.crossing_signs().unwrap(), (0, 3));
        let m = d.mirror().unwrap();
        assert_eq!(m.crossing_signs().unwrap(), (3, 0));
        assert_eq!(m.mirror().unwrap(), d);
    }

    #[test]
    fn kinks() {
        let k = parse_pd("X(1,1,2,2)").unwrap();
        assert_eq!(k.crossing_signs().unwrap(), (1, 0));
        assert_eq!(k.mirror().unwrap().crossing_signs().unwrap(), (0, 1));
        assert_eq!(k.orientation().unwrap().components, 1);
    }

    #[test]
    fn rejects_non_planar() {
        // two crossings whose arcs are glued like a figure on a torus
        let d = LinkDiagram::new(vec![[1, 2, 3, 4], [3, 1, 4, 2]], 0);
        assert!(matches!(d.validate(), Err(KhovanovError::InvalidDiagram(_))));
    }

    #[test]
    fn over_only_component_with_two_arcs_is_ambiguous() {
        // arcs 1 and 2 only pass over, and two labels read the same both ways
        let d = parse_pd("X(4,1,3,2) X(3,1,4,2)").unwrap();
        assert_eq!(d.orientation(), Err(KhovanovError::OrientationAmbiguous { component: 1 }));
    }

    #[test]
    fn hopf_link() {
        let d = parse_pd("X(4,1,3,2) X(2,3,1,4)").unwrap();
        assert_eq!(d.orientation().unwrap().components, 2);
        let (p, n) = d.crossing_signs().unwrap();
        assert!(p == 2 || n == 2);
    }

    #[test]
    fn descents() {
        assert_eq!(cyclic_descents([3, 4, 1, 2].into_iter()), 1);
        assert_eq!(cyclic_descents([1, 3, 2, 4].into_iter()), 2);
    }
}
