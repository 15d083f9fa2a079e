use super::Triangle;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FanShape {
    /// Closed cycle: the vertex is interior.
    Cycle,
    /// Open chain: the vertex lies on the perimeter.
    Chain,
    /// Not a single chain or cycle (bowtie, branching edge, isolated vertex).
    Broken,
}

/// One triangle of a fan together with the roles of its corners.
///
/// `odd_slot` is the corner shared with the preceding triangle of the walk and
/// `even_slot` the corner shared with the following one. At the open ends of a
/// chain the missing neighbour is replaced by the triangle's own orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FanEntry {
    pub triangle: usize,
    pub slot: usize,
    pub odd_slot: usize,
    pub even_slot: usize,
}

/// Triangles around a vertex, walked clockwise for counterclockwise input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fan {
    pub shape: FanShape,
    pub entries: Vec<FanEntry>,
}

struct Incident {
    triangle: usize,
    slot: usize,
    next: usize, // vertex following v in corner order
    prev: usize, // vertex preceding v in corner order
}

pub(super) fn build_fan(v: usize, triangles: &[Triangle]) -> Fan {
    let inc: Vec<Incident> = triangles
        .iter()
        .filter_map(|t| {
            t.slot_of(v).map(|k| Incident {
                triangle: t.index,
                slot: k,
                next: t.corners[(k + 1) % 3],
                prev: t.corners[(k + 2) % 3],
            })
        })
        .collect();
    if inc.is_empty() {
        return Fan { shape: FanShape::Broken, entries: Vec::new() };
    }

    // adjacency: incident triangles sharing a second vertex with each other
    let n = inc.len();
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for i in 0..n {
        for j in i + 1..n {
            for w in [inc[i].next, inc[i].prev] {
                if w == inc[j].next || w == inc[j].prev {
                    adj[i].push((j, w));
                    adj[j].push((i, w));
                }
            }
        }
    }

    let broken =
        Fan { shape: FanShape::Broken, entries: (0..n).map(|i| entry(&inc[i], inc[i].prev, inc[i].next)).collect() };
    if adj.iter().any(|a| a.len() > 2) {
        return broken;
    }
    let ends: Vec<usize> = (0..n).filter(|&i| adj[i].len() < 2).collect();
    let shape = match ends.len() {
        0 => FanShape::Cycle,
        1 | 2 => FanShape::Chain,
        _ => return broken,
    };

    // the clockwise successor of t is across the edge (v, t.next)
    let start = match shape {
        FanShape::Cycle => 0,
        _ => {
            let e = ends[0];
            let forward = adj[e].first().is_none_or(|&(_, w)| w == inc[e].next);
            if forward || ends.len() == 1 {
                e
            } else {
                ends[1]
            }
        }
    };
    let mut order = vec![start];
    let mut shared = Vec::new();
    let mut prev_idx = usize::MAX;
    let mut cur = start;
    loop {
        let candidates: Vec<(usize, usize)> = adj[cur].iter().copied().filter(|&(j, _)| j != prev_idx).collect();
        let step = if order.len() == 1 {
            // first step fixes the direction
            candidates.iter().copied().find(|&(_, w)| w == inc[cur].next).or_else(|| candidates.first().copied())
        } else {
            candidates.first().copied()
        };
        let Some((nxt, w)) = step else { break };
        if nxt == start {
            shared.push(w);
            break;
        }
        if order.contains(&nxt) {
            return broken;
        }
        shared.push(w);
        order.push(nxt);
        prev_idx = cur;
        cur = nxt;
    }
    if order.len() != n || (shape == FanShape::Cycle && shared.len() != n) {
        return broken;
    }

    let m = order.len();
    let entries = (0..m)
        .map(|i| {
            let it = &inc[order[i]];
            let (incoming, outgoing) = match shape {
                FanShape::Cycle => (shared[(i + m - 1) % m], shared[i]),
                _ => {
                    let known_in = (i > 0).then(|| shared[i - 1]);
                    let known_out = (i + 1 < m).then(|| shared[i]);
                    match (known_in, known_out) {
                        (Some(a), Some(b)) => (a, b),
                        (Some(a), None) => (a, other(it, a)),
                        (None, Some(b)) => (other(it, b), b),
                        (None, None) => (it.prev, it.next),
                    }
                }
            };
            entry(it, incoming, outgoing)
        })
        .collect();
    Fan { shape, entries }
}

/// The non-`v` corner of `it` other than `w`.
fn other(it: &Incident, w: usize) -> usize {
    if w == it.next {
        it.prev
    } else {
        it.next
    }
}

fn entry(it: &Incident, incoming: usize, outgoing: usize) -> FanEntry {
    let slot_of = |w: usize| {
        if w == it.next {
            (it.slot + 1) % 3
        } else {
            debug_assert_eq!(w, it.prev);
            (it.slot + 2) % 3
        }
    };
    FanEntry { triangle: it.triangle, slot: it.slot, odd_slot: slot_of(incoming), even_slot: slot_of(outgoing) }
}

#[cfg(test)]
mod tests {
    use super::super::Figure;
    use super::*;

    #[test]
    fn incenter_fan_walks_clockwise() {
        let f = Figure::new("f", &["A", "B", "C", "I"], &[["A", "B", "I"], ["B", "C", "I"], ["C", "A", "I"]]).unwrap();
        let fan = f.fan(f.vertex("I").unwrap());
        assert_eq!(fan.shape, FanShape::Cycle);
        let tris: Vec<usize> = fan.entries.iter().map(|e| e.triangle).collect();
        // clockwise around I: ABI -> CAI -> BCI
        assert_eq!(tris, [0, 2, 1]);
        // in ABI (slot of I = 2): incoming edge I-B (from BCI), outgoing I-A
        assert_eq!(fan.entries[0].odd_slot, 1);
        assert_eq!(fan.entries[0].even_slot, 0);
    }

    #[test]
    fn exterior_chain_order() {
        let f = Figure::new("f", &["A", "B", "C", "I"], &[["A", "B", "I"], ["B", "C", "I"], ["C", "A", "I"]]).unwrap();
        let fan = f.fan(f.vertex("A").unwrap());
        assert_eq!(fan.shape, FanShape::Chain);
        let tris: Vec<usize> = fan.entries.iter().map(|e| e.triangle).collect();
        // clockwise around A: CAI then ABI
        assert_eq!(tris, [2, 0]);
        // odd/even slots cover both non-A corners of each triangle
        for e in &fan.entries {
            let mut s = [e.slot, e.odd_slot, e.even_slot];
            s.sort();
            assert_eq!(s, [0, 1, 2]);
        }
    }

    #[test]
    fn bowtie_is_broken() {
        let f = Figure::new("f", &["A", "B", "C", "D", "E"], &[["A", "B", "C"], ["C", "D", "E"]]).unwrap();
        assert_eq!(f.fan(f.vertex("C").unwrap()).shape, FanShape::Broken);
    }
}
