//! Backtracking isomorphism test for small multigraphs.

use std::collections::{BTreeMap, BTreeSet};

use super::Graph;

/// Returns a bijection `map` with `g1` vertex `v` sent to `g2` vertex
/// `map[v]`, preserving every edge multiplicity, or `None`.
///
/// Candidates are pruned by colour refinement (degree, then the multiset of
/// neighbour colours with multiplicities, refined to a fixed point on both
/// graphs jointly) and by adjacency consistency with already mapped vertices.
pub fn are_isomorphic(g1: &Graph, g2: &Graph) -> Option<Vec<usize>> {
    let n = g1.vertex_count();
    if n != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return None;
    }
    if n == 0 {
        return Some(Vec::new());
    }
    let m1 = multiplicity_matrix(g1);
    let m2 = multiplicity_matrix(g2);
    let (c1, c2) = refine(g1, g2);
    let mut h1 = c1.clone();
    let mut h2 = c2.clone();
    h1.sort_unstable();
    h2.sort_unstable();
    if h1 != h2 {
        return None;
    }

    let order = search_order(g1, &c1);
    let mut state = Search {
        m1: &m1,
        m2: &m2,
        c1: &c1,
        c2: &c2,
        g1,
        g2,
        order: &order,
        map: vec![usize::MAX; n],
        used: vec![false; n],
    };
    state.extend(0).then_some(state.map)
}

fn multiplicity_matrix(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.vertex_count();
    let mut m = vec![vec![0u32; n]; n];
    for &(u, v) in g.edges() {
        m[u][v] += 1;
        m[v][u] += 1;
    }
    m
}

/// Joint colour refinement; colours are comparable across the two graphs.
fn refine(g1: &Graph, g2: &Graph) -> (Vec<usize>, Vec<usize>) {
    let mut c1 = g1.degrees();
    let mut c2 = g2.degrees();
    loop {
        let sig = |g: &Graph, c: &[usize]| -> Vec<(usize, Vec<(usize, usize)>)> {
            (0..g.vertex_count())
                .map(|v| {
                    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
                    for w in g.neighbors(v) {
                        *counts.entry(c[w]).or_default() += 1;
                    }
                    (c[v], counts.into_iter().collect())
                })
                .collect()
        };
        let s1 = sig(g1, &c1);
        let s2 = sig(g2, &c2);
        let palette: BTreeSet<&(usize, Vec<(usize, usize)>)> = s1.iter().chain(&s2).collect();
        let ranks: BTreeMap<_, usize> = palette.into_iter().enumerate().map(|(i, k)| (k, i)).collect();
        let n1: Vec<usize> = s1.iter().map(|s| ranks[s]).collect();
        let n2: Vec<usize> = s2.iter().map(|s| ranks[s]).collect();
        let classes = |c: &[usize]| {
            let mut v = c.to_vec();
            v.sort_unstable();
            v.dedup();
            v.len()
        };
        let stable = classes(&n1) == classes(&c1) && classes(&n2) == classes(&c2);
        c1 = n1;
        c2 = n2;
        if stable {
            return (c1, c2);
        }
    }
}

/// Breadth-first order, each component started from its rarest colour class.
fn search_order(g: &Graph, colors: &[usize]) -> Vec<usize> {
    let n = g.vertex_count();
    let mut freq: BTreeMap<usize, usize> = BTreeMap::new();
    for &c in colors {
        *freq.entry(c).or_default() += 1;
    }
    let mut starts: Vec<usize> = (0..n).collect();
    starts.sort_by_key(|&v| (freq[&colors[v]], std::cmp::Reverse(g.degree(v)), v));
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for s in starts {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut head = order.len();
        order.push(s);
        while head < order.len() {
            let v = order[head];
            head += 1;
            for w in g.neighbor_set(v) {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
    }
    order
}

struct Search<'a> {
    m1: &'a [Vec<u32>],
    m2: &'a [Vec<u32>],
    c1: &'a [usize],
    c2: &'a [usize],
    g1: &'a Graph,
    g2: &'a Graph,
    order: &'a [usize],
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        // A mapped neighbour restricts candidates to its image's neighbours.
        let anchor = self.g1.neighbors(v).find(|&w| self.map[w] != usize::MAX);
        let candidates: Vec<usize> = match anchor {
            Some(w) => self.g2.neighbor_set(self.map[w]).into_iter().collect(),
            None => (0..self.g2.vertex_count()).collect(),
        };
        for x in candidates {
            if self.used[x] || self.c1[v] != self.c2[x] || !self.consistent(v, x, depth) {
                continue;
            }
            self.map[v] = x;
            self.used[x] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.map[v] = usize::MAX;
            self.used[x] = false;
        }
        false
    }

    fn consistent(&self, v: usize, x: usize, depth: usize) -> bool {
        self.order[..depth]
            .iter()
            .all(|&w| self.m1[v][w] == self.m2[x][self.map[w]])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_circulant, build_cycle, CirculantSpec};

    fn circ(m: usize, steps: &[usize]) -> Graph {
        build_circulant(&CirculantSpec::normalized(m, steps).unwrap()).unwrap()
    }

    fn check_map(g1: &Graph, g2: &Graph, map: &[usize]) {
        let mut mapped: Vec<(usize, usize)> = g1
            .edges()
            .iter()
            .map(|&(u, v)| (map[u].min(map[v]), map[u].max(map[v])))
            .collect();
        mapped.sort_unstable();
        assert_eq!(mapped, g2.edge_multiset());
    }

    #[test]
    fn self_isomorphic() {
        let g = circ(16, &[1, 3]);
        let map = are_isomorphic(&g, &g).unwrap();
        check_map(&g, &g, &map);
    }

    #[test]
    fn c16_pairs() {
        let a = circ(16, &[1, 3]);
        let b = circ(16, &[1, 5]);
        let c = circ(16, &[1, 7]);
        let map = are_isomorphic(&a, &b).unwrap();
        check_map(&a, &b, &map);
        assert!(are_isomorphic(&a, &c).is_none());
    }

    #[test]
    fn multiplicities_matter() {
        let double = Graph::new(3, vec![(0, 1), (0, 1), (1, 2), (2, 0)]).unwrap();
        let other = Graph::new(3, vec![(0, 1), (1, 2), (1, 2), (2, 0)]).unwrap();
        let tri_plus = Graph::new(3, vec![(0, 1), (1, 2), (2, 0), (2, 0)]).unwrap();
        assert!(are_isomorphic(&double, &other).is_some());
        assert!(are_isomorphic(&double, &tri_plus).is_some());
        let simple4 = build_cycle(4).unwrap();
        let path_double = Graph::new(4, vec![(0, 1), (0, 1), (2, 3), (2, 3)]).unwrap();
        assert!(are_isomorphic(&simple4, &path_double).is_none());
    }
}
