use std::collections::VecDeque;

use super::Graph;

/// A proper `k`-coloring as `k` independent sets, if one exists. Parallel
/// edges count as a single adjacency. `k = 2` is a breadth-first two-coloring,
/// larger `k` an exact backtracking search meant for a few hundred vertices.
pub fn partite_classes(g: &Graph, k: usize) -> Option<Vec<Vec<usize>>> {
    let colors = k_coloring(g, k)?;
    let mut classes = vec![Vec::new(); k];
    for (v, c) in colors.into_iter().enumerate() {
        classes[c].push(v);
    }
    Some(classes)
}

/// Vertex colors in `0..k`, or `None` if `g` is not `k`-colorable.
pub fn k_coloring(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    if n == 0 {
        return Some(Vec::new());
    }
    match k {
        0 => None,
        1 => (g.edge_count() == 0).then(|| vec![0; n]),
        2 => two_coloring(g),
        _ => {
            let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbor_set(v).into_iter().collect()).collect();
            let mut colors = vec![usize::MAX; n];
            dsatur(&adj, k, &mut colors, 0).then_some(colors)
        }
    }
}

fn two_coloring(g: &Graph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut colors = vec![usize::MAX; n];
    for start in 0..n {
        if colors[start] != usize::MAX {
            continue;
        }
        colors[start] = 0;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for w in g.neighbors(v) {
                if colors[w] == usize::MAX {
                    colors[w] = 1 - colors[v];
                    queue.push_back(w);
                } else if colors[w] == colors[v] {
                    return None;
                }
            }
        }
    }
    Some(colors)
}

fn dsatur(adj: &[Vec<usize>], k: usize, colors: &mut [usize], colored: usize) -> bool {
    if colored == adj.len() {
        return true;
    }
    // Most constrained vertex first, ties by degree.
    let mut best = None;
    let mut best_key = (0, 0);
    for v in 0..adj.len() {
        if colors[v] != usize::MAX {
            continue;
        }
        let mut used = 0u64;
        for &w in &adj[v] {
            if colors[w] != usize::MAX {
                used |= 1 << colors[w].min(63);
            }
        }
        let key = (used.count_ones() as usize, adj[v].len());
        if best.is_none() || key > best_key {
            best = Some(v);
            best_key = key;
        }
    }
    let v = best.expect("an uncolored vertex remains");
    let max_used = colors.iter().filter(|&&c| c != usize::MAX).max().copied();
    let limit = match max_used {
        Some(c) => (c + 2).min(k),
        None => 1,
    };
    for c in 0..limit {
        if adj[v].iter().all(|&w| colors[w] != c) {
            colors[v] = c;
            if dsatur(adj, k, colors, colored + 1) {
                return true;
            }
            colors[v] = usize::MAX;
        }
    }
    false
}

/// Exact chromatic number by increasing `k`.
pub fn chromatic_number(g: &Graph) -> usize {
    if g.vertex_count() == 0 {
        return 0;
    }
    (1..=g.vertex_count())
        .find(|&k| k_coloring(g, k).is_some())
        .unwrap_or(g.vertex_count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_circulant, build_cycle, CirculantSpec};

    fn is_proper(g: &Graph, colors: &[usize]) -> bool {
        g.edges().iter().all(|&(u, v)| colors[u] != colors[v])
    }

    #[test]
    fn c4_parity_classes() {
        let classes = partite_classes(&build_cycle(4).unwrap(), 2).unwrap();
        assert_eq!(classes, vec![vec![0, 2], vec![1, 3]]);
    }

    #[test]
    fn odd_cycle_needs_three() {
        let c7 = build_cycle(7).unwrap();
        assert!(partite_classes(&c7, 2).is_none());
        let colors = k_coloring(&c7, 3).unwrap();
        assert!(is_proper(&c7, &colors));
        assert_eq!(chromatic_number(&c7), 3);
    }

    #[test]
    fn c16_1_3_is_parity_bipartite() {
        let g = build_circulant(&CirculantSpec::new(16, vec![1, 3]).unwrap()).unwrap();
        let classes = partite_classes(&g, 2).unwrap();
        assert!(classes[0].iter().all(|v| v % 2 == 0));
        assert!(classes[1].iter().all(|v| v % 2 == 1));
    }

    #[test]
    fn complete_graph_chromatic() {
        let edges = (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))).collect();
        let k5 = Graph::new(5, edges).unwrap();
        assert_eq!(chromatic_number(&k5), 5);
        assert!(partite_classes(&k5, 3).is_none());
    }
}
