//! Independent reference computations shared by the integration tests. They
//! work from raw edge lists and label vectors only.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use itertools::Itertools;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub type Edges = Vec<(usize, usize)>;

pub fn sums(n: usize, edges: &[(usize, usize)], labels: &[usize]) -> Vec<usize> {
    let mut s = vec![0; n];
    for (&(u, v), &l) in edges.iter().zip(labels) {
        s[u] += l;
        s[v] += l;
    }
    s
}

pub fn is_bijection(labels: &[usize]) -> bool {
    let set: BTreeSet<usize> = labels.iter().copied().collect();
    set.len() == labels.len() && set.iter().copied().eq(1..=labels.len())
}

/// Distinct sums if local antimagic, else `None`.
pub fn colors(n: usize, edges: &[(usize, usize)], labels: &[usize]) -> Option<BTreeSet<usize>> {
    if !is_bijection(labels) {
        return None;
    }
    let s = sums(n, edges, labels);
    if edges.iter().any(|&(u, v)| s[u] == s[v]) {
        return None;
    }
    Some(s.into_iter().collect())
}

pub fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<BTreeSet<usize>> {
    let mut adj = vec![BTreeSet::new(); n];
    for &(u, v) in edges {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    adj
}

/// BFS two-colouring: the two sides, or `None` when an odd cycle exists.
pub fn bipartition(n: usize, edges: &[(usize, usize)]) -> Option<(Vec<usize>, Vec<usize>)> {
    let adj = adjacency(n, edges);
    let mut side = vec![usize::MAX; n];
    for s in 0..n {
        if side[s] != usize::MAX {
            continue;
        }
        side[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(v) = q.pop_front() {
            for &w in &adj[v] {
                if side[w] == usize::MAX {
                    side[w] = 1 - side[v];
                    q.push_back(w);
                } else if side[w] == side[v] {
                    return None;
                }
            }
        }
    }
    let a = (0..n).filter(|&v| side[v] == 0).collect();
    let b = (0..n).filter(|&v| side[v] == 1).collect();
    Some((a, b))
}

fn colorable(adj: &[BTreeSet<usize>], k: usize, v: usize, col: &mut [usize]) -> bool {
    if v == adj.len() {
        return true;
    }
    for c in 0..k {
        if adj[v].iter().all(|&w| w >= v || col[w] != c) {
            col[v] = c;
            if colorable(adj, k, v + 1, col) {
                return true;
            }
        }
    }
    false
}

pub fn chromatic(n: usize, edges: &[(usize, usize)]) -> usize {
    let adj = adjacency(n, edges);
    (1..=n.max(1))
        .find(|&k| colorable(&adj, k, 0, &mut vec![0; n]))
        .unwrap_or(n)
}

pub fn degree_counts(n: usize, edges: &[(usize, usize)]) -> BTreeMap<usize, usize> {
    let mut deg = vec![0; n];
    for &(u, v) in edges {
        deg[u] += 1;
        deg[v] += 1;
    }
    let mut out = BTreeMap::new();
    for d in deg {
        *out.entry(d).or_default() += 1;
    }
    out
}

pub fn connected(n: usize, edges: &[(usize, usize)]) -> bool {
    if n == 0 {
        return true;
    }
    let adj = adjacency(n, edges);
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|x| x)
}

/// Minimum colour count over all `q!` bijections, or `None` if none is
/// local antimagic.
pub fn brute_chi_la(n: usize, edges: &[(usize, usize)]) -> Option<usize> {
    let q = edges.len();
    (1..=q)
        .permutations(q)
        .filter_map(|p| colors(n, edges, &p).map(|c| c.len()))
        .min()
}

/// Random connected simple graph on at least 3 vertices with at most
/// `max_edges` edges: a random spanning tree plus random extra edges.
pub fn random_connected(rng: &mut ChaCha8Rng, max_edges: usize) -> (usize, Edges) {
    let n = rng.gen_range(3..=max_edges.min(6) + 1);
    let mut edges: Edges = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    let mut present: BTreeSet<(usize, usize)> = edges.iter().copied().collect();
    let cap = max_edges.min(n * (n - 1) / 2);
    let target = rng.gen_range(edges.len()..=cap);
    while edges.len() < target {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        let e = (u.min(v), u.max(v));
        if u != v && present.insert(e) {
            edges.push(e);
        }
    }
    (n, edges)
}

/// Sorted multiset of edges after applying `map`.
pub fn mapped_edges(edges: &[(usize, usize)], map: &[usize]) -> Edges {
    edges
        .iter()
        .map(|&(u, v)| (map[u].min(map[v]), map[u].max(map[v])))
        .sorted()
        .collect()
}

pub fn normalized(edges: &[(usize, usize)]) -> Edges {
    edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).sorted().collect()
}

pub fn circulant_edges(m: usize, steps: &[usize]) -> Edges {
    steps
        .iter()
        .flat_map(|&a| (0..m).map(move |i| (i, (i + a) % m)))
        .collect()
}

/// Exact `tr(A^k)` for `k = 1..=kmax`.
pub fn power_traces(n: usize, edges: &[(usize, usize)], kmax: usize) -> Vec<i128> {
    let mut a = vec![vec![0i128; n]; n];
    for &(u, v) in edges {
        a[u][v] += 1;
        a[v][u] += 1;
    }
    let mut p = a.clone();
    let mut out = Vec::new();
    for _ in 0..kmax {
        out.push((0..n).map(|i| p[i][i]).sum());
        let mut next = vec![vec![0i128; n]; n];
        for i in 0..n {
            for k in 0..n {
                if p[i][k] != 0 {
                    for j in 0..n {
                        next[i][j] += p[i][k] * a[k][j];
                    }
                }
            }
        }
        p = next;
    }
    out
}

/// The C-labeling written out directly: edge `j` is `v_j v_{j+1}`.
pub fn c_label(m: usize, j: usize) -> usize {
    if j.is_multiple_of(2) {
        (j + 2) / 2
    } else {
        m - (j - 1) / 2
    }
}

/// Colours promised for a merged `C_n`, by `n mod 4`, with `m = n / 4`.
pub fn family_colors(n: usize) -> BTreeSet<usize> {
    let m = n / 4;
    match n % 4 {
        0 => [6 * m + 4, 8 * m + 4, 8 * m + 2],
        2 => [6 * m + 6, 8 * m + 8, 8 * m + 6],
        1 => [2 * m + 2, 8 * m + 6, 8 * m + 4],
        _ => [10 * m + 12, 8 * m + 10, 8 * m + 8],
    }
    .into()
}
