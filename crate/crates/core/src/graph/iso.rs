//! Isomorphism and induced-subgraph search for small graphs.
//!
//! Plain backtracking with degree filtering; meant for graphs of a dozen or
//! so vertices, not as a canonical labelling service.

use super::{members, Graph};

/// An isomorphism `g → h` as a vector `f` with `f[v]` the image of `v`.
pub fn isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return None;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return None;
    }
    let mut map = vec![usize::MAX; g.n()];
    let mut used = 0u64;
    if extend(g, h, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn extend(g: &Graph, h: &Graph, v: usize, map: &mut [usize], used: &mut u64) -> bool {
    if v == g.n() {
        return true;
    }
    let free = h.all() & !*used;
    for x in members(free) {
        if h.degree(x) != g.degree(v) {
            continue;
        }
        if (0..v).any(|u| g.has_edge(u, v) != h.has_edge(map[u], x)) {
            continue;
        }
        map[v] = x;
        *used |= 1 << x;
        if extend(g, h, v + 1, map, used) {
            return true;
        }
        *used &= !(1 << x);
    }
    map[v] = usize::MAX;
    false
}

/// Finds an induced copy of `pattern` in `g`.
///
/// Vertex subsets are tried in lexicographic order and the first match is
/// returned as `w` with `w[i]` the vertex of `g` playing pattern vertex `i`.
pub fn find_induced(g: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    let k = pattern.n();
    if k > g.n() {
        return None;
    }
    if k == 0 {
        return Some(Vec::new());
    }
    let target_edges = pattern.edge_count();
    let mut target_deg = pattern.degrees();
    target_deg.sort_unstable();
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        let sub = g.induced(&subset);
        if sub.edge_count() == target_edges {
            let mut d = sub.degrees();
            d.sort_unstable();
            if d == target_deg {
                if let Some(f) = isomorphism(pattern, &sub) {
                    return Some(f.into_iter().map(|i| subset[i]).collect());
                }
            }
        }
        if !next_subset(&mut subset, g.n()) {
            return None;
        }
    }
}

/// Advances to the next `k`-subset of `0..n` in lexicographic order.
fn next_subset(subset: &mut [usize], n: usize) -> bool {
    let k = subset.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if subset[i] < n - k + i {
            subset[i] += 1;
            for j in i + 1..k {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
