//! Structural predicates: independence number, BFS layers, chordality,
//! asteroidal triples and unit interval recognition.

use super::{find_induced, members, set_of, Graph, VertexSet};
use crate::graph::{build_pattern, Pattern};

/// A maximum stable set, lexicographically smallest among those found first by
/// the branching order (include the lowest free vertex, then exclude it).
pub fn max_stable_set(g: &Graph) -> Vec<usize> {
    let mut best = 0u64;
    branch(g, g.all(), 0, &mut best);
    members(best).collect()
}

pub fn max_stable_set_size(g: &Graph) -> usize {
    max_stable_set(g).len()
}

fn branch(g: &Graph, candidates: VertexSet, chosen: VertexSet, best: &mut VertexSet) {
    if candidates == 0 {
        if chosen.count_ones() > best.count_ones() {
            *best = chosen;
        }
        return;
    }
    if chosen.count_ones() + candidates.count_ones() <= best.count_ones() {
        return;
    }
    let v = candidates.trailing_zeros() as usize;
    let rest = candidates & !(1 << v);
    branch(g, rest & !g.neighbors(v), chosen | 1 << v, best);
    // excluding v only helps if v has a neighbour among the candidates
    if g.neighbors(v) & rest != 0 {
        branch(g, rest, chosen, best);
    }
}

/// BFS layers `N_0(w) = {w}, N_1(w), N_2(w), …` of the component of `w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayerDecomposition {
    pub root: usize,
    pub layers: Vec<Vec<usize>>,
    /// Vertices in other components.
    pub unreachable: Vec<usize>,
}

impl LayerDecomposition {
    /// `N_i(w)`, empty past the last layer.
    pub fn layer(&self, i: usize) -> &[usize] {
        self.layers.get(i).map_or(&[], |l| l.as_slice())
    }

    pub fn layer_set(&self, i: usize) -> VertexSet {
        set_of(self.layer(i))
    }
}

pub fn distance_layers(g: &Graph, root: usize) -> LayerDecomposition {
    let mut seen: VertexSet = 1 << root;
    let mut frontier = seen;
    let mut layers = vec![vec![root]];
    loop {
        let mut next = 0;
        for v in members(frontier) {
            next |= g.neighbors(v);
        }
        next &= !seen;
        if next == 0 {
            break;
        }
        seen |= next;
        layers.push(members(next).collect());
        frontier = next;
    }
    LayerDecomposition {
        root,
        layers,
        unreachable: members(g.all() & !seen).collect(),
    }
}

/// Chordality by repeated removal of simplicial vertices.
pub fn is_chordal(g: &Graph) -> bool {
    let mut left = g.all();
    while left != 0 {
        let simplicial = members(left).find(|&v| g.is_clique(g.neighbors(v) & left));
        match simplicial {
            Some(v) => left &= !(1 << v),
            None => return false,
        }
    }
    true
}

/// An induced cycle of length at least 4, listed in cycle order, if any.
///
/// For a vertex `v` with nonadjacent neighbours `a`, `b`, a shortest `a`–`b`
/// path avoiding the rest of `N[v]` closes into a chordless cycle through `v`.
pub fn chordless_cycle(g: &Graph) -> Option<Vec<usize>> {
    for v in 0..g.n() {
        let nv = g.neighbors(v);
        for a in members(nv) {
            for b in members(nv & !g.neighbors(a) & !((1u64 << (a + 1)) - 1)) {
                let within = g.all() & !(nv | 1 << v) | 1 << a | 1 << b;
                if let Some(p) = shortest_path(g, a, b, within) {
                    let mut cyc = vec![v];
                    cyc.extend(p);
                    return Some(cyc);
                }
            }
        }
    }
    None
}

fn shortest_path(g: &Graph, from: usize, to: usize, within: VertexSet) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; g.n()];
    let mut seen: VertexSet = 1 << from;
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if u == to {
            let mut path = vec![to];
            let mut x = to;
            while x != from {
                x = parent[x];
                path.push(x);
            }
            path.reverse();
            return Some(path);
        }
        for w in members(g.neighbors(u) & within & !seen) {
            seen |= 1 << w;
            parent[w] = u;
            queue.push_back(w);
        }
    }
    None
}

/// The lexicographically first asteroidal triple: a stable triple in which
/// every two vertices are joined by a path avoiding the closed neighbourhood
/// of the third.
pub fn asteroidal_triple(g: &Graph) -> Option<[usize; 3]> {
    let n = g.n();
    let avoid = |z: usize| g.all() & !(g.neighbors(z) | 1 << z);
    for x in 0..n {
        for y in x + 1..n {
            if g.has_edge(x, y) {
                continue;
            }
            for z in y + 1..n {
                if g.has_edge(x, z) || g.has_edge(y, z) {
                    continue;
                }
                let joined =
                    |p: usize, q: usize, third: usize| g.reach(p, avoid(third)) >> q & 1 == 1;
                if joined(x, y, z) && joined(x, z, y) && joined(y, z, x) {
                    return Some([x, y, z]);
                }
            }
        }
    }
    None
}

pub fn is_at_free(g: &Graph) -> bool {
    asteroidal_triple(g).is_none()
}

/// Which unit interval condition fails first (claw, then chordality, then
/// AT-freeness), with a witness vertex list.
pub fn unit_interval_violation(g: &Graph) -> Option<(&'static str, Vec<usize>)> {
    if let Some(w) = find_induced(g, &build_pattern(Pattern::Claw)) {
        return Some(("claw-free", w));
    }
    if !is_chordal(g) {
        let cyc = chordless_cycle(g).expect("non-chordal graphs have a chordless cycle");
        return Some(("chordal", cyc));
    }
    if let Some(t) = asteroidal_triple(g) {
        return Some(("at-free", t.to_vec()));
    }
    None
}

/// Claw-free, chordal and AT-free.
pub fn is_unit_interval(g: &Graph) -> bool {
    unit_interval_violation(g).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_gb, build_gp, complete, cycle, edgeless, path};
    use proptest::prelude::*;

    #[test]
    fn independence_numbers() {
        for n in 1..=7 {
            assert_eq!(max_stable_set_size(&complete(n)), 1);
            assert_eq!(max_stable_set_size(&edgeless(n)), n);
        }
        assert_eq!(max_stable_set_size(&edgeless(0)), 0);
        for r in 0..=3 {
            for s in 0..=3 {
                for t in 0..=3 {
                    let g = build_gp(r, s, t);
                    assert_eq!(max_stable_set(&g), vec![0, 1, 2]);
                }
            }
        }
        assert_eq!(max_stable_set_size(&cycle(7)), 3);
    }

    #[test]
    fn layers() {
        let k = complete(5);
        let d = distance_layers(&k, 2);
        assert_eq!(d.layers, vec![vec![2], vec![0, 1, 3, 4]]);

        let d = distance_layers(&path(3), 0);
        assert_eq!(d.layers, vec![vec![0], vec![1], vec![2]]);

        // GB(1,1,1): a=0, b=1, K_r={2}, K_s={3}, K_t={4}
        let d = distance_layers(&build_gb(1, 1, 1), 0);
        assert_eq!(d.layers, vec![vec![0], vec![2], vec![3, 4], vec![1]]);
        assert!(d.unreachable.is_empty());

        let d = distance_layers(&edgeless(3), 1);
        assert_eq!(d.layers, vec![vec![1]]);
        assert_eq!(d.unreachable, vec![0, 2]);
        assert!(d.layer(5).is_empty());
    }

    #[test]
    fn chordality() {
        assert!(!is_chordal(&build_pattern(Pattern::C4)));
        assert!(!is_chordal(&cycle(6)));
        assert!(is_chordal(&path(6)));
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (1, 4)]).unwrap();
        assert!(is_chordal(&star));
        for r in 0..=3 {
            for s in 0..=3 {
                for t in 0..=3 {
                    assert!(is_chordal(&build_gb(r, s, t)));
                }
            }
        }
        let cyc = chordless_cycle(&cycle(5)).unwrap();
        assert_eq!(cyc.len(), 5);
    }

    #[test]
    fn asteroidal_triples() {
        for n in 1..=6 {
            assert!(is_at_free(&complete(n)));
        }
        assert!(is_at_free(&build_pattern(Pattern::C4)));
        // subdivided claw: centre 0, arms 0-1-2, 0-3-4, 0-5-6
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        assert_eq!(asteroidal_triple(&g), Some([2, 4, 6]));
        assert!(is_at_free(&cycle(5)));
        assert_eq!(asteroidal_triple(&cycle(6)), Some([0, 2, 4]));
    }

    #[test]
    fn two_sided_attachment_gives_asteroidal_triple() {
        // w=0, p=1, x=2, y=3, a1=4, a2=5, a3=6
        let g = Graph::from_edges(
            7,
            &[
                (0, 2),
                (0, 3),
                (0, 4),
                (0, 5),
                (0, 6),
                (1, 4),
                (1, 5),
                (4, 5),
                (2, 4),
                (2, 6),
                (4, 6),
                (3, 5),
                (3, 6),
                (5, 6),
            ],
        )
        .unwrap();
        assert_eq!(asteroidal_triple(&g), Some([1, 2, 3]));
    }

    #[test]
    fn unit_interval_recognition() {
        for n in 1..=7 {
            assert!(is_unit_interval(&path(n)));
        }
        assert_eq!(
            unit_interval_violation(&build_pattern(Pattern::Claw))
                .unwrap()
                .0,
            "claw-free"
        );
        assert_eq!(
            unit_interval_violation(&build_pattern(Pattern::C4))
                .unwrap()
                .0,
            "chordal"
        );
        assert!(is_unit_interval(&build_gb(1, 1, 1)));
    }

    /// Enumerates simple paths from `p` to `q` avoiding `blocked`.
    fn path_exists_by_dfs(
        g: &Graph,
        p: usize,
        q: usize,
        blocked: &[bool],
        visited: &mut Vec<bool>,
    ) -> bool {
        if p == q {
            return true;
        }
        visited[p] = true;
        for w in 0..g.n() {
            if g.has_edge(p, w)
                && !blocked[w]
                && !visited[w]
                && path_exists_by_dfs(g, w, q, blocked, visited)
            {
                return true;
            }
        }
        visited[p] = false;
        false
    }

    fn at_free_oracle(g: &Graph) -> bool {
        let n = g.n();
        let joined = |p: usize, q: usize, z: usize| {
            let blocked: Vec<bool> = (0..n).map(|v| v == z || g.has_edge(v, z)).collect();
            path_exists_by_dfs(g, p, q, &blocked, &mut vec![false; n])
        };
        for x in 0..n {
            for y in x + 1..n {
                for z in y + 1..n {
                    if g.has_edge(x, y) || g.has_edge(x, z) || g.has_edge(y, z) {
                        continue;
                    }
                    if joined(x, y, z) && joined(x, z, y) && joined(y, z, x) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn chordal_oracle(g: &Graph) -> bool {
        // no induced cycle of length >= 4: check every vertex subset of size >= 4
        let n = g.n();
        for mask in 0u64..(1 << n) {
            let k = mask.count_ones() as usize;
            if k < 4 {
                continue;
            }
            let vs: Vec<usize> = members(mask).collect();
            let sub = g.induced(&vs);
            if sub.is_connected() && sub.degrees().iter().all(|&d| d == 2) {
                return false;
            }
        }
        true
    }

    #[test]
    fn at_free_and_chordal_agree_with_oracles_on_all_small_graphs() {
        for n in 0usize..=6 {
            let edges = n * n.saturating_sub(1) / 2;
            for mask in 0..(1u64 << edges) {
                let g = Graph::from_edge_mask(n, mask);
                assert_eq!(is_at_free(&g), at_free_oracle(&g), "n={n} mask={mask}");
                let chordal = is_chordal(&g);
                assert_eq!(chordless_cycle(&g).is_none(), chordal);
                if n <= 5 {
                    assert_eq!(chordal, chordal_oracle(&g), "n={n} mask={mask}");
                }
            }
        }
    }

    proptest! {
        #[test]
        fn layers_only_join_neighbouring_levels(n in 1usize..10, mask in any::<u64>(), root_seed in any::<usize>()) {
            let bits = n * (n - 1) / 2;
            let mask = if bits == 64 { mask } else { mask & ((1u64 << bits) - 1) };
            let g = Graph::from_edge_mask(n, mask);
            let root = root_seed % n;
            let d = distance_layers(&g, root);
            let mut level = vec![usize::MAX; n];
            for (i, layer) in d.layers.iter().enumerate() {
                for &v in layer {
                    prop_assert_eq!(level[v], usize::MAX);
                    level[v] = i;
                }
            }
            for &v in &d.unreachable {
                prop_assert_eq!(level[v], usize::MAX);
            }
            prop_assert_eq!(d.layers.iter().map(Vec::len).sum::<usize>() + d.unreachable.len(), n);
            for (u, v) in g.edges() {
                if level[u] != usize::MAX {
                    prop_assert!(level[u].abs_diff(level[v]) <= 1);
                }
            }
        }

        #[test]
        fn stable_set_is_stable_and_maximum(n in 1usize..9, mask in any::<u64>()) {
            let bits = n * (n - 1) / 2;
            let g = Graph::from_edge_mask(n, mask & ((1u64 << bits) - 1));
            let s = max_stable_set(&g);
            prop_assert!(g.is_stable(set_of(&s)));
            let brute = (0u64..(1 << n)).filter(|&m| g.is_stable(m)).map(|m| m.count_ones()).max().unwrap();
            prop_assert_eq!(s.len() as u32, brute);
        }
    }
}
