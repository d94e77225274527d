//! Finite simple graphs on at most 64 vertices, stored as adjacency bitsets.

mod families;
mod io;
mod iso;
mod predicates;

pub use families::{build_gb, build_gp, build_pattern, complete, cycle, edgeless, path, Pattern};
pub use io::{parse_edge_list, parse_graph6, parse_graph_text, to_edge_list, to_graph6};
pub use iso::{find_induced, isomorphism};
pub use predicates::{
    asteroidal_triple, chordless_cycle, distance_layers, is_at_free, is_chordal, is_unit_interval,
    max_stable_set, max_stable_set_size, unit_interval_violation, LayerDecomposition,
};

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// Bitset of vertices.
pub type VertexSet = u64;

/// Undirected simple graph on vertices `0..n`. Immutable once built.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::ResourceLimit {
                what: "graph",
                limit: MAX_VERTICES,
                actual: n,
            });
        }
        let mut adj = vec![0; n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::Domain(format!("self-loop at vertex {u}")));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { n, adj })
    }

    /// Graph on `n` vertices whose edges are the set bits of `mask`, in the
    /// order `(0,1), (0,2), (1,2), (0,3), …` (column-wise upper triangle).
    pub fn from_edge_mask(n: usize, mask: u64) -> Graph {
        let mut adj = vec![0; n];
        let mut bit = 0;
        for v in 1..n {
            for u in 0..v {
                if mask >> bit & 1 == 1 {
                    adj[u] |= 1 << v;
                    adj[v] |= 1 << u;
                }
                bit += 1;
            }
        }
        Graph { n, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn all(&self) -> VertexSet {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in members(self.adj[u] >> (u + 1) << (u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    /// Induced subgraph on `vertices`, relabelled `0..k` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let adj = vertices
            .iter()
            .map(|&u| {
                vertices
                    .iter()
                    .enumerate()
                    .filter(|&(_, &v)| self.has_edge(u, v))
                    .fold(0u64, |acc, (j, _)| acc | 1 << j)
            })
            .collect();
        Graph {
            n: vertices.len(),
            adj,
        }
    }

    /// Whether `set` is pairwise adjacent.
    pub fn is_clique(&self, set: VertexSet) -> bool {
        members(set).all(|v| set & !(1 << v) & !self.adj[v] == 0)
    }

    pub fn is_stable(&self, set: VertexSet) -> bool {
        members(set).all(|v| self.adj[v] & set == 0)
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        if within >> start & 1 == 0 {
            return 0;
        }
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in members(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Whether the subgraph induced by `set` is connected (the empty set counts
    /// as connected).
    pub fn is_connected_within(&self, set: VertexSet) -> bool {
        if set == 0 {
            return true;
        }
        self.reach(set.trailing_zeros() as usize, set) == set
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.all())
    }

    pub fn complement(&self) -> Graph {
        let all = self.all();
        let adj = (0..self.n)
            .map(|v| all & !self.adj[v] & !(1 << v))
            .collect();
        Graph { n: self.n, adj }
    }
}

/// Disjoint union: vertices of `h` follow those of `g`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph> {
    let n = g.n + h.n;
    if n > MAX_VERTICES {
        return Err(Error::ResourceLimit {
            what: "graph",
            limit: MAX_VERTICES,
            actual: n,
        });
    }
    let mut adj = g.adj.clone();
    adj.extend(h.adj.iter().map(|row| row << g.n));
    Ok(Graph { n, adj })
}

/// A connected component together with the original labels of its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub vertices: Vec<usize>,
    pub graph: Graph,
}

/// Components ordered by least vertex; each keeps the original vertex order.
pub fn connected_components(g: &Graph) -> Vec<Component> {
    let mut left = g.all();
    let mut out = Vec::new();
    while left != 0 {
        let start = left.trailing_zeros() as usize;
        let comp = g.reach(start, left);
        left &= !comp;
        let vertices: Vec<usize> = members(comp).collect();
        let graph = g.induced(&vertices);
        out.push(Component { vertices, graph });
    }
    out
}

/// Iterates over the set bits of `set`, lowest first.
pub fn members(mut set: VertexSet) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if set == 0 {
            None
        } else {
            let v = set.trailing_zeros() as usize;
            set &= set - 1;
            Some(v)
        }
    })
}

pub fn set_of(vertices: &[usize]) -> VertexSet {
    vertices.iter().fold(0, |acc, &v| acc | 1 << v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_checks() {
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
        assert!(Graph::from_edges(3, &[(1, 1)]).is_err());
        assert!(Graph::from_edges(65, &[]).is_err());
        let g = Graph::from_edges(3, &[(2, 0), (0, 2)]).unwrap();
        assert_eq!(g.edges(), vec![(0, 2)]);
        assert!(g.has_edge(2, 0) && !g.has_edge(0, 0));
    }

    #[test]
    fn edge_mask_order() {
        let g = Graph::from_edge_mask(4, 0b000_101);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(Graph::from_edge_mask(4, 0b111_111), complete(4));
    }

    #[test]
    fn unions_and_components() {
        let k1 = complete(1);
        let u = disjoint_union(&k1, &k1).unwrap();
        assert_eq!(u, edgeless(2));

        let two_k2 = build_pattern(Pattern::TwoK2);
        let comps = connected_components(&two_k2);
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.graph == complete(2)));
        assert_eq!(comps[1].vertices, vec![2, 3]);

        let p5 = path(5);
        let comps = connected_components(&p5);
        assert_eq!(
            comps,
            vec![Component {
                vertices: (0..5).collect(),
                graph: p5.clone()
            }]
        );
        assert!(connected_components(&edgeless(0)).is_empty());
    }

    #[test]
    fn induced_relabels() {
        let g = path(4);
        let h = g.induced(&[3, 1, 2]);
        assert_eq!(h.edges(), vec![(0, 2), (1, 2)]);
    }
}
