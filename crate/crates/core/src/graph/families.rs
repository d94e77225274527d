//! Named graphs: the four-vertex patterns, cliques and paths, and the two
//! parametrised families (generalised pyramids and generalised bulls).

use std::fmt;
use std::str::FromStr;

use super::Graph;
use crate::error::Error;

pub fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    Graph::from_edges(n, &edges).expect("complete graph within bounds")
}

pub fn edgeless(n: usize) -> Graph {
    Graph::from_edges(n, &[]).expect("edgeless graph within bounds")
}

/// Path `0 - 1 - ⋯ - (n-1)`.
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges).expect("path within bounds")
}

/// Cycle `0 - 1 - ⋯ - (n-1) - 0`, for `n ≥ 3`.
pub fn cycle(n: usize) -> Graph {
    let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    if n >= 3 {
        edges.push((0, n - 1));
    }
    Graph::from_edges(n, &edges).expect("cycle within bounds")
}

/// Generalised pyramid `GP(r, s, t)`.
///
/// Labels: `a = 0`, `b = 1`, `c = 2` (pairwise nonadjacent), then the blocks
/// `S_ab` (`r` vertices), `S_ac` (`s`), `S_bc` (`t`). The three blocks
/// together form one clique, and each block vertex is adjacent to every
/// other vertex except the apex its block is not named after.
pub fn build_gp(r: usize, s: usize, t: usize) -> Graph {
    let n = 3 + r + s + t;
    // (first label, size, apex excluded)
    let blocks = [(3, r, 2), (3 + r, s, 1), (3 + r + s, t, 0)];
    let mut edges = Vec::new();
    for &(start, size, excluded) in &blocks {
        for v in start..start + size {
            for u in 0..n {
                if u != v && u != excluded && (u < 3 || u < v) {
                    edges.push((u.min(v), u.max(v)));
                }
            }
        }
    }
    Graph::from_edges(n, &edges).expect("pyramid within bounds")
}

/// Generalised bull `GB(r, s, t)`.
///
/// Labels: `a = 0`, `b = 1`, then the clique blocks `K_r`, `K_s`, `K_t`
/// (consecutive). `a` is adjacent exactly to `K_r`, `b` exactly to `K_s`.
pub fn build_gb(r: usize, s: usize, t: usize) -> Graph {
    let n = 2 + r + s + t;
    let mut edges = Vec::new();
    for v in 2..n {
        for u in 2..v {
            edges.push((u, v));
        }
    }
    edges.extend((2..2 + r).map(|v| (0, v)));
    edges.extend((2 + r..2 + r + s).map(|v| (1, v)));
    Graph::from_edges(n, &edges).expect("bull within bounds")
}

/// The eleven four-vertex graphs, the co-triangle, and cliques `K_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pattern {
    K4,
    Diamond,
    C4,
    Paw,
    Claw,
    P4,
    FourK1,
    CoDiamond,
    TwoK2,
    CoPaw,
    CoClaw,
    CoTriangle,
    Complete(usize),
}

impl Pattern {
    pub const FOUR_VERTEX: [Pattern; 11] = [
        Pattern::K4,
        Pattern::Diamond,
        Pattern::C4,
        Pattern::Paw,
        Pattern::Claw,
        Pattern::P4,
        Pattern::FourK1,
        Pattern::CoDiamond,
        Pattern::TwoK2,
        Pattern::CoPaw,
        Pattern::CoClaw,
    ];
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Pattern::K4 => "K4",
            Pattern::Diamond => "diamond",
            Pattern::C4 => "C4",
            Pattern::Paw => "paw",
            Pattern::Claw => "claw",
            Pattern::P4 => "P4",
            Pattern::FourK1 => "4K1",
            Pattern::CoDiamond => "co-diamond",
            Pattern::TwoK2 => "2K2",
            Pattern::CoPaw => "co-paw",
            Pattern::CoClaw => "co-claw",
            Pattern::CoTriangle => "co-triangle",
            Pattern::Complete(k) => return write!(f, "K{k}"),
        };
        f.write_str(name)
    }
}

/// Case-insensitive; cliques are written `K5` or `K_5`.
impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let lower = s.trim().to_ascii_lowercase();
        let p = match lower.as_str() {
            "k4" => Pattern::K4,
            "diamond" => Pattern::Diamond,
            "c4" => Pattern::C4,
            "paw" => Pattern::Paw,
            "claw" => Pattern::Claw,
            "p4" => Pattern::P4,
            "4k1" => Pattern::FourK1,
            "co-diamond" | "codiamond" => Pattern::CoDiamond,
            "2k2" => Pattern::TwoK2,
            "co-paw" | "copaw" => Pattern::CoPaw,
            "co-claw" | "coclaw" => Pattern::CoClaw,
            "co-triangle" | "cotriangle" | "3k1" => Pattern::CoTriangle,
            other => {
                let digits = other.strip_prefix("k_").or_else(|| other.strip_prefix('k'));
                match digits.and_then(|d| d.parse::<usize>().ok()) {
                    Some(k) => Pattern::Complete(k),
                    None => return Err(Error::UnknownPattern(s.to_string())),
                }
            }
        };
        Ok(p)
    }
}

/// Labelling:
/// - diamond: 4-cycle `0-1-2-3` plus chord `0-2`
/// - C4: `0-1-2-3-0`; P4: `0-1-2-3`
/// - paw: triangle `0,1,2` plus pendant `3` on `0`
/// - claw: centre `0`, leaves `1,2,3`
/// - co-diamond: edge `0-1`, `2` and `3` isolated
/// - 2K2: edges `0-1` and `2-3`
/// - co-paw: path `0-1-2`, `3` isolated
/// - co-claw: triangle `0,1,2`, `3` isolated
pub fn build_pattern(p: Pattern) -> Graph {
    let (n, edges): (usize, &[(usize, usize)]) = match p {
        Pattern::K4 => return complete(4),
        Pattern::Complete(k) => return complete(k),
        Pattern::Diamond => (4, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]),
        Pattern::C4 => (4, &[(0, 1), (1, 2), (2, 3), (0, 3)]),
        Pattern::Paw => (4, &[(0, 1), (1, 2), (0, 2), (0, 3)]),
        Pattern::Claw => (4, &[(0, 1), (0, 2), (0, 3)]),
        Pattern::P4 => (4, &[(0, 1), (1, 2), (2, 3)]),
        Pattern::FourK1 => (4, &[]),
        Pattern::CoDiamond => (4, &[(0, 1)]),
        Pattern::TwoK2 => (4, &[(0, 1), (2, 3)]),
        Pattern::CoPaw => (4, &[(0, 1), (1, 2)]),
        Pattern::CoClaw => (4, &[(0, 1), (1, 2), (0, 2)]),
        Pattern::CoTriangle => (3, &[]),
    };
    Graph::from_edges(n, edges).expect("pattern within bounds")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::isomorphism;

    fn sorted_degrees(g: &Graph) -> Vec<usize> {
        let mut d = g.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    #[test]
    fn pyramid_examples() {
        assert_eq!(build_gp(0, 0, 0), edgeless(3));

        let g = build_gp(1, 1, 1);
        assert_eq!(g.n(), 6);
        assert_eq!(g.edge_count(), 9);
        assert_eq!(sorted_degrees(&g), vec![4, 4, 4, 2, 2, 2]);

        let g = build_gp(1, 0, 0);
        assert_eq!(g.n(), 4);
        assert_eq!(g.degree(3), 2);
        assert_eq!(g.degree(2), 0);
        assert!(g.has_edge(3, 0) && g.has_edge(3, 1));
    }

    #[test]
    fn pyramid_apexes_are_stable_and_blocks_form_a_clique() {
        for (r, s, t) in [(2, 1, 3), (0, 2, 1), (3, 3, 0)] {
            let g = build_gp(r, s, t);
            assert!(g.is_stable(0b111));
            let blocks = g.all() & !0b111;
            assert!(g.is_clique(blocks));
            for v in 3..3 + r {
                assert_eq!(g.neighbors(v) & 0b111, 0b011);
            }
            for v in 3 + r..3 + r + s {
                assert_eq!(g.neighbors(v) & 0b111, 0b101);
            }
            for v in 3 + r + s..g.n() {
                assert_eq!(g.neighbors(v) & 0b111, 0b110);
            }
        }
    }

    #[test]
    fn bull_examples() {
        let g = build_gb(1, 1, 1);
        assert_eq!((g.n(), g.edge_count()), (5, 5));
        assert_eq!(sorted_degrees(&g), vec![3, 3, 2, 1, 1]);

        let g = build_gb(0, 0, 4);
        let mut want = edgeless(2);
        want = crate::graph::disjoint_union(&want, &complete(4)).unwrap();
        assert_eq!(g, want);

        let g = build_gb(3, 0, 0);
        assert_eq!(g.degree(0), 3);
        assert_eq!(g.degree(1), 0);
        assert!(g.is_clique(0b11101));
    }

    #[test]
    fn pyramid_symmetric_in_parameters() {
        for r in 0..=2 {
            for s in 0..=2 {
                for t in 0..=2 {
                    let g = build_gp(r, s, t);
                    for (a, b, c) in [(r, t, s), (s, r, t), (s, t, r), (t, r, s), (t, s, r)] {
                        assert!(isomorphism(&g, &build_gp(a, b, c)).is_some(), "{r} {s} {t}");
                    }
                }
            }
        }
    }

    #[test]
    fn patterns() {
        let claw = build_pattern(Pattern::Claw);
        assert_eq!((claw.n(), claw.edge_count()), (4, 3));
        assert_eq!(claw.degree(0), 3);
        let t = build_pattern(Pattern::TwoK2);
        assert_eq!(t.edges(), vec![(0, 1), (2, 3)]);
        assert_eq!(build_pattern(Pattern::CoTriangle), edgeless(3));

        // the eleven four-vertex graphs are pairwise non-isomorphic
        for (i, a) in Pattern::FOUR_VERTEX.iter().enumerate() {
            for b in &Pattern::FOUR_VERTEX[i + 1..] {
                assert!(
                    isomorphism(&build_pattern(*a), &build_pattern(*b)).is_none(),
                    "{a} {b}"
                );
            }
        }
    }

    #[test]
    fn pattern_names() {
        for p in Pattern::FOUR_VERTEX {
            assert_eq!(p.to_string().parse::<Pattern>().unwrap(), p);
        }
        assert_eq!("K_7".parse::<Pattern>().unwrap(), Pattern::Complete(7));
        assert_eq!("k5".parse::<Pattern>().unwrap(), Pattern::Complete(5));
        assert_eq!(
            "co-triangle".parse::<Pattern>().unwrap(),
            Pattern::CoTriangle
        );
        assert!(matches!(
            "pentagon".parse::<Pattern>(),
            Err(Error::UnknownPattern(_))
        ));
    }
}
