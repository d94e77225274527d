//! Structural classification of 2K2-free unit interval graphs.
//!
//! Each connected component gets a root `w` whose neighbourhood has
//! independence number at most 2 and whose farther distance layers are
//! cliques. The component then falls into one of six cases, keyed on the
//! shape of `[N(w)]`, `N_2(w)` and `N_3(w)`:
//!
//! 1. `[N(w)]` disconnected
//! 2. `[N(w)]` connected, `|N_3(w)| = 1`
//! 3. `[N(w)]` connected, `N_3(w) = ∅`, `α([N(w)]) ≤ 1`
//! 4. as 3 but `α([N(w)]) = 2` and `|N_2(w)| = 2`
//! 5. as 4 but `|N_2(w)| = 1`
//! 6. as 4 but `N_2(w) = ∅`
//!
//! Cases 4 to 6 are resolved structurally into a co-triangle-free graph or a
//! generalised bull. Cases 1 to 3 get a direct certificate attempt (stable
//! triple search, then isomorphism search against every `GB(r,s,t)` of the
//! right order) and fall back to [`Certificate::Unresolved`].

use serde::Serialize;

use crate::csf::{csf_e_with, Bounds};
use crate::error::{Error, Result};
use crate::graph::{
    build_gb, build_pattern, connected_components, distance_layers, find_induced, isomorphism,
    max_stable_set_size, members, unit_interval_violation, Component, Graph, LayerDecomposition,
    Pattern, VertexSet,
};
use crate::symfunc::{multiply_e, Basis, SymPoly, TransitionCache};
use crate::theorems::closed::gb_e_closed;

/// A root vertex with the layer structure around it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructuralRoot {
    pub root: usize,
    pub layers: LayerDecomposition,
    pub neighborhood_alpha: usize,
    pub neighborhood_connected: bool,
}

fn root_conditions(g: &Graph, w: usize) -> (LayerDecomposition, usize, bool) {
    let layers = distance_layers(g, w);
    let nw: Vec<usize> = layers.layer(1).to_vec();
    let alpha = max_stable_set_size(&g.induced(&nw));
    let far_cliques = (2..layers.layers.len()).all(|i| g.is_clique(layers.layer_set(i)));
    (layers, alpha, far_cliques)
}

/// Least vertex `w` with `α([N(w)]) ≤ 2` and `[N_i(w)]` a clique for every
/// `i ≥ 2`. Requires a connected, claw-free, AT-free graph.
///
/// When the graph is also 2K2-free and chordal, the layer bounds that follow
/// (`|N_3| ≤ 1`, no fourth layer, and in the connected/`α = 2`/`N_3 = ∅`
/// situation `|N_2| ≤ 2` with `[N(p) ∩ N(w)]` a clique for each `p ∈ N_2`)
/// are asserted as well.
pub fn find_structural_root(g: &Graph) -> Result<StructuralRoot> {
    if g.n() == 0 || !g.is_connected() {
        let stray = if g.n() == 0 {
            Vec::new()
        } else {
            members(g.all() & !g.reach(0, g.all())).collect()
        };
        return Err(Error::Precondition {
            predicate: "connected",
            witness: stray,
        });
    }
    if let Some(w) = find_induced(g, &build_pattern(Pattern::Claw)) {
        return Err(Error::Precondition {
            predicate: "claw-free",
            witness: w,
        });
    }
    if let Some(t) = crate::graph::asteroidal_triple(g) {
        return Err(Error::Precondition {
            predicate: "at-free",
            witness: t.to_vec(),
        });
    }
    let found = (0..g.n()).find_map(|w| {
        let (layers, alpha, far_cliques) = root_conditions(g, w);
        (alpha <= 2 && far_cliques).then_some((w, layers, alpha))
    });
    let Some((root, layers, alpha)) = found else {
        return Err(Error::Internal(
            "no vertex satisfies the root conditions".into(),
        ));
    };
    let nw = layers.layer_set(1);
    let root = StructuralRoot {
        root,
        neighborhood_alpha: alpha,
        neighborhood_connected: g.is_connected_within(nw),
        layers,
    };
    if find_induced(g, &build_pattern(Pattern::TwoK2)).is_none() && crate::graph::is_chordal(g) {
        check_layer_bounds(g, &root)?;
    }
    Ok(root)
}

fn check_layer_bounds(g: &Graph, root: &StructuralRoot) -> Result<()> {
    let l = &root.layers;
    if l.layers.len() > 4 {
        return Err(Error::Internal(format!(
            "root {} has a vertex at distance {}",
            root.root,
            l.layers.len() - 1
        )));
    }
    if l.layer(3).len() > 1 {
        return Err(Error::Internal(format!(
            "N_3({}) = {:?} has more than one vertex",
            root.root,
            l.layer(3)
        )));
    }
    if root.neighborhood_connected && l.layer(3).is_empty() && root.neighborhood_alpha == 2 {
        if l.layer(2).len() > 2 {
            return Err(Error::Internal(format!(
                "N_2({}) = {:?} has more than two vertices",
                root.root,
                l.layer(2)
            )));
        }
        let nw = l.layer_set(1);
        for &p in l.layer(2) {
            if !g.is_clique(g.neighbors(p) & nw) {
                return Err(Error::Internal(format!(
                    "[N({p}) ∩ N({})] is not a clique",
                    root.root
                )));
            }
        }
    }
    Ok(())
}

/// The claim a component certificate makes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum Certificate {
    /// No stable set of size 3.
    CoTriangleFree,
    /// Isomorphic to `GB(r, s, t)`; `mapping` lists `(vertex, bull vertex)`
    /// pairs, bull vertices labelled as in [`build_gb`].
    GeneralizedBull {
        r: usize,
        s: usize,
        t: usize,
        mapping: Vec<(usize, usize)>,
    },
    Unresolved,
}

/// Named vertex sets recorded for cases 4 and 5.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "shape")]
pub enum CaseStructure {
    /// Case 4: `N_2(w) = {p, q}`, `A = N(p) ∩ N(w)`, `B = N(w) \ A`.
    TwoFar {
        p: usize,
        q: usize,
        a: Vec<usize>,
        b: Vec<usize>,
    },
    /// Case 5 with `[B]` a clique: `N_2(w) = {p}`.
    OneFarCliqueB {
        p: usize,
        a: Vec<usize>,
        b: Vec<usize>,
    },
    /// Case 5 with `x, y ∈ B` nonadjacent and `N(x) ∩ A = ∅`. The bull has
    /// pendant `p` on `A`, pendant `x` on `B_1 ∪ {w}`, and third block `B_2`.
    OneFarBull {
        p: usize,
        x: usize,
        y: usize,
        a: Vec<usize>,
        b: Vec<usize>,
        /// `N(y) ∩ A`
        a2: Vec<usize>,
        /// `B \ {x, y}`
        a3: Vec<usize>,
        b1: Vec<usize>,
        b2: Vec<usize>,
    },
}

/// Certificate for one connected component, in the input graph's labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentCertificate {
    pub vertices: Vec<usize>,
    pub case: u8,
    pub root: usize,
    pub layers: Vec<Vec<usize>>,
    pub structure: Option<CaseStructure>,
    pub certificate: Certificate,
    #[serde(skip)]
    pub e_expansion: SymPoly,
}

impl ComponentCertificate {
    /// Re-checks the certificate against `g` (the whole input graph).
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let sub = g.induced(&self.vertices);
        let local = |v: usize| self.vertices.iter().position(|&u| u == v);
        match &self.certificate {
            Certificate::CoTriangleFree => {
                if max_stable_set_size(&sub) > 2 {
                    return Err(Error::Internal(format!(
                        "component {:?} has a stable triple",
                        self.vertices
                    )));
                }
            }
            Certificate::GeneralizedBull { r, s, t, mapping } => {
                let bull = build_gb(*r, *s, *t);
                if mapping.len() != sub.n() || bull.n() != sub.n() {
                    return Err(Error::Internal("bull mapping has the wrong size".into()));
                }
                let mut f = vec![usize::MAX; sub.n()];
                for &(v, b) in mapping {
                    let i =
                        local(v).ok_or_else(|| Error::Internal(format!("{v} not in component")))?;
                    f[i] = b;
                }
                let ok = (0..sub.n())
                    .all(|u| (0..sub.n()).all(|v| sub.has_edge(u, v) == bull.has_edge(f[u], f[v])));
                let mut seen = f.clone();
                seen.sort_unstable();
                if !ok || seen != (0..sub.n()).collect::<Vec<_>>() {
                    return Err(Error::Internal(format!(
                        "mapping is not an isomorphism onto GB({r},{s},{t})"
                    )));
                }
            }
            Certificate::Unresolved => {}
        }
        if self.e_expansion.basis() != Basis::E || self.e_expansion.degree() != sub.n() {
            return Err(Error::Internal(
                "attached expansion has the wrong shape".into(),
            ));
        }
        Ok(())
    }
}

/// Result of [`classify`]: per-component certificates and `X_G` in the `e` basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub components: Vec<ComponentCertificate>,
    pub e_expansion: SymPoly,
}

impl Classification {
    pub fn is_resolved(&self) -> bool {
        self.components
            .iter()
            .all(|c| c.certificate != Certificate::Unresolved)
    }
}

/// Checks that `g` is 2K2-free and unit interval, naming the first failure.
pub fn check_classification_domain(g: &Graph) -> Result<()> {
    if let Some(w) = find_induced(g, &build_pattern(Pattern::TwoK2)) {
        return Err(Error::Precondition {
            predicate: "2K2-free",
            witness: w,
        });
    }
    if let Some((predicate, witness)) = unit_interval_violation(g) {
        return Err(Error::Precondition { predicate, witness });
    }
    Ok(())
}

pub fn classify(g: &Graph) -> Result<Classification> {
    classify_with(g, &Bounds::default(), TransitionCache::global())
}

pub fn classify_with(
    g: &Graph,
    bounds: &Bounds,
    cache: &TransitionCache,
) -> Result<Classification> {
    check_classification_domain(g)?;
    let mut components = Vec::new();
    let mut product = SymPoly::basis_element(Basis::E, crate::partition::Partition::empty());
    for comp in connected_components(g) {
        let cert = classify_component(&comp, bounds, cache)?;
        cert.validate(g)?;
        product = multiply_e(&product, &cert.e_expansion)?;
        components.push(cert);
    }
    Ok(Classification {
        components,
        e_expansion: product,
    })
}

fn vec_of(set: VertexSet) -> Vec<usize> {
    members(set).collect()
}

fn classify_component(
    comp: &Component,
    bounds: &Bounds,
    cache: &TransitionCache,
) -> Result<ComponentCertificate> {
    let g = &comp.graph;
    let root = find_structural_root(g)?;
    let w = root.root;
    let nw = root.layers.layer_set(1);
    let n2 = root.layers.layer(2);
    let case: u8 = if !root.neighborhood_connected {
        1
    } else if root.layers.layer(3).len() == 1 {
        2
    } else if root.neighborhood_alpha <= 1 {
        3
    } else {
        match n2.len() {
            2 => 4,
            1 => 5,
            0 => 6,
            k => return Err(Error::Internal(format!("|N_2({w})| = {k}"))),
        }
    };

    let (structure, certificate) = match case {
        4 => {
            let (p, q) = (n2[0], n2[1]);
            let a = g.neighbors(p) & nw;
            let b = nw & !a;
            if !g.is_clique(a) || !g.is_clique(b) || b & !g.neighbors(q) != 0 {
                return Err(Error::Internal(format!(
                    "case 4 structure fails at root {w}"
                )));
            }
            let s = CaseStructure::TwoFar {
                p,
                q,
                a: vec_of(a),
                b: vec_of(b),
            };
            (Some(s), Certificate::CoTriangleFree)
        }
        5 => case_five(g, w, nw, n2[0])?,
        6 => (None, Certificate::CoTriangleFree),
        _ => (None, generic_certificate(g)),
    };

    let e_expansion = csf_e_with(g, bounds, cache)?;
    if let Certificate::GeneralizedBull { r, s, t, .. } = &certificate {
        if gb_e_closed(*r, *s, *t)? != e_expansion {
            return Err(Error::Internal(format!(
                "closed form of GB({r},{s},{t}) disagrees with X_G"
            )));
        }
    }

    let label = |v: usize| comp.vertices[v];
    let labels = |vs: &[usize]| vs.iter().map(|&v| label(v)).collect::<Vec<_>>();
    let structure = structure.map(|s| match s {
        CaseStructure::TwoFar { p, q, a, b } => CaseStructure::TwoFar {
            p: label(p),
            q: label(q),
            a: labels(&a),
            b: labels(&b),
        },
        CaseStructure::OneFarCliqueB { p, a, b } => CaseStructure::OneFarCliqueB {
            p: label(p),
            a: labels(&a),
            b: labels(&b),
        },
        CaseStructure::OneFarBull {
            p,
            x,
            y,
            a,
            b,
            a2,
            a3,
            b1,
            b2,
        } => CaseStructure::OneFarBull {
            p: label(p),
            x: label(x),
            y: label(y),
            a: labels(&a),
            b: labels(&b),
            a2: labels(&a2),
            a3: labels(&a3),
            b1: labels(&b1),
            b2: labels(&b2),
        },
    });
    let certificate = match certificate {
        Certificate::GeneralizedBull { r, s, t, mapping } => Certificate::GeneralizedBull {
            r,
            s,
            t,
            mapping: mapping.into_iter().map(|(v, b)| (label(v), b)).collect(),
        },
        other => other,
    };
    Ok(ComponentCertificate {
        vertices: comp.vertices.clone(),
        case,
        root: label(w),
        layers: root.layers.layers.iter().map(|l| labels(l)).collect(),
        structure,
        certificate,
        e_expansion,
    })
}

fn case_five(
    g: &Graph,
    w: usize,
    nw: VertexSet,
    p: usize,
) -> Result<(Option<CaseStructure>, Certificate)> {
    let a = g.neighbors(p) & nw;
    let b = nw & !a;
    if !g.is_clique(a) {
        return Err(Error::Internal(format!(
            "[N({p}) ∩ N({w})] is not a clique"
        )));
    }
    let b_size = b.count_ones();
    for v in members(a) {
        let nb = g.neighbors(v) & b;
        if nb.count_ones() + 1 < b_size || !g.is_clique(nb) {
            return Err(Error::Internal(format!(
                "vertex {v} of A sees B in {:?}",
                vec_of(nb)
            )));
        }
    }
    if g.is_clique(b) {
        let s = CaseStructure::OneFarCliqueB {
            p,
            a: vec_of(a),
            b: vec_of(b),
        };
        return Ok((Some(s), Certificate::CoTriangleFree));
    }
    let (mut x, mut y) = members(b)
        .find_map(|u| {
            members(b & !g.neighbors(u) & !(1 << u))
                .find(|&v| v > u)
                .map(|v| (u, v))
        })
        .expect("B is not a clique");
    let (mut a1, mut a2) = (g.neighbors(x) & a, g.neighbors(y) & a);
    if a1 != 0 && a2 != 0 {
        return Err(Error::Internal(format!(
            "both N({x}) ∩ A = {:?} and N({y}) ∩ A = {:?} are nonempty",
            vec_of(a1),
            vec_of(a2)
        )));
    }
    if a1 != 0 {
        std::mem::swap(&mut x, &mut y);
        std::mem::swap(&mut a1, &mut a2);
    }
    debug_assert_eq!(a1, 0);
    let rest = nw & !(1 << x);
    if !g.is_clique(rest) {
        return Err(Error::Internal(format!("N({w}) minus {x} is not a clique")));
    }
    let a3 = b & !(1 << x) & !(1 << y);
    let b1 = g.neighbors(x) & b & !(1 << x);
    let b2 = b & !(1 << x) & !b1;
    let (r, s, t) = (
        a.count_ones() as usize,
        b1.count_ones() as usize + 1,
        b2.count_ones() as usize,
    );
    let mut mapping = vec![(p, 0), (x, 1)];
    let blocks = [a, b1 | 1 << w, b2];
    let mut next = 2;
    for block in blocks {
        for v in members(block) {
            mapping.push((v, next));
            next += 1;
        }
    }
    mapping.sort_unstable();
    let s_ = CaseStructure::OneFarBull {
        p,
        x,
        y,
        a: vec_of(a),
        b: vec_of(b),
        a2: vec_of(a2),
        a3: vec_of(a3),
        b1: vec_of(b1),
        b2: vec_of(b2),
    };
    Ok((Some(s_), Certificate::GeneralizedBull { r, s, t, mapping }))
}

/// Co-triangle-free if `α ≤ 2`, else the first `GB(r, s, t)` (lexicographic
/// in `(r, s, t)`, all positive) the component is isomorphic to.
fn generic_certificate(g: &Graph) -> Certificate {
    if max_stable_set_size(g) <= 2 {
        return Certificate::CoTriangleFree;
    }
    let n = g.n();
    if n < 5 {
        return Certificate::Unresolved;
    }
    let k = n - 2;
    for r in 1..k {
        for s in 1..k - r {
            let t = k - r - s;
            if g.edge_count() != k * (k - 1) / 2 + r + s {
                continue;
            }
            if let Some(f) = isomorphism(g, &build_gb(r, s, t)) {
                let mapping = f.into_iter().enumerate().collect();
                return Certificate::GeneralizedBull { r, s, t, mapping };
            }
        }
    }
    Certificate::Unresolved
}

/// Convenience: `true` when `g` passes [`check_classification_domain`].
pub fn is_2k2_free_unit_interval(g: &Graph) -> bool {
    find_induced(g, &build_pattern(Pattern::TwoK2)).is_none() && crate::graph::is_unit_interval(g)
}
