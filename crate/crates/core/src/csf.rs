//! Chromatic symmetric functions.
//!
//! `X_G = Σ_λ a_λ m̃_λ` where `a_λ` counts stable partitions of type `λ`.
//! The census enumerates stable set partitions directly; the coloring-count
//! oracle counts proper colorings with prescribed color-class sizes and is
//! kept independent of it.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::error::{Error, Result};
use crate::graph::{members, Graph, VertexSet};
use crate::partition::Partition;
use crate::symfunc::{m_to_e_with, mtilde_to_m, Basis, SymPoly, TransitionCache, TransitionTable};

/// Size limits for the exponential routines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_census_vertices: usize,
    pub max_oracle_vertices: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_census_vertices: 16,
            max_oracle_vertices: 9,
        }
    }
}

/// Number of stable partitions of each type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableCensus {
    pub degree: usize,
    pub counts: BTreeMap<Partition, BigUint>,
}

impl StableCensus {
    pub fn count(&self, lambda: &Partition) -> BigUint {
        self.counts.get(lambda).cloned().unwrap_or_default()
    }

    /// The census read as an `m̃`-basis polynomial.
    pub fn to_mtilde(&self) -> SymPoly {
        SymPoly::from_terms(
            Basis::MTilde,
            self.degree,
            self.counts
                .iter()
                .map(|(k, v)| (k.clone(), BigInt::from(v.clone()))),
        )
        .expect("census keys have the graph's weight")
    }
}

pub fn stable_partition_census(g: &Graph) -> Result<StableCensus> {
    stable_partition_census_bounded(g, &Bounds::default())
}

pub fn stable_partition_census_bounded(g: &Graph, bounds: &Bounds) -> Result<StableCensus> {
    if g.n() > bounds.max_census_vertices {
        return Err(Error::ResourceLimit {
            what: "stable partition census",
            limit: bounds.max_census_vertices,
            actual: g.n(),
        });
    }
    let mut counts: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    let mut blocks: Vec<VertexSet> = Vec::with_capacity(g.n());
    place(g, 0, &mut blocks, &mut counts);
    let counts = counts
        .into_iter()
        .map(|(sizes, c)| (Partition::new(sizes), BigUint::from(c)))
        .collect();
    Ok(StableCensus {
        degree: g.n(),
        counts,
    })
}

/// Vertex `v` (the least unplaced one) joins each existing block it has no
/// neighbour in, or opens a new block.
fn place(g: &Graph, v: usize, blocks: &mut Vec<VertexSet>, counts: &mut BTreeMap<Vec<usize>, u64>) {
    if v == g.n() {
        let mut sizes: Vec<usize> = blocks.iter().map(|b| b.count_ones() as usize).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        *counts.entry(sizes).or_insert(0) += 1;
        return;
    }
    let nv = g.neighbors(v);
    for i in 0..blocks.len() {
        if blocks[i] & nv == 0 {
            blocks[i] |= 1 << v;
            place(g, v + 1, blocks, counts);
            blocks[i] &= !(1 << v);
        }
    }
    blocks.push(1 << v);
    place(g, v + 1, blocks, counts);
    blocks.pop();
}

/// `X_G` in the monomial basis.
pub fn csf_m(g: &Graph) -> Result<SymPoly> {
    csf_m_bounded(g, &Bounds::default())
}

pub fn csf_m_bounded(g: &Graph, bounds: &Bounds) -> Result<SymPoly> {
    let census = stable_partition_census_bounded(g, bounds)?;
    mtilde_to_m(&census.to_mtilde())
}

/// `X_G` in the elementary basis, using the process-wide transition cache.
pub fn csf_e(g: &Graph) -> Result<SymPoly> {
    csf_e_with(g, &Bounds::default(), TransitionCache::global())
}

pub fn csf_e_with(g: &Graph, bounds: &Bounds, cache: &TransitionCache) -> Result<SymPoly> {
    let m = csf_m_bounded(g, bounds)?;
    m_to_e_with(&m, &cache.table(g.n()))
}

/// Same as [`csf_e`] but with a private, freshly built transition table.
pub fn csf_e_uncached(g: &Graph) -> Result<SymPoly> {
    let m = csf_m(g)?;
    m_to_e_with(&m, &TransitionTable::new(g.n()))
}

/// Number of proper colorings `κ : V → {1..k}` with `|κ⁻¹(i)| = λ_i`, which
/// is the coefficient of `m_λ` in `X_G`.
pub fn coloring_count_oracle(g: &Graph, lambda: &Partition) -> Result<BigUint> {
    coloring_count_oracle_bounded(g, lambda, &Bounds::default())
}

pub fn coloring_count_oracle_bounded(
    g: &Graph,
    lambda: &Partition,
    bounds: &Bounds,
) -> Result<BigUint> {
    if lambda.weight() != g.n() {
        return Err(Error::UnequalWeights {
            left: lambda.weight(),
            right: g.n(),
        });
    }
    if g.n() > bounds.max_oracle_vertices {
        return Err(Error::ResourceLimit {
            what: "coloring oracle",
            limit: bounds.max_oracle_vertices,
            actual: g.n(),
        });
    }
    let mut remaining = lambda.parts().to_vec();
    let mut colour = vec![usize::MAX; g.n()];
    Ok(BigUint::from(colour_from(
        g,
        0,
        &mut remaining,
        &mut colour,
    )))
}

fn colour_from(g: &Graph, v: usize, remaining: &mut [usize], colour: &mut [usize]) -> u64 {
    if v == g.n() {
        return 1;
    }
    let mut total = 0;
    for c in 0..remaining.len() {
        if remaining[c] == 0 {
            continue;
        }
        if members(g.neighbors(v)).any(|u| u < v && colour[u] == c) {
            continue;
        }
        remaining[c] -= 1;
        colour[v] = c;
        total += colour_from(g, v + 1, remaining, colour);
        colour[v] = usize::MAX;
        remaining[c] += 1;
    }
    total
}

/// Outcome of an e-positivity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EposVerdict {
    pub e_expansion: SymPoly,
    pub positive: bool,
    /// First negative term in canonical order.
    pub witness: Option<(Partition, BigInt)>,
}

impl EposVerdict {
    pub fn from_expansion(e_expansion: SymPoly) -> Self {
        let witness = e_expansion
            .first_negative()
            .map(|(k, c)| (k.clone(), c.clone()));
        EposVerdict {
            positive: witness.is_none(),
            witness,
            e_expansion,
        }
    }
}

pub fn e_positivity(g: &Graph) -> Result<EposVerdict> {
    Ok(EposVerdict::from_expansion(csf_e(g)?))
}

pub fn e_positivity_with(
    g: &Graph,
    bounds: &Bounds,
    cache: &TransitionCache,
) -> Result<EposVerdict> {
    Ok(EposVerdict::from_expansion(csf_e_with(g, bounds, cache)?))
}

/// `n!` as a big integer.
pub fn factorial(n: usize) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}
