//! Exhaustive enumeration of small labelled graphs with e-positivity verdicts.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::csf::{e_positivity_with, Bounds};
use crate::error::{Error, Result};
use crate::graph::{build_pattern, find_induced, Graph, Pattern};
use crate::symfunc::TransitionCache;
use crate::theorems::{classify_with, is_2k2_free_unit_interval};

/// Default ceiling on `max_n`; larger runs need an explicit override.
pub const DEFAULT_MAX_N: usize = 7;

/// Largest `n` for which labelled enumeration fits in a `u64` edge mask range.
pub const HARD_MAX_N: usize = 11;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GraphClass {
    All,
    CoTriangleFree,
    TwoK2UnitInterval,
}

impl GraphClass {
    pub fn contains(self, g: &Graph) -> bool {
        match self {
            GraphClass::All => true,
            GraphClass::CoTriangleFree => {
                find_induced(g, &build_pattern(Pattern::CoTriangle)).is_none()
            }
            GraphClass::TwoK2UnitInterval => is_2k2_free_unit_interval(g),
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphClass::All => "all",
            GraphClass::CoTriangleFree => "co-triangle-free",
            GraphClass::TwoK2UnitInterval => "2k2-unit-interval",
        })
    }
}

impl FromStr for GraphClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<GraphClass> {
        match s.to_ascii_lowercase().as_str() {
            "all" => Ok(GraphClass::All),
            "co-triangle-free" => Ok(GraphClass::CoTriangleFree),
            "2k2-unit-interval" => Ok(GraphClass::TwoK2UnitInterval),
            _ => Err(Error::Domain(format!(
                "unknown class {s:?} (expected all, co-triangle-free or 2k2-unit-interval)"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub min_n: usize,
    pub max_n: usize,
    pub class: GraphClass,
    pub connected_only: bool,
    /// Also run the classifier on every in-class graph.
    pub classify: bool,
    pub workers: usize,
    pub bounds: Bounds,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            min_n: 1,
            max_n: 5,
            class: GraphClass::All,
            connected_only: false,
            classify: false,
            workers: 1,
            bounds: Bounds::default(),
        }
    }
}

/// Per-order counters. `checked` counts every labelled graph enumerated;
/// `in_class` those passing the connectivity filter and the class test.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchCounts {
    pub n: usize,
    pub checked: u64,
    pub in_class: u64,
    pub positive: u64,
    pub negative: u64,
    pub certified: u64,
    pub unresolved: u64,
}

impl SearchCounts {
    fn absorb(&mut self, o: &SearchCounts) {
        self.checked += o.checked;
        self.in_class += o.in_class;
        self.positive += o.positive;
        self.negative += o.negative;
        self.certified += o.certified;
        self.unresolved += o.unresolved;
    }
}

/// A graph with a negative e-coefficient; `coeff` sits at `partition`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NegativeInstance {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub partition: Vec<usize>,
    pub coeff: String,
}

/// A graph the pipeline or classifier failed on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchFailure {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub class: GraphClass,
    pub connected_only: bool,
    pub per_n: Vec<SearchCounts>,
    pub totals: SearchCounts,
    pub negatives: Vec<NegativeInstance>,
    pub failures: Vec<SearchFailure>,
}

#[derive(Default)]
struct Partial {
    counts: SearchCounts,
    negatives: Vec<(u64, NegativeInstance)>,
    failures: Vec<(u64, SearchFailure)>,
}

impl Partial {
    fn merge(mut self, other: Partial) -> Partial {
        self.counts.absorb(&other.counts);
        self.negatives.extend(other.negatives);
        self.failures.extend(other.failures);
        self
    }
}

fn examine(n: usize, mask: u64, cfg: &SearchConfig, cache: &TransitionCache, acc: &mut Partial) {
    acc.counts.checked += 1;
    let g = Graph::from_edge_mask(n, mask);
    if cfg.connected_only && !g.is_connected() {
        return;
    }
    if !cfg.class.contains(&g) {
        return;
    }
    acc.counts.in_class += 1;
    let fail = |message: String| SearchFailure {
        n,
        edges: g.edges(),
        message,
    };
    match e_positivity_with(&g, &cfg.bounds, cache) {
        Ok(v) => match v.witness {
            None => acc.counts.positive += 1,
            Some((lambda, c)) => {
                acc.counts.negative += 1;
                acc.negatives.push((
                    mask,
                    NegativeInstance {
                        n,
                        edges: g.edges(),
                        partition: lambda.parts().to_vec(),
                        coeff: c.to_string(),
                    },
                ));
            }
        },
        Err(e) => {
            acc.failures.push((mask, fail(e.to_string())));
            return;
        }
    }
    if cfg.classify {
        match classify_with(&g, &cfg.bounds, cache) {
            Ok(c) if c.is_resolved() => acc.counts.certified += 1,
            Ok(_) => acc.counts.unresolved += 1,
            Err(e) => acc.failures.push((mask, fail(e.to_string()))),
        }
    }
}

/// Runs the enumeration on a dedicated pool of `cfg.workers` threads.
pub fn run_search(cfg: &SearchConfig) -> Result<SearchReport> {
    if cfg.max_n > HARD_MAX_N {
        return Err(Error::ResourceLimit {
            what: "search",
            limit: HARD_MAX_N,
            actual: cfg.max_n,
        });
    }
    if cfg.workers == 0 {
        return Err(Error::Domain("worker count must be at least 1".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .map_err(|e| Error::Internal(e.to_string()))?;
    let cache = TransitionCache::global();
    let mut per_n = Vec::new();
    let mut totals = SearchCounts::default();
    let mut negatives = Vec::new();
    let mut failures = Vec::new();
    for n in cfg.min_n..=cfg.max_n {
        let bits = n * n.saturating_sub(1) / 2;
        let part = pool.install(|| {
            (0..1u64 << bits)
                .into_par_iter()
                .fold(Partial::default, |mut acc, mask| {
                    examine(n, mask, cfg, cache, &mut acc);
                    acc
                })
                .reduce(Partial::default, Partial::merge)
        });
        let mut counts = part.counts;
        counts.n = n;
        totals.absorb(&counts);
        per_n.push(counts);
        let mut neg = part.negatives;
        neg.sort_unstable_by_key(|(m, _)| *m);
        negatives.extend(neg.into_iter().map(|(_, x)| x));
        let mut fl = part.failures;
        fl.sort_by_key(|(m, _)| *m);
        failures.extend(fl.into_iter().map(|(_, x)| x));
    }
    Ok(SearchReport {
        class: cfg.class,
        connected_only: cfg.connected_only,
        per_n,
        totals,
        negatives,
        failures,
    })
}
