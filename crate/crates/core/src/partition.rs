//! Integer partitions.
//!
//! A [`Partition`] is stored as its weakly decreasing list of positive parts.
//! The [`Ord`] impl is the canonical listing order used everywhere in the
//! crate: smaller weight first, and within one weight reverse-lexicographic
//! on the parts, so `(n)` comes first and `(1^n)` last. It is a linear
//! extension of dominance (if `μ ◁ λ` then `λ` sorts before `μ`), but it is
//! not the dominance order itself; use [`dominance_leq`] for that.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from arbitrary nonnegative parts: zeros are dropped
    /// and the rest sorted into weakly decreasing order.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Like [`Partition::new`] but rejects input that is not already weakly
    /// decreasing (trailing zeros are still accepted and stripped).
    pub fn from_decreasing(parts: &[usize]) -> Result<Self> {
        let nonzero = parts.iter().rposition(|&p| p > 0).map_or(0, |i| i + 1);
        let (head, tail) = parts.split_at(nonzero);
        if head.contains(&0) || tail.iter().any(|&p| p != 0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has an interior zero"
            )));
        }
        if head.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition {
            parts: head.to_vec(),
        })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        Partition::new(vec![n])
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// `head` followed by `ones` parts equal to 1.
    pub fn with_ones(head: &[usize], ones: usize) -> Self {
        let mut parts = head.to_vec();
        parts.extend(std::iter::repeat_n(1, ones));
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The `i`-th part, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// `λ'_i = |{j : λ_j ≥ i}|`.
    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        let parts = (1..=first)
            .map(|i| self.parts.iter().take_while(|&&p| p >= i).count())
            .collect();
        Partition { parts }
    }

    /// Multiplicities `r_i` as `(i, r_i)` pairs with `r_i > 0`, increasing in `i`.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in self.parts.iter().rev() {
            match out.last_mut() {
                Some((q, r)) if *q == p => *r += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `r_1! r_2! ⋯`, the factor between `m̃_λ` and `m_λ`.
    pub fn multiplicity_product(&self) -> num_bigint::BigUint {
        let mut acc = num_bigint::BigUint::from(1u32);
        for (_, r) in self.multiplicities() {
            for k in 2..=r {
                acc *= k;
            }
        }
        acc
    }

    /// Union of the parts of both partitions, re-sorted.
    pub fn merge(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        parts.extend_from_slice(&self.parts);
        parts.extend_from_slice(&other.parts);
        Partition::new(parts)
    }

    /// Renders as `<1^r1 2^r2 ...>`.
    pub fn to_multiplicity_string(&self) -> String {
        let body: Vec<String> = self
            .multiplicities()
            .into_iter()
            .map(|(i, r)| format!("{i}^{r}"))
            .collect();
        format!("<{}>", body.join(" "))
    }

    fn parse_multiplicity(s: &str) -> Result<Self> {
        let inner = s
            .strip_prefix('<')
            .and_then(|t| t.strip_suffix('>'))
            .ok_or_else(|| Error::InvalidPartition(s.to_string()))?;
        let mut parts = Vec::new();
        for tok in inner.split_whitespace() {
            let (i, r) = tok.split_once('^').ok_or_else(|| {
                Error::InvalidPartition(format!("bad multiplicity token {tok:?}"))
            })?;
            let i: usize = i
                .parse()
                .map_err(|_| Error::InvalidPartition(tok.to_string()))?;
            let r: usize = r
                .parse()
                .map_err(|_| Error::InvalidPartition(tok.to_string()))?;
            if i == 0 {
                return Err(Error::InvalidPartition(format!("zero part in {tok:?}")));
            }
            parts.extend(std::iter::repeat_n(i, r));
        }
        Ok(Partition::new(parts))
    }
}

/// Canonical order: by weight, then reverse-lexicographic on parts.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Plus-separated parts, `3+2+1`; the empty partition renders as `0`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let body: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", body.join("+"))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.parts
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// Accepts both `3+2+1` and `<1^1 2^1 3^1>`.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('<') {
            return Partition::parse_multiplicity(s);
        }
        if s == "0" || s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split('+')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(s.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::from_decreasing(&parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Partition::from_decreasing(&parts).map_err(serde::de::Error::custom)
    }
}

/// Every partition of `n`, in canonical order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    out
}

fn fill(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for p in (1..=max_part.min(remaining)).rev() {
        current.push(p);
        fill(remaining - p, p, current, out);
        current.pop();
    }
}

pub fn conjugate(lambda: &Partition) -> Partition {
    lambda.conjugate()
}

/// `μ ⊴ λ`: every prefix sum of `μ` is at most the matching prefix sum of `λ`.
pub fn dominance_leq(mu: &Partition, lambda: &Partition) -> Result<bool> {
    if mu.weight() != lambda.weight() {
        return Err(Error::UnequalWeights {
            left: mu.weight(),
            right: lambda.weight(),
        });
    }
    let len = mu.len().max(lambda.len());
    let (mut sm, mut sl) = (0, 0);
    for i in 0..len {
        sm += mu.part(i);
        sl += lambda.part(i);
        if sm > sl {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn multiplicity_product(lambda: &Partition) -> num_bigint::BigUint {
    lambda.multiplicity_product()
}
