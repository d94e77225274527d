//! Exhaustive comparison of the closed forms against the census pipeline.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::csf::{csf_e_with, csf_m_bounded, Bounds};
use crate::error::{Error, Result};
use crate::graph::{build_gb, build_gp};
use crate::symfunc::{SymPoly, TransitionCache};
use crate::theorems::closed::{gb_e_closed, gb_m_closed, gp_e_closed, gp_m_closed};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    GP,
    GB,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::GP => "GP",
            Family::GB => "GB",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        match s.to_ascii_lowercase().as_str() {
            "gp" => Ok(Family::GP),
            "gb" => Ok(Family::GB),
            _ => Err(Error::Domain(format!(
                "unknown family {s:?} (expected gp or gb)"
            ))),
        }
    }
}

/// One row of a sweep report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepEntry {
    pub family: Family,
    pub r: usize,
    pub s: usize,
    pub t: usize,
    pub m_match: bool,
    pub e_match: bool,
    pub e_nonneg: bool,
    pub millis: u64,
}

impl SweepEntry {
    pub fn passed(&self) -> bool {
        self.m_match && self.e_match && self.e_nonneg
    }
}

fn closed_forms(family: Family, r: usize, s: usize, t: usize) -> Result<(SymPoly, SymPoly)> {
    match family {
        Family::GP => Ok((gp_m_closed(r, s, t)?, gp_e_closed(r, s, t)?.1)),
        Family::GB => Ok((gb_m_closed(r, s, t)?, gb_e_closed(r, s, t)?)),
    }
}

/// Checks one triple. Errors from the pipeline count as mismatches.
pub fn verify_triple(
    family: Family,
    r: usize,
    s: usize,
    t: usize,
    bounds: &Bounds,
    cache: &TransitionCache,
) -> SweepEntry {
    let start = Instant::now();
    let g = match family {
        Family::GP => build_gp(r, s, t),
        Family::GB => build_gb(r, s, t),
    };
    let (m_match, e_match, e_nonneg) = match closed_forms(family, r, s, t) {
        Ok((m, e)) => {
            let m_match = csf_m_bounded(&g, bounds).map(|x| x == m).unwrap_or(false);
            let e_match = csf_e_with(&g, bounds, cache)
                .map(|x| x == e)
                .unwrap_or(false);
            (m_match, e_match, e.is_nonnegative())
        }
        Err(_) => (false, false, false),
    };
    SweepEntry {
        family,
        r,
        s,
        t,
        m_match,
        e_match,
        e_nonneg,
        millis: start.elapsed().as_millis() as u64,
    }
}

/// Checks every `1 ≤ r, s, t ≤ max_param`, reported in lexicographic order.
pub fn verify_sweep(family: Family, max_param: usize) -> Vec<SweepEntry> {
    verify_sweep_with(
        family,
        max_param,
        &Bounds::default(),
        TransitionCache::global(),
    )
}

/// As [`verify_sweep`], evaluating triples on the current rayon pool.
pub fn verify_sweep_with(
    family: Family,
    max_param: usize,
    bounds: &Bounds,
    cache: &TransitionCache,
) -> Vec<SweepEntry> {
    let triples: Vec<(usize, usize, usize)> = (1..=max_param)
        .flat_map(|r| (1..=max_param).flat_map(move |s| (1..=max_param).map(move |t| (r, s, t))))
        .collect();
    triples
        .par_iter()
        .map(|&(r, s, t)| verify_triple(family, r, s, t, bounds, cache))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweeps_pass() {
        let gp = verify_sweep(Family::GP, 2);
        assert_eq!(gp.len(), 8);
        assert!(gp.iter().all(SweepEntry::passed));
        let order: Vec<_> = gp.iter().map(|e| (e.r, e.s, e.t)).collect();
        let mut sorted = order.clone();
        sorted.sort_unstable();
        assert_eq!(order, sorted);

        let gb = verify_sweep(Family::GB, 2);
        assert_eq!(gb.len(), 8);
        assert!(gb.iter().all(SweepEntry::passed));

        let one = verify_sweep(Family::GP, 1);
        assert_eq!(one.len(), 1);
        assert!(one[0].passed());
    }

    #[test]
    fn report_json_shape() {
        let e = SweepEntry {
            family: Family::GB,
            r: 1,
            s: 2,
            t: 3,
            m_match: true,
            e_match: true,
            e_nonneg: true,
            millis: 4,
        };
        let j = serde_json::to_string(&e).unwrap();
        assert_eq!(
            j,
            r#"{"family":"GB","r":1,"s":2,"t":3,"m_match":true,"e_match":true,"e_nonneg":true,"millis":4}"#
        );
        assert_eq!(serde_json::from_str::<SweepEntry>(&j).unwrap(), e);
    }
}
