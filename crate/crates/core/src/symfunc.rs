//! Homogeneous symmetric functions with exact integer coefficients in the
//! monomial (`m`), augmented monomial (`m̃`) and elementary (`e`) bases.
//!
//! The `e → m` change of basis is the 0/1-matrix count
//! `e_λ = Σ_μ M_{λμ} m_μ`, where `M_{λμ}` is the number of 0/1 matrices with
//! row sums `λ` and column sums `μ`. `M_{λμ}` vanishes unless `λ ⊴ μ'` and
//! `M_{λλ'} = 1`, so the inverse is integral and obtained by back-substitution.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{dominance_leq, partitions_of, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Basis {
    #[serde(rename = "M")]
    M,
    #[serde(rename = "MTILDE")]
    MTilde,
    #[serde(rename = "E")]
    E,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::M => "M",
            Basis::MTilde => "MTILDE",
            Basis::E => "E",
        }
    }

    /// Symbol used in text rendering (`m[2,1]`, `mt[2,1]`, `e[2,1]`).
    pub fn symbol(self) -> &'static str {
        match self {
            Basis::M => "m",
            Basis::MTilde => "mt",
            Basis::E => "e",
        }
    }
}

impl std::str::FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "m" => Ok(Basis::M),
            "mtilde" | "mt" => Ok(Basis::MTilde),
            "e" => Ok(Basis::E),
            _ => Err(Error::Domain(format!("unknown basis {s:?}"))),
        }
    }
}

/// A homogeneous symmetric function of a fixed degree in one basis.
///
/// Zero coefficients are never stored, so structural equality is
/// mathematical equality within a basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymPoly {
    basis: Basis,
    degree: usize,
    coeffs: BTreeMap<Partition, BigInt>,
}

impl SymPoly {
    pub fn zero(basis: Basis, degree: usize) -> Self {
        SymPoly {
            basis,
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// A single basis element with coefficient 1.
    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        let mut p = SymPoly::zero(basis, lambda.weight());
        p.coeffs.insert(lambda, BigInt::one());
        p
    }

    /// Builds a polynomial from terms, summing repeated keys.
    pub fn from_terms<I, C>(basis: Basis, degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, C)>,
        C: Into<BigInt>,
    {
        let mut p = SymPoly::zero(basis, degree);
        for (lambda, c) in terms {
            p.add_term(lambda, c.into())?;
        }
        Ok(p)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> BigInt {
        self.coeffs.get(lambda).cloned().unwrap_or_default()
    }

    /// Terms in canonical partition order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn add_term(&mut self, lambda: Partition, c: BigInt) -> Result<()> {
        if lambda.weight() != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: lambda.weight(),
            });
        }
        if c.is_zero() {
            return Ok(());
        }
        let entry = self.coeffs.entry(lambda);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
        Ok(())
    }

    /// `self += factor * other`; both must share basis and degree.
    pub fn add_scaled(&mut self, other: &SymPoly, factor: &BigInt) -> Result<()> {
        self.check_compatible(other)?;
        if factor.is_zero() {
            return Ok(());
        }
        for (lambda, c) in &other.coeffs {
            self.add_term(lambda.clone(), c * factor)?;
        }
        Ok(())
    }

    pub fn scaled(&self, factor: &BigInt) -> SymPoly {
        let mut out = SymPoly::zero(self.basis, self.degree);
        if !factor.is_zero() {
            out.coeffs = self
                .coeffs
                .iter()
                .map(|(k, c)| (k.clone(), c * factor))
                .collect();
        }
        out
    }

    fn check_compatible(&self, other: &SymPoly) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::WrongBasis {
                expected: self.basis.name(),
                found: other.basis.name(),
            });
        }
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        Ok(())
    }

    fn expect_basis(&self, basis: Basis) -> Result<()> {
        if self.basis != basis {
            return Err(Error::WrongBasis {
                expected: basis.name(),
                found: self.basis.name(),
            });
        }
        Ok(())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    /// First term with a negative coefficient, in canonical order.
    pub fn first_negative(&self) -> Option<(&Partition, &BigInt)> {
        self.coeffs.iter().find(|(_, c)| c.is_negative())
    }

    /// Re-expresses the polynomial in `target`, going through `m` if needed.
    pub fn convert_to(&self, target: Basis) -> Result<SymPoly> {
        if self.basis == target {
            return Ok(self.clone());
        }
        let m = match self.basis {
            Basis::M => self.clone(),
            Basis::MTilde => mtilde_to_m(self)?,
            Basis::E => sympoly_e_expand(self)?,
        };
        match target {
            Basis::M => Ok(m),
            Basis::MTilde => m_to_mtilde(&m),
            Basis::E => m_to_e(&m),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&SymPolyJson::from(self))
            .expect("SymPoly JSON is always serializable")
    }

    pub fn from_json(s: &str) -> Result<SymPoly> {
        let raw: SymPolyJson = serde_json::from_str(s).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })?;
        raw.try_into()
    }
}

/// `6·e[3] + 2·e[2,1] - 1·e[1,1,1]`; the zero polynomial renders as `0`.
impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let sym = self.basis.symbol();
        for (i, (lambda, c)) in self.coeffs.iter().enumerate() {
            let parts: Vec<String> = lambda.parts().iter().map(|p| p.to_string()).collect();
            let mag = c.magnitude();
            match (i, c.sign()) {
                (0, Sign::Minus) => write!(f, "-{mag}·{sym}[{}]", parts.join(","))?,
                (0, _) => write!(f, "{mag}·{sym}[{}]", parts.join(","))?,
                (_, Sign::Minus) => write!(f, " - {mag}·{sym}[{}]", parts.join(","))?,
                (_, _) => write!(f, " + {mag}·{sym}[{}]", parts.join(","))?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct SymPolyJson {
    basis: Basis,
    degree: usize,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    partition: Partition,
    coeff: String,
}

impl From<&SymPoly> for SymPolyJson {
    fn from(p: &SymPoly) -> Self {
        SymPolyJson {
            basis: p.basis,
            degree: p.degree,
            terms: p
                .coeffs
                .iter()
                .map(|(k, c)| TermJson {
                    partition: k.clone(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
    }
}

impl TryFrom<SymPolyJson> for SymPoly {
    type Error = Error;

    fn try_from(raw: SymPolyJson) -> Result<SymPoly> {
        let mut p = SymPoly::zero(raw.basis, raw.degree);
        for t in raw.terms {
            let c: BigInt = t.coeff.parse().map_err(|_| Error::Parse {
                line: 0,
                message: format!("bad coefficient {:?}", t.coeff),
            })?;
            if c.is_zero() {
                return Err(Error::Parse {
                    line: 0,
                    message: format!("zero coefficient for {}", t.partition),
                });
            }
            if p.coeffs.contains_key(&t.partition) {
                return Err(Error::Parse {
                    line: 0,
                    message: format!("duplicate term {}", t.partition),
                });
            }
            p.add_term(t.partition, c)?;
        }
        Ok(p)
    }
}

/// One entry `M_{λμ}` of the `e → m` transition matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionEntry {
    pub row: Partition,
    pub col: Partition,
    pub value: BigUint,
}

/// Number of 0/1 matrices with row sums `lambda` and column sums `mu`.
pub fn count_01_matrices(lambda: &Partition, mu: &Partition) -> Result<BigUint> {
    if lambda.weight() != mu.weight() {
        return Err(Error::UnequalWeights {
            left: lambda.weight(),
            right: mu.weight(),
        });
    }
    let mut memo = HashMap::new();
    let caps = lambda.parts().to_vec();
    Ok(fill_columns(&caps, mu.parts(), &mut memo))
}

/// Counts ways to fill the remaining `cols` given the multiset of remaining
/// row capacities `caps` (kept sorted decreasingly, zeros dropped).
fn fill_columns(
    caps: &[usize],
    cols: &[usize],
    memo: &mut HashMap<(Vec<usize>, usize), BigUint>,
) -> BigUint {
    let Some((&col, rest)) = cols.split_first() else {
        return if caps.is_empty() {
            BigUint::one()
        } else {
            BigUint::zero()
        };
    };
    if col > caps.len() {
        return BigUint::zero();
    }
    let key = (caps.to_vec(), cols.len());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    // group equal capacities: (value, how many rows)
    let mut groups: Vec<(usize, usize)> = Vec::new();
    for &c in caps {
        match groups.last_mut() {
            Some((v, k)) if *v == c => *k += 1,
            _ => groups.push((c, 1)),
        }
    }
    let mut total = BigUint::zero();
    let mut take = vec![0usize; groups.len()];
    choose_rows(
        &groups,
        0,
        col,
        &mut take,
        BigUint::one(),
        rest,
        memo,
        &mut total,
    );
    memo.insert(key, total.clone());
    total
}

#[allow(clippy::too_many_arguments)]
fn choose_rows(
    groups: &[(usize, usize)],
    g: usize,
    left: usize,
    take: &mut Vec<usize>,
    ways: BigUint,
    rest: &[usize],
    memo: &mut HashMap<(Vec<usize>, usize), BigUint>,
    total: &mut BigUint,
) {
    if g == groups.len() {
        if left == 0 {
            let mut next = Vec::new();
            for (&(v, k), &t) in groups.iter().zip(take.iter()) {
                next.extend(std::iter::repeat_n(v, k - t));
                if v > 1 {
                    next.extend(std::iter::repeat_n(v - 1, t));
                }
            }
            next.sort_unstable_by(|a, b| b.cmp(a));
            *total += ways * fill_columns(&next, rest, memo);
        }
        return;
    }
    let (_, size) = groups[g];
    for t in 0..=size.min(left) {
        take[g] = t;
        let w = &ways * binomial(size, t);
        choose_rows(groups, g + 1, left - t, take, w, rest, memo, total);
    }
    take[g] = 0;
}

pub(crate) fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Monomial expansion of `e_λ`.
pub fn e_to_m(lambda: &Partition) -> SymPoly {
    let n = lambda.weight();
    let mut out = SymPoly::zero(Basis::M, n);
    for mu in partitions_of(n) {
        if !dominance_leq(lambda, &mu.conjugate()).expect("equal weights") {
            continue;
        }
        let v = count_01_matrices(lambda, &mu).expect("equal weights");
        if !v.is_zero() {
            out.coeffs.insert(mu, BigInt::from(v));
        }
    }
    out
}

/// All nonzero entries of the degree-`n` transition matrix, row-major in
/// canonical order.
pub fn transition_matrix(n: usize) -> Vec<TransitionEntry> {
    partitions_of(n)
        .into_iter()
        .flat_map(|row| {
            let expansion = e_to_m(&row);
            expansion
                .coeffs
                .into_iter()
                .map(move |(col, v)| TransitionEntry {
                    row: row.clone(),
                    col,
                    value: v.to_biguint().expect("counts are nonnegative"),
                })
                .collect::<Vec<_>>()
        })
        .collect()
}

/// Monomial expansions of every `e_λ` of one degree.
#[derive(Debug)]
pub struct TransitionTable {
    degree: usize,
    rows: HashMap<Partition, SymPoly>,
}

impl TransitionTable {
    pub fn new(degree: usize) -> Self {
        let rows = partitions_of(degree).into_iter().map(|l| {
            let exp = e_to_m(&l);
            (l, exp)
        });
        TransitionTable {
            degree,
            rows: rows.collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn row(&self, lambda: &Partition) -> &SymPoly {
        &self.rows[lambda]
    }
}

/// Shared per-degree transition tables. Safe to use from many threads;
/// results never depend on whether a table was cached.
#[derive(Default, Debug)]
pub struct TransitionCache {
    tables: RwLock<HashMap<usize, Arc<TransitionTable>>>,
}

impl TransitionCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Process-wide cache.
    pub fn global() -> &'static TransitionCache {
        static GLOBAL: OnceLock<TransitionCache> = OnceLock::new();
        GLOBAL.get_or_init(TransitionCache::new)
    }

    pub fn table(&self, degree: usize) -> Arc<TransitionTable> {
        if let Some(t) = self
            .tables
            .read()
            .expect("cache lock poisoned")
            .get(&degree)
        {
            return Arc::clone(t);
        }
        let built = Arc::new(TransitionTable::new(degree));
        let mut w = self.tables.write().expect("cache lock poisoned");
        Arc::clone(w.entry(degree).or_insert(built))
    }
}

/// Linear extension of [`e_to_m`] to an `e`-basis polynomial.
pub fn sympoly_e_expand(f: &SymPoly) -> Result<SymPoly> {
    f.expect_basis(Basis::E)?;
    let mut out = SymPoly::zero(Basis::M, f.degree);
    for (lambda, c) in &f.coeffs {
        out.add_scaled(&e_to_m(lambda), c)?;
    }
    Ok(out)
}

/// Inverse of [`sympoly_e_expand`], using a freshly built transition table.
pub fn m_to_e(f: &SymPoly) -> Result<SymPoly> {
    f.expect_basis(Basis::M)?;
    let table = TransitionTable::new(f.degree);
    m_to_e_with(f, &table)
}

/// Back-substitution: the canonically first monomial `m_μ` still present is
/// dominance-maximal in the residual, and `e_{μ'}` is the only remaining
/// `e_λ` whose expansion reaches it, with coefficient 1.
pub fn m_to_e_with(f: &SymPoly, table: &TransitionTable) -> Result<SymPoly> {
    f.expect_basis(Basis::M)?;
    if table.degree != f.degree {
        return Err(Error::DegreeMismatch {
            left: f.degree,
            right: table.degree,
        });
    }
    let mut residual = f.clone();
    let mut out = SymPoly::zero(Basis::E, f.degree);
    while let Some((mu, c)) = residual
        .coeffs
        .iter()
        .next()
        .map(|(k, c)| (k.clone(), c.clone()))
    {
        let lambda = mu.conjugate();
        let row = table.row(&lambda);
        let pivot = row.coeff(&mu);
        if !pivot.is_one() {
            return Err(Error::Internal(format!(
                "M[{lambda:?},{mu:?}] = {pivot}, expected 1"
            )));
        }
        residual.add_scaled(row, &-&c)?;
        if residual.coeffs.contains_key(&mu) {
            return Err(Error::Internal(format!(
                "elimination of {mu:?} left a remainder"
            )));
        }
        out.add_term(lambda, c)?;
    }
    Ok(out)
}

/// `m̃_λ = r_1! r_2! ⋯ m_λ`, applied coefficient-wise.
pub fn mtilde_to_m(f: &SymPoly) -> Result<SymPoly> {
    f.expect_basis(Basis::MTilde)?;
    let mut out = SymPoly::zero(Basis::M, f.degree);
    for (lambda, c) in &f.coeffs {
        let scale = BigInt::from(lambda.multiplicity_product());
        out.coeffs.insert(lambda.clone(), c * scale);
    }
    Ok(out)
}

pub fn m_to_mtilde(f: &SymPoly) -> Result<SymPoly> {
    f.expect_basis(Basis::M)?;
    let mut out = SymPoly::zero(Basis::MTilde, f.degree);
    for (lambda, c) in &f.coeffs {
        let d = BigInt::from(lambda.multiplicity_product());
        if !(c % &d).is_zero() {
            return Err(Error::NotIntegral {
                partition: lambda.to_string(),
                divisor: d.to_string(),
            });
        }
        out.coeffs.insert(lambda.clone(), c / d);
    }
    Ok(out)
}

/// Product in the `e` basis: `e_λ e_μ = e_{λ ∪ μ}`.
pub fn multiply_e(f: &SymPoly, g: &SymPoly) -> Result<SymPoly> {
    f.expect_basis(Basis::E)?;
    g.expect_basis(Basis::E)?;
    let mut out = SymPoly::zero(Basis::E, f.degree + g.degree);
    for (a, ca) in &f.coeffs {
        for (b, cb) in &g.coeffs {
            out.add_term(a.merge(b), ca * cb)?;
        }
    }
    Ok(out)
}
