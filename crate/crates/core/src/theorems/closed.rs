//! Closed-form expansions of `X_G` for generalised pyramids and bulls.
//!
//! All formulas assume `r, s, t ≥ 1`. Pyramids with a zero parameter are
//! still valid graphs; compute them with [`crate::csf`] instead.

use num_bigint::BigInt;

use crate::csf::factorial;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::symfunc::{mtilde_to_m, Basis, SymPoly};

/// Parameters above this are rejected so the polynomial parts fit in `i128`.
pub const MAX_PARAMETER: usize = 1 << 20;

fn check_params(family: &str, r: usize, s: usize, t: usize) -> Result<(i128, i128, i128)> {
    if r == 0 || s == 0 || t == 0 {
        return Err(Error::Domain(format!(
            "{family} closed forms require r, s, t >= 1 (got {r}, {s}, {t}); \
             compute X_G of build_{}({r}, {s}, {t}) from its stable partitions instead",
            family.to_ascii_lowercase()
        )));
    }
    if r.max(s).max(t) > MAX_PARAMETER {
        return Err(Error::Domain(format!(
            "parameters above {MAX_PARAMETER} are not supported"
        )));
    }
    Ok((r as i128, s as i128, t as i128))
}

/// `m̃` expansion of `X_{GP(r,s,t)}`.
pub fn gp_mtilde_closed(r: usize, s: usize, t: usize) -> Result<SymPoly> {
    let (ri, si, ti) = check_params("GP", r, s, t)?;
    let i = r + s + t;
    SymPoly::from_terms(
        Basis::MTilde,
        i + 3,
        [
            (Partition::with_ones(&[3], i), BigInt::from(1)),
            (
                Partition::with_ones(&[2, 2, 2], i - 3),
                BigInt::from(ri * si * ti),
            ),
            (
                Partition::with_ones(&[2, 2], i - 1),
                BigInt::from(ri * ti + ri * si + si * ti + ri + si + ti),
            ),
            (Partition::with_ones(&[2], i + 1), BigInt::from(i + 3)),
            (Partition::column(i + 3), BigInt::from(1)),
        ],
    )
}

/// Monomial expansion of `X_{GP(r,s,t)}`.
pub fn gp_m_closed(r: usize, s: usize, t: usize) -> Result<SymPoly> {
    mtilde_to_m(&gp_mtilde_closed(r, s, t)?)
}

/// The five coefficients of the elementary expansion of `X_{GP(r,s,t)}`:
///
/// `A e_{(i+1,1,1)} + B e_{(i,3)} + C e_{(i+1,2)} + D e_{(i+2,1)} + E e_{(i+3)}`
/// with `i = r + s + t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GpCoefficients {
    pub r: usize,
    pub s: usize,
    pub t: usize,
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
    pub e: BigInt,
}

impl GpCoefficients {
    pub fn new(r: usize, s: usize, t: usize) -> Result<Self> {
        let (r_, s_, t_) = check_params("GP", r, s, t)?;
        let i = r + s + t;
        let (r, s, t) = (r_, s_, t_);
        let a = factorial(i);
        let b = factorial(i - 3) * 6i128 * r * s * t;
        let c_bracket: i128 = Self::c_groups_raw(r, s, t).iter().sum();
        let c = factorial(i - 3) * 2i128 * (i as i128 - 1) * c_bracket;
        let d_rest = 3 * s * s * t
            + 5 * r * s * s * t
            + 2 * s.pow(3) * t
            + 5 * r * r * s * t
            + 2 * r.pow(3) * t
            + 2 * r * r * t * t
            + 3 * s * t * t
            + 5 * r * s * t * t
            + 2 * s * s * t * t
            + t.pow(3)
            + 2 * r * t.pow(3)
            + 2 * s * t.pow(3)
            + t.pow(4)
            + 2 * r.pow(3) * s
            + 2 * r * r * s * s
            + s.pow(3)
            + 2 * r * s.pow(3)
            + s.pow(4);
        let d_bracket: i128 = Self::d_groups_raw(r, s, t).iter().sum::<i128>() + d_rest;
        let d = factorial(i - 2) * d_bracket;
        let e = factorial(i - 1) * (3 + r + s + t) * (r + s) * (r + t) * (s + t);
        Ok(GpCoefficients {
            r: r_ as usize,
            s: s_ as usize,
            t: t_ as usize,
            a,
            b,
            c,
            d,
            e,
        })
    }

    fn c_groups_raw(r: i128, s: i128, t: i128) -> [i128; 3] {
        [
            r * r * s + r * s * s - 2 * r * s,
            r * t * t + r * r * t - 2 * r * t,
            s * s * t + s * t * t - 2 * s * t,
        ]
    }

    fn d_groups_raw(r: i128, s: i128, t: i128) -> [i128; 6] {
        [
            r.pow(4) + r.pow(3) - 2 * r * r,
            3 * r * r * s - 2 * r * s,
            3 * r * s * s - 2 * s * s,
            3 * r * r * t - 2 * r * t,
            9 * r * s * t - 2 * s * t,
            3 * r * t * t - 2 * t * t,
        ]
    }

    /// The three summands of the bracket in `C`; each is nonnegative for
    /// positive parameters.
    pub fn c_groups(&self) -> [i128; 3] {
        Self::c_groups_raw(self.r as i128, self.s as i128, self.t as i128)
    }

    /// The six grouped summands of the bracket in `D` that carry negative
    /// monomials; each is nonnegative for positive parameters.
    pub fn d_groups(&self) -> [i128; 6] {
        Self::d_groups_raw(self.r as i128, self.s as i128, self.t as i128)
    }

    pub fn is_nonnegative(&self) -> bool {
        use num_traits::Signed;
        [&self.a, &self.b, &self.c, &self.d, &self.e]
            .iter()
            .all(|x| !x.is_negative())
    }

    pub fn to_sympoly(&self) -> SymPoly {
        let i = self.r + self.s + self.t;
        SymPoly::from_terms(
            Basis::E,
            i + 3,
            [
                (Partition::new(vec![i + 1, 1, 1]), self.a.clone()),
                (Partition::new(vec![i, 3]), self.b.clone()),
                (Partition::new(vec![i + 1, 2]), self.c.clone()),
                (Partition::new(vec![i + 2, 1]), self.d.clone()),
                (Partition::row(i + 3), self.e.clone()),
            ],
        )
        .expect("all keys have weight i + 3")
    }
}

/// Elementary expansion of `X_{GP(r,s,t)}` with its named coefficients.
pub fn gp_e_closed(r: usize, s: usize, t: usize) -> Result<(GpCoefficients, SymPoly)> {
    let coeffs = GpCoefficients::new(r, s, t)?;
    let poly = coeffs.to_sympoly();
    Ok((coeffs, poly))
}

/// `m̃` expansion of `X_{GB(r,s,t)}`.
pub fn gb_mtilde_closed(r: usize, s: usize, t: usize) -> Result<SymPoly> {
    let (ri, si, ti) = check_params("GB", r, s, t)?;
    let k = r + s + t;
    SymPoly::from_terms(
        Basis::MTilde,
        k + 2,
        [
            (Partition::with_ones(&[3], k - 1), BigInt::from(ti)),
            (
                Partition::with_ones(&[2, 2], k - 2),
                BigInt::from(ti * (ti - 1) + ti * ri + si * ri + si * ti),
            ),
            (
                Partition::with_ones(&[2], k),
                BigInt::from(1 + 2 * ti + si + ri),
            ),
            (Partition::column(k + 2), BigInt::from(1)),
        ],
    )
}

pub fn gb_m_closed(r: usize, s: usize, t: usize) -> Result<SymPoly> {
    mtilde_to_m(&gb_mtilde_closed(r, s, t)?)
}

/// Elementary expansion of `X_{GB(r,s,t)}`, all four terms scaled by `(k-2)!`
/// with `k = r + s + t`.
pub fn gb_e_closed(r: usize, s: usize, t: usize) -> Result<SymPoly> {
    let (r_, s_, t_) = check_params("GB", r, s, t)?;
    let k = r + s + t;
    let f = factorial(k - 2);
    let (r, s, t, ki) = (r_, s_, t_, k as i128);
    let c311 = (ki - 1) * t;
    let c32 = 2 * r * s;
    let c41 = r.pow(3)
        + r * r * s
        + r * s * s
        + s.pow(3)
        + 2 * r * r * t
        + 2 * r * s * t
        + 2 * s * s * t
        + r * t * t
        + s * t * t
        - r
        - s;
    let c5 = (ki + 2) * (ki - 1) * r * s;
    SymPoly::from_terms(
        Basis::E,
        k + 2,
        [
            (Partition::new(vec![k, 1, 1]), &f * c311),
            (Partition::new(vec![k, 2]), &f * c32),
            (Partition::new(vec![k + 1, 1]), &f * c41),
            (Partition::row(k + 2), &f * c5),
        ],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::csf::{csf_e, csf_m};
    use crate::graph::{build_gb, build_gp};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn pyramid_m_examples() {
        let want = SymPoly::from_terms(
            Basis::MTilde,
            6,
            [
                (p(&[3, 1, 1, 1]), 1),
                (p(&[2, 2, 2]), 1),
                (p(&[2, 2, 1, 1]), 6),
                (p(&[2, 1, 1, 1, 1]), 6),
                (Partition::column(6), 1),
            ],
        )
        .unwrap();
        assert_eq!(gp_mtilde_closed(1, 1, 1).unwrap(), want);
        assert_eq!(
            gp_mtilde_closed(2, 1, 1).unwrap().coeff(&p(&[2, 2, 2, 1])),
            2.into()
        );
        assert_eq!(
            gp_m_closed(1, 1, 1).unwrap(),
            csf_m(&build_gp(1, 1, 1)).unwrap()
        );
    }

    #[test]
    fn pyramid_e_examples() {
        let (c, poly) = gp_e_closed(1, 1, 1).unwrap();
        assert_eq!(
            [&c.a, &c.b, &c.c, &c.d, &c.e],
            [&6.into(), &6.into(), &0.into(), &54.into(), &96.into()]
        );
        assert_eq!(c.c_groups(), [0, 0, 0]);
        assert_eq!(poly, csf_e(&build_gp(1, 1, 1)).unwrap());
        // C vanishes, so only four terms are stored
        assert_eq!(poly.len(), 4);
    }

    #[test]
    fn pyramid_coefficients_nonnegative_and_symmetric() {
        for r in 1..=4 {
            for s in 1..=4 {
                for t in 1..=4 {
                    let c = GpCoefficients::new(r, s, t).unwrap();
                    assert!(c.is_nonnegative(), "{r} {s} {t}");
                    assert!(c.c_groups().iter().all(|&g| g >= 0));
                    assert!(c.d_groups().iter().all(|&g| g >= 0));
                    let base = gp_e_closed(r, s, t).unwrap().1;
                    let m = gp_m_closed(r, s, t).unwrap();
                    for (a, b, cc) in [(r, t, s), (s, r, t), (s, t, r), (t, r, s), (t, s, r)] {
                        assert_eq!(gp_e_closed(a, b, cc).unwrap().1, base);
                        assert_eq!(gp_m_closed(a, b, cc).unwrap(), m);
                    }
                }
            }
        }
    }

    #[test]
    fn bull_examples() {
        let want = SymPoly::from_terms(
            Basis::MTilde,
            5,
            [
                (p(&[3, 1, 1]), 1),
                (p(&[2, 2, 1]), 3),
                (p(&[2, 1, 1, 1]), 5),
                (Partition::column(5), 1),
            ],
        )
        .unwrap();
        assert_eq!(gb_mtilde_closed(1, 1, 1).unwrap(), want);
        assert_eq!(
            gb_mtilde_closed(1, 1, 2).unwrap().coeff(&p(&[3, 1, 1, 1])),
            2.into()
        );
        assert_eq!(
            gb_m_closed(2, 2, 2).unwrap(),
            csf_m(&build_gb(2, 2, 2)).unwrap()
        );

        let want = SymPoly::from_terms(
            Basis::E,
            5,
            [
                (p(&[3, 1, 1]), 2),
                (p(&[3, 2]), 2),
                (p(&[4, 1]), 10),
                (p(&[5]), 10),
            ],
        )
        .unwrap();
        assert_eq!(gb_e_closed(1, 1, 1).unwrap(), want);
        assert_eq!(
            gb_e_closed(2, 1, 1).unwrap(),
            csf_e(&build_gb(2, 1, 1)).unwrap()
        );
        for r in 1..=3 {
            for s in 1..=3 {
                for t in 1..=3 {
                    assert!(gb_e_closed(r, s, t).unwrap().is_nonnegative());
                }
            }
        }
    }

    #[test]
    fn zero_parameters_rejected() {
        assert!(matches!(gp_m_closed(0, 1, 1), Err(Error::Domain(_))));
        assert!(matches!(gp_e_closed(1, 0, 1), Err(Error::Domain(_))));
        assert!(matches!(gb_m_closed(1, 1, 0), Err(Error::Domain(_))));
        assert!(matches!(gb_e_closed(0, 0, 0), Err(Error::Domain(_))));
    }
}
