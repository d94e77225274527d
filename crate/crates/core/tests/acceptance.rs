//! Acceptance criteria. Every comparison is exact: integer coefficients must
//! match with zero tolerance. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any criterion fails.

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use chromsym::csf::{
    coloring_count_oracle, csf_e, csf_m, e_positivity, factorial, stable_partition_census,
};
use chromsym::graph::{build_gb, build_gp, build_pattern, complete, Graph, Pattern};
use chromsym::partition::{partitions_of, Partition};
use chromsym::search::{run_search, GraphClass, SearchConfig};
use chromsym::symfunc::{e_to_m, Basis, SymPoly};
use chromsym::theorems::{gb_e_closed, gb_m_closed, gp_e_closed, gp_m_closed};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn triples() -> impl Iterator<Item = (usize, usize, usize)> {
    (1..=3).flat_map(|r| (1..=3).flat_map(move |s| (1..=3).map(move |t| (r, s, t))))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn gp_monomial() -> Outcome {
    for (r, s, t) in triples() {
        let closed = gp_m_closed(r, s, t).map_err(|e| e.to_string())?;
        let brute = csf_m(&build_gp(r, s, t)).map_err(|e| e.to_string())?;
        ensure(closed == brute, || {
            format!("GP({r},{s},{t}): {closed} vs {brute}")
        })?;
    }
    Ok("27 triples match exactly".into())
}

fn gp_elementary() -> Outcome {
    for (r, s, t) in triples() {
        let (c, closed) = gp_e_closed(r, s, t).map_err(|e| e.to_string())?;
        let brute = csf_e(&build_gp(r, s, t)).map_err(|e| e.to_string())?;
        ensure(closed == brute, || {
            format!("GP({r},{s},{t}): {closed} vs {brute}")
        })?;
        for (name, v) in [
            ("A", &c.a),
            ("B", &c.b),
            ("C", &c.c),
            ("D", &c.d),
            ("E", &c.e),
        ] {
            ensure(!v.is_negative(), || {
                format!("GP({r},{s},{t}): {name} = {v}")
            })?;
        }
    }
    Ok("27 triples match exactly, A..E >= 0".into())
}

fn gb_both() -> Outcome {
    for (r, s, t) in triples() {
        let g = build_gb(r, s, t);
        let m = gb_m_closed(r, s, t).map_err(|e| e.to_string())?;
        let e = gb_e_closed(r, s, t).map_err(|e| e.to_string())?;
        ensure(m == csf_m(&g).map_err(|e| e.to_string())?, || {
            format!("GB({r},{s},{t}) monomial mismatch")
        })?;
        ensure(e == csf_e(&g).map_err(|e| e.to_string())?, || {
            format!("GB({r},{s},{t}) elementary mismatch")
        })?;
        ensure(e.is_nonnegative(), || {
            format!("GB({r},{s},{t}) has a negative e-coefficient: {e}")
        })?;
    }
    Ok("27 triples match exactly, all e-coefficients >= 0".into())
}

fn binom(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, j| acc * (n - j) as i64 / (j + 1) as i64)
}

fn m_poly(degree: usize, terms: &[(Partition, i64)]) -> SymPoly {
    SymPoly::from_terms(
        Basis::M,
        degree,
        terms.iter().map(|(p, c)| (p.clone(), BigInt::from(*c))),
    )
    .unwrap()
}

fn transition_identities() -> Outcome {
    for i in 3..=8usize {
        let n = i + 3;
        let ones = |head: &[usize], k: usize| Partition::with_ones(head, k);
        let cases = [
            (
                Partition::new(vec![i, 3]),
                vec![
                    (ones(&[2, 2, 2], i - 3), 1),
                    (ones(&[2, 2], i - 1), (i - 1) as i64),
                    (ones(&[2], i + 1), binom(i + 1, 2)),
                    (Partition::column(n), binom(i + 3, 3)),
                ],
            ),
            (
                Partition::new(vec![i + 1, 1, 1]),
                vec![
                    (ones(&[3], i), 1),
                    (ones(&[2], i + 1), (2 * i + 3) as i64),
                    (ones(&[2, 2], i - 1), 2),
                    (Partition::column(n), 2 * binom(i + 3, 2)),
                ],
            ),
            (
                Partition::new(vec![i + 1, 2]),
                vec![
                    (ones(&[2, 2], i - 1), 1),
                    (ones(&[2], i + 1), (i + 1) as i64),
                    (Partition::column(n), binom(i + 3, 2)),
                ],
            ),
            (
                Partition::new(vec![i + 2, 1]),
                vec![
                    (ones(&[2], i + 1), 1),
                    (Partition::column(n), (i + 3) as i64),
                ],
            ),
            (Partition::row(n), vec![(Partition::column(n), 1)]),
        ];
        for (lambda, terms) in cases {
            let got = e_to_m(&lambda);
            let want = m_poly(n, &terms);
            ensure(got == want, || {
                format!("i={i}, e[{lambda}]: {got} vs {want}")
            })?;
        }
    }
    Ok("five identities for each i in 3..=8".into())
}

fn oracle_equivalence() -> Outcome {
    let lambdas = partitions_of(5);
    let mut compared = 0;
    for mask in 0..1u64 << 10 {
        let g = Graph::from_edge_mask(5, mask);
        let census = stable_partition_census(&g).map_err(|e| e.to_string())?;
        let m = census
            .to_mtilde()
            .convert_to(Basis::M)
            .map_err(|e| e.to_string())?;
        for lambda in &lambdas {
            let oracle = coloring_count_oracle(&g, lambda).map_err(|e| e.to_string())?;
            ensure(BigInt::from(oracle.clone()) == m.coeff(lambda), || {
                format!(
                    "mask {mask}, {lambda}: census {} vs oracle {oracle}",
                    m.coeff(lambda)
                )
            })?;
            compared += 1;
        }
    }
    Ok(format!("1024 graphs, {compared} coefficients agree"))
}

fn main_theorem() -> Outcome {
    let cfg = SearchConfig {
        min_n: 1,
        max_n: 6,
        class: GraphClass::TwoK2UnitInterval,
        connected_only: true,
        classify: true,
        workers: 4,
        ..SearchConfig::default()
    };
    let r = run_search(&cfg).map_err(|e| e.to_string())?;
    let t = &r.totals;
    ensure(r.failures.is_empty(), || {
        format!("failures: {:?}", r.failures)
    })?;
    ensure(t.negative == 0, || {
        format!("{} negative instances: {:?}", t.negative, r.negatives)
    })?;
    ensure(t.certified == t.in_class && t.unresolved == 0, || {
        format!(
            "{} of {} certified, {} unresolved",
            t.certified, t.in_class, t.unresolved
        )
    })?;
    Ok(format!(
        "{} connected graphs in class, 0 negative, all certified",
        t.in_class
    ))
}

fn co_triangle_free() -> Outcome {
    let cfg = SearchConfig {
        min_n: 1,
        max_n: 6,
        class: GraphClass::CoTriangleFree,
        workers: 4,
        ..SearchConfig::default()
    };
    let r = run_search(&cfg).map_err(|e| e.to_string())?;
    ensure(r.failures.is_empty(), || {
        format!("failures: {:?}", r.failures)
    })?;
    ensure(r.totals.negative == 0, || {
        format!("negative instances: {:?}", r.negatives)
    })?;
    Ok(format!("{} graphs in class, 0 negative", r.totals.in_class))
}

fn sanity() -> Outcome {
    for n in 1..=6 {
        let want = SymPoly::from_terms(Basis::E, n, [(Partition::row(n), factorial(n))]).unwrap();
        let got = csf_e(&complete(n)).map_err(|e| e.to_string())?;
        ensure(got == want, || format!("K_{n}: {got}"))?;
    }
    let gp0 = csf_e(&build_gp(0, 0, 0)).map_err(|e| e.to_string())?;
    ensure(
        gp0 == SymPoly::basis_element(Basis::E, Partition::column(3)),
        || format!("GP(0,0,0): {gp0}"),
    )?;
    let claw = e_positivity(&build_pattern(Pattern::Claw)).map_err(|e| e.to_string())?;
    ensure(!claw.positive, || "claw judged e-positive".into())?;
    let (lambda, c) = claw.witness.unwrap();
    ensure(
        lambda == Partition::new(vec![2, 2]) && c < BigInt::zero(),
        || format!("claw witness {lambda}: {c}"),
    )?;
    Ok("K_1..K_6, GP(0,0,0), claw negative at e[2,2]".into())
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("GP monomial closed form vs census", gp_monomial),
        (
            "GP elementary closed form vs census, A..E nonnegative",
            gp_elementary,
        ),
        (
            "GB monomial and elementary closed forms vs census, nonnegative",
            gb_both,
        ),
        ("e-to-m transition identities", transition_identities),
        (
            "stable partition census vs coloring count on 5 vertices",
            oracle_equivalence,
        ),
        (
            "connected 2K2-free unit interval graphs up to 6 vertices",
            main_theorem,
        ),
        ("co-triangle-free graphs up to 6 vertices", co_triangle_free),
        ("sanity fixtures", sanity),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {name}: {detail} ({secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {why} ({secs:.2}s)", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
