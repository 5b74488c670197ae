//! The acceptance suite: eleven exact checks tying the symbolic side to the
//! finite-field oracle.

use std::fmt::Write as _;

use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use crate::cyclic_fq::{
    aut_count, aut_count_bruteforce, classes_up_to, compare_up_to_sign, is_central,
    is_primitive_numeric, printed_z_two_vertex, realize, submodule_table, theorem_element,
    z_r_numeric, CyclicIsoClass, SignMatch,
};
use crate::error::Result;
use crate::exactalg::{RatFunc, Var};
use crate::hall_jordan::{
    aut_order, coproduct, coproduct_basis, coproduct_left, coproduct_right, hall_polynomial, mul,
    primitive_center, primitive_macdonald_image, printed_p3, verify_hall_identity, HallElem,
};
use crate::partitions::{partitions_of, Partition};
use crate::symfunc::{
    cexpr_to_p, hall_littlewood_p, macdonald_primitive, p_from_c_closed, p_from_c_compositions,
    p_from_c_multiplicities, t_inner_product, SymFunc,
};

pub const P3_WARNING: &str = "a printed three-term closed form for p_3 \
     disagrees with the Macdonald expansion; the computed value is reported";
pub const SIGN_WARNING: &str = "the printed two-vertex closed form for z_n is compared up to a global \
     sign; the match status is reported";

/// Identifiers and short names of the checks, in output order.
pub const CHECKS: [(u32, &str); 11] = [
    (1, "recursion matches closed form"),
    (2, "composition sum matches partition sum"),
    (3, "Macdonald expansion of p_n"),
    (4, "p_2 and the two primitive constructions"),
    (5, "symbolic primitivity"),
    (6, "oracle Hall numbers and automorphisms"),
    (7, "centrality of z_r"),
    (8, "primitivity of the central formula"),
    (9, "Hall-number identity"),
    (10, "two-vertex closed form"),
    (11, "structural properties"),
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub warnings: Vec<String>,
}

impl CheckOutcome {
    pub fn line(&self) -> String {
        format!(
            "{} criterion {:>2}: {} ({})",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.detail
        )
    }
}

struct Report {
    passed: bool,
    detail: String,
    warnings: Vec<String>,
}

impl Report {
    fn new(passed: bool, detail: impl Into<String>) -> Self {
        Report {
            passed,
            detail: detail.into(),
            warnings: Vec::new(),
        }
    }
}

fn power_sum(n: usize) -> SymFunc {
    SymFunc::monomial(Partition::single(n))
}

fn first_failure<T: std::fmt::Debug>(bad: Vec<T>, checked: usize, what: &str) -> Report {
    match bad.first() {
        None => Report::new(true, format!("{checked} {what} checked")),
        Some(b) => Report::new(false, format!("{} of {checked} {what} failed, first {b:?}", bad.len())),
    }
}

fn check_recursion(fast: bool) -> Result<Report> {
    let top = if fast { 8 } else { 12 };
    let bad: Vec<usize> = (1..=top)
        .into_par_iter()
        .filter(|&n| cexpr_to_p(&p_from_c_closed(n)) != power_sum(n))
        .collect();
    Ok(first_failure(bad, top, "degrees"))
}

fn check_compositions(fast: bool) -> Result<Report> {
    let top = if fast { 6 } else { 8 };
    let bad: Vec<usize> = (1..=top)
        .filter(|&n| {
            let closed = p_from_c_closed(n);
            p_from_c_compositions(n) != closed || p_from_c_multiplicities(n) != closed
        })
        .collect();
    Ok(first_failure(bad, top, "degrees"))
}

fn check_macdonald(fast: bool) -> Result<Report> {
    let top = if fast { 5 } else { 6 };
    let mut bad = Vec::new();
    for n in 1..=top {
        if macdonald_primitive(n)? != power_sum(n) {
            bad.push(n);
        }
    }
    Ok(first_failure(bad, top, "degrees"))
}

fn check_p2(fast: bool) -> Result<Report> {
    let top = if fast { 4 } else { 5 };
    let p2 = primitive_center(2, 1)?;
    let rendered = p2.render();
    let expected = "[2] + (1-q)[1,1]";
    let mut bad = Vec::new();
    for n in 1..=top {
        if primitive_center(n, 1)? != primitive_macdonald_image(n) {
            bad.push(n);
        }
    }
    let p3_matches = primitive_center(3, 1)? == printed_p3();
    let passed = rendered == expected && bad.is_empty();
    let mut report = Report::new(
        passed,
        format!(
            "p_2 = {rendered}; methods agree for n <= {top}: {}; printed p_3 matches: {p3_matches}",
            bad.is_empty()
        ),
    );
    if !p3_matches {
        report.warnings.push(P3_WARNING.into());
    }
    Ok(report)
}

fn check_symbolic_primitivity(fast: bool) -> Result<Report> {
    let top = if fast { 4 } else { 5 };
    let mut bad = Vec::new();
    for n in 1..=top {
        if !crate::hall_jordan::is_primitive(&primitive_center(n, 1)?)? {
            bad.push(n);
        }
    }
    Ok(first_failure(bad, top, "degrees"))
}

/// Summary of a comparison between enumerated Hall numbers and automorphism
/// counts and their symbolic counterparts on the Jordan quiver.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Crosscheck {
    pub hall_numbers: usize,
    pub automorphism_groups: usize,
    pub enumerated_groups: usize,
    pub failures: Vec<String>,
}

impl Crosscheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Every `g^λ_{μν}(q)` and `a_λ(q)` with `|λ| <= max_weight` for each `q`.
pub fn crosscheck_jordan(max_weight: usize, fields: &[u32]) -> Result<Crosscheck> {
    let mut jobs = Vec::new();
    for &q in fields {
        crate::cyclic_fq::check_field(q)?;
        for n in 1..=max_weight {
            for lambda in partitions_of(n) {
                jobs.push((q, lambda));
            }
        }
    }
    let results: Result<Vec<(usize, bool, Vec<String>)>> = jobs
        .par_iter()
        .map(|(q, lambda)| {
            let qq = BigRational::from_integer((*q).into());
            let r = CyclicIsoClass::from_partition(lambda);
            let table = submodule_table(&r, *q)?;
            let n = lambda.weight();
            let mut bad = Vec::new();
            let mut triples = 0;
            for k in 0..=n {
                for nu in partitions_of(k) {
                    for mu in partitions_of(n - k) {
                        triples += 1;
                        let key = (CyclicIsoClass::from_partition(&nu), CyclicIsoClass::from_partition(&mu));
                        let counted = table.get(&key).cloned().unwrap_or_default();
                        let symbolic = hall_polynomial(&mu, &nu, lambda)?.eval(&qq)?;
                        if symbolic != BigRational::from_integer(counted.clone()) {
                            bad.push(format!("g^{lambda}_{{{mu},{nu}}}({q}): {counted} vs {symbolic}"));
                        }
                    }
                }
            }
            let symbolic_aut = aut_order(lambda).eval(&qq)?;
            let formula = aut_count(&r, *q);
            if BigRational::from_integer(formula.clone()) != symbolic_aut {
                bad.push(format!("a_{lambda}({q}): {formula} vs {symbolic_aut}"));
            }
            let mut enumerated = false;
            if let Ok(direct) = aut_count_bruteforce(&r, *q) {
                enumerated = true;
                if direct != formula {
                    bad.push(format!("a_{lambda}({q}) by enumeration: {direct} vs {formula}"));
                }
            }
            Ok((triples, enumerated, bad))
        })
        .collect();
    let results = results?;
    Ok(Crosscheck {
        hall_numbers: results.iter().map(|r| r.0).sum(),
        automorphism_groups: results.len(),
        enumerated_groups: results.iter().filter(|r| r.1).count(),
        failures: results.into_iter().flat_map(|r| r.2).collect(),
    })
}

fn check_oracle(fast: bool) -> Result<Report> {
    let c = if fast {
        crosscheck_jordan(4, &[2])?
    } else {
        crosscheck_jordan(5, &[2, 3])?
    };
    let mut report = first_failure(c.failures.clone(), c.hall_numbers + c.automorphism_groups, "counts");
    let _ = write!(
        report.detail,
        "; {} Hall numbers, {} automorphism groups, {} also by direct enumeration",
        c.hall_numbers, c.automorphism_groups, c.enumerated_groups
    );
    Ok(report)
}

fn check_centrality(fast: bool) -> Result<Report> {
    let fields: &[u32] = if fast { &[2] } else { &[2, 3] };
    let dim_cap = if fast { 3 } else { 4 };
    let mut jobs = Vec::new();
    for &q in fields {
        for m in 1..=3u32 {
            for r in 1..=6 / m as usize {
                jobs.push((m, r, q));
            }
        }
    }
    let results: Result<Vec<Option<String>>> = jobs
        .par_iter()
        .map(|&(m, r, q)| {
            let z = z_r_numeric(m, r, q)?;
            Ok((!is_central(&z, dim_cap)?).then(|| format!("m={m} r={r} q={q}")))
        })
        .collect();
    let bad: Vec<String> = results?.into_iter().flatten().collect();
    let mut report = first_failure(bad, jobs.len(), "elements z_r");
    let _ = write!(report.detail, " against classes of dimension <= {dim_cap}");
    Ok(report)
}

fn check_theorem(_fast: bool) -> Result<Report> {
    let cases = [(1u32, 1usize), (1, 2), (1, 3), (2, 1), (2, 2), (3, 1)];
    let results: Result<Vec<Option<String>>> = cases
        .par_iter()
        .map(|&(m, n)| {
            let x = theorem_element(m, n, 2)?;
            Ok((!is_primitive_numeric(&x)?).then(|| format!("m={m} n={n}")))
        })
        .collect();
    let bad: Vec<String> = results?.into_iter().flatten().collect();
    Ok(first_failure(bad, cases.len(), "instances (m, n) at q = 2"))
}

fn check_identity(fast: bool) -> Result<Report> {
    let top = if fast { 4 } else { 5 };
    let mut bad = Vec::new();
    let mut total = 0;
    for n in 1..=top {
        for lambda in partitions_of(n) {
            total += 1;
            if !verify_hall_identity(n, &lambda)? {
                bad.push(lambda);
            }
        }
    }
    Ok(first_failure(bad, total, "partitions"))
}

fn check_two_vertex(_fast: bool) -> Result<Report> {
    let mut parts = Vec::new();
    let mut passed = true;
    for n in 1..=2 {
        for q in [2u32, 3] {
            let ours = z_r_numeric(2, n, q)?;
            let printed = printed_z_two_vertex(n, q)?;
            let status = compare_up_to_sign(&ours, &printed);
            if status == SignMatch::Neither {
                passed = false;
            }
            parts.push(format!("n={n} q={q}: {status}"));
        }
    }
    let mut report = Report::new(passed, parts.join("; "));
    report.warnings.push(SIGN_WARNING.into());
    Ok(report)
}

fn check_structure(fast: bool) -> Result<Report> {
    let mut failures = Vec::new();

    let assoc_top = if fast { 4 } else { 6 };
    let mut basis: Vec<Partition> = Vec::new();
    for n in 1..=assoc_top {
        basis.extend(partitions_of(n));
    }
    let mut triples = Vec::new();
    for a in &basis {
        for b in &basis {
            for c in &basis {
                if a.weight() + b.weight() + c.weight() <= assoc_top {
                    triples.push((a, b, c));
                }
            }
        }
    }
    let assoc_bad: Result<Vec<bool>> = triples
        .par_iter()
        .map(|(a, b, c)| {
            let (x, y, z) = (HallElem::basis((*a).clone()), HallElem::basis((*b).clone()), HallElem::basis((*c).clone()));
            Ok(mul(&mul(&x, &y)?, &z)? != mul(&x, &mul(&y, &z)?)?)
        })
        .collect();
    if assoc_bad?.into_iter().any(|b| b) {
        failures.push("associativity");
    }

    let mut coassoc_ok = true;
    let mut green_ok = true;
    for n in 1..=4 {
        for lambda in partitions_of(n) {
            let d = coproduct_basis(&lambda)?;
            coassoc_ok &= coproduct_left(&d)? == coproduct_right(&d)?;
        }
    }
    let small: Vec<Partition> = (1..=3).flat_map(partitions_of).collect();
    for a in &small {
        for b in &small {
            if a.weight() + b.weight() > 4 {
                continue;
            }
            let (x, y) = (HallElem::basis(a.clone()), HallElem::basis(b.clone()));
            green_ok &= coproduct(&mul(&x, &y)?)? == coproduct(&x)?.mul(&coproduct(&y)?)?;
        }
    }
    if !coassoc_ok {
        failures.push("coassociativity");
    }
    if !green_ok {
        failures.push("Green compatibility");
    }

    let mut orth_ok = true;
    for n in 1..=5 {
        let lambdas = partitions_of(n);
        let ps: Vec<SymFunc> = lambdas.iter().map(hall_littlewood_p).collect::<Result<_>>()?;
        for (i, li) in lambdas.iter().enumerate() {
            for (j, pj) in ps.iter().enumerate() {
                let ip = t_inner_product(&ps[i], pj);
                let expected = if i == j { hl_norm(li)? } else { RatFunc::zero(Var::T) };
                orth_ok &= ip == expected;
            }
        }
    }
    if !orth_ok {
        failures.push("Hall-Littlewood orthogonality");
    }

    let mut round_trip_ok = true;
    let mut classes = 0;
    for m in 1..=3 {
        for cls in classes_up_to(m, 6) {
            classes += 1;
            round_trip_ok &= realize(&cls, 2)?.decompose()? == cls;
        }
    }
    if !round_trip_ok {
        failures.push("realize/decompose round trip");
    }

    Ok(if failures.is_empty() {
        Report::new(
            true,
            format!(
                "{} associativity triples, coproducts to degree 4, orthogonality to weight 5, {classes} round trips",
                triples.len()
            ),
        )
    } else {
        Report::new(false, format!("failed: {}", failures.join(", ")))
    })
}

/// `⟨P_λ, P_λ⟩ = 1 / ∏_i φ_{m_i(λ)}(t)` with `φ_r = (1-t)···(1-t^r)`.
fn hl_norm(lambda: &Partition) -> Result<RatFunc> {
    let mut b = RatFunc::one(Var::T);
    for m in lambda.multiplicities() {
        for j in 1..=m {
            b = &b * &RatFunc::one_minus_pow(Var::T, j as i64);
        }
    }
    b.inv()
}

/// Run one check by id; computation errors count as failures.
pub fn run_check(id: u32, fast: bool) -> Option<CheckOutcome> {
    let (_, name) = *CHECKS.iter().find(|(i, _)| *i == id)?;
    let result = match id {
        1 => check_recursion(fast),
        2 => check_compositions(fast),
        3 => check_macdonald(fast),
        4 => check_p2(fast),
        5 => check_symbolic_primitivity(fast),
        6 => check_oracle(fast),
        7 => check_centrality(fast),
        8 => check_theorem(fast),
        9 => check_identity(fast),
        10 => check_two_vertex(fast),
        _ => check_structure(fast),
    };
    let report = result.unwrap_or_else(|e| Report::new(false, format!("error: {e}")));
    Some(CheckOutcome {
        id,
        name,
        passed: report.passed,
        detail: report.detail,
        warnings: report.warnings,
    })
}

/// All checks, in id order.
pub fn run_all(fast: bool) -> Vec<CheckOutcome> {
    let mut out: Vec<CheckOutcome> = CHECKS
        .par_iter()
        .filter_map(|&(id, _)| run_check(id, fast))
        .collect();
    out.sort_by_key(|c| c.id);
    out
}

