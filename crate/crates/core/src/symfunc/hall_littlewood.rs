//! Hall–Littlewood functions `P_λ(X;t)`.
//!
//! `P_λ` is the unique element of `m_λ + span{m_μ : μ < λ}` (dominance)
//! orthogonal to every other `P_μ` under
//! `⟨p_λ, p_μ⟩_t = δ_{λμ} zee(λ) ∏_i (1 - t^{λ_i})^{-1}`.
//! We run Gram–Schmidt over the monomial functions in increasing
//! lexicographic order, a linear extension of dominance; uniqueness makes the
//! result independent of the extension chosen.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, LazyLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::SymFunc;
use crate::error::{Error, Result};
use crate::exactalg::{RatFunc, Var};
use crate::lincomb::LinComb;
use crate::partitions::{partitions_of, Partition};

pub const DEFAULT_DEGREE_CAP: usize = 10;

/// Number of ways to drop the parts of `lambda` into bins of sizes `mu`
/// (bins distinguishable), i.e. the coefficient of `m_mu` in `p_lambda`.
fn power_sum_monomial_coeff(lambda: &Partition, mu: &Partition) -> BigInt {
    fn rec(
        parts: &[usize],
        i: usize,
        remaining: &mut Vec<usize>,
        memo: &mut HashMap<(usize, Vec<usize>), BigInt>,
    ) -> BigInt {
        if i == parts.len() {
            return if remaining.iter().all(|&r| r == 0) {
                BigInt::from(1)
            } else {
                BigInt::from(0)
            };
        }
        let key = (i, remaining.clone());
        if let Some(v) = memo.get(&key) {
            return v.clone();
        }
        let mut total = BigInt::from(0);
        for j in 0..remaining.len() {
            if remaining[j] >= parts[i] {
                remaining[j] -= parts[i];
                total += rec(parts, i + 1, remaining, memo);
                remaining[j] += parts[i];
            }
        }
        memo.insert(key, total.clone());
        total
    }
    if lambda.weight() != mu.weight() {
        return BigInt::from(0);
    }
    rec(lambda.parts(), 0, &mut mu.parts().to_vec(), &mut HashMap::new())
}

struct MonomialTable {
    /// `m_μ` in the power-sum basis.
    in_p: BTreeMap<Partition, SymFunc>,
    /// `L[λ][μ]`: coefficient of `m_μ` in `p_λ`.
    p_to_m: BTreeMap<Partition, BTreeMap<Partition, BigInt>>,
}

fn build_monomial_table(n: usize) -> MonomialTable {
    let parts = partitions_of(n);
    let size = parts.len();
    let mut p_to_m = BTreeMap::new();
    // rows: p_λ, cols: m_μ
    let mut a: Vec<Vec<BigRational>> = Vec::with_capacity(size);
    for lambda in &parts {
        let mut row = BTreeMap::new();
        let mut dense = Vec::with_capacity(size);
        for mu in &parts {
            let c = power_sum_monomial_coeff(lambda, mu);
            dense.push(BigRational::from_integer(c.clone()));
            if !c.is_zero() {
                row.insert(mu.clone(), c);
            }
        }
        p_to_m.insert(lambda.clone(), row);
        a.push(dense);
    }
    // Invert A (p = A m) by Gauss–Jordan, giving m = A^{-1} p.
    let mut inv: Vec<Vec<BigRational>> = (0..size)
        .map(|i| {
            (0..size)
                .map(|j| if i == j { BigRational::from_integer(1.into()) } else { BigRational::zero() })
                .collect()
        })
        .collect();
    for col in 0..size {
        let pivot = (col..size).find(|&r| !a[r][col].is_zero()).expect("p-to-m matrix is invertible");
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let scale = a[col][col].recip();
        for j in 0..size {
            a[col][j] = &a[col][j] * &scale;
            inv[col][j] = &inv[col][j] * &scale;
        }
        for r in 0..size {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..size {
                    let (da, di) = (&f * &a[col][j], &f * &inv[col][j]);
                    a[r][j] -= da;
                    inv[r][j] -= di;
                }
            }
        }
    }
    // A^T? p_λ = Σ_μ A[λ][μ] m_μ, so m = A^{-1} p means m_μ = Σ_λ inv[μ][λ] p_λ
    // when A is indexed (row λ, col μ) as above.
    let mut in_p = BTreeMap::new();
    for (mi, mu) in parts.iter().enumerate() {
        let mut f = SymFunc::zero();
        for (li, lambda) in parts.iter().enumerate() {
            if !inv[mi][li].is_zero() {
                f.add_term(lambda.clone(), &RatFunc::constant(inv[mi][li].clone(), Var::T));
            }
        }
        in_p.insert(mu.clone(), f);
    }
    MonomialTable { in_p, p_to_m }
}

static MONOMIALS: LazyLock<RwLock<HashMap<usize, Arc<MonomialTable>>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

fn monomial_table(n: usize) -> Arc<MonomialTable> {
    if let Some(t) = MONOMIALS.read().unwrap().get(&n) {
        return t.clone();
    }
    let table = Arc::new(build_monomial_table(n));
    MONOMIALS
        .write()
        .unwrap()
        .entry(n)
        .or_insert(table)
        .clone()
}

/// Monomial symmetric function `m_λ` in the power-sum basis.
pub fn monomial_in_p(lambda: &Partition) -> SymFunc {
    monomial_table(lambda.weight()).in_p[lambda].clone()
}

/// Coefficients of `f` in the monomial basis.
pub fn p_to_monomial(f: &SymFunc) -> LinComb<Partition> {
    let mut out = LinComb::zero(Var::T);
    for (lambda, c) in f.terms() {
        let table = monomial_table(lambda.weight());
        for (mu, k) in &table.p_to_m[lambda] {
            out.add_term(mu.clone(), &c.scale(&BigRational::from_integer(k.clone())));
        }
    }
    out
}

fn p_norm(lambda: &Partition) -> RatFunc {
    let mut den = RatFunc::one(Var::T);
    for &part in lambda.parts() {
        den = &den * &RatFunc::one_minus_pow(Var::T, part as i64);
    }
    &RatFunc::constant(BigRational::from_integer(lambda.zee()), Var::T) / &den
}

/// `⟨f, g⟩_t`.
pub fn t_inner_product(f: &SymFunc, g: &SymFunc) -> RatFunc {
    let mut acc = RatFunc::zero(Var::T);
    let (small, large) = if f.len() <= g.len() { (f, g) } else { (g, f) };
    for (lambda, a) in small.terms() {
        if let Some(b) = large.comb().get(lambda) {
            acc += &(&(a * b) * &p_norm(lambda));
        }
    }
    acc
}

struct DegreeTable {
    p: BTreeMap<Partition, SymFunc>,
    norm: BTreeMap<Partition, RatFunc>,
}

/// Memoized Hall–Littlewood data up to a degree cap. Tables are filled per
/// degree on first use; concurrent fills of the same degree compute the
/// same value and the first writer wins.
pub struct HallLittlewood {
    cap: usize,
    tables: RwLock<HashMap<usize, Arc<DegreeTable>>>,
    products: RwLock<HashMap<(Partition, Partition), LinComb<Partition>>>,
}

static GLOBAL: LazyLock<HallLittlewood> = LazyLock::new(|| HallLittlewood::new(DEFAULT_DEGREE_CAP));

impl HallLittlewood {
    pub fn new(cap: usize) -> Self {
        HallLittlewood {
            cap,
            tables: RwLock::new(HashMap::new()),
            products: RwLock::new(HashMap::new()),
        }
    }

    /// Shared instance with the default degree cap.
    pub fn global() -> &'static HallLittlewood {
        &GLOBAL
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    fn table(&self, n: usize) -> Result<Arc<DegreeTable>> {
        if n > self.cap {
            return Err(Error::DegreeCap {
                degree: n,
                cap: self.cap,
            });
        }
        if let Some(t) = self.tables.read().unwrap().get(&n) {
            return Ok(t.clone());
        }
        let table = Arc::new(gram_schmidt(n));
        Ok(self
            .tables
            .write()
            .unwrap()
            .entry(n)
            .or_insert(table)
            .clone())
    }

    /// `P_λ(X;t)` in the power-sum basis.
    pub fn p(&self, lambda: &Partition) -> Result<SymFunc> {
        Ok(self.table(lambda.weight())?.p[lambda].clone())
    }

    /// `⟨P_λ, P_λ⟩_t`.
    pub fn norm(&self, lambda: &Partition) -> Result<RatFunc> {
        Ok(self.table(lambda.weight())?.norm[lambda].clone())
    }

    /// Coordinates of `f` in the `P_λ` basis.
    pub fn to_hl_basis(&self, f: &SymFunc) -> Result<LinComb<Partition>> {
        let mut out = LinComb::zero(Var::T);
        let degrees: std::collections::BTreeSet<usize> = f.terms().map(|(l, _)| l.weight()).collect();
        for n in degrees {
            let table = self.table(n)?;
            for (lambda, p) in &table.p {
                let c = t_inner_product(f, p);
                if !c.is_zero() {
                    out.add_term(lambda.clone(), &(&c / &table.norm[lambda]));
                }
            }
        }
        Ok(out)
    }

    /// `Σ c_λ P_λ` back in the power-sum basis.
    pub fn from_hl_basis(&self, comb: &LinComb<Partition>) -> Result<SymFunc> {
        let mut out = SymFunc::zero();
        for (lambda, c) in comb.iter() {
            out = out.add(&self.p(lambda)?.scale(c));
        }
        Ok(out)
    }

    /// `P_μ P_ν = Σ_λ f^λ_{μν}(t) P_λ`.
    pub fn product_in_hl(&self, mu: &Partition, nu: &Partition) -> Result<LinComb<Partition>> {
        let key = if mu <= nu {
            (mu.clone(), nu.clone())
        } else {
            (nu.clone(), mu.clone())
        };
        if let Some(v) = self.products.read().unwrap().get(&key) {
            return Ok(v.clone());
        }
        let prod = self.p(mu)?.mul(&self.p(nu)?);
        let coords = self.to_hl_basis(&prod)?;
        self.products
            .write()
            .unwrap()
            .entry(key)
            .or_insert(coords.clone());
        Ok(coords)
    }
}

fn gram_schmidt(n: usize) -> DegreeTable {
    let mut lex_ascending = partitions_of(n);
    lex_ascending.reverse();
    let mut done: Vec<(Partition, SymFunc, RatFunc)> = Vec::with_capacity(lex_ascending.len());
    for lambda in lex_ascending {
        let m = monomial_in_p(&lambda);
        let mut v = m.clone();
        for (_, pmu, norm) in &done {
            let c = t_inner_product(&m, pmu);
            if !c.is_zero() {
                v = v.sub(&pmu.scale(&(&c / norm)));
            }
        }
        let norm = t_inner_product(&v, &v);
        done.push((lambda, v, norm));
    }
    let mut p = BTreeMap::new();
    let mut norm = BTreeMap::new();
    for (l, v, nm) in done {
        p.insert(l.clone(), v);
        norm.insert(l, nm);
    }
    DegreeTable { p, norm }
}

/// `P_λ(X;t)` from the shared table (degree cap [`DEFAULT_DEGREE_CAP`]).
pub fn hall_littlewood_p(lambda: &Partition) -> Result<SymFunc> {
    HallLittlewood::global().p(lambda)
}

/// The coefficients `t^{n(λ)} ∏_{i=1}^{l(λ)-1} (1 - t^{-i})` of `P_λ` in
/// the Macdonald expansion of `p_n`.
pub fn macdonald_coefficients(n: usize) -> LinComb<Partition> {
    let mut out = LinComb::zero(Var::T);
    for lambda in partitions_of(n) {
        let mut c = RatFunc::var_pow(Var::T, lambda.n_stat() as i64);
        for i in 1..lambda.length() {
            c = &c * &RatFunc::one_minus_pow(Var::T, -(i as i64));
        }
        out.add_term(lambda, &c);
    }
    out
}

/// `Σ_{λ⊢n} t^{n(λ)} ∏_{i=1}^{l(λ)-1} (1 - t^{-i}) P_λ`, expanded in power sums.
pub fn macdonald_primitive(n: usize) -> Result<SymFunc> {
    HallLittlewood::global().from_hl_basis(&macdonald_coefficients(n))
}

/// `P[3] + (t-1)P[2,1]` style rendering of a combination of `P_λ`.
pub fn render_hl_basis(comb: &LinComb<Partition>) -> String {
    super::render_terms(comb.iter().map(|(l, c)| (format!("P[{l}]"), c)), "0")
}

pub fn render_hl_basis_latex(comb: &LinComb<Partition>) -> String {
    if comb.is_zero() {
        return "0".into();
    }
    super::join_latex(
        comb.iter()
            .map(|(l, c)| super::latex_term(c, &format!("P_{{{}}}", l.render_latex())))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::int;
    use crate::symfunc::{c_in_p, h_in_p};

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn power_sum_to_monomial_counts() {
        // p_1^2 = m_2 + 2 m_11
        assert_eq!(power_sum_monomial_coeff(&part("1,1"), &part("2")), BigInt::from(1));
        assert_eq!(power_sum_monomial_coeff(&part("1,1"), &part("1,1")), BigInt::from(2));
        assert_eq!(power_sum_monomial_coeff(&part("2"), &part("1,1")), BigInt::from(0));
        for n in 1..=6 {
            for mu in partitions_of(n) {
                let back = p_to_monomial(&monomial_in_p(&mu));
                assert_eq!(back, LinComb::term(mu.clone(), RatFunc::one(Var::T)));
            }
        }
    }

    #[test]
    fn first_hall_littlewood_functions() {
        assert_eq!(hall_littlewood_p(&part("1")).unwrap(), SymFunc::monomial(part("1")));
        // P_(2) = m_2 + (1-t) m_11
        let expected = monomial_in_p(&part("2")).add(&monomial_in_p(&part("1,1")).scale(&RatFunc::one_minus_pow(Var::T, 1)));
        assert_eq!(hall_littlewood_p(&part("2")).unwrap(), expected);
    }

    #[test]
    fn unitriangular_in_dominance_order() {
        for n in 1..=6 {
            for lambda in partitions_of(n) {
                let m = p_to_monomial(&hall_littlewood_p(&lambda).unwrap());
                assert!(m.coeff(&lambda).is_one());
                for (mu, _) in m.iter() {
                    assert!(lambda.dominates(mu), "{mu} appears in P_{lambda}");
                }
            }
        }
    }

    #[test]
    fn one_row_is_cyclic_function() {
        // P_(n) = c_n / (1 - t), an expansion reached without Gram–Schmidt.
        for n in 1..=6 {
            let via_c = c_in_p(n).scale(&(RatFunc::one(Var::T) / RatFunc::one_minus_pow(Var::T, 1)));
            assert_eq!(hall_littlewood_p(&Partition::single(n)).unwrap(), via_c, "n = {n}");
        }
    }

    #[test]
    fn at_t_one_is_monomial() {
        for n in 1..=5 {
            for lambda in partitions_of(n) {
                let at_one = hall_littlewood_p(&lambda).unwrap().eval_t(&int(1)).unwrap();
                assert_eq!(at_one, monomial_in_p(&lambda), "{lambda}");
            }
        }
    }

    #[test]
    fn macdonald_expansion_small() {
        assert_eq!(macdonald_primitive(1).unwrap(), SymFunc::monomial(part("1")));
        assert_eq!(macdonald_primitive(2).unwrap(), SymFunc::monomial(part("2")));
    }

    #[test]
    fn macdonald_expansion_is_power_sum() {
        for n in 1..=6 {
            assert_eq!(macdonald_primitive(n).unwrap(), SymFunc::monomial(Partition::single(n)), "n = {n}");
        }
    }

    #[test]
    fn orthogonal_with_matching_norms() {
        for n in 1..=5 {
            let ps = partitions_of(n);
            for a in &ps {
                for b in &ps {
                    let ip = t_inner_product(&hall_littlewood_p(a).unwrap(), &hall_littlewood_p(b).unwrap());
                    if a == b {
                        assert_eq!(ip, HallLittlewood::global().norm(a).unwrap());
                        assert!(!ip.is_zero());
                    } else {
                        assert!(ip.is_zero(), "<P_{a}, P_{b}> = {ip}");
                    }
                }
            }
        }
    }

    /// Sign of a permutation given as images of `0..n`.
    fn perm_sign(perm: &[usize]) -> i64 {
        let mut inversions = 0;
        for i in 0..perm.len() {
            for j in i + 1..perm.len() {
                if perm[i] > perm[j] {
                    inversions += 1;
                }
            }
        }
        if inversions % 2 == 0 { 1 } else { -1 }
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }

    /// `s_λ = det(h_{λ_i - i + j})`.
    fn jacobi_trudi(lambda: &Partition) -> SymFunc {
        let l = lambda.length();
        let h = |k: i64| if k < 0 { SymFunc::zero() } else { h_in_p(k as usize) };
        let mut out = SymFunc::zero();
        for perm in permutations(l) {
            let mut term = SymFunc::one();
            for i in 0..l {
                term = term.mul(&h(lambda.parts()[i] as i64 - i as i64 + perm[i] as i64));
            }
            out = out.add(&term.scale_rational(&int(perm_sign(&perm))));
        }
        out
    }

    #[test]
    fn schur_at_t_zero() {
        for n in 1..=6 {
            for lambda in partitions_of(n) {
                let at_zero = hall_littlewood_p(&lambda).unwrap().eval_t(&int(0)).unwrap();
                assert_eq!(at_zero, jacobi_trudi(&lambda), "{lambda}");
            }
        }
    }

    #[test]
    fn one_column_is_elementary() {
        for n in 1..=6 {
            // e_n = Σ ε_λ p_λ / zee(λ)
            let mut e = SymFunc::zero();
            for lambda in partitions_of(n) {
                let sign = if (n - lambda.length()) % 2 == 0 { 1 } else { -1 };
                e.add_term(
                    lambda.clone(),
                    &RatFunc::constant(BigRational::new(sign.into(), lambda.zee()), Var::T),
                );
            }
            let column = Partition::new(vec![1; n]);
            assert_eq!(hall_littlewood_p(&column).unwrap(), e, "n = {n}");
        }
    }

    #[test]
    fn degree_cap_enforced() {
        let hl = HallLittlewood::new(3);
        assert!(hl.p(&part("3")).is_ok());
        assert_eq!(
            hl.p(&part("2,2")),
            Err(Error::DegreeCap { degree: 4, cap: 3 })
        );
    }

    #[test]
    fn hl_coordinates_round_trip() {
        let hl = HallLittlewood::global();
        let f = h_in_p(4).mul(&c_in_p(1));
        let coords = hl.to_hl_basis(&f).unwrap();
        assert_eq!(hl.from_hl_basis(&coords).unwrap(), f);
    }
}
