//! The cyclic symmetric functions `c_n(X;t)`, defined by
//! `1 + Σ c_n T^n = H(T)/H(tT)`, and the three expansions of `p_n` in them.

use std::sync::{LazyLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{CExpr, SymFunc};
use crate::exactalg::{RatFunc, Var};
use crate::partitions::{
    composition_count_g, compositions_of, multinomial, partitions_of, Partition,
};

static C_TABLE: LazyLock<RwLock<Vec<SymFunc>>> =
    LazyLock::new(|| RwLock::new(vec![SymFunc::one()]));

/// `c_n(X;t)` in the power-sum basis, from the recursion
/// `n c_n = Σ_{a=1}^n (1 - t^a) p_a c_{n-a}` with `c_0 = 1`.
pub fn c_in_p(n: usize) -> SymFunc {
    if let Some(c) = C_TABLE.read().unwrap().get(n) {
        return c.clone();
    }
    let mut table = C_TABLE.write().unwrap();
    while table.len() <= n {
        let k = table.len();
        let mut acc = SymFunc::zero();
        for a in 1..=k {
            let pa = SymFunc::term(Partition::single(a), RatFunc::one_minus_pow(Var::T, a as i64));
            acc = acc.add(&pa.mul(&table[k - a]));
        }
        let next = acc.scale_rational(&BigRational::new(1.into(), BigInt::from(k)));
        table.push(next);
    }
    table[n].clone()
}

fn sign(k: usize) -> i64 {
    if k % 2 == 1 {
        1
    } else {
        -1
    }
}

/// `p_n = n/(1-t^n) Σ_{λ⊢n} (-1)^{l+1} (1/l) multinomial(l; m(λ)) c_λ`.
pub fn p_from_c_closed(n: usize) -> CExpr {
    assert!(n >= 1, "p_0 is not defined");
    let prefactor = RatFunc::from_int(n as i64, Var::T) / RatFunc::one_minus_pow(Var::T, n as i64);
    let mut out = CExpr::zero();
    for lambda in partitions_of(n) {
        let l = lambda.length();
        let mults: Vec<u64> = lambda.multiplicities().iter().map(|&m| m as u64).collect();
        let multi = multinomial(l as u64, &mults).expect("multiplicities sum to the length");
        let c = BigRational::new(multi * BigInt::from(sign(l)), BigInt::from(l));
        out.add_term(lambda, &prefactor.scale(&c));
    }
    out
}

/// `p_n = 1/(1-t^n) Σ_k (-1)^{k+1} Σ_{i_1+…+i_k=n} i_k c_{i_k} ··· c_{i_1}`,
/// summed over every composition and then collected.
pub fn p_from_c_compositions(n: usize) -> CExpr {
    assert!(n >= 1, "p_0 is not defined");
    let prefactor = RatFunc::one(Var::T) / RatFunc::one_minus_pow(Var::T, n as i64);
    let mut out = CExpr::zero();
    for k in 1..=n {
        for comp in compositions_of(n, k) {
            let last = comp.last().unwrap() as i64;
            out.add_term(comp.sorted(), &prefactor.scale(&BigRational::from_integer((sign(k) * last).into())));
        }
    }
    out
}

/// The composition sum regrouped by multiplicity vectors, with the number
/// of compositions ending in `l` given by `composition_count_g`.
pub fn p_from_c_multiplicities(n: usize) -> CExpr {
    assert!(n >= 1, "p_0 is not defined");
    let prefactor = RatFunc::one(Var::T) / RatFunc::one_minus_pow(Var::T, n as i64);
    let mut out = CExpr::zero();
    for lambda in partitions_of(n) {
        let mut r: Vec<u64> = lambda.multiplicities().iter().map(|&m| m as u64).collect();
        r.resize(n, 0);
        let k = lambda.length();
        let mut total = BigInt::from(0);
        for l in 1..=n {
            if r[l - 1] > 0 {
                total += BigInt::from(l) * composition_count_g(&r, l).expect("r_l >= 1");
            }
        }
        let c = BigRational::from_integer(total * BigInt::from(sign(k)));
        out.add_term(lambda, &prefactor.scale(&c));
    }
    out
}

/// Expand every `c_λ = ∏ c_{λ_i}` in power sums.
pub fn cexpr_to_p(x: &CExpr) -> SymFunc {
    let mut out = SymFunc::zero();
    for (lambda, coeff) in x.terms() {
        let mono = lambda
            .parts()
            .iter()
            .fold(SymFunc::one(), |acc, &i| acc.mul(&c_in_p(i)));
        out = out.add(&mono.scale(coeff));
    }
    out
}

/// Substitute the closed form for every `p_{λ_i}`.
pub fn p_to_cexpr(x: &SymFunc) -> CExpr {
    let mut out = CExpr::zero();
    for (lambda, coeff) in x.terms() {
        let mono = lambda
            .parts()
            .iter()
            .fold(CExpr::one(), |acc, &i| acc.mul(&p_from_c_closed(i)));
        out = out.add(&mono.scale(coeff));
    }
    out
}

/// Complete homogeneous `h_n = Σ_{λ⊢n} p_λ / zee(λ)`.
pub fn h_in_p(n: usize) -> SymFunc {
    let mut out = SymFunc::zero();
    for lambda in partitions_of(n) {
        let c = BigRational::new(1.into(), lambda.zee());
        out.add_term(lambda, &RatFunc::constant(c, Var::T));
    }
    out
}
