//! Inputs shared by the benchmarks.

use hallprim::cyclic_fq::classes_up_to;
use hallprim::{CyclicIsoClass, RatFunc, Var};

/// `1/(1-t^k)` and `(1-t^k)/(1+t)` for `k = 1..=n`.
pub fn sample_ratfuncs(n: i64) -> Vec<RatFunc> {
    let mut out = Vec::new();
    for k in 1..=n {
        let a = RatFunc::one_minus_pow(Var::T, k);
        out.push(a.inv().expect("nonzero"));
        out.push(&a / &(&RatFunc::one(Var::T) + &RatFunc::var_pow(Var::T, 1)));
    }
    out
}

/// Classes of exactly the given total dimension.
pub fn classes_of_dim(m: u32, dim: usize) -> Vec<CyclicIsoClass> {
    classes_up_to(m, dim)
        .into_iter()
        .filter(|c| c.total_dim() == dim)
        .collect()
}
