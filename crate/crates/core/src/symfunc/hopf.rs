use super::SymFunc;
use crate::exactalg::{RatFunc, Var};
use crate::lincomb::LinComb;
use crate::partitions::Partition;

/// Element of `Λ[t] ⊗ Λ[t]` in the basis `p_λ ⊗ p_μ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymTensor(pub LinComb<(Partition, Partition)>);

impl SymTensor {
    pub fn zero() -> Self {
        SymTensor(LinComb::zero(Var::T))
    }

    pub fn simple(a: &SymFunc, b: &SymFunc) -> Self {
        let mut out = LinComb::zero(Var::T);
        for (l, x) in a.terms() {
            for (m, y) in b.terms() {
                out.add_term((l.clone(), m.clone()), &(x * y));
            }
        }
        SymTensor(out)
    }

    pub fn add(&self, other: &Self) -> Self {
        SymTensor(self.0.add(&other.0))
    }

    pub fn sub(&self, other: &Self) -> Self {
        SymTensor(self.0.sub(&other.0))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Componentwise product `(a⊗b)(c⊗d) = ac ⊗ bd`.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = LinComb::zero(Var::T);
        for ((a, b), x) in self.0.iter() {
            for ((c, d), y) in other.0.iter() {
                out.add_term((a.union(c), b.union(d)), &(x * y));
            }
        }
        SymTensor(out)
    }

    /// `(ε ⊗ id)`.
    pub fn counit_left(&self) -> SymFunc {
        let mut out = SymFunc::zero();
        for ((a, b), x) in self.0.iter() {
            if a.is_empty() {
                out.add_term(b.clone(), x);
            }
        }
        out
    }

    /// `(id ⊗ ε)`.
    pub fn counit_right(&self) -> SymFunc {
        let mut out = SymFunc::zero();
        for ((a, b), x) in self.0.iter() {
            if b.is_empty() {
                out.add_term(a.clone(), x);
            }
        }
        out
    }
}

/// Coproduct making every `p_n` primitive, extended multiplicatively:
/// `Δ(p_λ) = ∏_i (p_{λ_i} ⊗ 1 + 1 ⊗ p_{λ_i})`.
pub fn coproduct(x: &SymFunc) -> SymTensor {
    let mut out = LinComb::zero(Var::T);
    for (lambda, coeff) in x.terms() {
        let parts = lambda.parts();
        for mask in 0u64..(1 << parts.len()) {
            let (mut left, mut right) = (Vec::new(), Vec::new());
            for (i, &p) in parts.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    left.push(p);
                } else {
                    right.push(p);
                }
            }
            out.add_term((Partition::new(left), Partition::new(right)), coeff);
        }
    }
    SymTensor(out)
}

/// Constant term.
pub fn counit(x: &SymFunc) -> RatFunc {
    x.coeff(&Partition::empty())
}

/// `S(p_λ) = (-1)^{l(λ)} p_λ`.
pub fn antipode(x: &SymFunc) -> SymFunc {
    let mut out = SymFunc::zero();
    for (lambda, c) in x.terms() {
        if lambda.length() % 2 == 0 {
            out.add_term(lambda.clone(), c);
        } else {
            out.add_term(lambda.clone(), &-c);
        }
    }
    out
}
