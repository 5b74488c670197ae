//! The ring `Λ[t]` of symmetric functions with coefficients in `Q(t)`.
//!
//! Elements are stored as linear combinations of power-sum monomials
//! `p_λ = p_{λ_1} ··· p_{λ_l}`; products are then just multiset unions of
//! partitions and the Hopf structure is diagonal. The cyclic functions
//! `c_n(X;t)` get their own monomial basis ([`CExpr`]) because several of the
//! identities we check are stated in it.

mod cyclic;
mod hall_littlewood;
mod hopf;

use std::fmt;
use std::marker::PhantomData;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{parse_ratfunc, RatFunc, Var};
use crate::lincomb::LinComb;
use crate::partitions::Partition;

pub use cyclic::{
    c_in_p, cexpr_to_p, h_in_p, p_from_c_closed, p_from_c_compositions,
    p_from_c_multiplicities, p_to_cexpr,
};
pub use hall_littlewood::{
    hall_littlewood_p, macdonald_coefficients, macdonald_primitive, render_hl_basis,
    render_hl_basis_latex, monomial_in_p, p_to_monomial, t_inner_product, HallLittlewood,
    DEFAULT_DEGREE_CAP,
};
pub use hopf::{antipode, coproduct, counit, SymTensor};

/// Tag for a multiplicative monomial basis of `Λ[t]` indexed by partitions.
pub trait Basis: Clone + fmt::Debug + PartialEq + Eq {
    /// Short name used in text and JSON output (`p`, `c`).
    const NAME: &'static str;
}

/// Power sums `p_λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSum;

/// Cyclic symmetric functions `c_λ(X;t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cyclic;

impl Basis for PowerSum {
    const NAME: &'static str = "p";
}

impl Basis for Cyclic {
    const NAME: &'static str = "c";
}

/// Element of `Λ[t]` written in the monomial basis `B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion<B: Basis> {
    comb: LinComb<Partition>,
    _basis: PhantomData<B>,
}

/// Element of `Λ[t]` in the power-sum basis (the canonical form).
pub type SymFunc = Expansion<PowerSum>;
/// Element of `Λ[t]` in the `c_λ` basis.
pub type CExpr = Expansion<Cyclic>;

impl<B: Basis> Expansion<B> {
    pub fn zero() -> Self {
        Self::from_comb(LinComb::zero(Var::T))
    }

    pub fn one() -> Self {
        Self::monomial(Partition::empty())
    }

    pub fn constant(c: RatFunc) -> Self {
        Self::term(Partition::empty(), c)
    }

    /// The basis monomial indexed by `lambda`.
    pub fn monomial(lambda: Partition) -> Self {
        Self::term(lambda, RatFunc::one(Var::T))
    }

    pub fn term(lambda: Partition, c: RatFunc) -> Self {
        assert_eq!(c.var(), Var::T, "symmetric functions are over Q(t)");
        Self::from_comb(LinComb::term(lambda, c))
    }

    pub(crate) fn from_comb(comb: LinComb<Partition>) -> Self {
        Expansion {
            comb,
            _basis: PhantomData,
        }
    }

    pub fn comb(&self) -> &LinComb<Partition> {
        &self.comb
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &RatFunc)> {
        self.comb.iter()
    }

    pub fn coeff(&self, lambda: &Partition) -> RatFunc {
        self.comb.coeff(lambda)
    }

    pub fn len(&self) -> usize {
        self.comb.len()
    }

    pub fn is_zero(&self) -> bool {
        self.comb.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_comb(self.comb.add(&other.comb))
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::from_comb(self.comb.sub(&other.comb))
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        Self::from_comb(self.comb.scale(c))
    }

    pub fn scale_rational(&self, c: &BigRational) -> Self {
        Self::from_comb(self.comb.scale_rational(c))
    }

    pub fn add_term(&mut self, lambda: Partition, c: &RatFunc) {
        self.comb.add_term(lambda, c);
    }

    /// Product; both bases are free commutative monomial bases, so this is
    /// the union of indexing partitions.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = LinComb::zero(Var::T);
        for (a, x) in self.comb.iter() {
            for (b, y) in other.comb.iter() {
                out.add_term(a.union(b), &(x * y));
            }
        }
        Self::from_comb(out)
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Largest weight present, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.comb.keys().map(Partition::weight).max()
    }

    pub fn is_homogeneous(&self, n: usize) -> bool {
        self.comb.keys().all(|l| l.weight() == n)
    }

    /// Specialize `t` to a rational value.
    pub fn eval_t(&self, value: &BigRational) -> Result<Self> {
        let mut out = LinComb::zero(Var::T);
        for (l, c) in self.comb.iter() {
            out.add_term(l.clone(), &RatFunc::constant(c.eval(value)?, Var::T));
        }
        Ok(Self::from_comb(out))
    }

    pub fn render(&self) -> String {
        render_terms(
            self.comb
                .iter()
                .map(|(l, c)| (label::<B>(l), c)),
            "0",
        )
    }

    pub fn render_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .comb
            .iter()
            .map(|(l, c)| {
                let mono = if l.is_empty() {
                    String::new()
                } else {
                    format!("{}_{{{}}}", B::NAME, l.render_latex())
                };
                latex_term(c, &mono)
            })
            .collect();
        join_latex(parts)
    }

    pub fn to_records(&self) -> Vec<TermRecord> {
        self.comb
            .iter()
            .map(|(l, c)| TermRecord {
                basis: B::NAME.to_string(),
                partition: l.to_string(),
                coefficient: c.render(),
            })
            .collect()
    }

    pub fn from_records(records: &[TermRecord]) -> Result<Self> {
        let mut out = Self::zero();
        for r in records {
            if r.basis != B::NAME {
                return Err(Error::Parse(format!(
                    "expected basis {:?}, found {:?}",
                    B::NAME,
                    r.basis
                )));
            }
            let l: Partition = r.partition.parse()?;
            out.add_term(l, &parse_ratfunc(&r.coefficient, Var::T)?);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.to_records()).expect("serializable records")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let records: Vec<TermRecord> = serde_json::from_value(value.clone())
            .map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_records(&records)
    }
}

impl<B: Basis> fmt::Display for Expansion<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// One serialized term of a [`SymFunc`] or [`CExpr`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub basis: String,
    pub partition: String,
    pub coefficient: String,
}

fn label<B: Basis>(l: &Partition) -> String {
    if l.is_empty() {
        String::new()
    } else {
        format!("{}[{}]", B::NAME, l)
    }
}

/// Render `Σ coeff·label` in the house style: unit coefficients are
/// dropped, constants are pulled out as signs, anything else is
/// parenthesized, e.g. `[2] + (1-q)[1,1] - 1/2[1]`.
pub(crate) fn render_terms<'a>(
    terms: impl Iterator<Item = (String, &'a RatFunc)>,
    zero: &str,
) -> String {
    let mut out = String::new();
    for (label, c) in terms {
        let (neg, body) = match c.as_constant() {
            Some(r) => {
                let neg = r < num_traits::Zero::zero();
                let a = if neg { -r } else { r };
                let body = if num_traits::One::is_one(&a) {
                    if label.is_empty() {
                        "1".to_string()
                    } else {
                        label.clone()
                    }
                } else if label.is_empty() {
                    a.to_string()
                } else {
                    format!("({a}){label}")
                };
                (neg, body)
            }
            None => (false, format!("({}){label}", c.render_compact())),
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        zero.to_string()
    } else {
        out
    }
}

pub(crate) fn latex_term(c: &RatFunc, mono: &str) -> String {
    if c.is_one() {
        return if mono.is_empty() { "1".into() } else { mono.into() };
    }
    let coeff = c.render_latex();
    let wrapped = if c.is_polynomial() && c.numer().coeffs().iter().filter(|x| !num_traits::Zero::is_zero(*x)).count() > 1 {
        format!("\\left({coeff}\\right)")
    } else {
        coeff
    };
    format!("{wrapped}{}{mono}", if mono.is_empty() { "" } else { " " })
}

pub(crate) fn join_latex(parts: Vec<String>) -> String {
    let mut out = String::new();
    for p in parts {
        if out.is_empty() {
            out = p;
        } else if let Some(rest) = p.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&p);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products_concatenate() {
        let p1 = SymFunc::monomial("1".parse().unwrap());
        let p2 = SymFunc::monomial("2".parse().unwrap());
        let prod = p1.mul(&p2).mul(&p1);
        assert_eq!(prod, SymFunc::monomial("2,1,1".parse().unwrap()));
        assert_eq!(prod.degree(), Some(4));
    }

    #[test]
    fn json_round_trip() {
        let x = c_in_p(3);
        let back = SymFunc::from_json(&x.to_json()).unwrap();
        assert_eq!(back, x);
        let recs = x.to_records();
        assert!(recs.windows(2).all(|w| {
            w[0].partition.parse::<Partition>().unwrap() < w[1].partition.parse::<Partition>().unwrap()
        }));
        assert!(CExpr::from_json(&x.to_json()).is_err());
    }

    #[test]
    fn text_rendering() {
        let x = c_in_p(1);
        assert_eq!(x.render(), "(1-t)p[1]");
        assert_eq!(SymFunc::one().render(), "1");
        assert_eq!(SymFunc::zero().render(), "0");
        let h2 = h_in_p(2);
        assert_eq!(h2.render(), "(1/2)p[2] + (1/2)p[1,1]");
        assert_eq!(h2.render_latex(), "\\frac{1}{2} p_{(2)} + \\frac{1}{2} p_{(1,1)}");
    }
}
