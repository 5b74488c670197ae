//! Hall algebra of nilpotent representations of the Jordan quiver over
//! `Q(q)`, with basis the iso classes `[I_λ]`.
//!
//! Structure constants come from Hall–Littlewood products:
//! `g^λ_{μν}(q) = q^{n(λ)-n(μ)-n(ν)} f^λ_{μν}(q^{-1})` where
//! `P_μ P_ν = Σ f^λ_{μν}(t) P_λ`. The Euler form of the Jordan quiver is
//! identically zero, so products and coproducts carry no twist.

use std::collections::HashMap;
use std::fmt;
use std::sync::{LazyLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{parse_ratfunc, RatFunc, Var};
use crate::lincomb::LinComb;
use crate::partitions::{multinomial, partitions_of, Partition};
use crate::symfunc::{
    cexpr_to_p, join_latex, latex_term, p_from_c_closed, render_terms, CExpr, HallLittlewood,
    SymFunc,
};

/// `Σ c_λ [I_λ]` with coefficients in `Q(q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HallElem(LinComb<Partition>);

/// Element of `H ⊗ H` in the basis `[I_μ] ⊗ [I_ν]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HallTensor(pub LinComb<(Partition, Partition)>);

/// Element of `H ⊗ H ⊗ H`.
pub type HallTensor3 = LinComb<(Partition, Partition, Partition)>;

/// One serialized term of a [`HallElem`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HallRecord {
    pub partition: String,
    pub coefficient: String,
}

fn class_label(l: &Partition) -> String {
    format!("[{l}]")
}

impl HallElem {
    pub fn zero() -> Self {
        HallElem(LinComb::zero(Var::Q))
    }

    /// The unit `[0]`.
    pub fn one() -> Self {
        Self::basis(Partition::empty())
    }

    pub fn basis(lambda: Partition) -> Self {
        Self::term(lambda, RatFunc::one(Var::Q))
    }

    pub fn term(lambda: Partition, c: RatFunc) -> Self {
        assert_eq!(c.var(), Var::Q, "Hall algebra coefficients are in Q(q)");
        HallElem(LinComb::term(lambda, c))
    }

    pub fn from_comb(comb: LinComb<Partition>) -> Self {
        assert_eq!(comb.var(), Var::Q);
        HallElem(comb)
    }

    pub fn comb(&self) -> &LinComb<Partition> {
        &self.0
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &RatFunc)> {
        self.0.iter()
    }

    pub fn coeff(&self, lambda: &Partition) -> RatFunc {
        self.0.coeff(lambda)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        HallElem(self.0.add(&other.0))
    }

    pub fn sub(&self, other: &Self) -> Self {
        HallElem(self.0.sub(&other.0))
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        HallElem(self.0.scale(c))
    }

    pub fn add_term(&mut self, lambda: Partition, c: &RatFunc) {
        self.0.add_term(lambda, c);
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        mul(self, other)
    }

    /// Evaluate every coefficient at a rational `q`.
    pub fn eval(&self, q: &BigRational) -> Result<Vec<(Partition, BigRational)>> {
        self.0
            .iter()
            .map(|(l, c)| Ok((l.clone(), c.eval(q)?)))
            .collect()
    }

    /// `[2] + (1-q)[1,1]`; the unit is `[0]`.
    pub fn render(&self) -> String {
        render_terms(self.0.iter().map(|(l, c)| (class_label(l), c)), "0")
    }

    pub fn render_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts = self
            .0
            .iter()
            .map(|(l, c)| latex_term(c, &format!("[I_{{{}}}]", l.render_latex())))
            .collect();
        join_latex(parts)
    }

    pub fn to_records(&self) -> Vec<HallRecord> {
        self.0
            .iter()
            .map(|(l, c)| HallRecord {
                partition: l.to_string(),
                coefficient: c.render(),
            })
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.to_records()).expect("serializable records")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let records: Vec<HallRecord> =
            serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let mut out = Self::zero();
        for r in records {
            out.add_term(r.partition.parse()?, &parse_ratfunc(&r.coefficient, Var::Q)?);
        }
        Ok(out)
    }
}

impl fmt::Display for HallElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl HallTensor {
    pub fn zero() -> Self {
        HallTensor(LinComb::zero(Var::Q))
    }

    pub fn simple(a: &HallElem, b: &HallElem) -> Self {
        let mut out = LinComb::zero(Var::Q);
        for (l, x) in a.terms() {
            for (m, y) in b.terms() {
                out.add_term((l.clone(), m.clone()), &(x * y));
            }
        }
        HallTensor(out)
    }

    pub fn add(&self, other: &Self) -> Self {
        HallTensor(self.0.add(&other.0))
    }

    pub fn sub(&self, other: &Self) -> Self {
        HallTensor(self.0.sub(&other.0))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// `(a⊗b)(c⊗d) = ac ⊗ bd`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let mut out = LinComb::zero(Var::Q);
        for ((a, b), x) in self.0.iter() {
            for ((c, d), y) in other.0.iter() {
                let left = basis_product(a, c)?;
                let right = basis_product(b, d)?;
                let xy = x * y;
                for (l, u) in left.iter() {
                    for (r, w) in right.iter() {
                        out.add_term((l.clone(), r.clone()), &(&xy * &(u * w)));
                    }
                }
            }
        }
        Ok(HallTensor(out))
    }

    pub fn render(&self) -> String {
        render_terms(
            self.0
                .iter()
                .map(|((a, b), c)| (format!("{}⊗{}", class_label(a), class_label(b)), c)),
            "0",
        )
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .0
            .iter()
            .map(|((a, b), c)| {
                serde_json::json!({
                    "left": a.to_string(),
                    "right": b.to_string(),
                    "coefficient": c.render(),
                })
            })
            .collect();
        serde_json::Value::Array(terms)
    }
}

impl fmt::Display for HallTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

type ProductTable = HashMap<(Partition, Partition), LinComb<Partition>>;

static PRODUCTS: LazyLock<RwLock<ProductTable>> = LazyLock::new(|| RwLock::new(HashMap::new()));

/// `[I_μ][I_ν] = Σ_λ g^λ_{μν}(q) [I_λ]`, memoized.
fn basis_product(mu: &Partition, nu: &Partition) -> Result<LinComb<Partition>> {
    let key = if mu <= nu {
        (mu.clone(), nu.clone())
    } else {
        (nu.clone(), mu.clone())
    };
    if let Some(v) = PRODUCTS.read().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let f = HallLittlewood::global().product_in_hl(mu, nu)?;
    let base = mu.n_stat() as i64 + nu.n_stat() as i64;
    let mut out = LinComb::zero(Var::Q);
    for (lambda, c) in f.iter() {
        let g = &c.substitute_t_to_q_power(1)?
            * &RatFunc::var_pow(Var::Q, lambda.n_stat() as i64 - base);
        let integral = g.as_poly().map(|p| p.has_integer_coeffs()).unwrap_or(false);
        if !integral {
            return Err(Error::Consistency(format!(
                "g^{lambda}_{{{mu},{nu}}} = {g} is not an integer polynomial"
            )));
        }
        out.add_term(lambda.clone(), &g);
    }
    PRODUCTS.write().unwrap().entry(key).or_insert(out.clone());
    Ok(out)
}

/// Hall polynomial `g^λ_{μν}(q)`: the number of submodules of `I_λ`
/// isomorphic to `I_ν` with quotient isomorphic to `I_μ`.
pub fn hall_polynomial(mu: &Partition, nu: &Partition, lambda: &Partition) -> Result<RatFunc> {
    if mu.weight() + nu.weight() != lambda.weight() {
        return Ok(RatFunc::zero(Var::Q));
    }
    Ok(basis_product(mu, nu)?.coeff(lambda))
}

/// `|Aut(I_λ)| = q^{|λ|+2n(λ)} ∏_i ∏_{j=1}^{m_i(λ)} (1 - q^{-j})`.
pub fn aut_order(lambda: &Partition) -> RatFunc {
    let mut out = RatFunc::var_pow(Var::Q, (lambda.weight() + 2 * lambda.n_stat()) as i64);
    for m in lambda.multiplicities() {
        for j in 1..=m {
            out = &out * &RatFunc::one_minus_pow(Var::Q, -(j as i64));
        }
    }
    out
}

pub fn mul(x: &HallElem, y: &HallElem) -> Result<HallElem> {
    let mut out = LinComb::zero(Var::Q);
    for (a, u) in x.terms() {
        for (b, w) in y.terms() {
            let uw = u * w;
            for (l, g) in basis_product(a, b)?.iter() {
                out.add_term(l.clone(), &(&uw * g));
            }
        }
    }
    Ok(HallElem(out))
}

/// `Δ[I_λ] = Σ_{μ,ν} g^λ_{μν} a_μ a_ν / a_λ [I_μ] ⊗ [I_ν]`.
pub fn coproduct_basis(lambda: &Partition) -> Result<HallTensor> {
    let n = lambda.weight();
    let a_lambda = aut_order(lambda);
    let mut out = LinComb::zero(Var::Q);
    for k in 0..=n {
        for mu in partitions_of(k) {
            for nu in partitions_of(n - k) {
                let g = hall_polynomial(&mu, &nu, lambda)?;
                if g.is_zero() {
                    continue;
                }
                let c = &(&g * &(&aut_order(&mu) * &aut_order(&nu))) / &a_lambda;
                out.add_term((mu.clone(), nu), &c);
            }
        }
    }
    Ok(HallTensor(out))
}

pub fn coproduct(x: &HallElem) -> Result<HallTensor> {
    let mut out = HallTensor::zero();
    for (lambda, c) in x.terms() {
        out = out.add(&HallTensor(coproduct_basis(lambda)?.0.scale(c)));
    }
    Ok(out)
}

/// `(Δ ⊗ id)`.
pub fn coproduct_left(x: &HallTensor) -> Result<HallTensor3> {
    let mut out = LinComb::zero(Var::Q);
    for ((a, b), c) in x.0.iter() {
        for ((l, m), w) in coproduct_basis(a)?.0.iter() {
            out.add_term((l.clone(), m.clone(), b.clone()), &(c * w));
        }
    }
    Ok(out)
}

/// `(id ⊗ Δ)`.
pub fn coproduct_right(x: &HallTensor) -> Result<HallTensor3> {
    let mut out = LinComb::zero(Var::Q);
    for ((a, b), c) in x.0.iter() {
        for ((l, m), w) in coproduct_basis(b)?.0.iter() {
            out.add_term((a.clone(), l.clone(), m.clone()), &(c * w));
        }
    }
    Ok(out)
}

/// `Φ: t ↦ q^{-1}, t^{n(λ)} P_λ ↦ [I_λ]`.
pub fn phi(x: &SymFunc) -> Result<HallElem> {
    let coords = HallLittlewood::global().to_hl_basis(x)?;
    let mut out = HallElem::zero();
    for (lambda, c) in coords.iter() {
        let image = &c.substitute_t_to_q_power(1)? * &RatFunc::var_pow(Var::Q, lambda.n_stat() as i64);
        out.add_term(lambda.clone(), &image);
    }
    Ok(out)
}

pub fn phi_cexpr(x: &CExpr) -> Result<HallElem> {
    phi(&cexpr_to_p(x))
}

/// `z_r = (1 - q^{-1}) [I_(r)]`.
pub fn z_generator(r: usize) -> HallElem {
    HallElem::term(Partition::single(r), RatFunc::one_minus_pow(Var::Q, -1))
}

/// `z_λ = ∏ z_{λ_i}` in the Hall algebra.
pub fn z_monomial(lambda: &Partition) -> Result<HallElem> {
    let mut out = HallElem::one();
    for &r in lambda.parts() {
        out = mul(&out, &z_generator(r))?;
    }
    Ok(out)
}

/// `n/(1-q^{-mn}) Σ_{λ⊢n} (-1)^{l+1} (1/l) multinomial(l; m(λ)) z_λ`.
/// Only the one-vertex case is symbolic; cyclic quivers with `m > 1`
/// live in the numeric oracle.
pub fn primitive_center(n: usize, m: u32) -> Result<HallElem> {
    if m != 1 {
        return Err(Error::Unsupported(format!(
            "symbolic central formula is only available for one vertex, got m = {m}"
        )));
    }
    if n == 0 {
        return Err(Error::Unsupported("p_0 is not defined".into()));
    }
    let mut out = HallElem::zero();
    for (lambda, c) in p_from_c_closed(n).terms() {
        let coeff = c.substitute_t_to_q_power(m)?;
        out = out.add(&z_monomial(lambda)?.scale(&coeff));
    }
    Ok(out)
}

/// `Σ_{λ⊢n} (1-q)(1-q^2)···(1-q^{l(λ)-1}) [I_λ]`.
pub fn primitive_macdonald_image(n: usize) -> HallElem {
    let mut out = HallElem::zero();
    for lambda in partitions_of(n) {
        let mut c = RatFunc::one(Var::Q);
        for j in 1..lambda.length() {
            c = &c * &RatFunc::one_minus_pow(Var::Q, j as i64);
        }
        out.add_term(lambda, &c);
    }
    out
}

/// `Δx = x⊗[0] + [0]⊗x`.
pub fn is_primitive(x: &HallElem) -> Result<bool> {
    let one = HallElem::one();
    let defect = coproduct(x)?
        .sub(&HallTensor::simple(x, &one))
        .sub(&HallTensor::simple(&one, x));
    Ok(defect.is_zero())
}

/// Both sides of the Hall-number identity for `λ ⊢ n`:
/// `∏_{j<l(λ)} (1-q^j)` and
/// `n/(1-q^{-n}) Σ_{μ⊢n} (-1)^{l(μ)+1} (1/l(μ)) multinomial(l(μ); m(μ)) (1-q^{-1})^{l(μ)} F^λ_μ`
/// with `F^λ_μ` the coefficient of `[I_λ]` in `∏_i [I_(i)]^{m_i(μ)}`.
pub fn hall_identity_sides(n: usize, lambda: &Partition) -> Result<(RatFunc, RatFunc)> {
    if lambda.weight() != n || n == 0 {
        return Err(Error::Unsupported(format!("{lambda} is not a partition of {n}")));
    }
    let mut lhs = RatFunc::one(Var::Q);
    for j in 1..lambda.length() {
        lhs = &lhs * &RatFunc::one_minus_pow(Var::Q, j as i64);
    }
    let mut sum = RatFunc::zero(Var::Q);
    for mu in partitions_of(n) {
        let l = mu.length();
        let mults: Vec<u64> = mu.multiplicities().iter().map(|&x| x as u64).collect();
        let sign: i64 = if l % 2 == 1 { 1 } else { -1 };
        let scalar = BigRational::new(multinomial(l as u64, &mults)? * BigInt::from(sign), BigInt::from(l));
        let mut prod = HallElem::one();
        for &part in mu.parts() {
            prod = mul(&prod, &HallElem::basis(Partition::single(part)))?;
        }
        let f = prod.coeff(lambda);
        let term = &RatFunc::one_minus_pow(Var::Q, -1).pow(l as u32) * &f;
        sum += &term.scale(&scalar);
    }
    let rhs = &(&RatFunc::from_int(n as i64, Var::Q) / &RatFunc::one_minus_pow(Var::Q, -(n as i64))) * &sum;
    Ok((lhs, rhs))
}

pub fn verify_hall_identity(n: usize, lambda: &Partition) -> Result<bool> {
    let (lhs, rhs) = hall_identity_sides(n, lambda)?;
    Ok(lhs == rhs)
}

/// A three-term closed form for `p_3` found in print:
/// `3/(q^3-1) { [3] + (q-1)^2(q^2-q-1)[2,1] + (q-1)^3(q+1)(q^2+q+1)[1,1,1] }`.
/// It disagrees with the Macdonald expansion; kept only to report that.
pub fn printed_p3() -> HallElem {
    let q = |c: &[i64]| RatFunc::from_poly(crate::exactalg::Poly::from_int_coeffs(c), Var::Q);
    let pre = &RatFunc::from_int(3, Var::Q) / &q(&[-1, 0, 0, 1]);
    let qm1 = q(&[-1, 1]);
    let mut out = HallElem::zero();
    out.add_term(Partition::single(3), &pre);
    out.add_term(
        Partition::new(vec![2, 1]),
        &(&pre * &(&qm1.pow(2) * &q(&[-1, -1, 1]))),
    );
    out.add_term(
        Partition::new(vec![1, 1, 1]),
        &(&pre * &(&(&qm1.pow(3) * &q(&[1, 1])) * &q(&[1, 1, 1]))),
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::{c_in_p, hall_littlewood_p, macdonald_primitive};

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn qpoly(c: &[i64]) -> RatFunc {
        RatFunc::from_poly(crate::exactalg::Poly::from_int_coeffs(c), Var::Q)
    }

    #[test]
    fn small_hall_polynomials() {
        assert_eq!(hall_polynomial(&part("1"), &part("1"), &part("1,1")).unwrap(), qpoly(&[1, 1]));
        assert_eq!(hall_polynomial(&part("1"), &part("1"), &part("2")).unwrap(), qpoly(&[1]));
        assert_eq!(hall_polynomial(&part("1"), &part("1"), &part("3")).unwrap(), RatFunc::zero(Var::Q));
        for n in 0..=5 {
            for l in partitions_of(n) {
                assert!(hall_polynomial(&l, &Partition::empty(), &l).unwrap().is_one());
                assert!(hall_polynomial(&Partition::empty(), &l, &l).unwrap().is_one());
            }
        }
        assert_eq!(hall_polynomial(&part("1"), &part("1"), &part("1,1")).unwrap().render(), "q + 1");
    }

    #[test]
    fn small_products() {
        let i1 = HallElem::basis(part("1"));
        let mut expected = HallElem::basis(part("2"));
        expected.add_term(part("1,1"), &qpoly(&[1, 1]));
        assert_eq!(mul(&i1, &i1).unwrap(), expected);
        let mut expected = HallElem::basis(part("3"));
        expected.add_term(part("2,1"), &qpoly(&[0, 1]));
        assert_eq!(mul(&i1, &HallElem::basis(part("2"))).unwrap(), expected);
        let x = expected.add(&i1);
        assert_eq!(mul(&HallElem::one(), &x).unwrap(), x);
    }

    #[test]
    fn automorphism_orders() {
        for r in 1..=6 {
            assert_eq!(aut_order(&Partition::single(r)), &RatFunc::var_pow(Var::Q, r as i64 - 1) * &qpoly(&[-1, 1]));
        }
        assert_eq!(aut_order(&part("1,1")), &qpoly(&[-1, 0, 1]) * &qpoly(&[0, -1, 1]));
        assert!(aut_order(&Partition::empty()).is_one());
    }

    #[test]
    fn coproduct_examples() {
        let one = HallElem::one();
        assert_eq!(coproduct(&one).unwrap(), HallTensor::simple(&one, &one));
        let i1 = HallElem::basis(part("1"));
        assert_eq!(
            coproduct(&i1).unwrap(),
            HallTensor::simple(&i1, &one).add(&HallTensor::simple(&one, &i1))
        );
        let i2 = HallElem::basis(part("2"));
        // a_1^2 / a_2 = (q-1)^2 / (q(q-1)) = (q-1)/q
        let mid = &qpoly(&[-1, 1]) / &qpoly(&[0, 1]);
        let expected = HallTensor::simple(&i2, &one)
            .add(&HallTensor::simple(&i1, &i1.scale(&mid)))
            .add(&HallTensor::simple(&one, &i2));
        assert_eq!(coproduct(&i2).unwrap(), expected);
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&SymFunc::monomial(part("1"))).unwrap(), HallElem::basis(part("1")));
        assert_eq!(phi(&SymFunc::one()).unwrap(), HallElem::one());
        let mut p2 = HallElem::basis(part("2"));
        p2.add_term(part("1,1"), &qpoly(&[1, -1]));
        assert_eq!(phi(&macdonald_primitive(2).unwrap()).unwrap(), p2);
        assert_eq!(p2.render(), "[2] + (1-q)[1,1]");
        for r in 1..=5 {
            assert_eq!(phi(&c_in_p(r)).unwrap(), z_generator(r), "r = {r}");
        }
    }

    #[test]
    fn primitive_formulas_agree() {
        let mut p2 = HallElem::basis(part("2"));
        p2.add_term(part("1,1"), &qpoly(&[1, -1]));
        assert_eq!(primitive_center(2, 1).unwrap(), p2);
        assert_eq!(primitive_center(1, 1).unwrap(), HallElem::basis(part("1")));
        for n in 1..=5 {
            let mac = primitive_macdonald_image(n);
            assert_eq!(primitive_center(n, 1).unwrap(), mac, "n = {n}");
            assert_eq!(phi(&SymFunc::monomial(Partition::single(n))).unwrap(), mac, "n = {n}");
        }
        assert!(primitive_center(2, 2).is_err());
        assert_ne!(printed_p3(), primitive_macdonald_image(3));
    }

    #[test]
    fn primitivity() {
        assert!(is_primitive(&HallElem::basis(part("1"))).unwrap());
        assert!(!is_primitive(&HallElem::basis(part("1,1"))).unwrap());
        for n in 1..=5 {
            assert!(is_primitive(&primitive_macdonald_image(n)).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn hall_number_identity() {
        let (lhs, rhs) = hall_identity_sides(2, &part("1,1")).unwrap();
        assert_eq!(lhs, qpoly(&[1, -1]));
        assert_eq!(rhs, qpoly(&[1, -1]));
        for n in 1..=5 {
            for l in partitions_of(n) {
                assert!(verify_hall_identity(n, &l).unwrap(), "{l}");
            }
        }
    }

    #[test]
    fn phi_is_multiplicative() {
        let ps: Vec<Partition> = (1..=3).flat_map(partitions_of).collect();
        for a in &ps {
            for b in &ps {
                if a.weight() + b.weight() > 5 {
                    continue;
                }
                let x = hall_littlewood_p(a).unwrap();
                let y = hall_littlewood_p(b).unwrap();
                assert_eq!(phi(&x.mul(&y)).unwrap(), mul(&phi(&x).unwrap(), &phi(&y).unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let x = primitive_macdonald_image(4);
        assert_eq!(HallElem::from_json(&x.to_json()).unwrap(), x);
    }
}
