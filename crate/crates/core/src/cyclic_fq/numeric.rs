//! Hall algebra of the cyclic quiver specialized at `q`, with coefficients
//! in `Q(v)`, `v² = q`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::count::{aut_count, end_dim, extension_product, submodule_count, submodule_table};
use super::{check_field, classes_up_to, enumerate_iso, CyclicIsoClass, Summand};
use crate::error::{Error, Result};
use crate::exactalg::{parse_rational, RootQ};
use crate::symfunc::p_from_c_closed;

/// Largest total dimension `r·m` accepted by [`z_r_numeric`].
pub const Z_DIM_CAP: usize = 6;

/// `⟨d, e⟩ = Σ_h d_h e_h - Σ_h d_h e_{h-1}`.
pub fn euler_form(d: &[usize], e: &[usize]) -> i64 {
    let m = d.len();
    let mut s = 0i64;
    for h in 0..m {
        s += (d[h] * e[h]) as i64;
        s -= (d[h] * e[(h + m - 1) % m]) as i64;
    }
    s
}

/// Finite combination of iso classes with coefficients in `Q(v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumHallElem {
    m: u32,
    q: u32,
    terms: BTreeMap<CyclicIsoClass, RootQ>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct NumTermRecord {
    class: String,
    coeff: String,
    v_exp: u8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct NumRecord {
    m: u32,
    q: u32,
    terms: Vec<NumTermRecord>,
}

fn class_term(cls: &CyclicIsoClass) -> String {
    if cls.summands().len() > 1 {
        format!("I({})", cls.label())
    } else {
        format!("I{}", cls.label())
    }
}

fn render_root(c: &RootQ) -> String {
    if c.radical_part().is_zero() {
        c.rational_part().to_string()
    } else {
        format!("({c})")
    }
}

impl NumHallElem {
    pub fn zero(m: u32, q: u32) -> Self {
        NumHallElem {
            m,
            q,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(m: u32, q: u32) -> Self {
        Self::basis(CyclicIsoClass::zero(m), q)
    }

    pub fn basis(cls: CyclicIsoClass, q: u32) -> Self {
        let m = cls.m();
        let mut out = Self::zero(m, q);
        out.add_term(cls, &RootQ::from_rational(q, BigRational::one()));
        out
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CyclicIsoClass, &RootQ)> {
        self.terms.iter()
    }

    pub fn coeff(&self, cls: &CyclicIsoClass) -> RootQ {
        self.terms.get(cls).cloned().unwrap_or_else(|| RootQ::zero(self.q))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, cls: CyclicIsoClass, c: &RootQ) {
        assert_eq!(cls.m(), self.m, "vertex counts differ");
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(cls).or_insert_with(|| RootQ::zero(self.q));
        *entry = &*entry + c;
        self.terms.retain(|_, v| !v.is_zero());
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), &-v);
        }
        out
    }

    pub fn scale(&self, c: &RootQ) -> Self {
        let mut out = Self::zero(self.m, self.q);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), &(v * c));
        }
        out
    }

    pub fn scale_rational(&self, c: &BigRational) -> Self {
        self.scale(&RootQ::from_rational(self.q, c.clone()))
    }

    pub fn neg(&self) -> Self {
        self.scale_rational(&-BigRational::one())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        mul_numeric(self, other)
    }

    /// `-1/2*I[1;2] + 1/4*I([0;1]+[1;1])`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (cls, c) in &self.terms {
            let (neg, abs) = if c.radical_part().is_zero() && c.rational_part().is_negative() {
                (true, -c)
            } else {
                (false, c.clone())
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&format!("{}*{}", render_root(&abs), class_term(cls)));
        }
        if out.is_empty() {
            "0".into()
        } else {
            out
        }
    }

    pub fn render_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (cls, c) in &self.terms {
            let coeff = if c.radical_part().is_zero() {
                latex_rational(c.rational_part())
            } else {
                format!(
                    "\\left({} + {}\\sqrt{{{}}}\\right)",
                    latex_rational(c.rational_part()),
                    latex_rational(c.radical_part()),
                    self.q
                )
            };
            let term = format!("{coeff}\\,[{}]", cls.render_latex());
            if out.is_empty() {
                out = term;
            } else if let Some(rest) = term.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(&term);
            }
        }
        out
    }

    /// `{m, q, terms: [{class, coeff, v_exp}]}`; a coefficient `a + b·v`
    /// becomes up to two records with `v_exp` 0 and 1.
    pub fn to_json(&self) -> serde_json::Value {
        let mut terms = Vec::new();
        for (cls, c) in &self.terms {
            for (part, v_exp) in [(c.rational_part(), 0u8), (c.radical_part(), 1)] {
                if !part.is_zero() {
                    terms.push(NumTermRecord {
                        class: cls.label(),
                        coeff: part.to_string(),
                        v_exp,
                    });
                }
            }
        }
        serde_json::to_value(NumRecord {
            m: self.m,
            q: self.q,
            terms,
        })
        .expect("serializable record")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let rec: NumRecord =
            serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        check_field(rec.q)?;
        let mut out = Self::zero(rec.m, rec.q);
        for t in rec.terms {
            let cls = CyclicIsoClass::parse_with_m(&t.class, rec.m)?;
            let c = RootQ::v_pow(rec.q, t.v_exp as i64).scale(&parse_rational(&t.coeff)?);
            out.add_term(cls, &c);
        }
        Ok(out)
    }
}

fn latex_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.to_string()
    } else {
        let sign = if r.is_negative() { "-" } else { "" };
        format!("{sign}\\frac{{{}}}{{{}}}", r.numer().abs(), r.denom())
    }
}

impl fmt::Display for NumHallElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Element of `H ⊗ H` specialized at `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumTensor {
    pub q: u32,
    pub terms: BTreeMap<(CyclicIsoClass, CyclicIsoClass), RootQ>,
}

impl NumTensor {
    pub fn zero(q: u32) -> Self {
        NumTensor {
            q,
            terms: BTreeMap::new(),
        }
    }

    pub fn add_term(&mut self, key: (CyclicIsoClass, CyclicIsoClass), c: &RootQ) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key.clone()).or_insert_with(|| RootQ::zero(self.q));
        *entry = &*entry + c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|((a, b), c)| format!("{}*{}⊗{}", render_root(c), class_term(a), class_term(b)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

fn same_algebra(x: &NumHallElem, y: &NumHallElem) -> Result<()> {
    if x.m != y.m {
        return Err(Error::VertexMismatch(x.m, y.m));
    }
    if x.q != y.q {
        return Err(Error::Unsupported(format!(
            "elements live over different fields: q = {} and q = {}",
            x.q, y.q
        )));
    }
    Ok(())
}

/// `[M]·[N] = v^{⟨M,N⟩} Σ_R g^R_{M,N} [R]`, with Hall numbers from the
/// extension count.
pub fn mul_numeric(x: &NumHallElem, y: &NumHallElem) -> Result<NumHallElem> {
    same_algebra(x, y)?;
    let q = x.q;
    let mut out = NumHallElem::zero(x.m, q);
    for (mm, a) in &x.terms {
        for (nn, b) in &y.terms {
            let twist = RootQ::v_pow(q, euler_form(&mm.dim_vector(), &nn.dim_vector()));
            let ab = &(a * b) * &twist;
            for (r, g) in extension_product(mm, nn, q)?.iter() {
                out.add_term(r.clone(), &ab.scale(&BigRational::from_integer(g.clone())));
            }
        }
    }
    Ok(out)
}

/// Same product, with every Hall number read off from exhaustive submodule
/// enumeration of each candidate `R` (total dimension at most 6).
pub fn mul_numeric_by_submodules(x: &NumHallElem, y: &NumHallElem) -> Result<NumHallElem> {
    same_algebra(x, y)?;
    let q = x.q;
    let mut out = NumHallElem::zero(x.m, q);
    for (mm, a) in &x.terms {
        for (nn, b) in &y.terms {
            let twist = RootQ::v_pow(q, euler_form(&mm.dim_vector(), &nn.dim_vector()));
            let ab = &(a * b) * &twist;
            let d: Vec<usize> = mm
                .dim_vector()
                .iter()
                .zip(nn.dim_vector())
                .map(|(s, t)| s + t)
                .collect();
            for r in enumerate_iso(x.m, &d)? {
                let g = submodule_count(&r, nn, mm, q)?;
                out.add_term(r, &ab.scale(&BigRational::from_integer(g)));
            }
        }
    }
    Ok(out)
}

/// `Δ[R] = Σ v^{⟨M,N⟩} g^R_{M,N} a_M a_N / a_R [M]⊗[N]`.
pub fn coproduct_numeric(x: &NumHallElem) -> Result<NumTensor> {
    let q = x.q;
    let mut out = NumTensor::zero(q);
    for (r, c) in &x.terms {
        let a_r = aut_count(r, q);
        for ((sub, quot), g) in submodule_table(r, q)?.iter() {
            let twist = RootQ::v_pow(q, euler_form(&quot.dim_vector(), &sub.dim_vector()));
            let ratio = BigRational::new(g * aut_count(quot, q) * aut_count(sub, q), a_r.clone());
            out.add_term((quot.clone(), sub.clone()), &(&twist * c).scale(&ratio));
        }
    }
    Ok(out)
}

/// `Δx = x⊗[0] + [0]⊗x`.
pub fn is_primitive_numeric(x: &NumHallElem) -> Result<bool> {
    let mut defect = coproduct_numeric(x)?;
    let zero = CyclicIsoClass::zero(x.m);
    for (cls, c) in &x.terms {
        defect.add_term((cls.clone(), zero.clone()), &-c);
        defect.add_term((zero.clone(), cls.clone()), &-c);
    }
    Ok(defect.is_zero())
}

/// `x·[M] = [M]·x` for every nonzero class of total dimension at most
/// `dim_cap`.
pub fn is_central(x: &NumHallElem, dim_cap: usize) -> Result<bool> {
    let failures: Result<Vec<bool>> = classes_up_to(x.m, dim_cap)
        .into_par_iter()
        .map(|cls| {
            let b = NumHallElem::basis(cls, x.q);
            Ok(mul_numeric(x, &b)? == mul_numeric(&b, x)?)
        })
        .collect();
    Ok(failures?.into_iter().all(|ok| ok))
}

/// `z_r = (-q^{-1})^{rm} Σ (-1)^{dim End M} |Aut M| [M]`, summed over
/// classes of dimension `rδ` with square-free socle.
pub fn z_r_numeric(m: u32, r: usize, q: u32) -> Result<NumHallElem> {
    check_field(q)?;
    if r * m as usize > Z_DIM_CAP {
        return Err(Error::DimensionCap {
            what: "z_r",
            dim: r * m as usize,
            cap: Z_DIM_CAP,
        });
    }
    let prefactor = {
        let base = BigRational::new((-1).into(), BigInt::from(q));
        num_traits::pow(base, r * m as usize)
    };
    let mut out = NumHallElem::zero(m, q);
    for cls in enumerate_iso(m, &vec![r; m as usize])? {
        if !cls.socle_squarefree() {
            continue;
        }
        let sign = if end_dim(&cls).is_multiple_of(2) { 1 } else { -1 };
        let c = &prefactor * BigRational::from_integer(aut_count(&cls, q) * sign);
        out.add_term(cls, &RootQ::from_rational(q, c));
    }
    Ok(out)
}

/// `n/(1-q^{-mn}) Σ_{λ⊢n} (-1)^{l+1} (1/l) multinomial(l; m(λ)) z_λ` at `q`.
pub fn theorem_element(m: u32, n: usize, q: u32) -> Result<NumHallElem> {
    check_field(q)?;
    let qq = BigRational::from_integer(q.into());
    let mut zs = vec![NumHallElem::one(m, q)];
    for r in 1..=n {
        zs.push(z_r_numeric(m, r, q)?);
    }
    let mut out = NumHallElem::zero(m, q);
    for (lambda, c) in p_from_c_closed(n).terms() {
        let coeff = c.substitute_t_to_q_power(m)?.eval(&qq)?;
        let mut z = NumHallElem::one(m, q);
        for &part in lambda.parts() {
            z = mul_numeric(&z, &zs[part])?;
        }
        out = out.add(&z.scale_rational(&coeff));
    }
    Ok(out)
}

/// `r z_r = Σ_{a=1}^r (1 - q^{-ma}) P_a z_{r-a}` with `P_a` from
/// [`theorem_element`] and `z_0 = [0]`.
pub fn c_recursion_holds(m: u32, r: usize, q: u32) -> Result<bool> {
    let qq = BigRational::from_integer(q.into());
    let mut zs = vec![NumHallElem::one(m, q)];
    for k in 1..=r {
        zs.push(z_r_numeric(m, k, q)?);
    }
    let mut rhs = NumHallElem::zero(m, q);
    for a in 1..=r {
        let factor = BigRational::one() - num_traits::pow(qq.recip(), m as usize * a);
        let pa = theorem_element(m, a, q)?;
        rhs = rhs.add(&mul_numeric(&pa, &zs[r - a])?.scale_rational(&factor));
    }
    Ok(zs[r].scale_rational(&BigRational::from_integer(r.into())) == rhs)
}

/// The closed form printed for the two-vertex quiver:
/// `(-q^{-1})^n (1-q^{-1})^2 Σ_{a=1}^n ( I_[1;2a] ⊕ I_[0;2(n-a)] - q I_[1;2a-1] ⊕ I_[0;2(n-a)+1] )`.
pub fn printed_z_two_vertex(n: usize, q: u32) -> Result<NumHallElem> {
    check_field(q)?;
    let qq = BigRational::from_integer(q.into());
    let one = BigRational::one();
    let pre = num_traits::pow(-qq.recip(), n) * num_traits::pow(&one - qq.recip(), 2);
    let mut out = NumHallElem::zero(2, q);
    let class = |lens: [(u32, usize); 2]| {
        let summands = lens
            .into_iter()
            .filter(|&(_, l)| l > 0)
            .map(|(top, len)| Summand { top, len })
            .collect();
        CyclicIsoClass::new(2, summands)
    };
    for a in 1..=n {
        out.add_term(
            class([(1, 2 * a), (0, 2 * (n - a))])?,
            &RootQ::from_rational(q, pre.clone()),
        );
        out.add_term(
            class([(1, 2 * a - 1), (0, 2 * (n - a) + 1)])?,
            &RootQ::from_rational(q, -&pre * &qq),
        );
    }
    Ok(out)
}

/// Outcome of comparing two elements up to an overall sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignMatch {
    Equal,
    Negated,
    Neither,
}

impl fmt::Display for SignMatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SignMatch::Equal => "equal",
            SignMatch::Negated => "equal up to sign -1",
            SignMatch::Neither => "different",
        })
    }
}

pub fn compare_up_to_sign(ours: &NumHallElem, other: &NumHallElem) -> SignMatch {
    if ours == other {
        SignMatch::Equal
    } else if *ours == other.neg() {
        SignMatch::Negated
    } else {
        SignMatch::Neither
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    fn cls(s: &str) -> CyclicIsoClass {
        s.parse().unwrap()
    }

    fn basis(s: &str, q: u32) -> NumHallElem {
        NumHallElem::basis(cls(s), q)
    }

    #[test]
    fn euler_form_values() {
        assert_eq!(euler_form(&[1, 1], &[1, 1]), 0);
        assert_eq!(euler_form(&[2, 2, 2], &[1, 0, 3]), 0);
        assert_eq!(euler_form(&[1, 0], &[0, 1]), -1);
        assert_eq!(euler_form(&[0, 1], &[1, 0]), -1);
        assert_eq!(euler_form(&[3], &[5]), 0);
    }

    #[test]
    fn jordan_products() {
        let i1 = basis("1", 2);
        let prod = mul_numeric(&i1, &i1).unwrap();
        let mut expected = basis("2", 2);
        expected.add_term(cls("1,1"), &RootQ::from_rational(2, rat(3, 1)));
        assert_eq!(prod, expected);
        let x = basis("2,1", 3).add(&basis("1", 3));
        assert_eq!(mul_numeric(&NumHallElem::one(1, 3), &x).unwrap(), x);
    }

    #[test]
    fn two_routes_to_products_agree() {
        for m in 1..=3 {
            let classes = classes_up_to(m, 3);
            for a in &classes {
                for b in &classes {
                    if a.total_dim() + b.total_dim() > 5 {
                        continue;
                    }
                    let (x, y) = (NumHallElem::basis(a.clone(), 2), NumHallElem::basis(b.clone(), 2));
                    assert_eq!(mul_numeric(&x, &y).unwrap(), mul_numeric_by_submodules(&x, &y).unwrap());
                }
            }
        }
    }

    #[test]
    fn z_generators() {
        let z = z_r_numeric(1, 1, 2).unwrap();
        let mut expected = NumHallElem::zero(1, 2);
        expected.add_term(cls("1"), &RootQ::from_rational(2, rat(1, 2)));
        assert_eq!(z, expected);
        let z = z_r_numeric(1, 2, 3).unwrap();
        let mut expected = NumHallElem::zero(1, 3);
        expected.add_term(cls("2"), &RootQ::from_rational(3, rat(2, 3)));
        assert_eq!(z, expected);
        assert!(z_r_numeric(3, 3, 2).is_err());
    }

    #[test]
    fn simples_do_not_commute() {
        let s0 = basis("m=2: [0;1]", 2);
        assert!(!is_central(&s0, 2).unwrap());
        assert!(is_central(&z_r_numeric(2, 1, 2).unwrap(), 3).unwrap());
        assert!(is_central(&z_r_numeric(1, 1, 2).unwrap(), 3).unwrap());
    }

    #[test]
    fn simple_coproducts() {
        let s0 = basis("m=2: [0;1]", 2);
        assert!(is_primitive_numeric(&s0).unwrap());
        assert!(!is_primitive_numeric(&basis("1,1", 2)).unwrap());
    }

    #[test]
    fn coproduct_is_multiplicative_on_degree_delta() {
        // Δ(z_1) computed directly and from Δ applied to the generators would
        // need a twisted product; here just check the counit parts.
        let z = z_r_numeric(2, 1, 3).unwrap();
        let d = coproduct_numeric(&z).unwrap();
        let zero = CyclicIsoClass::zero(2);
        for (cls, c) in z.terms() {
            assert_eq!(d.terms.get(&(cls.clone(), zero.clone())), Some(c));
            assert_eq!(d.terms.get(&(zero.clone(), cls.clone())), Some(c));
        }
    }

    #[test]
    fn small_theorem_instances() {
        for (m, n) in [(1u32, 1usize), (1, 2), (2, 1)] {
            assert!(is_primitive_numeric(&theorem_element(m, n, 2).unwrap()).unwrap(), "m={m} n={n}");
        }
        assert!(c_recursion_holds(2, 2, 2).unwrap());
    }

    #[test]
    fn json_round_trip() {
        let z = z_r_numeric(2, 1, 3).unwrap();
        assert_eq!(NumHallElem::from_json(&z.to_json()).unwrap(), z);
        let mut odd = NumHallElem::zero(2, 2);
        odd.add_term(cls("m=2: [0;1]"), &RootQ::from_parts(2, rat(1, 2), rat(-3, 1)));
        assert_eq!(NumHallElem::from_json(&odd.to_json()).unwrap(), odd);
    }

    #[test]
    fn printed_two_vertex_form() {
        let p = printed_z_two_vertex(1, 2).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.coeff(&cls("m=2: [1;2]")), RootQ::from_rational(2, rat(-1, 8)));
        assert_eq!(p.coeff(&cls("m=2: [1;1]+[0;1]")), RootQ::from_rational(2, rat(1, 4)));
    }
}
