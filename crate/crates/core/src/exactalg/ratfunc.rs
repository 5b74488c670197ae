use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::Poly;
use crate::error::{Error, Result};

/// The formal variable a [`RatFunc`] is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    T,
    Q,
}

impl Var {
    pub fn symbol(self) -> char {
        match self {
            Var::T => 't',
            Var::Q => 'q',
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Reduced quotient of two polynomials in one variable.
///
/// The denominator is nonzero and monic and shares no factor with the
/// numerator, so two rational functions are equal exactly when their
/// stored parts are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
    var: Var,
}

impl RatFunc {
    pub fn zero(var: Var) -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
            var,
        }
    }

    pub fn one(var: Var) -> Self {
        Self::from_poly(Poly::one(), var)
    }

    pub fn constant(c: BigRational, var: Var) -> Self {
        Self::from_poly(Poly::constant(c), var)
    }

    pub fn from_int(c: i64, var: Var) -> Self {
        Self::from_poly(Poly::from_int(c), var)
    }

    pub fn from_ratio(n: i64, d: i64, var: Var) -> Self {
        Self::constant(BigRational::new(BigInt::from(n), BigInt::from(d)), var)
    }

    pub fn from_poly(p: Poly, var: Var) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
            var,
        }
    }

    /// The variable itself raised to an integer power; negative powers are
    /// stored as `1 / var^k`.
    pub fn var_pow(var: Var, k: i64) -> Self {
        let m = Poly::monomial(BigRational::one(), k.unsigned_abs() as usize);
        if k >= 0 {
            Self::from_poly(m, var)
        } else {
            RatFunc {
                num: Poly::one(),
                den: m,
                var,
            }
        }
    }

    /// `1 - var^k` for any integer `k`.
    pub fn one_minus_pow(var: Var, k: i64) -> Self {
        &Self::one(var) - &Self::var_pow(var, k)
    }

    pub fn new(num: Poly, den: Poly, var: Var) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den, var))
    }

    fn reduce(num: Poly, den: Poly, var: Var) -> Self {
        if num.is_zero() {
            return Self::zero(var);
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = Poly::gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_rem(&g).unwrap().0, den.div_rem(&g).unwrap().0)
            }
        };
        let lc = den.leading().expect("nonzero denominator").clone();
        if lc.is_one() {
            RatFunc { num, den, var }
        } else {
            let inv = lc.recip();
            RatFunc {
                num: num.scale(&inv),
                den: den.scale(&inv),
                var,
            }
        }
    }

    /// Normalize an arbitrary (possibly unreduced) representation; used by
    /// the idempotence property tests.
    pub fn normalized(&self) -> Self {
        Self::reduce(self.num.clone(), self.den.clone(), self.var)
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        (self.is_polynomial() && self.num.is_constant()).then(|| self.num.coeff(0))
    }

    /// Same rational function, relabelled to another variable.
    pub fn with_var(&self, var: Var) -> Self {
        RatFunc {
            num: self.num.clone(),
            den: self.den.clone(),
            var,
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.var == other.var {
            Ok(())
        } else {
            Err(Error::VariableMismatch(self.var.symbol(), other.var.symbol()))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.add_unchecked(&-other))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let inv = other.inv()?;
        Ok(self.mul_unchecked(&inv))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone(), self.var))
    }

    fn add_unchecked(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            let num = &self.num + &other.num;
            if self.den.is_one() {
                return Self::from_poly(num, self.var);
            }
            return Self::reduce(num, self.den.clone(), self.var);
        }
        let g = Poly::gcd(&self.den, &other.den);
        let (b1, d1) = if g.is_one() {
            (self.den.clone(), other.den.clone())
        } else {
            (
                self.den.div_rem(&g).unwrap().0,
                other.den.div_rem(&g).unwrap().0,
            )
        };
        let num = &(&self.num * &d1) + &(&other.num * &b1);
        let den = &self.den * &d1;
        Self::reduce(num, den, self.var)
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.var);
        }
        if self.den.is_one() && other.den.is_one() {
            return Self::from_poly(&self.num * &other.num, self.var);
        }
        let cancel = |n: &Poly, d: &Poly| -> (Poly, Poly) {
            if d.is_constant() {
                return (n.clone(), d.clone());
            }
            let g = Poly::gcd(n, d);
            if g.is_one() {
                (n.clone(), d.clone())
            } else {
                (n.div_rem(&g).unwrap().0, d.div_rem(&g).unwrap().0)
            }
        };
        let (n1, d2) = cancel(&self.num, &other.den);
        let (n2, d1) = cancel(&other.num, &self.den);
        let num = &n1 * &n2;
        let den = &d1 * &d2;
        let lc = den.leading().unwrap().clone();
        let inv = lc.recip();
        RatFunc {
            num: num.scale(&inv),
            den: den.scale(&inv),
            var: self.var,
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        RatFunc {
            num: self.num.scale(c),
            den: if c.is_zero() { Poly::one() } else { self.den.clone() },
            var: self.var,
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.var);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, value: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(value);
        if d.is_zero() {
            return Err(Error::Pole {
                var: self.var.symbol(),
                value: value.to_string(),
            });
        }
        Ok(self.num.eval(value) / d)
    }

    pub fn eval_int(&self, value: i64) -> Result<BigRational> {
        self.eval(&BigRational::from_integer(BigInt::from(value)))
    }

    /// Replace `t` by `q^{-m}` and clear the result to a reduced rational
    /// function in `q`.
    pub fn substitute_t_to_q_power(&self, m: u32) -> Result<Self> {
        if self.var != Var::T {
            return Err(Error::VariableMismatch('t', self.var.symbol()));
        }
        if m == 0 {
            return Err(Error::Unsupported("substitution exponent must be positive".into()));
        }
        let m = m as usize;
        // N(q^-m)/D(q^-m) = q^{m(deg D - deg N)} * Nrev(q) / Drev(q)
        let dn = self.num.degree().unwrap_or(0);
        let dd = self.den.degree().unwrap_or(0);
        let mut num = self.num.reversed_stretched(m);
        let mut den = self.den.reversed_stretched(m);
        if dd >= dn {
            num = num.shift(m * (dd - dn));
        } else {
            den = den.shift(m * (dn - dd));
        }
        Self::new(num, den, Var::Q)
    }

    /// Replace the variable by `var^m` (same variable tag).
    pub fn stretch(&self, m: u32) -> Self {
        Self::reduce(
            self.num.stretched(m as usize),
            self.den.stretched(m as usize),
            self.var,
        )
    }

    /// Canonical ASCII rendering, e.g. `(q^2 - 1)/(q)`; polynomials are
    /// printed without the denominator.
    pub fn render(&self) -> String {
        let v = self.var.symbol();
        if self.den.is_one() {
            self.num.render(v)
        } else {
            format!("({})/({})", self.num.render(v), self.den.render(v))
        }
    }

    /// Ascending, space-free rendering used inside linear combinations,
    /// e.g. `1-q` or `(1)/(1-q)`.
    pub fn render_compact(&self) -> String {
        let v = self.var.symbol();
        if self.den.is_one() {
            self.num.render_compact(v)
        } else {
            format!(
                "({})/({})",
                self.num.render_compact(v),
                self.den.render_compact(v)
            )
        }
    }

    pub fn render_latex(&self) -> String {
        let v = self.var.symbol();
        if self.den.is_one() {
            self.num.render_latex(v)
        } else {
            format!(
                "\\frac{{{}}}{{{}}}",
                self.num.render_latex(v),
                self.den.render_latex(v)
            )
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

// Operator forms panic on mismatched variables; use the `checked_*` methods
// when mixing values of unknown origin.
impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        self.checked_add(rhs).expect("rational function addition")
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self.checked_sub(rhs).expect("rational function subtraction")
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        self.checked_mul(rhs).expect("rational function multiplication")
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.checked_div(rhs).expect("rational function division")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
            var: self.var,
        }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&RatFunc> for RatFunc {
    fn add_assign(&mut self, rhs: &RatFunc) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&RatFunc> for RatFunc {
    fn sub_assign(&mut self, rhs: &RatFunc) {
        *self = &*self - rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t() -> RatFunc {
        RatFunc::var_pow(Var::T, 1)
    }

    fn q() -> RatFunc {
        RatFunc::var_pow(Var::Q, 1)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn factor_cancels() {
        let one = RatFunc::one(Var::T);
        let a = &one / &(&one - &t());
        let b = &one - &(&t() * &t());
        assert_eq!(&a * &b, &one + &t());
    }

    #[test]
    fn identities() {
        let x = &q() + &RatFunc::from_int(3, Var::Q);
        assert_eq!(&x + &RatFunc::zero(Var::Q), x);
        let one = RatFunc::one(Var::Q);
        let f = &(&q() + &one) / &(&q() - &one);
        assert!((&f - &f).is_zero());
    }

    #[test]
    fn errors() {
        let z = RatFunc::zero(Var::T);
        assert_eq!(t().checked_div(&z), Err(Error::DivisionByZero));
        assert_eq!(t().checked_add(&q()), Err(Error::VariableMismatch('t', 'q')));
        let f = RatFunc::one(Var::Q).checked_div(&(&q() - &RatFunc::from_int(2, Var::Q)));
        let err = f.unwrap().eval_int(2).unwrap_err();
        assert_eq!(err.to_string(), "pole at q = 2");
    }

    #[test]
    fn evaluation() {
        assert_eq!(RatFunc::one_minus_pow(Var::Q, -1).eval_int(2).unwrap(), rat(1, 2));
        assert_eq!((&q() + &RatFunc::one(Var::Q)).eval_int(2).unwrap(), rat(3, 1));
        let f = RatFunc::one(Var::Q) / RatFunc::one_minus_pow(Var::Q, -2);
        assert_eq!(f.eval_int(2).unwrap(), rat(4, 3));
    }

    #[test]
    fn substitution() {
        let one_minus_t = RatFunc::one_minus_pow(Var::T, 1);
        let got = one_minus_t.substitute_t_to_q_power(1).unwrap();
        assert_eq!(got, RatFunc::one_minus_pow(Var::Q, -1));
        assert_eq!(got.render(), "(q - 1)/(q)");
        for (n, m) in [(3, 2), (2, 3), (1, 1)] {
            let f = RatFunc::one_minus_pow(Var::T, n);
            assert_eq!(
                f.substitute_t_to_q_power(m as u32).unwrap(),
                RatFunc::one_minus_pow(Var::Q, -n * m)
            );
        }
        assert_eq!(
            t().substitute_t_to_q_power(2).unwrap(),
            RatFunc::var_pow(Var::Q, -2)
        );
        assert!(q().substitute_t_to_q_power(1).is_err());
    }

    #[test]
    fn canonical_rendering() {
        let one = RatFunc::one(Var::Q);
        let f = &(&(&q() * &q()) - &one) / &q();
        assert_eq!(f.render(), "(q^2 - 1)/(q)");
        assert_eq!(RatFunc::one_minus_pow(Var::Q, 1).render_compact(), "1-q");
        let h = RatFunc::from_ratio(-3, 2, Var::T);
        assert_eq!(h.render(), "-3/2");
    }

    #[test]
    fn denominators_are_monic() {
        let f = RatFunc::new(Poly::from_int(1), Poly::from_int_coeffs(&[2, -4]), Var::T).unwrap();
        assert!(f.denom().leading().unwrap().is_one());
        assert_eq!(f.normalized(), f);
    }
}
