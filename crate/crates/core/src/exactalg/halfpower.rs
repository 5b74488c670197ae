use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ratfunc::{RatFunc, Var};
use crate::error::{Error, Result};

/// `scalar * v^v_exp` where `v^2 = q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HalfPower {
    pub scalar: BigRational,
    pub v_exp: i64,
}

impl HalfPower {
    pub fn new(scalar: BigRational, v_exp: i64) -> Self {
        HalfPower { scalar, v_exp }
    }

    pub fn v_pow(v_exp: i64) -> Self {
        HalfPower::new(BigRational::one(), v_exp)
    }

    pub fn is_rational_power(&self) -> bool {
        self.v_exp % 2 == 0
    }

    /// `scalar * q^{v_exp / 2}`; only defined for even exponents.
    pub fn to_ratfunc(&self) -> Result<RatFunc> {
        if !self.is_rational_power() {
            return Err(Error::OddHalfPower);
        }
        Ok(RatFunc::var_pow(Var::Q, self.v_exp / 2).scale(&self.scalar))
    }

    /// Specialize `q` to a prime power and land in `Q(sqrt q)`.
    pub fn at(&self, q: u32) -> RootQ {
        RootQ::v_pow(q, self.v_exp).scale(&self.scalar)
    }
}

impl Mul for &HalfPower {
    type Output = HalfPower;
    fn mul(self, rhs: &HalfPower) -> HalfPower {
        HalfPower::new(&self.scalar * &rhs.scalar, self.v_exp + rhs.v_exp)
    }
}

/// Element `rational + radical * v` of the quadratic field `Q(v)`, `v^2 = q`,
/// for a fixed non-square integer `q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootQ {
    q: u32,
    rational: BigRational,
    radical: BigRational,
}

impl RootQ {
    pub fn zero(q: u32) -> Self {
        RootQ {
            q,
            rational: BigRational::zero(),
            radical: BigRational::zero(),
        }
    }

    pub fn from_rational(q: u32, r: BigRational) -> Self {
        RootQ {
            q,
            rational: r,
            radical: BigRational::zero(),
        }
    }

    pub fn from_parts(q: u32, rational: BigRational, radical: BigRational) -> Self {
        RootQ {
            q,
            rational,
            radical,
        }
    }

    /// `v^k` for any integer `k`.
    pub fn v_pow(q: u32, k: i64) -> Self {
        let half = k.div_euclid(2);
        let qq = BigRational::from_integer(BigInt::from(q));
        let base = if half >= 0 {
            num_traits::pow(qq, half as usize)
        } else {
            num_traits::pow(qq.recip(), (-half) as usize)
        };
        if k.rem_euclid(2) == 0 {
            Self::from_rational(q, base)
        } else {
            RootQ {
                q,
                rational: BigRational::zero(),
                radical: base,
            }
        }
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.rational
    }

    pub fn radical_part(&self) -> &BigRational {
        &self.radical
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.radical.is_zero()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        RootQ {
            q: self.q,
            rational: &self.rational * c,
            radical: &self.radical * c,
        }
    }

    pub fn to_rational(&self) -> Result<BigRational> {
        if self.radical.is_zero() {
            Ok(self.rational.clone())
        } else {
            Err(Error::OddHalfPower)
        }
    }
}

impl fmt::Display for RootQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rational.is_zero(), self.radical.is_zero()) {
            (_, true) => write!(f, "{}", self.rational),
            (true, false) => write!(f, "{}*v", self.radical),
            (false, false) => {
                let sign = if self.radical.is_negative() { '-' } else { '+' };
                write!(f, "{} {} {}*v", self.rational, sign, self.radical.abs())
            }
        }
    }
}

impl Add for &RootQ {
    type Output = RootQ;
    fn add(self, rhs: &RootQ) -> RootQ {
        debug_assert_eq!(self.q, rhs.q);
        RootQ {
            q: self.q,
            rational: &self.rational + &rhs.rational,
            radical: &self.radical + &rhs.radical,
        }
    }
}

impl Sub for &RootQ {
    type Output = RootQ;
    fn sub(self, rhs: &RootQ) -> RootQ {
        self + &(-rhs)
    }
}

impl Neg for &RootQ {
    type Output = RootQ;
    fn neg(self) -> RootQ {
        RootQ {
            q: self.q,
            rational: -&self.rational,
            radical: -&self.radical,
        }
    }
}

impl Mul for &RootQ {
    type Output = RootQ;
    fn mul(self, rhs: &RootQ) -> RootQ {
        debug_assert_eq!(self.q, rhs.q);
        let q = BigRational::from_integer(BigInt::from(self.q));
        RootQ {
            q: self.q,
            rational: &self.rational * &rhs.rational + q * (&self.radical * &rhs.radical),
            radical: &self.rational * &rhs.radical + &self.radical * &rhs.rational,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_powers_multiply_and_convert() {
        let a = HalfPower::v_pow(3);
        let b = HalfPower::v_pow(-1);
        let c = &a * &b;
        assert_eq!(c.v_exp, 2);
        assert_eq!(c.to_ratfunc().unwrap(), RatFunc::var_pow(Var::Q, 1));
        assert_eq!(a.to_ratfunc(), Err(Error::OddHalfPower));
    }

    #[test]
    fn quadratic_field() {
        let v = RootQ::v_pow(2, 1);
        let two = &v * &v;
        assert_eq!(two.to_rational().unwrap(), BigRational::from_integer(2.into()));
        let inv = RootQ::v_pow(2, -3);
        assert!((&(&inv * &RootQ::v_pow(2, 3)) - &RootQ::v_pow(2, 0)).is_zero());
        assert_eq!(v.to_rational(), Err(Error::OddHalfPower));
        assert_eq!(HalfPower::v_pow(-2).at(3).to_rational().unwrap(), BigRational::new(1.into(), 3.into()));
    }
}
