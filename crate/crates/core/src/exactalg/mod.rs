//! Exact coefficient arithmetic: rationals, dense polynomials, rational
//! functions in one formal variable, and powers of `v = sqrt(q)`.

mod halfpower;
mod parse;
mod poly;
mod ratfunc;

pub use halfpower::{HalfPower, RootQ};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use parse::parse_ratfunc;
pub use poly::Poly;
pub use ratfunc::{RatFunc, Var};

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Render an exact rational as `n` or `n/d`.
pub fn render_rational(r: &BigRational) -> String {
    r.to_string()
}

pub fn parse_rational(s: &str) -> crate::Result<BigRational> {
    let s = s.trim();
    let bad = || crate::Error::Parse(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d == BigInt::from(0) {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    fn small_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec(-4i64..=4, 0..5).prop_map(|c| Poly::from_int_coeffs(&c))
    }

    fn small_ratfunc() -> impl Strategy<Value = RatFunc> {
        (small_poly(), small_poly())
            .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
            .prop_map(|(n, d)| RatFunc::new(n, d, Var::Q).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn quotient_times_inverse_is_one(a in small_poly(), b in small_poly()) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            let x = RatFunc::new(a.clone(), b.clone(), Var::T).unwrap();
            let y = RatFunc::new(b, a, Var::T).unwrap();
            prop_assert!((&x * &y).is_one());
        }

        #[test]
        fn normalizing_is_idempotent(f in small_ratfunc()) {
            prop_assert_eq!(f.normalized(), f.clone());
            prop_assert_eq!(f.normalized().normalized(), f.normalized());
        }

        #[test]
        fn eval_is_a_ring_homomorphism(f in small_ratfunc(), g in small_ratfunc(), x in -5i64..=5) {
            let pt = int(x);
            if let (Ok(fv), Ok(gv)) = (f.eval(&pt), g.eval(&pt)) {
                prop_assert_eq!((&f * &g).eval(&pt).unwrap(), &fv * &gv);
                prop_assert_eq!((&f + &g).eval(&pt).unwrap(), fv + gv);
            }
        }

        #[test]
        fn field_axioms(a in small_ratfunc(), b in small_ratfunc(), c in small_ratfunc()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn rendering_round_trips(f in small_ratfunc()) {
            prop_assert_eq!(parse_ratfunc(&f.render(), Var::Q).unwrap(), f.clone());
            prop_assert_eq!(parse_ratfunc(&f.render_compact(), Var::Q).unwrap(), f);
        }

        #[test]
        fn half_power_products(a in -6i64..6, b in -6i64..6) {
            let p = &HalfPower::v_pow(a) * &HalfPower::v_pow(b);
            prop_assert_eq!(p.v_exp, a + b);
            prop_assert_eq!(p.to_ratfunc().is_ok(), (a + b) % 2 == 0);
        }
    }
}
