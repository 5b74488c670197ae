use std::collections::BTreeMap;

use num_rational::BigRational;

use crate::exactalg::{RatFunc, Var};

/// Finite linear combination of basis keys with rational-function
/// coefficients in a single variable. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, RatFunc>,
    var: Var,
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero(var: Var) -> Self {
        LinComb {
            terms: BTreeMap::new(),
            var,
        }
    }

    pub fn term(key: K, coeff: RatFunc) -> Self {
        let mut c = Self::zero(coeff.var());
        c.add_term(key, &coeff);
        c
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn add_term(&mut self, key: K, coeff: &RatFunc) {
        if coeff.is_zero() {
            return;
        }
        debug_assert_eq!(coeff.var(), self.var);
        match self.terms.get_mut(&key) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, coeff.clone());
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &RatFunc)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn get(&self, key: &K) -> Option<&RatFunc> {
        self.terms.get(key)
    }

    pub fn coeff(&self, key: &K) -> RatFunc {
        self.terms
            .get(key)
            .cloned()
            .unwrap_or_else(|| RatFunc::zero(self.var))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero(self.var);
        }
        LinComb {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
            var: self.var,
        }
    }

    pub fn scale_rational(&self, c: &BigRational) -> Self {
        self.scale(&RatFunc::constant(c.clone(), self.var))
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

    pub fn neg(&self) -> Self {
        LinComb {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect(),
            var: self.var,
        }
    }

    /// Apply `f` to every coefficient; the result lives in `var`.
    pub fn map_coeffs(&self, var: Var, mut f: impl FnMut(&K, &RatFunc) -> RatFunc) -> Self {
        let mut out = Self::zero(var);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), &f(k, v));
        }
        out
    }

    /// `Σ_k coeff_k · image(k)` for a linear map given on basis keys.
    pub fn linear_map<L: Ord + Clone>(
        &self,
        var: Var,
        mut image: impl FnMut(&K) -> LinComb<L>,
    ) -> LinComb<L> {
        let mut out = LinComb::zero(var);
        for (k, v) in &self.terms {
            for (l, w) in image(k).iter() {
                out.add_term(l.clone(), &(v * w));
            }
        }
        out
    }
}

impl<K: Ord + Clone> FromIterator<(K, RatFunc)> for LinComb<K> {
    /// Panics on an empty iterator; use [`LinComb::zero`] for that case.
    fn from_iter<I: IntoIterator<Item = (K, RatFunc)>>(iter: I) -> Self {
        let mut it = iter.into_iter().peekable();
        let var = it.peek().expect("non-empty iterator").1.var();
        let mut out = Self::zero(var);
        for (k, v) in it {
            out.add_term(k, &v);
        }
        out
    }
}
