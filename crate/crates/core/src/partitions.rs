//! Partitions, compositions and the counting coefficients built from their
//! multiplicities.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. The empty partition
/// is the unique partition of zero.
///
/// The `Ord` impl is the canonical order used everywhere output is sorted:
/// first by weight, then reverse lexicographic within one weight, so the
/// partitions of 3 come out as `(3), (2,1), (1,1,1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn single(n: usize) -> Self {
        Self::new(vec![n])
    }

    /// `(1^r_1, 2^r_2, ...)` from `r[i-1] = r_i`.
    pub fn from_multiplicities(r: &[usize]) -> Self {
        let mut parts = Vec::new();
        for (i, &m) in r.iter().enumerate().rev() {
            parts.extend(std::iter::repeat_n(i + 1, m));
        }
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of parts, `l(λ)`.
    pub fn length(&self) -> usize {
        self.0.len()
    }

    /// Sum of parts, `|λ|`.
    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of parts equal to `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.0.iter().filter(|&&p| p == i).count()
    }

    /// `m[i-1]` = multiplicity of `i`, for `i` up to the largest part.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.0.first().copied().unwrap_or(0)];
        for &p in &self.0 {
            m[p - 1] += 1;
        }
        m
    }

    /// `n(λ) = Σ (i-1) λ_i`.
    pub fn n_stat(&self) -> usize {
        self.0.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    /// `∏ i^{m_i} m_i!`, the power-sum norm.
    pub fn zee(&self) -> BigInt {
        let mut z = BigInt::one();
        for (i, &m) in self.multiplicities().iter().enumerate() {
            for k in 1..=m {
                z *= BigInt::from((i + 1) * k);
            }
        }
        z
    }

    /// Multiset union, e.g. the index of the product `p_λ p_μ`.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.0.len() + other.0.len());
        parts.extend_from_slice(&self.0);
        parts.extend_from_slice(&other.0);
        Partition::new(parts)
    }

    /// Dominance order: `self ≥ other` when every partial sum of `self` is
    /// at least the matching partial sum of `other` (same weight assumed).
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.weight() != other.weight() {
            return false;
        }
        let (mut a, mut b) = (0, 0);
        for i in 0..self.0.len().max(other.0.len()) {
            a += self.0.get(i).copied().unwrap_or(0);
            b += other.0.get(i).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }

    pub fn conjugate(&self) -> Partition {
        let n = self.0.first().copied().unwrap_or(0);
        Partition((1..=n).map(|i| self.0.iter().filter(|&&p| p >= i).count()).collect())
    }

    pub fn render_latex(&self) -> String {
        if self.0.is_empty() {
            return "()".into();
        }
        let body: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        format!("({})", body.join(","))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let body: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&body.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts (`2,1,1`); `0` or an empty string is the empty
    /// partition. Parts must already be weakly decreasing.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() || s == "0" {
            return Ok(Partition::empty());
        }
        let parts: Vec<usize> = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .ok()
                    .filter(|&v| v > 0)
                    .ok_or_else(|| Error::Parse(format!("bad partition part {p:?} in {s:?}; expected e.g. 2,1,1")))
            })
            .collect::<Result<_>>()?;
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!(
                "partition {s:?} is not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }
}

/// Ordered tuple of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        assert!(parts.iter().all(|&p| p > 0), "composition parts must be positive");
        Composition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }

    /// The partition obtained by sorting the parts.
    pub fn sorted(&self) -> Partition {
        Partition::new(self.0.clone())
    }
}

/// All partitions of `n` in canonical (reverse lexicographic) order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for p in (1..=n.min(max)).rev() {
            prefix.push(p);
            rec(n - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All ordered `k`-tuples of positive integers summing to `n`, in
/// lexicographic order.
pub fn compositions_of(n: usize, k: usize) -> Vec<Composition> {
    fn rec(n: usize, k: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if k == 0 {
            if n == 0 {
                out.push(Composition(prefix.clone()));
            }
            return;
        }
        if n < k {
            return;
        }
        for p in 1..=n - (k - 1) {
            prefix.push(p);
            rec(n - p, k - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if k > 0 {
        rec(n, k, &mut Vec::new(), &mut out);
    }
    out
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `total! / ∏ parts_i!`.
pub fn multinomial(total: u64, parts: &[u64]) -> Result<BigInt> {
    let sum: u64 = parts.iter().sum();
    if sum != total {
        return Err(Error::MultinomialMismatch {
            expected: total,
            got: sum,
        });
    }
    let mut acc = factorial(total);
    for &p in parts {
        acc /= factorial(p);
    }
    Ok(acc)
}

/// Number of ordered tuples with multiplicity vector `r` (`r[i-1]` copies
/// of `i`) whose last entry is `l`: the multinomial of `r` with `r_l`
/// decremented.
pub fn composition_count_g(r: &[u64], l: usize) -> Result<BigInt> {
    if l == 0 || l > r.len() || r[l - 1] == 0 {
        return Err(Error::EmptyMultiplicity(l));
    }
    let mut reduced = r.to_vec();
    reduced[l - 1] -= 1;
    let k: u64 = reduced.iter().sum();
    multinomial(k, &reduced)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    /// Euler's pentagonal-number recurrence, independent of the generator.
    fn partition_count(n: usize) -> i64 {
        let mut p = vec![0i64; n + 1];
        p[0] = 1;
        for m in 1..=n {
            let mut k: i64 = 1;
            loop {
                let g1 = (k * (3 * k - 1) / 2) as usize;
                if g1 > m {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                p[m] += sign * p[m - g1];
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g2 <= m {
                    p[m] += sign * p[m - g2];
                }
                k += 1;
            }
        }
        p[n]
    }

    #[test]
    fn small_partition_lists() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(3), vec![part("3"), part("2,1"), part("1,1,1")]);
        for n in 0..=15 {
            let ps = partitions_of(n);
            assert_eq!(ps.len() as i64, partition_count(n), "n = {n}");
            let mut sorted = ps.clone();
            sorted.sort();
            assert_eq!(sorted, ps, "canonical order n = {n}");
            sorted.dedup();
            assert_eq!(sorted.len(), ps.len());
            assert!(ps.iter().all(|p| p.weight() == n));
        }
        assert_eq!(partitions_of(8).len(), 22);
    }

    #[test]
    fn compositions() {
        assert_eq!(
            compositions_of(3, 2),
            vec![Composition::new(vec![1, 2]), Composition::new(vec![2, 1])]
        );
        assert_eq!(compositions_of(4, 1), vec![Composition::new(vec![4])]);
        for n in 1..=9u64 {
            for k in 1..=n {
                assert_eq!(
                    BigInt::from(compositions_of(n as usize, k as usize).len()),
                    binomial(n - 1, k - 1)
                );
            }
        }
    }

    #[test]
    fn statistics() {
        assert_eq!(part("5").n_stat(), 0);
        assert_eq!(part("1,1,1").n_stat(), 3);
        assert_eq!(part("2,1,1").multiplicity(1), 2);
        assert_eq!(part("2,1,1").length(), 3);
        assert_eq!(part("2,1,1").weight(), 4);
        assert_eq!(part("2,1,1").zee(), BigInt::from(4));
        assert_eq!(Partition::empty().n_stat(), 0);
        assert_eq!(part("3,1").conjugate(), part("2,1,1"));
        assert!(part("3,1").dominates(&part("2,2")));
        assert!(!part("3,1,1,1").dominates(&part("2,2,2")));
        assert!(!part("2,2,2").dominates(&part("3,1,1,1")));
    }

    #[test]
    fn text_syntax() {
        assert_eq!(part("2,1,1").to_string(), "2,1,1");
        assert_eq!(Partition::empty().to_string(), "0");
        assert_eq!(part("0"), Partition::empty());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
    }

    #[test]
    fn multinomials() {
        assert_eq!(multinomial(2, &[2, 0]).unwrap(), BigInt::from(1));
        assert_eq!(multinomial(2, &[1, 1]).unwrap(), BigInt::from(2));
        assert_eq!(multinomial(3, &[3]).unwrap(), BigInt::from(1));
        assert_eq!(
            multinomial(3, &[1, 1]),
            Err(Error::MultinomialMismatch { expected: 3, got: 2 })
        );
    }

    #[test]
    fn g_coefficients() {
        assert_eq!(composition_count_g(&[2, 0], 1).unwrap(), BigInt::from(1));
        assert_eq!(composition_count_g(&[1, 1, 0], 2).unwrap(), BigInt::from(1));
        assert_eq!(composition_count_g(&[1, 1, 0], 3), Err(Error::EmptyMultiplicity(3)));
        assert_eq!(composition_count_g(&[0, 2], 1), Err(Error::EmptyMultiplicity(1)));
    }

    /// Compare the closed form against filtering enumerated compositions,
    /// and check the `r_l / k` simplification, for every multiplicity vector
    /// of weight at most 8.
    #[test]
    fn g_matches_enumeration() {
        for n in 1..=8 {
            for lambda in partitions_of(n) {
                let mut r: Vec<u64> = lambda.multiplicities().iter().map(|&m| m as u64).collect();
                r.resize(n, 0);
                let k = lambda.length();
                let all = compositions_of(n, k);
                let with_mults: Vec<_> = all.iter().filter(|c| c.sorted() == lambda).collect();
                for l in 1..=n {
                    let brute = with_mults.iter().filter(|c| c.last() == Some(l)).count();
                    match composition_count_g(&r, l) {
                        Ok(g) => {
                            assert_eq!(g, BigInt::from(brute), "{lambda} l={l}");
                            let full = multinomial(k as u64, &r).unwrap();
                            assert_eq!(g * BigInt::from(k), full * BigInt::from(r[l - 1]));
                        }
                        Err(_) => assert_eq!(brute, 0),
                    }
                }
            }
        }
    }
}
