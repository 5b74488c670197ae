//! Nilpotent representations of the cyclic quiver with `m` vertices over
//! `F_q` (`q ∈ {2, 3, 5}`), used as a brute-force oracle.
//!
//! Vertices are `Z/m` with one arrow `h → h-1`. The indecomposable
//! `I_[i;l]` is the string with basis `e_{i+1-l}, …, e_i`, `e_j` sitting at
//! vertex `j mod m`, and `x(e_j) = e_{j-1}` (zero on the bottom vector).
//! For `m = 1` this is the Jordan quiver and `I_[0;l]` is the Jordan block
//! of size `l`.

mod count;
mod field;
mod numeric;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partitions::Partition;

pub use count::{
    aut_count, aut_count_bruteforce, end_dim, extension_product, invariant_subspace_count,
    submodule_count, submodule_table, AUT_ENUMERATION_CAP, SUBMODULE_DIM_CAP,
};
pub use field::{check_field, subspaces, Mat, Subspace, SUPPORTED_FIELDS};
pub use numeric::{
    c_recursion_holds, compare_up_to_sign, coproduct_numeric, euler_form, is_central,
    is_primitive_numeric, mul_numeric, mul_numeric_by_submodules, printed_z_two_vertex,
    theorem_element, z_r_numeric, NumHallElem, NumTensor, SignMatch, Z_DIM_CAP,
};

/// Largest total dimension [`realize`] accepts.
pub const REALIZE_CAP: usize = 8;

/// One string summand `I_[top;len]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Summand {
    pub top: u32,
    pub len: usize,
}

impl Summand {
    /// Vertex of the bottom basis vector, which spans the socle.
    pub fn socle_vertex(&self, m: u32) -> u32 {
        (self.top as i64 + 1 - self.len as i64).rem_euclid(m as i64) as u32
    }

    /// Vertices of the basis vectors from bottom (height 0) to top.
    pub fn vertices(&self, m: u32) -> impl Iterator<Item = u32> {
        let bottom = self.top as i64 + 1 - self.len as i64;
        (0..self.len as i64).map(move |h| (bottom + h).rem_euclid(m as i64) as u32)
    }
}

/// Iso class of a nilpotent representation: a multiset of strings.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclicIsoClass {
    m: u32,
    summands: Vec<Summand>,
}

fn summand_order(a: &Summand, b: &Summand) -> Ordering {
    b.len.cmp(&a.len).then(a.top.cmp(&b.top))
}

impl CyclicIsoClass {
    pub fn new(m: u32, mut summands: Vec<Summand>) -> Result<Self> {
        if m == 0 {
            return Err(Error::Parse("the quiver needs at least one vertex".into()));
        }
        for s in &summands {
            if s.top >= m || s.len == 0 {
                return Err(Error::Parse(format!(
                    "invalid string [{};{}] for {m} vertices",
                    s.top, s.len
                )));
            }
        }
        summands.sort_by(summand_order);
        Ok(CyclicIsoClass { m, summands })
    }

    pub fn zero(m: u32) -> Self {
        CyclicIsoClass {
            m,
            summands: Vec::new(),
        }
    }

    pub fn string(m: u32, top: u32, len: usize) -> Result<Self> {
        Self::new(m, vec![Summand { top, len }])
    }

    /// Jordan-quiver class of a partition.
    pub fn from_partition(lambda: &Partition) -> Self {
        CyclicIsoClass {
            m: 1,
            summands: lambda.parts().iter().map(|&len| Summand { top: 0, len }).collect(),
        }
    }

    /// The partition of a one-vertex class.
    pub fn to_partition(&self) -> Option<Partition> {
        (self.m == 1).then(|| Partition::new(self.summands.iter().map(|s| s.len).collect()))
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn summands(&self) -> &[Summand] {
        &self.summands
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn dim_vector(&self) -> Vec<usize> {
        let mut d = vec![0; self.m as usize];
        for s in &self.summands {
            for v in s.vertices(self.m) {
                d[v as usize] += 1;
            }
        }
        d
    }

    pub fn total_dim(&self) -> usize {
        self.summands.iter().map(|s| s.len).sum()
    }

    /// Direct sum.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        if self.m != other.m {
            return Err(Error::VertexMismatch(self.m, other.m));
        }
        let mut s = self.summands.clone();
        s.extend_from_slice(&other.summands);
        Self::new(self.m, s)
    }

    /// Each simple appears at most once in the socle, i.e. the bottoms of
    /// the strings sit at pairwise distinct vertices.
    pub fn socle_squarefree(&self) -> bool {
        let mut seen = vec![false; self.m as usize];
        for s in &self.summands {
            let v = s.socle_vertex(self.m) as usize;
            if seen[v] {
                return false;
            }
            seen[v] = true;
        }
        true
    }

    /// `[1;2]+[0;1]`, or `0` for the zero module.
    pub fn label(&self) -> String {
        if self.summands.is_empty() {
            return "0".into();
        }
        self.summands
            .iter()
            .map(|s| format!("[{};{}]", s.top, s.len))
            .collect::<Vec<_>>()
            .join("+")
    }

    pub fn render_latex(&self) -> String {
        if self.summands.is_empty() {
            return "0".into();
        }
        self.summands
            .iter()
            .map(|s| format!("I_{{[{};{}]}}", s.top, s.len))
            .collect::<Vec<_>>()
            .join(" \\oplus ")
    }

    /// Parse a class body for a quiver with `m` vertices. Accepts the
    /// string syntax `[1;2]+[0;1]`, an optional `m=K:` prefix (which must
    /// agree with `m`), `0`, and for `m = 1` a partition such as `2,1`.
    pub fn parse_with_m(text: &str, m: u32) -> Result<Self> {
        let text = text.trim();
        let body = match text.split_once(':') {
            Some((prefix, rest)) if prefix.trim_start().starts_with("m=") => {
                let given: u32 = prefix.trim()[2..]
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad vertex count in {text:?}")))?;
                if given != m {
                    return Err(Error::VertexMismatch(given, m));
                }
                rest.trim()
            }
            _ => text,
        };
        parse_body(body, m)
    }
}

fn syntax_error(text: &str) -> Error {
    Error::Parse(format!(
        "cannot read {text:?} as an iso class; expected e.g. `m=2: [1;2]+[0;1]`, `0`, or a partition like `2,1` when m=1"
    ))
}

fn parse_body(body: &str, m: u32) -> Result<CyclicIsoClass> {
    if body == "0" || body.is_empty() {
        return Ok(CyclicIsoClass::zero(m));
    }
    if !body.contains('[') {
        if m != 1 {
            return Err(syntax_error(body));
        }
        let lambda: Partition = body.parse().map_err(|_| syntax_error(body))?;
        return Ok(CyclicIsoClass::from_partition(&lambda));
    }
    let mut summands = Vec::new();
    for piece in body.split('+') {
        let inner = piece
            .trim()
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| syntax_error(body))?;
        let (i, l) = inner.split_once(';').ok_or_else(|| syntax_error(body))?;
        let top: u32 = i.trim().parse().map_err(|_| syntax_error(body))?;
        let len: usize = l.trim().parse().map_err(|_| syntax_error(body))?;
        summands.push(Summand { top, len });
    }
    CyclicIsoClass::new(m, summands)
}

impl FromStr for CyclicIsoClass {
    type Err = Error;

    /// `m=2: [1;2]+[0;1]`; without a prefix the class is taken to live on
    /// the Jordan quiver.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s.split_once(':') {
            Some((prefix, _)) if prefix.trim_start().starts_with("m=") => {
                let m: u32 = prefix.trim()[2..]
                    .trim()
                    .parse()
                    .map_err(|_| syntax_error(s))?;
                Self::parse_with_m(s, m)
            }
            _ => Self::parse_with_m(s, 1),
        }
    }
}

impl fmt::Display for CyclicIsoClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m={}: {}", self.m, self.label())
    }
}

impl PartialOrd for CyclicIsoClass {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CyclicIsoClass {
    /// Vertex count, then total dimension, then dimension vector, then the
    /// sorted summand lists.
    fn cmp(&self, other: &Self) -> Ordering {
        self.m
            .cmp(&other.m)
            .then(self.total_dim().cmp(&other.total_dim()))
            .then(self.dim_vector().cmp(&other.dim_vector()))
            .then_with(|| {
                for (a, b) in self.summands.iter().zip(&other.summands) {
                    let o = summand_order(a, b);
                    if o != Ordering::Equal {
                        return o;
                    }
                }
                self.summands.len().cmp(&other.summands.len())
            })
    }
}

/// All strings with at most `max_len` basis vectors.
fn all_strings(m: u32, max_len: usize) -> Vec<Summand> {
    let mut out = Vec::new();
    for len in (1..=max_len).rev() {
        for top in 0..m {
            out.push(Summand { top, len });
        }
    }
    out
}

fn string_dims(m: u32, s: &Summand) -> Vec<usize> {
    let mut d = vec![0; m as usize];
    for v in s.vertices(m) {
        d[v as usize] += 1;
    }
    d
}

/// Every iso class with dimension vector `d`, in canonical order.
pub fn enumerate_iso(m: u32, d: &[usize]) -> Result<Vec<CyclicIsoClass>> {
    if d.len() != m as usize {
        return Err(Error::Parse(format!(
            "dimension vector {d:?} has {} entries, expected {m}",
            d.len()
        )));
    }
    let total: usize = d.iter().sum();
    let strings = all_strings(m, total);
    let dims: Vec<Vec<usize>> = strings.iter().map(|s| string_dims(m, s)).collect();
    let mut out = Vec::new();
    fn rec(
        start: usize,
        remaining: &mut Vec<usize>,
        strings: &[Summand],
        dims: &[Vec<usize>],
        cur: &mut Vec<Summand>,
        out: &mut Vec<CyclicIsoClass>,
        m: u32,
    ) {
        if remaining.iter().all(|&x| x == 0) {
            out.push(CyclicIsoClass::new(m, cur.clone()).expect("valid strings"));
            return;
        }
        for k in start..strings.len() {
            if dims[k].iter().zip(remaining.iter()).all(|(a, b)| a <= b) {
                for (r, a) in remaining.iter_mut().zip(&dims[k]) {
                    *r -= a;
                }
                cur.push(strings[k]);
                rec(k, remaining, strings, dims, cur, out, m);
                cur.pop();
                for (r, a) in remaining.iter_mut().zip(&dims[k]) {
                    *r += a;
                }
            }
        }
    }
    rec(0, &mut d.to_vec(), &strings, &dims, &mut Vec::new(), &mut out, m);
    out.sort();
    Ok(out)
}

/// Every nonzero iso class of total dimension at most `max_total`.
pub fn classes_up_to(m: u32, max_total: usize) -> Vec<CyclicIsoClass> {
    let strings = all_strings(m, max_total);
    let mut out = Vec::new();
    fn rec(
        start: usize,
        budget: usize,
        strings: &[Summand],
        cur: &mut Vec<Summand>,
        out: &mut Vec<CyclicIsoClass>,
        m: u32,
    ) {
        if !cur.is_empty() {
            out.push(CyclicIsoClass::new(m, cur.clone()).expect("valid strings"));
        }
        for k in start..strings.len() {
            if strings[k].len <= budget {
                cur.push(strings[k]);
                rec(k, budget - strings[k].len, strings, cur, out, m);
                cur.pop();
            }
        }
    }
    rec(0, max_total, &strings, &mut Vec::new(), &mut out, m);
    out.sort();
    out
}

/// A representation over `F_q`: one space per vertex and one matrix per
/// arrow, `arrows[h]: V_h → V_{h-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FqModule {
    q: u32,
    m: u32,
    dims: Vec<usize>,
    arrows: Vec<Mat>,
}

impl FqModule {
    pub fn new(q: u32, dims: Vec<usize>, arrows: Vec<Mat>) -> Result<Self> {
        let p = check_field(q)?;
        let m = dims.len() as u32;
        if m == 0 || arrows.len() != dims.len() {
            return Err(Error::Parse("one arrow per vertex is required".into()));
        }
        for (h, a) in arrows.iter().enumerate() {
            let target = dims[(h + dims.len() - 1) % dims.len()];
            if a.p() != p || a.rows() != target || a.cols() != dims[h] {
                return Err(Error::Parse(format!("arrow {h} has the wrong shape")));
            }
        }
        Ok(FqModule { q, m, dims, arrows })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn arrows(&self) -> &[Mat] {
        &self.arrows
    }

    pub fn arrow(&self, h: usize) -> &Mat {
        &self.arrows[h]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    fn p(&self) -> u8 {
        self.q as u8
    }

    fn prev(&self, h: usize) -> usize {
        (h + self.m as usize - 1) % self.m as usize
    }

    /// Ranks `rk[i][h]` of `x^h` restricted to `V_i`, for `h = 0..=total+1`.
    fn path_ranks(&self) -> Result<Vec<Vec<usize>>> {
        let total = self.total_dim();
        let m = self.m as usize;
        let mut rk = vec![vec![0; total + 2]; m];
        for (i, row) in rk.iter_mut().enumerate() {
            let mut path = Mat::identity(self.p(), self.dims[i]);
            let mut at = i;
            row[0] = self.dims[i];
            for h in 1..=total + 1 {
                path = self.arrows[at].mul(&path);
                at = self.prev(at);
                let r = path.rank();
                row[h] = r;
                if r == 0 {
                    break;
                }
            }
            if row[total + 1] != 0 {
                return Err(Error::NotNilpotent);
            }
        }
        Ok(rk)
    }

    /// Krull–Schmidt decomposition read off from the ranks of path maps:
    /// with `N_i(h) = rk(x^h|V_i) - rk(x^{h+1}|V_i)`, the multiplicity of
    /// `I_[i;l]` is `N_i(l-1) - N_{i+1}(l)`.
    pub fn decompose(&self) -> Result<CyclicIsoClass> {
        let rk = self.path_ranks()?;
        let total = self.total_dim();
        let m = self.m as usize;
        let n = |i: usize, h: usize| -> i64 {
            if h + 1 >= rk[i].len() {
                0
            } else {
                rk[i][h] as i64 - rk[i][h + 1] as i64
            }
        };
        let mut summands = Vec::new();
        for i in 0..m {
            for l in 1..=total {
                let mult = n(i, l - 1) - n((i + 1) % m, l);
                if mult < 0 {
                    return Err(Error::Consistency(format!(
                        "negative multiplicity for [{i};{l}]"
                    )));
                }
                for _ in 0..mult {
                    summands.push(Summand { top: i as u32, len: l });
                }
            }
        }
        CyclicIsoClass::new(self.m, summands)
    }

    /// Whether the per-vertex subspaces `us` are closed under every arrow.
    pub fn is_invariant(&self, us: &[&Subspace]) -> bool {
        (0..self.m as usize).all(|h| self.arrow_preserves(h, us[h], us[self.prev(h)]))
    }

    pub(crate) fn arrow_preserves(&self, h: usize, src: &Subspace, dst: &Subspace) -> bool {
        (0..src.dim()).all(|r| dst.contains(&self.arrows[h].apply(src.basis.row(r))))
    }

    /// The submodule spanned by invariant subspaces `us`, in their RREF bases.
    pub fn submodule(&self, us: &[&Subspace]) -> FqModule {
        let m = self.m as usize;
        let dims: Vec<usize> = us.iter().map(|u| u.dim()).collect();
        let arrows = (0..m)
            .map(|h| {
                let (src, dst) = (us[h], us[self.prev(h)]);
                let mut a = Mat::zeros(self.p(), dst.dim(), src.dim());
                for c in 0..src.dim() {
                    let image = self.arrows[h].apply(src.basis.row(c));
                    for (r, x) in dst.coords(&image).into_iter().enumerate() {
                        a.set(r, c, x);
                    }
                }
                a
            })
            .collect();
        FqModule {
            q: self.q,
            m: self.m,
            dims,
            arrows,
        }
    }

    /// The quotient by invariant subspaces `us`, with basis the unit vectors
    /// at the non-pivot coordinates.
    pub fn quotient(&self, us: &[&Subspace]) -> FqModule {
        let m = self.m as usize;
        let free: Vec<Vec<usize>> = us.iter().map(|u| u.free_columns()).collect();
        let dims: Vec<usize> = free.iter().map(Vec::len).collect();
        let arrows = (0..m)
            .map(|h| {
                let t = self.prev(h);
                let mut a = Mat::zeros(self.p(), dims[t], dims[h]);
                for (c, &col) in free[h].iter().enumerate() {
                    let mut e = vec![0u8; self.dims[h]];
                    e[col] = 1;
                    let image = us[t].reduce(&self.arrows[h].apply(&e));
                    for (r, &fc) in free[t].iter().enumerate() {
                        a.set(r, c, image[fc]);
                    }
                }
                a
            })
            .collect();
        FqModule {
            q: self.q,
            m: self.m,
            dims,
            arrows,
        }
    }

    /// Solution space of `A_h φ_h = φ_{h-1} A_h`, as flattened vectors
    /// `(φ_0, …, φ_{m-1})` with each `φ_h` row-major.
    pub fn endomorphism_basis(&self) -> Vec<Vec<u8>> {
        let m = self.m as usize;
        let p = self.p();
        let offsets: Vec<usize> = self
            .dims
            .iter()
            .scan(0, |acc, &d| {
                let o = *acc;
                *acc += d * d;
                Some(o)
            })
            .collect();
        let unknowns: usize = self.dims.iter().map(|d| d * d).sum();
        let mut rows: Vec<Vec<u8>> = Vec::new();
        for h in 0..m {
            let t = self.prev(h);
            let a = &self.arrows[h];
            let (dt, dh) = (self.dims[t], self.dims[h]);
            // entry (r, c) of A_h φ_h - φ_t A_h
            for r in 0..dt {
                for c in 0..dh {
                    let mut eq = vec![0u8; unknowns];
                    for k in 0..dh {
                        let idx = offsets[h] + k * dh + c;
                        eq[idx] = (eq[idx] + a.get(r, k)) % p;
                    }
                    for k in 0..dt {
                        let idx = offsets[t] + r * dt + k;
                        eq[idx] = (eq[idx] + p - a.get(k, c)) % p;
                    }
                    rows.push(eq);
                }
            }
        }
        if rows.is_empty() {
            return (0..unknowns)
                .map(|i| {
                    let mut v = vec![0u8; unknowns];
                    v[i] = 1;
                    v
                })
                .collect();
        }
        Mat::from_row_vectors(p, unknowns, &rows).nullspace()
    }

    /// Split a flattened endomorphism into its per-vertex matrices.
    pub(crate) fn unflatten(&self, v: &[u8]) -> Vec<Mat> {
        let mut at = 0;
        self.dims
            .iter()
            .map(|&d| {
                let m = Mat::from_rows(self.p(), d, d, v[at..at + d * d].to_vec());
                at += d * d;
                m
            })
            .collect()
    }
}

/// Block direct sum of the string modules, each in the basis
/// `e_{i+1-l}, …, e_i`.
pub fn realize(cls: &CyclicIsoClass, q: u32) -> Result<FqModule> {
    if cls.total_dim() > REALIZE_CAP {
        return Err(Error::DimensionCap {
            what: "realize",
            dim: cls.total_dim(),
            cap: REALIZE_CAP,
        });
    }
    realize_uncapped(cls, q)
}

pub(crate) fn realize_uncapped(cls: &CyclicIsoClass, q: u32) -> Result<FqModule> {
    let p = check_field(q)?;
    let m = cls.m as usize;
    let dims = cls.dim_vector();
    let mut next = vec![0usize; m];
    let mut arrows: Vec<Mat> = (0..m)
        .map(|h| Mat::zeros(p, dims[(h + m - 1) % m], dims[h]))
        .collect();
    for s in &cls.summands {
        let mut prev: Option<(usize, usize)> = None;
        for v in s.vertices(cls.m) {
            let v = v as usize;
            let idx = next[v];
            next[v] += 1;
            if let Some((pv, pidx)) = prev {
                // x(e_j) = e_{j-1}: from (v, idx) down to (pv, pidx)
                debug_assert_eq!(pv, (v + m - 1) % m);
                arrows[v].set(pidx, idx, 1);
            }
            prev = Some((v, idx));
        }
    }
    Ok(FqModule {
        q,
        m: cls.m,
        dims,
        arrows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cls(s: &str) -> CyclicIsoClass {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_render() {
        let c = cls("m=2: [0;1]+[1;2]");
        assert_eq!(c.to_string(), "m=2: [1;2]+[0;1]");
        assert_eq!(c.dim_vector(), vec![2, 1]);
        assert_eq!(cls("2,1"), CyclicIsoClass::parse_with_m("[0;2]+[0;1]", 1).unwrap());
        assert_eq!(cls("m=3: 0"), CyclicIsoClass::zero(3));
        assert!("m=2: [2;1]".parse::<CyclicIsoClass>().is_err());
        assert!(CyclicIsoClass::parse_with_m("m=2: [1;1]", 3).is_err());
        assert!(CyclicIsoClass::parse_with_m("2,1", 2).is_err());
        assert!("m=2: [1,1]".parse::<CyclicIsoClass>().is_err());
    }

    #[test]
    fn realize_examples() {
        let j2 = realize(&cls("2"), 2).unwrap();
        assert_eq!(j2.arrow(0), &Mat::from_rows(2, 2, 2, vec![0, 1, 0, 0]));
        let s = realize(&cls("m=2: [1;2]"), 2).unwrap();
        assert_eq!(s.dims(), &[1, 1]);
        assert_eq!(s.arrow(1), &Mat::identity(2, 1));
        assert!(s.arrow(0).is_zero());
        let z = realize(&cls("1,1"), 3).unwrap();
        assert!(z.arrow(0).is_zero());
        assert_eq!(z.dims(), &[2]);
        assert!(realize(&cls("5,4"), 2).is_err());
        assert!(realize(&cls("1"), 4).is_err());
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_iso(1, &[2]).unwrap(), vec![cls("2"), cls("1,1")]);
        assert_eq!(enumerate_iso(1, &[4]).unwrap().len(), 5);
        let two = enumerate_iso(2, &[1, 1]).unwrap();
        let mut expected = vec![cls("m=2: [0;2]"), cls("m=2: [1;2]"), cls("m=2: [0;1]+[1;1]")];
        expected.sort();
        assert_eq!(two, expected);
        // classes_up_to agrees with per-dimension enumeration
        let all = classes_up_to(2, 4);
        let mut by_dims = Vec::new();
        for a in 0..=4usize {
            for b in 0..=4 - a {
                if a + b > 0 {
                    by_dims.extend(enumerate_iso(2, &[a, b]).unwrap());
                }
            }
        }
        by_dims.sort();
        assert_eq!(all, by_dims);
    }

    #[test]
    fn decompose_inverts_realize() {
        for m in 1..=3 {
            for c in classes_up_to(m, 6) {
                assert_eq!(realize(&c, 2).unwrap().decompose().unwrap(), c);
            }
        }
        assert_eq!(realize(&CyclicIsoClass::zero(2), 2).unwrap().decompose().unwrap(), CyclicIsoClass::zero(2));
    }

    #[test]
    fn decompose_after_base_change() {
        // conjugating J_2 ⊕ J_1 by an invertible matrix keeps the class
        let x = Mat::from_rows(3, 3, 3, vec![0, 1, 0, 0, 0, 0, 0, 0, 0]);
        let g = Mat::from_rows(3, 3, 3, vec![1, 2, 0, 0, 1, 1, 1, 0, 2]);
        let ginv = {
            // brute-force inverse
            let mut found = None;
            for code in 0..3usize.pow(9) {
                let mut c = code;
                let data: Vec<u8> = (0..9).map(|_| { let d = (c % 3) as u8; c /= 3; d }).collect();
                let h = Mat::from_rows(3, 3, 3, data);
                if g.mul(&h) == Mat::identity(3, 3) {
                    found = Some(h);
                    break;
                }
            }
            found.unwrap()
        };
        let y = g.mul(&x).mul(&ginv);
        let module = FqModule::new(3, vec![3], vec![y]).unwrap();
        assert_eq!(module.decompose().unwrap(), cls("2,1"));
    }

    #[test]
    fn not_nilpotent() {
        let module = FqModule::new(2, vec![1], vec![Mat::identity(2, 1)]).unwrap();
        assert_eq!(module.decompose(), Err(Error::NotNilpotent));
    }

    #[test]
    fn socles() {
        assert!(cls("3").socle_squarefree());
        assert!(!cls("1,1").socle_squarefree());
        assert!(CyclicIsoClass::zero(2).socle_squarefree());
        for n in 1..=3usize {
            for a in 1..=n {
                let c = CyclicIsoClass::new(2, vec![Summand { top: 1, len: 2 * a - 1 }, Summand { top: 0, len: 2 * (n - a) + 1 }]).unwrap();
                assert!(c.socle_squarefree());
            }
        }
    }

    #[test]
    fn endomorphism_dimensions() {
        assert_eq!(realize(&cls("1,1"), 2).unwrap().endomorphism_basis().len(), 4);
        assert_eq!(realize(&cls("3"), 3).unwrap().endomorphism_basis().len(), 3);
    }
}
