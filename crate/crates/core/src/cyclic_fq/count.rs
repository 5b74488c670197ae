//! Counting: endomorphisms, automorphisms, submodules and extensions.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, LazyLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::field::{subspaces, Mat, Subspace};
use super::{check_field, realize, realize_uncapped, CyclicIsoClass, FqModule};
use crate::error::{Error, Result};

/// Largest total dimension for subspace-enumeration counts.
pub const SUBMODULE_DIM_CAP: usize = 6;
/// Largest `|End(M)|` that [`aut_count_bruteforce`] will enumerate.
pub const AUT_ENUMERATION_CAP: u64 = 1_000_000;

/// Heights (distance above the bottom vector) of the basis vectors of
/// `cls` at vertex `i`.
fn heights_at(cls: &CyclicIsoClass, i: u32) -> Vec<usize> {
    let mut out = Vec::new();
    for s in cls.summands() {
        for (h, v) in s.vertices(cls.m()).enumerate() {
            if v == i {
                out.push(h);
            }
        }
    }
    out
}

/// `dim(ker x^l ∩ R_i)`: basis vectors at `i` of height below `l`.
fn kernel_dim(heights: &[usize], l: usize) -> usize {
    heights.iter().filter(|&&h| h < l).count()
}

/// `dim End(R) = Σ_{I_[i;l] summand} dim(ker x^l ∩ R_i)`, since a map out
/// of a string is fixed by the image of its top vector.
pub fn end_dim(cls: &CyclicIsoClass) -> usize {
    cls.summands()
        .iter()
        .map(|s| kernel_dim(&heights_at(cls, s.top), s.len))
        .sum()
}

/// `|Aut(R)|` by counting images of the top vectors.
///
/// An endomorphism is invertible iff it is invertible on `R/xR`. At vertex
/// `i` take the strings with top at `i` in increasing length. The image of
/// the `j`-th one (counting from 0, length `l`) ranges over
/// `K_l = ker x^l ∩ R_i` and must stay independent modulo `xR` of the
/// earlier images, leaving `q^{k_l} - q^{k_l - u_l + j}` choices, where
/// `k_l = dim K_l` and `u_l = dim (K_l + xR)/xR` is the number of strings
/// with top at `i` and length at most `l`.
pub fn aut_count(cls: &CyclicIsoClass, q: u32) -> BigInt {
    let qq = BigInt::from(q);
    let mut total = BigInt::one();
    for i in 0..cls.m() {
        let heights = heights_at(cls, i);
        let mut lens: Vec<usize> = cls
            .summands()
            .iter()
            .filter(|s| s.top == i)
            .map(|s| s.len)
            .collect();
        lens.sort_unstable();
        for (j, &l) in lens.iter().enumerate() {
            let k = kernel_dim(&heights, l) as u32;
            let u = lens.iter().filter(|&&x| x <= l).count() as u32;
            total *= qq.pow(k) - qq.pow(k - u + j as u32);
        }
    }
    total
}

/// `|Aut(R)|` by enumerating `End(R)` and testing invertibility at every
/// vertex.
pub fn aut_count_bruteforce(cls: &CyclicIsoClass, q: u32) -> Result<BigInt> {
    let module = realize(cls, q)?;
    let basis = module.endomorphism_basis();
    let size = BigInt::from(q).pow(basis.len() as u32);
    if size > BigInt::from(AUT_ENUMERATION_CAP) {
        return Err(Error::EnumerationCap {
            size: size.to_string(),
            cap: AUT_ENUMERATION_CAP,
        });
    }
    let n = u64::try_from(&size).expect("bounded by the cap");
    let p = q as u8;
    let dims = module.dims().to_vec();
    let count = (0..n)
        .into_par_iter()
        .filter(|&code| {
            let mut c = code;
            let len = basis.first().map_or(0, Vec::len);
            let mut v = vec![0u8; len];
            for b in &basis {
                let coef = (c % q as u64) as u8;
                c /= q as u64;
                if coef != 0 {
                    for (x, y) in v.iter_mut().zip(b) {
                        *x = ((*x as u16 + coef as u16 * *y as u16) % p as u16) as u8;
                    }
                }
            }
            if basis.is_empty() {
                return true;
            }
            module
                .unflatten(&v)
                .iter()
                .zip(&dims)
                .all(|(phi, &d)| phi.rank() == d)
        })
        .count();
    Ok(BigInt::from(count))
}

type Tally = BTreeMap<(CyclicIsoClass, CyclicIsoClass), BigInt>;

type TableMemo = HashMap<(CyclicIsoClass, u32), Arc<Tally>>;

static SUBMODULE_TABLES: LazyLock<RwLock<TableMemo>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

fn check_submodule_cap(r: &CyclicIsoClass) -> Result<()> {
    if r.total_dim() > SUBMODULE_DIM_CAP {
        return Err(Error::DimensionCap {
            what: "submodule enumeration",
            dim: r.total_dim(),
            cap: SUBMODULE_DIM_CAP,
        });
    }
    Ok(())
}

/// All arrow-invariant tuples of per-vertex subspaces with dimension vector
/// `e`, built vertex by vertex with the arrow condition checked as soon as
/// both ends are chosen.
fn invariant_tuples(module: &FqModule, e: &[usize]) -> Vec<Vec<Subspace>> {
    let m = module.m() as usize;
    let p = module.q() as u8;
    let choices: Vec<Arc<Vec<Subspace>>> = (0..m)
        .map(|h| subspaces(p, module.dims()[h], e[h]))
        .collect();
    let mut out = Vec::new();
    fn rec(
        h: usize,
        module: &FqModule,
        choices: &[Arc<Vec<Subspace>>],
        cur: &mut Vec<Subspace>,
        out: &mut Vec<Vec<Subspace>>,
    ) {
        let m = choices.len();
        if h == m {
            // arrow 0 goes from vertex 0 to vertex m-1
            if module.arrow_preserves(0, &cur[0], &cur[m - 1]) {
                out.push(cur.clone());
            }
            return;
        }
        for u in choices[h].iter() {
            if h > 0 && !module.arrow_preserves(h, u, &cur[h - 1]) {
                continue;
            }
            cur.push(u.clone());
            rec(h + 1, module, choices, cur, out);
            cur.pop();
        }
    }
    rec(0, module, &choices, &mut Vec::new(), &mut out);
    out
}

/// Every dimension vector componentwise below `d`.
fn sub_dimension_vectors(d: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &x in d {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=x).map(move |k| {
                    let mut w = v.clone();
                    w.push(k);
                    w
                })
            })
            .collect();
    }
    out
}

/// Number of submodules of `R` for every pair (class of submodule, class of
/// quotient), by exhaustive enumeration of invariant subspaces.
pub fn submodule_table(r: &CyclicIsoClass, q: u32) -> Result<Arc<Tally>> {
    check_field(q)?;
    check_submodule_cap(r)?;
    let key = (r.clone(), q);
    if let Some(t) = SUBMODULE_TABLES.read().unwrap().get(&key) {
        return Ok(t.clone());
    }
    let module = realize(r, q)?;
    let mut tuples = Vec::new();
    for e in sub_dimension_vectors(module.dims()) {
        tuples.extend(invariant_tuples(&module, &e));
    }
    let classified: Vec<Result<(CyclicIsoClass, CyclicIsoClass)>> = tuples
        .par_iter()
        .map(|us| {
            let refs: Vec<&Subspace> = us.iter().collect();
            Ok((
                module.submodule(&refs).decompose()?,
                module.quotient(&refs).decompose()?,
            ))
        })
        .collect();
    let mut tally = Tally::new();
    for c in classified {
        *tally.entry(c?).or_insert_with(BigInt::zero) += 1;
    }
    let tally = Arc::new(tally);
    SUBMODULE_TABLES
        .write()
        .unwrap()
        .entry(key)
        .or_insert(tally.clone());
    Ok(tally)
}

/// Number of submodules `N ⊆ R` with `N ≅ sub` and `R/N ≅ quot`.
pub fn submodule_count(
    r: &CyclicIsoClass,
    sub: &CyclicIsoClass,
    quot: &CyclicIsoClass,
    q: u32,
) -> Result<BigInt> {
    if sub.m() != r.m() || quot.m() != r.m() {
        return Err(Error::VertexMismatch(sub.m().max(quot.m()), r.m()));
    }
    let (dr, ds, dq) = (r.dim_vector(), sub.dim_vector(), quot.dim_vector());
    if dr.iter().zip(ds.iter().zip(&dq)).any(|(a, (b, c))| a != &(b + c)) {
        return Err(Error::Unsupported(format!(
            "dimension vectors do not add up: {ds:?} + {dq:?} != {dr:?}"
        )));
    }
    Ok(submodule_table(r, q)?
        .get(&(sub.clone(), quot.clone()))
        .cloned()
        .unwrap_or_default())
}

/// Raw number of arrow-invariant graded subspaces of `R`, without
/// classifying them.
pub fn invariant_subspace_count(r: &CyclicIsoClass, q: u32) -> Result<BigInt> {
    check_submodule_cap(r)?;
    let module = realize(r, q)?;
    let p = q as u8;
    let mut total = BigInt::zero();
    for e in sub_dimension_vectors(module.dims()) {
        let choices: Vec<Arc<Vec<Subspace>>> = (0..module.m() as usize)
            .map(|h| subspaces(p, module.dims()[h], e[h]))
            .collect();
        let mut idx = vec![0usize; choices.len()];
        'outer: loop {
            let us: Vec<&Subspace> = idx.iter().zip(&choices).map(|(&i, c)| &c[i]).collect();
            if module.is_invariant(&us) {
                total += 1;
            }
            for k in 0..idx.len() {
                idx[k] += 1;
                if idx[k] < choices[k].len() {
                    continue 'outer;
                }
                idx[k] = 0;
            }
            break;
        }
    }
    Ok(total)
}

type ExtKey = (CyclicIsoClass, CyclicIsoClass, u32);

type ExtMemo = HashMap<ExtKey, Arc<Vec<(CyclicIsoClass, BigInt)>>>;

static EXTENSIONS: LazyLock<RwLock<ExtMemo>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

/// Hall numbers `g^R_{M,N}` (submodule `≅ N`, quotient `≅ M`) for every `R`,
/// from Riedtmann's formula
/// `g^R_{M,N} = |Ext¹(M,N)_R| |Aut R| / (|Hom(M,N)| |Aut M| |Aut N|)`.
/// Extension classes are enumerated as a complement of the coboundaries in
/// `⊕_h Hom(M_h, N_{h-1})`, and each middle term is decomposed.
pub fn extension_product(
    quot: &CyclicIsoClass,
    sub: &CyclicIsoClass,
    q: u32,
) -> Result<Arc<Vec<(CyclicIsoClass, BigInt)>>> {
    if quot.m() != sub.m() {
        return Err(Error::VertexMismatch(quot.m(), sub.m()));
    }
    let key = (quot.clone(), sub.clone(), q);
    if let Some(v) = EXTENSIONS.read().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let p = check_field(q)?;
    let mm = realize_uncapped(quot, q)?;
    let nn = realize_uncapped(sub, q)?;
    let m = quot.m() as usize;
    let prev = |h: usize| (h + m - 1) % m;
    let (dm, dn) = (mm.dims(), nn.dims());

    // C^0 = ⊕ Hom(M_h, N_h), C^1 = ⊕ Hom(M_h, N_{h-1}); entries row-major.
    let c1_off: Vec<usize> = offsets((0..m).map(|h| dn[prev(h)] * dm[h]));
    let c0: usize = (0..m).map(|h| dn[h] * dm[h]).sum();
    let c1: usize = (0..m).map(|h| dn[prev(h)] * dm[h]).sum();

    // δφ_h = A^N_h φ_h - φ_{h-1} A^M_h; one row per unit vector of C^0.
    let mut images: Vec<Vec<u8>> = Vec::with_capacity(c0);
    for h in 0..m {
        for r in 0..dn[h] {
            for c in 0..dm[h] {
                let mut img = vec![0u8; c1];
                // φ_h = E_{rc}: contributes A^N_h E_{rc} to arrow h
                let an = nn.arrow(h);
                for rr in 0..dn[prev(h)] {
                    let idx = c1_off[h] + rr * dm[h] + c;
                    img[idx] = (img[idx] + an.get(rr, r)) % p;
                }
                // φ_h = E_{rc} as φ_{k-1} for the arrow k = h+1: -E_{rc} A^M_k
                let k = (h + 1) % m;
                let am = mm.arrow(k);
                for cc in 0..dm[k] {
                    let idx = c1_off[k] + r * dm[k] + cc;
                    img[idx] = (img[idx] + p - am.get(c, cc)) % p;
                }
                images.push(img);
            }
        }
    }
    let (rank, pivots) = if c0 == 0 || c1 == 0 {
        (0, Vec::new())
    } else {
        let (_, piv) = Mat::from_row_vectors(p, c1, &images).rref();
        (piv.len(), piv)
    };
    let hom_dim = c0 - rank;
    let free: Vec<usize> = (0..c1).filter(|c| !pivots.contains(c)).collect();
    let n_ext = (q as u64).pow(free.len() as u32);

    let middle = |code: u64| -> Result<CyclicIsoClass> {
        let mut xi = vec![0u8; c1];
        let mut c = code;
        for &f in &free {
            xi[f] = (c % q as u64) as u8;
            c /= q as u64;
        }
        let dims: Vec<usize> = (0..m).map(|h| dn[h] + dm[h]).collect();
        let arrows = (0..m)
            .map(|h| {
                let t = prev(h);
                let mut a = Mat::zeros(p, dims[t], dims[h]);
                let (an, am) = (nn.arrow(h), mm.arrow(h));
                for r in 0..dn[t] {
                    for c in 0..dn[h] {
                        a.set(r, c, an.get(r, c));
                    }
                    for c in 0..dm[h] {
                        a.set(r, dn[h] + c, xi[c1_off[h] + r * dm[h] + c]);
                    }
                }
                for r in 0..dm[t] {
                    for c in 0..dm[h] {
                        a.set(dn[t] + r, dn[h] + c, am.get(r, c));
                    }
                }
                a
            })
            .collect();
        FqModule::new(q, dims, arrows)?.decompose()
    };

    let tallies: Result<HashMap<CyclicIsoClass, u64>> = (0..n_ext)
        .into_par_iter()
        .map(middle)
        .try_fold(HashMap::new, |mut acc, r| {
            *acc.entry(r?).or_insert(0) += 1;
            Ok(acc)
        })
        .try_reduce(HashMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            Ok(a)
        });

    let denom = BigInt::from(q).pow(hom_dim as u32) * aut_count(quot, q) * aut_count(sub, q);
    let mut out = Vec::new();
    for (r, count) in tallies? {
        let numer = BigInt::from(count) * aut_count(&r, q);
        let (g, rem) = numer.div_rem(&denom);
        if !rem.is_zero() {
            return Err(Error::Consistency(format!(
                "Riedtmann quotient for {r} is not an integer"
            )));
        }
        out.push((r, g));
    }
    out.sort();
    let out = Arc::new(out);
    EXTENSIONS.write().unwrap().entry(key).or_insert(out.clone());
    Ok(out)
}

fn offsets(sizes: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut acc = 0;
    sizes
        .map(|s| {
            let o = acc;
            acc += s;
            o
        })
        .collect()
}
