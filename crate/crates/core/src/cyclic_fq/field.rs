//! Dense matrices over a small prime field and row-echelon subspace
//! enumeration.

use std::collections::HashMap;
use std::sync::{Arc, LazyLock, RwLock};

use crate::error::{Error, Result};

pub const SUPPORTED_FIELDS: [u32; 3] = [2, 3, 5];

pub fn check_field(q: u32) -> Result<u8> {
    if SUPPORTED_FIELDS.contains(&q) {
        Ok(q as u8)
    } else {
        Err(Error::UnsupportedField(q))
    }
}

fn inv_mod(a: u8, p: u8) -> u8 {
    debug_assert!(!a.is_multiple_of(p));
    (1..p).find(|&b| (a as u16 * b as u16) % p as u16 == 1).unwrap()
}

/// Row-major matrix over `F_p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat {
    p: u8,
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl Mat {
    pub fn zeros(p: u8, rows: usize, cols: usize) -> Self {
        Mat {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(p: u8, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(p: u8, rows: usize, cols: usize, data: Vec<u8>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Mat {
            p,
            rows,
            cols,
            data: data.into_iter().map(|x| x % p).collect(),
        }
    }

    pub fn p(&self) -> u8 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u8) {
        self.data[r * self.cols + c] = v % self.p;
    }

    pub fn row(&self, r: usize) -> &[u8] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let p = self.p as u32;
        let mut out = Mat::zeros(self.p, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k) as u32;
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = ((out.data[idx] as u32 + a * other.get(k, j) as u32) % p) as u8;
                }
            }
        }
        out
    }

    /// `self * v` for a column vector.
    pub fn apply(&self, v: &[u8]) -> Vec<u8> {
        let p = self.p as u32;
        (0..self.rows)
            .map(|i| {
                let s: u32 = self.row(i).iter().zip(v).map(|(&a, &b)| a as u32 * b as u32).sum();
                (s % p) as u8
            })
            .collect()
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zeros(self.p, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    /// Reduced row-echelon form and its pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let p = self.p as u16;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..m.cols {
                    m.data.swap(pr * m.cols + j, r * m.cols + j);
                }
            }
            let inv = inv_mod(m.get(r, c), m.p) as u16;
            for j in 0..m.cols {
                let idx = r * m.cols + j;
                m.data[idx] = ((m.data[idx] as u16 * inv) % p) as u8;
            }
            for i in 0..m.rows {
                let f = m.get(i, c) as u16;
                if i == r || f == 0 {
                    continue;
                }
                for j in 0..m.cols {
                    let sub = (f * m.get(r, j) as u16) % p;
                    let idx = i * m.cols + j;
                    m.data[idx] = ((m.data[idx] as u16 + p - sub) % p) as u8;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{v : self * v = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<u8>> {
        let (r, pivots) = self.rref();
        let p = self.p;
        let mut out = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![0u8; self.cols];
            v[free] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - r.get(row, free)) % p;
            }
            out.push(v);
        }
        out
    }

    /// Stack rows of `self` on top of rows of `other`.
    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Mat {
            p: self.p,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn from_row_vectors(p: u8, cols: usize, rows: &[Vec<u8>]) -> Mat {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols);
            data.extend_from_slice(r);
        }
        Mat {
            p,
            rows: rows.len(),
            cols,
            data,
        }
    }
}

/// A subspace of `F_p^d` stored as its RREF basis (rows) with pivots.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    pub basis: Mat,
    pub pivots: Vec<usize>,
}

impl Subspace {
    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient(&self) -> usize {
        self.basis.cols()
    }

    /// Subtract the basis rows to clear every pivot coordinate of `v`.
    pub fn reduce(&self, v: &[u8]) -> Vec<u8> {
        let p = self.basis.p() as u16;
        let mut w = v.to_vec();
        for (row, &pc) in self.pivots.iter().enumerate() {
            let f = w[pc] as u16;
            if f == 0 {
                continue;
            }
            for (j, x) in w.iter_mut().enumerate() {
                let sub = (f * self.basis.get(row, j) as u16) % p;
                *x = ((*x as u16 + p - sub) % p) as u8;
            }
        }
        w
    }

    pub fn contains(&self, v: &[u8]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Coordinates of `v ∈ U` in the RREF basis.
    pub fn coords(&self, v: &[u8]) -> Vec<u8> {
        self.pivots.iter().map(|&c| v[c]).collect()
    }

    /// Non-pivot coordinates; a basis of a complement is given by the unit
    /// vectors at these positions.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ambient()).filter(|c| !self.pivots.contains(c)).collect()
    }
}

type SubspaceKey = (u8, usize, usize);

static SUBSPACES: LazyLock<RwLock<HashMap<SubspaceKey, Arc<Vec<Subspace>>>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn build_subspaces(p: u8, d: usize, k: usize) -> Vec<Subspace> {
    let mut out = Vec::new();
    for pivots in combinations(d, k) {
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &pc)| {
                let pivots = &pivots;
                (pc + 1..d)
                    .filter(move |c| !pivots.contains(c))
                    .map(move |c| (r, c))
            })
            .collect();
        let total = (p as usize).pow(free.len() as u32);
        for mut code in 0..total {
            let mut m = Mat::zeros(p, k, d);
            for (r, &pc) in pivots.iter().enumerate() {
                m.set(r, pc, 1);
            }
            for &(r, c) in &free {
                m.set(r, c, (code % p as usize) as u8);
                code /= p as usize;
            }
            out.push(Subspace {
                basis: m,
                pivots: pivots.clone(),
            });
        }
    }
    out
}

/// Every `k`-dimensional subspace of `F_p^d`, each exactly once.
pub fn subspaces(p: u8, d: usize, k: usize) -> Arc<Vec<Subspace>> {
    let key = (p, d, k);
    if let Some(v) = SUBSPACES.read().unwrap().get(&key) {
        return v.clone();
    }
    let built = Arc::new(build_subspaces(p, d, k));
    SUBSPACES.write().unwrap().entry(key).or_insert(built).clone()
}
