//! Exact rational linear algebra: sparse incremental echelon forms and small dense solves.

use std::collections::{BTreeMap, HashMap};

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::Coeff;

/// Sparse vector, entries sorted by column with no zeros.
pub type SparseRow = Vec<(usize, Coeff)>;

/// Row echelon form built one row at a time.
#[derive(Default, Clone, Debug)]
pub struct Echelon {
    rows: Vec<SparseRow>,
    pivot_of: HashMap<usize, usize>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Remainder of `v` after eliminating every pivot column.
    pub fn reduce(&self, v: &SparseRow) -> SparseRow {
        let mut acc: BTreeMap<usize, Coeff> = v.iter().filter(|(_, c)| !c.is_zero()).cloned().collect();
        let mut cursor = 0usize;
        loop {
            let next = acc.range(cursor..).find(|(c, _)| self.pivot_of.contains_key(c)).map(|(c, a)| (*c, a.clone()));
            let Some((col, a)) = next else { break };
            let row = &self.rows[self.pivot_of[&col]];
            for (c, x) in row {
                let e = acc.entry(*c).or_insert_with(Coeff::zero);
                *e -= &a * x;
                if e.is_zero() {
                    acc.remove(c);
                }
            }
            cursor = col + 1;
        }
        acc.into_iter().collect()
    }

    /// Add `v`; returns true when it was independent of the rows so far.
    pub fn insert(&mut self, v: &SparseRow) -> bool {
        let r = self.reduce(v);
        if r.is_empty() {
            return false;
        }
        let inv = r[0].1.recip();
        let r: SparseRow = r.into_iter().map(|(c, x)| (c, x * &inv)).collect();
        self.pivot_of.insert(r[0].0, self.rows.len());
        self.rows.push(r);
        true
    }

    pub fn contains(&self, v: &SparseRow) -> bool {
        self.reduce(v).is_empty()
    }
}

/// Rank of a family of sparse vectors.
pub fn rank(rows: &[SparseRow]) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// Assigns consecutive column indices to hashable keys.
#[derive(Debug, Clone)]
pub struct Indexer<K: std::hash::Hash + Eq + Clone> {
    map: HashMap<K, usize>,
}

impl<K: std::hash::Hash + Eq + Clone> Default for Indexer<K> {
    fn default() -> Self {
        Indexer { map: HashMap::new() }
    }
}

impl<K: std::hash::Hash + Eq + Clone> Indexer<K> {
    pub fn index(&mut self, k: &K) -> usize {
        let n = self.map.len();
        *self.map.entry(k.clone()).or_insert(n)
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

/// Dense matrix in row-major order.
pub type Matrix = Vec<Vec<Coeff>>;

/// Reduced row echelon form; returns the pivot columns.
pub fn rref(m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map(|r| r.len()).unwrap_or(0);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let v = &m[r][j] * &f;
                    m[i][j] -= v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn dense_rank(m: &Matrix) -> usize {
    let mut a = m.clone();
    rref(&mut a).len()
}

/// Solve the square system `a x = b`.
pub fn solve(a: &Matrix, b: &[Coeff]) -> Result<Vec<Coeff>> {
    let n = a.len();
    if a.iter().any(|r| r.len() != n) || b.len() != n {
        return Err(Error::Shape("solve expects a square system".into()));
    }
    let mut aug: Matrix = a.iter().zip(b).map(|(r, x)| r.iter().cloned().chain(std::iter::once(x.clone())).collect()).collect();
    let piv = rref(&mut aug);
    if piv.len() < n || piv.iter().any(|&p| p >= n) {
        return Err(Error::Singular);
    }
    Ok(aug.iter().map(|r| r[n].clone()).collect())
}

/// Determinant by elimination.
pub fn det(a: &Matrix) -> Coeff {
    let n = a.len();
    let mut m = a.clone();
    let mut d = Coeff::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else { return Coeff::zero() };
        if p != c {
            m.swap(p, c);
            d = -d;
        }
        d *= &m[c][c];
        for i in c + 1..n {
            if !m[i][c].is_zero() {
                let f = &m[i][c] / &m[c][c];
                for j in c..n {
                    let v = &m[c][j] * &f;
                    m[i][j] -= v;
                }
            }
        }
    }
    d
}

/// Transpose of a dense matrix.
pub fn transpose(a: &Matrix) -> Matrix {
    let rows = a.len();
    let cols = a.first().map(|r| r.len()).unwrap_or(0);
    (0..cols).map(|j| (0..rows).map(|i| a[i][j].clone()).collect()).collect()
}

pub fn is_nonnegative(v: &[Coeff]) -> bool {
    v.iter().all(|x| !x.is_negative())
}

pub fn is_positive(v: &[Coeff]) -> bool {
    v.iter().all(|x| x.is_positive())
}
