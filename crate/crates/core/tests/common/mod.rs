//! Independent linear-algebra oracles: everything is computed degree by degree from
//! spans of monomial multiples of the generators, without Gröbner bases.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num::{One, Zero};
use planepairs::poly::{Coeff, Monomial, Polynomial};
use proptest::prelude::*;

pub type Key = Vec<u16>;
pub type Vector = BTreeMap<Key, Coeff>;

pub fn to_vector(p: &Polynomial) -> Vector {
    p.terms().iter().map(|(m, c)| (m.exps().to_vec(), c.clone())).collect()
}

/// Echelon form keyed by monomial; each row's pivot is its largest key.
#[derive(Default)]
pub struct Span {
    rows: BTreeMap<Key, Vector>,
}

impl Span {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Full reduction: no key of the result is a pivot. Linear in `v`.
    pub fn reduce(&self, v: &Vector) -> Vector {
        let mut v = v.clone();
        let mut bound: Option<Key> = None;
        loop {
            let next = v
                .keys()
                .rev()
                .find(|k| bound.as_ref().is_none_or(|b| *k < b) && self.rows.contains_key(*k))
                .cloned();
            let Some(k) = next else { return v };
            let row = &self.rows[&k];
            let f = v[&k].clone() / row[&k].clone();
            for (c, x) in row {
                let e = v.entry(c.clone()).or_insert_with(Coeff::zero);
                *e -= &f * x;
                if e.is_zero() {
                    v.remove(c);
                }
            }
            bound = Some(k);
        }
    }

    pub fn insert(&mut self, v: &Vector) -> bool {
        let r = self.reduce(v);
        match r.keys().next_back().cloned() {
            Some(k) => {
                self.rows.insert(k, r);
                true
            }
            None => false,
        }
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.reduce(v).is_empty()
    }
}

/// The degree-`d` part of the ideal generated by `gens`.
pub fn ideal_span(gens: &[Polynomial], nvars: usize, d: u32) -> Span {
    let mut s = Span::default();
    for g in gens {
        if g.is_zero() || g.degree() > d {
            continue;
        }
        for m in Monomial::all_of_degree(nvars, d - g.degree()) {
            s.insert(&to_vector(&g.mul_term(&m, &Coeff::one())));
        }
    }
    s
}

pub fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// `dim (S/I)_d` for homogeneous generators.
pub fn hilbert_function(gens: &[Polynomial], nvars: usize, d: u32) -> i64 {
    let total = binom(nvars as u64 + d as u64 - 1, d as u64) as i64;
    total - ideal_span(gens, nvars, d).rank() as i64
}

/// Membership of a homogeneous polynomial.
pub fn member(gens: &[Polynomial], p: &Polynomial) -> bool {
    if p.is_zero() {
        return true;
    }
    ideal_span(gens, p.nvars(), p.degree()).contains(&to_vector(p))
}

/// Null space of the columns, as coefficient vectors.
fn nullspace(cols: &[Vector]) -> Vec<Vec<Coeff>> {
    let mut keys: Vec<Key> = cols.iter().flat_map(|c| c.keys().cloned()).collect();
    keys.sort();
    keys.dedup();
    let idx: BTreeMap<&Key, usize> = keys.iter().enumerate().map(|(i, k)| (k, i)).collect();
    let mut m = vec![vec![Coeff::zero(); cols.len()]; keys.len()];
    for (j, c) in cols.iter().enumerate() {
        for (k, v) in c {
            m[idx[k]][j] = v.clone();
        }
    }
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols.len() {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = Coeff::one() / m[r][c].clone();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let pivot_row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let mut out = Vec::new();
    for f in (0..cols.len()).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Coeff::zero(); cols.len()];
        v[f] = Coeff::one();
        for (i, &c) in pivots.iter().enumerate() {
            v[c] = -m[i][f].clone();
        }
        out.push(v);
    }
    out
}

/// `dim Hom(I, S/I)_0` by brute force: unknown images of every generator, constrained by
/// every relation among the generators in degrees up to `max deg + extra`, modulo maps into `I`.
pub fn hom_dim(gens: &[Polynomial], nvars: usize, extra: u32) -> usize {
    let degs: Vec<u32> = gens.iter().map(|g| g.degree()).collect();
    let mut unknowns: BTreeMap<(usize, Key), usize> = BTreeMap::new();
    for (i, &d) in degs.iter().enumerate() {
        for m in Monomial::all_of_degree(nvars, d) {
            let k = unknowns.len();
            unknowns.insert((i, m.exps().to_vec()), k);
        }
    }
    let lo = *degs.iter().min().unwrap() + 1;
    let hi = *degs.iter().max().unwrap() + extra;
    let mut system = Span::default();
    for big in lo..=hi {
        let mut cols = Vec::new();
        let mut labels = Vec::new();
        for (i, g) in gens.iter().enumerate() {
            if degs[i] > big {
                continue;
            }
            for m in Monomial::all_of_degree(nvars, big - degs[i]) {
                cols.push(to_vector(&g.mul_term(&m, &Coeff::one())));
                labels.push((i, m));
            }
        }
        let span = ideal_span(gens, nvars, big);
        for v in nullspace(&cols) {
            // image of unknown u under this relation, reduced mod I_big
            let mut per_unknown: BTreeMap<usize, Vector> = BTreeMap::new();
            for (j, (i, m)) in labels.iter().enumerate() {
                if v[j].is_zero() {
                    continue;
                }
                for mm in Monomial::all_of_degree(nvars, degs[*i]) {
                    let key = unknowns[&(*i, mm.exps().to_vec())];
                    let t = m.mul(&mm).exps().to_vec();
                    let e = per_unknown.entry(key).or_default().entry(t).or_insert_with(Coeff::zero);
                    *e += &v[j];
                }
            }
            let mut rows: BTreeMap<Key, Vector> = BTreeMap::new();
            for (u, poly) in per_unknown {
                let poly: Vector = poly.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                for (t, c) in span.reduce(&poly) {
                    rows.entry(t).or_default().insert(vec![(u >> 16) as u16, u as u16], c);
                }
            }
            for r in rows.values() {
                system.insert(r);
            }
        }
    }
    let solutions = unknowns.len() - system.rank();
    let trivial: usize = degs.iter().map(|&d| ideal_span(gens, nvars, d).rank()).sum();
    solutions - trivial
}

/// Every relation among `gens` in degrees up to `max deg + extra` sends `images` into `I`.
pub fn is_hom(gens: &[Polynomial], nvars: usize, images: &[Polynomial], extra: u32) -> bool {
    let degs: Vec<u32> = gens.iter().map(|g| g.degree()).collect();
    let lo = *degs.iter().min().unwrap() + 1;
    let hi = *degs.iter().max().unwrap() + extra;
    for big in lo..=hi {
        let mut cols = Vec::new();
        let mut labels = Vec::new();
        for (i, g) in gens.iter().enumerate() {
            if degs[i] > big {
                continue;
            }
            for m in Monomial::all_of_degree(nvars, big - degs[i]) {
                cols.push(to_vector(&g.mul_term(&m, &Coeff::one())));
                labels.push((i, m));
            }
        }
        let span = ideal_span(gens, nvars, big);
        for v in nullspace(&cols) {
            let mut acc = Polynomial::zero(nvars);
            for (j, (i, m)) in labels.iter().enumerate() {
                if !v[j].is_zero() {
                    acc = &acc + &images[*i].mul_term(m, &v[j]);
                }
            }
            if !span.contains(&to_vector(&acc)) {
                return false;
            }
        }
    }
    true
}

/// Rank of a family of generator images modulo maps into `I`.
pub fn hom_family_rank(gens: &[Polynomial], nvars: usize, family: &[Vec<Polynomial>]) -> usize {
    let spans: Vec<Span> = gens.iter().map(|g| ideal_span(gens, nvars, g.degree())).collect();
    let mut total = Span::default();
    for images in family {
        let mut row = Vector::new();
        for (i, p) in images.iter().enumerate() {
            for (mut k, c) in spans[i].reduce(&to_vector(p)) {
                k.insert(0, i as u16);
                row.insert(k, c);
            }
        }
        total.insert(&row);
    }
    total.rank()
}

/// Small integer polynomial in `nvars` variables with up to four terms of degree at most 3.
pub fn small_poly(nvars: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0u16..3, nvars), -4i64..5), 0..5).prop_map(move |terms| {
        Polynomial::from_terms(
            nvars,
            terms.into_iter().map(|(e, c)| (Monomial::from_exps(&e), Coeff::from_integer(c.into()))),
        )
    })
}

/// Homogeneous polynomial of degree `d` with up to four terms.
pub fn homogeneous_poly(nvars: usize, d: u32) -> impl Strategy<Value = Polynomial> {
    let mons = Monomial::all_of_degree(nvars, d);
    let len = mons.len();
    prop::collection::vec((0..len, -3i64..4), 1..5).prop_map(move |terms| {
        Polynomial::from_terms(
            nvars,
            terms.into_iter().map(|(i, c)| (mons[i].clone(), Coeff::from_integer(c.into()))),
        )
    })
}

/// Invertible integer matrix: unit upper triangular times a permutation, entries in -2..=2.
pub fn invertible_matrix(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (
        prop::collection::vec(-2i64..3, n * n),
        Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
    )
        .prop_map(move |(vals, perm)| {
            let mut m = vec![vec![0i64; n]; n];
            for i in 0..n {
                for j in 0..n {
                    m[perm[i]][j] = match i.cmp(&j) {
                        std::cmp::Ordering::Equal => 1,
                        std::cmp::Ordering::Less => vals[i * n + j],
                        std::cmp::Ordering::Greater => 0,
                    };
                }
            }
            m
        })
}
