//! Syzygies, minimal graded free resolutions, and Betti tables.

use std::collections::BTreeMap;
use std::fmt;

use num::BigInt;
use serde::Serialize;

use crate::borel::is_borel_fixed;
use crate::error::{Error, Result};
use crate::gb::{self, ModuleOrder, Vect};
use crate::groebner::Ideal;
use crate::linalg::{Echelon, Indexer, SparseRow};
use crate::poly::{Monomial, MonomialOrder, Polynomial};

/// Homogeneous map `F_src -> F_tgt` of graded free modules, stored by columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMap {
    pub nvars: usize,
    /// Degrees of the target basis elements.
    pub target_degrees: Vec<i64>,
    /// Degrees of the source basis elements.
    pub source_degrees: Vec<i64>,
    /// `columns[c][r]` is the entry in row `r`, column `c`.
    pub columns: Vec<Vec<Polynomial>>,
}

impl GradedMap {
    /// The `1 × r` map given by a generator list.
    pub fn from_generators(gens: &[Polynomial]) -> Result<Self> {
        let nvars = gens.first().map(|g| g.nvars()).ok_or_else(|| Error::Shape("no generators".into()))?;
        let mut src = Vec::new();
        for g in gens {
            if g.is_zero() {
                return Err(Error::Shape("zero generator".into()));
            }
            if !g.is_homogeneous() {
                return Err(Error::NotHomogeneous(g.to_text()));
            }
            src.push(g.degree() as i64);
        }
        Ok(GradedMap { nvars, target_degrees: vec![0], source_degrees: src, columns: gens.iter().map(|g| vec![g.clone()]).collect() })
    }

    pub fn rows(&self) -> usize {
        self.target_degrees.len()
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn entry(&self, r: usize, c: usize) -> &Polynomial {
        &self.columns[c][r]
    }

    /// Whether every entry has degree `source - target` (or is zero).
    pub fn is_homogeneous(&self) -> bool {
        self.columns.iter().enumerate().all(|(c, col)| {
            col.iter().enumerate().all(|(r, p)| {
                p.is_zero() || (p.is_homogeneous() && p.degree() as i64 == self.source_degrees[c] - self.target_degrees[r])
            })
        })
    }

    /// `self ∘ other`, where `other` maps into the source of `self`.
    pub fn compose(&self, other: &GradedMap) -> Result<GradedMap> {
        if other.rows() != self.cols() {
            return Err(Error::Shape(format!("cannot compose {}x{} after {}x{}", self.rows(), self.cols(), other.rows(), other.cols())));
        }
        let columns = other
            .columns
            .iter()
            .map(|oc| {
                (0..self.rows())
                    .map(|r| {
                        let mut acc = Polynomial::zero(self.nvars);
                        for (k, a) in oc.iter().enumerate() {
                            if !a.is_zero() && !self.columns[k][r].is_zero() {
                                acc = &acc + &(&self.columns[k][r] * a);
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        Ok(GradedMap { nvars: self.nvars, target_degrees: self.target_degrees.clone(), source_degrees: other.source_degrees.clone(), columns })
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.iter().all(|p| p.is_zero()))
    }

    fn column_vect(&self, c: usize, ord: &ModuleOrder) -> Vect {
        Vect::from_polys(&self.columns[c], ord)
    }
}

/// Graded module order on `S^r` with the given shifts, grevlex on monomials.
fn pot_order(shifts: Vec<i64>) -> ModuleOrder {
    ModuleOrder::graded(MonomialOrder::Grevlex, shifts, 0)
}

/// Generators of the kernel of `map` (a Gröbner basis of the syzygy module; not necessarily minimal).
pub fn kernel(map: &GradedMap) -> GradedMap {
    let r = map.rows();
    let m = map.cols();
    let mut shifts = map.target_degrees.clone();
    shifts.extend(map.source_degrees.iter().copied());
    let ord = ModuleOrder::graded(MonomialOrder::Grevlex, shifts, r);
    let one = Polynomial::one(map.nvars);
    let zero = Polynomial::zero(map.nvars);
    let gens: Vec<Vect> = (0..m)
        .map(|j| {
            let mut polys = map.columns[j].clone();
            polys.extend((0..m).map(|k| if k == j { one.clone() } else { zero.clone() }));
            Vect::from_polys(&polys, &ord)
        })
        .collect();
    let basis = gb::buchberger(&gens, &ord, false);
    let mut columns = Vec::new();
    let mut degrees = Vec::new();
    for g in basis {
        if g.lead().1 < r {
            continue;
        }
        degrees.push(g.max_degree(&ord));
        let polys = g.to_polys(r + m, map.nvars);
        columns.push(polys[r..].to_vec());
    }
    GradedMap { nvars: map.nvars, target_degrees: map.source_degrees.clone(), source_degrees: degrees, columns }
}

/// Keep a minimal generating subset of the columns (graded Nakayama), scanning in degree order.
pub fn minimal_columns(map: &GradedMap) -> GradedMap {
    let mut order: Vec<usize> = (0..map.cols()).collect();
    order.sort_by_key(|&c| map.source_degrees[c]);
    let mut index: Indexer<(Monomial, usize)> = Indexer::default();
    let mut kept: Vec<usize> = Vec::new();
    let mut pos = 0;
    while pos < order.len() {
        let d = map.source_degrees[order[pos]];
        let mut ech = Echelon::new();
        for &k in &kept {
            let dk = map.source_degrees[k];
            for mono in Monomial::all_of_degree(map.nvars, (d - dk) as u32) {
                ech.insert(&sparse_column(&map.columns[k], Some(&mono), &mut index));
            }
        }
        while pos < order.len() && map.source_degrees[order[pos]] == d {
            let c = order[pos];
            if ech.insert(&sparse_column(&map.columns[c], None, &mut index)) {
                kept.push(c);
            }
            pos += 1;
        }
    }
    kept.sort_unstable();
    GradedMap {
        nvars: map.nvars,
        target_degrees: map.target_degrees.clone(),
        source_degrees: kept.iter().map(|&c| map.source_degrees[c]).collect(),
        columns: kept.iter().map(|&c| map.columns[c].clone()).collect(),
    }
}

fn sparse_column(col: &[Polynomial], times: Option<&Monomial>, index: &mut Indexer<(Monomial, usize)>) -> SparseRow {
    let mut v: SparseRow = Vec::new();
    for (r, p) in col.iter().enumerate() {
        for (m, a) in p.terms() {
            let m = match times {
                Some(t) => m.mul(t),
                None => m.clone(),
            };
            v.push((index.index(&(m, r)), a.clone()));
        }
    }
    v.sort_by_key(|e| e.0);
    v
}

/// Generators of the first syzygy module of `gens` (one column per syzygy).
pub fn syzygies(gens: &[Polynomial]) -> Result<GradedMap> {
    Ok(kernel(&GradedMap::from_generators(gens)?))
}

/// Minimal generators of the syzygies of `gens`.
pub fn minimal_syzygies(gens: &[Polynomial]) -> Result<GradedMap> {
    Ok(minimal_columns(&syzygies(gens)?))
}

/// Whether two maps with the same target have the same column span.
pub fn column_span_equal(a: &GradedMap, b: &GradedMap) -> bool {
    if a.target_degrees != b.target_degrees || a.nvars != b.nvars {
        return false;
    }
    let ord = pot_order(a.target_degrees.clone());
    let ga: Vec<Vect> = (0..a.cols()).map(|c| a.column_vect(c, &ord)).collect();
    let gb_: Vec<Vect> = (0..b.cols()).map(|c| b.column_vect(c, &ord)).collect();
    gb::buchberger(&ga, &ord, false) == gb::buchberger(&gb_, &ord, false)
}

/// Graded Betti numbers `β_{i,j}` of `S/I`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BettiTable {
    entries: BTreeMap<(usize, i64), usize>,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: i64) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn insert(&mut self, i: usize, j: i64, v: usize) {
        if v > 0 {
            *self.entries.entry((i, j)).or_insert(0) += v;
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, i64, usize)> + '_ {
        self.entries.iter().map(|(&(i, j), &v)| (i, j, v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Total Betti numbers `b_0, b_1, ...`.
    pub fn totals(&self) -> Vec<usize> {
        let len = self.projective_dimension().map(|p| p + 1).unwrap_or(0);
        let mut out = vec![0; len];
        for (&(i, _), &v) in &self.entries {
            out[i] += v;
        }
        out
    }

    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|k| k.0).max()
    }

    /// Regularity of `I`: the largest `j - i + 1` over `β_{i,j} ≠ 0`, `i ≥ 1`.
    pub fn regularity(&self) -> Option<i64> {
        self.entries.keys().filter(|k| k.0 >= 1).map(|&(i, j)| j - i as i64 + 1).max()
    }

    /// Depth of `S/I` by Auslander–Buchsbaum.
    pub fn depth(&self, nvars: usize) -> Option<usize> {
        self.projective_dimension().map(|p| nvars - p)
    }

    /// Whether all syzygies are linear: `β_{i,j} ≠ 0` with `i ≥ 1` forces `j = i + reg - 1`.
    pub fn is_linear(&self) -> bool {
        let Some(r) = self.regularity() else { return true };
        self.entries.keys().filter(|k| k.0 >= 1).all(|&(i, j)| j == i as i64 + r - 1)
    }

    /// Triangular diagram, rows indexed by `j - i`.
    pub fn to_text(&self) -> String {
        let totals = self.totals();
        let cols = totals.len();
        let rows: Vec<i64> = {
            let mut r: Vec<i64> = self.entries.keys().map(|&(i, j)| j - i as i64).collect();
            r.sort_unstable();
            r.dedup();
            r
        };
        let width = totals.iter().map(|t| t.to_string().len()).max().unwrap_or(1).max(cols.to_string().len());
        let mut out = String::new();
        out.push_str(&format!("{:>7}", ""));
        for i in 0..cols {
            out.push_str(&format!(" {:>width$}", i));
        }
        out.push('\n');
        out.push_str(&format!("{:>7}", "total:"));
        for t in &totals {
            out.push_str(&format!(" {:>width$}", t));
        }
        for r in rows {
            out.push('\n');
            out.push_str(&format!("{:>7}", format!("{r}:")));
            for i in 0..cols {
                let v = self.get(i, r + i as i64);
                let s = if v == 0 { ".".to_string() } else { v.to_string() };
                out.push_str(&format!(" {:>width$}", s));
            }
        }
        out
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Serialize for BettiTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("BettiTable", 3)?;
        let e: Vec<(usize, i64, usize)> = self.entries().collect();
        st.serialize_field("entries", &e)?;
        st.serialize_field("totals", &self.totals())?;
        st.serialize_field("diagram", &self.to_text())?;
        st.end()
    }
}

/// A graded free resolution `0 <- S <- F_1 <- F_2 <- ...` of `S/I`.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub nvars: usize,
    /// `maps[i]` is `φ_{i+1}: F_{i+1} -> F_i`.
    pub maps: Vec<GradedMap>,
}

impl Resolution {
    pub fn betti(&self) -> BettiTable {
        let mut b = BettiTable::default();
        b.insert(0, 0, 1);
        for (i, m) in self.maps.iter().enumerate() {
            for &d in &m.source_degrees {
                b.insert(i + 1, d, 1);
            }
        }
        b
    }

    pub fn length(&self) -> usize {
        self.maps.len()
    }

    /// Whether consecutive maps compose to zero.
    pub fn is_complex(&self) -> bool {
        self.maps.windows(2).all(|w| w[0].compose(&w[1]).map(|c| c.is_zero()).unwrap_or(false))
    }

    /// Whether no map has a nonzero constant entry.
    pub fn is_minimal(&self) -> bool {
        self.maps.iter().all(|m| m.columns.iter().all(|c| c.iter().all(|p| p.is_zero() || !p.is_constant())))
    }
}

fn resolve(i: &Ideal, minimal: bool) -> Result<Resolution> {
    if i.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let gens: Vec<Polynomial> = i.gens().iter().filter(|g| !g.is_zero()).cloned().collect();
    let mut maps = Vec::new();
    if gens.is_empty() {
        return Ok(Resolution { nvars: i.nvars(), maps });
    }
    let first = GradedMap::from_generators(&gens)?;
    let mut cur = if minimal { minimal_columns(&first) } else { first };
    loop {
        let k = kernel(&cur);
        maps.push(cur);
        if k.cols() == 0 {
            break;
        }
        cur = if minimal { minimal_columns(&k) } else { k };
    }
    Ok(Resolution { nvars: i.nvars(), maps })
}

/// Minimal graded free resolution of `S/I`.
pub fn minimal_free_resolution(i: &Ideal) -> Result<Resolution> {
    let r = resolve(i, true)?;
    debug_assert!(r.is_minimal());
    Ok(r)
}

/// Resolution built from full syzygy Gröbner bases without minimization.
pub fn free_resolution(i: &Ideal) -> Result<Resolution> {
    resolve(i, false)
}

/// Remove every unit entry by change of basis, lowest index first.
pub fn minimize(res: &Resolution) -> Resolution {
    let mut maps = res.maps.clone();
    'outer: loop {
        // the first map has target S; a unit there means I = (1)
        for k in 1..maps.len() {
            let found = (0..maps[k].cols()).find_map(|c| {
                (0..maps[k].rows()).find(|&r| {
                    let p = maps[k].entry(r, c);
                    !p.is_zero() && p.is_constant()
                }).map(|r| (r, c))
            });
            let Some((r, c)) = found else { continue };
            eliminate_unit(&mut maps, k, r, c);
            continue 'outer;
        }
        break;
    }
    while maps.last().is_some_and(|m| m.cols() == 0) {
        maps.pop();
    }
    Resolution { nvars: res.nvars, maps }
}

fn eliminate_unit(maps: &mut [GradedMap], k: usize, r: usize, c: usize) {
    let nv = maps[k].nvars;
    let unit = maps[k].entry(r, c).terms()[0].1.clone();
    let pivot_col = maps[k].columns[c].clone();
    // clear row r with column operations
    let mut q: Vec<Polynomial> = vec![Polynomial::zero(nv); maps[k].cols()];
    for c2 in 0..maps[k].cols() {
        if c2 == c || maps[k].entry(r, c2).is_zero() {
            continue;
        }
        let f = maps[k].entry(r, c2).scale(&unit.recip());
        for (row, p) in pivot_col.iter().enumerate() {
            let v = &maps[k].columns[c2][row] - &(&f * p);
            maps[k].columns[c2][row] = v;
        }
        q[c2] = f;
    }
    // the basis change of F_k adds q-multiples of other rows to row c of the next map
    if k + 1 < maps.len() {
        let next = &mut maps[k + 1];
        for col in next.columns.iter_mut() {
            let mut acc = col[c].clone();
            for (c2, f) in q.iter().enumerate() {
                if !f.is_zero() && !col[c2].is_zero() {
                    acc = &acc + &(f * &col[c2]);
                }
            }
            debug_assert!(acc.is_zero());
            col.remove(c);
        }
        next.target_degrees.remove(c);
    }
    let m = &mut maps[k];
    m.columns.remove(c);
    m.source_degrees.remove(c);
    for col in m.columns.iter_mut() {
        col.remove(r);
    }
    m.target_degrees.remove(r);
    let prev = &mut maps[k - 1];
    prev.columns.remove(r);
    prev.source_degrees.remove(r);
}

/// Betti table of the minimal resolution of `S/I`.
pub fn betti_table(i: &Ideal) -> Result<BettiTable> {
    Ok(minimal_free_resolution(i)?.betti())
}

/// Regularity of `I` read from a Betti table.
pub fn regularity(b: &BettiTable) -> Result<i64> {
    b.regularity().ok_or_else(|| Error::Shape("empty Betti table".into()))
}

pub fn projective_dimension(b: &BettiTable) -> Result<usize> {
    b.projective_dimension().ok_or_else(|| Error::Shape("empty Betti table".into()))
}

pub fn depth(b: &BettiTable, nvars: usize) -> Result<usize> {
    b.depth(nvars).ok_or_else(|| Error::Shape("empty Betti table".into()))
}

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut acc = BigInt::from(1);
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc.to_string().parse().unwrap()
}

/// Total Betti numbers `b_1, b_2, ...` of `I` from the Eliahou–Kervaire formula.
pub fn ek_betti(i: &Ideal) -> Result<Vec<usize>> {
    if !is_borel_fixed(i)? {
        return Err(Error::NotBorelFixed);
    }
    let gens = i.minimal_monomials()?;
    let maxes: Vec<usize> = gens.iter().map(|g| g.max_var().unwrap_or(0)).collect();
    let top = maxes.iter().copied().max().unwrap_or(0);
    Ok((1..=top + 1).map(|k| maxes.iter().map(|&m| binom(m, k - 1)).sum()).filter(|&b| b > 0).collect())
}

/// Coefficient-level check that a column is a syzygy of `gens`.
pub fn is_syzygy(gens: &[Polynomial], col: &[Polynomial]) -> bool {
    let nv = gens[0].nvars();
    let mut acc = Polynomial::zero(nv);
    for (g, s) in gens.iter().zip(col) {
        acc = &acc + &(g * s);
    }
    acc.is_zero() && gens.len() == col.len()
}
