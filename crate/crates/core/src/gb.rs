//! Buchberger engine over free modules `S^r`; ideals are the case `r = 1`.

use std::cmp::Ordering;

use num::{One, Zero};


use crate::poly::{Coeff, Monomial, MonomialOrder, Polynomial};

/// Term order on `S^r`.
#[derive(Clone, Debug)]
pub(crate) struct ModuleOrder {
    pub mon: MonomialOrder,
    /// Compare `deg(m) + shift[c]` before the monomial order.
    pub graded: bool,
    pub shifts: Vec<i64>,
    /// Components below this index dominate all others (elimination of a block).
    pub elim_below: usize,
}

impl ModuleOrder {
    pub fn ideal(mon: MonomialOrder) -> Self {
        ModuleOrder { mon, graded: false, shifts: vec![0], elim_below: 0 }
    }

    pub fn graded(mon: MonomialOrder, shifts: Vec<i64>, elim_below: usize) -> Self {
        ModuleOrder { mon, graded: true, shifts, elim_below }
    }

    pub fn cmp(&self, am: &Monomial, ac: usize, bm: &Monomial, bc: usize) -> Ordering {
        let ea = ac < self.elim_below;
        let eb = bc < self.elim_below;
        if ea != eb {
            return ea.cmp(&eb);
        }
        if self.graded {
            let da = am.degree() as i64 + self.shifts[ac];
            let db = bm.degree() as i64 + self.shifts[bc];
            if da != db {
                return da.cmp(&db);
            }
        }
        self.mon.cmp(am, bm).then_with(|| bc.cmp(&ac))
    }

    fn degree(&self, m: &Monomial, c: usize) -> i64 {
        m.degree() as i64 + self.shifts.get(c).copied().unwrap_or(0)
    }
}

/// Element of `S^r`, terms sorted descending under the active order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Vect {
    pub terms: Vec<(Monomial, usize, Coeff)>,
}

impl Vect {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn from_polys(polys: &[Polynomial], ord: &ModuleOrder) -> Self {
        let mut terms: Vec<(Monomial, usize, Coeff)> = Vec::new();
        for (c, p) in polys.iter().enumerate() {
            for (m, a) in p.terms() {
                terms.push((m.clone(), c, a.clone()));
            }
        }
        terms.sort_by(|a, b| ord.cmp(&b.0, b.1, &a.0, a.1));
        Vect { terms }
    }

    pub fn from_poly(p: &Polynomial, ord: &ModuleOrder) -> Self {
        Self::from_polys(std::slice::from_ref(p), ord)
    }

    /// Component polynomials, `rank` of them in a ring of `nvars` variables.
    pub fn to_polys(&self, rank: usize, nvars: usize) -> Vec<Polynomial> {
        let mut parts: Vec<Vec<(Monomial, Coeff)>> = vec![Vec::new(); rank];
        for (m, c, a) in &self.terms {
            parts[*c].push((m.clone(), a.clone()));
        }
        parts.into_iter().map(|t| Polynomial::from_terms(nvars, t)).collect()
    }

    pub fn lead(&self) -> (&Monomial, usize, &Coeff) {
        let t = &self.terms[0];
        (&t.0, t.1, &t.2)
    }

    pub fn make_monic(&mut self) {
        if let Some(first) = self.terms.first() {
            if first.2.is_one() {
                return;
            }
            let inv = first.2.recip();
            for t in &mut self.terms {
                t.2 = &t.2 * &inv;
            }
        }
    }

    pub fn max_degree(&self, ord: &ModuleOrder) -> i64 {
        self.terms.iter().map(|(m, c, _)| ord.degree(m, *c)).max().unwrap_or(0)
    }
}

/// `a - f * m * b`, where `a` and `b` are sorted under `ord`.
fn sub_mul(a: &[(Monomial, usize, Coeff)], f: &Coeff, m: &Monomial, b: &Vect, ord: &ModuleOrder) -> Vec<(Monomial, usize, Coeff)> {
    let mut out = Vec::with_capacity(a.len() + b.terms.len());
    let mut i = 0;
    let mut bi = b.terms.iter().map(|(t, c, x)| (t.mul(m), *c, x * f)).peekable();
    while i < a.len() {
        let Some(bt) = bi.peek() else { break };
        match ord.cmp(&a[i].0, a[i].1, &bt.0, bt.1) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let (t, c, x) = bi.next().unwrap();
                out.push((t, c, -x));
            }
            Ordering::Equal => {
                let (t, c, x) = bi.next().unwrap();
                let v = &a[i].2 - &x;
                if !v.is_zero() {
                    out.push((t, c, v));
                }
                i += 1;
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    for (t, c, x) in bi {
        out.push((t, c, -x));
    }
    out
}

fn find_divisor(m: &Monomial, c: usize, basis: &[Vect]) -> Option<usize> {
    basis.iter().position(|g| {
        let (lm, lc, _) = g.lead();
        lc == c && lm.divides(m)
    })
}

/// Normal form of `p` with respect to `basis` (elements need not be monic).
/// With `full == false` only the leading term is reduced.
pub(crate) fn normal_form(p: &Vect, basis: &[Vect], ord: &ModuleOrder, full: bool) -> Vect {
    let mut rem: Vec<(Monomial, usize, Coeff)> = Vec::new();
    let mut cur: Vec<(Monomial, usize, Coeff)> = p.terms.clone();
    let mut pos = 0;
    while pos < cur.len() {
        let (m, c, a) = &cur[pos];
        match find_divisor(m, *c, basis) {
            Some(gi) => {
                let g = &basis[gi];
                let (lm, _, lc) = g.lead();
                let q = lm.quotient_of(m).expect("divisor");
                let f = a / lc;
                rem.extend(cur[..pos].iter().cloned());
                cur = sub_mul(&cur[pos..], &f, &q, g, ord);
                pos = 0;
            }
            None if full => pos += 1,
            None => break,
        }
    }
    rem.extend(cur);
    Vect { terms: rem }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    comp: usize,
    sugar: i64,
}

fn spoly(a: &Vect, b: &Vect, lcm: &Monomial, ord: &ModuleOrder) -> Vect {
    let (la, _, ca) = a.lead();
    let (lb, _, cb) = b.lead();
    let qa = la.quotient_of(lcm).unwrap();
    let qb = lb.quotient_of(lcm).unwrap();
    let left: Vec<_> = a.terms.iter().map(|(m, c, x)| (m.mul(&qa), *c, x / ca)).collect();
    let f = cb.recip();
    Vect { terms: sub_mul(&left, &f, &qb, b, ord) }
}

/// Reduced Gröbner basis of the submodule generated by `gens`.
/// `ideal_mode` enables the coprime criterion, valid only for rank one.
pub(crate) fn buchberger(gens: &[Vect], ord: &ModuleOrder, ideal_mode: bool) -> Vec<Vect> {
    let mut basis: Vec<Vect> = Vec::new();
    let mut sugars: Vec<i64> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut input: Vec<Vect> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    input.sort_by_key(|g| g.max_degree(ord));
    let mut queue = input.into_iter().map(|g| {
        let s = g.max_degree(ord);
        (g, s)
    });
    let mut pending: Option<(Vect, i64)> = queue.next();

    loop {
        // pick the next item: a pending generator or the lowest-sugar pair
        let best_pair = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.sugar.cmp(&b.sugar).then_with(|| ord.cmp(&a.lcm, a.comp, &b.lcm, b.comp))
            })
            .map(|(k, p)| (k, p.sugar));
        let take_gen = match (&pending, best_pair) {
            (Some((_, s)), Some((_, ps))) => *s <= ps,
            (Some(_), None) => true,
            (None, Some(_)) => false,
            (None, None) => break,
        };
        let (h, sugar) = if take_gen {
            let (g, s) = pending.take().unwrap();
            pending = queue.next();
            (normal_form(&g, &basis, ord, false), s)
        } else {
            let (k, _) = best_pair.unwrap();
            let p = pairs.swap_remove(k);
            let s = spoly(&basis[p.i], &basis[p.j], &p.lcm, ord);
            (normal_form(&s, &basis, ord, false), p.sugar)
        };
        if h.is_zero() {
            continue;
        }
        let mut h = h;
        h.make_monic();
        update_pairs(&basis, &sugars, &mut pairs, &h, sugar, ideal_mode);
        basis.push(h);
        sugars.push(sugar);
    }
    reduce_basis(basis, ord)
}

fn update_pairs(basis: &[Vect], sugars: &[i64], pairs: &mut Vec<Pair>, h: &Vect, hsugar: i64, ideal_mode: bool) {
    let (hm, hc, _) = h.lead();
    let hidx = basis.len();
    let mut new: Vec<(Pair, bool)> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let (gm, gc, _) = g.lead();
        if gc != hc {
            continue;
        }
        let lcm = gm.lcm(hm);
        let sugar = (sugars[i] + (lcm.degree() - gm.degree()) as i64).max(hsugar + (lcm.degree() - hm.degree()) as i64);
        let coprime = ideal_mode && gm.coprime(hm);
        new.push((Pair { i, j: hidx, lcm, comp: hc, sugar }, coprime));
    }
    // chain criterion on old pairs
    pairs.retain(|p| {
        if p.comp != hc || !hm.divides(&p.lcm) {
            return true;
        }
        let li = basis[p.i].lead().0.lcm(hm);
        let lj = basis[p.j].lead().0.lcm(hm);
        li == p.lcm || lj == p.lcm
    });
    // M: drop pairs whose lcm is strictly divisible by another new lcm
    let lcms: Vec<Monomial> = new.iter().map(|(p, _)| p.lcm.clone()).collect();
    let mut keep: Vec<bool> = vec![true; new.len()];
    for a in 0..new.len() {
        for b in 0..new.len() {
            if a != b && lcms[b] != lcms[a] && lcms[b].divides(&lcms[a]) {
                keep[a] = false;
                break;
            }
        }
    }
    // F: one representative per lcm; drop the group if any member is coprime
    let mut out: Vec<Pair> = Vec::new();
    for a in 0..new.len() {
        if !keep[a] {
            continue;
        }
        if out.iter().any(|p| p.lcm == lcms[a]) {
            continue;
        }
        let group_coprime = (0..new.len()).any(|b| keep[b] && lcms[b] == lcms[a] && new[b].1);
        if group_coprime {
            // mark the lcm as consumed so no other member is added
            out.push(Pair { i: usize::MAX, ..new[a].0.clone() });
            continue;
        }
        out.push(new[a].0.clone());
    }
    pairs.extend(out.into_iter().filter(|p| p.i != usize::MAX));
}

/// Minimalize, tail-reduce, and sort a Gröbner basis.
pub(crate) fn reduce_basis(mut basis: Vec<Vect>, ord: &ModuleOrder) -> Vec<Vect> {
    for b in &mut basis {
        b.make_monic();
    }
    let mut minimal: Vec<Vect> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let (gm, gc, _) = g.lead();
        let redundant = basis.iter().enumerate().any(|(j, f)| {
            let (fm, fc, _) = f.lead();
            j != i && fc == gc && fm.divides(gm) && (fm != gm || j < i)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut out: Vec<Vect> = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Vect> = minimal.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, v)| v.clone()).collect();
        let head = Vect { terms: vec![minimal[i].terms[0].clone()] };
        let tail = Vect { terms: minimal[i].terms[1..].to_vec() };
        let mut red = normal_form(&tail, &others, ord, true);
        let mut terms = head.terms;
        terms.append(&mut red.terms);
        let mut v = Vect { terms };
        v.make_monic();
        out.push(v);
    }
    out.sort_by(|a, b| {
        let (am, ac, _) = a.lead();
        let (bm, bc, _) = b.lead();
        ord.cmp(bm, bc, am, ac)
    });
    out
}

/// Whether `gens` satisfy the S-pair criterion (every S-pair reduces to zero).
pub(crate) fn is_groebner(gens: &[Vect], ord: &ModuleOrder) -> bool {
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let (a, ac, _) = gens[i].lead();
            let (b, bc, _) = gens[j].lead();
            if ac != bc {
                continue;
            }
            let l = a.lcm(b);
            let s = spoly(&gens[i], &gens[j], &l, ord);
            if !normal_form(&s, gens, ord, false).is_zero() {
                return false;
            }
        }
    }
    true
}
