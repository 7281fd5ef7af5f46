//! Ideals, reduced Gröbner bases, and the derived ideal operations.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::gb::{self, ModuleOrder, Vect};
use crate::poly::{grevlex_cmp, parse_poly, Coeff, Monomial, MonomialOrder, Polynomial};

/// A Gröbner basis with respect to a fixed monomial order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub elements: Vec<Polynomial>,
    pub order: MonomialOrder,
    pub reduced: bool,
}

impl GroebnerBasis {
    pub fn nvars(&self) -> Option<usize> {
        self.elements.first().map(|p| p.nvars())
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().map(|p| p.leading_monomial(&self.order).expect("nonzero")).collect()
    }

    /// Whether the basis is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.elements.iter().any(|p| p.is_constant() && !p.is_zero())
    }

    fn vects(&self) -> (ModuleOrder, Vec<Vect>) {
        let ord = ModuleOrder::ideal(self.order.clone());
        let v = self.elements.iter().map(|p| Vect::from_poly(p, &ord)).collect();
        (ord, v)
    }

    /// Full normal form of `p`.
    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        if let Some(n) = self.nvars() {
            if n != p.nvars() {
                return Err(Error::RingMismatch(n, p.nvars()));
            }
        }
        let (ord, basis) = self.vects();
        let r = gb::normal_form(&Vect::from_poly(p, &ord), &basis, &ord, true);
        Ok(r.to_polys(1, p.nvars()).pop().unwrap())
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }

    /// Whether every S-pair reduces to zero.
    pub fn verify(&self) -> bool {
        let (ord, basis) = self.vects();
        gb::is_groebner(&basis, &ord)
    }
}

/// A homogeneous ideal given by generators, with cached reduced Gröbner bases.
pub struct Ideal {
    nvars: usize,
    gens: Vec<Polynomial>,
    cache: Mutex<HashMap<MonomialOrder, Arc<GroebnerBasis>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal { nvars: self.nvars, gens: self.gens.clone(), cache: Mutex::new(self.cache.lock().unwrap().clone()) }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{}", self)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_text()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl Ideal {
    /// Ideal in `x_0..x_{nvars-1}`; generators must be homogeneous.
    pub fn new(nvars: usize, gens: Vec<Polynomial>) -> Result<Self> {
        for g in &gens {
            if g.nvars() != nvars {
                return Err(Error::RingMismatch(nvars, g.nvars()));
            }
            if !g.is_homogeneous() {
                return Err(Error::NotHomogeneous(g.to_text()));
            }
        }
        Ok(Self::new_unchecked(nvars, gens))
    }

    /// Ideal without the homogeneity check.
    pub fn new_unchecked(nvars: usize, gens: Vec<Polynomial>) -> Self {
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal { nvars, gens, cache: Mutex::new(HashMap::new()) }
    }

    /// Monomial ideal.
    pub fn monomial(nvars: usize, mons: impl IntoIterator<Item = Monomial>) -> Self {
        Self::new_unchecked(nvars, mons.into_iter().map(Polynomial::monomial).collect())
    }

    /// Ideal generated by the listed variables.
    pub fn vars(nvars: usize, vars: impl IntoIterator<Item = usize>) -> Self {
        Self::monomial(nvars, vars.into_iter().map(|i| Monomial::var(nvars, i)))
    }

    /// Irrelevant ideal `(x_0, ..., x_n)`.
    pub fn maximal(nvars: usize) -> Self {
        Self::vars(nvars, 0..nvars)
    }

    pub fn unit(nvars: usize) -> Self {
        Self::new_unchecked(nvars, vec![Polynomial::one(nvars)])
    }

    /// Parse generator strings in `x0..xn`.
    pub fn parse(n: usize, gens: &[&str]) -> Result<Self> {
        let gens: Result<Vec<Polynomial>> = gens.iter().map(|g| parse_poly(g, n)).collect();
        Self::new(n + 1, gens?)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Index of the last variable.
    pub fn n(&self) -> usize {
        self.nvars - 1
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(|g| g.is_monomial())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    /// Reduced Gröbner basis, computed once per order.
    pub fn gb(&self, ord: &MonomialOrder) -> Arc<GroebnerBasis> {
        if let Some(g) = self.cache.lock().unwrap().get(ord) {
            return g.clone();
        }
        let g = Arc::new(buchberger(self, ord));
        self.cache.lock().unwrap().entry(ord.clone()).or_insert(g).clone()
    }

    pub fn grevlex(&self) -> Arc<GroebnerBasis> {
        self.gb(&MonomialOrder::Grevlex)
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.grevlex().contains(p).expect("same ring")
    }

    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn is_unit(&self) -> bool {
        self.grevlex().is_unit()
    }

    /// Monomial ideal generated by the leading monomials under `ord`.
    pub fn initial_ideal(&self, ord: &MonomialOrder) -> Ideal {
        Ideal::monomial(self.nvars, self.gb(ord).leading_monomials()).minimalized_monomial()
    }

    /// Minimal monomial generators, sorted grevlex descending. Requires a monomial ideal.
    pub fn minimal_monomials(&self) -> Result<Vec<Monomial>> {
        if !self.is_monomial() {
            return Err(Error::NotMonomial);
        }
        let mons: Vec<Monomial> = self.gens.iter().map(|g| g.terms()[0].0.clone()).collect();
        Ok(minimalize_monomials(mons))
    }

    fn minimalized_monomial(&self) -> Ideal {
        Ideal::monomial(self.nvars, self.minimal_monomials().expect("monomial"))
    }

    /// View in a ring with more variables.
    pub fn extend_vars(&self, nvars: usize) -> Ideal {
        Ideal::new_unchecked(nvars, self.gens.iter().map(|g| g.extend_vars(nvars)).collect())
    }

    /// Apply a substitution `x_i -> images[i]` to every generator.
    pub fn substitute(&self, images: &[Polynomial]) -> Ideal {
        let nv = images[0].nvars();
        Ideal::new_unchecked(nv, self.gens.iter().map(|g| g.substitute(images)).collect())
    }

    /// Generators as canonical strings.
    pub fn to_strings(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.to_text()).collect()
    }

    /// Reduced grevlex basis elements as strings; a canonical form of the ideal.
    pub fn canonical_strings(&self) -> Vec<String> {
        self.grevlex().elements.iter().map(|g| g.to_text()).collect()
    }
}

/// Remove non-minimal monomials and duplicates; sort grevlex descending.
pub fn minimalize_monomials(mut mons: Vec<Monomial>) -> Vec<Monomial> {
    mons.sort_by(grevlex_cmp);
    mons.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for m in mons {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out.sort_by(|a, b| grevlex_cmp(b, a));
    out
}

/// Reduced Gröbner basis of `I` under `ord`.
pub fn buchberger(i: &Ideal, ord: &MonomialOrder) -> GroebnerBasis {
    let mord = ModuleOrder::ideal(ord.clone());
    let gens: Vec<Vect> = i.gens.iter().map(|g| Vect::from_poly(g, &mord)).collect();
    let basis = gb::buchberger(&gens, &mord, true);
    let elements = basis.iter().map(|v| v.to_polys(1, i.nvars).pop().unwrap()).collect();
    GroebnerBasis { elements, order: ord.clone(), reduced: true }
}

/// Full normal form of `p` against `g`.
pub fn normal_form(p: &Polynomial, g: &GroebnerBasis) -> Result<Polynomial> {
    g.normal_form(p)
}

/// Equality of ideals via their reduced grevlex bases.
pub fn ideal_equal(i: &Ideal, j: &Ideal) -> bool {
    i.nvars == j.nvars && i.grevlex().elements == j.grevlex().elements
}

/// Sum `I + J`.
pub fn sum(i: &Ideal, j: &Ideal) -> Ideal {
    let mut g = i.gens.clone();
    g.extend(j.gens.iter().cloned());
    Ideal::new_unchecked(i.nvars, g)
}

/// Product `I · J`.
pub fn product(i: &Ideal, j: &Ideal) -> Ideal {
    let mut g = Vec::new();
    for a in &i.gens {
        for b in &j.gens {
            g.push(a * b);
        }
    }
    Ideal::new_unchecked(i.nvars, g)
}

/// Power `I^k`.
pub fn power(i: &Ideal, k: u32) -> Ideal {
    let mut acc = Ideal::unit(i.nvars);
    for _ in 0..k {
        acc = product(&acc, i);
    }
    acc
}

/// Intersection of ideals of `I` and `J` by eliminating `t` from `t·I + (1−t)·J`.
pub fn intersect(i: &Ideal, j: &Ideal) -> Ideal {
    assert_eq!(i.nvars, j.nvars, "ring mismatch");
    if i.is_monomial() && j.is_monomial() {
        let a = i.minimal_monomials().unwrap();
        let b = j.minimal_monomials().unwrap();
        let mut l = Vec::new();
        for x in &a {
            for y in &b {
                l.push(x.lcm(y));
            }
        }
        return Ideal::monomial(i.nvars, minimalize_monomials(l));
    }
    let nv = i.nvars + 1;
    let t = Polynomial::var(nv, i.nvars);
    let one_minus_t = &Polynomial::one(nv) - &t;
    let mut gens = Vec::new();
    for f in &i.gens {
        gens.push(&t * &f.extend_vars(nv));
    }
    for g in &j.gens {
        gens.push(&one_minus_t * &g.extend_vars(nv));
    }
    let aux = Ideal::new_unchecked(nv, gens);
    let g = aux.gb(&MonomialOrder::Elimination { keep: i.nvars });
    let kept: Vec<Polynomial> = g
        .elements
        .iter()
        .filter(|p| p.terms().iter().all(|(m, _)| m.exp(i.nvars) == 0))
        .map(|p| p.restrict_vars(i.nvars).expect("t-free"))
        .collect();
    Ideal::new_unchecked(i.nvars, kept)
}

/// Intersection of several ideals.
pub fn intersect_all(ideals: &[Ideal]) -> Ideal {
    let mut acc = ideals[0].clone();
    for j in &ideals[1..] {
        acc = intersect(&acc, j);
    }
    acc
}

/// `I : f`, via `I ∩ (f)` divided by `f`.
pub fn colon_poly(i: &Ideal, f: &Polynomial) -> Ideal {
    if f.is_zero() {
        return Ideal::unit(i.nvars);
    }
    if i.is_monomial() && f.is_monomial() {
        let m = &f.terms()[0].0;
        let gens = i.minimal_monomials().unwrap().into_iter().map(|g| {
            let e: Vec<u16> = g.exps().iter().zip(m.exps()).map(|(a, b)| a.saturating_sub(*b)).collect();
            Monomial::from_exps(&e)
        });
        return Ideal::monomial(i.nvars, minimalize_monomials(gens.collect()));
    }
    let fi = Ideal::new_unchecked(i.nvars, vec![f.clone()]);
    let inter = intersect(i, &fi);
    let gens = inter.gens.iter().map(|g| g.exact_div(f).expect("multiple of f")).collect();
    Ideal::new_unchecked(i.nvars, gens)
}

/// `I : J = ∩_f (I : f)` over generators `f` of `J`.
pub fn colon(i: &Ideal, j: &Ideal) -> Ideal {
    let parts: Vec<Ideal> = j.gens.iter().map(|f| colon_poly(i, f)).collect();
    if parts.is_empty() {
        return Ideal::unit(i.nvars);
    }
    intersect_all(&parts)
}

/// Whether the last variable is a nonzerodivisor on `S/I` (read off the grevlex initial ideal).
pub fn last_variable_regular(i: &Ideal) -> bool {
    let last = i.nvars - 1;
    i.grevlex().leading_monomials().iter().all(|m| m.exp(last) == 0)
}

/// `I : J^∞`, iterating the colon until it stabilizes.
pub fn saturate(i: &Ideal, j: &Ideal) -> Ideal {
    let is_max = j.is_monomial() && ideal_equal(j, &Ideal::maximal(i.nvars));
    if is_max && i.is_homogeneous() && (i.is_unit() || last_variable_regular(i)) {
        return reduced_ideal(i);
    }
    let mut cur = reduced_ideal(i);
    loop {
        let next = reduced_ideal(&colon(&cur, j));
        if ideal_equal(&next, &cur) {
            return cur;
        }
        cur = next;
    }
}

/// Saturation with respect to the irrelevant ideal.
pub fn saturate_m(i: &Ideal) -> Ideal {
    saturate(i, &Ideal::maximal(i.nvars))
}

pub fn is_saturated(i: &Ideal) -> bool {
    ideal_equal(&saturate_m(i), i)
}

/// The ideal generated by its reduced grevlex basis.
pub fn reduced_ideal(i: &Ideal) -> Ideal {
    let g = i.grevlex();
    let out = Ideal::new_unchecked(i.nvars, g.elements.clone());
    out.cache.lock().unwrap().insert(MonomialOrder::Grevlex, g);
    out
}

/// Eliminate the variables with index `>= keep`; result lives in `x_0..x_{keep-1}`.
pub fn eliminate_tail(i: &Ideal, keep: usize) -> Ideal {
    let g = i.gb(&MonomialOrder::Elimination { keep });
    let kept = g
        .elements
        .iter()
        .filter(|p| p.terms().iter().all(|(m, _)| m.exps()[keep..].iter().all(|&e| e == 0)))
        .map(|p| p.restrict_vars(keep).expect("eliminated"))
        .collect();
    Ideal::new_unchecked(keep, kept)
}

/// Random invertible integer change of coordinates `x_i -> Σ_j a_ij x_j`.
pub fn linear_substitution(nvars: usize, matrix: &[Vec<i64>]) -> Vec<Polynomial> {
    (0..nvars)
        .map(|i| {
            Polynomial::from_terms(
                nvars,
                (0..nvars).map(|j| (Monomial::var(nvars, j), Coeff::from_integer(matrix[i][j].into()))),
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn id(n: usize, g: &[&str]) -> Ideal {
        Ideal::parse(n, g).unwrap()
    }

    #[test]
    fn monomial_ideal_is_own_basis() {
        let i = id(4, &["x0^2", "x0*x1", "x1^2", "x0*x2", "x1*x2", "x0*x3"]);
        let g = i.grevlex();
        assert_eq!(g.elements.len(), 6);
        assert!(g.elements.iter().all(|p| p.is_monomial()));
    }

    #[test]
    fn lex_basis_already_reduced() {
        let i = Ideal::new_unchecked(2, vec![parse_poly("x0 - x1", 1).unwrap(), parse_poly("x1^2", 1).unwrap()]);
        let g = i.gb(&MonomialOrder::Lex);
        let s: Vec<String> = g.elements.iter().map(|p| p.to_text()).collect();
        assert_eq!(s, vec!["x0 - x1", "x1^2"]);
    }

    #[test]
    fn normal_forms() {
        let i = id(4, &["x0^2", "x0*x1", "x1^2", "x0*x2", "x1*x2", "x0*x3"]);
        let g = i.grevlex();
        assert!(g.normal_form(&parse_poly("x0^2*x4", 4).unwrap()).unwrap().is_zero());
        let p = parse_poly("x2*x3", 4).unwrap();
        assert_eq!(g.normal_form(&p).unwrap(), p);
        assert!(matches!(g.normal_form(&parse_poly("x0", 2).unwrap()), Err(Error::RingMismatch(5, 3))));
        let unit = Ideal::unit(5).grevlex();
        assert!(unit.normal_form(&p).unwrap().is_zero());
    }

    #[test]
    fn intersections_and_products() {
        let a = id(3, &["x0", "x1"]);
        let b = id(3, &["x2", "x3"]);
        assert!(ideal_equal(&product(&a, &b), &intersect(&a, &b)));
        let x = id(2, &["x0", "x1"]);
        let y = id(2, &["x0", "x2"]);
        let z = id(2, &["x0^2", "x1", "x2"]);
        let lhs = product(&x, &y);
        let rhs = intersect_all(&[x.clone(), y.clone(), z.clone()]);
        assert!(ideal_equal(&lhs, &rhs));
        assert!(ideal_equal(&rhs, &id(2, &["x0^2", "x0*x1", "x0*x2", "x1*x2"])));
        assert!(!ideal_equal(&id(2, &["x0"]), &id(2, &["x0^2"])));
        assert!(ideal_equal(&intersect(&x, &Ideal::unit(3)), &x));
    }

    #[test]
    fn intersection_of_nonmonomial_ideals() {
        let a = id(2, &["x0 - x1"]);
        let b = id(2, &["x0 + x1"]);
        let i = intersect(&a, &b);
        assert!(ideal_equal(&i, &id(2, &["x0^2 - x1^2"])));
    }

    #[test]
    fn saturation() {
        let i = id(3, &["x0^2", "x0*x1", "x0*x2", "x0*x3"]);
        assert!(ideal_equal(&saturate_m(&i), &id(3, &["x0"])));
        let j3 = id(3, &["x0^2", "x0*x1", "x1^2", "x0*x2", "x1*x2"]);
        assert!(ideal_equal(&colon(&j3, &Ideal::maximal(4)), &j3));
        assert!(is_saturated(&j3));
        let nm = id(2, &["x0^2 - x1*x2", "x0*x2", "x1*x2", "x2^2"]);
        let s = saturate_m(&nm);
        assert!(s.contains_ideal(&nm));
        assert!(ideal_equal(&saturate_m(&s), &s));
    }

    #[test]
    fn elimination() {
        // twisted cubic from its parametrization
        let gens = ["x0 - x4^3", "x1 - x4^2*x5", "x2 - x4*x5^2", "x3 - x5^3"];
        let i = Ideal::new_unchecked(6, gens.iter().map(|g| parse_poly(g, 5).unwrap()).collect());
        let e = eliminate_tail(&i, 4);
        let expected = id(3, &["x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"]);
        assert!(ideal_equal(&e, &expected));
    }
}
