//! Borel-fixed ideals: fixedness test, generic initial ideals, lexicographic points,
//! expansion-based enumeration, and the ideals `I_{c,d,n}`.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::groebner::{is_saturated, minimalize_monomials, Ideal};
use crate::hilbert::{hilbert_polynomial, macaulay_decomposition, monomial_numerator, hilbert_polynomial_from_numerator, HilbertPoly};
use crate::linalg::det;
use crate::poly::{rat, Monomial, MonomialOrder, Polynomial};

/// Whether the monomial ideal is stable under every move `x_j -> x_i`, `i < j`.
pub fn is_borel_fixed(i: &Ideal) -> Result<bool> {
    let gens = i.minimal_monomials()?;
    Ok(borel_monomials(&gens))
}

fn in_monomial_ideal(m: &Monomial, gens: &[Monomial]) -> bool {
    gens.iter().any(|g| g.divides(m))
}

fn borel_monomials(gens: &[Monomial]) -> bool {
    gens.iter().all(|m| {
        m.support().into_iter().all(|j| {
            let base = m.over_var(j).expect("support");
            (0..j).all(|i| in_monomial_ideal(&base.times_var(i, 1), gens))
        })
    })
}

/// Monomial ideal from minimal generators.
fn monomial_ideal(nvars: usize, gens: Vec<Monomial>) -> Ideal {
    Ideal::monomial(nvars, minimalize_monomials(gens))
}

/// A random invertible integer matrix with entries in `[-bound, bound]`.
pub fn random_invertible(nvars: usize, rng: &mut ChaCha8Rng, bound: i64) -> Vec<Vec<i64>> {
    loop {
        let m: Vec<Vec<i64>> = (0..nvars).map(|_| (0..nvars).map(|_| rng.gen_range(-bound..=bound)).collect()).collect();
        let q: Vec<Vec<_>> = m.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect();
        if det(&q) != rat(0) {
            return m;
        }
    }
}

/// Initial ideal under grevlex after the substitution `x_i -> Σ_j g[i][j] x_j`.
pub fn initial_after_change(i: &Ideal, g: &[Vec<i64>]) -> Ideal {
    let images = crate::groebner::linear_substitution(i.nvars(), g);
    i.substitute(&images).initial_ideal(&MonomialOrder::Grevlex)
}

/// Retry budget for gin: number of draw pairs tried before giving up.
pub const GIN_RETRIES: usize = 4;

/// Generic initial ideal under grevlex, accepted when two independent random
/// coordinate changes agree.
pub fn gin(i: &Ideal, seed: u64) -> Result<Ideal> {
    gin_with_budget(i, seed, GIN_RETRIES)
}

pub fn gin_with_budget(i: &Ideal, seed: u64, retries: usize) -> Result<Ideal> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..retries.max(1) {
        let a = random_invertible(i.nvars(), &mut rng, 20);
        let b = random_invertible(i.nvars(), &mut rng, 20);
        let ga = initial_after_change(i, &a);
        let gb = initial_after_change(i, &b);
        if ga.minimal_monomials()? == gb.minimal_monomials()? {
            return Ok(ga);
        }
    }
    Err(Error::GinDisagreement(retries))
}

/// Lexicographic point of `P` in `P^n`.
pub fn lex_point(p: &HilbertPoly, n: usize) -> Result<Ideal> {
    let dec = macaulay_decomposition(p)?;
    let d = dec.degree();
    if d + 1 > n {
        return Err(Error::Inadmissible(format!("degree {d} too large for P^{n}")));
    }
    let nv = n + 1;
    let a = &dec.a;
    // v_j = x_{n-d-1+j}; G_j = Π_{l<j} v_l^{a_{d-l}} · v_j^{a_{d-j}+1}, G_d = Π_{l≤d} v_l^{a_{d-l}}
    let v = |j: usize| n - d - 1 + j;
    let mut gens: Vec<Monomial> = (0..n - d - 1).map(|i| Monomial::var(nv, i)).collect();
    for j in 0..=d {
        let mut e = vec![0u16; nv];
        for l in 0..j {
            e[v(l)] += a[d - l] as u16;
        }
        if j < d {
            e[v(j)] += a[d - j] as u16 + 1;
        } else {
            e[v(d)] += a[0] as u16;
        }
        gens.push(Monomial::from_exps(&e));
    }
    Ok(monomial_ideal(nv, gens))
}

/// Replace the generator `m` by `m·x_j` for `max(m) ≤ j ≤ last - 1`, where `x_last`
/// is the final variable of the working ring.
pub fn expand(i: &Ideal, m: &Monomial, last: usize) -> Result<Ideal> {
    let gens = i.minimal_monomials()?;
    if !gens.contains(m) {
        return Err(Error::NotMinimalGenerator(m.to_text()));
    }
    let out = expand_monomials(&gens, m, last).ok_or_else(|| Error::NotExpandable(m.to_text()))?;
    Ok(Ideal::monomial(i.nvars(), out))
}

fn expand_monomials(gens: &[Monomial], m: &Monomial, last: usize) -> Option<Vec<Monomial>> {
    let start = m.max_var().unwrap_or(0);
    let mut out: Vec<Monomial> = gens.iter().filter(|g| *g != m).cloned().collect();
    for j in start..last {
        out.push(m.times_var(j, 1));
    }
    let out = minimalize_monomials(out);
    // the expansion must remove exactly m from the ideal
    if in_monomial_ideal(m, &out) || !borel_monomials(&out) {
        return None;
    }
    Some(out)
}

/// Hilbert polynomial of `k[x_0..x_{nvars-1}] / (gens)`.
fn hp_in(gens: &[Monomial], nvars: usize) -> HilbertPoly {
    let g: Vec<Monomial> = gens.iter().map(|m| m.resized(nvars)).collect();
    hilbert_polynomial_from_numerator(&monomial_numerator(&g, nvars), nvars)
}

/// Outcome of the staged enumeration.
#[derive(Clone, Debug)]
pub struct BorelEnumeration {
    /// Candidates that passed direct re-verification.
    pub ideals: Vec<Ideal>,
    /// Candidates produced by expansions but rejected on re-verification.
    pub rejected: Vec<Ideal>,
}

/// All saturated Borel-fixed ideals of `k[x_0..x_n]` with Hilbert polynomial `P`,
/// built stagewise by expansions in `R^(i) = k[x_0..x_{n-i}]`.
pub fn enumerate_borel(p: &HilbertPoly, n: usize) -> Result<Vec<Ideal>> {
    Ok(enumerate_borel_detailed(p, n)?.ideals)
}

pub fn enumerate_borel_detailed(p: &HilbertPoly, n: usize) -> Result<BorelEnumeration> {
    let nv = n + 1;
    let Some(big_d) = p.degree() else { return Err(Error::Inadmissible("zero polynomial".into())) };
    if big_d + 1 > n {
        return Err(Error::Inadmissible(format!("degree {big_d} too large for P^{n}")));
    }
    let top = p.difference_n(big_d).as_constant().expect("top difference is constant");
    if !top.is_integer() || top < rat(1) {
        return Err(Error::Inadmissible(format!("{p}: leading multiplicity {top}")));
    }
    let start: Vec<Monomial> = (0..n - big_d).map(|i| Monomial::var(nv, i)).collect();
    let mut current: BTreeSet<Vec<Monomial>> = BTreeSet::new();
    current.insert(minimalize_monomials(start));
    let c0 = top.to_integer().to_string().parse::<usize>().unwrap() - 1;
    current = expand_all(current, n - big_d, c0);
    for stage in (0..big_d).rev() {
        let ring_vars = n - stage + 1;
        let target = p.difference_n(stage);
        let mut next: BTreeSet<Vec<Monomial>> = BTreeSet::new();
        let mut negative: Option<String> = None;
        for gens in current {
            let deficit = target.sub(&hp_in(&gens, ring_vars));
            let Some(c) = deficit.as_constant() else {
                return Err(Error::NonconstantDeficit { stage, deficit: deficit.to_string() });
            };
            if c < rat(0) {
                // this branch cannot reach P
                negative = Some(deficit.to_string());
                continue;
            }
            if !c.is_integer() {
                return Err(Error::NonconstantDeficit { stage, deficit: deficit.to_string() });
            }
            let k: usize = c.to_integer().to_string().parse().unwrap();
            let mut one = BTreeSet::new();
            one.insert(gens);
            next.extend(expand_all(one, n - stage, k));
        }
        if let (true, Some(deficit)) = (next.is_empty(), negative) {
            return Err(Error::NegativeDeficit { stage, deficit });
        }
        current = next;
    }
    let mut out = BorelEnumeration { ideals: Vec::new(), rejected: Vec::new() };
    for gens in current {
        let i = Ideal::monomial(nv, gens);
        // re-verify independently of the expansion bookkeeping
        if is_borel_fixed(&i)? && is_saturated(&i) && hilbert_polynomial(&i) == *p {
            out.ideals.push(i);
        } else {
            out.rejected.push(i);
        }
    }
    Ok(out)
}

fn expand_all(mut set: BTreeSet<Vec<Monomial>>, last: usize, times: usize) -> BTreeSet<Vec<Monomial>> {
    for _ in 0..times {
        let mut next = BTreeSet::new();
        for gens in &set {
            for m in gens {
                if let Some(e) = expand_monomials(gens, m, last) {
                    next.insert(e);
                }
            }
        }
        set = next;
    }
    set
}

fn var_range(nv: usize, lo: i64, hi: i64) -> Vec<Monomial> {
    if hi < lo {
        return Vec::new();
    }
    (lo.max(0)..=hi).map(|i| Monomial::var(nv, i as usize)).collect()
}

/// The Borel-fixed ideal `I_{c,d,n}` on the component of `(c,d)`-plane pairs.
pub fn i_cdn(c: usize, d: usize, n: usize) -> Result<Ideal> {
    if c > d || d + 1 > n {
        return Err(Error::OutOfRange(format!("(c,d,n)=({c},{d},{n}) needs 0 <= c <= d <= n-1")));
    }
    let (c, d, n) = (c as i64, d as i64, n as i64);
    let nv = (n + 1) as usize;
    let mut gens = var_range(nv, 0, n - c - d - 2);
    let sq = var_range(nv, n - c - d - 1, n - d - 1);
    for (a, x) in sq.iter().enumerate() {
        for y in &sq[a..] {
            gens.push(x.mul(y));
        }
    }
    for i in (n - c - d - 1).max(0)..=(n - d - 1) {
        let xi = Monomial::var(nv, i as usize);
        for y in var_range(nv, n - d, 2 * n - c - d - 2 - i) {
            gens.push(xi.mul(&y));
        }
    }
    Ok(monomial_ideal(nv, gens))
}

/// `J_1`, the Borel point on the boundary of `H(1,d,n)`.
pub fn j1(d: usize, n: usize) -> Result<Ideal> {
    if d + 2 > n {
        return Err(Error::OutOfRange(format!("J_1 needs d <= n-2, got d={d}, n={n}")));
    }
    let (d, n) = (d as i64, n as i64);
    let nv = (n + 1) as usize;
    let mut gens = var_range(nv, 0, n - d - 3);
    let a = Monomial::var(nv, (n - d - 2) as usize);
    gens.extend(var_range(nv, n - d - 2, n - 1).iter().map(|y| a.mul(y)));
    let b = Monomial::var(nv, (n - d - 1) as usize);
    gens.extend(var_range(nv, n - d - 2, n - 2).iter().map(|y| b.mul(y)));
    Ok(monomial_ideal(nv, gens))
}

/// `J_2`, the lexicographic point of `P_{1,d,n}`.
pub fn j2(d: usize, n: usize) -> Result<Ideal> {
    if d + 2 > n {
        return Err(Error::OutOfRange(format!("J_2 needs d <= n-2, got d={d}, n={n}")));
    }
    let (d, n) = (d as i64, n as i64);
    let nv = (n + 1) as usize;
    let mut gens = var_range(nv, 0, n - d - 2);
    let b = Monomial::var(nv, (n - d - 1) as usize);
    gens.extend(var_range(nv, n - d - 1, n - 3).iter().map(|y| b.mul(y)));
    let x2 = Monomial::var(nv, (n - 2) as usize);
    gens.push(b.mul(&x2).mul(&x2));
    gens.push(b.mul(&x2).times_var((n - 1) as usize, 1));
    Ok(monomial_ideal(nv, gens))
}

/// `x_0^d · L` for a monomial ideal `L`.
pub fn times_x0_power(l: &Ideal, d: u16) -> Result<Ideal> {
    let nv = l.nvars();
    let x = Monomial::var(nv, 0);
    let mut p = Monomial::one(nv);
    for _ in 0..d {
        p = p.mul(&x);
    }
    Ok(monomial_ideal(nv, l.minimal_monomials()?.iter().map(|m| m.mul(&p)).collect()))
}

/// Hilbert polynomial of a degree-`d` hypersurface union `k` points in `P^n`.
pub fn hypersurface_points_polynomial(d: usize, k: i64, n: usize) -> HilbertPoly {
    crate::hilbert::hypersurface_hilbert_polynomial(d, n).add_const(k)
}

/// Sorted minimal generators as text; a canonical key for monomial ideals.
pub fn monomial_key(i: &Ideal) -> Result<Vec<String>> {
    let mut v: Vec<String> = i.minimal_monomials()?.iter().map(|m| m.to_text()).collect();
    v.sort();
    Ok(v)
}

/// Polynomial generators of a monomial ideal.
pub fn as_polys(mons: &[Monomial]) -> Vec<Polynomial> {
    mons.iter().cloned().map(Polynomial::monomial).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::ideal_equal;
    use crate::hilbert::{pair_hilbert_polynomial, parse_hilbert_poly};

    fn id(n: usize, g: &[&str]) -> Ideal {
        Ideal::parse(n, g).unwrap()
    }

    #[test]
    fn fixedness() {
        assert!(is_borel_fixed(&id(2, &["x0^2", "x0*x1", "x1^2"])).unwrap());
        assert!(!is_borel_fixed(&id(2, &["x0", "x1*x2"])).unwrap());
        assert!(is_borel_fixed(&i_cdn(1, 2, 4).unwrap()).unwrap());
        assert_eq!(is_borel_fixed(&id(2, &["x0+x1"])), Err(Error::NotMonomial));
    }

    #[test]
    fn icdn_examples() {
        assert!(ideal_equal(&i_cdn(1, 2, 4).unwrap(), &id(4, &["x0^2", "x0*x1", "x1^2", "x0*x2", "x1*x2", "x0*x3"])));
        assert!(ideal_equal(&i_cdn(3, 3, 5).unwrap(), &id(5, &["x0^2", "x0*x1", "x1^2", "x0*x2"])));
        assert!(ideal_equal(&i_cdn(0, 2, 4).unwrap(), &id(4, &["x0", "x1^2", "x1*x2", "x1*x3"])));
        for n in 2..=6 {
            for d in 0..n {
                for c in 0..=d {
                    let i = i_cdn(c, d, n).unwrap();
                    assert_eq!(hilbert_polynomial(&i), pair_hilbert_polynomial(c, d, n).unwrap(), "({c},{d},{n})");
                    assert!(is_borel_fixed(&i).unwrap());
                }
            }
        }
    }

    #[test]
    fn lex_points() {
        let l = lex_point(&parse_hilbert_poly("t+1").unwrap(), 3).unwrap();
        assert!(ideal_equal(&l, &id(3, &["x0", "x1"])));
        let q = parse_hilbert_poly("C(t+2,2)+t+1").unwrap();
        assert!(ideal_equal(&lex_point(&q, 4).unwrap(), &j2(2, 4).unwrap()));
        let l = lex_point(&parse_hilbert_poly("2").unwrap(), 3).unwrap();
        assert!(ideal_equal(&l, &id(3, &["x0", "x1", "x2^2"])));
        assert_eq!(hilbert_polynomial(&lex_point(&q, 5).unwrap()), q);
    }

    #[test]
    fn expansions_from_the_worked_example() {
        let (d, n) = (2usize, 4usize);
        let start = Ideal::vars(n + 1, 0..n - d);
        let m = Monomial::var(n + 1, n - d - 1);
        let iexp = expand(&start, &m, n - 1).unwrap();
        assert!(ideal_equal(&iexp, &id(4, &["x0", "x1^2", "x1*x2"])));
        let a = expand(&iexp, &Monomial::var(n + 1, 0), n).unwrap();
        assert!(ideal_equal(&a, &j1(d, n).unwrap()));
        let b = expand(&iexp, &Monomial::from_vars(n + 1, &[1, 2]), n).unwrap();
        assert!(ideal_equal(&b, &j2(d, n).unwrap()));
        assert!(expand(&iexp, &Monomial::from_vars(n + 1, &[1, 1]), n).is_err());
    }

    #[test]
    fn two_borel_points() {
        let q = parse_hilbert_poly("C(t+2,2)+t+1").unwrap();
        let found = enumerate_borel(&q, 4).unwrap();
        let keys: BTreeSet<Vec<String>> = found.iter().map(|i| monomial_key(i).unwrap()).collect();
        let want: BTreeSet<Vec<String>> = [j1(2, 4).unwrap(), j2(2, 4).unwrap()].iter().map(|i| monomial_key(i).unwrap()).collect();
        assert_eq!(keys, want);
    }

    #[test]
    fn hypersurface_and_points() {
        for (k, count) in [(1, 1), (2, 1), (3, 2)] {
            let p = hypersurface_points_polynomial(2, k, 3);
            assert_eq!(enumerate_borel(&p, 3).unwrap().len(), count, "k={k}");
        }
    }

    #[test]
    fn gin_examples() {
        let z = crate::groebner::intersect(&id(4, &["x0", "x1"]), &id(4, &["x2", "x3", "x4"]));
        let g = gin(&z, 7).unwrap();
        assert!(ideal_equal(&g, &i_cdn(1, 2, 4).unwrap()));
        let b = i_cdn(1, 1, 3).unwrap();
        assert!(ideal_equal(&gin(&b, 1).unwrap(), &b));
    }
}
