//! Sparse multivariate polynomials over the rationals.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Exact rational coefficient.
pub type Coeff = BigRational;

/// Integer as a coefficient.
pub fn rat(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

/// The fraction `n/d` as a coefficient.
pub fn ratio(n: i64, d: i64) -> Coeff {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Exponent vector of a monomial in `x_0..x_n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Monomial {
    exps: SmallVec<[u16; 16]>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: SmallVec::from_elem(0, nvars) }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = 1;
        m
    }

    pub fn from_exps(exps: &[u16]) -> Self {
        Monomial { exps: SmallVec::from_slice(exps) }
    }

    /// Product of the listed variables (repeats allowed).
    pub fn from_vars(nvars: usize, vars: &[usize]) -> Self {
        let mut m = Self::one(nvars);
        for &v in vars {
            m.exps[v] += 1;
        }
        m
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect() }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if self.divides(other) {
            Some(Monomial { exps: other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect() })
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect() }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect() }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Largest variable index with a positive exponent.
    pub fn max_var(&self) -> Option<usize> {
        self.exps.iter().rposition(|&e| e > 0)
    }

    /// Smallest variable index with a positive exponent.
    pub fn min_var(&self) -> Option<usize> {
        self.exps.iter().position(|&e| e > 0)
    }

    /// Variables with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        (0..self.nvars()).filter(|&i| self.exps[i] > 0).collect()
    }

    /// Multiply by `x_i^k`.
    pub fn times_var(&self, i: usize, k: u16) -> Monomial {
        let mut m = self.clone();
        m.exps[i] += k;
        m
    }

    /// Divide by `x_i` when possible.
    pub fn over_var(&self, i: usize) -> Option<Monomial> {
        if self.exps[i] == 0 {
            return None;
        }
        let mut m = self.clone();
        m.exps[i] -= 1;
        Some(m)
    }

    /// Same exponents in a ring with `nvars` variables (padding with zeros).
    pub fn resized(&self, nvars: usize) -> Monomial {
        let mut exps: SmallVec<[u16; 16]> = SmallVec::from_elem(0, nvars);
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                exps[i] = e;
            }
        }
        Monomial { exps }
    }

    /// All monomials of a given degree in `nvars` variables, in grevlex descending order.
    pub fn all_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = vec![0u16; nvars];
        fn rec(i: usize, left: u32, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
            if i + 1 == cur.len() {
                cur[i] = left as u16;
                out.push(Monomial::from_exps(cur));
                cur[i] = 0;
                return;
            }
            for e in (0..=left).rev() {
                cur[i] = e as u16;
                rec(i + 1, left - e, cur, out);
            }
            cur[i] = 0;
        }
        if nvars == 0 {
            if degree == 0 {
                out.push(Monomial::one(0));
            }
            return out;
        }
        rec(0, degree, &mut cur, &mut out);
        out.sort_by(|a, b| grevlex_cmp(b, a));
        out
    }

    /// Text form such as `x0^2*x3`, or `1`.
    pub fn to_text(&self) -> String {
        let mut parts = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("x{i}")),
                _ => parts.push(format!("x{i}^{e}")),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn grevlex_range(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    if da != db {
        return da.cmp(&db);
    }
    for i in (0..a.len()).rev() {
        if a[i] != b[i] {
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

/// Graded reverse lexicographic comparison with `x_0 > x_1 > ... > x_n`.
pub fn grevlex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    grevlex_range(&a.exps, &b.exps)
}

/// A monomial order on `x_0..x_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Lexicographic with `x_0 > x_1 > ... > x_n`.
    Lex,
    /// Graded reverse lexicographic with `x_0 > x_1 > ... > x_n`.
    Grevlex,
    /// Lexicographic with the variable priority listed from largest to smallest.
    PermutedLex(Vec<usize>),
    /// Variables with index `>= keep` are eliminated: compared first by grevlex on
    /// that block, then by grevlex on the remaining variables.
    Elimination { keep: usize },
}

impl MonomialOrder {
    /// Checked constructor for a permuted lexicographic order on `nvars` variables.
    pub fn permuted_lex(priority: Vec<usize>, nvars: usize) -> Result<Self> {
        let mut seen = vec![false; nvars];
        if priority.len() != nvars {
            return Err(Error::Shape(format!("permutation of length {} for {nvars} variables", priority.len())));
        }
        for &p in &priority {
            if p >= nvars || seen[p] {
                return Err(Error::Shape(format!("{priority:?} is not a permutation")));
            }
            seen[p] = true;
        }
        Ok(MonomialOrder::PermutedLex(priority))
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::Grevlex => grevlex_cmp(a, b),
            MonomialOrder::PermutedLex(p) => {
                for &i in p {
                    if a.exps[i] != b.exps[i] {
                        return a.exps[i].cmp(&b.exps[i]);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Elimination { keep } => {
                let k = (*keep).min(a.exps.len());
                grevlex_range(&a.exps[k..], &b.exps[k..]).then_with(|| grevlex_range(&a.exps[..k], &b.exps[..k]))
            }
        }
    }

    /// Short name used in reports.
    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::Grevlex => "grevlex".into(),
            MonomialOrder::PermutedLex(p) => {
                let names: Vec<String> = p.iter().map(|i| format!("x{i}")).collect();
                format!("lex({})", names.join(">"))
            }
            MonomialOrder::Elimination { keep } => format!("elim(x{keep}..)"),
        }
    }
}

/// Sparse polynomial with terms kept in grevlex-descending order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial {
    nvars: usize,
    terms: Vec<(Monomial, Coeff)>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: Vec::new() }
    }

    pub fn constant(nvars: usize, c: Coeff) -> Self {
        Self::term(Monomial::one(nvars), c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Coeff::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::term(Monomial::var(nvars, i), Coeff::one())
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, Coeff::one())
    }

    pub fn term(m: Monomial, c: Coeff) -> Self {
        let nvars = m.nvars();
        if c.is_zero() {
            Self::zero(nvars)
        } else {
            Polynomial { nvars, terms: vec![(m, c)] }
        }
    }

    /// Build from arbitrary terms; collects duplicates and drops zeros.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Coeff)>) -> Self {
        let mut acc: HashMap<Monomial, Coeff> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), nvars);
            *acc.entry(m).or_insert_with(Coeff::zero) += c;
        }
        let mut terms: Vec<(Monomial, Coeff)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| grevlex_cmp(&b.0, &a.0));
        Polynomial { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Index of the last variable, so the ring is `k[x_0..x_n]`.
    pub fn n(&self) -> usize {
        self.nvars - 1
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn coeff(&self, m: &Monomial) -> Coeff {
        self.terms.iter().find(|(t, _)| t == m).map(|(_, c)| c.clone()).unwrap_or_else(Coeff::zero)
    }

    /// Total degree; zero for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => {
                let d = m.degree();
                self.terms.iter().all(|(t, _)| t.degree() == d)
            }
        }
    }

    /// Order-maximal term.
    pub fn leading_term(&self, ord: &MonomialOrder) -> Result<(Monomial, Coeff)> {
        if matches!(ord, MonomialOrder::Grevlex) {
            return self.terms.first().cloned().ok_or(Error::ZeroPolynomial);
        }
        self.terms
            .iter()
            .max_by(|a, b| ord.cmp(&a.0, &b.0))
            .cloned()
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self, ord: &MonomialOrder) -> Result<Monomial> {
        self.leading_term(ord).map(|t| t.0)
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect() }
    }

    /// Divide by the leading coefficient under `ord`.
    pub fn monic(&self, ord: &MonomialOrder) -> Polynomial {
        match self.leading_term(ord) {
            Ok((_, c)) => self.scale(&c.recip()),
            Err(_) => self.clone(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Degree-`d` homogeneous component.
    pub fn homogeneous_part(&self, d: u32) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().filter(|(m, _)| m.degree() == d).cloned().collect(),
        }
    }

    /// The same polynomial viewed in a ring with `nvars >= self.nvars()` variables.
    pub fn extend_vars(&self, nvars: usize) -> Polynomial {
        assert!(nvars >= self.nvars);
        Polynomial { nvars, terms: self.terms.iter().map(|(m, c)| (m.resized(nvars), c.clone())).collect() }
    }

    /// Rename variable `i` to `map[i]` in a ring of `nvars` variables.
    pub fn remap_vars(&self, nvars: usize, map: &[usize]) -> Polynomial {
        Polynomial::from_terms(
            nvars,
            self.terms.iter().map(|(m, c)| {
                let mut e = vec![0u16; nvars];
                for (i, &k) in m.exps().iter().enumerate() {
                    if k > 0 {
                        e[map[i]] += k;
                    }
                }
                (Monomial::from_exps(&e), c.clone())
            }),
        )
    }

    /// Drop trailing variables that do not occur; errors if one does.
    pub fn restrict_vars(&self, nvars: usize) -> Result<Polynomial> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            if m.exps()[nvars..].iter().any(|&e| e > 0) {
                return Err(Error::VariableOutOfRange { index: m.max_var().unwrap_or(0), max: nvars - 1 });
            }
            terms.push((Monomial::from_exps(&m.exps()[..nvars]), c.clone()));
        }
        Ok(Polynomial { nvars, terms })
    }

    /// Substitute `x_i -> images[i]`; all images share one ring.
    pub fn substitute(&self, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.nvars);
        let target = images.first().map(|p| p.nvars).unwrap_or(0);
        let mut powers: Vec<Vec<Polynomial>> = images.iter().map(|p| vec![Polynomial::one(p.nvars), p.clone()]).collect();
        let mut acc: HashMap<Monomial, Coeff> = HashMap::new();
        for (m, c) in &self.terms {
            let mut prod = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                prod = &prod * &powers[i][e as usize];
            }
            for (t, a) in prod.terms {
                *acc.entry(t).or_insert_with(Coeff::zero) += a;
            }
        }
        Polynomial::from_terms(target, acc)
    }

    /// Exact quotient `self / f`, or an error if `f` does not divide `self`.
    pub fn exact_div(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.is_zero() {
            return Err(Error::NotDivisible);
        }
        let (lm, lc) = f.leading_term(&MonomialOrder::Grevlex)?;
        let mut rest = self.clone();
        let mut quot: Vec<(Monomial, Coeff)> = Vec::new();
        while let Some((m, c)) = rest.terms.first().cloned() {
            let q = lm.quotient_of(&m).ok_or(Error::NotDivisible)?;
            let a = &c / &lc;
            rest = &rest - &f.mul_term(&q, &a);
            quot.push((q, a));
        }
        Ok(Polynomial::from_terms(self.nvars, quot))
    }

    /// Canonical text form, terms in grevlex-descending order.
    pub fn to_text(&self) -> String {
        self.to_text_with(&|i| format!("x{i}"))
    }

    /// Text form with custom variable names.
    pub fn to_text_with(&self, name: &dyn Fn(usize) -> String) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            for (i, &e) in m.exps().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(name(i)),
                    _ => factors.push(format!("{}^{e}", name(i))),
                }
            }
            if factors.is_empty() {
                out.push_str(&a.to_string());
            } else {
                if !a.is_one() {
                    out.push_str(&a.to_string());
                    out.push('*');
                }
                out.push_str(&factors.join("*"));
            }
        }
        out
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        assert_eq!(self.nvars, other.nvars, "ring mismatch");
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() && j < b.len() {
            match grevlex_cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if negate { -&t.1 } else { t.1.clone() };
            out.push((t.0.clone(), c));
        }
        Polynomial { nvars: self.nvars, terms: out }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.merge(rhs, false)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.merge(rhs, true)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "ring mismatch");
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return rhs.mul_term(m, c);
        }
        if rhs.terms.len() == 1 {
            let (m, c) = &rhs.terms[0];
            return self.mul_term(m, c);
        }
        let mut acc: HashMap<Monomial, Coeff> = HashMap::with_capacity(self.terms.len() * rhs.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                *acc.entry(m1.mul(m2)).or_insert_with(Coeff::zero) += c1 * c2;
            }
        }
        Polynomial::from_terms(self.nvars, acc)
    }
}

macro_rules! owned_ops {
    ($tr:ident, $f:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Parse a polynomial in `x0..xn` with `+ - * / ^` and parentheses.
/// Division is only allowed by nonzero constants.
pub fn parse_poly(text: &str, n: usize) -> Result<Polynomial> {
    let mut p = Parser { s: text.as_bytes(), pos: 0, nvars: n + 1 };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != p.s.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(out)
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    nvars: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            None
        } else {
            Some(String::from_utf8_lossy(&self.s[start..self.pos]).into_owned())
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.signed()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.signed()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.signed()?;
                    if !d.is_constant() || d.is_zero() {
                        return Err(Error::Parse { pos: at, msg: "division by a non-constant or zero".into() });
                    }
                    let c = d.terms[0].1.clone();
                    acc = acc.scale(&c.recip());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn signed(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-&self.signed()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.signed()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.primary()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e: u32 = self
                .digits()
                .ok_or_else(|| self.err("expected exponent"))?
                .parse()
                .map_err(|_| self.err("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(b'x') => {
                let at = self.pos;
                self.pos += 1;
                let idx: usize = self
                    .digits()
                    .ok_or_else(|| self.err("expected variable index"))?
                    .parse()
                    .map_err(|_| self.err("variable index too large"))?;
                if idx >= self.nvars {
                    return Err(Error::Parse {
                        pos: at,
                        msg: Error::VariableOutOfRange { index: idx, max: self.nvars - 1 }.to_string(),
                    });
                }
                Ok(Polynomial::var(self.nvars, idx))
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits().unwrap_or_default();
                let v: BigInt = d.parse().map_err(|_| self.err("bad number"))?;
                Ok(Polynomial::constant(self.nvars, BigRational::from_integer(v)))
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let p = parse_poly("x0^2 - x1*x2", 4).unwrap();
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p.degree(), 2);
        assert_eq!(p.to_text(), "x0^2 - x1*x2");
        assert_eq!(parse_poly("x0 + x0", 1).unwrap().to_text(), "2*x0");
        let q = parse_poly("x0*x3 - x1*x2", 3).unwrap();
        assert_eq!(q.to_text(), "-x1*x2 + x0*x3");
        let r = parse_poly("(x0 - 1/2*x1)^2 / 3", 2).unwrap();
        assert_eq!(parse_poly(&r.to_text(), 2).unwrap(), r);
        assert_eq!(r.to_text(), "1/3*x0^2 - 1/3*x0*x1 + 1/12*x1^2");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_poly("x0 + x9", 3), Err(Error::Parse { pos: 5, .. })));
        assert!(matches!(parse_poly("x0 + * x1", 3), Err(Error::Parse { pos: 5, .. })));
        assert!(matches!(parse_poly("(x0", 3), Err(Error::Parse { .. })));
        assert!(parse_poly("x0 / x1", 3).is_err());
    }

    #[test]
    fn orders() {
        let a = Monomial::from_exps(&[1, 0, 1]);
        let b = Monomial::from_exps(&[0, 2, 0]);
        assert_eq!(MonomialOrder::Lex.cmp(&a, &b), Ordering::Greater);
        // x0x2 < x1^2 in grevlex
        assert_eq!(MonomialOrder::Grevlex.cmp(&a, &b), Ordering::Less);
        let p = MonomialOrder::permuted_lex(vec![2, 1, 0], 3).unwrap();
        assert_eq!(p.cmp(&a, &b), Ordering::Greater);
        assert!(MonomialOrder::permuted_lex(vec![0, 0, 1], 3).is_err());
    }

    #[test]
    fn leading_terms_of_family_generators() {
        // order x0 > x1 > x4 > x3 > x2 on k[x0..x4]
        let ord = MonomialOrder::permuted_lex(vec![0, 1, 4, 3, 2], 5).unwrap();
        let gamma = parse_poly("(x0 + 3*x3)*x1", 4).unwrap();
        assert_eq!(gamma.leading_monomial(&ord).unwrap().to_text(), "x0*x1");
        let delta = parse_poly("x0*x4 - 2*x1*x3", 4).unwrap();
        assert_eq!(delta.leading_monomial(&ord).unwrap().to_text(), "x0*x4");
        let sq = parse_poly("x0^2", 4).unwrap();
        for o in [MonomialOrder::Lex, MonomialOrder::Grevlex, ord] {
            assert_eq!(sq.leading_monomial(&o).unwrap().to_text(), "x0^2");
        }
        assert_eq!(Polynomial::zero(3).leading_term(&MonomialOrder::Lex), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn exact_division() {
        let f = parse_poly("x0 - x1", 2).unwrap();
        let g = parse_poly("x0^2 + x1*x2", 2).unwrap();
        assert_eq!((&f * &g).exact_div(&f).unwrap(), g);
        assert_eq!(g.exact_div(&f), Err(Error::NotDivisible));
    }

    #[test]
    fn substitution() {
        let p = parse_poly("x0*x1", 1).unwrap();
        let imgs = vec![parse_poly("x0 + x1", 1).unwrap(), parse_poly("x0 - x1", 1).unwrap()];
        assert_eq!(p.substitute(&imgs).to_text(), "x0^2 - x1^2");
    }

    #[test]
    fn monomials_of_degree() {
        let ms = Monomial::all_of_degree(3, 2);
        assert_eq!(ms.len(), 6);
        assert_eq!(ms[0].to_text(), "x0^2");
        assert_eq!(ms[5].to_text(), "x2^2");
    }
}
