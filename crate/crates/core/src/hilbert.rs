//! Hilbert series, functions and polynomials; Krull dimension; Macaulay decompositions.

use std::fmt;

use num::{BigInt, One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{minimalize_monomials, Ideal};
use crate::poly::{rat, Coeff, Monomial, MonomialOrder};

/// Univariate polynomial in `t`, coefficients from low to high degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly(pub Vec<Coeff>);

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly(Vec::new())
    }

    pub fn constant(c: Coeff) -> Self {
        UniPoly(vec![c]).trimmed()
    }

    /// The polynomial `t + a`.
    pub fn t_plus(a: i64) -> Self {
        UniPoly(vec![rat(a), Coeff::one()])
    }

    fn trimmed(mut self) -> Self {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.0.is_empty() {
            None
        } else {
            Some(self.0.len() - 1)
        }
    }

    pub fn coeff(&self, i: usize) -> Coeff {
        self.0.get(i).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn add(&self, o: &UniPoly) -> UniPoly {
        let n = self.0.len().max(o.0.len());
        UniPoly((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect()).trimmed()
    }

    pub fn sub(&self, o: &UniPoly) -> UniPoly {
        let n = self.0.len().max(o.0.len());
        UniPoly((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect()).trimmed()
    }

    pub fn mul(&self, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Coeff::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly(out).trimmed()
    }

    pub fn scale(&self, c: &Coeff) -> UniPoly {
        UniPoly(self.0.iter().map(|x| x * c).collect()).trimmed()
    }

    pub fn eval(&self, t: &Coeff) -> Coeff {
        let mut acc = Coeff::zero();
        for c in self.0.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    /// The binomial coefficient `C(t + a, k)` as a polynomial in `t`.
    pub fn binom(a: i64, k: usize) -> UniPoly {
        let mut acc = UniPoly::constant(Coeff::one());
        let mut fact = BigInt::one();
        for j in 0..k {
            acc = acc.mul(&UniPoly::t_plus(a - j as i64));
            fact *= BigInt::from(j + 1);
        }
        acc.scale(&Coeff::from_integer(fact).recip())
    }

    /// Text such as `1/2*t^2 + 3/2*t + 1`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, i) in (0..self.0.len()).rev().filter(|&i| !self.0[i].is_zero()).enumerate() {
            let c = &self.0[i];
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let var = match i {
                0 => String::new(),
                1 => "t".into(),
                _ => format!("t^{i}"),
            };
            if var.is_empty() {
                out.push_str(&a.to_string());
            } else if a.is_one() {
                out.push_str(&var);
            } else {
                out.push_str(&format!("{a}*{var}"));
            }
        }
        out
    }
}

/// Hilbert polynomial `P(t) = Σ c_i C(t+i, i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HilbertPoly {
    coeffs: Vec<Coeff>,
}

fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |a, b| a * BigInt::from(b))
}

impl HilbertPoly {
    pub fn zero() -> Self {
        HilbertPoly { coeffs: Vec::new() }
    }

    /// From binomial-basis coefficients `c_0, c_1, ...`.
    pub fn from_binomial(coeffs: Vec<Coeff>) -> Self {
        let mut h = HilbertPoly { coeffs };
        while h.coeffs.last().is_some_and(|c| c.is_zero()) {
            h.coeffs.pop();
        }
        h
    }

    pub fn from_binomial_ints(coeffs: &[i64]) -> Self {
        Self::from_binomial(coeffs.iter().map(|&c| rat(c)).collect())
    }

    /// The basis element `C(t+m, m)`, which is zero for `m < 0`.
    pub fn basis(m: i64) -> Self {
        if m < 0 {
            return Self::zero();
        }
        let mut c = vec![Coeff::zero(); m as usize + 1];
        c[m as usize] = Coeff::one();
        Self::from_binomial(c)
    }

    pub fn from_unipoly(p: &UniPoly) -> Self {
        let mut rest = p.clone();
        let Some(d) = rest.degree() else { return Self::zero() };
        let mut coeffs = vec![Coeff::zero(); d + 1];
        for i in (0..=d).rev() {
            // C(t+i, i) has leading coefficient 1/i!
            let c = rest.coeff(i) * Coeff::from_integer(factorial(i));
            rest = rest.sub(&UniPoly::binom(i as i64, i).scale(&c));
            coeffs[i] = c;
        }
        debug_assert!(rest.is_zero());
        Self::from_binomial(coeffs)
    }

    pub fn to_unipoly(&self) -> UniPoly {
        let mut acc = UniPoly::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            acc = acc.add(&UniPoly::binom(i as i64, i).scale(c));
        }
        acc
    }

    pub fn binomial_coeffs(&self) -> &[Coeff] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn eval(&self, t: i64) -> Coeff {
        self.to_unipoly().eval(&rat(t))
    }

    pub fn add(&self, o: &HilbertPoly) -> HilbertPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let g = |v: &Vec<Coeff>, i: usize| v.get(i).cloned().unwrap_or_else(Coeff::zero);
        Self::from_binomial((0..n).map(|i| g(&self.coeffs, i) + g(&o.coeffs, i)).collect())
    }

    pub fn sub(&self, o: &HilbertPoly) -> HilbertPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let g = |v: &Vec<Coeff>, i: usize| v.get(i).cloned().unwrap_or_else(Coeff::zero);
        Self::from_binomial((0..n).map(|i| g(&self.coeffs, i) - g(&o.coeffs, i)).collect())
    }

    pub fn add_const(&self, k: i64) -> HilbertPoly {
        self.add(&HilbertPoly::from_binomial_ints(&[k]))
    }

    /// First difference `P(t) - P(t-1)`.
    pub fn difference(&self) -> HilbertPoly {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::from_binomial(self.coeffs[1..].to_vec())
    }

    /// `Δ^i P`.
    pub fn difference_n(&self, i: usize) -> HilbertPoly {
        (0..i).fold(self.clone(), |p, _| p.difference())
    }

    /// The constant value when `P` has degree at most zero.
    pub fn as_constant(&self) -> Option<Coeff> {
        match self.coeffs.len() {
            0 => Some(Coeff::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// Binomial-basis text such as `C(t+2,2) + C(t+1,1)`.
    pub fn to_binomial_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, i) in (0..self.coeffs.len()).rev().filter(|&i| !self.coeffs[i].is_zero()).enumerate() {
            let c = &self.coeffs[i];
            let a = c.abs();
            if k == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let b = if i == 0 { String::new() } else { format!("C(t+{i},{i})") };
            match (b.is_empty(), a.is_one()) {
                (true, _) => out.push_str(&a.to_string()),
                (false, true) => out.push_str(&b),
                (false, false) => out.push_str(&format!("{a}*{b}")),
            }
        }
        out
    }

    /// Monomial-basis text such as `1/2*t^2 + 5/2*t + 2`.
    pub fn to_text(&self) -> String {
        self.to_unipoly().to_text()
    }
}

impl fmt::Display for HilbertPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_binomial_text())
    }
}

impl Serialize for HilbertPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("HilbertPoly", 3)?;
        let c: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        st.serialize_field("binomial_coeffs", &c)?;
        st.serialize_field("binomial", &self.to_binomial_text())?;
        st.serialize_field("formula", &self.to_text())?;
        st.end()
    }
}

/// Parse expressions like `C(t+2,2)+t+1`, `2t+2`, `t^2/2 + 3`.
pub fn parse_hilbert_poly(text: &str) -> Result<HilbertPoly> {
    let mut p = HpParser { s: text.as_bytes(), pos: 0 };
    let v = p.expr()?;
    p.ws();
    if p.pos != p.s.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(HilbertPoly::from_unipoly(&v))
}

struct HpParser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl HpParser<'_> {
    fn err(&self, m: &str) -> Error {
        Error::Parse { pos: self.pos, msg: m.into() }
    }
    fn ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }
    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.pos).copied()
    }
    fn int(&mut self) -> Result<i64> {
        self.ws();
        let neg = if self.s.get(self.pos) == Some(&b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let v: i64 = std::str::from_utf8(&self.s[start..self.pos]).unwrap().parse().map_err(|_| self.err("expected integer"))?;
        Ok(if neg { -v } else { v })
    }
    fn expr(&mut self) -> Result<UniPoly> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }
    fn term(&mut self) -> Result<UniPoly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.int()?;
                    if d == 0 {
                        return Err(self.err("division by zero"));
                    }
                    acc = acc.scale(&rat(d).recip());
                }
                Some(b't') | Some(b'C') | Some(b'(') => acc = acc.mul(&self.factor()?),
                _ => return Ok(acc),
            }
        }
    }
    fn factor(&mut self) -> Result<UniPoly> {
        let base = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                return Ok(self.factor()?.scale(&rat(-1)));
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                e
            }
            Some(b't') => {
                self.pos += 1;
                UniPoly::t_plus(0)
            }
            Some(b'C') => {
                self.pos += 1;
                if self.peek() != Some(b'(') {
                    return Err(self.err("expected '(' after C"));
                }
                self.pos += 1;
                let top = self.expr()?;
                if self.peek() != Some(b',') {
                    return Err(self.err("expected ','"));
                }
                self.pos += 1;
                let k = self.int()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                if top.degree() != Some(1) || !top.coeff(1).is_one() || !top.coeff(0).is_integer() || k < 0 {
                    return Err(self.err("binomials must have the form C(t+a,k)"));
                }
                let a = top.coeff(0).to_integer().to_i64().ok_or_else(|| self.err("shift too large"))?;
                UniPoly::binom(a, k as usize)
            }
            Some(c) if c.is_ascii_digit() => UniPoly::constant(rat(self.int()?)),
            _ => return Err(self.err("unexpected input")),
        };
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.int()?;
            let mut acc = UniPoly::constant(Coeff::one());
            for _ in 0..e {
                acc = acc.mul(&base);
            }
            return Ok(acc);
        }
        Ok(base)
    }
}

/// Numerator `N(s)` of the Hilbert series `N(s)/(1-s)^{nvars}` of `S/M`, for a monomial ideal `M`.
pub fn monomial_numerator(gens: &[Monomial], nvars: usize) -> Vec<i64> {
    let gens = minimalize_monomials(gens.to_vec());
    trim_series(numerator_rec(gens, nvars))
}

fn trim_series(mut v: Vec<i64>) -> Vec<i64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn series_add(a: &[i64], b: &[i64]) -> Vec<i64> {
    let n = a.len().max(b.len());
    (0..n).map(|i| a.get(i).unwrap_or(&0) + b.get(i).unwrap_or(&0)).collect()
}

fn series_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn one_minus_s_pow(d: u32) -> Vec<i64> {
    let mut v = vec![0i64; d as usize + 1];
    v[0] = 1;
    v[d as usize] -= 1;
    v
}

fn numerator_rec(gens: Vec<Monomial>, nvars: usize) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|g| g.is_one()) {
        return Vec::new();
    }
    // pairwise coprime generators form a regular sequence
    let mut counts = vec![0usize; nvars];
    for g in &gens {
        for v in g.support() {
            counts[v] += 1;
        }
    }
    let (pivot, &most) = counts.iter().enumerate().max_by_key(|(i, c)| (**c, std::cmp::Reverse(*i))).unwrap();
    if most <= 1 {
        return gens.iter().fold(vec![1], |acc, g| series_mul(&acc, &one_minus_s_pow(g.degree())));
    }
    let x = Monomial::var(nvars, pivot);
    let mut plus: Vec<Monomial> = gens.iter().filter(|g| g.exp(pivot) == 0).cloned().collect();
    plus.push(x.clone());
    let colon: Vec<Monomial> = gens.iter().map(|g| g.over_var(pivot).unwrap_or_else(|| g.clone())).collect();
    let a = numerator_rec(minimalize_monomials(plus), nvars);
    let b = numerator_rec(minimalize_monomials(colon), nvars);
    series_add(&a, &series_mul(&[0, 1], &b))
}

/// Numerator of the Hilbert series of `S/I`, computed on the grevlex initial ideal.
pub fn hilbert_series_numerator(i: &Ideal) -> Vec<i64> {
    let lm = i.grevlex().leading_monomials();
    monomial_numerator(&lm, i.nvars())
}

fn binom_int(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    let mut acc: i128 = 1;
    for j in 0..k {
        acc = acc * (n - j) as i128 / (j + 1) as i128;
    }
    acc as i64
}

/// Value of the Hilbert function of `S/I` at degree `t` given the series numerator.
pub fn hilbert_function_from_numerator(num: &[i64], nvars: usize, t: i64) -> i64 {
    num.iter()
        .enumerate()
        .map(|(j, c)| c * binom_int(t - j as i64 + nvars as i64 - 1, nvars as i64 - 1))
        .sum()
}

/// `dim_k (S/I)_t`.
pub fn hilbert_function(i: &Ideal, t: u32) -> i64 {
    hilbert_function_from_numerator(&hilbert_series_numerator(i), i.nvars(), t as i64)
}

/// Divide out `(1-s)` as often as possible; returns `(h, k)` with `N = (1-s)^k h`.
fn strip_one_minus_s(num: &[i64]) -> (Vec<i64>, usize) {
    let mut h = num.to_vec();
    let mut k = 0;
    while !h.is_empty() && h.iter().sum::<i64>() == 0 {
        // synthetic division by (1 - s)
        let mut q = vec![0i64; h.len() - 1];
        let mut acc = 0;
        for i in 0..h.len() - 1 {
            acc += h[i];
            q[i] = acc;
        }
        h = trim_series(q);
        k += 1;
    }
    (h, k)
}

/// Hilbert polynomial from the series numerator.
pub fn hilbert_polynomial_from_numerator(num: &[i64], nvars: usize) -> HilbertPoly {
    if num.is_empty() {
        return HilbertPoly::zero();
    }
    let (h, k) = strip_one_minus_s(num);
    let dim = nvars - k;
    if dim == 0 {
        return HilbertPoly::zero();
    }
    let mut acc = UniPoly::zero();
    for (j, c) in h.iter().enumerate() {
        let b = UniPoly::binom(dim as i64 - 1 - j as i64, dim - 1);
        acc = acc.add(&b.scale(&rat(*c)));
    }
    HilbertPoly::from_unipoly(&acc)
}

/// Hilbert polynomial of `S/I`.
pub fn hilbert_polynomial(i: &Ideal) -> HilbertPoly {
    hilbert_polynomial_from_numerator(&hilbert_series_numerator(i), i.nvars())
}

/// Krull dimension of `S/I` from the pole order of the Hilbert series.
pub fn krull_dim_from_series(i: &Ideal) -> Result<usize> {
    let num = hilbert_series_numerator(i);
    if num.is_empty() {
        return Err(Error::UnitIdeal);
    }
    Ok(i.nvars() - strip_one_minus_s(&num).1)
}

/// Largest set of variables containing the support of no generator of the monomial ideal.
pub fn max_independent_set(gens: &[Monomial], nvars: usize) -> usize {
    let masks: Vec<u64> = gens.iter().map(|g| g.support().iter().fold(0u64, |m, &v| m | (1 << v))).collect();
    let full: u64 = if nvars == 64 { u64::MAX } else { (1u64 << nvars) - 1 };
    let mut best = 0;
    let mut u: u64 = 0;
    loop {
        let size = u.count_ones() as usize;
        if size > best && masks.iter().all(|m| m & !u != 0) {
            best = size;
        }
        if u == full {
            break;
        }
        u += 1;
    }
    best
}

/// Krull dimension of `S/I` via independent sets of the grevlex initial ideal,
/// cross-checked against the Hilbert series.
pub fn krull_dim(i: &Ideal) -> Result<usize> {
    if i.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let lm = i.initial_ideal(&MonomialOrder::Grevlex).minimal_monomials()?;
    let d = max_independent_set(&lm, i.nvars());
    let s = krull_dim_from_series(i)?;
    assert_eq!(d, s, "independent-set and series dimensions disagree");
    Ok(d)
}

/// Hilbert polynomial of a `c`-plane union a `d`-plane meeting transversely in `P^n`.
pub fn pair_hilbert_polynomial(c: usize, d: usize, n: usize) -> Result<HilbertPoly> {
    if c > d || d + 1 > n {
        return Err(Error::OutOfRange(format!("(c,d,n)=({c},{d},{n}) needs 0 <= c <= d <= n-1")));
    }
    Ok(HilbertPoly::basis(c as i64)
        .add(&HilbertPoly::basis(d as i64))
        .sub(&HilbertPoly::basis(c as i64 + d as i64 - n as i64)))
}

/// Hilbert polynomial of a degree-`d` hypersurface in `P^n`.
pub fn hypersurface_hilbert_polynomial(d: usize, n: usize) -> HilbertPoly {
    let p = UniPoly::binom(n as i64, n).sub(&UniPoly::binom(n as i64 - d as i64, n));
    HilbertPoly::from_unipoly(&p)
}

/// Sequence `m_0 >= ... >= m_d >= 0` with `P(t) = Σ [C(t+i,i+1) - C(t+i-m_i,i+1)]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MacaulayDecomposition {
    /// `m[i]` is `m_i`.
    pub m: Vec<i64>,
    /// `a[d] = m_d`, `a[i] = m_i - m_{i+1}`.
    pub a: Vec<i64>,
}

impl MacaulayDecomposition {
    pub fn degree(&self) -> usize {
        self.m.len() - 1
    }

    pub fn reconstruct(&self) -> HilbertPoly {
        let mut acc = UniPoly::zero();
        for (i, &mi) in self.m.iter().enumerate() {
            acc = acc.add(&macaulay_term(i, mi));
        }
        HilbertPoly::from_unipoly(&acc)
    }
}

fn macaulay_term(i: usize, mi: i64) -> UniPoly {
    UniPoly::binom(i as i64, i + 1).sub(&UniPoly::binom(i as i64 - mi, i + 1))
}

/// Greedy extraction of the Macaulay decomposition.
pub fn macaulay_decomposition(p: &HilbertPoly) -> Result<MacaulayDecomposition> {
    let Some(d) = p.degree() else { return Err(Error::Inadmissible("zero polynomial".into())) };
    let mut rest = p.to_unipoly();
    let mut m = vec![0i64; d + 1];
    for i in (0..=d).rev() {
        let c = rest.coeff(i) * Coeff::from_integer(factorial(i));
        if !c.is_integer() {
            return Err(Error::Inadmissible(format!("{p}: non-integral m_{i}")));
        }
        let mi = c.to_integer().to_i64().ok_or_else(|| Error::Inadmissible("overflow".into()))?;
        if mi < 0 || (i < d && mi < m[i + 1]) || (i == d && mi == 0) {
            return Err(Error::Inadmissible(format!("{p}: m_{i} = {mi}")));
        }
        m[i] = mi;
        rest = rest.sub(&macaulay_term(i, mi));
    }
    if !rest.is_zero() {
        return Err(Error::Inadmissible(format!("{p}: nonzero remainder")));
    }
    let mut a = vec![0i64; d + 1];
    a[d] = m[d];
    for i in 0..d {
        a[i] = m[i] - m[i + 1];
    }
    Ok(MacaulayDecomposition { m, a })
}
