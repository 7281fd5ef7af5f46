//! Classified ideals for the Hilbert schemes studied here, the `γ/δ` family of
//! pairs of `(n-k)`-planes, and per-ideal verification reports.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::borel::{gin, i_cdn, j1, j2, times_x0_power};
use crate::error::{Error, Result};
use crate::groebner::{ideal_equal, intersect_all, is_saturated, product, Ideal};
use crate::hilbert::{hilbert_function, hilbert_polynomial, pair_hilbert_polynomial, HilbertPoly};
use crate::poly::{parse_poly, rat, Coeff, Monomial, MonomialOrder, Polynomial};
use crate::resolution::betti_table;
use crate::tangent::{expected_component_dim, hom_degree_zero_dim, hom_rank};

/// The classified families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    /// Points of `H(n-2,n-2,n)`.
    CodimTwoPairs,
    /// Points of `H(n-3,n-3,n)`.
    CodimThreePairs,
    /// Points of `H(1,n-2,n)`.
    LinePlane,
    /// Points of the stratum `H_1(1,n-2,n)` of the full Hilbert scheme.
    LinePlaneStratum,
    /// An `(n-2)`-plane and two points.
    PlaneTwoPoints,
    /// Borel-fixed points of `Hilb^{P_{1,d,n}}`.
    LineBorel { d: usize },
    /// Borel-fixed points of a degree-`d` hypersurface union `k ≤ 3` points.
    Hypersurface { d: usize },
}

impl Family {
    pub fn all_tags() -> &'static [&'static str] {
        &["codim2-pairs", "codim3-pairs", "line-plane", "line-plane-stratum", "plane-two-points", "line-borel:<d>", "hypersurface:<d>"]
    }

    pub fn tag(&self) -> String {
        match self {
            Family::CodimTwoPairs => "codim2-pairs".into(),
            Family::CodimThreePairs => "codim3-pairs".into(),
            Family::LinePlane => "line-plane".into(),
            Family::LinePlaneStratum => "line-plane-stratum".into(),
            Family::PlaneTwoPoints => "plane-two-points".into(),
            Family::LineBorel { d } => format!("line-borel:{d}"),
            Family::Hypersurface { d } => format!("hypersurface:{d}"),
        }
    }

    /// Smallest ambient dimension for which the printed ideals make sense.
    pub fn min_n(&self) -> usize {
        match self {
            Family::CodimTwoPairs => 3,
            Family::CodimThreePairs => 5,
            Family::LinePlane | Family::LinePlaneStratum => 4,
            Family::PlaneTwoPoints => 3,
            Family::LineBorel { d } => d + 2,
            Family::Hypersurface { .. } => 2,
        }
    }

    /// The `(c,d)` of the pair component whose Hilbert polynomial the family carries.
    pub fn pair_type(&self, n: usize) -> Option<(usize, usize)> {
        match self {
            Family::CodimTwoPairs => Some((n - 2, n - 2)),
            Family::CodimThreePairs => Some((n - 3, n - 3)),
            Family::LinePlane | Family::LinePlaneStratum => Some((1, n - 2)),
            Family::LineBorel { d } => Some((1, *d)),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tag())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::Unknown { kind: "family", name: s.into() };
        let param = |rest: &str| rest.parse::<usize>().map_err(|_| unknown());
        match s {
            "codim2-pairs" => Ok(Family::CodimTwoPairs),
            "codim3-pairs" => Ok(Family::CodimThreePairs),
            "line-plane" => Ok(Family::LinePlane),
            "line-plane-stratum" => Ok(Family::LinePlaneStratum),
            "plane-two-points" => Ok(Family::PlaneTwoPoints),
            _ => {
                if let Some(rest) = s.strip_prefix("line-borel:") {
                    Ok(Family::LineBorel { d: param(rest)? })
                } else if let Some(rest) = s.strip_prefix("hypersurface:") {
                    let d = param(rest)?;
                    if d == 0 {
                        return Err(unknown());
                    }
                    Ok(Family::Hypersurface { d })
                } else {
                    Err(unknown())
                }
            }
        }
    }
}

/// Which component of the Hilbert scheme an entry lies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Component {
    /// The pair component `H(c,d,n)` only.
    Pair,
    /// The other component `H'` of `Hilb^{P_{1,n-2,n}}` only.
    Other,
    /// Both components.
    Both,
    /// The Hilbert scheme is irreducible; no distinction.
    Whole,
}

impl Component {
    pub fn on_pair_component(&self) -> bool {
        matches!(self, Component::Pair | Component::Both)
    }
}

/// One classified ideal together with the properties it is expected to have.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub family: Family,
    /// Type label as numbered in the classification.
    pub label: String,
    pub description: String,
    pub n: usize,
    pub ideal: Ideal,
    /// A second printed presentation of the same ideal.
    pub alternative: Option<Ideal>,
    pub hilbert_polynomial: HilbertPoly,
    pub component: Component,
    /// Expected generic initial ideal, when stated.
    pub gin_target: Option<Ideal>,
    /// Expected `dim Hom(I, S/I)_0`, when stated.
    pub tangent_dim: Option<usize>,
}

fn lin(n: usize, idx: impl IntoIterator<Item = usize>) -> Vec<Polynomial> {
    idx.into_iter().map(|i| Polynomial::var(n + 1, i)).collect()
}

fn p(n: usize, s: &str) -> Polynomial {
    parse_poly(s, n).expect("catalog polynomial")
}

fn ideal(n: usize, gens: Vec<Polynomial>) -> Ideal {
    Ideal::new(n + 1, gens).expect("catalog ideal")
}

fn with(mut a: Vec<Polynomial>, b: Vec<Polynomial>) -> Vec<Polynomial> {
    a.extend(b);
    a
}

fn cap(parts: &[Ideal]) -> Ideal {
    intersect_all(parts)
}

struct Builder {
    family: Family,
    n: usize,
    hp: HilbertPoly,
    out: Vec<CatalogEntry>,
}

impl Builder {
    fn push(&mut self, label: &str, description: &str, ideal: Ideal, component: Component) -> &mut CatalogEntry {
        self.out.push(CatalogEntry {
            family: self.family,
            label: label.into(),
            description: description.into(),
            n: self.n,
            ideal,
            alternative: None,
            hilbert_polynomial: self.hp.clone(),
            component,
            gin_target: None,
            tangent_dim: None,
        });
        self.out.last_mut().expect("just pushed")
    }
}

/// Every classified ideal of `family` in `P^n`.
pub fn catalog_ideals(family: Family, n: usize) -> Result<Vec<CatalogEntry>> {
    if n < family.min_n() {
        return Err(Error::OutOfRange(format!("{family} needs n >= {}, got {n}", family.min_n())));
    }
    let hp = match family {
        Family::PlaneTwoPoints => HilbertPoly::basis(n as i64 - 2).add_const(2),
        Family::Hypersurface { d } => crate::hilbert::hypersurface_hilbert_polynomial(d, n),
        _ => {
            let (c, d) = family.pair_type(n).expect("pair family");
            pair_hilbert_polynomial(c, d, n)?
        }
    };
    let mut b = Builder { family, n, hp, out: Vec::new() };
    match family {
        Family::CodimTwoPairs => codim_two(&mut b)?,
        Family::CodimThreePairs => codim_three(&mut b)?,
        Family::LinePlane => line_plane(&mut b)?,
        Family::LinePlaneStratum => line_plane_stratum(&mut b)?,
        Family::PlaneTwoPoints => plane_two_points(&mut b)?,
        Family::LineBorel { d } => {
            let e = b.push("J1", "Borel point on the boundary of the pair component", j1(d, n)?, Component::Both);
            e.gin_target = Some(e.ideal.clone());
            let e = b.push("J2", "lexicographic point", j2(d, n)?, Component::Other);
            e.gin_target = Some(e.ideal.clone());
        }
        Family::Hypersurface { d } => hypersurface(&mut b, d)?,
    }
    Ok(b.out)
}

fn codim_two(b: &mut Builder) -> Result<()> {
    let n = b.n;
    let target = i_cdn(n - 2, n - 2, n)?;
    let dim = expected_component_dim(n - 2, n - 2, n)?;
    let x01 = ideal(n, lin(n, [0, 1]));
    let entries = [
        ("1", "two (n-2)-planes meeting along an (n-4)-plane", product(&x01, &ideal(n, lin(n, [2, 3])))),
        ("2", "two (n-2)-planes meeting along an embedded (n-3)-plane", Ideal::parse(n, &["x0^2", "x0*x1", "x0*x2", "x1*x2"])?),
        ("3", "pure double structure on an (n-2)-plane", Ideal::parse(n, &["x0^2", "x0*x1", "x1^2", "x0*x3 - x1*x2"])?),
        ("4", "double structure on an (n-2)-plane with an embedded (n-3)-plane", Ideal::parse(n, &["x0^2", "x0*x1", "x1^2", "x0*x2"])?),
    ];
    for (label, desc, i) in entries {
        b.push(label, desc, i, Component::Pair).gin_target = Some(target.clone());
    }
    b.out[0].tangent_dim = Some(dim);
    if n >= 3 {
        b.out[0].alternative = Some(cap(&[x01, ideal(n, lin(n, [2, 3]))]));
    }
    Ok(())
}

fn codim_three(b: &mut Builder) -> Result<()> {
    let n = b.n;
    let target = i_cdn(n - 3, n - 3, n)?;
    let dim = expected_component_dim(n - 3, n - 3, n)?;
    let id = |g: &[&str]| Ideal::parse(n, g);
    let entries = [
        ("1", "two (n-3)-planes meeting along an (n-6)-plane", cap(&[id(&["x0", "x1", "x2"])?, id(&["x3", "x4", "x5"])?])),
        (
            "2",
            "two (n-3)-planes meeting along an embedded (n-5)-plane",
            cap(&[id(&["x0", "x1", "x2"])?, id(&["x0", "x3", "x4"])?, id(&["x0^2", "x1", "x2", "x3", "x4"])?]),
        ),
        (
            "3",
            "two (n-3)-planes meeting along an embedded (n-4)-plane",
            cap(&[id(&["x0", "x1", "x2*x3"])?, id(&["x0^2", "x0*x1", "x1^2", "x0*x4 - x1*x5", "x2", "x3"])?]),
        ),
        (
            "4",
            "two (n-3)-planes meeting along an embedded (n-4)-plane with an embedded (n-5)-plane on it",
            cap(&[id(&["x0", "x1", "x2*x3"])?, id(&["x0", "x1^2", "x2", "x3"])?, id(&["x0^2", "x1", "x2", "x3", "x4"])?]),
        ),
        (
            "5",
            "pure double structure on an (n-3)-plane",
            id(&["x0^2", "x0*x1", "x0*x2", "x1^2", "x1*x2", "x2^2", "x0*x4 - x1*x3", "x0*x5 - x2*x3", "x1*x5 - x2*x4"])?,
        ),
        (
            "6",
            "double structure on an (n-3)-plane with an embedded (n-5)-plane",
            cap(&[id(&["x0", "x1^2", "x1*x2", "x2^2", "x1*x4 - x2*x3"])?, id(&["x0^2", "x1", "x2", "x3", "x4"])?]),
        ),
        (
            "7",
            "double structure on an (n-3)-plane with an embedded (n-4)-plane",
            cap(&[id(&["x0", "x1", "x2^2"])?, id(&["x0^2", "x0*x1", "x1^2", "x0*x5 - x1*x4", "x2", "x3"])?]),
        ),
        (
            "8",
            "double structure on an (n-3)-plane with an embedded (n-4)-plane and an embedded (n-5)-plane on it",
            cap(&[id(&["x0", "x1", "x2^2"])?, id(&["x0", "x1^2", "x2", "x3"])?, id(&["x0^2", "x1", "x2", "x3", "x4"])?]),
        ),
    ];
    for (label, desc, i) in entries {
        b.push(label, desc, i, Component::Pair).gin_target = Some(target.clone());
    }
    b.out[0].tangent_dim = Some(dim);
    let x012 = id(&["x0", "x1", "x2"])?;
    b.out[4].alternative = Some(crate::groebner::sum(
        &crate::groebner::power(&x012, 2),
        &id(&["x0*x4 - x1*x3", "x0*x5 - x2*x3", "x1*x5 - x2*x4"])?,
    ));
    Ok(())
}

fn line_plane(b: &mut Builder) -> Result<()> {
    let n = b.n;
    let target = i_cdn(1, n - 2, n)?;
    let x01 = ideal(n, lin(n, [0, 1]));
    let e = b.push("1", "disjoint union of a line and an (n-2)-plane", product(&x01, &ideal(n, lin(n, 2..=n))), Component::Pair);
    e.alternative = Some(cap(&[x01.clone(), ideal(n, lin(n, 2..=n))]));
    e.tangent_dim = Some(expected_component_dim(1, n - 2, n)?);
    b.push("2", "(n-2)-plane meeting a line along an embedded point", product(&x01, &ideal(n, lin(n, 1..n))), Component::Both).tangent_dim = Some(6 * n - 6);
    let double_line = ideal(n, with(vec![p(n, "x0^2"), p(n, "x0*x1"), p(n, "x1^2"), &(&Polynomial::var(n + 1, 0) * &Polynomial::var(n + 1, n)) - &(&Polynomial::var(n + 1, 1) * &Polynomial::var(n + 1, n - 1))], lin(n, 2..n - 1)));
    let e = b.push("3", "(n-2)-plane with a pure embedded line", cap(&[x01.clone(), double_line]), Component::Pair);
    e.tangent_dim = Some(expected_component_dim(1, n - 2, n)?);
    let i4 = cap(&[x01, ideal(n, with(vec![p(n, "x0^2")], lin(n, 1..n - 1))), ideal(n, with(vec![Polynomial::var(n + 1, 0), p(n, "x1^2")], lin(n, 2..n)))]);
    b.push("4", "(n-2)-plane with an embedded line and an embedded point on the line", i4, Component::Both).tangent_dim = Some(6 * n - 6);
    for e in &mut b.out {
        e.gin_target = Some(target.clone());
    }
    Ok(())
}

fn line_plane_stratum(b: &mut Builder) -> Result<()> {
    let n = b.n;
    let target = i_cdn(1, n - 2, n)?;
    let x = |i: usize| Polynomial::var(n + 1, i);
    let x0sq = p(n, "x0^2");
    let x01 = ideal(n, lin(n, [0, 1]));
    let on_pair = expected_component_dim(1, n - 2, n)?;
    let other = 5 * n - 5;

    let e = b.push("a", "disjoint union of a line and an (n-2)-plane", cap(&[x01.clone(), ideal(n, lin(n, 2..=n))]), Component::Pair);
    e.tangent_dim = Some(on_pair);

    let e = b.push(
        "b",
        "line meeting an (n-2)-plane and an isolated point",
        cap(&[x01.clone(), ideal(n, lin(n, 1..n)), ideal(n, with(vec![x(0)], lin(n, 2..=n)))]),
        Component::Other,
    );
    e.tangent_dim = Some(other);

    let x1_times: Vec<Polynomial> = (2..n).map(|i| &x(1) * &x(i)).collect();
    b.push(
        "c",
        "line meeting an (n-2)-plane with an embedded point along the intersection",
        cap(&[ideal(n, with(vec![x(0)], x1_times)), ideal(n, with(vec![x0sq.clone()], lin(n, 1..n)))]),
        Component::Both,
    )
    .tangent_dim = Some(6 * n - 6);

    b.push(
        "d",
        "line meeting an (n-2)-plane with an embedded point on the line away from the intersection",
        cap(&[ideal(n, vec![x(0), x(n)]), ideal(n, with(vec![x0sq.clone()], lin(n, 1..n))), ideal(n, lin(n, 0..n - 1))]),
        Component::Other,
    )
    .tangent_dim = Some(other);

    b.push(
        "e",
        "line meeting an (n-2)-plane with an embedded point on the plane away from the intersection",
        cap(&[x01.clone(), ideal(n, with(vec![x0sq.clone()], lin(n, 1..n))), ideal(n, with(vec![x(0)], lin(n, 3..=n)))]),
        Component::Other,
    )
    .tangent_dim = Some(other);

    b.push(
        "f",
        "(n-2)-plane with an embedded line and an isolated point",
        cap(&[x01.clone(), ideal(n, with(vec![x0sq.clone()], lin(n, 1..n - 1))), ideal(n, with(vec![x(0)], lin(n, 2..=n)))]),
        Component::Other,
    )
    .tangent_dim = Some(other);

    let emb_line = ideal(n, with(vec![x(0), p(n, "x1^2")], (2..n - 1).map(|i| &x(1) * &x(i)).collect()));
    b.push(
        "g",
        "(n-2)-plane with an embedded line and an embedded point on the plane but not on the line",
        cap(&[emb_line.clone(), ideal(n, with(vec![x0sq.clone(), x(1)], lin(n, 3..=n)))]),
        Component::Other,
    )
    .tangent_dim = Some(other);

    b.push(
        "h",
        "(n-2)-plane with an embedded line and an embedded point on it",
        cap(&[emb_line, ideal(n, with(vec![x0sq.clone()], lin(n, 1..n)))]),
        Component::Both,
    )
    .tangent_dim = Some(6 * n - 6);

    let pure = ideal(n, with(vec![x0sq, p(n, "x0*x1"), p(n, "x1^2"), &(&x(0) * &x(n)) - &(&x(1) * &x(n - 1))], lin(n, 2..n - 1)));
    b.push("i", "(n-2)-plane meeting with a pure embedded line", cap(&[x01, pure]), Component::Pair).tangent_dim = Some(on_pair);

    for e in &mut b.out {
        if e.component.on_pair_component() {
            e.gin_target = Some(target.clone());
        }
    }
    Ok(())
}

fn plane_two_points(b: &mut Builder) -> Result<()> {
    let n = b.n;
    let x = |i: usize| Polynomial::var(n + 1, i);
    let smooth = 4 * n - 2;
    let x01 = ideal(n, lin(n, [0, 1]));
    let x0sq = p(n, "x0^2");
    let x1sq = p(n, "x1^2");
    let lex = ideal(n, with(with(vec![x(0)], (1..n - 1).map(|i| &x(1) * &x(i)).collect()), vec![&x(1) * &(&x(n - 1) * &x(n - 1))]));
    let jn = product(&x01, &ideal(n, lin(n, 0..n)));

    b.push(
        "i",
        "(n-2)-plane and two isolated points",
        cap(&[x01.clone(), ideal(n, lin(n, 1..=n)), ideal(n, with(vec![x(0)], lin(n, 2..=n)))]),
        Component::Whole,
    )
    .tangent_dim = Some(smooth);

    b.push(
        "ii",
        "(n-2)-plane with an embedded point and an isolated point",
        cap(&[x01.clone(), ideal(n, with(vec![x0sq.clone()], lin(n, 1..n))), ideal(n, with(vec![x(0)], lin(n, 2..=n)))]),
        Component::Whole,
    )
    .tangent_dim = Some(smooth);

    b.push(
        "iii-a",
        "(n-2)-plane with two embedded points, not in a plane",
        cap(&[x01.clone(), ideal(n, with(vec![x0sq], lin(n, 1..n))), ideal(n, with(vec![x(0), x1sq.clone()], lin(n, 3..=n)))]),
        Component::Whole,
    )
    .tangent_dim = Some(smooth);

    let planar = cap(&[x01.clone(), ideal(n, with(vec![x(0), x1sq.clone()], lin(n, 2..n))), ideal(n, with(vec![x(0), x1sq.clone()], lin(n, 3..=n)))]);
    let mut tail = vec![x1sq.clone(), &x(1) * &(&x(2) * &x(n))];
    tail.extend((3..n).map(|i| &x(1) * &x(i)));
    let e = b.push("iii-b", "(n-2)-plane with two embedded points lying in a plane", planar, Component::Whole);
    e.alternative = Some(ideal(n, with(vec![x(0)], tail)));
    e.gin_target = Some(lex.clone());

    let e = b.push("iv", "(n-2)-plane with an embedded point of multiplicity 2 (lexicographic point)", lex.clone(), Component::Whole);
    e.alternative = Some(cap(&[x01.clone(), ideal(n, with(with(vec![x(0), x1sq.clone()], lin(n, 2..n - 1)), vec![&x(n - 1) * &x(n - 1)]))]));
    e.gin_target = Some(lex);

    let e = b.push("v", "(n-2)-plane with an embedded point of multiplicity 2 (the ideal J_n)", jn.clone(), Component::Whole);
    e.alternative = Some(cap(&[x01, ideal(n, with(vec![p(n, "x0^2"), p(n, "x0*x1"), x1sq], lin(n, 2..n)))]));
    e.gin_target = Some(jn);
    e.tangent_dim = Some(6 * n - 4);
    Ok(())
}

fn hypersurface(b: &mut Builder, d: usize) -> Result<()> {
    let n = b.n;
    let base = b.hp.clone();
    let x = |i: usize| Monomial::var(n + 1, i);
    // Hom(I,S/I)_0 equals the Hilbert scheme tangent space only for k <= 2 and the second k = 3 ideal
    let mut push = |label: &str, k: i64, mons: Vec<Monomial>, stated: bool| -> Result<()> {
        let i = times_x0_power(&Ideal::monomial(n + 1, mons), d as u16)?;
        let dim = binomial(n + d, d) - 1 + k as usize * n;
        b.hp = base.add_const(k);
        let e = b.push(label, &format!("degree-{d} hypersurface and {k} point(s)"), i, Component::Whole);
        e.gin_target = Some(e.ideal.clone());
        if stated {
            e.tangent_dim = Some(dim);
        }
        Ok(())
    };
    for k in 1..=3u16 {
        let mut mons: Vec<Monomial> = (0..n - 1).map(x).collect();
        mons.push(x(n - 1).times_var(n - 1, k - 1));
        push(&format!("k{k}"), k as i64, mons, k < 3)?;
    }
    let mut mons: Vec<Monomial> = (0..n.saturating_sub(2)).map(x).collect();
    mons.extend([x(n - 2).times_var(n - 2, 1), x(n - 2).times_var(n - 1, 1), x(n - 1).times_var(n - 1, 1)]);
    push("k3-b", 3, mons, true)?;
    b.hp = base;
    Ok(())
}

fn binomial(a: usize, k: usize) -> usize {
    (0..k).fold(1usize, |acc, i| acc * (a - i) / (i + 1))
}

/// Outcome of checking one catalog entry.
#[derive(Clone, Debug, Serialize)]
pub struct PointReport {
    pub family: String,
    pub label: String,
    pub n: usize,
    pub generators: Vec<String>,
    pub saturated: bool,
    pub hilbert_polynomial: String,
    pub hilbert_ok: bool,
    /// Hilbert function agrees with the polynomial for `1 <= t <= n+2`.
    pub hilbert_function_ok: bool,
    pub alternative_equal: Option<bool>,
    pub gin: Vec<String>,
    pub gin_target: Option<Vec<String>>,
    pub gin_ok: Option<bool>,
    pub betti_totals: Vec<usize>,
    pub betti_linear: bool,
    pub regularity: Option<i64>,
    pub tangent_dim: usize,
    pub tangent_expected: Option<usize>,
    pub tangent_ok: Option<bool>,
    pub on_pair_component: bool,
    /// A point of a spanning pair component, which must be 2-regular with a linear resolution.
    pub linear_required: bool,
}

impl PointReport {
    /// Every stated expectation holds; for pair-component entries also regularity 2 and a linear resolution.
    pub fn pass(&self) -> bool {
        let linear = !self.linear_required || (self.betti_linear && self.regularity == Some(2));
        self.saturated
            && self.hilbert_ok
            && self.alternative_equal.unwrap_or(true)
            && self.gin_ok.unwrap_or(true)
            && self.tangent_ok.unwrap_or(true)
            && linear
    }
}

/// Check every stated property of `e`.
pub fn verify_entry(e: &CatalogEntry, seed: u64) -> Result<PointReport> {
    let spanning = e.family.pair_type(e.n).is_some_and(|(c, d)| c + d + 1 >= e.n);
    verify_inner(e, seed, spanning)
}

fn verify_inner(e: &CatalogEntry, seed: u64, spanning: bool) -> Result<PointReport> {
    let i = &e.ideal;
    let hp = hilbert_polynomial(i);
    let hilbert_function_ok = (1..=e.n as u32 + 2).all(|t| rat(hilbert_function(i, t)) == hp.eval(t as i64));
    let g = gin(i, seed)?;
    let gin_ok = e.gin_target.as_ref().map(|t| ideal_equal(&g, t));
    let betti = betti_table(i)?;
    let tangent = hom_degree_zero_dim(i)?;
    Ok(PointReport {
        family: e.family.tag(),
        label: e.label.clone(),
        n: e.n,
        generators: i.to_strings(),
        saturated: is_saturated(i),
        hilbert_polynomial: hp.to_binomial_text(),
        hilbert_ok: hp == e.hilbert_polynomial,
        hilbert_function_ok,
        alternative_equal: e.alternative.as_ref().map(|a| ideal_equal(a, i)),
        gin: g.canonical_strings(),
        gin_target: e.gin_target.as_ref().map(|t| t.canonical_strings()),
        gin_ok,
        betti_totals: betti.totals(),
        betti_linear: betti.is_linear(),
        regularity: betti.regularity(),
        tangent_dim: tangent,
        tangent_expected: e.tangent_dim,
        tangent_ok: e.tangent_dim.map(|d| d == tangent),
        on_pair_component: e.component.on_pair_component(),
        linear_required: e.component.on_pair_component() && spanning,
    })
}

/// Check `e` as a point of `H(c,d,n)`: Hilbert polynomial `P_{c,d,n}` and `gin = I_{c,d,n}`.
pub fn verify_point(e: &CatalogEntry, c: usize, d: usize, n: usize, seed: u64) -> Result<PointReport> {
    let mut e = e.clone();
    e.hilbert_polynomial = pair_hilbert_polynomial(c, d, n)?;
    e.gin_target = Some(i_cdn(c, d, n)?);
    e.component = Component::Pair;
    verify_inner(&e, seed, c + d + 1 >= n)
}

/// Dimension of the `PGL` orbit of `[I]`: the rank of the derivations `x_i ∂/∂x_j` in `Hom(I, S/I)_0`.
pub fn orbit_dimension(i: &Ideal) -> usize {
    let nv = i.nvars();
    let fams: Vec<Vec<Polynomial>> = (0..nv)
        .flat_map(|a| (0..nv).map(move |b| (a, b)))
        .map(|(a, b)| i.gens().iter().map(|g| &Polynomial::var(nv, a) * &derivative(g, b)).collect())
        .collect();
    hom_rank(i, &fams)
}

fn derivative(p: &Polynomial, j: usize) -> Polynomial {
    Polynomial::from_terms(
        p.nvars(),
        p.terms().iter().filter_map(|(m, c)| {
            let e = m.exp(j);
            m.over_var(j).map(|q| (q, c * rat(e as i64)))
        }),
    )
}

/// Parameters of the `γ/δ` family of pairs of `(n-k)`-planes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairFamilySpec {
    pub k: usize,
    pub n: usize,
    /// `lambda[i-1]` is `λ_i`.
    pub lambda: Vec<Coeff>,
}

impl PairFamilySpec {
    pub fn new(k: usize, n: usize, lambda: Vec<Coeff>) -> Result<Self> {
        if k == 0 || n + 1 < 2 * k {
            return Err(Error::OutOfRange(format!("family needs 1 <= k and n >= 2k-1, got k={k}, n={n}")));
        }
        if lambda.len() != k {
            return Err(Error::Shape(format!("{} values of λ for k={k}", lambda.len())));
        }
        Ok(PairFamilySpec { k, n, lambda })
    }

    fn lam(&self, i: usize) -> &Coeff {
        &self.lambda[i - 1]
    }

    /// `λ_{(p,q)} = λ_{k-q+1} ··· λ_{k-p}` for `p < q`.
    pub fn lambda_pq(&self, p: usize, q: usize) -> Coeff {
        let k = self.k;
        (k - q + 1..=k - p).fold(Coeff::one(), |acc, i| acc * self.lam(i))
    }

    /// Coefficient of `x_{n-k_p}` in `γ_{p,q}`: `λ_1 ··· λ_{k-p} = λ_1 λ_{(p,k-1)}`.
    pub fn gamma_coeff(&self, p: usize) -> Coeff {
        (1..=self.k - p).fold(Coeff::one(), |acc, i| acc * self.lam(i))
    }

    /// Which of `λ_1..λ_k` are nonzero.
    pub fn signature(&self) -> Signature {
        Signature(self.lambda.iter().map(|l| !l.is_zero()).collect())
    }

    fn kk(&self, i: usize) -> usize {
        self.n - (self.k - 1 - i)
    }
}

/// Zero pattern of `λ`: `true` where `λ_i ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Signature(pub Vec<bool>);

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<&str> = self.0.iter().map(|&b| if b { "nonzero" } else { "zero" }).collect();
        write!(f, "({})", s.join(", "))
    }
}

/// Generators `γ_{p,q}` and `δ_{p,q}` of the family member.
pub fn pair_family_generators(spec: &PairFamilySpec) -> Vec<Polynomial> {
    let (k, nv) = (spec.k, spec.n + 1);
    let x = |i: usize| Polynomial::var(nv, i);
    let mut out = Vec::new();
    for pp in 0..k {
        let lead = &x(pp) + &x(spec.kk(pp)).scale(&spec.gamma_coeff(pp));
        for q in 0..k {
            out.push(&lead * &x(q));
        }
    }
    for pp in 0..k {
        for q in pp + 1..k {
            let a = &x(pp) * &x(spec.kk(q));
            let b = (&x(q) * &x(spec.kk(pp))).scale(&spec.lambda_pq(pp, q));
            out.push(&a - &b);
        }
    }
    out
}

pub fn pair_family_ideal(spec: &PairFamilySpec) -> Ideal {
    Ideal::new_unchecked(spec.n + 1, pair_family_generators(spec))
}

/// The lexicographic order `x_0 > ... > x_{k-1} > x_n > x_{n-1} > ... > x_k`.
pub fn pair_family_order(k: usize, n: usize) -> MonomialOrder {
    let mut pr: Vec<usize> = (0..k).collect();
    pr.extend((k..=n).rev());
    MonomialOrder::permuted_lex(pr, n + 1).expect("permutation")
}

/// The initial terms `C`: all `x_p x_q` with `p, q < k`, and `x_p x_{n-k+2+p..n}` for `p <= k-2`.
pub fn pair_family_initial_terms(k: usize, n: usize) -> Vec<Monomial> {
    let nv = n + 1;
    let mut out = Vec::new();
    for a in 0..k {
        for b in a..k {
            out.push(Monomial::var(nv, a).times_var(b, 1));
        }
    }
    for a in 0..k.saturating_sub(1) {
        for j in n + 2 + a - k..=n {
            out.push(Monomial::var(nv, a).times_var(j, 1));
        }
    }
    out
}

/// Whether the family generators form a Gröbner basis with initial ideal `(C)`.
pub fn pair_family_check(spec: &PairFamilySpec) -> Result<bool> {
    let i = pair_family_ideal(spec);
    let ord = pair_family_order(spec.k, spec.n);
    let c = Ideal::monomial(spec.n + 1, pair_family_initial_terms(spec.k, spec.n));
    let init = i.initial_ideal(&ord);
    let leads: Vec<Monomial> = i.gens().iter().map(|g| g.leading_monomial(&ord)).collect::<Result<_>>()?;
    Ok(ideal_equal(&init, &c) && ideal_equal(&Ideal::monomial(spec.n + 1, leads), &c))
}

/// All `2^k` zero-patterns of `λ`.
pub fn all_signatures(k: usize) -> Vec<Signature> {
    (0..1u32 << k).map(|mask| Signature((0..k).map(|i| mask >> i & 1 == 1).collect())).collect()
}

/// A random member of the family with the given zero-pattern.
pub fn sample_spec(k: usize, n: usize, sig: &Signature, rng: &mut ChaCha8Rng) -> Result<PairFamilySpec> {
    let lambda = sig
        .0
        .iter()
        .map(|&nz| {
            if nz {
                let v: i64 = rng.gen_range(1..=9);
                if rng.gen_bool(0.5) {
                    rat(-v)
                } else {
                    rat(v)
                }
            } else {
                Coeff::zero()
            }
        })
        .collect();
    PairFamilySpec::new(k, n, lambda)
}

/// One realized zero-pattern of `λ` and the checks on its representatives.
#[derive(Clone, Debug, Serialize)]
pub struct SignatureReport {
    pub signature: Signature,
    pub samples: usize,
    /// Every sample has initial ideal `(C)` under the family order.
    pub groebner_ok: bool,
    pub representative: PointReport,
    pub orbit_dim: usize,
}

impl SignatureReport {
    pub fn pass(&self) -> bool {
        self.groebner_ok && self.representative.pass()
    }
}

/// Realized zero-patterns of `λ` for the `(n-k)`-plane family, each verified as a point of `H(n-k,n-k,n)`.
pub fn orbit_signatures(k: usize, n: usize, sample_count: usize, seed: u64) -> Result<Vec<SignatureReport>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for sig in all_signatures(k) {
        let mut groebner_ok = true;
        let mut rep = None;
        for _ in 0..sample_count.max(1) {
            let spec = sample_spec(k, n, &sig, &mut rng)?;
            groebner_ok &= pair_family_check(&spec)?;
            rep.get_or_insert(spec);
        }
        let spec = rep.expect("at least one sample");
        let i = pair_family_ideal(&spec);
        let entry = CatalogEntry {
            family: if k == 3 { Family::CodimThreePairs } else { Family::CodimTwoPairs },
            label: sig.to_string(),
            description: "family member".into(),
            n,
            ideal: i.clone(),
            alternative: None,
            hilbert_polynomial: pair_hilbert_polynomial(n - k, n - k, n)?,
            component: Component::Pair,
            gin_target: None,
            tangent_dim: if sig.0.iter().all(|&b| b) { Some(expected_component_dim(n - k, n - k, n)?) } else { None },
        };
        let representative = verify_point(&entry, n - k, n - k, n, seed)?;
        out.push(SignatureReport { signature: sig.clone(), samples: sample_count.max(1), groebner_ok, representative, orbit_dim: orbit_dimension(&i) });
    }
    Ok(out)
}

/// Distinct zero-patterns among passing reports.
pub fn realized(reports: &[SignatureReport]) -> BTreeSet<Signature> {
    reports.iter().filter(|r| r.pass()).map(|r| r.signature.clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_tags_round_trip() {
        for f in [Family::CodimTwoPairs, Family::LinePlaneStratum, Family::LineBorel { d: 2 }, Family::Hypersurface { d: 3 }] {
            assert_eq!(f.tag().parse::<Family>().unwrap(), f);
        }
        assert!("nope".parse::<Family>().is_err());
        assert!("hypersurface:0".parse::<Family>().is_err());
    }

    #[test]
    fn catalog_sizes() {
        assert_eq!(catalog_ideals(Family::CodimTwoPairs, 4).unwrap().len(), 4);
        assert_eq!(catalog_ideals(Family::CodimThreePairs, 6).unwrap().len(), 8);
        assert_eq!(catalog_ideals(Family::LinePlaneStratum, 4).unwrap().len(), 9);
        assert_eq!(catalog_ideals(Family::PlaneTwoPoints, 3).unwrap().len(), 6);
        assert!(catalog_ideals(Family::CodimThreePairs, 4).is_err());
    }

    #[test]
    fn lambda_products() {
        let s = PairFamilySpec::new(3, 6, vec![rat(2), rat(3), rat(5)]).unwrap();
        assert_eq!(s.lambda_pq(0, 1), rat(5));
        assert_eq!(s.lambda_pq(0, 2), rat(15));
        assert_eq!(s.lambda_pq(1, 2), rat(3));
        assert_eq!(s.gamma_coeff(0), rat(30));
        assert_eq!(s.gamma_coeff(2), rat(2));
        assert_eq!(s.signature(), Signature(vec![true, true, true]));
    }

    #[test]
    fn zero_lambda_gives_initial_terms() {
        let s = PairFamilySpec::new(2, 4, vec![rat(0), rat(0)]).unwrap();
        let c = Ideal::monomial(5, pair_family_initial_terms(2, 4));
        assert!(ideal_equal(&pair_family_ideal(&s), &c));
        assert_eq!(c.canonical_strings(), Ideal::parse(4, &["x0^2", "x0*x1", "x1^2", "x0*x4"]).unwrap().canonical_strings());
    }

    #[test]
    fn family_members_are_groebner() {
        for (k, n) in [(2, 4), (2, 5), (3, 5), (3, 6)] {
            let mut rng = ChaCha8Rng::seed_from_u64(7);
            for sig in all_signatures(k) {
                let s = sample_spec(k, n, &sig, &mut rng).unwrap();
                assert!(pair_family_check(&s).unwrap(), "{k} {n} {sig}");
                assert_eq!(hilbert_polynomial(&pair_family_ideal(&s)), pair_hilbert_polynomial(n - k, n - k, n).unwrap());
            }
        }
    }

    #[test]
    fn planar_double_point_presentation() {
        // (x0) + x1(x1, x2x3, x4..x_{n-1}) only matches the intersection form at n = 3
        for n in 3..=5 {
            let planar = catalog_ideals(Family::PlaneTwoPoints, n).unwrap().into_iter().find(|e| e.label == "iii-b").unwrap();
            let x = |i: usize| Polynomial::var(n + 1, i);
            let mut gens = vec![x(0), &x(1) * &x(1), &x(1) * &(&x(2) * &x(3))];
            gens.extend((4..n).map(|i| &x(1) * &x(i)));
            assert_eq!(ideal_equal(&Ideal::new(n + 1, gens).unwrap(), &planar.ideal), n == 3);
            assert!(ideal_equal(planar.alternative.as_ref().unwrap(), &planar.ideal));
        }
    }

    #[test]
    fn orbit_dimensions() {
        let z = Ideal::parse(4, &["x0", "x1"]).unwrap();
        // G(2,4) has dimension 6 in P^4
        assert_eq!(orbit_dimension(&z), 6);
    }
}

#[cfg(test)]
mod orbit_tests {
    use super::*;

    fn dims_of_catalog(f: Family, n: usize) -> Vec<usize> {
        let mut v: Vec<usize> = catalog_ideals(f, n).unwrap().iter().map(|e| orbit_dimension(&e.ideal)).collect();
        v.sort();
        v
    }

    #[test]
    fn signatures_realize_catalog_orbits() {
        for (k, n, f) in [(2, 4, Family::CodimTwoPairs), (3, 6, Family::CodimThreePairs)] {
            let reps = orbit_signatures(k, n, 3, 11).unwrap();
            assert_eq!(realized(&reps).len(), 1 << k);
            let mut dims: Vec<usize> = reps.iter().map(|r| r.orbit_dim).collect();
            dims.sort();
            assert_eq!(dims, dims_of_catalog(f, n), "k={k} n={n}");
        }
    }
}
