//! Transcribed versal deformation data for `I_{1,2,4}` and `J_3`, the checks that
//! certify it, and generic determinantal ideals.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{ideal_equal, intersect, sum, Ideal};
use crate::hilbert::krull_dim;
use crate::linalg::{Echelon, SparseRow};
use crate::poly::{parse_poly, rat, Monomial, Polynomial};
use crate::resolution::{column_span_equal, minimal_syzygies, GradedMap};
use crate::tangent::{hom_degree_zero_dim, hom_rank, is_hom_element};

/// The two transcribed computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum VersalCase {
    /// `I_{1,2,4} ⊂ k[x0..x4]`, eight deformation parameters.
    I124,
    /// `J_3 = (x0,x1)(x0,x1,x2) ⊂ k[x0..x3]`, nine deformation parameters.
    J3,
}

impl VersalCase {
    pub fn all() -> [VersalCase; 2] {
        [VersalCase::I124, VersalCase::J3]
    }

    pub fn tag(&self) -> &'static str {
        match self {
            VersalCase::I124 => "i124",
            VersalCase::J3 => "j3",
        }
    }
}

impl fmt::Display for VersalCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for VersalCase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "i124" => Ok(VersalCase::I124),
            "j3" => Ok(VersalCase::J3),
            _ => Err(Error::Unknown { kind: "deformation case", name: s.to_string() }),
        }
    }
}

/// A transcribed entry that differs from the printed one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Correction {
    pub place: String,
    pub printed: String,
    pub used: String,
}

impl Correction {
    fn new(place: &str, printed: &str, used: &str) -> Self {
        Correction { place: place.into(), printed: printed.into(), used: used.into() }
    }
}

/// Versal family data. Polynomials in `S[u]` use `x0..xn` followed by `u1..um`;
/// polynomials in `k[u]` use `u1..um` alone.
#[derive(Clone, Debug)]
pub struct VersalFamilyData {
    pub case: VersalCase,
    pub n: usize,
    pub m: usize,
    /// The base ideal, generated by `phi0` in printed order.
    pub ideal: Ideal,
    pub phi0: Vec<Polynomial>,
    /// Rows are indexed by generators, columns by syzygies.
    pub phi1: Vec<Vec<Polynomial>>,
    pub trivial: Vec<(String, Vec<Polynomial>)>,
    pub nontrivial: Vec<(String, Vec<Polynomial>)>,
    pub phi0_lift: Vec<Polynomial>,
    pub phi1_lift: Vec<Vec<Polynomial>>,
    /// Generators of the obstruction ideal in `k[u]`.
    pub obstruction: Vec<Polynomial>,
    /// The stated presentation of the obstruction ideal.
    pub presentation: Presentation,
    pub corrections: Vec<Correction>,
}

/// The stated shape of the obstruction ideal.
#[derive(Clone, Debug)]
pub enum Presentation {
    /// `(u_extra) + I_2(matrix)` intersected with an ideal of variables.
    DeterminantalUnionLinear { extra: Vec<Polynomial>, matrix: Vec<Vec<Polynomial>>, linear: Vec<Polynomial> },
    /// `I_2(matrix)`.
    Determinantal { matrix: Vec<Vec<Polynomial>> },
}

/// Rewrite `u<i>` as the variable with index `offset + i - 1` and parse.
fn parse_u(text: &str, offset: usize, nvars: usize) -> Result<Polynomial> {
    let mut out = String::with_capacity(text.len() + 8);
    let b = text.as_bytes();
    let mut i = 0;
    while i < b.len() {
        if b[i] == b'u' {
            let start = i + 1;
            let mut j = start;
            while j < b.len() && b[j].is_ascii_digit() {
                j += 1;
            }
            let k: usize = text[start..j].parse().map_err(|_| Error::Parse { pos: i, msg: "expected u-index".into() })?;
            if k == 0 {
                return Err(Error::Parse { pos: i, msg: "u-variables start at u1".into() });
            }
            out.push_str(&format!("x{}", offset + k - 1));
            i = j;
        } else {
            out.push(b[i] as char);
            i += 1;
        }
    }
    parse_poly(&out, nvars - 1)
}

struct Rings {
    n: usize,
    m: usize,
}

impl Rings {
    fn big(&self, t: &str) -> Polynomial {
        parse_u(t, self.n + 1, self.n + 1 + self.m).expect("transcribed polynomial parses")
    }

    fn base(&self, t: &str) -> Polynomial {
        parse_poly(t, self.n).expect("transcribed polynomial parses")
    }

    fn params(&self, t: &str) -> Polynomial {
        parse_u(t, 0, self.m).expect("transcribed polynomial parses")
    }

    fn big_row(&self, r: &[&str]) -> Vec<Polynomial> {
        r.iter().map(|t| self.big(t)).collect()
    }

    fn base_row(&self, r: &[&str]) -> Vec<Polynomial> {
        r.iter().map(|t| self.base(t)).collect()
    }

    fn params_row(&self, r: &[&str]) -> Vec<Polynomial> {
        r.iter().map(|t| self.params(t)).collect()
    }

    fn unit_vector(&self, len: usize, pos: usize, t: &str) -> Vec<Polynomial> {
        (0..len).map(|k| if k == pos { self.base(t) } else { Polynomial::zero(self.n + 1) }).collect()
    }
}

fn i124_corrections() -> Vec<Correction> {
    vec![
        Correction::new("trivial t02, entry 6", "x1*x3", "x2*x3"),
        Correction::new("trivial t03, entry 6", "x1*x3", "x3^2"),
        Correction::new("phi0 lift, entry 1", "x0^2+u1*x0*x4+u6^2*u8^2*x4^2", "x0^2+u1*x0*x4-u6^2*u8^2*x4^2"),
        Correction::new(
            "phi0 lift, entry 3",
            "x1^2+u3*x0*x4-u7^2*x4^2-2*u6*u7*x3*x4-u3*u6*u8*x4^2",
            "x1^2+u3*x0*x4-u6^2*x3^2-u7^2*x4^2-2*u6*u7*x3*x4-u3*u6*u8*x4^2",
        ),
        Correction::new("obstruction generators", "", "u4*u8"),
    ]
}

/// `printed[k]` selects the printed form of correction `k`.
fn i124(printed: [bool; 5]) -> VersalFamilyData {
    let r = Rings { n: 4, m: 8 };
    let corrections = i124_corrections();
    let pick = |k: usize| if printed[k] { corrections[k].printed.as_str() } else { corrections[k].used.as_str() };
    let phi0 = r.base_row(&["x0^2", "x0*x1", "x1^2", "x0*x2", "x1*x2", "x0*x3"]);
    let phi1 = [
        ["-x1", "0", "-x2", "0", "0", "0", "-x3", "0", "0"],
        ["x0", "-x1", "0", "-x2", "0", "0", "0", "-x3", "0"],
        ["0", "x0", "0", "0", "0", "-x2", "0", "0", "0"],
        ["0", "0", "x0", "x1", "-x1", "0", "0", "0", "-x3"],
        ["0", "0", "0", "0", "x0", "x1", "0", "0", "0"],
        ["0", "0", "0", "0", "0", "0", "x0", "x1", "x2"],
    ]
    .iter()
    .map(|row| r.base_row(row))
    .collect();
    let vec6 = |e: [&str; 6]| r.base_row(&e);
    let trivial = vec![
        ("t01", vec6(["0", "0", "0", "0", "0", "x1*x3"])),
        ("t02", vec6(["0", "0", "0", "x2^2", "0", pick(0)])),
        ("t03", vec6(["0", "x1*x3", "0", "x2*x3", "0", pick(1)])),
        ("t04", vec6(["2*x0*x4", "x1*x4", "0", "x2*x4", "0", "x3*x4"])),
        ("t12", vec6(["0", "0", "0", "0", "x2^2", "0"])),
        ("t13", vec6(["0", "0", "2*x1*x3", "0", "x2*x3", "0"])),
        ("t14", vec6(["0", "x0*x4", "2*x1*x4", "0", "x2*x4", "0"])),
        ("t23", vec6(["0", "0", "0", "0", "x3*x1", "0"])),
        ("t24", vec6(["0", "0", "0", "x0*x4", "x1*x4", "0"])),
        ("t34", vec6(["0", "0", "0", "0", "0", "x0*x4"])),
    ];
    let nontrivial = vec![
        ("u1", r.unit_vector(6, 0, "x0*x4")),
        ("u2", r.unit_vector(6, 1, "x0*x4")),
        ("u3", r.unit_vector(6, 2, "x0*x4")),
        ("u4", r.unit_vector(6, 3, "x0*x4")),
        ("u5", r.unit_vector(6, 4, "x0*x4")),
        ("u6", r.unit_vector(6, 4, "x2*x3")),
        ("u7", r.unit_vector(6, 4, "x2*x4")),
        ("u8", r.unit_vector(6, 5, "x1*x4")),
    ];
    let phi0_lift = r.big_row(&[
        pick(2),
        "x0*x1+u2*x0*x4+2*u6*u7*u8*x4^2+u6^2*u8*x3*x4",
        pick(3),
        "x0*x2+u4*x0*x4-u6*u8*x2*x4",
        "x1*x2+u5*x0*x4+u6*x2*x3+u7*x2*x4-u5*u6*u8*x4^2",
        "x0*x3+u8*x1*x4+u7*u8*x4^2",
    ]);
    let phi1_lift = [
        ["-x1-u2*x4", "-u3*x4", "-x2-u4*x4", "0", "-u5*x4", "0", "-x3", "0", "0"],
        ["x0+u1*x4", "-x1+u2*x4", "0", "-x2-u4*x4", "u4*x4", "-u5*x4", "-u8*x4", "-x3", "0"],
        ["0", "x0", "0", "0", "0", "-x2", "0", "-u8*x4", "0"],
        ["0", "0", "x0+u1*x4+u6*u8*x4", "x1+u2*x4", "-x1-u7*x4", "u3*x4", "0", "0", "-x3"],
        ["0", "0", "0", "u6*u8*x4", "x0", "x1-u6*x3-u7*x4", "0", "0", "-u8*x4"],
        ["-u6^2*u8*x4", "u6^2*x3+2*u6*u7*x4", "0", "0", "-u6*x2", "u5*u6*x4", "x0+u1*x4", "x1+u2*x4", "x2+u4*x4"],
    ]
    .iter()
    .map(|row| r.big_row(row))
    .collect();
    let mut obstruction = r.params_row(&[
        "u7*u8",
        "u5*u8",
        "u3*u8",
        "u2*u8",
        "u1*u8",
        "u3*u4-u5*(u2+u7)",
        "u4*(u2-u7)-u1*u5",
        "(u2-u7)*(u2+u7)-u1*u3",
    ]);
    if !printed[4] {
        obstruction.push(r.params(pick(4)));
    }
    let presentation = Presentation::DeterminantalUnionLinear {
        extra: r.params_row(&["u8"]),
        matrix: vec![r.params_row(&["u5", "u2-u7", "u3"]), r.params_row(&["u4", "u1", "u2+u7"])],
        linear: r.params_row(&["u1", "u2", "u3", "u4", "u5", "u7"]),
    };
    VersalFamilyData {
        case: VersalCase::I124,
        n: 4,
        m: 8,
        ideal: Ideal::new(5, phi0.clone()).expect("homogeneous generators"),
        phi0,
        phi1,
        trivial: trivial.into_iter().map(|(s, v)| (s.to_string(), v)).collect(),
        nontrivial: nontrivial.into_iter().map(|(s, v)| (s.to_string(), v)).collect(),
        phi0_lift,
        phi1_lift,
        obstruction,
        presentation,
        corrections: corrections.into_iter().zip(printed).filter(|(_, p)| !p).map(|(c, _)| c).collect(),
    }
}

fn j3() -> VersalFamilyData {
    let r = Rings { n: 3, m: 9 };
    let phi0 = r.base_row(&["x0^2", "x0*x1", "x1^2", "x0*x2", "x1*x2"]);
    let phi1 = [
        ["-x1", "0", "-x2", "0", "0", "0"],
        ["x0", "-x1", "0", "-x2", "0", "0"],
        ["0", "x0", "0", "0", "0", "-x2"],
        ["0", "0", "x0", "x1", "-x1", "0"],
        ["0", "0", "0", "0", "x0", "x1"],
    ]
    .iter()
    .map(|row| r.base_row(row))
    .collect();
    let vec5 = |e: [&str; 5]| r.base_row(&e);
    let trivial = vec![
        ("t02", vec5(["0", "0", "0", "x2^2", "0"])),
        ("t03", vec5(["2*x0*x3", "x1*x3", "0", "x2*x3", "0"])),
        ("t12", vec5(["0", "0", "0", "0", "x2^2"])),
        ("t13", vec5(["0", "x0*x3", "2*x1*x3", "0", "x2*x3"])),
        ("t23", vec5(["0", "0", "0", "x0*x3", "x1*x3"])),
    ];
    let nontrivial = (0..9)
        .map(|k| (format!("u{}", k + 1), r.unit_vector(5, k / 2, if k % 2 == 0 { "x0*x3" } else { "x1*x3" })))
        .collect();
    let phi0_lift = r.big_row(&[
        "x0^2+u1*x0*x3+u2*x1*x3",
        "x0*x1+u3*x0*x3+u4*x1*x3",
        "x1^2+u5*x0*x3+u6*x1*x3",
        "x0*x2+u7*x0*x3+u8*x1*x3+u4*u7*x3^2+u6*u8*x3^2-u2*u9*x3^2",
        "x1*x2+u9*x0*x3-u5*u8*x3^2+u4*u9*x3^2",
    ]);
    let phi1_lift = [
        ["-x1-u3*x3", "-u5*x3", "-x2-u7*x3", "0", "-u9*x3", "0"],
        ["x0+u1*x3-u4*x3", "-x1+u3*x3-u6*x3", "-u8*x3", "-x2-u7*x3", "u7*x3", "-u9*x3"],
        ["u2*x3", "x0+u4*x3", "0", "-u8*x3", "u8*x3", "-x2"],
        ["0", "0", "x0+u1*x3", "x1+u3*x3", "-x1", "u5*x3"],
        ["0", "0", "u2*x3", "u4*x3", "x0", "x1+u6*x3"],
    ]
    .iter()
    .map(|row| r.big_row(row))
    .collect();
    let obstruction = r.params_row(&[
        "u5*u8-u4*u9",
        "u3*u8-u2*u9",
        "u5*u7-u3*u9+u6*u9",
        "u4*u7+u6*u8-u3*u8",
        "u3*u7-u1*u9+u4*u9",
        "u2*u7-u1*u8+u4*u8",
        "u3*u4-u2*u5",
        "u3^2-u1*u5+u4*u5-u3*u6",
        "u2*u3-u1*u4+u4^2-u2*u6",
    ]);
    let presentation = Presentation::Determinantal {
        matrix: vec![r.params_row(&["u5", "u4", "u3-u6"]), r.params_row(&["u9", "u8", "u7"]), r.params_row(&["u3", "u2", "u1-u4"])],
    };
    VersalFamilyData {
        case: VersalCase::J3,
        n: 3,
        m: 9,
        ideal: Ideal::new(4, phi0.clone()).expect("homogeneous generators"),
        phi0,
        phi1,
        trivial: trivial.into_iter().map(|(s, v)| (s.to_string(), v)).collect(),
        nontrivial,
        phi0_lift,
        phi1_lift,
        obstruction,
        presentation,
        corrections: Vec::new(),
    }
}

/// The transcribed data for a case, with the corrections needed for the identities to hold.
pub fn versal_data(case: VersalCase) -> VersalFamilyData {
    match case {
        VersalCase::I124 => i124([false; 5]),
        VersalCase::J3 => j3(),
    }
}

/// The data exactly as printed.
pub fn versal_data_printed(case: VersalCase) -> VersalFamilyData {
    match case {
        VersalCase::I124 => i124([true; 5]),
        VersalCase::J3 => j3(),
    }
}

/// Parse a case tag and return its data.
pub fn versal_data_by_tag(tag: &str) -> Result<VersalFamilyData> {
    Ok(versal_data(tag.parse()?))
}

impl VersalFamilyData {
    fn nvars_big(&self) -> usize {
        self.n + 1 + self.m
    }

    /// Set every `u_i` to zero.
    pub fn specialize(&self, p: &Polynomial) -> Polynomial {
        let base = self.n + 1;
        Polynomial::from_terms(
            base,
            p.terms().iter().filter(|(mon, _)| mon.exps()[base..].iter().all(|&e| e == 0)).map(|(mon, c)| (Monomial::from_exps(&mon.exps()[..base]), c.clone())),
        )
    }

    /// The ideal `I·S[u] + J·S[u]`.
    pub fn flat_ideal(&self) -> Ideal {
        let nv = self.nvars_big();
        let mut gens: Vec<Polynomial> = self.phi0.iter().map(|g| g.extend_vars(nv)).collect();
        let shift: Vec<usize> = (0..self.m).map(|k| self.n + 1 + k).collect();
        gens.extend(self.obstruction.iter().map(|g| g.remap_vars(nv, &shift)));
        Ideal::new_unchecked(nv, gens)
    }

    /// The ideal `J·S[u]`.
    pub fn obstruction_extended(&self) -> Ideal {
        let nv = self.nvars_big();
        let shift: Vec<usize> = (0..self.m).map(|k| self.n + 1 + k).collect();
        Ideal::new_unchecked(nv, self.obstruction.iter().map(|g| g.remap_vars(nv, &shift)).collect())
    }

    /// Column `c` of `φ0^(∞)·φ1^(∞)`.
    pub fn product_entry(&self, c: usize) -> Polynomial {
        let mut acc = Polynomial::zero(self.nvars_big());
        for (r, g) in self.phi0_lift.iter().enumerate() {
            let e = &self.phi1_lift[r][c];
            if !e.is_zero() {
                acc = &acc + &(g * e);
            }
        }
        acc
    }

    pub fn syzygy_count(&self) -> usize {
        self.phi1.first().map_or(0, |r| r.len())
    }

    fn phi1_map(&self) -> GradedMap {
        let rows = self.phi0.len();
        let cols = self.syzygy_count();
        GradedMap {
            nvars: self.n + 1,
            target_degrees: vec![2; rows],
            source_degrees: vec![3; cols],
            columns: (0..cols).map(|c| (0..rows).map(|r| self.phi1[r][c].clone()).collect()).collect(),
        }
    }

    /// The ideal of the stated presentation of `J`.
    pub fn presentation_ideal(&self) -> Ideal {
        match &self.presentation {
            Presentation::DeterminantalUnionLinear { extra, matrix, linear } => {
                let mut g = extra.clone();
                g.extend(minors(matrix, 2));
                let a = Ideal::new_unchecked(self.m, g);
                intersect(&a, &Ideal::new_unchecked(self.m, linear.clone()))
            }
            Presentation::Determinantal { matrix } => Ideal::new_unchecked(self.m, minors(matrix, 2)),
        }
    }

    /// The irreducible pieces named by the presentation.
    pub fn presentation_components(&self) -> Vec<Ideal> {
        match &self.presentation {
            Presentation::DeterminantalUnionLinear { extra, matrix, linear } => {
                let mut g = extra.clone();
                g.extend(minors(matrix, 2));
                vec![Ideal::new_unchecked(self.m, g), Ideal::new_unchecked(self.m, linear.clone())]
            }
            Presentation::Determinantal { matrix } => vec![Ideal::new_unchecked(self.m, minors(matrix, 2))],
        }
    }

    /// Copy with one entry of `φ1^(∞)` replaced.
    pub fn with_phi1_entry(&self, row: usize, col: usize, p: Polynomial) -> Self {
        let mut d = self.clone();
        d.phi1_lift[row][col] = p;
        d
    }
}

/// All `size × size` minors of a polynomial matrix, skipping zeros.
pub fn minors(matrix: &[Vec<Polynomial>], size: usize) -> Vec<Polynomial> {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, |r| r.len());
    let mut out = Vec::new();
    for rs in subsets(rows, size) {
        for cs in subsets(cols, size) {
            let sub: Vec<Vec<Polynomial>> = rs.iter().map(|&r| cs.iter().map(|&c| matrix[r][c].clone()).collect()).collect();
            let d = poly_det(&sub);
            if !d.is_zero() {
                out.push(d);
            }
        }
    }
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Determinant by Laplace expansion along the first row.
fn poly_det(m: &[Vec<Polynomial>]) -> Polynomial {
    match m.len() {
        1 => m[0][0].clone(),
        k => {
            let nv = m[0][0].nvars();
            let mut acc = Polynomial::zero(nv);
            for c in 0..k {
                if m[0][c].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Polynomial>> = m[1..].iter().map(|row| row.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, p)| p.clone()).collect()).collect();
                let t = &m[0][c] * &poly_det(&minor);
                acc = if c % 2 == 0 { &acc + &t } else { &acc - &t };
            }
            acc
        }
    }
}

/// A generic matrix of variables and a minor size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeterminantalSpec {
    pub rows: usize,
    pub cols: usize,
    pub minor: usize,
    /// Number of variables of the ambient ring.
    pub nvars: usize,
    /// Variable index of each entry, row-major.
    pub labels: Vec<usize>,
}

impl DeterminantalSpec {
    /// Entries `u_1..u_{rows·cols}` in row-major order.
    pub fn generic(rows: usize, cols: usize, minor: usize, nvars: usize) -> Self {
        DeterminantalSpec { rows, cols, minor, nvars, labels: (0..rows * cols).collect() }
    }

    /// The `2 × (n-1)` matrix in `u_1..u_{2n-2}` inside `k[u_1..u_{2n}]`.
    pub fn y(n: usize) -> Self {
        Self::generic(2, n.saturating_sub(1), 2, 2 * n)
    }

    /// The `3 × n` matrix in `u_1..u_{3n}`.
    pub fn z(n: usize) -> Self {
        Self::generic(3, n, 2, 3 * n)
    }
}

/// Ideal of all `minor × minor` minors of the spec's matrix.
pub fn determinantal_ideal(spec: &DeterminantalSpec) -> Result<Ideal> {
    if spec.labels.len() != spec.rows * spec.cols {
        return Err(Error::Shape(format!("{} labels for a {}x{} matrix", spec.labels.len(), spec.rows, spec.cols)));
    }
    if spec.minor == 0 || spec.minor > spec.rows.min(spec.cols) {
        return Err(Error::Shape(format!("{}x{} minors of a {}x{} matrix", spec.minor, spec.minor, spec.rows, spec.cols)));
    }
    if let Some(&bad) = spec.labels.iter().find(|&&l| l >= spec.nvars) {
        return Err(Error::VariableOutOfRange { index: bad, max: spec.nvars - 1 });
    }
    let matrix: Vec<Vec<Polynomial>> =
        (0..spec.rows).map(|r| (0..spec.cols).map(|c| Polynomial::var(spec.nvars, spec.labels[r * spec.cols + c])).collect()).collect();
    Ok(Ideal::new_unchecked(spec.nvars, minors(&matrix, spec.minor)))
}

/// Outcome of the lift, flatness and tangent checks.
#[derive(Clone, Debug, Serialize)]
pub struct VersalReport {
    pub case: VersalCase,
    /// `φ0^(∞)` and `φ1^(∞)` reduce to `φ0`, `φ1` at `u = 0`.
    pub phi0_lifts: bool,
    pub phi1_lifts: bool,
    /// `φ0·φ1 = 0` and the columns of `φ1` span the syzygies of `φ0`.
    pub phi1_is_syzygy_matrix: bool,
    /// Every entry of `φ0^(∞)·φ1^(∞)` lies in `I·S[u] + J·S[u]`.
    pub flat: bool,
    /// Columns whose product entry is not in `I·S[u] + J·S[u]`, with the normal form.
    pub flat_failures: Vec<(usize, String)>,
    /// Every entry of the product already lies in `J·S[u]`.
    pub product_in_j: bool,
    pub trivial_valid: bool,
    pub nontrivial_valid: bool,
    pub invalid_vectors: Vec<String>,
    pub tangent_count: usize,
    pub tangent_rank: usize,
    pub hom_dim: usize,
}

impl VersalReport {
    pub fn pass(&self) -> bool {
        self.phi0_lifts
            && self.phi1_lifts
            && self.phi1_is_syzygy_matrix
            && self.flat
            && self.trivial_valid
            && self.nontrivial_valid
            && self.tangent_rank == self.tangent_count
            && self.tangent_count == self.hom_dim
    }
}

/// Columns of the product that fail to lie in `I·S[u] + J·S[u]`.
pub fn flatness_failures(d: &VersalFamilyData) -> Vec<(usize, String)> {
    let gb = d.flat_ideal().grevlex();
    let mut out = Vec::new();
    for c in 0..d.syzygy_count() {
        let nf = gb.normal_form(&d.product_entry(c)).expect("ring sizes agree");
        if !nf.is_zero() {
            out.push((c, nf.to_text()));
        }
    }
    out
}

/// Run the lift, flatness and tangent checks on transcribed data.
pub fn verify_versal_data(d: &VersalFamilyData) -> Result<VersalReport> {
    let phi0_lifts = d.phi0_lift.iter().zip(&d.phi0).all(|(l, p)| d.specialize(l) == *p);
    let phi1_lifts = d.phi1_lift.iter().zip(&d.phi1).all(|(lr, pr)| lr.iter().zip(pr).all(|(l, p)| d.specialize(l) == *p));
    let map = d.phi1_map();
    let composes = (0..d.syzygy_count()).all(|c| {
        let mut acc = Polynomial::zero(d.n + 1);
        for (r, g) in d.phi0.iter().enumerate() {
            acc = &acc + &(g * &d.phi1[r][c]);
        }
        acc.is_zero()
    });
    let phi1_is_syzygy_matrix = composes && column_span_equal(&map, &minimal_syzygies(&d.phi0)?);
    let flat_failures = flatness_failures(d);
    let jgb = d.obstruction_extended().grevlex();
    let mut product_in_j = true;
    for c in 0..d.syzygy_count() {
        if !jgb.contains(&d.product_entry(c))? {
            product_in_j = false;
        }
    }
    let mut invalid_vectors = Vec::new();
    let mut trivial_valid = true;
    for (name, v) in &d.trivial {
        if !is_hom_element(&d.ideal, v)? {
            trivial_valid = false;
            invalid_vectors.push(name.clone());
        }
    }
    let mut nontrivial_valid = true;
    for (name, v) in &d.nontrivial {
        if !is_hom_element(&d.ideal, v)? {
            nontrivial_valid = false;
            invalid_vectors.push(name.clone());
        }
    }
    let fam: Vec<Vec<Polynomial>> = d.trivial.iter().chain(&d.nontrivial).map(|(_, v)| v.clone()).collect();
    Ok(VersalReport {
        case: d.case,
        phi0_lifts,
        phi1_lifts,
        phi1_is_syzygy_matrix,
        flat: flat_failures.is_empty(),
        flat_failures,
        product_in_j,
        trivial_valid,
        nontrivial_valid,
        invalid_vectors,
        tangent_count: fam.len(),
        tangent_rank: hom_rank(&d.ideal, &fam),
        hom_dim: hom_degree_zero_dim(&d.ideal)?,
    })
}

pub fn verify_versal(case: VersalCase) -> Result<VersalReport> {
    verify_versal_data(&versal_data(case))
}

/// Outcome of the obstruction ideal checks.
#[derive(Clone, Debug, Serialize)]
pub struct ObstructionReport {
    pub case: VersalCase,
    pub generators: usize,
    /// `J` equals its stated presentation.
    pub presentation_equal: bool,
    pub component_dims: Vec<usize>,
    pub expected_dims: Vec<usize>,
    pub quotient_dim: usize,
    /// Sum of the two component ideals equals the stated meeting locus.
    pub meet_locus_ok: Option<bool>,
    /// Zariski tangent spaces of the components at the origin span the parameter space.
    pub transverse: Option<bool>,
    pub trivial_count: usize,
}

impl ObstructionReport {
    pub fn pass(&self) -> bool {
        self.presentation_equal && self.component_dims == self.expected_dims && self.meet_locus_ok != Some(false) && self.transverse != Some(false)
    }
}

/// Span of the degree-one generators of a homogeneous ideal, as linear forms.
fn linear_part(i: &Ideal) -> Vec<SparseRow> {
    let mut rows = Vec::new();
    for g in &i.grevlex().elements {
        if g.degree() == 1 && g.is_homogeneous() {
            let mut row: SparseRow = g.terms().iter().map(|(m, c)| (m.max_var().expect("linear monomial"), c.clone())).collect();
            row.sort_by_key(|e| e.0);
            rows.push(row);
        }
    }
    rows
}

fn span_rank(rows: &[SparseRow]) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

pub fn verify_obstruction_ideal(case: VersalCase) -> Result<ObstructionReport> {
    verify_obstruction_data(&versal_data(case))
}

/// Check the stated presentation of the obstruction ideal and its components.
pub fn verify_obstruction_data(d: &VersalFamilyData) -> Result<ObstructionReport> {
    let case = d.case;
    let j = Ideal::new_unchecked(d.m, d.obstruction.clone());
    let presentation_equal = ideal_equal(&j, &d.presentation_ideal());
    let comps = d.presentation_components();
    let component_dims = comps.iter().map(krull_dim).collect::<Result<Vec<_>>>()?;
    let (expected_dims, meet_locus_ok, transverse) = match case {
        VersalCase::I124 => {
            let meet = sum(&comps[0], &comps[1]);
            let locus = Ideal::new_unchecked(d.m, ["u1", "u2", "u3", "u4", "u5", "u7", "u8"].iter().map(|t| parse_u(t, 0, d.m)).collect::<Result<Vec<_>>>()?);
            let a = linear_part(&comps[0]);
            let b = linear_part(&comps[1]);
            let both: Vec<SparseRow> = a.iter().chain(&b).cloned().collect();
            let transverse = span_rank(&a) + span_rank(&b) == span_rank(&both);
            (vec![5, 2], Some(ideal_equal(&meet, &locus)), Some(transverse))
        }
        VersalCase::J3 => (vec![5], None, None),
    };
    Ok(ObstructionReport {
        case,
        generators: d.obstruction.len(),
        presentation_equal,
        component_dims,
        expected_dims,
        quotient_dim: krull_dim(&j)?,
        meet_locus_ok,
        transverse,
        trivial_count: d.trivial.len(),
    })
}

/// Result of perturbing each coefficient of `φ1^(∞)` in turn.
#[derive(Clone, Debug, Serialize)]
pub struct MutationReport {
    pub case: VersalCase,
    pub mutations: usize,
    /// Perturbations after which some product entry leaves `J·S[u]`.
    pub detected: usize,
    /// Perturbations after which some product entry leaves `I·S[u] + J·S[u]`.
    pub detected_mod_i: usize,
    /// `(row, col, monomial)` of perturbations that keep the product in `J·S[u]`.
    pub undetected: Vec<(usize, usize, String)>,
}

impl MutationReport {
    pub fn pass(&self) -> bool {
        self.mutations > 0 && self.undetected.is_empty()
    }
}

/// Add one to each coefficient of `φ1^(∞)` separately and recheck the affected column.
///
/// Multiplying a generator of `I` by a monomial keeps it in `I·S[u]`, so the weaker
/// membership test misses some perturbations; detection uses `J·S[u]`.
pub fn mutation_scan(case: VersalCase) -> MutationReport {
    let d = versal_data(case);
    let flat = d.flat_ideal().grevlex();
    let strict = d.obstruction_extended().grevlex();
    let one = rat(1);
    let mut mutations = 0;
    let mut detected_mod_i = 0;
    let mut undetected = Vec::new();
    for r in 0..d.phi0.len() {
        for c in 0..d.syzygy_count() {
            for (mono, _) in d.phi1_lift[r][c].terms() {
                mutations += 1;
                let bump = Polynomial::term(mono.clone(), one.clone());
                let entry = d.with_phi1_entry(r, c, &d.phi1_lift[r][c] + &bump).product_entry(c);
                if !flat.contains(&entry).expect("ring sizes agree") {
                    detected_mod_i += 1;
                }
                if strict.contains(&entry).expect("ring sizes agree") {
                    undetected.push((r, c, mono.to_text()));
                }
            }
        }
    }
    MutationReport { case, mutations, detected: mutations - undetected.len(), detected_mod_i, undetected }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tags() {
        assert_eq!("i124".parse::<VersalCase>().unwrap(), VersalCase::I124);
        assert_eq!("j3".parse::<VersalCase>().unwrap(), VersalCase::J3);
        assert!("j4".parse::<VersalCase>().is_err());
    }

    #[test]
    fn shapes() {
        let a = versal_data(VersalCase::I124);
        assert_eq!((a.m, a.trivial.len(), a.obstruction.len()), (8, 10, 9));
        assert_eq!(versal_data_printed(VersalCase::I124).obstruction.len(), 8);
        let b = versal_data(VersalCase::J3);
        assert_eq!((b.m, b.trivial.len(), b.obstruction.len()), (9, 5, 9));
    }

    #[test]
    fn parse_u_offsets() {
        let p = parse_u("u1*x0+u10", 2, 13).unwrap();
        assert_eq!(p.to_text(), parse_poly("x2*x0+x11", 12).unwrap().to_text());
    }

    #[test]
    fn determinantal_shapes() {
        assert_eq!(determinantal_ideal(&DeterminantalSpec::y(4)).unwrap().gens().len(), 3);
        assert_eq!(determinantal_ideal(&DeterminantalSpec::z(3)).unwrap().gens().len(), 9);
        let lin = determinantal_ideal(&DeterminantalSpec::generic(2, 3, 1, 6)).unwrap();
        assert!(ideal_equal(&lin, &Ideal::maximal(6)));
        assert!(determinantal_ideal(&DeterminantalSpec::generic(2, 3, 3, 6)).is_err());
    }

    #[test]
    fn corrected_data_verifies() {
        for c in VersalCase::all() {
            let v = verify_versal(c).unwrap();
            assert!(v.pass(), "{v:?}");
            assert!(v.product_in_j);
            let o = verify_obstruction_ideal(c).unwrap();
            assert!(o.pass(), "{o:?}");
        }
    }

    #[test]
    fn each_correction_is_needed() {
        for k in 0..5 {
            let mut mask = [false; 5];
            mask[k] = true;
            let d = i124(mask);
            assert_eq!(d.corrections.len(), 4);
            let v = verify_versal_data(&d).unwrap();
            let o = verify_obstruction_data(&d).unwrap();
            assert!(!(v.pass() && o.pass()), "correction {k} is redundant");
        }
    }

    #[test]
    fn printed_data_fails() {
        let d = versal_data_printed(VersalCase::I124);
        let v = verify_versal_data(&d).unwrap();
        assert!(!v.flat);
        assert_eq!(v.invalid_vectors, vec!["t02".to_string(), "t03".to_string()]);
        assert!(!verify_obstruction_data(&d).unwrap().presentation_equal);
        let j = verify_versal_data(&versal_data_printed(VersalCase::J3)).unwrap();
        assert!(j.pass());
    }

    #[test]
    fn mutations_are_caught() {
        for c in VersalCase::all() {
            let m = mutation_scan(c);
            assert!(m.pass(), "{m:?}");
            assert!(m.detected_mod_i < m.mutations);
        }
    }
}
