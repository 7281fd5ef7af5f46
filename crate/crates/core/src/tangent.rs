//! Degree-zero homomorphisms `Hom(I, S/I)_0`, the tangent space to the Hilbert scheme at `[I]`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::groebner::{GroebnerBasis, Ideal};
use crate::linalg::{Echelon, Indexer, SparseRow};
use crate::poly::{Monomial, MonomialOrder, Polynomial};
use crate::resolution::{minimal_syzygies, GradedMap};

/// Normal forms modulo a Gröbner basis, cached per monomial.
pub struct Reducer<'a> {
    gb: &'a GroebnerBasis,
    lead: Vec<Monomial>,
    cache: HashMap<Monomial, Polynomial>,
}

impl<'a> Reducer<'a> {
    pub fn new(gb: &'a GroebnerBasis) -> Self {
        Reducer { gb, lead: gb.leading_monomials(), cache: HashMap::new() }
    }

    pub fn is_standard(&self, m: &Monomial) -> bool {
        !self.lead.iter().any(|l| l.divides(m))
    }

    fn monomial_nf(&mut self, m: &Monomial) -> Polynomial {
        if let Some(p) = self.cache.get(m) {
            return p.clone();
        }
        let p = if self.is_standard(m) {
            Polynomial::monomial(m.clone())
        } else {
            self.gb.normal_form(&Polynomial::monomial(m.clone())).expect("same ring")
        };
        self.cache.insert(m.clone(), p.clone());
        p
    }

    /// Normal form of `p`, by linearity over its terms.
    pub fn reduce(&mut self, p: &Polynomial) -> Polynomial {
        let mut terms = Vec::new();
        for (m, c) in p.terms() {
            for (t, a) in self.monomial_nf(m).terms() {
                terms.push((t.clone(), a * c));
            }
        }
        Polynomial::from_terms(p.nvars(), terms)
    }

    /// Standard monomials of degree `d`.
    pub fn standard_monomials(&self, nvars: usize, d: u32) -> Vec<Monomial> {
        Monomial::all_of_degree(nvars, d).into_iter().filter(|m| self.is_standard(m)).collect()
    }
}

/// The linear system whose solutions are `Hom(I, S/I)_0`.
pub struct HomSystem {
    /// For generator `i`, the standard monomials of degree `deg g_i`.
    pub blocks: Vec<Vec<Monomial>>,
    pub unknowns: usize,
    pub rank: usize,
}

impl HomSystem {
    pub fn dimension(&self) -> usize {
        self.unknowns - self.rank
    }
}

fn check_input(i: &Ideal) -> Result<Vec<Polynomial>> {
    if !i.is_homogeneous() {
        return Err(Error::NotHomogeneous(i.to_string()));
    }
    let gens: Vec<Polynomial> = i.gens().iter().filter(|g| !g.is_zero()).cloned().collect();
    if gens.is_empty() {
        return Err(Error::Shape("zero ideal".into()));
    }
    Ok(gens)
}

/// Assemble and rank the system using standard monomials of the `ord` Gröbner basis.
pub fn hom_system(i: &Ideal, ord: &MonomialOrder) -> Result<HomSystem> {
    let gens = check_input(i)?;
    let syz = minimal_syzygies(&gens)?;
    let gb = i.gb(ord);
    let mut red = Reducer::new(&gb);
    let nv = i.nvars();
    let blocks: Vec<Vec<Monomial>> = gens.iter().map(|g| red.standard_monomials(nv, g.degree())).collect();
    let mut index: Indexer<(usize, Monomial)> = Indexer::default();
    let mut ech = Echelon::new();
    let mut unknowns = 0;
    for (gi, block) in blocks.iter().enumerate() {
        for b in block {
            unknowns += 1;
            ech.insert(&constraint_column(&syz, gi, b, &mut red, &mut index));
        }
    }
    Ok(HomSystem { blocks, unknowns, rank: ech.rank() })
}

/// Image of the unknown `φ(g_gi) = b` under every syzygy relation, reduced mod `I`.
fn constraint_column(syz: &GradedMap, gi: usize, b: &Monomial, red: &mut Reducer, index: &mut Indexer<(usize, Monomial)>) -> SparseRow {
    let mut row: SparseRow = Vec::new();
    for (j, col) in syz.columns.iter().enumerate() {
        let s = &col[gi];
        if s.is_zero() {
            continue;
        }
        let prod = s.mul_term(b, &crate::poly::rat(1));
        for (m, c) in red.reduce(&prod).terms() {
            row.push((index.index(&(j, m.clone())), c.clone()));
        }
    }
    row.sort_by_key(|e| e.0);
    row
}

/// `dim_k Hom(I, S/I)_0`.
pub fn hom_degree_zero_dim(i: &Ideal) -> Result<usize> {
    Ok(hom_system(i, &MonomialOrder::Grevlex)?.dimension())
}

/// Same dimension computed with standard monomials of another order.
pub fn hom_degree_zero_dim_with_order(i: &Ideal, ord: &MonomialOrder) -> Result<usize> {
    Ok(hom_system(i, ord)?.dimension())
}

/// Dimension of the component of `(c,d)`-plane pairs in `P^n`.
pub fn expected_component_dim(c: usize, d: usize, n: usize) -> Result<usize> {
    if c > d || d > n {
        return Err(Error::OutOfRange(format!("(c,d,n)=({c},{d},{n})")));
    }
    Ok((n - c) * (c + 1) + (n - d) * (d + 1))
}

/// Whether `images[i] = φ(g_i)` defines an element of `Hom(I, S/I)_0`.
pub fn is_hom_element(i: &Ideal, images: &[Polynomial]) -> Result<bool> {
    let gens = check_input(i)?;
    if images.len() != gens.len() {
        return Err(Error::Shape(format!("{} images for {} generators", images.len(), gens.len())));
    }
    for (g, v) in gens.iter().zip(images) {
        if !v.is_zero() && (!v.is_homogeneous() || v.degree() != g.degree()) {
            return Ok(false);
        }
    }
    let syz = minimal_syzygies(&gens)?;
    let gb = i.grevlex();
    for col in &syz.columns {
        let mut acc = Polynomial::zero(i.nvars());
        for (s, v) in col.iter().zip(images) {
            if !s.is_zero() && !v.is_zero() {
                acc = &acc + &(s * v);
            }
        }
        if !gb.contains(&acc)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Rank of a family of homomorphisms, each given by generator images, modulo `I`.
pub fn hom_rank(i: &Ideal, families: &[Vec<Polynomial>]) -> usize {
    let gb = i.grevlex();
    let mut red = Reducer::new(&gb);
    let mut index: Indexer<(usize, Monomial)> = Indexer::default();
    let mut ech = Echelon::new();
    for imgs in families {
        let mut row: SparseRow = Vec::new();
        for (k, v) in imgs.iter().enumerate() {
            for (m, c) in red.reduce(v).terms() {
                row.push((index.index(&(k, m.clone())), c.clone()));
            }
        }
        row.sort_by_key(|e| e.0);
        ech.insert(&row);
    }
    ech.rank()
}
