//! Alexander matrices from Fox calculus, the Alexander polynomial, and
//! the per-torsion-character analysis of the first characteristic
//! variety.

use std::collections::BTreeMap;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, ToPrimitive, Zero};

use crate::cyclotomic::Cyclotomic;
use crate::gcd::{CycField, IntRing};
use crate::laurent::LaurentPoly;
use crate::presentation::{abelianize, fox_derivative, AbelianizationData, GroupPresentation};

type Int = BigInt;

/// Element of Z[Z^n + torsion]: exponent vector on the free part,
/// canonical residue vector on the torsion part.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GroupAlgebraElem {
    pub terms: BTreeMap<(Vec<i64>, Vec<i64>), Int>,
}

impl GroupAlgebraElem {
    fn add_term(&mut self, key: (Vec<i64>, Vec<i64>), c: Int) {
        if c.is_zero() {
            return;
        }
        let new = match self.terms.get(&key) {
            Some(v) => v + &c,
            None => c,
        };
        if new.is_zero() {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, new);
        }
    }
}

/// The abelianized Fox Jacobian: entry (i, j) is ab(d_j r_i).
#[derive(Debug, Clone)]
pub struct AlexanderMatrix {
    pub rank: usize,
    pub torsion_invariants: Vec<u64>,
    pub entries: Vec<Vec<GroupAlgebraElem>>,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum AlexError {
    #[error("first Betti number is zero; Alexander polynomial unsupported")]
    BettiZero,
    #[error("fewer than m-1 relators: no minors of size m-1")]
    TooFewRelators,
    #[error("torsion order {0} exceeds the cyclotomic limit {1}")]
    TorsionTooLarge(u64, u64),
}

pub fn alexander_matrix(p: &GroupPresentation) -> (AbelianizationData, AlexanderMatrix) {
    let ab = abelianize(p);
    let m = p.num_generators;
    let entries = p
        .relators
        .iter()
        .map(|r| {
            (1..=m)
                .map(|j| {
                    let d = fox_derivative(r, j);
                    let mut e = GroupAlgebraElem::default();
                    for (w, c) in &d.terms {
                        let free: Vec<i64> = ab
                            .free_image(w, m)
                            .iter()
                            .map(|x| x.to_i64().expect("desk-scale exponent"))
                            .collect();
                        let tors: Vec<i64> = ab
                            .torsion_image(w, m)
                            .iter()
                            .map(|x| x.to_i64().expect("small torsion"))
                            .collect();
                        e.add_term((free, tors), c.clone());
                    }
                    e
                })
                .collect()
        })
        .collect();
    let torsion_invariants = ab
        .torsion_invariants
        .iter()
        .map(|d| d.to_u64().expect("small torsion"))
        .collect();
    (ab.clone(), AlexanderMatrix { rank: ab.rank, torsion_invariants, entries })
}

/// Push an entry to the torsion-free quotient: torsion dies.
fn entry_to_free(e: &GroupAlgebraElem, n: usize) -> LaurentPoly<IntRing> {
    let mut p = LaurentPoly::zero(IntRing, n);
    for ((free, _tors), c) in &e.terms {
        p.add_term(free.clone(), c.clone());
    }
    p
}

/// Evaluate an entry at a torsion character. The character sends the
/// j-th torsion generator to zeta_M^(k_j M/d_j).
pub fn specialize_torsion(
    m_entry: &GroupAlgebraElem,
    n: usize,
    invariants: &[u64],
    character: &[u64],
    order: u64,
) -> LaurentPoly<CycField> {
    let field = CycField(order);
    let mut p = LaurentPoly::zero(field, n);
    for ((free, tors), c) in &m_entry.terms {
        let mut exp_on_zeta: u64 = 0;
        for ((&t, &d), &k) in tors.iter().zip(invariants).zip(character) {
            let step = order / d;
            exp_on_zeta = (exp_on_zeta + (t as u64 % d) * k * step) % order;
        }
        let z = Cyclotomic::root_of_unity(order, exp_on_zeta);
        let c_rat = Cyclotomic::from_rational(order, BigRational::from(c.clone()));
        p.add_term(free.clone(), z.mul(&c_rat));
    }
    p
}

fn det<R: crate::gcd::Ring>(
    ring: &R,
    m: &[Vec<LaurentPoly<R>>],
    n_vars: usize,
) -> LaurentPoly<R> {
    let k = m.len();
    if k == 0 {
        return LaurentPoly::one(ring.clone(), n_vars);
    }
    if k == 1 {
        return m[0][0].clone();
    }
    // Laplace expansion along the first row
    let mut acc = LaurentPoly::zero(ring.clone(), n_vars);
    for j in 0..k {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<LaurentPoly<R>>> = (1..k)
            .map(|i| (0..k).filter(|&c| c != j).map(|c| m[i][c].clone()).collect())
            .collect();
        let sub = m[0][j].mul(&det(ring, &minor, n_vars));
        acc = if j % 2 == 0 { acc.add(&sub) } else { acc.sub(&sub) };
    }
    acc
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
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
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// All minors of size m-1 of the matrix of Laurent polynomials.
fn size_minors<R: crate::gcd::Ring>(
    ring: &R,
    mat: &[Vec<LaurentPoly<R>>],
    size: usize,
    n_vars: usize,
) -> Vec<LaurentPoly<R>> {
    let rows = mat.len();
    let cols = mat.first().map_or(0, |r| r.len());
    if size == 0 {
        return vec![LaurentPoly::one(ring.clone(), n_vars)];
    }
    if rows < size || cols < size {
        return Vec::new();
    }
    let mut out = Vec::new();
    for rs in subsets(rows, size) {
        for cs in subsets(cols, size) {
            let sub: Vec<Vec<LaurentPoly<R>>> = rs
                .iter()
                .map(|&i| cs.iter().map(|&j| mat[i][j].clone()).collect())
                .collect();
            out.push(det(ring, &sub, n_vars));
        }
    }
    out
}

/// Alexander polynomial: gcd of the (m-1)-minors of the Fox Jacobian
/// pushed to the maximal torsion-free abelian quotient; canonical form.
pub fn alexander_polynomial(p: &GroupPresentation) -> Result<LaurentPoly<IntRing>, AlexError> {
    let (ab, mat) = alexander_matrix(p);
    let n = ab.rank;
    if n == 0 {
        return Err(AlexError::BettiZero);
    }
    let m = p.num_generators;
    if m >= 1 && p.relators.len() < m - 1 {
        return Err(AlexError::TooFewRelators);
    }
    let free_mat: Vec<Vec<LaurentPoly<IntRing>>> = mat
        .entries
        .iter()
        .map(|row| row.iter().map(|e| entry_to_free(e, n)).collect())
        .collect();
    let minors = size_minors(&IntRing, &free_mat, m - 1, n);
    let mut g = LaurentPoly::zero(IntRing, n);
    for mnr in &minors {
        g = g.gcd(mnr);
    }
    Ok(g.normalize())
}

/// Outcome of the minor analysis at a fixed torsion character.
#[derive(Debug, Clone, PartialEq)]
pub enum Outcome {
    /// All minors vanish: the whole translated torus lies in V^1.
    Full,
    /// Nontrivial gcd of the minors.
    Hypersurface(LaurentPoly<CycField>),
    /// The gcd is a unit: at most finitely many points beyond {1}.
    FiniteOrEmpty,
}

#[derive(Debug, Clone, PartialEq)]
pub enum CharComponent {
    /// Computed from a presentation at a torsion character.
    Computed { character: Vec<u64>, outcome: Outcome },
    /// Translated subtorus given directly: row basis of the lattice L,
    /// rational translation q (mod Z^n), torsion translation residues.
    Direct {
        lattice: Vec<Vec<i64>>,
        translation_q: Vec<BigRational>,
        torsion_translation: Vec<u64>,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct CharVarietyDescription {
    pub rank: usize,
    pub torsion_invariants: Vec<u64>,
    pub components: Vec<CharComponent>,
}

/// Minor analysis of V^1 per torsion character, away from 1.
pub fn component_analysis(
    p: &GroupPresentation,
    max_cyclotomic: u64,
) -> Result<CharVarietyDescription, AlexError> {
    let (ab, mat) = alexander_matrix(p);
    let n = ab.rank;
    let m = p.num_generators;
    let invariants = mat.torsion_invariants.clone();
    let order = invariants.iter().fold(1u64, |acc, d| acc.lcm(d));
    if order > max_cyclotomic {
        return Err(AlexError::TorsionTooLarge(order, max_cyclotomic));
    }
    let mut characters: Vec<Vec<u64>> = vec![vec![]];
    for &d in &invariants {
        characters = characters
            .into_iter()
            .flat_map(|c| {
                (0..d).map(move |k| {
                    let mut c2 = c.clone();
                    c2.push(k);
                    c2
                })
            })
            .collect();
    }
    let field = CycField(order);
    let mut components = Vec::new();
    for character in characters {
        let outcome = if m >= 1 && p.relators.len() < m - 1 {
            // no minors exist: the defining ideal is zero
            Outcome::Full
        } else {
            let spec: Vec<Vec<LaurentPoly<CycField>>> = mat
                .entries
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|e| specialize_torsion(e, n, &invariants, &character, order))
                        .collect()
                })
                .collect();
            let minors = size_minors(&field, &spec, m - 1, n);
            if minors.iter().all(|mm| mm.is_zero()) && m > 1 {
                Outcome::Full
            } else {
                let mut g = LaurentPoly::zero(field, n);
                for mm in &minors {
                    g = g.gcd(mm);
                }
                if g.is_zero() || g.is_unit() {
                    Outcome::FiniteOrEmpty
                } else {
                    Outcome::Hypersurface(g.normalize())
                }
            }
        };
        components.push(CharComponent::Computed { character, outcome });
    }
    Ok(CharVarietyDescription { rank: n, torsion_invariants: invariants, components })
}
