//! Constant-coefficient tropicalization: corner loci, hypersurface
//! tropicalizations as normal-fan skeleta, translated subtori, the
//! exponential tangent cone, and tropicalized characteristic varieties.

use num::rational::BigRational;
use num::Zero;

use crate::alexander::{CharComponent, CharVarietyDescription, Outcome};
use crate::gcd::Ring;
use crate::laurent::LaurentPoly;
use crate::linalg::{integer_nullspace, primitivize, rational_solve, IMat, Int};
use crate::polyhedra::{convex_hull, in_support, rat_point, skeleton, Fan, Rat};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum TropError {
    #[error("zero polynomial has no tropicalization")]
    ZeroPolynomial,
    #[error("monomial unit: the hypersurface is empty")]
    MonomialUnit,
    #[error("dimension mismatch")]
    DimMismatch,
    #[error("pushforward matrix is not injective")]
    NotInjective,
}

/// `min_u w.u` over the support, and how many support points attain it.
pub fn trop_eval<R: Ring>(
    f: &LaurentPoly<R>,
    w: &[Rat],
) -> Result<(Rat, usize), TropError> {
    if f.is_zero() {
        return Err(TropError::ZeroPolynomial);
    }
    let vals: Vec<Rat> = f
        .support()
        .iter()
        .map(|u| u.iter().zip(w).map(|(&e, x)| Rat::from(Int::from(e)) * x).sum())
        .collect();
    let min = vals.iter().min().cloned().unwrap();
    let count = vals.iter().filter(|v| **v == min).count();
    Ok((min, count))
}

/// One piece of a tropicalized variety.
#[derive(Debug, Clone, PartialEq)]
pub enum TropPiece {
    /// Positive-codimension skeleton of the inner normal fan of the
    /// Newton polytope with the given support.
    Hypersurface { support: Vec<Vec<i64>>, fan: Fan },
    /// Rational linear subspace, primitive integer row basis (possibly
    /// empty: the origin).
    Subspace { basis: Vec<Vec<i64>> },
    /// Image of another tropical set under an injective integer matrix.
    Image { matrix: IMat, inner: Box<TropSet> },
}

#[derive(Debug, Clone, PartialEq)]
pub enum TropSet {
    Empty { ambient: usize },
    FullSpace { ambient: usize },
    Union { ambient: usize, pieces: Vec<TropPiece> },
}

impl TropSet {
    pub fn ambient(&self) -> usize {
        match self {
            TropSet::Empty { ambient }
            | TropSet::FullSpace { ambient }
            | TropSet::Union { ambient, .. } => *ambient,
        }
    }

    pub fn is_full(&self) -> bool {
        matches!(self, TropSet::FullSpace { .. })
    }

    pub fn contains(&self, w: &[Rat]) -> bool {
        match self {
            TropSet::Empty { .. } => false,
            TropSet::FullSpace { .. } => true,
            TropSet::Union { pieces, .. } => pieces.iter().any(|p| p.contains(w)),
        }
    }

    pub fn contains_int(&self, w: &[i64]) -> bool {
        self.contains(&rat_point(w))
    }

    /// Primitive ray directions appearing in the pieces (rays of
    /// hypersurface fans plus both orientations of one-dimensional
    /// lineality/subspace generators). For two-dimensional ambient space
    /// this is the full trace on the circle; `None` for a full space.
    pub fn circle_directions(&self) -> Option<Vec<Vec<i64>>> {
        match self {
            TropSet::Empty { .. } => Some(vec![]),
            TropSet::FullSpace { .. } => None,
            TropSet::Union { pieces, .. } => {
                let mut dirs: Vec<Vec<i64>> = Vec::new();
                for p in pieces {
                    match p {
                        TropPiece::Hypersurface { fan, .. } => {
                            for c in &fan.maximal_cones {
                                for r in &c.rays {
                                    push_dir(&mut dirs, r);
                                }
                                for l in &c.lineality {
                                    push_dir(&mut dirs, l);
                                    let neg: Vec<Int> = l.iter().map(|x| -x.clone()).collect();
                                    push_dir(&mut dirs, &neg);
                                }
                            }
                        }
                        TropPiece::Subspace { basis } => {
                            if basis.len() == 1 {
                                let b: Vec<Int> = basis[0].iter().map(|&x| Int::from(x)).collect();
                                push_dir(&mut dirs, &b);
                                let neg: Vec<Int> = b.iter().map(|x| -x.clone()).collect();
                                push_dir(&mut dirs, &neg);
                            } else if basis.len() >= 2 {
                                return None; // full plane in a rank-2 ambient
                            }
                        }
                        TropPiece::Image { matrix, inner } => {
                            let inner_dirs = inner.circle_directions()?;
                            for d in inner_dirs {
                                let v: Vec<Int> = d.iter().map(|&x| Int::from(x)).collect();
                                push_dir(&mut dirs, &matrix.mul_vec(&v));
                            }
                        }
                    }
                }
                dirs.sort();
                dirs.dedup();
                Some(dirs)
            }
        }
    }
}

fn push_dir(dirs: &mut Vec<Vec<i64>>, v: &[Int]) {
    if v.iter().all(|x| x.is_zero()) {
        return;
    }
    let p = primitivize(v);
    let d: Vec<i64> = p.iter().map(|x| i64::try_from(x).expect("desk scale")).collect();
    if !dirs.contains(&d) {
        dirs.push(d);
    }
}

impl TropPiece {
    pub fn contains(&self, w: &[Rat]) -> bool {
        match self {
            TropPiece::Hypersurface { fan, .. } => in_support(fan, w),
            TropPiece::Subspace { basis } => {
                if basis.is_empty() {
                    return w.iter().all(|x| x.is_zero());
                }
                // w in row span of basis?
                let ambient = w.len();
                let a: Vec<Vec<Rat>> = (0..ambient)
                    .map(|i| basis.iter().map(|b| Rat::from(Int::from(b[i]))).collect())
                    .collect();
                rational_solve(&a, w).is_some()
            }
            TropPiece::Image { matrix, inner } => {
                // injective matrix: at most one preimage
                let a: Vec<Vec<Rat>> = matrix
                    .data
                    .iter()
                    .map(|row| row.iter().map(|x| Rat::from(x.clone())).collect())
                    .collect();
                match rational_solve(&a, w) {
                    Some(v) => inner.contains(&v),
                    None => false,
                }
            }
        }
    }
}

/// Tropicalization of the hypersurface V(f): the positive-codimension
/// skeleton of the inner normal fan of Newt(f).
pub fn trop_hypersurface<R: Ring>(f: &LaurentPoly<R>) -> Result<TropSet, TropError> {
    if f.is_zero() {
        return Err(TropError::ZeroPolynomial);
    }
    let support = f.support();
    let n = f.num_vars;
    if support.len() == 1 {
        return Err(TropError::MonomialUnit);
    }
    let pts: Vec<Vec<Rat>> = support.iter().map(|e| rat_point(e)).collect();
    let hull = convex_hull(&pts).expect("nonempty support");
    let fan = skeleton(&hull);
    Ok(TropSet::Union { ambient: n, pieces: vec![TropPiece::Hypersurface { support, fan }] })
}

/// A translated subtorus of the character torus.
#[derive(Debug, Clone, PartialEq)]
pub struct TranslatedTorus {
    /// Primitive integer row basis of the lattice L.
    pub lattice: Vec<Vec<i64>>,
    /// Rational translation character on the free part, mod Z^n.
    pub translation_q: Vec<BigRational>,
    /// Translation residues in the ambient torsion group.
    pub torsion_translation: Vec<u64>,
}

/// Trop of a union of translated subtori: the translations are
/// irrelevant, only the lattices survive.
pub fn trop_translated_tori(n: usize, components: &[TranslatedTorus]) -> TropSet {
    let mut pieces = Vec::new();
    for c in components {
        let rank = lattice_rank(n, &c.lattice);
        if rank == n {
            return TropSet::FullSpace { ambient: n };
        }
        pieces.push(TropPiece::Subspace { basis: c.lattice.clone() });
    }
    if pieces.is_empty() {
        TropSet::Empty { ambient: n }
    } else {
        TropSet::Union { ambient: n, pieces }
    }
}

fn lattice_rank(n: usize, basis: &[Vec<i64>]) -> usize {
    if basis.is_empty() {
        return 0;
    }
    let m = IMat::from_i64(basis);
    assert_eq!(m.cols, n);
    m.rank()
}

/// Union of rational linear subspaces, primitive row bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceUnion {
    pub ambient: usize,
    pub subspaces: Vec<Vec<Vec<i64>>>,
}

impl SubspaceUnion {
    pub fn contains(&self, w: &[Rat]) -> bool {
        self.subspaces.iter().any(|basis| {
            TropPiece::Subspace { basis: basis.clone() }.contains(w)
        })
    }
}

/// Is the translation trivial up to the subtorus, i.e. does the coset
/// rho T meet T? True iff q lies in L (x) Q + Z^n and the torsion part
/// vanishes.
pub fn translation_is_effective_trivial(n: usize, t: &TranslatedTorus) -> bool {
    if t.torsion_translation.iter().any(|&x| x != 0) {
        return false;
    }
    if t.translation_q.iter().all(|q| q.is_integer()) {
        return true;
    }
    // q in span_Q(L) + Z^n iff y.q in Z for every integer y with y L = 0
    let rows: Vec<Vec<i64>> = if t.lattice.is_empty() {
        vec![vec![0; n]]
    } else {
        t.lattice.clone()
    };
    let perp = integer_nullspace(&IMat::from_i64(&rows));
    for y in &perp {
        let dot: Rat = y
            .iter()
            .zip(&t.translation_q)
            .map(|(a, b)| Rat::from(a.clone()) * b)
            .sum();
        if !dot.is_integer() {
            return false;
        }
    }
    true
}

/// Exponential tangent cone of a union of translated subtori: only the
/// components whose translation is trivial up to the subtorus survive.
pub fn exp_tangent_cone(n: usize, components: &[TranslatedTorus]) -> SubspaceUnion {
    let mut subspaces: Vec<Vec<Vec<i64>>> = Vec::new();
    for c in components {
        if translation_is_effective_trivial(n, c) {
            subspaces.push(c.lattice.clone());
        }
    }
    // drop subspaces contained in another listed subspace
    let mut keep = Vec::new();
    for (i, s) in subspaces.iter().enumerate() {
        let nested = subspaces.iter().enumerate().any(|(j, t)| {
            i != j
                && (lattice_rank(n, t) > lattice_rank(n, s)
                    || (lattice_rank(n, t) == lattice_rank(n, s) && j < i))
                && s.iter().all(|row| {
                    let w: Vec<Rat> = row.iter().map(|&x| Rat::from(Int::from(x))).collect();
                    TropPiece::Subspace { basis: t.clone() }.contains(&w)
                })
        });
        if !nested {
            keep.push(s.clone());
        }
    }
    SubspaceUnion { ambient: n, subspaces: keep }
}

/// Tropicalize a characteristic-variety description: the union over
/// components.
pub fn trop_char_variety(d: &CharVarietyDescription) -> TropSet {
    let n = d.rank;
    let mut pieces: Vec<TropPiece> = Vec::new();
    let mut tori: Vec<TranslatedTorus> = Vec::new();
    for comp in &d.components {
        match comp {
            CharComponent::Computed { character, outcome } => match outcome {
                Outcome::Full => return TropSet::FullSpace { ambient: n },
                Outcome::Hypersurface(h) => {
                    match trop_hypersurface(h) {
                        Ok(TropSet::Union { pieces: mut ps, .. }) => pieces.append(&mut ps),
                        Ok(_) => {}
                        Err(_) => {} // monomial: empty away from 1
                    }
                    if character.iter().all(|&k| k == 0) {
                        // the identity lies in V^1: contribute the origin
                        pieces.push(TropPiece::Subspace { basis: vec![] });
                    }
                }
                Outcome::FiniteOrEmpty => {
                    if character.iter().all(|&k| k == 0) {
                        pieces.push(TropPiece::Subspace { basis: vec![] });
                    }
                }
            },
            CharComponent::Direct { lattice, translation_q, torsion_translation } => {
                tori.push(TranslatedTorus {
                    lattice: lattice.clone(),
                    translation_q: translation_q.clone(),
                    torsion_translation: torsion_translation.clone(),
                });
            }
        }
    }
    match trop_translated_tori(n, &tori) {
        TropSet::FullSpace { ambient } => return TropSet::FullSpace { ambient },
        TropSet::Union { pieces: mut ps, .. } => pieces.append(&mut ps),
        TropSet::Empty { .. } => {}
    }
    if pieces.is_empty() {
        TropSet::Empty { ambient: n }
    } else {
        TropSet::Union { ambient: n, pieces }
    }
}

/// Pushforward along an injective integer matrix (target x source).
pub fn trop_pushforward(t: &TropSet, a: &IMat) -> Result<TropSet, TropError> {
    if a.cols != t.ambient() {
        return Err(TropError::DimMismatch);
    }
    if a.rank() < a.cols {
        return Err(TropError::NotInjective);
    }
    let ambient = a.rows;
    match t {
        TropSet::Empty { .. } => Ok(TropSet::Empty { ambient }),
        TropSet::FullSpace { .. } => {
            // the image subspace, spanned by the columns of the matrix
            let basis: Vec<Vec<i64>> = (0..a.cols)
                .map(|j| {
                    let col: Vec<Int> = (0..a.rows).map(|i| a.data[i][j].clone()).collect();
                    primitivize(&col)
                        .iter()
                        .map(|x| i64::try_from(x).expect("desk scale"))
                        .collect()
                })
                .collect();
            Ok(TropSet::Union { ambient, pieces: vec![TropPiece::Subspace { basis }] })
        }
        TropSet::Union { pieces, .. } => {
            let mut out = Vec::new();
            for p in pieces {
                match p {
                    TropPiece::Subspace { basis } => {
                        let mapped: Vec<Vec<i64>> = basis
                            .iter()
                            .map(|b| {
                                let v: Vec<Int> = b.iter().map(|&x| Int::from(x)).collect();
                                primitivize(&a.mul_vec(&v))
                                    .iter()
                                    .map(|x| i64::try_from(x).expect("desk scale"))
                                    .collect()
                            })
                            .collect();
                        out.push(TropPiece::Subspace { basis: mapped });
                    }
                    other => out.push(TropPiece::Image {
                        matrix: a.clone(),
                        inner: Box::new(TropSet::Union {
                            ambient: t.ambient(),
                            pieces: vec![other.clone()],
                        }),
                    }),
                }
            }
            Ok(TropSet::Union { ambient, pieces: out })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::parse_laurent;
    use crate::gcd::IntRing;
    use num::One;

    fn rp(v: &[i64]) -> Vec<Rat> {
        rat_point(v)
    }

    fn rq(nums: &[(i64, i64)]) -> Vec<Rat> {
        nums.iter().map(|&(p, q)| Rat::new(Int::from(p), Int::from(q))).collect()
    }

    #[test]
    fn eval_examples() {
        let f = parse_laurent("t1 + t2 + 1", 2).unwrap();
        assert_eq!(trop_eval(&f, &rp(&[0, 0])).unwrap(), (Rat::zero(), 3));
        assert_eq!(trop_eval(&f, &rp(&[1, 1])).unwrap(), (Rat::zero(), 1));
        let d = parse_laurent("t1^2*t2 + t1*t2^2 + t1 + t2 - 4*t1*t2", 2).unwrap();
        let (v, c) = trop_eval(&d, &rp(&[1, 1])).unwrap();
        assert_eq!(v, Rat::from(Int::one()));
        assert_eq!(c, 2);
    }

    #[test]
    fn hypersurface_line() {
        let f = parse_laurent("t2 + 1", 2).unwrap();
        let t = trop_hypersurface(&f).unwrap();
        assert!(t.contains(&rp(&[5, 0])));
        assert!(t.contains(&rp(&[-3, 0])));
        assert!(!t.contains(&rp(&[0, 1])));
        assert_eq!(t.circle_directions(), Some(vec![vec![-1, 0], vec![1, 0]]));
    }

    #[test]
    fn hypersurface_hopf_plane() {
        let f = parse_laurent("t1*t2*t3 - 1", 3).unwrap();
        let t = trop_hypersurface(&f).unwrap();
        assert!(t.contains(&rp(&[1, -1, 0])));
        assert!(t.contains(&rp(&[1, 1, -2])));
        assert!(!t.contains(&rp(&[1, 1, 1])));
    }

    #[test]
    fn hypersurface_two_lines() {
        // (t1 - 1)(t1 t2 - 1): the vertical line and the antidiagonal
        let f = parse_laurent("t1 - 1", 2)
            .unwrap()
            .mul(&parse_laurent("t1*t2 - 1", 2).unwrap());
        let t = trop_hypersurface(&f).unwrap();
        assert_eq!(
            t.circle_directions(),
            Some(vec![vec![-1, 1], vec![0, -1], vec![0, 1], vec![1, -1]])
        );
    }

    #[test]
    fn hypersurface_rejects_monomial() {
        let f = parse_laurent("3*t1*t2^-1", 2).unwrap();
        assert_eq!(trop_hypersurface(&f), Err(TropError::MonomialUnit));
    }

    #[test]
    fn corner_locus_equals_skeleton() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(88);
        let mut done = 0;
        while done < 1000 {
            let nv = rng.gen_range(2..=3);
            let nterms = rng.gen_range(2..=8);
            let mut f = LaurentPoly::zero(IntRing, nv);
            for _ in 0..nterms {
                let e: Vec<i64> = (0..nv).map(|_| rng.gen_range(-3..=3)).collect();
                f.add_term(e, Int::from(rng.gen_range(1..=5)));
            }
            if f.support().len() < 2 {
                continue;
            }
            let t = trop_hypersurface(&f).unwrap();
            let w: Vec<Rat> = (0..nv)
                .map(|_| Rat::new(Int::from(rng.gen_range(-12i64..=12)), Int::from(rng.gen_range(1i64..=4))))
                .collect();
            let (_, count) = trop_eval(&f, &w).unwrap();
            assert_eq!(count >= 2, t.contains(&w), "f={f} w={w:?}");
            done += 1;
        }
    }

    #[test]
    fn translated_tori_examples() {
        let full = TranslatedTorus {
            lattice: vec![vec![1, 0], vec![0, 1]],
            translation_q: rq(&[(1, 2), (0, 1)]),
            torsion_translation: vec![],
        };
        assert!(trop_translated_tori(2, &[full]).is_full());
        let l1 = TranslatedTorus {
            lattice: vec![vec![1, 0, 0, 0, 0, 0], vec![0, 1, 0, 0, 0, 0]],
            translation_q: rq(&[(0, 1); 6]),
            torsion_translation: vec![1],
        };
        let l2 = TranslatedTorus {
            lattice: vec![
                vec![0, 0, 1, 0, 0, 0],
                vec![0, 0, 0, 1, 0, 0],
                vec![0, 0, 0, 0, 1, 0],
                vec![0, 0, 0, 0, 0, 1],
            ],
            translation_q: rq(&[(0, 1); 6]),
            torsion_translation: vec![0],
        };
        let t = trop_translated_tori(6, &[l1, l2]);
        assert!(t.contains(&rp(&[1, 2, 0, 0, 0, 0])));
        assert!(t.contains(&rp(&[0, 0, 1, -1, 2, 5])));
        assert!(!t.contains(&rp(&[1, 0, 1, 0, 0, 0])));
        assert!(trop_translated_tori(4, &[]) == TropSet::Empty { ambient: 4 });
    }

    #[test]
    fn tangent_cone_examples() {
        let honest = TranslatedTorus {
            lattice: vec![vec![1, 0]],
            translation_q: rq(&[(0, 1), (0, 1)]),
            torsion_translation: vec![],
        };
        let tc = exp_tangent_cone(2, &[honest.clone()]);
        assert_eq!(tc.subspaces.len(), 1);
        assert!(tc.contains(&rp(&[3, 0])));

        // order-2 translation transverse to L: contributes nothing
        let translated = TranslatedTorus {
            lattice: vec![vec![1, 0]],
            translation_q: rq(&[(0, 1), (1, 2)]),
            torsion_translation: vec![],
        };
        let tc = exp_tangent_cone(2, &[translated.clone()]);
        assert!(tc.subspaces.is_empty());
        // while the tropicalization keeps the subspace: strictness
        let t = trop_translated_tori(2, &[translated.clone()]);
        assert!(t.contains(&rp(&[1, 0])));

        // translation inside the subtorus direction is trivial
        let along = TranslatedTorus {
            lattice: vec![vec![2, 1]],
            translation_q: rq(&[(1, 3), (1, 6)]),
            torsion_translation: vec![],
        };
        assert!(translation_is_effective_trivial(2, &along));

        let tc = exp_tangent_cone(2, &[honest, translated]);
        assert_eq!(tc.subspaces.len(), 1);
    }

    #[test]
    fn tangent_cone_in_trop_random() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(91);
        for _ in 0..200 {
            let n = rng.gen_range(2..=4);
            let ncomp = rng.gen_range(1..=3);
            let comps: Vec<TranslatedTorus> = (0..ncomp)
                .map(|_| {
                    let rank = rng.gen_range(0..n);
                    let lattice: Vec<Vec<i64>> = (0..rank)
                        .map(|_| (0..n).map(|_| rng.gen_range(-2..=2)).collect())
                        .collect();
                    let lattice: Vec<Vec<i64>> = lattice
                        .into_iter()
                        .filter(|r| r.iter().any(|&x| x != 0))
                        .collect();
                    TranslatedTorus {
                        lattice,
                        translation_q: (0..n)
                            .map(|_| Rat::new(Int::from(rng.gen_range(0..3)), Int::from(rng.gen_range(1..=3))))
                            .collect(),
                        torsion_translation: vec![],
                    }
                })
                .collect();
            let tc = exp_tangent_cone(n, &comps);
            let t = trop_translated_tori(n, &comps);
            // every basis vector of the tangent cone lies in Trop
            for s in &tc.subspaces {
                for b in s {
                    assert!(t.contains(&rat_point(b)));
                }
            }
        }
    }

    #[test]
    fn pushforward_examples() {
        let full2 = TropSet::FullSpace { ambient: 2 };
        let incl = IMat::from_i64(&[
            vec![1, 0],
            vec![0, 1],
            vec![0, 0],
            vec![0, 0],
            vec![0, 0],
            vec![0, 0],
        ]);
        let img = trop_pushforward(&full2, &incl).unwrap();
        assert!(img.contains(&rp(&[1, -2, 0, 0, 0, 0])));
        assert!(!img.contains(&rp(&[1, 0, 1, 0, 0, 0])));

        let origin = TropSet::Union {
            ambient: 2,
            pieces: vec![TropPiece::Subspace { basis: vec![] }],
        };
        let img = trop_pushforward(&origin, &incl).unwrap();
        assert!(img.contains(&rp(&[0, 0, 0, 0, 0, 0])));
        assert!(!img.contains(&rp(&[1, 0, 0, 0, 0, 0])));

        // ray (1,1) mapping to primitive (1,1,2)
        let f = parse_laurent("t1 + t2", 2).unwrap();
        let t = trop_hypersurface(&f).unwrap();
        let a = IMat::from_i64(&[vec![1, 0], vec![0, 1], vec![1, 1]]);
        let img = trop_pushforward(&t, &a).unwrap();
        assert!(img.contains(&rp(&[1, 1, 2])));
        assert!(img.contains(&rp(&[-2, -2, -4])));
        assert!(!img.contains(&rp(&[1, 1, 1])));
    }

    #[test]
    fn union_multiplicativity() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(97);
        let mut done = 0;
        while done < 50 {
            let mk = |rng: &mut rand_chacha::ChaCha8Rng| {
                let mut f = LaurentPoly::zero(IntRing, 2);
                for _ in 0..rng.gen_range(2..=4) {
                    let e: Vec<i64> = (0..2).map(|_| rng.gen_range(-2..=2)).collect();
                    f.add_term(e, Int::from(rng.gen_range(1..=3)));
                }
                f
            };
            let f = mk(&mut rng);
            let g = mk(&mut rng);
            if f.support().len() < 2 || g.support().len() < 2 {
                continue;
            }
            let tf = trop_hypersurface(&f).unwrap();
            let tg = trop_hypersurface(&g).unwrap();
            let tfg = trop_hypersurface(&f.mul(&g)).unwrap();
            for _ in 0..40 {
                let w: Vec<Rat> = (0..2)
                    .map(|_| Rat::new(Int::from(rng.gen_range(-9i64..=9)), Int::from(rng.gen_range(1i64..=3))))
                    .collect();
                assert_eq!(tfg.contains(&w), tf.contains(&w) || tg.contains(&w));
            }
            done += 1;
        }
    }

    #[test]
    fn char_variety_dispatch() {
        use crate::alexander::component_analysis;
        use crate::presentation::parse_presentation;
        // Z * Z_2: full component at the order-2 character
        let p = parse_presentation("<x1,x2 | x2^2>").unwrap();
        let d = component_analysis(&p, 12).unwrap();
        assert!(trop_char_variety(&d).is_full());
        // BS(1,2): only the origin
        let p = parse_presentation("<x1,x2 | x1*x2*x1^-1*x2^-2>").unwrap();
        let d = component_analysis(&p, 12).unwrap();
        let t = trop_char_variety(&d);
        assert!(t.contains(&rp(&[0])));
        assert!(!t.contains(&rp(&[1])));
        assert!(!t.contains(&rp(&[-1])));
        // t1 + t2 + 1 relator: rays (1,0),(0,1),(-1,-1)
        let p = parse_presentation("<x1,x2 | x2^2*x1*x2^-1*x1*x2^-1*x1^-2>").unwrap();
        let d = component_analysis(&p, 12).unwrap();
        let t = trop_char_variety(&d);
        assert_eq!(
            t.circle_directions(),
            Some(vec![vec![-1, -1], vec![0, 1], vec![1, 0]])
        );
        assert!(t.contains(&rp(&[0, 0])));
    }
}
