//! End-to-end acceptance checks, one test per criterion.

use num::{BigInt, BigRational, One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tropbns::alexander::{alexander_polynomial, component_analysis, CharComponent, Outcome};
use tropbns::gcd::IntRing;
use tropbns::laurent::{parse_laurent, LaurentPoly};
use tropbns::linalg::{smith_normal_form, IMat, Int, Rat};
use tropbns::presentation::{
    fox_derivative, parse_presentation, FreeWord, GroupPresentation, GroupRingElement,
};
use tropbns::sigma::{
    brieskorn, brown_rank2, excluded_directions, facet_bound, pencil_bound, seifert_sigma,
    sigma_bound_from_trop, verify_inclusion, Arc, ArcSet, Convention, InclusionReport,
    SeifertVerdict, SigmaError, SphereBound,
};
use tropbns::tropical::{
    exp_tangent_cone, trop_char_variety, trop_eval, trop_hypersurface, trop_translated_tori,
    TranslatedTorus,
};

fn pres(text: &str) -> GroupPresentation {
    parse_presentation(text).unwrap()
}

fn sorted(mut v: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    v.sort();
    v
}

fn neg_trop_circle(delta_text: &str) -> Vec<Vec<i64>> {
    let delta = parse_laurent(delta_text, 2).unwrap();
    let trop = trop_hypersurface(&delta).unwrap();
    sorted(
        trop.circle_directions()
            .unwrap()
            .into_iter()
            .map(|d| d.iter().map(|x| -x).collect())
            .collect(),
    )
}

fn full_bound(p: &GroupPresentation) -> SphereBound {
    let cv = component_analysis(p, 12).unwrap();
    sigma_bound_from_trop(trop_char_variety(&cv), Convention::Sigma1)
}

// 1. Known one-relator circle pictures: arcs and negated tropical rays.
#[test]
fn circle_examples_exact_sets() {
    // x y^2 x^-1 y^-2: full circle minus the horizontal directions
    let p = pres("<x1,x2 | x1*x2^2*x1^-1*x2^-2>");
    let SphereBound::Arcs(a) = brown_rank2(&p).unwrap() else { panic!() };
    assert_eq!(sorted(a.excluded_points().unwrap()), sorted(vec![vec![1, 0], vec![-1, 0]]));
    assert!(a.contains(&[0, 1]) && a.contains(&[0, -1]) && !a.contains(&[1, 0]));
    assert_eq!(neg_trop_circle("t2 + 1"), sorted(vec![vec![1, 0], vec![-1, 0]]));

    // full circle minus three directions
    let p = pres("<x1,x2 | x2^2*x1*x2^-1*x1*x2^-1*x1^-2>");
    let SphereBound::Arcs(a) = brown_rank2(&p).unwrap() else { panic!() };
    let three = sorted(vec![vec![-1, 0], vec![0, -1], vec![1, 1]]);
    assert_eq!(sorted(a.excluded_points().unwrap()), three);
    assert_eq!(neg_trop_circle("t1 + t2 + 1"), three);

    // two arcs below the diagonal, vertical tropical line
    let p = pres(
        "<x1,x2 | x1^-1*x2^-1*x1*x2^2*x1^-1*x2^-1*x1^2*x2^-1*x1^-1*x2*x1^-1*x2*x1*x2^-1>",
    );
    let SphereBound::Arcs(a) = brown_rank2(&p).unwrap() else { panic!() };
    assert_eq!(
        a.arcs,
        vec![
            Arc { start: vec![-1, 0], end: vec![0, -1] },
            Arc { start: vec![0, -1], end: vec![1, 1] },
        ]
    );
    assert_eq!(neg_trop_circle("t1 - 1"), sorted(vec![vec![0, 1], vec![0, -1]]));

    // two-component fibered link: four tropical directions, and the two
    // known arcs sit inside the tropical bound
    let four = sorted(vec![vec![0, 1], vec![0, -1], vec![-1, 1], vec![1, -1]]);
    assert_eq!(neg_trop_circle("t1^2*t2 - t1*t2 - t1 + 1"), four);
    let delta = parse_laurent("t1^2*t2 - t1*t2 - t1 + 1", 2).unwrap();
    let bound =
        sigma_bound_from_trop(trop_hypersurface(&delta).unwrap(), Convention::Sigma1);
    let known = ArcSet::from_arcs(&[
        Arc { start: vec![0, 1], end: vec![-1, 1] },
        Arc { start: vec![0, -1], end: vec![1, -1] },
    ]);
    assert_eq!(
        verify_inclusion(&SphereBound::Arcs(known), &bound, 50).unwrap(),
        InclusionReport::Holds
    );
}

// 2. Alexander polynomials in canonical form.
#[test]
fn alexander_polynomial_known_groups() {
    let cases: &[(&str, usize, &str)] = &[
        ("<x1,x2 | x1*x2^2*x1^-1*x2^-2>", 2, "t2 + 1"),
        ("<x1,x2 | x2^2*x1*x2^-1*x1*x2^-1*x1^-2>", 2, "t1 + t2 + 1"),
        (
            "<x1,x2 | x1^-1*x2^-1*x1*x2^2*x1^-1*x2^-1*x1^2*x2^-1*x1^-1*x2*x1^-1*x2*x1*x2^-1>",
            2,
            "t1 - 1",
        ),
        ("<x1,x2 | x1*x2*x1^-1*x2^-2>", 1, "t1 - 2"),
        (
            "<x1,x2,x3 | x1*x1*x2*x3*x1^-1*x3^-1*x2^-1*x1^-1, x2*x1*x2*x3*x2^-1*x3^-1*x2^-1*x1^-1>",
            3,
            "t1*t2*t3 - 1",
        ),
    ];
    for (text, vars, want) in cases {
        let delta = alexander_polynomial(&pres(text)).unwrap();
        let expected = parse_laurent(want, *vars).unwrap().normalize();
        assert_eq!(delta.normalize(), expected, "presentation {text}");
    }
    // the rank-one case drops the variable to t1 with root 2
    let delta = alexander_polynomial(&pres("<x1,x2 | x1*x2*x1^-1*x2^-2>")).unwrap();
    let at_two: BigInt = delta
        .terms
        .iter()
        .map(|(e, c)| c * BigInt::from(2).pow(u32::try_from(e[0]).unwrap()))
        .sum();
    assert!(at_two.is_zero());
}

// 3. Full components at torsion characters force the empty bound.
#[test]
fn translated_component_forces_empty_bound() {
    let p = pres("<x1,x2 | x2^2>");
    let cv = component_analysis(&p, 12).unwrap();
    assert!(cv.components.iter().any(|c| matches!(
        c,
        CharComponent::Computed { character, outcome: Outcome::Full } if character == &vec![1]
    )));
    assert_eq!(full_bound(&p), SphereBound::Empty { ambient: 1 });

    let b = brieskorn(&[2, 4, 8]).unwrap();
    let p = b.seifert.presentation();
    let cv = component_analysis(&p, 12).unwrap();
    assert_eq!(cv.torsion_invariants, vec![4]);
    assert!(cv.components.iter().any(|c| matches!(
        c,
        CharComponent::Computed { character, outcome: Outcome::Full } if character == &vec![2]
    )));
    assert_eq!(full_bound(&p), SphereBound::Empty { ambient: 2 });
}

// 4. Symmetric three-manifold polynomial: both diagonals, four excluded
// facet directions.
#[test]
fn three_manifold_diagonal_directions() {
    let delta = parse_laurent("t1^2*t2 + t1*t2^2 - 4*t1*t2 + t1 + t2", 2).unwrap();
    let trop = trop_hypersurface(&delta).unwrap();
    let diagonals = sorted(vec![vec![1, 1], vec![-1, -1], vec![1, -1], vec![-1, 1]]);
    assert_eq!(sorted(trop.circle_directions().unwrap()), diagonals);
    let fb = facet_bound(&delta).unwrap();
    assert_eq!(sorted(excluded_directions(&fb).unwrap()), diagonals);
    for d in &diagonals {
        assert!(!fb.allows(d));
    }
    assert!(fb.allows(&[1, 0]));
    assert!(fb.allows(&[2, 1]));
}

// 5. Brieskorn data for exponents (2,4,8).
#[test]
fn brieskorn_2_4_8_invariants() {
    let b = brieskorn(&[2, 4, 8]).unwrap();
    assert_eq!(b.ell, 8);
    assert_eq!(b.genus, 1);
    assert_eq!(b.e, -Rat::one());
    assert_eq!(b.seifert.orbits, vec![(2, 1), (2, 1)]);
    assert_eq!(seifert_sigma(&b.seifert), SeifertVerdict::Empty);
}

// 6. Two pencils on a sixfold: complement of two subspheres.
#[test]
fn kaehler_pencil_membership() {
    let first = IMat::from_i64(&[
        vec![1, 0],
        vec![0, 1],
        vec![0, 0],
        vec![0, 0],
        vec![0, 0],
        vec![0, 0],
    ]);
    let second = IMat::from_i64(&[
        vec![0, 0, 0, 0],
        vec![0, 0, 0, 0],
        vec![1, 0, 0, 0],
        vec![0, 1, 0, 0],
        vec![0, 0, 1, 0],
        vec![0, 0, 0, 1],
    ]);
    let bound = pencil_bound(6, &[first, second]).unwrap();
    let cases: &[([i64; 6], bool)] = &[
        // inside the first subsphere
        ([1, 0, 0, 0, 0, 0], false),
        ([0, 1, 0, 0, 0, 0], false),
        ([1, -1, 0, 0, 0, 0], false),
        ([3, 5, 0, 0, 0, 0], false),
        ([-2, 7, 0, 0, 0, 0], false),
        // inside the second subsphere
        ([0, 0, 1, 0, 0, 0], false),
        ([0, 0, 0, 1, 0, 0], false),
        ([0, 0, 0, 0, 1, 0], false),
        ([0, 0, 0, 0, 0, 1], false),
        ([0, 0, 1, 1, 1, 1], false),
        ([0, 0, -1, 2, -3, 4], false),
        ([0, 0, 5, 0, 0, -5], false),
        // mixed support: allowed
        ([1, 0, 1, 0, 0, 0], true),
        ([0, 1, 0, 0, 0, 1], true),
        ([1, 1, 1, 1, 1, 1], true),
        ([-1, 2, -3, 4, -5, 6], true),
        ([1, 0, 0, 0, 0, -1], true),
        ([0, -1, 1, 0, 0, 0], true),
        ([7, 3, 0, 0, 1, 0], true),
        ([2, -2, 2, -2, 2, -2], true),
    ];
    assert_eq!(cases.len(), 20);
    for (chi, want) in cases {
        assert_eq!(bound.allows(chi), *want, "direction {chi:?}");
    }
}

fn random_commutator_relator(rng: &mut ChaCha8Rng, max_len: usize) -> FreeWord {
    loop {
        let half = rng.gen_range(1..=max_len / 2);
        let mut steps: Vec<(usize, i64)> = Vec::new();
        for _ in 0..half {
            let g = rng.gen_range(1..=2usize);
            steps.push((g, 1));
            steps.push((g, -1));
        }
        for i in (1..steps.len()).rev() {
            let j = rng.gen_range(0..=i);
            steps.swap(i, j);
        }
        let w = FreeWord::from_factors(&steps).cyclically_reduce();
        if !w.is_identity() && w.exponent_vector(2) == vec![0, 0] {
            return w;
        }
    }
}

// 7. The exact circle computation always sits inside the tropical
// bound; a violation fails with the witness printed.
#[test]
fn inclusion_holds_for_300_random_relators() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut checked = 0usize;
    while checked < 300 {
        let r = random_commutator_relator(&mut rng, 24);
        let p = GroupPresentation::new(2, vec![r.clone()]);
        let ground = match brown_rank2(&p) {
            Ok(g) => g,
            Err(SigmaError::DegenerateWalk) => continue,
            Err(e) => panic!("unexpected error {e:?} for relator {r}"),
        };
        let bound = full_bound(&p);
        match verify_inclusion(&ground, &bound, 50).unwrap() {
            InclusionReport::Holds => {}
            InclusionReport::Violation(d) => {
                panic!("violation at direction {:?} for relator {r}", d.0)
            }
        }
        checked += 1;
    }
}

// 8. Corner-locus membership agrees with normal-fan-skeleton
// membership.
#[test]
fn corner_locus_matches_fan_skeleton_1000() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut checked = 0usize;
    while checked < 1000 {
        let n = rng.gen_range(2..=3usize);
        let nterms = rng.gen_range(2..=5usize);
        let mut f = LaurentPoly::zero(IntRing, n);
        for _ in 0..nterms {
            let e: Vec<i64> = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
            let c = loop {
                let c = rng.gen_range(-3..=3i64);
                if c != 0 {
                    break c;
                }
            };
            f.add_term(e, Int::from(c));
        }
        if f.support().len() < 2 {
            continue;
        }
        let trop = trop_hypersurface(&f).unwrap();
        let w: Vec<Rat> = (0..n)
            .map(|_| {
                Rat::new(Int::from(rng.gen_range(-6..=6i64)), Int::from(rng.gen_range(1..=4i64)))
            })
            .collect();
        let (_, count) = trop_eval(&f, &w).unwrap();
        assert_eq!(trop.contains(&w), count >= 2, "f = {:?}, w = {w:?}", f.support());
        checked += 1;
    }
}

// 9. The exponential tangent cone is contained in the tropical set, and
// a genuinely translated component makes the inclusion strict.
#[test]
fn tangent_cone_inclusion_and_strictness_200() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..200 {
        let n = rng.gen_range(2..=4usize);
        let mut comps: Vec<TranslatedTorus> = Vec::new();
        // components with trivial translation, lattices inside x1 = 0
        for _ in 0..rng.gen_range(1..=2usize) {
            let rows = rng.gen_range(1..=n - 1);
            let lattice: Vec<Vec<i64>> = (0..rows)
                .map(|_| {
                    let mut v: Vec<i64> = (0..n).map(|_| rng.gen_range(-2..=2)).collect();
                    v[0] = 0;
                    if v.iter().all(|&x| x == 0) {
                        v[1] = 1;
                    }
                    v
                })
                .collect();
            comps.push(TranslatedTorus {
                lattice,
                translation_q: vec![BigRational::zero(); n],
                torsion_translation: vec![0],
            });
        }
        // one component translated by a finite-order character, with a
        // lattice direction leaving the hyperplane
        let strict = rng.gen_bool(0.5);
        if strict {
            let mut v: Vec<i64> = (0..n).map(|_| rng.gen_range(-2..=2)).collect();
            v[0] = 1;
            comps.push(TranslatedTorus {
                lattice: vec![v],
                translation_q: vec![BigRational::zero(); n],
                torsion_translation: vec![1],
            });
        }
        let tau = exp_tangent_cone(n, &comps);
        let trop = trop_translated_tori(n, &comps);
        // inclusion: sampled points of every tangent-cone subspace lie
        // in the tropical set
        for basis in &tau.subspaces {
            for _ in 0..4 {
                let mut w = vec![Rat::zero(); n];
                for b in basis {
                    let c = Rat::from(Int::from(rng.gen_range(-3..=3i64)));
                    for (wi, &bi) in w.iter_mut().zip(b) {
                        *wi += &c * Rat::from(Int::from(bi));
                    }
                }
                assert!(trop.contains(&w), "tangent cone point escapes the tropical set");
            }
        }
        if strict {
            let basis = &comps.last().unwrap().lattice;
            let w: Vec<Rat> = basis[0].iter().map(|&x| Rat::from(Int::from(x))).collect();
            assert!(trop.contains(&w));
            assert!(!tau.contains(&w), "expected a strictness witness at {w:?}");
        }
    }
}

fn random_word(rng: &mut ChaCha8Rng, gens: usize, max_len: usize) -> FreeWord {
    let len = rng.gen_range(0..=max_len);
    let factors: Vec<(usize, i64)> = (0..len)
        .map(|_| (rng.gen_range(1..=gens), if rng.gen_bool(0.5) { 1 } else { -1 }))
        .collect();
    FreeWord::from_factors(&factors)
}

fn random_poly(rng: &mut ChaCha8Rng, n: usize) -> LaurentPoly<IntRing> {
    let mut f = LaurentPoly::zero(IntRing, n);
    for _ in 0..rng.gen_range(1..=3usize) {
        let e: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=2)).collect();
        f.add_term(e, Int::from(rng.gen_range(-2..=2i64)));
    }
    if f.is_zero() {
        f.add_term(vec![0; n], Int::one());
    }
    f
}

// 10. Core algebra laws, 500 seeded cases each.
#[test]
fn algebra_laws_500() {
    // product rule d(uv) = du + u dv
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..500 {
        let u = random_word(&mut rng, 3, 8);
        let v = random_word(&mut rng, 3, 8);
        let j = rng.gen_range(1..=3usize);
        let lhs = fox_derivative(&u.mul(&v), j);
        let rhs = fox_derivative(&u, j).add(&fox_derivative(&v, j).left_mul_word(&u));
        assert_eq!(lhs, rhs);
    }

    // fundamental identity: sum_j d_j(w) (x_j - 1) = w - 1
    for _ in 0..500 {
        let w = random_word(&mut rng, 3, 10);
        let mut sum = GroupRingElement::zero();
        for j in 1..=3 {
            let mut factor = GroupRingElement::from_word(FreeWord::generator(j));
            factor = factor.sub(&GroupRingElement::one());
            sum = sum.add(&fox_derivative(&w, j).mul(&factor));
        }
        let expect = GroupRingElement::from_word(w).sub(&GroupRingElement::one());
        assert_eq!(sum, expect);
    }

    // Smith form: u a v = s, diagonal, nonnegative, divisibility chain
    for _ in 0..500 {
        let rows = rng.gen_range(1..=4usize);
        let cols = rng.gen_range(1..=4usize);
        let a = IMat::from_rows(
            (0..rows)
                .map(|_| (0..cols).map(|_| Int::from(rng.gen_range(-9..=9i64))).collect())
                .collect(),
        );
        let snf = smith_normal_form(&a);
        assert_eq!(snf.u.mul(&a).mul(&snf.v), snf.s);
        let mut prev: Option<Int> = None;
        for i in 0..rows.min(cols) {
            for j in 0..cols {
                if j != i {
                    assert!(snf.s.data[i][j].is_zero());
                }
            }
            let d = snf.s.data[i][i].clone();
            assert!(d >= Int::zero());
            if let Some(p) = prev {
                if !p.is_zero() {
                    assert!((&d % &p).is_zero(), "divisibility chain broken");
                } else {
                    assert!(d.is_zero());
                }
            }
            prev = Some(d);
        }
    }

    // gcd: g | a, g | b, and gcd(ac, bc) ~ gcd(a, b) c
    for _ in 0..500 {
        let n = rng.gen_range(1..=2usize);
        let a = random_poly(&mut rng, n);
        let b = random_poly(&mut rng, n);
        let c = random_poly(&mut rng, n);
        if a.is_zero() || b.is_zero() || c.is_zero() {
            continue;
        }
        let g = a.gcd(&b);
        assert_eq!(g.gcd(&a).normalize(), g.normalize(), "gcd does not divide a");
        assert_eq!(g.gcd(&b).normalize(), g.normalize(), "gcd does not divide b");
        let lhs = a.mul(&c).gcd(&b.mul(&c)).normalize();
        let rhs = g.mul(&c).normalize();
        assert_eq!(lhs, rhs, "gcd is not multiplicative");
    }
}
