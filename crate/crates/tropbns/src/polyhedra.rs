//! Exact rational convex geometry: hulls, face structure, normal fans,
//! skeleta, polar duals, and the Alexander norm ball.

use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::linalg::{
    integer_nullspace, rational_row_reduce, rational_solve, IMat, Int,
};

pub type Rat = BigRational;

pub fn rat_i(n: i64) -> Rat {
    Rat::from(Int::from(n))
}

pub fn rat_point(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&x| rat_i(x)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facet {
    /// Primitive integer inner normal: `normal . x >= offset` on the
    /// polytope, with equality exactly on the facet.
    pub normal: Vec<Int>,
    pub offset: Rat,
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polytope {
    pub ambient: usize,
    pub dim: usize,
    pub vertices: Vec<Vec<Rat>>,
    /// Direction basis of the affine hull, `dim` rows.
    pub basis: Vec<Vec<Rat>>,
    pub facets: Vec<Facet>,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("empty point list")]
    Empty,
    #[error("polynomial is not symmetric")]
    NotSymmetric,
    #[error("ambient dimension mismatch")]
    DimMismatch,
    #[error("map is not injective on the fan support")]
    NotInjective,
}

fn sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn dot_ir(a: &[Int], b: &[Rat]) -> Rat {
    a.iter().zip(b).map(|(x, y)| Rat::from(x.clone()) * y).sum()
}

/// Coordinates of `p` in the row basis, assuming `p` lies in the span.
fn chart_coords(basis: &[Vec<Rat>], p: &[Rat]) -> Vec<Rat> {
    let d = basis.len();
    if d == 0 {
        return Vec::new();
    }
    let ambient = p.len();
    let a: Vec<Vec<Rat>> = (0..ambient)
        .map(|i| (0..d).map(|k| basis[k][i].clone()).collect())
        .collect();
    rational_solve(&a, p).expect("point lies in the affine hull")
}

/// Rational nullspace of the rows, as primitive integer vectors.
fn rational_nullspace(rows: &[Vec<Rat>], cols: usize) -> Vec<Vec<Int>> {
    if rows.is_empty() {
        // whole space: standard basis
        return (0..cols)
            .map(|i| (0..cols).map(|j| if i == j { Int::one() } else { Int::zero() }).collect())
            .collect();
    }
    let int_rows: Vec<Vec<Int>> = rows.iter().map(|r| primitive_row(r)).collect();
    integer_nullspace(&IMat::from_rows(int_rows))
}

/// Clear denominators of a rational vector, keeping the direction.
fn primitive_row(r: &[Rat]) -> Vec<Int> {
    crate::linalg::primitive_direction(r)
}

pub fn convex_hull(points: &[Vec<Rat>]) -> Result<Polytope, PolyError> {
    if points.is_empty() {
        return Err(PolyError::Empty);
    }
    let ambient = points[0].len();
    let mut pts: Vec<Vec<Rat>> = Vec::new();
    for p in points {
        if p.len() != ambient {
            return Err(PolyError::DimMismatch);
        }
        if !pts.contains(p) {
            pts.push(p.clone());
        }
    }
    let p0 = pts[0].clone();
    // affine-hull direction basis by row reduction
    let mut diffs: Vec<Vec<Rat>> = pts.iter().map(|p| sub(p, &p0)).collect();
    let rank = rational_row_reduce(&mut diffs);
    let basis: Vec<Vec<Rat>> = diffs.into_iter().take(rank).collect();
    let d = rank;
    if d == 0 {
        return Ok(Polytope { ambient, dim: 0, vertices: vec![p0], basis, facets: vec![] });
    }
    let chart: Vec<Vec<Rat>> = pts.iter().map(|p| chart_coords(&basis, &sub(p, &p0))).collect();
    // facet enumeration: hyperplanes through d-subsets with all points on
    // one side
    let n = chart.len();
    let mut facets_chart: Vec<(Vec<Int>, Rat, Vec<usize>)> = Vec::new();
    for subset in subsets(n, d) {
        let s0 = &chart[subset[0]];
        let dirs: Vec<Vec<Rat>> = subset[1..].iter().map(|&i| sub(&chart[i], s0)).collect();
        let ns = rational_nullspace(&dirs, d);
        let span_rank = d - ns.len();
        if span_rank != d - 1 {
            continue; // not a hyperplane spanning subset
        }
        let mut g = ns[0].clone();
        let b0 = dot_ir(&g, s0);
        let mut pos = false;
        let mut neg = false;
        for c in &chart {
            let v = dot_ir(&g, c) - &b0;
            if v.is_positive() {
                pos = true;
            } else if v.is_negative() {
                neg = true;
            }
        }
        if pos && neg {
            continue;
        }
        let mut b = b0;
        if neg {
            g = g.iter().map(|x| -x.clone()).collect();
            b = -b;
        }
        // inner normal: g.x >= b for all points
        if facets_chart.iter().any(|(g2, b2, _)| *g2 == g && *b2 == b) {
            continue;
        }
        let incident: Vec<usize> =
            (0..n).filter(|&i| dot_ir(&g, &chart[i]) == b).collect();
        facets_chart.push((g, b, incident));
    }
    // vertices: points whose active chart normals span the chart
    let mut vertex_ids: Vec<usize> = Vec::new();
    for i in 0..n {
        let active: Vec<Vec<Rat>> = facets_chart
            .iter()
            .filter(|(_, _, inc)| inc.contains(&i))
            .map(|(g, _, _)| g.iter().map(|x| Rat::from(x.clone())).collect())
            .collect();
        let mut m = active.clone();
        if rational_row_reduce(&mut m) == d {
            vertex_ids.push(i);
        }
    }
    let vertices: Vec<Vec<Rat>> = vertex_ids.iter().map(|&i| pts[i].clone()).collect();
    // lift chart normals to ambient: solve B^T B x = g, u = B^T x read in
    // ambient coordinates (u = sum_k x_k basis[k])
    let gram: Vec<Vec<Rat>> = (0..d)
        .map(|i| (0..d).map(|j| dot(&basis[i], &basis[j])).collect())
        .collect();
    let mut facets = Vec::new();
    for (g, _b, incident) in &facets_chart {
        let g_rat: Vec<Rat> = g.iter().map(|x| Rat::from(x.clone())).collect();
        let x = rational_solve(&gram, &g_rat).expect("gram matrix invertible");
        let u_rat: Vec<Rat> = (0..ambient)
            .map(|i| (0..d).map(|k| &x[k] * &basis[k][i]).sum())
            .collect();
        let u = primitive_row(&u_rat);
        let offset = vertices
            .iter()
            .map(|v| dot_ir(&u, v))
            .min()
            .expect("nonempty");
        let vert_incident: Vec<usize> = vertex_ids
            .iter()
            .enumerate()
            .filter(|(_, &pid)| incident.contains(&pid))
            .map(|(vi, _)| vi)
            .collect();
        facets.push(Facet { normal: u, offset, vertices: vert_incident });
    }
    Ok(Polytope { ambient, dim: d, vertices, basis, facets })
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
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
    go(0, n, k, &mut cur, &mut out);
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cone {
    /// Primitive extreme rays, modulo the lineality space.
    pub rays: Vec<Vec<Int>>,
    pub lineality: Vec<Vec<Int>>,
}

impl Cone {
    pub fn zero() -> Self {
        Cone { rays: vec![], lineality: vec![] }
    }

    pub fn dim(&self) -> usize {
        let mut rows: Vec<Vec<Rat>> = self
            .rays
            .iter()
            .chain(&self.lineality)
            .map(|r| r.iter().map(|x| Rat::from(x.clone())).collect())
            .collect();
        rational_row_reduce(&mut rows)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fan {
    pub ambient: usize,
    pub maximal_cones: Vec<Cone>,
    /// Lineality space common to all cones.
    pub lineality: Vec<Vec<Int>>,
    pub complete: bool,
    /// Polytope this fan is derived from, used for membership queries.
    pub source: Option<Polytope>,
    /// True if this fan is the codimension >= 1 skeleton of the normal
    /// fan of `source`.
    pub skeleton_of_source: bool,
}

/// Inner normal fan: the maximal cone of a vertex collects the linear
/// functionals minimized there.
pub fn normal_fan(p: &Polytope) -> Fan {
    let lineality = rational_nullspace(&p.basis, p.ambient);
    let maximal_cones = if p.dim == 0 {
        vec![Cone { rays: vec![], lineality: lineality.clone() }]
    } else {
        (0..p.vertices.len())
            .map(|vi| Cone {
                rays: p
                    .facets
                    .iter()
                    .filter(|f| f.vertices.contains(&vi))
                    .map(|f| f.normal.clone())
                    .collect(),
                lineality: lineality.clone(),
            })
            .collect()
    };
    Fan {
        ambient: p.ambient,
        maximal_cones,
        lineality,
        complete: true,
        source: Some(p.clone()),
        skeleton_of_source: false,
    }
}

/// All cones of codimension >= 1 of the normal fan, i.e. normal cones of
/// positive-dimensional faces; stored by their maximal members, the
/// normal cones of edges.
pub fn skeleton(p: &Polytope) -> Fan {
    let lineality = rational_nullspace(&p.basis, p.ambient);
    let mut cones = Vec::new();
    if p.dim == 0 {
        // convention: the skeleton of the trivial complete fan is the
        // origin
        cones.push(Cone::zero());
        return Fan {
            ambient: p.ambient,
            maximal_cones: cones,
            lineality: vec![],
            complete: false,
            source: Some(p.clone()),
            skeleton_of_source: true,
        };
    }
    let nv = p.vertices.len();
    for i in 0..nv {
        for j in i + 1..nv {
            let common: Vec<&Facet> = p
                .facets
                .iter()
                .filter(|f| f.vertices.contains(&i) && f.vertices.contains(&j))
                .collect();
            let mut rows: Vec<Vec<Rat>> = common
                .iter()
                .map(|f| f.normal.iter().map(|x| Rat::from(x.clone())).collect())
                .collect();
            let rank = rational_row_reduce(&mut rows);
            if rank != p.dim - 1 {
                continue; // vertex pair does not span an edge
            }
            // check the segment [v_i, v_j] really is a face: every point
            // on all common facets must be a combination of v_i, v_j;
            // equivalently no third vertex is incident to all of them
            let third = (0..nv).any(|k| {
                k != i && k != j && common.iter().all(|f| f.vertices.contains(&k))
            });
            if third {
                continue;
            }
            cones.push(Cone {
                rays: common.iter().map(|f| f.normal.clone()).collect(),
                lineality: lineality.clone(),
            });
        }
    }
    Fan {
        ambient: p.ambient,
        maximal_cones: cones,
        lineality,
        complete: false,
        source: Some(p.clone()),
        skeleton_of_source: true,
    }
}

/// Locate the unique cone of the fan whose relative interior contains
/// `w`; `None` when `w` is outside the fan's support (possible only for
/// skeleta).
pub fn cone_membership(f: &Fan, w: &[Rat]) -> Option<Cone> {
    let p = f.source.as_ref().expect("membership requires a source polytope");
    if p.dim == 0 && f.skeleton_of_source {
        return w.iter().all(|x| x.is_zero()).then(Cone::zero);
    }
    let vals: Vec<Rat> = p.vertices.iter().map(|v| dot(w, v)).collect();
    let min = vals.iter().min().cloned()?;
    let argmin: Vec<usize> = (0..vals.len()).filter(|&i| vals[i] == min).collect();
    if f.skeleton_of_source {
        // the minimizing face must have dimension >= 1
        let mut dirs: Vec<Vec<Rat>> = argmin[1..]
            .iter()
            .map(|&i| sub(&p.vertices[i], &p.vertices[argmin[0]]))
            .collect();
        if rational_row_reduce(&mut dirs) == 0 {
            return None;
        }
    }
    let rays: Vec<Vec<Int>> = p
        .facets
        .iter()
        .filter(|fa| argmin.iter().all(|v| fa.vertices.contains(v)))
        .map(|fa| fa.normal.clone())
        .collect();
    Some(Cone { rays, lineality: f.lineality.clone() })
}

/// Is `w` in the support of the fan?
pub fn in_support(f: &Fan, w: &[Rat]) -> bool {
    cone_membership(f, w).is_some()
}

/// Image fan under an integer matrix (rows x cols = target x source).
pub fn linear_image(f: &Fan, a: &IMat) -> Result<Fan, PolyError> {
    if a.cols != f.ambient {
        return Err(PolyError::DimMismatch);
    }
    if a.rank() < a.cols {
        return Err(PolyError::NotInjective);
    }
    let map = |v: &Vec<Int>| -> Vec<Int> { crate::linalg::primitivize(&a.mul_vec(v)) };
    let maximal_cones = f
        .maximal_cones
        .iter()
        .map(|c| Cone {
            rays: c.rays.iter().map(&map).collect(),
            lineality: c.lineality.iter().map(&map).collect(),
        })
        .collect();
    Ok(Fan {
        ambient: a.rows,
        maximal_cones,
        lineality: f.lineality.iter().map(&map).collect(),
        complete: false,
        source: None,
        skeleton_of_source: false,
    })
}

/// Polar dual of a full-dimensional polytope with 0 in its interior.
pub fn polar_dual(p: &Polytope) -> Result<Polytope, PolyError> {
    assert_eq!(p.dim, p.ambient, "polar dual needs a full-dimensional polytope");
    // facet normal.x >= offset with offset < 0; dual vertex normal/offset
    let verts: Vec<Vec<Rat>> = p
        .facets
        .iter()
        .map(|f| {
            assert!(f.offset.is_negative(), "0 must be interior");
            f.normal
                .iter()
                .map(|x| Rat::from(x.clone()) / &f.offset)
                .collect()
        })
        .collect();
    convex_hull(&verts)
}

/// The Alexander norm ball: half the polar dual of the centered Newton
/// polytope. For lower-dimensional Newton polytopes the ball is an
/// unbounded slab, returned by its facet inequalities only and flagged.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormBall {
    pub ambient: usize,
    /// False when the Newton polytope is lower-dimensional and the ball
    /// is unbounded.
    pub bounded: bool,
    /// Inequalities `normal . y <= offset` cutting out the ball (one per
    /// vertex of the centered Newton polytope).
    pub facets: Vec<(Vec<Rat>, Rat)>,
    /// Present in the bounded case.
    pub polytope: Option<Polytope>,
}

pub fn alexander_ball(delta: &crate::laurent::LaurentPoly) -> Result<NormBall, PolyError> {
    if !delta.is_symmetric() {
        return Err(PolyError::NotSymmetric);
    }
    let support: Vec<Vec<Rat>> = delta.support().iter().map(|e| rat_point(e)).collect();
    let newt = convex_hull(&support)?;
    let ambient = newt.ambient;
    // bounding-box midpoint; exact center by symmetry
    let center: Vec<Rat> = (0..ambient)
        .map(|i| {
            let min = newt.vertices.iter().map(|v| v[i].clone()).min().unwrap();
            let max = newt.vertices.iter().map(|v| v[i].clone()).max().unwrap();
            (min + max) / rat_i(2)
        })
        .collect();
    let centered: Vec<Vec<Rat>> = newt.vertices.iter().map(|v| sub(v, &center)).collect();
    // B_A = {y : y.w <= 1/2 for every centered vertex w}
    let half = Rat::new(Int::one(), Int::from(2));
    let facets: Vec<(Vec<Rat>, Rat)> = centered
        .iter()
        .filter(|w| w.iter().any(|x| !x.is_zero()))
        .map(|w| (w.clone(), half.clone()))
        .collect();
    if newt.dim < ambient {
        return Ok(NormBall { ambient, bounded: false, facets, polytope: None });
    }
    let q = convex_hull(&centered)?;
    let dual = polar_dual(&q)?;
    let scaled: Vec<Vec<Rat>> = dual
        .vertices
        .iter()
        .map(|v| v.iter().map(|x| x * &half).collect())
        .collect();
    let ball = convex_hull(&scaled)?;
    Ok(NormBall { ambient, bounded: true, facets, polytope: Some(ball) })
}

impl NormBall {
    pub fn contains(&self, y: &[Rat]) -> bool {
        self.facets.iter().all(|(n, b)| dot(n, y) <= *b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::parse_laurent;

    fn pts(v: &[&[i64]]) -> Vec<Vec<Rat>> {
        v.iter().map(|p| rat_point(p)).collect()
    }

    fn ray_set(f: &Fan) -> Vec<Vec<i64>> {
        let mut out: Vec<Vec<i64>> = f
            .maximal_cones
            .iter()
            .flat_map(|c| c.rays.iter())
            .map(|r| r.iter().map(|x| i64::try_from(x).unwrap()).collect())
            .collect();
        out.sort();
        out.dedup();
        out
    }

    #[test]
    fn hull_triangle() {
        let p = convex_hull(&pts(&[&[0, 0], &[1, 0], &[0, 1]])).unwrap();
        assert_eq!(p.dim, 2);
        assert_eq!(p.vertices.len(), 3);
        assert_eq!(p.facets.len(), 3);
    }

    #[test]
    fn hull_with_interior_point() {
        // support of (t1+t2)(t1 t2+1) - 4 t1 t2
        let p = convex_hull(&pts(&[&[2, 1], &[1, 2], &[1, 0], &[0, 1], &[1, 1]])).unwrap();
        assert_eq!(p.vertices.len(), 4);
        let mut vs: Vec<Vec<Rat>> = p.vertices.clone();
        vs.sort();
        assert_eq!(vs, {
            let mut e = pts(&[&[1, 0], &[2, 1], &[1, 2], &[0, 1]]);
            e.sort();
            e
        });
    }

    #[test]
    fn hull_point() {
        let p = convex_hull(&pts(&[&[3, 4]])).unwrap();
        assert_eq!(p.dim, 0);
        assert!(p.facets.is_empty());
        assert_eq!(p.vertices.len(), 1);
    }

    #[test]
    fn hull_idempotent() {
        let p = convex_hull(&pts(&[&[0, 0], &[2, 0], &[0, 2], &[1, 1], &[2, 2]])).unwrap();
        let q = convex_hull(&p.vertices).unwrap();
        let mut a = p.vertices.clone();
        let mut b = q.vertices.clone();
        a.sort();
        b.sort();
        assert_eq!(a, b);
        assert_eq!(p.facets.len(), q.facets.len());
    }

    #[test]
    fn normal_fan_triangle() {
        let p = convex_hull(&pts(&[&[0, 0], &[1, 0], &[0, 1]])).unwrap();
        let f = normal_fan(&p);
        assert_eq!(f.maximal_cones.len(), 3);
        assert_eq!(ray_set(&f), vec![vec![-1, -1], vec![0, 1], vec![1, 0]]);
        let sk = skeleton(&p);
        assert_eq!(sk.maximal_cones.len(), 3);
        assert_eq!(ray_set(&sk), vec![vec![-1, -1], vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn normal_fan_segment() {
        let p = convex_hull(&pts(&[&[0, 0], &[0, 1]])).unwrap();
        let f = normal_fan(&p);
        assert_eq!(f.maximal_cones.len(), 2);
        // skeleton of a vertical segment's fan: the horizontal axis
        let sk = skeleton(&p);
        assert_eq!(sk.maximal_cones.len(), 1);
        let c = &sk.maximal_cones[0];
        assert!(c.rays.is_empty());
        assert_eq!(c.lineality, vec![vec![Int::one(), Int::zero()]]);
        assert!(in_support(&sk, &rat_point(&[7, 0])));
        assert!(!in_support(&sk, &rat_point(&[0, 1])));
    }

    #[test]
    fn normal_fan_point() {
        let p = convex_hull(&pts(&[&[5]])).unwrap();
        let f = normal_fan(&p);
        assert_eq!(f.maximal_cones.len(), 1);
        assert_eq!(f.maximal_cones[0].lineality.len(), 1);
        let sk = skeleton(&p);
        assert_eq!(sk.maximal_cones, vec![Cone::zero()]);
        assert!(in_support(&sk, &[Rat::zero()]));
        assert!(!in_support(&sk, &[rat_i(1)]));
    }

    #[test]
    fn skeleton_of_diagonals() {
        // Newt of (t1+t2)(t1 t2+1) - 4 t1 t2: skeleton rays are the four
        // diagonal directions
        let d = parse_laurent("t1^2*t2 + t1*t2^2 + t1 + t2 - 4*t1*t2", 2).unwrap();
        let sup: Vec<Vec<Rat>> = d.support().iter().map(|e| rat_point(e)).collect();
        let p = convex_hull(&sup).unwrap();
        let sk = skeleton(&p);
        assert_eq!(
            ray_set(&sk),
            vec![vec![-1, -1], vec![-1, 1], vec![1, -1], vec![1, 1]]
        );
    }

    #[test]
    fn membership_examples() {
        let p = convex_hull(&pts(&[&[0, 0], &[1, 0], &[0, 1]])).unwrap();
        let sk = skeleton(&p);
        let c = cone_membership(&sk, &rat_point(&[-1, -1])).unwrap();
        assert_eq!(c.rays, vec![vec![Int::from(-1), Int::from(-1)]]);
        let c0 = cone_membership(&sk, &rat_point(&[0, 0])).unwrap();
        assert!(c0.rays.is_empty());
        assert!(cone_membership(&sk, &rat_point(&[2, 1])).is_none());
        // completeness of the full normal fan
        let f = normal_fan(&p);
        assert!(cone_membership(&f, &rat_point(&[2, 1])).is_some());
    }

    #[test]
    fn normal_fan_complete_random() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        for _ in 0..50 {
            let npts = rng.gen_range(1..=7);
            let points: Vec<Vec<Rat>> = (0..npts)
                .map(|_| (0..2).map(|_| rat_i(rng.gen_range(-4..=4))).collect())
                .collect();
            let p = convex_hull(&points).unwrap();
            let f = normal_fan(&p);
            for _ in 0..20 {
                let w: Vec<Rat> = (0..2).map(|_| rat_i(rng.gen_range(-9..=9))).collect();
                assert!(cone_membership(&f, &w).is_some());
            }
        }
    }

    #[test]
    fn polar_involution() {
        // centered square
        let p = convex_hull(&pts(&[&[1, 1], &[-1, 1], &[1, -1], &[-1, -1]])).unwrap();
        let d = polar_dual(&p).unwrap();
        let dd = polar_dual(&d).unwrap();
        let mut a = p.vertices.clone();
        let mut b = dd.vertices.clone();
        a.sort();
        b.sort();
        assert_eq!(a, b);
        // normal fan of p equals face fan of dual: ray directions of the
        // normal fan are the dual's vertex directions
        let nf = normal_fan(&p);
        let mut rays = ray_set(&nf);
        rays.sort();
        let mut dirs: Vec<Vec<i64>> = d
            .vertices
            .iter()
            .map(|v| {
                primitive_row(v).iter().map(|x| i64::try_from(x).unwrap()).collect()
            })
            .collect();
        dirs.sort();
        assert_eq!(rays, dirs);
    }

    #[test]
    fn ball_one_variable() {
        let d = parse_laurent("t1 + t1^-1 - 2", 1).unwrap();
        let b = alexander_ball(&d).unwrap();
        assert!(b.bounded);
        let p = b.polytope.unwrap();
        let mut vs = p.vertices.clone();
        vs.sort();
        let half = Rat::new(Int::one(), Int::from(2));
        assert_eq!(vs, vec![vec![-half.clone()], vec![half]]);
    }

    #[test]
    fn ball_hopf_slab() {
        let d = parse_laurent("t1*t2*t3 - 1", 3).unwrap();
        let b = alexander_ball(&d).unwrap();
        assert!(!b.bounded);
        // |y1+y2+y3| <= 1
        assert!(b.contains(&rat_point(&[1, 0, -1])));
        assert!(b.contains(&[
            Rat::new(Int::one(), Int::from(3)),
            Rat::new(Int::one(), Int::from(3)),
            Rat::new(Int::one(), Int::from(3))
        ]));
        assert!(!b.contains(&rat_point(&[1, 1, 0])));
    }

    #[test]
    fn ball_quadrilateral() {
        let d = parse_laurent("t1^2*t2 + t1*t2^2 + t1 + t2 - 4*t1*t2", 2).unwrap();
        let b = alexander_ball(&d).unwrap();
        assert!(b.bounded);
        assert_eq!(b.polytope.unwrap().facets.len(), 4);
    }

    #[test]
    fn ball_rejects_asymmetric() {
        let d = parse_laurent("t1 - 2", 1).unwrap();
        assert_eq!(alexander_ball(&d), Err(PolyError::NotSymmetric));
    }

    #[test]
    fn linear_image_examples() {
        let p = convex_hull(&pts(&[&[0], &[1]])).unwrap();
        let sk = skeleton(&p); // {0} in R^1? no: segment in R^1, skeleton = {0}
        let a = IMat::from_i64(&[vec![2], vec![3]]);
        let img = linear_image(&sk, &a).unwrap();
        assert_eq!(img.ambient, 2);
        // ray primitivization under scaling
        let p2 = convex_hull(&pts(&[&[0, 0], &[1, 0], &[0, 1]])).unwrap();
        let f2 = skeleton(&p2);
        let scale = IMat::from_i64(&[vec![2, 0], vec![0, 3]]);
        assert!(linear_image(&f2, &scale).is_ok());
        let img2 = linear_image(&f2, &scale).unwrap();
        assert!(ray_set(&img2).contains(&vec![1, 0]));
    }
}
