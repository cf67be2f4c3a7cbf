//! JSON in/out for the command line tool. Everything funnels through
//! `serde_json::Value` so reports round-trip byte-for-byte; exact
//! rationals are carried as strings.

use num::{BigRational, Zero};
use serde_json::{json, Map, Value};

use crate::alexander::{
    alexander_polynomial, component_analysis, AlexError, CharComponent, CharVarietyDescription,
    Outcome,
};
use crate::cyclotomic::{euler_phi, Cyclotomic};
use crate::gcd::CycField;
use crate::laurent::{parse_laurent, LaurentPoly};
use crate::linalg::{IMat, Rat};
use crate::polyhedra::{convex_hull, rat_point, Polytope};
use crate::presentation::{abelianize, GroupPresentation};
use crate::sigma::{
    betti_two, brieskorn, brown_rank1, brown_rank2, orbifold_cv, pencil_bound,
    seifert_sigma, sigma_bound_from_trop, verify_inclusion, ArcSet, BrieskornData, Convention,
    CvClass, Direction, InclusionReport, OrbifoldData, SeifertData, SeifertVerdict, SigmaError,
    SphereBound,
};
use crate::tropical::{trop_char_variety, TropPiece, TropSet};

/// Tool level failure with the exit code it maps to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CmdError {
    /// Exit code 2.
    Parse(String),
    /// Exit code 3.
    Unsupported(String),
    /// Exit code 4.
    Invariant(String),
}

impl CmdError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CmdError::Parse(_) => 2,
            CmdError::Unsupported(_) => 3,
            CmdError::Invariant(_) => 4,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CmdError::Parse(m) | CmdError::Unsupported(m) | CmdError::Invariant(m) => m,
        }
    }
}

impl From<SigmaError> for CmdError {
    fn from(e: SigmaError) -> Self {
        CmdError::Unsupported(e.to_string())
    }
}

pub fn rat_str(r: &Rat) -> String {
    r.to_string()
}

pub fn parse_rat(v: &Value) -> Result<Rat, CmdError> {
    match v {
        Value::String(s) => s
            .parse::<BigRational>()
            .map_err(|e| CmdError::Parse(format!("bad rational {s:?}: {e}"))),
        Value::Number(n) => n
            .as_i64()
            .map(|k| Rat::from_integer(k.into()))
            .ok_or_else(|| CmdError::Parse(format!("bad rational {n}"))),
        _ => Err(CmdError::Parse(format!("expected rational, got {v}"))),
    }
}

fn int_rows(rows: &[Vec<i64>]) -> Value {
    json!(rows)
}

fn rat_vec(v: &[Rat]) -> Value {
    Value::Array(v.iter().map(|r| Value::String(rat_str(r))).collect())
}

// ---------------------------------------------------------------------------
// tropical sets

fn cone_to_json(rays: &[Vec<num::BigInt>], lineality: &[Vec<num::BigInt>]) -> (Vec<Vec<i64>>, ()) {
    // lineality rows become +-ray pairs so the cone list stays flat
    let mut out: Vec<Vec<i64>> = Vec::new();
    for r in rays {
        out.push(r.iter().map(|x| int_to_i64(x)).collect());
    }
    for l in lineality {
        let row: Vec<i64> = l.iter().map(|x| int_to_i64(x)).collect();
        out.push(row.iter().map(|x| -x).collect());
        out.push(row);
    }
    (out, ())
}

fn int_to_i64(x: &num::BigInt) -> i64 {
    use num::ToPrimitive;
    x.to_i64().expect("ray coordinate out of i64 range")
}

pub fn trop_to_json(t: &TropSet) -> Value {
    match t {
        TropSet::FullSpace { ambient } => json!({ "full_space": ambient }),
        TropSet::Empty { ambient } => json!({ "ambient": ambient, "empty": true }),
        TropSet::Union { ambient, pieces } => {
            let mut rays: Vec<Vec<i64>> = Vec::new();
            let mut cones: Vec<Vec<usize>> = Vec::new();
            let lineality: Vec<Vec<i64>> = Vec::new();
            let ray_index = |rays: &mut Vec<Vec<i64>>, r: Vec<i64>| -> usize {
                if let Some(i) = rays.iter().position(|x| *x == r) {
                    i
                } else {
                    rays.push(r);
                    rays.len() - 1
                }
            };
            let mut nested: Vec<Value> = Vec::new();
            for p in pieces {
                match p {
                    TropPiece::Hypersurface { fan, .. } => {
                        for c in &fan.maximal_cones {
                            let (gens, ()) = cone_to_json(&c.rays, &fan.lineality);
                            let idx: Vec<usize> =
                                gens.into_iter().map(|g| ray_index(&mut rays, g)).collect();
                            cones.push(idx);
                        }
                    }
                    TropPiece::Subspace { basis } => {
                        if basis.is_empty() {
                            cones.push(vec![]);
                        } else {
                            let mut idx = Vec::new();
                            for b in basis {
                                idx.push(ray_index(&mut rays, b.iter().map(|x| -x).collect()));
                                idx.push(ray_index(&mut rays, b.clone()));
                            }
                            cones.push(idx);
                        }
                    }
                    TropPiece::Image { matrix, inner } => {
                        nested.push(json!({
                            "matrix": imat_to_json(matrix),
                            "inner": trop_to_json(inner),
                        }));
                    }
                }
            }
            let mut obj = Map::new();
            obj.insert("ambient".into(), json!(ambient));
            obj.insert("lineality".into(), int_rows(&lineality));
            obj.insert("rays".into(), int_rows(&rays));
            obj.insert("maximal_cones".into(), json!(cones));
            if !nested.is_empty() {
                obj.insert("images".into(), Value::Array(nested));
            }
            Value::Object(obj)
        }
    }
}

fn imat_to_json(m: &IMat) -> Value {
    let rows: Vec<Vec<i64>> =
        m.data.iter().map(|r| r.iter().map(int_to_i64).collect()).collect();
    json!(rows)
}

// ---------------------------------------------------------------------------
// polytopes

pub fn polytope_to_json(p: &Polytope) -> Value {
    json!({
        "ambient": p.ambient,
        "dim": p.dim,
        "vertices": p.vertices.iter().map(|v| rat_vec(v)).collect::<Vec<_>>(),
        "facets": p.facets.iter().map(|f| json!({
            "normal": f.normal.iter().map(int_to_i64).collect::<Vec<_>>(),
            "offset": rat_str(&f.offset),
        })).collect::<Vec<_>>(),
    })
}

// ---------------------------------------------------------------------------
// sphere bounds

pub fn arcset_to_json(a: &ArcSet) -> Value {
    json!({
        "full_circle": a.full_circle,
        "arcs": a.arcs.iter().map(|arc| json!([arc.start, arc.end])).collect::<Vec<_>>(),
        "excluded": int_rows(&a.excluded),
    })
}

pub fn bound_to_json(b: &SphereBound) -> Value {
    let mut v = match b {
        SphereBound::Full { ambient } => json!({ "kind": "full", "ambient": ambient }),
        SphereBound::Empty { ambient } => json!({ "kind": "empty", "ambient": ambient }),
        SphereBound::ComplementOfTrop { trop, antipodal } => json!({
            "kind": "complement_of_trop",
            "antipodal": antipodal,
            "trop": trop_to_json(trop),
        }),
        SphereBound::Arcs(a) => {
            let mut o = json!({ "kind": "arcs" });
            merge(&mut o, arcset_to_json(a));
            o
        }
        SphereBound::FacetCones { ambient, vertices } => json!({
            "kind": "facet_cones",
            "ambient": ambient,
            "vertices": vertices.iter().map(|v| rat_vec(v)).collect::<Vec<_>>(),
        }),
    };
    if let Some(ex) = crate::sigma::excluded_directions(b) {
        merge(&mut v, json!({ "excluded_directions": int_rows(&ex) }));
    }
    v
}

fn merge(dst: &mut Value, src: Value) {
    if let (Value::Object(d), Value::Object(s)) = (dst, src) {
        for (k, v) in s {
            d.insert(k, v);
        }
    }
}

// ---------------------------------------------------------------------------
// characteristic variety descriptions

fn cyc_to_json(c: &Cyclotomic) -> Value {
    rat_vec(&c.coeffs)
}

fn poly_terms_to_json(f: &LaurentPoly<CycField>) -> Value {
    Value::Array(
        f.terms
            .iter()
            .map(|(e, c)| json!({ "exponents": e, "coeff": cyc_to_json(c) }))
            .collect(),
    )
}

pub fn cv_to_json(d: &CharVarietyDescription) -> Value {
    let comps: Vec<Value> = d
        .components
        .iter()
        .map(|c| match c {
            CharComponent::Computed { character, outcome } => {
                let mut o = json!({ "character": character });
                let extra = match outcome {
                    Outcome::Full => json!({ "outcome": "full" }),
                    Outcome::FiniteOrEmpty => json!({ "outcome": "finite_or_empty" }),
                    Outcome::Hypersurface(f) => json!({
                        "outcome": "hypersurface",
                        "polynomial_terms": poly_terms_to_json(f),
                    }),
                };
                merge(&mut o, extra);
                o
            }
            CharComponent::Direct { lattice, translation_q, torsion_translation } => json!({
                "lattice": int_rows(lattice),
                "translation": rat_vec(translation_q),
                "torsion_translation": torsion_translation,
            }),
        })
        .collect();
    json!({
        "rank": d.rank,
        "torsion": d.torsion_invariants,
        "components": comps,
    })
}

fn get<'a>(v: &'a Value, key: &str) -> Result<&'a Value, CmdError> {
    v.get(key).ok_or_else(|| CmdError::Parse(format!("missing field {key:?}")))
}

fn as_usize(v: &Value, what: &str) -> Result<usize, CmdError> {
    v.as_u64().map(|x| x as usize).ok_or_else(|| CmdError::Parse(format!("bad {what}: {v}")))
}

fn as_u64_vec(v: &Value, what: &str) -> Result<Vec<u64>, CmdError> {
    v.as_array()
        .ok_or_else(|| CmdError::Parse(format!("bad {what}: {v}")))?
        .iter()
        .map(|x| x.as_u64().ok_or_else(|| CmdError::Parse(format!("bad {what} entry: {x}"))))
        .collect()
}

fn as_i64_rows(v: &Value, what: &str) -> Result<Vec<Vec<i64>>, CmdError> {
    v.as_array()
        .ok_or_else(|| CmdError::Parse(format!("bad {what}: {v}")))?
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| CmdError::Parse(format!("bad {what} row: {row}")))?
                .iter()
                .map(|x| {
                    x.as_i64().ok_or_else(|| CmdError::Parse(format!("bad {what} entry: {x}")))
                })
                .collect()
        })
        .collect()
}

fn poly_from_json(
    v: &Value,
    rank: usize,
    order: u64,
) -> Result<LaurentPoly<CycField>, CmdError> {
    let field = CycField(order);
    let phi = euler_phi(order);
    if let Some(text) = v.get("polynomial").and_then(|t| t.as_str()) {
        let p = parse_laurent(text, rank)
            .map_err(|e| CmdError::Parse(format!("bad polynomial {text:?}: {e:?}")))?;
        let mut out = LaurentPoly::zero(field, rank);
        for (e, c) in &p.terms {
            out.add_term(e.clone(), Cyclotomic::from_rational(order, Rat::from(c.clone())));
        }
        return Ok(out);
    }
    let terms = get(v, "polynomial_terms")?
        .as_array()
        .ok_or_else(|| CmdError::Parse("polynomial_terms must be a list".into()))?;
    let mut out = LaurentPoly::zero(field, rank);
    for t in terms {
        let exps: Vec<i64> = get(t, "exponents")?
            .as_array()
            .ok_or_else(|| CmdError::Parse("bad exponents".into()))?
            .iter()
            .map(|x| x.as_i64().ok_or_else(|| CmdError::Parse("bad exponent".into())))
            .collect::<Result<_, _>>()?;
        if exps.len() != rank {
            return Err(CmdError::Parse("exponent vector length differs from rank".into()));
        }
        let cv = get(t, "coeff")?;
        let coeff = match cv {
            Value::Number(_) => Cyclotomic::from_rational(order, parse_rat(cv)?),
            Value::String(_) => Cyclotomic::from_rational(order, parse_rat(cv)?),
            Value::Array(items) => {
                let mut coeffs: Vec<Rat> =
                    items.iter().map(parse_rat).collect::<Result<_, _>>()?;
                if coeffs.len() > phi {
                    return Err(CmdError::Parse("coefficient vector longer than phi(m)".into()));
                }
                coeffs.resize(phi, Rat::zero());
                Cyclotomic { order, coeffs }
            }
            _ => return Err(CmdError::Parse(format!("bad coeff: {cv}"))),
        };
        out.add_term(exps, coeff);
    }
    Ok(out)
}

pub fn cv_from_json(v: &Value) -> Result<CharVarietyDescription, CmdError> {
    let rank = as_usize(get(v, "rank")?, "rank")?;
    let torsion = match v.get("torsion") {
        Some(t) => as_u64_vec(t, "torsion")?,
        None => vec![],
    };
    let order = torsion.iter().fold(1u64, |acc, &d| num::integer::lcm(acc, d));
    let comps = get(v, "components")?
        .as_array()
        .ok_or_else(|| CmdError::Parse("components must be a list".into()))?;
    let mut components = Vec::new();
    for c in comps {
        if c.get("lattice").is_some() {
            let lattice = as_i64_rows(get(c, "lattice")?, "lattice")?;
            for row in &lattice {
                if row.len() != rank {
                    return Err(CmdError::Parse("lattice row length differs from rank".into()));
                }
            }
            let translation_q: Vec<Rat> = match c.get("translation") {
                Some(t) => t
                    .as_array()
                    .ok_or_else(|| CmdError::Parse("translation must be a list".into()))?
                    .iter()
                    .map(parse_rat)
                    .collect::<Result<_, _>>()?,
                None => vec![Rat::zero(); rank],
            };
            if translation_q.len() != rank {
                return Err(CmdError::Parse("translation length differs from rank".into()));
            }
            let torsion_translation = match c.get("torsion_translation") {
                Some(t) => as_u64_vec(t, "torsion_translation")?,
                None => vec![0; torsion.len()],
            };
            if torsion_translation.len() != torsion.len() {
                return Err(CmdError::Parse(
                    "torsion_translation length differs from torsion".into(),
                ));
            }
            components.push(CharComponent::Direct { lattice, translation_q, torsion_translation });
        } else {
            let character = as_u64_vec(get(c, "character")?, "character")?;
            if character.len() != torsion.len() {
                return Err(CmdError::Parse("character length differs from torsion".into()));
            }
            let outcome = match get(c, "outcome")?.as_str() {
                Some("full") => Outcome::Full,
                Some("finite_or_empty") => Outcome::FiniteOrEmpty,
                Some("hypersurface") => Outcome::Hypersurface(poly_from_json(c, rank, order)?),
                other => return Err(CmdError::Parse(format!("bad outcome: {other:?}"))),
            };
            components.push(CharComponent::Computed { character, outcome });
        }
    }
    Ok(CharVarietyDescription { rank, torsion_invariants: torsion, components })
}

pub fn pencils_from_json(v: &Value) -> Result<(usize, Vec<IMat>), CmdError> {
    let n = as_usize(get(v, "ambient")?, "ambient")?;
    let mats = get(v, "matrices")?
        .as_array()
        .ok_or_else(|| CmdError::Parse("matrices must be a list".into()))?;
    let mut out = Vec::new();
    for m in mats {
        let rows = as_i64_rows(m, "matrix")?;
        if rows.is_empty() || rows.iter().any(|r| r.len() != rows[0].len()) {
            return Err(CmdError::Parse("matrix rows must be nonempty and equal length".into()));
        }
        if rows.len() != n {
            return Err(CmdError::Parse("matrix must have `ambient` rows".into()));
        }
        out.push(IMat::from_i64(&rows));
    }
    Ok((n, out))
}

// ---------------------------------------------------------------------------
// orbifold / Seifert inputs

pub fn orbifold_from_json(v: &Value) -> Result<OrbifoldData, CmdError> {
    Ok(OrbifoldData {
        genus: get(v, "genus")?.as_u64().ok_or_else(|| CmdError::Parse("bad genus".into()))?,
        punctures: v.get("punctures").and_then(|x| x.as_u64()).unwrap_or(0),
        weights: match v.get("weights") {
            Some(w) => as_u64_vec(w, "weights")?,
            None => vec![],
        },
    })
}

pub fn seifert_from_json(v: &Value) -> Result<SeifertData, CmdError> {
    let genus = get(v, "genus")?.as_u64().ok_or_else(|| CmdError::Parse("bad genus".into()))?;
    let orbits: Vec<(u64, i64)> = match v.get("orbits") {
        Some(o) => as_i64_rows(o, "orbits")?
            .into_iter()
            .map(|pair| {
                if pair.len() != 2 || pair[0] < 1 {
                    Err(CmdError::Parse("each orbit must be a pair [alpha, beta]".into()))
                } else {
                    Ok((pair[0] as u64, pair[1]))
                }
            })
            .collect::<Result<_, _>>()?,
        None => vec![],
    };
    let probe = SeifertData::new(genus, orbits.clone(), Rat::zero())
        .map_err(|e| CmdError::Parse(e.to_string()))?;
    let e = match v.get("e") {
        Some(x) => parse_rat(x)?,
        None => probe.euler_from_orbits(),
    };
    SeifertData::new(genus, orbits, e).map_err(|e| CmdError::Parse(e.to_string()))
}

// ---------------------------------------------------------------------------
// pipelines

/// Full pipeline for a presentation: abelianization, Alexander
/// polynomial, per-character minor analysis, tropicalization, bound,
/// and when the input is a two-generator commutator-relator group, the
/// exact circle computation plus the inclusion check.
pub struct Analysis {
    pub report: Value,
    pub bound: SphereBound,
    pub ground: Option<SphereBound>,
    pub trop: TropSet,
    pub violation: Option<Direction>,
}

pub fn analyze(
    p: &GroupPresentation,
    max_cyclotomic: u64,
    height: i64,
) -> Result<Analysis, CmdError> {
    let ab = abelianize(p);
    let mut obj = Map::new();
    obj.insert("presentation".into(), json!(p.to_string()));
    obj.insert("generators".into(), json!(p.num_generators));
    obj.insert(
        "abelianization".into(),
        json!({
            "rank": ab.rank,
            "torsion": ab.torsion_invariants.iter().map(int_to_i64).collect::<Vec<_>>(),
        }),
    );
    if ab.rank == 0 {
        return Err(CmdError::Unsupported(
            "first Betti number is zero; the character sphere is empty".into(),
        ));
    }

    match alexander_polynomial(p) {
        Ok(delta) => {
            obj.insert("alexander_polynomial".into(), json!(delta.to_string()));
            if !delta.is_zero() {
                let pts: Vec<Vec<Rat>> =
                    delta.support().iter().map(|e| rat_point(e)).collect();
                if let Ok(hull) = convex_hull(&pts) {
                    obj.insert("newton_polytope".into(), polytope_to_json(&hull));
                }
            }
        }
        Err(e) => {
            obj.insert("alexander_polynomial".into(), Value::Null);
            obj.insert("alexander_note".into(), json!(e.to_string()));
        }
    }

    let cv = component_analysis(p, max_cyclotomic).map_err(|e| match e {
        AlexError::TorsionTooLarge(_, _) => CmdError::Unsupported(e.to_string()),
        other => CmdError::Unsupported(other.to_string()),
    })?;
    obj.insert("characteristic_variety".into(), cv_to_json(&cv));

    let trop = trop_char_variety(&cv);
    obj.insert("tropical".into(), trop_to_json(&trop));
    let bound = sigma_bound_from_trop(trop.clone(), Convention::Sigma1);
    obj.insert("bound".into(), bound_to_json(&bound));

    let mut ground = None;
    let mut violation = None;
    if p.num_generators == 2 && p.relators.len() == 1 && betti_two(p) {
        match brown_rank2(p) {
            Ok(g) => {
                obj.insert("brown".into(), bound_to_json(&g));
                match verify_inclusion(&g, &bound, height) {
                    Ok(InclusionReport::Holds) => {
                        obj.insert("verification".into(), json!("holds"));
                    }
                    Ok(InclusionReport::Violation(d)) => {
                        obj.insert("verification".into(), json!({ "violation": d.0 }));
                        violation = Some(d.clone());
                    }
                    Err(e) => {
                        obj.insert("verification".into(), json!({ "skipped": e.to_string() }));
                    }
                }
                ground = Some(g);
            }
            Err(SigmaError::NotCommutator) => {}
            Err(e) => {
                obj.insert("brown".into(), json!({ "skipped": e.to_string() }));
            }
        }
    } else if p.num_generators == 2 && p.relators.len() == 1 && ab.rank == 1 {
        let chi = Direction::new(vec![1]).unwrap();
        if let Ok((pos, neg)) = brown_rank1(p, &chi) {
            obj.insert(
                "brown".into(),
                json!({ "rank": 1, "sigma1_contains": { "+1": pos, "-1": neg } }),
            );
        }
    }

    Ok(Analysis { report: Value::Object(obj), bound, ground, trop, violation })
}

/// Bound from a characteristic variety description given directly.
pub fn bound_from_cv(cv: &CharVarietyDescription) -> (Value, SphereBound) {
    let trop = trop_char_variety(cv);
    let bound = sigma_bound_from_trop(trop.clone(), Convention::Sigma1);
    let report = json!({
        "characteristic_variety": cv_to_json(cv),
        "tropical": trop_to_json(&trop),
        "bound": bound_to_json(&bound),
    });
    (report, bound)
}

/// Bound from a list of pencils (holomorphic maps to curves recorded by
/// the induced inclusions on first cohomology).
pub fn bound_from_pencils(n: usize, pencils: &[IMat]) -> Result<(Value, SphereBound), CmdError> {
    let bound = pencil_bound(n, pencils)?;
    let report = json!({
        "ambient": n,
        "pencils": pencils.iter().map(imat_to_json).collect::<Vec<_>>(),
        "bound": bound_to_json(&bound),
    });
    Ok((report, bound))
}

pub fn orbifold_report(o: &OrbifoldData) -> Result<Value, CmdError> {
    let a = orbifold_cv(o)?;
    let class = match a.class {
        CvClass::FullGroup => "full_group",
        CvClass::FullMinusIdentityComponent => "full_minus_identity_component",
        CvClass::IdentityOnly => "identity_only",
    };
    Ok(json!({
        "input": { "genus": o.genus, "punctures": o.punctures, "weights": o.weights },
        "class": class,
        "theta": a.theta,
        "rank": a.rank,
        "sigma1_empty": a.sigma1_empty,
    }))
}

pub fn seifert_report(s: &SeifertData) -> Value {
    let verdict = match seifert_sigma(s) {
        SeifertVerdict::Empty => "empty",
        SeifertVerdict::Undetermined => "undetermined",
    };
    let p = s.presentation();
    let ab = abelianize(&p);
    json!({
        "input": {
            "genus": s.genus,
            "orbits": s.orbits.iter().map(|&(a, b)| vec![a as i64, b]).collect::<Vec<_>>(),
            "e": rat_str(&s.e),
        },
        "presentation": p.to_string(),
        "abelianization": {
            "rank": ab.rank,
            "torsion": ab.torsion_invariants.iter().map(int_to_i64).collect::<Vec<_>>(),
        },
        "sigma1_verdict": verdict,
    })
}

pub fn brieskorn_report(d: &BrieskornData) -> Value {
    let mut v = seifert_report(&d.seifert);
    merge(
        &mut v,
        json!({
            "exponents": d.exponents,
            "lcm": d.ell,
            "partial_lcms": d.ell_i,
            "multiplicities": d.s,
            "orbit_orders": d.alpha,
            "orbit_betas": d.beta,
            "genus": d.genus,
            "euler_number": rat_str(&d.e),
        }),
    );
    v
}

pub fn brieskorn_from_exponents(a: &[u64]) -> Result<Value, CmdError> {
    let d = brieskorn(a)?;
    Ok(brieskorn_report(&d))
}
