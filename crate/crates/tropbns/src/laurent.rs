//! Sparse multivariate Laurent polynomials with exact coefficients,
//! canonical normal forms up to monomial units, and gcd.

use std::collections::BTreeMap;
use std::fmt;

use num::bigint::BigInt;
use num::{One, Signed};

use crate::gcd::{rec_gcd, IntRing, Rec, Ring};

/// Laurent polynomial in `num_vars` variables over the ring `R`.
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq)]
pub struct LaurentPoly<R: Ring = IntRing> {
    pub ring: R,
    pub num_vars: usize,
    pub terms: BTreeMap<Vec<i64>, R::Elem>,
}

impl<R: Ring> LaurentPoly<R> {
    pub fn zero(ring: R, num_vars: usize) -> Self {
        LaurentPoly { ring, num_vars, terms: BTreeMap::new() }
    }

    pub fn constant(ring: R, num_vars: usize, c: R::Elem) -> Self {
        let mut p = LaurentPoly::zero(ring, num_vars);
        p.add_term(vec![0; num_vars], c);
        p
    }

    pub fn one(ring: R, num_vars: usize) -> Self {
        let c = ring.one();
        LaurentPoly::constant(ring, num_vars, c)
    }

    pub fn monomial(ring: R, exps: Vec<i64>, c: R::Elem) -> Self {
        let n = exps.len();
        let mut p = LaurentPoly::zero(ring, n);
        p.add_term(exps, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exps: Vec<i64>, c: R::Elem) {
        assert_eq!(exps.len(), self.num_vars);
        if self.ring.is_zero(&c) {
            return;
        }
        let new = match self.terms.get(&exps) {
            Some(v) => self.ring.add(v, &c),
            None => c,
        };
        if self.ring.is_zero(&new) {
            self.terms.remove(&exps);
        } else {
            self.terms.insert(exps, new);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.num_vars, other.num_vars);
        assert_eq!(self.ring, other.ring);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            ring: self.ring.clone(),
            num_vars: self.num_vars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), self.ring.neg(c))).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.num_vars, other.num_vars);
        assert_eq!(self.ring, other.ring);
        let mut out = LaurentPoly::zero(self.ring.clone(), self.num_vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<i64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, self.ring.mul(c1, c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        let mut out = LaurentPoly::zero(self.ring.clone(), self.num_vars);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), self.ring.mul(v, c));
        }
        out
    }

    /// Exponent vectors of the support.
    pub fn support(&self) -> Vec<Vec<i64>> {
        self.terms.keys().cloned().collect()
    }

    fn min_exponents(&self) -> Vec<i64> {
        let mut m = vec![i64::MAX; self.num_vars];
        for e in self.terms.keys() {
            for (mi, &ei) in m.iter_mut().zip(e) {
                *mi = (*mi).min(ei);
            }
        }
        m
    }

    /// Graded-lex maximal exponent vector of the support.
    fn leading_exponent(&self) -> Option<Vec<i64>> {
        self.terms
            .keys()
            .max_by(|a, b| {
                let da: i64 = a.iter().sum();
                let db: i64 = b.iter().sum();
                da.cmp(&db).then_with(|| a.cmp(b))
            })
            .cloned()
    }

    /// Canonical form: divide out the full monomial content so each
    /// variable has minimal exponent 0, then scale by a unit so the
    /// graded-lex leading coefficient is canonical.
    pub fn normalize(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let m = self.min_exponents();
        let mut shifted = LaurentPoly::zero(self.ring.clone(), self.num_vars);
        for (e, c) in &self.terms {
            let ne: Vec<i64> = e.iter().zip(&m).map(|(a, b)| a - b).collect();
            shifted.add_term(ne, c.clone());
        }
        let lead = shifted.terms[&shifted.leading_exponent().unwrap()].clone();
        let u = self.ring.canonical_unit_inv(&lead);
        shifted.scale(&u)
    }

    /// Mirror `t -> t^{-1}` in every variable.
    pub fn invert_variables(&self) -> Self {
        LaurentPoly {
            ring: self.ring.clone(),
            num_vars: self.num_vars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().map(|x| -x).collect(), c.clone()))
                .collect(),
        }
    }

    /// True iff the normalized form is a nonzero constant.
    pub fn is_unit(&self) -> bool {
        !self.is_zero() && self.terms.len() == 1
    }

    fn to_rec(&self) -> Rec<R::Elem> {
        // shift to ordinary polynomial first
        let p = if self.is_zero() { self.clone() } else { self.shift_nonneg() };
        let degs: Vec<usize> = (0..p.num_vars)
            .map(|i| p.terms.keys().map(|e| e[i] as usize).max().unwrap_or(0))
            .collect();
        build_rec(&p.ring, &p, &degs, p.num_vars, &mut vec![0i64; p.num_vars])
    }

    fn shift_nonneg(&self) -> Self {
        let m = self.min_exponents();
        let mut out = LaurentPoly::zero(self.ring.clone(), self.num_vars);
        for (e, c) in &self.terms {
            out.add_term(e.iter().zip(&m).map(|(a, b)| a - b).collect(), c.clone());
        }
        out
    }

    fn from_rec(ring: R, num_vars: usize, r: &Rec<R::Elem>) -> Self {
        let mut out = LaurentPoly::zero(ring.clone(), num_vars);
        collect_rec(&ring, r, num_vars, &mut vec![0i64; num_vars], &mut out);
        out
    }

    /// Gcd up to monomial units, returned in canonical form.
    /// `gcd(f, 0) = normalize(f)`, `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        assert_eq!(self.num_vars, other.num_vars);
        if self.is_zero() {
            return other.normalize();
        }
        if other.is_zero() {
            return self.normalize();
        }
        let g = rec_gcd(&self.ring, &self.to_rec(), &other.to_rec());
        LaurentPoly::from_rec(self.ring.clone(), self.num_vars, &g).normalize()
    }
}

fn build_rec<R: Ring>(
    ring: &R,
    p: &LaurentPoly<R>,
    degs: &[usize],
    level: usize,
    prefix: &mut Vec<i64>,
) -> Rec<R::Elem> {
    if level == 0 {
        let c = p.terms.get(prefix).cloned().unwrap_or_else(|| ring.zero());
        return Rec::Leaf(c);
    }
    // variable index for this level: level-1 is filled last, so index
    // variables from the back: top level handles the last variable
    let var = level - 1;
    let mut coeffs = Vec::with_capacity(degs[var] + 1);
    for d in 0..=degs[var] {
        prefix[var] = d as i64;
        coeffs.push(build_rec(ring, p, degs, level - 1, prefix));
    }
    prefix[var] = 0;
    // trim trailing zeros
    while coeffs.last().is_some_and(|c| crate::gcd::rec_is_zero(ring, c)) {
        coeffs.pop();
    }
    Rec::Node(coeffs)
}

fn collect_rec<R: Ring>(
    ring: &R,
    r: &Rec<R::Elem>,
    level: usize,
    prefix: &mut Vec<i64>,
    out: &mut LaurentPoly<R>,
) {
    match r {
        Rec::Leaf(c) => {
            assert_eq!(level, 0);
            if !ring.is_zero(c) {
                out.add_term(prefix.clone(), c.clone());
            }
        }
        Rec::Node(v) => {
            let var = level - 1;
            for (d, c) in v.iter().enumerate() {
                prefix[var] = d as i64;
                collect_rec(ring, c, level - 1, prefix, out);
            }
            prefix[var] = 0;
        }
    }
}

impl LaurentPoly<IntRing> {
    pub fn from_int_terms(num_vars: usize, terms: &[(Vec<i64>, i64)]) -> Self {
        let mut p = LaurentPoly::zero(IntRing, num_vars);
        for (e, c) in terms {
            p.add_term(e.clone(), BigInt::from(*c));
        }
        p
    }

    /// Width of the Newton polytope in the direction of the covector.
    pub fn alexander_norm(&self, phi: &[i64]) -> Option<BigInt> {
        if self.is_zero() {
            return None;
        }
        let vals: Vec<i64> = self
            .terms
            .keys()
            .map(|e| e.iter().zip(phi).map(|(a, b)| a * b).sum())
            .collect();
        let max = *vals.iter().max().unwrap();
        let min = *vals.iter().min().unwrap();
        Some(BigInt::from(max - min))
    }

    /// Invariance under the involution t -> t^{-1}, up to units and sign.
    pub fn is_symmetric(&self) -> bool {
        self.invert_variables().normalize() == self.normalize()
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum LaurentParseError {
    #[error("syntax error at position {0}: {1}")]
    Syntax(usize, String),
    #[error("variable index {0} out of range 1..={1}")]
    VarIndex(usize, usize),
}

/// Parse the text form `3*t1^2*t2^-1 + t2 - 4` over the integers.
pub fn parse_laurent(text: &str, num_vars: usize) -> Result<LaurentPoly<IntRing>, LaurentParseError> {
    let s = text.as_bytes();
    let mut pos = 0usize;
    let mut p = LaurentPoly::zero(IntRing, num_vars);

    fn skip_ws(s: &[u8], pos: &mut usize) {
        while *pos < s.len() && s[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    }

    fn integer(s: &[u8], pos: &mut usize) -> Option<i64> {
        skip_ws(s, pos);
        let start = *pos;
        if *pos < s.len() && (s[*pos] == b'-' || s[*pos] == b'+') {
            *pos += 1;
        }
        let d0 = *pos;
        while *pos < s.len() && s[*pos].is_ascii_digit() {
            *pos += 1;
        }
        if d0 == *pos {
            *pos = start;
            return None;
        }
        std::str::from_utf8(&s[start..*pos]).ok()?.parse().ok()
    }

    skip_ws(s, &mut pos);
    if pos == s.len() {
        return Err(LaurentParseError::Syntax(pos, "empty input".into()));
    }
    while pos < s.len() {
        skip_ws(s, &mut pos);
        let mut sign = 1i64;
        while pos < s.len() && (s[pos] == b'+' || s[pos] == b'-') {
            if s[pos] == b'-' {
                sign = -sign;
            }
            pos += 1;
            skip_ws(s, &mut pos);
        }
        if pos == s.len() {
            return Err(LaurentParseError::Syntax(pos, "dangling sign".into()));
        }
        // term: optional coefficient, then * separated t<i>^<k> factors
        let mut coeff = sign;
        let mut exps = vec![0i64; num_vars];
        loop {
            skip_ws(s, &mut pos);
            if pos < s.len() && s[pos].is_ascii_digit() {
                let c = integer(s, &mut pos)
                    .ok_or_else(|| LaurentParseError::Syntax(pos, "bad integer".into()))?;
                coeff *= c;
            } else if pos < s.len() && s[pos] == b't' {
                pos += 1;
                let idx_start = pos;
                while pos < s.len() && s[pos].is_ascii_digit() {
                    pos += 1;
                }
                if idx_start == pos {
                    return Err(LaurentParseError::Syntax(pos, "expected variable index".into()));
                }
                let idx: usize = std::str::from_utf8(&s[idx_start..pos])
                    .unwrap()
                    .parse()
                    .map_err(|_| LaurentParseError::Syntax(idx_start, "bad index".into()))?;
                if idx == 0 || idx > num_vars {
                    return Err(LaurentParseError::VarIndex(idx, num_vars));
                }
                let mut e = 1i64;
                skip_ws(s, &mut pos);
                if pos < s.len() && s[pos] == b'^' {
                    pos += 1;
                    e = integer(s, &mut pos)
                        .ok_or_else(|| LaurentParseError::Syntax(pos, "bad exponent".into()))?;
                }
                exps[idx - 1] += e;
            } else {
                return Err(LaurentParseError::Syntax(pos, "expected coefficient or variable".into()));
            }
            skip_ws(s, &mut pos);
            if pos < s.len() && s[pos] == b'*' {
                pos += 1;
            } else {
                break;
            }
        }
        p.add_term(exps, BigInt::from(coeff));
        skip_ws(s, &mut pos);
        if pos < s.len() && s[pos] != b'+' && s[pos] != b'-' {
            return Err(LaurentParseError::Syntax(pos, "expected `+` or `-`".into()));
        }
    }
    Ok(p)
}

impl fmt::Display for LaurentPoly<IntRing> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // graded-lex descending
        let mut keys: Vec<&Vec<i64>> = self.terms.keys().collect();
        keys.sort_by(|a, b| {
            let da: i64 = a.iter().sum();
            let db: i64 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        let mut first = true;
        for e in keys {
            let c = &self.terms[e];
            let mag = c.abs();
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || e.iter().all(|&x| x == 0) {
                factors.push(mag.to_string());
            }
            for (i, &x) in e.iter().enumerate() {
                if x == 1 {
                    factors.push(format!("t{}", i + 1));
                } else if x != 0 {
                    factors.push(format!("t{}^{}", i + 1, x));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(text: &str, n: usize) -> LaurentPoly<IntRing> {
        parse_laurent(text, n).unwrap()
    }

    #[test]
    fn arith_difference_of_squares() {
        let a = lp("t1 + 1", 1);
        let b = lp("t1 - 1", 1);
        assert_eq!(a.mul(&b), lp("t1^2 - 1", 1));
    }

    #[test]
    fn normalize_strips_monomial_unit() {
        // -t1^-1*t2 + t2^2*t1^-1 normalizes to t2 - 1
        let p = lp("-t1^-1*t2 + t2^2*t1^-1", 2);
        assert_eq!(p.normalize(), lp("t2 - 1", 2));
    }

    #[test]
    fn normalize_zero() {
        let z = LaurentPoly::zero(IntRing, 2);
        assert_eq!(z.normalize(), z);
    }

    #[test]
    fn gcd_examples() {
        // gcd(t1 t2 - t2, t2^2 - t2) = t2 * gcd(t1-1, t2-1) = t2, a unit:
        // canonical form 1
        let f = lp("t1*t2 - t2", 2);
        let g = lp("t2^2 - t2", 2);
        assert_eq!(f.gcd(&g), lp("1", 2));
        // idempotence
        let h = lp("2*t1 + 4*t2", 2);
        assert_eq!(h.gcd(&h), h.normalize());
        // zero convention
        let z = LaurentPoly::zero(IntRing, 2);
        assert_eq!(z.gcd(&z), z);
        assert_eq!(z.gcd(&h), h.normalize());
    }

    #[test]
    fn gcd_common_factor() {
        let h = lp("t1 + t2 + 1", 2);
        let f = h.mul(&lp("t1 - t2", 2));
        let g = h.mul(&lp("t1 + t2", 2));
        assert_eq!(f.gcd(&g), h.normalize());
    }

    #[test]
    fn norm_examples() {
        let d = lp("t1 + t2 + 1", 2);
        assert_eq!(d.alexander_norm(&[1, 0]), Some(BigInt::from(1)));
        let one = lp("1", 2);
        assert_eq!(one.alexander_norm(&[5, -3]), Some(BigInt::from(0)));
        let hopf = lp("t1*t2*t3 - 1", 3);
        assert_eq!(hopf.alexander_norm(&[1, 1, 1]), Some(BigInt::from(3)));
        assert!(LaurentPoly::zero(IntRing, 2).alexander_norm(&[1, 0]).is_none());
    }

    #[test]
    fn symmetry_examples() {
        assert!(lp("t2 + 1", 2).is_symmetric());
        assert!(!lp("t1 - 2", 2).is_symmetric());
        let m = lp("t1 + t2", 2).mul(&lp("t1*t2 + 1", 2)).sub(&lp("4*t1*t2", 2));
        assert!(m.is_symmetric());
    }

    #[test]
    fn display_roundtrip() {
        let p = lp("3*t1^2*t2^-1 + t2 - 4", 2);
        let text = p.to_string();
        assert_eq!(lp(&text, 2), p);
        assert_eq!(text, "3*t1^2*t2^-1 + t2 - 4");
    }
}
