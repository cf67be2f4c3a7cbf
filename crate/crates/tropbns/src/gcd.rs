//! Multivariate polynomial gcd over the integers or over a cyclotomic
//! field, via recursive content/primitive-part reduction and primitive
//! pseudo-remainder sequences.

use num::bigint::BigInt;
use num::{One, Signed, Zero};

use crate::cyclotomic::Cyclotomic;

/// Coefficient ring descriptor. Elements carry no ring tag of their own
/// (a cyclotomic field needs its order), so every operation goes through
/// the descriptor.
pub trait Ring: Clone + PartialEq + std::fmt::Debug {
    type Elem: Clone + PartialEq + std::fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Gcd up to units; over a field: 0 if both zero, else 1.
    fn gcd(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Exact division, `None` if `a` is not a multiple of `b`.
    fn div_exact(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem>;
    /// Unit `u` such that `u * lead` is the canonical associate
    /// (positive over Z, 1 over a field).
    fn canonical_unit_inv(&self, lead: &Self::Elem) -> Self::Elem;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct IntRing;

impl Ring for IntRing {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn gcd(&self, a: &BigInt, b: &BigInt) -> BigInt {
        num::Integer::gcd(a, b)
    }
    fn div_exact(&self, a: &BigInt, b: &BigInt) -> Option<BigInt> {
        if b.is_zero() {
            return None;
        }
        let (q, r) = num::Integer::div_rem(a, b);
        r.is_zero().then_some(q)
    }
    fn canonical_unit_inv(&self, lead: &BigInt) -> BigInt {
        if lead.is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        }
    }
}

/// The cyclotomic field Q(zeta_m).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CycField(pub u64);

impl Ring for CycField {
    type Elem = Cyclotomic;

    fn zero(&self) -> Cyclotomic {
        Cyclotomic::zero(self.0)
    }
    fn one(&self) -> Cyclotomic {
        Cyclotomic::one(self.0)
    }
    fn is_zero(&self, a: &Cyclotomic) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Cyclotomic, b: &Cyclotomic) -> Cyclotomic {
        a.add(b)
    }
    fn sub(&self, a: &Cyclotomic, b: &Cyclotomic) -> Cyclotomic {
        a.sub(b)
    }
    fn mul(&self, a: &Cyclotomic, b: &Cyclotomic) -> Cyclotomic {
        a.mul(b)
    }
    fn neg(&self, a: &Cyclotomic) -> Cyclotomic {
        a.neg()
    }
    fn gcd(&self, a: &Cyclotomic, b: &Cyclotomic) -> Cyclotomic {
        if a.is_zero() && b.is_zero() {
            self.zero()
        } else {
            self.one()
        }
    }
    fn div_exact(&self, a: &Cyclotomic, b: &Cyclotomic) -> Option<Cyclotomic> {
        b.inverse().map(|inv| a.mul(&inv))
    }
    fn canonical_unit_inv(&self, lead: &Cyclotomic) -> Cyclotomic {
        lead.inverse().expect("leading coefficient is nonzero")
    }
}

/// Ordinary (non-Laurent) multivariate polynomial, recursively dense:
/// at level 0 a coefficient, at level k a univariate polynomial in the
/// k-th variable with level k-1 coefficients. Trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq)]
pub enum Rec<C> {
    Leaf(C),
    Node(Vec<Rec<C>>),
}

pub fn rec_zero<R: Ring>(ring: &R, level: usize) -> Rec<R::Elem> {
    if level == 0 {
        Rec::Leaf(ring.zero())
    } else {
        Rec::Node(Vec::new())
    }
}

pub fn rec_is_zero<R: Ring>(ring: &R, a: &Rec<R::Elem>) -> bool {
    match a {
        Rec::Leaf(c) => ring.is_zero(c),
        Rec::Node(v) => v.iter().all(|c| rec_is_zero(ring, c)),
    }
}

fn trim<R: Ring>(ring: &R, mut v: Vec<Rec<R::Elem>>) -> Vec<Rec<R::Elem>> {
    while v.last().is_some_and(|c| rec_is_zero(ring, c)) {
        v.pop();
    }
    v
}

pub fn rec_add<R: Ring>(ring: &R, a: &Rec<R::Elem>, b: &Rec<R::Elem>) -> Rec<R::Elem> {
    match (a, b) {
        (Rec::Leaf(x), Rec::Leaf(y)) => Rec::Leaf(ring.add(x, y)),
        (Rec::Node(x), Rec::Node(y)) => {
            let n = x.len().max(y.len());
            let level_below = |v: &[Rec<R::Elem>]| v.first().map(rec_level).unwrap_or(0);
            let lvl = level_below(x).max(level_below(y));
            let mut out = Vec::with_capacity(n);
            for i in 0..n {
                let xa = x.get(i).cloned().unwrap_or_else(|| rec_zero(ring, lvl));
                let xb = y.get(i).cloned().unwrap_or_else(|| rec_zero(ring, lvl));
                out.push(rec_add(ring, &xa, &xb));
            }
            Rec::Node(trim(ring, out))
        }
        _ => panic!("level mismatch"),
    }
}

fn rec_level<C>(a: &Rec<C>) -> usize {
    match a {
        Rec::Leaf(_) => 0,
        Rec::Node(v) => v.first().map(|c| rec_level(c) + 1).unwrap_or(1),
    }
}

pub fn rec_neg<R: Ring>(ring: &R, a: &Rec<R::Elem>) -> Rec<R::Elem> {
    match a {
        Rec::Leaf(c) => Rec::Leaf(ring.neg(c)),
        Rec::Node(v) => Rec::Node(v.iter().map(|c| rec_neg(ring, c)).collect()),
    }
}

pub fn rec_sub<R: Ring>(ring: &R, a: &Rec<R::Elem>, b: &Rec<R::Elem>) -> Rec<R::Elem> {
    rec_add(ring, a, &rec_neg(ring, b))
}

pub fn rec_mul<R: Ring>(ring: &R, a: &Rec<R::Elem>, b: &Rec<R::Elem>) -> Rec<R::Elem> {
    match (a, b) {
        (Rec::Leaf(x), Rec::Leaf(y)) => Rec::Leaf(ring.mul(x, y)),
        (Rec::Node(x), Rec::Node(y)) => {
            if x.is_empty() || y.is_empty() {
                return Rec::Node(Vec::new());
            }
            let lvl = rec_level(&x[0]);
            let mut out = vec![rec_zero(ring, lvl); x.len() + y.len() - 1];
            for (i, xi) in x.iter().enumerate() {
                for (j, yj) in y.iter().enumerate() {
                    let p = rec_mul(ring, xi, yj);
                    out[i + j] = rec_add(ring, &out[i + j], &p);
                }
            }
            Rec::Node(trim(ring, out))
        }
        _ => panic!("level mismatch"),
    }
}

/// Exact division; `None` when `b` does not divide `a`.
pub fn rec_div_exact<R: Ring>(
    ring: &R,
    a: &Rec<R::Elem>,
    b: &Rec<R::Elem>,
) -> Option<Rec<R::Elem>> {
    match (a, b) {
        (Rec::Leaf(x), Rec::Leaf(y)) => ring.div_exact(x, y).map(Rec::Leaf),
        (Rec::Node(x), Rec::Node(y)) => {
            if y.is_empty() {
                return None;
            }
            if x.is_empty() {
                return Some(Rec::Node(Vec::new()));
            }
            if x.len() < y.len() {
                return None;
            }
            let lvl = rec_level(&x[0]);
            let mut rem = x.clone();
            let mut quo = vec![rec_zero(ring, lvl); x.len() - y.len() + 1];
            let lead = y.last().unwrap();
            while rem.len() >= y.len() {
                let c = rec_div_exact(ring, rem.last().unwrap(), lead)?;
                let shift = rem.len() - y.len();
                quo[shift] = c.clone();
                for (j, yj) in y.iter().enumerate() {
                    let p = rec_mul(ring, yj, &c);
                    rem[shift + j] = rec_sub(ring, &rem[shift + j], &p);
                }
                rem = trim(ring, rem);
                if rem.len() > shift + y.len() - 1 {
                    return None; // leading term failed to cancel
                }
            }
            if rem.is_empty() {
                Some(Rec::Node(trim(ring, quo)))
            } else {
                None
            }
        }
        _ => panic!("level mismatch"),
    }
}

fn promote<C>(c: Rec<C>) -> Rec<C> {
    Rec::Node(vec![c])
}

/// Gcd of the coefficients (one level down) of a univariate polynomial.
fn content<R: Ring>(ring: &R, v: &[Rec<R::Elem>]) -> Rec<R::Elem> {
    let mut g = rec_zero(ring, v.first().map(rec_level).unwrap_or(0));
    for c in v {
        g = rec_gcd(ring, &g, c);
    }
    g
}

fn primitive_part<R: Ring>(ring: &R, v: &[Rec<R::Elem>], cont: &Rec<R::Elem>) -> Vec<Rec<R::Elem>> {
    v.iter()
        .map(|c| rec_div_exact(ring, c, cont).expect("content divides"))
        .collect()
}

/// Pseudo-remainder of a by b (both nonzero, deg a >= deg b).
fn prem<R: Ring>(ring: &R, a: &[Rec<R::Elem>], b: &[Rec<R::Elem>]) -> Vec<Rec<R::Elem>> {
    let lead = b.last().unwrap().clone();
    let mut r: Vec<Rec<R::Elem>> = a.to_vec();
    let mut e = a.len() as i64 - b.len() as i64 + 1;
    while !r.is_empty() && r.len() >= b.len() {
        let shift = r.len() - b.len();
        let rl = r.last().unwrap().clone();
        // r = lead*r - rl * x^shift * b
        let mut new_r: Vec<Rec<R::Elem>> =
            r.iter().map(|c| rec_mul(ring, &lead, c)).collect();
        for (j, bj) in b.iter().enumerate() {
            let p = rec_mul(ring, &rl, bj);
            new_r[shift + j] = rec_sub(ring, &new_r[shift + j], &p);
        }
        r = trim(ring, new_r);
        e -= 1;
    }
    for _ in 0..e.max(0) {
        r = r.iter().map(|c| rec_mul(ring, &lead, c)).collect();
    }
    r
}

/// Gcd up to units, recursively by primitive pseudo-remainder sequences.
pub fn rec_gcd<R: Ring>(ring: &R, a: &Rec<R::Elem>, b: &Rec<R::Elem>) -> Rec<R::Elem> {
    if rec_is_zero(ring, a) {
        return b.clone();
    }
    if rec_is_zero(ring, b) {
        return a.clone();
    }
    match (a, b) {
        (Rec::Leaf(x), Rec::Leaf(y)) => Rec::Leaf(ring.gcd(x, y)),
        (Rec::Node(x), Rec::Node(y)) => {
            let ca = content(ring, x);
            let cb = content(ring, y);
            let g = rec_gcd(ring, &ca, &cb);
            if x.len() == 1 || y.len() == 1 {
                return promote(g);
            }
            let mut u = primitive_part(ring, x, &ca);
            let mut v = primitive_part(ring, y, &cb);
            if u.len() < v.len() {
                std::mem::swap(&mut u, &mut v);
            }
            loop {
                let r = prem(ring, &u, &v);
                if r.is_empty() {
                    break;
                }
                if r.len() == 1 {
                    // nonzero constant remainder: coprime primitive parts
                    return promote(g);
                }
                let cr = content(ring, &r);
                u = v;
                v = primitive_part(ring, &r, &cr);
            }
            let pv: Vec<Rec<R::Elem>> = v.iter().map(|c| rec_mul(ring, &g, c)).collect();
            Rec::Node(trim(ring, pv))
        }
        _ => panic!("level mismatch"),
    }
}
