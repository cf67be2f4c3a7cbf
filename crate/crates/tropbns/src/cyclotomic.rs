//! Exact arithmetic in cyclotomic fields Q(zeta_m): residues modulo the
//! m-th cyclotomic polynomial with rational coefficients.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};

type Rat = BigRational;

fn rat(n: i64) -> Rat {
    Rat::from(BigInt::from(n))
}

/// Dense univariate polynomial over Q, highest degree last, no trailing
/// zeros.
fn trim(mut p: Vec<Rat>) -> Vec<Rat> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            let p = x * y;
            out[i + j] = &out[i + j] + p;
        }
    }
    trim(out)
}

fn poly_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let n = a.len().max(b.len());
    let mut out = vec![Rat::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] = out[i].clone() + x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] = out[i].clone() - y;
    }
    trim(out)
}

/// Quotient and remainder of a by b, b nonzero.
fn poly_divmod(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    assert!(!b.is_empty());
    let mut rem: Vec<Rat> = a.to_vec();
    let mut quo = vec![Rat::zero(); a.len().saturating_sub(b.len()) + 1];
    let lead = b.last().unwrap();
    while rem.len() >= b.len() {
        let c = rem.last().unwrap() / lead;
        let shift = rem.len() - b.len();
        quo[shift] = c.clone();
        let mut sub = vec![Rat::zero(); shift];
        sub.extend(b.iter().map(|x| x * &c));
        rem = poly_sub(&rem, &sub);
        if rem.len() <= shift {
            // the subtraction may cancel several leading terms
            continue;
        }
    }
    (trim(quo), rem)
}

/// Coefficients of the m-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(m: u64) -> Vec<Rat> {
    assert!(m >= 1);
    // x^m - 1
    let mut num = vec![rat(-1)];
    num.extend(std::iter::repeat(Rat::zero()).take((m - 1) as usize));
    num.push(rat(1));
    for d in 1..m {
        if m % d == 0 {
            let (q, r) = poly_divmod(&num, &cyclotomic_polynomial(d));
            assert!(r.is_empty());
            num = q;
        }
    }
    num
}

pub fn euler_phi(m: u64) -> usize {
    (1..=m).filter(|k| num::integer::gcd(*k, m) == 1).count()
}

/// Element of Q(zeta_m), represented modulo Phi_m.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cyclotomic {
    pub order: u64,
    /// Length deg(Phi_m); coefficient of zeta^i at index i.
    pub coeffs: Vec<Rat>,
}

impl Cyclotomic {
    pub fn zero(order: u64) -> Self {
        Cyclotomic { order, coeffs: vec![Rat::zero(); euler_phi(order)] }
    }

    pub fn from_rational(order: u64, r: Rat) -> Self {
        let mut c = Cyclotomic::zero(order);
        if !c.coeffs.is_empty() {
            c.coeffs[0] = r;
        } else {
            // order 1: Phi_1 = x - 1 has degree 1
            unreachable!("euler_phi >= 1");
        }
        c
    }

    pub fn from_int(order: u64, n: i64) -> Self {
        Cyclotomic::from_rational(order, rat(n))
    }

    pub fn one(order: u64) -> Self {
        Cyclotomic::from_int(order, 1)
    }

    /// zeta_m^k.
    pub fn root_of_unity(order: u64, k: u64) -> Self {
        let k = k % order;
        let mut poly = vec![Rat::zero(); k as usize];
        poly.push(rat(1));
        Cyclotomic::reduce(order, poly)
    }

    fn reduce(order: u64, poly: Vec<Rat>) -> Self {
        let phi = cyclotomic_polynomial(order);
        let (_, r) = poly_divmod(&trim(poly), &phi);
        let deg = phi.len() - 1;
        let mut coeffs = r;
        coeffs.resize(deg, Rat::zero());
        Cyclotomic { order, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Cyclotomic) -> Cyclotomic {
        assert_eq!(self.order, other.order);
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn neg(&self) -> Cyclotomic {
        Cyclotomic { order: self.order, coeffs: self.coeffs.iter().map(|a| -a.clone()).collect() }
    }

    pub fn sub(&self, other: &Cyclotomic) -> Cyclotomic {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Cyclotomic) -> Cyclotomic {
        assert_eq!(self.order, other.order);
        let prod = poly_mul(&trim(self.coeffs.clone()), &trim(other.coeffs.clone()));
        Cyclotomic::reduce(self.order, prod)
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inverse(&self) -> Option<Cyclotomic> {
        if self.is_zero() {
            return None;
        }
        let phi = cyclotomic_polynomial(self.order);
        let a = trim(self.coeffs.clone());
        // extended Euclid: s*a + t*phi = gcd = constant
        let (mut r0, mut r1) = (phi, a);
        let (mut s0, mut s1) = (Vec::<Rat>::new(), vec![rat(1)]);
        while !r1.is_empty() {
            let (q, r) = poly_divmod(&r0, &r1);
            let s = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        // r0 is a nonzero constant since Phi_m is irreducible over Q
        assert_eq!(r0.len(), 1);
        let inv_c = Rat::one() / r0[0].clone();
        let s: Vec<Rat> = s0.iter().map(|x| x * &inv_c).collect();
        Some(Cyclotomic::reduce(self.order, s))
    }
}

impl std::fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if i == 0 {
                parts.push(format!("{c}"));
            } else if i == 1 {
                parts.push(format!("{c}*z"));
            } else {
                parts.push(format!("{c}*z^{i}"));
            }
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}
