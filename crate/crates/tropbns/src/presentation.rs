//! Group presentations, free-group words, Fox calculus, abelianization.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Signed, Zero};

use crate::linalg::{smith_normal_form, IMat, Int};

/// Reduced free-group word, run-length compressed: `(generator, exponent)`
/// with 1-based generator indices and nonzero exponents, adjacent entries
/// on distinct generators.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FreeWord {
    pub factors: Vec<(usize, i64)>,
}

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord { factors: Vec::new() }
    }

    pub fn generator(i: usize) -> Self {
        FreeWord { factors: vec![(i, 1)] }
    }

    pub fn from_factors(factors: &[(usize, i64)]) -> Self {
        let mut w = FreeWord::identity();
        for &(g, e) in factors {
            w.push(g, e);
        }
        w
    }

    pub fn is_identity(&self) -> bool {
        self.factors.is_empty()
    }

    /// Letter count of the reduced word.
    pub fn len(&self) -> usize {
        self.factors.iter().map(|&(_, e)| e.unsigned_abs() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    fn push(&mut self, g: usize, e: i64) {
        if e == 0 {
            return;
        }
        match self.factors.last_mut() {
            Some((lg, le)) if *lg == g => {
                *le += e;
                if *le == 0 {
                    self.factors.pop();
                }
            }
            _ => self.factors.push((g, e)),
        }
    }

    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        let mut w = self.clone();
        for &(g, e) in &other.factors {
            w.push(g, e);
        }
        w
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord { factors: self.factors.iter().rev().map(|&(g, e)| (g, -e)).collect() }
    }

    pub fn pow(&self, k: i64) -> FreeWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut w = FreeWord::identity();
        for _ in 0..k.unsigned_abs() {
            w = w.mul(&base);
        }
        w
    }

    /// Individual letters `(generator, ±1)` of the reduced word.
    pub fn letters(&self) -> Vec<(usize, i64)> {
        let mut out = Vec::with_capacity(self.len());
        for &(g, e) in &self.factors {
            let s = e.signum();
            for _ in 0..e.unsigned_abs() {
                out.push((g, s));
            }
        }
        out
    }

    /// Remove matching first/last inverse pairs until a fixed point.
    pub fn cyclically_reduce(&self) -> FreeWord {
        let mut w = self.clone();
        loop {
            let n = w.factors.len();
            if n < 2 {
                return w;
            }
            let (fg, fe) = w.factors[0];
            let (lg, le) = w.factors[n - 1];
            if fg != lg || (fe > 0) == (le > 0) {
                return w;
            }
            let cancel = fe.abs().min(le.abs());
            let sign = le.signum();
            // conjugate by the trailing block: move it to the front
            let mut v = FreeWord::from_factors(&[(lg, sign * cancel)]);
            v = v.mul(&w);
            v.push(lg, -sign * cancel);
            w = v;
        }
    }

    pub fn max_generator(&self) -> usize {
        self.factors.iter().map(|&(g, _)| g).max().unwrap_or(0)
    }

    /// Exponent sum per generator, length `m`.
    pub fn exponent_vector(&self, m: usize) -> Vec<i64> {
        let mut v = vec![0i64; m];
        for &(g, e) in &self.factors {
            v[g - 1] += e;
        }
        v
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|&(g, e)| if e == 1 { format!("x{g}") } else { format!("x{g}^{e}") })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Element of the integral group ring of the free group.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GroupRingElement {
    pub terms: BTreeMap<FreeWord, Int>,
}

impl GroupRingElement {
    pub fn zero() -> Self {
        GroupRingElement::default()
    }

    pub fn one() -> Self {
        GroupRingElement::from_word(FreeWord::identity())
    }

    pub fn from_word(w: FreeWord) -> Self {
        let mut e = GroupRingElement::zero();
        e.add_term(w, Int::one());
        e
    }

    pub fn add_term(&mut self, w: FreeWord, c: Int) {
        if c.is_zero() {
            return;
        }
        let new = match self.terms.get(&w) {
            Some(v) => v + &c,
            None => c,
        };
        if new.is_zero() {
            self.terms.remove(&w);
        } else {
            self.terms.insert(w, new);
        }
    }

    pub fn add(&self, other: &GroupRingElement) -> GroupRingElement {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> GroupRingElement {
        GroupRingElement { terms: self.terms.iter().map(|(w, c)| (w.clone(), -c.clone())).collect() }
    }

    pub fn sub(&self, other: &GroupRingElement) -> GroupRingElement {
        self.add(&other.neg())
    }

    /// Left multiplication by a group element.
    pub fn left_mul_word(&self, u: &FreeWord) -> GroupRingElement {
        let mut out = GroupRingElement::zero();
        for (w, c) in &self.terms {
            out.add_term(u.mul(w), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &GroupRingElement) -> GroupRingElement {
        let mut out = GroupRingElement::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.mul(v), a * b);
            }
        }
        out
    }
}

/// Fox derivative with respect to generator `j` (1-based).
pub fn fox_derivative(w: &FreeWord, j: usize) -> GroupRingElement {
    let mut out = GroupRingElement::zero();
    let mut prefix = FreeWord::identity();
    for (g, s) in w.letters() {
        if g == j {
            if s > 0 {
                out.add_term(prefix.clone(), Int::one());
            } else {
                let letter = FreeWord::from_factors(&[(g, -1)]);
                out.add_term(prefix.mul(&letter), -Int::one());
            }
        }
        prefix.push(g, s);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPresentation {
    pub num_generators: usize,
    pub generator_names: Vec<String>,
    pub relators: Vec<FreeWord>,
}

impl GroupPresentation {
    pub fn new(num_generators: usize, relators: Vec<FreeWord>) -> Self {
        let names = (1..=num_generators).map(|i| format!("x{i}")).collect();
        GroupPresentation { num_generators, generator_names: names, relators }
    }

    /// Relator exponent matrix, one row per relator.
    pub fn exponent_matrix(&self) -> IMat {
        IMat::from_rows(
            self.relators
                .iter()
                .map(|r| {
                    r.exponent_vector(self.num_generators)
                        .into_iter()
                        .map(Int::from)
                        .collect()
                })
                .collect(),
        )
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self
            .relators
            .iter()
            .map(|r| display_word(r, &self.generator_names))
            .collect();
        write!(f, "<{} | {}>", self.generator_names.join(","), rels.join(", "))
    }
}

fn display_word(w: &FreeWord, names: &[String]) -> String {
    if w.factors.is_empty() {
        return "1".into();
    }
    w.factors
        .iter()
        .map(|&(g, e)| {
            let name = &names[g - 1];
            if e == 1 {
                name.clone()
            } else {
                format!("{name}^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at position {0}: {1}")]
    Syntax(usize, String),
    #[error("generator `{0}` used but not declared")]
    UnknownGenerator(String),
}

/// Parse `<g1,...,gm | w1, w2, ...>` with `*`-separated `gi^k` factors.
pub fn parse_presentation(text: &str) -> Result<GroupPresentation, ParseError> {
    let s = text.as_bytes();
    let mut pos = 0usize;

    fn skip_ws(s: &[u8], pos: &mut usize) {
        while *pos < s.len() && s[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    }

    fn expect(s: &[u8], pos: &mut usize, c: u8) -> Result<(), ParseError> {
        skip_ws(s, pos);
        if *pos < s.len() && s[*pos] == c {
            *pos += 1;
            Ok(())
        } else {
            Err(ParseError::Syntax(*pos, format!("expected `{}`", c as char)))
        }
    }

    fn ident(s: &[u8], pos: &mut usize) -> Result<String, ParseError> {
        skip_ws(s, pos);
        let start = *pos;
        if *pos < s.len() && s[*pos].is_ascii_alphabetic() {
            *pos += 1;
            while *pos < s.len() && s[*pos].is_ascii_alphanumeric() {
                *pos += 1;
            }
            Ok(String::from_utf8_lossy(&s[start..*pos]).into_owned())
        } else {
            Err(ParseError::Syntax(*pos, "expected identifier".into()))
        }
    }

    fn integer(s: &[u8], pos: &mut usize) -> Result<i64, ParseError> {
        skip_ws(s, pos);
        let start = *pos;
        if *pos < s.len() && (s[*pos] == b'-' || s[*pos] == b'+') {
            *pos += 1;
        }
        let digits_start = *pos;
        while *pos < s.len() && s[*pos].is_ascii_digit() {
            *pos += 1;
        }
        if digits_start == *pos {
            return Err(ParseError::Syntax(*pos, "expected integer".into()));
        }
        String::from_utf8_lossy(&s[start..*pos])
            .parse()
            .map_err(|_| ParseError::Syntax(start, "integer out of range".into()))
    }

    expect(s, &mut pos, b'<')?;
    let mut names = Vec::new();
    loop {
        names.push(ident(s, &mut pos)?);
        skip_ws(s, &mut pos);
        if pos < s.len() && s[pos] == b',' {
            pos += 1;
        } else {
            break;
        }
    }
    expect(s, &mut pos, b'|')?;

    let index_of = |name: &str| -> Result<usize, ParseError> {
        names
            .iter()
            .position(|n| n == name)
            .map(|i| i + 1)
            .ok_or_else(|| ParseError::UnknownGenerator(name.to_string()))
    };

    let mut relators = Vec::new();
    skip_ws(s, &mut pos);
    if pos < s.len() && s[pos] != b'>' {
        loop {
            let mut w = FreeWord::identity();
            loop {
                let name = ident(s, &mut pos)?;
                let g = index_of(&name)?;
                skip_ws(s, &mut pos);
                let mut exp = 1i64;
                if pos < s.len() && s[pos] == b'^' {
                    pos += 1;
                    exp = integer(s, &mut pos)?;
                    if exp == 0 {
                        return Err(ParseError::Syntax(pos, "zero exponent".into()));
                    }
                }
                w.push(g, exp);
                skip_ws(s, &mut pos);
                if pos < s.len() && s[pos] == b'*' {
                    pos += 1;
                } else if pos < s.len() && s[pos].is_ascii_alphabetic() {
                    // whitespace juxtaposition also separates factors
                } else {
                    break;
                }
            }
            relators.push(w);
            skip_ws(s, &mut pos);
            if pos < s.len() && s[pos] == b',' {
                pos += 1;
            } else {
                break;
            }
        }
    }
    expect(s, &mut pos, b'>')?;
    skip_ws(s, &mut pos);
    if pos != s.len() {
        return Err(ParseError::Syntax(pos, "trailing input".into()));
    }
    Ok(GroupPresentation { num_generators: names.len(), generator_names: names, relators })
}

/// Abelianization of a presented group, in a Smith basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianizationData {
    /// First Betti number.
    pub rank: usize,
    /// Invariant factors d_1 | d_2 | ..., each >= 2.
    pub torsion_invariants: Vec<Int>,
    /// Generator images in the free quotient Z^rank (one row per generator).
    pub free_projection: Vec<Vec<Int>>,
    /// Generator images in the torsion part, coordinate j in [0, d_j).
    pub torsion_projection: Vec<Vec<Int>>,
}

impl AbelianizationData {
    /// Image of a word in Z^rank.
    pub fn free_image(&self, w: &FreeWord, m: usize) -> Vec<Int> {
        let ev = w.exponent_vector(m);
        (0..self.rank)
            .map(|k| ev.iter().zip(&self.free_projection).map(|(&e, row)| Int::from(e) * &row[k]).sum())
            .collect()
    }

    /// Image of a word in the torsion part, coordinates reduced mod d_j.
    pub fn torsion_image(&self, w: &FreeWord, m: usize) -> Vec<Int> {
        let ev = w.exponent_vector(m);
        (0..self.torsion_invariants.len())
            .map(|k| {
                let raw: Int = ev
                    .iter()
                    .zip(&self.torsion_projection)
                    .map(|(&e, row)| Int::from(e) * &row[k])
                    .sum();
                raw.mod_floor_by(&self.torsion_invariants[k])
            })
            .collect()
    }
}

trait ModFloor {
    fn mod_floor_by(self, m: &Int) -> Int;
}

impl ModFloor for Int {
    fn mod_floor_by(self, m: &Int) -> Int {
        let r = self % m;
        if r.is_negative() {
            r + m
        } else {
            r
        }
    }
}

/// Abelianize via Smith normal form of the transposed relator exponent
/// matrix. With `U (A^T) V = S`, the columns of `A^T` are relator images,
/// so `U` maps generator coordinates into the Smith basis: coordinate `j`
/// of generator `i` is `U[j][i]`. Rows with d_j = 1 die, rows with
/// d_j >= 2 are torsion, rows beyond the rank are free.
pub fn abelianize(p: &GroupPresentation) -> AbelianizationData {
    let m = p.num_generators;
    // build A^T directly so that the row count is `m` even with no
    // relators
    let evs: Vec<Vec<i64>> = p.relators.iter().map(|r| r.exponent_vector(m)).collect();
    let at = IMat::from_rows(
        (0..m)
            .map(|i| evs.iter().map(|ev| Int::from(ev[i])).collect())
            .collect(),
    );
    let snf = smith_normal_form(&at);
    let nmin = at.rows.min(at.cols);
    let diag: Vec<Int> = (0..nmin).map(|i| snf.s.data[i][i].clone()).collect();
    let matrix_rank = diag.iter().filter(|d| !d.is_zero()).count();
    let rank = m - matrix_rank;
    let torsion_rows: Vec<usize> = (0..matrix_rank)
        .filter(|&i| diag[i] > Int::one())
        .collect();
    let torsion_invariants: Vec<Int> = torsion_rows.iter().map(|&i| diag[i].clone()).collect();
    let free_rows: Vec<usize> = (matrix_rank..m).collect();
    let free_projection: Vec<Vec<Int>> = (0..m)
        .map(|i| free_rows.iter().map(|&r| snf.u.data[r][i].clone()).collect())
        .collect();
    let torsion_projection: Vec<Vec<Int>> = (0..m)
        .map(|i| {
            torsion_rows
                .iter()
                .map(|&r| snf.u.data[r][i].clone().mod_floor_by(&diag[r]))
                .collect()
        })
        .collect();
    AbelianizationData { rank, torsion_invariants, free_projection, torsion_projection }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_basic() {
        let p = parse_presentation("<x1,x2 | x2^2>").unwrap();
        assert_eq!(p.num_generators, 2);
        assert_eq!(p.relators, vec![FreeWord::from_factors(&[(2, 2)])]);
    }

    #[test]
    fn parse_free_rank1() {
        let p = parse_presentation("<x1 | >").unwrap();
        assert_eq!(p.num_generators, 1);
        assert!(p.relators.is_empty());
    }

    #[test]
    fn parse_bs12() {
        let p = parse_presentation("<x1,x2 | x1*x2*x1^-1*x2^-2>").unwrap();
        let r = &p.relators[0];
        assert_eq!(r.len(), 5);
        assert_eq!(r.factors, vec![(1, 1), (2, 1), (1, -1), (2, -2)]);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse_presentation("<x1 | y>"),
            Err(ParseError::UnknownGenerator(_))
        ));
        assert!(matches!(parse_presentation("x1 | "), Err(ParseError::Syntax(_, _))));
    }

    #[test]
    fn word_reduction() {
        let w = FreeWord::from_factors(&[(1, 1), (2, 1), (2, -1), (1, -1)]);
        assert!(w.is_identity());
        let v = FreeWord::from_factors(&[(1, 2), (1, -1)]);
        assert_eq!(v, FreeWord::generator(1));
    }

    #[test]
    fn cyclic_reduction() {
        let w = FreeWord::from_factors(&[(1, -1), (2, 1), (1, 1)]);
        let c = w.cyclically_reduce();
        assert_eq!(c, FreeWord::generator(2));
        assert_eq!(c.cyclically_reduce(), c);
    }

    #[test]
    fn fox_axioms() {
        // d1(x1) = 1
        let d = fox_derivative(&FreeWord::generator(1), 1);
        assert_eq!(d, GroupRingElement::one());
        // d2(x2^2) = 1 + x2
        let d = fox_derivative(&FreeWord::from_factors(&[(2, 2)]), 2);
        let mut expect = GroupRingElement::one();
        expect.add_term(FreeWord::generator(2), Int::one());
        assert_eq!(d, expect);
        // d1(x1^-1) = -x1^-1
        let d = fox_derivative(&FreeWord::from_factors(&[(1, -1)]), 1);
        let mut expect = GroupRingElement::zero();
        expect.add_term(FreeWord::from_factors(&[(1, -1)]), -Int::one());
        assert_eq!(d, expect);
    }

    fn random_word(rng: &mut impl rand::Rng, max_len: usize, gens: usize) -> FreeWord {
        let len = rng.gen_range(0..=max_len);
        let mut w = FreeWord::identity();
        for _ in 0..len {
            let g = rng.gen_range(1..=gens);
            let s = if rng.gen_bool(0.5) { 1 } else { -1 };
            w.push(g, s);
        }
        w
    }

    #[test]
    fn fox_product_rule() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..500 {
            let u = random_word(&mut rng, 20, 3);
            let v = random_word(&mut rng, 20, 3);
            for j in 1..=3 {
                let lhs = fox_derivative(&u.mul(&v), j);
                let rhs = fox_derivative(&u, j).add(&fox_derivative(&v, j).left_mul_word(&u));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn fox_fundamental_identity() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(12);
        for _ in 0..500 {
            let r = random_word(&mut rng, 24, 3);
            // sum_j d_j(r)(x_j - 1) = r - 1
            let mut lhs = GroupRingElement::zero();
            for j in 1..=3 {
                let d = fox_derivative(&r, j);
                let mut xj_minus_1 = GroupRingElement::from_word(FreeWord::generator(j));
                xj_minus_1 = xj_minus_1.sub(&GroupRingElement::one());
                lhs = lhs.add(&d.mul(&xj_minus_1));
            }
            let rhs = GroupRingElement::from_word(r).sub(&GroupRingElement::one());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn abelianize_z_star_z2() {
        let p = parse_presentation("<x1,x2 | x2^2>").unwrap();
        let a = abelianize(&p);
        assert_eq!(a.rank, 1);
        assert_eq!(a.torsion_invariants, vec![Int::from(2)]);
        for r in &p.relators {
            assert!(a.free_image(r, 2).iter().all(|x| x.is_zero()));
            assert!(a.torsion_image(r, 2).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn abelianize_z2() {
        let p = parse_presentation("<x1,x2 | x1*x2*x1^-1*x2^-1>").unwrap();
        let a = abelianize(&p);
        assert_eq!(a.rank, 2);
        assert!(a.torsion_invariants.is_empty());
    }

    #[test]
    fn abelianize_relators_die() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(13);
        for _ in 0..100 {
            let m = rng.gen_range(1..=4);
            let s = rng.gen_range(0..=3);
            let relators = (0..s).map(|_| random_word(&mut rng, 12, m)).collect();
            let p = GroupPresentation::new(m, relators);
            let a = abelianize(&p);
            assert!(a.rank + (m - a.rank) == m);
            assert!(a.rank >= m.saturating_sub(s));
            for r in &p.relators {
                assert!(a.free_image(r, m).iter().all(|x| x.is_zero()));
                assert!(a.torsion_image(r, m).iter().all(|x| x.is_zero()));
            }
        }
    }
}
