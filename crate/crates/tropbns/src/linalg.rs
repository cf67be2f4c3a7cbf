//! Exact integer and rational linear algebra: Smith normal form with
//! unimodular bookkeeping, integer nullspaces, rational linear solves.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

/// Dense integer matrix, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IMat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<Int>>,
}

impl IMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IMat { rows, cols, data: vec![vec![Int::zero(); cols]; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IMat::zero(n, n);
        for i in 0..n {
            m.data[i][i] = Int::one();
        }
        m
    }

    pub fn from_rows(data: Vec<Vec<Int>>) -> Self {
        let rows = data.len();
        let cols = data.first().map_or(0, |r| r.len());
        assert!(data.iter().all(|r| r.len() == cols));
        IMat { rows, cols, data }
    }

    pub fn from_i64(data: &[Vec<i64>]) -> Self {
        IMat::from_rows(data.iter().map(|r| r.iter().map(|&x| Int::from(x)).collect()).collect())
    }

    pub fn transpose(&self) -> Self {
        let mut t = IMat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j][i] = self.data[i][j].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IMat) -> IMat {
        assert_eq!(self.cols, other.rows);
        let mut out = IMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.data[i][k].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let p = &self.data[i][k] * &other.data[k][j];
                    out.data[i][j] += p;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Int]) -> Vec<Int> {
        assert_eq!(self.cols, v.len());
        self.data
            .iter()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<Rat>> = self
            .data
            .iter()
            .map(|r| r.iter().map(|x| Rat::from(x.clone())).collect())
            .collect();
        rational_row_reduce(&mut m)
    }
}

/// Result of the Smith normal form computation: `u * a * v = s`.
#[derive(Debug, Clone)]
pub struct Snf {
    pub u: IMat,
    pub s: IMat,
    pub v: IMat,
}

/// Smith normal form by classical elimination; pivot is the entry of
/// minimal nonzero absolute value. `u` and `v` are unimodular.
pub fn smith_normal_form(a: &IMat) -> Snf {
    let mut s = a.clone();
    let mut u = IMat::identity(a.rows);
    let mut v = IMat::identity(a.cols);
    let n = a.rows.min(a.cols);
    let mut t = 0;
    while t < n {
        // locate pivot with minimal |entry| among s[t.., t..]
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..s.rows {
            for j in t..s.cols {
                if !s.data[i][j].is_zero()
                    && pivot.map_or(true, |(pi, pj)| {
                        s.data[i][j].abs() < s.data[pi][pj].abs()
                    })
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        swap_rows(&mut s, &mut u, t, pi);
        swap_cols(&mut s, &mut v, t, pj);
        // clear row and column t
        let mut dirty = false;
        for i in t + 1..s.rows {
            if !s.data[i][t].is_zero() {
                let q = div_round(&s.data[i][t], &s.data[t][t]);
                row_axpy(&mut s, &mut u, i, t, &-q);
                if !s.data[i][t].is_zero() {
                    dirty = true;
                }
            }
        }
        for j in t + 1..s.cols {
            if !s.data[t][j].is_zero() {
                let q = div_round(&s.data[t][j], &s.data[t][t]);
                col_axpy(&mut s, &mut v, j, t, &-q);
                if !s.data[t][j].is_zero() {
                    dirty = true;
                }
            }
        }
        if dirty {
            continue; // smaller remainders appeared; re-pick pivot
        }
        t += 1;
    }
    // sign normalization
    for i in 0..n {
        if s.data[i][i].is_negative() {
            for j in 0..s.cols {
                s.data[i][j] = -s.data[i][j].clone();
            }
            for j in 0..u.cols {
                u.data[i][j] = -u.data[i][j].clone();
            }
        }
    }
    // enforce divisibility d_i | d_{i+1}
    loop {
        let mut fixed = true;
        for i in 0..n.saturating_sub(1) {
            let (di, dj) = (s.data[i][i].clone(), s.data[i + 1][i + 1].clone());
            if di.is_zero() && !dj.is_zero() {
                // move nonzero earlier
                swap_rows(&mut s, &mut u, i, i + 1);
                swap_cols(&mut s, &mut v, i, i + 1);
                fixed = false;
            } else if !di.is_zero() && !(&dj % &di).is_zero() {
                // standard gcd trick: add col i+1 to col i, re-eliminate
                col_axpy_raw(&mut s, &mut v, i, i + 1, &Int::one());
                let sub = submatrix_snf_step(&mut s, &mut u, &mut v, i);
                debug_assert!(sub);
                fixed = false;
            }
        }
        if fixed {
            break;
        }
    }
    Snf { u, s, v }
}

// One local elimination pass at position i after the gcd-trick column add.
fn submatrix_snf_step(s: &mut IMat, u: &mut IMat, v: &mut IMat, start: usize) -> bool {
    let n = s.rows.min(s.cols);
    let mut t = start;
    while t < n {
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..s.rows {
            for j in t..s.cols {
                if !s.data[i][j].is_zero()
                    && pivot.map_or(true, |(pi, pj)| s.data[i][j].abs() < s.data[pi][pj].abs())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        swap_rows(s, u, t, pi);
        swap_cols(s, v, t, pj);
        let mut dirty = false;
        for i in t + 1..s.rows {
            if !s.data[i][t].is_zero() {
                let q = div_round(&s.data[i][t], &s.data[t][t]);
                row_axpy(s, u, i, t, &-q);
                if !s.data[i][t].is_zero() {
                    dirty = true;
                }
            }
        }
        for j in t + 1..s.cols {
            if !s.data[t][j].is_zero() {
                let q = div_round(&s.data[t][j], &s.data[t][t]);
                col_axpy(s, v, j, t, &-q);
                if !s.data[t][j].is_zero() {
                    dirty = true;
                }
            }
        }
        if dirty {
            continue;
        }
        if s.data[t][t].is_negative() {
            for j in 0..s.cols {
                s.data[t][j] = -s.data[t][j].clone();
            }
            for j in 0..u.cols {
                u.data[t][j] = -u.data[t][j].clone();
            }
        }
        t += 1;
    }
    true
}

fn swap_rows(s: &mut IMat, u: &mut IMat, a: usize, b: usize) {
    if a != b {
        s.data.swap(a, b);
        u.data.swap(a, b);
    }
}

fn swap_cols(s: &mut IMat, v: &mut IMat, a: usize, b: usize) {
    if a != b {
        for row in &mut s.data {
            row.swap(a, b);
        }
        for row in &mut v.data {
            row.swap(a, b);
        }
    }
}

// row[i] += q * row[t], mirrored in u
fn row_axpy(s: &mut IMat, u: &mut IMat, i: usize, t: usize, q: &Int) {
    for j in 0..s.cols {
        let p = q * &s.data[t][j];
        s.data[i][j] += p;
    }
    for j in 0..u.cols {
        let p = q * &u.data[t][j];
        u.data[i][j] += p;
    }
}

// col[j] += q * col[t], mirrored in v
fn col_axpy(s: &mut IMat, v: &mut IMat, j: usize, t: usize, q: &Int) {
    for i in 0..s.rows {
        let p = q * &s.data[i][t];
        s.data[i][j] += p;
    }
    for i in 0..v.rows {
        let p = q * &v.data[i][t];
        v.data[i][j] += p;
    }
}

// col[dst] += q * col[src]
fn col_axpy_raw(s: &mut IMat, v: &mut IMat, dst: usize, src: usize, q: &Int) {
    for i in 0..s.rows {
        let p = q * &s.data[i][src];
        s.data[i][dst] += p;
    }
    for i in 0..v.rows {
        let p = q * &v.data[i][src];
        v.data[i][dst] += p;
    }
}

fn div_round(a: &Int, b: &Int) -> Int {
    // rounded division keeps remainders small; exact floor/ceil is not needed
    let (q, r) = a.div_rem(b);
    let two_r: Int = &r * 2;
    if two_r.abs() > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

/// Basis of the saturated lattice `{x in Z^cols : a * x = 0}`.
pub fn integer_nullspace(a: &IMat) -> Vec<Vec<Int>> {
    let snf = smith_normal_form(a);
    let rank = (0..a.rows.min(a.cols))
        .filter(|&i| !snf.s.data[i][i].is_zero())
        .count();
    (rank..a.cols)
        .map(|j| (0..a.cols).map(|i| snf.v.data[i][j].clone()).collect())
        .collect()
}

/// Row reduce in place; returns the rank.
pub fn rational_row_reduce(m: &mut Vec<Vec<Rat>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].clone();
        for x in &mut m[r] {
            *x = &*x / &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let sub = &f * &m[r][j];
                    m[i][j] = &m[i][j] - &sub;
                }
            }
        }
        r += 1;
    }
    r
}

/// Solve `a * x = b` over the rationals; `None` if inconsistent.
pub fn rational_solve(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    assert_eq!(rows, b.len());
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    rational_row_reduce(&mut m);
    let mut x = vec![Rat::zero(); cols];
    for row in &m {
        let lead = (0..cols).find(|&j| !row[j].is_zero());
        match lead {
            Some(j) => x[j] = row[cols].clone() / row[j].clone(),
            None => {
                if !row[cols].is_zero() {
                    return None; // inconsistent
                }
            }
        }
    }
    // verify (the system may be underdetermined; back-substitution above is
    // only valid in echelon form, so check the original equations)
    for (row, bi) in a.iter().zip(b) {
        let lhs: Rat = row.iter().zip(&x).map(|(c, xi)| c * xi).sum();
        if &lhs != bi {
            return None;
        }
    }
    Some(x)
}

/// Divide by the gcd of the entries; zero vector passes through.
pub fn primitivize(v: &[Int]) -> Vec<Int> {
    let mut g = Int::zero();
    for x in v {
        g = g.gcd(x);
    }
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

/// Scale a rational vector to a primitive integer vector with the same
/// direction.
pub fn primitive_direction(v: &[Rat]) -> Vec<Int> {
    let mut lcm = Int::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<Int> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    primitivize(&ints)
}

pub fn dot(a: &[Int], b: &[Int]) -> Int {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_ri(a: &[Rat], b: &[Int]) -> Rat {
    a.iter().zip(b).map(|(x, y)| x * Rat::from(y.clone())).sum()
}
