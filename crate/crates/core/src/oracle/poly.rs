//! Sparse multivariate polynomials with integer coefficients.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

pub const MAX_VARS: usize = 16;

/// Exponent vector; the derived order is lexicographic with variable 0 most
/// significant.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial([u8; MAX_VARS]);

impl Monomial {
    pub fn var(i: usize) -> Monomial {
        let mut m = Monomial::default();
        m.0[i] = 1;
        m
    }

    pub fn degree(&self, i: usize) -> u8 {
        self.0[i]
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    fn mul(&self, o: &Monomial) -> Monomial {
        let mut m = *self;
        for (a, b) in m.0.iter_mut().zip(o.0.iter()) {
            *a = a.checked_add(*b).expect("exponent overflow");
        }
        m
    }

    fn div(&self, o: &Monomial) -> Option<Monomial> {
        let mut m = *self;
        for (a, b) in m.0.iter_mut().zip(o.0.iter()) {
            *a = a.checked_sub(*b)?;
        }
        Some(m)
    }
}

#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, i64>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly::default()
    }

    pub fn constant(c: i64) -> Poly {
        let mut p = Poly::zero();
        p.add_term(Monomial::default(), c);
        p
    }

    pub fn one() -> Poly {
        Poly::constant(1)
    }

    /// The variable `t'_{i+1}`.
    pub fn var(i: usize) -> Poly {
        let mut p = Poly::zero();
        p.add_term(Monomial::var(i), 1);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &i64)> {
        self.terms.iter()
    }

    /// `Some(c)` when the polynomial is the constant `c`.
    pub fn as_constant(&self) -> Option<i64> {
        match self.terms.len() {
            0 => Some(0),
            1 => self
                .terms
                .iter()
                .next()
                .filter(|(m, _)| m.is_one())
                .map(|(_, c)| *c),
            _ => None,
        }
    }

    fn add_term(&mut self, m: Monomial, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(m).or_insert(0);
        *e = e.checked_add(c).expect("coefficient overflow");
        if *e == 0 {
            self.terms.remove(&m);
        }
    }

    pub fn leading(&self) -> Option<(Monomial, i64)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, *c))
    }

    pub fn scale(&self, c: i64) -> Poly {
        let mut p = Poly::zero();
        for (m, x) in &self.terms {
            p.add_term(*m, x.checked_mul(c).expect("coefficient overflow"));
        }
        p
    }

    fn sub_term_times(&mut self, m: &Monomial, c: i64, g: &Poly) {
        for (gm, gc) in &g.terms {
            self.add_term(gm.mul(m), -gc.checked_mul(c).expect("coefficient overflow"));
        }
    }

    /// Exact quotient `self / g`, or `None` when `g` does not divide.
    pub fn div_exact(&self, g: &Poly) -> Option<Poly> {
        let (lm, lc) = g.leading()?;
        let mut r = self.clone();
        let mut q = Poly::zero();
        while let Some((m, c)) = r.leading() {
            let qm = m.div(&lm)?;
            if c % lc != 0 {
                return None;
            }
            let qc = c / lc;
            q.add_term(qm, qc);
            r.sub_term_times(&qm, qc, g);
        }
        Some(q)
    }

    /// Largest `v` with `g^v | self` and the cofactor. `self` must be nonzero.
    pub fn valuation(&self, g: &Poly) -> (u32, Poly) {
        let mut v = 0;
        let mut cur = self.clone();
        if g.as_constant().is_some() {
            return (0, cur);
        }
        while let Some(q) = cur.div_exact(g) {
            cur = q;
            v += 1;
        }
        (v, cur)
    }

    pub fn content(&self) -> i64 {
        self.terms.values().fold(0, |g, &c| num_integer::gcd(g, c))
    }

    /// Divide out the (positive) content.
    pub fn primitive(&self) -> Poly {
        let g = self.content();
        if g <= 1 {
            return self.clone();
        }
        let mut p = Poly::zero();
        for (m, c) in &self.terms {
            p.add_term(*m, c / g);
        }
        p
    }

    pub fn pow(&self, e: u32) -> Poly {
        (0..e).fold(Poly::one(), |acc, _| &acc * self)
    }

    /// Substitute polynomials for variables (`None` keeps a variable).
    pub fn substitute(&self, subs: &[Option<Poly>]) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut term = Poly::constant(*c);
            let mut rest = Monomial::default();
            for i in 0..MAX_VARS {
                let e = m.0[i];
                if e == 0 {
                    continue;
                }
                match subs.get(i).and_then(|s| s.as_ref()) {
                    Some(p) => term = &term * &p.pow(e as u32),
                    None => rest.0[i] = e,
                }
            }
            let mut lift = Poly::zero();
            lift.add_term(rest, 1);
            out = &out + &(&term * &lift);
        }
        out
    }

    /// Evaluate at an integer point (wrapping arithmetic is not used; panics
    /// on overflow).
    pub fn eval(&self, point: &[i64]) -> i128 {
        self.terms
            .iter()
            .map(|(m, c)| {
                (0..MAX_VARS).fold(*c as i128, |acc, i| {
                    (0..m.0[i]).fold(acc, |a, _| a * point.get(i).copied().unwrap_or(0) as i128)
                })
            })
            .sum()
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let mut p = self.clone();
        for (m, c) in &o.terms {
            p.add_term(*m, *c);
        }
        p
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let mut p = self.clone();
        for (m, c) in &o.terms {
            p.add_term(*m, -c);
        }
        p
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(-1)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        let mut p = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                p.add_term(
                    m1.mul(m2),
                    c1.checked_mul(*c2).expect("coefficient overflow"),
                );
            }
        }
        p
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (m, c)) in self.terms.iter().rev().enumerate() {
            let mut body = String::new();
            for i in 0..MAX_VARS {
                match m.0[i] {
                    0 => {}
                    1 => body.push_str(&alloc::format!("t{}", i + 1)),
                    e => body.push_str(&alloc::format!("t{}^{}", i + 1, e)),
                }
            }
            let sign = if *c < 0 {
                "-"
            } else if n > 0 {
                "+"
            } else {
                ""
            };
            let a = c.unsigned_abs();
            if n > 0 {
                f.write_str(" ")?;
            }
            f.write_str(sign)?;
            if n > 0 {
                f.write_str(" ")?;
            }
            if body.is_empty() {
                write!(f, "{a}")?;
            } else if a == 1 {
                f.write_str(&body)?;
            } else {
                write!(f, "{a}{body}")?;
            }
        }
        Ok(())
    }
}

/// Determinant by cofactor expansion along the first row.
pub fn determinant(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    match n {
        0 => Poly::one(),
        1 => m[0][0].clone(),
        2 => &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]),
        _ => {
            let mut acc = Poly::zero();
            for c in 0..n {
                if m[0][c].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Poly>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(x, _)| *x != c)
                            .map(|(_, p)| p.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][c] * &determinant(&minor);
                acc = if c % 2 == 0 {
                    &acc + &term
                } else {
                    &acc - &term
                };
            }
            acc
        }
    }
}
