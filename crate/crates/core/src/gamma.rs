//! Exponents of cluster variables in the torus-valued functions `h+_c`, and
//! from them every order of vanishing of a grid minor.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::braidword::{node, Crossings, DoubleWord};
use crate::error::{Error, Result};
use crate::rootsys::{Cochar, DynkinData, Family, Side, WeylElt};

/// Memoized evaluator for the recursive cocharacter `gamma(a, k, b)`.
///
/// The cache lives as long as the engine; create one per worker thread.
pub struct GammaEngine<'d> {
    dy: &'d DynkinData,
    memo: BTreeMap<(WeylElt, usize, WeylElt), Cochar>,
}

impl<'d> GammaEngine<'d> {
    pub fn new(dy: &'d DynkinData) -> Self {
        GammaEngine {
            dy,
            memo: BTreeMap::new(),
        }
    }

    pub fn dynkin(&self) -> &'d DynkinData {
        self.dy
    }

    pub fn cache_len(&self) -> usize {
        self.memo.len()
    }

    pub fn gamma(&mut self, a: &WeylElt, k: usize, b: &WeylElt) -> Result<Cochar> {
        let key = (a.clone(), k, b.clone());
        if let Some(v) = self.memo.get(&key) {
            return Ok(v.clone());
        }
        let dy = self.dy;
        let n = dy.rank();
        let v = if !dy.is_right_ascent(a, k) || a == dy.w0() || b == dy.w0() {
            vec![0; n]
        } else if b.is_identity() {
            dy.act(a, &dy.simple_coroot(k))
        } else {
            let i = (1..=n)
                .find(|&i| dy.is_left_ascent(a, i))
                .expect("a is not w0");
            let j = (1..=n)
                .find(|&j| !dy.is_right_ascent(b, j))
                .expect("b is not id");
            self.step(a, k, b, i, j)?
        };
        self.memo.insert(key, v.clone());
        Ok(v)
    }

    /// One application of the branching rule with the generators `i` (a left
    /// ascent of `a`) and `j` (a right descent of `b`) chosen by the caller.
    pub fn step(
        &mut self,
        a: &WeylElt,
        k: usize,
        b: &WeylElt,
        i: usize,
        j: usize,
    ) -> Result<Cochar> {
        let dy = self.dy;
        debug_assert!(dy.is_left_ascent(a, i) && !dy.is_right_ascent(b, j));
        let a_up = dy.mul_simple(a, i, Side::Left);
        let b_down = dy.mul_simple(b, j, Side::Right);
        let ask = dy.demazure_step(a, k, Side::Right);
        let mid = dy.demazure(&ask, b);
        let high = dy.demazure(&dy.demazure_step(&a_up, k, Side::Right), b);
        if high != mid {
            let g = self.gamma(&a_up, k, b)?;
            return Ok(dy.act(&dy.simple(i), &g));
        }
        let low = dy.demazure(&ask, &b_down);
        if mid != low {
            return self.gamma(a, k, &b_down);
        }

        let alpha = dy.simple_coroot(i);
        let beta: Cochar = dy
            .act(&mid, &dy.simple_coroot(j))
            .into_iter()
            .map(|x| -x)
            .collect();
        if beta == alpha {
            let g_both = self.gamma(&a_up, k, &b_down)?;
            let g_a = self.gamma(&a_up, k, b)?;
            let g_b = self.gamma(a, k, &b_down)?;
            let i0 = i - 1;
            let rest: i64 = (1..=dy.rank())
                .filter(|&l| l != i)
                .map(|l| dy.a(i, l) as i64 * g_both[l - 1])
                .sum();
            let mut out = g_both.clone();
            out[i0] = -g_both[i0] + core::cmp::min(g_a[i0] + g_b[i0], -rest);
            return Ok(out);
        }
        if beta.iter().zip(&alpha).all(|(x, y)| *x == -y) {
            return Err(Error::InternalInconsistency(format!(
                "collinear coroots in the three-way case of gamma at k = {k}"
            )));
        }
        let g_a = self.gamma(&a_up, k, b)?;
        let g_b = self.gamma(a, k, &b_down)?;
        let diff: Vec<i64> = g_a.iter().zip(&g_b).map(|(x, y)| x - y).collect();
        // diff = x alpha + y beta with alpha = e_i
        let l = (0..beta.len())
            .find(|&l| l != i - 1 && beta[l] != 0)
            .expect("beta is not a multiple of alpha");
        if diff[l] % beta[l] != 0 {
            return Err(Error::InternalInconsistency(format!(
                "gamma difference {diff:?} is not in the span of alpha_{i} and {beta:?}"
            )));
        }
        let y = diff[l] / beta[l];
        let x = diff[i - 1] - y * beta[i - 1];
        let ok = (0..diff.len()).all(|r| diff[r] == y * beta[r] + if r == i - 1 { x } else { 0 });
        if !ok {
            return Err(Error::InternalInconsistency(format!(
                "gamma difference {diff:?} is not in the span of alpha_{i} and {beta:?}"
            )));
        }
        Ok(g_b.iter().zip(&beta).map(|(g, b)| g + y * b).collect())
    }

    /// `Gamma+(c, e)`: the exponent of `x_e` in `h+_c`.
    pub fn gamma_plus(
        &mut self,
        word: &DoubleWord,
        cr: &Crossings,
        c: usize,
        e: usize,
    ) -> Result<Cochar> {
        let dy = self.dy;
        if e <= c {
            return Ok(vec![0; dy.rank()]);
        }
        if word.at(e) > 0 {
            return self.positive_target(word, cr.u(e), c, e);
        }
        // Negative targets go through the chain-swap word (letters -(i_c)*),
        // whose letter at e is positive. Its positive distinguished
        // subexpression is w0 u_c^-1 w0.
        let op = word.op_word(dy);
        let w0 = dy.w0();
        let op_u = dy.mul(&dy.mul(w0, &cr.u(e).inverse()), w0);
        let g = self.positive_target(&op, &op_u, c, e)?;
        Ok(dy.act(&cr.u(c).inverse(), &dy.star_coweight(&g)))
    }

    /// Canonical form for a positive letter `k` at `e`: positive letters
    /// strictly between `c` and `e` give `a`; the negative ones and the
    /// hollow tail after `e` (summarized by `u_e`) give `b`.
    fn positive_target(
        &mut self,
        word: &DoubleWord,
        u_e: &WeylElt,
        c: usize,
        e: usize,
    ) -> Result<Cochar> {
        let dy = self.dy;
        let k = node(word.at(e));
        let mut plus = dy.identity();
        let mut minus = dy.identity();
        for d in c + 1..e {
            let l = word.at(d);
            if l > 0 {
                plus = dy.demazure_step(&plus, node(l), Side::Right);
            } else {
                minus = dy.demazure_step(&minus, node(l), Side::Right);
            }
        }
        let w0 = dy.w0();
        let inner = dy.mul(&dy.mul(w0, &minus.inverse()), w0);
        let tail = dy.mul(&dy.mul(&dy.simple(k), &u_e.inverse()), w0);
        let b = dy.demazure(&tail, &inner);
        self.gamma(&plus, k, &b)
    }
}

/// Orders of vanishing of all grid minors along all Deodhar hypersurfaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrdTable {
    m: usize,
    rank: usize,
    solid: Vec<usize>,
    /// `gamma_plus[c][x]` for the `x`-th solid crossing.
    gamma_plus: Vec<Vec<Cochar>>,
    /// `gamma_minus[c][x] = u_c . gamma_plus[c][x]`.
    gamma_minus: Vec<Vec<Cochar>>,
}

impl OrdTable {
    pub fn compute(
        engine: &mut GammaEngine<'_>,
        word: &DoubleWord,
        cr: &Crossings,
    ) -> Result<OrdTable> {
        let dy = engine.dynkin();
        let m = word.len();
        let solid = cr.solid().to_vec();
        let mut gamma_plus = Vec::with_capacity(m + 1);
        let mut gamma_minus = Vec::with_capacity(m + 1);
        for c in 0..=m {
            let mut row_p = Vec::with_capacity(solid.len());
            let mut row_m = Vec::with_capacity(solid.len());
            for &e in &solid {
                let g = engine.gamma_plus(word, cr, c, e)?;
                row_m.push(dy.act(cr.u(c), &g));
                row_p.push(g);
            }
            gamma_plus.push(row_p);
            gamma_minus.push(row_m);
        }
        let table = OrdTable {
            m,
            rank: dy.rank(),
            solid,
            gamma_plus,
            gamma_minus,
        };
        table.validate(word)?;
        if dy.cartan_type().family == Family::A {
            table.check_at_most_one()?;
        }
        Ok(table)
    }

    /// Build a table from a function `(c, k, e) -> ord_{V_e} Delta_{c,k}`.
    pub fn from_orders(
        m: usize,
        rank: usize,
        solid: Vec<usize>,
        ords: &dyn Fn(usize, i32, usize) -> i64,
    ) -> OrdTable {
        let mut gamma_plus = Vec::new();
        let mut gamma_minus = Vec::new();
        for c in 0..=m {
            gamma_plus.push(
                solid
                    .iter()
                    .map(|&e| (1..=rank).map(|k| ords(c, k as i32, e)).collect())
                    .collect(),
            );
            gamma_minus.push(
                solid
                    .iter()
                    .map(|&e| (1..=rank).map(|k| ords(c, -(k as i32), e)).collect())
                    .collect(),
            );
        }
        OrdTable {
            m,
            rank,
            solid,
            gamma_plus,
            gamma_minus,
        }
    }

    fn validate(&self, word: &DoubleWord) -> Result<()> {
        for c in 0..=self.m {
            for k in self.letters() {
                for &e in &self.solid {
                    let v = self.ord(c, k, e);
                    if v < 0 {
                        return Err(Error::InternalInconsistency(format!(
                            "negative order {v} of the grid minor ({c},{k}) along V_{e}"
                        )));
                    }
                    if e <= c && v != 0 {
                        return Err(Error::InternalInconsistency(format!(
                            "grid minor ({c},{k}) vanishes along V_{e} with e <= c"
                        )));
                    }
                }
            }
        }
        for &e in &self.solid {
            if self.ord(e - 1, word.at(e), e) != 1 {
                return Err(Error::InternalInconsistency(format!(
                    "chamber minor of {e} does not vanish to order one along V_{e}"
                )));
            }
        }
        Ok(())
    }

    /// In type A every grid minor vanishes to order at most one.
    fn check_at_most_one(&self) -> Result<()> {
        for c in 0..=self.m {
            for k in self.letters() {
                for &e in &self.solid {
                    if self.ord(c, k, e) > 1 {
                        return Err(Error::InternalInconsistency(format!(
                            "type A grid minor ({c},{k}) vanishes to order {} along V_{e}",
                            self.ord(c, k, e)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn solid(&self) -> &[usize] {
        &self.solid
    }

    /// The letters `±1..±rank`.
    pub fn letters(&self) -> impl Iterator<Item = i32> {
        let r = self.rank as i32;
        (1..=r).chain((1..=r).map(|k| -k))
    }

    fn col(&self, e: usize) -> usize {
        self.solid.binary_search(&e).expect("e is a solid crossing")
    }

    pub fn gamma_plus(&self, c: usize, e: usize) -> &Cochar {
        &self.gamma_plus[c][self.col(e)]
    }

    /// `ord_{V_e} Delta_{c,k}` for a signed letter `k`.
    pub fn ord(&self, c: usize, k: i32, e: usize) -> i64 {
        let x = self.col(e);
        let kk = node(k) - 1;
        if k > 0 {
            self.gamma_plus[c][x][kk]
        } else {
            self.gamma_minus[c][x][kk]
        }
    }

    /// Exponent vector of `Delta_{c,k}` over the cluster variables.
    pub fn minor_exponents(&self, c: usize, k: i32) -> Vec<i64> {
        self.solid.iter().map(|&e| self.ord(c, k, e)).collect()
    }
}

/// Mismatch between the vanishing pattern of the table and the almost
/// positive sequence criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApsMismatch {
    pub c: usize,
    pub k: i32,
    pub e: usize,
    pub ord: i64,
}

/// Compare `ord = 0` against `u_c omega_k = u<e>_c omega_k` (and the inverse
/// variant for negative `k`).
pub fn aps_zero_check(
    dy: &DynkinData,
    word: &DoubleWord,
    cr: &Crossings,
    table: &OrdTable,
) -> Vec<ApsMismatch> {
    let mut out = Vec::new();
    for &e in cr.solid() {
        let aps = cr.aps(dy, word, e);
        for c in 0..=word.len() {
            for k in table.letters() {
                let kn = node(k);
                let same = if k > 0 {
                    dy.act_fundamental_weight(cr.u(c), kn) == dy.act_fundamental_weight(&aps[c], kn)
                } else {
                    dy.act_fundamental_weight(&cr.u(c).inverse(), kn)
                        == dy.act_fundamental_weight(&aps[c].inverse(), kn)
                };
                let ord = table.ord(c, k, e);
                if (ord == 0) != same {
                    out.push(ApsMismatch { c, k, e, ord });
                }
            }
        }
    }
    out
}
