//! Independent symbolic ground truth in type A.
//!
//! Points of the braid variety are parametrized by `t'_1 .. t'_m`, the
//! matrices `Z_c` are built as explicit `SL_n` products over a polynomial
//! ring, grid minors become honest minors, and orders of vanishing are read
//! off by exact division.

pub mod movecheck;
pub mod poly;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::braidword::{node, Crossings, DoubleWord};
use crate::error::{Error, Result};
use crate::gamma::OrdTable;
use crate::rootsys::{DynkinData, Family, WeylElt};
pub use poly::{determinant, Poly};

pub type PolyMat = Vec<Vec<Poly>>;

/// Integer `n x n` matrix used for the signed permutation lifts.
pub type IntMat = Vec<Vec<i64>>;

pub fn identity(n: usize) -> PolyMat {
    (0..n)
        .map(|r| {
            (0..n)
                .map(|c| if r == c { Poly::one() } else { Poly::zero() })
                .collect()
        })
        .collect()
}

pub fn matmul(a: &PolyMat, b: &PolyMat) -> PolyMat {
    let n = a.len();
    let mut out = vec![vec![Poly::zero(); n]; n];
    for r in 0..n {
        for l in 0..n {
            if a[r][l].is_zero() {
                continue;
            }
            for c in 0..n {
                if b[l][c].is_zero() {
                    continue;
                }
                out[r][c] = &out[r][c] + &(&a[r][l] * &b[l][c]);
            }
        }
    }
    out
}

fn block(n: usize, i: usize, entries: [[Poly; 2]; 2]) -> PolyMat {
    let mut m = identity(n);
    let [[a, b], [c, d]] = entries;
    m[i - 1][i - 1] = a;
    m[i - 1][i] = b;
    m[i][i - 1] = c;
    m[i][i] = d;
    m
}

/// `z_i(t)`: block `[[t, -1], [1, 0]]` at rows and columns `i, i+1`.
pub fn z(n: usize, i: usize, t: Poly) -> PolyMat {
    block(n, i, [[t, Poly::constant(-1)], [Poly::one(), Poly::zero()]])
}

/// `zbar_i(t)`: block `[[t, 1], [-1, 0]]`.
pub fn zbar(n: usize, i: usize, t: Poly) -> PolyMat {
    block(n, i, [[t, Poly::one()], [Poly::constant(-1), Poly::zero()]])
}

/// `zbar_i(t)^{-1}`: block `[[0, -1], [1, t]]`.
pub fn zbar_inv(n: usize, i: usize, t: Poly) -> PolyMat {
    block(n, i, [[Poly::zero(), Poly::constant(-1)], [Poly::one(), t]])
}

/// The symbolic realization of a type A root system.
pub struct TypeAOracle<'d> {
    dy: &'d DynkinData,
    n: usize,
}

impl<'d> TypeAOracle<'d> {
    pub fn new(dy: &'d DynkinData) -> Result<Self> {
        if dy.cartan_type().family != Family::A {
            return Err(Error::UnknownType(format!(
                "{} has no symbolic oracle",
                dy.cartan_type()
            )));
        }
        Ok(TypeAOracle {
            dy,
            n: dy.rank() + 1,
        })
    }

    pub fn dynkin(&self) -> &'d DynkinData {
        self.dy
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// `Z_0 .. Z_m` with `Z_m = 1`, `Z_{c-1} = Z_c z_{i_c}(t'_c)` for positive
    /// letters and `Z_{c-1} = zbar_{|i_c|*}(t'_c)^{-1} Z_c` for negative ones.
    pub fn param_chain(&self, word: &DoubleWord) -> Vec<PolyMat> {
        let m = word.len();
        assert!(m <= poly::MAX_VARS, "word too long for the oracle");
        let mut chain = vec![identity(self.n); m + 1];
        for c in (1..=m).rev() {
            let l = word.at(c);
            let t = Poly::var(c - 1);
            chain[c - 1] = if l > 0 {
                matmul(&chain[c], &z(self.n, node(l), t))
            } else {
                matmul(&zbar_inv(self.n, self.dy.star(node(l)), t), &chain[c])
            };
        }
        chain
    }

    /// Signed permutation lift `s_{i_1}dot ... s_{i_l}dot` along a reduced word.
    pub fn lift(&self, w: &WeylElt) -> IntMat {
        let n = self.n;
        let mut m: IntMat = (0..n)
            .map(|r| (0..n).map(|c| (r == c) as i64).collect())
            .collect();
        for i in self.dy.reduced_word(w) {
            // right multiplication by the block [[0,-1],[1,0]] at (i, i+1)
            for row in m.iter_mut() {
                let (a, b) = (row[i - 1], row[i]);
                row[i - 1] = b;
                row[i] = -a;
            }
        }
        m
    }

    /// `Delta_{v omega_k, w omega_k}(x)`: leading `k x k` minor of `vdot^-1 x wdot`.
    pub fn generalized_minor(&self, x: &PolyMat, v: &WeylElt, w: &WeylElt, k: usize) -> Poly {
        let lv = self.lift(v);
        let lw = self.lift(w);
        // vdot^-1 = vdot^T for a signed permutation matrix
        let pick = |m: &IntMat, c: usize| -> (usize, i64) {
            (0..self.n)
                .map(|r| (r, m[r][c]))
                .find(|(_, s)| *s != 0)
                .expect("signed permutation")
        };
        let rows: Vec<(usize, i64)> = (0..k).map(|r| pick(&lv, r)).collect();
        let cols: Vec<(usize, i64)> = (0..k).map(|c| pick(&lw, c)).collect();
        let sub: Vec<Vec<Poly>> = rows
            .iter()
            .map(|&(r, sr)| cols.iter().map(|&(c, sc)| x[r][c].scale(sr * sc)).collect())
            .collect();
        determinant(&sub)
    }

    /// `Delta_{c,k}` for a signed letter `k`.
    pub fn grid_minor(&self, chain: &[PolyMat], cr: &Crossings, c: usize, k: i32) -> Poly {
        let dy = self.dy;
        if k > 0 {
            self.generalized_minor(&chain[c], &cr.w(dy, c), &dy.identity(), node(k))
        } else {
            self.generalized_minor(&chain[c], dy.w0(), &cr.u(c).inverse(), node(k))
        }
    }

    /// Cluster variables as polynomials, extracted from the chamber minors
    /// from the right.
    pub fn cluster_polys(
        &self,
        word: &DoubleWord,
        cr: &Crossings,
        chain: &[PolyMat],
    ) -> Result<BTreeMap<usize, Poly>> {
        let mut out: BTreeMap<usize, Poly> = BTreeMap::new();
        for &e in cr.solid().iter().rev() {
            let mut p = self.grid_minor(chain, cr, e - 1, word.at(e));
            if p.is_zero() {
                return Err(Error::DivisionFailure(format!(
                    "chamber minor {e} vanishes identically"
                )));
            }
            for x in out.values() {
                p = p.valuation(x).1;
            }
            if p.as_constant().is_some() {
                return Err(Error::DivisionFailure(format!(
                    "chamber minor {e} has no new factor"
                )));
            }
            out.insert(e, p.primitive());
        }
        Ok(out)
    }

    /// Orders of vanishing by valuation, with a check that every grid minor
    /// is a constant times a monomial in the cluster variables.
    pub fn ord_table(&self, word: &DoubleWord, cr: &Crossings) -> Result<OracleTable> {
        let chain = self.param_chain(word);
        let vars = self.cluster_polys(word, cr, &chain)?;
        let rank = self.dy.rank();
        let mut ords: BTreeMap<(usize, i32, usize), i64> = BTreeMap::new();
        let mut minors = BTreeMap::new();
        for c in 0..=word.len() {
            for k in (1..=rank as i32).chain((1..=rank as i32).map(|k| -k)) {
                let p = self.grid_minor(&chain, cr, c, k);
                if p.is_zero() {
                    return Err(Error::FactorizationFailure(format!(
                        "grid minor ({c},{k}) vanishes"
                    )));
                }
                let mut rest = p.clone();
                for (&e, x) in &vars {
                    let (v, q) = rest.valuation(x);
                    ords.insert((c, k, e), v as i64);
                    rest = q;
                }
                if rest.as_constant().is_none() {
                    return Err(Error::FactorizationFailure(format!(
                        "grid minor ({c},{k}) of `{word}` leaves the factor {rest}"
                    )));
                }
                minors.insert((c, k), p);
            }
        }
        let table = OrdTable::from_orders(word.len(), rank, cr.solid().to_vec(), &|c, k, e| {
            ords[&(c, k, e)]
        });
        Ok(OracleTable {
            table,
            vars,
            minors,
            chain,
        })
    }
}

/// Everything the oracle computes for one word.
#[derive(Clone, Debug)]
pub struct OracleTable {
    pub table: OrdTable,
    pub vars: BTreeMap<usize, Poly>,
    pub minors: BTreeMap<(usize, i32), Poly>,
    pub chain: Vec<PolyMat>,
}
