//! Assembly of the seed of a double braid word.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::braidword::{node, Crossings, DoubleWord};
use crate::clusterops::{AbstractSeed, Q};
use crate::error::{Error, Result};
use crate::gamma::{GammaEngine, OrdTable};
use crate::intlat::{self, IntMatrix};
use crate::rootsys::DynkinData;

/// The seed of a word together with the data it was computed from.
#[derive(Clone, Debug)]
pub struct Seed {
    pub word: DoubleWord,
    pub crossings: Crossings,
    pub ord: OrdTable,
    /// `M[c][e] = ord_{V_e} Delta_c` over solid crossings.
    pub chamber: IntMatrix,
    /// Row `e` holds the exponents of `x_e` over the chamber minors.
    pub cluster_monomials: IntMatrix,
    /// Full antisymmetric 2-form coefficients over solid crossings.
    pub omega: Vec<Q>,
    pub seed: AbstractSeed,
}

impl Seed {
    pub fn build(engine: &mut GammaEngine<'_>, word: &DoubleWord) -> Result<Seed> {
        let dy = engine.dynkin();
        let crossings = Crossings::compute(dy, word)?;
        let ord = OrdTable::compute(engine, word, &crossings)?;
        let chamber = chamber_matrix(word, &ord)?;
        let cluster_monomials = intlat::unitriangular_inverse(&chamber);
        let omega = two_form(dy, word, &ord);
        let solid = crossings.solid().to_vec();
        let d = solid.iter().map(|&c| dy.d(node(word.at(c)))).collect();
        let seed = AbstractSeed::from_omega(solid, crossings.frozen_flags().to_vec(), d, &omega)?;
        Ok(Seed {
            word: word.clone(),
            crossings,
            ord,
            chamber,
            cluster_monomials,
            omega,
            seed,
        })
    }

    pub fn from_name(dy: &DynkinData, word: &str) -> Result<Seed> {
        Seed::build(&mut GammaEngine::new(dy), &word.parse()?)
    }

    pub fn solid(&self) -> &[usize] {
        self.crossings.solid()
    }

    pub fn really_full_rank(&self) -> bool {
        really_full_rank(&self.seed)
    }
}

/// `M[c][e] = ord[(c-1, i_c), e]`, checked to be upper unitriangular.
pub fn chamber_matrix(word: &DoubleWord, ord: &OrdTable) -> Result<IntMatrix> {
    let solid = ord.solid();
    let m: IntMatrix = solid
        .iter()
        .map(|&c| {
            solid
                .iter()
                .map(|&e| ord.ord(c - 1, word.at(c), e))
                .collect()
        })
        .collect();
    for (r, row) in m.iter().enumerate() {
        for (x, &v) in row.iter().enumerate() {
            let want_zero = x < r;
            if (x == r && v != 1) || (want_zero && v != 0) {
                return Err(Error::InternalInconsistency(format!(
                    "chamber matrix is not upper unitriangular at ({}, {})",
                    solid[r], solid[x]
                )));
            }
        }
    }
    Ok(m)
}

/// Twice the coefficients of `L_{c,i}` over `dlog x_e`.
fn l_form(dy: &DynkinData, ord: &OrdTable, c: usize, i: i32) -> Vec<i64> {
    let sign = i.signum();
    ord.solid()
        .iter()
        .map(|&e| {
            (1..=dy.rank())
                .map(|k| dy.a(node(i), k) as i64 * ord.ord(c, sign * k as i32, e))
                .sum()
        })
        .collect()
}

/// Coefficients of `omega = sum_c sign(i_c) d_{i_c} L_{c-1,i_c} ^ L_{c,i_c}`.
pub fn two_form(dy: &DynkinData, word: &DoubleWord, ord: &OrdTable) -> Vec<Q> {
    let n = ord.solid().len();
    let mut omega = vec![Q::zero(); n * n];
    for &c in ord.solid() {
        let i = word.at(c);
        let p = l_form(dy, ord, c - 1, i);
        let q = l_form(dy, ord, c, i);
        let scale = Q::new(i.signum() as i64 * dy.d(node(i)), 4);
        for e in 0..n {
            for f in 0..n {
                let v = p[e] * q[f] - p[f] * q[e];
                if v != 0 {
                    omega[e * n + f] += scale * Q::from(v);
                }
            }
        }
    }
    omega
}

/// The rows of the extended exchange matrix span the full lattice over the
/// mutable indices.
pub fn really_full_rank(seed: &AbstractSeed) -> bool {
    let b = seed.b_ext();
    let divisors = intlat::elementary_divisors(&b);
    divisors.len() == seed.rank() && divisors.iter().all(|&x| x == 1)
}
