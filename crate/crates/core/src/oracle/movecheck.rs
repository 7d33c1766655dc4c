//! Moves checked on actual functions: both words' cluster variables are
//! written in the source word's parameters and compared after the plan.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{Poly, TypeAOracle};
use crate::braidword::{Crossings, DoubleWord};
use crate::clusterops::{quasi_equivalent, AbstractSeed, Witness};
use crate::error::{Error, Result};
use crate::moves::{MoveKind, MovePlan, MoveSpec};

/// Result of an oracle-level move check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleMoveReport {
    /// The chains of both words agree outside the window.
    pub chains_agree: bool,
    /// Witness of quasi-equivalence of `plan(source)` and the target seed.
    pub witness: Option<Witness>,
    pub note: Option<String>,
}

impl OracleMoveReport {
    pub fn passed(&self) -> bool {
        self.chains_agree && self.witness.is_some() && self.note.is_none()
    }
}

/// Parameters `t'_1 .. t'_m` of the target word in terms of the source's.
pub fn move_substitution(spec: &MoveSpec, m: usize) -> Vec<Poly> {
    let mut t: Vec<Poly> = (0..m).map(Poly::var).collect();
    let l = spec.left - 1;
    match spec.kind {
        MoveKind::B1 | MoveKind::B2 => t.swap(l, l + 1),
        MoveKind::B3 if spec.len == 3 => {
            // z_i(a) z_j(b) z_i(c) = z_j(c) z_i(ac - b) z_j(a)
            let (a, b, c) = (Poly::var(l), Poly::var(l + 1), Poly::var(l + 2));
            t[l] = c.clone();
            t[l + 1] = &(&a * &c) - &b;
            t[l + 2] = a;
        }
        _ => {}
    }
    t
}

/// Positions `c` where `Z_c` must agree for both words. B5 changes the
/// first factor itself, so only `Z_1 ..` survive.
fn outside(spec: &MoveSpec, m: usize) -> Vec<usize> {
    if spec.kind == MoveKind::B5 {
        return (1..=m).collect();
    }
    (0..=m)
        .filter(|&c| c < spec.left || c >= spec.right())
        .collect()
}

impl TypeAOracle<'_> {
    /// Check `plan` against the symbolic realization. B5 keeps every
    /// variable but the first; B4 is only compared at seed level.
    pub fn check_move(
        &self,
        word: &DoubleWord,
        spec: &MoveSpec,
        plan: &MovePlan,
        source: &AbstractSeed,
        target: &AbstractSeed,
    ) -> Result<OracleMoveReport> {
        let dy = self.dynkin();
        let m = word.len();
        if spec.kind == MoveKind::B4 {
            // the last letter changes its sign and the seed stays put
            let same = plan.transport(source)? == *target;
            let note = (!same).then(|| String::from("B4 changed the seed"));
            return Ok(OracleMoveReport {
                chains_agree: true,
                witness: same.then(Witness::new),
                note,
            });
        }
        let cr = Crossings::compute(dy, word)?;
        let cr2 = Crossings::compute(dy, &plan.target)?;
        let src = self.ord_table(word, &cr)?;
        let dst = self.ord_table(&plan.target, &cr2)?;
        let subs: Vec<Option<Poly>> = move_substitution(spec, m).into_iter().map(Some).collect();
        let pulled = |p: &Poly| p.substitute(&subs);
        let mut report = OracleMoveReport {
            chains_agree: true,
            witness: None,
            note: None,
        };
        for c in outside(spec, m) {
            let lhs = &src.chain[c];
            let rhs: Vec<Vec<Poly>> = dst.chain[c]
                .iter()
                .map(|r| r.iter().map(pulled).collect())
                .collect();
            if *lhs != rhs {
                report.chains_agree = false;
                report.note = Some(format!("Z_{c} differs after substitution"));
                return Ok(report);
            }
        }

        if spec.kind == MoveKind::B5 {
            for (&e, x) in &src.vars {
                if e > 1 && dst.vars.get(&e).map(pulled).as_ref() != Some(x) {
                    report.note = Some(format!("x_{e} changed under B5"));
                    return Ok(report);
                }
            }
            report.witness = Some(Witness::new());
            return Ok(report);
        }

        // atoms: the target's variables in source parameters, then any
        // leftover factors met on the way
        let target_labels: Vec<usize> = dst.vars.keys().copied().collect();
        let mut atoms: Vec<Poly> = dst.vars.values().map(pulled).collect();
        let mut vectors: BTreeMap<usize, Vec<i64>> = BTreeMap::new();
        for (&e, x) in &src.vars {
            vectors.insert(e, factor_over(x, &mut atoms));
        }
        let mut seed = source.clone();
        for k in plan.mutations.application_order() {
            let (pos, neg) = seed.exchange_terms(k);
            let width = atoms.len();
            let expo = |terms: &[(usize, i64)]| -> Vec<i64> {
                let mut v = vec![0i64; width];
                for &(j, e) in terms {
                    let xv = &vectors[&j];
                    for (a, b) in v.iter_mut().zip(xv) {
                        *a += e * b;
                    }
                }
                v
            };
            let (p, q) = (expo(&pos), expo(&neg));
            let g: Vec<i64> = p.iter().zip(&q).map(|(a, b)| *a.min(b)).collect();
            let monomial = |v: &[i64]| -> Poly {
                v.iter()
                    .zip(&g)
                    .zip(&atoms)
                    .fold(Poly::one(), |acc, ((e, g), a)| {
                        &acc * &a.pow((e - g) as u32)
                    })
            };
            let sum = &monomial(&p) + &monomial(&q);
            let mut v = factor_over(&sum, &mut atoms);
            v.resize(atoms.len(), 0);
            let old = &vectors[&k];
            for (x, val) in v.iter_mut().enumerate() {
                *val += g.get(x).copied().unwrap_or(0) - old.get(x).copied().unwrap_or(0);
            }
            vectors.insert(k, v);
            seed = seed.mutate(k)?;
        }
        let width = atoms.len();
        let moved = seed.relabel(&plan.relabel);
        let inv: BTreeMap<usize, usize> = plan.relabel.iter().map(|(a, b)| (*b, *a)).collect();
        let rows1: Vec<Vec<i64>> = moved
            .labels()
            .iter()
            .map(|l| {
                let mut v = vectors[inv.get(l).unwrap_or(l)].clone();
                v.resize(width, 0);
                v
            })
            .collect();
        let rows2: Vec<Vec<i64>> = target
            .labels()
            .iter()
            .map(|l| {
                let mut v = vec![0i64; width];
                v[target_labels
                    .iter()
                    .position(|x| x == l)
                    .expect("target label")] = 1;
                v
            })
            .collect();
        report.witness = quasi_equivalent(&moved, &rows1, target, &rows2)?;
        if report.witness.is_none() {
            report.note = Some(String::from("no frozen-monomial witness"));
        }
        Ok(report)
    }
}

impl TypeAOracle<'_> {
    /// Exchange relation across a solid-special B1 at `(c, c+1)`, as an
    /// identity of polynomials in the source parameters:
    /// `D_{c,j} D'_{c,j} = D_{c+1,j} D_{c-1,j} + prod_{k != j} D_{c,k}^{-a_jk}`
    /// for both signed letters `j` of the window, `D'` read on the target word.
    pub fn exchange_identity(&self, word: &DoubleWord, spec: &MoveSpec) -> Result<bool> {
        if spec.kind != MoveKind::B1 || !(spec.special && spec.solid) {
            return Err(Error::NotApplicable(format!(
                "{spec} is not a solid-special B1"
            )));
        }
        let dy = self.dynkin();
        let target = crate::moves::rewrite(dy, word, spec.kind, spec.left)?;
        let cr = Crossings::compute(dy, word)?;
        let cr2 = Crossings::compute(dy, &target)?;
        let chain = self.param_chain(word);
        let chain2 = self.param_chain(&target);
        let subs: Vec<Option<Poly>> = move_substitution(spec, word.len())
            .into_iter()
            .map(Some)
            .collect();
        let c = spec.left;
        for j in [word.at(c), word.at(c + 1)] {
            let minor = |at: usize, k: i32| self.grid_minor(&chain, &cr, at, k);
            let lhs = &minor(c, j) * &self.grid_minor(&chain2, &cr2, c, j).substitute(&subs);
            let mut rest = Poly::one();
            for k in 1..=dy.rank() {
                let e = -dy.a(crate::braidword::node(j), k);
                if k != crate::braidword::node(j) && e > 0 {
                    rest = &rest * &minor(c, k as i32 * j.signum()).pow(e as u32);
                }
            }
            if lhs != &(&minor(c + 1, j) * &minor(c - 1, j)) + &rest {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Exponents of `p` over `atoms` (up to a constant); a leftover non-constant
/// factor becomes a new atom.
fn factor_over(p: &Poly, atoms: &mut Vec<Poly>) -> Vec<i64> {
    let mut rest = p.clone();
    let mut v = Vec::with_capacity(atoms.len() + 1);
    for a in atoms.iter() {
        let (e, q) = rest.valuation(a);
        v.push(e as i64);
        rest = q;
    }
    if rest.as_constant().is_none() {
        atoms.push(rest.primitive());
        v.push(1);
    }
    v
}

/// Convenience wrapper raising a structured error when the check fails.
pub fn require(report: &OracleMoveReport) -> Result<()> {
    if report.passed() {
        Ok(())
    } else {
        Err(Error::InternalInconsistency(
            report.note.clone().unwrap_or_default(),
        ))
    }
}
