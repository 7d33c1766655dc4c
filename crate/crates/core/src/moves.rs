//! The five double braid moves, their classification, and the mutation
//! plans relating the seeds on both sides.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::braidword::{node, star_letter, Crossings, DoubleWord};
use crate::clusterops::{AbstractSeed, MutationSeq};
use crate::error::{Error, Result};
use crate::gamma::GammaEngine;
use crate::intlat;
use crate::rootsys::{DynkinData, Side};
use crate::seedbuild::Seed;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveKind {
    B1,
    B2,
    B3,
    B4,
    B5,
    Conj,
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MoveKind::B1 => "B1",
            MoveKind::B2 => "B2",
            MoveKind::B3 => "B3",
            MoveKind::B4 => "B4",
            MoveKind::B5 => "B5",
            MoveKind::Conj => "Conj",
        })
    }
}

/// A move located in a word: `kind` acting on positions `left .. left+len-1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MoveSpec {
    pub kind: MoveKind,
    pub left: usize,
    pub len: usize,
    pub solid: bool,
    pub special: bool,
    pub mutation: bool,
    pub long: bool,
}

impl MoveSpec {
    pub fn right(&self) -> usize {
        self.left + self.len - 1
    }

    pub fn window(&self) -> core::ops::RangeInclusive<usize> {
        self.left..=self.right()
    }
}

impl fmt::Display for MoveSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.kind, self.left)?;
        let flags: Vec<&str> = [
            (self.solid, "solid"),
            (self.special, "special"),
            (self.mutation, "mutation"),
            (self.long, "long"),
        ]
        .iter()
        .filter(|(on, _)| *on)
        .map(|(_, s)| *s)
        .collect();
        if !flags.is_empty() {
            write!(f, " [{}]", flags.join(","))?;
        }
        Ok(())
    }
}

/// A move request as typed on the command line: `B3@2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MoveRef {
    pub kind: MoveKind,
    pub left: usize,
}

impl FromStr for MoveRef {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(String::from(s));
        let (k, at) = s.trim().split_once('@').ok_or_else(bad)?;
        let kind = match k.trim().to_ascii_uppercase().as_str() {
            "B1" => MoveKind::B1,
            "B2" => MoveKind::B2,
            "B3" => MoveKind::B3,
            "B4" => MoveKind::B4,
            "B5" => MoveKind::B5,
            _ => return Err(bad()),
        };
        let left = at.trim().parse().map_err(|_| bad())?;
        Ok(MoveRef { kind, left })
    }
}

/// How to get from the seed of `source` to the seed of `target`: mutate by
/// `mutations` (composition notation), then rename labels by `relabel`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MovePlan {
    pub source: DoubleWord,
    pub target: DoubleWord,
    pub mutations: MutationSeq,
    pub relabel: BTreeMap<usize, usize>,
}

impl MovePlan {
    /// Apply the plan to a seed of the source word.
    pub fn transport(&self, seed: &AbstractSeed) -> Result<AbstractSeed> {
        Ok(seed
            .mutate_seq(&self.mutations.application_order())?
            .relabel(&self.relabel))
    }

    /// Composite `self` then `next`.
    pub fn then(&self, next: &MovePlan) -> MovePlan {
        // mu2 pi1 mu1 = pi1 (pi1^-1 mu2 pi1) mu1
        let inv: BTreeMap<usize, usize> = self.relabel.iter().map(|(a, b)| (*b, *a)).collect();
        let mut order = self.mutations.application_order();
        order.extend(
            next.mutations
                .application_order()
                .iter()
                .map(|l| *inv.get(l).unwrap_or(l)),
        );
        order.reverse();
        let mut relabel: BTreeMap<usize, usize> = BTreeMap::new();
        for (a, b) in &self.relabel {
            relabel.insert(*a, *next.relabel.get(b).unwrap_or(b));
        }
        for (a, b) in &next.relabel {
            if !inv.contains_key(a) {
                relabel.insert(*inv.get(a).unwrap_or(a), *b);
            }
        }
        MovePlan {
            source: self.source.clone(),
            target: next.target.clone(),
            mutations: MutationSeq(order),
            relabel,
        }
    }
}

fn has_sign_split(a: i32, b: i32) -> bool {
    (a > 0) != (b > 0)
}

/// Every applicable elementary move, in position order, B4 and B5 last.
pub fn enumerate_moves(dy: &DynkinData, word: &DoubleWord, cr: &Crossings) -> Vec<MoveSpec> {
    let m = word.len();
    let mut out = Vec::new();
    for c in 1..m {
        let (a, b) = (word.at(c), word.at(c + 1));
        if has_sign_split(a, b) {
            let solid = cr.is_solid(c) && cr.is_solid(c + 1);
            let special = b1_special(dy, word, cr, c);
            out.push(MoveSpec {
                kind: MoveKind::B1,
                left: c,
                len: 2,
                solid,
                special,
                mutation: solid && special,
                long: false,
            });
        } else if node(a) != node(b) && dy.coxeter_m(node(a), node(b)) == 2 {
            let solid = cr.is_solid(c) && cr.is_solid(c + 1);
            out.push(MoveSpec {
                kind: MoveKind::B2,
                left: c,
                len: 2,
                solid,
                special: false,
                mutation: false,
                long: false,
            });
        }
    }
    for c in 1..m {
        let (a, b) = (word.at(c), word.at(c + 1));
        if has_sign_split(a, b) || node(a) == node(b) {
            continue;
        }
        let len = dy.coxeter_m(node(a), node(b)) as usize;
        if len < 3 || c + len - 1 > m {
            continue;
        }
        if (0..len).all(|x| word.at(c + x) == if x % 2 == 0 { a } else { b }) {
            let window = c..c + len;
            let solid = window.clone().all(|x| cr.is_solid(x));
            let q = window.filter(|&x| cr.is_solid(x)).count();
            out.push(MoveSpec {
                kind: MoveKind::B3,
                left: c,
                len,
                solid,
                special: false,
                mutation: q >= 3 && long_or_short_mutates(dy, word, cr, c, len),
                long: len > 3,
            });
        }
    }
    if m >= 1 {
        out.push(MoveSpec {
            kind: MoveKind::B4,
            left: m,
            len: 1,
            solid: false,
            special: false,
            mutation: false,
            long: false,
        });
        out.push(MoveSpec {
            kind: MoveKind::B5,
            left: 1,
            len: 1,
            solid: cr.is_solid(1),
            special: false,
            mutation: false,
            long: false,
        });
    }
    out
}

fn long_or_short_mutates(
    dy: &DynkinData,
    word: &DoubleWord,
    cr: &Crossings,
    c: usize,
    len: usize,
) -> bool {
    b3_plan_data(dy, word, cr, c, len).is_ok_and(|(mu, _)| !mu.0.is_empty())
}

/// The positive letter and the node of the negative letter of a B1 window.
fn b1_letters(word: &DoubleWord, c: usize) -> (usize, usize) {
    let (a, b) = (word.at(c), word.at(c + 1));
    if a > 0 {
        (node(a), node(b))
    } else {
        (node(b), node(a))
    }
}

/// `s_neg u_c = u_c s_pos` for the B1 window at `c, c+1`.
pub fn b1_special(dy: &DynkinData, word: &DoubleWord, cr: &Crossings, c: usize) -> bool {
    let (pos, neg) = b1_letters(word, c);
    let u = cr.u(c);
    dy.mul_simple(u, neg, Side::Left) == dy.mul_simple(u, pos, Side::Right)
}

/// The word after the move.
pub fn rewrite(
    dy: &DynkinData,
    word: &DoubleWord,
    kind: MoveKind,
    left: usize,
) -> Result<DoubleWord> {
    let m = word.len();
    let mut l = word.letters().to_vec();
    let na = |why: &str| Error::NotApplicable(format!("{kind}@{left}: {why}"));
    match kind {
        MoveKind::B1 | MoveKind::B2 => {
            if left == 0 || left + 1 > m {
                return Err(na("window out of range"));
            }
            let (a, b) = (l[left - 1], l[left]);
            let ok = match kind {
                MoveKind::B1 => has_sign_split(a, b),
                _ => {
                    !has_sign_split(a, b)
                        && node(a) != node(b)
                        && dy.coxeter_m(node(a), node(b)) == 2
                }
            };
            if !ok {
                return Err(na("letters do not qualify"));
            }
            l.swap(left - 1, left);
        }
        MoveKind::B3 => {
            if left == 0 || left + 1 > m {
                return Err(na("window out of range"));
            }
            let (a, b) = (l[left - 1], l[left]);
            if has_sign_split(a, b) || node(a) == node(b) {
                return Err(na("letters do not qualify"));
            }
            let len = dy.coxeter_m(node(a), node(b)) as usize;
            if len < 3 || left + len - 1 > m {
                return Err(na("window out of range"));
            }
            for x in 0..len {
                let want = if x % 2 == 0 { a } else { b };
                if l[left - 1 + x] != want {
                    return Err(na("window is not alternating"));
                }
                l[left - 1 + x] = if x % 2 == 0 { b } else { a };
            }
        }
        MoveKind::B4 => {
            if m == 0 || left != m {
                return Err(na("B4 acts on the last letter"));
            }
            l[m - 1] = -star_letter(dy, l[m - 1]);
        }
        MoveKind::B5 => {
            if m == 0 || left != 1 {
                return Err(na("B5 acts on the first letter"));
            }
            l[0] = -l[0];
        }
        MoveKind::Conj => return Err(na("use conjugation_move")),
    }
    Ok(DoubleWord::new(l))
}

fn identity_on(labels: &[usize]) -> BTreeMap<usize, usize> {
    labels.iter().map(|&l| (l, l)).collect()
}

/// Relabel the window positions `from -> to` inside an identity map on `J`.
fn window_relabel(cr: &Crossings, pairs: &[(usize, usize)]) -> BTreeMap<usize, usize> {
    let mut pi = identity_on(cr.solid());
    for &(a, b) in pairs {
        pi.insert(a, b);
    }
    pi
}

/// Build the plan for a located move.
pub fn apply_move(dy: &DynkinData, word: &DoubleWord, mv: MoveRef) -> Result<MovePlan> {
    let cr = Crossings::compute(dy, word)?;
    let target = rewrite(dy, word, mv.kind, mv.left)?;
    let c = mv.left;
    let mut plan = MovePlan {
        source: word.clone(),
        target,
        mutations: MutationSeq::default(),
        relabel: identity_on(cr.solid()),
    };
    match mv.kind {
        MoveKind::B1 => {
            let special = b1_special(dy, word, &cr, c);
            let solid = cr.is_solid(c) && cr.is_solid(c + 1);
            if solid && special {
                plan.mutations = MutationSeq(vec![c + 1]);
            } else if !special {
                plan.relabel = window_relabel(&cr, &swap_pairs(&cr, c));
            }
        }
        MoveKind::B2 => plan.relabel = window_relabel(&cr, &swap_pairs(&cr, c)),
        MoveKind::B3 => {
            let len = dy.coxeter_m(node(word.at(c)), node(word.at(c + 1))) as usize;
            let (mu, pairs) = b3_plan_data(dy, word, &cr, c, len)?;
            plan.mutations = mu;
            plan.relabel = window_relabel(&cr, &pairs);
        }
        MoveKind::B4 => {}
        MoveKind::B5 => {}
        MoveKind::Conj => return Err(Error::NotApplicable("use conjugation_move".into())),
    }
    Ok(plan)
}

fn swap_pairs(cr: &Crossings, c: usize) -> Vec<(usize, usize)> {
    [(c, c + 1), (c + 1, c)]
        .into_iter()
        .filter(|(a, _)| cr.is_solid(*a))
        .collect()
}

/// Mutations and window relabeling of a B3 move at `left` of length `len`.
fn b3_plan_data(
    dy: &DynkinData,
    word: &DoubleWord,
    cr: &Crossings,
    left: usize,
    len: usize,
) -> Result<(MutationSeq, Vec<(usize, usize)>)> {
    let hollow: Vec<usize> = (1..=len).filter(|&x| !cr.is_solid(left + x - 1)).collect();
    let (mu, pi) = if len == 3 {
        short_b3(&hollow)
    } else {
        let a = node(word.at(left));
        let b = node(word.at(left + 1));
        let first_is_i = dy.d(a) > dy.d(b);
        long_b3(len, first_is_i, &hollow)?
    };
    let shift = |x: usize| left + x - 1;
    Ok((
        MutationSeq(mu.into_iter().map(shift).collect()),
        pi.into_iter().map(|(a, b)| (shift(a), shift(b))).collect(),
    ))
}

type LocalPlan = (Vec<usize>, Vec<(usize, usize)>);

fn short_b3(hollow: &[usize]) -> LocalPlan {
    match hollow {
        [] => (vec![3], vec![(1, 2), (2, 1), (3, 3)]),
        _ => (vec![], short_nonsolid_relabel(hollow)),
    }
}

fn short_nonsolid_relabel(hollow: &[usize]) -> Vec<(usize, usize)> {
    match hollow {
        // i _j i -> j i _j
        [2] => vec![(1, 2), (3, 1)],
        // i j _i -> j _i j
        [3] => vec![(1, 3), (2, 1)],
        // i _j _i -> _j _i j
        [2, 3] => vec![(1, 3)],
        // _j _i j -> i _j _i
        [1, 2] => vec![(3, 1)],
        _ => vec![],
    }
}

fn long_b3(len: usize, first_is_i: bool, hollow: &[usize]) -> Result<LocalPlan> {
    let rows = match len {
        4 => TABLE_B2,
        6 => TABLE_G2,
        _ => {
            return Err(Error::NotApplicable(format!(
                "no braid table for m = {len}"
            )))
        }
    };
    if hollow.len() == len {
        return Ok((vec![], vec![]));
    }
    if first_is_i {
        for row in rows {
            if row.hollow == hollow {
                return Ok((row.mu.to_vec(), row.pi.to_vec()));
            }
        }
    } else {
        // the window is the right-hand side of a table row
        for row in rows {
            if row.target_hollow(len) == hollow {
                let (mu, pi) = invert(row.mu, row.pi);
                return Ok((mu, pi));
            }
        }
    }
    Err(Error::NotApplicable(format!(
        "hollow pattern {hollow:?} is not in the braid table"
    )))
}

/// `(mu, pi)` of the reverse move: `pi^-1` after the reversed sequence
/// renamed through `pi`.
fn invert(mu: &[usize], pi: &[(usize, usize)]) -> LocalPlan {
    let map: BTreeMap<usize, usize> = pi.iter().copied().collect();
    let mu2 = mu.iter().rev().map(|l| map[l]).collect();
    let pi2 = pi.iter().map(|&(a, b)| (b, a)).collect();
    (mu2, pi2)
}

/// One row of a braid table: the hollow positions of the left window
/// `i j i j ..`, the mutation sequence in composition notation, and the
/// relabeling of solid positions.
#[derive(Clone, Copy, Debug)]
pub struct TableRow {
    pub hollow: &'static [usize],
    pub mu: &'static [usize],
    pub pi: &'static [(usize, usize)],
}

impl TableRow {
    /// Hollow positions of the right window: the complement of the image of `pi`.
    pub fn target_hollow(&self, len: usize) -> Vec<usize> {
        (1..=len)
            .filter(|x| !self.pi.iter().any(|(_, b)| b == x))
            .collect()
    }
}

macro_rules! row {
    ([$($h:expr),*], [$($m:expr),*], [$(($a:expr, $b:expr)),*]) => {
        TableRow { hollow: &[$($h),*], mu: &[$($m),*], pi: &[$(($a, $b)),*] }
    };
}

/// `i j i j -> j i j i` where `i` is the node with the larger symmetrizer.
pub static TABLE_B2: &[TableRow] = &[
    row!([], [4, 3, 4], [(1, 2), (2, 1), (3, 4), (4, 3)]),
    row!([3], [4], [(1, 2), (2, 1), (4, 3)]),
    row!([4], [3], [(1, 2), (2, 1), (3, 4)]),
    row!([3, 4], [], [(1, 4), (2, 1)]),
    row!([2, 3], [], [(1, 2), (4, 1)]),
    row!([1, 2, 3], [], [(4, 1)]),
    row!([2, 3, 4], [], [(1, 4)]),
];

/// `1 2 1 2 1 2 -> 2 1 2 1 2 1`.
pub static TABLE_G2: &[TableRow] = &[
    row!(
        [],
        [6, 3, 4, 6, 5, 6, 3, 4, 5, 6],
        [(1, 2), (2, 1), (3, 4), (4, 3), (5, 6), (6, 5)]
    ),
    row!(
        [6],
        [3, 4, 5, 3, 4, 5],
        [(1, 2), (2, 1), (3, 4), (4, 3), (5, 6)]
    ),
    row!(
        [5],
        [6, 3, 4, 6, 3, 4],
        [(1, 2), (2, 1), (3, 4), (4, 3), (6, 5)]
    ),
    row!([5, 6], [4, 3, 4], [(1, 2), (2, 1), (3, 6), (4, 3)]),
    // 3,6,3 and not 6,3,6: the latter fails on the principal part
    row!([4, 5], [3, 6, 3], [(1, 2), (2, 1), (3, 4), (6, 3)]),
    row!([4, 5, 6], [3], [(1, 2), (2, 1), (3, 6)]),
    row!([3, 4, 5], [6], [(1, 2), (2, 1), (6, 3)]),
    row!([3, 4, 5, 6], [], [(1, 6), (2, 1)]),
    row!([2, 3, 4, 5], [], [(1, 2), (6, 1)]),
    row!([1, 2, 3, 4, 5], [], [(6, 1)]),
    row!([2, 3, 4, 5, 6], [], [(1, 6)]),
];

/// Lift tables: the hollow positions of the lifted window, then the
/// simply-laced braid sequence and relabeling.
pub static TABLE_B2_LIFT: &[TableRow] = &[
    row!(
        [],
        [4, 5, 6, 4],
        [(1, 2), (2, 3), (3, 1), (4, 5), (5, 4), (6, 6)]
    ),
    row!([4, 5], [6], [(1, 2), (2, 3), (3, 1), (6, 4)]),
    row!([6], [4, 5], [(1, 2), (2, 3), (3, 1), (4, 6), (5, 5)]),
    row!([4, 5, 6], [], [(1, 6), (2, 5), (3, 1)]),
    row!([3, 4, 5], [], [(1, 2), (2, 3), (6, 1)]),
    row!([1, 2, 3, 4, 5], [], [(6, 1)]),
    row!([3, 4, 5, 6], [], [(1, 6), (2, 5)]),
];

pub static TABLE_G2_LIFT: &[TableRow] = &[
    row!(
        [],
        [8, 9, 5, 6, 7, 8, 11, 10, 9, 5, 12, 6, 10, 8, 5, 11],
        [
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 1),
            (5, 9),
            (6, 6),
            (7, 5),
            (8, 7),
            (9, 12),
            (10, 11),
            (11, 8),
            (12, 10)
        ]
    ),
    row!(
        [12],
        [8, 5, 6, 7, 8, 11, 9, 5, 6, 10, 8, 5, 11],
        [
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 1),
            (5, 12),
            (6, 6),
            (7, 5),
            (8, 7),
            (9, 11),
            (10, 10),
            (11, 8)
        ]
    ),
    row!(
        [9, 10, 11],
        [8, 5, 6, 7, 8, 12, 5, 6, 8, 5],
        [
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 1),
            (5, 9),
            (6, 6),
            (7, 5),
            (8, 7),
            (12, 8)
        ]
    ),
    row!(
        [9, 10, 11, 12],
        [6, 7, 5, 6, 8, 5],
        [
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 1),
            (5, 11),
            (6, 12),
            (7, 5),
            (8, 10)
        ]
    ),
    row!(
        [8, 9, 10, 11],
        [6, 5, 7, 12, 6, 5],
        [
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 1),
            (5, 6),
            (6, 7),
            (7, 5),
            (12, 8)
        ]
    ),
    row!(
        [8, 9, 10, 11, 12],
        [5, 6, 7],
        [(1, 2), (2, 3), (3, 4), (4, 1), (5, 10), (6, 11), (7, 12)]
    ),
    row!(
        [5, 6, 7, 8, 9, 10, 11],
        [12],
        [(1, 2), (2, 3), (3, 4), (4, 1), (12, 5)]
    ),
    row!(
        [5, 6, 7, 8, 9, 10, 11, 12],
        [],
        [(1, 10), (2, 11), (3, 12), (4, 1)]
    ),
    row!(
        [4, 5, 6, 7, 8, 9, 10, 11],
        [],
        [(1, 2), (2, 3), (3, 4), (12, 1)]
    ),
    row!(
        [4, 5, 6, 7, 8, 9, 10, 11, 12],
        [],
        [(1, 10), (2, 11), (3, 12)]
    ),
    row!([1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11], [], [(12, 1)]),
];

/// Rows of the lift tables whose lifted mutation sequence differs from the
/// braid sequence above.
pub static TABLE_B2_LIFT_ALT: &[TableRow] = &[row!(
    [],
    [6, 4, 5, 6],
    [(1, 2), (2, 3), (3, 1), (4, 6), (5, 5), (6, 4)]
)];

pub static TABLE_G2_LIFT_ALT: &[TableRow] = &[
    row!(
        [],
        [12, 5, 6, 7, 8, 12, 9, 10, 11, 12, 5, 6, 7, 8, 9, 10, 11, 12],
        [
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 1),
            (5, 6),
            (6, 7),
            (7, 8),
            (8, 5),
            (9, 10),
            (10, 11),
            (11, 12),
            (12, 9)
        ]
    ),
    row!(
        [12],
        [5, 6, 7, 8, 9, 10, 11, 5, 6, 7, 8, 9, 10, 11],
        [
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 1),
            (5, 6),
            (6, 7),
            (7, 8),
            (8, 5),
            (9, 10),
            (10, 11),
            (11, 12)
        ]
    ),
    row!(
        [9, 10, 11],
        [12, 5, 6, 7, 8, 12, 5, 6, 7, 8],
        [
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 1),
            (5, 6),
            (6, 7),
            (7, 8),
            (8, 5),
            (12, 9)
        ]
    ),
    row!(
        [9, 10, 11, 12],
        [8, 5, 6, 7, 8],
        [
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 1),
            (5, 10),
            (6, 11),
            (7, 12),
            (8, 5)
        ]
    ),
    row!(
        [8, 9, 10, 11],
        [5, 6, 7, 12, 5, 6, 7],
        [
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 1),
            (5, 6),
            (6, 7),
            (7, 8),
            (12, 5)
        ]
    ),
];

/// `j beta0 -> (-j) beta0 -> .. -> beta0 j*`: one conjugation, moving the
/// first letter to the end.
pub fn conjugation_move(dy: &DynkinData, word: &DoubleWord) -> Result<MovePlan> {
    let m = word.len();
    if m == 0 {
        return Err(Error::NotApplicable("conjugation of the empty word".into()));
    }
    // the negated letter travels right by B1 moves only, so every other
    // letter must carry the sign the first letter started with
    if word
        .letters()
        .iter()
        .any(|&l| has_sign_split(l, word.at(1)))
    {
        return Err(Error::NotApplicable(
            "conjugation needs a word of one sign".into(),
        ));
    }
    let mut plan = apply_move(
        dy,
        word,
        MoveRef {
            kind: MoveKind::B5,
            left: 1,
        },
    )?;
    let mut cur = plan.target.clone();
    for c in 1..m {
        let step = apply_move(
            dy,
            &cur,
            MoveRef {
                kind: MoveKind::B1,
                left: c,
            },
        )?;
        plan = plan.then(&step);
        cur = step.target;
    }
    let last = apply_move(
        dy,
        &cur,
        MoveRef {
            kind: MoveKind::B4,
            left: m,
        },
    )?;
    Ok(plan.then(&last))
}

/// Outcome of checking one move.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoveReport {
    pub spec: MoveSpec,
    pub target: DoubleWord,
    pub mutations: MutationSeq,
    pub principal_ok: bool,
    pub d_ok: bool,
    pub split_ok: bool,
    /// Frozen-monomial rescalings making the extended matrices agree.
    pub quasi: Option<FrozenWitness>,
    pub note: Option<String>,
}

impl MoveReport {
    pub fn passed(&self) -> bool {
        self.principal_ok && self.d_ok && self.split_ok && self.note.is_none()
    }
}

/// Build both seeds, push the source seed through the plan and compare.
pub fn verify_move(
    engine: &mut GammaEngine<'_>,
    word: &DoubleWord,
    spec: &MoveSpec,
) -> Result<MoveReport> {
    let dy = engine.dynkin();
    let plan = apply_move(
        dy,
        word,
        MoveRef {
            kind: spec.kind,
            left: spec.left,
        },
    )?;
    let src = Seed::build(engine, word)?;
    let dst = Seed::build(engine, &plan.target)?;
    Ok(compare_through_plan(&plan, spec, &src.seed, &dst.seed))
}

/// Compare `plan(src)` with `dst`.
pub fn compare_through_plan(
    plan: &MovePlan,
    spec: &MoveSpec,
    src: &AbstractSeed,
    dst: &AbstractSeed,
) -> MoveReport {
    let mut report = MoveReport {
        spec: spec.clone(),
        target: plan.target.clone(),
        mutations: plan.mutations.clone(),
        principal_ok: false,
        d_ok: false,
        split_ok: false,
        quasi: None,
        note: None,
    };
    let moved = match plan.transport(src) {
        Ok(s) => s,
        Err(e) => {
            report.note = Some(format!("plan does not apply: {e}"));
            return report;
        }
    };
    if moved.labels() != dst.labels() {
        report.note = Some(format!("labels {:?} vs {:?}", moved.labels(), dst.labels()));
        return report;
    }
    report.split_ok = moved.frozen_flags() == dst.frozen_flags();
    report.d_ok = moved.d() == dst.d();
    report.principal_ok = report.split_ok && moved.principal() == dst.principal();
    if report.principal_ok {
        let window: Vec<usize> = spec.window().filter(|l| moved.is_frozen(*l)).collect();
        report.quasi = frozen_witness(&moved, dst, &window);
    }
    report
}

/// A quasi-equivalence at the level of exchange matrices: frozen labels
/// whose variable is inverted, and for every frozen label `f` the integer
/// combination `r_f` of principal rows (then inverted rows) with
/// `B'_f = s_f B_f + r_f . gens`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrozenWitness {
    pub inverted: Vec<usize>,
    pub shifts: BTreeMap<usize, Vec<i64>>,
}

/// Search for a [`FrozenWitness`], allowing inversions only among `flippable`.
/// An inverted frozen variable may absorb a monomial in the other frozens,
/// so its row joins the generators for the remaining frozen rows.
pub fn frozen_witness(
    moved: &AbstractSeed,
    dst: &AbstractSeed,
    flippable: &[usize],
) -> Option<FrozenWitness> {
    let cols = moved.mutable_labels();
    let row =
        |s: &AbstractSeed, r: usize| -> Vec<i64> { cols.iter().map(|&c| s.b(r, c)).collect() };
    let principal: Vec<Vec<i64>> = cols.iter().map(|&r| row(moved, r)).collect();
    let flippable: Vec<usize> = flippable
        .iter()
        .copied()
        .filter(|&f| moved.is_frozen(f))
        .collect();
    'subsets: for mask in 0u32..(1 << flippable.len()) {
        let inverted: Vec<usize> = flippable
            .iter()
            .enumerate()
            .filter(|(x, _)| mask >> x & 1 == 1)
            .map(|(_, &f)| f)
            .collect();
        let mut gens = principal.clone();
        gens.extend(inverted.iter().map(|&f| row(moved, f)));
        let h = intlat::hermite(&gens, cols.len());
        let mut shifts = BTreeMap::new();
        for f in moved.frozen_labels() {
            let sign = if inverted.contains(&f) { -1 } else { 1 };
            let diff: Vec<i64> = row(dst, f)
                .iter()
                .zip(row(moved, f))
                .map(|(a, b)| a - sign * b)
                .collect();
            match h.solve(&diff) {
                Some(r) => {
                    shifts.insert(f, r);
                }
                None => continue 'subsets,
            }
        }
        return Some(FrozenWitness { inverted, shifts });
    }
    None
}
