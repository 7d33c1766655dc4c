//! Folding: multiply-laced words lifted to simply-laced ones, seeds folded
//! along diagram automorphisms, and the cross-check between the two routes.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::braidword::{node, DoubleWord};
use crate::clusterops::{AbstractSeed, Q};
use crate::error::{Error, Result};
use crate::gamma::GammaEngine;
use crate::rootsys::{CartanType, DynkinData, Family};
use crate::seedbuild::Seed;

/// A folding of a simply-laced type onto a multiply-laced one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoldingData {
    pub folded: CartanType,
    pub unfolded: CartanType,
    /// `orbits[i - 1]`: the unfolded nodes over node `i`, ascending.
    orbits: Vec<Vec<usize>>,
    /// The automorphism, `sigma[i' - 1]`; cycles each orbit in ascending order.
    sigma: Vec<usize>,
}

impl FoldingData {
    /// Checks the orbit sizes against the symmetrizer, the sum rule for the
    /// Cartan entries and that each orbit is a union of commuting nodes
    /// permuted by a diagram automorphism.
    pub fn new(folded: CartanType, unfolded: CartanType, orbits: Vec<Vec<usize>>) -> Result<Self> {
        let bad = |why: String| {
            Error::InternalInconsistency(format!("folding {unfolded} -> {folded}: {why}"))
        };
        if !unfolded.is_simply_laced() || orbits.len() != folded.rank {
            return Err(bad(String::from("shape")));
        }
        let dy = DynkinData::new(folded);
        let dt = DynkinData::new(unfolded);
        let mut seen = vec![false; unfolded.rank];
        for orb in &orbits {
            for &x in orb {
                if x == 0 || x > unfolded.rank || core::mem::replace(&mut seen[x - 1], true) {
                    return Err(bad(format!("node {x} misplaced")));
                }
            }
        }
        if seen.contains(&false) {
            return Err(bad(String::from("orbits do not cover the nodes")));
        }
        let mut sigma = vec![0; unfolded.rank];
        for orb in &orbits {
            for (n, &x) in orb.iter().enumerate() {
                sigma[x - 1] = orb[(n + 1) % orb.len()];
            }
        }
        for i in 1..=unfolded.rank {
            for j in 1..=unfolded.rank {
                if dt.a(sigma[i - 1], sigma[j - 1]) != dt.a(i, j) {
                    return Err(bad(String::from("not a diagram automorphism")));
                }
            }
        }
        for (i, orb) in orbits.iter().enumerate() {
            let i = i + 1;
            if dy.d(i) != orb.len() as i64 {
                return Err(bad(format!("d_{i} differs from the orbit size")));
            }
            if orb
                .iter()
                .any(|&x| orb.iter().any(|&y| x != y && dt.a(x, y) != 0))
            {
                return Err(bad(format!("orbit of {i} does not commute")));
            }
            for (j, orb_j) in orbits.iter().enumerate() {
                let j = j + 1;
                for &x in orb {
                    let s: i32 = orb_j.iter().map(|&y| dt.a(x, y)).sum();
                    if s != dy.a(i, j) {
                        return Err(bad(format!("a_{i}{j} is not the orbit sum")));
                    }
                }
            }
            let starred = &orbits[dy.star(i) - 1];
            let mut image: Vec<usize> = orb.iter().map(|&x| dt.star(x)).collect();
            image.sort();
            if &image != starred {
                return Err(bad(format!("star does not respect the orbit of {i}")));
            }
        }
        Ok(FoldingData {
            folded,
            unfolded,
            orbits,
            sigma,
        })
    }

    pub fn orbit(&self, i: usize) -> &[usize] {
        &self.orbits[i - 1]
    }

    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    pub fn sigma(&self, x: usize) -> usize {
        self.sigma[x - 1]
    }

    /// The standard folding onto `folded`, if it is multiply laced.
    pub fn standard(folded: CartanType) -> Result<Self> {
        let n = folded.rank;
        let ty = |family, rank| CartanType::new(family, rank);
        let (unfolded, orbits) = match folded.family {
            Family::C => (
                ty(Family::A, 2 * n - 1)?,
                (1..=n).map(|i| orbit_pair(i, 2 * n - i)).collect(),
            ),
            Family::B if n == 2 => (ty(Family::A, 3)?, vec![vec![2], vec![1, 3]]),
            Family::B => (
                ty(Family::D, n + 1)?,
                (1..n).map(|i| vec![i]).chain([vec![n, n + 1]]).collect(),
            ),
            Family::F => (
                ty(Family::E, 6)?,
                vec![vec![2], vec![4], vec![3, 5], vec![1, 6]],
            ),
            Family::G => (ty(Family::D, 4)?, vec![vec![1, 3, 4], vec![2]]),
            _ => return Err(Error::NotApplicable(format!("{folded} is simply laced"))),
        };
        FoldingData::new(folded, unfolded, orbits)
    }
}

fn orbit_pair(a: usize, b: usize) -> Vec<usize> {
    if a == b {
        vec![a]
    } else {
        vec![a.min(b), a.max(b)]
    }
}

/// Foldings used throughout the tests: C2, C3, B2, B3, B4, F4, G2.
pub fn builtin_foldings() -> Vec<FoldingData> {
    [
        (Family::C, 2),
        (Family::C, 3),
        (Family::B, 2),
        (Family::B, 3),
        (Family::B, 4),
        (Family::F, 4),
        (Family::G, 2),
    ]
    .into_iter()
    .map(|(f, r)| {
        FoldingData::standard(CartanType::new(f, r).expect("valid type")).expect("standard folding")
    })
    .collect()
}

/// A lifted word with its position map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftMap {
    pub word: DoubleWord,
    /// `position[c' - 1]` is the position of the folded letter above `c'`.
    pub position: Vec<usize>,
}

impl LiftMap {
    /// Lifted positions over the folded position `c`.
    pub fn fiber(&self, c: usize) -> Vec<usize> {
        (1..=self.position.len())
            .filter(|&x| self.position[x - 1] == c)
            .collect()
    }

    /// Lifted chamber index after the block of `c` (so `0` stays `0`).
    pub fn chamber(&self, c: usize) -> usize {
        self.position.iter().take_while(|&&p| p <= c).count()
    }
}

/// Replace each letter by the letters of its orbit, in `order` within orbits
/// (ascending when `order` is `None`).
pub fn lift_word_ordered(
    f: &FoldingData,
    word: &DoubleWord,
    order: Option<&dyn Fn(&[usize]) -> Vec<usize>>,
) -> LiftMap {
    let mut letters = Vec::new();
    let mut position = Vec::new();
    for (c, &l) in word.letters().iter().enumerate() {
        let orb = f.orbit(node(l));
        let orb = order.map_or_else(|| orb.to_vec(), |g| g(orb));
        for x in orb {
            letters.push(x as i32 * l.signum());
            position.push(c + 1);
        }
    }
    LiftMap {
        word: DoubleWord::new(letters),
        position,
    }
}

pub fn lift_word(f: &FoldingData, word: &DoubleWord) -> LiftMap {
    lift_word_ordered(f, word, None)
}

/// Labels grouped into orbits, with the automorphism acting on labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelOrbits {
    /// `(folded label, members)`.
    pub orbits: Vec<(usize, Vec<usize>)>,
    pub sigma: BTreeMap<usize, usize>,
}

impl LabelOrbits {
    /// Orbits of the lifted seed: `fiber(e)` over each solid `e`.
    pub fn of_lift(f: &FoldingData, lift: &LiftMap, solid: &[usize]) -> LabelOrbits {
        let mut sigma = BTreeMap::new();
        let mut orbits = Vec::new();
        for &e in solid {
            let fiber = lift.fiber(e);
            for &x in &fiber {
                let target = f.sigma(node(lift.word.at(x)));
                let y = *fiber
                    .iter()
                    .find(|&&y| node(lift.word.at(y)) == target)
                    .expect("orbit in fiber");
                sigma.insert(x, y);
            }
            orbits.push((e, fiber));
        }
        LabelOrbits { orbits, sigma }
    }
}

/// Weak admissibility: orbits are wholly mutable or wholly frozen, the form
/// is invariant, and no two members of one orbit are joined.
pub fn check_admissible(seed: &AbstractSeed, orbits: &LabelOrbits) -> Result<()> {
    let n = seed.dimension();
    let omega = seed.omega();
    let at =
        |a: usize, b: usize| omega[seed.pos(a).expect("label") * n + seed.pos(b).expect("label")];
    for (e, members) in &orbits.orbits {
        let frozen = seed.is_frozen(members[0]);
        if members.iter().any(|&x| seed.is_frozen(x) != frozen) {
            return Err(Error::NotAdmissible(format!(
                "(1) orbit {e} mixes mutable and frozen"
            )));
        }
        for &x in members {
            for &y in members {
                if x != y && !at(x, y).is_zero() {
                    return Err(Error::NotAdmissible(format!(
                        "(3) {x} and {y} in orbit {e} are joined"
                    )));
                }
            }
        }
    }
    for &a in seed.labels() {
        for &b in seed.labels() {
            let (sa, sb) = (
                orbits.sigma.get(&a).unwrap_or(&a),
                orbits.sigma.get(&b).unwrap_or(&b),
            );
            if at(*sa, *sb) != at(a, b) {
                return Err(Error::NotAdmissible(format!(
                    "(2) the form is not invariant at ({a},{b})"
                )));
            }
        }
    }
    Ok(())
}

/// Fold a weakly admissible seed: one label per orbit, `d` multiplied by
/// the orbit size, form pulled back along the identification of variables.
pub fn fold_seed(seed: &AbstractSeed, orbits: &LabelOrbits) -> Result<AbstractSeed> {
    check_admissible(seed, orbits)?;
    let n = seed.dimension();
    let k = orbits.orbits.len();
    let omega = seed.omega();
    let mut folded = vec![Q::zero(); k * k];
    for (a, (_, ma)) in orbits.orbits.iter().enumerate() {
        for (b, (_, mb)) in orbits.orbits.iter().enumerate() {
            for &x in ma {
                for &y in mb {
                    folded[a * k + b] +=
                        omega[seed.pos(x).expect("label") * n + seed.pos(y).expect("label")];
                }
            }
        }
    }
    let labels = orbits.orbits.iter().map(|(e, _)| *e).collect();
    let frozen = orbits
        .orbits
        .iter()
        .map(|(_, m)| seed.is_frozen(m[0]))
        .collect();
    let d = orbits
        .orbits
        .iter()
        .map(|(_, m)| seed.d_of(m[0]) * m.len() as i64)
        .collect();
    let out = AbstractSeed::from_omega(labels, frozen, d, &folded)?;
    // same matrix by the column-sum rule
    for (la, ma) in &orbits.orbits {
        for (lb, mb) in orbits.orbits.iter().filter(|(lb, _)| out.is_mutable(*lb)) {
            let sum: i64 = ma.iter().map(|&x| seed.b(x, mb[0])).sum();
            if out.b(*la, *lb) != sum {
                return Err(Error::InternalInconsistency(format!(
                    "folded entry ({la},{lb}) breaks the sum rule"
                )));
            }
        }
    }
    Ok(out)
}

/// Mutate once at every member of `members`; the order must not matter.
pub fn orbit_mutate(seed: &AbstractSeed, members: &[usize]) -> Result<AbstractSeed> {
    for &j in members {
        if !seed.is_mutable(j) {
            return Err(Error::NotMutable(j));
        }
    }
    for &k in seed.labels() {
        for &x in members {
            for &y in members {
                if seed.b(k, x) * seed.b(k, y) < 0 {
                    return Err(Error::NotQuasiAdmissible(members[0]));
                }
            }
        }
    }
    let forward = seed.mutate_seq(members)?;
    let rev: Vec<usize> = members.iter().rev().copied().collect();
    if seed.mutate_seq(&rev)? != forward {
        return Err(Error::InternalInconsistency(String::from(
            "orbit mutation depends on the order",
        )));
    }
    Ok(forward)
}

/// Outcome of comparing a word's seed with the fold of its lift.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheckReport {
    pub word: DoubleWord,
    pub lift: LiftMap,
    /// Solid crossings of the lift are exactly the fibers of solid crossings.
    pub solid_ok: bool,
    /// `(c, k, e)` where the orders of vanishing disagree.
    pub ord_mismatches: Vec<(usize, i32, usize)>,
    /// The direct seed equals the folded one (matrix, frozen set and `d`).
    pub seed_ok: bool,
}

impl CrossCheckReport {
    pub fn passed(&self) -> bool {
        self.solid_ok && self.ord_mismatches.is_empty() && self.seed_ok
    }
}

/// Build the seed of `word` directly and through its lift, and compare.
/// A lifted seed that is not weakly admissible is an error.
pub fn cross_check(f: &FoldingData, word: &DoubleWord) -> Result<CrossCheckReport> {
    let dy = DynkinData::new(f.folded);
    let dt = DynkinData::new(f.unfolded);
    let direct = Seed::build(&mut GammaEngine::new(&dy), word)?;
    let lift = lift_word(f, word);
    let lifted = Seed::build(&mut GammaEngine::new(&dt), &lift.word)?;
    cross_check_seeds(f, &direct, &lift, &lifted)
}

/// The comparison of [`cross_check`] on prebuilt seeds.
pub fn cross_check_seeds(
    f: &FoldingData,
    direct: &Seed,
    lift: &LiftMap,
    lifted: &Seed,
) -> Result<CrossCheckReport> {
    let word = &direct.word;
    let mut expected: Vec<usize> = direct.solid().iter().flat_map(|&e| lift.fiber(e)).collect();
    expected.sort();
    let solid_ok = expected == lifted.solid();
    let mut ord_mismatches = Vec::new();
    if solid_ok {
        let rank = f.folded.rank as i32;
        for c in 0..=word.len() {
            let ct = lift.chamber(c);
            for k in (1..=rank).chain((1..=rank).map(|k| -k)) {
                for &e in direct.solid() {
                    let v = direct.ord.ord(c, k, e);
                    let bad = f.orbit(node(k)).iter().any(|&k2| {
                        let k2 = k2 as i32 * k.signum();
                        lift.fiber(e)
                            .into_iter()
                            .map(|e2| lifted.ord.ord(ct, k2, e2))
                            .sum::<i64>()
                            != v
                    });
                    if bad {
                        ord_mismatches.push((c, k, e));
                    }
                }
            }
        }
    }
    let seed_ok = solid_ok && {
        let orbits = LabelOrbits::of_lift(f, lift, direct.solid());
        fold_seed(&lifted.seed, &orbits)? == direct.seed
    };
    Ok(CrossCheckReport {
        word: word.clone(),
        lift: lift.clone(),
        solid_ok,
        ord_mismatches,
        seed_ok,
    })
}
