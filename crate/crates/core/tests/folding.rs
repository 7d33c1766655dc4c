mod common;

use std::collections::BTreeMap;

use braidseed::braidword::{complete_to_longest, node};
use braidseed::clusterops::Q;
use braidseed::folding::*;
use braidseed::moves::*;
use braidseed::rootsys::Family;
use braidseed::{
    AbstractSeed, CartanType, Crossings, DoubleWord, DynkinData, Error, GammaEngine, MutationSeq,
    Seed,
};
use rand::Rng;

fn folding(name: &str) -> (FoldingData, DynkinData, DynkinData) {
    let ty: CartanType = name.parse().unwrap();
    let f = FoldingData::standard(ty).unwrap();
    let (dy, dt) = (DynkinData::new(f.folded), DynkinData::new(f.unfolded));
    (f, dy, dt)
}

fn check_word(
    f: &FoldingData,
    direct: &mut GammaEngine<'_>,
    lifted: &mut GammaEngine<'_>,
    w: &DoubleWord,
) {
    let s = Seed::build(direct, w).unwrap();
    let lift = lift_word(f, w);
    let t = Seed::build(lifted, &lift.word).unwrap();
    let rep = cross_check_seeds(f, &s, &lift, &t).unwrap();
    assert!(
        rep.passed(),
        "{} {w}: solid {} ord {:?} seed {}",
        f.folded,
        rep.solid_ok,
        &rep.ord_mismatches[..rep.ord_mismatches.len().min(4)],
        rep.seed_ok
    );
}

#[test]
fn sampled_words_fold_to_their_direct_seed() {
    let mut total = 0;
    for (n, name) in ["C2", "B2", "B3", "G2"].into_iter().enumerate() {
        let (f, dy, dt) = folding(name);
        let (mut ed, mut et) = (GammaEngine::new(&dy), GammaEngine::new(&dt));
        let mut rng = common::rng(300 + n as u64);
        for _ in 0..250 {
            let w = common::sample(&dy, 10, &mut rng);
            check_word(&f, &mut ed, &mut et, &w);
            total += 1;
        }
    }
    assert_eq!(total, 1000);
}

#[test]
fn short_rank_two_words_fold_exhaustively() {
    for name in ["C2", "B2", "G2"] {
        let (f, dy, dt) = folding(name);
        let (mut ed, mut et) = (GammaEngine::new(&dy), GammaEngine::new(&dt));
        for len in 1..=6 {
            for w in common::all_words(&dy, len) {
                if Crossings::compute(&dy, &w).is_ok() {
                    check_word(&f, &mut ed, &mut et, &w);
                }
            }
        }
    }
}

#[test]
fn higher_rank_foldings_on_a_few_words() {
    for (n, (name, count, max_len)) in [("C3", 20, 12), ("B4", 6, 18), ("F4", 3, 26)]
        .into_iter()
        .enumerate()
    {
        let (f, dy, dt) = folding(name);
        let (mut ed, mut et) = (GammaEngine::new(&dy), GammaEngine::new(&dt));
        let mut rng = common::rng(310 + n as u64);
        for _ in 0..count {
            let w = common::sample(&dy, max_len, &mut rng);
            check_word(&f, &mut ed, &mut et, &w);
        }
    }
}

#[test]
fn standard_foldings() {
    let (f, _, _) = folding("C2");
    assert_eq!(f.unfolded.to_string(), "A3");
    assert_eq!(f.orbits(), [vec![1, 3], vec![2]]);
    assert_eq!(f.sigma(1), 3);
    assert_eq!(f.sigma(3), 1);
    let (f, _, _) = folding("G2");
    assert_eq!(f.orbits(), [vec![1, 3, 4], vec![2]]);
    assert_eq!((f.sigma(1), f.sigma(3), f.sigma(4)), (3, 4, 1));
    let (f, _, _) = folding("B3");
    assert_eq!(f.unfolded.to_string(), "D4");
    assert_eq!(f.orbit(3), [3, 4]);
    assert_eq!(builtin_foldings().len(), 7);
    assert!(matches!(
        FoldingData::standard("A3".parse().unwrap()),
        Err(Error::NotApplicable(_))
    ));
    // orbit sizes must match the symmetrizer
    let bad = FoldingData::new(
        CartanType::new(Family::C, 2).unwrap(),
        "A3".parse().unwrap(),
        vec![vec![2], vec![1, 3]],
    );
    assert!(matches!(bad, Err(Error::InternalInconsistency(_))));
}

#[test]
fn lifting_replaces_letters_by_orbits() {
    let (f, _, _) = folding("C2");
    let lift = lift_word(&f, &"1 2 -1".parse().unwrap());
    assert_eq!(lift.word.to_string(), "1 3 2 -1 -3");
    assert_eq!(lift.position, [1, 1, 2, 3, 3]);
    assert_eq!(lift.fiber(3), [4, 5]);
    assert_eq!(
        (lift.chamber(0), lift.chamber(1), lift.chamber(2)),
        (0, 2, 3)
    );
    let (f, _, _) = folding("G2");
    assert_eq!(
        lift_word(&f, &"1 2".parse().unwrap()).word.to_string(),
        "1 3 4 2"
    );
    let (f, _, _) = folding("B2");
    assert_eq!(
        lift_word(&f, &"1 -2".parse().unwrap()).word.to_string(),
        "2 -1 -3"
    );
}

#[test]
fn order_inside_an_orbit_does_not_matter() {
    let reversed = |o: &[usize]| o.iter().rev().copied().collect::<Vec<_>>();
    for (n, name) in ["C2", "G2", "B3"].into_iter().enumerate() {
        let (f, dy, dt) = folding(name);
        let (mut ed, mut et) = (GammaEngine::new(&dy), GammaEngine::new(&dt));
        let mut rng = common::rng(320 + n as u64);
        for _ in 0..40 {
            let w = common::sample(&dy, 10, &mut rng);
            let s = Seed::build(&mut ed, &w).unwrap();
            let lift = lift_word_ordered(&f, &w, Some(&reversed));
            let t = Seed::build(&mut et, &lift.word).unwrap();
            assert!(
                cross_check_seeds(&f, &s, &lift, &t).unwrap().passed(),
                "{name} {w}"
            );
        }
    }
}

#[test]
fn trivial_orbits_fold_to_the_same_seed() {
    let dy = DynkinData::from_name("A3").unwrap();
    let mut engine = GammaEngine::new(&dy);
    let mut rng = common::rng(330);
    for _ in 0..30 {
        let w = common::sample(&dy, 11, &mut rng);
        let s = Seed::build(&mut engine, &w).unwrap();
        let orbits = LabelOrbits {
            orbits: s.solid().iter().map(|&e| (e, vec![e])).collect(),
            sigma: s.solid().iter().map(|&e| (e, e)).collect(),
        };
        assert_eq!(fold_seed(&s.seed, &orbits).unwrap(), s.seed);
    }
}

fn two_mutables_joined() -> AbstractSeed {
    let one = Q::from(1);
    AbstractSeed::from_omega(
        vec![1, 2],
        vec![false, false],
        vec![1, 1],
        &[Q::from(0), one, -one, Q::from(0)],
    )
    .unwrap()
}

#[test]
fn admissibility_violations_are_named() {
    let seed = two_mutables_joined();
    let swap: BTreeMap<usize, usize> = [(1, 2), (2, 1)].into_iter().collect();
    let joined = LabelOrbits {
        orbits: vec![(1, vec![1, 2])],
        sigma: swap.clone(),
    };
    match check_admissible(&seed, &joined) {
        Err(Error::NotAdmissible(why)) => assert!(why.starts_with("(3)"), "{why}"),
        other => panic!("{other:?}"),
    }
    let singles = LabelOrbits {
        orbits: vec![(1, vec![1]), (2, vec![2])],
        sigma: swap,
    };
    match check_admissible(&seed, &singles) {
        Err(Error::NotAdmissible(why)) => assert!(why.starts_with("(2)"), "{why}"),
        other => panic!("{other:?}"),
    }
    let a1 = Seed::from_name(&DynkinData::from_name("A1").unwrap(), "1 1 1").unwrap();
    let mixed = LabelOrbits {
        orbits: vec![(1, vec![1, 2])],
        sigma: [(1, 2), (2, 1)].into_iter().collect(),
    };
    match check_admissible(&a1.seed, &mixed) {
        Err(Error::NotAdmissible(why)) => assert!(why.starts_with("(1)"), "{why}"),
        other => panic!("{other:?}"),
    }
    assert!(matches!(
        fold_seed(&seed, &joined),
        Err(Error::NotAdmissible(_))
    ));
}

#[test]
fn orbit_mutation_commutes_with_folding() {
    let mut checked = 0;
    for (n, name) in ["C2", "B2", "G2", "B3"].into_iter().enumerate() {
        let (f, dy, dt) = folding(name);
        let (mut ed, mut et) = (GammaEngine::new(&dy), GammaEngine::new(&dt));
        let mut rng = common::rng(340 + n as u64);
        for _ in 0..40 {
            let w = common::sample(&dy, 11, &mut rng);
            let s = Seed::build(&mut ed, &w).unwrap();
            let lift = lift_word(&f, &w);
            let t = Seed::build(&mut et, &lift.word).unwrap();
            let orbits = LabelOrbits::of_lift(&f, &lift, s.solid());
            for (e, members) in &orbits.orbits {
                if s.seed.is_frozen(*e) {
                    assert!(matches!(
                        orbit_mutate(&t.seed, members),
                        Err(Error::NotMutable(_))
                    ));
                    continue;
                }
                let mutated = orbit_mutate(&t.seed, members).unwrap();
                assert_eq!(
                    fold_seed(&mutated, &orbits).unwrap(),
                    s.seed.mutate(*e).unwrap(),
                    "{name} {w} at {e}"
                );
                checked += 1;
            }
        }
    }
    assert!(checked > 100);
}

#[test]
fn conflicting_orbit_mutation_is_refused() {
    // 1 -> 3 <- 2 is fine for the orbit {1, 2}; 1 -> 3 -> 2 is not
    let z = Q::from(0);
    let one = Q::from(1);
    let omega = [z, z, one, z, z, -one, -one, one, z];
    let seed = AbstractSeed::from_omega(vec![1, 2, 3], vec![false; 3], vec![1; 3], &omega).unwrap();
    assert!(matches!(
        orbit_mutate(&seed, &[1, 2]),
        Err(Error::NotQuasiAdmissible(1))
    ));
    let omega = [z, z, one, z, z, one, -one, -one, z];
    let seed = AbstractSeed::from_omega(vec![1, 2, 3], vec![false; 3], vec![1; 3], &omega).unwrap();
    assert!(orbit_mutate(&seed, &[1, 2]).is_ok());
}

/// A word with a planted long braid window `i j i j ..` (i the node with
/// the larger symmetrizer), sometimes followed by a copy of `w0`.
fn planted(dy: &DynkinData, max_len: usize, rng: &mut impl Rng) -> DoubleWord {
    let letters: Vec<i32> = vec![1, 2, -1, -2];
    loop {
        let pre = rng.random_range(0..max_len);
        let mut ls: Vec<i32> = (0..pre).map(|_| letters[rng.random_range(0..4)]).collect();
        let m = dy.coxeter_m(1, 2) as usize;
        let at = rng.random_range(0..=ls.len());
        let (i, j) = if dy.d(1) > dy.d(2) { (1, 2) } else { (2, 1) };
        let s = if rng.random_bool(0.5) { 1 } else { -1 };
        for x in 0..m {
            ls.insert(at + x, s * if x % 2 == 0 { i } else { j });
        }
        if rng.random_bool(0.5) {
            for (y, l) in dy.reduced_word(dy.w0()).into_iter().enumerate() {
                ls.insert(at + m + y, s * l as i32);
            }
        }
        let w = complete_to_longest(dy, &DoubleWord::new(ls));
        if w.len() <= max_len {
            return w;
        }
    }
}

/// Long moves of the folded word, lifted: the lift-table row for the
/// lifted hollow pattern carries the lifted seed to the lifted target's.
fn lift_tables_hold(
    name: &str,
    table: &[TableRow],
    alt: &[TableRow],
    samples: usize,
    max_len: usize,
    seed: u64,
) {
    let (f, dy, dt) = folding(name);
    let mut et = GammaEngine::new(&dt);
    let mut rng = common::rng(seed);
    let mut seen: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for _ in 0..samples {
        let w = planted(&dy, max_len, &mut rng);
        let cr = Crossings::compute(&dy, &w).unwrap();
        for mv in enumerate_moves(&dy, &w, &cr) {
            if mv.kind != MoveKind::B3
                || !mv.long
                || dy.d(node(w.at(mv.left))) < dy.d(node(w.at(mv.left + 1)))
            {
                continue;
            }
            let lift = lift_word(&f, &w);
            let target = lift_word(&f, &rewrite(&dy, &w, MoveKind::B3, mv.left).unwrap());
            let src = Seed::build(&mut et, &lift.word).unwrap();
            let dst = Seed::build(&mut et, &target.word).unwrap();
            let start = lift.fiber(mv.left)[0];
            let width = lift.chamber(mv.right()) - start + 1;
            let at = |x: usize| start + x - 1;
            let hollow: Vec<usize> = (1..=width)
                .filter(|&x| !src.crossings.is_solid(at(x)))
                .collect();
            let rows: Vec<&TableRow> = table
                .iter()
                .chain(alt)
                .filter(|r| r.hollow == hollow.as_slice())
                .collect();
            assert!(
                !rows.is_empty() || hollow.len() == width,
                "{name} {w}: hollow {hollow:?} not in the table"
            );
            for row in rows {
                let mut relabel: BTreeMap<usize, usize> =
                    src.solid().iter().map(|&c| (c, c)).collect();
                for &(a, b) in row.pi {
                    relabel.insert(at(a), at(b));
                }
                let plan = MovePlan {
                    source: lift.word.clone(),
                    target: target.word.clone(),
                    mutations: MutationSeq(row.mu.iter().map(|&x| at(x)).collect()),
                    relabel,
                };
                let spec = MoveSpec {
                    kind: MoveKind::B3,
                    left: start,
                    len: width,
                    solid: false,
                    special: false,
                    mutation: true,
                    long: true,
                };
                let rep = compare_through_plan(&plan, &spec, &src.seed, &dst.seed);
                assert!(
                    rep.passed() && rep.quasi.is_some(),
                    "{name} {w} row {hollow:?}: {:?}",
                    rep.note
                );
            }
            *seen.entry(hollow).or_default() += 1;
        }
    }
    assert!(
        seen.len() >= table.len() / 2,
        "{name}: only {} patterns met",
        seen.len()
    );
}

#[test]
fn b2_lift_table() {
    lift_tables_hold("B2", TABLE_B2_LIFT, TABLE_B2_LIFT_ALT, 300, 10, 350);
}

#[test]
fn g2_lift_table() {
    lift_tables_hold("G2", TABLE_G2_LIFT, TABLE_G2_LIFT_ALT, 150, 14, 351);
}
