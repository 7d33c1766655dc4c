mod common;

use braidseed::braidword::complete_to_longest;
use braidseed::{demazure_pi, Crossings, DoubleWord, DynkinData, Error};
use proptest::prelude::*;

fn word(s: &str) -> DoubleWord {
    s.parse().unwrap()
}

#[test]
fn parse_and_display() {
    assert_eq!(word(" 1, -2  3 ").letters(), &[1, -2, 3]);
    assert_eq!(word("1 \u{2212}2").letters(), &[1, -2]);
    assert_eq!(word("1 -2 3").to_string(), "1 -2 3");
    assert!(matches!("1 0".parse::<DoubleWord>(), Err(Error::Parse(_))));
    assert!(matches!("1 x".parse::<DoubleWord>(), Err(Error::Parse(_))));
}

#[test]
fn letter_range_and_demazure_errors() {
    let dy = DynkinData::from_name("A2").unwrap();
    assert!(matches!(
        Crossings::compute(&dy, &word("1 3")),
        Err(Error::BadLetter { letter: 3, rank: 2 })
    ));
    assert_eq!(
        Crossings::compute(&dy, &word("1 2")).unwrap_err(),
        Error::BadDemazure
    );
    assert_eq!(
        Crossings::compute(&dy, &word("1 1 2 2")).unwrap_err(),
        Error::BadDemazure
    );
}

#[test]
fn a1_mixed_signs_reach_w0() {
    let dy = DynkinData::from_name("A1").unwrap();
    assert_eq!(demazure_pi(&dy, &word("1 -1")), *dy.w0());
    let cr = Crossings::compute(&dy, &word("1 -1")).unwrap();
    assert_eq!(cr.solid(), &[1]);
}

#[test]
fn a1_triple() {
    let dy = DynkinData::from_name("A1").unwrap();
    let w = word("1 1 1");
    let cr = Crossings::compute(&dy, &w).unwrap();
    let id = dy.identity();
    let s = dy.simple(1);
    assert_eq!(
        (0..=3).map(|c| cr.u(c).clone()).collect::<Vec<_>>(),
        [id.clone(), id.clone(), id.clone(), s.clone()]
    );
    assert_eq!(cr.solid(), &[1, 2]);
    assert!(cr.is_frozen(1));
    assert!(!cr.is_frozen(2));
    assert_eq!(cr.aps(&dy, &w, 2), [id.clone(), s.clone(), id, s.clone()]);
    assert_eq!(cr.aps(&dy, &w, 1)[0], s);
}

#[test]
fn a2_one_two_one_two() {
    let dy = DynkinData::from_name("A2").unwrap();
    let w = word("1 2 1 2");
    let cr = Crossings::compute(&dy, &w).unwrap();
    assert_eq!(cr.solid(), &[1]);
    let expect = [
        dy.identity(),
        dy.identity(),
        dy.simple(2),
        dy.from_word(&[2, 1]),
        dy.w0().clone(),
    ];
    assert_eq!((0..=4).map(|c| cr.u(c).clone()).collect::<Vec<_>>(), expect);
    assert!(cr.is_frozen(1));
}

#[test]
fn hollow_crossings_spell_w0() {
    let dy = DynkinData::from_name("B3").unwrap();
    let mut rng = common::rng(7);
    for _ in 0..200 {
        let w = common::sample(&dy, 14, &mut rng);
        let cr = Crossings::compute(&dy, &w).unwrap();
        for c in 1..=w.len() {
            let (lo, hi) = (dy.length(cr.u(c - 1)), dy.length(cr.u(c)));
            if cr.is_solid(c) {
                assert_eq!(lo, hi);
            } else {
                assert_eq!(lo + 1, hi);
            }
        }
        assert!(
            !cr.is_solid(w.len()) || w.is_empty(),
            "the last crossing is hollow"
        );
    }
}

#[test]
fn completion_is_valid() {
    for name in ["A3", "B2", "C3", "D4", "G2", "F4"] {
        let dy = DynkinData::from_name(name).unwrap();
        for s in ["", "1", "-1 -2", "2 2 -1"] {
            let w = complete_to_longest(&dy, &word(if s.is_empty() { "1" } else { s }));
            assert_eq!(demazure_pi(&dy, &w), *dy.w0(), "{name} {w}");
        }
    }
}

fn types() -> impl Strategy<Value = &'static str> {
    prop::sample::select(vec!["A1", "A2", "A3", "B2", "C2", "G2", "B3", "C3", "D4"])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn solid_count_and_chain(name in types(), extra in 0usize..6, seed in any::<u64>()) {
        let dy = DynkinData::from_name(name).unwrap();
        let top = dy.length(dy.w0());
        let w = common::valid_word(&dy, top + extra, &mut common::rng(seed));
        let cr = Crossings::compute(&dy, &w).unwrap();
        prop_assert_eq!(cr.solid().len(), w.len() - top);
        prop_assert!(cr.u(0).is_identity());
        prop_assert_eq!(cr.u(w.len()), dy.w0());
        for &e in cr.solid() {
            let aps = cr.aps(&dy, &w, e);
            prop_assert_eq!(&aps[w.len()], dy.w0());
            prop_assert_eq!(cr.is_frozen(e), !aps[0].is_identity());
            for c in e..=w.len() {
                prop_assert_eq!(&aps[c], cr.u(c));
            }
        }
    }

    #[test]
    fn prefix_completion(name in types(), letters in prop::collection::vec((1i32..=3, any::<bool>()), 0..8)) {
        let dy = DynkinData::from_name(name).unwrap();
        let r = dy.rank() as i32;
        let w = DoubleWord::new(letters.iter().map(|&(i, s)| { let i = (i - 1) % r + 1; if s { i } else { -i } }).collect());
        let full = complete_to_longest(&dy, &w);
        prop_assert_eq!(&full.letters()[..w.len()], w.letters());
        prop_assert!(Crossings::compute(&dy, &full).is_ok());
    }
}
