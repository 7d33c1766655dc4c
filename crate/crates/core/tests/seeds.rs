mod common;

use braidseed::oracle::{Poly, TypeAOracle};
use braidseed::{Crossings, DynkinData, GammaEngine, Seed};

#[test]
fn a1_normative_seed() {
    let dy = DynkinData::from_name("A1").unwrap();
    let s = Seed::from_name(&dy, "1 1 1").unwrap();
    assert_eq!(s.solid(), &[1, 2]);
    assert_eq!(s.seed.frozen_labels(), [1]);
    assert_eq!(s.seed.mutable_labels(), [2]);
    assert_eq!(s.seed.b(1, 2), 1);
    assert_eq!(s.seed.b(2, 2), 0);

    let o = TypeAOracle::new(&dy).unwrap();
    let t = o.ord_table(&s.word, &s.crossings).unwrap();
    let (x1, x2) = (&t.vars[&1], &t.vars[&2]);
    assert_eq!(x1.to_string(), "t1t2 - 1");
    assert_eq!(x2.to_string(), "t2");
    // x2 x2' = x1 + 1 with a regular x2'
    let (pos, neg) = s.seed.exchange_terms(2);
    assert_eq!((pos, neg), (vec![(1, 1)], vec![]));
    let x2_new = (x1 + &Poly::one()).div_exact(x2).expect("regular exchange");
    assert_eq!(x2_new.to_string(), "t1");
}

#[test]
fn sampled_seeds_are_integral_symmetrizable_and_full_rank() {
    let plan: &[(&str, usize, usize)] = &[
        ("A1", 100, 10),
        ("A2", 150, 11),
        ("A3", 150, 12),
        ("A4", 80, 15),
        ("B2", 120, 10),
        ("C2", 100, 10),
        ("G2", 100, 12),
        ("B3", 60, 14),
        ("C3", 50, 14),
        ("D4", 50, 16),
        ("F4", 15, 28),
        ("E6", 15, 40),
        ("D5", 10, 24),
    ];
    let mut total = 0;
    for (t, &(name, count, max_len)) in plan.iter().enumerate() {
        let dy = DynkinData::from_name(name).unwrap();
        let mut engine = GammaEngine::new(&dy);
        let mut rng = common::rng(200 + t as u64);
        for _ in 0..count {
            let w = common::sample(&dy, max_len, &mut rng);
            let s = Seed::build(&mut engine, &w).unwrap();
            s.seed.check_integral().unwrap();
            assert!(s.seed.is_skew_symmetrizable(), "{name} {w}");
            for (x, &e) in s.solid().iter().enumerate() {
                assert_eq!(s.seed.d()[x], dy.d(braidseed::braidword::node(w.at(e))));
            }
            assert!(s.really_full_rank(), "{name} {w}");
            total += 1;
        }
    }
    assert!(total >= 1000);
}

/// For `i i b'` with both leading crossings solid: `x_1` is frozen, joined
/// to `x_2` only, with the sign of the repeated letter.
#[test]
fn leading_repeat_structure() {
    let mut found = 0;
    for (t, name) in ["A2", "A3", "B2", "C2", "G2", "B3"].iter().enumerate() {
        let dy = DynkinData::from_name(name).unwrap();
        let mut engine = GammaEngine::new(&dy);
        let mut rng = common::rng(300 + t as u64);
        let mut tries = 0;
        let mut here = 0;
        while here < 50 && tries < 20_000 {
            tries += 1;
            let w = common::sample(&dy, dy.length(dy.w0()) + 5, &mut rng);
            if w.len() < 2 || w.at(1) != w.at(2) {
                continue;
            }
            let cr = Crossings::compute(&dy, &w).unwrap();
            if !(cr.is_solid(1) && cr.is_solid(2)) {
                continue;
            }
            let s = Seed::build(&mut engine, &w).unwrap();
            assert!(s.seed.is_frozen(1), "{name} {w}");
            if s.seed.is_mutable(2) {
                assert_eq!(s.seed.b(1, 2), w.at(1).signum() as i64, "{name} {w}");
            }
            for c in s.seed.mutable_labels().into_iter().filter(|&c| c > 2) {
                assert_eq!(s.seed.b(1, c), 0, "{name} {w} column {c}");
            }
            here += 1;
        }
        found += here;
    }
    assert!(found >= 250, "{found}");
}
