use braidseed::gamma::aps_zero_check;
use braidseed::oracle::TypeAOracle;
use braidseed::{Crossings, DoubleWord, DynkinData, GammaEngine, OrdTable};

fn check(dy: &DynkinData, w: &str) -> Result<(), String> {
    let word: DoubleWord = w.parse().unwrap();
    let cr = Crossings::compute(dy, &word).map_err(|e| format!("BAD: {e}"))?;
    let oracle = TypeAOracle::new(dy).unwrap();
    let got = oracle
        .ord_table(&word, &cr)
        .map_err(|e| format!("{w}: oracle {e}"))?;
    let mut eng = GammaEngine::new(dy);
    let ours = OrdTable::compute(&mut eng, &word, &cr).map_err(|e| format!("{w}: gamma {e}"))?;
    let aps = aps_zero_check(dy, &word, &cr, &ours);
    if !aps.is_empty() {
        return Err(format!("{w}: APS mismatch {:?}", aps[0]));
    }
    for c in 0..=word.len() {
        for k in ours.letters() {
            for &e in cr.solid() {
                if ours.ord(c, k, e) > 1 {
                    return Err(format!("{w}: ord[({c},{k}),{e}] exceeds one"));
                }
                if ours.ord(c, k, e) != got.table.ord(c, k, e) {
                    return Err(format!(
                        "{w}: ord[({c},{k}),{e}] gamma {} oracle {}",
                        ours.ord(c, k, e),
                        got.table.ord(c, k, e)
                    ));
                }
            }
        }
    }
    Ok(())
}

#[test]
fn a1_normative_polynomials() {
    let dy = DynkinData::from_name("A1").unwrap();
    let word: DoubleWord = "1 1 1".parse().unwrap();
    let cr = Crossings::compute(&dy, &word).unwrap();
    let o = TypeAOracle::new(&dy).unwrap();
    let chain = o.param_chain(&word);
    assert_eq!(chain[1][1][0].to_string(), "t2");
    assert_eq!(chain[1][0][0].to_string(), "t2t3 - 1");
    let t = o.ord_table(&word, &cr).unwrap();
    assert_eq!(t.vars[&1].to_string(), "t1t2 - 1");
    assert_eq!(t.vars[&2].to_string(), "t2");
    assert_eq!(t.minors[&(0, 1)].to_string(), "t1t2 - 1");
    assert_eq!(t.minors[&(2, 1)].to_string(), "1");

    let word: DoubleWord = "-1 1 1".parse().unwrap();
    let cr = Crossings::compute(&dy, &word).unwrap();
    let chain = o.param_chain(&word);
    assert_eq!(chain[0][1][0].to_string(), "t1t2 + t2t3 - 1");
    let t = o.ord_table(&word, &cr).unwrap();
    assert_eq!(t.minors[&(1, -1)].to_string(), "t2");

    let word: DoubleWord = "1 1 1 1".parse().unwrap();
    let cr = Crossings::compute(&dy, &word).unwrap();
    let t = o.ord_table(&word, &cr).unwrap();
    assert_eq!(t.vars[&3].to_string(), "t3");
    assert_eq!(t.vars[&2].to_string(), "t2t3 - 1");
    assert_eq!(t.vars[&1].to_string(), "t1t2t3 - t1 - t3");
}

// Hollow crossings spell a reduced word for w0 and the last one is always
// hollow, so only the first crossing of 1 2 1 2 can be solid.
#[test]
fn a2_one_two_one_two() {
    let dy = DynkinData::from_name("A2").unwrap();
    let word: DoubleWord = "1 2 1 2".parse().unwrap();
    let cr = Crossings::compute(&dy, &word).unwrap();
    assert_eq!(cr.solid(), &[1]);
    assert!(cr.is_frozen(1));
    let t = TypeAOracle::new(&dy)
        .unwrap()
        .ord_table(&word, &cr)
        .unwrap();
    assert_eq!(t.vars[&1].to_string(), "t1");
    check(&dy, "1 2 1 2").unwrap();
}

fn all_words(rank: i32, len: usize) -> Vec<String> {
    let letters: Vec<i32> = (1..=rank).chain((1..=rank).map(|k| -k)).collect();
    let mut out = vec![Vec::<i32>::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                letters.iter().map(move |&l| {
                    let mut v = w.clone();
                    v.push(l);
                    v
                })
            })
            .collect();
    }
    out.into_iter()
        .map(|w| {
            w.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect()
}

fn sweep(name: &str, len: usize) -> (usize, Vec<String>) {
    let dy = DynkinData::from_name(name).unwrap();
    let words = all_words(dy.rank() as i32, len);
    let threads = std::thread::available_parallelism().map_or(4, |n| n.get());
    let chunk = words.len().div_ceil(threads);
    std::thread::scope(|s| {
        let handles: Vec<_> = words
            .chunks(chunk)
            .map(|ws| {
                let dy = &dy;
                s.spawn(move || {
                    let mut checked = 0;
                    let mut failures = Vec::new();
                    for w in ws {
                        match check(dy, w) {
                            Ok(()) => checked += 1,
                            Err(e) if e.starts_with("BAD:") => {}
                            Err(e) => failures.push(format!("{name} {e}")),
                        }
                    }
                    (checked, failures)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).fold(
            (0, Vec::new()),
            |(n, mut f), (m, g)| {
                f.extend(g);
                (n + m, f)
            },
        )
    })
}

#[test]
fn exhaustive_small_words_agree() {
    let mut failures = Vec::new();
    let mut checked = 0;
    for (name, max) in [("A1", 8), ("A2", 8), ("A3", 7)] {
        for len in 1..=max {
            let (n, f) = sweep(name, len);
            checked += n;
            failures.extend(f);
        }
    }
    assert!(
        failures.is_empty(),
        "{} failures of {checked}: {:#?}",
        failures.len(),
        &failures[..failures.len().min(20)]
    );
    assert!(checked > 100_000, "{checked}");
}

#[test]
#[ignore = "several minutes on one core"]
fn a3_length_eight_agrees() {
    let (checked, failures) = sweep("A3", 8);
    assert!(
        failures.is_empty(),
        "{} failures of {checked}: {:#?}",
        failures.len(),
        &failures[..failures.len().min(20)]
    );
}
