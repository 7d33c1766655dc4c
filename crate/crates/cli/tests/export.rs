use braidseed::{DynkinData, GammaEngine, Seed};
use braidseed_cli::export::{from_json, to_dot, to_json, SeedJson};
use braidseed_cli::sample;

#[test]
fn json_round_trip_on_sampled_seeds() {
    for (n, (name, max_len)) in [("A3", 11), ("B3", 13), ("G2", 12), ("C3", 13), ("D4", 15)]
        .into_iter()
        .enumerate()
    {
        let dy = DynkinData::from_name(name).unwrap();
        let mut engine = GammaEngine::new(&dy);
        for w in sample::samples(&dy, 40, max_len, 900 + n as u64) {
            let s = Seed::build(&mut engine, &w).unwrap();
            let mutated = match s.seed.mutable_labels().first() {
                Some(&k) => s.seed.mutate(k).unwrap(),
                None => s.seed.clone(),
            };
            for seed in [&s.seed, &mutated] {
                let text = to_json(&SeedJson::from_abstract(seed)).unwrap();
                assert_eq!(&from_json(&text).unwrap(), seed, "{name} {w}");
            }
            let text = to_json(&SeedJson::from_seed(&s, name)).unwrap();
            assert_eq!(from_json(&text).unwrap(), s.seed);
        }
    }
}

#[test]
fn tampered_json_is_rejected() {
    let dy = DynkinData::from_name("A1").unwrap();
    let s = Seed::from_name(&dy, "1 1 1").unwrap();
    let mut j = SeedJson::from_seed(&s, "A1");
    j.b[1][0] = 2;
    assert!(from_json(&to_json(&j).unwrap()).is_err());
    let mut j = SeedJson::from_seed(&s, "A1");
    j.omega[0][1] = "1/0".into();
    assert!(from_json(&to_json(&j).unwrap()).is_err());
    assert!(from_json("{").is_err());
}

#[test]
fn dot_of_small_seeds() {
    let dy = DynkinData::from_name("A1").unwrap();
    let s = Seed::from_name(&dy, "1 1 1").unwrap();
    assert_eq!(
        to_dot(&s.seed),
        "digraph seed {\n  x1 [shape=box, label=\"x1 (d=1)\"];\n  x2 [shape=circle, label=\"x2 (d=1)\"];\n  x1 -> x2;\n}\n"
    );
    // doubled arrows carry both entries
    let dy = DynkinData::from_name("B2").unwrap();
    let s = Seed::from_name(&dy, "1 2 1 2 1 2 1 2 1 2").unwrap();
    let dot = to_dot(&s.seed);
    assert!(
        dot.contains("[label=\"2,1\"]") || dot.contains("[label=\"1,2\"]"),
        "{dot}"
    );
}
