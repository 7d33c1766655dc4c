//! Verification suites run over many words in parallel. Results come back
//! in word order whatever the number of workers.

use std::fmt;

use braidseed::folding::{cross_check_seeds, lift_word, FoldingData};
use braidseed::gamma::aps_zero_check;
use braidseed::moves::{apply_move, enumerate_moves, verify_move, MoveKind, MoveRef};
use braidseed::oracle::TypeAOracle;
use braidseed::rootsys::Family;
use braidseed::{
    CartanType, Crossings, DoubleWord, DynkinData, Error, GammaEngine, OrdTable, Seed,
};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Outcome;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    /// Orders of vanishing against the symbolic type-A realization.
    Oracle,
    /// Zero pattern of the orders against almost positive sequences.
    Aps,
    /// Every applicable move, with function-level checks in type A.
    Moves,
    /// Direct seeds against folded seeds of lifted words.
    Fold,
    /// Integrality, symmetrizability and really full rank.
    Rank,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Oracle,
        Suite::Aps,
        Suite::Moves,
        Suite::Fold,
        Suite::Rank,
    ];

    pub fn applies_to(self, ty: CartanType) -> bool {
        match self {
            Suite::Oracle => ty.family == Family::A,
            Suite::Fold => !ty.is_simply_laced(),
            _ => true,
        }
    }

    fn flag(self) -> &'static str {
        match self {
            Suite::Oracle => "oracle",
            Suite::Aps => "aps",
            Suite::Moves => "moves",
            Suite::Fold => "fold",
            Suite::Rank => "rank",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.flag())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub word: String,
    pub detail: String,
    /// A command reproducing the failure on its own.
    pub repro: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub words: usize,
    pub checks: usize,
    pub failures: Vec<Failure>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Outcome of one word: number of checks and failure descriptions.
type WordResult = (usize, Vec<String>);

fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn oracle_word(
    dy: &DynkinData,
    engine: &mut GammaEngine<'_>,
    w: &DoubleWord,
) -> braidseed::Result<WordResult> {
    let cr = Crossings::compute(dy, w)?;
    let ours = OrdTable::compute(engine, w, &cr)?;
    let theirs = TypeAOracle::new(dy)?.ord_table(w, &cr)?;
    let mut bad = Vec::new();
    for c in 0..=w.len() {
        for k in ours.letters() {
            for &e in cr.solid() {
                let (a, b) = (ours.ord(c, k, e), theirs.table.ord(c, k, e));
                if a != b {
                    bad.push(format!("ord[({c},{k}),{e}]: recursion {a}, oracle {b}"));
                }
            }
        }
    }
    Ok((1, bad))
}

fn aps_word(
    dy: &DynkinData,
    engine: &mut GammaEngine<'_>,
    w: &DoubleWord,
) -> braidseed::Result<WordResult> {
    let cr = Crossings::compute(dy, w)?;
    let table = OrdTable::compute(engine, w, &cr)?;
    let bad = aps_zero_check(dy, w, &cr, &table)
        .into_iter()
        .map(|m| format!("{m:?}"))
        .collect();
    Ok((1, bad))
}

fn moves_word(
    dy: &DynkinData,
    engine: &mut GammaEngine<'_>,
    w: &DoubleWord,
) -> braidseed::Result<WordResult> {
    let cr = Crossings::compute(dy, w)?;
    let oracle = (dy.cartan_type().family == Family::A)
        .then(|| TypeAOracle::new(dy))
        .transpose()?;
    let mut bad = Vec::new();
    let mut checks = 0;
    let src = Seed::build(engine, w)?;
    for mv in enumerate_moves(dy, w, &cr) {
        checks += 1;
        let rep = verify_move(engine, w, &mv)?;
        if !rep.passed() || rep.quasi.is_none() {
            bad.push(format!(
                "{mv}: {}",
                rep.note.unwrap_or_else(|| "no frozen witness".into())
            ));
            continue;
        }
        if mv.kind == MoveKind::B3 {
            let q = mv.window().filter(|&c| cr.is_solid(c)).count();
            if rep.mutations.0.len() != binom2(q.saturating_sub(1)) {
                bad.push(format!(
                    "{mv}: {} mutations for {q} solid letters",
                    rep.mutations.0.len()
                ));
            }
        }
        if let Some(o) = &oracle {
            let plan = apply_move(
                dy,
                w,
                MoveRef {
                    kind: mv.kind,
                    left: mv.left,
                },
            )?;
            let dst = Seed::build(engine, &plan.target)?;
            let r = o.check_move(w, &mv, &plan, &src.seed, &dst.seed)?;
            if !r.passed() {
                bad.push(format!("{mv}: oracle {}", r.note.unwrap_or_default()));
            }
        }
    }
    Ok((checks, bad))
}

fn rank_word(
    dy: &DynkinData,
    engine: &mut GammaEngine<'_>,
    w: &DoubleWord,
) -> braidseed::Result<WordResult> {
    let s = Seed::build(engine, w)?;
    let mut bad = Vec::new();
    if s.solid().len() != w.len() - dy.length(dy.w0()) {
        bad.push("|J| differs from m - l(w0)".into());
    }
    s.seed.check_integral()?;
    if !s.seed.is_skew_symmetrizable() {
        bad.push("B is not skew-symmetrizable by d".into());
    }
    if !s.really_full_rank() {
        bad.push("B is not really full rank".into());
    }
    Ok((1, bad))
}

fn fold_word(
    f: &FoldingData,
    direct: &mut GammaEngine<'_>,
    lifted: &mut GammaEngine<'_>,
    w: &DoubleWord,
) -> braidseed::Result<WordResult> {
    let s = Seed::build(direct, w)?;
    let lift = lift_word(f, w);
    let t = Seed::build(lifted, &lift.word)?;
    let rep = cross_check_seeds(f, &s, &lift, &t)?;
    let mut bad = Vec::new();
    if !rep.solid_ok {
        bad.push(format!(
            "solid crossings of the lift {} are not the fibers",
            lift.word
        ));
    }
    for (c, k, e) in rep.ord_mismatches.iter().take(4) {
        bad.push(format!("ord[({c},{k}),{e}] differs from the lifted sum"));
    }
    if rep.solid_ok && !rep.seed_ok {
        bad.push("folded seed differs from the direct seed".into());
    }
    Ok((1, bad))
}

fn collect(
    suite: Suite,
    ty: CartanType,
    words: &[DoubleWord],
    results: Vec<braidseed::Result<WordResult>>,
) -> SuiteReport {
    let mut report = SuiteReport {
        suite,
        cartan_type: ty.to_string(),
        words: 0,
        checks: 0,
        failures: Vec::new(),
    };
    for (w, r) in words.iter().zip(results) {
        let repro = format!("braidseed verify --{suite} --type {ty} --word \"{w}\"");
        let failures = match r {
            // words outside the domain are skipped, not failed
            Err(Error::BadDemazure) => continue,
            Err(e) => vec![e.to_string()],
            Ok((n, bad)) => {
                report.checks += n;
                bad
            }
        };
        report.words += 1;
        report
            .failures
            .extend(failures.into_iter().map(|detail| Failure {
                word: w.to_string(),
                detail,
                repro: repro.clone(),
            }));
    }
    report
}

/// Run `suite` over `words` on `jobs` workers.
pub fn run(
    suite: Suite,
    ty: CartanType,
    words: &[DoubleWord],
    jobs: usize,
) -> Outcome<SuiteReport> {
    if !suite.applies_to(ty) {
        return Err(Error::NotApplicable(format!("suite {suite} does not apply to {ty}")).into());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()?;
    let dy = DynkinData::new(ty);
    let results = if suite == Suite::Fold {
        let f = FoldingData::standard(ty)?;
        let dt = DynkinData::new(f.unfolded);
        pool.install(|| {
            words
                .par_iter()
                .map_init(
                    || (GammaEngine::new(&dy), GammaEngine::new(&dt)),
                    |(a, b), w| fold_word(&f, a, b, w),
                )
                .collect()
        })
    } else {
        let check = match suite {
            Suite::Oracle => oracle_word,
            Suite::Aps => aps_word,
            Suite::Moves => moves_word,
            Suite::Rank => rank_word,
            Suite::Fold => unreachable!("handled above"),
        };
        pool.install(|| {
            words
                .par_iter()
                .map_init(|| GammaEngine::new(&dy), |e, w| check(&dy, e, w))
                .collect()
        })
    };
    Ok(collect(suite, ty, words, results))
}
