use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use braidseed::folding::{cross_check, lift_word, FoldingData};
use braidseed::moves::{apply_move, compare_through_plan, enumerate_moves, MoveRef};
use braidseed::{CartanType, Crossings, DoubleWord, DynkinData, Error, MutationSeq, Seed};
use braidseed_cli::export::{self, SeedJson};
use braidseed_cli::sample;
use braidseed_cli::sweep::{self, Suite, SuiteReport};
use braidseed_cli::{CliError, Outcome};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "braidseed",
    version,
    about = "Cluster seeds of double braid words"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Args)]
struct Input {
    /// Cartan type such as A3, B2, G2, E6.
    #[arg(long = "type")]
    cartan_type: CartanType,
    /// Letters separated by spaces; negative letters act on the second flag.
    #[arg(long, allow_hyphen_values = true)]
    word: DoubleWord,
}

#[derive(Args)]
struct OutputOpts {
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write to a file instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the seed of a word.
    Seed {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: OutputOpts,
        /// Also compare with the folded seed of the lifted word.
        #[arg(long)]
        fold_check: bool,
    },
    /// List the applicable moves, or apply one and compare the seeds.
    Moves {
        #[command(flatten)]
        input: Input,
        /// List the moves (the default without --apply).
        #[arg(long)]
        list: bool,
        /// A move such as B3@2.
        #[arg(long)]
        apply: Option<MoveRef>,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Mutate the seed of a word along a sequence such as "μ(4,3,4)" or "4 3 4".
    Mutate {
        #[command(flatten)]
        input: Input,
        /// Written in composition order: the rightmost index is mutated first.
        #[arg(long)]
        seq: MutationSeq,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Lift a multiply-laced word and compare its seed with the folded one.
    Fold {
        #[command(flatten)]
        input: Input,
        /// Print the lifted word and the position map.
        #[arg(long)]
        lift: bool,
        /// Run the cross-check (the default without --lift).
        #[arg(long)]
        check: bool,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Run verification suites over all valid words up to a length, or over samples.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Cartan type such as A3, B2, G2, E6
    #[arg(long = "type")]
    cartan_type: CartanType,
    /// Orders of vanishing against the symbolic realization (type A only).
    #[arg(long)]
    oracle: bool,
    /// Zero pattern of the orders against almost positive sequences.
    #[arg(long)]
    aps: bool,
    /// Every applicable move, with function-level checks in type A.
    #[arg(long)]
    moves: bool,
    /// Direct seeds against folded seeds of lifted words (non-simply-laced only).
    #[arg(long)]
    fold: bool,
    /// Integrality, symmetrizability and full rank of the seeds.
    #[arg(long)]
    rank: bool,
    /// Longest words considered.
    #[arg(long, default_value_t = 6)]
    max_len: usize,
    /// Sample this many random valid words instead of enumerating.
    #[arg(long)]
    samples: Option<usize>,
    /// Seed of the sampler.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Check one word only.
    #[arg(long, allow_hyphen_values = true)]
    word: Option<DoubleWord>,
    /// Worker threads.
    #[arg(long, env = "BRAIDSEED_JOBS")]
    jobs: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: ReportFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

fn emit(out: &OutputOpts, text: &str) -> Outcome<()> {
    match &out.output {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn render_seed(
    out: &OutputOpts,
    json: &SeedJson,
    seed: &braidseed::AbstractSeed,
    header: Option<(&str, &str)>,
) -> Outcome<String> {
    Ok(match out.format {
        Format::Json => export::to_json(json)?,
        Format::Dot => export::to_dot(seed),
        Format::Text => export::to_text(seed, header),
    })
}

fn cmd_seed(input: Input, out: OutputOpts, fold_check: bool) -> Outcome<()> {
    let dy = DynkinData::new(input.cartan_type);
    let s = Seed::from_name(&dy, &input.word.to_string())?;
    let ty = input.cartan_type.to_string();
    let json = SeedJson::from_seed(&s, &ty);
    emit(
        &out,
        &render_seed(&out, &json, &s.seed, Some((&ty, &input.word.to_string())))?,
    )?;
    if fold_check {
        let rep = cross_check(&FoldingData::standard(input.cartan_type)?, &input.word)?;
        if !rep.passed() {
            return Err(Error::InternalInconsistency(format!(
                "folded seed of {} disagrees",
                rep.lift.word
            ))
            .into());
        }
        eprintln!("fold check passed via {}", rep.lift.word);
    }
    Ok(())
}

fn cmd_moves(input: Input, apply: Option<MoveRef>, out: OutputOpts) -> Outcome<()> {
    let dy = DynkinData::new(input.cartan_type);
    let w = input.word;
    let cr = Crossings::compute(&dy, &w)?;
    let Some(mv) = apply else {
        let moves = enumerate_moves(&dy, &w, &cr);
        let text = if out.format == Format::Json {
            let list: Vec<_> = moves
                .iter()
                .map(|m| {
                    json!({"kind": m.kind.to_string(), "left": m.left, "len": m.len, "solid": m.solid,
                        "special": m.special, "mutation": m.mutation, "long": m.long})
                })
                .collect();
            serde_json::to_string_pretty(&list)? + "\n"
        } else {
            moves.iter().map(|m| format!("{m}\n")).collect()
        };
        return emit(&out, &text);
    };
    let plan = apply_move(&dy, &w, mv)?;
    let spec = enumerate_moves(&dy, &w, &cr)
        .into_iter()
        .find(|m| m.kind == mv.kind && m.left == mv.left)
        .ok_or_else(|| Error::NotApplicable(format!("{}@{}", mv.kind, mv.left)))?;
    let mut engine = braidseed::GammaEngine::new(&dy);
    let src = Seed::build(&mut engine, &w)?;
    let dst = Seed::build(&mut engine, &plan.target)?;
    let rep = compare_through_plan(&plan, &spec, &src.seed, &dst.seed);
    let relabel: Vec<[usize; 2]> = plan
        .relabel
        .iter()
        .filter(|(a, b)| a != b)
        .map(|(a, b)| [*a, *b])
        .collect();
    let text = if out.format == Format::Json {
        serde_json::to_string_pretty(&json!({
            "move": spec.to_string(), "source": w.to_string(), "target": plan.target.to_string(),
            "mutations": plan.mutations.to_string(), "relabel": relabel,
            "principal_ok": rep.principal_ok, "d_ok": rep.d_ok, "split_ok": rep.split_ok,
            "frozen_witness": rep.quasi.is_some(), "note": rep.note,
        }))? + "\n"
    } else {
        format!(
            "{spec}\n{w} -> {}\nmutations {}\nrelabel {relabel:?}\nseeds agree {}\n",
            plan.target,
            plan.mutations,
            rep.passed() && rep.quasi.is_some()
        )
    };
    emit(&out, &text)?;
    if rep.passed() && rep.quasi.is_some() {
        Ok(())
    } else {
        Err(
            Error::InternalInconsistency(format!("{spec} does not carry the seed: {:?}", rep.note))
                .into(),
        )
    }
}

fn cmd_mutate(input: Input, seq: MutationSeq, out: OutputOpts) -> Outcome<()> {
    let dy = DynkinData::new(input.cartan_type);
    let s = Seed::from_name(&dy, &input.word.to_string())?;
    let m = s.seed.mutate_seq(&seq.application_order())?;
    let ty = input.cartan_type.to_string();
    let mut json = SeedJson::from_abstract(&m);
    json.cartan_type = Some(ty.clone());
    json.word = Some(input.word.to_string());
    emit(
        &out,
        &render_seed(&out, &json, &m, Some((&ty, &input.word.to_string())))?,
    )
}

fn cmd_fold(input: Input, lift: bool, check: bool, out: OutputOpts) -> Outcome<()> {
    let f = FoldingData::standard(input.cartan_type)?;
    let (lift, check) = if lift || check {
        (lift, check)
    } else {
        (true, true)
    };
    let l = lift_word(&f, &input.word);
    let rep = if check {
        Some(cross_check(&f, &input.word)?)
    } else {
        None
    };
    let text = if out.format == Format::Json {
        let mut v = json!({"type": f.folded.to_string(), "unfolded": f.unfolded.to_string(), "word": input.word.to_string()});
        if lift {
            v["lift"] = json!(l.word.to_string());
            v["position"] = json!(l.position);
            v["orbits"] = json!(f.orbits());
        }
        if let Some(r) = &rep {
            v["solid_ok"] = json!(r.solid_ok);
            v["ord_mismatches"] = json!(r.ord_mismatches.len());
            v["seed_ok"] = json!(r.seed_ok);
        }
        serde_json::to_string_pretty(&v)? + "\n"
    } else {
        let mut t = format!("{} <- {}\n", f.folded, f.unfolded);
        if lift {
            t += &format!("lift     {}\nposition {:?}\n", l.word, l.position);
        }
        if let Some(r) = &rep {
            t += &format!(
                "cross-check {}\n",
                if r.passed() { "passed" } else { "FAILED" }
            );
        }
        t
    };
    emit(&out, &text)?;
    match rep {
        Some(r) if !r.passed() => {
            Err(Error::InternalInconsistency("direct and folded seeds disagree".into()).into())
        }
        _ => Ok(()),
    }
}

fn cmd_verify(a: VerifyArgs) -> Outcome<()> {
    let ty = a.cartan_type;
    let dy = DynkinData::new(ty);
    let chosen: Vec<Suite> = [
        (a.oracle, Suite::Oracle),
        (a.aps, Suite::Aps),
        (a.moves, Suite::Moves),
        (a.fold, Suite::Fold),
        (a.rank, Suite::Rank),
    ]
    .into_iter()
    .filter(|(on, _)| *on)
    .map(|(_, s)| s)
    .collect();
    let suites: Vec<Suite> = if chosen.is_empty() {
        Suite::ALL
            .into_iter()
            .filter(|s| s.applies_to(ty))
            .collect()
    } else {
        chosen
    };
    let words = match (&a.word, a.samples) {
        (Some(w), _) => vec![w.clone()],
        (None, Some(n)) => sample::samples(&dy, n, a.max_len, a.seed),
        (None, None) => sample::valid_words(&dy, a.max_len),
    };
    let jobs = a
        .jobs
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let reports = suites
        .iter()
        .map(|&s| sweep::run(s, ty, &words, jobs))
        .collect::<Outcome<Vec<SuiteReport>>>()?;
    let text = if a.format == ReportFormat::Json {
        serde_json::to_string_pretty(&reports)? + "\n"
    } else {
        let mut t = String::new();
        for r in &reports {
            t += &format!(
                "{} {}: {} words, {} checks, {} failures\n",
                r.suite,
                r.cartan_type,
                r.words,
                r.checks,
                r.failures.len()
            );
            for f in r.failures.iter().take(20) {
                t += &format!("  {}: {}\n    {}\n", f.word, f.detail, f.repro);
            }
        }
        t
    };
    std::io::stdout().write_all(text.as_bytes())?;
    let failed: usize = reports.iter().map(|r| r.failures.len()).sum();
    if failed > 0 {
        Err(CliError::Failed(failed))
    } else {
        Ok(())
    }
}

fn main() -> ExitCode {
    // clap reports usage errors with 2, which is reserved for bad words
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match cli.command {
        Command::Seed {
            input,
            out,
            fold_check,
        } => cmd_seed(input, out, fold_check),
        Command::Moves {
            input,
            list: _,
            apply,
            out,
        } => cmd_moves(input, apply, out),
        Command::Mutate { input, seq, out } => cmd_mutate(input, seq, out),
        Command::Fold {
            input,
            lift,
            check,
            out,
        } => cmd_fold(input, lift, check, out),
        Command::Verify(a) => cmd_verify(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
