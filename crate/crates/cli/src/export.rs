//! JSON, DOT and text renderings of seeds.
//!
//! JSON layout: `rows` lists the labels of the rows of `B` (mutable labels
//! first, then frozen ones, each ascending), `columns` the mutable labels.
//! `omega` is the full antisymmetric 2-form in ascending label order, with
//! entries written as `"p"` or `"p/q"`; it determines the seed together with
//! `frozen` and `d`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use braidseed::clusterops::Q;
use braidseed::{AbstractSeed, Seed};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Outcome};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeedJson {
    #[serde(rename = "type", skip_serializing_if = "Option::is_none", default)]
    pub cartan_type: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub word: Option<String>,
    /// Labels (solid crossings for a word seed).
    pub labels: Vec<usize>,
    pub frozen: Vec<usize>,
    pub mutable: Vec<usize>,
    /// Symmetrizer per label, in `labels` order.
    pub d: Vec<i64>,
    pub rows: Vec<usize>,
    pub columns: Vec<usize>,
    #[serde(rename = "B")]
    pub b: Vec<Vec<i64>>,
    pub omega: Vec<Vec<String>>,
    /// Exponents of each cluster variable over the chamber minors of the
    /// solid crossings, keyed by label.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub cluster_variables: Option<BTreeMap<usize, Vec<i64>>>,
}

fn rational(q: &Q) -> String {
    if *q.denom() == 1 {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn parse_rational(s: &str) -> Outcome<Q> {
    let bad = || CliError::Usage(format!("bad rational `{s}`"));
    let int = |t: &str| t.trim().parse::<i64>().map_err(|_| bad());
    match s.split_once('/') {
        Some((n, d)) => {
            let d = int(d)?;
            if d == 0 {
                return Err(bad());
            }
            Ok(Q::new(int(n)?, d))
        }
        None => Ok(Q::from(int(s)?)),
    }
}

impl SeedJson {
    pub fn from_abstract(seed: &AbstractSeed) -> SeedJson {
        let mutable = seed.mutable_labels();
        let frozen = seed.frozen_labels();
        let rows: Vec<usize> = mutable.iter().chain(&frozen).copied().collect();
        let b = rows
            .iter()
            .map(|&r| mutable.iter().map(|&c| seed.b(r, c)).collect())
            .collect();
        let n = seed.dimension();
        let omega = seed.omega();
        SeedJson {
            cartan_type: None,
            word: None,
            labels: seed.labels().to_vec(),
            frozen,
            mutable,
            d: seed.d().to_vec(),
            rows,
            columns: seed.mutable_labels(),
            b,
            omega: (0..n)
                .map(|x| (0..n).map(|y| rational(&omega[x * n + y])).collect())
                .collect(),
            cluster_variables: None,
        }
    }

    pub fn from_seed(seed: &Seed, cartan_type: &str) -> SeedJson {
        let mut out = SeedJson::from_abstract(&seed.seed);
        out.cartan_type = Some(cartan_type.to_string());
        out.word = Some(seed.word.to_string());
        out.cluster_variables = Some(
            seed.solid()
                .iter()
                .copied()
                .zip(seed.cluster_monomials.iter().cloned())
                .collect(),
        );
        out
    }

    /// Rebuild the seed from `labels`, `frozen`, `d` and `omega`, and check
    /// that `B` agrees with it.
    pub fn to_abstract(&self) -> Outcome<AbstractSeed> {
        let n = self.labels.len();
        if self.d.len() != n || self.omega.len() != n || self.omega.iter().any(|r| r.len() != n) {
            return Err(CliError::Usage("seed json: shape mismatch".into()));
        }
        let omega = self
            .omega
            .iter()
            .flatten()
            .map(|s| parse_rational(s))
            .collect::<Outcome<Vec<Q>>>()?;
        let flags = self
            .labels
            .iter()
            .map(|l| self.frozen.contains(l))
            .collect();
        let seed = AbstractSeed::from_omega(self.labels.clone(), flags, self.d.clone(), &omega)?;
        if SeedJson::from_abstract(&seed).b != self.b {
            return Err(CliError::Usage("seed json: B disagrees with omega".into()));
        }
        Ok(seed)
    }
}

pub fn to_json(json: &SeedJson) -> Outcome<String> {
    Ok(serde_json::to_string_pretty(json)? + "\n")
}

pub fn from_json(text: &str) -> Outcome<AbstractSeed> {
    serde_json::from_str::<SeedJson>(text)?.to_abstract()
}

/// Quiver of the seed: an arrow `a -> b` when `B_ab > 0` for a mutable `b`
/// (or `B_ba < 0` for a frozen `b`). Arrows between two mutable vertices
/// carry `|B_ab|,|B_ba|` unless both are one; arrows to or from a frozen
/// vertex carry the entry in the mutable column unless it is one.
pub fn to_dot(seed: &AbstractSeed) -> String {
    let mut out = String::from("digraph seed {\n");
    for &l in seed.labels() {
        let shape = if seed.is_frozen(l) { "box" } else { "circle" };
        let _ = writeln!(
            out,
            "  x{l} [shape={shape}, label=\"x{l} (d={})\"];",
            seed.d_of(l)
        );
    }
    let mutable = seed.mutable_labels();
    for &c in &mutable {
        for &r in seed.labels() {
            if r == c {
                continue;
            }
            let v = seed.b(r, c);
            if v == 0 {
                continue;
            }
            let (from, to) = if v > 0 { (r, c) } else { (c, r) };
            let label = if seed.is_mutable(r) {
                if r > c {
                    continue;
                }
                let w = seed.b(c, r);
                (v.abs() != 1 || w.abs() != 1).then(|| format!("{},{}", v.abs(), w.abs()))
            } else {
                (v.abs() != 1).then(|| v.abs().to_string())
            };
            match label {
                Some(t) => {
                    let _ = writeln!(out, "  x{from} -> x{to} [label=\"{t}\"];");
                }
                None => {
                    let _ = writeln!(out, "  x{from} -> x{to};");
                }
            }
        }
    }
    out.push_str("}\n");
    out
}

pub fn to_text(seed: &AbstractSeed, header: Option<(&str, &str)>) -> String {
    let mut out = String::new();
    if let Some((ty, word)) = header {
        let _ = writeln!(out, "type    {ty}\nword    {word}");
    }
    let _ = write!(out, "mutable {:?}\n{seed}", seed.mutable_labels());
    out
}
