//! Abstract seeds: mutation, freezing, contraction, relabeling and
//! quasi-equivalence.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::intlat::{self, IntMatrix};

pub type Q = Ratio<i64>;

/// A seed detached from any word.
///
/// `b` is the full square matrix over all labels, frozen columns included,
/// with `d_y b[x][y] = omega[x][y]` antisymmetric. Only the mutable columns
/// are required to be integral.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbstractSeed {
    labels: Vec<usize>,
    frozen: Vec<bool>,
    d: Vec<i64>,
    b: Vec<Q>,
}

/// Monomial witnesses of a quasi-equivalence: for every mutable label, the
/// exponents over the frozen variables of the first seed.
pub type Witness = BTreeMap<usize, Vec<i64>>;

impl AbstractSeed {
    /// Build from the 2-form coefficients `omega` (full antisymmetric matrix
    /// in label order).
    pub fn from_omega(
        labels: Vec<usize>,
        frozen: Vec<bool>,
        d: Vec<i64>,
        omega: &[Q],
    ) -> Result<Self> {
        let n = labels.len();
        let mut b = vec![Q::zero(); n * n];
        for x in 0..n {
            for y in 0..n {
                b[x * n + y] = omega[x * n + y] / Q::from(d[y]);
            }
        }
        let seed = AbstractSeed {
            labels,
            frozen,
            d,
            b,
        };
        seed.check_integral()?;
        Ok(seed.sorted())
    }

    fn sorted(self) -> Self {
        let n = self.labels.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&x| self.labels[x]);
        let labels = order.iter().map(|&x| self.labels[x]).collect();
        let frozen = order.iter().map(|&x| self.frozen[x]).collect();
        let d = order.iter().map(|&x| self.d[x]).collect();
        let mut b = vec![Q::zero(); n * n];
        for (nx, &ox) in order.iter().enumerate() {
            for (ny, &oy) in order.iter().enumerate() {
                b[nx * n + ny] = self.b[ox * n + oy];
            }
        }
        AbstractSeed {
            labels,
            frozen,
            d,
            b,
        }
    }

    pub fn empty() -> Self {
        AbstractSeed {
            labels: Vec::new(),
            frozen: Vec::new(),
            d: Vec::new(),
            b: Vec::new(),
        }
    }

    pub fn dimension(&self) -> usize {
        self.labels.len()
    }

    pub fn rank(&self) -> usize {
        self.frozen.iter().filter(|f| !**f).count()
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn pos(&self, label: usize) -> Option<usize> {
        self.labels.binary_search(&label).ok()
    }

    pub fn is_frozen(&self, label: usize) -> bool {
        self.pos(label).is_some_and(|x| self.frozen[x])
    }

    pub fn is_mutable(&self, label: usize) -> bool {
        self.pos(label).is_some_and(|x| !self.frozen[x])
    }

    pub fn frozen_flags(&self) -> &[bool] {
        &self.frozen
    }

    pub fn mutable_labels(&self) -> Vec<usize> {
        self.labels
            .iter()
            .zip(&self.frozen)
            .filter(|(_, f)| !**f)
            .map(|(l, _)| *l)
            .collect()
    }

    pub fn frozen_labels(&self) -> Vec<usize> {
        self.labels
            .iter()
            .zip(&self.frozen)
            .filter(|(_, f)| **f)
            .map(|(l, _)| *l)
            .collect()
    }

    pub fn d(&self) -> &[i64] {
        &self.d
    }

    pub fn d_of(&self, label: usize) -> i64 {
        self.d[self.pos(label).expect("label in seed")]
    }

    /// `B~_{row,col}` by labels, as a rational.
    pub fn entry(&self, row: usize, col: usize) -> Q {
        let n = self.labels.len();
        self.b[self.pos(row).expect("row label") * n + self.pos(col).expect("col label")]
    }

    /// Integer entry of a mutable column.
    pub fn b(&self, row: usize, col: usize) -> i64 {
        let q = self.entry(row, col);
        debug_assert!(q.is_integer());
        q.to_integer()
    }

    /// 2-form coefficients `omega_{xy} = d_y B~_{xy}` in label order.
    pub fn omega(&self) -> Vec<Q> {
        let n = self.labels.len();
        (0..n * n)
            .map(|p| self.b[p] * Q::from(self.d[p % n]))
            .collect()
    }

    /// Extended exchange matrix: rows all labels, columns mutable labels.
    pub fn b_ext(&self) -> IntMatrix {
        let cols = self.mutable_labels();
        self.labels
            .iter()
            .map(|&r| cols.iter().map(|&c| self.b(r, c)).collect())
            .collect()
    }

    /// Principal part: rows and columns mutable labels.
    pub fn principal(&self) -> IntMatrix {
        let cols = self.mutable_labels();
        cols.iter()
            .map(|&r| cols.iter().map(|&c| self.b(r, c)).collect())
            .collect()
    }

    pub fn check_integral(&self) -> Result<()> {
        let n = self.labels.len();
        for x in 0..n {
            for y in 0..n {
                if !self.frozen[y] && !self.b[x * n + y].is_integer() {
                    return Err(Error::NonIntegral {
                        row: self.labels[x],
                        col: self.labels[y],
                    });
                }
            }
        }
        Ok(())
    }

    /// `d_y B~_{xy} = -d_x B~_{yx}` for all pairs.
    pub fn is_skew_symmetrizable(&self) -> bool {
        let n = self.labels.len();
        (0..n).all(|x| {
            (0..n).all(|y| {
                self.b[x * n + y] * Q::from(self.d[y]) == -self.b[y * n + x] * Q::from(self.d[x])
            })
        })
    }

    pub fn mutate(&self, k: usize) -> Result<Self> {
        let kx = self
            .pos(k)
            .filter(|&x| !self.frozen[x])
            .ok_or(Error::NotMutable(k))?;
        let n = self.labels.len();
        let old = &self.b;
        let mut b = old.clone();
        for x in 0..n {
            for y in 0..n {
                b[x * n + y] = if x == kx || y == kx {
                    -old[x * n + y]
                } else {
                    let bik = old[x * n + kx];
                    let bkj = old[kx * n + y];
                    let prod = bik * bkj;
                    if prod.is_positive() {
                        old[x * n + y] + bik.signum() * prod
                    } else {
                        old[x * n + y]
                    }
                };
            }
        }
        Ok(AbstractSeed {
            labels: self.labels.clone(),
            frozen: self.frozen.clone(),
            d: self.d.clone(),
            b,
        })
    }

    /// Apply mutations in the given order (first element first).
    pub fn mutate_seq(&self, order: &[usize]) -> Result<Self> {
        order.iter().try_fold(self.clone(), |s, &k| s.mutate(k))
    }

    pub fn freeze(&self, set: &[usize]) -> Self {
        let mut s = self.clone();
        for &l in set {
            if let Some(x) = s.pos(l) {
                s.frozen[x] = true;
            }
        }
        s
    }

    /// Rename labels by `pi`; labels missing from `pi` are kept.
    pub fn relabel(&self, pi: &BTreeMap<usize, usize>) -> Self {
        let labels = self
            .labels
            .iter()
            .map(|l| *pi.get(l).unwrap_or(l))
            .collect();
        AbstractSeed {
            labels,
            frozen: self.frozen.clone(),
            d: self.d.clone(),
            b: self.b.clone(),
        }
        .sorted()
    }

    /// Restrict to a subset of labels (drops rows and columns).
    pub fn restrict(&self, keep: &[usize]) -> Self {
        let idx: Vec<usize> = keep.iter().filter_map(|&l| self.pos(l)).collect();
        let n = self.labels.len();
        let mut b = Vec::with_capacity(idx.len() * idx.len());
        for &x in &idx {
            for &y in &idx {
                b.push(self.b[x * n + y]);
            }
        }
        AbstractSeed {
            labels: idx.iter().map(|&x| self.labels[x]).collect(),
            frozen: idx.iter().map(|&x| self.frozen[x]).collect(),
            d: idx.iter().map(|&x| self.d[x]).collect(),
            b,
        }
        .sorted()
    }

    /// Mutable labels with an arrow into `s` (`B~_{js} > 0`).
    pub fn in_neighbors(&self, s: usize) -> Vec<usize> {
        self.mutable_labels()
            .into_iter()
            .filter(|&j| j != s && self.entry(j, s).is_positive())
            .collect()
    }

    /// No arrows from `s` to other mutable vertices.
    pub fn is_sink(&self, s: usize) -> bool {
        self.mutable_labels()
            .into_iter()
            .all(|j| j == s || !self.entry(s, j).is_positive())
    }

    /// Contract the mutable sink `s` against the frozen `f`.
    pub fn contract(&self, s: usize, f: usize) -> Result<Self> {
        let bad = |why: &str| Error::AssumptionViolated(why.to_string());
        if !self.is_mutable(s) {
            return Err(bad("s is not mutable"));
        }
        if !self.is_frozen(f) {
            return Err(bad("f is not frozen"));
        }
        if !self.is_sink(s) {
            return Err(bad("s is not a sink"));
        }
        let bfs = self.entry(f, s);
        if bfs.abs() != Q::from(1) {
            return Err(bad("B~_fs is not +-1"));
        }
        if self
            .mutable_labels()
            .iter()
            .any(|&j| j != s && !self.entry(f, j).is_zero())
        {
            return Err(bad("f is adjacent to another mutable vertex"));
        }
        let keep: Vec<usize> = self
            .labels
            .iter()
            .copied()
            .filter(|&l| l != s && l != f)
            .collect();
        let into_s = self.in_neighbors(s);
        let n = self.labels.len();
        let sign = bfs.signum();
        // dlog x_s := 0, dlog x_f := sum_j v_j dlog x_j with v_j = -sign B~_js
        let mut p = vec![vec![Q::zero(); keep.len()]; n];
        for (r, &l) in keep.iter().enumerate() {
            p[self.pos(l).unwrap()][r] = Q::from(1);
            p[self.pos(f).unwrap()][r] = -sign * self.entry(l, s);
        }
        if keep.is_empty() {
            return Ok(AbstractSeed::empty());
        }
        let omega = self.omega();
        let mut out = vec![Q::zero(); keep.len() * keep.len()];
        for (r1, o1) in out.chunks_mut(keep.len()).enumerate() {
            for (r2, slot) in o1.iter_mut().enumerate() {
                let mut acc = Q::zero();
                for x in 0..n {
                    if p[x][r1].is_zero() {
                        continue;
                    }
                    for y in 0..n {
                        acc += p[x][r1] * omega[x * n + y] * p[y][r2];
                    }
                }
                *slot = acc;
            }
        }
        let frozen = keep
            .iter()
            .map(|&l| self.is_frozen(l) || into_s.contains(&l))
            .collect();
        let d = keep.iter().map(|&l| self.d_of(l)).collect();
        AbstractSeed::from_omega(keep, frozen, d, &out)
    }

    /// Exchange monomials of the mutation at `k`: exponents of the positive
    /// and negative terms, as `(label, exponent)` lists.
    pub fn exchange_terms(&self, k: usize) -> (Vec<(usize, i64)>, Vec<(usize, i64)>) {
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for &j in &self.labels {
            let v = self.b(j, k);
            if v > 0 {
                pos.push((j, v));
            } else if v < 0 {
                neg.push((j, -v));
            }
        }
        (pos, neg)
    }
}

/// Decide quasi-equivalence of two seeds whose cluster variables are given
/// as exponent vectors (rows in label order) in one shared lattice.
pub fn quasi_equivalent(
    s1: &AbstractSeed,
    x1: &[Vec<i64>],
    s2: &AbstractSeed,
    x2: &[Vec<i64>],
) -> Result<Option<Witness>> {
    let width = x1.first().map_or(0, |r| r.len());
    if x1.len() != s1.dimension()
        || x2.len() != s2.dimension()
        || x2.iter().chain(x1).any(|r| r.len() != width)
    {
        return Err(Error::IncomparableLattices);
    }
    if s1.dimension() != s2.dimension() || s1.mutable_labels() != s2.mutable_labels() {
        return Ok(None);
    }
    for l in s1.mutable_labels() {
        if s1.d_of(l) != s2.d_of(l) {
            return Ok(None);
        }
    }
    let mut d1 = s1.d().to_vec();
    let mut d2 = s2.d().to_vec();
    d1.sort();
    d2.sort();
    if d1 != d2 || !intlat::same_lattice(x1, x2, width) {
        return Ok(None);
    }
    if pullback_form(s1, x1, width) != pullback_form(s2, x2, width) {
        return Ok(None);
    }
    let frozen_rows = |s: &AbstractSeed, x: &[Vec<i64>]| -> Vec<Vec<i64>> {
        s.frozen_flags()
            .iter()
            .zip(x)
            .filter(|(f, _)| **f)
            .map(|(_, r)| r.clone())
            .collect()
    };
    let f1 = frozen_rows(s1, x1);
    if !intlat::same_lattice(&f1, &frozen_rows(s2, x2), width) {
        return Ok(None);
    }
    let hermite = intlat::hermite(&f1, width);
    let mut witness = Witness::new();
    for l in s1.mutable_labels() {
        let r1 = &x1[s1.pos(l).unwrap()];
        let r2 = &x2[s2.pos(l).unwrap()];
        let diff: Vec<i64> = r2.iter().zip(r1).map(|(a, b)| a - b).collect();
        match hermite.solve(&diff) {
            Some(c) => {
                witness.insert(l, c);
            }
            None => return Ok(None),
        }
    }
    Ok(Some(witness))
}

/// The 2-form written in the coordinates of the shared lattice.
fn pullback_form(s: &AbstractSeed, x: &[Vec<i64>], width: usize) -> Vec<Q> {
    let n = s.dimension();
    let omega = s.omega();
    let mut out = vec![Q::zero(); width * width];
    for a in 0..n {
        for b in 0..n {
            let w = omega[a * n + b];
            if w.is_zero() {
                continue;
            }
            for p in 0..width {
                if x[a][p] == 0 {
                    continue;
                }
                for q in 0..width {
                    out[p * width + q] += w * Q::from(x[a][p] * x[b][q]);
                }
            }
        }
    }
    out
}

/// A mutation sequence in composition notation: `mu(a1, .., ar)` means
/// `mu_a1 . .. . mu_ar`, so `ar` is applied first.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MutationSeq(pub Vec<usize>);

impl MutationSeq {
    pub fn application_order(&self) -> Vec<usize> {
        self.0.iter().rev().copied().collect()
    }
}

impl FromStr for MutationSeq {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t
            .strip_prefix('\u{3bc}')
            .or_else(|| t.strip_prefix("mu"))
            .unwrap_or(t)
            .trim()
            .trim_start_matches('_');
        let t = t
            .strip_prefix('(')
            .map_or(t, |x| x.strip_suffix(')').unwrap_or(x));
        t.split(|c: char| c.is_whitespace() || c == ',')
            .filter(|x| !x.is_empty())
            .map(|x| x.parse::<usize>().map_err(|_| Error::Parse(s.to_string())))
            .collect::<Result<Vec<_>>>()
            .map(MutationSeq)
    }
}

impl fmt::Display for MutationSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<_> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "\u{3bc}({})", parts.join(","))
    }
}

/// Labels touched by a relabeling map that are not in the seed.
pub fn foreign_labels(seed: &AbstractSeed, pi: &BTreeMap<usize, usize>) -> BTreeSet<usize> {
    pi.keys()
        .filter(|l| seed.pos(**l).is_none())
        .copied()
        .collect()
}

impl fmt::Display for AbstractSeed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols = self.mutable_labels();
        writeln!(f, "labels  {:?}", self.labels)?;
        writeln!(f, "frozen  {:?}", self.frozen_labels())?;
        writeln!(f, "d       {:?}", self.d)?;
        for &r in &self.labels {
            let row: Vec<_> = cols
                .iter()
                .map(|&c| format!("{:>3}", self.b(r, c)))
                .collect();
            writeln!(f, "{r:>4} | {}", row.join(" "))?;
        }
        Ok(())
    }
}
