//! Cartan data and Weyl group arithmetic for the finite Dynkin types.
//!
//! The Cartan matrix follows `a_ij = <alpha_i, alpha_j^vee>` with Bourbaki node
//! numbering. Weyl group elements are stored through their action on the
//! coroot lattice, which is enough to read off ascents, lengths, the action on
//! cocharacters and (by duality) the action on weights.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// Integer vector in the simple coroot basis. Entry `k - 1` is the pairing
/// with the fundamental weight `omega_k`.
pub type Cochar = Vec<i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(CartanType { family, rank })
        } else {
            Err(Error::UnknownType(alloc::format!("{family:?}{rank}")))
        }
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::UnknownType(s.to_string());
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(bad()),
        };
        let rest = chars.as_str().trim_start_matches('_');
        let rank: usize = rest.parse().map_err(|_| bad())?;
        CartanType::new(family, rank).map_err(|_| bad())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A Weyl group element. `fwd` is the matrix of `w` on the coroot lattice
/// (row-major, column `j` is `w . alpha_j^vee`), `inv` the matrix of `w^-1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct WeylElt {
    fwd: Vec<i32>,
    inv: Vec<i32>,
}

impl WeylElt {
    fn identity(n: usize) -> Self {
        let mut fwd = vec![0; n * n];
        for i in 0..n {
            fwd[i * n + i] = 1;
        }
        WeylElt {
            inv: fwd.clone(),
            fwd,
        }
    }

    pub fn rank(&self) -> usize {
        isqrt(self.fwd.len())
    }

    pub fn inverse(&self) -> WeylElt {
        WeylElt {
            fwd: self.inv.clone(),
            inv: self.fwd.clone(),
        }
    }

    pub fn is_identity(&self) -> bool {
        let n = self.rank();
        (0..n).all(|r| (0..n).all(|c| self.fwd[r * n + c] == (r == c) as i32))
    }

    /// Matrix of the action on the coroot lattice.
    pub fn coroot_matrix(&self) -> &[i32] {
        &self.fwd
    }

    fn column(m: &[i32], n: usize, j: usize) -> impl Iterator<Item = i32> + '_ {
        (0..n).map(move |r| m[r * n + j])
    }
}

fn isqrt(len: usize) -> usize {
    let mut n = 0;
    while n * n < len {
        n += 1;
    }
    n
}

fn sign_of(mut it: impl Iterator<Item = i32>) -> i32 {
    it.find(|&x| x != 0).map_or(0, |x| x.signum())
}

fn matmul(a: &[i32], b: &[i32], n: usize) -> Vec<i32> {
    let mut out = vec![0; n * n];
    for r in 0..n {
        for l in 0..n {
            let x = a[r * n + l];
            if x == 0 {
                continue;
            }
            for c in 0..n {
                out[r * n + c] += x * b[l * n + c];
            }
        }
    }
    out
}

/// Cartan data of a finite root system together with cached Weyl group facts.
#[derive(Clone, Debug)]
pub struct DynkinData {
    ty: CartanType,
    n: usize,
    cartan: Vec<i32>,
    d: Vec<i64>,
    coxeter: Vec<u32>,
    star: Vec<usize>,
    w0: WeylElt,
    pos_coroots: Vec<Vec<i32>>,
}

fn cartan_edges(ty: CartanType) -> Vec<(usize, usize, i32, i32)> {
    // (i, j, a_ij, a_ji), 1-based
    let n = ty.rank;
    let mut e = Vec::new();
    match ty.family {
        Family::A => (1..n).for_each(|i| e.push((i, i + 1, -1, -1))),
        Family::B => {
            (1..n - 1).for_each(|i| e.push((i, i + 1, -1, -1)));
            e.push((n - 1, n, -2, -1));
        }
        Family::C => {
            (1..n - 1).for_each(|i| e.push((i, i + 1, -1, -1)));
            e.push((n - 1, n, -1, -2));
        }
        Family::D => {
            (1..n - 1).for_each(|i| e.push((i, i + 1, -1, -1)));
            e.push((n - 2, n, -1, -1));
        }
        Family::E => {
            e.push((1, 3, -1, -1));
            e.push((2, 4, -1, -1));
            (3..n).for_each(|i| e.push((i, i + 1, -1, -1)));
        }
        Family::F => {
            e.push((1, 2, -1, -1));
            e.push((2, 3, -2, -1));
            e.push((3, 4, -1, -1));
        }
        Family::G => e.push((1, 2, -1, -3)),
    }
    e
}

impl DynkinData {
    pub fn new(ty: CartanType) -> DynkinData {
        let n = ty.rank;
        let mut cartan = vec![0i32; n * n];
        for i in 0..n {
            cartan[i * n + i] = 2;
        }
        for (i, j, aij, aji) in cartan_edges(ty) {
            cartan[(i - 1) * n + (j - 1)] = aij;
            cartan[(j - 1) * n + (i - 1)] = aji;
        }

        // symmetrizer: d_i a_ij = d_j a_ji, propagated along the connected diagram
        let mut d = vec![0i64; n];
        d[0] = 6;
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for j in 0..n {
                let (aij, aji) = (cartan[i * n + j], cartan[j * n + i]);
                if i != j && aij != 0 && d[j] == 0 {
                    d[j] = d[i] * aij as i64 / aji as i64;
                    queue.push_back(j);
                }
            }
        }
        let g = d.iter().fold(0, |g, &x| num_integer::gcd(g, x));
        d.iter_mut().for_each(|x| *x /= g);

        let mut coxeter = vec![1u32; n * n];
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    coxeter[i * n + j] = match cartan[i * n + j] * cartan[j * n + i] {
                        0 => 2,
                        1 => 3,
                        2 => 4,
                        _ => 6,
                    };
                }
            }
        }

        let mut data = DynkinData {
            ty,
            n,
            cartan,
            d,
            coxeter,
            star: Vec::new(),
            w0: WeylElt::identity(n),
            pos_coroots: Vec::new(),
        };
        data.pos_coroots = data.enumerate_positive_coroots();

        let mut w = WeylElt::identity(n);
        while let Some(i) = (1..=n).find(|&i| data.is_right_ascent(&w, i)) {
            w = data.mul_simple(&w, i, Side::Right);
        }
        data.star = (0..n)
            .map(|i| {
                (0..n)
                    .find(|&r| w.fwd[r * n + i] == -1)
                    .expect("longest element sends simple coroots to negative simple coroots")
                    + 1
            })
            .collect();
        data.w0 = w;
        data
    }

    pub fn from_name(name: &str) -> Result<DynkinData> {
        Ok(DynkinData::new(name.parse()?))
    }

    fn enumerate_positive_coroots(&self) -> Vec<Vec<i32>> {
        let n = self.n;
        let mut seen: BTreeSet<Vec<i32>> = BTreeSet::new();
        let mut queue = VecDeque::new();
        for i in 0..n {
            let mut v = vec![0; n];
            v[i] = 1;
            seen.insert(v.clone());
            queue.push_back(v);
        }
        while let Some(v) = queue.pop_front() {
            for i in 0..n {
                let p: i32 = (0..n).map(|j| self.cartan[i * n + j] * v[j]).sum();
                if p == 0 {
                    continue;
                }
                let mut w = v.clone();
                w[i] -= p;
                if sign_of(w.iter().copied()) > 0 && seen.insert(w.clone()) {
                    queue.push_back(w);
                }
            }
        }
        seen.into_iter().collect()
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// `a_ij` for 1-based nodes.
    pub fn a(&self, i: usize, j: usize) -> i32 {
        self.cartan[(i - 1) * self.n + (j - 1)]
    }

    pub fn cartan_matrix(&self) -> &[i32] {
        &self.cartan
    }

    pub fn d(&self, i: usize) -> i64 {
        self.d[i - 1]
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.d
    }

    /// Order of `s_i s_j`.
    pub fn coxeter_m(&self, i: usize, j: usize) -> u32 {
        self.coxeter[(i - 1) * self.n + (j - 1)]
    }

    pub fn star(&self, i: usize) -> usize {
        self.star[i - 1]
    }

    pub fn w0(&self) -> &WeylElt {
        &self.w0
    }

    pub fn n_pos_roots(&self) -> usize {
        self.pos_coroots.len()
    }

    pub fn positive_coroots(&self) -> &[Vec<i32>] {
        &self.pos_coroots
    }

    pub fn identity(&self) -> WeylElt {
        WeylElt::identity(self.n)
    }

    pub fn simple(&self, i: usize) -> WeylElt {
        self.mul_simple(&self.identity(), i, Side::Left)
    }

    /// Product `s_{i_1} s_{i_2} ... s_{i_r}`.
    pub fn from_word(&self, word: &[usize]) -> WeylElt {
        word.iter()
            .fold(self.identity(), |w, &i| self.mul_simple(&w, i, Side::Right))
    }

    /// `s_i w` or `w s_i`.
    pub fn mul_simple(&self, w: &WeylElt, i: usize, side: Side) -> WeylElt {
        let n = self.n;
        let i = i - 1;
        let row = &self.cartan[i * n..(i + 1) * n];
        // column op: m -> m S_i ; row op: m -> S_i m
        let col_op = |m: &[i32]| {
            let ci: Vec<i32> = WeylElt::column(m, n, i).collect();
            let mut out = m.to_vec();
            for (j, &aij) in row.iter().enumerate() {
                if aij != 0 {
                    for r in 0..n {
                        out[r * n + j] -= aij * ci[r];
                    }
                }
            }
            out
        };
        let row_op = |m: &[i32]| {
            let mut out = m.to_vec();
            for c in 0..n {
                let s: i32 = (0..n).map(|l| row[l] * m[l * n + c]).sum();
                out[i * n + c] = m[i * n + c] - s;
            }
            out
        };
        match side {
            Side::Right => WeylElt {
                fwd: col_op(&w.fwd),
                inv: row_op(&w.inv),
            },
            Side::Left => WeylElt {
                fwd: row_op(&w.fwd),
                inv: col_op(&w.inv),
            },
        }
    }

    /// `w s_i > w`, i.e. `w . alpha_i` is positive.
    pub fn is_right_ascent(&self, w: &WeylElt, i: usize) -> bool {
        sign_of(WeylElt::column(&w.fwd, self.n, i - 1)) > 0
    }

    /// `s_i w > w`.
    pub fn is_left_ascent(&self, w: &WeylElt, i: usize) -> bool {
        sign_of(WeylElt::column(&w.inv, self.n, i - 1)) > 0
    }

    pub fn demazure_step(&self, w: &WeylElt, i: usize, side: Side) -> WeylElt {
        let up = match side {
            Side::Right => self.is_right_ascent(w, i),
            Side::Left => self.is_left_ascent(w, i),
        };
        if up {
            self.mul_simple(w, i, side)
        } else {
            w.clone()
        }
    }

    /// Demazure product `x * y`.
    pub fn demazure(&self, x: &WeylElt, y: &WeylElt) -> WeylElt {
        self.reduced_word(y)
            .into_iter()
            .fold(x.clone(), |w, i| self.demazure_step(&w, i, Side::Right))
    }

    pub fn mul(&self, x: &WeylElt, y: &WeylElt) -> WeylElt {
        WeylElt {
            fwd: matmul(&x.fwd, &y.fwd, self.n),
            inv: matmul(&y.inv, &x.inv, self.n),
        }
    }

    pub fn length(&self, w: &WeylElt) -> usize {
        let n = self.n;
        self.pos_coroots
            .iter()
            .filter(|v| {
                let image = (0..n).map(|r| (0..n).map(|c| w.fwd[r * n + c] * v[c]).sum::<i32>());
                sign_of(image) < 0
            })
            .count()
    }

    /// Reduced word `w = s_{i_1} ... s_{i_l}`, peeling left descents greedily.
    pub fn reduced_word(&self, w: &WeylElt) -> Vec<usize> {
        let mut word = Vec::new();
        let mut w = w.clone();
        while let Some(i) = (1..=self.n).find(|&i| !self.is_left_ascent(&w, i)) {
            w = self.mul_simple(&w, i, Side::Left);
            word.push(i);
        }
        word
    }

    /// Action on cocharacters.
    pub fn act(&self, w: &WeylElt, v: &[i64]) -> Cochar {
        let n = self.n;
        (0..n)
            .map(|r| (0..n).map(|c| w.fwd[r * n + c] as i64 * v[c]).sum())
            .collect()
    }

    /// `w . omega_k` in the fundamental weight basis.
    pub fn act_fundamental_weight(&self, w: &WeylElt, k: usize) -> Vec<i64> {
        let n = self.n;
        w.inv[(k - 1) * n..k * n]
            .iter()
            .map(|&x| x as i64)
            .collect()
    }

    /// `v -> -w0 . v`, which sends `alpha_i^vee` to `alpha_{i*}^vee`.
    pub fn star_coweight(&self, v: &[i64]) -> Cochar {
        self.act(&self.w0, v).into_iter().map(|x| -x).collect()
    }

    pub fn simple_coroot(&self, i: usize) -> Cochar {
        let mut v = vec![0; self.n];
        v[i - 1] = 1;
        v
    }

    /// `<alpha_i, v>`.
    pub fn pair_root(&self, i: usize, v: &[i64]) -> i64 {
        let n = self.n;
        (0..n)
            .map(|j| self.cartan[(i - 1) * n + j] as i64 * v[j])
            .sum()
    }

    pub fn all_elements(&self) -> Vec<WeylElt> {
        let mut seen = BTreeSet::from([self.identity()]);
        let mut queue = VecDeque::from([self.identity()]);
        while let Some(w) = queue.pop_front() {
            for i in 1..=self.n {
                let x = self.mul_simple(&w, i, Side::Right);
                if seen.insert(x.clone()) {
                    queue.push_back(x);
                }
            }
        }
        seen.into_iter().collect()
    }

    pub fn describe(&self, w: &WeylElt) -> String {
        let word = self.reduced_word(w);
        if word.is_empty() {
            return "id".to_string();
        }
        word.iter()
            .map(|i| alloc::format!("s{i}"))
            .collect::<Vec<_>>()
            .join("")
    }
}
