//! Double braid words and their Deodhar combinatorics.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::rootsys::{DynkinData, Side, WeylElt};

/// A word over `±I`. Positions are 1-based; position 0 is the left boundary.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DoubleWord {
    letters: Vec<i32>,
}

impl DoubleWord {
    pub fn new(letters: Vec<i32>) -> Self {
        DoubleWord { letters }
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Letter at 1-based position `c`.
    pub fn at(&self, c: usize) -> i32 {
        self.letters[c - 1]
    }

    pub fn check(&self, dy: &DynkinData) -> Result<()> {
        let rank = dy.rank();
        match self
            .letters
            .iter()
            .find(|&&l| l == 0 || l.unsigned_abs() as usize > rank)
        {
            Some(&letter) => Err(Error::BadLetter { letter, rank }),
            None => Ok(()),
        }
    }

    /// Letters `i_{c+1} .. i_m`.
    pub fn suffix(&self, c: usize) -> DoubleWord {
        DoubleWord::new(self.letters[c..].to_vec())
    }

    /// The chain-swap word with letters `-(i_c)*`.
    pub fn op_word(&self, dy: &DynkinData) -> DoubleWord {
        DoubleWord::new(self.letters.iter().map(|&l| -star_letter(dy, l)).collect())
    }

    /// Letterwise star.
    pub fn starred(&self, dy: &DynkinData) -> DoubleWord {
        DoubleWord::new(self.letters.iter().map(|&l| star_letter(dy, l)).collect())
    }
}

/// `i -> i*` extended to negative letters by `(-i)* = -(i*)`.
pub fn star_letter(dy: &DynkinData, l: i32) -> i32 {
    l.signum() * dy.star(l.unsigned_abs() as usize) as i32
}

pub fn node(l: i32) -> usize {
    l.unsigned_abs() as usize
}

impl fmt::Display for DoubleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, l) in self.letters.iter().enumerate() {
            if n > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for DoubleWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                let t = t.replace('\u{2212}', "-");
                match t.parse::<i32>() {
                    Ok(0) | Err(_) => Err(Error::Parse(t.to_string())),
                    Ok(l) => Ok(l),
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(DoubleWord::new)
    }
}

/// The Demazure product `s-_{i_m} * ... * s-_{i_1} * s+_{i_1} * ... * s+_{i_m}`.
pub fn demazure_pi(dy: &DynkinData, word: &DoubleWord) -> WeylElt {
    let mut w = dy.identity();
    for &l in word.letters() {
        if l > 0 {
            w = dy.demazure_step(&w, node(l), Side::Right);
        }
    }
    for &l in word.letters() {
        if l < 0 {
            w = dy.demazure_step(&w, node(l), Side::Left);
        }
    }
    w
}

/// Extend `word` by positive letters until its Demazure product is the
/// longest element (the smallest ascent is appended each time).
pub fn complete_to_longest(dy: &DynkinData, word: &DoubleWord) -> DoubleWord {
    let mut letters = word.letters().to_vec();
    let mut w = demazure_pi(dy, word);
    while let Some(i) = (1..=dy.rank()).find(|&i| dy.is_right_ascent(&w, i)) {
        w = dy.mul_simple(&w, i, Side::Right);
        letters.push(i as i32);
    }
    DoubleWord::new(letters)
}

/// `s- u s+` for the letter `l`.
fn twist(dy: &DynkinData, u: &WeylElt, l: i32) -> WeylElt {
    if l > 0 {
        dy.mul_simple(u, node(l), Side::Right)
    } else {
        dy.mul_simple(u, node(l), Side::Left)
    }
}

/// Whether `s- u s+` is longer than `u`.
fn twist_goes_up(dy: &DynkinData, u: &WeylElt, l: i32) -> bool {
    if l > 0 {
        dy.is_right_ascent(u, node(l))
    } else {
        dy.is_left_ascent(u, node(l))
    }
}

/// The positive distinguished subexpression and the solid/hollow split.
#[derive(Clone, Debug)]
pub struct Crossings {
    u: Vec<WeylElt>,
    solid: Vec<bool>,
    j: Vec<usize>,
    frozen: Vec<bool>,
}

impl Crossings {
    pub fn compute(dy: &DynkinData, word: &DoubleWord) -> Result<Crossings> {
        word.check(dy)?;
        if demazure_pi(dy, word) != *dy.w0() {
            return Err(Error::BadDemazure);
        }
        let m = word.len();
        let mut u = alloc::vec![dy.identity(); m + 1];
        u[m] = dy.w0().clone();
        let mut solid = alloc::vec![false; m + 1];
        for c in (1..=m).rev() {
            let l = word.at(c);
            if twist_goes_up(dy, &u[c], l) {
                solid[c] = true;
                u[c - 1] = u[c].clone();
            } else {
                u[c - 1] = twist(dy, &u[c], l);
            }
        }
        if !u[0].is_identity() {
            return Err(Error::InternalInconsistency(
                "u_0 is not the identity".into(),
            ));
        }
        let j: Vec<usize> = (1..=m).filter(|&c| solid[c]).collect();
        if j.len() != m - dy.n_pos_roots() {
            return Err(Error::InternalInconsistency(
                "|J| differs from m - l(w0)".into(),
            ));
        }
        let mut cr = Crossings {
            u,
            solid,
            j,
            frozen: Vec::new(),
        };
        cr.frozen =
            cr.j.iter()
                .map(|&e| !cr.aps(dy, word, e)[0].is_identity())
                .collect();
        Ok(cr)
    }

    /// `u_c` for `0 <= c <= m`.
    pub fn u(&self, c: usize) -> &WeylElt {
        &self.u[c]
    }

    /// `w_c = w0 u_c`.
    pub fn w(&self, dy: &DynkinData, c: usize) -> WeylElt {
        dy.mul(dy.w0(), &self.u[c])
    }

    pub fn m(&self) -> usize {
        self.u.len() - 1
    }

    pub fn is_solid(&self, c: usize) -> bool {
        self.solid[c]
    }

    /// The solid crossings in increasing order.
    pub fn solid(&self) -> &[usize] {
        &self.j
    }

    pub fn index_of(&self, c: usize) -> Option<usize> {
        self.j.binary_search(&c).ok()
    }

    pub fn is_frozen(&self, c: usize) -> bool {
        self.index_of(c).is_some_and(|x| self.frozen[x])
    }

    pub fn frozen_flags(&self) -> &[bool] {
        &self.frozen
    }

    /// The almost positive sequence `u<e>_0 .. u<e>_m`.
    pub fn aps(&self, dy: &DynkinData, word: &DoubleWord, e: usize) -> Vec<WeylElt> {
        let m = self.m();
        let mut v = self.u.clone();
        for c in (1..=e).rev() {
            let l = word.at(c);
            let up = twist_goes_up(dy, &v[c], l);
            v[c - 1] = if up == (c == e) {
                twist(dy, &v[c], l)
            } else {
                v[c].clone()
            };
        }
        debug_assert_eq!(v[m], *dy.w0());
        v
    }
}
