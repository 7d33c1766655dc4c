#![allow(dead_code)]

use braidseed::braidword::node;
use braidseed::rootsys::Side;
use braidseed::{DoubleWord, DynkinData};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random valid word of length `len >= l(w0)`: free letters while the
/// budget allows, ascents of the Demazure product once it is tight.
pub fn valid_word(dy: &DynkinData, len: usize, rng: &mut impl Rng) -> DoubleWord {
    let r = dy.rank() as i32;
    let top = dy.length(dy.w0());
    assert!(len >= top);
    let mut pos = dy.identity();
    let mut neg = dy.identity();
    let mut letters = Vec::with_capacity(len);
    while letters.len() < len {
        let pi = dy.demazure(&neg, &pos);
        let free = len - letters.len() > top - dy.length(&pi);
        let l = loop {
            let i = rng.random_range(1..=r);
            let l = if rng.random_bool(0.5) { i } else { -i };
            let up = if l > 0 {
                dy.is_right_ascent(&pi, node(l))
            } else {
                dy.is_left_ascent(&pi, node(l))
            };
            if free || up {
                break l;
            }
        };
        if l > 0 {
            pos = dy.demazure_step(&pos, node(l), Side::Right);
        } else {
            neg = dy.demazure_step(&neg, node(l), Side::Left);
        }
        letters.push(l);
    }
    DoubleWord::new(letters)
}

/// A valid word with length drawn uniformly from `l(w0) ..= max_len`.
pub fn sample(dy: &DynkinData, max_len: usize, rng: &mut impl Rng) -> DoubleWord {
    let top = dy.length(dy.w0());
    let len = rng.random_range(top..=max_len.max(top));
    valid_word(dy, len, rng)
}

/// Every word over the letters of `dy` of length exactly `len`.
pub fn all_words(dy: &DynkinData, len: usize) -> impl Iterator<Item = DoubleWord> {
    let r = dy.rank() as i32;
    let letters: Vec<i32> = (1..=r).chain((1..=r).map(|k| -k)).collect();
    let total = letters.len().pow(len as u32);
    (0..total).map(move |mut x| {
        let mut w = Vec::with_capacity(len);
        for _ in 0..len {
            w.push(letters[x % letters.len()]);
            x /= letters.len();
        }
        DoubleWord::new(w)
    })
}
