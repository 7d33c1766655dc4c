//! Valid words: exhaustive enumeration and seeded random sampling.

use braidseed::braidword::node;
use braidseed::rootsys::Side;
use braidseed::{demazure_pi, DoubleWord, DynkinData};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn letters(dy: &DynkinData) -> Vec<i32> {
    let r = dy.rank() as i32;
    (1..=r).chain((1..=r).map(|k| -k)).collect()
}

/// Every word of length exactly `len`, in lexicographic order of letter
/// indices (positive letters before negative ones).
pub fn all_words(dy: &DynkinData, len: usize) -> impl Iterator<Item = DoubleWord> {
    let letters = letters(dy);
    let total = letters.len().pow(len as u32);
    (0..total).map(move |mut x| {
        let mut w = vec![0; len];
        for slot in w.iter_mut().rev() {
            *slot = letters[x % letters.len()];
            x /= letters.len();
        }
        DoubleWord::new(w)
    })
}

/// Valid words (Demazure product `w0`) of every length up to `max_len`.
pub fn valid_words(dy: &DynkinData, max_len: usize) -> Vec<DoubleWord> {
    let top = dy.length(dy.w0());
    (top..=max_len)
        .flat_map(|len| all_words(dy, len))
        .filter(|w| demazure_pi(dy, w) == *dy.w0())
        .collect()
}

/// A random valid word of length `len >= l(w0)`: free letters while the
/// remaining budget allows, ascents of the Demazure product once it is tight.
pub fn valid_word(dy: &DynkinData, len: usize, rng: &mut impl Rng) -> DoubleWord {
    let r = dy.rank() as i32;
    let top = dy.length(dy.w0());
    assert!(len >= top, "a valid word needs at least {top} letters");
    let mut pos = dy.identity();
    let mut neg = dy.identity();
    let mut out = Vec::with_capacity(len);
    while out.len() < len {
        let pi = dy.demazure(&neg, &pos);
        let free = len - out.len() > top - dy.length(&pi);
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
        out.push(l);
    }
    DoubleWord::new(out)
}

/// A valid word whose length is uniform in `l(w0) ..= max_len`.
pub fn sample(dy: &DynkinData, max_len: usize, rng: &mut impl Rng) -> DoubleWord {
    let top = dy.length(dy.w0());
    let len = rng.random_range(top..=max_len.max(top));
    valid_word(dy, len, rng)
}

pub fn samples(dy: &DynkinData, count: usize, max_len: usize, seed: u64) -> Vec<DoubleWord> {
    let mut rng = rng(seed);
    (0..count).map(|_| sample(dy, max_len, &mut rng)).collect()
}
