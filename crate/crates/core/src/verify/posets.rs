use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::order::FinitePoset;

/// Largest `n` for [`exhaustive_posets`]; there are 130023 labeled posets on 6 elements.
pub const MAX_EXHAUSTIVE: usize = 6;

/// Largest `n` for [`random_poset`].
pub const MAX_RANDOM: usize = 20;

/// Labels `a, b, c, …`.
pub fn letter_labels(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| {
            if i < 26 {
                char::from(b'a' + i as u8).to_string()
            } else {
                format!("x{i}")
            }
        })
        .collect()
}

/// All labeled posets on `n` elements, each exactly once, in generation order.
///
/// Every poset on `{0, …, n-1}` restricts to a unique poset on the first
/// `n-1` elements; the last element is then fixed by its strict down-set `D`
/// and strict up-set `U`, which must satisfy `d < u` for all `d ∈ D, u ∈ U`.
pub fn exhaustive_posets(n: usize) -> Result<Vec<FinitePoset>> {
    if n > MAX_EXHAUSTIVE {
        return Err(Error::CapExceeded {
            what: "exhaustive poset size",
            size: n,
            cap: MAX_EXHAUSTIVE,
        });
    }
    let mut relations: Vec<Vec<u64>> = vec![Vec::new()];
    for m in 0..n {
        let mut next = Vec::new();
        for above in &relations {
            extend_by_one(above, m, &mut next);
        }
        relations = next;
    }
    relations
        .into_iter()
        .map(|above| FinitePoset::from_relation(letter_labels(n), above))
        .collect()
}

fn extend_by_one(above: &[u64], m: usize, out: &mut Vec<Vec<u64>>) {
    let is_down = |d: u64| (0..m).all(|x| d >> x & 1 == 0 || (0..m).all(|y| d >> y & 1 == 1 || above[y] >> x & 1 == 0));
    let is_up = |u: u64| (0..m).all(|x| u >> x & 1 == 0 || above[x] & !u == 0);
    let subsets = 1u64 << m;
    let downs: Vec<u64> = (0..subsets).filter(|&d| is_down(d)).collect();
    let ups: Vec<u64> = (0..subsets).filter(|&u| is_up(u)).collect();
    for &d in &downs {
        for &u in &ups {
            if d & u != 0 {
                continue;
            }
            if (0..m).any(|x| d >> x & 1 == 1 && above[x] & u != u) {
                continue;
            }
            let mut rel: Vec<u64> = above.to_vec();
            for (x, row) in rel.iter_mut().enumerate() {
                if d >> x & 1 == 1 {
                    *row |= 1 << m;
                }
            }
            rel.push(1 << m | u);
            out.push(rel);
        }
    }
}

/// A reproducible random poset: shuffle the elements into a linear order,
/// then keep each compatible pair with probability one half.
pub fn random_poset(seed: u64, n: usize) -> Result<FinitePoset> {
    if n > MAX_RANDOM {
        return Err(Error::CapExceeded {
            what: "random poset size",
            size: n,
            cap: MAX_RANDOM,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(0.5) {
                pairs.push((order[i], order[j]));
            }
        }
    }
    FinitePoset::from_index_pairs(letter_labels(n), &pairs)
}
