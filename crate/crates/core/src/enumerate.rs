// SPDX-License-Identifier: Apache-2.0

//! Exhaustive enumeration of balls in the Cayley graph of `F_n`.

use crate::automorphism::letters_of_rank;
use crate::word::{Letter, Word};

/// Number of reduced words of length exactly `len` in rank `n`:
/// `1` for the empty word, else `2n (2n-1)^(len-1)`.
pub fn sphere_size(rank: u32, len: u32) -> u64 {
    if len == 0 {
        return 1;
    }
    let n = rank as u64;
    2 * n * (2 * n - 1).pow(len - 1)
}

pub fn ball_size(rank: u32, max_len: u32) -> u64 {
    (0..=max_len).map(|k| sphere_size(rank, k)).sum()
}

/// All reduced words of length exactly `len`, in lexicographic order over
/// the letter order `e1, e1^-1, e2, e2^-1, ...`.
pub fn sphere(rank: u32, len: usize) -> Vec<Word> {
    let alphabet: Vec<Letter> = letters_of_rank(rank).collect();
    let mut layer: Vec<Vec<Letter>> = vec![vec![]];
    for _ in 0..len {
        let mut next = Vec::with_capacity(layer.len() * alphabet.len());
        for prefix in &layer {
            for &l in &alphabet {
                if prefix.last().is_some_and(|&p| p.is_inverse_of(l)) {
                    continue;
                }
                let mut v = prefix.clone();
                v.push(l);
                next.push(v);
            }
        }
        layer = next;
    }
    layer.into_iter().map(Word::reduce).collect()
}

/// All reduced words of length at most `max_len`, shortest first.
pub fn ball(rank: u32, max_len: usize) -> Vec<Word> {
    (0..=max_len).flat_map(|k| sphere(rank, k)).collect()
}

/// Cyclically reduced words of length exactly `len`.
pub fn cyclic_sphere(rank: u32, len: usize) -> Vec<Word> {
    sphere(rank, len).into_iter().filter(|w| w.is_cyclically_reduced()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_match_counting_formula() {
        assert_eq!(ball_size(2, 4), 161);
        assert_eq!(ball(2, 4).len(), 161);
        assert_eq!(ball(3, 3).len() as u64, ball_size(3, 3));
        assert_eq!(ball_size(2, 8), 13_121);
        assert_eq!(sphere(2, 2).len(), 12);
    }

    #[test]
    fn sphere_words_are_distinct_and_reduced() {
        let words = sphere(3, 4);
        let set: std::collections::HashSet<_> = words.iter().collect();
        assert_eq!(set.len(), words.len());
        assert!(words.iter().all(|w| w.len() == 4 && w.is_reduced()));
    }
}
