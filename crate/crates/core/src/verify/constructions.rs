// SPDX-License-Identifier: Apache-2.0

//! Explicit word families used by the checks.

use std::collections::BTreeMap;

use crate::word::{Letter, Word};
use crate::Error;

/// `e1^2 en^2 · Π_{m=1}^{n-1} (e_m e_{m+1}^-1 e_m)`, of length `3n + 1`.
/// Its Whitehead graph contains the Hamiltonian circle
/// `e1 - e2 - ... - en - en^-1 - ... - e1^-1 - e1`.
pub fn build_w(rank: u32) -> Result<Word, Error> {
    if rank < 2 {
        return Err(Error::BelowMinimum { what: "rank", value: rank as u64, min: 2 });
    }
    let n = rank;
    let mut raw = vec![Letter::gen(1), Letter::gen(1), Letter::gen(n), Letter::gen(n)];
    for m in 1..n {
        raw.extend([Letter::gen(m), Letter::new(m + 1, false), Letter::gen(m)]);
    }
    Ok(Word::reduce(raw))
}

/// The `n²` words `w_ij = e_i · w · e_j`.
#[derive(Clone, Debug)]
pub struct WijFamily {
    rank: u32,
    w: Word,
    table: BTreeMap<(u32, u32), Word>,
}

impl WijFamily {
    pub fn new(rank: u32) -> Result<Self, Error> {
        let w = build_w(rank)?;
        let mut table = BTreeMap::new();
        for i in 1..=rank {
            for j in 1..=rank {
                table.insert((i, j), Word::product([&Word::gen(i), &w, &Word::gen(j)]));
            }
        }
        Ok(WijFamily { rank, w, table })
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn w(&self) -> &Word {
        &self.w
    }

    pub fn get(&self, i: u32, j: u32) -> &Word {
        &self.table[&(i, j)]
    }

    pub fn table(&self) -> &BTreeMap<(u32, u32), Word> {
        &self.table
    }

    /// Least `(i, j)` with `i` differing from the generator of the last
    /// letter of `a` and `j` from that of its first letter, so that
    /// `w_ij · a` is cyclically reduced without cancellation. `(1, 1)` for
    /// the identity.
    pub fn select(&self, a: &Word) -> (u32, u32) {
        let (Some(first), Some(last)) = (a.first(), a.last()) else {
            return (1, 1);
        };
        let l = first.generator();
        let r = last.generator();
        let i = (1..=self.rank).find(|&i| i != r).expect("rank >= 2");
        let j = (1..=self.rank).find(|&j| j != l).expect("rank >= 2");
        (i, j)
    }
}

/// `b_i = e_i e_{i+1}^2`.
pub fn b(i: u32) -> Word {
    Word::product([&Word::gen(i), &Word::gen_pow(i + 1, 2)])
}

/// `c_k = e1 e2^3 ... e_k^3 e_{k+1}^2`; `c_1 = e1 e2^2`.
pub fn c(k: u32) -> Word {
    let mut parts = vec![Word::gen(1)];
    for g in 2..=k {
        parts.push(Word::gen_pow(g, 3));
    }
    parts.push(Word::gen_pow(k + 1, 2));
    Word::product(&parts)
}

/// `e_from^3 e_{from+1}^3 ... e_to^3 e_{to+1}^2`; just `e_{to+1}^2` when
/// `from > to`.
pub fn cube_chain(from: u32, to: u32) -> Word {
    let mut parts: Vec<Word> = (from..=to).map(|g| Word::gen_pow(g, 3)).collect();
    parts.push(Word::gen_pow(to + 1, 2));
    Word::product(&parts)
}
