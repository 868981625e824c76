// SPDX-License-Identifier: Apache-2.0

//! Primitivity testing by Whitehead length minimization.
//!
//! A word is primitive in `F_n` iff kind 2 Whitehead automorphisms can bring
//! its cyclic length down to 1. By peak reduction, any non-minimal cyclic
//! word admits a kind 2 map strictly shortening it, so greedy descent
//! reaches the orbit minimum.
//!
//! Two searches find the next shortening map:
//!
//! * [`SearchStrategy::Enumerate`] walks kind 2 maps in enumeration order and
//!   takes the first improvement. Maps whose multiplier does not occur in the
//!   word cannot shorten it, and membership patterns on absent generators do
//!   not change the image, so only the word's support is enumerated; the
//!   first improving map is the same as in the full enumeration.
//! * [`SearchStrategy::MinCut`] uses the Whitehead graph: for `(A, a)` the
//!   cyclic length changes by `cut(A, A^c) - deg(a)`, so for each multiplier
//!   the best `A` is a minimum `a`/`a^-1` cut. Polynomial in the rank.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::automorphism::{enumerate_kind2, enumerate_permutations, multipliers_over, SubsetMultiplier, WhiteheadAut};
use crate::whitehead_graph::WhiteheadGraph;
use crate::word::{CyclicWord, Letter, Word};
use crate::{check_cap, Error};

/// Largest rank accepted by the minimizer.
pub const MAX_MINIMIZE_RANK: u32 = 64;

/// Largest support size for which [`SearchStrategy::Auto`] enumerates.
pub const ENUMERATION_SUPPORT_LIMIT: usize = 8;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SearchStrategy {
    /// Enumerate when the support has at most
    /// [`ENUMERATION_SUPPORT_LIMIT`] generators, else min cut.
    #[default]
    Auto,
    Enumerate,
    MinCut,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimizationStep {
    pub aut: WhiteheadAut,
    /// Cyclic length after applying `aut`.
    pub length: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimizationTrace {
    pub start: Word,
    pub steps: Vec<MinimizationStep>,
    #[serde(rename = "final")]
    pub final_word: Word,
}

impl MinimizationTrace {
    pub fn final_cyclic(&self) -> CyclicWord {
        self.final_word.cyclically_reduce().0
    }

    pub fn final_len(&self) -> usize {
        self.final_word.len()
    }
}

pub fn whitehead_minimize(w: &Word, rank: u32) -> Result<MinimizationTrace, Error> {
    whitehead_minimize_with(w, rank, SearchStrategy::Auto)
}

pub fn whitehead_minimize_with(w: &Word, rank: u32, strategy: SearchStrategy) -> Result<MinimizationTrace, Error> {
    if rank == 0 {
        return Err(Error::ZeroRank);
    }
    check_cap("rank", rank as u64, MAX_MINIMIZE_RANK as u64)?;
    w.check_rank(rank)?;

    let mut current = w.cyclically_reduce().0.into_word();
    let mut steps = Vec::new();
    loop {
        let support = support(&current);
        let use_enum = match strategy {
            SearchStrategy::Enumerate => true,
            SearchStrategy::MinCut => false,
            SearchStrategy::Auto => support.len() <= ENUMERATION_SUPPORT_LIMIT,
        };
        let found = if use_enum {
            if strategy == SearchStrategy::Enumerate {
                check_cap("support size", support.len() as u64, ENUMERATION_SUPPORT_LIMIT as u64)?;
            }
            first_reducing_by_enumeration(&current, &support)
        } else {
            first_reducing_by_min_cut(&current, rank, &support)
        };
        match found {
            Some((aut, next)) => {
                steps.push(MinimizationStep { aut: aut.into(), length: next.len() });
                current = next;
            }
            None => break,
        }
    }
    Ok(MinimizationTrace { start: w.clone(), steps, final_word: current })
}

/// Sorted generator indices occurring in `w`.
fn support(w: &Word) -> Vec<u32> {
    let set: BTreeSet<u32> = w.letters().iter().map(|l| l.generator()).collect();
    set.into_iter().collect()
}

fn first_reducing_by_enumeration(w: &Word, support: &[u32]) -> Option<(SubsetMultiplier, Word)> {
    let len = w.len();
    for &g in support {
        let others: Vec<u32> = support.iter().copied().filter(|&h| h != g).collect();
        for a in [Letter::new(g, true), Letter::new(g, false)] {
            for aut in multipliers_over(a, &others) {
                let image = aut.apply(w).cyclically_reduce().0.into_word();
                if image.len() < len {
                    return Some((aut, image));
                }
            }
        }
    }
    None
}

fn first_reducing_by_min_cut(w: &Word, rank: u32, support: &[u32]) -> Option<(SubsetMultiplier, Word)> {
    let graph = WhiteheadGraph::build(w, rank).ok()?;
    let n = graph.vertex_count();
    let mut capacity = vec![vec![0u32; n]; n];
    for &(x, y) in graph.edges() {
        let (i, j) = (graph.vertex_index(x), graph.vertex_index(y));
        if i != j {
            capacity[i][j] += 1;
            capacity[j][i] += 1;
        }
    }
    let len = w.len();
    for &g in support {
        for a in [Letter::new(g, true), Letter::new(g, false)] {
            let s = graph.vertex_index(a);
            let t = graph.vertex_index(a.inverse());
            let degree = graph.degree(a);
            let (flow, source_side) = min_cut(&capacity, s, t);
            if flow as usize >= degree {
                continue;
            }
            let verts = graph.vertices();
            let members = (0..n).filter(|&i| source_side[i]).map(|i| verts[i]);
            let aut = SubsetMultiplier::new(a, members).expect("source side holds a but not a^-1");
            let image = aut.apply(w).cyclically_reduce().0.into_word();
            debug_assert_eq!(image.len() + degree, len + flow as usize);
            if image.len() < len {
                return Some((aut, image));
            }
        }
    }
    None
}

/// Edmonds–Karp maximum flow; returns the flow value and the vertices
/// reachable from `s` in the final residual graph.
fn min_cut(capacity: &[Vec<u32>], s: usize, t: usize) -> (u32, Vec<bool>) {
    let n = capacity.len();
    let mut residual: Vec<Vec<i64>> = capacity.iter().map(|row| row.iter().map(|&c| c as i64).collect()).collect();
    let mut flow = 0u32;
    loop {
        let mut prev = vec![usize::MAX; n];
        prev[s] = s;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            if v == t {
                break;
            }
            for u in 0..n {
                if prev[u] == usize::MAX && residual[v][u] > 0 {
                    prev[u] = v;
                    queue.push_back(u);
                }
            }
        }
        if prev[t] == usize::MAX {
            let reachable = prev.iter().map(|&p| p != usize::MAX).collect();
            return (flow, reachable);
        }
        let mut bottleneck = i64::MAX;
        let mut v = t;
        while v != s {
            bottleneck = bottleneck.min(residual[prev[v]][v]);
            v = prev[v];
        }
        let mut v = t;
        while v != s {
            residual[prev[v]][v] -= bottleneck;
            residual[v][prev[v]] += bottleneck;
            v = prev[v];
        }
        flow += bottleneck as u32;
    }
}

/// Whether `w` belongs to some basis of `F_rank`. The identity is not primitive.
pub fn is_primitive(w: &Word, rank: u32) -> Result<bool, Error> {
    let trace = whitehead_minimize(w, rank)?;
    Ok(trace.final_len() == 1)
}

/// Nielsen's criterion: `a, b` form a basis of `F_2` iff `[a, b]` is
/// conjugate to `[e1, e2]` or to `[e2, e1]`.
pub fn is_basis_pair_f2(a: &Word, b: &Word) -> Result<bool, Error> {
    a.check_rank(2)?;
    b.check_rank(2)?;
    let c = a.commutator(b);
    let e1 = Word::gen(1);
    let e2 = Word::gen(2);
    Ok(c.is_conjugate_to(&e1.commutator(&e2)) || c.is_conjugate_to(&e2.commutator(&e1)))
}

pub const ORACLE_MAX_RANK: u32 = 3;
pub const ORACLE_MAX_LEN: usize = 10;

/// Every primitive word of length at most `max_len`, by closing the
/// generators under all Whitehead automorphisms without ever leaving the
/// length cap. Independent of the minimizer; meant for cross-checking.
pub fn primitive_orbit_oracle(rank: u32, max_len: usize) -> Result<BTreeSet<Word>, Error> {
    if rank == 0 {
        return Err(Error::ZeroRank);
    }
    check_cap("rank", rank as u64, ORACLE_MAX_RANK as u64)?;
    check_cap("length", max_len as u64, ORACLE_MAX_LEN as u64)?;

    let mut auts: Vec<WhiteheadAut> = enumerate_permutations(rank)?.into_iter().map(Into::into).collect();
    auts.extend(enumerate_kind2(rank)?.into_iter().filter(|m| !m.is_identity()).map(Into::into));

    let mut seen: BTreeSet<Word> = BTreeSet::new();
    if max_len == 0 {
        return Ok(seen);
    }
    let mut frontier: Vec<Word> = crate::automorphism::letters_of_rank(rank).map(Word::letter).collect();
    seen.extend(frontier.iter().cloned());
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for w in &frontier {
            for aut in &auts {
                let image = aut.apply(w)?;
                if image.len() <= max_len && !seen.contains(&image) {
                    seen.insert(image.clone());
                    next.push(image);
                }
            }
        }
        frontier = next;
    }
    Ok(seen)
}
