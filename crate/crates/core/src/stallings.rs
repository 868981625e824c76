// SPDX-License-Identifier: Apache-2.0

//! Stallings subgroup graphs.
//!
//! A finitely generated subgroup `H = <h_1, ..., h_k>` of `F_n` is represented
//! by the wedge of `k` labeled loops at a basepoint, folded until no vertex
//! has two equally labeled outgoing (or incoming) edges, then trimmed of
//! hanging trees. The result decides membership by path reading, and its
//! first Betti number is the rank of `H`.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::word::{Letter, Word};
use crate::Error;

/// A directed edge `from --label--> to`; read backwards it spells `e_label^-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub label: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupGraph {
    rank: u32,
    vertex_count: usize,
    basepoint: usize,
    edges: Vec<Edge>,
    folded: bool,
}

/// Two edges that a single fold would identify.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FoldCandidate {
    pub keep: usize,
    pub drop: usize,
}

impl SubgroupGraph {
    /// Folded, trimmed graph of `<gens>` in `F_rank`.
    pub fn build(gens: &[Word], rank: u32) -> Result<Self, Error> {
        let mut g = Self::wedge(gens, rank)?;
        g.fold();
        g.trim();
        Ok(g)
    }

    /// Unfolded bouquet of one loop per nonempty generator.
    pub fn wedge(gens: &[Word], rank: u32) -> Result<Self, Error> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        let mut g = SubgroupGraph { rank, vertex_count: 1, basepoint: 0, edges: Vec::new(), folded: false };
        for w in gens {
            w.check_rank(rank)?;
            let letters = w.letters();
            let mut cur = 0;
            for (k, &l) in letters.iter().enumerate() {
                let next = if k + 1 == letters.len() {
                    0
                } else {
                    g.vertex_count += 1;
                    g.vertex_count - 1
                };
                g.push_letter_edge(cur, next, l);
                cur = next;
            }
        }
        g.folded = g.find_fold_candidates().is_empty();
        Ok(g)
    }

    fn push_letter_edge(&mut self, from: usize, to: usize, l: Letter) {
        let label = l.generator();
        let e = if l.is_positive() { Edge { from, to, label } } else { Edge { from: to, to: from, label } };
        self.edges.push(e);
    }

    pub fn rank_of_ambient(&self) -> u32 {
        self.rank
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn basepoint(&self) -> usize {
        self.basepoint
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn is_folded(&self) -> bool {
        self.folded
    }

    /// Pairs of distinct edges sharing a label and their source, or their target.
    pub fn find_fold_candidates(&self) -> Vec<FoldCandidate> {
        let mut out_seen: HashMap<(usize, u32), usize> = HashMap::new();
        let mut in_seen: HashMap<(usize, u32), usize> = HashMap::new();
        let mut out = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            if let Some(&j) = out_seen.get(&(e.from, e.label)) {
                out.push(FoldCandidate { keep: j, drop: i });
            } else {
                out_seen.insert((e.from, e.label), i);
            }
            if let Some(&j) = in_seen.get(&(e.to, e.label)) {
                out.push(FoldCandidate { keep: j, drop: i });
            } else {
                in_seen.insert((e.to, e.label), i);
            }
        }
        out
    }

    /// Folds to a fixpoint, always taking the first candidate.
    pub fn fold(&mut self) {
        self.fold_by(|_| 0);
    }

    /// Folds to a fixpoint; `pick(k)` chooses which of the `k` current
    /// candidates to fold next (result taken modulo `k`).
    pub fn fold_by(&mut self, mut pick: impl FnMut(usize) -> usize) {
        loop {
            let candidates = self.find_fold_candidates();
            if candidates.is_empty() {
                break;
            }
            let c = candidates[pick(candidates.len()) % candidates.len()];
            self.apply_fold(c);
        }
        self.compact();
        self.folded = true;
    }

    fn apply_fold(&mut self, c: FoldCandidate) {
        let keep = self.edges[c.keep];
        let drop = self.edges[c.drop];
        // the endpoints that are not already shared get identified
        let (x, y) = if keep.from == drop.from { (keep.to, drop.to) } else { (keep.from, drop.from) };
        self.edges.swap_remove(c.drop);
        if x != y {
            let (survivor, gone) = if x == self.basepoint || (y != self.basepoint && x < y) { (x, y) } else { (y, x) };
            for e in &mut self.edges {
                if e.from == gone {
                    e.from = survivor;
                }
                if e.to == gone {
                    e.to = survivor;
                }
            }
        }
    }

    /// Renumbers vertices as visited by BFS from the basepoint, taking
    /// outgoing then incoming edges in label order; drops unreachable ids.
    fn compact(&mut self) {
        let order = self.bfs_order();
        let mut index = vec![usize::MAX; self.vertex_count];
        for (new, &old) in order.iter().enumerate() {
            index[old] = new;
        }
        self.edges.retain(|e| index[e.from] != usize::MAX);
        for e in &mut self.edges {
            e.from = index[e.from];
            e.to = index[e.to];
        }
        self.edges.sort();
        self.vertex_count = order.len();
        self.basepoint = 0;
    }

    fn bfs_order(&self) -> Vec<usize> {
        let mut adj: Vec<Vec<(i64, usize)>> = vec![Vec::new(); self.vertex_count];
        for e in &self.edges {
            adj[e.from].push((2 * e.label as i64, e.to));
            adj[e.to].push((2 * e.label as i64 + 1, e.from));
        }
        for list in &mut adj {
            list.sort();
        }
        let mut seen = vec![false; self.vertex_count];
        let mut order = vec![self.basepoint];
        seen[self.basepoint] = true;
        let mut queue = VecDeque::from([self.basepoint]);
        while let Some(v) = queue.pop_front() {
            for &(_, u) in &adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    order.push(u);
                    queue.push_back(u);
                }
            }
        }
        order
    }

    /// Degree with loops counting twice.
    fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for e in &self.edges {
            deg[e.from] += 1;
            deg[e.to] += 1;
        }
        deg
    }

    /// Removes hanging trees: non-basepoint vertices of degree at most 1,
    /// repeatedly.
    pub fn trim(&mut self) {
        loop {
            let deg = self.degrees();
            let leaves: Vec<usize> = (0..self.vertex_count).filter(|&v| v != self.basepoint && deg[v] <= 1).collect();
            if leaves.is_empty() {
                break;
            }
            let mut alive = vec![true; self.vertex_count];
            for v in leaves {
                alive[v] = false;
            }
            self.edges.retain(|e| alive[e.from] && alive[e.to]);
            // compact only renumbers reachable vertices, which drops the dead ones
            let before = self.vertex_count;
            let order: Vec<usize> = (0..before).filter(|&v| alive[v]).collect();
            let mut index = vec![usize::MAX; before];
            for (new, &old) in order.iter().enumerate() {
                index[old] = new;
            }
            for e in &mut self.edges {
                e.from = index[e.from];
                e.to = index[e.to];
            }
            self.basepoint = index[self.basepoint];
            self.vertex_count = order.len();
        }
        self.compact();
    }

    /// Checks the folded invariant by a scan: no two outgoing and no two
    /// incoming edges share a label at any vertex.
    pub fn satisfies_folded_invariant(&self) -> bool {
        self.find_fold_candidates().is_empty()
    }

    /// `transitions[v][l]` is the vertex reached from `v` by reading letter `l`.
    fn transitions(&self) -> Result<Vec<BTreeMap<i32, usize>>, Error> {
        if !self.folded {
            return Err(Error::NotFolded);
        }
        let mut t = vec![BTreeMap::new(); self.vertex_count];
        for e in &self.edges {
            t[e.from].insert(e.label as i32, e.to);
            t[e.to].insert(-(e.label as i32), e.from);
        }
        Ok(t)
    }

    /// Whether `w` lies in the subgroup: it must label a closed path at the
    /// basepoint.
    pub fn contains(&self, w: &Word) -> Result<bool, Error> {
        w.check_rank(self.rank)?;
        let t = self.transitions()?;
        let mut v = self.basepoint;
        for l in w.letters() {
            match t[v].get(&l.to_signed()) {
                Some(&u) => v = u,
                None => return Ok(false),
            }
        }
        Ok(v == self.basepoint)
    }

    /// First Betti number `E - V + 1`: the rank of the subgroup.
    pub fn subgroup_rank(&self) -> Result<usize, Error> {
        if !self.folded {
            return Err(Error::NotFolded);
        }
        Ok(self.edges.len() + 1 - self.vertex_count)
    }

    /// One vertex carrying a loop for each of `1..=rank` exactly once.
    pub fn is_rose(&self) -> bool {
        let mut labels: Vec<u32> = self.edges.iter().map(|e| e.label).collect();
        labels.sort_unstable();
        self.vertex_count == 1 && labels == (1..=self.rank).collect::<Vec<_>>()
    }

    /// Isomorphism-invariant form of a folded graph: vertex count and
    /// sorted edge list under BFS numbering from the basepoint.
    pub fn canonical_form(&self) -> (usize, Vec<Edge>) {
        let mut copy = self.clone();
        copy.compact();
        (copy.vertex_count, copy.edges)
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph subgroup {\n");
        for v in 0..self.vertex_count {
            if v == self.basepoint {
                let _ = writeln!(out, "  \"{v}\" [shape=doublecircle];");
            } else {
                let _ = writeln!(out, "  \"{v}\";");
            }
        }
        for e in &self.edges {
            let _ = writeln!(out, "  \"{}\" -> \"{}\" [label=\"{}\"];", e.from, e.to, e.label);
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> GraphDump {
        GraphDump {
            vertices: (0..self.vertex_count).collect(),
            edges: self.edges.iter().map(|e| (e.from, e.to, e.label)).collect(),
            basepoint: self.basepoint,
        }
    }
}

/// JSON form `{vertices, edges: [[from, to, label]], basepoint}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDump {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize, u32)>,
    pub basepoint: usize,
}

pub fn contains(g: &SubgroupGraph, w: &Word) -> Result<bool, Error> {
    g.contains(w)
}

/// Whether `gens` generate all of `F_rank`. For exactly `rank` generators
/// this certifies a basis, free groups being Hopfian.
pub fn generates_whole_group(gens: &[Word], rank: u32) -> Result<bool, Error> {
    Ok(SubgroupGraph::build(gens, rank)?.is_rose())
}
