// SPDX-License-Identifier: Apache-2.0

//! Whitehead graphs of words and their connectivity.
//!
//! The Whitehead graph of `a = u_1 ... u_k` in `F_n` has the `2n` letters as
//! vertices and one edge `u_i -- u_{i+1}^-1` for every cyclically adjacent
//! pair, wrap-around `u_k -- u_1^-1` included. A cyclically reduced primitive
//! element always has a *separable* Whitehead graph: disconnected, or with a
//! cut vertex.

use std::fmt::Write as _;

use crate::word::{Letter, Word};
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WhiteheadGraph {
    rank: u32,
    /// Unordered pairs; `(u, u)` is a loop.
    edges: Vec<(Letter, Letter)>,
}

/// Outcome of [`WhiteheadGraph::find_cut_vertex`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CutVertexVerdict {
    pub connected: bool,
    pub cut_vertex: Option<Letter>,
    /// `!connected || cut_vertex.is_some()`
    pub separable: bool,
}

impl WhiteheadGraph {
    pub fn build(a: &Word, rank: u32) -> Result<Self, Error> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        a.check_rank(rank)?;
        let letters = a.letters();
        let k = letters.len();
        let edges = (0..k).map(|i| (letters[i], letters[(i + 1) % k].inverse())).collect();
        Ok(WhiteheadGraph { rank, edges })
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn vertex_count(&self) -> usize {
        2 * self.rank as usize
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Letter, Letter)] {
        &self.edges
    }

    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|(u, v)| u == v).count()
    }

    /// Vertex order: `e1 .. en, e1^-1 .. en^-1`.
    pub fn vertices(&self) -> Vec<Letter> {
        let n = self.rank;
        (1..=n).map(|i| Letter::new(i, true)).chain((1..=n).map(|i| Letter::new(i, false))).collect()
    }

    pub fn vertex_index(&self, v: Letter) -> usize {
        let g = v.generator() as usize - 1;
        if v.is_positive() {
            g
        } else {
            self.rank as usize + g
        }
    }

    /// Degree with loops counting twice.
    pub fn degree(&self, v: Letter) -> usize {
        self.edges.iter().map(|&(x, y)| usize::from(x == v) + usize::from(y == v)).sum()
    }

    /// Number of edges with exactly one endpoint in `side` (indexed by
    /// [`vertex_index`](Self::vertex_index)).
    pub fn cut_size(&self, side: &[bool]) -> usize {
        self.edges.iter().filter(|&&(x, y)| side[self.vertex_index(x)] != side[self.vertex_index(y)]).count()
    }

    /// Loop-free adjacency lists, parallel edges collapsed.
    pub(crate) fn simple_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count()];
        for &(x, y) in &self.edges {
            let (i, j) = (self.vertex_index(x), self.vertex_index(y));
            if i != j && !adj[i].contains(&j) {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Number of connected components, isolated vertices included.
    pub fn component_count(&self) -> usize {
        let adj = self.simple_adjacency();
        let mut seen = vec![false; adj.len()];
        let mut count = 0;
        for start in 0..adj.len() {
            if seen[start] {
                continue;
            }
            count += 1;
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &u in &adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// All articulation points in vertex order (Hopcroft–Tarjan low-link).
    pub fn cut_vertices(&self) -> Vec<Letter> {
        let adj = self.simple_adjacency();
        let n = adj.len();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut is_cut = vec![false; n];
        let mut time = 0;

        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = time;
            low[root] = time;
            time += 1;
            let mut root_children = 0;
            // (vertex, parent, next neighbour position)
            let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
            while let Some(top) = stack.last_mut() {
                let (v, parent, pos) = *top;
                if pos < adj[v].len() {
                    top.2 += 1;
                    let u = adj[v][pos];
                    if u == parent {
                        continue;
                    }
                    if disc[u] == usize::MAX {
                        disc[u] = time;
                        low[u] = time;
                        time += 1;
                        if v == root {
                            root_children += 1;
                        }
                        stack.push((u, v, 0));
                    } else {
                        low[v] = low[v].min(disc[u]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[v]);
                        if parent != root && low[v] >= disc[parent] {
                            is_cut[parent] = true;
                        }
                    }
                }
            }
            if root_children > 1 {
                is_cut[root] = true;
            }
        }

        let verts = self.vertices();
        (0..n).filter(|&i| is_cut[i]).map(|i| verts[i]).collect()
    }

    pub fn find_cut_vertex(&self) -> CutVertexVerdict {
        let connected = self.is_connected();
        let cut_vertex = self.cut_vertices().first().copied();
        CutVertexVerdict { connected, cut_vertex, separable: !connected || cut_vertex.is_some() }
    }

    /// Undirected DOT multigraph; loops and parallel edges kept.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph whitehead {\n");
        for v in self.vertices() {
            let _ = writeln!(out, "  \"{}\";", v.label());
        }
        for &(x, y) in &self.edges {
            let _ = writeln!(out, "  \"{}\" -- \"{}\";", x.label(), y.label());
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(s: &str, rank: u32) -> WhiteheadGraph {
        WhiteheadGraph::build(&s.parse().unwrap(), rank).unwrap()
    }

    fn l(v: i32) -> Letter {
        Letter::from_signed(v).unwrap()
    }

    fn normalized(g: &WhiteheadGraph) -> Vec<(Letter, Letter)> {
        let mut e: Vec<_> = g.edges().iter().map(|&(x, y)| (x.min(y), x.max(y))).collect();
        e.sort();
        e
    }

    #[test]
    fn figure_one_word() {
        let g = graph("abbA", 2);
        let mut expected = vec![(l(1), l(-2)), (l(2), l(-2)), (l(2), l(1)), (l(-1), l(-1))];
        expected = expected.into_iter().map(|(x, y)| (x.min(y), x.max(y))).collect();
        expected.sort();
        assert_eq!(normalized(&g), expected);
        assert_eq!(g.loop_count(), 1);
        assert!(!g.is_connected());
        let verdict = g.find_cut_vertex();
        assert!(verdict.separable && !verdict.connected);
    }

    #[test]
    fn figure_two_word() {
        let g = graph("ababa", 2);
        let verdict = g.find_cut_vertex();
        assert!(verdict.connected);
        assert_eq!(verdict.cut_vertex, Some(l(1)));
        assert_eq!(g.cut_vertices(), vec![l(1), l(-1)]);
    }

    #[test]
    fn figure_three_word() {
        let g = graph("abba", 2);
        let mut expected = vec![(l(1), l(-2)), (l(2), l(-2)), (l(2), l(-1)), (l(1), l(-1))];
        expected = expected.into_iter().map(|(x, y)| (x.min(y), x.max(y))).collect();
        expected.sort();
        assert_eq!(normalized(&g), expected);
        let verdict = g.find_cut_vertex();
        assert_eq!(verdict, CutVertexVerdict { connected: true, cut_vertex: None, separable: false });
    }

    #[test]
    fn empty_and_single_letter() {
        let g = graph("", 2);
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.component_count(), 4);
        assert!(g.find_cut_vertex().separable);

        let g = graph("b", 2);
        assert_eq!(normalized(&g), vec![(l(-2), l(2))]);
        assert!(!g.is_connected());

        let g = graph("a", 1);
        assert!(g.is_connected());
        assert!(!g.find_cut_vertex().separable);
    }

    #[test]
    fn rank_violation_rejected() {
        assert!(WhiteheadGraph::build(&"abc".parse().unwrap(), 2).is_err());
        assert!(WhiteheadGraph::build(&Word::identity(), 0).is_err());
    }

    #[test]
    fn degree_sum_counts_loops_twice() {
        let g = graph("abbA", 2);
        let total: usize = g.vertices().into_iter().map(|v| g.degree(v)).sum();
        assert_eq!(total, 2 * 4);
    }

    #[test]
    fn dot_rendering() {
        let dot = graph("", 1).to_dot();
        assert_eq!(dot.matches(';').count(), 2);
        assert!(!dot.contains("--"));

        let dot = graph("abba", 2).to_dot();
        assert_eq!(dot.matches("--").count(), 4);
        assert_eq!(dot.lines().filter(|l| l.trim_end().ends_with("\";") && !l.contains("--")).count(), 4);

        let dot = graph("abbA", 2).to_dot();
        let loops = dot
            .lines()
            .filter(|line| {
                line.split(" -- ")
                    .map(|p| p.trim().trim_end_matches(';'))
                    .collect::<Vec<_>>()
                    .windows(2)
                    .any(|w| w[0] == w[1])
            })
            .count();
        assert_eq!(loops, 1);
        assert!(dot.contains("\"e1^-1\" -- \"e1^-1\";"));
    }
}
