// SPDX-License-Identifier: Apache-2.0

//! Whitehead graphs, cut vertices and DOT export.

use whitehead::prelude::*;

fn main() {
    for text in ["ababa", "aabb", "abAB", "aaa"] {
        let w: Word = text.parse().unwrap();
        let g = WhiteheadGraph::build(&w, 2).unwrap();
        let verdict = g.find_cut_vertex();
        let cut = verdict.cut_vertex.map(|v| v.label()).unwrap_or_else(|| "none".into());
        println!(
            "{w}: {} edges, connected={}, cut vertex={cut}, separable={}",
            g.edge_count(),
            verdict.connected,
            verdict.separable
        );
    }

    let g = WhiteheadGraph::build(&"abcABC".parse().unwrap(), 3).unwrap();
    print!("{}", g.to_dot());
}
