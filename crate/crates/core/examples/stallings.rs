// SPDX-License-Identifier: Apache-2.0

//! Folded subgroup graphs: membership, rank, and whether a set generates.

use whitehead::prelude::*;

fn parse(words: &[&str]) -> Vec<Word> {
    words.iter().map(|s| s.parse().unwrap()).collect()
}

fn main() {
    let gens = parse(&["abb", "bcc"]);
    let g = SubgroupGraph::build(&gens, 3).unwrap();
    println!(
        "<abb, bcc>: {} vertices, {} edges, rank {}",
        g.vertex_count(),
        g.edges().len(),
        g.subgroup_rank().unwrap()
    );
    for probe in ["abbbcc", "a", "BBA", "abbcc"] {
        println!("  contains {probe}: {}", g.contains(&probe.parse().unwrap()).unwrap());
    }

    let redundant = parse(&["ab", "ba", "abba"]);
    let g = SubgroupGraph::build(&redundant, 2).unwrap();
    println!("<ab, ba, abba> has rank {}", g.subgroup_rank().unwrap());

    println!("<abb, b> = F_2: {}", generates_whole_group(&parse(&["abb", "b"]), 2).unwrap());
    println!("<aa, b> = F_2: {}", generates_whole_group(&parse(&["aa", "b"]), 2).unwrap());

    let g = SubgroupGraph::build(&parse(&["aba", "bb"]), 2).unwrap();
    print!("{}", g.to_dot());
}
