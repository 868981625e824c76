// SPDX-License-Identifier: Apache-2.0

//! Batch verification reports and the chain constructions they check.

use whitehead::prelude::*;
use whitehead::verify::{b, run_all, run_claim, Claim, ClaimParams, WijFamily};

fn main() {
    let family = WijFamily::new(2).unwrap();
    println!("w = {}", family.w());
    for (i, j) in [(1, 1), (1, 2), (2, 1)] {
        let wij = family.get(i, j);
        println!("w_{i}{j} = {wij} (primitive: {})", is_primitive(wij, 2).unwrap());
    }

    let bs: Vec<Word> = (1..=4).map(b).collect();
    let g = SubgroupGraph::build(&bs, 5).unwrap();
    println!("<b_1..b_4>: rank {}, contains a: {}", g.subgroup_rank().unwrap(), g.contains(&Word::gen(1)).unwrap());

    let params = ClaimParams { rank: Some(2), max_len: Some(4), ..ClaimParams::default() };
    for report in run_claim(Claim::Npbig, &params).unwrap() {
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    }

    for report in run_all(&ClaimParams::default()).unwrap() {
        println!("{}", report.summary());
    }
}
