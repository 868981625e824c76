// SPDX-License-Identifier: Apache-2.0

//! Whitehead automorphisms: building, applying, inverting, enumerating.

use whitehead::automorphism::enumerate_permutations;
use whitehead::prelude::*;

fn main() {
    let a = Letter::gen(1);
    let b = Letter::gen(2);
    let sigma = SubsetMultiplier::new(a, [a, b]).unwrap();
    let w: Word = "bab".parse().unwrap();
    let image = sigma.apply(&w);
    println!("{} sends {w} to {image}", WhiteheadAut::from(sigma.clone()));
    println!("inverse {} sends it back to {}", WhiteheadAut::from(sigma.inverse()), sigma.inverse().apply(&image));

    let swap = SignedPermutation::new(vec![b, a.inverse()]).unwrap();
    println!("{} sends {w} to {}", WhiteheadAut::from(swap.clone()), swap.apply(&w).unwrap());

    for rank in 1..=4 {
        println!(
            "rank {rank}: {} subset multipliers, {} signed permutations",
            enumerate_kind2(rank).unwrap().len(),
            enumerate_permutations(rank).unwrap().len()
        );
    }
    println!("{}", serde_json::to_string(&WhiteheadAut::from(sigma)).unwrap());
}
