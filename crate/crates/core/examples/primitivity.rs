// SPDX-License-Identifier: Apache-2.0

//! Primitivity by Whitehead minimization, and Nielsen's test in rank 2.

use whitehead::prelude::*;
use whitehead::verify::primitive_density;

fn main() {
    let w: Word = "ababa".parse().unwrap();
    let trace = whitehead_minimize(&w, 2).unwrap();
    println!("minimizing {w}:");
    for step in &trace.steps {
        println!("  {} -> length {}", step.aut, step.length);
    }
    println!("  final {} (primitive: {})", trace.final_word, is_primitive(&w, 2).unwrap());

    for text in ["aabb", "abAB", "abc", "aabcc"] {
        let w: Word = text.parse().unwrap();
        println!("{w} primitive in F_3: {}", is_primitive(&w, 3).unwrap());
    }

    // support restriction keeps large ambient ranks cheap
    let wide = Word::product(&(1..=12).map(|i| Word::gen_pow(i, 2)).collect::<Vec<_>>()).mul(&Word::gen(13));
    println!("{wide} primitive in F_13: {}", is_primitive(&wide, 13).unwrap());

    for (x, y) in [("a", "ab"), ("aab", "ab"), ("aa", "b")] {
        let (x, y): (Word, Word) = (x.parse().unwrap(), y.parse().unwrap());
        println!("{{{x}, {y}}} is a basis of F_2: {}", is_basis_pair_f2(&x, &y).unwrap());
    }

    println!("length\tprimitives\ttotal");
    for row in primitive_density(2, 6).unwrap() {
        println!("{}\t{}\t{}", row.length, row.primitives, row.total);
    }
}
