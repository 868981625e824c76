// SPDX-License-Identifier: Apache-2.0

//! Free reduction, cyclic reduction, conjugacy and the two text syntaxes.

use whitehead::Word;

fn main() {
    let w: Word = "abBAcaC".parse().unwrap();
    println!("reduced: {w}");

    let u: Word = "ab^3".parse().unwrap();
    let v: Word = "-2 -2 1".parse().unwrap();
    println!("{u} * {v} = {}", u.mul(&v));
    println!("inverse of {u}: {}", u.inverse());
    println!("numeric form of {u}: {}", u.to_numeric());

    let x: Word = "cabbaC".parse().unwrap();
    let (core, conjugator) = x.cyclically_reduce();
    println!("{x} = {} . {} . {}", conjugator, core.representative(), conjugator.inverse());
    println!("{x} conjugate to baab: {}", x.is_conjugate_to(&"baab".parse().unwrap()));
    println!("[a, b] = {}", Word::gen(1).commutator(&Word::gen(2)));

    // past 26 generators only the numeric syntax applies
    let big = Word::gen(30).mul(&Word::gen(1).inverse());
    println!("{big}");
}
