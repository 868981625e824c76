// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeSet;

use proptest::prelude::*;
use whitehead::automorphism::{enumerate_kind2, SubsetMultiplier};
use whitehead::enumerate::{ball, cyclic_sphere, sphere};
use whitehead::primitivity::{is_primitive, whitehead_minimize};
use whitehead::whitehead_graph::WhiteheadGraph;
use whitehead::{Letter, Word};

/// Components of the loop-free graph after deleting `removed`.
fn components_without(g: &WhiteheadGraph, removed: Option<usize>) -> usize {
    let n = g.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for &(x, y) in g.edges() {
        let (i, j) = (g.vertex_index(x), g.vertex_index(y));
        if Some(i) == removed || Some(j) == removed {
            continue;
        }
        let (a, b) = (find(&mut parent, i), find(&mut parent, j));
        parent[a] = b;
    }
    (0..n).filter(|&v| Some(v) != removed).filter(|&v| find(&mut parent, v) == v).count()
}

fn brute_force_cut_vertices(g: &WhiteheadGraph) -> Vec<Letter> {
    let base = components_without(g, None);
    g.vertices().into_iter().filter(|&v| components_without(g, Some(g.vertex_index(v))) > base).collect()
}

#[test]
fn cut_vertices_match_brute_force_on_every_small_word() {
    let mut checked = 0usize;
    for rank in 1..=3u32 {
        let max_len = if rank == 3 { 7 } else { 8 };
        for w in ball(rank, max_len) {
            let g = WhiteheadGraph::build(&w, rank).unwrap();
            assert_eq!(g.cut_vertices(), brute_force_cut_vertices(&g), "{w}");
            assert_eq!(g.is_connected(), components_without(&g, None) == 1);
            checked += 1;
        }
    }
    // rank 3 length 8 sampled separately below to keep the run short
    for w in sphere(3, 8).into_iter().step_by(7) {
        let g = WhiteheadGraph::build(&w, 3).unwrap();
        assert_eq!(g.cut_vertices(), brute_force_cut_vertices(&g), "{w}");
        checked += 1;
    }
    assert!(checked > 100_000);
}

#[test]
fn edge_count_and_degree_sum() {
    for w in ball(3, 5) {
        let g = WhiteheadGraph::build(&w, 3).unwrap();
        assert_eq!(g.edge_count(), w.len());
        let degrees: usize = g.vertices().into_iter().map(|v| g.degree(v)).sum();
        assert_eq!(degrees, 2 * w.len());
        assert_eq!(g.vertex_count(), 6);
    }
}

#[test]
fn length_change_equals_cut_minus_degree() {
    // |σ(w)| - |w| = cut(A, A^c) - deg(a) for cyclically reduced w
    let auts = enumerate_kind2(3).unwrap();
    for len in 1..=5 {
        for w in cyclic_sphere(3, len) {
            let g = WhiteheadGraph::build(&w, 3).unwrap();
            for aut in &auts {
                let mut side = vec![false; g.vertex_count()];
                for &m in aut.members() {
                    side[g.vertex_index(m)] = true;
                }
                let predicted = g.cut_size(&side) as i64 - g.degree(aut.multiplier()) as i64;
                let actual = aut.apply(&w).cyclic_len() as i64 - w.len() as i64;
                assert_eq!(actual, predicted, "{w} under {:?}", aut);
            }
        }
    }
}

#[test]
fn every_kind2_map_has_an_enumerated_inverse() {
    let auts = enumerate_kind2(3).unwrap();
    let words = ball(3, 6);
    let gens: Vec<Word> = (1..=3).map(Word::gen).collect();
    for aut in &auts {
        let partner = auts
            .iter()
            .find(|cand| gens.iter().all(|g| &cand.apply(&aut.apply(g)) == g))
            .unwrap_or_else(|| panic!("no inverse for {aut:?}"));
        // identities have several descriptions, so compare actions
        let inverse = aut.inverse();
        assert!(auts.contains(&inverse));
        assert!(gens.iter().all(|g| partner.apply(g) == inverse.apply(g)));
        for w in &words {
            assert_eq!(&partner.apply(&aut.apply(w)), w);
        }
    }
}

#[test]
fn letter_images_fall_in_the_four_cases() {
    for aut in enumerate_kind2(3).unwrap() {
        let a = Word::letter(aut.multiplier());
        for x in whitehead::automorphism::letters_of_rank(3) {
            let xw = Word::letter(x);
            let image = aut.apply(&xw);
            let cases = [xw.clone(), xw.mul(&a), a.inverse().mul(&xw), Word::product([&a.inverse(), &xw, &a])];
            assert!(cases.contains(&image), "{x} ↦ {image}");
        }
    }
}

fn word(rank: u32, max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((1..=rank, any::<bool>()), 0..=max)
        .prop_map(|v| Word::reduce(v.into_iter().map(|(g, s)| Letter::new(g, s))))
}

fn kind2(rank: u32) -> impl Strategy<Value = SubsetMultiplier> {
    let all = enumerate_kind2(rank).unwrap();
    (0..all.len()).prop_map(move |i| all[i].clone())
}

proptest! {
    #[test]
    fn automorphisms_are_homomorphisms(aut in kind2(3), u in word(3, 10), v in word(3, 10)) {
        prop_assert_eq!(aut.apply(&u.mul(&v)), aut.apply(&u).mul(&aut.apply(&v)));
        prop_assert_eq!(aut.apply(&u.inverse()), aut.apply(&u).inverse());
        prop_assert_eq!(aut.inverse().apply(&aut.apply(&u)), u);
    }

    #[test]
    fn primitivity_is_conjugation_invariant(w in word(2, 7), g in word(2, 4)) {
        prop_assert_eq!(is_primitive(&w, 2).unwrap(), is_primitive(&w.conjugate_by(&g), 2).unwrap());
    }

    #[test]
    fn primitivity_is_automorphism_invariant(aut in kind2(3), w in word(3, 6)) {
        prop_assert_eq!(is_primitive(&w, 3).unwrap(), is_primitive(&aut.apply(&w), 3).unwrap());
    }

    #[test]
    fn traces_strictly_descend(w in word(3, 10)) {
        let trace = whitehead_minimize(&w, 3).unwrap();
        let mut last = w.cyclic_len();
        for step in &trace.steps {
            prop_assert!(step.length < last);
            last = step.length;
        }
        prop_assert_eq!(last, trace.final_len());
        prop_assert!(trace.final_word.is_cyclically_reduced());
    }
}

#[test]
fn primitive_cyclic_words_have_separable_graphs_rank2() {
    let mut branches = BTreeSet::new();
    for len in 1..=7 {
        for w in cyclic_sphere(2, len) {
            if is_primitive(&w, 2).unwrap() {
                let v = WhiteheadGraph::build(&w, 2).unwrap().find_cut_vertex();
                assert!(v.separable, "{w}");
                branches.insert(v.connected);
            }
        }
    }
    // both branches of the disjunction occur
    assert_eq!(branches.len(), 2);
}
