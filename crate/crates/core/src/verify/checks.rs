// SPDX-License-Identifier: Apache-2.0

//! Exhaustive desk-scale checks, one function per claim.

use serde::{Deserialize, Serialize};

use super::constructions::{b, c, cube_chain, WijFamily};
use super::report::VerificationReport;
use crate::enumerate::{ball, cyclic_sphere, sphere};
use crate::primitivity::{is_basis_pair_f2, is_primitive, primitive_orbit_oracle, whitehead_minimize};
use crate::stallings::{generates_whole_group, SubgroupGraph};
use crate::whitehead_graph::WhiteheadGraph;
use crate::word::Word;
use crate::{check_cap, Error};

pub const NPBIG_MAX_LEN: usize = 6;
pub const FACT1_MAX_RANK: u32 = 4;
pub const FACT1_MAX_EXPONENT: u32 = 3;
pub const SECTION3_MAX_TRUNCATION: u32 = 10;
pub const NIELSEN_MAX_LEN: usize = 6;
pub const SWEEP_MAX_RANK: u32 = 3;
pub const SWEEP_MAX_LEN: usize = 10;
pub const DENSITY_MAX_LEN: usize = 8;

fn check_npbig_params(rank: u32, max_len: usize) -> Result<(), Error> {
    if !(2..=3).contains(&rank) {
        return Err(Error::CapExceeded { what: "rank (must be 2 or 3)", value: rank as u64, cap: 3 });
    }
    check_cap("length", max_len as u64, NPBIG_MAX_LEN as u64)
}

/// For every `a` in the ball, the selected `w_ij · a` is cyclically reduced,
/// has a connected Whitehead graph without cut vertex, and is not primitive.
pub fn verify_npbig(rank: u32, max_len: usize) -> Result<VerificationReport, Error> {
    check_npbig_params(rank, max_len)?;
    let family = WijFamily::new(rank)?;
    let mut report = VerificationReport::new("npbig").param("rank", rank).param("max_len", max_len as u64);
    for a in ball(rank, max_len) {
        report.stats.words_checked += 1;
        let (i, j) = family.select(&a);
        let word = family.get(i, j).mul(&a);
        let describe = |why: &str| format!("{a} (w_{i}{j}·a = {word}): {why}");
        if !word.is_cyclically_reduced() || word.len() != family.get(i, j).len() + a.len() {
            report.fail(describe("not cyclically reduced without cancellation"));
            continue;
        }
        let verdict = WhiteheadGraph::build(&word, rank)?.find_cut_vertex();
        report.expect(!verdict.separable, || describe("Whitehead graph is separable"));
        report.expect(!is_primitive(&word, rank)?, || describe("primitive"));
    }
    Ok(report.finish())
}

/// Every `a` in the ball lies in some translate `w_ij^-1 N` of the
/// non-primitives. Records how many of the `n²` translates cover each word.
pub fn verify_fincov(rank: u32, max_len: usize) -> Result<VerificationReport, Error> {
    check_npbig_params(rank, max_len)?;
    let family = WijFamily::new(rank)?;
    let mut report = VerificationReport::new("fincov").param("rank", rank).param("max_len", max_len as u64);
    for a in ball(rank, max_len) {
        report.stats.words_checked += 1;
        let mut multiplicity = 0;
        for wij in family.table().values() {
            if !is_primitive(&wij.mul(&a), rank)? {
                multiplicity += 1;
            }
        }
        report.bump(&format!("multiplicity_{multiplicity:02}"));
        report.expect(multiplicity > 0, || format!("{a}: covered by no translate"));
    }
    Ok(report.finish())
}

/// `e1^k1 ... em^km` with every `k_i ∈ [2, max_k]` is not primitive and its
/// minimization trace is empty, for every ambient rank up to `rank` and
/// every `m ≤ min(max_m, rank)`.
pub fn verify_fact1(rank: u32, max_m: u32, max_k: u32) -> Result<VerificationReport, Error> {
    if rank == 0 {
        return Err(Error::ZeroRank);
    }
    check_cap("rank", rank as u64, FACT1_MAX_RANK as u64)?;
    check_cap("exponent", max_k as u64, FACT1_MAX_EXPONENT as u64)?;
    if max_k < 2 {
        return Err(Error::BelowMinimum { what: "exponent", value: max_k as u64, min: 2 });
    }
    let mut report = VerificationReport::new("fact1").param("rank", rank).param("max_m", max_m).param("max_k", max_k);
    for n in 1..=rank {
        for m in 1..=max_m.min(n) {
            for exponents in exponent_tuples(m as usize, 2, max_k) {
                let parts: Vec<Word> =
                    exponents.iter().enumerate().map(|(i, &k)| Word::gen_pow(i as u32 + 1, k as i32)).collect();
                let word = Word::product(&parts);
                report.stats.words_checked += 1;
                let trace = whitehead_minimize(&word, n)?;
                report.expect(trace.steps.is_empty(), || {
                    format!("{word} in F_{n}: a Whitehead automorphism shortens it")
                });
                report.expect(trace.final_len() != 1, || format!("{word} in F_{n}: primitive"));
            }
        }
    }
    Ok(report.finish())
}

fn exponent_tuples(m: usize, lo: u32, hi: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|t: Vec<u32>| {
                (lo..=hi).map(move |k| {
                    let mut t = t.clone();
                    t.push(k);
                    t
                })
            })
            .collect();
    }
    out
}

fn check_truncation(n: u32) -> Result<(), Error> {
    if n < 2 {
        return Err(Error::BelowMinimum { what: "truncation", value: n as u64, min: 2 });
    }
    check_cap("truncation", n as u64, SECTION3_MAX_TRUNCATION as u64)
}

fn b_list(count: u32) -> Vec<Word> {
    (1..=count).map(b).collect()
}

fn claim_i_checks(report: &mut VerificationReport, truncation: u32) -> Result<(), Error> {
    for n in 1..=truncation {
        // product identity
        let product = Word::product(&b_list(n + 1));
        let expected = Word::product([&Word::gen(1), &cube_chain(2, n + 1)]);
        report.stats.words_checked += 1;
        report.expect(product == expected, || format!("n={n}: b1…b{} = {product}", n + 1));

        // <b_1..b_n, e_{n+1}> = F_{n+1}
        let mut gens = b_list(n);
        gens.push(Word::gen(n + 1));
        report.expect(generates_whole_group(&gens, n + 1)?, || {
            format!("n={n}: <b_1..b_{n}, e{}> is not F_{}", n + 1, n + 1)
        });

        // e1 ∉ <b_1..b_n>, freely generated
        let graph = SubgroupGraph::build(&b_list(n), n + 1)?;
        report.expect(!graph.contains(&Word::gen(1))?, || format!("N={n}: e1 ∈ <b_1..b_{n}>"));
        report.expect(graph.subgroup_rank()? == n as usize, || {
            format!("N={n}: <b_1..b_{n}> has rank {}", graph.subgroup_rank().unwrap_or(0))
        });

        // e1^-1 b_1…b_{n+1} is not primitive
        let witness = cube_chain(2, n + 1);
        report.stats.words_checked += 1;
        report.expect(witness == Word::gen(1).inverse().mul(&product), || {
            format!("n={n}: e1^-1 b1…b{} ≠ {witness}", n + 1)
        });
        report.expect(!is_primitive(&witness, n + 2)?, || format!("{witness} is primitive in F_{}", n + 2));
    }
    Ok(())
}

fn claim_ii_checks(report: &mut VerificationReport, truncation: u32) -> Result<(), Error> {
    for n in 1..=truncation {
        let witness = Word::gen_pow(n + 2, 2);
        report.stats.words_checked += 1;
        report.expect(Word::gen(n + 1).inverse().mul(&b(n + 1)) == witness, || {
            format!("n={n}: e{}^-1 b{} ≠ {witness}", n + 1, n + 1)
        });
        report.expect(!is_primitive(&witness, n + 2)?, || format!("{witness} is primitive in F_{}", n + 2));
    }
    Ok(())
}

fn lemma38_checks(report: &mut VerificationReport, truncation: u32) -> Result<(), Error> {
    for n in 1..=truncation {
        let mut gens: Vec<Word> = (1..=n).map(c).collect();
        gens.push(Word::gen(n + 1));
        report.stats.words_checked += 1;
        report.expect(generates_whole_group(&gens, n + 1)?, || {
            format!("n={n}: <c_1..c_{n}, e{}> is not F_{}", n + 1, n + 1)
        });

        let witness = Word::gen(1).inverse().mul(&c(n));
        report.expect(witness == cube_chain(2, n), || format!("n={n}: e1^-1 c_{n} = {witness}"));
        report.expect(!is_primitive(&witness, n + 1)?, || format!("{witness} is primitive in F_{}", n + 1));
    }
    Ok(())
}

/// Claim I at truncation: product identity, generation of `F_{n+1}`, `e1`
/// outside `<b_1..b_n>`, rank `n`, and the non-primitive witness.
pub fn verify_claim_i(truncation: u32) -> Result<VerificationReport, Error> {
    check_truncation(truncation)?;
    let mut report = VerificationReport::new("claimI").param("truncation", truncation);
    claim_i_checks(&mut report, truncation)?;
    Ok(report.finish())
}

pub fn verify_claim_ii(truncation: u32) -> Result<VerificationReport, Error> {
    check_truncation(truncation)?;
    let mut report = VerificationReport::new("claimII").param("truncation", truncation);
    claim_ii_checks(&mut report, truncation)?;
    Ok(report.finish())
}

pub fn verify_lemma38(truncation: u32) -> Result<VerificationReport, Error> {
    check_truncation(truncation)?;
    let mut report = VerificationReport::new("lemma38").param("truncation", truncation);
    lemma38_checks(&mut report, truncation)?;
    Ok(report.finish())
}

/// All of Claim I, Claim II and the `c_k` family in one report.
pub fn verify_section3(truncation: u32) -> Result<VerificationReport, Error> {
    check_truncation(truncation)?;
    let mut report = VerificationReport::new("section3").param("truncation", truncation);
    claim_i_checks(&mut report, truncation)?;
    claim_ii_checks(&mut report, truncation)?;
    lemma38_checks(&mut report, truncation)?;
    Ok(report.finish())
}

/// Over all pairs in `F_2` with `|a| + |b| ≤ max_pair_len`: Nielsen's
/// commutator test agrees with the folding rose test, and a basis pair
/// consists of primitives.
pub fn verify_nielsen_xcheck(max_pair_len: usize) -> Result<VerificationReport, Error> {
    check_cap("length", max_pair_len as u64, NIELSEN_MAX_LEN as u64)?;
    let mut report = VerificationReport::new("nielsen-xcheck").param("max_len", max_pair_len as u64);
    let words = ball(2, max_pair_len);
    let primitive: Vec<bool> = words.iter().map(|w| is_primitive(w, 2)).collect::<Result<_, _>>()?;
    for (ia, a) in words.iter().enumerate() {
        for (ib, b) in words.iter().enumerate() {
            if a.len() + b.len() > max_pair_len {
                continue;
            }
            report.stats.words_checked += 1;
            let nielsen = is_basis_pair_f2(a, b)?;
            let folding = generates_whole_group(&[a.clone(), b.clone()], 2)?;
            if nielsen {
                report.bump("basis_pairs");
            }
            report.expect(nielsen == folding, || format!("({a}, {b}): commutator test {nielsen}, folding {folding}"));
            report.expect(!nielsen || (primitive[ia] && primitive[ib]), || {
                format!("({a}, {b}): basis pair with a non-primitive member")
            });
        }
    }
    Ok(report.finish())
}

fn check_sweep(rank: u32, max_len: usize) -> Result<(), Error> {
    if rank == 0 {
        return Err(Error::ZeroRank);
    }
    check_cap("rank", rank as u64, SWEEP_MAX_RANK as u64)?;
    check_cap("length", max_len as u64, SWEEP_MAX_LEN as u64)
}

/// Every cyclically reduced primitive of length `1..=max_len` has a
/// separable Whitehead graph. Counts which branch held.
pub fn verify_prop24(rank: u32, max_len: usize) -> Result<VerificationReport, Error> {
    check_sweep(rank, max_len)?;
    let mut report = VerificationReport::new("prop24").param("rank", rank).param("max_len", max_len as u64);
    for len in 1..=max_len {
        for word in cyclic_sphere(rank, len) {
            report.stats.words_checked += 1;
            if !is_primitive(&word, rank)? {
                continue;
            }
            report.bump("primitives");
            let verdict = WhiteheadGraph::build(&word, rank)?.find_cut_vertex();
            if !verdict.connected {
                report.bump("disconnected");
            } else if verdict.cut_vertex.is_some() {
                report.bump("cut_vertex");
            }
            report.expect(verdict.separable, || format!("{word}: primitive with non-separable graph"));
        }
    }
    Ok(report.finish())
}

/// The minimizer's verdict matches the orbit-closure oracle on the whole ball.
pub fn verify_oracle(rank: u32, max_len: usize) -> Result<VerificationReport, Error> {
    check_sweep(rank, max_len)?;
    let mut report = VerificationReport::new("oracle").param("rank", rank).param("max_len", max_len as u64);
    let oracle = primitive_orbit_oracle(rank, max_len)?;
    report.stats.extra.insert("primitives".into(), oracle.len() as u64);
    for word in ball(rank, max_len) {
        report.stats.words_checked += 1;
        let fast = is_primitive(&word, rank)?;
        report.expect(fast == oracle.contains(&word), || format!("{word}: minimizer {fast}, oracle {}", !fast));
    }
    Ok(report.finish())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DensityRow {
    pub length: usize,
    pub primitives: u64,
    pub total: u64,
    pub ratio: f64,
}

/// Exact count of primitives among reduced words of each length `1..=max_len`.
pub fn primitive_density(rank: u32, max_len: usize) -> Result<Vec<DensityRow>, Error> {
    if rank == 0 {
        return Err(Error::ZeroRank);
    }
    check_cap("rank", rank as u64, SWEEP_MAX_RANK as u64)?;
    check_cap("length", max_len as u64, DENSITY_MAX_LEN as u64)?;
    let mut rows = Vec::new();
    for length in 1..=max_len {
        let words = sphere(rank, length);
        let total = words.len() as u64;
        let mut primitives = 0;
        for w in &words {
            if is_primitive(w, rank)? {
                primitives += 1;
            }
        }
        rows.push(DensityRow { length, primitives, total, ratio: primitives as f64 / total as f64 });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn npbig_small() {
        let r = verify_npbig(2, 0).unwrap();
        assert!(r.passed());
        assert_eq!(r.stats.words_checked, 1);
        let r = verify_npbig(2, 4).unwrap();
        assert!(r.passed(), "{:?}", r.counterexamples);
        assert_eq!(r.stats.words_checked, 161);
        assert!(verify_npbig(4, 2).is_err());
        assert!(verify_npbig(2, 7).is_err());
    }

    #[test]
    fn fincov_small_and_empty_word_multiplicity() {
        let r = verify_fincov(2, 3).unwrap();
        assert!(r.passed());
        let r0 = verify_fincov(2, 0).unwrap();
        assert_eq!(r0.stats.words_checked, 1);
        assert!(!r0.stats.extra.contains_key("multiplicity_00"));
        let mut last = 0;
        for l in 0..=4 {
            let r = verify_fincov(2, l).unwrap();
            assert!(r.passed());
            assert!(r.stats.words_checked >= last);
            last = r.stats.words_checked;
        }
    }

    #[test]
    fn fact1_examples() {
        let r = verify_fact1(2, 2, 2).unwrap();
        assert!(r.passed());
        // m = 1 (k = 2) at ranks 1, 2; m = 2 at rank 2
        assert_eq!(r.stats.words_checked, 3);
        assert!(verify_fact1(4, 3, 3).unwrap().passed());
        assert!(verify_fact1(5, 2, 2).is_err());
        assert!(verify_fact1(2, 2, 1).is_err());
    }

    #[test]
    fn section3_small() {
        assert!(verify_section3(2).unwrap().passed());
        assert!(verify_section3(5).unwrap().passed());
        assert!(verify_section3(1).is_err());
        assert!(verify_section3(11).is_err());
    }

    #[test]
    fn nielsen_small() {
        let r = verify_nielsen_xcheck(4).unwrap();
        assert!(r.passed(), "{:?}", r.counterexamples);
        assert!(r.stats.extra["basis_pairs"] > 0);
    }

    #[test]
    fn density_small() {
        let rows = primitive_density(2, 3).unwrap();
        assert_eq!((rows[0].primitives, rows[0].total), (4, 4));
        assert_eq!((rows[1].primitives, rows[1].total), (8, 12));
        assert!(primitive_density(2, 9).is_err());
    }

    #[test]
    fn prop24_and_oracle_small() {
        assert!(verify_prop24(2, 5).unwrap().passed());
        assert!(verify_oracle(2, 5).unwrap().passed());
    }
}
