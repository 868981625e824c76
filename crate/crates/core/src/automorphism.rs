// SPDX-License-Identifier: Apache-2.0

//! Whitehead automorphisms of `F_n`.
//!
//! Kind 1 maps are signed permutations of the generators. Kind 2 maps are
//! described by a multiplier `a` and a set `A` of letters with `a ∈ A` and
//! `a^-1 ∉ A`; a letter `x ≠ a^±1` is sent to `a^-εl · x · a^εr` where
//! `εr = [x ∈ A]` and `εl = [x^-1 ∈ A]`, so that every letter lands in one of
//! `x`, `xa`, `a^-1 x`, `a^-1 x a`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::word::{Letter, Word};
use crate::{check_cap, Error};

/// Largest rank for which [`enumerate_kind2`] will list every map.
pub const MAX_ENUMERATION_RANK: u32 = 8;

/// Largest rank for which [`enumerate_permutations`] will list every map.
pub const MAX_PERMUTATION_RANK: u32 = 6;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    /// `images[i - 1]` is the image of `e_i`.
    images: Vec<Letter>,
}

impl SignedPermutation {
    pub fn new(images: Vec<Letter>) -> Result<Self, Error> {
        if !permutation_is_bijective(&images) {
            return Err(Error::InvalidAutomorphism("images must be a signed permutation of e1..en".into()));
        }
        Ok(SignedPermutation { images })
    }

    pub fn identity(rank: u32) -> Self {
        SignedPermutation { images: (1..=rank).map(Letter::gen).collect() }
    }

    pub fn rank(&self) -> u32 {
        self.images.len() as u32
    }

    pub fn images(&self) -> &[Letter] {
        &self.images
    }

    pub fn image_of(&self, x: Letter) -> Option<Letter> {
        let img = *self.images.get(x.generator() as usize - 1)?;
        Some(if x.is_positive() { img } else { img.inverse() })
    }

    pub fn apply(&self, w: &Word) -> Result<Word, Error> {
        w.check_rank(self.rank())?;
        Ok(Word::reduce(w.letters().iter().map(|&x| self.image_of(x).expect("rank checked"))))
    }
}

fn permutation_is_bijective(images: &[Letter]) -> bool {
    let n = images.len() as u32;
    let mut seen = vec![false; images.len()];
    images.iter().all(|l| {
        let g = l.generator();
        g <= n && !std::mem::replace(&mut seen[g as usize - 1], true)
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubsetMultiplier {
    multiplier: Letter,
    members: BTreeSet<Letter>,
}

impl SubsetMultiplier {
    pub fn new(multiplier: Letter, members: impl IntoIterator<Item = Letter>) -> Result<Self, Error> {
        let members: BTreeSet<Letter> = members.into_iter().collect();
        if !members.contains(&multiplier) {
            return Err(Error::InvalidAutomorphism(format!("multiplier {multiplier} must belong to the set")));
        }
        if members.contains(&multiplier.inverse()) {
            return Err(Error::InvalidAutomorphism(format!(
                "inverse of the multiplier {multiplier} must not belong to the set"
            )));
        }
        Ok(SubsetMultiplier { multiplier, members })
    }

    pub fn multiplier(&self) -> Letter {
        self.multiplier
    }

    pub fn members(&self) -> &BTreeSet<Letter> {
        &self.members
    }

    /// `(A - a + a^-1, a^-1)`, the inverse map.
    pub fn inverse(&self) -> SubsetMultiplier {
        let a = self.multiplier;
        let mut members = self.members.clone();
        members.remove(&a);
        members.insert(a.inverse());
        SubsetMultiplier { multiplier: a.inverse(), members }
    }

    /// True when the map fixes every letter.
    pub fn is_identity(&self) -> bool {
        self.members.len() == 1
    }

    /// Image of a single letter, as at most three letters.
    pub fn image_of(&self, x: Letter) -> Vec<Letter> {
        let a = self.multiplier;
        if x == a || x == a.inverse() {
            return vec![x];
        }
        let mut out = Vec::with_capacity(3);
        if self.members.contains(&x.inverse()) {
            out.push(a.inverse());
        }
        out.push(x);
        if self.members.contains(&x) {
            out.push(a);
        }
        out
    }

    pub fn apply(&self, w: &Word) -> Word {
        Word::reduce(w.letters().iter().flat_map(|&x| self.image_of(x)))
    }
}

/// A validated Whitehead automorphism of either kind.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "AutDescriptor", into = "AutDescriptor")]
pub enum WhiteheadAut {
    Permutation(SignedPermutation),
    Multiplier(SubsetMultiplier),
}

impl WhiteheadAut {
    pub fn apply(&self, w: &Word) -> Result<Word, Error> {
        match self {
            WhiteheadAut::Permutation(p) => p.apply(w),
            WhiteheadAut::Multiplier(m) => Ok(m.apply(w)),
        }
    }
}

impl From<SubsetMultiplier> for WhiteheadAut {
    fn from(m: SubsetMultiplier) -> Self {
        WhiteheadAut::Multiplier(m)
    }
}

impl From<SignedPermutation> for WhiteheadAut {
    fn from(p: SignedPermutation) -> Self {
        WhiteheadAut::Permutation(p)
    }
}

/// Unvalidated wire form: `{"kind": 2, "multiplier": -1, "members": [-1, 2]}`
/// or `{"kind": 1, "images": [2, -1]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutDescriptor {
    pub kind: u8,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multiplier: Option<Letter>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub members: Option<Vec<Letter>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub images: Option<Vec<Letter>>,
}

impl AutDescriptor {
    pub fn kind1(images: Vec<Letter>) -> Self {
        AutDescriptor { kind: 1, multiplier: None, members: None, images: Some(images) }
    }

    pub fn kind2(multiplier: Letter, members: Vec<Letter>) -> Self {
        AutDescriptor { kind: 2, multiplier: Some(multiplier), members: Some(members), images: None }
    }
}

impl From<WhiteheadAut> for AutDescriptor {
    fn from(aut: WhiteheadAut) -> Self {
        match aut {
            WhiteheadAut::Permutation(p) => AutDescriptor::kind1(p.images),
            WhiteheadAut::Multiplier(m) => AutDescriptor::kind2(m.multiplier, m.members.into_iter().collect()),
        }
    }
}

impl TryFrom<AutDescriptor> for WhiteheadAut {
    type Error = Error;

    fn try_from(d: AutDescriptor) -> Result<Self, Error> {
        match (d.kind, d.multiplier, d.members, d.images) {
            (1, None, None, Some(images)) => Ok(SignedPermutation::new(images)?.into()),
            (2, Some(a), Some(members), None) => {
                let set: BTreeSet<Letter> = members.iter().copied().collect();
                if set.len() != members.len() {
                    return Err(Error::InvalidAutomorphism("repeated set member".into()));
                }
                Ok(SubsetMultiplier::new(a, set)?.into())
            }
            (kind, ..) => Err(Error::InvalidAutomorphism(format!("malformed descriptor of kind {kind}"))),
        }
    }
}

impl std::fmt::Display for WhiteheadAut {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            WhiteheadAut::Permutation(p) => {
                let imgs: Vec<String> = p.images.iter().map(|l| l.to_string()).collect();
                write!(f, "perm[{}]", imgs.join(", "))
            }
            WhiteheadAut::Multiplier(m) => {
                let set: Vec<String> = m.members.iter().map(|l| l.to_string()).collect();
                write!(f, "({{{}}}, {})", set.join(", "), m.multiplier)
            }
        }
    }
}

/// Whether a descriptor satisfies the validity conditions: a signed
/// permutation for kind 1, `a ∈ A` and `a^-1 ∉ A` for kind 2.
pub fn is_automorphism_witness(d: &AutDescriptor) -> bool {
    WhiteheadAut::try_from(d.clone()).is_ok()
}

/// Multipliers in enumeration order: `e1, e1^-1, e2, e2^-1, ...`.
pub fn letters_of_rank(rank: u32) -> impl Iterator<Item = Letter> {
    (1..=rank).flat_map(|i| [Letter::new(i, true), Letter::new(i, false)])
}

/// Kind 2 maps with multiplier `a`, the other generators (in the given
/// order) each choosing one of four membership patterns; pattern bits form
/// a binary counter with the first listed generator least significant.
pub(crate) fn multipliers_over(a: Letter, others: &[u32]) -> impl Iterator<Item = SubsetMultiplier> + '_ {
    let patterns: u64 = 1 << (2 * others.len());
    (0..patterns).map(move |pattern| {
        let mut members = BTreeSet::new();
        members.insert(a);
        for (k, &g) in others.iter().enumerate() {
            if pattern >> (2 * k) & 1 == 1 {
                members.insert(Letter::new(g, true));
            }
            if pattern >> (2 * k + 1) & 1 == 1 {
                members.insert(Letter::new(g, false));
            }
        }
        SubsetMultiplier { multiplier: a, members }
    })
}

/// Every valid kind 2 map of `F_rank`, `2n · 4^(n-1)` in all.
pub fn enumerate_kind2(rank: u32) -> Result<Vec<SubsetMultiplier>, Error> {
    if rank == 0 {
        return Err(Error::ZeroRank);
    }
    check_cap("rank", rank as u64, MAX_ENUMERATION_RANK as u64)?;
    let mut out = Vec::with_capacity(2 * rank as usize * (1 << (2 * (rank - 1))));
    for a in letters_of_rank(rank) {
        let others: Vec<u32> = (1..=rank).filter(|&g| g != a.generator()).collect();
        out.extend(multipliers_over(a, &others));
    }
    Ok(out)
}

/// Every signed permutation of `F_rank`, `n! · 2^n` in all.
pub fn enumerate_permutations(rank: u32) -> Result<Vec<SignedPermutation>, Error> {
    if rank == 0 {
        return Err(Error::ZeroRank);
    }
    check_cap("rank", rank as u64, MAX_PERMUTATION_RANK as u64)?;
    let mut perms: Vec<Vec<u32>> = vec![vec![]];
    for _ in 0..rank {
        perms = perms
            .into_iter()
            .flat_map(|p| {
                (1..=rank)
                    .filter(|g| !p.contains(g))
                    .map(|g| {
                        let mut q = p.clone();
                        q.push(g);
                        q
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    let mut out = Vec::new();
    for p in perms {
        for signs in 0u32..(1 << rank) {
            let images = p.iter().enumerate().map(|(k, &g)| Letter::new(g, signs >> k & 1 == 0)).collect();
            out.push(SignedPermutation { images });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(v: i32) -> Letter {
        Letter::from_signed(v).unwrap()
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn worked_multiplier_example() {
        let aut = SubsetMultiplier::new(l(-1), [l(-1), l(2)]).unwrap();
        assert_eq!(aut.image_of(l(2)), vec![l(2), l(-1)]);
        assert_eq!(aut.apply(&w("ababa")), w("abb"));
    }

    #[test]
    fn trivial_actions() {
        for aut in enumerate_kind2(3).unwrap() {
            assert!(aut.apply(&Word::identity()).is_empty());
        }
        let id = SubsetMultiplier::new(l(2), [l(2)]).unwrap();
        assert!(id.is_identity());
        for s in ["abAB", "ccbA", "b", "aabbcc"] {
            assert_eq!(id.apply(&w(s)), w(s));
        }
    }

    #[test]
    fn enumeration_counts() {
        let one = enumerate_kind2(1).unwrap();
        assert_eq!(one.len(), 2);
        assert!(one.iter().all(|a| a.is_identity()));
        assert_eq!(enumerate_kind2(2).unwrap().len(), 16);
        assert_eq!(enumerate_kind2(3).unwrap().len(), 96);
        assert!(enumerate_kind2(9).is_err());
        assert!(enumerate_kind2(0).is_err());
        assert_eq!(enumerate_permutations(2).unwrap().len(), 8);
        assert_eq!(enumerate_permutations(3).unwrap().len(), 48);
    }

    #[test]
    fn enumeration_is_duplicate_free_and_ordered() {
        let all = enumerate_kind2(3).unwrap();
        let set: std::collections::HashSet<_> = all.iter().cloned().collect();
        assert_eq!(set.len(), all.len());
        assert_eq!(all[0].multiplier(), l(1));
        assert!(all[0].is_identity());
        assert_eq!(all[16].multiplier(), l(-1));
        assert_eq!(all[1].members().iter().copied().collect::<Vec<_>>(), vec![l(1), l(2)]);
        assert_eq!(all[2].members().iter().copied().collect::<Vec<_>>(), vec![l(-2), l(1)]);
    }

    #[test]
    fn witness_validity() {
        assert!(!is_automorphism_witness(&AutDescriptor::kind2(l(1), vec![l(1), l(-1)])));
        assert!(is_automorphism_witness(&AutDescriptor::kind2(l(1), vec![l(1), l(2)])));
        assert!(!is_automorphism_witness(&AutDescriptor::kind2(l(1), vec![l(2)])));
        assert!(!is_automorphism_witness(&AutDescriptor::kind1(vec![l(2), l(2)])));
        assert!(is_automorphism_witness(&AutDescriptor::kind1(vec![l(-2), l(1)])));
        assert!(!is_automorphism_witness(&AutDescriptor::kind1(vec![l(3), l(1)])));
    }

    #[test]
    fn valid_witness_has_inverse_of_same_shape() {
        let aut = SubsetMultiplier::new(l(1), [l(1), l(2)]).unwrap();
        let inv = aut.inverse();
        assert_eq!(inv.multiplier(), l(-1));
        for s in ["ab", "bbA", "cBaC", "abababAB"] {
            assert_eq!(inv.apply(&aut.apply(&w(s))), w(s));
        }
    }

    #[test]
    fn permutation_application() {
        let p = SignedPermutation::new(vec![l(-2), l(1)]).unwrap();
        assert_eq!(p.apply(&w("abA")).unwrap(), w("Bab"));
        assert!(p.apply(&w("c")).is_err());
    }

    #[test]
    fn json_descriptor_round_trip() {
        let aut: WhiteheadAut = SubsetMultiplier::new(l(-1), [l(-1), l(2)]).unwrap().into();
        let json = serde_json::to_string(&aut).unwrap();
        assert_eq!(json, r#"{"kind":2,"multiplier":-1,"members":[-1,2]}"#);
        let back: WhiteheadAut = serde_json::from_str(&json).unwrap();
        assert_eq!(back, aut);
        assert!(serde_json::from_str::<WhiteheadAut>(r#"{"kind":2,"multiplier":1,"members":[1,-1]}"#).is_err());
        let perm: WhiteheadAut = SignedPermutation::new(vec![l(2), l(-1)]).unwrap().into();
        let json = serde_json::to_string(&perm).unwrap();
        assert_eq!(serde_json::from_str::<WhiteheadAut>(&json).unwrap(), perm);
    }
}
