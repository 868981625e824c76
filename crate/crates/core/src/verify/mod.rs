// SPDX-License-Identifier: Apache-2.0

//! Batch verification of combinatorial claims about free groups.
//!
//! Each [`Claim`] runs an exhaustive check over a finite parameter range and
//! yields [`VerificationReport`]s. [`run_claim`] fills in the default
//! parameter grid for anything left unspecified.

mod checks;
mod constructions;
mod report;

use std::str::FromStr;
use std::time::Instant;

pub use checks::*;
pub use constructions::{b, build_w, c, cube_chain, WijFamily};
pub use report::{Stats, Status, VerificationReport};

use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Claim {
    Fact1,
    Npbig,
    Fincov,
    Prop24,
    Oracle,
    ClaimI,
    ClaimII,
    Lemma38,
    Section3,
    NielsenXcheck,
}

impl Claim {
    /// Run by `verify all`; `Section3` is omitted since it repeats the
    /// three claims it bundles.
    pub const ALL: [Claim; 9] = [
        Claim::Fact1,
        Claim::Npbig,
        Claim::Fincov,
        Claim::Prop24,
        Claim::Oracle,
        Claim::ClaimI,
        Claim::ClaimII,
        Claim::Lemma38,
        Claim::NielsenXcheck,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Claim::Fact1 => "fact1",
            Claim::Npbig => "npbig",
            Claim::Fincov => "fincov",
            Claim::Prop24 => "prop24",
            Claim::Oracle => "oracle",
            Claim::ClaimI => "claimI",
            Claim::ClaimII => "claimII",
            Claim::Lemma38 => "lemma38",
            Claim::Section3 => "section3",
            Claim::NielsenXcheck => "nielsen-xcheck",
        }
    }
}

impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Claim::ALL
            .into_iter()
            .chain([Claim::Section3])
            .find(|c| c.id() == s)
            .ok_or_else(|| Error::UnknownClaim(s.to_string()))
    }
}

/// Optional overrides; `None` means the default grid.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ClaimParams {
    pub rank: Option<u32>,
    pub max_len: Option<usize>,
    pub truncation: Option<u32>,
    pub timings: bool,
}

/// Default `(rank, max_len)` grid for the ball sweeps.
fn grid(claim: Claim, p: &ClaimParams) -> Vec<(u32, usize)> {
    let defaults: &[(u32, usize)] = match claim {
        Claim::Npbig | Claim::Fincov => &[(2, 5), (3, 3)],
        Claim::Prop24 | Claim::Oracle => &[(2, 8), (3, 6)],
        _ => &[],
    };
    match (p.rank, p.max_len) {
        (None, None) => defaults.to_vec(),
        (Some(r), None) => {
            let hits: Vec<_> = defaults.iter().filter(|(dr, _)| *dr == r).copied().collect();
            if hits.is_empty() {
                vec![(r, 3)]
            } else {
                hits
            }
        }
        (None, Some(l)) => defaults.iter().map(|&(r, _)| (r, l)).collect(),
        (Some(r), Some(l)) => vec![(r, l)],
    }
}

fn timed(timings: bool, f: impl FnOnce() -> Result<VerificationReport, Error>) -> Result<VerificationReport, Error> {
    let start = Instant::now();
    let mut report = f()?;
    if timings {
        report.stats.seconds = Some(start.elapsed().as_secs_f64());
    }
    Ok(report)
}

pub fn run_claim(claim: Claim, p: &ClaimParams) -> Result<Vec<VerificationReport>, Error> {
    let t = p.timings;
    let truncation = p.truncation.unwrap_or(SECTION3_MAX_TRUNCATION);
    let one = |r: Result<VerificationReport, Error>| r.map(|x| vec![x]);
    match claim {
        Claim::Fact1 => {
            let rank = p.rank.unwrap_or(FACT1_MAX_RANK);
            one(timed(t, || verify_fact1(rank, rank, FACT1_MAX_EXPONENT)))
        }
        Claim::Npbig | Claim::Fincov | Claim::Prop24 | Claim::Oracle => grid(claim, p)
            .into_iter()
            .map(|(rank, len)| {
                timed(t, || match claim {
                    Claim::Npbig => verify_npbig(rank, len),
                    Claim::Fincov => verify_fincov(rank, len),
                    Claim::Prop24 => verify_prop24(rank, len),
                    _ => verify_oracle(rank, len),
                })
            })
            .collect(),
        Claim::ClaimI => one(timed(t, || verify_claim_i(truncation))),
        Claim::ClaimII => one(timed(t, || verify_claim_ii(truncation))),
        Claim::Lemma38 => one(timed(t, || verify_lemma38(truncation))),
        Claim::Section3 => one(timed(t, || verify_section3(truncation))),
        Claim::NielsenXcheck => {
            let len = p.max_len.unwrap_or(NIELSEN_MAX_LEN);
            one(timed(t, || verify_nielsen_xcheck(len)))
        }
    }
}

pub fn run_all(p: &ClaimParams) -> Result<Vec<VerificationReport>, Error> {
    let mut out = Vec::new();
    for claim in Claim::ALL {
        out.extend(run_claim(claim, p)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn claim_ids_round_trip() {
        for c in Claim::ALL.into_iter().chain([Claim::Section3]) {
            assert_eq!(c.id().parse::<Claim>().unwrap(), c);
        }
        assert!("nope".parse::<Claim>().is_err());
    }

    #[test]
    fn grid_overrides() {
        let p = ClaimParams::default();
        assert_eq!(grid(Claim::Npbig, &p), vec![(2, 5), (3, 3)]);
        let p = ClaimParams { rank: Some(3), ..Default::default() };
        assert_eq!(grid(Claim::Oracle, &p), vec![(3, 6)]);
        let p = ClaimParams { max_len: Some(2), ..Default::default() };
        assert_eq!(grid(Claim::Fincov, &p), vec![(2, 2), (3, 2)]);
        let p = ClaimParams { rank: Some(2), max_len: Some(4), ..Default::default() };
        assert_eq!(grid(Claim::Prop24, &p), vec![(2, 4)]);
    }
}
