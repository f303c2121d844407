//! Named exhaustive checks, each producing a [`VerificationReport`].

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::census::verify_lemma;
use crate::error::{Error, Result};
use crate::numbers::narayana_row;
use crate::poset::antichain::{
    check_k_sperner, dilworth, longest_chain, max_k_antichain_union, top_rank_sum,
};
use crate::poset::coarsening::{antichain_transfer_violations, check_coarsening};
use crate::poset::duality::{construct_antiautomorphism, order_reversal_violations};
use crate::poset::{build_poset_p, build_poset_q, is_palindromic, is_unimodal};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Check {
    Coarsening,
    Ranks,
    Lemma,
    SelfDual,
    Sperner,
}

impl Check {
    pub const ALL: [Check; 5] = [
        Check::Coarsening,
        Check::Ranks,
        Check::Lemma,
        Check::SelfDual,
        Check::Sperner,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Coarsening => "coarsening",
            Check::Ranks => "ranks",
            Check::Lemma => "lemma",
            Check::SelfDual => "selfdual",
            Check::Sperner => "sperner",
        }
    }

    /// Largest `n` each check accepts.
    pub fn max_n(self) -> usize {
        match self {
            Check::Coarsening => 9,
            Check::Ranks => 10,
            Check::Lemma => 14,
            Check::SelfDual => 9,
            Check::Sperner => 8,
        }
    }

    /// Parses a comma-separated list; `all` expands to every check.
    pub fn parse_list(s: &str) -> Result<Vec<Check>> {
        let mut out = Vec::new();
        for tok in s.split(',') {
            if tok == "all" {
                out.extend(Check::ALL);
            } else {
                out.push(tok.parse()?);
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown check {s:?}")))
    }
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub check: Check,
    pub n: usize,
    /// Pairs, subsets or elements examined, depending on the check.
    pub examined: u64,
    pub violations: Vec<String>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// One-line summary. Wall time is not part of it.
impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} n={} examined={} violations={} {}",
            self.check,
            self.n,
            self.examined,
            self.violations.len(),
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }
}

pub fn run_check(check: Check, n: usize) -> Result<VerificationReport> {
    if n == 0 || n > check.max_n() {
        return Err(Error::Capacity {
            what: "n",
            got: n,
            max: check.max_n(),
        });
    }
    let start = Instant::now();
    let (examined, violations) = match check {
        Check::Coarsening => coarsening(n)?,
        Check::Ranks => ranks(n)?,
        Check::Lemma => lemma(n)?,
        Check::SelfDual => self_dual(n)?,
        Check::Sperner => sperner(n)?,
    };
    Ok(VerificationReport {
        check,
        n,
        examined,
        violations,
        elapsed: start.elapsed(),
    })
}

type Outcome = Result<(u64, Vec<String>)>;

fn coarsening(n: usize) -> Outcome {
    let r = check_coarsening(n)?;
    let v = r
        .counterexamples
        .iter()
        .map(|(a, b)| format!("{a} < {b} but descent sets are not strictly nested"))
        .collect();
    Ok((r.pairs_checked, v))
}

fn ranks(n: usize) -> Outcome {
    let p = build_poset_p(n)?;
    let q = build_poset_q(n)?;
    let expected: Vec<usize> = narayana_row(n as u64)?
        .into_iter()
        .map(|x| x as usize)
        .collect();
    let mut v = Vec::new();
    let (sp, sq) = (p.rank_sizes(), q.rank_sizes());
    if sp != expected {
        v.push(format!(
            "P rank sizes {sp:?} differ from Narayana row {expected:?}"
        ));
    }
    if sq != sp {
        v.push(format!(
            "Q rank sizes {sq:?} differ from P rank sizes {sp:?}"
        ));
    }
    if !is_palindromic(&sp) {
        v.push(format!("rank sizes {sp:?} are not symmetric"));
    }
    if !is_unimodal(&sp) {
        v.push(format!("rank sizes {sp:?} are not unimodal"));
    }
    for (name, g) in [
        ("P", p.gradedness_violations()),
        ("Q", q.gradedness_violations()),
    ] {
        v.extend(g.into_iter().map(|e| format!("{name}: {e}")));
    }
    Ok(((p.len() + q.len()) as u64, v))
}

fn lemma(n: usize) -> Outcome {
    let r = verify_lemma(n)?;
    let v = r
        .violations
        .iter()
        .map(|(s, a, b)| format!("count({s}) = {a} but its reverse complement has {b}"))
        .collect();
    Ok((r.subsets_checked, v))
}

fn self_dual(n: usize) -> Outcome {
    let p = build_poset_p(n)?;
    let m = construct_antiautomorphism(&p)?;
    let pairs = (p.len() * p.len()) as u64;
    Ok(match order_reversal_violations(&p, &m) {
        None => (pairs, vec!["constructed map is not a bijection".into()]),
        Some(0) => (pairs, Vec::new()),
        Some(bad) => (pairs, vec![format!("{bad} ordered pairs are not reversed")]),
    })
}

/// Width equals the largest rank; `d_k` equals the top-`k` rank sum for every
/// `k` up to the chain length; the maximum antichain pulls back to an
/// antichain of Q.
fn sperner(n: usize) -> Outcome {
    let p = build_poset_p(n)?;
    let mut v = Vec::new();
    let width = dilworth(&p)?.width();
    let largest = p.rank_sizes().into_iter().max().unwrap_or(0);
    if width != largest {
        v.push(format!("width {width} differs from largest rank {largest}"));
    }
    let height = longest_chain(&p);
    for k in 1..=height {
        if !check_k_sperner(&p, k)? {
            v.push(format!(
                "d_{k} = {} but the {k} largest ranks hold {}",
                max_k_antichain_union(&p, k)?,
                top_rank_sum(&p, k)
            ));
        }
    }
    let (_, bad) = antichain_transfer_violations(&p)?;
    v.extend(
        bad.iter()
            .map(|(a, b)| format!("antichain preimages {a} and {b} are comparable in Q")),
    );
    Ok((p.len() as u64, v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn everything_passes_at_four() {
        for c in Check::ALL {
            let r = run_check(c, 4).unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn report_line_is_stable() {
        let r = run_check(Check::Lemma, 10).unwrap();
        assert_eq!(r.to_string(), "lemma n=10 examined=512 violations=0 PASS");
    }

    #[test]
    fn check_lists() {
        assert_eq!(Check::parse_list("all").unwrap(), Check::ALL.to_vec());
        assert_eq!(
            Check::parse_list("lemma,ranks,lemma").unwrap(),
            vec![Check::Ranks, Check::Lemma]
        );
        assert!(Check::parse_list("lemma,bogus").is_err());
        assert!(Check::parse_list("").is_err());
    }

    #[test]
    fn bounds_are_enforced() {
        assert!(matches!(
            run_check(Check::Sperner, 9),
            Err(Error::Capacity { .. })
        ));
        assert!(matches!(
            run_check(Check::Lemma, 0),
            Err(Error::Capacity { .. })
        ));
    }
}
