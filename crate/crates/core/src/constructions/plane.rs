//! Certified families on `P^2` found by search.
//!
//! A family of size `n` passes the strict inequality iff every monomial `g`
//! of degree `e` in `1..d-1` divides at most `limit(e)` members, where
//! `limit(e)` is the largest `k` with `(d - e) n + e - d k > 0` (or 1 when
//! that is below 2). Non-exact gcds only give weaker constraints than the
//! exact gcd of the same multiple-set, so capping every `g` is equivalent.
//!
//! The search seeds with the three pure powers, extends greedily by the
//! candidate that keeps the worst margin largest, and falls back to a
//! complete backtracking search over the same caps.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use super::{count_all, out_of_range};
use crate::criterion::{check_family, margin, StabilityCertificate, Verdict};
use crate::error::{Error, Result};
use crate::family::MonomialFamily;
use crate::monomial::{enumerate_monomials, monomials_in_degrees, Monomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SearchMethod {
    Greedy,
    Backtracking,
}

type Memo = Mutex<HashMap<(u32, usize), (MonomialFamily, SearchMethod)>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// Certified stable family of `n` degree-`d` monomials in three variables.
pub fn gen_n2_search(d: u32, n: usize) -> Result<MonomialFamily> {
    n2_search_with_method(d, n).map(|(fam, _)| fam)
}

pub fn n2_search_with_method(d: u32, n: usize) -> Result<(MonomialFamily, SearchMethod)> {
    let total = count_all(2, d);
    if d < 1 || n < 3 || n > total {
        return Err(out_of_range(2, d, n, format!("need 3 <= n <= {total}")));
    }
    if (d, n) == (2, 5) {
        return Err(out_of_range(
            2,
            d,
            n,
            "no stable family exists at (2, 2, 5)",
        ));
    }
    if let Some(hit) = memo().lock().expect("memo lock").get(&(d, n)) {
        return Ok(hit.clone());
    }
    let found = Search::new(d, n).run()?;
    memo()
        .lock()
        .expect("memo lock")
        .insert((d, n), found.clone());
    Ok(found)
}

struct Search {
    d: u32,
    n: usize,
    /// Candidate gcds of degree `1..d-1`.
    gcds: Vec<Monomial>,
    limits: Vec<usize>,
    pure: Vec<Monomial>,
    /// Non-pure monomials of degree `d`, canonical order.
    candidates: Vec<Monomial>,
    /// For each candidate, indices of the gcds dividing it.
    divisors: Vec<Vec<usize>>,
}

impl Search {
    fn new(d: u32, n: usize) -> Self {
        let gcds = if d >= 2 {
            monomials_in_degrees(2, 1, d - 1)
        } else {
            Vec::new()
        };
        let limits = gcds
            .iter()
            .map(|g| {
                let e = g.degree();
                // largest k with (d - e) n + e - d k > 0
                let num = (d - e) as usize * n + e as usize - 1;
                (num / d as usize).max(1)
            })
            .collect();
        let (pure, candidates): (Vec<_>, Vec<_>) = enumerate_monomials(2, d)
            .into_iter()
            .partition(|m| m.pure_power_var().is_some());
        let divisors = candidates
            .iter()
            .map(|c| {
                gcds.iter()
                    .enumerate()
                    .filter(|(_, g)| g.divides_unchecked(c))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        Self {
            d,
            n,
            gcds,
            limits,
            pure,
            candidates,
            divisors,
        }
    }

    fn initial_counts(&self) -> Vec<usize> {
        self.gcds
            .iter()
            .map(|g| self.pure.iter().filter(|p| g.divides_unchecked(p)).count())
            .collect()
    }

    fn run(&self) -> Result<(MonomialFamily, SearchMethod)> {
        if let Some(chosen) = self.greedy() {
            if let Some(fam) = self.certified(&chosen) {
                return Ok((fam, SearchMethod::Greedy));
            }
        }
        let mut counts = self.initial_counts();
        let mut chosen = Vec::new();
        if self.backtrack(0, &mut counts, &mut chosen) {
            if let Some(fam) = self.certified(&chosen) {
                return Ok((fam, SearchMethod::Backtracking));
            }
            return Err(Error::Internal(format!(
                "backtracking result at (2, {}, {}) failed certification",
                self.d, self.n
            )));
        }
        Err(Error::SearchExhausted {
            nvars: 2,
            d: self.d,
            n: self.n,
        })
    }

    fn certified(&self, chosen: &[usize]) -> Option<MonomialFamily> {
        let mut members = self.pure.clone();
        members.extend(chosen.iter().map(|&i| self.candidates[i].clone()));
        let fam = MonomialFamily::new(2, self.d, members).ok()?;
        let cert = check_family(&fam).ok()?;
        (cert.verdict == Verdict::StableCertified).then_some(fam)
    }

    /// Worst margin over gcds dividing at least two members.
    fn worst_margin(&self, counts: &[usize]) -> i64 {
        self.gcds
            .iter()
            .zip(counts)
            .filter(|(_, &k)| k >= 2)
            .map(|(g, &k)| margin(self.d, self.n, g.degree(), k))
            .min()
            .unwrap_or(i64::MAX)
    }

    fn greedy(&self) -> Option<Vec<usize>> {
        let mut counts = self.initial_counts();
        let mut used = vec![false; self.candidates.len()];
        let mut chosen = Vec::new();
        while self.pure.len() + chosen.len() < self.n {
            let mut best: Option<(i64, usize)> = None;
            for (ci, divs) in self.divisors.iter().enumerate() {
                if used[ci] {
                    continue;
                }
                for &g in divs {
                    counts[g] += 1;
                }
                let score = self.worst_margin(&counts);
                for &g in divs {
                    counts[g] -= 1;
                }
                if best.is_none_or(|(s, _)| score > s) {
                    best = Some((score, ci));
                }
            }
            let (_, ci) = best?;
            used[ci] = true;
            for &g in &self.divisors[ci] {
                counts[g] += 1;
            }
            chosen.push(ci);
        }
        (self.worst_margin(&counts) > 0).then_some(chosen)
    }

    fn backtrack(&self, from: usize, counts: &mut [usize], chosen: &mut Vec<usize>) -> bool {
        let need = self.n - self.pure.len() - chosen.len();
        if need == 0 {
            return true;
        }
        if self.candidates.len() - from < need {
            return false;
        }
        for ci in from..self.candidates.len() {
            if self.candidates.len() - ci < need {
                break;
            }
            let divs = &self.divisors[ci];
            if divs.iter().any(|&g| counts[g] + 1 > self.limits[g]) {
                continue;
            }
            for &g in divs {
                counts[g] += 1;
            }
            chosen.push(ci);
            if self.backtrack(ci + 1, counts, chosen) {
                return true;
            }
            chosen.pop();
            for &g in divs {
                counts[g] -= 1;
            }
        }
        false
    }
}

/// One five-element subset of the plane conics and, when it generates an
/// m-primary ideal, its certificate.
#[derive(Clone, Debug)]
pub struct Candidate225 {
    pub family: MonomialFamily,
    pub certificate: Option<StabilityCertificate>,
}

/// All `C(6, 5) = 6` five-element families of conics in three variables.
pub fn exhaustive_225() -> Vec<Candidate225> {
    let all = enumerate_monomials(2, 2);
    (0..all.len())
        .map(|skip| {
            let members = all
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, m)| m.clone())
                .collect();
            let family = MonomialFamily::new(2, 2, members).expect("distinct conics");
            let certificate = check_family(&family).ok();
            Candidate225 {
                family,
                certificate,
            }
        })
        .collect()
}

/// The first m-primary five-element family of conics, in candidate order,
/// that certifies as semistable.
pub fn gen_225_semistable() -> MonomialFamily {
    exhaustive_225()
        .into_iter()
        .find(|c| {
            c.certificate
                .as_ref()
                .is_some_and(|cert| cert.verdict == Verdict::SemistableCertified)
        })
        .map(|c| c.family)
        .expect("a semistable five-element family of conics exists")
}
