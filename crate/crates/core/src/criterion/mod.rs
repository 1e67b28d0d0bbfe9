//! Exact certification of the subset inequality
//! `(d - d_J) n + d_J - d k >= 0` for equal-degree monomial families.
//!
//! [`check_family`] only evaluates, for each candidate gcd `g` of degree
//! `1..d-1`, the set `J_g` of all members divisible by `g`, and only when the
//! gcd of `J_g` is `g` itself. Any subset with gcd `h` sits inside `J_h` and
//! has the same `d_J` with fewer members, so `J_h` has the smaller margin.
//! Subsets with coprime members (`d_J = 0`) have margin `d (n - k) >= d` when
//! proper and are accounted for in closed form.
//!
//! [`brute_force_check`] walks every subset and is kept as an oracle.

mod certificate;
mod p1;

use std::collections::HashMap;

use num_rational::Rational64;

pub use certificate::{
    margin, CertificateRecord, GcdWitness, Level, StabilityCertificate, Verdict, WitnessRecord,
};
pub use p1::{is_semistable_p1, splitting_type_p1, SplittingType};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::family::MonomialFamily;
use crate::monomial::{enumerate_monomials, monomials_in_degrees, Monomial};

/// Default bound on family size for [`brute_force_check`].
pub const DEFAULT_ORACLE_MAX: usize = 16;

/// Environment variable overriding [`DEFAULT_ORACLE_MAX`].
pub const ORACLE_MAX_ENV: &str = "SYZ_ORACLE_MAX";

pub fn oracle_max() -> usize {
    std::env::var(ORACLE_MAX_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_ORACLE_MAX)
}

/// Slope bookkeeping for `Syz(f_1..f_n)` with all `deg f_i = d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SlopeData {
    pub n: i64,
    pub d: i64,
    pub rank: i64,
    pub c1: i64,
}

impl SlopeData {
    pub fn new(n: usize, d: u32) -> Self {
        let (n, d) = (n as i64, d as i64);
        Self {
            n,
            d,
            rank: n - 1,
            c1: -d * n,
        }
    }

    /// `a(d, j) = -j d / (j - 1)`, the slope of a rank `j - 1` syzygy bundle.
    pub fn a(d: i64, j: i64) -> Rational64 {
        assert!(j >= 2);
        Rational64::new(-j * d, j - 1)
    }

    pub fn slope(&self) -> Rational64 {
        Rational64::new(self.c1, self.rank)
    }
}

pub(crate) fn missing_pure_power(fam: &MonomialFamily) -> Option<usize> {
    let d = fam.degree();
    (0..fam.num_vars()).find(|&i| !fam.contains(&Monomial::pure_power(fam.num_vars(), i, d)))
}

/// Whether every variable has a pure power in the family.
pub fn is_m_primary(fam: &MonomialFamily) -> bool {
    fam.degree() >= 1 && missing_pure_power(fam).is_none()
}

fn preconditions(fam: &MonomialFamily) -> Result<()> {
    if fam.len() < 2 {
        return Err(Error::TooFewGenerators(fam.len()));
    }
    if let Some(missing) = missing_pure_power(fam) {
        return Err(Error::NotPrimary { missing });
    }
    Ok(())
}

fn line_bundle_certificate(fam: &MonomialFamily) -> StabilityCertificate {
    StabilityCertificate {
        verdict: Verdict::StableCertified,
        dim: fam.dim(),
        degree: fam.degree(),
        n: fam.len(),
        witnesses: Vec::new(),
        worst: None,
        min_margin: None,
        primary: true,
    }
}

fn verdict_from_min(min: Option<i64>) -> Verdict {
    match min {
        Some(m) if m < 0 => Verdict::CriterionViolated,
        Some(0) => Verdict::SemistableCertified,
        _ => Verdict::StableCertified,
    }
}

/// First witness of minimal margin.
fn worst_of<'a>(ws: impl IntoIterator<Item = &'a GcdWitness>) -> Option<GcdWitness> {
    let mut best: Option<&GcdWitness> = None;
    for w in ws {
        if best.is_none_or(|b| w.margin < b.margin) {
            best = Some(w);
        }
    }
    best.cloned()
}

pub fn check_family(fam: &MonomialFamily) -> Result<StabilityCertificate> {
    check_family_with(fam, Exec::default())
}

pub fn check_family_with(fam: &MonomialFamily, exec: Exec) -> Result<StabilityCertificate> {
    preconditions(fam)?;
    let n = fam.len();
    if n == 2 {
        return Ok(line_bundle_certificate(fam));
    }
    let d = fam.degree();
    let candidates = if d >= 2 {
        monomials_in_degrees(fam.dim(), 1, d - 1)
    } else {
        Vec::new()
    };
    let witnesses = exec.filter_map(&candidates, |g| evaluate_candidate(fam, g));
    let worst = worst_of(&witnesses);
    // coprime proper subsets bottom out at k = n - 1, margin d
    let coprime_min = d as i64;
    let min_margin = Some(
        worst
            .as_ref()
            .map_or(coprime_min, |w| w.margin.min(coprime_min)),
    );
    Ok(StabilityCertificate {
        verdict: verdict_from_min(min_margin),
        dim: fam.dim(),
        degree: d,
        n,
        witnesses,
        worst,
        min_margin,
        primary: true,
    })
}

fn evaluate_candidate(fam: &MonomialFamily, g: &Monomial) -> Option<GcdWitness> {
    let mut k = 0usize;
    let mut common: Option<Monomial> = None;
    for m in fam.iter().filter(|m| g.divides_unchecked(m)) {
        k += 1;
        common = Some(match common {
            None => m.clone(),
            Some(c) => c.gcd_unchecked(m),
        });
    }
    if k < 2 || common.as_ref() != Some(g) {
        return None;
    }
    let d_j = g.degree();
    Some(GcdWitness {
        g: g.clone(),
        d_j,
        k,
        margin: margin(fam.degree(), fam.len(), d_j, k),
    })
}

pub fn brute_force_check(fam: &MonomialFamily) -> Result<StabilityCertificate> {
    brute_force_check_with_limit(fam, oracle_max())
}

/// Enumerates all `2^n` subsets. Witnesses keep, per distinct nonconstant gcd,
/// the subset of minimal margin.
pub fn brute_force_check_with_limit(
    fam: &MonomialFamily,
    max: usize,
) -> Result<StabilityCertificate> {
    let n = fam.len();
    if n > max || n >= 63 {
        return Err(Error::OracleTooLarge { n, max });
    }
    preconditions(fam)?;
    if n == 2 {
        return Ok(line_bundle_certificate(fam));
    }
    let d = fam.degree();
    let members = fam.members();
    let full: u64 = (1u64 << n) - 1;

    let mut per_gcd: HashMap<Monomial, GcdWitness> = HashMap::new();
    let mut min_margin: Option<i64> = None;
    for mask in 1..full {
        if mask.count_ones() < 2 {
            continue;
        }
        let mut bits = mask;
        let first = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let mut g = members[first].clone();
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            g = g.gcd_unchecked(&members[i]);
        }
        let k = mask.count_ones() as usize;
        let d_j = g.degree();
        let mg = margin(d, n, d_j, k);
        min_margin = Some(min_margin.map_or(mg, |m: i64| m.min(mg)));
        if d_j == 0 {
            continue;
        }
        per_gcd
            .entry(g.clone())
            .and_modify(|w| {
                if mg < w.margin {
                    w.k = k;
                    w.margin = mg;
                }
            })
            .or_insert(GcdWitness {
                g,
                d_j,
                k,
                margin: mg,
            });
    }

    let mut witnesses: Vec<GcdWitness> = per_gcd.into_values().collect();
    witnesses.sort_by(|a, b| a.d_j.cmp(&b.d_j).then_with(|| b.g.cmp(&a.g)));
    let worst = worst_of(&witnesses);
    Ok(StabilityCertificate {
        verdict: verdict_from_min(min_margin),
        dim: fam.dim(),
        degree: d,
        n,
        witnesses,
        worst,
        min_margin,
        primary: true,
    })
}

/// No degree-`e` monomial divides more members than `X_0^e`, for `0 < e < d`.
pub fn strategy_x0_holds(fam: &MonomialFamily) -> bool {
    let nv = fam.num_vars();
    (1..fam.degree()).all(|e| {
        let bound = fam.count_multiples(&Monomial::pure_power(nv, 0, e));
        enumerate_monomials(fam.dim(), e)
            .iter()
            .all(|g| fam.count_multiples(g) <= bound)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(dim: usize, d: u32, rows: &[&[u32]]) -> MonomialFamily {
        MonomialFamily::new(
            dim,
            d,
            rows.iter().map(|r| Monomial::new(r.to_vec())).collect(),
        )
        .unwrap()
    }

    fn quadrics_326() -> MonomialFamily {
        fam(
            3,
            2,
            &[
                &[2, 0, 0, 0],
                &[0, 2, 0, 0],
                &[0, 0, 2, 0],
                &[0, 0, 0, 2],
                &[1, 1, 0, 0],
                &[0, 0, 1, 1],
            ],
        )
    }

    #[test]
    fn primary_detection() {
        assert!(is_m_primary(&quadrics_326()));
        assert!(is_m_primary(&MonomialFamily::full(3, 3)));
        let f = fam(2, 2, &[&[2, 0, 0], &[1, 1, 0], &[0, 2, 0]]);
        assert!(!is_m_primary(&f));
        assert_eq!(
            check_family(&f).unwrap_err(),
            Error::NotPrimary { missing: 2 }
        );
    }

    #[test]
    fn quadrics_in_four_variables() {
        let cert = check_family(&quadrics_326()).unwrap();
        assert_eq!(cert.verdict, Verdict::StableCertified);
        let x0 = cert
            .witnesses
            .iter()
            .find(|w| w.g == Monomial::new(vec![1, 0, 0, 0]))
            .unwrap();
        assert_eq!((x0.d_j, x0.k, x0.margin), (1, 2, 3));
        assert!(cert.witnesses.iter().all(|w| w.margin == 3));
        assert_eq!(cert.witnesses.len(), 4);
        assert_eq!(cert.worst.unwrap().margin, 3);
    }

    #[test]
    fn full_plane_conics() {
        let cert = check_family(&MonomialFamily::full(2, 2)).unwrap();
        assert_eq!(cert.verdict, Verdict::StableCertified);
        let worst = cert.worst.unwrap();
        assert_eq!(worst.g, Monomial::new(vec![1, 0, 0]));
        assert_eq!((worst.k, worst.margin), (3, 1));
        assert_eq!(cert.min_margin, Some(1));
    }

    #[test]
    fn full_line_is_only_semistable() {
        for d in 2..=8 {
            let cert = check_family(&MonomialFamily::full(1, d)).unwrap();
            assert_eq!(cert.verdict, Verdict::SemistableCertified, "d={d}");
            // J = {X0^d, ..., X0^{d-e} X1^e} attains equality
            let x0 = Monomial::new(vec![1, 0]);
            let w = cert.witnesses.iter().find(|w| w.g == x0).unwrap();
            assert_eq!(w.margin, 0);
        }
    }

    #[test]
    fn line_bundle_convention() {
        let f = fam(1, 3, &[&[3, 0], &[0, 3]]);
        for cert in [check_family(&f).unwrap(), brute_force_check(&f).unwrap()] {
            assert_eq!(cert.verdict, Verdict::StableCertified);
            assert!(cert.witnesses.is_empty());
        }
    }

    #[test]
    fn preconditions_enforced() {
        let single = fam(1, 2, &[&[2, 0]]);
        assert_eq!(
            check_family(&single).unwrap_err(),
            Error::TooFewGenerators(1)
        );
        let big = MonomialFamily::full(2, 4);
        assert_eq!(
            brute_force_check_with_limit(&big, 10).unwrap_err(),
            Error::OracleTooLarge { n: 15, max: 10 }
        );
    }

    #[test]
    fn violated_family() {
        // X0^3, X0^2 X1, X1^3: g = X0^2 has k = 2, margin 3 + 2 - 6 = -1
        let f = fam(1, 3, &[&[3, 0], &[2, 1], &[0, 3]]);
        let cert = check_family(&f).unwrap();
        assert_eq!(cert.verdict, Verdict::CriterionViolated);
        assert_eq!(cert.worst.as_ref().unwrap().margin, -1);
        let oracle = brute_force_check(&f).unwrap();
        assert_eq!(oracle.verdict, cert.verdict);
        assert_eq!(oracle.min_margin, cert.min_margin);
    }

    #[test]
    fn oracle_agrees_on_small_examples() {
        for f in [
            quadrics_326(),
            MonomialFamily::full(2, 2),
            MonomialFamily::full(1, 5),
            MonomialFamily::full(3, 2),
            fam(2, 2, &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2]]),
        ] {
            let a = check_family(&f).unwrap();
            let b = brute_force_check(&f).unwrap();
            assert_eq!(a.verdict, b.verdict, "{f:?}");
            assert_eq!(a.min_margin, b.min_margin, "{f:?}");
            assert_eq!(a.worst.map(|w| w.margin), b.worst.map(|w| w.margin));
        }
    }

    #[test]
    fn pure_powers_only_have_no_witnesses() {
        let f = fam(2, 2, &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2]]);
        let cert = check_family(&f).unwrap();
        assert_eq!(cert.verdict, Verdict::StableCertified);
        assert!(cert.worst.is_none());
        assert_eq!(cert.min_margin, Some(2));
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let f = MonomialFamily::full(3, 4);
        assert_eq!(
            check_family_with(&f, Exec::Sequential).unwrap(),
            check_family_with(&f, Exec::Parallel).unwrap()
        );
    }

    #[test]
    fn slope_sequence_increases() {
        for d in 1..=20 {
            for j in 2..=40 {
                assert!(SlopeData::a(d, j) < SlopeData::a(d, j + 1), "d={d} j={j}");
            }
        }
        for n in 2..30 {
            for d in 1..10 {
                let s = SlopeData::new(n, d);
                assert_eq!(s.slope(), SlopeData::a(d as i64, n as i64));
                assert_eq!(s.c1, -(d as i64) * n as i64);
            }
        }
    }

    #[test]
    fn strategy_x0() {
        assert!(strategy_x0_holds(&MonomialFamily::full(3, 4)));
        let f = fam(2, 2, &[&[0, 2, 0], &[0, 1, 1], &[0, 0, 2], &[2, 0, 0]]);
        assert!(!strategy_x0_holds(&f));
    }
}
