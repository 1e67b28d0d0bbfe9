//! Exact stability decisions on the projective line.
//!
//! For a monomial ideal in two variables the minimal syzygies are the
//! relations between neighbours in the `X_0`-degree order, so the syzygy
//! bundle splits as `O(-deg lcm(m_i, m_{i+1}))` over consecutive pairs.

use crate::criterion::{is_m_primary, missing_pure_power, Verdict};
use crate::error::{Error, Result};
use crate::family::MonomialFamily;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplittingType {
    /// Consecutive-pair twists, ordered by decreasing `X_0`-exponent.
    pub twists: Vec<i64>,
}

impl SplittingType {
    pub fn sum(&self) -> i64 {
        self.twists.iter().sum()
    }

    pub fn is_balanced(&self) -> bool {
        self.twists.windows(2).all(|w| w[0] == w[1])
    }
}

fn check_p1(fam: &MonomialFamily) -> Result<()> {
    if fam.dim() != 1 {
        return Err(Error::Dimension {
            left: 2,
            right: fam.num_vars(),
        });
    }
    if fam.len() < 2 {
        return Err(Error::TooFewGenerators(fam.len()));
    }
    if !is_m_primary(fam) {
        return Err(Error::NotPrimary {
            missing: missing_pure_power(fam).unwrap_or(0),
        });
    }
    Ok(())
}

pub fn splitting_type_p1(fam: &MonomialFamily) -> Result<SplittingType> {
    check_p1(fam)?;
    // canonical order on two variables is already decreasing X_0-exponent
    let twists = fam
        .members()
        .windows(2)
        .map(|w| -(w[0].lcm(&w[1]).expect("same dimension").degree() as i64))
        .collect();
    Ok(SplittingType { twists })
}

pub fn is_semistable_p1(fam: &MonomialFamily) -> Result<Verdict> {
    let split = splitting_type_p1(fam)?;
    Ok(if fam.len() == 2 {
        Verdict::StableCertified
    } else if split.is_balanced() {
        Verdict::SemistableCertified
    } else {
        Verdict::NotSemistable
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Monomial;

    fn p1(d: u32, x0_exps: &[u32]) -> MonomialFamily {
        let ms = x0_exps
            .iter()
            .map(|&a| Monomial::new(vec![a, d - a]))
            .collect();
        MonomialFamily::new(1, d, ms).unwrap()
    }

    #[test]
    fn balanced_example() {
        let fam = p1(4, &[4, 2, 0]);
        let s = splitting_type_p1(&fam).unwrap();
        assert_eq!(s.twists, vec![-6, -6]);
        assert_eq!(
            is_semistable_p1(&fam).unwrap(),
            Verdict::SemistableCertified
        );
    }

    #[test]
    fn unbalanced_example() {
        let fam = p1(3, &[3, 2, 0]);
        let s = splitting_type_p1(&fam).unwrap();
        assert_eq!(s.twists, vec![-4, -5]);
        assert_eq!(is_semistable_p1(&fam).unwrap(), Verdict::NotSemistable);
    }

    #[test]
    fn coprime_pair() {
        for d in 1..8 {
            let fam = p1(d, &[d, 0]);
            let s = splitting_type_p1(&fam).unwrap();
            assert_eq!(s.twists, vec![-2 * d as i64]);
            assert_eq!(is_semistable_p1(&fam).unwrap(), Verdict::StableCertified);
        }
    }

    #[test]
    fn sum_equals_first_chern_class() {
        // every m-primary family for d <= 8
        for d in 1..=8u32 {
            let inner = d as usize - 1;
            for mask in 0u32..(1 << inner) {
                let mut exps = vec![d, 0];
                exps.extend((1..d).filter(|a| mask & (1 << (a - 1)) != 0));
                let fam = p1(d, &exps);
                let s = splitting_type_p1(&fam).unwrap();
                assert_eq!(s.sum(), -(d as i64) * fam.len() as i64);
                assert!(s.twists.iter().all(|&t| t < 0));
            }
        }
    }

    #[test]
    fn errors() {
        let full2 = MonomialFamily::full(2, 2);
        assert!(matches!(
            splitting_type_p1(&full2),
            Err(Error::Dimension { .. })
        ));
        let not_primary = p1(3, &[3, 2]);
        assert!(matches!(
            is_semistable_p1(&not_primary),
            Err(Error::NotPrimary { missing: 1 })
        ));
    }
}
