//! Families of distinct equal-degree monomials and their text format.
//!
//! Text format: a header line `N d n`, then `n` lines of `N+1` whitespace
//! separated exponents. Writers always emit canonical (descending grlex) order;
//! the reader accepts any order and canonicalizes.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::{enumerate_monomials, Monomial};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialFamily {
    dim: usize,
    degree: u32,
    members: Vec<Monomial>,
}

impl MonomialFamily {
    /// Validates and canonicalizes. `dim` is `N`, the number of variables minus one.
    pub fn new(dim: usize, degree: u32, mut members: Vec<Monomial>) -> Result<Self> {
        if dim < 1 {
            return Err(Error::InvalidFamily("need at least two variables".into()));
        }
        for m in &members {
            if m.num_vars() != dim + 1 {
                return Err(Error::Dimension {
                    left: dim + 1,
                    right: m.num_vars(),
                });
            }
            if m.degree() != degree {
                return Err(Error::InvalidFamily(format!(
                    "{m} has degree {}, expected {degree}",
                    m.degree()
                )));
            }
        }
        members.sort_unstable_by(|a, b| b.cmp(a));
        if let Some(w) = members.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidFamily(format!("duplicate member {}", w[0])));
        }
        Ok(Self {
            dim,
            degree,
            members,
        })
    }

    /// Every monomial of degree `degree` in `X_0..X_dim`.
    pub fn full(dim: usize, degree: u32) -> Self {
        Self {
            dim,
            degree,
            members: enumerate_monomials(dim, degree),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_vars(&self) -> usize {
        self.dim + 1
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[Monomial] {
        &self.members
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Monomial> {
        self.members.iter()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.members.binary_search_by(|x| m.cmp(x)).is_ok()
    }

    /// Number of members divisible by `g`. No dimension check.
    pub(crate) fn count_multiples(&self, g: &Monomial) -> usize {
        self.members
            .iter()
            .filter(|m| g.divides_unchecked(m))
            .count()
    }

    /// Union with another family of the same shape; duplicates collapse.
    pub fn union(&self, other: &MonomialFamily) -> Result<MonomialFamily> {
        if other.dim != self.dim || other.degree != self.degree {
            return Err(Error::InvalidFamily(
                "union of families with different (N, d)".into(),
            ));
        }
        let mut seen: HashSet<&Monomial> = self.members.iter().collect();
        let mut members = self.members.clone();
        members.extend(other.members.iter().filter(|m| seen.insert(m)).cloned());
        MonomialFamily::new(self.dim, self.degree, members)
    }

    /// The same monomials viewed in one more variable, which does not occur.
    pub fn lift(&self) -> MonomialFamily {
        MonomialFamily {
            dim: self.dim + 1,
            degree: self.degree,
            members: self.members.iter().map(|m| m.extended(0)).collect(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {} {}\n", self.dim, self.degree, self.len());
        for m in &self.members {
            let row: Vec<String> = m.exponents().iter().map(u32::to_string).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<MonomialFamily> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "empty input".into(),
        })?;
        let header = parse_row(hline, header)?;
        let [dim, degree, n] = header[..] else {
            return Err(Error::Parse {
                line: hline,
                message: format!("header needs `N d n`, got {} fields", header.len()),
            });
        };
        if dim < 1 {
            return Err(Error::Parse {
                line: hline,
                message: "N must be at least 1".into(),
            });
        }
        let (dim, n) = (dim as usize, n as usize);

        let mut members = Vec::with_capacity(n);
        let mut seen = HashSet::new();
        for (lineno, line) in lines.by_ref() {
            let row = parse_row(lineno, line)?;
            if row.len() != dim + 1 {
                return Err(Error::Parse {
                    line: lineno,
                    message: format!("expected {} exponents, got {}", dim + 1, row.len()),
                });
            }
            let m = Monomial::new(row);
            if m.degree() != degree {
                return Err(Error::Parse {
                    line: lineno,
                    message: format!("{m} has degree {}, header says {degree}", m.degree()),
                });
            }
            if !seen.insert(m.clone()) {
                return Err(Error::Parse {
                    line: lineno,
                    message: format!("duplicate monomial {m}"),
                });
            }
            members.push(m);
        }
        if members.len() != n {
            return Err(Error::Parse {
                line: hline,
                message: format!("header announces {n} monomials, found {}", members.len()),
            });
        }
        MonomialFamily::new(dim, degree, members)
    }
}

fn parse_row(line: usize, text: &str) -> Result<Vec<u32>> {
    text.split_whitespace()
        .map(|tok| {
            tok.parse::<u32>().map_err(|e| Error::Parse {
                line,
                message: format!("bad integer {tok:?}: {e}"),
            })
        })
        .collect()
}

impl fmt::Display for MonomialFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for MonomialFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "N={} d={} {}", self.dim, self.degree, self)
    }
}

impl<'a> IntoIterator for &'a MonomialFamily {
    type Item = &'a Monomial;
    type IntoIter = std::slice::Iter<'a, Monomial>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

/// Monomials of degree `degree` missing at least one variable: the union of
/// all faces of the hypertetrahedron.
pub fn faces_family(dim: usize, degree: u32) -> MonomialFamily {
    MonomialFamily {
        dim,
        degree,
        members: enumerate_monomials(dim, degree)
            .into_iter()
            .filter(Monomial::on_boundary)
            .collect(),
    }
}

/// Members of `fam` divisible by `g`, in canonical order.
pub fn multiples_in_family(g: &Monomial, fam: &MonomialFamily) -> Result<MonomialFamily> {
    if g.num_vars() != fam.num_vars() {
        return Err(Error::Dimension {
            left: g.num_vars(),
            right: fam.num_vars(),
        });
    }
    Ok(MonomialFamily {
        dim: fam.dim,
        degree: fam.degree,
        members: fam
            .members
            .iter()
            .filter(|m| g.divides_unchecked(m))
            .cloned()
            .collect(),
    })
}
