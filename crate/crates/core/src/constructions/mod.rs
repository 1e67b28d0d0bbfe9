//! Explicit families for every admissible `(N, d, n)`.
//!
//! [`dispatch`] picks a construction from `(N, d, n)` alone, builds it,
//! recursing on `N` (face plus opposite vertex) or on `d` (interior lift),
//! and certifies the result before returning it.

mod faces;
mod plane;
mod recursive;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use faces::{
    decompose_faces_case, faces_brackets, faces_range, gen_faces_and_dots, gen_prop_faces,
    CaseDecomposition, FacesBracket,
};
pub use plane::{
    exhaustive_225, gen_225_semistable, gen_n2_search, n2_search_with_method, Candidate225,
    SearchMethod,
};
pub use recursive::{gen_brenner, gen_case326, gen_face_vertex, gen_full, gen_p1};

use crate::binomial::binomial;
use crate::criterion::{
    check_family, is_m_primary, is_semistable_p1, StabilityCertificate, Verdict,
};
use crate::error::{Error, Result};
use crate::family::MonomialFamily;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RouteTag {
    P1Family,
    FaceVertex,
    PropFaces,
    FullSet,
    FacesAndDots,
    BrennerRecursion,
    Case326,
    N2Search,
    Search225,
}

impl fmt::Display for RouteTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RouteParams {
    None,
    P1 {
        e: u32,
    },
    Faces(CaseDecomposition),
    Dots {
        i: usize,
    },
    /// Sub-family obtained recursively at `(dim, degree, n)`.
    Inner {
        dim: usize,
        degree: u32,
        n: usize,
        route: Box<ConstructionRoute>,
    },
    Search(SearchMethod),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionRoute {
    pub tag: RouteTag,
    pub params: RouteParams,
}

impl ConstructionRoute {
    fn new(tag: RouteTag, params: RouteParams) -> Self {
        Self { tag, params }
    }

    /// One-line description including recursive sub-routes.
    pub fn describe(&self) -> String {
        match &self.params {
            RouteParams::None => self.tag.to_string(),
            RouteParams::P1 { e } => format!("{}(e={e})", self.tag),
            RouteParams::Faces(c) => format!("{}(r={}, l={}, i={})", self.tag, c.r, c.l, c.i),
            RouteParams::Dots { i } => format!("{}(i={i})", self.tag),
            RouteParams::Search(m) => format!("{}({m:?})", self.tag),
            RouteParams::Inner {
                dim,
                degree,
                n,
                route,
            } => format!("{} <- ({dim},{degree},{n}) {}", self.tag, route.describe()),
        }
    }
}

impl fmt::Display for ConstructionRoute {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

#[derive(Clone, Debug)]
pub struct Construction {
    pub route: ConstructionRoute,
    pub family: MonomialFamily,
    pub certificate: StabilityCertificate,
}

pub(crate) fn out_of_range(dim: usize, d: u32, n: usize, reason: impl Into<String>) -> Error {
    Error::OutOfRange {
        nvars: dim,
        d,
        n,
        reason: reason.into(),
    }
}

/// `C(d + N, N)` as a machine integer, saturating for absurdly large grids.
pub fn count_all(dim: usize, d: u32) -> usize {
    use num_traits::ToPrimitive;
    binomial(d as i64 + dim as i64, dim as i64)
        .to_usize()
        .unwrap_or(usize::MAX)
}

/// `|F_{N,d}| = C(d + N, N) - C(d - 1, N)`.
pub(crate) fn count_faces(dim: usize, d: u32) -> usize {
    use num_traits::ToPrimitive;
    (binomial(d as i64 + dim as i64, dim as i64) - binomial(d as i64 - 1, dim as i64))
        .to_usize()
        .unwrap_or(usize::MAX)
}

/// The verdict a correct construction must earn at `(N, d, n)`.
pub fn expected_verdict(dim: usize, d: u32, n: usize) -> Verdict {
    match (dim, d, n) {
        (1, _, 2) => Verdict::StableCertified,
        (1, _, _) => Verdict::SemistableCertified,
        (2, 2, 5) => Verdict::SemistableCertified,
        _ => Verdict::StableCertified,
    }
}

/// Which construction handles `(N, d, n)`; validates the range.
pub fn route_for(dim: usize, d: u32, n: usize) -> Result<RouteTag> {
    if dim < 1 {
        return Err(out_of_range(dim, d, n, "N must be at least 1"));
    }
    if d < 1 {
        return Err(out_of_range(dim, d, n, "d must be at least 1"));
    }
    let total = count_all(dim, d);
    if n < dim + 1 || n > total {
        return Err(out_of_range(
            dim,
            d,
            n,
            format!("need {} <= n <= {total}", dim + 1),
        ));
    }
    let tag = match dim {
        1 => {
            if !(d as usize).is_multiple_of(n - 1) {
                return Err(Error::NoFamilyExists { d, n });
            }
            RouteTag::P1Family
        }
        2 if (d, n) == (2, 5) => RouteTag::Search225,
        2 => RouteTag::N2Search,
        _ => {
            let face_vertex_top = count_all(dim - 1, d) + 1;
            let faces = count_faces(dim, d);
            if (dim, d, n) == (3, 2, 6) {
                RouteTag::Case326
            } else if n <= face_vertex_top {
                RouteTag::FaceVertex
            } else if n == total && d as usize <= dim + 1 {
                RouteTag::FullSet
            } else if n <= faces {
                RouteTag::PropFaces
            } else if n <= faces + dim + 1 {
                RouteTag::FacesAndDots
            } else {
                RouteTag::BrennerRecursion
            }
        }
    };
    Ok(tag)
}

/// Builds an uncertified family for `(N, d, n)`; sub-families used by the
/// recursive routes are certified by their own `dispatch` calls.
pub(crate) fn build(dim: usize, d: u32, n: usize) -> Result<(ConstructionRoute, MonomialFamily)> {
    let tag = route_for(dim, d, n)?;
    let (params, family) = match tag {
        RouteTag::P1Family => {
            let e = d / (n as u32 - 1);
            (RouteParams::P1 { e }, gen_p1(d, n)?)
        }
        RouteTag::Search225 => (RouteParams::None, gen_225_semistable()),
        RouteTag::N2Search => {
            let (fam, method) = n2_search_with_method(d, n)?;
            (RouteParams::Search(method), fam)
        }
        RouteTag::Case326 => (RouteParams::None, gen_case326()),
        RouteTag::FaceVertex => {
            let inner = dispatch_construction(dim - 1, d, n - 1)?;
            let fam = recursive::face_vertex_from(&inner.family)?;
            (
                RouteParams::Inner {
                    dim: dim - 1,
                    degree: d,
                    n: n - 1,
                    route: Box::new(inner.route),
                },
                fam,
            )
        }
        RouteTag::FullSet => (RouteParams::None, gen_full(dim, d)),
        RouteTag::PropFaces => {
            let case = decompose_faces_case(dim, d, n)?;
            (RouteParams::Faces(case), gen_prop_faces(dim, d, n)?)
        }
        RouteTag::FacesAndDots => {
            let i = n - count_faces(dim, d);
            (RouteParams::Dots { i }, gen_faces_and_dots(dim, d, n)?)
        }
        RouteTag::BrennerRecursion => {
            let n_inner = n - count_faces(dim, d);
            let d_inner = d - dim as u32 - 1;
            let inner = dispatch_construction(dim, d_inner, n_inner)?;
            let fam = recursive::interior_lift(dim, d, &inner.family)?;
            (
                RouteParams::Inner {
                    dim,
                    degree: d_inner,
                    n: n_inner,
                    route: Box::new(inner.route),
                },
                fam,
            )
        }
    };
    Ok((ConstructionRoute::new(tag, params), family))
}

/// Route, family and certificate for `(N, d, n)`.
///
/// Fails with [`Error::Internal`] if the built family does not earn
/// [`expected_verdict`], so a successful return is always certified.
pub fn dispatch_construction(dim: usize, d: u32, n: usize) -> Result<Construction> {
    let (route, family) = build(dim, d, n)?;
    if family.len() != n || family.dim() != dim || family.degree() != d {
        return Err(Error::Internal(format!(
            "{} built a family of shape ({}, {}, {}) for ({dim}, {d}, {n})",
            route.tag,
            family.dim(),
            family.degree(),
            family.len()
        )));
    }
    if !is_m_primary(&family) {
        return Err(Error::Internal(format!(
            "{} built a non-primary family for ({dim}, {d}, {n})",
            route.tag
        )));
    }
    let certificate = check_family(&family)?;
    let expected = expected_verdict(dim, d, n);
    if certificate.verdict != expected {
        return Err(Error::Internal(format!(
            "{} family for ({dim}, {d}, {n}) earned {} instead of {expected}",
            route.tag, certificate.verdict
        )));
    }
    if dim == 1 && is_semistable_p1(&family)? != expected {
        return Err(Error::Internal(format!(
            "splitting type of the ({dim}, {d}, {n}) family disagrees with {expected}"
        )));
    }
    Ok(Construction {
        route,
        family,
        certificate,
    })
}

/// The route taken and the certified family for `(N, d, n)`.
pub fn dispatch(dim: usize, d: u32, n: usize) -> Result<(ConstructionRoute, MonomialFamily)> {
    let c = dispatch_construction(dim, d, n)?;
    Ok((c.route, c.family))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn routes_for_examples() {
        assert_eq!(route_for(3, 2, 6).unwrap(), RouteTag::Case326);
        assert_eq!(route_for(3, 4, 20).unwrap(), RouteTag::PropFaces);
        assert_eq!(route_for(3, 7, 105).unwrap(), RouteTag::BrennerRecursion);
        assert_eq!(route_for(3, 3, 5).unwrap(), RouteTag::FaceVertex);
        assert_eq!(route_for(3, 5, 53).unwrap(), RouteTag::FacesAndDots);
        assert_eq!(route_for(3, 4, 35).unwrap(), RouteTag::FullSet);
        assert_eq!(route_for(3, 3, 20).unwrap(), RouteTag::FullSet);
        assert_eq!(route_for(2, 2, 5).unwrap(), RouteTag::Search225);
        assert_eq!(route_for(1, 4, 3).unwrap(), RouteTag::P1Family);
    }

    #[test]
    fn range_errors() {
        assert!(matches!(route_for(3, 2, 3), Err(Error::OutOfRange { .. })));
        assert!(matches!(route_for(3, 2, 11), Err(Error::OutOfRange { .. })));
        assert!(matches!(route_for(0, 2, 1), Err(Error::OutOfRange { .. })));
        assert!(matches!(route_for(2, 0, 3), Err(Error::OutOfRange { .. })));
        assert_eq!(
            route_for(1, 3, 3).unwrap_err(),
            Error::NoFamilyExists { d: 3, n: 3 }
        );
    }

    #[test]
    fn route_ranges_tile() {
        for dim in 3..=6usize {
            for d in 1..=8u32 {
                let total = count_all(dim, d);
                for n in 0..=total + 2 {
                    let ok = route_for(dim, d, n).is_ok();
                    assert_eq!(ok, (dim + 1..=total).contains(&n), "({dim},{d},{n})");
                }
            }
        }
    }

    #[test]
    fn dispatch_is_deterministic() {
        for (dim, d, n) in [(3, 4, 20), (3, 3, 5), (4, 2, 6), (2, 4, 9)] {
            let a = dispatch(dim, d, n).unwrap();
            let b = dispatch(dim, d, n).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn small_dispatches_certify() {
        for dim in 1..=3usize {
            for d in 1..=4u32 {
                for n in dim + 1..=count_all(dim, d) {
                    match dispatch_construction(dim, d, n) {
                        Ok(c) => assert_eq!(c.certificate.verdict, expected_verdict(dim, d, n)),
                        Err(Error::NoFamilyExists { .. }) => assert_eq!(dim, 1),
                        Err(e) => panic!("({dim},{d},{n}): {e}"),
                    }
                }
            }
        }
    }

    #[test]
    fn describe_recursion() {
        let (route, _) = dispatch(4, 2, 7).unwrap();
        assert_eq!(route.tag, RouteTag::FaceVertex);
        assert!(route.describe().contains("Case326"), "{}", route.describe());
    }
}
