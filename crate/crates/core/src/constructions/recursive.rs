use super::{count_all, count_faces, dispatch_construction, out_of_range};
use crate::error::{Error, Result};
use crate::family::{faces_family, MonomialFamily};
use crate::monomial::Monomial;

/// `{X_0^d, X_0^{(n-2)e} X_1^e, ..., X_1^d}` with `e = d / (n - 1)`.
pub fn gen_p1(d: u32, n: usize) -> Result<MonomialFamily> {
    if n < 2 || n > d as usize + 1 {
        return Err(out_of_range(1, d, n, format!("need 2 <= n <= {}", d + 1)));
    }
    let steps = n as u32 - 1;
    if !d.is_multiple_of(steps) {
        return Err(Error::NoFamilyExists { d, n });
    }
    let e = d / steps;
    let members = (0..=steps)
        .map(|j| Monomial::new(vec![d - j * e, j * e]))
        .collect();
    MonomialFamily::new(1, d, members)
}

/// All monomials of degree `d`.
pub fn gen_full(dim: usize, d: u32) -> MonomialFamily {
    MonomialFamily::full(dim, d)
}

/// `{X_0^2, X_1^2, X_2^2, X_3^2, X_0 X_1, X_2 X_3}`, stable with every
/// relevant margin equal to 3.
pub fn gen_case326() -> MonomialFamily {
    let rows: [[u32; 4]; 6] = [
        [2, 0, 0, 0],
        [0, 2, 0, 0],
        [0, 0, 2, 0],
        [0, 0, 0, 2],
        [1, 1, 0, 0],
        [0, 0, 1, 1],
    ];
    MonomialFamily::new(
        3,
        2,
        rows.iter().map(|r| Monomial::new(r.to_vec())).collect(),
    )
    .expect("fixed family is valid")
}

/// A stable family of `n - 1` monomials in `X_0..X_{N-1}` plus `X_N^d`.
pub fn gen_face_vertex(dim: usize, d: u32, n: usize) -> Result<MonomialFamily> {
    if dim < 3 {
        return Err(out_of_range(
            dim,
            d,
            n,
            "face-vertex construction needs N >= 3",
        ));
    }
    let top = count_all(dim - 1, d) + 1;
    if n < dim + 1 || n > top {
        return Err(out_of_range(
            dim,
            d,
            n,
            format!("face-vertex construction covers {} <= n <= {top}", dim + 1),
        ));
    }
    if (dim, d, n) == (3, 2, 6) {
        return Err(out_of_range(
            dim,
            d,
            n,
            "would need a stable family at (2, 2, 5), which does not exist",
        ));
    }
    let inner = dispatch_construction(dim - 1, d, n - 1)?;
    face_vertex_from(&inner.family)
}

pub(crate) fn face_vertex_from(inner: &MonomialFamily) -> Result<MonomialFamily> {
    let lifted = inner.lift();
    let nv = lifted.num_vars();
    let vertex = Monomial::pure_power(nv, nv - 1, inner.degree());
    let mut members = lifted.members().to_vec();
    members.push(vertex);
    MonomialFamily::new(lifted.dim(), inner.degree(), members)
}

/// `F_{N,d}` together with `X_0 ... X_N` times a stable family of degree
/// `d - N - 1`.
pub fn gen_brenner(dim: usize, d: u32, n: usize) -> Result<MonomialFamily> {
    let faces = count_faces(dim, d);
    if dim < 3 || d as usize <= dim + 1 {
        return Err(out_of_range(
            dim,
            d,
            n,
            "interior lift needs N >= 3 and d > N + 1",
        ));
    }
    if n <= faces + dim + 1 || n > count_all(dim, d) {
        return Err(out_of_range(
            dim,
            d,
            n,
            format!(
                "interior lift covers {} < n <= {}",
                faces + dim + 1,
                count_all(dim, d)
            ),
        ));
    }
    let inner = dispatch_construction(dim, d - dim as u32 - 1, n - faces)?;
    interior_lift(dim, d, &inner.family)
}

pub(crate) fn interior_lift(dim: usize, d: u32, inner: &MonomialFamily) -> Result<MonomialFamily> {
    let center = Monomial::product_of_all(dim + 1);
    let mut members = faces_family(dim, d).members().to_vec();
    for f in inner {
        members.push(center.mul(f)?);
    }
    MonomialFamily::new(dim, d, members)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::criterion::{check_family, is_m_primary, Verdict};

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn p1_examples() {
        let fam = gen_p1(4, 3).unwrap();
        assert_eq!(fam.members(), &[m(&[4, 0]), m(&[2, 2]), m(&[0, 4])]);
        assert_eq!(gen_p1(3, 2).unwrap().members(), &[m(&[3, 0]), m(&[0, 3])]);
        assert_eq!(
            gen_p1(3, 3).unwrap_err(),
            Error::NoFamilyExists { d: 3, n: 3 }
        );
        assert!(matches!(gen_p1(3, 5), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn case326_shape() {
        let fam = gen_case326();
        assert_eq!((fam.len(), fam.degree(), fam.dim()), (6, 2, 3));
        assert!(is_m_primary(&fam));
        let cert = check_family(&fam).unwrap();
        assert_eq!(cert.verdict, Verdict::StableCertified);
        assert_eq!(cert.worst.unwrap().margin, 3);
    }

    #[test]
    fn full_families() {
        let c = check_family(&gen_full(2, 2)).unwrap();
        assert_eq!(
            (c.verdict, c.worst.unwrap().margin),
            (Verdict::StableCertified, 1)
        );
        assert_eq!(
            check_family(&gen_full(3, 2)).unwrap().verdict,
            Verdict::StableCertified
        );
        assert_eq!(
            check_family(&gen_full(1, 2)).unwrap().verdict,
            Verdict::SemistableCertified
        );
    }

    #[test]
    fn face_vertex_examples() {
        let fam = gen_face_vertex(3, 3, 5).unwrap();
        assert_eq!(fam.len(), 5);
        assert!(fam.contains(&m(&[0, 0, 0, 3])));
        assert!(fam.iter().filter(|x| x.exponent(3) == 0).count() == 4);
        assert_eq!(
            check_family(&fam).unwrap().verdict,
            Verdict::StableCertified
        );

        let fam = gen_face_vertex(4, 2, 6).unwrap();
        assert_eq!(
            check_family(&fam).unwrap().verdict,
            Verdict::StableCertified
        );

        // whole face plus the opposite vertex
        for (dim, d) in [(3, 2), (3, 3), (4, 2), (4, 3)] {
            let n = count_all(dim - 1, d) + 1;
            let fam = gen_face_vertex(dim, d, n).unwrap();
            let expected = gen_full(dim - 1, d)
                .lift()
                .union(
                    &MonomialFamily::new(dim, d, vec![Monomial::pure_power(dim + 1, dim, d)])
                        .unwrap(),
                )
                .unwrap();
            assert_eq!(fam, expected);
            assert_eq!(
                check_family(&fam).unwrap().verdict,
                Verdict::StableCertified
            );
        }
        assert!(gen_face_vertex(3, 2, 6).is_err());
        assert!(gen_face_vertex(2, 2, 4).is_err());
    }

    #[test]
    fn brenner_examples() {
        let fam = gen_brenner(3, 7, 105).unwrap();
        assert_eq!(fam.len(), 105);
        assert_eq!(faces_family(3, 7).len(), 100);
        assert_eq!(
            check_family(&fam).unwrap().verdict,
            Verdict::StableCertified
        );

        // top of range reproduces the full hypertetrahedron
        for (dim, d) in [(3, 6), (3, 7), (3, 8), (4, 7)] {
            let fam = gen_brenner(dim, d, count_all(dim, d)).unwrap();
            assert_eq!(fam, gen_full(dim, d));
        }
        assert!(gen_brenner(3, 5, 53).is_err());
    }
}
