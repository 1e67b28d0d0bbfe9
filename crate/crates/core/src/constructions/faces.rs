//! Families built from whole faces of the hypertetrahedron.
//!
//! For `1 <= r <= min(d-1, N)` and `0 <= l <= d-r-1` the family is
//! `I'_r ∪ I''_{r,l} ∪ I'''_{r,l}`:
//!
//! * `I'_r`: monomials missing one of `X_{N-r+1}, ..., X_N`;
//! * `I''_{r,l}`: `X_{N-r+1}...X_{N-1} X_N^{d-r-l+1} f` with `deg f = l`
//!   and `X_{N-r}` absent from `f`;
//! * `I'''_{r,l}`: the first `i` of `X_{N-r+1}...X_{N-1} X_N^{d-r-l} f`
//!   with `deg f = l + 1`, `X_{N-r}` and `X_N` absent from `f`, taking `f`
//!   in canonical order (largest `X_0`-degree first).
//!
//! `i` ranges over `1..=C(l+N-1, N-2)`, and additionally `i = 0` when
//! `l = 0`. Without the `l = 0, i = 0` cells the brackets would skip
//! `n = |I'_r| + 1` for every `r >= 2`.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::{count_all, count_faces, out_of_range};
use crate::binomial::binomial;
use crate::error::{Error, Result};
use crate::family::{faces_family, MonomialFamily};
use crate::monomial::{enumerate_monomials, Monomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CaseDecomposition {
    pub r: u32,
    pub l: u32,
    pub i: usize,
}

/// The `n`-interval covered by one `(r, l)` pair, both ends inclusive.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FacesBracket {
    pub r: u32,
    pub l: u32,
    pub lo: usize,
    pub hi: usize,
}

fn b(a: i64, k: i64) -> BigInt {
    binomial(a, k)
}

fn to_usize(v: BigInt) -> usize {
    v.to_usize().expect("count fits a machine word")
}

/// `|I'_r| = C(d+N, N) - C(d-r+N, N)`
fn base_count(dim: usize, d: u32, r: u32) -> usize {
    let (nn, d, r) = (dim as i64, d as i64, r as i64);
    to_usize(b(d + nn, nn) - b(d - r + nn, nn))
}

/// Every `(r, l)` bracket in scan order (`r` ascending, then `l`).
pub fn faces_brackets(dim: usize, d: u32) -> Vec<FacesBracket> {
    let nn = dim as i64;
    let mut out = Vec::new();
    if d < 2 || dim < 2 {
        return out;
    }
    let r_max = (d - 1).min(dim as u32);
    for r in 1..=r_max {
        let base = base_count(dim, d, r);
        for l in 0..=(d - r - 1) {
            let li = l as i64;
            let with_double = base + to_usize(b(li + nn - 1, nn - 1));
            let lo = if l == 0 { with_double } else { with_double + 1 };
            let hi = base + to_usize(b(li + nn, nn - 1));
            out.push(FacesBracket { r, l, lo, hi });
        }
    }
    out
}

/// The `n` handled by the face-filling construction, inclusive:
/// `(C(d+N-1, N-1) + 1, C(d+N, N) - C(d-1, N)]`, minus the full set.
pub fn faces_range(dim: usize, d: u32) -> (usize, usize) {
    let lo = count_all(dim - 1, d) + 2;
    let hi = count_faces(dim, d).min(count_all(dim, d) - 1);
    (lo, hi)
}

/// The unique `(r, l, i)` placing `n` in the bracket scan.
pub fn decompose_faces_case(dim: usize, d: u32, n: usize) -> Result<CaseDecomposition> {
    if dim < 3 || d < 2 {
        return Err(out_of_range(
            dim,
            d,
            n,
            "face filling needs N >= 3 and d >= 2",
        ));
    }
    let (lo, hi) = faces_range(dim, d);
    if n < lo || n > hi {
        return Err(out_of_range(
            dim,
            d,
            n,
            format!("face filling covers {lo} <= n <= {hi}"),
        ));
    }
    let brackets = faces_brackets(dim, d);
    let mut hits = brackets.iter().filter(|br| br.lo <= n && n <= br.hi);
    let Some(hit) = hits.next() else {
        return Err(Error::Internal(format!(
            "no (r, l) bracket contains n = {n} at (N, d) = ({dim}, {d})"
        )));
    };
    if let Some(other) = hits.next() {
        return Err(Error::Internal(format!(
            "brackets (r={}, l={}) and (r={}, l={}) overlap at n = {n}",
            hit.r, hit.l, other.r, other.l
        )));
    }
    let first_i =
        base_count(dim, d, hit.r) + to_usize(b(hit.l as i64 + dim as i64 - 1, dim as i64 - 1));
    Ok(CaseDecomposition {
        r: hit.r,
        l: hit.l,
        i: n - first_i,
    })
}

/// `X_{N-r+1} ... X_{N-1} X_N^{top}` as an exponent vector.
fn tail_monomial(dim: usize, r: u32, top: u32) -> Monomial {
    let mut e = vec![0u32; dim + 1];
    for v in (dim + 1 - r as usize)..dim {
        e[v] = 1;
    }
    e[dim] = top;
    Monomial::new(e)
}

pub fn gen_prop_faces(dim: usize, d: u32, n: usize) -> Result<MonomialFamily> {
    if dim >= 3 && n == count_all(dim, d) && count_faces(dim, d) == n {
        return Ok(MonomialFamily::full(dim, d));
    }
    let CaseDecomposition { r, l, i } = decompose_faces_case(dim, d, n)?;
    let skip = dim - r as usize; // X_{N-r}
    let last_r = (dim + 1 - r as usize)..=dim;

    let mut members: Vec<Monomial> = enumerate_monomials(dim, d)
        .into_iter()
        .filter(|m| last_r.clone().any(|v| m.exponent(v) == 0))
        .collect();

    let double_tail = tail_monomial(dim, r, d - r - l + 1);
    for f in enumerate_monomials(dim, l) {
        if f.exponent(skip) == 0 {
            members.push(double_tail.mul(&f)?);
        }
    }

    let single_tail = tail_monomial(dim, r, d - r - l);
    let extra = enumerate_monomials(dim, l + 1)
        .into_iter()
        .filter(|f| f.exponent(skip) == 0 && f.exponent(dim) == 0)
        .take(i);
    for f in extra {
        members.push(single_tail.mul(&f)?);
    }

    MonomialFamily::new(dim, d, members)
}

/// `F_{N,d}` plus the first `n - |F_{N,d}|` of
/// `X_0^{d-N} X_1...X_N, X_0 X_1^{d-N} X_2...X_N, ..., X_0...X_{N-1} X_N^{d-N}`.
pub fn gen_faces_and_dots(dim: usize, d: u32, n: usize) -> Result<MonomialFamily> {
    if dim < 3 || d as usize <= dim + 1 {
        return Err(out_of_range(
            dim,
            d,
            n,
            "faces and dots needs N >= 3 and d > N + 1",
        ));
    }
    let faces = faces_family(dim, d);
    let i = n
        .checked_sub(faces.len())
        .filter(|&i| (1..=dim + 1).contains(&i));
    let Some(i) = i else {
        return Err(out_of_range(
            dim,
            d,
            n,
            format!(
                "faces and dots covers {} < n <= {}",
                faces.len(),
                faces.len() + dim + 1
            ),
        ));
    };
    let mut members = faces.members().to_vec();
    for j in 0..i {
        let mut e = vec![1u32; dim + 1];
        e[j] = d - dim as u32;
        members.push(Monomial::new(e));
    }
    MonomialFamily::new(dim, d, members)
}
