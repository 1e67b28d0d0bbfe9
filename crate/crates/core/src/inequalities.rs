//! Exact evaluators for the auxiliary functions used to show that the
//! face-filling, faces-and-dots and interior-lift families satisfy the
//! subset inequality, with finite grid sweeps auditing their sign.
//!
//! Each function is evaluated from its binomial closed form. Arguments
//! outside the range where the stability argument invokes the function are
//! still evaluated, but the trace records `in_range = false`.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::binomial::{binomial, factorial};
use crate::exec::Exec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Function {
    T,
    U,
    V,
    Q,
    P,
    Brenner2Gap,
}

impl Function {
    pub const ALL: [Function; 6] = [
        Function::T,
        Function::U,
        Function::V,
        Function::Q,
        Function::P,
        Function::Brenner2Gap,
    ];

    pub fn arg_names(self) -> &'static [&'static str] {
        match self {
            Function::T => &["N", "d", "d_J", "r", "l"],
            Function::U => &["N", "d", "r", "l"],
            Function::V => &["d", "d_J", "N"],
            Function::Q => &["N", "d", "d_J", "t"],
            Function::P => &["n'", "k'", "N", "d", "d_J", "i"],
            Function::Brenner2Gap => &["N", "d"],
        }
    }

    /// Whether a value counts as a violation: the gap must be nonnegative,
    /// everything else strictly positive.
    pub fn violates(self, value: &BigRational) -> bool {
        match self {
            Function::Brenner2Gap => value.is_negative(),
            _ => !value.is_positive(),
        }
    }
}

impl fmt::Display for Function {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Function::Brenner2Gap => "brenner2",
            other => return fmt::Debug::fmt(other, f),
        };
        f.write_str(s)
    }
}

impl FromStr for Function {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "t" => Ok(Function::T),
            "u" => Ok(Function::U),
            "v" => Ok(Function::V),
            "q" => Ok(Function::Q),
            "p" => Ok(Function::P),
            "brenner2" | "brenner2gap" | "gap" => Ok(Function::Brenner2Gap),
            _ => Err(format!(
                "unknown function {s:?} (expected T, U, V, Q, P or brenner2)"
            )),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(v: &BigRational) -> Self {
        if v.is_negative() {
            Sign::Negative
        } else if v.is_zero() {
            Sign::Zero
        } else {
            Sign::Positive
        }
    }
}

fn ser_rational<S: Serializer>(v: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InequalityTrace {
    pub function: Function,
    pub arguments: Vec<i64>,
    #[serde(serialize_with = "ser_rational")]
    pub value: BigRational,
    pub sign: Sign,
    pub in_range: bool,
}

impl InequalityTrace {
    fn new(function: Function, arguments: Vec<i64>, value: BigInt, in_range: bool) -> Self {
        Self::from_rational(
            function,
            arguments,
            BigRational::from_integer(value),
            in_range,
        )
    }

    fn from_rational(
        function: Function,
        arguments: Vec<i64>,
        value: BigRational,
        in_range: bool,
    ) -> Self {
        let sign = Sign::of(&value);
        Self {
            function,
            arguments,
            value,
            sign,
            in_range,
        }
    }
}

fn c(a: i64, b: i64) -> BigInt {
    binomial(a, b)
}

fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

/// `|F_{N,d}| = C(d+N, N) - C(d-1, N)`
fn faces_count(nn: i64, d: i64) -> BigInt {
    c(d + nn, nn) - c(d - 1, nn)
}

pub fn t_in_range(nn: i64, d: i64, dj: i64, r: i64, l: i64) -> bool {
    nn >= 3 && 1 <= r && r <= (d - 1).min(nn) && 0 < dj && dj <= l && l < d - r
}

/// Case `0 < d_J <= l` of the face-filling family.
pub fn eval_t(nn: i64, d: i64, dj: i64, r: i64, l: i64) -> InequalityTrace {
    let value = int(d - dj) * (c(d + nn, nn) - c(d - r + nn, nn) + c(l + nn - 1, nn - 1)) + int(dj)
        - int(d) * (c(d - dj + nn, nn) - c(d - dj - r + nn, nn) + c(l - dj + nn - 1, nn - 1))
        - int(dj) * c(l - dj + nn - 1, nn - 2);
    InequalityTrace::new(
        Function::T,
        vec![nn, d, dj, r, l],
        value,
        t_in_range(nn, d, dj, r, l),
    )
}

pub fn u_in_range(nn: i64, d: i64, r: i64, l: i64) -> bool {
    nn >= 3 && 1 <= r && r <= (d - 1).min(nn) && 0 <= l && l < d - r
}

/// Case `d_J = l + 1` of the face-filling family.
pub fn eval_u(nn: i64, d: i64, r: i64, l: i64) -> InequalityTrace {
    let value = int(d - l - 1) * (c(d + nn, nn) - c(d - r + nn, nn) + c(l + nn - 1, nn - 1))
        - int(d) * (c(d - l - 1 + nn, nn) - c(d - l - 1 - r + nn, nn));
    InequalityTrace::new(
        Function::U,
        vec![nn, d, r, l],
        value,
        u_in_range(nn, d, r, l),
    )
}

pub fn v_in_range(d: i64, dj: i64, nn: i64) -> bool {
    nn >= 3 && d > nn + 1 && 1 <= dj && dj <= d - nn
}

/// Faces plus interior dots, `1 <= d_J <= d - N`.
pub fn eval_v(d: i64, dj: i64, nn: i64) -> InequalityTrace {
    let value = int(d - dj) * faces_count(nn, d) - int(d) * (c(d - dj + nn, nn) - c(d - dj, nn));
    InequalityTrace::new(Function::V, vec![d, dj, nn], value, v_in_range(d, dj, nn))
}

pub fn q_in_range(nn: i64, d: i64, dj: i64, t: i64) -> bool {
    nn >= 3 && d >= nn + 2 && 1 <= dj && dj < d && 0 <= t && t <= nn && dj >= nn + 1 - t
}

/// Interior-lift correction term; `t` is the number of variables missing
/// from the gcd.
pub fn eval_q(nn: i64, d: i64, dj: i64, t: i64) -> InequalityTrace {
    let value = int(d - dj) * faces_count(nn, d) - int(d) * c(d - dj + nn, nn)
        + int(d - nn - 1 + t) * c(d - dj + nn - t, nn);
    InequalityTrace::new(
        Function::Q,
        vec![nn, d, dj, t],
        value,
        q_in_range(nn, d, dj, t),
    )
}

pub fn p_in_range(n_inner: i64, k_inner: i64, nn: i64, d: i64, dj: i64, i: i64) -> bool {
    q_in_range(nn, d, dj, i)
        && 0 <= k_inner
        && k_inner <= n_inner
        && int(k_inner) <= c(d - dj + nn - i, nn)
}

/// Interior-lift bookkeeping term in the inner family's size `n'` and the
/// inner subset size `k'`.
pub fn eval_p(n_inner: i64, k_inner: i64, nn: i64, d: i64, dj: i64, i: i64) -> InequalityTrace {
    let value = int(i) * int(n_inner - k_inner)
        + int(nn + 1 - i) * (c(d - dj + nn - i, nn) - int(k_inner) + 1);
    InequalityTrace::new(
        Function::P,
        vec![n_inner, k_inner, nn, d, dj, i],
        value,
        p_in_range(n_inner, k_inner, nn, d, dj, i),
    )
}

/// `C(d+N, N) - C(d-1, N) - (N+1)/(N-1)! d^{N-1}`.
pub fn brenner2_gap(nn: i64, d: i64) -> InequalityTrace {
    let in_range = nn >= 1 && d >= 0;
    let bound = if nn >= 1 {
        BigRational::new(
            int(nn + 1) * num_traits::pow(int(d), (nn - 1) as usize),
            factorial((nn - 1) as u64),
        )
    } else {
        BigRational::zero()
    };
    let value = BigRational::from_integer(faces_count(nn, d)) - bound;
    InequalityTrace::from_rational(Function::Brenner2Gap, vec![nn, d], value, in_range)
}

pub fn evaluate(function: Function, args: &[i64]) -> InequalityTrace {
    match (function, args) {
        (Function::T, &[nn, d, dj, r, l]) => eval_t(nn, d, dj, r, l),
        (Function::U, &[nn, d, r, l]) => eval_u(nn, d, r, l),
        (Function::V, &[d, dj, nn]) => eval_v(d, dj, nn),
        (Function::Q, &[nn, d, dj, t]) => eval_q(nn, d, dj, t),
        (Function::P, &[np, kp, nn, d, dj, i]) => eval_p(np, kp, nn, d, dj, i),
        (Function::Brenner2Gap, &[nn, d]) => brenner2_gap(nn, d),
        _ => panic!("{function} takes {} arguments", function.arg_names().len()),
    }
}

/// Grid for a sweep; all other parameters run over their in-range values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepRanges {
    pub dim: RangeInclusive<i64>,
    pub d: RangeInclusive<i64>,
    /// Random samples for `P`.
    pub samples: usize,
    pub seed: u64,
}

impl SweepRanges {
    pub fn new(dim: RangeInclusive<i64>, d: RangeInclusive<i64>) -> Self {
        Self {
            dim,
            d,
            samples: 10_000,
            seed: 0x5eed,
        }
    }
}

/// In-range argument tuples for every function except `P`.
pub fn grid_points(function: Function, ranges: &SweepRanges) -> Vec<Vec<i64>> {
    let mut pts = Vec::new();
    for nn in ranges.dim.clone() {
        for d in ranges.d.clone() {
            match function {
                Function::T => {
                    for r in 1..=(d - 1).min(nn) {
                        for l in 0..=d - r - 1 {
                            for dj in 1..=l {
                                pts.push(vec![nn, d, dj, r, l]);
                            }
                        }
                    }
                }
                Function::U => {
                    for r in 1..=(d - 1).min(nn) {
                        for l in 0..=d - r - 1 {
                            pts.push(vec![nn, d, r, l]);
                        }
                    }
                }
                Function::V => {
                    if d > nn + 1 {
                        for dj in 1..=d - nn {
                            pts.push(vec![d, dj, nn]);
                        }
                    }
                }
                Function::Q => {
                    if d >= nn + 2 {
                        for dj in 1..d {
                            for t in (nn + 1 - dj).max(0)..=nn {
                                pts.push(vec![nn, d, dj, t]);
                            }
                        }
                    }
                }
                Function::Brenner2Gap => pts.push(vec![nn, d]),
                Function::P => {}
            }
        }
    }
    pts
}

/// Seeded random in-range tuples for `P`.
pub fn p_samples(ranges: &SweepRanges) -> Vec<Vec<i64>> {
    use num_traits::ToPrimitive;
    let mut rng = ChaCha8Rng::seed_from_u64(ranges.seed);
    let cells: Vec<(i64, i64)> = ranges
        .dim
        .clone()
        .flat_map(|nn| ranges.d.clone().map(move |d| (nn, d)))
        .filter(|&(nn, d)| nn >= 3 && d >= nn + 2)
        .collect();
    if cells.is_empty() {
        return Vec::new();
    }
    (0..ranges.samples)
        .map(|_| {
            let (nn, d) = cells[rng.random_range(0..cells.len())];
            let dj = rng.random_range(1..d);
            let i = rng.random_range((nn + 1 - dj).max(0)..=nn);
            let k_max = c(d - dj + nn - i, nn).to_i64().unwrap_or(i64::MAX);
            let n_max = c(d - 1, nn).to_i64().unwrap_or(i64::MAX); // C(d'+N, N)
            let k = rng.random_range(0..=k_max.min(n_max));
            let n_inner = rng.random_range(k..=n_max.max(k));
            vec![n_inner, k, nn, d, dj, i]
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct GridSpec {
    #[serde(rename = "N")]
    pub dim: [i64; 2],
    pub d: [i64; 2],
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepSummary {
    pub function: Function,
    pub grid: GridSpec,
    pub points: usize,
    #[serde(serialize_with = "ser_opt_rational")]
    pub min: Option<BigRational>,
    pub argmin: Option<Vec<i64>>,
    pub violations: usize,
    pub out_of_range: usize,
    /// Up to ten violating argument tuples.
    pub violation_examples: Vec<Vec<i64>>,
}

fn ser_opt_rational<S: Serializer>(v: &Option<BigRational>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.serialize_str(&v.to_string()),
        None => s.serialize_none(),
    }
}

impl SweepSummary {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("summary serializes")
    }
}

pub fn sweep(function: Function, ranges: &SweepRanges) -> (Vec<InequalityTrace>, SweepSummary) {
    sweep_with(function, ranges, Exec::default())
}

pub fn sweep_with(
    function: Function,
    ranges: &SweepRanges,
    exec: Exec,
) -> (Vec<InequalityTrace>, SweepSummary) {
    let points = if function == Function::P {
        p_samples(ranges)
    } else {
        grid_points(function, ranges)
    };
    let traces = exec.map(&points, |args| evaluate(function, args));
    let summary = summarize(function, ranges, &traces);
    (traces, summary)
}

pub fn summarize(
    function: Function,
    ranges: &SweepRanges,
    traces: &[InequalityTrace],
) -> SweepSummary {
    let mut min: Option<&InequalityTrace> = None;
    let mut violations = 0;
    let mut examples = Vec::new();
    for t in traces {
        if min.is_none_or(|m| t.value < m.value) {
            min = Some(t);
        }
        if function.violates(&t.value) {
            violations += 1;
            if examples.len() < 10 {
                examples.push(t.arguments.clone());
            }
        }
    }
    SweepSummary {
        function,
        grid: GridSpec {
            dim: [*ranges.dim.start(), *ranges.dim.end()],
            d: [*ranges.d.start(), *ranges.d.end()],
            samples: (function == Function::P).then_some(ranges.samples),
        },
        points: traces.len(),
        min: min.map(|t| t.value.clone()),
        argmin: min.map(|t| t.arguments.clone()),
        violations,
        out_of_range: traces.iter().filter(|t| !t.in_range).count(),
        violation_examples: examples,
    }
}
