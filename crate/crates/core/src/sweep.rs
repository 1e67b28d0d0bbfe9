//! Runs the dispatcher over a rectangular `(N, d, n)` grid.

use std::time::Instant;

use serde::Serialize;

use crate::constructions::{count_all, dispatch_construction};
use crate::error::Error;
use crate::exec::Exec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SweepGrid {
    #[serde(rename = "N_min")]
    pub dim_min: usize,
    #[serde(rename = "N_max")]
    pub dim_max: usize,
    pub d_min: u32,
    pub d_max: u32,
}

impl SweepGrid {
    pub fn new(dim_max: usize, d_max: u32) -> Self {
        Self {
            dim_min: 1,
            dim_max,
            d_min: 2,
            d_max,
        }
    }

    /// Every `(N, d, n)` in canonical order, `n` from `N + 1` (2 on the line)
    /// up to the number of degree-`d` monomials.
    pub fn points(&self) -> Vec<(usize, u32, usize)> {
        let mut pts = Vec::new();
        for dim in self.dim_min.max(1)..=self.dim_max {
            for d in self.d_min.max(1)..=self.d_max {
                let lo = if dim == 1 { 2 } else { dim + 1 };
                for n in lo..=count_all(dim, d) {
                    pts.push((dim, d, n));
                }
            }
        }
        pts
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepRow {
    #[serde(rename = "N")]
    pub dim: usize,
    pub d: u32,
    pub n: usize,
    pub route: Option<String>,
    pub route_detail: Option<String>,
    /// A verdict name, `NoFamilyExists`, or `Error`.
    pub verdict: String,
    pub worst_margin: Option<i64>,
    pub wall_time_ms: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl SweepRow {
    pub fn is_failure(&self) -> bool {
        self.error.is_some()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub grid: SweepGrid,
    pub total: usize,
    pub failures: usize,
    pub rows: Vec<SweepRow>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn failed_rows(&self) -> impl Iterator<Item = &SweepRow> {
        self.rows.iter().filter(|r| r.is_failure())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

pub fn run_point(dim: usize, d: u32, n: usize) -> SweepRow {
    let start = Instant::now();
    let result = dispatch_construction(dim, d, n);
    let wall_time_ms = start.elapsed().as_secs_f64() * 1e3;
    let mut row = SweepRow {
        dim,
        d,
        n,
        route: None,
        route_detail: None,
        verdict: String::new(),
        worst_margin: None,
        wall_time_ms,
        error: None,
    };
    match result {
        Ok(c) => {
            row.route = Some(c.route.tag.to_string());
            row.route_detail = Some(c.route.describe());
            row.verdict = c.certificate.verdict.to_string();
            row.worst_margin = c.certificate.worst.map(|w| w.margin);
        }
        Err(Error::NoFamilyExists { .. }) if dim == 1 => {
            row.verdict = "NoFamilyExists".into();
        }
        Err(e) => {
            row.verdict = "Error".into();
            row.error = Some(e.to_string());
        }
    }
    row
}

pub fn run_sweep(grid: &SweepGrid) -> SweepReport {
    run_sweep_with(grid, Exec::default())
}

pub fn run_sweep_with(grid: &SweepGrid, exec: Exec) -> SweepReport {
    let points = grid.points();
    let rows = exec.map(&points, |&(dim, d, n)| run_point(dim, d, n));
    let failures = rows.iter().filter(|r| r.is_failure()).count();
    SweepReport {
        grid: *grid,
        total: rows.len(),
        failures,
        rows,
    }
}
