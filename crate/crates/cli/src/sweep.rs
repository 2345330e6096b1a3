//! Sweeps over `(n, d)` pairs and graph sources, one record per graph.
//!
//! CSV columns, in order:
//!
//! | column        | meaning                                                        |
//! |---------------|----------------------------------------------------------------|
//! | `n`           | class size                                                     |
//! | `d`           | minimum degree hypothesis (the actual δ(G) for file rows)      |
//! | `source`      | `extremal`, `random`, `circulant` or `file`                    |
//! | `seed`        | RNG seed for random rows, empty otherwise                      |
//! | `rho_floor`   | ⌊ρ₀n⌋, empty when 2d < n                                       |
//! | `rho_ceil`    | ⌈ρ₀n⌉, empty when 2d < n                                       |
//! | `upper_bound` | edge-counting cap for extremal rows, empty otherwise           |
//! | `r_max`       | largest degree of a regular spanning subgraph                  |
//! | `cert`        | `pass`/`fail` of the exact grid certificate, empty when 2d < n |
//! | `elapsed_ms`  | wall time for the row with `--timing`, otherwise 0             |
//!
//! Rows come out in plan order however they were scheduled.

use std::path::PathBuf;
use std::time::Instant;

use rayon::prelude::*;
use regfactor::{
    build_extremal, circulant_regular, derive_params, max_regular_degree, random_min_degree, rho_ceil,
    rho_floor, theorem_certificate, BipartiteGraph,
};
use serde::{Serialize, Serializer};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Extremal,
    Random,
    Circulant,
    File,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRecord {
    pub n: usize,
    pub d: usize,
    pub source: Source,
    pub seed: Option<u64>,
    pub rho_floor: Option<usize>,
    pub rho_ceil: Option<usize>,
    pub upper_bound: Option<usize>,
    pub r_max: usize,
    #[serde(serialize_with = "pass_fail")]
    pub cert: Option<bool>,
    pub elapsed_ms: u64,
}

fn pass_fail<S: Serializer>(v: &Option<bool>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(true) => s.serialize_str("pass"),
        Some(false) => s.serialize_str("fail"),
        None => s.serialize_none(),
    }
}

impl SweepRecord {
    /// Measures `g` against the bounds for hypothesis `d`.
    pub fn measure(g: &BipartiteGraph, d: usize, source: Source, seed: Option<u64>, upper_bound: Option<usize>) -> Self {
        Self::from_r_max(g, d, max_regular_degree(g), source, seed, upper_bound)
    }

    /// As [`measure`](Self::measure), with `r_max` already known.
    pub fn from_r_max(
        g: &BipartiteGraph,
        d: usize,
        r_max: usize,
        source: Source,
        seed: Option<u64>,
        upper_bound: Option<usize>,
    ) -> Self {
        let n = g.n();
        let in_domain = 2 * d >= n && d <= n;
        let (rho_floor, rho_ceil, cert) = if in_domain {
            let (n64, d64) = (n as u64, d as u64);
            (
                rho_floor(n64, d64).ok().map(|r| r as usize),
                rho_ceil(n64, d64).ok().map(|r| r as usize),
                Some(theorem_certificate(n64, d64).is_ok()),
            )
        } else {
            (None, None, None)
        };
        SweepRecord {
            n,
            d,
            source,
            seed,
            rho_floor,
            rho_ceil,
            upper_bound,
            r_max,
            cert,
            elapsed_ms: 0,
        }
    }

    pub fn below_floor(&self) -> bool {
        self.rho_floor.is_some_and(|f| self.r_max < f)
    }

    pub fn above_ceil(&self) -> bool {
        self.rho_ceil.is_some_and(|c| self.r_max > c)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Job {
    Generated { n: usize, d: usize, source: Source, seed: Option<u64> },
    File { path: PathBuf, graph: BipartiteGraph },
}

#[derive(Debug, Clone, Default)]
pub struct SweepPlan {
    pub pairs: Vec<(usize, usize)>,
    pub sources: Vec<Source>,
    pub seed: u64,
    pub seeds: u64,
    pub files: Vec<(PathBuf, BipartiteGraph)>,
}

/// Expands a plan into jobs: pairs outermost, then sources, then seeds; file
/// graphs last.
pub fn plan_sweep(plan: &SweepPlan) -> anyhow::Result<Vec<Job>> {
    let mut jobs = Vec::new();
    for &(n, d) in &plan.pairs {
        anyhow::ensure!(n > 0 && d <= n && 2 * d >= n, "pair ({n}, {d}) needs n > 0 and n/2 <= d <= n");
        for &source in &plan.sources {
            match source {
                Source::Random => {
                    for s in 0..plan.seeds.max(1) {
                        jobs.push(Job::Generated { n, d, source, seed: Some(plan.seed + s) });
                    }
                }
                Source::Extremal | Source::Circulant => jobs.push(Job::Generated { n, d, source, seed: None }),
                Source::File => {}
            }
        }
    }
    for (path, graph) in &plan.files {
        jobs.push(Job::File { path: path.clone(), graph: graph.clone() });
    }
    Ok(jobs)
}

#[derive(Debug, Clone)]
pub enum Outcome {
    Row(SweepRecord),
    Skipped { n: usize, d: usize, source: Source, reason: String },
}

fn run_job(job: &Job, timing: bool) -> Outcome {
    let start = Instant::now();
    let mut outcome = match job {
        Job::Generated { n, d, source, seed } => {
            let (n, d) = (*n, *d);
            let built = match source {
                Source::Extremal => derive_params(n, d)
                    .and_then(|p| build_extremal(n, d).map(|g| (g, Some(p.upper_bound)))),
                Source::Random => random_min_degree(n, d, seed.unwrap_or(0)).map(|g| (g, None)),
                Source::Circulant => circulant_regular(n, d).map(|g| (g, None)),
                Source::File => unreachable!("file jobs carry their graph"),
            };
            match built {
                Ok((g, upper)) => Outcome::Row(SweepRecord::measure(&g, d, *source, *seed, upper)),
                Err(e) => Outcome::Skipped { n, d, source: *source, reason: e.to_string() },
            }
        }
        Job::File { graph, .. } => {
            Outcome::Row(SweepRecord::measure(graph, graph.min_degree(), Source::File, None, None))
        }
    };
    if let (true, Outcome::Row(r)) = (timing, &mut outcome) {
        r.elapsed_ms = start.elapsed().as_millis() as u64;
    }
    outcome
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SweepSummary {
    pub rows: usize,
    pub below_floor: usize,
    pub above_ceil: usize,
    pub skipped: usize,
}

impl std::fmt::Display for SweepSummary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "rows={} below_floor={} above_ceil={} skipped={}",
            self.rows, self.below_floor, self.above_ceil, self.skipped
        )
    }
}

/// Runs all jobs on the rayon pool and returns outcomes in job order.
pub fn run_sweep(jobs: &[Job], timing: bool) -> (Vec<Outcome>, SweepSummary) {
    let outcomes: Vec<Outcome> = jobs.par_iter().map(|j| run_job(j, timing)).collect();
    let mut summary = SweepSummary::default();
    for o in &outcomes {
        match o {
            Outcome::Row(r) => {
                summary.rows += 1;
                summary.below_floor += r.below_floor() as usize;
                summary.above_ceil += r.above_ceil() as usize;
            }
            Outcome::Skipped { .. } => summary.skipped += 1,
        }
    }
    (outcomes, summary)
}

/// `"2-12,16"` style lists; ranges are inclusive.
pub fn parse_int_list(s: &str) -> Result<Vec<usize>, String> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        match part.split_once('-') {
            Some((lo, hi)) => {
                let lo: usize = lo.trim().parse().map_err(|_| format!("bad range {part:?}"))?;
                let hi: usize = hi.trim().parse().map_err(|_| format!("bad range {part:?}"))?;
                if lo > hi {
                    return Err(format!("empty range {part:?}"));
                }
                out.extend(lo..=hi);
            }
            None => out.push(part.parse().map_err(|_| format!("bad integer {part:?}"))?),
        }
    }
    Ok(out)
}

/// `"16:10"`.
pub fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (n, d) = s.split_once(':').ok_or_else(|| format!("expected N:D, got {s:?}"))?;
    let n = n.trim().parse().map_err(|_| format!("bad n in {s:?}"))?;
    let d = d.trim().parse().map_err(|_| format!("bad d in {s:?}"))?;
    Ok((n, d))
}

/// `"5/8"`, a minimum-degree ratio.
pub fn parse_ratio(s: &str) -> Result<(usize, usize), String> {
    let (p, q) = s.split_once('/').ok_or_else(|| format!("expected P/Q, got {s:?}"))?;
    let p: usize = p.trim().parse().map_err(|_| format!("bad numerator in {s:?}"))?;
    let q: usize = q.trim().parse().map_err(|_| format!("bad denominator in {s:?}"))?;
    if q == 0 || p > q || 2 * p < q {
        return Err(format!("ratio {s:?} must lie in [1/2, 1]"));
    }
    Ok((p, q))
}

/// `(n, d)` pairs for each `n`: `d = ⌈n·p/q⌉` for every ratio, or every `d`
/// with `2d >= n` when no ratios are given. Duplicates are dropped.
pub fn pairs_for(ns: &[usize], ratios: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for &n in ns.iter().filter(|&&n| n > 0) {
        let ds: Vec<usize> = if ratios.is_empty() {
            (n.div_ceil(2)..=n).collect()
        } else {
            ratios.iter().map(|&(p, q)| (n * p).div_ceil(q)).collect()
        };
        for d in ds {
            if !pairs.contains(&(n, d)) {
                pairs.push((n, d));
            }
        }
    }
    pairs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn list_parsing() {
        assert_eq!(parse_int_list("2-4,8, 10").unwrap(), [2, 3, 4, 8, 10]);
        assert!(parse_int_list("4-2").is_err());
        assert!(parse_int_list("x").is_err());
        assert_eq!(parse_pair("16:10").unwrap(), (16, 10));
        assert!(parse_pair("16,10").is_err());
        assert_eq!(parse_ratio("5/8").unwrap(), (5, 8));
        assert!(parse_ratio("1/3").is_err());
    }

    #[test]
    fn pair_expansion() {
        assert_eq!(pairs_for(&[4], &[]), [(4, 2), (4, 3), (4, 4)]);
        assert_eq!(pairs_for(&[16, 32], &[(5, 8)]), [(16, 10), (32, 20)]);
        assert_eq!(pairs_for(&[5], &[(1, 2), (3, 5)]), [(5, 3)]);
    }

    #[test]
    fn plan_order_and_validation() {
        let plan = SweepPlan {
            pairs: vec![(8, 4), (8, 5)],
            sources: vec![Source::Circulant, Source::Random],
            seed: 7,
            seeds: 2,
            files: vec![],
        };
        let jobs = plan_sweep(&plan).unwrap();
        let keys: Vec<_> = jobs
            .iter()
            .map(|j| match j {
                Job::Generated { n, d, source, seed } => (*n, *d, *source, *seed),
                Job::File { .. } => unreachable!(),
            })
            .collect();
        assert_eq!(
            keys,
            [
                (8, 4, Source::Circulant, None),
                (8, 4, Source::Random, Some(7)),
                (8, 4, Source::Random, Some(8)),
                (8, 5, Source::Circulant, None),
                (8, 5, Source::Random, Some(7)),
                (8, 5, Source::Random, Some(8)),
            ]
        );
        let bad = SweepPlan { pairs: vec![(8, 3)], sources: vec![Source::Random], ..Default::default() };
        assert!(plan_sweep(&bad).is_err());
    }

    #[test]
    fn extremal_rows_and_skips() {
        let plan = SweepPlan {
            pairs: vec![(16, 10), (8, 4)],
            sources: vec![Source::Extremal],
            ..Default::default()
        };
        let (outcomes, summary) = run_sweep(&plan_sweep(&plan).unwrap(), false);
        assert_eq!(summary, SweepSummary { rows: 1, below_floor: 0, above_ceil: 0, skipped: 1 });
        let Outcome::Row(r) = &outcomes[0] else { panic!("expected a row") };
        assert_eq!(
            *r,
            SweepRecord {
                n: 16,
                d: 10,
                source: Source::Extremal,
                seed: None,
                rho_floor: Some(9),
                rho_ceil: Some(9),
                upper_bound: Some(9),
                r_max: 9,
                cert: Some(true),
                elapsed_ms: 0,
            }
        );
        assert!(matches!(outcomes[1], Outcome::Skipped { n: 8, d: 4, .. }));
    }

    #[test]
    fn file_rows_use_actual_min_degree() {
        let g = BipartiteGraph::from_edges(2, [(0, 0), (0, 1), (1, 1)]).unwrap();
        let r = SweepRecord::measure(&g, g.min_degree(), Source::File, None, None);
        assert_eq!((r.d, r.rho_floor, r.r_max, r.cert), (1, Some(0), 1, Some(true)));
        let sparse = circulant_regular(6, 1).unwrap();
        let r = SweepRecord::measure(&sparse, 1, Source::File, None, None);
        assert_eq!((r.rho_floor, r.cert), (None, None));
        assert!(!r.below_floor());
    }
}
