//! Exhaustive verification drivers.
//!
//! Each sweep streams the enumerated graphs level by level, fans the checks
//! of each chunk out to a worker pool, and merges results in generation
//! order, so reports do not depend on the number of workers.

use std::io::Write;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::enumeration::{Family, Generated, Levels, MAX_ENUMERATION_N};
use crate::error::{Error, Result};
use crate::extremal::partition_profile;
use crate::graph::{Graph, VertexSet};
use crate::outerplanar::check_bipartite_outerplanar_bound;
use crate::random::{random_dominating_set, random_graph};
use crate::secure;
use crate::solver::{gamma_s_with, lower_bound, SolveOptions};

/// Default ceiling for full sweeps.
pub const DEFAULT_SWEEP_MAX_N: usize = 9;
/// Ceiling for the exhaustive defense-equivalence sweep.
pub const THM2_MAX_N: usize = 6;

const CHUNK: usize = 4096;

#[derive(Default)]
pub struct SweepOptions<'a> {
    /// Worker threads; `0` lets the pool pick.
    pub jobs: usize,
    /// Permit `n = 10` (hours rather than minutes for some sweeps).
    pub allow_n10: bool,
    /// Receives the graph6 string of every enumerated graph.
    pub emit_graph6: Option<&'a mut dyn Write>,
}


#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelStats {
    pub n: usize,
    /// Child extensions examined by the generator.
    pub candidates: u64,
    /// Isomorphism classes emitted by the generator.
    pub generated: u64,
    /// Instances checked at this order (graphs, side assignments, or swaps).
    pub checked: u64,
    pub wall_time_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Violation {
    pub graph6: String,
    pub check: String,
    pub value: i64,
    pub bound: i64,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalHits {
    pub n: usize,
    pub bound: usize,
    pub count: usize,
    pub graph6: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub sweep: String,
    pub n_min: usize,
    pub n_max: usize,
    pub per_n: Vec<LevelStats>,
    /// Failed checks, sorted by graph6 string.
    pub violations: Vec<Violation>,
    /// Graphs outside the theorem's hypothesis that miss the bound.
    pub exceptions: Vec<Violation>,
    pub extremal_hits: Vec<ExtremalHits>,
}

impl SweepReport {
    fn new(sweep: &str, n_min: usize, n_max: usize) -> Self {
        SweepReport {
            sweep: sweep.to_string(),
            n_min,
            n_max,
            per_n: Vec::new(),
            violations: Vec::new(),
            exceptions: Vec::new(),
            extremal_hits: Vec::new(),
        }
    }

    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations_of(&self, check: &str) -> usize {
        self.violations.iter().filter(|v| v.check == check).count()
    }

    /// Copy with timings zeroed, for comparing runs.
    pub fn without_timing(&self) -> SweepReport {
        let mut r = self.clone();
        for s in &mut r.per_n {
            s.wall_time_ms = 0;
        }
        r
    }

    pub fn checked(&self) -> u64 {
        self.per_n.iter().map(|s| s.checked).sum()
    }

    pub fn generated(&self) -> u64 {
        self.per_n.iter().map(|s| s.generated).sum()
    }

    /// Human-readable table.
    pub fn to_table(&self) -> String {
        use std::fmt::Write as _;
        let mut out = String::new();
        let _ = writeln!(out, "sweep {} for n = {}..={}", self.sweep, self.n_min, self.n_max);
        let _ = writeln!(
            out,
            "{:>3} {:>12} {:>10} {:>12} {:>10}",
            "n", "candidates", "generated", "checked", "time_ms"
        );
        for s in &self.per_n {
            let _ = writeln!(
                out,
                "{:>3} {:>12} {:>10} {:>12} {:>10}",
                s.n, s.candidates, s.generated, s.checked, s.wall_time_ms
            );
        }
        for h in &self.extremal_hits {
            let _ = writeln!(out, "n = {}: {} graphs attain the bound {}", h.n, h.count, h.bound);
        }
        for e in &self.exceptions {
            let _ = writeln!(
                out,
                "exception {} ({}): value {} < bound {}: {}",
                e.graph6, e.check, e.value, e.bound, e.detail
            );
        }
        if self.violations.is_empty() {
            let _ = writeln!(out, "violations: none");
        } else {
            for v in &self.violations {
                let _ = writeln!(
                    out,
                    "VIOLATION {} ({}): value {} bound {}: {}",
                    v.graph6, v.check, v.value, v.bound, v.detail
                );
            }
        }
        out
    }
}

fn check_max_n(n_max: usize, min: usize, ceiling: usize, opts: &SweepOptions) -> Result<()> {
    let max = if opts.allow_n10 { MAX_ENUMERATION_N } else { ceiling };
    if n_max < min || n_max > max {
        return Err(Error::OutOfRange {
            what: "max-n",
            got: n_max,
            min,
            max,
        });
    }
    Ok(())
}

fn pool(jobs: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool")
}

/// Drives a family through orders `1..=n_max`, calling `check` on chunks of
/// graphs of order `n >= n_min` in parallel. `check` returns the number of
/// instances examined and any findings for one graph.
fn drive<T, F>(
    family: Family,
    n_min: usize,
    n_max: usize,
    opts: &mut SweepOptions,
    check: F,
    mut absorb: impl FnMut(usize, Vec<T>),
) -> Result<Vec<LevelStats>>
where
    T: Send,
    F: Fn(&Graph) -> T + Sync,
{
    let workers = pool(opts.jobs);
    let mut levels = Levels::new(family);
    let mut stats = Vec::new();
    for n in 1..=n_max {
        let start = Instant::now();
        let mut stream = levels.stream_next()?;
        let keep = n < n_max;
        let mut kept: Vec<Generated> = Vec::new();
        let mut generated = 0u64;
        let mut results: Vec<T> = Vec::new();
        loop {
            let chunk: Vec<Generated> = stream.by_ref().take(CHUNK).collect();
            if chunk.is_empty() {
                break;
            }
            generated += chunk.len() as u64;
            if let Some(w) = opts.emit_graph6.as_deref_mut() {
                for g in &chunk {
                    writeln!(w, "{}", g.graph.to_graph6())?;
                }
            }
            if n >= n_min {
                let part: Vec<T> = workers.install(|| chunk.par_iter().map(|g| check(&g.graph)).collect());
                results.extend(part);
            }
            if keep {
                kept.extend(chunk);
            }
        }
        let candidates = stream.candidates();
        drop(stream);
        if keep {
            levels.absorb(n, kept);
        }
        let checked_before = results.len();
        absorb(n, results);
        stats.push(LevelStats {
            n,
            candidates,
            generated,
            checked: checked_before as u64,
            wall_time_ms: start.elapsed().as_millis() as u64,
        });
    }
    Ok(stats.into_iter().filter(|s| s.n >= n_min).collect())
}

struct BoundOutcome {
    graph6: String,
    gamma_s: usize,
    findings: Vec<(String, i64, i64, String)>,
}

fn lower_bound_check(g: &Graph) -> BoundOutcome {
    let n = g.n();
    let bound = lower_bound(n);
    let graph6 = g.to_graph6();
    let mut findings = Vec::new();
    let opts = SolveOptions {
        use_outerplanar_bound: false,
    };
    let result = gamma_s_with(g, opts).expect("sweep graphs are non-empty and small");
    let value = result.value;
    if value < bound {
        findings.push((
            "lower-bound".to_string(),
            value as i64,
            bound as i64,
            format!("secure dominating set {{{}}}", result.set),
        ));
    }
    match &result.certificate {
        Some(cert) if cert.verify(g) => {}
        _ => findings.push((
            "certificate".to_string(),
            value as i64,
            bound as i64,
            format!("certificate for {{{}}} failed re-validation", result.set),
        )),
    }
    match partition_profile(g, result.set) {
        Ok(p) => {
            if p.x != p.x2 + p.x1 + p.x0 || !p.counts_balance() {
                findings.push((
                    "partition-profile".to_string(),
                    p.y as i64,
                    (2 * p.x2 + p.x1 + p.c) as i64,
                    format!("x2={} x1={} x0={} c={}", p.x2, p.x1, p.x0, p.c),
                ));
            }
        }
        Err(Error::EpnTooLarge { vertex, size }) => findings.push((
            "epn-at-most-2".to_string(),
            size as i64,
            2,
            format!("vertex {vertex} of {{{}}}", result.set),
        )),
        Err(e) => findings.push(("partition-profile".to_string(), 0, 0, e.to_string())),
    }
    BoundOutcome {
        graph6,
        gamma_s: value,
        findings,
    }
}

/// Checks `γ_s(G) >= ⌈(n+4)/5⌉` on every connected outerplanar graph with
/// `4 <= n <= n_max`, re-validating each minimum certificate and its
/// private-neighbor partition. Orders below 4 are solved too; graphs there
/// that miss the bound (K2, K3) are listed as exceptions.
pub fn verify_lower_bound(n_max: usize, mut opts: SweepOptions) -> Result<SweepReport> {
    check_max_n(n_max, 4, DEFAULT_SWEEP_MAX_N, &opts)?;
    let mut report = SweepReport::new("lower-bound", 1, n_max);
    let mut violations = Vec::new();
    let mut exceptions = Vec::new();
    let mut hits = Vec::new();
    let stats = drive(
        Family::Outerplanar,
        1,
        n_max,
        &mut opts,
        lower_bound_check,
        |n, outcomes| {
            let bound = lower_bound(n);
            let mut level_hits = Vec::new();
            for o in outcomes {
                if o.gamma_s == bound {
                    level_hits.push(o.graph6.clone());
                }
                for (check, value, b, detail) in o.findings {
                    let v = Violation {
                        graph6: o.graph6.clone(),
                        check,
                        value,
                        bound: b,
                        detail,
                    };
                    if n < 4 && v.check == "lower-bound" {
                        exceptions.push(Violation {
                            detail: format!("{}; n = {n} < 4 lies outside the theorem", v.detail),
                            ..v
                        });
                    } else {
                        violations.push(v);
                    }
                }
            }
            if n >= 4 {
                hits.push(ExtremalHits {
                    n,
                    bound,
                    count: level_hits.len(),
                    graph6: level_hits,
                });
            }
        },
    )?;
    report.per_n = stats;
    violations.sort();
    exceptions.sort();
    report.violations = violations;
    report.exceptions = exceptions;
    report.extremal_hits = hits;
    Ok(report)
}

/// Checks the bipartite outerplanar bound `|Y| <= 2|X| - 2` on every
/// connected bipartite outerplanar graph with `n <= n_max`, under both
/// assignments of the sides. `checked` counts assignments meeting the
/// hypothesis.
pub fn verify_lemma1(n_max: usize, mut opts: SweepOptions) -> Result<SweepReport> {
    check_max_n(n_max, 2, DEFAULT_SWEEP_MAX_N, &opts)?;
    let mut report = SweepReport::new("lemma1", 2, n_max);
    let mut violations = Vec::new();
    let mut checked_per_n = Vec::new();
    let check = |g: &Graph| -> (u64, Vec<Violation>) {
        let Some((a, b)) = g.bipartition() else {
            return (0, Vec::new());
        };
        let mut met = 0;
        let mut out = Vec::new();
        for (x, y) in [(a, b), (b, a)] {
            let r = check_bipartite_outerplanar_bound(g, x, y).expect("valid bipartition");
            if r.hypothesis_met {
                met += 1;
                if !r.bound_holds {
                    out.push(Violation {
                        graph6: g.to_graph6(),
                        check: "lemma1".into(),
                        value: r.y_size as i64,
                        bound: 2 * r.x_size as i64 - 2,
                        detail: format!("X = {{{x}}}, Y = {{{y}}}"),
                    });
                }
            }
        }
        (met, out)
    };
    let mut stats = drive(Family::Outerplanar, 2, n_max, &mut opts, check, |n, outcomes| {
        let mut met = 0;
        for (m, vs) in outcomes {
            met += m;
            violations.extend(vs);
        }
        checked_per_n.push((n, met));
    })?;
    for s in &mut stats {
        s.checked = checked_per_n.iter().find(|(n, _)| *n == s.n).map_or(0, |p| p.1);
    }
    violations.sort();
    report.per_n = stats;
    report.violations = violations;
    Ok(report)
}

/// Disagreements on secure sets are tagged `thm2`; on dominating sets that
/// are not secure, `thm2-nonsecure`. The clique test is only sufficient in
/// the latter case (the diamond with `S` one of its degree-3 vertices), but
/// on secure sets every private neighbor of `v` is itself defended only by
/// `v`, which forces `epn(v, S) ∪ {v}` to be a clique and restores the
/// equivalence.
fn disagreement(g: &Graph, s: VertexSet, v: usize, u: usize, swap: bool, epn: bool) -> Violation {
    let secure = secure::is_secure_dominating_by_swap(g, s)
        .expect("valid set")
        .is_some();
    Violation {
        graph6: g.to_graph6(),
        check: if secure { "thm2" } else { "thm2-nonsecure" }.into(),
        value: swap as i64,
        bound: epn as i64,
        detail: format!("S = {{{s}}}, v = {v}, u = {u}: swap {swap}, epn {epn}"),
    }
}

fn compare_defenses(g: &Graph, s: VertexSet) -> (u64, Vec<Violation>) {
    let mut count = 0;
    let mut out = Vec::new();
    for v in s {
        for u in g.vertices() - s {
            count += 1;
            let swap = secure::defends_by_swap(g, v, u, s).expect("valid pair");
            let epn = secure::defends_by_epn(g, v, u, s).expect("dominating set");
            if swap != epn {
                out.push(disagreement(g, s, v, u, swap, epn));
            }
        }
    }
    (count, out)
}

/// Compares the swap and private-neighbor defense tests on every dominating
/// set of every connected graph with `n <= n_max <= 6`.
pub fn verify_thm2_equivalence(n_max: usize, mut opts: SweepOptions) -> Result<SweepReport> {
    let ceiling = if opts.allow_n10 { 7 } else { THM2_MAX_N };
    if !(1..=ceiling).contains(&n_max) {
        return Err(Error::OutOfRange {
            what: "max-n",
            got: n_max,
            min: 1,
            max: ceiling,
        });
    }
    let mut report = SweepReport::new("thm2", 1, n_max);
    let mut violations = Vec::new();
    let mut checked_per_n = Vec::new();
    let check = |g: &Graph| -> (u64, Vec<Violation>) {
        let mut count = 0;
        let mut out = Vec::new();
        for bits in 0..1u64 << g.n() {
            let s = VertexSet::from_bits(bits);
            if !secure::is_dominating(g, s) {
                continue;
            }
            let (c, vs) = compare_defenses(g, s);
            count += c;
            out.extend(vs);
        }
        (count, out)
    };
    let mut stats = drive(Family::Connected, 1, n_max, &mut opts, check, |n, outcomes| {
        let mut total = 0;
        for (c, vs) in outcomes {
            total += c;
            violations.extend(vs);
        }
        checked_per_n.push((n, total));
    })?;
    for s in &mut stats {
        s.checked = checked_per_n.iter().find(|(n, _)| *n == s.n).map_or(0, |p| p.1);
    }
    violations.sort();
    report.per_n = stats;
    report.violations = violations;
    Ok(report)
}

/// Randomized comparison of the two defense tests: `instances` draws of a
/// random graph on `n` vertices, a random dominating set, and a pair
/// `v ∈ S`, `u ∉ S` (adjacent in about half the draws).
pub fn verify_thm2_random(n: usize, instances: u64, seed: u64) -> Result<SweepReport> {
    if !(2..=crate::graph::MAX_VERTICES).contains(&n) {
        return Err(Error::OutOfRange {
            what: "n",
            got: n,
            min: 2,
            max: crate::graph::MAX_VERTICES,
        });
    }
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SweepReport::new("thm2-random", n, n);
    let mut checked = 0;
    while checked < instances {
        let p = rng.gen_range(0.15..0.6);
        let g = random_graph(&mut rng, n, p);
        let s = random_dominating_set(&mut rng, &g);
        let outside = g.vertices() - s;
        if outside.is_empty() {
            continue;
        }
        let in_s = s.to_vec();
        let v = in_s[rng.gen_range(0..in_s.len())];
        let near = g.neighbors(v) & outside;
        let pool = if !near.is_empty() && rng.gen_bool(0.5) {
            near
        } else {
            outside
        };
        let pool = pool.to_vec();
        let u = pool[rng.gen_range(0..pool.len())];
        checked += 1;
        let swap = secure::defends_by_swap(&g, v, u, s)?;
        let epn = secure::defends_by_epn(&g, v, u, s)?;
        if swap != epn {
            report.violations.push(disagreement(&g, s, v, u, swap, epn));
        }
    }
    report.violations.sort();
    report.per_n.push(LevelStats {
        n,
        candidates: 0,
        generated: 0,
        checked,
        wall_time_ms: start.elapsed().as_millis() as u64,
    });
    Ok(report)
}
