//! Exhaustive sweeps over connected graphs of one order.
//!
//! The mask space `0..2^(n(n-1)/2)` is cut into contiguous chunks. Each chunk
//! is scanned independently into an accumulator and the accumulators are
//! merged in chunk order, so records, witnesses and the reported violation
//! do not depend on the worker count.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use super::canon::{is_canonical, isomorphic, labeled_copies};
use super::enumerate::{check_order, mask_count};
use super::{VerifyConfig, VerifyRecord};
use crate::bounds::{self, assemble, BoundKind, BoundReport, Known};
use crate::error::{Error, Result, Violation};
use crate::families;
use crate::graph::{mask_rows, rows_connected, Graph};
use crate::{nearly_equal, spectral};

/// Masks per chunk.
const CHUNK: u64 = 1 << 13;

/// Absolute slack below which an inequality counts as violated.
pub const SLACK_TOL: f64 = 1e-7;

/// Gap a bound must beat another by to count as a strict witness.
const STRICT_GAP: f64 = 1e-9;

/// Which checks a sweep runs.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Checks {
    /// Clique upper bound and its equality cases.
    pub upper: bool,
    /// Kite/path lower bound and its minimizers.
    pub lower: bool,
    /// `q1 / ω ≤ n / 2`.
    pub ratio: bool,
    /// `q1 ≤ 3n/2 + ω − 4` for `ω ≤ 4` or `ω ≥ ⌈n/2⌉` (needs `n ≥ 6`).
    pub region: bool,
    /// Every bound in [`BoundKind::ALL`], `ω ≤ χ`, the chromatic equality
    /// case and pairwise witnesses among the compared bounds.
    pub soundness: bool,
}

impl Checks {
    pub const ALL: Checks = Checks { upper: true, lower: true, ratio: true, region: true, soundness: true };
    pub const UPPER: Checks = Checks { upper: true, ..Checks::NONE };
    pub const LOWER: Checks = Checks { lower: true, ..Checks::NONE };
    pub const RATIO: Checks = Checks { ratio: true, ..Checks::NONE };
    pub const REGION: Checks = Checks { region: true, ..Checks::NONE };
    pub const SOUNDNESS: Checks = Checks { soundness: true, ..Checks::NONE };
    const NONE: Checks = Checks { upper: false, lower: false, ratio: false, region: false, soundness: false };
}

/// Smallest order the region check accepts; below it the inequality is
/// false (e.g. `T(5, 3)`).
pub const REGION_MIN_ORDER: usize = 6;

pub fn in_region(n: usize, omega: usize) -> bool {
    omega <= 4 || omega >= n.div_ceil(2)
}

pub fn region_threshold(n: usize, omega: usize) -> f64 {
    1.5 * n as f64 + omega as f64 - 4.0
}

/// The graphs meeting the region inequality with equality.
fn region_equality_expected(n: usize, omega: usize) -> bool {
    (omega == 4 && n % 4 == 0) || 2 * omega == n
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct OmegaCount {
    pub omega: usize,
    pub graphs: u64,
    pub equality: u64,
    /// Expected size of the equality (or minimizer) set.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<u64>,
    /// Bound value for this clique number, when it depends on `(n, ω)` only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<f64>,
    /// Smallest `q1` seen (lower check only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_q1: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckSummary {
    pub check: &'static str,
    pub examined: u64,
    pub equality: u64,
    pub min_slack: Option<f64>,
    pub by_omega: Vec<OmegaCount>,
}

/// A graph on which bound `better` is strictly below bound `worse`.
#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    pub better: &'static str,
    pub worse: &'static str,
    pub graph6: String,
    pub better_value: f64,
    pub worse_value: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SoundnessSummary {
    pub examined: u64,
    /// Smallest slack per bound key.
    pub min_slack: Vec<(&'static str, f64)>,
    pub chromatic_equality: u64,
    /// One witness per ordered pair of compared bounds, where one exists.
    pub witnesses: Vec<Witness>,
    /// Ordered pairs with no witness at this order.
    pub missing: Vec<(&'static str, &'static str)>,
}

/// Result of one sweep.
#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub n: usize,
    pub dedup: bool,
    pub masks: u64,
    pub connected: u64,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<CheckSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub soundness: Option<SoundnessSummary>,
    /// Equality cases and minimizers, in enumeration order per check.
    #[serde(skip)]
    pub records: Vec<VerifyRecord>,
}

impl SweepReport {
    pub fn check(&self, name: &str) -> Option<&CheckSummary> {
        self.checks.iter().find(|c| c.check == name)
    }

    pub fn records_for<'a>(&'a self, check: &'a str) -> impl Iterator<Item = &'a VerifyRecord> + 'a {
        self.records.iter().filter(move |r| r.check == check)
    }
}

pub fn full_sweep(n: usize, cfg: &VerifyConfig) -> Result<SweepReport> {
    let checks = if n >= REGION_MIN_ORDER { Checks::ALL } else { Checks { region: false, ..Checks::ALL } };
    sweep(n, checks, cfg)
}

/// Clique upper bound: `q1 ≤ ub_clique(n, ω)` with equality exactly on
/// complete bipartite graphs (`ω = 2`) and Turán graphs (`ω ≥ 3`).
pub fn sharpness_sweep(n: usize, cfg: &VerifyConfig) -> Result<SweepReport> {
    sweep(n, Checks::UPPER, cfg)
}

/// Minimum `q1` per clique number equals the lower bound and is attained
/// only by the path or the kite.
pub fn lower_sweep(n: usize, cfg: &VerifyConfig) -> Result<SweepReport> {
    sweep(n, Checks::LOWER, cfg)
}

pub fn ratio_sweep(n: usize, cfg: &VerifyConfig) -> Result<SweepReport> {
    sweep(n, Checks::RATIO, cfg)
}

/// Exhaustive region check; needs `n ≥ 6`.
pub fn conjecture_region_check(n: usize, cfg: &VerifyConfig) -> Result<SweepReport> {
    sweep(n, Checks::REGION, cfg)
}

pub fn soundness_sweep(n: usize, cfg: &VerifyConfig) -> Result<SweepReport> {
    sweep(n, Checks::SOUNDNESS, cfg)
}

/// Runs the selected checks over every connected graph on `n` vertices.
pub fn sweep(n: usize, checks: Checks, cfg: &VerifyConfig) -> Result<SweepReport> {
    check_order(n, cfg.dedup)?;
    if checks.region && n < REGION_MIN_ORDER {
        return Err(Error::invalid(format!("region check needs n >= {REGION_MIN_ORDER}, got {n}")));
    }
    let ctx = Context::new(n, checks, cfg)?;
    let masks = mask_count(n);
    let chunks = masks.div_ceil(CHUNK) as usize;
    // index of the earliest chunk known to hold a violation; later chunks
    // are skipped
    let first_bad = AtomicUsize::new(usize::MAX);
    let scan = |c: usize| {
        if c > first_bad.load(Ordering::Relaxed) {
            return None;
        }
        let acc = ctx.scan(c as u64 * CHUNK..((c as u64 + 1) * CHUNK).min(masks));
        if acc.violation.is_some() {
            first_bad.fetch_min(c, Ordering::Relaxed);
        }
        Some(acc)
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers.max(1))
        .build()
        .map_err(|e| Error::invalid(format!("thread pool: {e}")))?;
    let parts: Vec<Option<Acc>> = pool.install(|| (0..chunks).into_par_iter().map(scan).collect());

    let mut total = ctx.empty_acc();
    for acc in parts.into_iter().flatten() {
        total.merge(acc, &ctx);
        if total.violation.is_some() {
            break;
        }
    }
    if let Some(v) = total.violation.take() {
        return Err(Error::Violation(Box::new(v)));
    }
    ctx.finish(total, masks)
}

/// Per-sweep constants.
struct Context {
    n: usize,
    checks: Checks,
    dedup: bool,
    eq_tol: f64,
    /// `lower[w]`: lower bound for clique number `w`.
    lower: Vec<Option<f64>>,
    /// `upper[w]`: clique upper bound for clique number `w`.
    upper: Vec<f64>,
}

impl Context {
    fn new(n: usize, checks: Checks, cfg: &VerifyConfig) -> Result<Self> {
        let lower = (0..=n).map(|w| (w >= 2).then(|| bounds::lb_clique(n, w)).transpose()).collect::<Result<_>>()?;
        let upper = (0..=n).map(|w| if w >= 1 { bounds::ub_clique(n, w) } else { Ok(0.0) }).collect::<Result<_>>()?;
        Ok(Context { n, checks, dedup: cfg.dedup, eq_tol: cfg.eq_tol, lower, upper })
    }

    fn empty_acc(&self) -> Acc {
        Acc {
            connected: 0,
            upper: vec![Tally::default(); self.n + 1],
            lower: vec![Minima::default(); self.n + 1],
            ratio: Tally::default(),
            region: vec![Tally::default(); self.n + 1],
            sound: Sound::new(),
            records: Vec::new(),
            violation: None,
        }
    }

    fn scan(&self, range: std::ops::Range<u64>) -> Acc {
        let mut acc = self.empty_acc();
        for mask in range {
            let rows = mask_rows(self.n, mask);
            if !rows_connected(&rows) {
                continue;
            }
            let g = Graph::from_adjacency(rows).expect("mask rows are a simple graph");
            if self.dedup && !is_canonical(&g) {
                continue;
            }
            acc.connected += 1;
            if let Err(v) = self.observe(&g, mask, &mut acc) {
                acc.violation = Some(*v);
                break;
            }
        }
        acc
    }

    fn record(&self, check: &'static str, g: &Graph, mask: u64, s: &Sample, bound: f64, family: Option<String>) -> VerifyRecord {
        let slack = if check == "lower" { s.q1 - bound } else { bound - s.q1 };
        VerifyRecord {
            check,
            id: g.to_graph6(),
            mask,
            n: self.n,
            m: g.m(),
            omega: s.omega,
            chi: s.chi,
            q1: s.q1,
            bound,
            slack,
            attained: nearly_equal(s.q1, bound, self.eq_tol),
            family,
        }
    }

    fn violation(&self, check: &str, g: &Graph, s: &Sample, detail: String) -> Box<Violation> {
        let report = assemble(
            g,
            &Known { q1: s.q1, omega: s.omega, chi: s.chi, lower: self.lower[s.omega] },
            self.eq_tol,
        )
        .ok();
        Box::new(Violation { check: check.into(), graph6: g.to_graph6(), detail, report })
    }

    fn observe(&self, g: &Graph, mask: u64, acc: &mut Acc) -> std::result::Result<(), Box<Violation>> {
        let n = self.n;
        let spec = spectral::spectrum(g).map_err(|e| {
            Box::new(Violation { check: "spectrum".into(), graph6: g.to_graph6(), detail: e.to_string(), report: None })
        })?;
        let omega = g.clique_number();
        let chi = if self.checks.soundness { Some(g.chromatic_number().expect("order within chromatic cap")) } else { None };
        let s = Sample { q1: spec.q1, omega, chi };

        if self.checks.upper {
            let bound = self.upper[omega];
            let slack = bound - s.q1;
            if slack < -SLACK_TOL {
                return Err(self.violation("upper", g, &s, format!("q1 = {} exceeds clique bound {bound}", s.q1)));
            }
            let attained = nearly_equal(s.q1, bound, self.eq_tol);
            let family = upper_family(g, omega);
            if attained != family.is_some() {
                let detail = if attained {
                    format!("clique bound attained (omega = {omega}) by a graph outside the extremal family")
                } else {
                    format!("extremal graph misses the clique bound by {slack}")
                };
                return Err(self.violation("upper", g, &s, detail));
            }
            let t = &mut acc.upper[omega];
            t.add(slack, attained);
            if attained {
                acc.records.push(self.record("upper", g, mask, &s, bound, family));
            }
        }

        if self.checks.lower {
            let bound = self.lower[omega].expect("connected graphs on n >= 2 vertices have omega >= 2");
            if s.q1 - bound < -SLACK_TOL {
                return Err(self.violation("lower", g, &s, format!("q1 = {} below lower bound {bound}", s.q1)));
            }
            acc.lower[omega].offer(s.q1, mask, self.eq_tol);
        }

        if self.checks.ratio {
            let bound = n as f64 / 2.0 * omega as f64;
            let slack = bound - s.q1;
            if slack < -SLACK_TOL {
                return Err(self.violation("ratio", g, &s, format!("q1 / omega = {} exceeds n / 2", s.q1 / omega as f64)));
            }
            let attained = nearly_equal(s.q1, bound, self.eq_tol);
            acc.ratio.add(slack, attained);
            if attained {
                let family = g.multipartite_parts().map(|p| families_label(&p));
                acc.records.push(self.record("ratio", g, mask, &s, bound, family));
            }
        }

        if self.checks.region && in_region(n, omega) {
            let bound = region_threshold(n, omega);
            let slack = bound - s.q1;
            if slack < -SLACK_TOL {
                return Err(self.violation("region", g, &s, format!("q1 = {} exceeds 3n/2 + omega - 4 = {bound}", s.q1)));
            }
            let attained = nearly_equal(s.q1, bound, self.eq_tol);
            let expected = region_equality_expected(n, omega) && g.is_turan(omega);
            if attained != expected {
                return Err(self.violation("region", g, &s, format!("region equality mismatch: attained = {attained}")));
            }
            acc.region[omega].add(slack, attained);
            if attained {
                acc.records.push(self.record("region", g, mask, &s, bound, Some(format!("turan:{n},{omega}"))));
            }
        }

        if self.checks.soundness {
            let chi = s.chi.expect("computed for soundness");
            if omega > chi {
                return Err(self.violation("soundness", g, &s, format!("omega = {omega} exceeds chi = {chi}")));
            }
            let known = Known { q1: s.q1, omega, chi: s.chi, lower: self.lower[omega] };
            let report = assemble(g, &known, self.eq_tol).expect("bounds defined for connected graphs");
            acc.sound.observe(&report, g).map_err(|detail| self.violation("soundness", g, &s, detail))?;
        }
        Ok(())
    }

    fn finish(&self, mut acc: Acc, masks: u64) -> Result<SweepReport> {
        let n = self.n;
        let mut checks = Vec::new();
        let fail = |check: &str, graph6: String, detail: String| {
            Error::Violation(Box::new(Violation { check: check.into(), graph6, detail, report: None }))
        };

        if self.checks.upper {
            let mut by_omega = Vec::new();
            for w in 2..=n {
                let t = &acc.upper[w];
                let expected = self.upper_expected(w)?;
                if t.equality != expected {
                    return Err(fail(
                        "upper",
                        String::new(),
                        format!("omega = {w}: {} equality graphs, expected {expected}", t.equality),
                    ));
                }
                by_omega.push(OmegaCount {
                    omega: w,
                    graphs: t.graphs,
                    equality: t.equality,
                    expected: Some(expected),
                    bound: Some(self.upper[w]),
                    min_q1: None,
                });
            }
            checks.push(summary("upper", &acc.upper, by_omega));
        }

        if self.checks.lower {
            let mut by_omega = Vec::new();
            let mut examined = 0;
            for w in 2..=n {
                let m = &acc.lower[w];
                examined += m.graphs;
                let bound = self.lower[w].expect("w >= 2");
                let extremal = if w == 2 { families::path(n)? } else { families::kite(n, w)? };
                let min = m.min.ok_or_else(|| fail("lower", String::new(), format!("no graph with omega = {w}")))?;
                if !nearly_equal(min, bound, self.eq_tol) {
                    return Err(fail("lower", String::new(), format!("omega = {w}: minimum q1 {min} differs from bound {bound}")));
                }
                let expected = if self.dedup { 1 } else { labeled_copies(&extremal) };
                for &(mask, q1) in &m.minimizers {
                    let g = Graph::from_edge_mask(n, mask)?;
                    if !isomorphic(&g, &extremal) {
                        return Err(fail("lower", g.to_graph6(), format!("omega = {w}: minimizer is not {}", lower_label(n, w))));
                    }
                    let s = Sample { q1, omega: w, chi: None };
                    acc.records.push(self.record("lower", &g, mask, &s, bound, Some(lower_label(n, w))));
                }
                if m.minimizers.len() as u64 != expected {
                    return Err(fail(
                        "lower",
                        String::new(),
                        format!("omega = {w}: {} minimizers, expected {expected}", m.minimizers.len()),
                    ));
                }
                by_omega.push(OmegaCount {
                    omega: w,
                    graphs: m.graphs,
                    equality: m.minimizers.len() as u64,
                    expected: Some(expected),
                    bound: Some(bound),
                    min_q1: Some(min),
                });
            }
            let min_slack = (2..=n)
                .filter_map(|w| acc.lower[w].min.map(|q| q - self.lower[w].unwrap_or(q)))
                .reduce(f64::min);
            let equality = by_omega.iter().map(|o| o.equality).sum();
            checks.push(CheckSummary { check: "lower", examined, equality, min_slack, by_omega });
        }

        if self.checks.ratio {
            let t = &acc.ratio;
            checks.push(CheckSummary {
                check: "ratio",
                examined: t.graphs,
                equality: t.equality,
                min_slack: t.min_slack,
                by_omega: Vec::new(),
            });
        }

        if self.checks.region {
            let mut by_omega = Vec::new();
            for w in (2..=n).filter(|&w| in_region(n, w)) {
                let t = &acc.region[w];
                let expected = if region_equality_expected(n, w) {
                    if self.dedup { 1 } else { labeled_copies(&families::turan(n, w)?) }
                } else {
                    0
                };
                if t.equality != expected {
                    return Err(fail(
                        "region",
                        String::new(),
                        format!("omega = {w}: {} equality graphs, expected {expected}", t.equality),
                    ));
                }
                by_omega.push(OmegaCount {
                    omega: w,
                    graphs: t.graphs,
                    equality: t.equality,
                    expected: Some(expected),
                    bound: Some(region_threshold(n, w)),
                    min_q1: None,
                });
            }
            checks.push(summary("region", &acc.region, by_omega));
        }

        let soundness = if self.checks.soundness {
            let expected: u64 = (3..=n)
                .map(|c| Ok(if self.dedup { 1 } else { labeled_copies(&families::turan(n, c)?) }))
                .sum::<Result<u64>>()?;
            if acc.sound.chromatic_equality != expected {
                return Err(fail(
                    "soundness",
                    String::new(),
                    format!("{} chromatic-bound equality graphs, expected {expected}", acc.sound.chromatic_equality),
                ));
            }
            Some(acc.sound.summary())
        } else {
            None
        };

        Ok(SweepReport {
            n,
            dedup: self.dedup,
            masks,
            connected: acc.connected,
            checks,
            soundness,
            records: acc.records,
        })
    }

    /// Size of the clique-bound equality set for clique number `w`.
    fn upper_expected(&self, w: usize) -> Result<u64> {
        let n = self.n;
        let members = if w == 2 {
            (1..=n / 2).map(|p| families::complete_bipartite(p, n - p)).collect::<Result<Vec<_>>>()?
        } else {
            vec![families::turan(n, w)?]
        };
        Ok(if self.dedup { members.len() as u64 } else { members.iter().map(labeled_copies).sum() })
    }
}

fn summary(check: &'static str, tallies: &[Tally], by_omega: Vec<OmegaCount>) -> CheckSummary {
    CheckSummary {
        check,
        examined: tallies.iter().map(|t| t.graphs).sum(),
        equality: tallies.iter().map(|t| t.equality).sum(),
        min_slack: tallies.iter().filter_map(|t| t.min_slack).reduce(f64::min),
        by_omega,
    }
}

/// Family label when `g` is extremal for the clique upper bound.
fn upper_family(g: &Graph, omega: usize) -> Option<String> {
    let n = g.n();
    if omega == 2 {
        let parts = g.multipartite_parts().filter(|p| p.len() == 2)?;
        Some(families_label(&parts))
    } else {
        g.is_turan(omega).then(|| format!("turan:{n},{omega}"))
    }
}

fn families_label(parts: &[usize]) -> String {
    match parts {
        [p, q] => format!("kpq:{},{}", p.min(q), p.max(q)),
        _ => {
            let mut sorted = parts.to_vec();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            let joined: Vec<String> = sorted.iter().map(ToString::to_string).collect();
            format!("multipartite:{}", joined.join(","))
        }
    }
}

fn lower_label(n: usize, w: usize) -> String {
    if w == 2 { format!("path:{n}") } else { format!("kite:{n},{w}") }
}

struct Sample {
    q1: f64,
    omega: usize,
    chi: Option<usize>,
}

#[derive(Debug, Clone, Default)]
struct Tally {
    graphs: u64,
    equality: u64,
    min_slack: Option<f64>,
}

impl Tally {
    fn add(&mut self, slack: f64, attained: bool) {
        self.graphs += 1;
        self.equality += attained as u64;
        self.min_slack = Some(self.min_slack.map_or(slack, |m| m.min(slack)));
    }

    fn merge(&mut self, other: &Tally) {
        self.graphs += other.graphs;
        self.equality += other.equality;
        self.min_slack = match (self.min_slack, other.min_slack) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
    }
}

/// Graphs within the equality tolerance of the smallest `q1` seen.
#[derive(Debug, Clone, Default)]
struct Minima {
    graphs: u64,
    min: Option<f64>,
    /// `(mask, q1)` in enumeration order.
    minimizers: Vec<(u64, f64)>,
}

impl Minima {
    fn offer(&mut self, q1: f64, mask: u64, tol: f64) {
        self.graphs += 1;
        self.push(q1, mask, tol);
    }

    fn push(&mut self, q1: f64, mask: u64, tol: f64) {
        match self.min {
            Some(m) if q1 > m && !nearly_equal(q1, m, tol) => return,
            Some(m) if q1 < m => {
                self.min = Some(q1);
                self.minimizers.retain(|&(_, v)| nearly_equal(v, q1, tol));
            }
            Some(_) => {}
            None => self.min = Some(q1),
        }
        self.minimizers.push((mask, q1));
    }

    fn merge(&mut self, other: Minima, tol: f64) {
        self.graphs += other.graphs;
        for (mask, q1) in other.minimizers {
            self.push(q1, mask, tol);
        }
    }
}

#[derive(Debug, Clone)]
struct Sound {
    examined: u64,
    min_slack: [Option<f64>; BoundKind::ALL.len()],
    chromatic_equality: u64,
    /// `witness[a][b]`: first graph where compared bound `a` is strictly
    /// below compared bound `b`.
    witness: Vec<Vec<Option<Witness>>>,
}

impl Sound {
    fn new() -> Self {
        let k = BoundKind::COMPARED.len();
        Sound { examined: 0, min_slack: [None; BoundKind::ALL.len()], chromatic_equality: 0, witness: vec![vec![None; k]; k] }
    }

    fn observe(&mut self, report: &BoundReport, g: &Graph) -> std::result::Result<(), String> {
        self.examined += 1;
        for (i, e) in report.bounds.iter().enumerate() {
            let Some(slack) = e.slack else { continue };
            if slack < -SLACK_TOL {
                return Err(format!("{} bound violated, slack {slack}", e.kind.label()));
            }
            self.min_slack[i] = Some(self.min_slack[i].map_or(slack, |m: f64| m.min(slack)));
        }
        if let Some(e) = report.get(BoundKind::Chromatic).filter(|e| e.value.is_some()) {
            let chi = report.chi.expect("chromatic bound needs chi");
            if e.attained != g.is_turan(chi) {
                return Err(format!("chromatic bound equality mismatch (chi = {chi}, attained = {})", e.attained));
            }
            self.chromatic_equality += e.attained as u64;
        }
        let values: Vec<Option<f64>> = BoundKind::COMPARED.iter().map(|&k| report.value(k)).collect();
        for (a, va) in values.iter().enumerate() {
            for (b, vb) in values.iter().enumerate() {
                if let (Some(va), Some(vb)) = (va, vb) {
                    if a != b && self.witness[a][b].is_none() && *va < vb - STRICT_GAP {
                        self.witness[a][b] = Some(Witness {
                            better: BoundKind::COMPARED[a].key(),
                            worse: BoundKind::COMPARED[b].key(),
                            graph6: g.to_graph6(),
                            better_value: *va,
                            worse_value: *vb,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    fn merge(&mut self, other: Sound) {
        self.examined += other.examined;
        self.chromatic_equality += other.chromatic_equality;
        for (mine, theirs) in self.min_slack.iter_mut().zip(other.min_slack) {
            *mine = match (*mine, theirs) {
                (Some(a), Some(b)) => Some(a.min(b)),
                (a, b) => a.or(b),
            };
        }
        for (row, other_row) in self.witness.iter_mut().zip(other.witness) {
            for (slot, w) in row.iter_mut().zip(other_row) {
                if slot.is_none() {
                    *slot = w;
                }
            }
        }
    }

    fn summary(&self) -> SoundnessSummary {
        let min_slack = BoundKind::ALL.iter().zip(&self.min_slack).filter_map(|(k, s)| s.map(|s| (k.key(), s))).collect();
        let mut witnesses = Vec::new();
        let mut missing = Vec::new();
        for (a, row) in self.witness.iter().enumerate() {
            for (b, w) in row.iter().enumerate() {
                if a == b {
                    continue;
                }
                match w {
                    Some(w) => witnesses.push(w.clone()),
                    None => missing.push((BoundKind::COMPARED[a].key(), BoundKind::COMPARED[b].key())),
                }
            }
        }
        SoundnessSummary { examined: self.examined, min_slack, chromatic_equality: self.chromatic_equality, witnesses, missing }
    }
}

struct Acc {
    connected: u64,
    upper: Vec<Tally>,
    lower: Vec<Minima>,
    ratio: Tally,
    region: Vec<Tally>,
    sound: Sound,
    records: Vec<VerifyRecord>,
    violation: Option<Violation>,
}

impl Acc {
    /// Appends a later chunk.
    fn merge(&mut self, other: Acc, ctx: &Context) {
        self.connected += other.connected;
        for (a, b) in self.upper.iter_mut().zip(&other.upper) {
            a.merge(b);
        }
        for (a, b) in self.lower.iter_mut().zip(other.lower) {
            a.merge(b, ctx.eq_tol);
        }
        self.ratio.merge(&other.ratio);
        for (a, b) in self.region.iter_mut().zip(&other.region) {
            a.merge(b);
        }
        self.sound.merge(other.sound);
        self.records.extend(other.records);
        self.violation = other.violation;
    }
}
