//! Closed-form bounds on `q1` and per-graph comparison reports.
//!
//! Bounds parameterized by order and clique (or chromatic) number derive
//! `k = ⌊n/ω⌋` and `r = n − kω` internally. Degree-based bounds take a
//! [`DegreeProfile`] so they can be evaluated from degree data alone.

use std::fmt::Write as _;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::families;
use crate::graph::{DegreeProfile, Graph, CHROMATIC_CAP};
use crate::spectral;
use crate::{nearly_equal, EQ_TOL};

/// Shared closed form for complete `t`-partite / clique-number bounds.
fn multipartite_form(n: usize, t: usize) -> f64 {
    let (k, r) = ((n / t) as f64, (n % t) as f64);
    let t = t as f64;
    let disc = k * k * t * t + ((2.0 * r + 4.0) * t - 8.0 * r) * k + (r - 2.0) * (r - 2.0);
    ((3.0 * t - 4.0) * k + 3.0 * r - 2.0 + disc.sqrt()) / 2.0
}

/// Upper bound on `q1` for connected graphs of order `n` and clique number
/// `w`, attained by complete bipartite graphs (`w = 2`) and by `T(n, w)`
/// (`w ≥ 3`). Returns 0 for `w = 1`, where the only connected graph is `K1`.
pub fn ub_clique(n: usize, w: usize) -> Result<f64> {
    match w {
        0 => Err(Error::invalid("clique number must be at least 1")),
        _ if w > n => Err(Error::invalid(format!("clique number {w} exceeds order {n}"))),
        1 => Ok(0.0),
        _ => Ok(multipartite_form(n, w)),
    }
}

/// `q1` of the Turán graph `T(n, t)`, the largest among complete `t`-partite
/// graphs of order `n`.
pub fn ub_multipartite(n: usize, t: usize) -> Result<f64> {
    if t < 2 || t > n {
        return Err(Error::invalid(format!("partite count needs 2 <= t <= n, got n={n}, t={t}")));
    }
    Ok(if t == 2 { n as f64 } else { multipartite_form(n, t) })
}

/// The clique bound with the chromatic number in place of `ω`.
pub fn ub_chromatic(n: usize, chi: usize) -> Result<f64> {
    if chi < 3 || chi > n {
        return Err(Error::invalid(format!("chromatic variant needs 3 <= chi <= n, got n={n}, chi={chi}")));
    }
    Ok(multipartite_form(n, chi))
}

/// `2n(1 − 1/w)`.
pub fn ub_hansen_lucas(n: usize, w: usize) -> f64 {
    assert!(w >= 1, "clique number must be at least 1");
    2.0 * n as f64 * (1.0 - 1.0 / w as f64)
}

/// `max_i d_i + √(d_i m_i)` over non-isolated vertices; `None` when the graph
/// has no edges.
pub fn ub_oliveira_1(profile: &DegreeProfile) -> Option<f64> {
    degree_max(profile, |d, m| d + (d * m).sqrt())
}

/// `max_i (d_i + √(d_i² + 8 d_i m_i)) / 2`; `None` when edgeless.
pub fn ub_oliveira_2(profile: &DegreeProfile) -> Option<f64> {
    degree_max(profile, |d, m| (d + (d * d + 8.0 * d * m).sqrt()) / 2.0)
}

fn degree_max(profile: &DegreeProfile, f: impl Fn(f64, f64) -> f64) -> Option<f64> {
    profile
        .by_vertex
        .iter()
        .zip(&profile.two_avg)
        .filter_map(|(&d, m)| m.map(|m| f(d as f64, m)))
        .reduce(f64::max)
}

/// `n + d1 − n/w`.
pub fn ub_liu_liu(n: usize, d1: usize, w: usize) -> f64 {
    assert!(w >= 1, "clique number must be at least 1");
    n as f64 + d1 as f64 - n as f64 / w as f64
}

/// `min_i (d1 + 2d_i − 1 + √((2d_i − d1 + 1)² + 8(i − 1)(d1 − d_i))) / 2`
/// over the non-increasing degree sequence.
pub fn ub_yu(profile: &DegreeProfile) -> f64 {
    let d1 = profile.max_degree() as f64;
    profile
        .degrees
        .iter()
        .enumerate()
        .map(|(i, &di)| {
            let di = di as f64;
            let a = 2.0 * di - d1 + 1.0;
            (d1 + 2.0 * di - 1.0 + (a * a + 8.0 * i as f64 * (d1 - di)).sqrt()) / 2.0
        })
        .fold(f64::INFINITY, f64::min)
}

/// Smallest `q1` among connected graphs of order `n` with clique number `w`:
/// `2 + 2cos(π/n)` (the path) for `w = 2`, otherwise `q1` of the kite.
pub fn lb_clique(n: usize, w: usize) -> Result<f64> {
    if w < 2 || w > n {
        return Err(Error::invalid(format!("lower bound needs 2 <= w <= n, got n={n}, w={w}")));
    }
    if w == 2 {
        return Ok(2.0 + 2.0 * (std::f64::consts::PI / n as f64).cos());
    }
    spectral::q1(&families::kite(n, w)?)
}

/// `(2w − 1 + √(4w² − 12w + 17)) / 2`, the `q1` of a clique with one
/// pendant vertex.
pub fn lb_clique_closed(w: usize) -> Result<f64> {
    if w < 3 {
        return Err(Error::invalid(format!("closed lower bound needs w >= 3, got {w}")));
    }
    let w = w as f64;
    Ok((2.0 * w - 1.0 + (4.0 * w * w - 12.0 * w + 17.0).sqrt()) / 2.0)
}

/// Edge count of `T(n, t)`.
pub fn turan_edge_count(n: usize, t: usize) -> u64 {
    assert!(t >= 1 && t <= n, "Turán graph needs 1 <= t <= n");
    let (k, r, t) = ((n / t) as u64, (n % t) as u64, t as u64);
    (t * t - t) / 2 * k * k + (t - 1) * r * k + r * r.saturating_sub(1) / 2
}

/// Every bound a report can carry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BoundKind {
    /// Order and clique number.
    Clique,
    /// Degrees and 2-average degrees, first form.
    Oliveira1,
    /// Degrees and 2-average degrees, second form.
    Oliveira2,
    /// Order, maximum degree and clique number.
    LiuLiu,
    /// Degree sequence.
    Yu,
    /// `2n(1 − 1/ω)`.
    HansenLucas,
    /// Order and chromatic number.
    Chromatic,
    /// Lower bound: path or kite.
    Kite,
}

impl BoundKind {
    pub const ALL: [BoundKind; 8] = [
        BoundKind::Clique,
        BoundKind::Oliveira1,
        BoundKind::Oliveira2,
        BoundKind::LiuLiu,
        BoundKind::Yu,
        BoundKind::HansenLucas,
        BoundKind::Chromatic,
        BoundKind::Kite,
    ];

    /// The five upper bounds compared in the comparison table.
    pub const COMPARED: [BoundKind; 5] =
        [BoundKind::Clique, BoundKind::Oliveira1, BoundKind::Oliveira2, BoundKind::LiuLiu, BoundKind::Yu];

    /// Key used in JSON maps and CSV headers.
    pub fn key(self) -> &'static str {
        match self {
            BoundKind::Clique => "b5",
            BoundKind::Oliveira1 => "b13",
            BoundKind::Oliveira2 => "b14",
            BoundKind::LiuLiu => "b15",
            BoundKind::Yu => "b16",
            BoundKind::HansenLucas => "hl",
            BoundKind::Chromatic => "chi",
            BoundKind::Kite => "lb",
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            BoundKind::Clique => "clique",
            BoundKind::Oliveira1 => "oliveira-1",
            BoundKind::Oliveira2 => "oliveira-2",
            BoundKind::LiuLiu => "liu-liu",
            BoundKind::Yu => "yu",
            BoundKind::HansenLucas => "hansen-lucas",
            BoundKind::Chromatic => "chromatic",
            BoundKind::Kite => "kite-lower",
        }
    }

    pub fn is_lower(self) -> bool {
        self == BoundKind::Kite
    }
}

/// One bound evaluated on one graph. `value` is `None` when the graph is
/// outside the bound's hypotheses.
#[derive(Debug, Clone, Serialize)]
pub struct BoundEntry {
    #[serde(skip)]
    pub kind: BoundKind,
    pub value: Option<f64>,
    /// `value − q1` for upper bounds, `q1 − value` for lower bounds.
    pub slack: Option<f64>,
    pub attained: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    /// graph6 encoding.
    pub id: String,
    pub n: usize,
    pub m: usize,
    pub omega: usize,
    pub chi: Option<usize>,
    pub connected: bool,
    pub q1: f64,
    #[serde(serialize_with = "serialize_entries")]
    pub bounds: Vec<BoundEntry>,
}

fn serialize_entries<S: Serializer>(entries: &[BoundEntry], s: S) -> std::result::Result<S::Ok, S::Error> {
    let mut map = s.serialize_map(Some(entries.len()))?;
    for e in entries {
        map.serialize_entry(e.kind.key(), e)?;
    }
    map.end()
}

impl BoundReport {
    pub fn get(&self, kind: BoundKind) -> Option<&BoundEntry> {
        self.bounds.iter().find(|e| e.kind == kind)
    }

    pub fn value(&self, kind: BoundKind) -> Option<f64> {
        self.get(kind).and_then(|e| e.value)
    }

    /// Smallest slack over the applicable bounds.
    pub fn min_slack(&self) -> Option<f64> {
        self.bounds.iter().filter_map(|e| e.slack).reduce(f64::min)
    }

    pub const CSV_HEADER: &'static str = "n,m,omega,chi,q1,b5,b13,b14,b15,b16,lb";

    /// One CSV row in [`Self::CSV_HEADER`] order; inapplicable bounds are
    /// empty fields.
    pub fn csv_row(&self) -> String {
        let opt = |v: Option<f64>| v.map(|x| x.to_string()).unwrap_or_default();
        let mut row = format!(
            "{},{},{},{},{}",
            self.n,
            self.m,
            self.omega,
            self.chi.map(|c| c.to_string()).unwrap_or_default(),
            self.q1
        );
        for kind in [BoundKind::Clique, BoundKind::Oliveira1, BoundKind::Oliveira2, BoundKind::LiuLiu, BoundKind::Yu, BoundKind::Kite] {
            let _ = write!(row, ",{}", opt(self.value(kind)));
        }
        row
    }

    /// Human-readable table at four decimals.
    pub fn render_table(&self) -> String {
        let mut out = format!(
            "graph {}  n={} m={} omega={} chi={}{}\nq1 = {:.4}\n",
            self.id,
            self.n,
            self.m,
            self.omega,
            self.chi.map(|c| c.to_string()).unwrap_or_else(|| "?".into()),
            if self.connected { "" } else { "  (disconnected)" },
            self.q1
        );
        let _ = writeln!(out, "{:<14} {:>5} {:>10} {:>10}  attained", "bound", "side", "value", "slack");
        for e in &self.bounds {
            let side = if e.kind.is_lower() { "lower" } else { "upper" };
            let fmt = |v: Option<f64>| v.map(|x| format!("{x:.4}")).unwrap_or_else(|| "n/a".into());
            let _ = writeln!(
                out,
                "{:<14} {:>5} {:>10} {:>10}  {}",
                e.kind.label(),
                side,
                fmt(e.value),
                fmt(e.slack),
                if e.attained { "yes" } else { "" }
            );
        }
        out
    }
}

/// Options for [`evaluate_with`].
#[derive(Debug, Clone, Copy)]
pub struct EvalOptions {
    /// Relative gap below which a bound counts as attained.
    pub eq_tol: f64,
    /// Chromatic number known in advance (e.g. from a family); otherwise it
    /// is computed when the graph has at most [`CHROMATIC_CAP`] vertices.
    pub chi: Option<usize>,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions { eq_tol: EQ_TOL, chi: None }
    }
}

/// Evaluates every bound on `g` with default options.
pub fn evaluate_all(g: &Graph) -> Result<BoundReport> {
    evaluate_with(g, &EvalOptions::default())
}

/// Evaluates every bound on `g`. Bounds whose hypotheses need connectivity
/// (clique, chromatic, kite) are reported as not applicable on disconnected
/// input.
pub fn evaluate_with(g: &Graph, opts: &EvalOptions) -> Result<BoundReport> {
    let n = g.n();
    let omega = g.clique_number();
    let chi = match opts.chi {
        Some(c) => Some(c),
        None if n <= CHROMATIC_CAP => Some(g.chromatic_number()?),
        None => None,
    };
    let connected = g.is_connected();
    let lower = match omega {
        w if connected && w >= 2 => Some(lb_clique(n, w)?),
        _ => None,
    };
    let known = Known { q1: spectral::q1(g)?, omega, chi, lower };
    assemble(g, &known, opts.eq_tol)
}

/// Graph data already computed by the caller, so sweeps can reuse a cached
/// lower bound instead of solving a kite per graph.
pub(crate) struct Known {
    pub q1: f64,
    pub omega: usize,
    pub chi: Option<usize>,
    /// Lower bound for `(n, omega)`; `None` when not applicable.
    pub lower: Option<f64>,
}

pub(crate) fn assemble(g: &Graph, known: &Known, eq_tol: f64) -> Result<BoundReport> {
    let n = g.n();
    let Known { q1, omega, chi, lower } = *known;
    let connected = g.is_connected();
    let profile = g.degree_profile();

    let mut bounds = Vec::with_capacity(BoundKind::ALL.len());
    for kind in BoundKind::ALL {
        let value = match kind {
            BoundKind::Clique => connected.then(|| ub_clique(n, omega)).transpose()?,
            BoundKind::Oliveira1 => Some(ub_oliveira_1(&profile).unwrap_or(0.0)),
            BoundKind::Oliveira2 => Some(ub_oliveira_2(&profile).unwrap_or(0.0)),
            BoundKind::LiuLiu => Some(ub_liu_liu(n, profile.max_degree(), omega)),
            BoundKind::Yu => Some(ub_yu(&profile)),
            BoundKind::HansenLucas => Some(ub_hansen_lucas(n, omega)),
            BoundKind::Chromatic => match chi {
                Some(c) if connected && c >= 3 => Some(ub_chromatic(n, c)?),
                _ => None,
            },
            BoundKind::Kite => lower.filter(|_| connected),
        };
        let slack = value.map(|v| if kind.is_lower() { q1 - v } else { v - q1 });
        let attained = value.is_some_and(|v| nearly_equal(q1, v, eq_tol));
        bounds.push(BoundEntry { kind, value, slack, attained });
    }

    Ok(BoundReport { id: g.to_graph6(), n, m: g.m(), omega, chi, connected, q1, bounds })
}
