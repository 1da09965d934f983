//! The region where `q1 ≤ 3n/2 + ω − 4` holds, the Turán graphs that break
//! it outside that region, and the conjectured extremal graphs for
//! `q1 − ω`.

use serde::Serialize;

use super::sweep::{in_region, region_threshold, REGION_MIN_ORDER};
use crate::bounds::ub_multipartite;
use crate::error::{Error, Result, Violation};
use crate::families;
use crate::graph::MAX_VERTICES;
use crate::spectral::q1;
use crate::{nearly_equal, EQ_TOL};

/// Eigensolver and closed form must agree this closely on a certificate.
pub const CERT_AGREEMENT: f64 = 1e-7;

#[derive(Debug, Clone, Serialize)]
pub struct RegionRow {
    pub omega: usize,
    /// `q1(T(n, ω))`, the largest `q1` with clique number `ω`.
    pub q1: f64,
    pub threshold: f64,
    pub slack: f64,
    pub equality: bool,
}

/// Family-level region check at order `n`: for every `ω` in the region,
/// `q1(T(n, ω)) ≤ 3n/2 + ω − 4`, with equality exactly for `ω = 4, 4 | n`
/// and `ω = n/2`. Since `T(n, ω)` maximizes `q1` among graphs of clique
/// number `ω`, this covers every graph of order `n`.
pub fn conjecture_region_family(n: usize) -> Result<Vec<RegionRow>> {
    if !(REGION_MIN_ORDER..=MAX_VERTICES).contains(&n) {
        return Err(Error::invalid(format!("region check needs {REGION_MIN_ORDER} <= n <= {MAX_VERTICES}, got {n}")));
    }
    let mut rows = Vec::new();
    for omega in (2..=n).filter(|&w| in_region(n, w)) {
        let g = families::turan(n, omega)?;
        let value = q1(&g)?;
        let threshold = region_threshold(n, omega);
        let slack = threshold - value;
        let equality = nearly_equal(value, threshold, EQ_TOL);
        let expected = (omega == 4 && n % 4 == 0) || 2 * omega == n;
        if slack < -1e-7 || equality != expected {
            return Err(Error::Violation(Box::new(Violation {
                check: "region".into(),
                graph6: g.to_graph6(),
                detail: format!("n = {n}, omega = {omega}: q1 = {value}, threshold = {threshold}"),
                report: None,
            })));
        }
        rows.push(RegionRow { omega, q1: value, threshold, slack, equality });
    }
    Ok(rows)
}

/// A Turán graph exceeding `3n/2 + ω − 4`.
#[derive(Debug, Clone, Serialize)]
pub struct CounterexampleCert {
    pub n: usize,
    pub omega: usize,
    /// `q1(T(n, ω))` from the eigensolver.
    pub q1: f64,
    /// The same value from the complete multipartite closed form.
    pub closed_form: f64,
    pub threshold: f64,
    /// `q1 − threshold`.
    pub margin: f64,
    pub parts: Vec<usize>,
    /// `χ(T(n, ω)) = ω`.
    pub chi: usize,
    pub q1_minus_chi: f64,
    /// `3n/2 − 4`, the bound conjectured for `q1 − χ`.
    pub chi_threshold: f64,
}

/// Certificates for every `10 ≤ n ≤ n_max` and `5 ≤ ω < ⌈n/2⌉` where
/// `q1(T(n, ω))` exceeds `3n/2 + ω − 4` by more than the equality tolerance.
pub fn find_counterexamples(n_max: usize) -> Result<Vec<CounterexampleCert>> {
    if n_max > MAX_VERTICES {
        return Err(Error::TooManyVertices { n: n_max, max: MAX_VERTICES });
    }
    let mut certs = Vec::new();
    for n in 10..=n_max {
        for omega in 5..n.div_ceil(2) {
            let g = families::turan(n, omega)?;
            let value = q1(&g)?;
            let closed_form = ub_multipartite(n, omega)?;
            if (value - closed_form).abs() > CERT_AGREEMENT {
                return Err(Error::invalid(format!(
                    "T({n},{omega}): eigensolver {value} and closed form {closed_form} disagree"
                )));
            }
            let threshold = region_threshold(n, omega);
            let margin = value - threshold;
            if margin <= EQ_TOL {
                continue;
            }
            certs.push(CounterexampleCert {
                n,
                omega,
                q1: value,
                closed_form,
                threshold,
                margin,
                parts: families::turan_parts(n, omega)?,
                chi: omega,
                q1_minus_chi: value - omega as f64,
                chi_threshold: 1.5 * n as f64 - 4.0,
            });
        }
    }
    Ok(certs)
}

/// `q1 − ω` for one conjectured extremal graph.
#[derive(Debug, Clone, Serialize)]
pub struct ExtremalRow {
    pub n: usize,
    pub graph: String,
    pub graph6: String,
    pub connected: bool,
    pub q1: f64,
    pub omega: usize,
    pub q1_minus_omega: f64,
    /// `3n/2 − 4`.
    pub threshold: f64,
}

/// Conjectured maximizers of `q1 − ω` at order `n` (`4 ≤ n ≤ 12`): the
/// complement of a perfect matching for even `n`; for odd `n` both readings
/// of "complement of a perfect matching on `n − 3` vertices and a
/// triangle". Data only; nothing is asserted.
pub fn conjecture1_extremal_report(n: usize) -> Result<Vec<ExtremalRow>> {
    if !(4..=12).contains(&n) {
        return Err(Error::invalid(format!("extremal report covers 4 <= n <= 12, got {n}")));
    }
    let graphs = if n % 2 == 0 {
        vec![(format!("cpm:{n}"), families::complement_perfect_matching(n)?)]
    } else if n >= 5 {
        vec![
            (format!("cpmtri:{n}"), families::cpm_plus_triangle(n)?),
            (format!("cpm:{} + K3", n - 3), families::cpm_beside_triangle(n)?),
        ]
    } else {
        Vec::new()
    };
    graphs
        .into_iter()
        .map(|(name, g)| {
            let value = q1(&g)?;
            let omega = g.clique_number();
            Ok(ExtremalRow {
                n,
                graph: name,
                graph6: g.to_graph6(),
                connected: g.is_connected(),
                q1: value,
                omega,
                q1_minus_omega: value - omega as f64,
                threshold: 1.5 * n as f64 - 4.0,
            })
        })
        .collect()
}
