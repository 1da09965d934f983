//! Exhaustive verification over small connected graphs, counterexample
//! certificates, and the bound comparison table.

mod canon;
mod conjecture;
mod enumerate;
mod sweep;
mod table;

use serde::Serialize;

pub use canon::{automorphism_count, canonical_mask, is_canonical, isomorphic, labeled_copies, CANON_MAX};
pub use conjecture::{
    conjecture1_extremal_report, conjecture_region_family, find_counterexamples, CounterexampleCert, ExtremalRow,
    RegionRow, CERT_AGREEMENT,
};
pub use enumerate::{count_connected_labeled, enumerate_connected, DEDUP_MAX, LABELED_MAX};
pub use sweep::{
    conjecture_region_check, full_sweep, in_region, lower_sweep, ratio_sweep, region_threshold, sharpness_sweep,
    soundness_sweep, sweep, CheckSummary, Checks, OmegaCount, SoundnessSummary, SweepReport, Witness,
    REGION_MIN_ORDER, SLACK_TOL,
};
pub use table::{example_table, render_table, seven_vertex_example, table_csv, TableRow};

use crate::EQ_TOL;

#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    /// Worker threads; defaults to the available parallelism.
    pub workers: usize,
    pub eq_tol: f64,
    /// Scan one canonical representative per isomorphism class.
    pub dedup: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
        VerifyConfig { workers, eq_tol: EQ_TOL, dedup: false }
    }
}

/// One graph singled out by a sweep: an equality case or a minimizer.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyRecord {
    pub check: &'static str,
    /// graph6.
    pub id: String,
    /// Upper-triangle edge mask.
    pub mask: u64,
    pub n: usize,
    pub m: usize,
    pub omega: usize,
    pub chi: Option<usize>,
    pub q1: f64,
    pub bound: f64,
    pub slack: f64,
    pub attained: bool,
    /// Extremal family the graph belongs to, e.g. `turan:6,3`.
    pub family: Option<String>,
}
