//! Power sets and critical exponents: closed forms for complete, chordal,
//! cycle and bipartite graphs, the super-additivity thresholds, witness
//! search, numeric brackets and the scan comparing them with `r - 2`.

mod estimate;
mod formulas;
mod hset;
mod scan;
mod search;

pub use estimate::{
    estimate_ce_numeric, exponent_grid, point_seed, NumericBracket, DEFAULT_GRID_STEP,
};
pub use formulas::{
    critical_exponent_clique_formula, hset_bipartite, hset_chordal, hset_complete, hset_cycle,
    is_between_k22_and_k2m, superadditive_powers,
};
pub use hset::{rational_grid, HSet, Lattice, Membership, Shape};
pub use scan::{conjecture_scan, ScanConfig, ScanRecord, ScanReport, ScanSummary};
pub use search::{
    find_counterexample, Construction, SearchBudget, SearchConfig, WitnessCheck, WitnessReport,
};
