//! Polynomial first-integral search and supporting analyses.

mod ansatz;
mod independence;
mod lemmas;
mod nullspace;
pub mod registry;
mod sweep;
mod system;

pub use ansatz::{enumerate_monomials, enumerate_monomials_in, AnsatzBasis};
pub use independence::{
    independence_rank, jacobian_rank, PointRank, RankReport, FALLBACK_POINT, PRIMARY_POINT, RANK_THRESHOLD,
};
pub use lemmas::{
    estrella_exponent, estrella_kernel, estrella_predicted_dim, f123, lemma_dificil_solve, lemma_estrella_solve,
    lemma_registry, sn_names, sn_recursion_check, Dificil, DificilSolution, Estrella, EstrellaSolution, LemmaAnalyzer,
    LemmaOutcome, LemmaParams, Sn, SnCheck,
};
pub use nullspace::{rref_rational, solver_registry, FractionFree, GaussJordan, NullspaceBasis, NullspaceSolver};
pub use registry::{Named, Registry};
pub use system::{assemble_system, LinearSystem, SparseRow};
pub use sweep::{
    degree_sweep, integrability_report, solve_degree, DegreeRecord, DegreeResult, EngineInfo, Expectation,
    ExpectedRecord, IntegrabilityReport, PIVOT_RULE,
};
