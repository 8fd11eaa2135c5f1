//! Decision procedures. Every positive answer carries a topological sort
//! that is re-checked against the graph and the language before it is
//! returned.

mod bounded;
mod brute;
mod dispatch;
mod group;
mod monomial;
pub(crate) mod search;
mod spec;
mod special;

use std::hash::Hash;

use serde::Serialize;

pub use bounded::solve_bounded_width;
pub use brute::{solve_brute, solve_brute_multi, MultiPair};
pub use dispatch::{choose_solver, dispatch, solve_union, SolveOptions, SOLVERS};
pub use group::{
    arrange, gamma, insertion_compress, omega_estimate, reachable_set, realize_segmented, solve_district_monomial,
    solve_group_csh, CompressResult, DistrictJson, DistrictMonomial, GroupConfig, GroupJson, GroupPresentation,
};
pub use monomial::{solve_monomial, Monomial};
pub use spec::LanguageSpec;
pub use special::{solve_aab, solve_ab_or_aa, solve_ab_star_btail, solve_apbp, solve_kprime_or_power};

use crate::dag::{DagError, LabeledDag};
use crate::lang::{Dfa, LangError};
use crate::monoid::MonoidError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolveError {
    #[error("{what} exceeds the cap of {limit}")]
    CapExceeded { what: &'static str, limit: usize },
    #[error("solver '{solver}' does not apply: {reason}")]
    NotApplicable { solver: &'static str, reason: String },
    #[error("internal error: solver '{0}' produced a witness that fails verification")]
    InvalidWitness(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid language specification: {0}")]
    Spec(String),
    #[error(transparent)]
    Lang(#[from] LangError),
    #[error(transparent)]
    Dag(#[from] DagError),
    #[error(transparent)]
    Monoid(#[from] MonoidError),
}

impl SolveError {
    pub fn is_cap(&self) -> bool {
        matches!(
            self,
            SolveError::CapExceeded { .. }
                | SolveError::Lang(LangError::CapExceeded { .. })
                | SolveError::Dag(DagError::CapExceeded { .. })
                | SolveError::Monoid(MonoidError::CapExceeded { .. })
        )
    }
}

pub(crate) fn not_applicable(solver: &'static str, reason: impl Into<String>) -> SolveError {
    SolveError::NotApplicable {
        solver,
        reason: reason.into(),
    }
}

/// Deterministic acceptor read one vertex label at a time.
pub trait Acceptor {
    type State: Clone + Eq + Hash;

    fn start(&self) -> Self::State;
    fn step_word(&self, s: &Self::State, word: &str) -> Self::State;
    fn is_accepting(&self, s: &Self::State) -> bool;
    fn knows(&self, c: char) -> bool;

    fn accepts(&self, word: &str) -> bool {
        word.chars().all(|c| self.knows(c)) && self.is_accepting(&self.step_word(&self.start(), word))
    }
}

impl Acceptor for Dfa {
    type State = usize;

    fn start(&self) -> usize {
        self.initial()
    }

    fn step_word(&self, s: &usize, word: &str) -> usize {
        self.run(*s, word).expect("labels checked against the alphabet")
    }

    fn is_accepting(&self, s: &usize) -> bool {
        self.is_final(*s)
    }

    fn knows(&self, c: char) -> bool {
        self.alphabet().contains(c)
    }
}

pub(crate) fn check_labels<A: Acceptor>(g: &LabeledDag, acc: &A) -> Result<(), SolveError> {
    for l in g.labels() {
        if let Some(c) = l.chars().find(|&c| !acc.knows(c)) {
            return Err(SolveError::Lang(LangError::UnknownSymbol(c)));
        }
    }
    Ok(())
}

pub(crate) fn require_letters(g: &LabeledDag, solver: &'static str) -> Result<(), SolveError> {
    if g.single_letter_labels() {
        Ok(())
    } else {
        Err(not_applicable(solver, "vertex labels must be single letters"))
    }
}

/// Outcome of a solver run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub decision: bool,
    /// Vertices in order, 0-based.
    pub witness: Option<Vec<usize>>,
    pub solver: String,
    /// False only for a "no" that rests on a bounded search whose bound is
    /// not known to be large enough.
    pub complete: bool,
}

impl SolveResult {
    /// Positive answer; the order is checked before it is accepted.
    pub fn yes<A: Acceptor>(g: &LabeledDag, order: Vec<usize>, acc: &A, solver: &str) -> Result<Self, SolveError> {
        if !g.is_topological_sort(&order) || !acc.accepts(&g.spell(&order)) {
            return Err(SolveError::InvalidWitness(solver.to_string()));
        }
        Ok(SolveResult {
            decision: true,
            witness: Some(order),
            solver: solver.to_string(),
            complete: true,
        })
    }

    pub fn no(solver: &str) -> Self {
        SolveResult {
            decision: false,
            witness: None,
            solver: solver.to_string(),
            complete: true,
        }
    }

    pub fn with_solver(mut self, solver: &str) -> Self {
        self.solver = solver.to_string();
        self
    }

    pub fn without_witness(mut self) -> Self {
        self.witness = None;
        self
    }
}
