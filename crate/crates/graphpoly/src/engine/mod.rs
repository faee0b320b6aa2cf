//! Fast exact engines for polynomial families on the complete graph `K_n`,
//! symbolic and evaluated (exact integers or residues), plus the closed
//! forms and the depth-first-search recurrence for Tutte values as printed
//! in the literature.

mod closed_forms;
mod convolution;
mod gessel_pak;
mod matching;
mod ring;
mod trivariate;
mod tutte;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use closed_forms::{closed_form_symbolic, simple_closed_forms};
pub use gessel_pak::{gessel_pak, gessel_pak_table, GesselPakRow, TutteBase};
pub use matching::{
    hermite_mod_sequence, hermite_poly, matching_bivariate_mod_sequence, matching_complete,
    matching_family_eval, MatchingKind,
};
pub use trivariate::{
    c_complete_eval, c_complete_symbolic, c_mod_sequence, s_complete_eval, s_complete_symbolic,
    s_mod_sequence, xi_complete_eval, xi_complete_symbolic, xi_mod_sequence,
};
pub use tutte::{
    connected_weights, connected_weights_symbolic, f_ab, tutte_complete_eval,
    tutte_complete_eval_mod, tutte_complete_symbolic, tutte_mod_sequence, z_partition,
    z_partition_symbolic, ConnectedWeightTable,
};

/// Default cap for fully symbolic Tutte polynomials.
pub const DEFAULT_TUTTE_SYMBOLIC_BUDGET: usize = 16;
/// Default cap for fully symbolic trivariate polynomials.
pub const DEFAULT_TRIVARIATE_SYMBOLIC_BUDGET: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("n = {n} exceeds the symbolic budget of {budget}")]
    BudgetExceeded { n: usize, budget: usize },
    #[error("a*b = {ab} does not divide c = {c}")]
    DivisibilityViolation { ab: i64, c: i64 },
    #[error("the substitution requires a != 0 and b != 0")]
    ZeroVariable,
    #[error("{value} is not invertible modulo {mu}")]
    NonInvertible { value: u64, mu: u64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// The polynomial families the engines evaluate on `K_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyId {
    Tutte,
    GenMatching,
    DefectMatching,
    BivariateMatching,
    Xi,
    SubgraphCounting,
    CoveredComponents,
    Independence,
    Clique,
    Chromatic,
    Domination,
    Interlace,
}

impl FamilyId {
    pub const ALL: [FamilyId; 12] = [
        FamilyId::Tutte,
        FamilyId::GenMatching,
        FamilyId::DefectMatching,
        FamilyId::BivariateMatching,
        FamilyId::Xi,
        FamilyId::SubgraphCounting,
        FamilyId::CoveredComponents,
        FamilyId::Independence,
        FamilyId::Clique,
        FamilyId::Chromatic,
        FamilyId::Domination,
        FamilyId::Interlace,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            FamilyId::Tutte => "tutte",
            FamilyId::GenMatching => "matching",
            FamilyId::DefectMatching => "defect-matching",
            FamilyId::BivariateMatching => "bivariate-matching",
            FamilyId::Xi => "xi",
            FamilyId::SubgraphCounting => "subgraph-counting",
            FamilyId::CoveredComponents => "covered-components",
            FamilyId::Independence => "independence",
            FamilyId::Clique => "clique",
            FamilyId::Chromatic => "chromatic",
            FamilyId::Domination => "domination",
            FamilyId::Interlace => "interlace",
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = EngineError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FamilyId::ALL
            .iter()
            .copied()
            .find(|f| f.name() == s)
            .ok_or_else(|| EngineError::InvalidParameter(format!("unknown family `{s}`")))
    }
}

/// Euler totient by trial-division factoring.
pub fn totient(m: u64) -> u64 {
    assert!(m >= 1);
    let mut n = m;
    let mut phi = m;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            phi -= phi / p;
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        phi -= phi / n;
    }
    phi
}
