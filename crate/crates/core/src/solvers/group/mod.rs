//! Group languages: reachable sets of Parikh vectors, witness realization
//! on rich instances, and the shuffle solvers for group languages and
//! district monomials.

mod compress;
mod csh;
mod district;
mod presentation;
mod reach;
mod realize;
mod segdp;

pub use compress::{insertion_compress, CompressResult};
pub use csh::{solve_group_csh, GroupConfig};
pub use district::{solve_district_monomial, DistrictJson, DistrictMonomial};
pub use presentation::{GroupJson, GroupPresentation};
pub use reach::{arrange, gamma, omega_estimate, reachable_set};
pub use realize::realize_segmented;
