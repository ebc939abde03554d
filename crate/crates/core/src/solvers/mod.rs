//! SAT and HORNSAT bridges.

pub mod cnf;
pub mod dimacs;
pub mod dpll;
pub mod horn;
pub mod reduction;
pub mod separation;

pub use cnf::{Cnf, Lit};
pub use horn::{hornsat2, hornsat3, Horn3Clause, Horn3Lit, Horn3Theory, HornClause};
pub use reduction::{cnf_to_witness, sat_check, Reduction, SatMethod};
pub use separation::{intertwined_by_sat, separation_cnf};
