//! Generation and exact certification of monomial families whose syzygy
//! bundles are stable or semistable.
//!
//! * [`monomial`] and [`family`]: exponent-vector arithmetic, the degree-`d`
//!   hypertetrahedron and its faces.
//! * [`criterion`]: the subset-inequality checker, a brute-force oracle, and
//!   the exact splitting-type decider on `P^1`.
//! * [`constructions`]: explicit families for every admissible `(N, d, n)`
//!   and the dispatcher that picks one.
//! * [`inequalities`]: exact evaluators and grid sweeps for the auxiliary
//!   functions behind the constructions' stability arguments.
//! * [`sweep`]: the `(N, d, n)` grid runner and its report.

pub mod binomial;
pub mod constructions;
pub mod criterion;
pub mod error;
pub mod exec;
pub mod family;
pub mod inequalities;
pub mod monomial;
pub mod sweep;

pub use binomial::binomial;
pub use criterion::{
    brute_force_check, check_family, is_m_primary, is_semistable_p1, splitting_type_p1,
    strategy_x0_holds, StabilityCertificate, Verdict,
};
pub use error::{Error, Result};
pub use exec::Exec;
pub use family::{faces_family, multiples_in_family, MonomialFamily};
pub use monomial::{enumerate_monomials, Face, Monomial};
