//! Truncated power-series solutions and the bounded algebraic-dependence
//! tester that exercises the dependence theorems at desk scale.

mod relation;
mod solve;
mod trunc;

pub use relation::{find_algebraic_relation, monomials, RelationCandidate, RelationSearch};
pub use solve::{residual_autonomous, solve_series_autonomous, solve_series_curve};
pub use trunc::TruncSeries;
