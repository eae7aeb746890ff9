//! Reference solvers: the layered dynamic program and the exhaustive
//! shortest-path enumerator used as the oracle for everything else.

mod dp;
mod oracle;

pub use dp::{solve_dp, solve_dp_with, DpStats};
pub use oracle::{
    enumerate_shortest_paths, solve_oracle, solve_oracle_with, PathEnumeration, DEFAULT_ORACLE_CAP,
};

use thiserror::Error;

use crate::deadline::Interrupted;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("enumeration cap of {0} steps exceeded before a witness was found")]
    CapExceeded(u64),
    #[error(transparent)]
    Interrupted(#[from] Interrupted),
}

/// Per-color count range of a balance-fair path on `path_vertices` vertices
/// over `num_colors` colors: every count is `floor` or `ceil` of the mean.
pub fn fair_count_range(path_vertices: usize, num_colors: usize) -> (usize, usize) {
    let lo = path_vertices / num_colors;
    let hi = path_vertices.div_ceil(num_colors);
    (lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn count_range() {
        assert_eq!(fair_count_range(9, 3), (3, 3));
        assert_eq!(fair_count_range(4, 3), (1, 2));
        assert_eq!(fair_count_range(2, 5), (0, 1));
    }
}
