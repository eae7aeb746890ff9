//! Polynomial kernels for the neighborhood diversity and for the vertex
//! deletion distance to `P_h`-free graphs.

mod nd;
mod ph;

pub use nd::{kernel_nd, nd_partition, TypePartition};
pub use ph::{
    build_path_catalog, find_induced_ph, kernel_ph_free, ph_deletion_set, ph_size_bound, CatalogEntry, PathCatalog,
    PhDeletionSet, DEFAULT_H, MAX_H,
};

use thiserror::Error;

use crate::report::KeyValueReport;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("h = {0} is outside the supported range 2..={max}", max = MAX_H)]
    UnsupportedH(usize),
}

/// What a kernel did, for the side report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelReport {
    pub kernel: &'static str,
    pub original_n: usize,
    pub original_m: usize,
    pub kernel_n: usize,
    pub kernel_m: usize,
    /// The parameter the size bound is stated in.
    pub parameter: usize,
    pub size_bound: u128,
    pub branch: &'static str,
    /// Further kernel-specific values, in report order.
    pub extra: Vec<(&'static str, String)>,
}

impl KernelReport {
    pub fn to_report(&self) -> KeyValueReport {
        let mut r = KeyValueReport::new();
        r.push("kernel", self.kernel)
            .push("original_n", self.original_n)
            .push("original_m", self.original_m)
            .push("kernel_n", self.kernel_n)
            .push("kernel_m", self.kernel_m)
            .push("parameter", self.parameter)
            .push("size_bound", self.size_bound)
            .push("branch", self.branch);
        for (k, v) in &self.extra {
            r.push(*k, v);
        }
        r
    }
}
