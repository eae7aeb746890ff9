//! Instance generators for the hardness constructions, the brute-force
//! oracles of their source problems, and checkers for the structural
//! certificates each generator emits.

mod certify;
mod compose;
mod ec;
mod ehs;
mod source;
mod vc;

pub use certify::{
    average_intra_component_distance, bandwidth_stretch, distance_levels, distance_levels_are_cliques,
    edge_path_partition_valid, interval_model_matches, is_bipartite, is_cactus, verify_certificate,
};
pub use compose::{cross_compose_clique_cover, cross_compose_treedepth, gen_avg_distance};
pub use ec::gen_exact_cover;
pub use ehs::gen_exact_hitting_set;
pub use source::{
    exact_cover_oracle, exact_hitting_set_oracle, vertex_cover_oracle, SetSystem, SourceError, VcInstance,
    ORACLE_LIMIT,
};
pub use vc::gen_vertex_cover;

use thiserror::Error;

use crate::graph::InstanceError;
use crate::report::{join, KeyValueReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("element {0} occurs in no set")]
    ElementUncovered(usize),
    #[error("budget k = {k} outside 1..={n}")]
    BudgetOutOfRange { k: usize, n: usize },
    #[error("batch member {index} differs from the first in colors or s-t distance")]
    MixedClass { index: usize },
    #[error("empty batch")]
    EmptyBatch,
    #[error(transparent)]
    Instance(#[from] InstanceError),
}

/// A structural witness emitted next to a generated instance. Vertex ids
/// are 0-based here and 1-based in the rendered report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// `phi[v]`: position of `v` in a linear layout, `1..=n`.
    Bandwidth { phi: Vec<usize>, max_stretch: usize },
    /// Closed interval per vertex; touching endpoints count as overlap.
    IntervalModel(Vec<(usize, usize)>),
    /// Edge-disjoint paths covering every edge.
    EdgePathPartition { paths: Vec<Vec<usize>>, max_paths: usize },
    /// BFS levels from `s`, each claimed to be a clique.
    DistanceLevels(Vec<Vec<usize>>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorReport {
    pub construction: &'static str,
    /// Role of each color.
    pub legend: Vec<String>,
    /// Role of each vertex.
    pub roles: Vec<String>,
    pub metadata: Vec<(&'static str, String)>,
    pub certificates: Vec<Certificate>,
}

impl GeneratorReport {
    fn new(construction: &'static str) -> Self {
        Self {
            construction,
            legend: Vec::new(),
            roles: Vec::new(),
            metadata: Vec::new(),
            certificates: Vec::new(),
        }
    }

    fn meta(&mut self, key: &'static str, value: impl ToString) {
        self.metadata.push((key, value.to_string()));
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.metadata.iter().find(|(k, _)| *k == key).map(|(_, v)| v.as_str())
    }

    pub fn to_report(&self) -> KeyValueReport {
        let mut r = KeyValueReport::new();
        r.push("construction", self.construction);
        for (k, v) in &self.metadata {
            r.push(*k, v);
        }
        for (i, role) in self.legend.iter().enumerate() {
            r.push(format!("color.{}", i + 1), role);
        }
        for (v, role) in self.roles.iter().enumerate() {
            r.push(format!("vertex.{}", v + 1), role);
        }
        for cert in &self.certificates {
            match cert {
                Certificate::Bandwidth { phi, max_stretch } => {
                    r.push("bandwidth.max_stretch", max_stretch);
                    r.push("bandwidth.phi", join(phi));
                }
                Certificate::IntervalModel(iv) => {
                    r.push("interval_model", join(iv.iter().map(|(a, b)| format!("{a}:{b}"))));
                }
                Certificate::EdgePathPartition { paths, max_paths } => {
                    r.push("edge_paths.count", paths.len());
                    r.push("edge_paths.max", max_paths);
                    for (i, p) in paths.iter().enumerate() {
                        r.push(format!("edge_paths.{}", i + 1), join(p.iter().map(|v| v + 1)));
                    }
                }
                Certificate::DistanceLevels(levels) => {
                    r.push("distance_levels.count", levels.len());
                    for (d, level) in levels.iter().enumerate() {
                        r.push(format!("distance_levels.{d}"), join(level.iter().map(|v| v + 1)));
                    }
                }
            }
        }
        r
    }
}
