//! Holes, named configurations, class membership and degree statistics.

pub mod classes;
pub mod configs;
pub mod connector;
pub mod degree;
pub mod holes;

pub use classes::{class_membership, is_sparse, sparse_violation, ClassMembership, GraphClass};
pub use configs::{
    find_configuration, find_wheel, induced_paths, ConfigurationKind, ConfigurationWitness, Roles,
};
pub use connector::{is_minimal_connector, minimal_connector, Connector, ConnectorOutcome};
pub use degree::{gamma, heavy_seagulls, high_degree_vertices, Seagull};
pub use holes::{enumerate_holes, for_each_hole, Hole};
