//! Membership in the sparse classes.

use std::fmt;

use serde::Serialize;

use crate::budget::Budget;
use crate::error::Result;
use crate::graph::{clique_number_at_most, Graph};
use crate::recognizers::configs::{find_configuration, ConfigurationKind, Roles};
use crate::recognizers::holes::Hole;

/// A hole and a vertex outside it whose neighbours in the hole do not lie
/// inside a single edge of the hole, if one exists.
///
/// Such a vertex has at least two non-adjacent neighbours in the hole (a
/// hole has no triangles), so this is a search for the corresponding
/// configuration.
pub fn sparse_violation(g: &Graph, budget: &mut Budget) -> Result<Option<(Hole, usize)>> {
    Ok(
        find_configuration(g, ConfigurationKind::T2Wheel, budget)?.map(|w| match w.roles {
            Roles::Wheel { hole, center } => (hole, center),
            _ => unreachable!("hole-vertex search returns wheel roles"),
        }),
    )
}

pub fn is_sparse(g: &Graph, budget: &mut Budget) -> Result<bool> {
    Ok(sparse_violation(g, budget)?.is_none())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClassMembership {
    pub t: usize,
    pub sparse: bool,
    /// Sparse, pyramid-free and prism-free.
    pub very_sparse: bool,
    /// Same as `very_sparse`.
    pub in_f: bool,
    /// Very sparse with no clique on `t + 1` vertices.
    pub in_f_t: bool,
    /// Very sparse and triangle-free.
    pub in_f_2: bool,
}

pub fn class_membership(g: &Graph, t: usize, budget: &mut Budget) -> Result<ClassMembership> {
    let sparse = is_sparse(g, budget)?;
    let very_sparse = sparse
        && find_configuration(g, ConfigurationKind::Pyramid, budget)?.is_none()
        && find_configuration(g, ConfigurationKind::Prism, budget)?.is_none();
    Ok(ClassMembership {
        t,
        sparse,
        very_sparse,
        in_f: very_sparse,
        in_f_t: very_sparse && clique_number_at_most(g, t),
        in_f_2: very_sparse && clique_number_at_most(g, 2),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphClass {
    Sparse,
    VerySparse,
    F2,
}

impl GraphClass {
    pub fn name(self) -> &'static str {
        match self {
            GraphClass::Sparse => "sparse",
            GraphClass::VerySparse => "very-sparse",
            GraphClass::F2 => "f2",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "sparse" => Some(GraphClass::Sparse),
            "very-sparse" => Some(GraphClass::VerySparse),
            "f2" | "f-2" => Some(GraphClass::F2),
            _ => None,
        }
    }

    pub fn admits(self, m: &ClassMembership) -> bool {
        match self {
            GraphClass::Sparse => m.sparse,
            GraphClass::VerySparse => m.very_sparse,
            GraphClass::F2 => m.in_f_2,
        }
    }

    pub fn contains(self, g: &Graph, budget: &mut Budget) -> Result<bool> {
        Ok(self.admits(&class_membership(g, 2, budget)?))
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
