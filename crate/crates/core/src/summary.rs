//! Declaration counts and connector arithmetic for a meta-model.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::model::{InstanceId, MetaModel};

/// Number of declarations per kind, in the column order
/// Graph / Object / Point / Property / Relationship / Role.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct KindCounts {
    pub graph: usize,
    pub object: usize,
    pub point: usize,
    pub property: usize,
    pub relationship: usize,
    pub role: usize,
    pub connector: usize,
}

impl KindCounts {
    pub fn row(&self) -> (usize, usize, usize, usize, usize, usize) {
        (
            self.graph,
            self.object,
            self.point,
            self.property,
            self.relationship,
            self.role,
        )
    }
}

impl fmt::Display for KindCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "graph\tobject\tpoint\tproperty\trelationship\trole")?;
        writeln!(
            f,
            "{}\t{}\t{}\t{}\t{}\t{}",
            self.graph, self.object, self.point, self.property, self.relationship, self.role
        )
    }
}

pub fn count_summary(mm: &MetaModel) -> KindCounts {
    KindCounts {
        graph: mm.graph_types.len(),
        object: mm.object_types.len(),
        point: mm.point_types.len(),
        property: mm.property_types.len(),
        relationship: mm.relationship_types.len(),
        role: mm.role_types.len(),
        connector: mm.connectors.len(),
    }
}

/// Rules versus connectors. `savings` counts connector reuse: a connector
/// cited by `k` rules saves `k - 1` connectors.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct ConnectorArithmetic {
    pub rules: usize,
    pub connectors: usize,
    pub savings: usize,
}

impl ConnectorArithmetic {
    /// `connectors == 2 * rules - savings`
    pub fn balances(&self) -> bool {
        self.connectors + self.savings == 2 * self.rules
    }
}

impl fmt::Display for ConnectorArithmetic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "rules\tconnectors\tsavings")?;
        writeln!(f, "{}\t{}\t{}", self.rules, self.connectors, self.savings)
    }
}

/// Expects a valid meta-model: every connector is cited by at least one rule,
/// and no rule cites the same connector twice.
pub fn connector_arithmetic(mm: &MetaModel) -> ConnectorArithmetic {
    let mut uses: BTreeMap<&InstanceId, usize> = BTreeMap::new();
    for rule in &mm.rules {
        *uses.entry(&rule.start).or_default() += 1;
        *uses.entry(&rule.end).or_default() += 1;
    }
    ConnectorArithmetic {
        rules: mm.rules.len(),
        connectors: mm.connectors.len(),
        savings: uses.values().map(|n| n - 1).sum(),
    }
}
