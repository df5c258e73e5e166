//! The property-graph side of the projection: typed nodes and typed
//! multi-edges carrying key→value properties.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::term::LiteralValue;
use crate::vocab::{
    XSD_BOOLEAN, XSD_DECIMAL, XSD_DOUBLE, XSD_FLOAT, XSD_INT, XSD_INTEGER, XSD_LONG, XSD_SHORT,
};

/// The label every untyped node receives.
pub const UNTYPED_LABEL: &str = "Thing";

/// A node or edge property value.
#[derive(Debug, Clone)]
pub enum PropertyValue {
    Text(String),
    Integer(i64),
    Real(f64),
    Boolean(bool),
}

impl PropertyValue {
    /// Maps a literal into a property value. Only integer, floating-point,
    /// and boolean datatypes leave the text domain; an unparsable lexical
    /// form falls back to text and reports `false` in the second slot.
    pub fn from_literal(literal: &LiteralValue) -> (PropertyValue, bool) {
        let lexical = literal.lexical.as_str();
        match literal.datatype.as_str() {
            XSD_INTEGER | XSD_LONG | XSD_INT | XSD_SHORT => match lexical.parse::<i64>() {
                Ok(v) => (PropertyValue::Integer(v), true),
                Err(_) => (PropertyValue::Text(lexical.to_string()), false),
            },
            XSD_DOUBLE | XSD_FLOAT | XSD_DECIMAL => match lexical.parse::<f64>() {
                Ok(v) => (PropertyValue::Real(v), true),
                Err(_) => (PropertyValue::Text(lexical.to_string()), false),
            },
            XSD_BOOLEAN => match lexical {
                "true" | "1" => (PropertyValue::Boolean(true), true),
                "false" | "0" => (PropertyValue::Boolean(false), true),
                _ => (PropertyValue::Text(lexical.to_string()), false),
            },
            _ => (PropertyValue::Text(lexical.to_string()), true),
        }
    }

    /// The GDF / reification lexical form of the value.
    pub fn lexical(&self) -> String {
        match self {
            PropertyValue::Text(s) => s.clone(),
            PropertyValue::Integer(v) => v.to_string(),
            PropertyValue::Real(v) => v.to_string(),
            PropertyValue::Boolean(v) => v.to_string(),
        }
    }
}

impl PartialEq for PropertyValue {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (PropertyValue::Text(a), PropertyValue::Text(b)) => a == b,
            (PropertyValue::Integer(a), PropertyValue::Integer(b)) => a == b,
            (PropertyValue::Real(a), PropertyValue::Real(b)) => a.to_bits() == b.to_bits(),
            (PropertyValue::Boolean(a), PropertyValue::Boolean(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for PropertyValue {}

impl fmt::Display for PropertyValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.lexical())
    }
}

/// A projected node: id, primary label, all asserted type names, and
/// properties.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpgNode {
    pub id: String,
    pub label: String,
    pub types: BTreeSet<String>,
    pub properties: BTreeMap<String, PropertyValue>,
}

impl SpgNode {
    pub fn new(id: impl Into<String>, label: impl Into<String>) -> SpgNode {
        let label = label.into();
        let mut types = BTreeSet::new();
        if label != UNTYPED_LABEL {
            types.insert(label.clone());
        }
        SpgNode {
            id: id.into(),
            label,
            types,
            properties: BTreeMap::new(),
        }
    }
}

/// A projected edge; parallel edges with the same endpoints and label are
/// distinguished by id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpgEdge {
    pub id: String,
    pub source: String,
    pub target: String,
    pub label: String,
    pub properties: BTreeMap<String, PropertyValue>,
}

impl SpgEdge {
    pub fn new(
        id: impl Into<String>,
        source: impl Into<String>,
        target: impl Into<String>,
        label: impl Into<String>,
    ) -> SpgEdge {
        SpgEdge {
            id: id.into(),
            source: source.into(),
            target: target.into(),
            label: label.into(),
            properties: BTreeMap::new(),
        }
    }

    fn sort_key(&self) -> (&str, &str, &str, &str) {
        (&self.source, &self.target, &self.label, &self.id)
    }
}

/// A semantic property graph in canonical order: nodes sorted by id,
/// edges by (source, target, label, id).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SpgGraph {
    nodes: Vec<SpgNode>,
    edges: Vec<SpgEdge>,
}

impl SpgGraph {
    pub fn new() -> SpgGraph {
        SpgGraph::default()
    }

    /// Assembles a graph, enforcing id uniqueness and referential
    /// integrity, and sorting into canonical order.
    pub fn from_parts(mut nodes: Vec<SpgNode>, mut edges: Vec<SpgEdge>) -> Result<SpgGraph> {
        nodes.sort_by(|a, b| a.id.cmp(&b.id));
        for pair in nodes.windows(2) {
            if pair[0].id == pair[1].id {
                return Err(Error::InvalidTerm(format!(
                    "duplicate node id '{}'",
                    pair[0].id
                )));
            }
        }
        let node_ids: BTreeSet<&str> = nodes.iter().map(|n| n.id.as_str()).collect();
        let mut edge_ids: BTreeSet<&str> = BTreeSet::new();
        for edge in &edges {
            if !node_ids.contains(edge.source.as_str()) {
                return Err(Error::InvalidTerm(format!(
                    "edge '{}' references undeclared source node '{}'",
                    edge.id, edge.source
                )));
            }
            if !node_ids.contains(edge.target.as_str()) {
                return Err(Error::InvalidTerm(format!(
                    "edge '{}' references undeclared target node '{}'",
                    edge.id, edge.target
                )));
            }
            if !edge_ids.insert(edge.id.as_str()) {
                return Err(Error::InvalidTerm(format!(
                    "duplicate edge id '{}'",
                    edge.id
                )));
            }
        }
        edges.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        Ok(SpgGraph { nodes, edges })
    }

    pub fn nodes(&self) -> &[SpgNode] {
        &self.nodes
    }

    pub fn edges(&self) -> &[SpgEdge] {
        &self.edges
    }

    pub fn node(&self, id: &str) -> Option<&SpgNode> {
        self.nodes
            .binary_search_by(|n| n.id.as_str().cmp(id))
            .ok()
            .map(|i| &self.nodes[i])
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty() && self.edges.is_empty()
    }

    /// Equality modulo the fields GDF cannot carry: edge ids are ignored
    /// and node types beyond the primary label are ignored.
    pub fn gdf_equivalent(&self, other: &SpgGraph) -> bool {
        if self.nodes.len() != other.nodes.len() || self.edges.len() != other.edges.len() {
            return false;
        }
        let node_view = |n: &SpgNode| (n.id.clone(), n.label.clone(), n.properties.clone());
        let edge_view = |e: &SpgEdge| {
            (
                e.source.clone(),
                e.target.clone(),
                e.label.clone(),
                e.properties.clone(),
            )
        };
        let mut a_edges: Vec<_> = self.edges.iter().map(edge_view).collect();
        let mut b_edges: Vec<_> = other.edges.iter().map(edge_view).collect();
        a_edges.sort_by(|x, y| format!("{x:?}").cmp(&format!("{y:?}")));
        b_edges.sort_by(|x, y| format!("{x:?}").cmp(&format!("{y:?}")));
        self.nodes.iter().map(node_view).eq(other.nodes.iter().map(node_view))
            && a_edges == b_edges
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::Term;

    #[test]
    fn literal_mapping_covers_the_datatype_table() {
        let int = Term::typed_literal("2019", XSD_INTEGER);
        let (v, ok) = PropertyValue::from_literal(int.as_literal().unwrap());
        assert!(ok);
        assert_eq!(v, PropertyValue::Integer(2019));

        let real = Term::typed_literal("1.5", XSD_DOUBLE);
        let (v, _) = PropertyValue::from_literal(real.as_literal().unwrap());
        assert_eq!(v, PropertyValue::Real(1.5));

        let dec = Term::typed_literal("2.25", XSD_DECIMAL);
        let (v, _) = PropertyValue::from_literal(dec.as_literal().unwrap());
        assert_eq!(v, PropertyValue::Real(2.25));

        let b = Term::typed_literal("true", XSD_BOOLEAN);
        let (v, _) = PropertyValue::from_literal(b.as_literal().unwrap());
        assert_eq!(v, PropertyValue::Boolean(true));

        let s = Term::literal("plain");
        let (v, _) = PropertyValue::from_literal(s.as_literal().unwrap());
        assert_eq!(v, PropertyValue::Text("plain".into()));

        // unknown datatype keeps the lexical form as text
        let other = Term::typed_literal("2019-01-01", "http://www.w3.org/2001/XMLSchema#date");
        let (v, ok) = PropertyValue::from_literal(other.as_literal().unwrap());
        assert!(ok);
        assert_eq!(v, PropertyValue::Text("2019-01-01".into()));
    }

    #[test]
    fn unparsable_typed_literal_falls_back_to_text() {
        let bad = Term::typed_literal("soon", XSD_INTEGER);
        let (v, ok) = PropertyValue::from_literal(bad.as_literal().unwrap());
        assert!(!ok);
        assert_eq!(v, PropertyValue::Text("soon".into()));
    }

    #[test]
    fn canonical_order_is_enforced() {
        let nodes = vec![SpgNode::new("b", "Thing"), SpgNode::new("a", "Thing")];
        let edges = vec![
            SpgEdge::new("e2", "b", "a", "p"),
            SpgEdge::new("e1", "a", "b", "p"),
        ];
        let g = SpgGraph::from_parts(nodes, edges).unwrap();
        assert_eq!(g.nodes()[0].id, "a");
        assert_eq!(g.edges()[0].id, "e1");
    }

    #[test]
    fn dangling_edge_rejected() {
        let nodes = vec![SpgNode::new("a", "Thing")];
        let edges = vec![SpgEdge::new("e1", "a", "missing", "p")];
        assert!(SpgGraph::from_parts(nodes, edges).is_err());
    }

    #[test]
    fn duplicate_ids_rejected() {
        let nodes = vec![SpgNode::new("a", "Thing"), SpgNode::new("a", "Thing")];
        assert!(SpgGraph::from_parts(nodes, vec![]).is_err());

        let nodes = vec![SpgNode::new("a", "Thing"), SpgNode::new("b", "Thing")];
        let edges = vec![
            SpgEdge::new("e", "a", "b", "p"),
            SpgEdge::new("e", "b", "a", "q"),
        ];
        assert!(SpgGraph::from_parts(nodes, edges).is_err());
    }

    #[test]
    fn parallel_edges_with_distinct_ids_are_permitted() {
        let nodes = vec![SpgNode::new("a", "Thing"), SpgNode::new("b", "Thing")];
        let edges = vec![
            SpgEdge::new("e1", "a", "b", "p"),
            SpgEdge::new("e2", "a", "b", "p"),
        ];
        let g = SpgGraph::from_parts(nodes, edges).unwrap();
        assert_eq!(g.edge_count(), 2);
    }
}
