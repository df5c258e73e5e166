//! GDF serialization: `nodedef>`/`edgedef>` sections with typed columns.
//!
//! The layout is frozen and byte-deterministic: reserved columns first,
//! property columns in lexicographic key order, canonical row order,
//! fields quoted with single quotes (embedded quotes doubled) whenever
//! they contain a comma, a quote, or a newline, `\n` line endings, and a
//! trailing newline. Column types are inferred from the values so
//! serialization never needs an ontology.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Diagnostics, Error, Result};
use crate::model::{PropertyValue, SpgEdge, SpgGraph, SpgNode, UNTYPED_LABEL};

const NODE_RESERVED: [&str; 2] = ["name", "label"];
const EDGE_RESERVED: [&str; 4] = ["node1", "node2", "directed", "label"];

/// The four column types GDF supports here.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GdfType {
    Varchar,
    Int,
    Double,
    Boolean,
}

impl GdfType {
    fn parse(token: &str) -> Option<GdfType> {
        match token {
            "VARCHAR" => Some(GdfType::Varchar),
            "INT" => Some(GdfType::Int),
            "DOUBLE" => Some(GdfType::Double),
            "BOOLEAN" => Some(GdfType::Boolean),
            _ => None,
        }
    }
}

impl fmt::Display for GdfType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GdfType::Varchar => "VARCHAR",
            GdfType::Int => "INT",
            GdfType::Double => "DOUBLE",
            GdfType::Boolean => "BOOLEAN",
        };
        write!(f, "{s}")
    }
}

/// One declared column of a section header.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GdfColumn {
    pub name: String,
    pub ty: GdfType,
}

/// Serializes a graph to GDF text. Diagnostics report column renames
/// forced by unnameable property keys.
pub fn write_gdf(graph: &SpgGraph) -> (String, Diagnostics) {
    let mut diagnostics = Diagnostics::new();
    let mut out = String::new();

    let node_keys: BTreeSet<&str> = graph
        .nodes()
        .iter()
        .flat_map(|n| n.properties.keys().map(|k| k.as_str()))
        .collect();
    let node_columns = property_columns(
        &node_keys,
        &NODE_RESERVED,
        |key| graph.nodes().iter().filter_map(move |n| n.properties.get(key)),
        &mut diagnostics,
    );

    out.push_str("nodedef>name VARCHAR,label VARCHAR");
    for (column, _) in &node_columns {
        out.push_str(&format!(",{} {}", column.name, column.ty));
    }
    out.push('\n');
    for node in graph.nodes() {
        push_field(&mut out, &node.id);
        out.push(',');
        push_field(&mut out, &node.label);
        for (column, key) in &node_columns {
            out.push(',');
            if let Some(value) = node.properties.get(key) {
                push_field(&mut out, &render_value(value, column.ty));
            }
        }
        out.push('\n');
    }

    let edge_keys: BTreeSet<&str> = graph
        .edges()
        .iter()
        .flat_map(|e| e.properties.keys().map(|k| k.as_str()))
        .collect();
    let edge_columns = property_columns(
        &edge_keys,
        &EDGE_RESERVED,
        |key| graph.edges().iter().filter_map(move |e| e.properties.get(key)),
        &mut diagnostics,
    );

    out.push_str("edgedef>node1 VARCHAR,node2 VARCHAR,directed BOOLEAN,label VARCHAR");
    for (column, _) in &edge_columns {
        out.push_str(&format!(",{} {}", column.name, column.ty));
    }
    out.push('\n');
    for edge in graph.edges() {
        push_field(&mut out, &edge.source);
        out.push(',');
        push_field(&mut out, &edge.target);
        out.push_str(",true,");
        push_field(&mut out, &edge.label);
        for (column, key) in &edge_columns {
            out.push(',');
            if let Some(value) = edge.properties.get(key) {
                push_field(&mut out, &render_value(value, column.ty));
            }
        }
        out.push('\n');
    }

    (out, diagnostics)
}

/// Builds the property columns of one section: keys in lexicographic
/// order, types inferred from every value carried under the key.
fn property_columns<'a, I>(
    keys: &BTreeSet<&'a str>,
    reserved: &[&str],
    values_of: impl Fn(&'a str) -> I,
    diagnostics: &mut Diagnostics,
) -> Vec<(GdfColumn, String)>
where
    I: Iterator<Item = &'a PropertyValue>,
{
    let mut taken: BTreeSet<String> = reserved.iter().map(|r| r.to_string()).collect();
    let mut columns = Vec::new();
    for key in keys {
        let name = column_name(key, reserved, &mut taken, diagnostics);
        let ty = infer_type(values_of(key));
        columns.push((GdfColumn { name, ty }, key.to_string()));
    }
    columns
}

fn column_name(
    key: &str,
    reserved: &[&str],
    taken: &mut BTreeSet<String>,
    diagnostics: &mut Diagnostics,
) -> String {
    let mut name = if key.is_ascii() {
        let mut sanitized: String = key
            .chars()
            .map(|c| if c.is_ascii_alphanumeric() || c == '_' { c } else { '_' })
            .collect();
        if sanitized.is_empty() || sanitized.starts_with(|c: char| c.is_ascii_digit()) {
            sanitized.insert(0, 'p');
        }
        if sanitized != key {
            diagnostics.warn(
                "column-renamed",
                format!("property key '{key}' written as column '{sanitized}'"),
                Some(key.to_string()),
            );
        }
        sanitized
    } else {
        let hashed = format!("p{:08x}", fnv1a(key) as u32);
        diagnostics.warn(
            "column-renamed",
            format!("property key '{key}' is not ASCII; written as column '{hashed}'"),
            Some(key.to_string()),
        );
        hashed
    };
    // Reserved names (and anything already emitted) push the column into
    // the `_attr` family, which the reader strips back off.
    while reserved.contains(&name.as_str()) || taken.contains(&name) {
        name.push_str("_attr");
    }
    taken.insert(name.clone());
    name
}

fn fnv1a(s: &str) -> u64 {
    let mut hash = 0xcbf2_9ce4_8422_2325u64;
    for b in s.bytes() {
        hash ^= b as u64;
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    hash
}

fn infer_type<'a>(values: impl Iterator<Item = &'a PropertyValue>) -> GdfType {
    let mut integers = 0usize;
    let mut reals = 0usize;
    let mut booleans = 0usize;
    let mut texts = 0usize;
    let mut total = 0usize;
    for value in values {
        total += 1;
        match value {
            PropertyValue::Integer(_) => integers += 1,
            PropertyValue::Real(_) => reals += 1,
            PropertyValue::Boolean(_) => booleans += 1,
            PropertyValue::Text(_) => texts += 1,
        }
    }
    if total == 0 || texts > 0 {
        GdfType::Varchar
    } else if integers == total {
        GdfType::Int
    } else if integers + reals == total {
        GdfType::Double
    } else if booleans == total {
        GdfType::Boolean
    } else {
        GdfType::Varchar
    }
}

fn render_value(value: &PropertyValue, _ty: GdfType) -> String {
    value.lexical()
}

fn push_field(out: &mut String, field: &str) {
    // a present-but-empty value is written quoted so the reader can tell
    // it apart from an absent field
    if field.is_empty() {
        out.push_str("''");
        return;
    }
    let needs_quoting = field.contains([',', '\'', '"', '\n', '\r']);
    if !needs_quoting {
        out.push_str(field);
        return;
    }
    out.push('\'');
    for c in field.chars() {
        if c == '\'' {
            out.push_str("''");
        } else {
            out.push(c);
        }
    }
    out.push('\'');
}

/// Reads a GDF document back into a property graph.
///
/// Node ids beginning with `?` are preserved verbatim (query-template
/// variables). Edge ids are synthesized (`source|label|target|k`) since
/// GDF does not carry them; property values are re-inferred from their
/// column types.
pub fn read_gdf(input: &str) -> Result<SpgGraph> {
    let records = split_records(input);
    let mut iter = records.into_iter().filter(|(_, r)| !r.trim().is_empty());

    let (line, header) = iter
        .next()
        .ok_or_else(|| Error::Gdf { line: 1, message: "missing nodedef header".into() })?;
    let node_header = header
        .strip_prefix("nodedef>")
        .ok_or_else(|| Error::Gdf { line, message: "missing nodedef header".into() })?;
    let node_columns = parse_header(node_header, line)?;
    if node_columns.first().map(|c| c.name.as_str()) != Some("name") {
        return Err(Error::Gdf {
            line,
            message: "first node column must be 'name'".into(),
        });
    }

    let mut nodes: Vec<SpgNode> = Vec::new();
    let mut edges: Vec<SpgEdge> = Vec::new();
    let mut edge_columns: Option<Vec<GdfColumn>> = None;
    let mut edge_counters: BTreeMap<(String, String, String), usize> = BTreeMap::new();
    let mut node_ids: BTreeSet<String> = BTreeSet::new();

    for (line, record) in iter {
        if let Some(edge_header) = record.strip_prefix("edgedef>") {
            let columns = parse_header(edge_header, line)?;
            let names: Vec<&str> = columns.iter().take(4).map(|c| c.name.as_str()).collect();
            if names != EDGE_RESERVED {
                return Err(Error::Gdf {
                    line,
                    message: "edgedef must start with node1, node2, directed, label".into(),
                });
            }
            edge_columns = Some(columns);
            continue;
        }

        let fields = split_fields(&record, line)?;
        match &edge_columns {
            None => {
                if fields.len() > node_columns.len() {
                    return Err(Error::Gdf {
                        line,
                        message: format!(
                            "row has {} fields but the section declares {} columns",
                            fields.len(),
                            node_columns.len()
                        ),
                    });
                }
                let id = fields.first().map(|f| f.text.clone()).unwrap_or_default();
                if id.is_empty() {
                    return Err(Error::Gdf { line, message: "node row with empty name".into() });
                }
                let label = match fields.get(1) {
                    Some(l) if !l.text.is_empty() => l.text.clone(),
                    _ => UNTYPED_LABEL.to_string(),
                };
                let mut node = SpgNode::new(id.clone(), label);
                node.properties = parse_properties(
                    node_columns.get(2..).unwrap_or(&[]),
                    &fields,
                    2,
                    line,
                    &NODE_RESERVED,
                )?;
                node_ids.insert(id);
                nodes.push(node);
            }
            Some(columns) => {
                if fields.len() > columns.len() {
                    return Err(Error::Gdf {
                        line,
                        message: format!(
                            "row has {} fields but the section declares {} columns",
                            fields.len(),
                            columns.len()
                        ),
                    });
                }
                let source = fields.first().map(|f| f.text.clone()).unwrap_or_default();
                let target = fields.get(1).map(|f| f.text.clone()).unwrap_or_default();
                for endpoint in [&source, &target] {
                    if !node_ids.contains(endpoint) {
                        return Err(Error::Gdf {
                            line,
                            message: format!("edge references undeclared node id '{endpoint}'"),
                        });
                    }
                }
                if let Some(directed) = fields.get(2) {
                    if !directed.text.is_empty() && directed.text != "true" && directed.text != "false" {
                        return Err(Error::Gdf {
                            line,
                            message: format!("bad boolean '{}' in directed column", directed.text),
                        });
                    }
                }
                let label = fields.get(3).map(|f| f.text.clone()).unwrap_or_default();
                let counter_key = (source.clone(), label.clone(), target.clone());
                let k = edge_counters.entry(counter_key).or_insert(0);
                let id = format!("{source}|{label}|{target}|{k}");
                *k += 1;
                let mut edge = SpgEdge::new(id, source, target, label);
                edge.properties = parse_properties(
                    columns.get(4..).unwrap_or(&[]),
                    &fields,
                    4,
                    line,
                    &EDGE_RESERVED,
                )?;
                edges.push(edge);
            }
        }
    }

    SpgGraph::from_parts(nodes, edges)
}

fn parse_header(header: &str, line: usize) -> Result<Vec<GdfColumn>> {
    let mut columns = Vec::new();
    for part in header.split(',') {
        let part = part.trim();
        let mut words = part.split_whitespace();
        let name = words
            .next()
            .ok_or_else(|| Error::Gdf { line, message: "empty column declaration".into() })?;
        let ty_token = words.next().unwrap_or("VARCHAR");
        let ty = GdfType::parse(ty_token).ok_or_else(|| Error::Gdf {
            line,
            message: format!("unsupported column type '{ty_token}'"),
        })?;
        columns.push(GdfColumn {
            name: name.to_string(),
            ty,
        });
    }
    Ok(columns)
}

fn parse_properties(
    columns: &[GdfColumn],
    fields: &[Field],
    offset: usize,
    line: usize,
    reserved: &[&str],
) -> Result<BTreeMap<String, PropertyValue>> {
    let mut properties = BTreeMap::new();
    for (i, column) in columns.iter().enumerate() {
        let Some(field) = fields.get(offset + i) else {
            break; // short rows leave trailing properties absent
        };
        if field.text.is_empty() && !field.quoted {
            continue;
        }
        let text = field.text.as_str();
        let value = match column.ty {
            GdfType::Varchar => PropertyValue::Text(text.to_string()),
            GdfType::Int => PropertyValue::Integer(text.parse().map_err(|_| Error::Gdf {
                line,
                message: format!("bad INT value '{text}' in column '{}'", column.name),
            })?),
            GdfType::Double => PropertyValue::Real(text.parse().map_err(|_| Error::Gdf {
                line,
                message: format!("bad DOUBLE value '{text}' in column '{}'", column.name),
            })?),
            GdfType::Boolean => match text {
                "true" => PropertyValue::Boolean(true),
                "false" => PropertyValue::Boolean(false),
                _ => {
                    return Err(Error::Gdf {
                        line,
                        message: format!("bad BOOLEAN value '{text}' in column '{}'", column.name),
                    })
                }
            },
        };
        properties.insert(property_key(&column.name, reserved), value);
    }
    Ok(properties)
}

/// Inverts the writer's reserved-name escaping: a column in the owning
/// section's `<reserved>(_attr)+` family loses one `_attr`.
fn property_key(column: &str, reserved: &[&str]) -> String {
    for name in reserved {
        if let Some(rest) = column.strip_prefix(name) {
            if !rest.is_empty() && rest.len() % 5 == 0 && rest.as_bytes().chunks(5).all(|c| c == b"_attr") {
                return column[..column.len() - 5].to_string();
            }
        }
    }
    column.to_string()
}

/// Splits the document into logical records; newlines inside quoted
/// fields do not terminate a record. Yields (1-based start line, record).
fn split_records(input: &str) -> Vec<(usize, String)> {
    let mut records = Vec::new();
    let mut current = String::new();
    let mut line = 1usize;
    let mut start_line = 1usize;
    let mut in_quote = false;
    for c in input.chars() {
        match c {
            '\'' => {
                in_quote = !in_quote;
                current.push(c);
            }
            '\n' if !in_quote => {
                let record = std::mem::take(&mut current);
                records.push((start_line, record));
                line += 1;
                start_line = line;
            }
            '\n' => {
                current.push(c);
                line += 1;
            }
            '\r' if !in_quote => {}
            c => current.push(c),
        }
    }
    if !current.is_empty() {
        records.push((start_line, current));
    }
    records
}

/// One parsed field; `quoted` distinguishes `''` (present, empty) from a
/// bare empty field (absent).
struct Field {
    text: String,
    quoted: bool,
}

fn split_fields(record: &str, line: usize) -> Result<Vec<Field>> {
    let mut fields = Vec::new();
    let mut chars = record.chars().peekable();
    loop {
        let mut field = String::new();
        if chars.peek() == Some(&'\'') {
            chars.next();
            loop {
                match chars.next() {
                    None => {
                        return Err(Error::Gdf {
                            line,
                            message: "unterminated quoted field".into(),
                        })
                    }
                    Some('\'') => {
                        if chars.peek() == Some(&'\'') {
                            chars.next();
                            field.push('\'');
                        } else {
                            break;
                        }
                    }
                    Some(c) => field.push(c),
                }
            }
            match chars.next() {
                None => {
                    fields.push(Field { text: field, quoted: true });
                    break;
                }
                Some(',') => {
                    fields.push(Field { text: field, quoted: true });
                    continue;
                }
                Some(c) => {
                    return Err(Error::Gdf {
                        line,
                        message: format!("unexpected '{c}' after closing quote"),
                    })
                }
            }
        }
        loop {
            match chars.next() {
                None => {
                    fields.push(Field { text: field, quoted: false });
                    return Ok(fields);
                }
                Some(',') => {
                    fields.push(Field { text: field, quoted: false });
                    break;
                }
                Some(c) => field.push(c),
            }
        }
    }
    Ok(fields)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ntriples::parse_ntriples_str;
    use crate::project::{project, ProjectionConfig};
    use crate::store::{LoadMode, Store};

    const EX1_GOLDEN: &str = "nodedef>name VARCHAR,label VARCHAR,name_attr VARCHAR\n\
http://ex.org/alice,Person,Alice\n\
http://ex.org/bob,Person,\n\
edgedef>node1 VARCHAR,node2 VARCHAR,directed BOOLEAN,label VARCHAR,since INT\n\
http://ex.org/alice,http://ex.org/bob,true,knows,2019\n";

    fn ex1_projection() -> SpgGraph {
        let mut store = Store::new();
        store
            .load_named_graph(
                "g",
                parse_ntriples_str(crate::project::tests::EX1).unwrap(),
                LoadMode::Replace,
            )
            .unwrap();
        project(&store, "g", &ProjectionConfig::default()).unwrap().graph
    }

    #[test]
    fn ex1_matches_the_golden_layout() {
        let (text, diags) = write_gdf(&ex1_projection());
        assert_eq!(text, EX1_GOLDEN);
        // the reserved-name rename is silent layout, not a warning
        assert!(diags.is_empty());
    }

    #[test]
    fn empty_graph_writes_headers_only() {
        let (text, _) = write_gdf(&SpgGraph::new());
        assert_eq!(
            text,
            "nodedef>name VARCHAR,label VARCHAR\nedgedef>node1 VARCHAR,node2 VARCHAR,directed BOOLEAN,label VARCHAR\n"
        );
    }

    #[test]
    fn comma_value_is_quoted() {
        let mut node = SpgNode::new("http://e/a", "Thing");
        node.properties
            .insert("v".into(), PropertyValue::Text("a,b".into()));
        let graph = SpgGraph::from_parts(vec![node], vec![]).unwrap();
        let (text, _) = write_gdf(&graph);
        assert!(text.contains("http://e/a,Thing,'a,b'"), "{text}");
    }

    #[test]
    fn quote_and_newline_values_round_trip() {
        let mut node = SpgNode::new("a", "Thing");
        node.properties
            .insert("v".into(), PropertyValue::Text("it's\na 'test', ok".into()));
        let graph = SpgGraph::from_parts(vec![node], vec![]).unwrap();
        let (text, _) = write_gdf(&graph);
        let back = read_gdf(&text).unwrap();
        assert_eq!(
            back.node("a").unwrap().properties.get("v"),
            Some(&PropertyValue::Text("it's\na 'test', ok".into()))
        );
        let (again, _) = write_gdf(&back);
        assert_eq!(text, again);
    }

    #[test]
    fn ex1_round_trip_is_gdf_equivalent() {
        let graph = ex1_projection();
        let (text, _) = write_gdf(&graph);
        let back = read_gdf(&text).unwrap();
        assert!(back.gdf_equivalent(&graph));
        let (again, _) = write_gdf(&back);
        assert_eq!(text, again);
    }

    #[test]
    fn reserved_key_survives_round_trip() {
        let mut node = SpgNode::new("a", "Thing");
        node.properties
            .insert("label".into(), PropertyValue::Text("x".into()));
        node.properties
            .insert("label_attr".into(), PropertyValue::Text("y".into()));
        let graph = SpgGraph::from_parts(vec![node], vec![]).unwrap();
        let (text, _) = write_gdf(&graph);
        assert!(text.contains("label_attr VARCHAR,label_attr_attr VARCHAR"), "{text}");
        let back = read_gdf(&text).unwrap();
        let props = &back.node("a").unwrap().properties;
        assert_eq!(props.get("label"), Some(&PropertyValue::Text("x".into())));
        assert_eq!(props.get("label_attr"), Some(&PropertyValue::Text("y".into())));
    }

    #[test]
    fn reserved_names_are_section_scoped() {
        // "name" is reserved for nodes only; as an edge property key it
        // passes through untouched, even in its _attr form
        let a = SpgNode::new("a", "Thing");
        let b = SpgNode::new("b", "Thing");
        let mut e = SpgEdge::new("e1", "a", "b", "p");
        e.properties
            .insert("name".into(), PropertyValue::Text("x".into()));
        e.properties
            .insert("name_attr".into(), PropertyValue::Text("y".into()));
        let graph = SpgGraph::from_parts(vec![a, b], vec![e]).unwrap();
        let (text, _) = write_gdf(&graph);
        let back = read_gdf(&text).unwrap();
        let props = &back.edges()[0].properties;
        assert_eq!(props.get("name"), Some(&PropertyValue::Text("x".into())));
        assert_eq!(props.get("name_attr"), Some(&PropertyValue::Text("y".into())));
    }

    #[test]
    fn mixed_numeric_column_is_double() {
        let mut a = SpgNode::new("a", "Thing");
        a.properties.insert("x".into(), PropertyValue::Integer(1));
        let mut b = SpgNode::new("b", "Thing");
        b.properties.insert("x".into(), PropertyValue::Real(1.5));
        let graph = SpgGraph::from_parts(vec![a, b], vec![]).unwrap();
        let (text, _) = write_gdf(&graph);
        assert!(text.contains("x DOUBLE"), "{text}");
        let back = read_gdf(&text).unwrap();
        assert_eq!(
            back.node("a").unwrap().properties.get("x"),
            Some(&PropertyValue::Real(1.0))
        );
    }

    #[test]
    fn boolean_column_round_trips() {
        let mut a = SpgNode::new("a", "Thing");
        a.properties.insert("ok".into(), PropertyValue::Boolean(true));
        let graph = SpgGraph::from_parts(vec![a], vec![]).unwrap();
        let (text, _) = write_gdf(&graph);
        assert!(text.contains("ok BOOLEAN"), "{text}");
        let back = read_gdf(&text).unwrap();
        assert_eq!(
            back.node("a").unwrap().properties.get("ok"),
            Some(&PropertyValue::Boolean(true))
        );
    }

    #[test]
    fn short_rows_leave_trailing_properties_absent() {
        let text = "nodedef>name VARCHAR,label VARCHAR,x INT,y INT\na,Thing,1\n\
                    edgedef>node1 VARCHAR,node2 VARCHAR,directed BOOLEAN,label VARCHAR\n";
        let graph = read_gdf(text).unwrap();
        let node = graph.node("a").unwrap();
        assert_eq!(node.properties.get("x"), Some(&PropertyValue::Integer(1)));
        assert!(!node.properties.contains_key("y"));
    }

    #[test]
    fn header_tolerates_spaces_after_commas() {
        let text = "nodedef>name VARCHAR, label VARCHAR, x INT\na,Thing,1\n\
                    edgedef>node1 VARCHAR, node2 VARCHAR, directed BOOLEAN, label VARCHAR\n";
        let graph = read_gdf(text).unwrap();
        assert_eq!(graph.node_count(), 1);
    }

    #[test]
    fn missing_nodedef_header_is_an_error() {
        let err = read_gdf("name,label\na,Thing\n").unwrap_err();
        assert!(err.to_string().contains("nodedef"), "{err}");
    }

    #[test]
    fn undeclared_edge_endpoint_is_an_error() {
        let text = "nodedef>name VARCHAR,label VARCHAR\na,Thing\n\
                    edgedef>node1 VARCHAR,node2 VARCHAR,directed BOOLEAN,label VARCHAR\na,ghost,true,p\n";
        let err = read_gdf(text).unwrap_err();
        assert!(err.to_string().contains("undeclared node id"), "{err}");
        assert_eq!(err.line(), Some(4));
    }

    #[test]
    fn unsupported_type_token_is_an_error() {
        let err = read_gdf("nodedef>name VARCHAR,label TEXT\n").unwrap_err();
        assert!(err.to_string().contains("unsupported column type"), "{err}");
    }

    #[test]
    fn question_mark_ids_are_preserved() {
        let text = "nodedef>name VARCHAR,label VARCHAR\n?x,Person\n?y,Person\n\
                    edgedef>node1 VARCHAR,node2 VARCHAR,directed BOOLEAN,label VARCHAR\n?x,?y,true,knows\n";
        let graph = read_gdf(text).unwrap();
        assert!(graph.node("?x").is_some());
        assert_eq!(graph.edges()[0].source, "?x");
    }

    #[test]
    fn non_ascii_key_becomes_hashed_column() {
        let mut node = SpgNode::new("a", "Thing");
        node.properties
            .insert("grüße".into(), PropertyValue::Text("x".into()));
        let graph = SpgGraph::from_parts(vec![node], vec![]).unwrap();
        let (text, diags) = write_gdf(&graph);
        assert!(diags.iter().any(|d| d.code == "column-renamed"));
        let header = text.lines().next().unwrap();
        assert!(header.contains(",p"), "{header}");
    }

    #[test]
    fn write_is_deterministic() {
        let graph = ex1_projection();
        let (a, _) = write_gdf(&graph);
        let (b, _) = write_gdf(&graph);
        assert_eq!(a, b);
    }
}
