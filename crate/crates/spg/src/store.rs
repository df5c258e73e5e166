//! In-memory named-graph store with three triple orderings and a
//! conjunctive basic-graph-pattern matcher.
//!
//! Each loaded graph keeps its triple set sorted three ways — SPO, POS,
//! and OSP — so any bound prefix of a pattern resolves to a contiguous
//! range found by binary search. The store is single-writer during the
//! load phase and immutable afterwards.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::ntriples::{serialize_term, Scanner};
use crate::term::{RdfGraph, Term, Triple};

/// How `load_named_graph` treats an already-loaded name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LoadMode {
    /// Drop any prior content under the name.
    Replace,
    /// Union the incoming triple set with the existing one, renaming
    /// colliding blank-node labels from the incoming document.
    Merge,
}

/// One graph indexed by the three orderings.
#[derive(Debug, Clone, Default)]
pub struct IndexedGraph {
    /// Triples sorted in (subject, predicate, object) order.
    triples: Vec<Triple>,
    /// Positions into `triples`, sorted in (predicate, object, subject) order.
    pos: Vec<u32>,
    /// Positions into `triples`, sorted in (object, subject, predicate) order.
    osp: Vec<u32>,
}

impl IndexedGraph {
    fn build(graph: RdfGraph) -> IndexedGraph {
        let triples = graph.into_triples();
        let mut pos: Vec<u32> = (0..triples.len() as u32).collect();
        let mut osp = pos.clone();
        pos.sort_unstable_by(|&a, &b| {
            let (ta, tb) = (&triples[a as usize], &triples[b as usize]);
            (&ta.predicate, &ta.object, &ta.subject).cmp(&(&tb.predicate, &tb.object, &tb.subject))
        });
        osp.sort_unstable_by(|&a, &b| {
            let (ta, tb) = (&triples[a as usize], &triples[b as usize]);
            (&ta.object, &ta.subject, &ta.predicate).cmp(&(&tb.object, &tb.subject, &tb.predicate))
        });
        IndexedGraph { triples, pos, osp }
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    /// Triples in canonical (subject, predicate, object) order.
    pub fn triples(&self) -> &[Triple] {
        &self.triples
    }

    pub fn contains(&self, triple: &Triple) -> bool {
        self.triples.binary_search(triple).is_ok()
    }

    /// All triples matching the bound positions of the pattern, using the
    /// ordering with the longest bound prefix.
    pub fn scan<'a>(
        &'a self,
        subject: Option<&'a Term>,
        predicate: Option<&'a Term>,
        object: Option<&'a Term>,
    ) -> impl Iterator<Item = &'a Triple> + 'a {
        let candidates = self.candidate_range(subject, predicate, object);
        candidates.filter(move |t| {
            subject.is_none_or(|s| &t.subject == s)
                && predicate.is_none_or(|p| &t.predicate == p)
                && object.is_none_or(|o| &t.object == o)
        })
    }

    /// Upper bound on the number of triples `scan` would visit; used to
    /// order joins.
    pub fn estimate(
        &self,
        subject: Option<&Term>,
        predicate: Option<&Term>,
        object: Option<&Term>,
    ) -> usize {
        self.candidate_range(subject, predicate, object).len()
    }

    fn candidate_range<'a>(
        &'a self,
        subject: Option<&'a Term>,
        predicate: Option<&'a Term>,
        object: Option<&'a Term>,
    ) -> CandidateRange<'a> {
        match (subject, predicate, object) {
            (Some(s), Some(p), Some(o)) => {
                self.direct(|t| chain3(t.subject.cmp(s), t.predicate.cmp(p), t.object.cmp(o)))
            }
            (Some(s), Some(p), None) => {
                self.direct(|t| chain2(t.subject.cmp(s), t.predicate.cmp(p)))
            }
            (Some(s), None, Some(o)) => {
                self.indirect(&self.osp, |t| chain2(t.object.cmp(o), t.subject.cmp(s)))
            }
            (Some(s), None, None) => self.direct(|t| t.subject.cmp(s)),
            (None, Some(p), Some(o)) => {
                self.indirect(&self.pos, |t| chain2(t.predicate.cmp(p), t.object.cmp(o)))
            }
            (None, Some(p), None) => self.indirect(&self.pos, |t| t.predicate.cmp(p)),
            (None, None, Some(o)) => self.indirect(&self.osp, |t| t.object.cmp(o)),
            (None, None, None) => CandidateRange::Direct(self.triples.iter()),
        }
    }

    fn direct(&self, cmp: impl Fn(&Triple) -> Ordering) -> CandidateRange<'_> {
        let start = self.triples.partition_point(|t| cmp(t) == Ordering::Less);
        let end = self.triples.partition_point(|t| cmp(t) != Ordering::Greater);
        CandidateRange::Direct(self.triples[start..end].iter())
    }

    fn indirect<'a>(
        &'a self,
        order: &'a [u32],
        cmp: impl Fn(&Triple) -> Ordering,
    ) -> CandidateRange<'a> {
        let start = order.partition_point(|&i| cmp(&self.triples[i as usize]) == Ordering::Less);
        let end = order.partition_point(|&i| cmp(&self.triples[i as usize]) != Ordering::Greater);
        CandidateRange::Indirect(&self.triples, order[start..end].iter())
    }
}

fn chain2(first: Ordering, second: Ordering) -> Ordering {
    if first != Ordering::Equal {
        first
    } else {
        second
    }
}

fn chain3(first: Ordering, second: Ordering, third: Ordering) -> Ordering {
    chain2(first, chain2(second, third))
}

enum CandidateRange<'a> {
    Direct(std::slice::Iter<'a, Triple>),
    Indirect(&'a [Triple], std::slice::Iter<'a, u32>),
}

impl<'a> CandidateRange<'a> {
    fn len(&self) -> usize {
        match self {
            CandidateRange::Direct(it) => it.len(),
            CandidateRange::Indirect(_, it) => it.len(),
        }
    }
}

impl<'a> Iterator for CandidateRange<'a> {
    type Item = &'a Triple;

    fn next(&mut self) -> Option<&'a Triple> {
        match self {
            CandidateRange::Direct(it) => it.next(),
            CandidateRange::Indirect(triples, it) => it.next().map(|&i| &triples[i as usize]),
        }
    }
}

/// A transient collection of named, indexed graphs.
#[derive(Debug, Clone, Default)]
pub struct Store {
    graphs: BTreeMap<String, IndexedGraph>,
}

impl Store {
    pub fn new() -> Store {
        Store::default()
    }

    /// Loads `graph` under `name`, building all three orderings.
    pub fn load_named_graph(&mut self, name: &str, graph: RdfGraph, mode: LoadMode) -> Result<()> {
        if name.is_empty() {
            return Err(Error::Config("graph name must be non-empty".into()));
        }
        let merged = match (mode, self.graphs.remove(name)) {
            (LoadMode::Merge, Some(existing)) => merge_graphs(existing, graph),
            _ => graph,
        };
        self.graphs.insert(name.to_string(), IndexedGraph::build(merged));
        Ok(())
    }

    pub fn drop_graph(&mut self, name: &str) -> bool {
        self.graphs.remove(name).is_some()
    }

    pub fn graph(&self, name: &str) -> Result<&IndexedGraph> {
        self.graphs
            .get(name)
            .ok_or_else(|| Error::UnknownGraph(name.to_string()))
    }

    pub fn contains_graph(&self, name: &str) -> bool {
        self.graphs.contains_key(name)
    }

    pub fn triple_count(&self, name: &str) -> Option<usize> {
        self.graphs.get(name).map(|g| g.len())
    }

    pub fn graph_names(&self) -> impl Iterator<Item = &str> {
        self.graphs.keys().map(|s| s.as_str())
    }

    /// Evaluates a conjunctive basic graph pattern against a named graph.
    ///
    /// Join order is greedy: patterns with more bound positions first,
    /// ties broken by the indexed cardinality estimate. Rows are distinct
    /// and sorted by their serialized binding tuple.
    pub fn match_bgp(&self, name: &str, patterns: &[TriplePattern]) -> Result<BindingTable> {
        let graph = self.graph(name)?;
        if patterns.is_empty() {
            return Err(Error::Config("pattern list must be non-empty".into()));
        }

        // Variable order: first appearance across patterns, s/p/o within.
        let mut variables: Vec<String> = Vec::new();
        for pattern in patterns {
            for part in [&pattern.subject, &pattern.predicate, &pattern.object] {
                if let PatternTerm::Var(v) = part {
                    if !variables.iter().any(|known| known == v) {
                        variables.push(v.clone());
                    }
                }
            }
        }

        let mut order: Vec<usize> = (0..patterns.len()).collect();
        let key = |p: &TriplePattern| {
            let bound = p.bound_count();
            let estimate = graph.estimate(
                p.subject.bound(),
                p.predicate.bound(),
                p.object.bound(),
            );
            (std::cmp::Reverse(bound), estimate)
        };
        order.sort_by_key(|&i| key(&patterns[i]));

        let mut rows: Vec<Vec<Option<Term>>> = vec![vec![None; variables.len()]];
        let var_slot = |name: &str| variables.iter().position(|v| v == name).unwrap();
        for &idx in &order {
            let pattern = &patterns[idx];
            let mut next_rows = Vec::new();
            for row in &rows {
                let resolve = |part: &PatternTerm| -> Option<Term> {
                    match part {
                        PatternTerm::Bound(t) => Some(t.clone()),
                        PatternTerm::Var(v) => row[var_slot(v)].clone(),
                    }
                };
                let s = resolve(&pattern.subject);
                let p = resolve(&pattern.predicate);
                let o = resolve(&pattern.object);
                for triple in graph.scan(s.as_ref(), p.as_ref(), o.as_ref()) {
                    let mut extended = row.clone();
                    if unify(pattern, triple, &mut extended, &var_slot) {
                        next_rows.push(extended);
                    }
                }
            }
            rows = next_rows;
            if rows.is_empty() {
                break;
            }
        }

        let mut complete: Vec<Vec<Term>> = rows
            .into_iter()
            .map(|row| row.into_iter().map(|t| t.expect("all variables bound")).collect())
            .collect();
        let sort_key = |row: &Vec<Term>| -> Vec<String> {
            row.iter().map(serialize_term).collect()
        };
        complete.sort_by_key(sort_key);
        complete.dedup();
        Ok(BindingTable {
            variables,
            rows: complete,
        })
    }
}

/// Binds pattern variables against a concrete triple, honoring repeated
/// variables within the pattern; returns false on conflict.
fn unify(
    pattern: &TriplePattern,
    triple: &Triple,
    row: &mut [Option<Term>],
    var_slot: &impl Fn(&str) -> usize,
) -> bool {
    let parts = [
        (&pattern.subject, &triple.subject),
        (&pattern.predicate, &triple.predicate),
        (&pattern.object, &triple.object),
    ];
    for (part, value) in parts {
        match part {
            PatternTerm::Bound(t) => {
                if t != value {
                    return false;
                }
            }
            PatternTerm::Var(v) => {
                let slot = &mut row[var_slot(v)];
                match slot {
                    Some(existing) if existing != value => return false,
                    Some(_) => {}
                    None => *slot = Some(value.clone()),
                }
            }
        }
    }
    true
}

fn merge_graphs(existing: IndexedGraph, incoming: RdfGraph) -> RdfGraph {
    let incoming_labels = incoming.blank_labels();
    let existing_graph = RdfGraph::from_triples("", existing.triples.clone());
    let existing_labels = existing_graph.blank_labels();
    let collisions: BTreeSet<&str> = incoming_labels
        .intersection(&existing_labels)
        .copied()
        .collect();

    let mut triples = existing.triples;
    if collisions.is_empty() {
        triples.extend(incoming.into_triples());
        return RdfGraph::from_triples("", triples);
    }

    // Blank labels are document-scoped: a colliding label in the incoming
    // document names a different node, so it gets a fresh `b<n>` label.
    let taken: BTreeSet<String> = existing_labels
        .union(&incoming_labels)
        .map(|s| s.to_string())
        .collect();
    let mut counter = 1usize;
    let mut renames: BTreeMap<String, String> = BTreeMap::new();
    for label in collisions {
        let fresh = loop {
            let candidate = format!("b{counter}");
            counter += 1;
            if !taken.contains(&candidate) && !renames.values().any(|v| v == &candidate) {
                break candidate;
            }
        };
        renames.insert(label.to_string(), fresh);
    }
    let rename = |term: Term| -> Term {
        match term {
            Term::Blank(label) => match renames.get(&label) {
                Some(fresh) => Term::Blank(fresh.clone()),
                None => Term::Blank(label),
            },
            other => other,
        }
    };
    for t in incoming.into_triples() {
        triples.push(Triple {
            subject: rename(t.subject),
            predicate: t.predicate,
            object: rename(t.object),
        });
    }
    RdfGraph::from_triples("", triples)
}

/// One position of a triple pattern: a bound term or a named variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PatternTerm {
    Bound(Term),
    Var(String),
}

impl PatternTerm {
    pub fn var(name: impl Into<String>) -> PatternTerm {
        PatternTerm::Var(name.into())
    }

    pub fn bound(&self) -> Option<&Term> {
        match self {
            PatternTerm::Bound(t) => Some(t),
            PatternTerm::Var(_) => None,
        }
    }
}

impl From<Term> for PatternTerm {
    fn from(term: Term) -> PatternTerm {
        PatternTerm::Bound(term)
    }
}

/// A triple pattern; a pattern with zero variables is a membership test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriplePattern {
    pub subject: PatternTerm,
    pub predicate: PatternTerm,
    pub object: PatternTerm,
}

impl TriplePattern {
    pub fn new(
        subject: impl Into<PatternTerm>,
        predicate: impl Into<PatternTerm>,
        object: impl Into<PatternTerm>,
    ) -> Result<TriplePattern> {
        let pattern = TriplePattern {
            subject: subject.into(),
            predicate: predicate.into(),
            object: object.into(),
        };
        for part in [&pattern.subject, &pattern.predicate, &pattern.object] {
            if let PatternTerm::Var(name) = part {
                if !is_valid_variable(name) {
                    return Err(Error::InvalidTerm(format!(
                        "invalid variable name '?{name}'"
                    )));
                }
            }
        }
        Ok(pattern)
    }

    /// Parses the textual form `?s <iri> "literal"` (N-Triples terms plus
    /// `?name` variables; the terminal `.` is optional).
    pub fn parse(input: &str) -> Result<TriplePattern> {
        let mut scan = Scanner::new(input, 1);
        let mut parts = Vec::new();
        for _ in 0..3 {
            scan.skip_ws();
            let part = match scan.peek() {
                Some('?') => {
                    scan.bump();
                    let mut name = String::new();
                    while let Some(c) = scan.peek() {
                        if c.is_ascii_alphanumeric() || c == '_' {
                            name.push(c);
                            scan.bump();
                        } else {
                            break;
                        }
                    }
                    if !is_valid_variable(&name) {
                        return Err(scan.err("invalid variable name"));
                    }
                    PatternTerm::Var(name)
                }
                Some('<') => PatternTerm::Bound(scan.iri()?),
                Some('_') => PatternTerm::Bound(scan.blank()?),
                Some('"') => PatternTerm::Bound(scan.literal()?),
                _ => return Err(scan.err("expected pattern term ('?var', IRI, blank, or literal)")),
            };
            parts.push(part);
        }
        scan.skip_ws();
        if scan.peek() == Some('.') {
            scan.bump();
            scan.skip_ws();
        }
        if !scan.at_end() {
            return Err(scan.err("unexpected content after pattern"));
        }
        let object = parts.pop().unwrap();
        let predicate = parts.pop().unwrap();
        let subject = parts.pop().unwrap();
        TriplePattern::new(subject, predicate, object)
    }

    pub fn bound_count(&self) -> usize {
        [&self.subject, &self.predicate, &self.object]
            .iter()
            .filter(|p| p.bound().is_some())
            .count()
    }
}

fn is_valid_variable(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// The result of a basic-graph-pattern match: an ordered variable list
/// and distinct, deterministically ordered rows of term assignments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BindingTable {
    variables: Vec<String>,
    rows: Vec<Vec<Term>>,
}

impl BindingTable {
    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn rows(&self) -> &[Vec<Term>] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// The binding of `variable` in `row`, if both exist.
    pub fn get(&self, row: usize, variable: &str) -> Option<&Term> {
        let col = self.variables.iter().position(|v| v == variable)?;
        self.rows.get(row)?.get(col)
    }

    /// Tab-separated serialization: a header of `?name` columns followed
    /// by one row per binding, terms in N-Triples form.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        let header: Vec<String> = self.variables.iter().map(|v| format!("?{v}")).collect();
        out.push_str(&header.join("\t"));
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(serialize_term).collect();
            out.push_str(&cells.join("\t"));
            out.push('\n');
        }
        out
    }
}
