//! The RDF term model: IRIs, blank nodes, literals, triples, and graphs.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::vocab::{RDF_LANG_STRING, XSD_STRING};

/// A typed literal value with an optional language tag.
///
/// Plain literals carry the implicit string datatype; language-tagged
/// literals always carry the RDF language-string datatype.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LiteralValue {
    pub lexical: String,
    pub datatype: String,
    pub language: Option<String>,
}

/// An RDF node: IRI, blank node, or literal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Iri(String),
    Blank(String),
    Literal(LiteralValue),
}

impl Term {
    pub fn iri(iri: impl Into<String>) -> Term {
        Term::Iri(iri.into())
    }

    pub fn blank(label: impl Into<String>) -> Term {
        Term::Blank(label.into())
    }

    /// A plain literal; gets the string datatype.
    pub fn literal(lexical: impl Into<String>) -> Term {
        Term::Literal(LiteralValue {
            lexical: lexical.into(),
            datatype: XSD_STRING.to_string(),
            language: None,
        })
    }

    pub fn typed_literal(lexical: impl Into<String>, datatype: impl Into<String>) -> Term {
        Term::Literal(LiteralValue {
            lexical: lexical.into(),
            datatype: datatype.into(),
            language: None,
        })
    }

    pub fn lang_literal(lexical: impl Into<String>, language: impl Into<String>) -> Term {
        Term::Literal(LiteralValue {
            lexical: lexical.into(),
            datatype: RDF_LANG_STRING.to_string(),
            language: Some(language.into()),
        })
    }

    pub fn is_iri(&self) -> bool {
        matches!(self, Term::Iri(_))
    }

    pub fn is_blank(&self) -> bool {
        matches!(self, Term::Blank(_))
    }

    pub fn is_literal(&self) -> bool {
        matches!(self, Term::Literal(_))
    }

    /// IRIs and blank nodes; the terms that can become graph nodes.
    pub fn is_resource(&self) -> bool {
        !self.is_literal()
    }

    pub fn as_iri(&self) -> Option<&str> {
        match self {
            Term::Iri(iri) => Some(iri),
            _ => None,
        }
    }

    pub fn as_literal(&self) -> Option<&LiteralValue> {
        match self {
            Term::Literal(lit) => Some(lit),
            _ => None,
        }
    }

    /// The identifier a resource term contributes to a property graph:
    /// the full IRI, or the blank label. Literals have no id.
    pub fn id(&self) -> Option<&str> {
        match self {
            Term::Iri(iri) => Some(iri),
            Term::Blank(label) => Some(label),
            Term::Literal(_) => None,
        }
    }
}

/// One RDF statement. The subject is an IRI or blank node and the
/// predicate is always an IRI; `new` enforces both.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple {
    pub subject: Term,
    pub predicate: Term,
    pub object: Term,
}

impl Triple {
    pub fn new(subject: Term, predicate: Term, object: Term) -> Result<Triple> {
        if subject.is_literal() {
            return Err(Error::InvalidTerm("triple subject must not be a literal".into()));
        }
        if !predicate.is_iri() {
            return Err(Error::InvalidTerm("triple predicate must be an IRI".into()));
        }
        Ok(Triple {
            subject,
            predicate,
            object,
        })
    }
}

/// A named set of triples, kept sorted and duplicate-free.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RdfGraph {
    name: String,
    triples: Vec<Triple>,
}

impl RdfGraph {
    pub fn new(name: impl Into<String>) -> RdfGraph {
        RdfGraph {
            name: name.into(),
            triples: Vec::new(),
        }
    }

    /// Builds a graph from arbitrary triples; sorts and collapses duplicates.
    pub fn from_triples(name: impl Into<String>, mut triples: Vec<Triple>) -> RdfGraph {
        triples.sort_unstable();
        triples.dedup();
        RdfGraph {
            name: name.into(),
            triples,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    /// Inserts one triple, keeping the set sorted; returns false on duplicate.
    pub fn insert(&mut self, triple: Triple) -> bool {
        match self.triples.binary_search(&triple) {
            Ok(_) => false,
            Err(pos) => {
                self.triples.insert(pos, triple);
                true
            }
        }
    }

    pub fn contains(&self, triple: &Triple) -> bool {
        self.triples.binary_search(triple).is_ok()
    }

    /// Triples in canonical (subject, predicate, object) order.
    pub fn triples(&self) -> &[Triple] {
        &self.triples
    }

    pub fn into_triples(self) -> Vec<Triple> {
        self.triples
    }

    pub fn distinct_subject_count(&self) -> usize {
        let mut count = 0;
        let mut last: Option<&Term> = None;
        for t in &self.triples {
            if last != Some(&t.subject) {
                count += 1;
                last = Some(&t.subject);
            }
        }
        count
    }

    /// All blank labels used anywhere in the graph.
    pub fn blank_labels(&self) -> BTreeSet<&str> {
        let mut labels = BTreeSet::new();
        for t in &self.triples {
            for term in [&t.subject, &t.object] {
                if let Term::Blank(label) = term {
                    labels.insert(label.as_str());
                }
            }
        }
        labels
    }
}

/// True when the string looks like an absolute IRI (`scheme:` prefix).
pub fn is_absolute_iri(iri: &str) -> bool {
    let mut chars = iri.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    for c in chars {
        match c {
            ':' => return true,
            c if c.is_ascii_alphanumeric() || c == '+' || c == '-' || c == '.' => {}
            _ => return false,
        }
    }
    false
}

/// Shortens an IRI to its local name: the part after the last `#`,
/// else after the last `/`, else after the last `:`, else the whole
/// IRI. An empty result falls back to the full IRI.
pub fn local_name(iri: &str) -> &str {
    for sep in ['#', '/', ':'] {
        if let Some(pos) = iri.rfind(sep) {
            let tail = &iri[pos + 1..];
            if tail.is_empty() {
                return iri;
            }
            return tail;
        }
    }
    iri
}
