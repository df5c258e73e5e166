//! Well-known namespaces and the configurable reification vocabulary.

use crate::error::{Error, Result};

pub const RDF_NS: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
pub const RDFS_NS: &str = "http://www.w3.org/2000/01/rdf-schema#";
pub const OWL_NS: &str = "http://www.w3.org/2002/07/owl#";
pub const XSD_NS: &str = "http://www.w3.org/2001/XMLSchema#";

pub const RDF_TYPE: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
pub const RDF_STATEMENT: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#Statement";
pub const RDF_SUBJECT: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#subject";
pub const RDF_PREDICATE: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#predicate";
pub const RDF_OBJECT: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#object";
pub const RDF_PROPERTY: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#Property";
pub const RDF_LANG_STRING: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString";

pub const RDFS_CLASS: &str = "http://www.w3.org/2000/01/rdf-schema#Class";
pub const RDFS_SUBCLASS_OF: &str = "http://www.w3.org/2000/01/rdf-schema#subClassOf";
pub const RDFS_SUBPROPERTY_OF: &str = "http://www.w3.org/2000/01/rdf-schema#subPropertyOf";
pub const RDFS_DOMAIN: &str = "http://www.w3.org/2000/01/rdf-schema#domain";
pub const RDFS_RANGE: &str = "http://www.w3.org/2000/01/rdf-schema#range";

pub const OWL_CLASS: &str = "http://www.w3.org/2002/07/owl#Class";

pub const XSD_STRING: &str = "http://www.w3.org/2001/XMLSchema#string";
pub const XSD_INTEGER: &str = "http://www.w3.org/2001/XMLSchema#integer";
pub const XSD_LONG: &str = "http://www.w3.org/2001/XMLSchema#long";
pub const XSD_INT: &str = "http://www.w3.org/2001/XMLSchema#int";
pub const XSD_SHORT: &str = "http://www.w3.org/2001/XMLSchema#short";
pub const XSD_DECIMAL: &str = "http://www.w3.org/2001/XMLSchema#decimal";
pub const XSD_DOUBLE: &str = "http://www.w3.org/2001/XMLSchema#double";
pub const XSD_FLOAT: &str = "http://www.w3.org/2001/XMLSchema#float";
pub const XSD_BOOLEAN: &str = "http://www.w3.org/2001/XMLSchema#boolean";

/// The five IRIs that drive reification detection and projection.
///
/// The defaults are the standard RDF vocabulary; all five can be overridden
/// so that pipelines emitting a custom statement vocabulary still project.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vocabulary {
    pub rdf_type: String,
    pub statement_class: String,
    pub subject: String,
    pub predicate: String,
    pub object: String,
}

impl Default for Vocabulary {
    fn default() -> Self {
        Vocabulary {
            rdf_type: RDF_TYPE.to_string(),
            statement_class: RDF_STATEMENT.to_string(),
            subject: RDF_SUBJECT.to_string(),
            predicate: RDF_PREDICATE.to_string(),
            object: RDF_OBJECT.to_string(),
        }
    }
}

impl Vocabulary {
    /// Builds a vocabulary, rejecting empty or duplicated IRIs.
    pub fn new(
        rdf_type: impl Into<String>,
        statement_class: impl Into<String>,
        subject: impl Into<String>,
        predicate: impl Into<String>,
        object: impl Into<String>,
    ) -> Result<Self> {
        let vocab = Vocabulary {
            rdf_type: rdf_type.into(),
            statement_class: statement_class.into(),
            subject: subject.into(),
            predicate: predicate.into(),
            object: object.into(),
        };
        vocab.check()?;
        Ok(vocab)
    }

    fn check(&self) -> Result<()> {
        let all = [
            &self.rdf_type,
            &self.statement_class,
            &self.subject,
            &self.predicate,
            &self.object,
        ];
        for iri in all {
            if !crate::term::is_absolute_iri(iri) {
                return Err(Error::InvalidTerm(format!(
                    "vocabulary entry is not an absolute IRI: {iri}"
                )));
            }
        }
        for i in 0..all.len() {
            for j in i + 1..all.len() {
                if all[i] == all[j] {
                    return Err(Error::InvalidTerm(format!(
                        "vocabulary IRIs must be distinct: {}",
                        all[i]
                    )));
                }
            }
        }
        Ok(())
    }
}
