//! N-Triples reading and writing.
//!
//! Line-based: one statement per line, `#` comments, UTF-8 only. The
//! serializer emits a canonical form (sorted lines, minimal escapes) so
//! that `parse(serialize(g)) == g` for every graph.

use std::io::BufRead;

use crate::error::{Error, Result};
use crate::term::{is_absolute_iri, RdfGraph, Term, Triple};
use crate::vocab::XSD_STRING;

/// Parses an N-Triples document from a buffered reader.
///
/// Duplicate statements collapse to one triple. Errors carry the 1-based
/// line and column of the offending token.
pub fn parse_ntriples(mut reader: impl BufRead) -> Result<RdfGraph> {
    let mut triples = Vec::new();
    let mut line = String::new();
    let mut line_no = 0usize;
    loop {
        line.clear();
        line_no += 1;
        let read = reader
            .read_line(&mut line)
            .map_err(|e| match e.kind() {
                std::io::ErrorKind::InvalidData => {
                    Error::syntax(line_no, 1, "input is not valid UTF-8")
                }
                _ => Error::Io(e),
            })?;
        if read == 0 {
            break;
        }
        if let Some(triple) = parse_line(&line, line_no)? {
            triples.push(triple);
        }
    }
    Ok(RdfGraph::from_triples("", triples))
}

/// Convenience wrapper over [`parse_ntriples`] for in-memory text.
pub fn parse_ntriples_str(input: &str) -> Result<RdfGraph> {
    parse_ntriples(input.as_bytes())
}

fn parse_line(line: &str, line_no: usize) -> Result<Option<Triple>> {
    let mut scan = Scanner::new(line, line_no);
    scan.skip_ws();
    match scan.peek() {
        None | Some('#') => return Ok(None),
        _ => {}
    }

    let subject = match scan.peek() {
        Some('<') => scan.iri()?,
        Some('_') => scan.blank()?,
        Some('"') => return Err(scan.err("subject must be an IRI or blank node")),
        _ => return Err(scan.err("expected subject ('<iri>' or '_:label')")),
    };

    scan.skip_ws();
    let predicate = match scan.peek() {
        Some('<') => scan.iri()?,
        Some('_') | Some('"') => return Err(scan.err("predicate must be an IRI")),
        _ => return Err(scan.err("expected predicate ('<iri>')")),
    };

    scan.skip_ws();
    let object = match scan.peek() {
        Some('<') => scan.iri()?,
        Some('_') => scan.blank()?,
        Some('"') => scan.literal()?,
        _ => return Err(scan.err("expected object term")),
    };

    scan.skip_ws();
    match scan.peek() {
        Some('.') => {
            scan.bump();
        }
        _ => return Err(scan.err("missing terminal '.'")),
    }
    scan.skip_ws();
    match scan.peek() {
        None | Some('#') => {}
        _ => return Err(scan.err("unexpected content after terminal '.'")),
    }

    Ok(Some(Triple {
        subject,
        predicate,
        object,
    }))
}

/// Character scanner over a single line with 1-based column tracking.
pub(crate) struct Scanner<'a> {
    rest: &'a str,
    line_no: usize,
    col: usize,
}

impl<'a> Scanner<'a> {
    pub(crate) fn new(line: &'a str, line_no: usize) -> Self {
        let rest = line.strip_suffix('\n').unwrap_or(line);
        let rest = rest.strip_suffix('\r').unwrap_or(rest);
        Scanner {
            rest,
            line_no,
            col: 1,
        }
    }

    pub(crate) fn peek(&self) -> Option<char> {
        self.rest.chars().next()
    }

    pub(crate) fn bump(&mut self) -> Option<char> {
        let c = self.rest.chars().next()?;
        self.rest = &self.rest[c.len_utf8()..];
        self.col += 1;
        Some(c)
    }

    pub(crate) fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(' ') | Some('\t')) {
            self.bump();
        }
    }

    pub(crate) fn err(&self, message: impl Into<String>) -> Error {
        Error::syntax(self.line_no, self.col, message)
    }

    /// Scans `<...>`, decoding `\u`/`\U` escapes; requires an absolute IRI.
    pub(crate) fn iri(&mut self) -> Result<Term> {
        let start_col = self.col;
        self.bump(); // '<'
        let mut out = String::new();
        loop {
            match self.bump() {
                None => {
                    return Err(Error::syntax(
                        self.line_no,
                        self.col,
                        "unterminated IRI (missing '>')",
                    ))
                }
                Some('>') => break,
                Some('\\') => {
                    let c = self.unicode_escape()?;
                    if c.is_whitespace() || matches!(c, '<' | '>' | '"') {
                        return Err(self.err("escaped character not allowed in IRI"));
                    }
                    out.push(c);
                }
                Some(c) if c <= ' ' => {
                    return Err(self.err("whitespace or control character in IRI"))
                }
                Some(c) if matches!(c, '<' | '"' | '{' | '}' | '|' | '^' | '`') => {
                    return Err(self.err(format!("character '{c}' not allowed in IRI")))
                }
                Some(c) => out.push(c),
            }
        }
        if !is_absolute_iri(&out) {
            return Err(Error::syntax(
                self.line_no,
                start_col,
                format!("IRI is not absolute: <{out}>"),
            ));
        }
        Ok(Term::Iri(out))
    }

    /// Scans `_:label` with the profile label alphabet `[A-Za-z0-9_]+`.
    pub(crate) fn blank(&mut self) -> Result<Term> {
        self.bump(); // '_'
        match self.bump() {
            Some(':') => {}
            _ => return Err(self.err("expected ':' after '_' in blank node label")),
        }
        let mut label = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || c == '_' {
                label.push(c);
                self.bump();
            } else {
                break;
            }
        }
        if label.is_empty() {
            return Err(self.err("empty blank node label"));
        }
        Ok(Term::Blank(label))
    }

    /// Scans a quoted literal with optional `^^<datatype>` or `@lang` suffix.
    pub(crate) fn literal(&mut self) -> Result<Term> {
        self.bump(); // '"'
        let mut lexical = String::new();
        loop {
            match self.bump() {
                None => {
                    return Err(Error::syntax(
                        self.line_no,
                        self.col,
                        "unterminated string literal",
                    ))
                }
                Some('"') => break,
                Some('\\') => lexical.push(self.string_escape()?),
                Some(c) => lexical.push(c),
            }
        }
        match self.peek() {
            Some('^') => {
                self.bump();
                match self.bump() {
                    Some('^') => {}
                    _ => return Err(self.err("expected '^^' before datatype IRI")),
                }
                if self.peek() != Some('<') {
                    return Err(self.err("expected '<' to open datatype IRI"));
                }
                let datatype = self.iri()?;
                let Term::Iri(dt) = datatype else { unreachable!() };
                Ok(Term::typed_literal(lexical, dt))
            }
            Some('@') => {
                self.bump();
                let tag = self.lang_tag()?;
                Ok(Term::lang_literal(lexical, tag))
            }
            _ => Ok(Term::literal(lexical)),
        }
    }

    fn lang_tag(&mut self) -> Result<String> {
        let mut tag = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_alphabetic() || (c == '-' && !tag.is_empty()) || (c.is_ascii_digit() && tag.contains('-')) {
                tag.push(c);
                self.bump();
            } else {
                break;
            }
        }
        if tag.is_empty() || tag.starts_with('-') || tag.ends_with('-') {
            return Err(self.err("malformed language tag"));
        }
        Ok(tag)
    }

    /// Escape continuation inside a string literal (the `\` is consumed).
    pub(crate) fn string_escape(&mut self) -> Result<char> {
        match self.bump() {
            Some('t') => Ok('\t'),
            Some('b') => Ok('\u{8}'),
            Some('n') => Ok('\n'),
            Some('r') => Ok('\r'),
            Some('f') => Ok('\u{c}'),
            Some('"') => Ok('"'),
            Some('\'') => Ok('\''),
            Some('\\') => Ok('\\'),
            Some('u') => self.hex_escape(4),
            Some('U') => self.hex_escape(8),
            Some(c) => Err(self.err(format!("bad escape '\\{c}'"))),
            None => Err(self.err("bad escape at end of line")),
        }
    }

    /// Escape continuation inside an IRI (only `\u`/`\U` are legal).
    fn unicode_escape(&mut self) -> Result<char> {
        match self.bump() {
            Some('u') => self.hex_escape(4),
            Some('U') => self.hex_escape(8),
            Some(c) => Err(self.err(format!("bad escape '\\{c}' (IRIs allow only \\u and \\U)"))),
            None => Err(self.err("bad escape at end of line")),
        }
    }

    fn hex_escape(&mut self, digits: u32) -> Result<char> {
        let mut value = 0u32;
        for _ in 0..digits {
            let c = self
                .bump()
                .ok_or_else(|| self.err("bad escape: truncated hex digits"))?;
            let d = c
                .to_digit(16)
                .ok_or_else(|| self.err(format!("bad escape: '{c}' is not a hex digit")))?;
            value = value * 16 + d;
        }
        char::from_u32(value).ok_or_else(|| self.err("bad escape: not a Unicode scalar value"))
    }

    pub(crate) fn at_end(&self) -> bool {
        self.rest.is_empty()
    }
}

/// Serializes a graph in canonical N-Triples: one line per triple, lines
/// sorted by the (subject, predicate, object) serialized forms.
pub fn serialize_ntriples(graph: &RdfGraph) -> String {
    let mut lines: Vec<(String, String, String)> = graph
        .triples()
        .iter()
        .map(|t| {
            (
                serialize_term(&t.subject),
                serialize_term(&t.predicate),
                serialize_term(&t.object),
            )
        })
        .collect();
    lines.sort_unstable();
    let mut out = String::new();
    for (s, p, o) in lines {
        out.push_str(&s);
        out.push(' ');
        out.push_str(&p);
        out.push(' ');
        out.push_str(&o);
        out.push_str(" .\n");
    }
    out
}

/// Serializes a single term in N-Triples syntax.
pub fn serialize_term(term: &Term) -> String {
    match term {
        Term::Iri(iri) => {
            let mut out = String::with_capacity(iri.len() + 2);
            out.push('<');
            escape_iri_into(iri, &mut out);
            out.push('>');
            out
        }
        Term::Blank(label) => format!("_:{label}"),
        Term::Literal(lit) => {
            let mut out = String::with_capacity(lit.lexical.len() + 2);
            out.push('"');
            escape_literal_into(&lit.lexical, &mut out);
            out.push('"');
            if let Some(lang) = &lit.language {
                out.push('@');
                out.push_str(lang);
            } else if lit.datatype != XSD_STRING {
                out.push_str("^^<");
                escape_iri_into(&lit.datatype, &mut out);
                out.push('>');
            }
            out
        }
    }
}

fn escape_iri_into(iri: &str, out: &mut String) {
    for c in iri.chars() {
        if c <= ' ' || matches!(c, '<' | '>' | '"' | '{' | '}' | '|' | '^' | '`' | '\\') {
            push_unicode_escape(c, out);
        } else {
            out.push(c);
        }
    }
}

fn escape_literal_into(lexical: &str, out: &mut String) {
    for c in lexical.chars() {
        match c {
            '\\' => out.push_str("\\\\"),
            '"' => out.push_str("\\\""),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if c < ' ' => push_unicode_escape(c, out),
            c => out.push(c),
        }
    }
}

fn push_unicode_escape(c: char, out: &mut String) {
    let code = c as u32;
    if code <= 0xFFFF {
        out.push_str(&format!("\\u{code:04X}"));
    } else {
        out.push_str(&format!("\\U{code:08X}"));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vocab::XSD_INTEGER;

    #[test]
    fn minimal_line() {
        let g = parse_ntriples_str("<http://ex.org/a> <http://ex.org/p> \"x\" .").unwrap();
        assert_eq!(g.len(), 1);
        let t = &g.triples()[0];
        assert_eq!(t.subject, Term::iri("http://ex.org/a"));
        assert_eq!(t.predicate, Term::iri("http://ex.org/p"));
        assert_eq!(t.object, Term::literal("x"));
    }

    #[test]
    fn empty_input_gives_empty_graph() {
        let g = parse_ntriples_str("").unwrap();
        assert!(g.is_empty());
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = parse_ntriples_str(
            "# a comment\n\n<http://a> <http://p> <http://o> . # trailing\n   # indented\n",
        )
        .unwrap();
        assert_eq!(g.len(), 1);
    }

    #[test]
    fn duplicate_lines_collapse() {
        let line = "<http://a> <http://p> <http://o> .\n";
        let g = parse_ntriples_str(&format!("{line}{line}")).unwrap();
        assert_eq!(g.len(), 1);
    }

    #[test]
    fn escape_sequences_decode() {
        let g = parse_ntriples_str(
            "<http://a> <http://p> \"tab\\there\\nand \\\"quote\\\" \\u0041 \\U0001F600\" .",
        )
        .unwrap();
        let lit = g.triples()[0].object.as_literal().unwrap();
        assert_eq!(lit.lexical, "tab\there\nand \"quote\" A \u{1F600}");
    }

    #[test]
    fn typed_and_lang_literals() {
        let g = parse_ntriples_str(
            "<http://a> <http://p> \"2019\"^^<http://www.w3.org/2001/XMLSchema#integer> .\n\
             <http://a> <http://q> \"chat\"@fr .\n\
             <http://a> <http://r> \"tag\"@en-US .",
        )
        .unwrap();
        assert_eq!(g.len(), 3);
        let ints: Vec<_> = g
            .triples()
            .iter()
            .filter_map(|t| t.object.as_literal())
            .filter(|l| l.datatype == XSD_INTEGER)
            .collect();
        assert_eq!(ints.len(), 1);
        assert_eq!(ints[0].lexical, "2019");
    }

    #[test]
    fn blank_nodes_parse() {
        let g = parse_ntriples_str("_:b1 <http://p> _:b2 .").unwrap();
        assert_eq!(g.triples()[0].subject, Term::blank("b1"));
        assert_eq!(g.triples()[0].object, Term::blank("b2"));
    }

    fn err_at(input: &str) -> (usize, usize, String) {
        match parse_ntriples_str(input) {
            Err(Error::Syntax {
                line,
                column,
                message,
            }) => (line, column, message),
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn missing_dot_is_located() {
        let (line, col, msg) = err_at("<http://a> <http://p> <http://o>\n");
        assert_eq!(line, 1);
        assert!(col > 1);
        assert!(msg.contains("terminal '.'"), "{msg}");
    }

    #[test]
    fn error_on_second_line_reports_line_two() {
        let (line, _, _) = err_at("<http://a> <http://p> <http://o> .\n<http://a> <http://p\n");
        assert_eq!(line, 2);
    }

    #[test]
    fn bad_iri_brackets() {
        let (_, _, msg) = err_at("<http://a <http://p> <http://o> .");
        assert!(msg.contains("IRI"), "{msg}");
    }

    #[test]
    fn unterminated_literal() {
        let (_, _, msg) = err_at("<http://a> <http://p> \"open .");
        assert!(msg.contains("unterminated string"), "{msg}");
    }

    #[test]
    fn literal_predicate_rejected() {
        let (_, _, msg) = err_at("<http://a> \"p\" <http://o> .");
        assert!(msg.contains("predicate must be an IRI"), "{msg}");
    }

    #[test]
    fn bad_escape_rejected() {
        let (_, _, msg) = err_at("<http://a> <http://p> \"bad\\q\" .");
        assert!(msg.contains("bad escape"), "{msg}");
    }

    #[test]
    fn relative_iri_rejected() {
        let (_, _, msg) = err_at("<relative> <http://p> <http://o> .");
        assert!(msg.contains("not absolute"), "{msg}");
    }

    #[test]
    fn serializer_escapes_quotes() {
        let t = Triple::new(
            Term::iri("http://a"),
            Term::iri("http://p"),
            Term::literal("say \"hi\""),
        )
        .unwrap();
        let g = RdfGraph::from_triples("", vec![t]);
        let out = serialize_ntriples(&g);
        assert_eq!(out, "<http://a> <http://p> \"say \\\"hi\\\"\" .\n");
    }

    #[test]
    fn serialize_empty_graph() {
        assert_eq!(serialize_ntriples(&RdfGraph::new("")), "");
    }

    #[test]
    fn round_trip_is_identity_on_triple_sets() {
        let doc = "<http://b> <http://p> \"multi\\nline, with ,comma\" .\n\
                   <http://a> <http://p> \"2019\"^^<http://www.w3.org/2001/XMLSchema#integer> .\n\
                   _:b1 <http://q> \"x\"@en .\n\
                   <http://a> <http://p> <http://b> .";
        let g = parse_ntriples_str(doc).unwrap();
        let out = serialize_ntriples(&g);
        let g2 = parse_ntriples_str(&out).unwrap();
        assert_eq!(g.triples(), g2.triples());
        // and serialization is a fixpoint
        assert_eq!(out, serialize_ntriples(&g2));
    }

    #[test]
    fn line_order_is_irrelevant() {
        let a = "<http://a> <http://p> <http://b> .\n<http://c> <http://p> <http://d> .";
        let b = "<http://c> <http://p> <http://d> .\n<http://a> <http://p> <http://b> .";
        let ga = parse_ntriples_str(a).unwrap();
        let gb = parse_ntriples_str(b).unwrap();
        assert_eq!(ga.triples(), gb.triples());
        assert_eq!(serialize_ntriples(&ga), serialize_ntriples(&gb));
    }

    #[test]
    fn lines_sorted_by_serialized_form() {
        let doc = "<http://z> <http://p> <http://o> .\n<http://a> <http://p> <http://o> .";
        let out = serialize_ntriples(&parse_ntriples_str(doc).unwrap());
        let lines: Vec<&str> = out.lines().collect();
        assert!(lines[0].starts_with("<http://a>"));
        assert!(lines[1].starts_with("<http://z>"));
    }
}
