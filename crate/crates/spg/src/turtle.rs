//! Turtle reading, restricted to the machine-emitted profile:
//! `@prefix`/`@base` directives, prefixed names, the `a` keyword, `;`
//! predicate lists, `,` object lists, and numeric/boolean/string
//! literals with `^^`/`@` suffixes. Collections `( )` and blank-node
//! property lists `[ ]` are rejected as unsupported features.

use std::collections::HashMap;
use std::collections::VecDeque;
use std::io::Read;

use crate::error::{Error, Result};
use crate::term::{is_absolute_iri, RdfGraph, Term, Triple};
use crate::vocab::{RDF_TYPE, XSD_BOOLEAN, XSD_DECIMAL, XSD_DOUBLE, XSD_INTEGER};

/// Parses a Turtle document into the same triple set its expanded
/// N-Triples form would produce.
pub fn parse_turtle(mut reader: impl Read) -> Result<RdfGraph> {
    let mut text = String::new();
    reader
        .read_to_string(&mut text)
        .map_err(|e| match e.kind() {
            std::io::ErrorKind::InvalidData => Error::syntax(1, 1, "input is not valid UTF-8"),
            _ => Error::Io(e),
        })?;
    parse_turtle_str(&text)
}

/// Convenience wrapper over [`parse_turtle`] for in-memory text.
pub fn parse_turtle_str(input: &str) -> Result<RdfGraph> {
    Parser::new(input).run()
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    PrefixDirective,
    BaseDirective,
    IriRef(String),
    PName { prefix: String, local: String },
    BlankLabel(String),
    KeywordA,
    StringLit(String),
    DatatypeMarker,
    LangTag(String),
    Number(String),
    Boolean(bool),
    Semicolon,
    Comma,
    Dot,
}

struct Located {
    token: Token,
    line: usize,
    col: usize,
}

struct Lexer<'a> {
    rest: &'a str,
    line: usize,
    col: usize,
    pending: VecDeque<Located>,
}

impl<'a> Lexer<'a> {
    fn new(input: &'a str) -> Self {
        Lexer {
            rest: input,
            line: 1,
            col: 1,
            pending: VecDeque::new(),
        }
    }

    fn peek_char(&self) -> Option<char> {
        self.rest.chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.rest.chars().next()?;
        self.rest = &self.rest[c.len_utf8()..];
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn err(&self, message: impl Into<String>) -> Error {
        Error::syntax(self.line, self.col, message)
    }

    fn skip_trivia(&mut self) {
        loop {
            match self.peek_char() {
                Some(c) if c.is_whitespace() => {
                    self.bump();
                }
                Some('#') => {
                    while let Some(c) = self.peek_char() {
                        if c == '\n' {
                            break;
                        }
                        self.bump();
                    }
                }
                _ => break,
            }
        }
    }

    fn next_token(&mut self) -> Result<Option<Located>> {
        if let Some(tok) = self.pending.pop_front() {
            return Ok(Some(tok));
        }
        self.skip_trivia();
        let (line, col) = (self.line, self.col);
        let located = |token| {
            Some(Located { token, line, col })
        };
        let c = match self.peek_char() {
            None => return Ok(None),
            Some(c) => c,
        };
        match c {
            '@' => {
                self.bump();
                let word = self.scan_word();
                match word.as_str() {
                    "prefix" => Ok(located(Token::PrefixDirective)),
                    "base" => Ok(located(Token::BaseDirective)),
                    "" => Err(self.err("expected directive or language tag after '@'")),
                    tag => {
                        if tag.starts_with('-') || tag.ends_with('-') || tag.contains("--") {
                            return Err(Error::syntax(line, col, "malformed language tag"));
                        }
                        Ok(located(Token::LangTag(tag.to_string())))
                    }
                }
            }
            '<' => {
                let iri = self.scan_iri_ref()?;
                Ok(located(Token::IriRef(iri)))
            }
            '_' => {
                self.bump();
                if self.peek_char() != Some(':') {
                    return Err(self.err("expected ':' after '_' in blank node label"));
                }
                self.bump();
                let label = self.scan_label();
                if label.is_empty() {
                    return Err(self.err("empty blank node label"));
                }
                Ok(located(Token::BlankLabel(label)))
            }
            '"' => {
                if self.rest.starts_with("\"\"\"") {
                    return Err(Error::syntax(
                        line,
                        col,
                        "unsupported Turtle feature: long (triple-quoted) string literals",
                    ));
                }
                let lit = self.scan_string()?;
                Ok(located(Token::StringLit(lit)))
            }
            '\'' => Err(Error::syntax(
                line,
                col,
                "unsupported Turtle feature: single-quoted string literals",
            )),
            '^' => {
                self.bump();
                if self.peek_char() != Some('^') {
                    return Err(self.err("expected '^^' before datatype IRI"));
                }
                self.bump();
                Ok(located(Token::DatatypeMarker))
            }
            ';' => {
                self.bump();
                Ok(located(Token::Semicolon))
            }
            ',' => {
                self.bump();
                Ok(located(Token::Comma))
            }
            '(' | ')' => Err(Error::syntax(
                line,
                col,
                "unsupported Turtle feature: collections '( )'",
            )),
            '[' | ']' => Err(Error::syntax(
                line,
                col,
                "unsupported Turtle feature: blank-node property lists '[ ]'",
            )),
            '.' => {
                // A dot opening a fraction is a number; otherwise punctuation.
                let mut it = self.rest.chars();
                it.next();
                if it.next().is_some_and(|d| d.is_ascii_digit()) {
                    let text = self.scan_number();
                    Ok(located(Token::Number(text)))
                } else {
                    self.bump();
                    Ok(located(Token::Dot))
                }
            }
            c if c.is_ascii_digit() || c == '+' || c == '-' => {
                let text = self.scan_number();
                Ok(located(Token::Number(text)))
            }
            ':' => {
                self.bump();
                let (local, dots) = self.scan_local();
                self.queue_dots(dots);
                Ok(located(Token::PName {
                    prefix: String::new(),
                    local,
                }))
            }
            c if c.is_ascii_alphabetic() => {
                let word = self.scan_word();
                if self.peek_char() == Some(':') {
                    self.bump();
                    let (local, dots) = self.scan_local();
                    self.queue_dots(dots);
                    Ok(located(Token::PName {
                        prefix: word,
                        local,
                    }))
                } else {
                    match word.as_str() {
                        "a" => Ok(located(Token::KeywordA)),
                        "true" => Ok(located(Token::Boolean(true))),
                        "false" => Ok(located(Token::Boolean(false))),
                        w => Err(Error::syntax(line, col, format!("unexpected token '{w}'"))),
                    }
                }
            }
            c => Err(Error::syntax(line, col, format!("unexpected character '{c}'"))),
        }
    }

    fn scan_word(&mut self) -> String {
        let mut word = String::new();
        while let Some(c) = self.peek_char() {
            if c.is_ascii_alphanumeric() || c == '_' || c == '-' {
                word.push(c);
                self.bump();
            } else {
                break;
            }
        }
        word
    }

    fn scan_label(&mut self) -> String {
        let mut label = String::new();
        while let Some(c) = self.peek_char() {
            if c.is_ascii_alphanumeric() || c == '_' {
                label.push(c);
                self.bump();
            } else {
                break;
            }
        }
        label
    }

    /// Scans a PN_LOCAL-style name; dots are allowed inside but trailing
    /// dots belong to the statement, so they are returned separately.
    fn scan_local(&mut self) -> (String, usize) {
        let mut local = String::new();
        while let Some(c) = self.peek_char() {
            if c.is_ascii_alphanumeric() || matches!(c, '_' | '-' | '.') {
                local.push(c);
                self.bump();
            } else {
                break;
            }
        }
        let mut dots = 0;
        while local.ends_with('.') {
            local.pop();
            dots += 1;
        }
        (local, dots)
    }

    fn queue_dots(&mut self, dots: usize) {
        for i in 0..dots {
            self.pending.push_back(Located {
                token: Token::Dot,
                line: self.line,
                col: self.col.saturating_sub(dots - i),
            });
        }
    }

    fn scan_number(&mut self) -> String {
        let mut text = String::new();
        while let Some(c) = self.peek_char() {
            if c.is_ascii_digit() || matches!(c, '+' | '-' | '.' | 'e' | 'E') {
                text.push(c);
                self.bump();
            } else {
                break;
            }
        }
        // "42." — when the form before the final dot is already a complete
        // number, that dot terminates the statement instead.
        if text.ends_with('.') && classify_number(&text[..text.len() - 1]).is_some() {
            text.pop();
            self.pending.push_back(Located {
                token: Token::Dot,
                line: self.line,
                col: self.col.saturating_sub(1),
            });
        }
        text
    }

    fn scan_iri_ref(&mut self) -> Result<String> {
        self.bump(); // '<'
        let mut out = String::new();
        loop {
            match self.bump() {
                None => return Err(self.err("unterminated IRI (missing '>')")),
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
        Ok(out)
    }

    fn scan_string(&mut self) -> Result<String> {
        self.bump(); // '"'
        let mut out = String::new();
        loop {
            match self.bump() {
                None => return Err(self.err("unterminated string literal")),
                Some('"') => break,
                Some('\n') => return Err(self.err("unterminated string literal")),
                Some('\\') => out.push(self.string_escape()?),
                Some(c) => out.push(c),
            }
        }
        Ok(out)
    }

    fn string_escape(&mut self) -> Result<char> {
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
            None => Err(self.err("bad escape at end of input")),
        }
    }

    fn unicode_escape(&mut self) -> Result<char> {
        match self.bump() {
            Some('u') => self.hex_escape(4),
            Some('U') => self.hex_escape(8),
            Some(c) => Err(self.err(format!("bad escape '\\{c}' (IRIs allow only \\u and \\U)"))),
            None => Err(self.err("bad escape at end of input")),
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
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    prefixes: HashMap<String, String>,
    base: Option<String>,
    triples: Vec<Triple>,
    lookahead: Option<Located>,
}

impl<'a> Parser<'a> {
    fn new(input: &'a str) -> Self {
        Parser {
            lexer: Lexer::new(input),
            prefixes: HashMap::new(),
            base: None,
            triples: Vec::new(),
            lookahead: None,
        }
    }

    fn next(&mut self) -> Result<Option<Located>> {
        if let Some(tok) = self.lookahead.take() {
            return Ok(Some(tok));
        }
        self.lexer.next_token()
    }

    fn peek(&mut self) -> Result<Option<&Located>> {
        if self.lookahead.is_none() {
            self.lookahead = self.lexer.next_token()?;
        }
        Ok(self.lookahead.as_ref())
    }

    fn expect(&mut self, what: &str) -> Result<Located> {
        self.next()?.ok_or_else(|| {
            Error::syntax(self.lexer.line, self.lexer.col, format!("expected {what}, found end of input"))
        })
    }

    fn expect_dot(&mut self) -> Result<()> {
        let tok = self.expect("'.'")?;
        if tok.token != Token::Dot {
            return Err(Error::syntax(tok.line, tok.col, "expected '.'"));
        }
        Ok(())
    }

    fn run(mut self) -> Result<RdfGraph> {
        loop {
            let Some(tok) = self.next()? else { break };
            match tok.token {
                Token::PrefixDirective => self.prefix_directive()?,
                Token::BaseDirective => self.base_directive()?,
                _ => self.statement(tok)?,
            }
        }
        Ok(RdfGraph::from_triples("", self.triples))
    }

    fn prefix_directive(&mut self) -> Result<()> {
        let tok = self.expect("prefix name")?;
        let prefix = match tok.token {
            Token::PName { prefix, local } if local.is_empty() => prefix,
            _ => return Err(Error::syntax(tok.line, tok.col, "expected 'prefix:' after @prefix")),
        };
        let tok = self.expect("IRI")?;
        let iri = match tok.token {
            Token::IriRef(iri) => self.resolve_iri(iri, tok.line, tok.col)?,
            _ => return Err(Error::syntax(tok.line, tok.col, "expected '<iri>' in @prefix")),
        };
        self.expect_dot()?;
        self.prefixes.insert(prefix, iri);
        Ok(())
    }

    fn base_directive(&mut self) -> Result<()> {
        let tok = self.expect("IRI")?;
        let iri = match tok.token {
            Token::IriRef(iri) => self.resolve_iri(iri, tok.line, tok.col)?,
            _ => return Err(Error::syntax(tok.line, tok.col, "expected '<iri>' in @base")),
        };
        self.expect_dot()?;
        self.base = Some(iri);
        Ok(())
    }

    /// Resolution is concatenation against `@base`; no path normalization.
    fn resolve_iri(&self, raw: String, line: usize, col: usize) -> Result<String> {
        if is_absolute_iri(&raw) {
            return Ok(raw);
        }
        match &self.base {
            Some(base) => Ok(format!("{base}{raw}")),
            None => Err(Error::syntax(
                line,
                col,
                format!("relative IRI <{raw}> without @base"),
            )),
        }
    }

    fn resolve_pname(&self, prefix: &str, local: &str, line: usize, col: usize) -> Result<String> {
        match self.prefixes.get(prefix) {
            Some(ns) => Ok(format!("{ns}{local}")),
            None => Err(Error::syntax(
                line,
                col,
                format!("undefined prefix '{prefix}:'"),
            )),
        }
    }

    fn statement(&mut self, first: Located) -> Result<()> {
        let subject = self.resource_term(first, "subject")?;
        loop {
            let verb_tok = self.expect("predicate")?;
            let predicate = match verb_tok.token {
                Token::KeywordA => Term::iri(RDF_TYPE),
                Token::IriRef(iri) => {
                    Term::Iri(self.resolve_iri(iri, verb_tok.line, verb_tok.col)?)
                }
                Token::PName { prefix, local } => Term::Iri(self.resolve_pname(
                    &prefix,
                    &local,
                    verb_tok.line,
                    verb_tok.col,
                )?),
                _ => {
                    return Err(Error::syntax(
                        verb_tok.line,
                        verb_tok.col,
                        "predicate must be an IRI or 'a'",
                    ))
                }
            };
            loop {
                let obj_tok = self.expect("object")?;
                let object = self.object_term(obj_tok)?;
                self.triples.push(Triple {
                    subject: subject.clone(),
                    predicate: predicate.clone(),
                    object,
                });
                match self.peek()? {
                    Some(t) if t.token == Token::Comma => {
                        self.next()?;
                    }
                    _ => break,
                }
            }
            match self.peek()? {
                Some(t) if t.token == Token::Semicolon => {
                    self.next()?;
                    // tolerate a trailing ';' before '.'
                    while matches!(self.peek()?, Some(t) if t.token == Token::Semicolon) {
                        self.next()?;
                    }
                    if matches!(self.peek()?, Some(t) if t.token == Token::Dot) {
                        break;
                    }
                }
                _ => break,
            }
        }
        self.expect_dot()
    }

    fn resource_term(&mut self, tok: Located, role: &str) -> Result<Term> {
        match tok.token {
            Token::IriRef(iri) => Ok(Term::Iri(self.resolve_iri(iri, tok.line, tok.col)?)),
            Token::PName { prefix, local } => Ok(Term::Iri(
                self.resolve_pname(&prefix, &local, tok.line, tok.col)?,
            )),
            Token::BlankLabel(label) => Ok(Term::Blank(label)),
            _ => Err(Error::syntax(
                tok.line,
                tok.col,
                format!("expected {role} (IRI, prefixed name, or blank node)"),
            )),
        }
    }

    fn object_term(&mut self, tok: Located) -> Result<Term> {
        match tok.token {
            Token::IriRef(_) | Token::PName { .. } | Token::BlankLabel(_) => {
                self.resource_term(tok, "object")
            }
            Token::StringLit(lexical) => match self.peek()? {
                Some(t) if t.token == Token::DatatypeMarker => {
                    self.next()?;
                    let dt_tok = self.expect("datatype IRI")?;
                    let dt = match dt_tok.token {
                        Token::IriRef(iri) => self.resolve_iri(iri, dt_tok.line, dt_tok.col)?,
                        Token::PName { prefix, local } => {
                            self.resolve_pname(&prefix, &local, dt_tok.line, dt_tok.col)?
                        }
                        _ => {
                            return Err(Error::syntax(
                                dt_tok.line,
                                dt_tok.col,
                                "expected datatype IRI after '^^'",
                            ))
                        }
                    };
                    Ok(Term::typed_literal(lexical, dt))
                }
                Some(t) => {
                    if let Token::LangTag(tag) = t.token.clone() {
                        self.next()?;
                        Ok(Term::lang_literal(lexical, tag))
                    } else {
                        Ok(Term::literal(lexical))
                    }
                }
                None => Ok(Term::literal(lexical)),
            },
            Token::Number(text) => {
                let datatype = classify_number(&text)
                    .ok_or_else(|| Error::syntax(tok.line, tok.col, format!("malformed numeric literal '{text}'")))?;
                Ok(Term::typed_literal(text, datatype))
            }
            Token::Boolean(b) => Ok(Term::typed_literal(
                if b { "true" } else { "false" },
                XSD_BOOLEAN,
            )),
            _ => Err(Error::syntax(tok.line, tok.col, "expected object term")),
        }
    }
}

fn classify_number(text: &str) -> Option<&'static str> {
    let body = text.strip_prefix(['+', '-']).unwrap_or(text);
    if body.is_empty() {
        return None;
    }
    if body.chars().all(|c| c.is_ascii_digit()) {
        return Some(XSD_INTEGER);
    }
    if let Some((mantissa, exponent)) = body.split_once(['e', 'E']) {
        let exp = exponent.strip_prefix(['+', '-']).unwrap_or(exponent);
        if exp.is_empty() || !exp.chars().all(|c| c.is_ascii_digit()) {
            return None;
        }
        let (int_part, frac_part) = match mantissa.split_once('.') {
            Some((i, f)) => (i, f),
            None => (mantissa, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return None;
        }
        if int_part.chars().all(|c| c.is_ascii_digit())
            && frac_part.chars().all(|c| c.is_ascii_digit())
        {
            return Some(XSD_DOUBLE);
        }
        return None;
    }
    if let Some((int_part, frac_part)) = body.split_once('.') {
        if frac_part.is_empty() || !frac_part.chars().all(|c| c.is_ascii_digit()) {
            return None;
        }
        if int_part.chars().all(|c| c.is_ascii_digit()) {
            return Some(XSD_DECIMAL);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ntriples::parse_ntriples_str;

    #[test]
    fn prefix_expansion_matches_ntriples() {
        let ttl = "@prefix ex: <http://ex.org/> . ex:a ex:p ex:b .";
        let nt = "<http://ex.org/a> <http://ex.org/p> <http://ex.org/b> .";
        assert_eq!(
            parse_turtle_str(ttl).unwrap().triples(),
            parse_ntriples_str(nt).unwrap().triples()
        );
    }

    #[test]
    fn a_keyword_expands_to_rdf_type() {
        let ttl = "@prefix ex: <http://ex.org/> . ex:a a ex:Person .";
        let g = parse_turtle_str(ttl).unwrap();
        assert_eq!(g.triples()[0].predicate, Term::iri(RDF_TYPE));
    }

    #[test]
    fn predicate_list_shares_subject() {
        let ttl = "@prefix ex: <http://ex.org/> .\n\
                   @prefix xsd: <http://www.w3.org/2001/XMLSchema#> .\n\
                   ex:a ex:p ex:b ; ex:q \"1\"^^xsd:integer .";
        let g = parse_turtle_str(ttl).unwrap();
        assert_eq!(g.len(), 2);
        assert!(g.triples().iter().all(|t| t.subject == Term::iri("http://ex.org/a")));
    }

    #[test]
    fn object_list_fans_out() {
        let ttl = "@prefix ex: <http://ex.org/> . ex:a ex:p ex:b, ex:c, \"x\" .";
        let g = parse_turtle_str(ttl).unwrap();
        assert_eq!(g.len(), 3);
    }

    #[test]
    fn base_concatenation() {
        let ttl = "@base <http://ex.org/> . <a> <p> <b> .";
        let g = parse_turtle_str(ttl).unwrap();
        assert_eq!(g.triples()[0].subject, Term::iri("http://ex.org/a"));
    }

    #[test]
    fn numeric_and_boolean_literals() {
        let ttl = "@prefix ex: <http://ex.org/> .\n\
                   ex:a ex:i 42 ; ex:d 3.25 ; ex:e 1.5e3 ; ex:b true ; ex:n -7 .";
        let g = parse_turtle_str(ttl).unwrap();
        let datatypes: Vec<&str> = g
            .triples()
            .iter()
            .map(|t| t.object.as_literal().unwrap().datatype.as_str())
            .collect();
        assert!(datatypes.contains(&XSD_INTEGER));
        assert!(datatypes.contains(&XSD_DECIMAL));
        assert!(datatypes.contains(&XSD_DOUBLE));
        assert!(datatypes.contains(&XSD_BOOLEAN));
        assert_eq!(g.len(), 5);
    }

    #[test]
    fn undefined_prefix_is_located() {
        let err = parse_turtle_str("ex:a ex:p ex:b .").unwrap_err();
        match err {
            Error::Syntax { line, message, .. } => {
                assert_eq!(line, 1);
                assert!(message.contains("undefined prefix"), "{message}");
            }
            other => panic!("unexpected: {other:?}"),
        }
    }

    #[test]
    fn collections_rejected_as_unsupported() {
        let err = parse_turtle_str("@prefix ex: <http://e/> . ex:a ex:p (1 2) .").unwrap_err();
        assert!(err.to_string().contains("unsupported Turtle feature"), "{err}");
    }

    #[test]
    fn bnode_property_lists_rejected_as_unsupported() {
        let err = parse_turtle_str("@prefix ex: <http://e/> . ex:a ex:p [ ex:q 1 ] .").unwrap_err();
        assert!(err.to_string().contains("unsupported Turtle feature"), "{err}");
        assert!(err.line().is_some());
    }

    #[test]
    fn trailing_dot_after_pname_local() {
        let ttl = "@prefix ex: <http://ex.org/> . ex:a ex:p ex:b.c .";
        let g = parse_turtle_str(ttl).unwrap();
        assert_eq!(g.triples()[0].object, Term::iri("http://ex.org/b.c"));

        let ttl2 = "@prefix ex: <http://ex.org/> . ex:a ex:p ex:b.";
        let g2 = parse_turtle_str(ttl2).unwrap();
        assert_eq!(g2.triples()[0].object, Term::iri("http://ex.org/b"));
    }

    #[test]
    fn trailing_dot_after_integer() {
        let ttl = "@prefix ex: <http://ex.org/> . ex:a ex:p 42.";
        let g = parse_turtle_str(ttl).unwrap();
        let lit = g.triples()[0].object.as_literal().unwrap();
        assert_eq!(lit.lexical, "42");
        assert_eq!(lit.datatype, XSD_INTEGER);
    }

    #[test]
    fn lang_tagged_string() {
        let ttl = "@prefix ex: <http://e/> . ex:a ex:p \"chat\"@fr .";
        let g = parse_turtle_str(ttl).unwrap();
        let lit = g.triples()[0].object.as_literal().unwrap();
        assert_eq!(lit.language.as_deref(), Some("fr"));
    }

    #[test]
    fn equivalence_with_hand_expansion() {
        let ttl = "@prefix ex: <http://ex.org/> .\n\
                   @prefix xsd: <http://www.w3.org/2001/XMLSchema#> .\n\
                   ex:st1 a <http://www.w3.org/1999/02/22-rdf-syntax-ns#Statement> ;\n\
                          <http://www.w3.org/1999/02/22-rdf-syntax-ns#subject> ex:alice ;\n\
                          ex:since \"2019\"^^xsd:integer .\n\
                   ex:alice a ex:Person .";
        let nt = "<http://ex.org/st1> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <http://www.w3.org/1999/02/22-rdf-syntax-ns#Statement> .\n\
                  <http://ex.org/st1> <http://www.w3.org/1999/02/22-rdf-syntax-ns#subject> <http://ex.org/alice> .\n\
                  <http://ex.org/st1> <http://ex.org/since> \"2019\"^^<http://www.w3.org/2001/XMLSchema#integer> .\n\
                  <http://ex.org/alice> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <http://ex.org/Person> .";
        assert_eq!(
            parse_turtle_str(ttl).unwrap().triples(),
            parse_ntriples_str(nt).unwrap().triples()
        );
    }
}
