//! Shared helpers and the bundled parser-conformance suite.
//!
//! Each integration-test binary pulls in its own subset of this module.
#![allow(dead_code)]

use std::path::PathBuf;

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

pub fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("read {}: {e}", path.display()))
}

pub struct NtPositive {
    pub name: &'static str,
    pub input: &'static str,
    pub triples: usize,
}

pub struct NtNegative {
    pub name: &'static str,
    pub input: &'static str,
    /// 1-based line the reported error must point at.
    pub line: usize,
}

pub struct TurtlePositive {
    pub name: &'static str,
    pub turtle: &'static str,
    /// Hand-expanded N-Triples equivalent.
    pub ntriples: &'static str,
}

pub struct TurtleNegative {
    pub name: &'static str,
    pub input: &'static str,
    pub line: usize,
}

pub const NT_POSITIVE: &[NtPositive] = &[
    NtPositive { name: "minimal_iri_triple", input: "<http://a> <http://p> <http://o> .", triples: 1 },
    NtPositive { name: "plain_literal", input: "<http://a> <http://p> \"x\" .", triples: 1 },
    NtPositive { name: "typed_literal", input: "<http://a> <http://p> \"2019\"^^<http://www.w3.org/2001/XMLSchema#integer> .", triples: 1 },
    NtPositive { name: "lang_literal", input: "<http://a> <http://p> \"chat\"@fr .", triples: 1 },
    NtPositive { name: "lang_literal_with_subtag", input: "<http://a> <http://p> \"color\"@en-US .", triples: 1 },
    NtPositive { name: "blank_subject", input: "_:b1 <http://p> <http://o> .", triples: 1 },
    NtPositive { name: "blank_object", input: "<http://a> <http://p> _:b2 .", triples: 1 },
    NtPositive { name: "blank_both_ends", input: "_:s <http://p> _:o .", triples: 1 },
    NtPositive { name: "full_line_comment", input: "# nothing here\n<http://a> <http://p> <http://o> .", triples: 1 },
    NtPositive { name: "trailing_comment", input: "<http://a> <http://p> <http://o> . # done", triples: 1 },
    NtPositive { name: "empty_input", input: "", triples: 0 },
    NtPositive { name: "whitespace_only", input: "   \n\t\n", triples: 0 },
    NtPositive { name: "duplicate_lines_collapse", input: "<http://a> <http://p> <http://o> .\n<http://a> <http://p> <http://o> .", triples: 1 },
    NtPositive { name: "two_distinct_triples", input: "<http://a> <http://p> <http://o> .\n<http://a> <http://p> <http://o2> .", triples: 2 },
    NtPositive { name: "escaped_tab", input: "<http://a> <http://p> \"a\\tb\" .", triples: 1 },
    NtPositive { name: "escaped_newline", input: "<http://a> <http://p> \"a\\nb\" .", triples: 1 },
    NtPositive { name: "escaped_quote", input: "<http://a> <http://p> \"say \\\"hi\\\"\" .", triples: 1 },
    NtPositive { name: "escaped_backslash", input: "<http://a> <http://p> \"c:\\\\temp\" .", triples: 1 },
    NtPositive { name: "u_escape", input: "<http://a> <http://p> \"\\u0041\" .", triples: 1 },
    NtPositive { name: "big_u_escape", input: "<http://a> <http://p> \"\\U0001F600\" .", triples: 1 },
    NtPositive { name: "raw_unicode_literal", input: "<http://a> <http://p> \"héllo wörld\" .", triples: 1 },
    NtPositive { name: "explicit_string_datatype", input: "<http://a> <http://p> \"x\"^^<http://www.w3.org/2001/XMLSchema#string> .", triples: 1 },
    NtPositive { name: "empty_literal", input: "<http://a> <http://p> \"\" .", triples: 1 },
    NtPositive { name: "single_quote_in_literal", input: "<http://a> <http://p> \"it's fine\" .", triples: 1 },
    NtPositive { name: "escaped_single_quote", input: "<http://a> <http://p> \"it\\'s fine\" .", triples: 1 },
    NtPositive { name: "padded_with_whitespace", input: "   <http://a>   <http://p>   <http://o>   .   ", triples: 1 },
    NtPositive { name: "tab_separated", input: "<http://a>\t<http://p>\t<http://o>\t.", triples: 1 },
    NtPositive { name: "minimal_whitespace", input: "<http://a><http://p><http://o>.", triples: 1 },
    NtPositive { name: "urn_iri", input: "<urn:isbn:0451450523> <http://p> <http://o> .", triples: 1 },
    NtPositive { name: "var_scheme_iri", input: "<var:x> <http://p> <var:y> .", triples: 1 },
    NtPositive { name: "crlf_line_endings", input: "<http://a> <http://p> <http://o> .\r\n<http://a> <http://p> <http://o2> .\r\n", triples: 2 },
    NtPositive { name: "no_trailing_newline", input: "<http://a> <http://p> <http://o> .", triples: 1 },
    NtPositive { name: "numeric_looking_plain_literal", input: "<http://a> <http://p> \"123\" .", triples: 1 },
    NtPositive { name: "hash_inside_literal", input: "<http://a> <http://p> \"not # a comment\" .", triples: 1 },
    NtPositive { name: "hash_inside_iri_fragment", input: "<http://a#frag> <http://p> <http://o> .", triples: 1 },
    NtPositive { name: "escaped_iri_character", input: "<http://a/\\u007Bx\\u007D> <http://p> <http://o> .", triples: 1 },
];

pub const NT_NEGATIVE: &[NtNegative] = &[
    NtNegative { name: "missing_terminal_dot", input: "<http://a> <http://p> <http://o>", line: 1 },
    NtNegative { name: "missing_dot_on_line_two", input: "<http://a> <http://p> <http://o> .\n<http://a> <http://p> <http://o2>", line: 2 },
    NtNegative { name: "unterminated_iri", input: "<http://a <http://p> <http://o> .", line: 1 },
    NtNegative { name: "unterminated_literal", input: "<http://a> <http://p> \"open .", line: 1 },
    NtNegative { name: "literal_subject", input: "\"s\" <http://p> <http://o> .", line: 1 },
    NtNegative { name: "literal_predicate", input: "<http://a> \"p\" <http://o> .", line: 1 },
    NtNegative { name: "blank_predicate", input: "<http://a> _:p <http://o> .", line: 1 },
    NtNegative { name: "bad_literal_escape", input: "<http://a> <http://p> \"bad\\q\" .", line: 1 },
    NtNegative { name: "bad_iri_escape", input: "<http://a\\n> <http://p> <http://o> .", line: 1 },
    NtNegative { name: "bad_hex_in_escape", input: "<http://a> <http://p> \"\\u00ZZ\" .", line: 1 },
    NtNegative { name: "truncated_u_escape", input: "<http://a> <http://p> \"\\u00\" .", line: 1 },
    NtNegative { name: "surrogate_escape", input: "<http://a> <http://p> \"\\uD800\" .", line: 1 },
    NtNegative { name: "relative_iri", input: "<relative/path> <http://p> <http://o> .", line: 1 },
    NtNegative { name: "content_after_dot", input: "<http://a> <http://p> <http://o> . <http://x>", line: 1 },
    NtNegative { name: "subject_only", input: "<http://a> .", line: 1 },
    NtNegative { name: "empty_blank_label", input: "_: <http://p> <http://o> .", line: 1 },
    NtNegative { name: "bare_word_subject", input: "abc <http://p> <http://o> .", line: 1 },
    NtNegative { name: "space_inside_iri", input: "<http://a b> <http://p> <http://o> .", line: 1 },
    NtNegative { name: "error_after_comment_lines", input: "# one\n# two\n<http://a> <http://p> .", line: 3 },
];

pub const TURTLE_POSITIVE: &[TurtlePositive] = &[
    TurtlePositive {
        name: "prefix_expansion",
        turtle: "@prefix ex: <http://ex.org/> . ex:a ex:p ex:b .",
        ntriples: "<http://ex.org/a> <http://ex.org/p> <http://ex.org/b> .",
    },
    TurtlePositive {
        name: "a_keyword",
        turtle: "@prefix ex: <http://ex.org/> . ex:a a ex:Person .",
        ntriples: "<http://ex.org/a> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <http://ex.org/Person> .",
    },
    TurtlePositive {
        name: "predicate_list",
        turtle: "@prefix ex: <http://ex.org/> . @prefix xsd: <http://www.w3.org/2001/XMLSchema#> . ex:a ex:p ex:b ; ex:q \"1\"^^xsd:integer .",
        ntriples: "<http://ex.org/a> <http://ex.org/p> <http://ex.org/b> .\n<http://ex.org/a> <http://ex.org/q> \"1\"^^<http://www.w3.org/2001/XMLSchema#integer> .",
    },
    TurtlePositive {
        name: "object_list",
        turtle: "@prefix ex: <http://ex.org/> . ex:a ex:p ex:b, ex:c .",
        ntriples: "<http://ex.org/a> <http://ex.org/p> <http://ex.org/b> .\n<http://ex.org/a> <http://ex.org/p> <http://ex.org/c> .",
    },
    TurtlePositive {
        name: "base_resolution",
        turtle: "@base <http://ex.org/> . <a> <p> <b> .",
        ntriples: "<http://ex.org/a> <http://ex.org/p> <http://ex.org/b> .",
    },
    TurtlePositive {
        name: "integer_literal",
        turtle: "@prefix ex: <http://ex.org/> . ex:a ex:n 42 .",
        ntriples: "<http://ex.org/a> <http://ex.org/n> \"42\"^^<http://www.w3.org/2001/XMLSchema#integer> .",
    },
    TurtlePositive {
        name: "decimal_literal",
        turtle: "@prefix ex: <http://ex.org/> . ex:a ex:n 3.25 .",
        ntriples: "<http://ex.org/a> <http://ex.org/n> \"3.25\"^^<http://www.w3.org/2001/XMLSchema#decimal> .",
    },
    TurtlePositive {
        name: "double_literal",
        turtle: "@prefix ex: <http://ex.org/> . ex:a ex:n 1.5e3 .",
        ntriples: "<http://ex.org/a> <http://ex.org/n> \"1.5e3\"^^<http://www.w3.org/2001/XMLSchema#double> .",
    },
    TurtlePositive {
        name: "boolean_literal",
        turtle: "@prefix ex: <http://ex.org/> . ex:a ex:ok true .",
        ntriples: "<http://ex.org/a> <http://ex.org/ok> \"true\"^^<http://www.w3.org/2001/XMLSchema#boolean> .",
    },
    TurtlePositive {
        name: "negative_integer",
        turtle: "@prefix ex: <http://ex.org/> . ex:a ex:n -7 .",
        ntriples: "<http://ex.org/a> <http://ex.org/n> \"-7\"^^<http://www.w3.org/2001/XMLSchema#integer> .",
    },
    TurtlePositive {
        name: "lang_string",
        turtle: "@prefix ex: <http://ex.org/> . ex:a ex:p \"chat\"@fr .",
        ntriples: "<http://ex.org/a> <http://ex.org/p> \"chat\"@fr .",
    },
    TurtlePositive {
        name: "blank_nodes",
        turtle: "@prefix ex: <http://ex.org/> . _:x ex:p _:y .",
        ntriples: "_:x <http://ex.org/p> _:y .",
    },
    TurtlePositive {
        name: "empty_prefix",
        turtle: "@prefix : <http://ex.org/> . :a :p :b .",
        ntriples: "<http://ex.org/a> <http://ex.org/p> <http://ex.org/b> .",
    },
    TurtlePositive {
        name: "trailing_semicolon",
        turtle: "@prefix ex: <http://ex.org/> . ex:a ex:p ex:b ; .",
        ntriples: "<http://ex.org/a> <http://ex.org/p> <http://ex.org/b> .",
    },
    TurtlePositive {
        name: "comments_between_statements",
        turtle: "@prefix ex: <http://ex.org/> . # ns\nex:a ex:p ex:b . # done",
        ntriples: "<http://ex.org/a> <http://ex.org/p> <http://ex.org/b> .",
    },
    TurtlePositive {
        name: "prefixed_datatype",
        turtle: "@prefix ex: <http://ex.org/> . @prefix xsd: <http://www.w3.org/2001/XMLSchema#> . ex:a ex:p \"2019\"^^xsd:integer .",
        ntriples: "<http://ex.org/a> <http://ex.org/p> \"2019\"^^<http://www.w3.org/2001/XMLSchema#integer> .",
    },
];

pub const TURTLE_NEGATIVE: &[TurtleNegative] = &[
    TurtleNegative { name: "undefined_prefix", input: "ex:a ex:p ex:b .", line: 1 },
    TurtleNegative { name: "undefined_prefix_line_two", input: "@prefix ex: <http://e/> .\nex:a other:p ex:b .", line: 2 },
    TurtleNegative { name: "collection_unsupported", input: "@prefix ex: <http://e/> . ex:a ex:p (1 2) .", line: 1 },
    TurtleNegative { name: "bnode_list_unsupported", input: "@prefix ex: <http://e/> . ex:a ex:p [ ex:q 1 ] .", line: 1 },
    TurtleNegative { name: "single_quote_unsupported", input: "@prefix ex: <http://e/> . ex:a ex:p 'x' .", line: 1 },
    TurtleNegative { name: "long_string_unsupported", input: "@prefix ex: <http://e/> . ex:a ex:p \"\"\"x\"\"\" .", line: 1 },
    TurtleNegative { name: "missing_final_dot", input: "@prefix ex: <http://e/> . ex:a ex:p ex:b", line: 1 },
];
