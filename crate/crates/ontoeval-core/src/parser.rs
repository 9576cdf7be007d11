//! Turtle-subset parser and serializer.
//!
//! The recognized vocabulary is deliberately small: `@prefix` directives,
//! entity declarations via `a owl:Class | owl:ObjectProperty |
//! owl:DatatypeProperty | owl:NamedIndividual`, the rdfs/owl predicates the
//! semantic checks consume, property assertions between individuals, and the
//! cardinality restriction pattern
//! `C rdfs:subClassOf [ a owl:Restriction ; owl:onProperty p ;
//! owl:minCardinality n ]`. Full Turtle (collections, general blank nodes,
//! typed literals) is rejected with a diagnostic. Declarations do not have to
//! precede use: resolution is two-pass.

use alloc::borrow::ToOwned;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::model::{
    AssertionValue, Axiom, Declaration, Iri, Literal, Ontology, OntologyBuilder,
};

pub const RDF_NS: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
pub const RDFS_NS: &str = "http://www.w3.org/2000/01/rdf-schema#";
pub const OWL_NS: &str = "http://www.w3.org/2002/07/owl#";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Severity {
    Warning,
    Error,
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Severity::Warning => "warning",
            Severity::Error => "error",
        })
    }
}

/// Diagnostic with a 1-based position inside the offending token.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseDiagnostic {
    pub severity: Severity,
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseDiagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}: {}", self.line, self.column, self.severity, self.message)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Pos {
    line: usize,
    column: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    AtPrefix,
    IriRef(String),
    PName { prefix: String, local: String },
    A,
    StringLit { value: String, lang: Option<String> },
    Integer(u32),
    Dot,
    Semicolon,
    Comma,
    LBracket,
    RBracket,
    Eof,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::AtPrefix => "'@prefix'".to_owned(),
            Token::IriRef(iri) => format!("<{iri}>"),
            Token::PName { prefix, local } => format!("'{prefix}:{local}'"),
            Token::A => "'a'".to_owned(),
            Token::StringLit { .. } => "string literal".to_owned(),
            Token::Integer(n) => format!("integer {n}"),
            Token::Dot => "'.'".to_owned(),
            Token::Semicolon => "';'".to_owned(),
            Token::Comma => "','".to_owned(),
            Token::LBracket => "'['".to_owned(),
            Token::RBracket => "']'".to_owned(),
            Token::Eof => "end of input".to_owned(),
        }
    }
}

struct Lexer<'a> {
    chars: core::iter::Peekable<core::str::Chars<'a>>,
    line: usize,
    column: usize,
}

impl<'a> Lexer<'a> {
    fn new(input: &'a str) -> Self {
        Lexer { chars: input.chars().peekable(), line: 1, column: 1 }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn skip_trivia(&mut self) {
        loop {
            match self.chars.peek() {
                Some(c) if c.is_whitespace() => {
                    self.bump();
                }
                Some('#') => {
                    while let Some(&c) = self.chars.peek() {
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

    fn pos(&self) -> Pos {
        Pos { line: self.line, column: self.column }
    }

    fn is_name_start(c: char) -> bool {
        c.is_alphabetic() || c == '_'
    }

    fn is_name_char(c: char) -> bool {
        c.is_alphanumeric() || c == '_' || c == '-'
    }

    /// Next token with its starting position. Errors carry a message and the
    /// position of the offending character.
    fn next_token(&mut self) -> Result<(Token, Pos), (String, Pos)> {
        self.skip_trivia();
        let pos = self.pos();
        let Some(&c) = self.chars.peek() else {
            return Ok((Token::Eof, pos));
        };
        match c {
            '.' => {
                self.bump();
                Ok((Token::Dot, pos))
            }
            ';' => {
                self.bump();
                Ok((Token::Semicolon, pos))
            }
            ',' => {
                self.bump();
                Ok((Token::Comma, pos))
            }
            '[' => {
                self.bump();
                Ok((Token::LBracket, pos))
            }
            ']' => {
                self.bump();
                Ok((Token::RBracket, pos))
            }
            '<' => {
                self.bump();
                let mut iri = String::new();
                loop {
                    match self.bump() {
                        Some('>') => break,
                        Some(c) if c.is_whitespace() => {
                            return Err(("whitespace inside IRI reference".to_owned(), pos));
                        }
                        Some(c) => iri.push(c),
                        None => return Err(("unterminated IRI reference".to_owned(), pos)),
                    }
                }
                if iri.is_empty() {
                    return Err(("empty IRI reference".to_owned(), pos));
                }
                Ok((Token::IriRef(iri), pos))
            }
            '"' => {
                self.bump();
                let mut value = String::new();
                loop {
                    match self.bump() {
                        Some('"') => break,
                        Some('\\') => match self.bump() {
                            Some('"') => value.push('"'),
                            Some('\\') => value.push('\\'),
                            Some('n') => value.push('\n'),
                            Some('t') => value.push('\t'),
                            Some('r') => value.push('\r'),
                            Some(other) => {
                                return Err((format!("unknown escape '\\{other}'"), pos));
                            }
                            None => return Err(("unterminated string literal".to_owned(), pos)),
                        },
                        Some('\n') | None => {
                            return Err(("unterminated string literal".to_owned(), pos));
                        }
                        Some(c) => value.push(c),
                    }
                }
                // optional language tag
                let lang = if self.chars.peek() == Some(&'@') {
                    self.bump();
                    let mut tag = String::new();
                    while let Some(&c) = self.chars.peek() {
                        if c.is_ascii_alphanumeric() || c == '-' {
                            tag.push(c);
                            self.bump();
                        } else {
                            break;
                        }
                    }
                    if tag.is_empty() {
                        return Err(("empty language tag".to_owned(), pos));
                    }
                    Some(tag)
                } else if self.chars.peek() == Some(&'^') {
                    return Err((
                        "typed literals ('^^') are not part of the supported subset".to_owned(),
                        self.pos(),
                    ));
                } else {
                    None
                };
                Ok((Token::StringLit { value, lang }, pos))
            }
            '@' => {
                self.bump();
                let mut word = String::new();
                while let Some(&c) = self.chars.peek() {
                    if c.is_ascii_alphabetic() {
                        word.push(c);
                        self.bump();
                    } else {
                        break;
                    }
                }
                if word == "prefix" {
                    Ok((Token::AtPrefix, pos))
                } else {
                    Err((format!("unknown directive '@{word}'"), pos))
                }
            }
            c if c.is_ascii_digit() => {
                let mut digits = String::new();
                while let Some(&c) = self.chars.peek() {
                    if c.is_ascii_digit() {
                        digits.push(c);
                        self.bump();
                    } else {
                        break;
                    }
                }
                digits
                    .parse::<u32>()
                    .map(|n| (Token::Integer(n), pos))
                    .map_err(|_| (format!("integer '{digits}' out of range"), pos))
            }
            c if Self::is_name_start(c) || c == ':' => {
                let mut first = String::new();
                while let Some(&c) = self.chars.peek() {
                    if Self::is_name_char(c) {
                        first.push(c);
                        self.bump();
                    } else {
                        break;
                    }
                }
                if self.chars.peek() == Some(&':') {
                    self.bump();
                    let mut local = String::new();
                    while let Some(&c) = self.chars.peek() {
                        if Self::is_name_char(c) {
                            local.push(c);
                            self.bump();
                        } else {
                            break;
                        }
                    }
                    Ok((Token::PName { prefix: first, local }, pos))
                } else if first == "a" {
                    Ok((Token::A, pos))
                } else {
                    Err((format!("expected ':' after prefix '{first}'"), pos))
                }
            }
            other => {
                self.bump();
                Err((format!("unexpected character '{other}'"), pos))
            }
        }
    }
}

/// Intermediate statement representation between the two passes.
#[derive(Debug, Clone)]
enum ObjectTerm {
    Iri(Iri),
    Literal(Literal),
    Integer(u32),
    Restriction { property: Iri, max: bool, count: u32 },
}

#[derive(Debug, Clone)]
struct Triple {
    subject: Iri,
    predicate: Iri,
    object: ObjectTerm,
    pos: Pos,
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    lookahead: Option<(Token, Pos)>,
    prefixes: BTreeMap<String, String>,
    diagnostics: Vec<ParseDiagnostic>,
    triples: Vec<Triple>,
}

impl<'a> Parser<'a> {
    fn new(input: &'a str) -> Self {
        Parser {
            lexer: Lexer::new(input),
            lookahead: None,
            prefixes: BTreeMap::new(),
            diagnostics: Vec::new(),
            triples: Vec::new(),
        }
    }

    fn error(&mut self, pos: Pos, message: impl Into<String>) {
        self.diagnostics.push(ParseDiagnostic {
            severity: Severity::Error,
            line: pos.line,
            column: pos.column,
            message: message.into(),
        });
    }

    fn next(&mut self) -> (Token, Pos) {
        if let Some(tok) = self.lookahead.take() {
            return tok;
        }
        loop {
            match self.lexer.next_token() {
                Ok(tok) => return tok,
                Err((message, pos)) => {
                    self.error(pos, message);
                    // lexical errors skip the offending character and retry
                }
            }
        }
    }

    fn peek(&mut self) -> &(Token, Pos) {
        if self.lookahead.is_none() {
            let tok = self.next();
            self.lookahead = Some(tok);
        }
        self.lookahead.as_ref().expect("lookahead filled")
    }

    /// Skips tokens until after the next '.', for statement-level recovery.
    fn synchronize(&mut self) {
        loop {
            let (token, _) = self.next();
            match token {
                Token::Dot | Token::Eof => break,
                _ => {}
            }
        }
    }

    fn resolve_pname(&mut self, prefix: &str, local: &str, pos: Pos) -> Option<Iri> {
        match self.prefixes.get(prefix) {
            Some(ns) => Some(Iri::new(format!("{ns}{local}"))),
            None => {
                self.error(pos, format!("undeclared prefix '{prefix}:'"));
                None
            }
        }
    }

    fn parse_document(&mut self) {
        loop {
            match &self.peek().0 {
                Token::Eof => break,
                Token::AtPrefix => self.parse_prefix_directive(),
                _ => self.parse_statement(),
            }
        }
    }

    fn parse_prefix_directive(&mut self) {
        self.next(); // @prefix
        let (token, pos) = self.next();
        let prefix = match token {
            Token::PName { prefix, local } if local.is_empty() => prefix,
            other => {
                self.error(pos, format!("expected prefix name, found {}", other.describe()));
                self.synchronize();
                return;
            }
        };
        let (token, pos) = self.next();
        let namespace = match token {
            Token::IriRef(iri) => iri,
            other => {
                self.error(pos, format!("expected namespace IRI, found {}", other.describe()));
                self.synchronize();
                return;
            }
        };
        let (token, pos) = self.next();
        if token != Token::Dot {
            self.error(pos, format!("expected '.' after @prefix, found {}", token.describe()));
            self.synchronize();
            return;
        }
        self.prefixes.insert(prefix, namespace);
    }

    fn parse_iri(&mut self) -> Option<(Iri, Pos)> {
        let (token, pos) = self.next();
        match token {
            Token::IriRef(iri) => Some((Iri::new(iri), pos)),
            Token::PName { prefix, local } => {
                self.resolve_pname(&prefix, &local, pos).map(|iri| (iri, pos))
            }
            other => {
                self.error(pos, format!("expected IRI, found {}", other.describe()));
                None
            }
        }
    }

    fn parse_statement(&mut self) {
        let Some((subject, _)) = self.parse_iri() else {
            self.synchronize();
            return;
        };
        loop {
            // predicate
            let (token, pred_pos) = self.next();
            let predicate = match token {
                Token::A => Iri::new(format!("{RDF_NS}type")),
                Token::IriRef(iri) => Iri::new(iri),
                Token::PName { prefix, local } => {
                    match self.resolve_pname(&prefix, &local, pred_pos) {
                        Some(iri) => iri,
                        None => {
                            self.synchronize();
                            return;
                        }
                    }
                }
                other => {
                    self.error(
                        pred_pos,
                        format!("expected predicate, found {}", other.describe()),
                    );
                    self.synchronize();
                    return;
                }
            };
            // object list
            loop {
                let Some(object) = self.parse_object(pred_pos) else {
                    self.synchronize();
                    return;
                };
                self.triples.push(Triple {
                    subject: subject.clone(),
                    predicate: predicate.clone(),
                    object,
                    pos: pred_pos,
                });
                match &self.peek().0 {
                    Token::Comma => {
                        self.next();
                    }
                    _ => break,
                }
            }
            let (token, pos) = self.next();
            match token {
                Token::Semicolon => {
                    // allow a trailing ';' before '.'
                    if self.peek().0 == Token::Dot {
                        self.next();
                        return;
                    }
                }
                Token::Dot => return,
                other => {
                    self.error(pos, format!("expected ';' or '.', found {}", other.describe()));
                    self.synchronize();
                    return;
                }
            }
        }
    }

    fn parse_object(&mut self, pred_pos: Pos) -> Option<ObjectTerm> {
        let (token, pos) = self.next();
        match token {
            Token::IriRef(iri) => Some(ObjectTerm::Iri(Iri::new(iri))),
            Token::PName { prefix, local } => {
                self.resolve_pname(&prefix, &local, pos).map(ObjectTerm::Iri)
            }
            Token::StringLit { value, lang } => Some(ObjectTerm::Literal(Literal { value, lang })),
            Token::Integer(n) => Some(ObjectTerm::Integer(n)),
            Token::LBracket => self.parse_restriction(pos),
            other => {
                self.error(pred_pos, format!("expected object, found {}", other.describe()));
                None
            }
        }
    }

    /// `[ a owl:Restriction ; owl:onProperty p ; owl:minCardinality n ]`,
    /// the only blank-node form in the subset.
    fn parse_restriction(&mut self, open_pos: Pos) -> Option<ObjectTerm> {
        let mut property: Option<Iri> = None;
        let mut bound: Option<(bool, u32)> = None;
        let mut saw_restriction_type = false;
        loop {
            let (token, pos) = self.next();
            match token {
                Token::RBracket => break,
                Token::A => {
                    let (obj, _) = self.parse_iri()?;
                    if obj.as_str() == format!("{OWL_NS}Restriction") {
                        saw_restriction_type = true;
                    } else {
                        self.error(pos, "blank node must be typed owl:Restriction");
                        return None;
                    }
                }
                Token::IriRef(_) | Token::PName { .. } => {
                    let pred = match token {
                        Token::IriRef(iri) => Iri::new(iri),
                        Token::PName { prefix, local } => {
                            self.resolve_pname(&prefix, &local, pos)?
                        }
                        _ => unreachable!(),
                    };
                    if pred.as_str() == format!("{OWL_NS}onProperty") {
                        let (value, _) = self.parse_iri()?;
                        property = Some(value);
                    } else if pred.as_str() == format!("{OWL_NS}minCardinality")
                        || pred.as_str() == format!("{OWL_NS}maxCardinality")
                    {
                        let max = pred.as_str().ends_with("maxCardinality");
                        let (token, vpos) = self.next();
                        match token {
                            Token::Integer(n) => bound = Some((max, n)),
                            other => {
                                self.error(
                                    vpos,
                                    format!(
                                        "expected non-negative integer, found {}",
                                        other.describe()
                                    ),
                                );
                                return None;
                            }
                        }
                    } else {
                        self.error(pos, format!("unsupported predicate <{pred}> in restriction"));
                        return None;
                    }
                }
                Token::Semicolon => continue,
                other => {
                    self.error(pos, format!("unexpected {} in restriction", other.describe()));
                    return None;
                }
            }
        }
        if !saw_restriction_type {
            self.error(open_pos, "restriction is missing 'a owl:Restriction'");
            return None;
        }
        match (property, bound) {
            (Some(property), Some((max, count))) => {
                Some(ObjectTerm::Restriction { property, max, count })
            }
            _ => {
                self.error(
                    open_pos,
                    "restriction needs owl:onProperty and owl:minCardinality or owl:maxCardinality",
                );
                None
            }
        }
    }
}

fn vocab(ns: &str, local: &str) -> Iri {
    Iri::new(format!("{ns}{local}"))
}

/// Maps collected triples onto the model: first pass registers declarations,
/// second pass resolves axioms against them.
struct Assembler {
    builder: OntologyBuilder,
    diagnostics: Vec<ParseDiagnostic>,
}

impl Assembler {
    fn error(&mut self, pos: Pos, message: impl Into<String>) {
        self.diagnostics.push(ParseDiagnostic {
            severity: Severity::Error,
            line: pos.line,
            column: pos.column,
            message: message.into(),
        });
    }

    fn warning(&mut self, pos: Pos, message: impl Into<String>) {
        self.diagnostics.push(ParseDiagnostic {
            severity: Severity::Warning,
            line: pos.line,
            column: pos.column,
            message: message.into(),
        });
    }

    fn declarations(&mut self, triples: &[Triple]) {
        let rdf_type = vocab(RDF_NS, "type");
        for triple in triples {
            if triple.predicate != rdf_type {
                continue;
            }
            let ObjectTerm::Iri(object) = &triple.object else { continue };
            let kind = match object.as_str().strip_prefix(OWL_NS) {
                Some("Class") => Declaration::Class,
                Some("ObjectProperty") => Declaration::ObjectProperty,
                Some("DatatypeProperty") => Declaration::DataProperty,
                Some("NamedIndividual") => Declaration::Individual,
                _ => continue,
            };
            if let Err(err) = self.builder.declare(triple.subject.clone(), kind) {
                self.error(triple.pos, err.to_string());
            }
        }
    }

    fn axioms(&mut self, triples: Vec<Triple>) {
        for triple in triples {
            let pos = triple.pos;
            let axiom = match self.triple_to_axiom(triple) {
                Ok(Some(axiom)) => axiom,
                Ok(None) => continue,
                Err(message) => {
                    self.error(pos, message);
                    continue;
                }
            };
            if let Err(err) = self.builder.validate_axiom(&axiom) {
                self.error(pos, err.to_string());
                continue;
            }
            self.builder.axiom(axiom);
        }
    }

    fn require_iri(object: ObjectTerm) -> Result<Iri, String> {
        match object {
            ObjectTerm::Iri(iri) => Ok(iri),
            ObjectTerm::Literal(_) => Err("expected an IRI object, found a literal".to_owned()),
            ObjectTerm::Integer(_) => Err("expected an IRI object, found an integer".to_owned()),
            ObjectTerm::Restriction { .. } => {
                Err("a restriction is only allowed as object of rdfs:subClassOf".to_owned())
            }
        }
    }

    fn require_literal(object: ObjectTerm) -> Result<Literal, String> {
        match object {
            ObjectTerm::Literal(lit) => Ok(lit),
            ObjectTerm::Integer(n) => Ok(Literal::plain(n.to_string())),
            _ => Err("expected a literal object".to_owned()),
        }
    }

    /// Returns Ok(None) for triples that are consumed elsewhere
    /// (declarations) or skipped with a warning (unknown predicates,
    /// owl:imports).
    fn triple_to_axiom(&mut self, triple: Triple) -> Result<Option<Axiom>, String> {
        let Triple { subject, predicate, object, pos } = triple;
        let pred = predicate.as_str();

        if pred == format!("{RDF_NS}type") {
            if let ObjectTerm::Iri(class) = &object {
                if matches!(
                    class.as_str().strip_prefix(OWL_NS),
                    Some("Class" | "ObjectProperty" | "DatatypeProperty" | "NamedIndividual")
                ) {
                    return Ok(None); // declaration, already handled
                }
            }
            let class = Self::require_iri(object)?;
            return Ok(Some(Axiom::TypeAssertion { individual: subject, class }));
        }

        if let Some(local) = pred.strip_prefix(RDFS_NS) {
            return match local {
                "subClassOf" => match object {
                    ObjectTerm::Restriction { property, max, count } => {
                        if max {
                            Ok(Some(Axiom::MaxCardinality { class: subject, property, count }))
                        } else {
                            Ok(Some(Axiom::MinCardinality { class: subject, property, count }))
                        }
                    }
                    other => {
                        let sup = Self::require_iri(other)?;
                        Ok(Some(Axiom::SubClassOf { sub: subject, sup }))
                    }
                },
                "subPropertyOf" => {
                    let sup = Self::require_iri(object)?;
                    Ok(Some(Axiom::SubPropertyOf { sub: subject, sup }))
                }
                "domain" => {
                    let class = Self::require_iri(object)?;
                    Ok(Some(Axiom::Domain { property: subject, class }))
                }
                "range" => {
                    let range = Self::require_iri(object)?;
                    Ok(Some(Axiom::Range { property: subject, range }))
                }
                "label" => {
                    let literal = Self::require_literal(object)?;
                    Ok(Some(Axiom::Label { subject, literal }))
                }
                "comment" => {
                    let literal = Self::require_literal(object)?;
                    Ok(Some(Axiom::Comment { subject, literal }))
                }
                _ => {
                    self.warning(pos, format!("unknown predicate rdfs:{local}, triple skipped"));
                    Ok(None)
                }
            };
        }

        if let Some(local) = pred.strip_prefix(OWL_NS) {
            return match local {
                "disjointWith" => {
                    let b = Self::require_iri(object)?;
                    Ok(Some(Axiom::DisjointClasses { a: subject, b }))
                }
                "equivalentClass" => {
                    let b = Self::require_iri(object)?;
                    Ok(Some(Axiom::EquivalentClasses { a: subject, b }))
                }
                "equivalentProperty" => {
                    let b = Self::require_iri(object)?;
                    Ok(Some(Axiom::EquivalentProperties { a: subject, b }))
                }
                "inverseOf" => {
                    let b = Self::require_iri(object)?;
                    Ok(Some(Axiom::InverseOf { a: subject, b }))
                }
                "imports" => {
                    self.warning(pos, "owl:imports is not resolved, triple skipped");
                    Ok(None)
                }
                _ => {
                    self.warning(pos, format!("unknown predicate owl:{local}, triple skipped"));
                    Ok(None)
                }
            };
        }

        // arbitrary declared property between individuals / literals
        match self.builder.declaration(&predicate) {
            Some(Declaration::ObjectProperty) => {
                let value = Self::require_iri(object)?;
                Ok(Some(Axiom::PropertyAssertion {
                    subject,
                    property: predicate,
                    value: AssertionValue::Individual(value),
                }))
            }
            Some(Declaration::DataProperty) => {
                let value = Self::require_literal(object)?;
                Ok(Some(Axiom::PropertyAssertion {
                    subject,
                    property: predicate,
                    value: AssertionValue::Literal(value),
                }))
            }
            Some(_) => Err(format!("<{predicate}> is not a property, cannot be a predicate")),
            None => {
                self.warning(pos, format!("unknown predicate <{predicate}>, triple skipped"));
                Ok(None)
            }
        }
    }
}

/// Parses a document of the Turtle subset. Warnings accompany a successful
/// parse; any error diagnostic prevents an ontology from being returned.
pub fn parse_ontology(document: &str) -> Result<(Ontology, Vec<ParseDiagnostic>), Vec<ParseDiagnostic>> {
    let mut parser = Parser::new(document);
    parser.parse_document();
    let Parser { diagnostics, triples, .. } = parser;

    let mut assembler = Assembler { builder: OntologyBuilder::new(), diagnostics };
    assembler.declarations(&triples);
    assembler.axioms(triples);

    let has_errors = assembler.diagnostics.iter().any(|d| d.severity == Severity::Error);
    if has_errors {
        return Err(assembler.diagnostics);
    }
    match assembler.builder.build() {
        Ok(ontology) => Ok((ontology, assembler.diagnostics)),
        Err(err) => {
            // validated per-axiom above, so this is unreachable in practice
            assembler.diagnostics.push(ParseDiagnostic {
                severity: Severity::Error,
                line: 1,
                column: 1,
                message: err.to_string(),
            });
            Err(assembler.diagnostics)
        }
    }
}

fn escape_literal(value: &str) -> String {
    let mut out = String::with_capacity(value.len());
    for c in value.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            '\r' => out.push_str("\\r"),
            other => out.push(other),
        }
    }
    out
}

fn literal_term(literal: &Literal) -> String {
    match &literal.lang {
        Some(lang) => format!("\"{}\"@{lang}", escape_literal(&literal.value)),
        None => format!("\"{}\"", escape_literal(&literal.value)),
    }
}

fn axiom_line(axiom: &Axiom) -> String {
    match axiom {
        Axiom::SubClassOf { sub, sup } => format!("<{sub}> rdfs:subClassOf <{sup}> ."),
        Axiom::EquivalentClasses { a, b } => format!("<{a}> owl:equivalentClass <{b}> ."),
        Axiom::DisjointClasses { a, b } => format!("<{a}> owl:disjointWith <{b}> ."),
        Axiom::SubPropertyOf { sub, sup } => format!("<{sub}> rdfs:subPropertyOf <{sup}> ."),
        Axiom::EquivalentProperties { a, b } => format!("<{a}> owl:equivalentProperty <{b}> ."),
        Axiom::InverseOf { a, b } => format!("<{a}> owl:inverseOf <{b}> ."),
        Axiom::Domain { property, class } => format!("<{property}> rdfs:domain <{class}> ."),
        Axiom::Range { property, range } => format!("<{property}> rdfs:range <{range}> ."),
        Axiom::TypeAssertion { individual, class } => format!("<{individual}> a <{class}> ."),
        Axiom::PropertyAssertion { subject, property, value } => {
            let object = match value {
                AssertionValue::Individual(iri) => format!("<{iri}>"),
                AssertionValue::Literal(lit) => literal_term(lit),
            };
            format!("<{subject}> <{property}> {object} .")
        }
        Axiom::MinCardinality { class, property, count } => format!(
            "<{class}> rdfs:subClassOf [ a owl:Restriction ; owl:onProperty <{property}> ; owl:minCardinality {count} ] ."
        ),
        Axiom::MaxCardinality { class, property, count } => format!(
            "<{class}> rdfs:subClassOf [ a owl:Restriction ; owl:onProperty <{property}> ; owl:maxCardinality {count} ] ."
        ),
        Axiom::Label { subject, literal } => {
            format!("<{subject}> rdfs:label {} .", literal_term(literal))
        }
        Axiom::Comment { subject, literal } => {
            format!("<{subject}> rdfs:comment {} .", literal_term(literal))
        }
    }
}

/// Serializes an ontology deterministically: declarations sorted by IRI,
/// axioms sorted by kind then subject; duplicate assertions are emitted as
/// many times as they were asserted, so parse and serialize are mutually
/// inverse on the model.
pub fn serialize_ontology(ontology: &Ontology) -> String {
    let mut out = String::new();
    out.push_str("@prefix rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#> .\n");
    out.push_str("@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n");
    out.push_str("@prefix owl: <http://www.w3.org/2002/07/owl#> .\n");
    out.push_str("@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .\n");

    let sections: [(&str, &alloc::collections::BTreeSet<Iri>); 4] = [
        ("owl:Class", ontology.classes()),
        ("owl:ObjectProperty", ontology.object_properties()),
        ("owl:DatatypeProperty", ontology.data_properties()),
        ("owl:NamedIndividual", ontology.individuals()),
    ];
    for (kind, iris) in sections {
        if !iris.is_empty() {
            out.push('\n');
        }
        for iri in iris {
            out.push_str(&format!("<{iri}> a {kind} .\n"));
        }
    }

    if !ontology.axioms().is_empty() {
        out.push('\n');
    }
    for axiom in ontology.axioms() {
        let line = axiom_line(axiom);
        for _ in 0..ontology.multiplicity(axiom) {
            out.push_str(&line);
            out.push('\n');
        }
    }
    out
}
