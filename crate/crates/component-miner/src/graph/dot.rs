//! A DOT subset: `digraph` with node statements and `A -> B [weight=K];`
//! edge statements.
//!
//! Supported: optional graph name, bare ids (letters, digits, `_`, `.`),
//! double-quoted ids with `\"` and `\\` escapes, `//`, `/* */` and `#`
//! comments, a `weight` attribute on edges. A missing weight defaults to 1.
//! Unsupported attributes are ignored with a warning. Undirected graphs,
//! subgraphs, and chained edges (`A -> B -> C`) are rejected.

use super::{DependencyGraph, ElementId, GraphBuilder, GraphError, ParseOutput};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Id(String),
    Arrow,
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Semi,
    Comma,
    Eq,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> GraphError {
    GraphError::DotSyntax {
        line,
        column,
        message: message.into(),
    }
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    column: usize,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer {
            chars: text.chars().peekable(),
            line: 1,
            column: 1,
        }
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

    fn tokenize(mut self) -> Result<Vec<Token>, GraphError> {
        let mut tokens = Vec::new();
        loop {
            // Skip whitespace and comments.
            match self.chars.peek() {
                None => break,
                Some(c) if c.is_whitespace() => {
                    self.bump();
                    continue;
                }
                Some('#') => {
                    while let Some(&c) = self.chars.peek() {
                        if c == '\n' {
                            break;
                        }
                        self.bump();
                    }
                    continue;
                }
                Some('/') => {
                    let (line, column) = (self.line, self.column);
                    self.bump();
                    match self.chars.peek() {
                        Some('/') => {
                            while let Some(&c) = self.chars.peek() {
                                if c == '\n' {
                                    break;
                                }
                                self.bump();
                            }
                            continue;
                        }
                        Some('*') => {
                            self.bump();
                            let mut closed = false;
                            while let Some(c) = self.bump() {
                                if c == '*' && self.chars.peek() == Some(&'/') {
                                    self.bump();
                                    closed = true;
                                    break;
                                }
                            }
                            if !closed {
                                return Err(syntax(line, column, "unterminated comment"));
                            }
                            continue;
                        }
                        _ => return Err(syntax(line, column, "unexpected character `/`")),
                    }
                }
                _ => {}
            }

            let (line, column) = (self.line, self.column);
            let c = self.bump().expect("peeked");
            let tok = match c {
                '{' => Tok::LBrace,
                '}' => Tok::RBrace,
                '[' => Tok::LBracket,
                ']' => Tok::RBracket,
                ';' => Tok::Semi,
                ',' => Tok::Comma,
                '=' => Tok::Eq,
                '-' => match self.chars.peek() {
                    Some('>') => {
                        self.bump();
                        Tok::Arrow
                    }
                    Some('-') => {
                        return Err(syntax(
                            line,
                            column,
                            "undirected edge `--` is not supported (use `->`)",
                        ))
                    }
                    _ => return Err(syntax(line, column, "unexpected character `-`")),
                },
                '"' => {
                    let mut value = String::new();
                    loop {
                        match self.bump() {
                            None => return Err(syntax(line, column, "unterminated string")),
                            Some('"') => break,
                            Some('\\') => match self.bump() {
                                Some('"') => value.push('"'),
                                Some('\\') => value.push('\\'),
                                Some(other) => {
                                    value.push('\\');
                                    value.push(other);
                                }
                                None => return Err(syntax(line, column, "unterminated string")),
                            },
                            Some(other) => value.push(other),
                        }
                    }
                    Tok::Id(value)
                }
                c if is_bare_char(c) => {
                    let mut value = String::from(c);
                    while let Some(&next) = self.chars.peek() {
                        if is_bare_char(next) {
                            value.push(next);
                            self.bump();
                        } else {
                            break;
                        }
                    }
                    Tok::Id(value)
                }
                other => {
                    return Err(syntax(
                        line,
                        column,
                        format!("unexpected character `{other}`"),
                    ))
                }
            };
            tokens.push(Token { tok, line, column });
        }
        Ok(tokens)
    }
}

fn is_bare_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '.'
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    builder: GraphBuilder,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn end_position(&self) -> (usize, usize) {
        self.tokens
            .last()
            .map(|t| (t.line, t.column))
            .unwrap_or((1, 1))
    }

    fn expect_id(&mut self, what: &str) -> Result<(String, usize, usize), GraphError> {
        match self.next() {
            Some(Token {
                tok: Tok::Id(v),
                line,
                column,
            }) => Ok((v, line, column)),
            Some(t) => Err(syntax(t.line, t.column, format!("expected {what}"))),
            None => {
                let (line, column) = self.end_position();
                Err(syntax(
                    line,
                    column,
                    format!("expected {what}, found end of input"),
                ))
            }
        }
    }

    fn parse(mut self) -> Result<ParseOutput, GraphError> {
        let (keyword, line, column) = self.expect_id("`digraph`")?;
        let keyword = if keyword.eq_ignore_ascii_case("strict") {
            self.builder
                .warn(format!("line {line}: `strict` modifier ignored"));
            let (kw, ..) = self.expect_id("`digraph`")?;
            kw
        } else {
            keyword
        };
        if keyword.eq_ignore_ascii_case("graph") {
            return Err(syntax(
                line,
                column,
                "undirected graphs are not supported (use `digraph`)",
            ));
        }
        if !keyword.eq_ignore_ascii_case("digraph") {
            return Err(syntax(line, column, "expected `digraph`"));
        }

        // Optional graph name.
        if matches!(
            self.peek(),
            Some(Token {
                tok: Tok::Id(_),
                ..
            })
        ) {
            self.next();
        }
        match self.next() {
            Some(Token {
                tok: Tok::LBrace, ..
            }) => {}
            Some(t) => return Err(syntax(t.line, t.column, "expected `{`")),
            None => {
                let (line, column) = self.end_position();
                return Err(syntax(line, column, "expected `{`, found end of input"));
            }
        }

        loop {
            match self.peek() {
                Some(Token {
                    tok: Tok::RBrace, ..
                }) => {
                    self.next();
                    break;
                }
                Some(Token {
                    tok: Tok::Id(_), ..
                }) => self.statement()?,
                Some(t) => return Err(syntax(t.line, t.column, "expected statement or `}`")),
                None => {
                    let (line, column) = self.end_position();
                    return Err(syntax(line, column, "expected `}`, found end of input"));
                }
            }
        }

        if let Some(t) = self.peek() {
            return Err(syntax(t.line, t.column, "unexpected token after `}`"));
        }
        Ok(self.builder.finish())
    }

    fn statement(&mut self) -> Result<(), GraphError> {
        let (source, line, column) = self.expect_id("an identifier")?;
        let source = ElementId::new(source).map_err(|_| {
            syntax(
                line,
                column,
                "identifier must be non-empty with no surrounding whitespace",
            )
        })?;

        let is_edge = matches!(
            self.peek(),
            Some(Token {
                tok: Tok::Arrow,
                ..
            })
        );
        if is_edge {
            self.next();
            let (target, tline, tcolumn) = self.expect_id("an identifier")?;
            let target = ElementId::new(target).map_err(|_| {
                syntax(
                    tline,
                    tcolumn,
                    "identifier must be non-empty with no surrounding whitespace",
                )
            })?;
            if let Some(Token {
                tok: Tok::Arrow,
                line,
                column,
            }) = self.peek()
            {
                return Err(syntax(
                    *line,
                    *column,
                    "chained edge statements are not supported",
                ));
            }
            let attrs = self.attr_block()?;
            let mut weight: u64 = 1;
            for attr in attrs {
                if attr.name == "weight" {
                    weight = parse_weight(&attr)?;
                } else {
                    self.builder.warn(format!(
                        "line {}, column {}: attribute `{}` ignored",
                        attr.line, attr.column, attr.name
                    ));
                }
            }
            self.builder.touch_element(source.clone());
            self.builder.touch_element(target.clone());
            self.builder
                .add_edge(source, target, weight, &format!("line {line}"))?;
        } else {
            let attrs = self.attr_block()?;
            for attr in attrs {
                self.builder.warn(format!(
                    "line {}, column {}: attribute `{}` ignored",
                    attr.line, attr.column, attr.name
                ));
            }
            self.builder.touch_element(source);
        }

        if matches!(self.peek(), Some(Token { tok: Tok::Semi, .. })) {
            self.next();
        }
        Ok(())
    }

    fn attr_block(&mut self) -> Result<Vec<Attr>, GraphError> {
        if !matches!(
            self.peek(),
            Some(Token {
                tok: Tok::LBracket,
                ..
            })
        ) {
            return Ok(Vec::new());
        }
        self.next();
        let mut attrs = Vec::new();
        loop {
            if matches!(
                self.peek(),
                Some(Token {
                    tok: Tok::RBracket,
                    ..
                })
            ) {
                self.next();
                break;
            }
            let (name, line, column) = self.expect_id("an attribute name")?;
            match self.next() {
                Some(Token { tok: Tok::Eq, .. }) => {}
                Some(t) => return Err(syntax(t.line, t.column, "expected `=`")),
                None => return Err(syntax(line, column, "expected `=`, found end of input")),
            }
            let (value, ..) = self.expect_id("an attribute value")?;
            attrs.push(Attr {
                name,
                value,
                line,
                column,
            });
            if matches!(
                self.peek(),
                Some(Token {
                    tok: Tok::Comma,
                    ..
                })
            ) {
                self.next();
            }
        }
        Ok(attrs)
    }
}

struct Attr {
    name: String,
    value: String,
    line: usize,
    column: usize,
}

fn parse_weight(attr: &Attr) -> Result<u64, GraphError> {
    match attr.value.parse::<i64>() {
        Ok(v) if v >= 1 => Ok(v as u64),
        Ok(v) => Err(GraphError::NonPositiveWeight {
            location: format!("line {}, column {}", attr.line, attr.column),
            got: v,
        }),
        Err(_) => Err(syntax(
            attr.line,
            attr.column,
            format!("weight must be a positive integer (got `{}`)", attr.value),
        )),
    }
}

/// Parses the documented DOT subset into a validated graph.
pub fn parse_dot_graph(text: &str) -> Result<ParseOutput, GraphError> {
    let text = text.strip_prefix('\u{feff}').unwrap_or(text);
    let tokens = Lexer::new(text).tokenize()?;
    Parser {
        tokens,
        pos: 0,
        builder: GraphBuilder::new(),
    }
    .parse()
}

/// Serializes a graph in the DOT subset. Only ids, edges, and weights are
/// written; container and method metadata does not survive a DOT round trip.
pub fn to_dot_string(graph: &DependencyGraph) -> String {
    let mut on_edge = std::collections::BTreeSet::new();
    for (s, t, _) in graph.edges() {
        on_edge.insert(s.clone());
        on_edge.insert(t.clone());
    }
    let mut out = String::from("digraph g {\n");
    for el in graph.elements() {
        if !on_edge.contains(&el.id) {
            out.push_str(&format!("  {};\n", format_id(el.id.as_str())));
        }
    }
    for (s, t, w) in graph.edges() {
        out.push_str(&format!(
            "  {} -> {} [weight={}];\n",
            format_id(s.as_str()),
            format_id(t.as_str()),
            w
        ));
    }
    out.push_str("}\n");
    out
}

fn format_id(id: &str) -> String {
    let bare_safe = id
        .chars()
        .enumerate()
        .all(|(i, c)| c.is_ascii_alphabetic() || c == '_' || (i > 0 && c.is_ascii_digit()))
        && !is_dot_keyword(id);
    if bare_safe {
        id.to_string()
    } else {
        let mut quoted = String::from("\"");
        for c in id.chars() {
            match c {
                '"' => quoted.push_str("\\\""),
                '\\' => quoted.push_str("\\\\"),
                other => quoted.push(other),
            }
        }
        quoted.push('"');
        quoted
    }
}

fn is_dot_keyword(id: &str) -> bool {
    ["digraph", "graph", "strict", "node", "edge", "subgraph"]
        .iter()
        .any(|kw| id.eq_ignore_ascii_case(kw))
}
