//! Tokenizer and untyped expression trees.
//!
//! All sub-languages (numbers, sets, ordinals, functions, sequences) share one
//! operator grammar; [`crate::command`] gives the trees their meaning.

use std::fmt;

use euclid_core::rational::{self, Rational};

/// A syntax error at a 1-based character column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(column: usize, message: impl Into<String>) -> Self {
        ParseError {
            column,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at column {}: {}", self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq)]
pub enum Tok {
    Number(Rational),
    Ident(String),
    /// One of `+ - * / ^ ( ) [ ] { } , =`.
    Sym(char),
    /// `(+)` or `⊎`.
    Union,
    /// `×`.
    Cross,
    /// `√`.
    Root,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Number(r) => write!(f, "number {}", r),
            Tok::Ident(s) => write!(f, "'{}'", s),
            Tok::Sym(c) => write!(f, "'{}'", c),
            Tok::Union => write!(f, "'(+)'"),
            Tok::Cross => write!(f, "'×'"),
            Tok::Root => write!(f, "'√'"),
            Tok::End => write!(f, "end of input"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Token {
    pub tok: Tok,
    pub column: usize,
}

fn is_ident_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_'
}

fn is_greek_atom(c: char) -> bool {
    matches!(c, 'α' | 'η' | 'ω' | 'ε' | 'π')
}

pub fn tokenize(input: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = input.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let mut value = rational::parse(&chars[start..i].iter().collect::<String>()).expect("digits");
            if i + 1 < chars.len() && chars[i] == '.' && chars[i + 1].is_ascii_digit() {
                i += 1;
                let frac_start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[frac_start..i].iter().collect();
                let scale = format!("1{}", "0".repeat(digits.len()));
                value += rational::parse(&format!("{}/{}", digits, scale)).expect("digits");
            }
            out.push(Token {
                tok: Tok::Number(value),
                column,
            });
            continue;
        }
        // Greek atoms stand alone so that `2α` style input fails loudly
        // instead of forming an identifier.
        if is_greek_atom(c) {
            out.push(Token {
                tok: Tok::Ident(c.to_string()),
                column,
            });
            i += 1;
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && is_ident_char(chars[i]) && !is_greek_atom(chars[i]) {
                i += 1;
            }
            let mut name: String = chars[start..i].iter().collect();
            // `N+` is an atom when the `+` is glued to it and nothing follows
            // that could be an operand.
            if name == "N"
                && i < chars.len()
                && chars[i] == '+'
                && !chars.get(i + 1).is_some_and(|&d| is_ident_char(d) || d == '(')
            {
                name.push('+');
                i += 1;
            }
            out.push(Token {
                tok: Tok::Ident(name),
                column,
            });
            continue;
        }
        if c == '(' && chars.get(i + 1) == Some(&'+') && chars.get(i + 2) == Some(&')') {
            out.push(Token {
                tok: Tok::Union,
                column,
            });
            i += 3;
            continue;
        }
        let tok = match c {
            '+' | '⊕' => Tok::Sym('+'),
            '-' | '−' => Tok::Sym('-'),
            '*' | '·' | '⋅' | '⊗' => Tok::Sym('*'),
            '/' => Tok::Sym('/'),
            '^' => Tok::Sym('^'),
            '(' | ')' | '[' | ']' | '{' | '}' | ',' | '=' => Tok::Sym(c),
            '⊎' => Tok::Union,
            '×' => Tok::Cross,
            '√' => Tok::Root,
            _ => return Err(ParseError::new(column, format!("unexpected character '{}'", c))),
        };
        out.push(Token { tok, column });
        i += 1;
    }
    out.push(Token {
        tok: Tok::End,
        column: chars.len() + 1,
    });
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
    Union,
    Cross,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Node {
    Number(Rational),
    Ident(String),
    /// `name(args)`; `closing` is `)` or `]` (the latter only for `Q(a,b]`).
    Call {
        name: String,
        args: Vec<Expr>,
        closing: char,
    },
    Neg(Box<Expr>),
    Root(Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    /// `{a, b, …}`.
    Braces(Vec<Expr>),
}

/// An expression with the column where it starts.
#[derive(Clone, Debug, PartialEq)]
pub struct Expr {
    pub node: Node,
    pub column: usize,
}

impl Expr {
    pub fn ident(&self) -> Option<&str> {
        match &self.node {
            Node::Ident(s) => Some(s),
            _ => None,
        }
    }
}

/// Pratt parser over a token list.
pub struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    /// Treat an infix identifier `x` as the set product.
    pub x_is_cross: bool,
}

impl Parser {
    pub fn new(tokens: Vec<Token>) -> Self {
        Parser {
            tokens,
            pos: 0,
            x_is_cross: false,
        }
    }

    pub fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    pub fn peek_at(&self, offset: usize) -> &Token {
        let i = (self.pos + offset).min(self.tokens.len() - 1);
        &self.tokens[i]
    }

    pub fn advance(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    pub fn position(&self) -> usize {
        self.pos
    }

    pub fn set_position(&mut self, pos: usize) {
        self.pos = pos;
    }

    pub fn at_end(&self) -> bool {
        self.peek().tok == Tok::End
    }

    pub fn eat_sym(&mut self, c: char) -> bool {
        if self.peek().tok == Tok::Sym(c) {
            self.advance();
            true
        } else {
            false
        }
    }

    pub fn eat_ident(&mut self, name: &str) -> bool {
        if matches!(&self.peek().tok, Tok::Ident(s) if s == name) {
            self.advance();
            true
        } else {
            false
        }
    }

    pub fn expect_sym(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat_sym(c) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("'{}'", c)))
        }
    }

    pub fn unexpected(&self, expected: &str) -> ParseError {
        let t = self.peek();
        ParseError::new(t.column, format!("expected {}, found {}", expected, t.tok))
    }

    fn infix(&self) -> Option<(BinOp, u8, u8)> {
        // (operator, left binding power, right binding power)
        Some(match &self.peek().tok {
            Tok::Union => (BinOp::Union, 1, 2),
            Tok::Sym('+') => (BinOp::Add, 3, 4),
            Tok::Sym('-') => (BinOp::Sub, 3, 4),
            Tok::Sym('*') => (BinOp::Mul, 5, 6),
            Tok::Sym('/') => (BinOp::Div, 5, 6),
            Tok::Cross => (BinOp::Cross, 5, 6),
            Tok::Ident(s) if self.x_is_cross && s == "x" => (BinOp::Cross, 5, 6),
            Tok::Sym('^') => (BinOp::Pow, 10, 9),
            _ => return None,
        })
    }

    pub fn expr(&mut self) -> Result<Expr, ParseError> {
        self.expr_bp(0)
    }

    fn expr_bp(&mut self, min_bp: u8) -> Result<Expr, ParseError> {
        let mut lhs = self.prefix()?;
        while let Some((op, lbp, rbp)) = self.infix() {
            if lbp < min_bp {
                break;
            }
            let column = lhs.column;
            self.advance();
            let rhs = self.expr_bp(rbp)?;
            lhs = Expr {
                node: Node::Binary(op, Box::new(lhs), Box::new(rhs)),
                column,
            };
        }
        Ok(lhs)
    }

    fn prefix(&mut self) -> Result<Expr, ParseError> {
        let t = self.advance();
        let column = t.column;
        let node = match t.tok {
            Tok::Number(r) => Node::Number(r),
            Tok::Sym('-') => {
                // binds tighter than * and looser than ^
                let e = self.expr_bp(7)?;
                Node::Neg(Box::new(e))
            }
            Tok::Sym('+') => return self.expr_bp(7),
            Tok::Root => {
                let e = self.expr_bp(11)?;
                Node::Root(Box::new(e))
            }
            Tok::Sym('(') => {
                let e = self.expr()?;
                self.expect_sym(')')?;
                return Ok(Expr { node: e.node, column });
            }
            Tok::Sym('{') => {
                let mut items = Vec::new();
                if !self.eat_sym('}') {
                    loop {
                        items.push(self.expr()?);
                        if self.eat_sym('}') {
                            break;
                        }
                        self.expect_sym(',')?;
                    }
                }
                Node::Braces(items)
            }
            Tok::Ident(name) => {
                if self.peek().tok == Tok::Sym('(') {
                    self.advance();
                    let mut args = Vec::new();
                    let closing;
                    loop {
                        if self.eat_sym(')') {
                            closing = ')';
                            break;
                        }
                        if self.eat_sym(']') {
                            closing = ']';
                            break;
                        }
                        if !args.is_empty() {
                            self.expect_sym(',')?;
                        }
                        args.push(self.expr()?);
                    }
                    Node::Call { name, args, closing }
                } else {
                    Node::Ident(name)
                }
            }
            other => {
                return Err(ParseError::new(
                    column,
                    format!("expected an expression, found {}", other),
                ))
            }
        };
        Ok(Expr { node, column })
    }
}
