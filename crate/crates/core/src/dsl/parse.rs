use std::fmt;

use super::ast::{ElemLit, Expr, HomSpec};
use crate::constructions::MatrixKind;

/// A syntax or shape error at a 1-based `line:col`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.msg)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Pos {
    line: usize,
    col: usize,
}

impl Pos {
    fn error(self, msg: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            col: self.col,
            msg: msg.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(u64),
    Open,
    Close,
    OpenBracket,
    CloseBracket,
    OpenBrace,
    CloseBrace,
    Comma,
    Hash,
    Arrow,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("'{s}'"),
            Tok::Int(k) => format!("'{k}'"),
            Tok::Open => "'('".into(),
            Tok::Close => "')'".into(),
            Tok::OpenBracket => "'['".into(),
            Tok::CloseBracket => "']'".into(),
            Tok::OpenBrace => "'{'".into(),
            Tok::CloseBrace => "'}'".into(),
            Tok::Comma => "','".into(),
            Tok::Hash => "'#'".into(),
            Tok::Arrow => "'->'".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let mut pos = Pos { line: 1, col: 1 };
    while let Some(&c) = chars.peek() {
        let start = pos;
        let bump = |chars: &mut std::iter::Peekable<std::str::Chars<'_>>, pos: &mut Pos| {
            let c = chars.next().unwrap();
            if c == '\n' {
                pos.line += 1;
                pos.col = 1;
            } else {
                pos.col += 1;
            }
        };
        if c.is_whitespace() {
            bump(&mut chars, &mut pos);
            continue;
        }
        let tok = if c.is_ascii_digit() {
            let mut value: u64 = 0;
            while let Some(&d) = chars.peek() {
                let Some(v) = d.to_digit(10) else { break };
                value = value
                    .checked_mul(10)
                    .and_then(|x| x.checked_add(u64::from(v)))
                    .ok_or_else(|| start.error("integer literal too large"))?;
                bump(&mut chars, &mut pos);
            }
            Tok::Int(value)
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut name = String::new();
            while let Some(&d) = chars.peek() {
                if !(d.is_ascii_alphanumeric() || d == '_') {
                    break;
                }
                name.push(d);
                bump(&mut chars, &mut pos);
            }
            Tok::Ident(name)
        } else {
            bump(&mut chars, &mut pos);
            match c {
                '(' => Tok::Open,
                ')' => Tok::Close,
                '[' => Tok::OpenBracket,
                ']' => Tok::CloseBracket,
                '{' => Tok::OpenBrace,
                '}' => Tok::CloseBrace,
                ',' => Tok::Comma,
                '#' => Tok::Hash,
                '-' if chars.peek() == Some(&'>') => {
                    bump(&mut chars, &mut pos);
                    Tok::Arrow
                }
                other => return Err(start.error(format!("unexpected character '{other}'"))),
            }
        };
        out.push((tok, start));
    }
    out.push((Tok::End, pos));
    Ok(out)
}

/// Untyped syntax tree; shapes are checked when converting to [`Expr`].
#[derive(Debug)]
enum Value {
    Call(String, Vec<Node>),
    Tagged(String, Vec<Node>),
    Ident(String),
    Int(u64),
    Index(u64),
    List(Vec<Node>),
    Tuple(Vec<Node>),
    Map(Vec<(Node, Node)>),
}

#[derive(Debug)]
struct Node {
    pos: Pos,
    value: Value,
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn next(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.next();
            Ok(())
        } else {
            Err(self
                .pos()
                .error(format!("expected {what}, found {}", self.peek().describe())))
        }
    }

    /// Comma-separated values up to `close`; the opening token is consumed.
    fn sequence(&mut self, close: Tok, close_text: &str) -> Result<Vec<Node>, ParseError> {
        let mut items = Vec::new();
        if *self.peek() == close {
            self.next();
            return Ok(items);
        }
        loop {
            items.push(self.value()?);
            match self.peek() {
                Tok::Comma => {
                    self.next();
                }
                t if *t == close => {
                    self.next();
                    return Ok(items);
                }
                t => {
                    return Err(self
                        .pos()
                        .error(format!("expected ',' or {close_text}, found {}", t.describe())))
                }
            }
        }
    }

    fn value(&mut self) -> Result<Node, ParseError> {
        let (tok, pos) = self.next();
        let value = match tok {
            Tok::Ident(name) => match self.peek() {
                Tok::Open => {
                    self.next();
                    Value::Call(name, self.sequence(Tok::Close, "')'")?)
                }
                Tok::OpenBracket => {
                    self.next();
                    Value::Tagged(name, self.sequence(Tok::CloseBracket, "']'")?)
                }
                _ => Value::Ident(name),
            },
            Tok::Int(k) => Value::Int(k),
            Tok::Hash => match self.next() {
                (Tok::Int(k), _) => Value::Index(k),
                (t, p) => return Err(p.error(format!("expected an index after '#', found {}", t.describe()))),
            },
            Tok::OpenBracket => Value::List(self.sequence(Tok::CloseBracket, "']'")?),
            Tok::Open => {
                let items = self.sequence(Tok::Close, "')'")?;
                if items.len() < 2 {
                    return Err(pos.error("a tuple needs at least two components"));
                }
                Value::Tuple(items)
            }
            Tok::OpenBrace => {
                let mut pairs = Vec::new();
                if *self.peek() == Tok::CloseBrace {
                    self.next();
                } else {
                    loop {
                        let x = self.value()?;
                        self.expect(Tok::Arrow, "'->'")?;
                        let y = self.value()?;
                        pairs.push((x, y));
                        match self.next() {
                            (Tok::Comma, _) => {}
                            (Tok::CloseBrace, _) => break,
                            (t, p) => return Err(p.error(format!("expected ',' or '}}', found {}", t.describe()))),
                        }
                    }
                }
                Value::Map(pairs)
            }
            t => return Err(pos.error(format!("unexpected {}", t.describe()))),
        };
        Ok(Node { pos, value })
    }
}

fn parse_value(text: &str) -> Result<Node, ParseError> {
    let mut p = Parser {
        toks: tokenize(text)?,
        at: 0,
    };
    let node = p.value()?;
    if *p.peek() != Tok::End {
        return Err(p.pos().error(format!("unexpected trailing {}", p.peek().describe())));
    }
    Ok(node)
}

/// Parses a ring expression.
pub fn parse(text: &str) -> Result<Expr, ParseError> {
    expr(parse_value(text)?)
}

/// Parses a standalone element literal.
pub fn parse_element(text: &str) -> Result<ElemLit, ParseError> {
    elem(parse_value(text)?)
}

fn int(node: Node, what: &str) -> Result<usize, ParseError> {
    match node.value {
        Value::Int(k) => usize::try_from(k).map_err(|_| node.pos.error("integer literal too large")),
        _ => Err(node.pos.error(format!("expected an integer for {what}"))),
    }
}

fn elem(node: Node) -> Result<ElemLit, ParseError> {
    let pos = node.pos;
    match node.value {
        Value::Int(k) => Ok(ElemLit::Int(k)),
        Value::Index(k) => usize::try_from(k)
            .map(ElemLit::Index)
            .map_err(|_| pos.error("index too large")),
        Value::Tuple(items) => Ok(ElemLit::Tuple(items.into_iter().map(elem).collect::<Result<_, _>>()?)),
        Value::List(rows) => {
            if rows.is_empty() {
                return Err(pos.error("a matrix needs at least one row"));
            }
            let mut out = Vec::with_capacity(rows.len());
            let mut width = None;
            for row in rows {
                let rpos = row.pos;
                let Value::List(cells) = row.value else {
                    return Err(rpos.error("expected a matrix row '[...]'"));
                };
                if cells.is_empty() {
                    return Err(rpos.error("a matrix row needs at least one entry"));
                }
                if *width.get_or_insert(cells.len()) != cells.len() {
                    return Err(rpos.error("matrix rows have different lengths"));
                }
                out.push(cells.into_iter().map(elem).collect::<Result<_, _>>()?);
            }
            Ok(ElemLit::Matrix(out))
        }
        _ => Err(pos.error("expected an element literal")),
    }
}

fn subring_gens(node: Node) -> Result<Vec<ElemLit>, ParseError> {
    match node.value {
        Value::Tagged(name, items) if name == "sub" => items.into_iter().map(elem).collect(),
        _ => Err(node.pos.error("expected a subring 'sub[...]'")),
    }
}

fn hom(node: Node) -> Result<HomSpec, ParseError> {
    match node.value {
        Value::Ident(name) if name == "id" => Ok(HomSpec::Identity),
        Value::Map(pairs) => Ok(HomSpec::Map(
            pairs
                .into_iter()
                .map(|(x, y)| Ok((elem(x)?, elem(y)?)))
                .collect::<Result<_, ParseError>>()?,
        )),
        _ => Err(node.pos.error("expected 'id' or a map '{x->y,...}'")),
    }
}

fn int_list(node: Node) -> Result<Vec<Node>, ParseError> {
    match node.value {
        Value::List(items) => Ok(items),
        _ => Err(node.pos.error("expected a list '[...]'")),
    }
}

fn consts(node: Node) -> Result<Vec<Vec<Vec<usize>>>, ParseError> {
    int_list(node)?
        .into_iter()
        .map(|row| {
            int_list(row)?
                .into_iter()
                .map(|v| {
                    int_list(v)?
                        .into_iter()
                        .map(|c| int(c, "a structure constant"))
                        .collect()
                })
                .collect()
        })
        .collect()
}

const CONSTRUCTORS: &[&str] = &[
    "Z", "M", "U", "D", "V", "H", "K", "prod", "dorroh", "quot", "corner", "twist", "trs", "algebra", "sub",
];

fn expr(node: Node) -> Result<Expr, ParseError> {
    let pos = node.pos;
    let (name, args) = match node.value {
        Value::Call(name, args) => (name, args),
        Value::Ident(name) | Value::Tagged(name, _) if !CONSTRUCTORS.contains(&name.as_str()) => {
            return Err(pos.error(format!("unknown constructor '{name}'")))
        }
        Value::Ident(name) | Value::Tagged(name, _) => return Err(pos.error(format!("expected '(' after '{name}'"))),
        _ => return Err(pos.error("expected a ring expression")),
    };
    let argc = args.len();
    let arity = |lo: usize, hi: usize| -> Result<(), ParseError> {
        if argc < lo || argc > hi {
            let want = if lo == hi {
                format!("{lo}")
            } else if hi == usize::MAX {
                format!("at least {lo}")
            } else {
                format!("{lo} to {hi}")
            };
            let noun = if lo == 1 && hi == 1 { "argument" } else { "arguments" };
            return Err(pos.error(format!("{name} takes {want} {noun}, found {argc}")));
        }
        Ok(())
    };
    let matrix_kind = match name.as_str() {
        "M" => Some(MatrixKind::Full),
        "U" => Some(MatrixKind::Upper),
        "D" => Some(MatrixKind::Diagonal),
        "V" => Some(MatrixKind::Toeplitz),
        _ => None,
    };
    if let Some(kind) = matrix_kind {
        arity(2, 2)?;
        let mut it = args.into_iter();
        let n = int(it.next().unwrap(), "the matrix size")?;
        let base = Box::new(expr(it.next().unwrap())?);
        return Ok(Expr::Matrix { kind, n, base });
    }
    let mut it = args.into_iter();
    let mut take = || it.next().unwrap();
    Ok(match name.as_str() {
        "Z" => {
            arity(1, 1)?;
            Expr::Z(int(take(), "the modulus")?)
        }
        "H" => {
            arity(3, 3)?;
            Expr::H {
                base: Box::new(expr(take())?),
                s: elem(take())?,
                t: elem(take())?,
            }
        }
        "K" => {
            arity(2, 2)?;
            Expr::K {
                base: Box::new(expr(take())?),
                s: elem(take())?,
            }
        }
        "prod" => {
            arity(1, usize::MAX)?;
            Expr::Prod(it.map(expr).collect::<Result<_, _>>()?)
        }
        "dorroh" => {
            arity(2, 2)?;
            Expr::Dorroh {
                base: Box::new(expr(take())?),
                sub: subring_gens(take())?,
            }
        }
        "quot" | "sub" => {
            arity(1, usize::MAX)?;
            let base = Box::new(expr(take())?);
            let gens = it.map(elem).collect::<Result<_, _>>()?;
            if name == "quot" {
                Expr::Quot { base, gens }
            } else {
                Expr::Sub { base, gens }
            }
        }
        "corner" => {
            arity(2, 2)?;
            Expr::Corner {
                base: Box::new(expr(take())?),
                e: elem(take())?,
            }
        }
        "twist" => {
            arity(2, 2)?;
            Expr::Twist {
                base: Box::new(expr(take())?),
                hom: hom(take())?,
            }
        }
        "trs" => {
            arity(3, 3)?;
            Expr::Trs {
                base: Box::new(expr(take())?),
                sub: subring_gens(take())?,
                n: int(take(), "the prefix length")?,
            }
        }
        "algebra" => {
            arity(3, 3)?;
            Expr::Algebra {
                p: int(take(), "the characteristic")?,
                d: int(take(), "the dimension")?,
                consts: consts(take())?,
            }
        }
        other => return Err(pos.error(format!("unknown constructor '{other}'"))),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn err(text: &str) -> ParseError {
        parse(text).unwrap_err()
    }

    #[test]
    fn canonical_forms() {
        for (input, canon) in [
            ("U(2, Z(3))", "U(2,Z(3))"),
            ("H(Z(3), 2, 1)", "H(Z(3),2,1)"),
            ("dorroh(Z(2), sub[1])", "dorroh(Z(2),sub[1])"),
            (
                "quot( U(2,Z(2)), [[1,0],[0,0]], [[0,1],[0,0]] )",
                "quot(U(2,Z(2)),[[1,0],[0,0]],[[0,1],[0,0]])",
            ),
            (
                "twist(prod(Z(2),Z(2)), {(1,0)->(1,1), (0,1)->(0,0)})",
                "twist(prod(Z(2),Z(2)),{(1,0)->(1,1),(0,1)->(0,0)})",
            ),
            ("twist(Z(2),id)", "twist(Z(2),id)"),
            ("trs(M(2,Z(2)), sub[], 1)", "trs(M(2,Z(2)),sub[],1)"),
            ("algebra(2,1,[[[1]]])", "algebra(2,1,[[[1]]])"),
            ("corner(M(2,Z(2)),#3)", "corner(M(2,Z(2)),#3)"),
            ("sub(\n  M(2,Z(2)),\n  [[1,1],[0,1]])", "sub(M(2,Z(2)),[[1,1],[0,1]])"),
        ] {
            let e = parse(input).unwrap();
            assert_eq!(e.to_string(), canon);
            assert_eq!(parse(canon).unwrap(), e);
        }
    }

    #[test]
    fn ast_shape() {
        let e = parse("H(Z(3), 2, 1)").unwrap();
        assert_eq!(
            e,
            Expr::H {
                base: Box::new(Expr::Z(3)),
                s: ElemLit::Int(2),
                t: ElemLit::Int(1)
            }
        );
    }

    #[test]
    fn unclosed_call() {
        let e = err("K(Z(2)");
        assert_eq!((e.line, e.col), (1, 7));
        assert!(e.msg.starts_with("expected ',' or ')'"), "{}", e.msg);
    }

    #[test]
    fn positions_span_lines() {
        let e = err("prod(Z(2),\n  Q(3))");
        assert_eq!((e.line, e.col), (2, 3));
        assert_eq!(e.msg, "unknown constructor 'Q'");
    }

    #[test]
    fn arity_and_shape_errors() {
        assert_eq!(err("M(2)").msg, "M takes 2 arguments, found 1");
        assert_eq!(err("Z(2,3)").msg, "Z takes 1 argument, found 2");
        assert_eq!(err("dorroh(Z(2), 1)").msg, "expected a subring 'sub[...]'");
        assert_eq!(err("Z(2) Z(3)").msg, "unexpected trailing 'Z'");
        assert_eq!(err("Z(x)").msg, "expected an integer for the modulus");
        assert_eq!(err("corner(Z(2),(1))").msg, "a tuple needs at least two components");
        assert_eq!(
            err("corner(M(2,Z(2)),[[1,0],[0]])").msg,
            "matrix rows have different lengths"
        );
        let e = err("Z(2$)");
        assert_eq!((e.col, e.msg.as_str()), (4, "unexpected character '$'"));
        assert_eq!(err("").msg, "unexpected end of input");
    }

    #[test]
    fn elements() {
        assert_eq!(parse_element("#12").unwrap(), ElemLit::Index(12));
        assert_eq!(parse_element(" [[1, 0],[0,1]] ").unwrap().to_string(), "[[1,0],[0,1]]");
        assert_eq!(parse_element("((1,0),[[1]])").unwrap().to_string(), "((1,0),[[1]])");
    }
}
