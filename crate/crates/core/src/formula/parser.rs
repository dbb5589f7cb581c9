use std::fmt;

use thiserror::Error;

use super::lexer::{tokenize, Spanned, Token};
use super::{Connective, Formula};

/// Nesting bound; every parenthesis, prefix negation or function form counts.
pub const MAX_NESTING: usize = 128;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    EmptyInput,
    UnexpectedToken(String),
    UnexpectedEnd,
    UnknownOperator(String),
    UnbalancedParenthesis,
    TooDeep,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    /// 1-based character position.
    pub position: usize,
    pub kind: ParseErrorKind,
    pub expected: Vec<&'static str>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at position {}: ", self.position)?;
        match &self.kind {
            ParseErrorKind::EmptyInput => f.write_str("empty formula")?,
            ParseErrorKind::UnexpectedToken(t) => write!(f, "unexpected {t}")?,
            ParseErrorKind::UnexpectedEnd => f.write_str("unexpected end of input")?,
            ParseErrorKind::UnknownOperator(op) => write!(f, "unknown operator `{op}`")?,
            ParseErrorKind::UnbalancedParenthesis => f.write_str("unbalanced parenthesis")?,
            ParseErrorKind::TooDeep => write!(f, "nesting deeper than {MAX_NESTING}")?,
        }
        if !self.expected.is_empty() {
            write!(f, "; expected {}", self.expected.join(", "))?;
        }
        Ok(())
    }
}

const OPERAND: &[&str] = &[
    "identifier",
    "`0`",
    "`1`",
    "`!`",
    "`(`",
    "`maj`",
    "`nand(`",
    "`nor(`",
];
const BINARY: &[&str] = &[
    "`&`", "`nand`", "`^`", "`|`", "`nor`", "`->`", "`<-`", "`!->`", "`!<-`", "`<->`",
];

/// Parses a formula. A chain of one associative operator becomes a single
/// k-ary node; a parenthesized operand is never merged into the chain.
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let tokens = tokenize(text).map_err(|(op, position)| ParseError {
        position,
        kind: ParseErrorKind::UnknownOperator(op),
        expected: Vec::new(),
    })?;
    if tokens.len() == 1 {
        return Err(ParseError {
            position: 1,
            kind: ParseErrorKind::EmptyInput,
            expected: OPERAND.to_vec(),
        });
    }
    let mut parser = Parser {
        tokens,
        at: 0,
        depth: 0,
    };
    let f = parser.iff()?;
    match parser.peek() {
        Token::End => Ok(f),
        Token::RParen => Err(parser.error_here(ParseErrorKind::UnbalancedParenthesis, Vec::new())),
        _ => {
            let mut expected = BINARY.to_vec();
            expected.push("end of input");
            Err(parser.unexpected(expected))
        }
    }
}

struct Parser {
    tokens: Vec<Spanned>,
    at: usize,
    depth: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.at].token
    }

    fn pos(&self) -> usize {
        self.tokens[self.at].pos
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.at].token.clone();
        if t != Token::End {
            self.at += 1;
        }
        t
    }

    fn error_here(&self, kind: ParseErrorKind, expected: Vec<&'static str>) -> ParseError {
        ParseError {
            position: self.pos(),
            kind,
            expected,
        }
    }

    fn unexpected(&self, expected: Vec<&'static str>) -> ParseError {
        let kind = match self.peek() {
            Token::End => ParseErrorKind::UnexpectedEnd,
            t => ParseErrorKind::UnexpectedToken(t.to_string()),
        };
        self.error_here(kind, expected)
    }

    fn descend(&mut self) -> Result<(), ParseError> {
        self.depth += 1;
        if self.depth > MAX_NESTING {
            return Err(self.error_here(ParseErrorKind::TooDeep, Vec::new()));
        }
        Ok(())
    }

    fn iff(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.imp()?;
        let entry = self.depth;
        while *self.peek() == Token::Equiv {
            self.bump();
            self.descend()?;
            let rhs = self.imp()?;
            acc = Formula::Apply(Connective::Equiv, vec![acc, rhs]);
        }
        self.depth = entry;
        Ok(acc)
    }

    fn imp(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.or()?;
        let Some(kind) = implication_kind(self.peek()) else {
            return Ok(lhs);
        };
        self.bump();
        let rhs = self.or()?;
        if implication_kind(self.peek()).is_some() {
            // non-associative: `a -> b -> c` needs explicit grouping
            return Err(self.unexpected(vec!["`<->`", "`)`", "end of input"]));
        }
        Ok(Formula::Apply(kind, vec![lhs, rhs]))
    }

    fn or(&mut self) -> Result<Formula, ParseError> {
        self.chain(
            Token::Or,
            Token::Nor,
            Connective::Or,
            Connective::Nor,
            Parser::xor,
        )
    }

    fn xor(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.and()?;
        let mut open = false;
        while *self.peek() == Token::Xor {
            self.bump();
            let rhs = self.and()?;
            acc = extend(acc, Connective::Xor, rhs, open);
            open = true;
        }
        Ok(acc)
    }

    fn and(&mut self) -> Result<Formula, ParseError> {
        self.chain(
            Token::And,
            Token::Nand,
            Connective::And,
            Connective::Nand,
            Parser::unary,
        )
    }

    /// One precedence level holding a flattening operator and its negated,
    /// left-nested binary partner (`&`/`nand`, `|`/`nor`).
    fn chain(
        &mut self,
        flat: Token,
        negated: Token,
        flat_kind: Connective,
        negated_kind: Connective,
        operand: fn(&mut Parser) -> Result<Formula, ParseError>,
    ) -> Result<Formula, ParseError> {
        let mut acc = operand(self)?;
        let entry = self.depth;
        let mut open = false;
        loop {
            let t = self.peek().clone();
            if t == flat {
                self.bump();
                if !open {
                    self.descend()?;
                }
                let rhs = operand(self)?;
                acc = extend(acc, flat_kind, rhs, open);
                open = true;
            } else if t == negated {
                self.bump();
                self.descend()?;
                let rhs = operand(self)?;
                acc = Formula::Apply(negated_kind, vec![acc, rhs]);
                open = false;
            } else {
                self.depth = entry;
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        if *self.peek() == Token::Not {
            self.bump();
            self.descend()?;
            let inner = self.unary()?;
            self.depth -= 1;
            return Ok(Formula::Not(Box::new(inner)));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Formula, ParseError> {
        match self.peek().clone() {
            Token::Ident(name) => {
                self.bump();
                Ok(Formula::Var(name))
            }
            Token::Const(b) => {
                self.bump();
                Ok(Formula::Const(b))
            }
            Token::LParen => {
                let open_pos = self.pos();
                self.bump();
                self.descend()?;
                let inner = self.iff()?;
                self.depth -= 1;
                match self.peek() {
                    Token::RParen => {
                        self.bump();
                        Ok(inner)
                    }
                    Token::End => Err(ParseError {
                        position: open_pos,
                        kind: ParseErrorKind::UnbalancedParenthesis,
                        expected: vec!["`)`"],
                    }),
                    _ => {
                        let mut expected = BINARY.to_vec();
                        expected.push("`)`");
                        Err(self.unexpected(expected))
                    }
                }
            }
            Token::Maj => {
                self.bump();
                let args = self.call_args()?;
                if args.len() != 3 {
                    return Err(ParseError {
                        position: self.tokens[self.at - 1].pos,
                        kind: ParseErrorKind::UnexpectedToken("`)`".into()),
                        expected: vec!["exactly 3 arguments to `maj`"],
                    });
                }
                Ok(Formula::Apply(Connective::Maj, args))
            }
            Token::Nand | Token::Nor => {
                let kind = if *self.peek() == Token::Nand {
                    Connective::Nand
                } else {
                    Connective::Nor
                };
                self.bump();
                let args = self.call_args()?;
                if args.len() < 2 {
                    return Err(ParseError {
                        position: self.tokens[self.at - 1].pos,
                        kind: ParseErrorKind::UnexpectedToken("`)`".into()),
                        expected: vec!["`,`"],
                    });
                }
                Ok(Formula::Apply(kind, args))
            }
            Token::RParen => {
                Err(self.error_here(ParseErrorKind::UnbalancedParenthesis, OPERAND.to_vec()))
            }
            _ => Err(self.unexpected(OPERAND.to_vec())),
        }
    }

    /// `( formula (, formula)* )` after a function keyword.
    fn call_args(&mut self) -> Result<Vec<Formula>, ParseError> {
        if *self.peek() != Token::LParen {
            return Err(self.unexpected(vec!["`(`"]));
        }
        let open_pos = self.pos();
        self.bump();
        self.descend()?;
        let mut args = vec![self.iff()?];
        loop {
            match self.peek() {
                Token::Comma => {
                    self.bump();
                    args.push(self.iff()?);
                }
                Token::RParen => {
                    self.bump();
                    self.depth -= 1;
                    return Ok(args);
                }
                Token::End => {
                    return Err(ParseError {
                        position: open_pos,
                        kind: ParseErrorKind::UnbalancedParenthesis,
                        expected: vec!["`,`", "`)`"],
                    })
                }
                _ => {
                    let mut expected = BINARY.to_vec();
                    expected.extend(["`,`", "`)`"]);
                    return Err(self.unexpected(expected));
                }
            }
        }
    }
}

fn implication_kind(t: &Token) -> Option<Connective> {
    match t {
        Token::Implies => Some(Connective::Implies),
        Token::Converse => Some(Connective::ConverseImplies),
        Token::NonImplies => Some(Connective::NonImplies),
        Token::ConverseNon => Some(Connective::ConverseNonImplies),
        _ => None,
    }
}

/// Appends to the chain node built so far, or starts a new binary node when
/// `acc` did not come from this chain.
fn extend(acc: Formula, kind: Connective, rhs: Formula, open: bool) -> Formula {
    match acc {
        Formula::Apply(k, mut operands) if open && k == kind => {
            operands.push(rhs);
            Formula::Apply(k, operands)
        }
        other => Formula::Apply(kind, vec![other, rhs]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(name: &str) -> Formula {
        Formula::Var(name.to_string())
    }

    fn app(kind: Connective, ops: Vec<Formula>) -> Formula {
        Formula::Apply(kind, ops)
    }

    #[test]
    fn grammar_productions() {
        assert_eq!(
            parse("x & y").unwrap(),
            app(Connective::And, vec![v("x"), v("y")])
        );
        assert_eq!(
            parse("!(x | y)").unwrap(),
            Formula::not(app(Connective::Or, vec![v("x"), v("y")]))
        );
        assert_eq!(
            parse("maj(x, y, z)").unwrap(),
            app(Connective::Maj, vec![v("x"), v("y"), v("z")])
        );
    }

    #[test]
    fn precedence_ladder() {
        assert_eq!(
            parse("!x & y | z").unwrap(),
            app(
                Connective::Or,
                vec![
                    app(Connective::And, vec![Formula::not(v("x")), v("y")]),
                    v("z")
                ]
            )
        );
        assert_eq!(
            parse("a | b ^ c & d -> e <-> f0").unwrap(),
            app(
                Connective::Equiv,
                vec![
                    app(
                        Connective::Implies,
                        vec![
                            app(
                                Connective::Or,
                                vec![
                                    v("a"),
                                    app(
                                        Connective::Xor,
                                        vec![v("b"), app(Connective::And, vec![v("c"), v("d")])]
                                    )
                                ]
                            ),
                            v("e")
                        ]
                    ),
                    v("f0")
                ]
            )
        );
    }

    #[test]
    fn chains_flatten_but_groups_do_not() {
        assert_eq!(
            parse("a & b & c").unwrap(),
            app(Connective::And, vec![v("a"), v("b"), v("c")])
        );
        assert_eq!(
            parse("(a & b) & c").unwrap(),
            app(
                Connective::And,
                vec![app(Connective::And, vec![v("a"), v("b")]), v("c")]
            )
        );
        assert_eq!(
            parse("a nand b nand c").unwrap(),
            app(
                Connective::Nand,
                vec![app(Connective::Nand, vec![v("a"), v("b")]), v("c")]
            )
        );
        assert_eq!(
            parse("a nand b & c").unwrap(),
            app(
                Connective::And,
                vec![app(Connective::Nand, vec![v("a"), v("b")]), v("c")]
            )
        );
        assert_eq!(
            parse("nor(a, b, c)").unwrap(),
            app(Connective::Nor, vec![v("a"), v("b"), v("c")])
        );
    }

    #[test]
    fn unicode_input() {
        assert_eq!(parse("¬x ∧ y ⇒ z").unwrap(), parse("!x & y -> z").unwrap());
        assert_eq!(parse("x ≡ y").unwrap(), parse("x <-> y").unwrap());
    }

    #[test]
    fn implication_is_not_associative() {
        let err = parse("x -> y -> z").unwrap_err();
        assert_eq!(err.position, 8);
        assert!(parse("(x -> y) -> z").is_ok());
    }

    #[test]
    fn error_positions() {
        let err = parse("x &").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnexpectedEnd);
        assert_eq!(err.position, 4);
        assert!(err.expected.contains(&"identifier"));

        let err = parse("(x | y").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnbalancedParenthesis);
        assert_eq!(err.position, 1);

        let err = parse("x | y)").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnbalancedParenthesis);
        assert_eq!(err.position, 6);

        let err = parse("x + y").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnknownOperator("+".into()));

        assert_eq!(parse("   ").unwrap_err().kind, ParseErrorKind::EmptyInput);
        assert!(parse("maj(x, y)").is_err());
        assert!(parse("maj(x, y, z, w)").is_err());
        assert!(parse("nand(x)").is_err());
        assert!(parse("x y").is_err());
    }

    #[test]
    fn nesting_is_bounded() {
        let deep = format!(
            "{}x{}",
            "(".repeat(MAX_NESTING + 1),
            ")".repeat(MAX_NESTING + 1)
        );
        assert_eq!(parse(&deep).unwrap_err().kind, ParseErrorKind::TooDeep);
        let ok = format!("{}x{}", "(".repeat(MAX_NESTING), ")".repeat(MAX_NESTING));
        assert_eq!(parse(&ok).unwrap(), v("x"));
        assert_eq!(
            parse(&"!".repeat(MAX_NESTING + 1)).unwrap_err().kind,
            ParseErrorKind::TooDeep
        );
        let long_chain = vec!["x"; MAX_NESTING + 2].join(" <-> ");
        assert_eq!(
            parse(&long_chain).unwrap_err().kind,
            ParseErrorKind::TooDeep
        );
        let flat = vec!["x"; 10_000].join(" & ");
        assert!(parse(&flat).is_ok());
    }
}
