use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Token {
    Ident(String),
    Const(bool),
    Not,
    And,
    Nand,
    Xor,
    Or,
    Nor,
    Implies,
    Converse,
    NonImplies,
    ConverseNon,
    Equiv,
    Maj,
    LParen,
    RParen,
    Comma,
    End,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Token::Ident(name) => return write!(f, "identifier `{name}`"),
            Token::Const(false) => "`0`",
            Token::Const(true) => "`1`",
            Token::Not => "`!`",
            Token::And => "`&`",
            Token::Nand => "`nand`",
            Token::Xor => "`^`",
            Token::Or => "`|`",
            Token::Nor => "`nor`",
            Token::Implies => "`->`",
            Token::Converse => "`<-`",
            Token::NonImplies => "`!->`",
            Token::ConverseNon => "`!<-`",
            Token::Equiv => "`<->`",
            Token::Maj => "`maj`",
            Token::LParen => "`(`",
            Token::RParen => "`)`",
            Token::Comma => "`,`",
            Token::End => "end of input",
        };
        f.write_str(s)
    }
}

/// A token and its 1-based character position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Spanned {
    pub token: Token,
    pub pos: usize,
}

/// Returns the offending text and its position for characters that start
/// no token.
pub(crate) fn tokenize(text: &str) -> Result<Vec<Spanned>, (String, usize)> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = i + 1;
        let next = |k: usize| chars.get(i + k).copied();
        let (token, width) = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '!' if next(1) == Some('-') && next(2) == Some('>') => (Token::NonImplies, 3),
            '!' if next(1) == Some('<') && next(2) == Some('-') => (Token::ConverseNon, 3),
            '!' | '¬' => (Token::Not, 1),
            '&' | '∧' => (Token::And, 1),
            '|' | '∨' => (Token::Or, 1),
            '^' | '⊕' => (Token::Xor, 1),
            '⇒' => (Token::Implies, 1),
            '⇐' => (Token::Converse, 1),
            '≡' => (Token::Equiv, 1),
            '(' => (Token::LParen, 1),
            ')' => (Token::RParen, 1),
            ',' => (Token::Comma, 1),
            '-' if next(1) == Some('>') => (Token::Implies, 2),
            '<' if next(1) == Some('-') && next(2) == Some('>') => (Token::Equiv, 3),
            '<' if next(1) == Some('-') => (Token::Converse, 2),
            '0' | '1' if !next(1).is_some_and(|d| d.is_ascii_alphanumeric() || d == '_') => {
                (Token::Const(c == '1'), 1)
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let len = chars[i..]
                    .iter()
                    .take_while(|d| d.is_ascii_alphanumeric() || **d == '_')
                    .count();
                let word: String = chars[i..i + len].iter().collect();
                let token = match word.as_str() {
                    "F" | "f" => Token::Const(false),
                    "T" | "t" => Token::Const(true),
                    "maj" => Token::Maj,
                    "nand" => Token::Nand,
                    "nor" => Token::Nor,
                    _ => Token::Ident(word),
                };
                (token, len)
            }
            _ => {
                let len = chars[i..]
                    .iter()
                    .take_while(|d| {
                        !d.is_whitespace() && !d.is_ascii_alphanumeric() && !"()_,".contains(**d)
                    })
                    .count()
                    .max(1);
                let bad: String = if c.is_ascii_digit() {
                    chars[i..]
                        .iter()
                        .take_while(|d| d.is_ascii_alphanumeric() || **d == '_')
                        .collect()
                } else {
                    chars[i..i + len].iter().collect()
                };
                return Err((bad, pos));
            }
        };
        out.push(Spanned { token, pos });
        i += width;
    }
    out.push(Spanned {
        token: Token::End,
        pos: chars.len() + 1,
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kinds(text: &str) -> Vec<Token> {
        tokenize(text)
            .unwrap()
            .into_iter()
            .map(|s| s.token)
            .collect()
    }

    #[test]
    fn longest_match_operators() {
        assert_eq!(
            kinds("a !-> b <-> c <- d !<- e"),
            vec![
                Token::Ident("a".into()),
                Token::NonImplies,
                Token::Ident("b".into()),
                Token::Equiv,
                Token::Ident("c".into()),
                Token::Converse,
                Token::Ident("d".into()),
                Token::ConverseNon,
                Token::Ident("e".into()),
                Token::End
            ]
        );
    }

    #[test]
    fn unicode_aliases() {
        assert_eq!(
            kinds("¬a ∧ b ∨ c ⊕ d ⇒ e ⇐ g ≡ h")
                .into_iter()
                .filter(|t| !matches!(t, Token::Ident(_)))
                .collect::<Vec<_>>(),
            vec![
                Token::Not,
                Token::And,
                Token::Or,
                Token::Xor,
                Token::Implies,
                Token::Converse,
                Token::Equiv,
                Token::End
            ]
        );
    }

    #[test]
    fn constants_and_keywords() {
        assert_eq!(
            kinds("0 1 F t maj nand nor nandx"),
            vec![
                Token::Const(false),
                Token::Const(true),
                Token::Const(false),
                Token::Const(true),
                Token::Maj,
                Token::Nand,
                Token::Nor,
                Token::Ident("nandx".into()),
                Token::End
            ]
        );
    }

    #[test]
    fn unknown_characters() {
        assert_eq!(tokenize("x + y"), Err(("+".to_string(), 3)));
        assert_eq!(tokenize("x - y"), Err(("-".to_string(), 3)));
        assert_eq!(tokenize("10"), Err(("10".to_string(), 1)));
        assert_eq!(tokenize("x @@ y"), Err(("@@".to_string(), 3)));
    }
}
