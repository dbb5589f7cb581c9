//! Propositional formula syntax trees and their text form.
//!
//! The concrete syntax, tightest binding first:
//!
//! | level | operators                      | associativity          |
//! |-------|--------------------------------|------------------------|
//! | 6     | `!`                            | prefix                 |
//! | 5     | `&`, `nand`                    | left, `&` flattened    |
//! | 4     | `^`                            | left, flattened        |
//! | 3     | `\|`, `nor`                    | left, `\|` flattened   |
//! | 2     | `->`, `<-`, `!->`, `!<-`       | none                   |
//! | 1     | `<->`                          | left                   |
//!
//! Constants are `0`/`F` and `1`/`T` (`f`/`t` also accepted). The majority
//! function only exists as `maj(a, b, c)`. `nand(a, b, ...)` and
//! `nor(a, b, ...)` function forms denote the k-ary negated connectives.

mod lexer;
mod parser;
mod print;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use parser::{parse, ParseError, ParseErrorKind};

/// Keywords that can never be variable names.
pub const RESERVED: &[&str] = &["F", "T", "f", "t", "maj", "nand", "nor"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Connective {
    And,
    Or,
    Xor,
    Nand,
    Nor,
    /// `a -> b`
    Implies,
    /// `a <- b`, i.e. `b -> a`
    ConverseImplies,
    /// `a !-> b`, i.e. `a & !b`
    NonImplies,
    /// `a !<- b`, i.e. `!a & b`
    ConverseNonImplies,
    Equiv,
    Maj,
}

impl Connective {
    pub const ALL: [Connective; 11] = [
        Connective::And,
        Connective::Or,
        Connective::Xor,
        Connective::Nand,
        Connective::Nor,
        Connective::Implies,
        Connective::ConverseImplies,
        Connective::NonImplies,
        Connective::ConverseNonImplies,
        Connective::Equiv,
        Connective::Maj,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Connective::And => "AND",
            Connective::Or => "OR",
            Connective::Xor => "XOR",
            Connective::Nand => "NAND",
            Connective::Nor => "NOR",
            Connective::Implies => "IMPLIES",
            Connective::ConverseImplies => "CONVERSE-IMPLIES",
            Connective::NonImplies => "NON-IMPLIES",
            Connective::ConverseNonImplies => "CONVERSE-NON-IMPLIES",
            Connective::Equiv => "EQUIV",
            Connective::Maj => "MAJ",
        }
    }

    /// Infix spelling; `maj` has none.
    pub fn symbol(self) -> Option<&'static str> {
        match self {
            Connective::And => Some("&"),
            Connective::Or => Some("|"),
            Connective::Xor => Some("^"),
            Connective::Nand => Some("nand"),
            Connective::Nor => Some("nor"),
            Connective::Implies => Some("->"),
            Connective::ConverseImplies => Some("<-"),
            Connective::NonImplies => Some("!->"),
            Connective::ConverseNonImplies => Some("!<-"),
            Connective::Equiv => Some("<->"),
            Connective::Maj => None,
        }
    }

    pub fn accepts(self, operands: usize) -> bool {
        match self {
            Connective::And
            | Connective::Or
            | Connective::Xor
            | Connective::Nand
            | Connective::Nor => operands >= 2,
            Connective::Implies
            | Connective::ConverseImplies
            | Connective::NonImplies
            | Connective::ConverseNonImplies
            | Connective::Equiv => operands == 2,
            Connective::Maj => operands == 3,
        }
    }

    fn operand_rule(self) -> &'static str {
        match self {
            Connective::Maj => "exactly 3",
            Connective::And
            | Connective::Or
            | Connective::Xor
            | Connective::Nand
            | Connective::Nor => "at least 2",
            _ => "exactly 2",
        }
    }

    /// Truth function on already evaluated operands. The caller guarantees
    /// the operand count satisfies [`Connective::accepts`].
    pub fn apply(self, args: &[bool]) -> bool {
        match self {
            Connective::And => args.iter().all(|&b| b),
            Connective::Or => args.iter().any(|&b| b),
            Connective::Xor => args.iter().filter(|&&b| b).count() % 2 == 1,
            Connective::Nand => !args.iter().all(|&b| b),
            Connective::Nor => !args.iter().any(|&b| b),
            Connective::Implies => !args[0] || args[1],
            Connective::ConverseImplies => args[0] || !args[1],
            Connective::NonImplies => args[0] && !args[1],
            Connective::ConverseNonImplies => !args[0] && args[1],
            Connective::Equiv => args[0] == args[1],
            Connective::Maj => args.iter().filter(|&&b| b).count() * 2 > args.len(),
        }
    }
}

impl fmt::Display for Connective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Formula {
    Const(bool),
    Var(String),
    Not(Box<Formula>),
    Apply(Connective, Vec<Formula>),
}

impl Formula {
    pub fn var(name: impl Into<String>) -> Result<Formula> {
        let name = name.into();
        if !is_identifier(&name) {
            return Err(Error::InvalidVariableName(name));
        }
        Ok(Formula::Var(name))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn apply(kind: Connective, operands: Vec<Formula>) -> Result<Formula> {
        if !kind.accepts(operands.len()) {
            return Err(Error::OperandCount {
                kind: kind.name(),
                expected: kind.operand_rule(),
                found: operands.len(),
            });
        }
        Ok(Formula::Apply(kind, operands))
    }

    /// Checks operand counts and variable names over the whole tree.
    pub fn validate(&self) -> Result<()> {
        match self {
            Formula::Const(_) => Ok(()),
            Formula::Var(name) if is_identifier(name) => Ok(()),
            Formula::Var(name) => Err(Error::InvalidVariableName(name.clone())),
            Formula::Not(inner) => inner.validate(),
            Formula::Apply(kind, operands) => {
                if !kind.accepts(operands.len()) {
                    return Err(Error::OperandCount {
                        kind: kind.name(),
                        expected: kind.operand_rule(),
                        found: operands.len(),
                    });
                }
                operands.iter().try_for_each(Formula::validate)
            }
        }
    }

    /// Distinct variable names in order of first occurrence (pre-order, left to right).
    pub fn variables(&self) -> VariableOrder {
        fn walk<'a>(f: &'a Formula, seen: &mut Vec<&'a str>) {
            match f {
                Formula::Const(_) => {}
                Formula::Var(name) => {
                    if !seen.contains(&name.as_str()) {
                        seen.push(name);
                    }
                }
                Formula::Not(inner) => walk(inner, seen),
                Formula::Apply(_, operands) => operands.iter().for_each(|o| walk(o, seen)),
            }
        }
        let mut seen = Vec::new();
        walk(self, &mut seen);
        VariableOrder(seen.into_iter().map(str::to_owned).collect())
    }

    pub fn depth(&self) -> usize {
        match self {
            Formula::Const(_) | Formula::Var(_) => 1,
            Formula::Not(inner) => 1 + inner.depth(),
            Formula::Apply(_, operands) => {
                1 + operands.iter().map(Formula::depth).max().unwrap_or(0)
            }
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print::format(self))
    }
}

impl std::str::FromStr for Formula {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        parse(s)
    }
}

/// Canonical infix text with the minimum parentheses the grammar needs.
pub fn format(f: &Formula) -> String {
    print::format(f)
}

pub fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    let head_ok = matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_');
    head_ok && chars.all(|c| c.is_ascii_alphanumeric() || c == '_') && !RESERVED.contains(&name)
}

/// Ordered, duplicate-free variable names. Position 0 is the most
/// significant argument: the leftmost Kronecker factor and the high bit of
/// a truth-table row index.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VariableOrder(Vec<String>);

impl VariableOrder {
    pub fn new<I, S>(names: I) -> Result<VariableOrder>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut out: Vec<String> = Vec::new();
        for name in names {
            let name = name.into();
            if !is_identifier(&name) {
                return Err(Error::InvalidVariableName(name));
            }
            if out.contains(&name) {
                return Err(Error::DuplicateVariable(name));
            }
            out.push(name);
        }
        Ok(VariableOrder(out))
    }

    /// Parses a comma separated list such as `x,y,z`.
    pub fn parse_list(text: &str) -> Result<VariableOrder> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(VariableOrder::default());
        }
        VariableOrder::new(text.split(',').map(str::trim))
    }

    /// `x, y, z` for up to three arguments, `x, y, z, r` for four, else `x1 .. xn`.
    pub fn default_names(n: usize) -> VariableOrder {
        let names: Vec<String> = match n {
            0..=3 => ["x", "y", "z"][..n].iter().map(|s| s.to_string()).collect(),
            4 => ["x", "y", "z", "r"].iter().map(|s| s.to_string()).collect(),
            _ => (1..=n).map(|i| format!("x{i}")).collect(),
        };
        VariableOrder(names)
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    /// Appends the variables of `other` that are not present yet.
    pub fn extend_with(&mut self, other: &VariableOrder) {
        for name in &other.0 {
            if !self.0.contains(name) {
                self.0.push(name.clone());
            }
        }
    }
}

impl fmt::Display for VariableOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.join(","))
    }
}
