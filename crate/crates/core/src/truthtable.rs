//! Truth vectors and the function-index ordering.
//!
//! Row `k` of a truth vector holds the value at the interpretation whose bits
//! spell `k` with the first variable as the most significant bit, so `(1, 0)`
//! is row 2. The function index reads the vector the other way round: row 0
//! is the least significant digit, which makes OR over two arguments `f_14`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::formula::{Connective, Formula, VariableOrder};
use crate::{Limits, MAX_ARITY};

/// One truth value per variable, in variable-order position.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Interpretation(Vec<bool>);

impl Interpretation {
    pub fn new(bits: Vec<bool>) -> Interpretation {
        Interpretation(bits)
    }

    /// The interpretation sitting at truth-table row `row` for `arity` variables.
    pub fn from_row(arity: usize, row: usize) -> Result<Interpretation> {
        check_arity(arity, MAX_ARITY)?;
        if row >> arity != 0 {
            return Err(Error::IndexOutOfRange {
                index: row.to_string(),
                bound: (1usize << arity).to_string(),
            });
        }
        Ok(Interpretation(
            (0..arity)
                .map(|k| (row >> (arity - 1 - k)) & 1 == 1)
                .collect(),
        ))
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn get(&self, position: usize) -> bool {
        self.0[position]
    }

    /// Row index with position 0 as the most significant bit.
    /// Row of this interpretation, first variable most significant. Only
    /// meaningful for arities that fit in `usize`.
    pub fn row_index(&self) -> usize {
        self.0.iter().fold(0, |acc, &b| (acc << 1) | usize::from(b))
    }

    /// All `2^arity` interpretations in row order.
    pub fn all(arity: usize) -> impl Iterator<Item = Interpretation> {
        (0..1usize << arity).map(move |row| {
            Interpretation(
                (0..arity)
                    .map(|k| (row >> (arity - 1 - k)) & 1 == 1)
                    .collect(),
            )
        })
    }
}

impl fmt::Display for Interpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, &b) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(if b { "1" } else { "0" })?;
        }
        f.write_str(")")
    }
}

/// Parses a bit string such as `10` (first variable first).
impl FromStr for Interpretation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_bits(s.trim(), "assignment").map(Interpretation)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TruthVector {
    arity: usize,
    bits: Vec<bool>,
}

impl TruthVector {
    pub fn new(arity: usize, bits: Vec<bool>) -> Result<TruthVector> {
        check_arity(arity, MAX_ARITY)?;
        if bits.len() != 1 << arity {
            return Err(Error::invalid(
                "truth vector",
                format!(
                    "arity {arity} needs {} rows, got {}",
                    1usize << arity,
                    bits.len()
                ),
            ));
        }
        Ok(TruthVector { arity, bits })
    }

    pub fn from_fn(
        arity: usize,
        mut f: impl FnMut(&Interpretation) -> bool,
    ) -> Result<TruthVector> {
        check_arity(arity, MAX_ARITY)?;
        let bits = Interpretation::all(arity).map(|itp| f(&itp)).collect();
        Ok(TruthVector { arity, bits })
    }

    pub fn constant(arity: usize, value: bool) -> Result<TruthVector> {
        check_arity(arity, MAX_ARITY)?;
        Ok(TruthVector {
            arity,
            bits: vec![value; 1 << arity],
        })
    }

    /// The truth vector whose function index is `index`.
    pub fn from_index(arity: usize, index: &BigUint) -> Result<TruthVector> {
        check_arity(arity, MAX_ARITY)?;
        let rows = 1usize << arity;
        if index.bits() > rows as u64 {
            return Err(Error::IndexOutOfRange {
                index: index.to_string(),
                bound: format!("2^{rows}"),
            });
        }
        let bits = (0..rows as u64).map(|k| index.bit(k)).collect();
        Ok(TruthVector { arity, bits })
    }

    /// `sum_k bits[k] * 2^k`.
    pub fn function_index(&self) -> BigUint {
        let mut index = BigUint::zero();
        for (k, &b) in self.bits.iter().enumerate() {
            if b {
                index.set_bit(k as u64, true);
            }
        }
        index
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn get(&self, row: usize) -> bool {
        self.bits[row]
    }

    pub fn at(&self, itp: &Interpretation) -> Result<bool> {
        check_same_arity(self.arity, itp.arity())?;
        Ok(self.bits[itp.row_index()])
    }

    /// Number of true rows.
    pub fn weight(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn complement(&self) -> TruthVector {
        TruthVector {
            arity: self.arity,
            bits: self.bits.iter().map(|b| !b).collect(),
        }
    }

    /// Rows holding 1, i.e. the minterm indices.
    pub fn minterms(&self) -> Vec<usize> {
        self.bits
            .iter()
            .enumerate()
            .filter_map(|(k, &b)| b.then_some(k))
            .collect()
    }

    /// Sum-of-minterms formula over `order`; `F` when the vector has no models.
    pub fn to_formula(&self, order: &VariableOrder) -> Result<Formula> {
        check_same_arity(self.arity, order.len())?;
        let minterm = |row: usize| -> Formula {
            let literals: Vec<Formula> = Interpretation::from_row(self.arity, row)
                .expect("row below 2^arity")
                .bits()
                .iter()
                .zip(order.names())
                .map(|(&b, name)| {
                    let v = Formula::Var(name.clone());
                    if b {
                        v
                    } else {
                        Formula::not(v)
                    }
                })
                .collect();
            match literals.len() {
                0 => Formula::Const(true),
                1 => literals.into_iter().next().expect("one literal"),
                _ => Formula::Apply(Connective::And, literals),
            }
        };
        let mut terms: Vec<Formula> = self.minterms().into_iter().map(minterm).collect();
        Ok(match terms.len() {
            0 => Formula::Const(false),
            1 => terms.pop().expect("one term"),
            _ => Formula::Apply(Connective::Or, terms),
        })
    }

    /// Every truth vector of the given arity in function-index order.
    pub fn enumerate(arity: usize) -> Result<impl Iterator<Item = TruthVector>> {
        if arity > 4 {
            return Err(Error::ArityCapExceeded { arity, cap: 4 });
        }
        let rows = 1usize << arity;
        Ok((0..1u64 << rows).map(move |index| TruthVector {
            arity,
            bits: (0..rows).map(|k| (index >> k) & 1 == 1).collect(),
        }))
    }
}

/// Left-to-right bit string starting at row 0, e.g. `0111` for OR.
impl fmt::Display for TruthVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for TruthVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = parse_bits(s.trim(), "truth vector")?;
        if !bits.len().is_power_of_two() {
            return Err(Error::invalid(
                "truth vector",
                format!("length {} is not a power of two", bits.len()),
            ));
        }
        let arity = bits.len().trailing_zeros() as usize;
        TruthVector::new(arity, bits)
    }
}

fn parse_bits(s: &str, what: &'static str) -> Result<Vec<bool>> {
    s.chars()
        .enumerate()
        .map(|(i, c)| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            other => Err(Error::invalid(
                what,
                format!("character {other:?} at position {} is not 0 or 1", i + 1),
            )),
        })
        .collect()
}

pub(crate) fn check_arity(arity: usize, cap: usize) -> Result<()> {
    if arity > cap {
        return Err(Error::ArityCapExceeded { arity, cap });
    }
    Ok(())
}

pub(crate) fn check_same_arity(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::ArityMismatch { expected, found });
    }
    Ok(())
}

/// A formula with variable names resolved to order positions.
enum Compiled {
    Const(bool),
    Var(usize),
    Not(Box<Compiled>),
    Apply(Connective, Vec<Compiled>),
}

impl Compiled {
    fn new(f: &Formula, order: &VariableOrder) -> Result<Compiled> {
        Ok(match f {
            Formula::Const(b) => Compiled::Const(*b),
            Formula::Var(name) => Compiled::Var(
                order
                    .position(name)
                    .ok_or_else(|| Error::UnboundVariable(name.clone()))?,
            ),
            Formula::Not(inner) => Compiled::Not(Box::new(Compiled::new(inner, order)?)),
            Formula::Apply(kind, operands) => {
                if !kind.accepts(operands.len()) {
                    f.validate()?;
                }
                Compiled::Apply(
                    *kind,
                    operands
                        .iter()
                        .map(|o| Compiled::new(o, order))
                        .collect::<Result<_>>()?,
                )
            }
        })
    }

    fn eval(&self, row: &[bool]) -> bool {
        match self {
            Compiled::Const(b) => *b,
            Compiled::Var(k) => row[*k],
            Compiled::Not(inner) => !inner.eval(row),
            Compiled::Apply(kind, ops) => match kind {
                Connective::And => ops.iter().all(|o| o.eval(row)),
                Connective::Or => ops.iter().any(|o| o.eval(row)),
                Connective::Xor => ops.iter().fold(false, |acc, o| acc ^ o.eval(row)),
                Connective::Nand => !ops.iter().all(|o| o.eval(row)),
                Connective::Nor => !ops.iter().any(|o| o.eval(row)),
                Connective::Implies => !ops[0].eval(row) || ops[1].eval(row),
                Connective::ConverseImplies => ops[0].eval(row) || !ops[1].eval(row),
                Connective::NonImplies => ops[0].eval(row) && !ops[1].eval(row),
                Connective::ConverseNonImplies => !ops[0].eval(row) && ops[1].eval(row),
                Connective::Equiv => ops[0].eval(row) == ops[1].eval(row),
                Connective::Maj => ops.iter().filter(|o| o.eval(row)).count() * 2 > ops.len(),
            },
        }
    }
}

/// Classical truth value of `f` at `itp`.
pub fn eval(f: &Formula, order: &VariableOrder, itp: &Interpretation) -> Result<bool> {
    check_same_arity(order.len(), itp.arity())?;
    Ok(Compiled::new(f, order)?.eval(itp.bits()))
}

pub fn truth_vector(f: &Formula, order: &VariableOrder) -> Result<TruthVector> {
    truth_vector_with(f, order, &Limits::default())
}

pub fn truth_vector_with(
    f: &Formula,
    order: &VariableOrder,
    limits: &Limits,
) -> Result<TruthVector> {
    let n = order.len();
    check_arity(n, limits.arity_cap.min(MAX_ARITY))?;
    let compiled = Compiled::new(f, order)?;
    let mut row = vec![false; n];
    let bits = (0..1usize << n)
        .map(|r| {
            for (k, slot) in row.iter_mut().enumerate() {
                *slot = (r >> (n - 1 - k)) & 1 == 1;
            }
            compiled.eval(&row)
        })
        .collect();
    Ok(TruthVector { arity: n, bits })
}

/// Truth vector of `kind` applied to `n` distinct variables.
pub fn connective_truth_vector(kind: Connective, n: usize) -> Result<TruthVector> {
    if !kind.accepts(n) {
        return Err(Error::UnsupportedConnective {
            kind: kind.name(),
            what: "truth table",
            arity: n,
        });
    }
    TruthVector::from_fn(n, |itp| kind.apply(itp.bits()))
}
