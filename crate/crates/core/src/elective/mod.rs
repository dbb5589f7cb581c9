//! Boole's elective functions as exact multilinear integer polynomials.
//!
//! A polynomial over `n` variables is a map from monomials (variable subsets)
//! to non-zero `i64` coefficients. Multiplication applies the index law
//! `x * x = x`, so every value stays multilinear. Arithmetic is checked;
//! overflow is an error, never a wrapped value.
//!
//! Polynomials that take values outside `{0, 1}` at some 0/1 point (for
//! example `x + y`) are ordinary values here. Interpretability is only
//! demanded when converting back to a truth vector.

mod lagrange;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::formula::{Connective, Formula, VariableOrder};
use crate::truthtable::{check_same_arity, Interpretation, TruthVector};
use crate::MAX_ARITY;

pub use lagrange::{integer_points, interpolate, lagrange_basis, LagrangeBasis, UnivariatePoly};

/// Largest arity a sparse polynomial can carry (one bit per variable).
pub const POLY_MAX_ARITY: usize = 63;

/// Monomial as a variable bit set: bit `k` is variable position `k`.
pub type Monomial = u64;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultilinearPoly {
    arity: usize,
    terms: BTreeMap<Monomial, i64>,
}

fn overflow(op: &'static str) -> Error {
    Error::Overflow(op)
}

fn check_poly_arity(arity: usize) -> Result<()> {
    if arity > POLY_MAX_ARITY {
        return Err(Error::ArityCapExceeded {
            arity,
            cap: POLY_MAX_ARITY,
        });
    }
    Ok(())
}

/// Maps a truth-table row (first variable = high bit) to a monomial mask.
fn row_to_mask(row: usize, arity: usize) -> Monomial {
    (0..arity)
        .filter(|&k| (row >> (arity - 1 - k)) & 1 == 1)
        .fold(0, |m, k| m | (1 << k))
}

fn mask_to_row(mask: Monomial, arity: usize) -> usize {
    (0..arity)
        .filter(|&k| (mask >> k) & 1 == 1)
        .fold(0, |r, k| r | (1 << (arity - 1 - k)))
}

fn positions(mask: Monomial) -> Vec<usize> {
    (0..64).filter(|&k| (mask >> k) & 1 == 1).collect()
}

impl MultilinearPoly {
    pub fn zero(arity: usize) -> MultilinearPoly {
        MultilinearPoly {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(arity: usize, c: i64) -> MultilinearPoly {
        let mut p = MultilinearPoly::zero(arity);
        if c != 0 {
            p.terms.insert(0, c);
        }
        p
    }

    /// The elective symbol for variable `position`.
    pub fn variable(arity: usize, position: usize) -> Result<MultilinearPoly> {
        check_poly_arity(arity)?;
        if position >= arity {
            return Err(Error::IndexOutOfRange {
                index: position.to_string(),
                bound: arity.to_string(),
            });
        }
        let mut p = MultilinearPoly::zero(arity);
        p.terms.insert(1 << position, 1);
        Ok(p)
    }

    /// Builds a polynomial from `(variable positions, coefficient)` pairs.
    /// Repeated positions inside one monomial collapse (`x*x = x`) and
    /// repeated monomials are summed.
    pub fn from_terms<I>(arity: usize, terms: I) -> Result<MultilinearPoly>
    where
        I: IntoIterator<Item = (Vec<usize>, i64)>,
    {
        check_poly_arity(arity)?;
        let mut p = MultilinearPoly::zero(arity);
        for (vars, c) in terms {
            let mut mask = 0;
            for k in vars {
                if k >= arity {
                    return Err(Error::IndexOutOfRange {
                        index: k.to_string(),
                        bound: arity.to_string(),
                    });
                }
                mask |= 1 << k;
            }
            p.accumulate(mask, c)?;
        }
        Ok(p)
    }

    fn accumulate(&mut self, mask: Monomial, c: i64) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        let slot = self.terms.entry(mask).or_insert(0);
        *slot = slot
            .checked_add(c)
            .ok_or_else(|| overflow("polynomial addition"))?;
        if *slot == 0 {
            self.terms.remove(&mask);
        }
        Ok(())
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of the monomial over `vars` (0 when absent).
    pub fn coefficient(&self, vars: &[usize]) -> i64 {
        let mask = vars
            .iter()
            .filter(|&&k| k < 64)
            .fold(0u64, |m, &k| m | (1 << k));
        self.terms.get(&mask).copied().unwrap_or(0)
    }

    /// Raw `(mask, coefficient)` pairs in mask order.
    pub fn terms(&self) -> impl Iterator<Item = (Monomial, i64)> + '_ {
        self.terms.iter().map(|(&m, &c)| (m, c))
    }

    /// Monomials as sorted variable lists, ordered by degree then
    /// lexicographically by position.
    pub fn monomials(&self) -> Vec<(Vec<usize>, i64)> {
        let mut out: Vec<(Vec<usize>, i64)> = self
            .terms
            .iter()
            .map(|(&m, &c)| (positions(m), c))
            .collect();
        out.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)));
        out
    }

    pub fn max_abs_coefficient(&self) -> u64 {
        self.terms
            .values()
            .map(|c| c.unsigned_abs())
            .max()
            .unwrap_or(0)
    }

    fn unify(&self, other: &MultilinearPoly) -> Result<usize> {
        match (self.arity, other.arity) {
            (a, b) if a == b => Ok(a),
            // arity-0 polynomials are constants and broadcast
            (0, b) => Ok(b),
            (a, 0) => Ok(a),
            (a, b) => Err(Error::ArityMismatch {
                expected: a,
                found: b,
            }),
        }
    }

    pub fn add(&self, other: &MultilinearPoly) -> Result<MultilinearPoly> {
        let arity = self.unify(other)?;
        let mut out = MultilinearPoly {
            arity,
            terms: self.terms.clone(),
        };
        for (&m, &c) in &other.terms {
            out.accumulate(m, c)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &MultilinearPoly) -> Result<MultilinearPoly> {
        self.add(&other.neg()?)
    }

    /// Product with the index law applied: monomials multiply by set union.
    pub fn mul(&self, other: &MultilinearPoly) -> Result<MultilinearPoly> {
        let arity = self.unify(other)?;
        let mut out = MultilinearPoly::zero(arity);
        for (&ma, &ca) in &self.terms {
            for (&mb, &cb) in &other.terms {
                let c = ca
                    .checked_mul(cb)
                    .ok_or_else(|| overflow("polynomial product"))?;
                out.accumulate(ma | mb, c)?;
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Result<MultilinearPoly> {
        self.scale(-1)
    }

    pub fn scale(&self, c: i64) -> Result<MultilinearPoly> {
        let mut out = MultilinearPoly::zero(self.arity);
        for (&m, &v) in &self.terms {
            out.accumulate(
                m,
                v.checked_mul(c)
                    .ok_or_else(|| overflow("polynomial scaling"))?,
            )?;
        }
        Ok(out)
    }

    /// `1 - p`.
    pub fn complement(&self) -> Result<MultilinearPoly> {
        MultilinearPoly::constant(self.arity, 1).sub(self)
    }

    /// Direct evaluation at a 0/1 point.
    pub fn eval(&self, itp: &Interpretation) -> Result<i64> {
        check_same_arity(self.arity, itp.arity())?;
        let point = itp
            .bits()
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .fold(0u64, |m, (k, _)| m | (1 << k));
        self.terms
            .iter()
            .filter(|(&m, _)| m & !point == 0)
            .try_fold(0i64, |acc, (_, &c)| {
                acc.checked_add(c)
                    .ok_or_else(|| overflow("polynomial evaluation"))
            })
    }

    /// Values at all `2^n` interpretations in truth-table row order, by a
    /// zeta (subset-sum) transform.
    pub fn evaluations(&self) -> Result<Vec<i64>> {
        let n = self.arity;
        if n > MAX_ARITY {
            return Err(Error::ArityCapExceeded {
                arity: n,
                cap: MAX_ARITY,
            });
        }
        let mut values = vec![0i64; 1 << n];
        for (&m, &c) in &self.terms {
            values[mask_to_row(m, n)] = c;
        }
        for bit in 0..n {
            let step = 1usize << bit;
            for row in 0..values.len() {
                if row & step != 0 {
                    values[row] = values[row]
                        .checked_add(values[row ^ step])
                        .ok_or_else(|| overflow("polynomial evaluation"))?;
                }
            }
        }
        Ok(values)
    }

    pub fn is_interpretable(&self) -> Result<bool> {
        Ok(self.evaluations()?.iter().all(|&v| v == 0 || v == 1))
    }

    /// The unique multilinear polynomial agreeing with `tv` on `{0,1}^n`,
    /// computed by a Möbius transform over the rows.
    pub fn from_truth_vector(tv: &TruthVector) -> Result<MultilinearPoly> {
        let n = tv.arity();
        let mut coeffs: Vec<i64> = tv.bits().iter().map(|&b| i64::from(b)).collect();
        for bit in 0..n {
            let step = 1usize << bit;
            for row in 0..coeffs.len() {
                if row & step != 0 {
                    coeffs[row] = coeffs[row]
                        .checked_sub(coeffs[row ^ step])
                        .ok_or_else(|| overflow("Möbius transform"))?;
                }
            }
        }
        let terms = coeffs
            .into_iter()
            .enumerate()
            .filter(|&(_, c)| c != 0)
            .map(|(row, c)| (row_to_mask(row, n), c))
            .collect();
        Ok(MultilinearPoly { arity: n, terms })
    }

    /// Values at every 0/1 point; fails on the first value outside `{0,1}`.
    pub fn to_truth_vector(&self) -> Result<TruthVector> {
        let values = self.evaluations()?;
        let mut bits = Vec::with_capacity(values.len());
        for (row, v) in values.into_iter().enumerate() {
            match v {
                0 => bits.push(false),
                1 => bits.push(true),
                value => {
                    let itp = Interpretation::from_row(self.arity, row)?;
                    return Err(Error::NotInterpretable {
                        interpretation: itp.to_string(),
                        value,
                    });
                }
            }
        }
        TruthVector::new(self.arity, bits)
    }

    /// Product over positions of `x_k` (bit set) or `1 - x_k`, expanded.
    pub fn minterm(itp: &Interpretation) -> Result<MultilinearPoly> {
        let n = itp.arity();
        check_poly_arity(n)?;
        let mut acc = MultilinearPoly::constant(n, 1);
        for (k, &bit) in itp.bits().iter().enumerate() {
            let x = MultilinearPoly::variable(n, k)?;
            let factor = if bit { x } else { x.complement()? };
            acc = acc.mul(&factor)?;
        }
        Ok(acc)
    }

    /// Sum of the minterms at the listed row indices. Minterms are pairwise
    /// orthogonal, so the plain integer sum is the disjunction.
    pub fn from_minterms(arity: usize, minterms: &[usize]) -> Result<MultilinearPoly> {
        check_poly_arity(arity)?;
        let unique: BTreeSet<usize> = minterms.iter().copied().collect();
        let mut acc = MultilinearPoly::zero(arity);
        for row in unique {
            if arity < usize::BITS as usize && row >> arity != 0 {
                return Err(Error::IndexOutOfRange {
                    index: row.to_string(),
                    bound: format!("2^{arity}"),
                });
            }
            acc = acc.add(&MultilinearPoly::minterm(&Interpretation::from_row(
                arity, row,
            )?)?)?;
        }
        Ok(acc)
    }

    /// Arithmetic expression of a connective over `n` distinct variables,
    /// built by recurrence rather than interpolation.
    pub fn connective(kind: Connective, n: usize) -> Result<MultilinearPoly> {
        let unsupported = || Error::UnsupportedConnective {
            kind: kind.name(),
            what: "polynomial",
            arity: n,
        };
        if !kind.accepts(n) {
            return Err(unsupported());
        }
        check_poly_arity(n)?;
        let vars: Vec<MultilinearPoly> = (0..n)
            .map(|k| MultilinearPoly::variable(n, k))
            .collect::<Result<_>>()?;
        match kind {
            Connective::And
            | Connective::Or
            | Connective::Xor
            | Connective::Nand
            | Connective::Nor
            | Connective::Maj => fold_connective(kind, &vars),
            _ => binary_connective(kind, &vars[0], &vars[1]),
        }
    }

    /// Compiles a formula through the arithmetic expressions of its
    /// connectives (`!a = 1 - a`, `a & b = ab`, `a | b = a + b - ab`, ...).
    pub fn from_formula(f: &Formula, order: &VariableOrder) -> Result<MultilinearPoly> {
        let n = order.len();
        check_poly_arity(n)?;
        match f {
            Formula::Const(b) => Ok(MultilinearPoly::constant(n, i64::from(*b))),
            Formula::Var(name) => {
                let k = order
                    .position(name)
                    .ok_or_else(|| Error::UnboundVariable(name.clone()))?;
                MultilinearPoly::variable(n, k)
            }
            Formula::Not(inner) => MultilinearPoly::from_formula(inner, order)?.complement(),
            Formula::Apply(kind, operands) => {
                f.validate()?;
                let ops: Vec<MultilinearPoly> = operands
                    .iter()
                    .map(|o| MultilinearPoly::from_formula(o, order))
                    .collect::<Result<_>>()?;
                match kind {
                    Connective::And
                    | Connective::Or
                    | Connective::Xor
                    | Connective::Nand
                    | Connective::Nor
                    | Connective::Maj => fold_connective(*kind, &ops),
                    _ => binary_connective(*kind, &ops[0], &ops[1]),
                }
            }
        }
    }

    /// Selects the cofactor `f(itp)` two ways: multiplying by the minterm of
    /// `itp` (which must leave `f(itp)` times that minterm) and evaluating
    /// directly. Disagreement is reported as an invariant violation.
    pub fn select_cofactor(&self, itp: &Interpretation) -> Result<i64> {
        check_same_arity(self.arity, itp.arity())?;
        let minterm = MultilinearPoly::minterm(itp)?;
        let direct = self.eval(itp)?;
        let selected = self.mul(&minterm)?;
        if selected != minterm.scale(direct)? {
            return Err(Error::InvariantViolated(format!(
                "cofactor selection at {itp} gave {selected}, expected {direct} times the minterm"
            )));
        }
        Ok(direct)
    }

    /// Renders with the given variable names.
    pub fn format_with(&self, names: &VariableOrder) -> String {
        let fallback;
        let names = if names.len() >= self.arity {
            names
        } else {
            fallback = VariableOrder::default_names(self.arity);
            &fallback
        };
        let monomials = self.monomials();
        if monomials.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (vars, c)) in monomials.iter().enumerate() {
            let magnitude = c.unsigned_abs();
            match (i, *c < 0) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let body = vars
                .iter()
                .map(|&k| names.names()[k].as_str())
                .collect::<Vec<_>>()
                .join("*");
            match (magnitude, body.is_empty()) {
                (m, true) => out.push_str(&m.to_string()),
                (1, false) => out.push_str(&body),
                (m, false) => {
                    out.push_str(&m.to_string());
                    out.push('*');
                    out.push_str(&body);
                }
            }
        }
        out
    }
}

fn fold_connective(kind: Connective, ops: &[MultilinearPoly]) -> Result<MultilinearPoly> {
    let arity = ops[0].arity;
    match kind {
        Connective::And => ops[1..]
            .iter()
            .try_fold(ops[0].clone(), |acc, p| acc.mul(p)),
        // OR_k = OR_{k-1} + x_k - OR_{k-1} x_k
        Connective::Or => ops[1..]
            .iter()
            .try_fold(ops[0].clone(), |acc, p| acc.add(p)?.sub(&acc.mul(p)?)),
        // XOR_k = XOR_{k-1} + x_k - 2 XOR_{k-1} x_k
        Connective::Xor => ops[1..].iter().try_fold(ops[0].clone(), |acc, p| {
            acc.add(p)?.sub(&acc.mul(p)?.scale(2)?)
        }),
        Connective::Nand => fold_connective(Connective::And, ops)?.complement(),
        Connective::Nor => fold_connective(Connective::Or, ops)?.complement(),
        Connective::Maj => {
            // xy + xz + yz - 2xyz
            let (x, y, z) = (&ops[0], &ops[1], &ops[2]);
            let xy = x.mul(y)?;
            xy.add(&x.mul(z)?)?
                .add(&y.mul(z)?)?
                .sub(&xy.mul(z)?.scale(2)?)
        }
        _ => Err(Error::UnsupportedConnective {
            kind: kind.name(),
            what: "k-ary polynomial",
            arity,
        }),
    }
}

fn binary_connective(
    kind: Connective,
    a: &MultilinearPoly,
    b: &MultilinearPoly,
) -> Result<MultilinearPoly> {
    let ab = a.mul(b)?;
    match kind {
        // 1 - a + ab
        Connective::Implies => a.complement()?.add(&ab),
        // 1 - b + ab
        Connective::ConverseImplies => b.complement()?.add(&ab),
        // a - ab
        Connective::NonImplies => a.sub(&ab),
        // b - ab
        Connective::ConverseNonImplies => b.sub(&ab),
        // 1 - a - b + 2ab
        Connective::Equiv => a.add(b)?.sub(&ab.scale(2)?)?.complement(),
        _ => fold_connective(kind, &[a.clone(), b.clone()]),
    }
}

/// Sum-of-minterms text with `(1-x)` factors, one term per model in row order.
pub fn format_canonical(tv: &TruthVector, names: &VariableOrder) -> String {
    let fallback;
    let names = if names.len() >= tv.arity() {
        names
    } else {
        fallback = VariableOrder::default_names(tv.arity());
        &fallback
    };
    let terms: Vec<String> = tv
        .minterms()
        .into_iter()
        .map(|row| {
            if tv.arity() == 0 {
                return "1".to_string();
            }
            (0..tv.arity())
                .map(|k| {
                    let name = &names.names()[k];
                    if (row >> (tv.arity() - 1 - k)) & 1 == 1 {
                        name.clone()
                    } else {
                        format!("(1-{name})")
                    }
                })
                .collect::<Vec<_>>()
                .join("*")
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

impl fmt::Display for MultilinearPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with(&VariableOrder::default_names(self.arity)))
    }
}
