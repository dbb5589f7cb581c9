//! Diagonal logical observables.
//!
//! Every operator of the family is diagonal in the canonical interpretation
//! basis, so an operator is stored as its `2^n` diagonal entries. Explicit
//! matrices ([`DenseMatrix`]) exist for display and for checking the
//! commutation and Kronecker identities literally at small arity.

use std::fmt;
use std::ops::Deref;

use serde::Serialize;

use crate::elective::MultilinearPoly;
use crate::error::{Error, Result};
use crate::truthtable::{check_arity, check_same_arity, Interpretation, TruthVector};
use crate::{Limits, MAX_ARITY};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct DiagonalOperator {
    arity: usize,
    diag: Vec<i64>,
}

/// A diagonal operator whose entries are all 0 or 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct LogicalObservable(DiagonalOperator);

fn overflow(op: &'static str) -> Error {
    Error::Overflow(op)
}

impl DiagonalOperator {
    pub fn new(arity: usize, diag: Vec<i64>) -> Result<DiagonalOperator> {
        check_arity(arity, MAX_ARITY)?;
        if diag.len() != 1 << arity {
            return Err(Error::invalid(
                "diagonal",
                format!(
                    "arity {arity} needs {} entries, got {}",
                    1usize << arity,
                    diag.len()
                ),
            ));
        }
        Ok(DiagonalOperator { arity, diag })
    }

    pub fn identity(arity: usize) -> Result<DiagonalOperator> {
        check_arity(arity, MAX_ARITY)?;
        Ok(DiagonalOperator {
            arity,
            diag: vec![1; 1 << arity],
        })
    }

    pub fn zero(arity: usize) -> Result<DiagonalOperator> {
        check_arity(arity, MAX_ARITY)?;
        Ok(DiagonalOperator {
            arity,
            diag: vec![0; 1 << arity],
        })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    pub fn diagonal(&self) -> &[i64] {
        &self.diag
    }

    pub fn entry(&self, itp: &Interpretation) -> Result<i64> {
        check_same_arity(self.arity, itp.arity())?;
        Ok(self.diag[itp.row_index()])
    }

    /// Kronecker product: the left factor indexes the high block, so entry
    /// `i * 2^m + j` is `self[i] * other[j]`.
    pub fn kron(&self, other: &DiagonalOperator) -> Result<DiagonalOperator> {
        let arity = self.arity + other.arity;
        check_arity(arity, MAX_ARITY)?;
        let mut diag = Vec::with_capacity(1 << arity);
        for &a in &self.diag {
            for &b in &other.diag {
                diag.push(
                    a.checked_mul(b)
                        .ok_or_else(|| overflow("Kronecker product"))?,
                );
            }
        }
        Ok(DiagonalOperator { arity, diag })
    }

    fn zip_with(
        &self,
        other: &DiagonalOperator,
        op: &'static str,
        f: impl Fn(i64, i64) -> Option<i64>,
    ) -> Result<DiagonalOperator> {
        check_same_arity(self.arity, other.arity)?;
        let diag = self
            .diag
            .iter()
            .zip(&other.diag)
            .map(|(&a, &b)| f(a, b).ok_or_else(|| overflow(op)))
            .collect::<Result<_>>()?;
        Ok(DiagonalOperator {
            arity: self.arity,
            diag,
        })
    }

    /// Matrix product; for diagonal operators this is entrywise.
    pub fn product(&self, other: &DiagonalOperator) -> Result<DiagonalOperator> {
        self.zip_with(other, "operator product", i64::checked_mul)
    }

    pub fn sum(&self, other: &DiagonalOperator) -> Result<DiagonalOperator> {
        self.zip_with(other, "operator sum", i64::checked_add)
    }

    pub fn difference(&self, other: &DiagonalOperator) -> Result<DiagonalOperator> {
        self.zip_with(other, "operator difference", i64::checked_sub)
    }

    pub fn scale(&self, c: i64) -> Result<DiagonalOperator> {
        let diag = self
            .diag
            .iter()
            .map(|&a| a.checked_mul(c).ok_or_else(|| overflow("operator scaling")))
            .collect::<Result<_>>()?;
        Ok(DiagonalOperator {
            arity: self.arity,
            diag,
        })
    }

    /// `I - self`.
    pub fn complement(&self) -> Result<DiagonalOperator> {
        DiagonalOperator::identity(self.arity)?.difference(self)
    }

    pub fn trace(&self) -> Result<i64> {
        self.diag.iter().try_fold(0i64, |acc, &a| {
            acc.checked_add(a).ok_or_else(|| overflow("trace"))
        })
    }

    /// Idempotent, i.e. every entry is 0 or 1.
    pub fn is_projector(&self) -> bool {
        self.diag.iter().all(|&a| a == 0 || a == 1)
    }

    pub fn is_zero(&self) -> bool {
        self.diag.iter().all(|&a| a == 0)
    }

    pub fn to_observable(&self) -> Result<LogicalObservable> {
        LogicalObservable::try_from(self.clone())
    }

    pub fn dense(&self) -> Result<DenseMatrix> {
        self.dense_with(&Limits::default())
    }

    pub fn dense_with(&self, limits: &Limits) -> Result<DenseMatrix> {
        if self.arity > limits.dense_cap {
            return Err(Error::DenseCapExceeded {
                arity: self.arity,
                cap: limits.dense_cap,
            });
        }
        Ok(DenseMatrix::from_diagonal(&self.diag))
    }
}

impl fmt::Display for DiagonalOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("diag(")?;
        for (i, a) in self.diag.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str(")")
    }
}

impl LogicalObservable {
    pub fn operator(&self) -> &DiagonalOperator {
        &self.0
    }

    pub fn into_operator(self) -> DiagonalOperator {
        self.0
    }

    /// The diagonal read as bits: the truth vector of the proposition.
    pub fn truth_vector(&self) -> TruthVector {
        TruthVector::new(self.0.arity, self.0.diag.iter().map(|&a| a == 1).collect())
            .expect("observable diagonal has 2^n entries")
    }

    /// All `2^(2^n)` observables of arity `n`, in function-index order.
    pub fn enumerate(arity: usize) -> Result<Vec<LogicalObservable>> {
        Ok(TruthVector::enumerate(arity)?
            .map(|tv| from_truth_vector(&tv))
            .collect())
    }
}

impl Deref for LogicalObservable {
    type Target = DiagonalOperator;

    fn deref(&self) -> &DiagonalOperator {
        &self.0
    }
}

impl TryFrom<DiagonalOperator> for LogicalObservable {
    type Error = Error;

    fn try_from(op: DiagonalOperator) -> Result<LogicalObservable> {
        if let Some((row, &value)) = op.diag.iter().enumerate().find(|(_, &a)| a != 0 && a != 1) {
            return Err(Error::NotProjector { row, value });
        }
        Ok(LogicalObservable(op))
    }
}

impl fmt::Display for LogicalObservable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The 2x2 seed projector `diag(0, 1)`.
pub fn seed() -> LogicalObservable {
    LogicalObservable(DiagonalOperator {
        arity: 1,
        diag: vec![0, 1],
    })
}

/// Kronecker product over the bits of `itp`: the seed where a bit is 1 and
/// its complement where it is 0. The single unit entry sits at the row of
/// `itp`.
pub fn rank1_projector(itp: &Interpretation) -> Result<LogicalObservable> {
    check_arity(itp.arity(), MAX_ARITY)?;
    let seed = seed().into_operator();
    let anti = seed.complement()?;
    let mut acc = DiagonalOperator::identity(0)?;
    for &bit in itp.bits() {
        acc = acc.kron(if bit { &seed } else { &anti })?;
    }
    Ok(LogicalObservable(acc))
}

/// `I ⊗ .. ⊗ seed ⊗ .. ⊗ I` with the seed at `position`: the observable of
/// the atomic proposition at that position.
pub fn logical_projector(arity: usize, position: usize) -> Result<LogicalObservable> {
    if position >= arity {
        return Err(Error::IndexOutOfRange {
            index: position.to_string(),
            bound: arity.to_string(),
        });
    }
    check_arity(arity, MAX_ARITY)?;
    let left = DiagonalOperator::identity(position)?;
    let right = DiagonalOperator::identity(arity - position - 1)?;
    Ok(LogicalObservable(left.kron(&seed())?.kron(&right)?))
}

/// The observable whose eigenvalues are `tv`; equal to the sum of the
/// rank-1 projectors of its models.
pub fn from_truth_vector(tv: &TruthVector) -> LogicalObservable {
    LogicalObservable(DiagonalOperator {
        arity: tv.arity(),
        diag: tv.bits().iter().map(|&b| i64::from(b)).collect(),
    })
}

/// Substitutes the logical projector of variable `k` for `x_k` and evaluates
/// the polynomial with operator arithmetic.
pub fn lift_polynomial(p: &MultilinearPoly) -> Result<DiagonalOperator> {
    lift_polynomial_with(p, &Limits::default())
}

pub fn lift_polynomial_with(p: &MultilinearPoly, limits: &Limits) -> Result<DiagonalOperator> {
    let n = p.arity();
    check_arity(n, limits.arity_cap.min(MAX_ARITY))?;
    let projectors: Vec<LogicalObservable> = (0..n)
        .map(|k| logical_projector(n, k))
        .collect::<Result<_>>()?;
    let mut acc = DiagonalOperator::zero(n)?;
    for (vars, c) in p.monomials() {
        let mut term = DiagonalOperator::identity(n)?;
        for k in vars {
            term = term.product(&projectors[k])?;
        }
        acc = acc.sum(&term.scale(c)?)?;
    }
    Ok(acc)
}

/// `trace(f · Π_itp)`: the eigenvalue of `f` on the interpretation `itp`.
pub fn trace_select(f: &DiagonalOperator, itp: &Interpretation) -> Result<i64> {
    check_same_arity(f.arity(), itp.arity())?;
    f.product(rank1_projector(itp)?.operator())?.trace()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VonNeumannReport {
    pub commute: bool,
    pub product_is_projector: bool,
    pub sum_is_projector: bool,
    pub difference_is_projector: bool,
}

/// Checks the three projector-closure rules for a pair of projectors:
/// `pq` is a projector iff they commute, `p + q` iff `pq = 0` (or `qp = 0`),
/// `p - q` iff `pq = q` (or `qp = q`). Each equivalence is checked in both
/// directions; a violation is an error.
pub fn von_neumann_check(p: &LogicalObservable, q: &LogicalObservable) -> Result<VonNeumannReport> {
    check_same_arity(p.arity(), q.arity())?;
    let limits = Limits::default();
    let commute = if p.arity() <= limits.dense_cap {
        let (dp, dq) = (p.dense()?, q.dense()?);
        dp.mul(&dq)? == dq.mul(&dp)?
    } else {
        p.product(q)? == q.product(p)?
    };
    let pq = p.product(q)?;
    let qp = q.product(p)?;
    let report = VonNeumannReport {
        commute,
        product_is_projector: pq.is_projector(),
        sum_is_projector: p.sum(q)?.is_projector(),
        difference_is_projector: p.difference(q)?.is_projector(),
    };
    let rules = [
        ("product", report.product_is_projector, commute),
        ("sum", report.sum_is_projector, pq.is_zero() || qp.is_zero()),
        (
            "difference",
            report.difference_is_projector,
            pq == *q.operator() || qp == *q.operator(),
        ),
    ];
    for (name, observed, predicted) in rules {
        if observed != predicted {
            return Err(Error::InvariantViolated(format!(
                "{name} rule: projector = {observed}, condition = {predicted} for {p} and {q}"
            )));
        }
    }
    Ok(report)
}

/// Checks `(p ⊗ q)(r ⊗ s) = (pr) ⊗ (qs)` on diagonals and, within the dense
/// cap, on explicit matrices.
pub fn kron_mixed_product_check(
    p: &DiagonalOperator,
    q: &DiagonalOperator,
    r: &DiagonalOperator,
    s: &DiagonalOperator,
) -> Result<bool> {
    check_same_arity(p.arity(), r.arity())?;
    check_same_arity(q.arity(), s.arity())?;
    let lhs = p.kron(q)?.product(&r.kron(s)?)?;
    let rhs = p.product(r)?.kron(&q.product(s)?)?;
    if lhs != rhs {
        return Err(Error::InvariantViolated(format!(
            "mixed product: {lhs} != {rhs}"
        )));
    }
    if lhs.arity() <= Limits::default().dense_cap {
        let dense_lhs = p
            .dense()?
            .kron(&q.dense()?)?
            .mul(&r.dense()?.kron(&s.dense()?)?)?;
        let dense_rhs = p
            .dense()?
            .mul(&r.dense()?)?
            .kron(&q.dense()?.mul(&s.dense()?)?)?;
        if dense_lhs != dense_rhs || dense_lhs != lhs.dense()? {
            return Err(Error::InvariantViolated(
                "mixed product disagrees on dense matrices".to_string(),
            ));
        }
    }
    Ok(true)
}

/// Square integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DenseMatrix {
    dim: usize,
    data: Vec<i64>,
}

impl DenseMatrix {
    pub fn from_diagonal(diag: &[i64]) -> DenseMatrix {
        let dim = diag.len();
        let mut data = vec![0; dim * dim];
        for (i, &a) in diag.iter().enumerate() {
            data[i * dim + i] = a;
        }
        DenseMatrix { dim, data }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<DenseMatrix> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::invalid("matrix", "rows must form a square"));
        }
        Ok(DenseMatrix {
            dim,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.data[row * self.dim + col]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.data
            .chunks(self.dim.max(1))
            .map(<[i64]>::to_vec)
            .collect()
    }

    pub fn mul(&self, other: &DenseMatrix) -> Result<DenseMatrix> {
        if self.dim != other.dim {
            return Err(Error::ArityMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        let n = self.dim;
        let mut data = vec![0i64; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let prod = a
                        .checked_mul(other.data[k * n + j])
                        .ok_or_else(|| overflow("matrix product"))?;
                    data[i * n + j] = data[i * n + j]
                        .checked_add(prod)
                        .ok_or_else(|| overflow("matrix product"))?;
                }
            }
        }
        Ok(DenseMatrix { dim: n, data })
    }

    pub fn kron(&self, other: &DenseMatrix) -> Result<DenseMatrix> {
        let (n, m) = (self.dim, other.dim);
        let dim = n * m;
        let mut data = vec![0i64; dim * dim];
        for i in 0..n {
            for j in 0..n {
                let a = self.data[i * n + j];
                for k in 0..m {
                    for l in 0..m {
                        data[(i * m + k) * dim + (j * m + l)] = a
                            .checked_mul(other.data[k * m + l])
                            .ok_or_else(|| overflow("Kronecker product"))?;
                    }
                }
            }
        }
        Ok(DenseMatrix { dim, data })
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| i == j || self.get(i, j) == 0))
    }

    pub fn diagonal(&self) -> Vec<i64> {
        (0..self.dim).map(|i| self.get(i, i)).collect()
    }
}

impl fmt::Display for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .data
            .iter()
            .map(|a| a.to_string().len())
            .max()
            .unwrap_or(1);
        for (r, row) in self.rows().iter().enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|a| format!("{a:>width$}")).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(values: &[i64]) -> DiagonalOperator {
        DiagonalOperator::new(values.len().trailing_zeros() as usize, values.to_vec()).unwrap()
    }

    fn itp(bits: &str) -> Interpretation {
        bits.parse().unwrap()
    }

    fn id(n: usize) -> DiagonalOperator {
        DiagonalOperator::identity(n).unwrap()
    }

    #[test]
    fn seed_and_complement() {
        assert_eq!(seed().diagonal(), [0, 1]);
        assert_eq!(seed().complement().unwrap().diagonal(), [1, 0]);
        assert_eq!(seed().product(&seed()).unwrap(), *seed().operator());
    }

    #[test]
    fn kron_examples() {
        let pi = seed().into_operator();
        assert_eq!(pi.kron(&id(1)).unwrap().diagonal(), [0, 0, 1, 1]);
        assert_eq!(id(1).kron(&pi).unwrap().diagonal(), [0, 1, 0, 1]);
        assert_eq!(pi.kron(&pi).unwrap().diagonal(), [0, 0, 0, 1]);
        assert!(pi.kron(&pi).unwrap().is_projector());
    }

    #[test]
    fn rank1_examples() {
        assert_eq!(
            rank1_projector(&itp("01")).unwrap().diagonal(),
            [0, 1, 0, 0]
        );
        let all_ones = rank1_projector(&itp("111")).unwrap();
        assert_eq!(all_ones.diagonal().iter().position(|&a| a == 1), Some(7));
        assert_eq!(all_ones.trace().unwrap(), 1);
        let mid = rank1_projector(&itp("010")).unwrap();
        let anti = seed().complement().unwrap();
        let expected = anti.kron(seed().operator()).unwrap().kron(&anti).unwrap();
        assert_eq!(*mid.operator(), expected);
        assert_eq!(mid.diagonal().iter().position(|&a| a == 1), Some(2));
    }

    #[test]
    fn logical_projector_examples() {
        let pi = seed().into_operator();
        assert_eq!(*logical_projector(3, 0).unwrap(), pi.kron(&id(2)).unwrap());
        assert_eq!(*logical_projector(3, 2).unwrap(), id(2).kron(&pi).unwrap());
        assert_eq!(logical_projector(1, 0).unwrap(), seed());
        assert!(logical_projector(2, 2).is_err());
        for n in 1..=4 {
            for k in 0..n {
                let a = logical_projector(n, k).unwrap();
                for row in 0..1usize << n {
                    assert_eq!(a.diagonal()[row], ((row >> (n - 1 - k)) & 1) as i64);
                }
            }
        }
    }

    #[test]
    fn truth_vector_observables() {
        let and = from_truth_vector(&"0001".parse().unwrap());
        assert_eq!(and.to_string(), "diag(0,0,0,1)");
        assert_eq!(
            from_truth_vector(&"1101".parse().unwrap()).to_string(),
            "diag(1,1,0,1)"
        );
        assert!(from_truth_vector(&"0000".parse().unwrap()).is_zero());
    }

    #[test]
    fn literal_rank1_sum_matches_diagonal() {
        for n in 0..=3 {
            for tv in TruthVector::enumerate(n).unwrap() {
                let mut acc = DiagonalOperator::zero(n).unwrap();
                for itp in Interpretation::all(n) {
                    let weight = i64::from(tv.at(&itp).unwrap());
                    acc = acc
                        .sum(&rank1_projector(&itp).unwrap().scale(weight).unwrap())
                        .unwrap();
                }
                assert_eq!(acc, *from_truth_vector(&tv).operator());
            }
        }
    }

    #[test]
    fn lifted_polynomials() {
        let or =
            MultilinearPoly::from_terms(2, [(vec![0], 1), (vec![1], 1), (vec![0, 1], -1)]).unwrap();
        assert_eq!(lift_polynomial(&or).unwrap().diagonal(), [0, 1, 1, 1]);
        let maj = MultilinearPoly::from_terms(
            3,
            [
                (vec![0, 1], 1),
                (vec![0, 2], 1),
                (vec![1, 2], 1),
                (vec![0, 1, 2], -2),
            ],
        )
        .unwrap();
        assert_eq!(
            lift_polynomial(&maj).unwrap().diagonal(),
            [0, 0, 0, 1, 0, 1, 1, 1]
        );
        let imp =
            MultilinearPoly::from_terms(2, [(vec![], 1), (vec![0], -1), (vec![0, 1], 1)]).unwrap();
        assert_eq!(lift_polynomial(&imp).unwrap().diagonal(), [1, 1, 0, 1]);
        let not_interpretable =
            MultilinearPoly::from_terms(2, [(vec![0], 1), (vec![1], 1)]).unwrap();
        assert_eq!(
            lift_polynomial(&not_interpretable).unwrap().diagonal(),
            [0, 1, 1, 2]
        );
    }

    #[test]
    fn arithmetic_examples() {
        let a = logical_projector(2, 0).unwrap();
        let b = logical_projector(2, 1).unwrap();
        let ab = a.product(&b).unwrap();
        assert_eq!(ab.diagonal(), [0, 0, 0, 1]);
        assert_eq!(id(2).difference(&ab).unwrap().diagonal(), [1, 1, 1, 0]);
        let sum = a.sum(&b).unwrap();
        assert_eq!(sum.diagonal(), [0, 1, 1, 2]);
        assert!(!sum.is_projector());
        assert!(matches!(
            sum.to_observable(),
            Err(Error::NotProjector { row: 3, value: 2 })
        ));
        assert!(matches!(a.sum(&seed()), Err(Error::ArityMismatch { .. })));
        assert!(matches!(
            diag(&[i64::MAX, 0]).scale(2),
            Err(Error::Overflow(_))
        ));
    }

    #[test]
    fn projector_predicate() {
        assert!(diag(&[0, 1, 1, 0]).is_projector());
        assert!(!diag(&[0, 1, 1, 2]).is_projector());
        assert!(DiagonalOperator::zero(2).unwrap().is_projector());
    }

    #[test]
    fn von_neumann_examples() {
        let p01 = rank1_projector(&itp("01")).unwrap();
        let p10 = rank1_projector(&itp("10")).unwrap();
        assert!(von_neumann_check(&p01, &p10).unwrap().sum_is_projector);

        let a = logical_projector(2, 0).unwrap();
        let b = logical_projector(2, 1).unwrap();
        let ab = a.product(&b).unwrap().to_observable().unwrap();
        let report = von_neumann_check(&a, &ab).unwrap();
        assert!(report.difference_is_projector);
        assert_eq!(a.difference(&ab).unwrap().diagonal(), [0, 0, 1, 0]);

        let report = von_neumann_check(&a, &b).unwrap();
        assert!(!report.sum_is_projector);
        assert!(report.commute && report.product_is_projector);
        assert!(von_neumann_check(&a, &seed()).is_err());
    }

    #[test]
    fn dense_export() {
        assert_eq!(seed().dense().unwrap().rows(), vec![vec![0, 0], vec![0, 1]]);
        let nor = from_truth_vector(&"1000".parse().unwrap()).dense().unwrap();
        assert_eq!(nor.get(0, 0), 1);
        assert_eq!(nor.rows().iter().flatten().sum::<i64>(), 1);
        let and3 = from_truth_vector(&"00000001".parse().unwrap())
            .dense()
            .unwrap();
        assert_eq!(and3.dim(), 8);
        assert_eq!(and3.get(7, 7), 1);
        assert_eq!(and3.rows().iter().flatten().sum::<i64>(), 1);
        let limits = Limits {
            dense_cap: 2,
            ..Limits::default()
        };
        assert_eq!(
            and3.diagonal(),
            from_truth_vector(&"00000001".parse().unwrap()).diagonal()
        );
        assert!(matches!(
            from_truth_vector(&"00000001".parse().unwrap()).dense_with(&limits),
            Err(Error::DenseCapExceeded { arity: 3, cap: 2 })
        ));
        assert_eq!(seed().dense().unwrap().to_string(), "0 0\n0 1");
    }

    #[test]
    fn dense_kron_matches_diagonal_kron() {
        let a = diag(&[2, -1]);
        let b = diag(&[0, 3, 5, 7]);
        assert_eq!(
            a.dense().unwrap().kron(&b.dense().unwrap()).unwrap(),
            a.kron(&b).unwrap().dense().unwrap()
        );
    }

    #[test]
    fn mixed_product_examples() {
        let pi = seed().into_operator();
        let anti = pi.complement().unwrap();
        assert!(kron_mixed_product_check(&pi, &id(1), &id(1), &pi).unwrap());
        assert_eq!(
            pi.kron(&id(1))
                .unwrap()
                .product(&id(1).kron(&pi).unwrap())
                .unwrap(),
            pi.kron(&pi).unwrap()
        );
        assert!(kron_mixed_product_check(&pi, &pi, &anti, &anti).unwrap());
        assert!(pi
            .kron(&pi)
            .unwrap()
            .product(&anti.kron(&anti).unwrap())
            .unwrap()
            .is_zero());
        assert!(kron_mixed_product_check(&pi, &pi, &id(2), &pi).is_err());
    }

    #[test]
    fn trace_selection() {
        let xor = from_truth_vector(&"0110".parse().unwrap());
        assert_eq!(trace_select(&xor, &itp("10")).unwrap(), 1);
        assert_eq!(
            trace_select(&DiagonalOperator::zero(2).unwrap(), &itp("11")).unwrap(),
            0
        );
        let maj = from_truth_vector(&"00010111".parse().unwrap());
        assert_eq!(trace_select(&maj, &itp("011")).unwrap(), 1);
        assert!(trace_select(&maj, &itp("01")).is_err());
    }

    /// Each two-argument connective written with the seed projector only.
    /// The two non-implication rows and the two implication rows are built
    /// from the truth-vector-consistent factor order.
    #[test]
    fn seed_operator_forms() {
        let pi = seed().into_operator();
        let anti = pi.complement().unwrap();
        let i2 = id(1);
        let i4 = id(2);
        let k = |a: &DiagonalOperator, b: &DiagonalOperator| a.kron(b).unwrap();
        let forms: Vec<(&str, DiagonalOperator)> = vec![
            ("0000", DiagonalOperator::zero(2).unwrap()),
            ("1000", k(&anti, &anti)),
            ("0100", k(&anti, &pi)),
            ("1100", i4.difference(&k(&pi, &i2)).unwrap()),
            ("0010", k(&pi, &anti)),
            ("1010", i4.difference(&k(&i2, &pi)).unwrap()),
            ("0110", k(&pi, &anti).sum(&k(&anti, &pi)).unwrap()),
            ("1110", i4.difference(&k(&pi, &pi)).unwrap()),
            ("0001", k(&pi, &pi)),
            ("1001", k(&pi, &pi).sum(&k(&anti, &anti)).unwrap()),
            ("0101", k(&i2, &pi)),
            ("1101", i4.difference(&k(&pi, &anti)).unwrap()),
            ("0011", k(&pi, &i2)),
            ("1011", i4.difference(&k(&anti, &pi)).unwrap()),
            ("0111", i4.difference(&k(&anti, &anti)).unwrap()),
            ("1111", i4.clone()),
        ];
        for (bits, op) in forms {
            assert_eq!(
                op,
                *from_truth_vector(&bits.parse().unwrap()).operator(),
                "{bits}"
            );
        }
    }
}
