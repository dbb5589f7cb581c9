//! Exhaustive invariant suite over every observable of a small arity.

use std::collections::HashSet;

use serde::Serialize;

use crate::elective::MultilinearPoly;
use crate::error::{Error, Result};
use crate::formula::{Connective, VariableOrder};
use crate::observable::{
    from_truth_vector, lift_polynomial, rank1_projector, trace_select, von_neumann_check,
    DiagonalOperator, LogicalObservable,
};
use crate::truthtable::{connective_truth_vector, eval, Interpretation, TruthVector};

/// Largest arity the exhaustive suite accepts.
pub const MAX_VERIFY_ARITY: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyResult {
    pub name: &'static str,
    pub passed: bool,
    /// Number of individual cases checked.
    pub cases: usize,
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub arity: usize,
    pub observables: usize,
    pub properties: Vec<PropertyResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(|p| p.passed)
    }
}

fn fail(detail: impl Into<String>) -> Error {
    Error::InvariantViolated(detail.into())
}

fn ensure(cond: bool, detail: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(fail(detail()))
    }
}

struct Context {
    arity: usize,
    tvs: Vec<TruthVector>,
    observables: Vec<LogicalObservable>,
    minterms: Vec<LogicalObservable>,
    identity: DiagonalOperator,
}

type Check = fn(&Context) -> Result<usize>;

const CHECKS: [(&str, Check); 12] = [
    ("enumeration", enumeration),
    ("idempotence", idempotence),
    ("commutation", commutation),
    ("rank-1 orthogonality", rank1_orthogonality),
    ("rank-1 completeness", rank1_completeness),
    ("spectral decomposition", spectral_decomposition),
    ("complementation", complementation),
    ("De Morgan", de_morgan),
    ("von Neumann rules", von_neumann_rules),
    ("eigenlogic correspondence", correspondence),
    ("trace selection", trace_selection),
    ("polynomial round trip", polynomial_round_trip),
];

/// Runs every property for `arity` in `1..=3`.
pub fn run(arity: usize) -> Result<VerifyReport> {
    if arity == 0 || arity > MAX_VERIFY_ARITY {
        return Err(Error::ArityCapExceeded {
            arity,
            cap: MAX_VERIFY_ARITY,
        });
    }
    let tvs: Vec<TruthVector> = TruthVector::enumerate(arity)?.collect();
    let ctx = Context {
        arity,
        observables: tvs.iter().map(from_truth_vector).collect(),
        minterms: Interpretation::all(arity)
            .map(|itp| rank1_projector(&itp))
            .collect::<Result<_>>()?,
        identity: DiagonalOperator::identity(arity)?,
        tvs,
    };
    let properties = CHECKS
        .iter()
        .map(|&(name, check)| match check(&ctx) {
            Ok(cases) => PropertyResult {
                name,
                passed: true,
                cases,
                detail: None,
            },
            Err(e) => PropertyResult {
                name,
                passed: false,
                cases: 0,
                detail: Some(e.to_string()),
            },
        })
        .collect();
    Ok(VerifyReport {
        arity,
        observables: ctx.observables.len(),
        properties,
    })
}

fn enumeration(ctx: &Context) -> Result<usize> {
    let expected = 1usize << (1usize << ctx.arity);
    let distinct: HashSet<&[i64]> = ctx.observables.iter().map(|o| o.diagonal()).collect();
    ensure(
        ctx.observables.len() == expected && distinct.len() == expected,
        || {
            format!(
                "expected {expected} distinct observables, got {}",
                distinct.len()
            )
        },
    )?;
    Ok(expected)
}

fn idempotence(ctx: &Context) -> Result<usize> {
    for o in &ctx.observables {
        ensure(o.product(o)? == **o, || format!("{o} is not idempotent"))?;
    }
    Ok(ctx.observables.len())
}

fn commutation(ctx: &Context) -> Result<usize> {
    let dense = ctx
        .observables
        .iter()
        .map(|o| o.dense())
        .collect::<Result<Vec<_>>>()?;
    let mut cases = 0;
    for (i, a) in dense.iter().enumerate() {
        for b in &dense[i..] {
            ensure(a.mul(b)? == b.mul(a)?, || {
                "dense observables do not commute".into()
            })?;
            cases += 1;
        }
    }
    Ok(cases)
}

fn rank1_orthogonality(ctx: &Context) -> Result<usize> {
    let mut cases = 0;
    for (i, p) in ctx.minterms.iter().enumerate() {
        ensure(p.trace()? == 1, || format!("{p} does not have trace 1"))?;
        for (j, q) in ctx.minterms.iter().enumerate() {
            let pq = p.product(q)?;
            let ok = if i == j { pq == **p } else { pq.is_zero() };
            ensure(ok, || format!("{p} and {q} are not orthogonal"))?;
            cases += 1;
        }
    }
    Ok(cases)
}

fn rank1_completeness(ctx: &Context) -> Result<usize> {
    let mut acc = DiagonalOperator::zero(ctx.arity)?;
    for p in &ctx.minterms {
        acc = acc.sum(p)?;
    }
    ensure(acc == ctx.identity, || {
        format!("rank-1 projectors sum to {acc}")
    })?;
    Ok(ctx.minterms.len())
}

fn spectral_decomposition(ctx: &Context) -> Result<usize> {
    for (tv, o) in ctx.tvs.iter().zip(&ctx.observables) {
        let mut acc = DiagonalOperator::zero(ctx.arity)?;
        for (row, p) in ctx.minterms.iter().enumerate() {
            acc = acc.sum(&p.scale(i64::from(tv.get(row)))?)?;
        }
        ensure(acc == **o, || format!("spectral sum of {tv} is {acc}"))?;
    }
    Ok(ctx.tvs.len())
}

fn complementation(ctx: &Context) -> Result<usize> {
    for (tv, o) in ctx.tvs.iter().zip(&ctx.observables) {
        let not = o.complement()?;
        ensure(not == *from_truth_vector(&tv.complement()), || {
            format!("complement of {o} is {not}")
        })?;
        ensure(
            o.product(&not)?.is_zero() && o.sum(&not)? == ctx.identity,
            || format!("{o} and its complement do not split the identity"),
        )?;
    }
    Ok(ctx.tvs.len())
}

fn or(a: &DiagonalOperator, b: &DiagonalOperator) -> Result<DiagonalOperator> {
    a.sum(b)?.difference(&a.product(b)?)
}

fn de_morgan(ctx: &Context) -> Result<usize> {
    let mut cases = 0;
    for a in &ctx.observables {
        let not_a = a.complement()?;
        for b in &ctx.observables {
            let not_b = b.complement()?;
            ensure(a.product(b)?.complement()? == or(&not_a, &not_b)?, || {
                format!("not(and) fails for {a}, {b}")
            })?;
            ensure(or(a, b)?.complement()? == not_a.product(&not_b)?, || {
                format!("not(or) fails for {a}, {b}")
            })?;
            cases += 1;
        }
    }
    Ok(cases)
}

fn von_neumann_rules(ctx: &Context) -> Result<usize> {
    let mut cases = 0;
    for p in &ctx.minterms {
        for q in &ctx.minterms {
            von_neumann_check(p, q)?;
            cases += 1;
        }
    }
    if ctx.arity <= 2 {
        for p in &ctx.observables {
            for q in &ctx.observables {
                von_neumann_check(p, q)?;
                cases += 1;
            }
        }
    }
    Ok(cases)
}

fn correspondence(ctx: &Context) -> Result<usize> {
    let mut cases = 0;
    for (tv, o) in ctx.tvs.iter().zip(&ctx.observables) {
        let lifted = lift_polynomial(&MultilinearPoly::from_truth_vector(tv)?)?;
        ensure(lifted == **o, || {
            format!("polynomial of {tv} lifts to {lifted}")
        })?;
        cases += 1;
    }
    for kind in Connective::ALL {
        if !kind.accepts(ctx.arity) {
            continue;
        }
        let lifted = lift_polynomial(&MultilinearPoly::connective(kind, ctx.arity)?)?;
        let expected = from_truth_vector(&connective_truth_vector(kind, ctx.arity)?);
        ensure(lifted == *expected, || {
            format!("{} lifts to {lifted}", kind.name())
        })?;
        cases += 1;
    }
    Ok(cases)
}

fn trace_selection(ctx: &Context) -> Result<usize> {
    let order = VariableOrder::default_names(ctx.arity);
    let mut cases = 0;
    for (tv, o) in ctx.tvs.iter().zip(&ctx.observables) {
        let formula = tv.to_formula(&order)?;
        for itp in Interpretation::all(ctx.arity) {
            let selected = trace_select(o, &itp)?;
            let value = i64::from(eval(&formula, &order, &itp)?);
            ensure(selected == value, || {
                format!("{formula} at {itp}: trace {selected}, eval {value}")
            })?;
            cases += 1;
        }
    }
    Ok(cases)
}

fn polynomial_round_trip(ctx: &Context) -> Result<usize> {
    for (tv, o) in ctx.tvs.iter().zip(&ctx.observables) {
        let back = MultilinearPoly::from_truth_vector(tv)?.to_truth_vector()?;
        ensure(back == *tv, || format!("{tv} round-trips to {back}"))?;
        ensure(o.truth_vector() == *tv, || {
            format!("{o} reads back as {}", o.truth_vector())
        })?;
    }
    Ok(ctx.tvs.len())
}
