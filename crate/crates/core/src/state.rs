//! Interpretation states: unit vectors over the canonical interpretation
//! basis, and expectation values of observables on them.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::observable::{trace_select, DiagonalOperator, LogicalObservable};
use crate::truthtable::{check_arity, check_same_arity, Interpretation};
use crate::MAX_ARITY;

/// Squared-norm deviation below which an input counts as already normalized.
pub const NORM_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InterpretationState {
    arity: usize,
    amplitudes: Vec<Complex64>,
    was_normalized: bool,
}

impl InterpretationState {
    /// Unit amplitude at the row of `itp`.
    pub fn basis_state(itp: &Interpretation) -> Result<InterpretationState> {
        check_arity(itp.arity(), MAX_ARITY)?;
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); 1 << itp.arity()];
        amplitudes[itp.row_index()] = Complex64::new(1.0, 0.0);
        Ok(InterpretationState {
            arity: itp.arity(),
            amplitudes,
            was_normalized: true,
        })
    }

    /// Divides by the norm; the result always has unit norm.
    pub fn from_amplitudes(
        arity: usize,
        amplitudes: Vec<Complex64>,
    ) -> Result<InterpretationState> {
        check_arity(arity, MAX_ARITY)?;
        if amplitudes.len() != 1 << arity {
            return Err(Error::ArityMismatch {
                expected: 1 << arity,
                found: amplitudes.len(),
            });
        }
        if let Some(index) = amplitudes.iter().position(|c| !c.is_finite()) {
            return Err(Error::NonFiniteAmplitude { index });
        }
        let norm_sqr: f64 = amplitudes.iter().map(Complex64::norm_sqr).sum();
        // scaled by the largest component so huge or tiny inputs keep precision
        let peak = amplitudes
            .iter()
            .map(|c| c.re.abs().max(c.im.abs()))
            .fold(0.0, f64::max);
        if peak == 0.0 {
            return Err(Error::ZeroNorm);
        }
        let scaled: Vec<Complex64> = amplitudes.iter().map(|c| c / peak).collect();
        let norm = scaled.iter().map(Complex64::norm_sqr).sum::<f64>().sqrt();
        Ok(InterpretationState {
            arity,
            amplitudes: scaled.into_iter().map(|c| c / norm).collect(),
            was_normalized: (norm_sqr - 1.0).abs() <= NORM_TOLERANCE,
        })
    }

    /// Equal real amplitudes on every basis state.
    pub fn uniform(arity: usize) -> Result<InterpretationState> {
        check_arity(arity, MAX_ARITY)?;
        let dim = 1usize << arity;
        let a = (dim as f64).sqrt().recip();
        Ok(InterpretationState {
            arity,
            amplitudes: vec![Complex64::new(a, 0.0); dim],
            was_normalized: true,
        })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn was_normalized(&self) -> bool {
        self.was_normalized
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(Complex64::norm_sqr).sum()
    }

    /// Multiplies every amplitude by `phase`, renormalized to unit modulus.
    pub fn with_global_phase(&self, phase: Complex64) -> Result<InterpretationState> {
        let unit = phase / phase.norm();
        if !unit.is_finite() {
            return Err(Error::invalid("phase", "must be finite and nonzero"));
        }
        Ok(InterpretationState {
            arity: self.arity,
            amplitudes: self.amplitudes.iter().map(|c| c * unit).collect(),
            was_normalized: self.was_normalized,
        })
    }
}

/// `sum_k |C_k|^2 * f_k`.
pub fn expectation(f: &DiagonalOperator, state: &InterpretationState) -> Result<f64> {
    check_same_arity(f.arity(), state.arity())?;
    Ok(f.diagonal()
        .iter()
        .zip(state.amplitudes())
        .map(|(&d, c)| c.norm_sqr() * d as f64)
        .sum())
}

pub fn is_model(f: &LogicalObservable, itp: &Interpretation) -> Result<bool> {
    Ok(trace_select(f, itp)? == 1)
}

/// Parses entries separated by whitespace or `;`. Each entry is `re` or
/// `re,im`, optionally wrapped in parentheses.
pub fn parse_amplitudes(text: &str) -> Result<Vec<Complex64>> {
    let entries: Vec<&str> = text
        .split(|c: char| c.is_whitespace() || c == ';')
        .filter(|s| !s.is_empty())
        .collect();
    if entries.is_empty() {
        return Err(Error::invalid("amplitudes", "no entries"));
    }
    entries.into_iter().map(parse_entry).collect()
}

fn parse_entry(entry: &str) -> Result<Complex64> {
    let inner = match entry.strip_prefix('(') {
        Some(rest) => rest.strip_suffix(')').ok_or_else(|| {
            Error::invalid("amplitude", format!("unbalanced parenthesis in {entry:?}"))
        })?,
        None => entry,
    };
    let number = |s: &str| -> Result<f64> {
        let v: f64 = s
            .parse()
            .map_err(|_| Error::invalid("amplitude", format!("not a number: {s:?}")))?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::invalid("amplitude", format!("not finite: {s:?}")))
        }
    };
    match inner.split_once(',') {
        Some((re, im)) => Ok(Complex64::new(number(re)?, number(im)?)),
        None => Ok(Complex64::new(number(inner)?, 0.0)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::observable::from_truth_vector;

    fn itp(bits: &str) -> Interpretation {
        bits.parse().unwrap()
    }

    fn obs(bits: &str) -> LogicalObservable {
        from_truth_vector(&bits.parse().unwrap())
    }

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn basis_states() {
        let s = InterpretationState::basis_state(&itp("11")).unwrap();
        assert_eq!(s.amplitudes()[3], c(1.0));
        assert_eq!(s.amplitudes().iter().filter(|a| a.norm() == 1.0).count(), 1);
        let s = InterpretationState::basis_state(&itp("00")).unwrap();
        assert_eq!(s.amplitudes()[0], c(1.0));
        let s = InterpretationState::basis_state(&itp("101")).unwrap();
        assert_eq!(s.amplitudes()[5], c(1.0));
    }

    #[test]
    fn normalization() {
        let s = InterpretationState::from_amplitudes(1, vec![c(1.0), c(1.0)]).unwrap();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        assert!((s.amplitudes()[0].re - h).abs() < 1e-15);
        assert!((s.amplitudes()[1].re - h).abs() < 1e-15);
        assert!(!s.was_normalized());
        let s =
            InterpretationState::from_amplitudes(2, vec![c(0.0), c(0.0), c(0.0), c(1.0)]).unwrap();
        assert!(s.was_normalized());
        assert_eq!(s, InterpretationState::basis_state(&itp("11")).unwrap());
        assert_eq!(
            InterpretationState::from_amplitudes(1, vec![c(0.0), c(0.0)]),
            Err(Error::ZeroNorm)
        );
        assert!(matches!(
            InterpretationState::from_amplitudes(2, vec![c(1.0)]),
            Err(Error::ArityMismatch {
                expected: 4,
                found: 1
            })
        ));
        let huge = InterpretationState::from_amplitudes(1, vec![c(1e300), c(-1e300)]).unwrap();
        assert!((huge.norm_sqr() - 1.0).abs() < 1e-12);
        let tiny = InterpretationState::from_amplitudes(1, vec![c(0.0), c(1e-320)]).unwrap();
        assert_eq!(
            tiny.amplitudes(),
            InterpretationState::basis_state(&itp("1"))
                .unwrap()
                .amplitudes()
        );
        assert!(!tiny.was_normalized());
        assert_eq!(
            InterpretationState::from_amplitudes(1, vec![c(1.0), c(f64::NAN)]),
            Err(Error::NonFiniteAmplitude { index: 1 })
        );
    }

    #[test]
    fn expectation_examples() {
        let and = obs("0001");
        let s = InterpretationState::basis_state(&itp("11")).unwrap();
        assert_eq!(expectation(&and, &s).unwrap(), 1.0);
        let xor = obs("0110");
        let u = InterpretationState::from_amplitudes(2, vec![c(0.5); 4]).unwrap();
        // 1/4 * (0 + 1 + 1 + 0)
        assert!((expectation(&xor, &u).unwrap() - 0.5).abs() < 1e-12);
        assert!(
            (expectation(&xor, &InterpretationState::uniform(2).unwrap()).unwrap() - 0.5).abs()
                < 1e-12
        );
        assert!(expectation(&xor, &InterpretationState::uniform(3).unwrap()).is_err());
    }

    #[test]
    fn basis_expectation_is_eigenvalue() {
        for tv in crate::truthtable::TruthVector::enumerate(2).unwrap() {
            let f = from_truth_vector(&tv);
            for x in Interpretation::all(2) {
                let s = InterpretationState::basis_state(&x).unwrap();
                assert_eq!(
                    expectation(&f, &s).unwrap(),
                    trace_select(&f, &x).unwrap() as f64
                );
            }
        }
    }

    #[test]
    fn phase_and_complement() {
        let s = InterpretationState::from_amplitudes(
            2,
            vec![
                Complex64::new(0.3, -0.1),
                c(0.2),
                Complex64::new(0.0, 0.7),
                c(-0.4),
            ],
        )
        .unwrap();
        let f = obs("1011");
        let e = expectation(&f, &s).unwrap();
        let rotated = s
            .with_global_phase(Complex64::from_polar(1.0, 1.234))
            .unwrap();
        assert!((expectation(&f, &rotated).unwrap() - e).abs() < 1e-12);
        let not_f = f.complement().unwrap();
        assert!((expectation(&not_f, &s).unwrap() - (1.0 - e)).abs() < 1e-9);
        assert!((0.0..=1.0).contains(&e));
    }

    #[test]
    fn models() {
        let imp = obs("1101");
        assert!(is_model(&imp, &itp("00")).unwrap());
        assert!(!is_model(&imp, &itp("10")).unwrap());
        for x in Interpretation::all(2) {
            assert!(!is_model(&obs("0000"), &x).unwrap());
            assert!(is_model(&obs("1111"), &x).unwrap());
        }
    }

    #[test]
    fn amplitude_syntax() {
        let a = parse_amplitudes("0.5 (0,1);-1,2 3e-1").unwrap();
        assert_eq!(
            a,
            vec![
                c(0.5),
                Complex64::new(0.0, 1.0),
                Complex64::new(-1.0, 2.0),
                c(0.3)
            ]
        );
        assert!(parse_amplitudes("").is_err());
        assert!(parse_amplitudes("(1,2").is_err());
        assert!(parse_amplitudes("abc").is_err());
        assert!(parse_amplitudes("inf").is_err());
        assert!(parse_amplitudes("1,2,3").is_err());
    }
}
