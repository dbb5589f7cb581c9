//! Propositional logic compiled to Boole's elective multilinear integer
//! polynomials and to diagonal projection-operator observables built from
//! Kronecker products of a single 2x2 seed projector.
//!
//! ```
//! use eigenlogic::{elective, observable, truthtable, formula};
//!
//! let f = formula::parse("x ^ y").unwrap();
//! let order = f.variables();
//! let tv = truthtable::truth_vector(&f, &order).unwrap();
//! assert_eq!(tv.to_string(), "0110");
//!
//! let poly = elective::MultilinearPoly::from_truth_vector(&tv).unwrap();
//! assert_eq!(poly.to_string(), "x + y - 2*x*y");
//!
//! let op = observable::lift_polynomial(&poly).unwrap();
//! assert_eq!(op.to_string(), "diag(0,1,1,0)");
//! ```

pub mod elective;
pub mod error;
pub mod formula;
pub mod observable;
pub mod state;
pub mod truthtable;
pub mod verify;

pub use error::{Error, Result};

/// Structural upper bound on arity for every dense `2^n` representation.
pub const MAX_ARITY: usize = 30;

/// User-adjustable size limits for exponential enumerations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest arity for any `2^n`-sized table or diagonal.
    pub arity_cap: usize,
    /// Largest arity for explicit `2^n x 2^n` matrices.
    pub dense_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            arity_cap: 24,
            dense_cap: 6,
        }
    }
}
