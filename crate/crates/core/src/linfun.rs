//! Linear-function algebra: composition, classification, vector/direction
//! extraction, tilde duality and pairwise commutation predicates.
//!
//! A linear function `f(x) = a*x + b` is viewed as the vector `(b, 1-a)`;
//! its direction drives every ordering decision in the solvers.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::direction::{cross_sign, Direction, EpsVector};
use crate::rational::Rational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinfunError {
    #[error("permutation length {got} does not match function count {want}")]
    LengthMismatch { got: usize, want: usize },
    #[error("sequence is not a permutation of 0..{0}")]
    NotAPermutation(usize),
}

/// `f(x) = a*x + b` with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct LinearFunction {
    pub a: Rational,
    pub b: Rational,
}

/// Exhaustive, exclusive classification. The identity is its own class;
/// the `is_monotone` predicate below includes it.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FunctionClass {
    Identity,
    Constant,
    Increasing,
    Decreasing,
}

impl LinearFunction {
    pub fn new(a: Rational, b: Rational) -> Self {
        LinearFunction { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        LinearFunction::new(Rational::from_int(a), Rational::from_int(b))
    }

    pub fn from_ratios(a: (i64, i64), b: (i64, i64)) -> Self {
        LinearFunction::new(Rational::ratio(a.0, a.1), Rational::ratio(b.0, b.1))
    }

    pub fn identity() -> Self {
        LinearFunction::new(Rational::one(), Rational::zero())
    }

    pub fn constant(b: Rational) -> Self {
        LinearFunction::new(Rational::zero(), b)
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.a.is_zero()
    }

    /// `a > 0`, identity included.
    pub fn is_monotone(&self) -> bool {
        self.a.is_positive()
    }

    pub fn is_decreasing(&self) -> bool {
        self.a.is_negative()
    }

    pub fn classify(&self) -> FunctionClass {
        if self.is_identity() {
            FunctionClass::Identity
        } else if self.a.is_zero() {
            FunctionClass::Constant
        } else if self.a.is_positive() {
            FunctionClass::Increasing
        } else {
            FunctionClass::Decreasing
        }
    }

    pub fn evaluate(&self, c: &Rational) -> Rational {
        &(&self.a * c) + &self.b
    }

    /// The vector `(b, 1-a)`; constants get the first-order perturbation of
    /// `f(x) + eps*x`, whose vector is `(b, 1-eps)`. `Bot` iff `f` is the
    /// identity (the perturbation never applies to it).
    pub fn direction(&self, perturb_constants: bool) -> Direction {
        let base = (self.b.clone(), &Rational::one() - &self.a);
        let eps = if perturb_constants && self.a.is_zero() {
            (Rational::zero(), Rational::from_int(-1))
        } else {
            (Rational::zero(), Rational::zero())
        };
        Direction::from_vector(EpsVector::new(base, eps))
    }

    /// `ax - b`; an involution that swaps minimization and maximization.
    pub fn tilde(&self) -> Self {
        LinearFunction::new(self.a.clone(), -&self.b)
    }
}

/// `h o g`, i.e. `x -> h(g(x))`. The resulting vector is
/// `vec(h) + alpha(h) * vec(g)`.
pub fn compose(h: &LinearFunction, g: &LinearFunction) -> LinearFunction {
    LinearFunction::new(&h.a * &g.a, &(&h.a * &g.b) + &h.b)
}

/// A permutation of `[n]` in application order: `map[0]` is applied first.
/// The composite is `f_{map[n-1]} o ... o f_{map[0]}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Permutation(pub Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn from_application_order(order: Vec<usize>) -> Result<Self, LinfunError> {
        let n = order.len();
        let mut seen = vec![false; n];
        for &i in &order {
            if i >= n || seen[i] {
                return Err(LinfunError::NotAPermutation(n));
            }
            seen[i] = true;
        }
        Ok(Permutation(order))
    }

    pub fn from_one_based(order: &[usize]) -> Result<Self, LinfunError> {
        let shifted: Option<Vec<usize>> = order.iter().map(|&i| i.checked_sub(1)).collect();
        match shifted {
            Some(v) => Permutation::from_application_order(v),
            None => Err(LinfunError::NotAPermutation(order.len())),
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.0.iter().map(|&i| i + 1).collect()
    }

    /// Cyclic k-shift: the first k applied functions move to the end.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.0.len();
        if n == 0 {
            return self.clone();
        }
        let k = k % n;
        let mut v = Vec::with_capacity(n);
        v.extend_from_slice(&self.0[k..]);
        v.extend_from_slice(&self.0[..k]);
        Permutation(v)
    }
}

/// Left fold of `compose` in the order `sigma(1), ..., sigma(n)`; the empty
/// sequence composes to the identity.
pub fn compose_seq(fs: &[LinearFunction], sigma: &Permutation) -> Result<LinearFunction, LinfunError> {
    if sigma.len() != fs.len() {
        return Err(LinfunError::LengthMismatch {
            got: sigma.len(),
            want: fs.len(),
        });
    }
    let mut acc = LinearFunction::identity();
    for &i in sigma.as_slice() {
        if i >= fs.len() {
            return Err(LinfunError::NotAPermutation(fs.len()));
        }
        acc = compose(&fs[i], &acc);
    }
    Ok(acc)
}

/// Exact sign of `beta(g)(1-alpha(h)) - beta(h)(1-alpha(g))`, which equals
/// `|vec(g)||vec(h)| sin(theta(h) - theta(g))`. A sign of +1 means
/// `h o g < g o h` pointwise.
pub fn commute_sign(g: &LinearFunction, h: &LinearFunction) -> i32 {
    let lhs = &g.b * &(&Rational::one() - &h.a);
    let rhs = &h.b * &(&Rational::one() - &g.a);
    (&lhs - &rhs).signum()
}

/// True iff all non-`Bot` vectors are pairwise parallel (vacuously true
/// with at most one non-`Bot` vector).
pub fn is_colinear(fs: &[LinearFunction]) -> bool {
    let vectors: Vec<EpsVector> = fs
        .iter()
        .filter(|f| !f.is_identity())
        .map(|f| match f.direction(false) {
            Direction::Dir(v) => v,
            Direction::Bot => unreachable!("non-identity has a nonzero vector"),
        })
        .collect();
    match vectors.first() {
        None => true,
        Some(first) => vectors[1..].iter().all(|v| cross_sign(first, v) == 0),
    }
}
