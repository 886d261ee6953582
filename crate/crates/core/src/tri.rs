//! Internal solver element: an upper-triangular pair `(a b; 0 d)` with
//! `d >= 0`, acting projectively as `x -> (a*x + b) / d`.
//!
//! A linear function `a*x + b` embeds as `(a, b, 1)`. Normalized triangular
//! matrices embed as their entries, which keeps the `d = 0` case exact: its
//! direction carries the symbolic diagonal perturbation while composites
//! stay plain matrix products, so no numeric epsilon ever appears in values.

use crate::direction::{Direction, EpsVector};
use crate::linfun::LinearFunction;
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) struct Tri {
    pub a: Rational,
    pub b: Rational,
    pub d: Rational,
}

/// Slope sign of the represented map (sign of `a` once `d >= 0`).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum SlopeClass {
    Negative,
    Zero,
    Positive,
}

impl Tri {
    pub fn identity() -> Self {
        Tri {
            a: Rational::one(),
            b: Rational::zero(),
            d: Rational::one(),
        }
    }

    pub fn from_linear(f: &LinearFunction) -> Self {
        Tri {
            a: f.a.clone(),
            b: f.b.clone(),
            d: Rational::one(),
        }
    }

    pub fn new(a: Rational, b: Rational, d: Rational) -> Self {
        debug_assert!(!d.is_negative(), "triangular elements must be d-normalized");
        Tri { a, b, d }
    }

    /// Only valid on the linear-function path, where every `d` is 1.
    pub fn to_linear(&self) -> LinearFunction {
        debug_assert!(self.d.is_one());
        LinearFunction::new(self.a.clone(), self.b.clone())
    }

    /// Scalar multiples of the identity map; their placement never affects
    /// the objective, so the drivers strip and re-append them.
    pub fn is_identity_map(&self) -> bool {
        self.d.is_positive() && self.a == self.d && self.b.is_zero()
    }

    pub fn slope_class(&self) -> SlopeClass {
        debug_assert!(!self.d.is_negative());
        match self.a.signum() {
            s if s > 0 => SlopeClass::Positive,
            0 => SlopeClass::Zero,
            _ => SlopeClass::Negative,
        }
    }

    pub fn is_constant_like(&self) -> bool {
        self.slope_class() == SlopeClass::Zero
    }

    /// `h o g` as the matrix product.
    pub fn compose(h: &Tri, g: &Tri) -> Tri {
        Tri {
            a: &h.a * &g.a,
            b: &(&h.a * &g.b) + &(&h.b * &g.d),
            d: &h.d * &g.d,
        }
    }

    /// Direction of the represented map's vector `(b/d, 1 - a/d) ~ (b, d-a)`.
    ///
    /// Conventions, all sharing one infinitesimal:
    /// - `d > 0`, non-constant: exact `(b, d-a)`;
    /// - `d > 0`, constant (`a = 0`), perturbed: `(b, d) + eps*(0, -d)`,
    ///   the vector of `f(x) + eps*x`;
    /// - `d = 0`: `(b, -a) + eps*(0, 1)`, the vector after the diagonal
    ///   perturbation `d = eps`.
    pub fn direction(&self, perturb_constants: bool) -> Direction {
        if self.d.is_zero() {
            return Direction::from_vector(EpsVector::new(
                (self.b.clone(), -&self.a),
                (Rational::zero(), Rational::one()),
            ));
        }
        let base = (self.b.clone(), &self.d - &self.a);
        let eps = if perturb_constants && self.a.is_zero() {
            (Rational::zero(), -&self.d)
        } else {
            (Rational::zero(), Rational::zero())
        };
        Direction::from_vector(EpsVector::new(base, eps))
    }

    /// Pointwise order of two composites of the same multiset: equal `a`
    /// and `d` are required, so the `b` entries decide.
    pub fn cmp_value(&self, other: &Tri) -> std::cmp::Ordering {
        assert!(
            self.a == other.a && self.d == other.d,
            "composite comparison requires equal slope entries"
        );
        self.b.cmp(&other.b)
    }

    /// `(a, -b, d)`; negates the off-diagonal of every composite, swapping
    /// minimization and maximization.
    pub fn tilde(&self) -> Tri {
        Tri {
            a: self.a.clone(),
            b: -&self.b,
            d: self.d.clone(),
        }
    }
}
