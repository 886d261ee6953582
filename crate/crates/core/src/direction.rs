//! Exact polar-angle comparison of 2D rational vectors with symbolic
//! first-order infinitesimal tie-breaking.
//!
//! A vector is `base + eps_coeff * eps` for an unspecified infinitesimal
//! `eps > 0`. Predicates expand symbolically in powers of eps and take the
//! sign of the first nonzero coefficient, so no numeric epsilon is ever
//! chosen. Second-order terms only arise when both operands carry an eps
//! component; the expansion includes them.

use std::cmp::Ordering;

use serde::Serialize;
use thiserror::Error;

use crate::rational::Rational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DirectionError {
    #[error("bot-has-no-angle")]
    BotHasNoAngle,
}

/// A 2D vector with a symbolic first-order eps term: `base + eps * eps_coeff`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct EpsVector {
    pub base: (Rational, Rational),
    pub eps: (Rational, Rational),
}

impl EpsVector {
    pub fn exact(x: Rational, y: Rational) -> Self {
        EpsVector {
            base: (x, y),
            eps: (Rational::zero(), Rational::zero()),
        }
    }

    pub fn new(base: (Rational, Rational), eps: (Rational, Rational)) -> Self {
        EpsVector { base, eps }
    }

    pub fn is_zero(&self) -> bool {
        self.base.0.is_zero() && self.base.1.is_zero() && self.eps.0.is_zero() && self.eps.1.is_zero()
    }

    pub fn negate(&self) -> Self {
        EpsVector {
            base: (-&self.base.0, -&self.base.1),
            eps: (-&self.eps.0, -&self.eps.1),
        }
    }

    /// Sign of the x coordinate at infinitesimal eps > 0.
    fn x_sign(&self) -> i32 {
        first_nonzero([self.base.0.signum(), self.eps.0.signum()])
    }

    /// Sign of the y coordinate at infinitesimal eps > 0.
    fn y_sign(&self) -> i32 {
        first_nonzero([self.base.1.signum(), self.eps.1.signum()])
    }

    /// Numeric value at a concrete small eps, for diagnostics and the
    /// float cross-check tests.
    pub fn approx(&self, eps: f64) -> (f64, f64) {
        (
            self.base.0.to_f64() + eps * self.eps.0.to_f64(),
            self.base.1.to_f64() + eps * self.eps.1.to_f64(),
        )
    }
}

fn first_nonzero<const N: usize>(signs: [i32; N]) -> i32 {
    for s in signs {
        if s != 0 {
            return s;
        }
    }
    0
}

fn cross2(a: &(Rational, Rational), b: &(Rational, Rational)) -> Rational {
    &(&a.0 * &b.1) - &(&a.1 * &b.0)
}

fn dot2(a: &(Rational, Rational), b: &(Rational, Rational)) -> Rational {
    &(&a.0 * &b.0) + &(&a.1 * &b.1)
}

/// Sign of `u x v = u.x*v.y - u.y*v.x` evaluated at infinitesimal eps > 0.
///
/// The zeroth-order term decides when nonzero; otherwise the first-order
/// term; otherwise the second-order term (nonzero only when both operands
/// carry eps components).
pub fn cross_sign(u: &EpsVector, v: &EpsVector) -> i32 {
    let c0 = cross2(&u.base, &v.base);
    if !c0.is_zero() {
        return c0.signum();
    }
    let c1 = &cross2(&u.base, &v.eps) + &cross2(&u.eps, &v.base);
    if !c1.is_zero() {
        return c1.signum();
    }
    cross2(&u.eps, &v.eps).signum()
}

/// Sign of `u . v` evaluated at infinitesimal eps > 0.
pub fn dot_sign(u: &EpsVector, v: &EpsVector) -> i32 {
    let d0 = dot2(&u.base, &v.base);
    if !d0.is_zero() {
        return d0.signum();
    }
    let d1 = &dot2(&u.base, &v.eps) + &dot2(&u.eps, &v.base);
    if !d1.is_zero() {
        return d1.signum();
    }
    dot2(&u.eps, &v.eps).signum()
}

/// Exact polar-angle class of a nonzero (possibly perturbed) vector,
/// or `Bot` for the zero vector.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub enum Direction {
    Bot,
    Dir(EpsVector),
}

impl Direction {
    pub fn from_vector(v: EpsVector) -> Self {
        if v.is_zero() {
            Direction::Bot
        } else {
            Direction::Dir(v)
        }
    }

    pub fn exact(x: Rational, y: Rational) -> Self {
        Direction::from_vector(EpsVector::exact(x, y))
    }

    pub fn is_bot(&self) -> bool {
        matches!(self, Direction::Bot)
    }

    pub fn vector(&self) -> Result<&EpsVector, DirectionError> {
        match self {
            Direction::Bot => Err(DirectionError::BotHasNoAngle),
            Direction::Dir(v) => Ok(v),
        }
    }

    /// Half-plane class along the lift of the angle to [0, 2pi):
    /// 0 = positive x-axis, 1 = open upper half plane,
    /// 2 = negative x-axis, 3 = open lower half plane.
    fn half_class(&self) -> Result<u8, DirectionError> {
        let v = self.vector()?;
        Ok(match v.y_sign() {
            0 => {
                if v.x_sign() > 0 {
                    0
                } else {
                    2
                }
            }
            1 => 1,
            _ => 3,
        })
    }
}

/// Two directions denote the same ray: zero cross product (at every eps
/// order) and positive dot product.
pub fn same_ray(a: &Direction, b: &Direction) -> Result<bool, DirectionError> {
    let (u, v) = (a.vector()?, b.vector()?);
    Ok(cross_sign(u, v) == 0 && dot_sign(u, v) > 0)
}

/// Total order consistent with the polar angle lift to [0, 2pi).
///
/// Compares half-plane class first, then orientation within the class.
/// Equality means same ray. Errors on `Bot` operands.
pub fn cmp_polar(d1: &Direction, d2: &Direction) -> Result<Ordering, DirectionError> {
    let c1 = d1.half_class()?;
    let c2 = d2.half_class()?;
    if c1 != c2 {
        return Ok(c1.cmp(&c2));
    }
    if c1 == 0 || c1 == 2 {
        // Same axis ray.
        return Ok(Ordering::Equal);
    }
    let s = cross_sign(d1.vector()?, d2.vector()?);
    Ok(match s {
        1 => Ordering::Less,
        -1 => Ordering::Greater,
        _ => Ordering::Equal,
    })
}

/// True iff walking counterclockwise from `lo`, `d` is met no later than
/// `hi` (the arc `[lo, hi]` of length < 2pi; a single ray when `lo == hi`).
pub fn in_closed_arc(d: &Direction, lo: &Direction, hi: &Direction) -> Result<bool, DirectionError> {
    if same_ray(lo, hi)? {
        return same_ray(d, lo);
    }
    let lo_hi = cmp_polar(lo, hi)?;
    let lo_d = cmp_polar(lo, d)?;
    let d_hi = cmp_polar(d, hi)?;
    Ok(match lo_hi {
        Ordering::Less => lo_d != Ordering::Greater && d_hi != Ordering::Greater,
        Ordering::Greater => lo_d != Ordering::Greater || d_hi != Ordering::Greater,
        Ordering::Equal => unreachable!("same-ray handled above"),
    })
}

/// Direction of the opposite ray (angle + pi).
pub fn antipode(d: &Direction) -> Result<Direction, DirectionError> {
    Ok(Direction::Dir(d.vector()?.negate()))
}

/// Lifted angle in [0, 2pi) at a concrete small eps; test/diagnostic helper.
pub fn approx_angle(d: &Direction, eps: f64) -> Result<f64, DirectionError> {
    let (x, y) = d.vector()?.approx(eps);
    let mut a = y.atan2(x);
    if a < 0.0 {
        a += 2.0 * std::f64::consts::PI;
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn dir(x: i64, y: i64) -> Direction {
        Direction::exact(Rational::from_int(x), Rational::from_int(y))
    }

    fn vexact(x: i64, y: i64) -> EpsVector {
        EpsVector::exact(Rational::from_int(x), Rational::from_int(y))
    }

    #[test]
    fn cross_sign_unit_axes() {
        assert_eq!(cross_sign(&vexact(1, 0), &vexact(0, 1)), 1);
        assert_eq!(cross_sign(&vexact(1, 1), &vexact(2, 2)), 0);
    }

    #[test]
    fn cross_sign_eps_term() {
        // (1, 1-eps) sits just below (1, 1): cross((1,1-eps),(1,1)) = +eps.
        // Confirmed by the numeric oracle at eps = 1e-9 below.
        let perturbed = EpsVector::new(
            (Rational::one(), Rational::one()),
            (Rational::zero(), Rational::from_int(-1)),
        );
        let plain = vexact(1, 1);
        assert_eq!(cross_sign(&perturbed, &plain), 1);
        assert_eq!(cross_sign(&plain, &perturbed), -1);

        let eps = 1e-9;
        let (px, py) = perturbed.approx(eps);
        let (qx, qy) = plain.approx(eps);
        let numeric = px * qy - py * qx;
        assert!(numeric > 0.0);
    }

    #[test]
    fn cmp_polar_examples() {
        // theta = pi/2 before theta = 5pi/4.
        assert_eq!(cmp_polar(&dir(0, 2), &dir(-1, -1)).unwrap(), Ordering::Less);
        // Same ray.
        assert_eq!(cmp_polar(&dir(3, 0), &dir(1, 0)).unwrap(), Ordering::Equal);
        // Decided by the eps term: perturbed is at the smaller angle.
        let perturbed = Direction::Dir(EpsVector::new(
            (Rational::one(), Rational::one()),
            (Rational::zero(), Rational::from_int(-1)),
        ));
        assert_eq!(cmp_polar(&perturbed, &dir(1, 1)).unwrap(), Ordering::Less);
        assert!(cmp_polar(&Direction::Bot, &dir(1, 0)).is_err());
    }

    #[test]
    fn arc_membership() {
        assert!(in_closed_arc(&dir(0, 1), &dir(1, 0), &dir(-1, 0)).unwrap());
        assert!(!in_closed_arc(&dir(0, -1), &dir(1, 0), &dir(-1, 0)).unwrap());
        // Degenerate arc is the single ray.
        assert!(in_closed_arc(&dir(1, 0), &dir(1, 0), &dir(1, 0)).unwrap());
        assert!(!in_closed_arc(&dir(0, 1), &dir(1, 0), &dir(1, 0)).unwrap());
        // Wrapping arc [7pi/4, pi/4].
        assert!(in_closed_arc(&dir(1, 0), &dir(1, -1), &dir(1, 1)).unwrap());
        assert!(!in_closed_arc(&dir(0, 1), &dir(1, -1), &dir(1, 1)).unwrap());
    }

    #[test]
    fn antipode_examples() {
        let a = antipode(&dir(1, 0)).unwrap();
        assert!(same_ray(&a, &dir(-1, 0)).unwrap());
        let b = antipode(&dir(0, 2)).unwrap();
        assert!(same_ray(&b, &dir(0, -1)).unwrap());
        assert!(antipode(&Direction::Bot).is_err());
    }

    proptest! {
        #[test]
        fn cross_antisymmetry(ax in -20i64..20, ay in -20i64..20, bx in -20i64..20, by in -20i64..20) {
            let u = vexact(ax, ay);
            let v = vexact(bx, by);
            prop_assert_eq!(cross_sign(&u, &v), -cross_sign(&v, &u));
        }

        #[test]
        fn antipode_involution(x in -20i64..20, y in -20i64..20) {
            prop_assume!(x != 0 || y != 0);
            let d = dir(x, y);
            let back = antipode(&antipode(&d).unwrap()).unwrap();
            prop_assert!(same_ray(&back, &d).unwrap());
        }

        // cmp_polar is a strict weak order: total, antisymmetric up to
        // ray-equality, transitive.
        #[test]
        fn cmp_polar_transitive(coords in proptest::collection::vec((-9i64..9, -9i64..9), 3)) {
            prop_assume!(coords.iter().all(|&(x, y)| x != 0 || y != 0));
            let ds: Vec<Direction> = coords.iter().map(|&(x, y)| dir(x, y)).collect();
            let c01 = cmp_polar(&ds[0], &ds[1]).unwrap();
            let c12 = cmp_polar(&ds[1], &ds[2]).unwrap();
            let c02 = cmp_polar(&ds[0], &ds[2]).unwrap();
            if c01 == c12 {
                prop_assert_eq!(c02, c01);
            }
            if c01 == Ordering::Equal {
                prop_assert_eq!(c02, c12);
            }
            prop_assert_eq!(cmp_polar(&ds[1], &ds[0]).unwrap(), c01.reverse());
        }
    }

    #[test]
    fn agrees_with_atan2_on_random_vectors() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(20_240_817);
        let mut checked = 0usize;
        while checked < 10_000 {
            let (ax, ay) = (rng.gen_range(-50i64..=50), rng.gen_range(-50i64..=50));
            let (bx, by) = (rng.gen_range(-50i64..=50), rng.gen_range(-50i64..=50));
            let (cx, cy) = (rng.gen_range(-50i64..=50), rng.gen_range(-50i64..=50));
            if (ax, ay) == (0, 0) || (bx, by) == (0, 0) || (cx, cy) == (0, 0) {
                continue;
            }
            // Keep away from ties so the float answer is trustworthy.
            let near = |px: i64, py: i64, qx: i64, qy: i64| (px * qy - py * qx).abs() < 2;
            if near(ax, ay, bx, by) || near(ax, ay, cx, cy) || near(bx, by, cx, cy) {
                continue;
            }
            let (d, lo, hi) = (dir(ax, ay), dir(bx, by), dir(cx, cy));
            let exact = in_closed_arc(&d, &lo, &hi).unwrap();
            let ad = approx_angle(&d, 1e-9).unwrap();
            let alo = approx_angle(&lo, 1e-9).unwrap();
            let ahi = approx_angle(&hi, 1e-9).unwrap();
            let float = if alo <= ahi {
                alo <= ad && ad <= ahi
            } else {
                ad >= alo || ad <= ahi
            };
            assert_eq!(exact, float, "arc mismatch for {:?} in [{:?}, {:?}]", (ax, ay), (bx, by), (cx, cy));
            checked += 1;
        }
    }
}
