//! Exact scalar arithmetic and the ring contract shared by every matrix routine.

use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::matrix::{gauss_jordan, LabeledMat};

mod dual;
pub mod poly;
mod ratfun;
mod series;
mod star;
mod torus;

pub use dual::DualNum;
pub use poly::{gcd, qrat, Mono, Poly, QRat};
pub use ratfun::RatFun;
pub use series::TruncSeries;
pub use star::{StarDual, StarJet, STAR_PAIRS};
pub use torus::{QTorus, TMono};

/// Errors raised by scalar arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("element is not invertible")]
    NotInvertible,
    #[error("operands belong to different scalar towers")]
    TowerMismatch,
}

/// Associative ring with unit, possibly noncommutative.
///
/// Zero and one are produced from a template so that operator-valued
/// entries know their dimension.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Two-sided inverse, if one exists.
    fn try_inv(&self) -> Option<Self>;

    /// Integer multiple of the unit.
    fn int_like(&self, k: i64) -> Self {
        let one = self.one_like();
        let mut acc = self.zero_like();
        for _ in 0..k.unsigned_abs() {
            acc = acc.add(&one);
        }
        if k < 0 {
            acc.neg()
        } else {
            acc
        }
    }

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    /// Rough cost of computing with this element; elimination prefers
    /// cheap pivots.
    fn size_hint(&self) -> usize {
        0
    }

    /// Inverse of a square matrix with entries in this ring.
    fn invert_matrix(m: &LabeledMat<Self>) -> Option<LabeledMat<Self>> {
        gauss_jordan(m)
    }
}

impl Ring for QRat {
    fn zero_like(&self) -> Self {
        QRat::zero()
    }
    fn one_like(&self) -> Self {
        QRat::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn try_inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn int_like(&self, k: i64) -> Self {
        QRat::from_integer(k.into())
    }
}

impl<const N: usize> Ring for RatFun<N>
where
    RatFun<N>: fmt::Display,
{
    fn zero_like(&self) -> Self {
        RatFun::zero()
    }
    fn one_like(&self) -> Self {
        RatFun::one()
    }
    fn is_zero(&self) -> bool {
        RatFun::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        RatFun::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        RatFun::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        RatFun::mul(self, o)
    }
    fn neg(&self) -> Self {
        RatFun::neg(self)
    }
    fn try_inv(&self) -> Option<Self> {
        self.inv()
    }
    fn int_like(&self, k: i64) -> Self {
        RatFun::from_int(k)
    }
    fn is_one(&self) -> bool {
        RatFun::is_one(self)
    }
    fn size_hint(&self) -> usize {
        self.weight()
    }
}

/// Rational functions in `q`, `λ`, `μ` (variables 0, 1, 2).
pub type QqFun = RatFun<3>;

/// Number of variable slots available to [`MRatFun`].
pub const MVARS: usize = 20;

/// Rational functions in named commuting coordinates.
pub type MRatFun = RatFun<MVARS>;

pub const Q_NAMES: [&str; 3] = ["q", "λ", "μ"];

impl fmt::Display for RatFun<3> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(&Q_NAMES, f)
    }
}

impl fmt::Display for RatFun<MVARS> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..MVARS).map(|v| format!("x{v}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        self.fmt_with(&refs, f)
    }
}

/// Constructors for the quantum scalar field.
pub mod qq {
    use super::*;

    pub fn q() -> QqFun {
        QqFun::var(0)
    }

    pub fn lambda() -> QqFun {
        QqFun::var(1)
    }

    pub fn mu() -> QqFun {
        QqFun::var(2)
    }

    /// `q^k`.
    pub fn qpow(k: i32) -> QqFun {
        QqFun::var_pow(0, k)
    }

    pub fn int(k: i64) -> QqFun {
        QqFun::from_int(k)
    }

    /// `q - q^{-1}`.
    pub fn qdiff() -> QqFun {
        qpow(1).sub(&qpow(-1))
    }

    /// `(k)_p = (1 - p^k) / (1 - p)`.
    pub fn qnumber(k: u32, p: &QqFun) -> QqFun {
        let mut acc = QqFun::zero();
        let mut t = QqFun::one();
        for _ in 0..k {
            acc = acc.add(&t);
            t = t.mul(p);
        }
        acc
    }

    /// `(k)_p!`.
    pub fn qfactorial(k: u32, p: &QqFun) -> QqFun {
        (1..=k).fold(QqFun::one(), |acc, j| acc.mul(&qnumber(j, p)))
    }

    /// Substitutes a rational value for `q`.
    pub fn eval_q(f: &QqFun, q: &QRat) -> Option<QqFun> {
        let images = [QqFun::from_rat(q.clone()), lambda(), mu()];
        f.compose(&images)
    }

    /// Expands a function of `q` at `q = 1 + h` to first order.
    pub fn h_expand(f: &QqFun) -> Option<DualNum> {
        if f.vars_mask() & !1 != 0 {
            return None;
        }
        let one = [QRat::one(), QRat::zero(), QRat::zero()];
        let a = f.eval(&one)?;
        let b = f.derivative(0).eval(&one)?;
        Some(DualNum::new(a, b))
    }
}

/// Scalar from any tower, for dynamically typed arithmetic.
#[derive(Clone, Debug, PartialEq)]
pub enum Scalar {
    Rat(QRat),
    Q(QqFun),
    Dual(DualNum),
    Series(TruncSeries),
    Coord(MRatFun),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScalarOp {
    Add,
    Sub,
    Mul,
}

/// Exact arithmetic on two scalars of the same tower.
pub fn scalar_arith(a: &Scalar, b: &Scalar, op: ScalarOp) -> Result<Scalar, RingError> {
    fn go<T: Ring>(x: &T, y: &T, op: ScalarOp) -> T {
        match op {
            ScalarOp::Add => x.add(y),
            ScalarOp::Sub => x.sub(y),
            ScalarOp::Mul => x.mul(y),
        }
    }
    Ok(match (a, b) {
        (Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(go(x, y, op)),
        (Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(go(x, y, op)),
        (Scalar::Dual(x), Scalar::Dual(y)) => Scalar::Dual(go(x, y, op)),
        (Scalar::Coord(x), Scalar::Coord(y)) => Scalar::Coord(go(x, y, op)),
        (Scalar::Series(x), Scalar::Series(y)) => {
            if x.order() != y.order() {
                return Err(RingError::TowerMismatch);
            }
            Scalar::Series(match op {
                ScalarOp::Add => x.add(y),
                ScalarOp::Sub => x.sub(y),
                ScalarOp::Mul => x.mul(y),
            })
        }
        _ => return Err(RingError::TowerMismatch),
    })
}

/// Exact inverse of a scalar.
pub fn scalar_invert(a: &Scalar) -> Result<Scalar, RingError> {
    let r = match a {
        Scalar::Rat(x) => x.try_inv().map(Scalar::Rat),
        Scalar::Q(x) => x.try_inv().map(Scalar::Q),
        Scalar::Dual(x) => x.try_inv().map(Scalar::Dual),
        Scalar::Coord(x) => x.try_inv().map(Scalar::Coord),
        Scalar::Series(x) => x.inv().map(Scalar::Series),
    };
    r.ok_or(RingError::NotInvertible)
}

#[cfg(test)]
mod tests {
    use super::qq::*;
    use super::*;

    #[test]
    fn difference_of_squares() {
        let lhs = qdiff().mul(&q().add(&qpow(-1)));
        assert_eq!(lhs, qpow(2).sub(&qpow(-2)));
    }

    #[test]
    fn h_coefficients() {
        assert_eq!(h_expand(&qdiff()), Some(DualNum::new(QRat::zero(), qrat(2, 1))));
        assert_eq!(h_expand(&qpow(-3)), Some(DualNum::new(QRat::one(), qrat(-3, 1))));
        assert_eq!(h_expand(&lambda()), None);
    }

    #[test]
    fn towers_do_not_mix() {
        let a = Scalar::Q(q());
        let b = Scalar::Rat(QRat::one());
        assert_eq!(scalar_arith(&a, &b, ScalarOp::Add), Err(RingError::TowerMismatch));
        let s = Scalar::Series(TruncSeries::x(QqFun::one(), 3));
        let t = Scalar::Series(TruncSeries::x(QqFun::one(), 4));
        assert_eq!(scalar_arith(&s, &t, ScalarOp::Mul), Err(RingError::TowerMismatch));
    }

    #[test]
    fn invert_reports_nilpotents() {
        let h = Scalar::Dual(DualNum::new(QRat::zero(), QRat::one()));
        assert_eq!(scalar_invert(&h), Err(RingError::NotInvertible));
        let a = Scalar::Q(q().sub(&QqFun::one()));
        let Scalar::Q(inv) = scalar_invert(&a).unwrap() else { panic!() };
        assert_eq!(inv.mul(&q().sub(&QqFun::one())), QqFun::one());
    }
}
