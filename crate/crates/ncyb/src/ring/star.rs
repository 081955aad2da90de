use std::fmt;

use super::{MRatFun, QRat, Ring};

/// Number of conjugate `(x, k)` variable pairs: `x_a` is variable `2a` and
/// `k_a` is variable `2a + 1`. Variables from `2 * STAR_PAIRS` on are central.
pub const STAR_PAIRS: usize = 8;

/// Element `c0 + h c1` of the quantum torus `k_a x_b = q^{δ_ab} x_b k_a`
/// at `q = 1 + h`, written through normal-ordered symbols.
///
/// The product is `f ⋆ g = fg + h Σ_a (k_a ∂_{k_a} f)(x_a ∂_{x_a} g)` modulo `h²`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct StarDual {
    pub c0: MRatFun,
    pub c1: MRatFun,
}

impl StarDual {
    pub fn new(c0: MRatFun, c1: MRatFun) -> Self {
        StarDual { c0, c1 }
    }

    pub fn classical(c0: MRatFun) -> Self {
        StarDual {
            c0,
            c1: MRatFun::zero(),
        }
    }

    pub fn x_var(a: usize) -> usize {
        2 * a
    }

    pub fn k_var(a: usize) -> usize {
        2 * a + 1
    }

    /// First-order cocycle `Σ_a (k_a ∂_{k_a} f)(x_a ∂_{x_a} g)`.
    pub fn cocycle(f: &MRatFun, g: &MRatFun) -> MRatFun {
        let (mf, mg) = (f.vars_mask(), g.vars_mask());
        let mut acc = MRatFun::zero();
        for a in 0..STAR_PAIRS {
            let (x, k) = (Self::x_var(a), Self::k_var(a));
            if mf & (1 << k) == 0 || mg & (1 << x) == 0 {
                continue;
            }
            acc = acc.add(&f.euler(k).mul(&g.euler(x)));
        }
        acc
    }

    /// Classical bracket `(B(f,g) − B(g,f)) / 2` induced by the commutator.
    pub fn poisson(f: &MRatFun, g: &MRatFun) -> MRatFun {
        let half = super::qrat(1, 2);
        Self::cocycle(f, g).sub(&Self::cocycle(g, f)).scale(&half)
    }
}

impl fmt::Display for StarDual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + h({})", self.c0, self.c1)
    }
}

impl Ring for StarDual {
    fn zero_like(&self) -> Self {
        StarDual::classical(MRatFun::zero())
    }
    fn one_like(&self) -> Self {
        StarDual::classical(MRatFun::one())
    }
    fn is_zero(&self) -> bool {
        self.c0.is_zero() && self.c1.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        StarDual::new(self.c0.add(&o.c0), self.c1.add(&o.c1))
    }
    fn sub(&self, o: &Self) -> Self {
        StarDual::new(self.c0.sub(&o.c0), self.c1.sub(&o.c1))
    }
    fn mul(&self, o: &Self) -> Self {
        let c0 = self.c0.mul(&o.c0);
        let c1 = self
            .c0
            .mul(&o.c1)
            .add(&self.c1.mul(&o.c0))
            .add(&Self::cocycle(&self.c0, &o.c0));
        StarDual::new(c0, c1)
    }
    fn neg(&self) -> Self {
        StarDual::new(self.c0.neg(), self.c1.neg())
    }
    fn try_inv(&self) -> Option<Self> {
        let b0 = self.c0.inv()?;
        let t = self.c1.mul(&b0).add(&Self::cocycle(&self.c0, &b0));
        Some(StarDual::new(b0.clone(), t.mul(&b0).neg()))
    }
    fn int_like(&self, k: i64) -> Self {
        StarDual::classical(MRatFun::from_int(k))
    }
    fn size_hint(&self) -> usize {
        self.c0.weight() + self.c1.weight()
    }
}


/// Image of a [`StarDual`] element at a rational point: the value of the
/// classical part, its Euler derivatives in every torus variable, and the
/// value of the first-order part.
///
/// The star product only differentiates classical parts, so evaluation at
/// a point is a ring homomorphism onto these jets.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct StarJet {
    pub c0: QRat,
    pub grad: Vec<QRat>,
    pub c1: QRat,
}

impl StarJet {
    fn constant(c: QRat) -> Self {
        StarJet {
            c0: c,
            grad: vec![QRat::from_integer(0.into()); 2 * STAR_PAIRS],
            c1: QRat::from_integer(0.into()),
        }
    }

    /// Evaluates `f` at `point`; `None` at a pole.
    pub fn at(f: &StarDual, point: &[QRat]) -> Option<Self> {
        let grad = (0..2 * STAR_PAIRS)
            .map(|v| {
                if f.c0.vars_mask() & (1 << v) == 0 {
                    Some(QRat::from_integer(0.into()))
                } else {
                    f.c0.euler(v).eval(point)
                }
            })
            .collect::<Option<Vec<_>>>()?;
        Some(StarJet {
            c0: f.c0.eval(point)?,
            grad,
            c1: f.c1.eval(point)?,
        })
    }

    fn cocycle(&self, o: &Self) -> QRat {
        (0..STAR_PAIRS).fold(QRat::from_integer(0.into()), |acc, a| {
            acc + &self.grad[StarDual::k_var(a)] * &o.grad[StarDual::x_var(a)]
        })
    }
}

impl fmt::Display for StarJet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + h({})", self.c0, self.c1)
    }
}

impl Ring for StarJet {
    fn zero_like(&self) -> Self {
        Self::constant(QRat::from_integer(0.into()))
    }
    fn one_like(&self) -> Self {
        Self::constant(QRat::from_integer(1.into()))
    }
    fn is_zero(&self) -> bool {
        *self == self.zero_like()
    }
    fn add(&self, o: &Self) -> Self {
        StarJet {
            c0: &self.c0 + &o.c0,
            grad: self.grad.iter().zip(&o.grad).map(|(a, b)| a + b).collect(),
            c1: &self.c1 + &o.c1,
        }
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        StarJet {
            c0: &self.c0 * &o.c0,
            grad: self.grad.iter().zip(&o.grad).map(|(a, b)| a * &o.c0 + &self.c0 * b).collect(),
            c1: &self.c0 * &o.c1 + &self.c1 * &o.c0 + self.cocycle(o),
        }
    }
    fn neg(&self) -> Self {
        StarJet {
            c0: -&self.c0,
            grad: self.grad.iter().map(|a| -a).collect(),
            c1: -&self.c1,
        }
    }
    fn try_inv(&self) -> Option<Self> {
        if self.c0 == QRat::from_integer(0.into()) {
            return None;
        }
        let b0 = self.c0.recip();
        let b2 = &b0 * &b0;
        let mut b = StarJet {
            c0: b0.clone(),
            grad: self.grad.iter().map(|a| -(a * &b2)).collect(),
            c1: QRat::from_integer(0.into()),
        };
        b.c1 = -((&self.c1 * &b0 + self.cocycle(&b)) * &b0);
        Some(b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(i: usize) -> StarDual {
        StarDual::classical(MRatFun::var(i))
    }

    #[test]
    fn torus_commutation() {
        // k x = q x k with q = 1 + h
        let (x, k) = (v(StarDual::x_var(0)), v(StarDual::k_var(0)));
        let lhs = k.mul(&x);
        let xk = x.mul(&k);
        let rhs = xk.add(&StarDual::new(MRatFun::zero(), xk.c0.clone()));
        assert_eq!(lhs, rhs);
        // different pairs commute
        let y = v(StarDual::x_var(1));
        assert_eq!(k.mul(&y), y.mul(&k));
    }

    #[test]
    fn inverse_is_two_sided() {
        let (x, k) = (v(StarDual::x_var(0)), v(StarDual::k_var(0)));
        let a = x.mul(&k).add(&k).add(&k.one_like());
        let ai = a.try_inv().unwrap();
        assert!(a.mul(&ai).is_one());
        assert!(ai.mul(&a).is_one());
    }

    #[test]
    fn jets_follow_star_products() {
        let (x, k) = (v(StarDual::x_var(0)), v(StarDual::k_var(0)));
        let a = x.mul(&k).add(&k).add(&k.one_like());
        let b = k.mul(&x).sub(&x.mul(&x));
        let p: Vec<QRat> = (0..2 * STAR_PAIRS).map(|i| QRat::new((i as i64 + 2).into(), 3.into())).collect();
        let j = |f: &StarDual| StarJet::at(f, &p).unwrap();
        assert_eq!(j(&a.mul(&b)), j(&a).mul(&j(&b)));
        assert_eq!(j(&a.try_inv().unwrap()), j(&a).try_inv().unwrap());
    }
}
