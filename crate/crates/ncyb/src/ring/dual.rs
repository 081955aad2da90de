use std::fmt;

use num_traits::{One, Zero};

use super::{QRat, Ring};

/// `a + b h` with `h² = 0`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DualNum {
    pub a: QRat,
    pub b: QRat,
}

impl DualNum {
    pub fn new(a: QRat, b: QRat) -> Self {
        DualNum { a, b }
    }

    pub fn from_rat(a: QRat) -> Self {
        DualNum { a, b: QRat::zero() }
    }

    /// The nilpotent generator `h`.
    pub fn h() -> Self {
        DualNum {
            a: QRat::zero(),
            b: QRat::one(),
        }
    }

    pub fn classical(&self) -> &QRat {
        &self.a
    }

    pub fn h_part(&self) -> &QRat {
        &self.b
    }
}

impl fmt::Display for DualNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}h", self.a, self.b)
    }
}

impl Ring for DualNum {
    fn zero_like(&self) -> Self {
        DualNum::from_rat(QRat::zero())
    }
    fn one_like(&self) -> Self {
        DualNum::from_rat(QRat::one())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.a) && Zero::is_zero(&self.b)
    }
    fn add(&self, o: &Self) -> Self {
        DualNum::new(&self.a + &o.a, &self.b + &o.b)
    }
    fn sub(&self, o: &Self) -> Self {
        DualNum::new(&self.a - &o.a, &self.b - &o.b)
    }
    fn mul(&self, o: &Self) -> Self {
        DualNum::new(&self.a * &o.a, &self.a * &o.b + &self.b * &o.a)
    }
    fn neg(&self) -> Self {
        DualNum::new(-&self.a, -&self.b)
    }
    fn try_inv(&self) -> Option<Self> {
        if Zero::is_zero(&self.a) {
            return None;
        }
        let ai = self.a.recip();
        let b = -(&self.b * &ai * &ai);
        Some(DualNum::new(ai, b))
    }
    fn int_like(&self, k: i64) -> Self {
        DualNum::from_rat(QRat::from_integer(k.into()))
    }
}
