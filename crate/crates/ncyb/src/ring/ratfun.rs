//! Reduced fractions of multivariate polynomials.

use std::fmt;

use num_traits::{One, Zero};


use super::poly::{gcd, Mono, Poly, QRat};

/// Fraction `num / den` with `gcd(num, den) = 1` and monic `den`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFun<const N: usize> {
    num: Poly<N>,
    den: Poly<N>,
}

impl<const N: usize> Default for RatFun<N> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<const N: usize> RatFun<N> {
    pub fn zero() -> Self {
        RatFun {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn from_int(k: i64) -> Self {
        Self::from_poly(Poly::from_int(k))
    }

    pub fn from_rat(c: QRat) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn from_poly(p: Poly<N>) -> Self {
        RatFun {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn var(v: usize) -> Self {
        Self::from_poly(Poly::var(v))
    }

    /// `x_v^e` for any integer `e`.
    pub fn var_pow(v: usize, e: i32) -> Self {
        let m = Poly::monomial(Mono::var(v, e.unsigned_abs() as u16), QRat::one());
        if e >= 0 {
            Self::from_poly(m)
        } else {
            RatFun {
                num: Poly::one(),
                den: m,
            }
        }
    }

    /// Reduces an arbitrary fraction to canonical form.
    pub fn new(num: Poly<N>, den: Poly<N>) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        Self::scaled(num, den)
    }

    fn scaled(num: Poly<N>, den: Poly<N>) -> Self {
        if den.lc().is_one() {
            RatFun { num, den }
        } else {
            let s = den.lc().recip();
            RatFun {
                num: num.scale(&s),
                den: den.scale(&s),
            }
        }
    }

    pub fn num(&self) -> &Poly<N> {
        &self.num
    }

    pub fn den(&self) -> &Poly<N> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn as_constant(&self) -> Option<QRat> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    /// True when the denominator is a single monomial.
    pub fn is_laurent(&self) -> bool {
        self.den.is_monomial()
    }

    pub fn neg(&self) -> Self {
        RatFun {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.add_signed(o, false)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add_signed(o, true)
    }

    fn add_signed(&self, o: &Self, negate: bool) -> Self {
        let comb = |a: &Poly<N>, b: &Poly<N>| if negate { a.sub(b) } else { a.add(b) };
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { o.neg() } else { o.clone() };
        }
        if self.den == o.den {
            let num = comb(&self.num, &o.num);
            if self.den.is_one() {
                return RatFun {
                    num,
                    den: Poly::one(),
                };
            }
            return Self::new(num, self.den.clone());
        }
        if self.den.is_monomial() && o.den.is_monomial() {
            // both Laurent: bring to the common monomial denominator
            let (ma, mb) = (self.den.lm(), o.den.lm());
            let l = lcm_mono(&ma, &mb);
            let num = comb(&self.num.mul_mono(&l.div(&ma)), &o.num.mul_mono(&l.div(&mb)));
            let den = Poly::monomial(l, QRat::one());
            return Self::new(num, den);
        }
        let g = gcd(&self.den, &o.den);
        let da = self.den.div_exact(&g).expect("gcd divides");
        let db = o.den.div_exact(&g).expect("gcd divides");
        let num = comb(&self.num.mul(&db), &o.num.mul(&da));
        if num.is_zero() {
            return Self::zero();
        }
        let den = da.mul(&o.den);
        let g2 = gcd(&num, &g);
        if g2.is_one() {
            Self::scaled(num, den)
        } else {
            Self::scaled(
                num.div_exact(&g2).expect("gcd divides"),
                den.div_exact(&g2).expect("gcd divides"),
            )
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return RatFun {
                num: self.num.mul(&o.num),
                den: Poly::one(),
            };
        }
        let g1 = gcd(&self.num, &o.den);
        let g2 = gcd(&o.num, &self.den);
        let cut = |p: &Poly<N>, g: &Poly<N>| {
            if g.is_one() {
                p.clone()
            } else {
                p.div_exact(g).expect("gcd divides")
            }
        };
        let num = cut(&self.num, &g1).mul(&cut(&o.num, &g2));
        let den = cut(&self.den, &g2).mul(&cut(&o.den, &g1));
        Self::scaled(num, den)
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::scaled(self.den.clone(), self.num.clone()))
        }
    }

    pub fn div(&self, o: &Self) -> Option<Self> {
        o.inv().map(|i| self.mul(&i))
    }

    pub fn scale(&self, c: &QRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFun {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, e: i32) -> Self {
        let base = if e < 0 {
            self.inv().expect("negative power of zero")
        } else {
            self.clone()
        };
        let k = e.unsigned_abs();
        RatFun {
            num: base.num.pow(k),
            den: base.den.pow(k),
        }
    }

    /// Evaluates at a rational point; `None` when the denominator vanishes.
    pub fn eval(&self, point: &[QRat]) -> Option<QRat> {
        let d = self.den.eval(point);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(point) / d)
        }
    }

    /// Substitutes rational functions for every variable.
    pub fn compose(&self, images: &[RatFun<N>]) -> Option<Self> {
        let ev = |p: &Poly<N>| {
            let mut acc = Self::zero();
            for (m, c) in p.terms() {
                let mut t = Self::from_rat(c.clone());
                for (v, &e) in m.0.iter().enumerate() {
                    if e > 0 {
                        t = t.mul(&images[v].pow(e as i32));
                    }
                }
                acc = acc.add(&t);
            }
            acc
        };
        ev(&self.num).div(&ev(&self.den))
    }

    /// Euler operator `x_v d/dx_v`.
    pub fn euler(&self, v: usize) -> Self {
        if self.den.is_one() {
            return Self::from_poly(self.num.euler(v));
        }
        let n = self.num.euler(v).mul(&self.den).sub(&self.num.mul(&self.den.euler(v)));
        Self::new(n, self.den.mul(&self.den))
    }

    /// Partial derivative with respect to `v`.
    pub fn derivative(&self, v: usize) -> Self {
        let n = self
            .num
            .derivative(v)
            .mul(&self.den)
            .sub(&self.num.mul(&self.den.derivative(v)));
        Self::new(n, self.den.mul(&self.den))
    }

    pub fn vars_mask(&self) -> u64 {
        self.num.vars_mask() | self.den.vars_mask()
    }

    pub fn weight(&self) -> usize {
        self.num.weight() + self.den.weight()
    }

    pub fn fmt_with(&self, names: &[&str], f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |p: &Poly<N>| p.len() > 1;
        if self.den.is_one() {
            return self.num.fmt_with(names, f);
        }
        if wrap(&self.num) {
            write!(f, "(")?;
            self.num.fmt_with(names, f)?;
            write!(f, ")")?;
        } else {
            self.num.fmt_with(names, f)?;
        }
        write!(f, "/")?;
        let den = Self::from_poly(self.den.clone()).render(names);
        if wrap(&self.den) || !self.den.lc().is_one() || den.contains('*') {
            write!(f, "({den})")
        } else {
            write!(f, "{den}")
        }
    }

    /// Renders with the given variable names.
    pub fn render(&self, names: &[&str]) -> String {
        struct Show<'a, const M: usize>(&'a RatFun<M>, &'a [&'a str]);
        impl<const M: usize> fmt::Display for Show<'_, M> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.fmt_with(self.1, f)
            }
        }
        Show(self, names).to_string()
    }
}

fn lcm_mono<const N: usize>(a: &Mono<N>, b: &Mono<N>) -> Mono<N> {
    let mut m = a.0;
    for (x, y) in m.iter_mut().zip(b.0.iter()) {
        *x = (*x).max(*y);
    }
    Mono(m)
}
