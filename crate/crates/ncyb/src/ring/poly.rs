//! Sparse multivariate polynomials over the rationals.
//!
//! Terms are kept sorted in descending graded-lexicographic order, where a
//! variable with a larger index is the more significant one.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary precision rational number.
pub type QRat = BigRational;

/// Builds a rational `n / d`.
pub fn qrat(n: i64, d: i64) -> QRat {
    QRat::new(BigInt::from(n), BigInt::from(d))
}

/// Exponent vector of a monomial in `N` variables.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Mono<const N: usize>(pub [u16; N]);

impl<const N: usize> Mono<N> {
    pub const ONE: Self = Mono([0; N]);

    pub fn var(v: usize, e: u16) -> Self {
        let mut m = [0; N];
        m[v] = e;
        Mono(m)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut m = self.0;
        for (a, b) in m.iter_mut().zip(o.0.iter()) {
            *a = a.checked_add(*b).expect("monomial exponent overflow");
        }
        Mono(m)
    }

    pub fn divides(&self, o: &Self) -> bool {
        self.0.iter().zip(o.0.iter()).all(|(a, b)| a <= b)
    }

    /// `self / o`; caller guarantees divisibility.
    pub fn div(&self, o: &Self) -> Self {
        let mut m = self.0;
        for (a, b) in m.iter_mut().zip(o.0.iter()) {
            *a -= *b;
        }
        Mono(m)
    }

    pub fn gcd(&self, o: &Self) -> Self {
        let mut m = self.0;
        for (a, b) in m.iter_mut().zip(o.0.iter()) {
            *a = (*a).min(*b);
        }
        Mono(m)
    }
}

impl<const N: usize> Ord for Mono<N> {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree()
            .cmp(&o.degree())
            .then_with(|| self.0.iter().rev().cmp(o.0.iter().rev()))
    }
}

impl<const N: usize> PartialOrd for Mono<N> {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// Polynomial with rational coefficients in `N` variables.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<const N: usize> {
    terms: Vec<(Mono<N>, QRat)>,
}

impl<const N: usize> Default for Poly<N> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<const N: usize> Poly<N> {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(QRat::one())
    }

    pub fn constant(c: QRat) -> Self {
        Self::monomial(Mono::ONE, c)
    }

    pub fn from_int(k: i64) -> Self {
        Self::constant(QRat::from_integer(k.into()))
    }

    pub fn monomial(m: Mono<N>, c: QRat) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    pub fn var(v: usize) -> Self {
        Self::monomial(Mono::var(v, 1), QRat::one())
    }

    /// Builds from arbitrary terms, combining duplicates.
    pub fn from_terms(mut terms: Vec<(Mono<N>, QRat)>) -> Self {
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Mono<N>, QRat)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => {
                    if let Some((_, lc)) = out.last() {
                        if lc.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if let Some((_, lc)) = out.last() {
            if lc.is_zero() {
                out.pop();
            }
        }
        Poly { terms: out }
    }

    pub fn terms(&self) -> &[(Mono<N>, QRat)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Constant term value when the polynomial is constant.
    pub fn as_constant(&self) -> Option<QRat> {
        if self.terms.is_empty() {
            Some(QRat::zero())
        } else if self.is_constant() {
            Some(self.terms[0].1.clone())
        } else {
            None
        }
    }

    pub fn lc(&self) -> &QRat {
        &self.terms[0].1
    }

    pub fn lm(&self) -> Mono<N> {
        self.terms[0].0
    }

    pub fn neg(&self) -> Self {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn scale(&self, c: &QRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Mono<N>, c: &QRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(a, x)| (a.mul(m), x * c)).collect(),
        }
    }

    fn merge(&self, o: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &o.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if negate { -&t.1 } else { t.1.clone() };
            out.push((t.0, c));
        }
        Poly { terms: out }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.merge(o, false)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.merge(o, true)
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if o.terms.len() == 1 {
            return self.mul_term(&o.terms[0].0, &o.terms[0].1);
        }
        if self.terms.len() == 1 {
            return o.mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        let mut prod = Vec::with_capacity(self.terms.len() * o.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                prod.push((ma.mul(mb), ca * cb));
            }
        }
        Self::from_terms(prod)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Componentwise minimum of all exponent vectors.
    pub fn mono_content(&self) -> Mono<N> {
        let mut it = self.terms.iter();
        match it.next() {
            None => Mono::ONE,
            Some((m, _)) => it.fold(*m, |acc, (x, _)| acc.gcd(x)),
        }
    }

    pub fn div_mono(&self, m: &Mono<N>) -> Self {
        if m.is_one() {
            return self.clone();
        }
        Poly {
            terms: self.terms.iter().map(|(a, c)| (a.div(m), c.clone())).collect(),
        }
    }

    pub fn mul_mono(&self, m: &Mono<N>) -> Self {
        if m.is_one() {
            return self.clone();
        }
        Poly {
            terms: self.terms.iter().map(|(a, c)| (a.mul(m), c.clone())).collect(),
        }
    }

    /// Bit set of variables that occur.
    pub fn vars_mask(&self) -> u64 {
        let mut mask = 0u64;
        for (m, _) in &self.terms {
            for (v, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    mask |= 1 << v;
                }
            }
        }
        mask
    }

    pub fn deg_in(&self, v: usize) -> u16 {
        self.terms.iter().map(|(m, _)| m.0[v]).max().unwrap_or(0)
    }

    /// Coefficients with respect to variable `v`, lowest degree first.
    pub fn to_univariate(&self, v: usize) -> Vec<Self> {
        let d = self.deg_in(v) as usize;
        let mut buckets: Vec<Vec<(Mono<N>, QRat)>> = vec![Vec::new(); d + 1];
        for (m, c) in &self.terms {
            let e = m.0[v] as usize;
            let mut mm = *m;
            mm.0[v] = 0;
            buckets[e].push((mm, c.clone()));
        }
        buckets.into_iter().map(Self::from_terms).collect()
    }

    pub fn from_univariate(v: usize, coeffs: &[Self]) -> Self {
        let mut terms = Vec::new();
        for (e, c) in coeffs.iter().enumerate() {
            let shift = Mono::var(v, e as u16);
            for (m, x) in &c.terms {
                terms.push((m.mul(&shift), x.clone()));
            }
        }
        Self::from_terms(terms)
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if d.is_constant() {
            return Some(self.scale(&d.lc().recip()));
        }
        if d.is_monomial() {
            let (dm, dc) = (&d.terms[0].0, &d.terms[0].1);
            if !self.terms.iter().all(|(m, _)| dm.divides(m)) {
                return None;
            }
            let inv = dc.recip();
            return Some(Poly {
                terms: self.terms.iter().map(|(m, c)| (m.div(dm), c * &inv)).collect(),
            });
        }
        let (dm, dc) = (d.lm(), d.lc().clone());
        let mut r = self.clone();
        let mut q = Vec::new();
        while !r.is_zero() {
            let (rm, rc) = (r.lm(), r.lc().clone());
            if !dm.divides(&rm) {
                return None;
            }
            let tm = rm.div(&dm);
            let tc = rc / &dc;
            r = r.sub(&d.mul_term(&tm, &tc));
            q.push((tm, tc));
        }
        Some(Self::from_terms(q))
    }

    /// Scales so the leading coefficient is one.
    pub fn monic(&self) -> Self {
        if self.is_zero() || self.lc().is_one() {
            return self.clone();
        }
        self.scale(&self.lc().recip())
    }

    pub fn eval(&self, point: &[QRat]) -> QRat {
        let mut acc = QRat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t *= num_traits::pow(point[v].clone(), e as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitutes polynomials for every variable.
    pub fn compose(&self, images: &[Self]) -> Self {
        let mut acc = Self::zero();
        for (m, c) in &self.terms {
            let mut t = Self::constant(c.clone());
            for (v, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = t.mul(&images[v].pow(e as u32));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Euler operator `x_v d/dx_v`.
    pub fn euler(&self, v: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.0[v] > 0)
            .map(|(m, c)| (*m, c * QRat::from_integer(BigInt::from(m.0[v]))))
            .collect();
        Poly { terms }
    }

    /// Derivative with respect to variable `v`.
    pub fn derivative(&self, v: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.0[v] > 0)
            .map(|(m, c)| {
                let mut mm = *m;
                mm.0[v] -= 1;
                (mm, c * QRat::from_integer(BigInt::from(m.0[v])))
            })
            .collect();
        Self::from_terms(terms)
    }

    /// Number of bits in the largest coefficient part; a cheap size measure.
    pub fn weight(&self) -> usize {
        self.terms
            .iter()
            .map(|(_, c)| (c.numer().bits() + c.denom().bits()) as usize + 1)
            .sum()
    }

    pub fn fmt_with(&self, names: &[&str], f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let mut factors = Vec::new();
            for (v, &e) in m.0.iter().enumerate() {
                if e == 1 {
                    factors.push(names.get(v).map_or(format!("x{v}"), |s| s.to_string()));
                } else if e > 1 {
                    let nm = names.get(v).map_or(format!("x{v}"), |s| s.to_string());
                    factors.push(format!("{nm}^{e}"));
                }
            }
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write!(f, "{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Monic greatest common divisor.
pub fn gcd<const N: usize>(a: &Poly<N>, b: &Poly<N>) -> Poly<N> {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    let (ma, mb) = (a.mono_content(), b.mono_content());
    let mg = ma.gcd(&mb);
    let g = gcd_primitive_mono(&a.div_mono(&ma), &b.div_mono(&mb));
    g.mul_mono(&mg).monic()
}

/// Gcd of two polynomials without monomial content.
fn gcd_primitive_mono<const N: usize>(a: &Poly<N>, b: &Poly<N>) -> Poly<N> {
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    let (a, b) = (a.monic(), b.monic());
    if a == b {
        return a;
    }
    let (va, vb) = (a.vars_mask(), b.vars_mask());
    if va & !vb != 0 {
        let v = (va & !vb).trailing_zeros() as usize;
        return gcd(&content(&a, v), &b);
    }
    if vb & !va != 0 {
        let v = (vb & !va).trailing_zeros() as usize;
        return gcd(&a, &content(&b, v));
    }
    let mut best = None;
    let mut mask = va;
    while mask != 0 {
        let v = mask.trailing_zeros() as usize;
        mask &= mask - 1;
        let d = a.deg_in(v).max(b.deg_in(v));
        if best.is_none_or(|(_, bd)| d < bd) {
            best = Some((v, d));
        }
    }
    let v = best.expect("non-constant polynomial has a variable").0;
    let (ca, cb) = (content(&a, v), content(&b, v));
    let c = gcd(&ca, &cb);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let g = prs_gcd(&pa, &pb, v);
    c.mul(&g).monic()
}

/// Gcd of the coefficients with respect to `v`.
pub fn content<const N: usize>(a: &Poly<N>, v: usize) -> Poly<N> {
    let mut acc = Poly::zero();
    for c in a.to_univariate(v).into_iter().filter(|c| !c.is_zero()) {
        acc = gcd(&acc, &c);
        if acc.is_constant() {
            return Poly::one();
        }
    }
    acc
}

fn univ_content<const N: usize>(u: &[Poly<N>]) -> Poly<N> {
    let mut acc = Poly::zero();
    for c in u.iter().filter(|c| !c.is_zero()) {
        acc = gcd(&acc, c);
        if acc.is_constant() {
            return Poly::one();
        }
    }
    acc
}

fn univ_primitive<const N: usize>(u: Vec<Poly<N>>) -> Vec<Poly<N>> {
    let c = univ_content(&u);
    let mut out: Vec<Poly<N>> = if c.is_constant() {
        u
    } else {
        u.iter().map(|x| x.div_exact(&c).expect("content divides")).collect()
    };
    // Normalize the numeric scale by the leading coefficient's leading term.
    let s = out.last().map(|l| l.lc().recip()).unwrap_or_else(QRat::one);
    if !s.is_one() {
        out = out.iter().map(|x| x.scale(&s)).collect();
    }
    out
}

fn trim<const N: usize>(u: &mut Vec<Poly<N>>) {
    while u.last().is_some_and(|c| c.is_zero()) {
        u.pop();
    }
}

fn prem<const N: usize>(a: &[Poly<N>], b: &[Poly<N>]) -> Vec<Poly<N>> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    trim(&mut r);
    while !r.is_empty() && r.len() > db {
        let lr = r.last().unwrap().clone();
        let s = r.len() - 1 - db;
        for x in r.iter_mut() {
            *x = x.mul(lb);
        }
        for i in 0..=db {
            r[i + s] = r[i + s].sub(&lr.mul(&b[i]));
        }
        trim(&mut r);
    }
    r
}

fn prs_gcd<const N: usize>(a: &Poly<N>, b: &Poly<N>, v: usize) -> Poly<N> {
    let mut x = univ_primitive(a.to_univariate(v));
    let mut y = univ_primitive(b.to_univariate(v));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    loop {
        let r = prem(&x, &y);
        if r.is_empty() {
            return Poly::from_univariate(v, &y).monic();
        }
        if r.len() == 1 {
            return Poly::one();
        }
        x = y;
        y = univ_primitive(r);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = Poly<3>;

    fn x() -> P {
        P::var(0)
    }
    fn y() -> P {
        P::var(1)
    }
    fn z() -> P {
        P::var(2)
    }

    #[test]
    fn grlex_order() {
        // total degree dominates, then the higher-index variable
        assert!(Mono::<3>::var(0, 2) > Mono::<3>::var(2, 1));
        assert!(Mono::<3>::var(2, 1) > Mono::<3>::var(1, 1));
        assert!(Mono::<3>::var(1, 1) > Mono::<3>::var(0, 1));
    }

    #[test]
    fn univariate_gcd() {
        let a = x().sub(&P::one()).mul(&x().add(&P::from_int(2)));
        let b = x().sub(&P::one()).mul(&x().sub(&P::from_int(3)));
        assert_eq!(gcd(&a, &b), x().sub(&P::one()));
    }

    #[test]
    fn multivariate_gcd() {
        let f = x().mul(&y()).add(&z()).add(&P::one());
        let g1 = x().sub(&y()).mul(&f);
        let g2 = x().mul(&x()).add(&z()).mul(&f).mul(&y());
        assert_eq!(gcd(&g1, &g2), f.monic());
        assert!(gcd(&x().add(&y()), &x().sub(&y())).is_one());
    }

    #[test]
    fn exact_division() {
        let f = x().add(&y()).pow(3);
        let d = x().add(&y());
        assert_eq!(f.div_exact(&d).unwrap(), d.pow(2));
        assert!(f.div_exact(&x().sub(&y())).is_none());
    }
}
